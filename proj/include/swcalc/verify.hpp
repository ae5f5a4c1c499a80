#pragma once

#include <random>
#include <string>
#include <vector>

#include "bundles.hpp"
#include "errors.hpp"
#include "graded.hpp"
#include "kunneth.hpp"
#include "rational.hpp"
#include "spaces.hpp"
#include "sw.hpp"

namespace swcalc {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

namespace detail {

inline void report(std::vector<CheckResult>& out, const std::string& name, bool pass,
                   const std::string& detail) {
    out.push_back({name, pass, detail});
}

/// Deterministic generator of small random elements for the ring laws.
class RandomElements {
public:
    explicit RandomElements(unsigned seed) : rng_(seed) {}

    AmbientSpace space() {
        switch (rng_() % 4) {
        case 0: return AmbientSpace::projective(1 + long(rng_() % 5));
        case 1: return AmbientSpace::symmetric_product(long(rng_() % 5), 1 + long(rng_() % 5));
        case 2: return AmbientSpace::jacobian(1 + long(rng_() % 5));
        default:
            return AmbientSpace::product(AmbientSpace::projective(1 + long(rng_() % 2)),
                                         AmbientSpace::symmetric_product(long(rng_() % 4), 1 + long(rng_() % 3)));
        }
    }

    Rational coefficient() {
        long num = long(rng_() % 19) - 9;
        long den = 1 + long(rng_() % 9);
        return make_rational(num, den);
    }

    GradedElement element(const AmbientSpace& s) {
        GradedElement u = GradedElement::zero(s);
        const auto& gens = s.generators();
        const int terms = 1 + int(rng_() % 4);
        for (int t = 0; t < terms; ++t) {
            Monomial m;
            long degree_budget = s.dim();
            const int factors = int(rng_() % 3);
            for (int f = 0; f < factors && degree_budget > 0; ++f) {
                const auto& g = gens[rng_() % gens.size()];
                const long e = 1 + long(rng_() % degree_budget);
                m = m.times(Monomial::power(g, e));
                degree_budget -= e;
            }
            u += GradedElement::from_term(s, m, coefficient());
        }
        return u;
    }

    GradedElement unit(const AmbientSpace& s) {
        GradedElement u = element(s);
        Rational c = u.constant_term();
        if (c == 0)
            u += GradedElement::one(s);
        return u;
    }

    GradedElement augmentation(const AmbientSpace& s) {
        GradedElement u = element(s);
        return u - GradedElement::constant(s, u.constant_term());
    }

    long int_in(long lo, long hi) { return lo + long(rng_() % (hi - lo + 1)); }

private:
    std::mt19937 rng_;
};

} // namespace detail

/// Randomized ring laws: associativity, distributivity/commutativity,
/// unit-inverse, exp additivity, and the binomial-theorem bridge. Exact
/// structural equality throughout.
inline std::vector<CheckResult> verify_ring(int cases = 1000) {
    std::vector<CheckResult> out;
    detail::RandomElements gen(0x5eed);

    bool assoc = true, distr = true, unit_inv = true, exp_add = true, binom_bridge = true;
    for (int i = 0; i < cases; ++i) {
        const AmbientSpace s = gen.space();
        const GradedElement u = gen.element(s), v = gen.element(s), w = gen.element(s);
        if ((u + v) + w != u + (v + w) || (u * v) * w != u * (v * w))
            assoc = false;
        if (u * v != v * u || u * (v + w) != u * v + u * w)
            distr = false;

        const GradedElement unit = gen.unit(s);
        if (unit * inverse(unit) != GradedElement::one(s))
            unit_inv = false;

        const GradedElement a = gen.augmentation(s), b = gen.augmentation(s);
        if (exp(a) * exp(b) != exp(a + b))
            exp_add = false;

        const AmbientSpace line = AmbientSpace::projective(gen.int_in(1, 6));
        const long n = gen.int_in(-12, 12);
        const GradedElement p =
            pow_int(GradedElement::one(line) + GradedElement::generator(line, "h"), n);
        for (long m = 0; m <= line.dim(); ++m)
            if (p.coefficient(Monomial::power("h", m)) != binom(n, m))
                binom_bridge = false;
    }
    const std::string detail_txt = std::to_string(cases) + " randomized cases";
    detail::report(out, "ring.associativity", assoc, detail_txt);
    detail::report(out, "ring.distributivity", distr, detail_txt);
    detail::report(out, "ring.unit-inverse", unit_inv, detail_txt);
    detail::report(out, "ring.exp-additivity", exp_add, detail_txt);
    detail::report(out, "ring.binomial-bridge", binom_bridge, detail_txt);

    bool negation = true;
    for (long n = 1; n <= 10; ++n)
        for (long m = 0; m <= 10; ++m) {
            Rational lhs = binom(-n, m);
            Rational rhs = binom(n + m - 1, m);
            if (m % 2 != 0)
                rhs = -rhs;
            if (lhs != rhs)
                negation = false;
        }
    detail::report(out, "ring.binom-negation-identity", negation, "1 <= n <= 10, 0 <= m <= 10");
    return out;
}

/// The combinatorial identity behind the top-degree extraction:
///   sum_{k=0}^{a} binom(a+j+e, a-k) binom(-j, k) = binom(a+e, a)
/// checked by direct summation, in both its signed forms.
inline std::vector<CheckResult> verify_lemma45() {
    std::vector<CheckResult> out;
    bool pass = true;
    long checked = 0;
    for (long a = 0; a <= 8; ++a)
        for (long j = 0; j <= 8; ++j)
            for (long e = -a; e <= 8; ++e) {
                Rational sum = 0, sum_signed = 0;
                for (long k = 0; k <= a; ++k) {
                    sum += binom(a + j + e, a - k) * binom(-j, k);
                    Rational t = binom(a + j + e, a - k) * binom(j + k - 1, k);
                    sum_signed += (k % 2 == 0) ? t : -t;
                }
                if (sum != binom(a + e, a) || sum_signed != binom(a + e, a))
                    pass = false;
                ++checked;
            }
    detail::report(out, "lemma45.coefficient-identity", pass, std::to_string(checked) + " (a,j,e) triples");
    return out;
}

/// Full GRR pipeline: chern_from_character(grr_pushforward(chi, n, C_d))
/// equals (1+x)^chi for every chi <= 6, d <= 6, g <= 6, independent of the
/// fiber degree n and of the Todd coefficient r.
inline std::vector<CheckResult> verify_grr() {
    std::vector<CheckResult> out;
    bool pass = true, independent = true;
    long checked = 0;
    const long ns[] = {0, 1, 7};
    const Rational rs[] = {Rational(0), make_rational(5, 7), Rational(-3)};
    for (long chi = 0; chi <= 6; ++chi)
        for (long g = 0; g <= 6; ++g)
            for (long d = 0; d <= 6; ++d) {
                const AmbientSpace cd = AmbientSpace::symmetric_product(g, d);
                const GradedElement expected =
                    pow_int(GradedElement::one(cd) + GradedElement::generator(cd, "x"), chi);
                GradedElement first = GradedElement::zero(cd);
                bool have_first = false;
                for (long n : ns)
                    for (const Rational& r : rs) {
                        const GradedElement c = chern_from_character(grr_pushforward(chi, n, cd, r));
                        if (c != expected)
                            pass = false;
                        if (!have_first) {
                            first = c;
                            have_first = true;
                        } else if (c != first) {
                            independent = false;
                        }
                        ++checked;
                    }
            }
    detail::report(out, "grr.pipeline-equals-binomial", pass, std::to_string(checked) + " (chi,g,d,n,r) tuples");
    detail::report(out, "grr.n-and-r-independence", independent, "n in {0,1,7}, r in {0, 5/7, -3}");
    return out;
}

/// Elliptic-surface sweeps: the multiplicity formula over C_d, the regular
/// special case over P^a, and their consistency at g = 0.
inline std::vector<CheckResult> verify_elliptic() {
    std::vector<CheckResult> out;

    bool prop_general = true;
    long checked = 0;
    for (long chi = 1; chi <= 5; ++chi)
        for (long g = 0; g <= 5; ++g)
            for (long d = 0; d <= 8; ++d) {
                try {
                    sw_elliptic({chi, g, d});
                } catch (const verification_error&) {
                    prop_general = false;
                }
                ++checked;
            }
    detail::report(out, "elliptic.multiplicity-sweep", prop_general, std::to_string(checked) + " (chi,g,d) cases");

    bool prop_regular = true;
    checked = 0;
    for (long pg = 0; pg <= 8; ++pg)
        for (long a = 0; a <= 10; ++a) {
            try {
                sw_elliptic_regular(pg, a);
            } catch (const verification_error&) {
                prop_regular = false;
            }
            ++checked;
        }
    detail::report(out, "elliptic.regular-sweep", prop_regular, std::to_string(checked) + " (p_g,a) cases");

    bool consistent = true;
    for (long chi = 1; chi <= 6; ++chi)
        for (long d = 0; d <= 6; ++d)
            if (sw_elliptic({chi, 0, d}).value != sw_elliptic_regular(chi - 1, d).value)
                consistent = false;
    detail::report(out, "elliptic.g0-matches-regular", consistent, "chi <= 6, d <= 6");
    return out;
}

/// Product ruled surface sweeps: b = 1 values, the 2^g component totals for
/// b = 2, and Castelnuovo's count in its two closed forms.
inline std::vector<CheckResult> verify_ruled() {
    std::vector<CheckResult> out;

    bool b1 = true;
    for (long g = 1; g <= 6; ++g)
        for (long d = 0; d <= 6; ++d)
            if (sw_ruled_b1(g, d).value != 1)
                b1 = false;
    detail::report(out, "ruled.b1-sweep", b1, "1 <= g <= 6, 0 <= d <= 6");

    bool totals = true;
    long checked = 0;
    for (long d = 1; d <= 5; ++d)
        for (long g : {2 * d + 1, 2 * d, 2 * d - 1, 2 * d - 2}) {
            if (g < 2)
                continue;
            try {
                const SWResult r = sw_ruled_b2_total(g, d);
                if (r.value != Rational(ipow(Integer(2), g)))
                    totals = false;
            } catch (const error&) {
                totals = false;
            }
            ++checked;
        }
    detail::report(out, "ruled.b2-totals", totals, std::to_string(checked) + " (g,d) cases, all equal to 2^g");

    bool documented = true;
    {
        const SWResult r = sw_ruled_b2_total(4, 3);
        documented = r.m0 == Rational(14) && r.m1 == Rational(2) && r.value == 16;
    }
    detail::report(out, "ruled.b2-breakdown-g4-d3", documented, "M0 = 14, M1 = 2, total 16");

    bool castelnuovo = true;
    for (long d = 2; d <= 8; ++d) {
        try {
            castelnuovo_count(2 * d - 2, d);
        } catch (const verification_error&) {
            castelnuovo = false;
        }
    }
    if (castelnuovo_count(4, 3) != 2 || castelnuovo_count(6, 4) != 5)
        castelnuovo = false;
    detail::report(out, "ruled.castelnuovo-two-forms", castelnuovo, "2 <= d <= 8; pinned values at (4,3), (6,4)");
    return out;
}

/// Segre-class route: the degree-g term of e^{2theta} integrates to 2^g,
/// the class of W_{1,d} matches (2theta)^(2g-2d-1)/(2g-2d-1)!, and the
/// zero-dimensional case agrees with the component sums where those exist.
inline std::vector<CheckResult> verify_segre() {
    std::vector<CheckResult> out;

    bool section = true;
    for (long g = 2; g <= 12; ++g)
        if (sw_section_invariant(g).value != Rational(ipow(Integer(2), g)))
            section = false;
    detail::report(out, "segre.section-invariant", section, "2 <= g <= 12, value 2^g");

    bool classes = true;
    long checked = 0;
    for (long g = 1; g <= 8; ++g)
        for (long d = 0; 2 * g - 2 * d - 1 >= 0; ++d) {
            try {
                segre_w1d(g, d);
            } catch (const verification_error&) {
                classes = false;
            }
            ++checked;
        }
    detail::report(out, "segre.w1d-class-sweep", classes, std::to_string(checked) + " (g,d) pairs, g <= 8");

    bool cross = true;
    for (long d = 1; d <= 5; ++d) {
        const long g = 2 * d + 1; // zero-dimensional case reachable by both routes
        if (g < 2)
            continue;
        if (sw_section_invariant(g).value != sw_ruled_b2_total(g, d).value)
            cross = false;
    }
    detail::report(out, "segre.matches-component-sums", cross, "g = 2d+1, d <= 5");
    return out;
}

inline std::vector<CheckResult> verify_suite(const std::string& suite) {
    std::vector<CheckResult> out;
    auto append = [&](std::vector<CheckResult> v) {
        for (auto& c : v)
            out.push_back(std::move(c));
    };
    if (suite == "ring")
        append(verify_ring());
    else if (suite == "lemma45")
        append(verify_lemma45());
    else if (suite == "grr")
        append(verify_grr());
    else if (suite == "elliptic")
        append(verify_elliptic());
    else if (suite == "ruled")
        append(verify_ruled());
    else if (suite == "segre")
        append(verify_segre());
    else if (suite == "all") {
        append(verify_ring());
        append(verify_lemma45());
        append(verify_grr());
        append(verify_elliptic());
        append(verify_ruled());
        append(verify_segre());
    } else {
        throw invalid_spec("unknown suite '" + suite +
                           "' (expected ring, lemma45, grr, elliptic, ruled, segre, or all)");
    }
    return out;
}

} // namespace swcalc
