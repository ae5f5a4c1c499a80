#pragma once

#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "graded.hpp"
#include "rational.hpp"
#include "spaces.hpp"

namespace swcalc {

namespace detail {

/// Value of a top-degree monomial against the fundamental class.
/// The caller guarantees m.degree() == s.dim().
inline Rational monomial_weight(const AmbientSpace& s, const Monomial& m) {
    switch (s.kind()) {
    case AmbientSpace::Kind::projective:
        // h^a evaluates to 1.
        return Rational(1);
    case AmbientSpace::Kind::symmetric_product: {
        // theta^k x^(d-k) = g!/(g-k)!, zero once k exceeds g.
        const long g = s.genus();
        const long k = m.exponent("theta");
        if (k > g)
            return Rational(0);
        return Rational(factorial(g) / factorial(g - k));
    }
    case AmbientSpace::Kind::jacobian: {
        const long g = s.genus();
        if (m.exponent("theta") != g)
            return Rational(0);
        return Rational(factorial(g));
    }
    case AmbientSpace::Kind::product: {
        // The value factorizes and vanishes unless each factor receives
        // exactly its top degree.
        const auto [m1, m2] = split_product_monomial(m);
        if (m1.degree() != s.left().dim() || m2.degree() != s.right().dim())
            return Rational(0);
        return monomial_weight(s.left(), m1) * monomial_weight(s.right(), m2);
    }
    }
    return Rational(0);
}

} // namespace detail

/// Integration against the fundamental class: the sum over top-degree
/// monomials of coefficient times monomial value. Lower-degree terms
/// contribute nothing.
inline Rational integrate(const GradedElement& u) {
    const AmbientSpace& s = u.space();
    const long top = s.dim();
    Rational total = 0;
    for (const auto& [m, c] : u.terms())
        if (m.degree() == top)
            total += c * detail::monomial_weight(s, m);
    return total;
}

inline Rational integrate(const GradedElement& u, const AmbientSpace& space) {
    if (u.space() != space)
        throw incompatible_spaces("integrate: element over " + u.space().str() +
                                  ", space is " + space.str());
    return integrate(u);
}

/// p_i^*: lifts a class from factor `index` (1 or 2) of a product space by
/// prefixing its generators.
inline GradedElement pullback(const AmbientSpace& prod, int index, const GradedElement& u) {
    if (prod.kind() != AmbientSpace::Kind::product)
        throw argument_error("pullback: target is not a product space");
    if (index != 1 && index != 2)
        throw argument_error("pullback: factor index must be 1 or 2");
    const AmbientSpace& factor = index == 1 ? prod.left() : prod.right();
    if (u.space() != factor)
        throw incompatible_spaces("pullback: element over " + u.space().str() +
                                  ", factor is " + factor.str());
    const std::string prefix = index == 1 ? "p1." : "p2.";
    GradedElement lifted = GradedElement::zero(prod);
    for (const auto& [m, c] : u.terms()) {
        Monomial pm;
        for (const auto& [name, e] : m.exponents())
            pm = pm.times(Monomial::power(prefix + name, e));
        lifted += GradedElement::from_term(prod, pm, c);
    }
    return lifted;
}

/// A rank together with a total Chern class (constant term exactly 1).
/// K-theory classes coming out of pi_! are carried by their total Chern
/// class alone; the rank is bookkeeping for the operations whose formulas
/// need it.
class BundleClass {
public:
    BundleClass(long rank, GradedElement total_chern)
        : rank_(rank), total_chern_(std::move(total_chern)) {
        if (rank_ < 0)
            throw rank_error("BundleClass: negative rank");
        if (total_chern_.constant_term() != 1)
            throw domain_error("BundleClass: total Chern class must have constant term 1");
    }

    long rank() const noexcept { return rank_; }
    const GradedElement& total_chern() const noexcept { return total_chern_; }

    /// c_k as a homogeneous class (zero above the truncation).
    GradedElement chern(long k) const {
        if (k < 0 || k > total_chern_.truncation())
            return GradedElement::zero(total_chern_.space());
        return degree_part(total_chern_, k);
    }

private:
    long rank_;
    GradedElement total_chern_;
};

/// c(T_{C_d}) = (1+x)^(d+1-g) * exp(-theta/(1+x)) on the symmetric product,
/// rank d.
inline BundleClass tangent_chern(const AmbientSpace& space) {
    if (space.kind() != AmbientSpace::Kind::symmetric_product)
        throw argument_error("tangent_chern: space must be a symmetric product");
    const long g = space.genus();
    const long d = space.sym_degree();
    const GradedElement one = GradedElement::one(space);
    const GradedElement x = GradedElement::generator(space, "x");
    const GradedElement theta = GradedElement::generator(space, "theta");
    const GradedElement c = pow_int(one + x, d + 1 - g) * exp(-(theta * inverse(one + x)));
    return BundleClass(d, c);
}

/// c(E) = c(T_{C_d})^{-1} = (1+x)^(g-1-d) * exp(theta/(1+x)): the Chern class
/// of E = R^1 psi_2_* O(I), of rank g-d.
inline BundleClass dual_obstruction_chern(const AmbientSpace& space) {
    if (space.kind() != AmbientSpace::Kind::symmetric_product)
        throw argument_error("dual_obstruction_chern: space must be a symmetric product");
    const long g = space.genus();
    const long d = space.sym_degree();
    if (g < d)
        throw rank_error("dual_obstruction_chern: rank g-d would be negative (g=" +
                         std::to_string(g) + ", d=" + std::to_string(d) + ")");
    return BundleClass(g - d, inverse(tangent_chern(space).total_chern()));
}

/// Chern classes of E (x) L for a line bundle with first Chern class lineC1,
/// by the splitting principle:
///   c_k(E(x)L) = sum_i binom(rank-i, k-i) lineC1^(k-i) c_i(E).
inline BundleClass tensor_line(const BundleClass& e, const GradedElement& line_c1) {
    if (!line_c1.is_homogeneous(1))
        throw argument_error("tensor_line: lineC1 must be homogeneous of degree 1");
    const AmbientSpace& space = line_c1.space();
    if (e.total_chern().space() != space)
        throw incompatible_spaces("tensor_line: bundle and line class over different spaces");
    const long trunc = line_c1.truncation();
    const long r = e.rank();

    std::vector<GradedElement> line_pow;
    line_pow.push_back(GradedElement::one(space));
    for (long p = 1; p <= trunc; ++p)
        line_pow.push_back(line_pow.back() * line_c1);

    GradedElement total = GradedElement::zero(space);
    for (long k = 0; k <= trunc; ++k)
        for (long i = 0; i <= k; ++i) {
            const GradedElement ci = e.chern(i);
            if (ci.is_zero() || line_pow[k - i].is_zero())
                continue;
            total += binom(Integer(r - i), k - i) * (line_pow[k - i] * ci);
        }
    return BundleClass(r, total);
}

/// The pairing of Euler class and mu-powers over a smooth moduli space:
///   integrate( [c(pi_!)^{-1} c(T)]_n * mu^d_exp )
/// where n is the obstruction rank and n + d_exp matches the dimension.
inline Rational obstruction_euler_times_mu(const GradedElement& pushforward_chern,
                                           const GradedElement& tangent_chern,
                                           long n,
                                           const GradedElement& mu,
                                           long d_exp,
                                           const AmbientSpace& space) {
    if (pushforward_chern.space() != space || tangent_chern.space() != space || mu.space() != space)
        throw incompatible_spaces("obstruction_euler_times_mu: operand over wrong space");
    if (n < 0 || d_exp < 0 || n + d_exp != space.dim())
        throw argument_error("obstruction_euler_times_mu: need n + d_exp == dim, got " +
                             std::to_string(n) + " + " + std::to_string(d_exp) + " != " +
                             std::to_string(space.dim()));
    if (d_exp > 0 && !mu.is_homogeneous(1))
        throw argument_error("obstruction_euler_times_mu: mu must be homogeneous of degree 1");
    const GradedElement euler = degree_part(inverse(pushforward_chern) * tangent_chern, n);
    return integrate(euler * pow_int(mu, d_exp), space);
}

} // namespace swcalc
