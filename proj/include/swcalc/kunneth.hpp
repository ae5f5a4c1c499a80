#pragma once

#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "graded.hpp"
#include "rational.hpp"
#include "spaces.hpp"

namespace swcalc {

/// Element of the model ring of C x C_d in the three-slot basis
///
///   1 (x) Q   +   [pt] (x) Q'   +   delta^{1,1} * (1 (x) Q'')
///
/// with Q, Q', Q'' classes on C_d. [pt] and delta^{1,1} each contribute
/// complex degree 1. The multiplication table is closed:
///
///   ([pt](x)Q) * ([pt](x)Q')             = 0
///   delta^{1,1} * ([pt](x)Q)             = 0
///   (delta^{1,1}(1(x)R)) * (delta^{1,1}(1(x)R')) = -2 [pt] (x) (theta R R')
///
/// and everything else distributes componentwise. delta^{1,1} is a sum of
/// products of odd classes, but only its square is ever used, so it is
/// modeled as a single commuting slot carrying the -2 theta rule.
class KunnethElement {
public:
    explicit KunnethElement(const AmbientSpace& cd)
        : one_(GradedElement::zero(cd)), pt_(GradedElement::zero(cd)), delta_(GradedElement::zero(cd)) {
        if (cd.kind() != AmbientSpace::Kind::symmetric_product)
            throw argument_error("KunnethElement: base must be a symmetric product");
    }

    static KunnethElement from_slots(GradedElement one, GradedElement pt, GradedElement delta) {
        KunnethElement k(one.space());
        if (pt.space() != one.space() || delta.space() != one.space())
            throw incompatible_spaces("KunnethElement: slots over different spaces");
        k.one_ = std::move(one);
        k.pt_ = std::move(pt);
        k.delta_ = std::move(delta);
        return k;
    }

    static KunnethElement unit(const AmbientSpace& cd) {
        KunnethElement k(cd);
        k.one_ = GradedElement::one(cd);
        return k;
    }

    const AmbientSpace& base() const noexcept { return one_.space(); }
    const GradedElement& slot_one() const noexcept { return one_; }
    const GradedElement& slot_pt() const noexcept { return pt_; }
    const GradedElement& slot_delta() const noexcept { return delta_; }

    bool is_zero() const { return one_.is_zero() && pt_.is_zero() && delta_.is_zero(); }

    KunnethElement operator+(const KunnethElement& o) const {
        require_base(o);
        return from_slots(one_ + o.one_, pt_ + o.pt_, delta_ + o.delta_);
    }

    KunnethElement scaled(const Rational& c) const {
        return from_slots(one_.scaled(c), pt_.scaled(c), delta_.scaled(c));
    }

    /// Product under the relation table.
    KunnethElement operator*(const KunnethElement& o) const {
        require_base(o);
        const GradedElement theta = GradedElement::generator(base(), "theta");
        GradedElement one = one_ * o.one_;
        GradedElement pt = one_ * o.pt_ + pt_ * o.one_ - (theta * delta_ * o.delta_).scaled(Rational(2));
        GradedElement delta = one_ * o.delta_ + delta_ * o.one_;
        return from_slots(std::move(one), std::move(pt), std::move(delta));
    }

    bool operator==(const KunnethElement& o) const {
        return one_ == o.one_ && pt_ == o.pt_ && delta_ == o.delta_;
    }
    bool operator!=(const KunnethElement& o) const { return !(*this == o); }

private:
    void require_base(const KunnethElement& o) const {
        if (base() != o.base())
            throw incompatible_spaces("KunnethElement: operands over different symmetric products");
    }

    GradedElement one_, pt_, delta_;
};

inline KunnethElement kunneth_mul(const KunnethElement& u, const KunnethElement& v) {
    return u * v;
}

/// exp of an element with no degree-0 part. The series terminates: every
/// slot degree grows with the power, and the total ring is bounded by
/// dim(C x C_d) = d + 1.
inline KunnethElement kunneth_exp(const KunnethElement& u) {
    if (u.slot_one().constant_term() != 0)
        throw domain_error("kunneth_exp: degree-0 part must vanish");
    KunnethElement result = KunnethElement::unit(u.base());
    KunnethElement term = result;
    const long bound = u.base().dim() + 1;
    for (long k = 1; k <= bound; ++k) {
        term = (term * u).scaled(make_rational(1, k));
        if (term.is_zero())
            break;
        result = result + term;
    }
    return result;
}

/// The class of the incidence divisor on C x C_d:
///   delta = n [pt](x)1 + delta^{1,1} + 1(x)x.
/// n is the fiber degree of the universal divisor over C x {pt}; it does not
/// survive the pushforward and is kept as a free parameter.
inline KunnethElement incidence_delta(long n, const AmbientSpace& cd) {
    if (n < 0)
        throw argument_error("incidence_delta: n must be non-negative");
    return KunnethElement::from_slots(GradedElement::generator(cd, "x"),
                                      GradedElement::constant(cd, Rational(n)),
                                      GradedElement::one(cd));
}

/// e^delta, computed termwise from the relation table.
inline KunnethElement exp_delta(long n, const AmbientSpace& cd) {
    return kunneth_exp(incidence_delta(n, cd));
}

namespace detail {

/// H^even of the elliptic surface X, modeled on span{1, f, pt} where f is
/// the fiber class. The one genuine relation is f^2 = 0; f*pt and pt^2
/// vanish because they exceed the surface dimension.
struct SurfaceClass {
    Rational one;
    Rational f;
    Rational pt;

    SurfaceClass times(const SurfaceClass& o) const {
        SurfaceClass r;
        r.one = one * o.one;
        r.f = one * o.f + f * o.one;
        r.pt = one * o.pt + pt * o.one + f * o.f * fiber_self_intersection();
        return r;
    }

    static Rational fiber_self_intersection() { return Rational(0); } // f^2 = 0
};

/// pi_*: H^*(X) -> H^*(C) for the elliptic fibration. The H^0 coefficient of
/// pi_*(alpha) is the pt-part of alpha*f (which is how the f^2 = 0 relation
/// kills the Todd r-term), the H^2 (point) coefficient is the pt-part of
/// alpha itself.
inline std::pair<Rational, Rational> fiber_pushforward(const SurfaceClass& alpha) {
    SurfaceClass fclass{Rational(0), Rational(1), Rational(0)};
    return {alpha.times(fclass).pt, alpha.pt};
}

} // namespace detail

/// ch(pi_2! O(D)) on C_d via Grothendieck-Riemann-Roch:
///
///   ch(pi_2! O(D)) = psi_2_* ( e^delta * psi_1^* pi_*(Todd X) )
///
/// with Todd X = 1 + r f + chi(O_X) pt. pi_* kills the r-term through
/// f^2 = 0 and leaves chi [pt]; multiplying e^delta by [pt](x)1 and pushing
/// forward (slot_pt extraction) yields chi * e^x, independent of n and r.
inline GradedElement grr_pushforward(long chi, long n, const AmbientSpace& cd,
                                     const Rational& todd_r = Rational(0)) {
    if (chi < 0)
        throw argument_error("grr_pushforward: chi must be non-negative");
    detail::SurfaceClass todd{Rational(1), todd_r, Rational(chi)};
    const auto [h0_coeff, pt_coeff] = detail::fiber_pushforward(todd);
    const KunnethElement pushed_todd =
        KunnethElement::from_slots(GradedElement::constant(cd, h0_coeff),
                                   GradedElement::constant(cd, pt_coeff),
                                   GradedElement::zero(cd));
    return (exp_delta(n, cd) * pushed_todd).slot_pt();
}

/// Total Chern class from a Chern character via Newton's identities on the
/// power sums p_k = k! ch_k:
///   e_1 = p_1,  k e_k = sum_{i=1}^{k} (-1)^{i-1} e_{k-i} p_i.
/// The degree-0 part of ch is the (possibly virtual) rank and must be an
/// integer.
inline GradedElement chern_from_character(const GradedElement& ch) {
    if (!is_integer(ch.constant_term()))
        throw domain_error("chern_from_character: degree-0 part must be an integer");
    const AmbientSpace& space = ch.space();
    const long trunc = ch.truncation();

    std::vector<GradedElement> p; // power sums, p[k] homogeneous of degree k
    p.push_back(GradedElement::zero(space));
    for (long k = 1; k <= trunc; ++k)
        p.push_back(degree_part(ch, k).scaled(Rational(factorial(k))));

    std::vector<GradedElement> e;
    e.push_back(GradedElement::one(space));
    for (long k = 1; k <= trunc; ++k) {
        GradedElement acc = GradedElement::zero(space);
        for (long i = 1; i <= k; ++i) {
            GradedElement term = e[k - i] * p[i];
            acc += (i % 2 == 1) ? term : -term;
        }
        e.push_back(acc.scaled(make_rational(1, k)));
    }

    GradedElement total = GradedElement::zero(space);
    for (long k = 0; k <= trunc; ++k)
        total += e[k];
    return total;
}

} // namespace swcalc
