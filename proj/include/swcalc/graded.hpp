#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"
#include "spaces.hpp"

namespace swcalc {

/// A monomial in named degree-1 generators. Canonical form: generator names
/// sorted (the map order) and no zero exponents, so equality is structural.
class Monomial {
public:
    Monomial() = default;

    static Monomial unit() { return Monomial(); }

    static Monomial power(const std::string& gen, long e) {
        if (e < 0)
            throw argument_error("Monomial::power: negative exponent");
        Monomial m;
        if (e > 0)
            m.exps_[gen] = e;
        return m;
    }

    long exponent(const std::string& gen) const {
        auto it = exps_.find(gen);
        return it == exps_.end() ? 0 : it->second;
    }

    /// Total complex degree: the sum of all exponents.
    long degree() const {
        long d = 0;
        for (const auto& [_, e] : exps_)
            d += e;
        return d;
    }

    Monomial times(const Monomial& o) const {
        Monomial m = *this;
        for (const auto& [g, e] : o.exps_)
            m.exps_[g] += e;
        return m;
    }

    bool is_unit() const { return exps_.empty(); }

    const std::map<std::string, long>& exponents() const noexcept { return exps_; }

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }
    bool operator<(const Monomial& o) const { return exps_ < o.exps_; }

    /// "x^2*theta" style; the unit monomial prints as "1".
    std::string str() const {
        if (exps_.empty())
            return "1";
        std::string out;
        for (const auto& [g, e] : exps_) {
            if (!out.empty())
                out += "*";
            out += g;
            if (e > 1)
                out += "^" + std::to_string(e);
        }
        return out;
    }

private:
    std::map<std::string, long> exps_;
};

namespace detail {

/// Splits a monomial over a product space into the two factor monomials by
/// stripping the p1./p2. prefixes.
inline std::pair<Monomial, Monomial> split_product_monomial(const Monomial& m) {
    Monomial m1, m2;
    for (const auto& [name, e] : m.exponents()) {
        if (name.rfind("p1.", 0) == 0)
            m1 = m1.times(Monomial::power(name.substr(3), e));
        else if (name.rfind("p2.", 0) == 0)
            m2 = m2.times(Monomial::power(name.substr(3), e));
        else
            throw domain_error("monomial generator '" + name + "' is not a product generator");
    }
    return {m1, m2};
}

/// Truncation test: total degree above the dimension, applied per factor on
/// product spaces (a monomial whose factor part exceeds that factor's
/// dimension pairs to zero with everything, so it is dropped eagerly).
inline bool exceeds_dimension(const AmbientSpace& s, const Monomial& m) {
    if (s.kind() == AmbientSpace::Kind::product) {
        const auto [m1, m2] = split_product_monomial(m);
        return exceeds_dimension(s.left(), m1) || exceeds_dimension(s.right(), m2);
    }
    return m.degree() > s.dim();
}

} // namespace detail

/// Truncated graded-commutative polynomial over the rationals, tied to an
/// ambient space. Terms of complex degree above the space dimension (checked
/// factorwise on products) are dropped eagerly and never resurrected; zero
/// coefficients are eliminated, so structural equality of the term maps is
/// semantic equality.
class GradedElement {
public:
    explicit GradedElement(AmbientSpace space)
        : space_(std::move(space)) {}

    static GradedElement zero(const AmbientSpace& space) { return GradedElement(space); }

    static GradedElement constant(const AmbientSpace& space, const Rational& c) {
        GradedElement u(space);
        u.add_term(Monomial::unit(), c);
        return u;
    }

    static GradedElement one(const AmbientSpace& space) {
        return constant(space, Rational(1));
    }

    static GradedElement generator(const AmbientSpace& space, const std::string& name) {
        if (!space.has_generator(name))
            throw domain_error("unknown generator '" + name + "' on " + space.str());
        GradedElement u(space);
        u.add_term(Monomial::power(name, 1), Rational(1));
        return u;
    }

    static GradedElement from_term(const AmbientSpace& space, const Monomial& m, const Rational& c) {
        for (const auto& [name, _] : m.exponents())
            if (!space.has_generator(name))
                throw domain_error("unknown generator '" + name + "' on " + space.str());
        GradedElement u(space);
        u.add_term(m, c);
        return u;
    }

    const AmbientSpace& space() const noexcept { return space_; }
    long truncation() const noexcept { return space_.dim(); }
    const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational constant_term() const { return coefficient(Monomial::unit()); }

    /// True when every term has the same complex degree k (the zero element
    /// is homogeneous of every degree).
    bool is_homogeneous(long k) const {
        for (const auto& [m, _] : terms_)
            if (m.degree() != k)
                return false;
        return true;
    }

    GradedElement operator-() const {
        GradedElement u(space_);
        for (const auto& [m, c] : terms_)
            u.terms_[m] = -c;
        return u;
    }

    GradedElement operator+(const GradedElement& o) const {
        require_compatible(o, "add");
        GradedElement u = *this;
        for (const auto& [m, c] : o.terms_)
            u.add_term(m, c);
        return u;
    }

    GradedElement operator-(const GradedElement& o) const { return *this + (-o); }

    GradedElement operator*(const GradedElement& o) const {
        require_compatible(o, "mul");
        GradedElement u(space_);
        const long trunc = truncation();
        for (const auto& [ma, ca] : terms_) {
            const long da = ma.degree();
            for (const auto& [mb, cb] : o.terms_) {
                if (da + mb.degree() > trunc)
                    continue;
                u.add_term(ma.times(mb), ca * cb);
            }
        }
        return u;
    }

    GradedElement& operator+=(const GradedElement& o) { return *this = *this + o; }
    GradedElement& operator*=(const GradedElement& o) { return *this = *this * o; }

    GradedElement scaled(const Rational& c) const {
        GradedElement u(space_);
        if (c == 0)
            return u;
        for (const auto& [m, coef] : terms_)
            u.terms_[m] = coef * c;
        return u;
    }

    bool operator==(const GradedElement& o) const {
        return space_ == o.space_ && terms_ == o.terms_;
    }
    bool operator!=(const GradedElement& o) const { return !(*this == o); }

    /// Canonical text form: terms sorted by (degree, monomial), each printed
    /// as coef or coef*gen^e*...; e.g. "1 + 3*x + 3*x^2" or "1*x - 1*theta".
    std::string str() const {
        if (terms_.empty())
            return "0";
        std::vector<std::pair<Monomial, Rational>> ordered(terms_.begin(), terms_.end());
        std::stable_sort(ordered.begin(), ordered.end(),
                         [](const auto& a, const auto& b) { return a.first.degree() < b.first.degree(); });
        std::string out;
        bool first = true;
        for (const auto& [m, c] : ordered) {
            Rational coef = c;
            if (first) {
                first = false;
            } else if (coef < 0) {
                out += " - ";
                coef = -coef;
            } else {
                out += " + ";
            }
            out += to_canonical(coef);
            if (!m.is_unit())
                out += "*" + m.str();
        }
        return out;
    }

private:
    friend GradedElement degree_part(const GradedElement&, long);

    void require_compatible(const GradedElement& o, const char* op) const {
        if (space_ != o.space_)
            throw incompatible_spaces(std::string(op) + ": operands over " + space_.str() +
                                      " and " + o.space_.str());
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0 || detail::exceeds_dimension(space_, m))
            return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    AmbientSpace space_;
    std::map<Monomial, Rational> terms_;
};

inline GradedElement operator*(const Rational& c, const GradedElement& u) { return u.scaled(c); }
inline GradedElement operator*(const GradedElement& u, const Rational& c) { return u.scaled(c); }

/// The homogeneous degree-k component of u, for 0 <= k <= truncation.
inline GradedElement degree_part(const GradedElement& u, long k) {
    if (k < 0 || k > u.truncation())
        throw argument_error("degree_part: degree " + std::to_string(k) + " out of range [0, " +
                             std::to_string(u.truncation()) + "]");
    GradedElement v(u.space());
    for (const auto& [m, c] : u.terms())
        if (m.degree() == k)
            v.add_term(m, c);
    return v;
}

/// Multiplicative inverse of a unit (nonzero constant term), via the
/// geometric series of the augmentation part. Exact up to truncation; the
/// series terminates because the augmentation part is nilpotent.
inline GradedElement inverse(const GradedElement& u) {
    const Rational c = u.constant_term();
    if (c == 0)
        throw not_invertible("inverse: constant term is zero");
    const GradedElement one = GradedElement::one(u.space());
    const GradedElement w = one - u.scaled(Rational(1) / c); // w has positive min degree
    GradedElement acc = one;
    GradedElement pw = one;
    for (long k = 1; k <= u.truncation(); ++k) {
        pw = pw * w;
        if (pw.is_zero())
            break;
        acc += pw;
    }
    return acc.scaled(Rational(1) / c);
}

/// u^n. Negative n requires u to be a unit and routes through inverse().
inline GradedElement pow_int(const GradedElement& u, long n) {
    if (n < 0)
        return pow_int(inverse(u), -n);
    GradedElement result = GradedElement::one(u.space());
    GradedElement base = u;
    long k = n;
    while (k > 0) {
        if (k & 1)
            result = result * base;
        if (k >>= 1)
            base = base * base;
    }
    return result;
}

/// exp of an augmentation-ideal element (zero constant term):
/// sum_{k>=0} u^k / k!, truncated. Satisfies exp(u+v) = exp(u)exp(v).
inline GradedElement exp(const GradedElement& u) {
    if (u.constant_term() != 0)
        throw domain_error("exp: constant term must be zero");
    GradedElement result = GradedElement::one(u.space());
    GradedElement term = result;
    for (long k = 1; k <= u.truncation(); ++k) {
        term = (term * u).scaled(make_rational(1, k));
        if (term.is_zero())
            break;
        result += term;
    }
    return result;
}

} // namespace swcalc
