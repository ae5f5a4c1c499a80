#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace swcalc {

/// A model variety carrying named degree-1 generators, a complex dimension
/// (which doubles as the truncation bound for classes on it) and, in
/// bundles.hpp, a monomial integration rule. The four kinds are:
///
///   projective(a)            |D_0| = P^a, generator h
///   symmetric_product(g, d)  C_d of a genus-g curve, generators x, theta
///   jacobian(g)              Pic^d C, generator theta
///   product(L, R)            L x R, generators prefixed p1. / p2.
///
/// All degrees are complex: a generator has complex degree 1 (cohomological
/// degree 2), so dimension counts match divisor-theoretic ones.
class AmbientSpace {
public:
    enum class Kind { projective, symmetric_product, jacobian, product };

    static AmbientSpace projective(long a) {
        if (a < 0)
            throw invalid_spec("P(a) requires a >= 0");
        AmbientSpace s(Kind::projective);
        s.dim_ = a;
        s.gens_ = {"h"};
        return s;
    }

    static AmbientSpace symmetric_product(long g, long d) {
        if (g < 0 || d < 0)
            throw invalid_spec("Cd(g,d) requires g >= 0 and d >= 0");
        AmbientSpace s(Kind::symmetric_product);
        s.g_ = g;
        s.dim_ = d;
        s.gens_ = {"x", "theta"};
        return s;
    }

    static AmbientSpace jacobian(long g) {
        if (g < 0)
            throw invalid_spec("Jac(g) requires g >= 0");
        AmbientSpace s(Kind::jacobian);
        s.g_ = g;
        s.dim_ = g;
        s.gens_ = {"theta"};
        return s;
    }

    static AmbientSpace product(AmbientSpace left, AmbientSpace right) {
        AmbientSpace s(Kind::product);
        s.dim_ = left.dim_ + right.dim_;
        s.factors_.push_back(std::move(left));
        s.factors_.push_back(std::move(right));
        for (const auto& g : s.factors_[0].gens_)
            s.gens_.push_back("p1." + g);
        for (const auto& g : s.factors_[1].gens_)
            s.gens_.push_back("p2." + g);
        return s;
    }

    Kind kind() const noexcept { return kind_; }

    /// Complex dimension; every class on the space is truncated here.
    long dim() const noexcept { return dim_; }

    /// Genus parameter of a symmetric product or Jacobian.
    long genus() const {
        if (kind_ != Kind::symmetric_product && kind_ != Kind::jacobian)
            throw argument_error("genus(): space has no genus parameter");
        return g_;
    }

    /// Divisor degree d of a symmetric product (equals dim()).
    long sym_degree() const {
        if (kind_ != Kind::symmetric_product)
            throw argument_error("sym_degree(): not a symmetric product");
        return dim_;
    }

    const AmbientSpace& left() const { return factor(0); }
    const AmbientSpace& right() const { return factor(1); }

    const std::vector<std::string>& generators() const noexcept { return gens_; }

    bool has_generator(const std::string& name) const {
        for (const auto& g : gens_)
            if (g == name)
                return true;
        return false;
    }

    bool operator==(const AmbientSpace& o) const {
        if (kind_ != o.kind_ || dim_ != o.dim_ || g_ != o.g_)
            return false;
        if (kind_ == Kind::product)
            return factors_[0] == o.factors_[0] && factors_[1] == o.factors_[1];
        return true;
    }
    bool operator!=(const AmbientSpace& o) const { return !(*this == o); }

    /// Spec string: P(a) | Cd(g,d) | Jac(g) | <left>x<right>.
    std::string str() const {
        switch (kind_) {
        case Kind::projective:
            return "P(" + std::to_string(dim_) + ")";
        case Kind::symmetric_product:
            return "Cd(" + std::to_string(g_) + "," + std::to_string(dim_) + ")";
        case Kind::jacobian:
            return "Jac(" + std::to_string(g_) + ")";
        case Kind::product:
            return factors_[0].str() + "x" + factors_[1].str();
        }
        return {};
    }

private:
    explicit AmbientSpace(Kind k) : kind_(k) {}

    const AmbientSpace& factor(std::size_t i) const {
        if (kind_ != Kind::product)
            throw argument_error("factor(): not a product space");
        return factors_[i];
    }

    Kind kind_;
    long g_ = 0;
    long dim_ = 0;
    std::vector<AmbientSpace> factors_; // two entries for products
    std::vector<std::string> gens_;
};

namespace detail {

inline AmbientSpace parse_space_primary(const std::string& src, std::size_t& pos) {
    auto fail = [&](const std::string& why) {
        throw invalid_spec("bad space spec '" + src + "' at offset " + std::to_string(pos) + ": " + why);
    };
    auto expect = [&](char c) {
        if (pos >= src.size() || src[pos] != c)
            fail(std::string("'") + c + "' expected");
        ++pos;
    };
    auto read_long = [&]() -> long {
        std::size_t start = pos;
        if (pos < src.size() && (src[pos] == '-' || src[pos] == '+'))
            ++pos;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos])))
            ++pos;
        if (pos == start)
            fail("integer expected");
        try {
            return std::stol(src.substr(start, pos - start));
        } catch (const std::out_of_range&) {
            fail("integer within machine range");
            return 0; // unreachable
        }
    };

    std::size_t start = pos;
    while (pos < src.size() && std::isalpha(static_cast<unsigned char>(src[pos])))
        ++pos;
    const std::string head = src.substr(start, pos - start);
    if (head == "P") {
        expect('(');
        long a = read_long();
        expect(')');
        return AmbientSpace::projective(a);
    }
    if (head == "Cd") {
        expect('(');
        long g = read_long();
        expect(',');
        long d = read_long();
        expect(')');
        return AmbientSpace::symmetric_product(g, d);
    }
    if (head == "Jac") {
        expect('(');
        long g = read_long();
        expect(')');
        return AmbientSpace::jacobian(g);
    }
    pos = start;
    fail("one of P(a), Cd(g,d), Jac(g)");
    return AmbientSpace::projective(0); // unreachable
}

} // namespace detail

/// Parses a space spec: `P(a)`, `Cd(g,d)`, `Jac(g)`, or products chained with
/// `x` (left-associative), e.g. `P(1)xCd(4,3)`.
inline AmbientSpace parse_space(const std::string& src) {
    std::size_t pos = 0;
    AmbientSpace result = detail::parse_space_primary(src, pos);
    while (pos < src.size() && src[pos] == 'x') {
        ++pos;
        result = AmbientSpace::product(std::move(result), detail::parse_space_primary(src, pos));
    }
    if (pos != src.size())
        throw invalid_spec("bad space spec '" + src + "': trailing input at offset " + std::to_string(pos));
    return result;
}

} // namespace swcalc
