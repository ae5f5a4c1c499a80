#include <doctest.h>

#include <swcalc/graded.hpp>
#include <swcalc/spaces.hpp>

using namespace swcalc;

namespace {

const AmbientSpace cd43 = AmbientSpace::symmetric_product(4, 3);
const AmbientSpace jac3 = AmbientSpace::jacobian(3);

GradedElement gen(const AmbientSpace& s, const char* name) {
    return GradedElement::generator(s, name);
}

GradedElement one(const AmbientSpace& s) {
    return GradedElement::one(s);
}

} // namespace

TEST_CASE("monomial canonical form") {
    const Monomial m = Monomial::power("x", 2).times(Monomial::power("theta", 1));
    CHECK(m.degree() == 3);
    CHECK(m.exponent("x") == 2);
    CHECK(m.exponent("theta") == 1);
    CHECK(m.str() == "theta*x^2");
    CHECK(Monomial::power("x", 0) == Monomial::unit());
    CHECK(Monomial::unit().str() == "1");
}

TEST_CASE("addition") {
    const GradedElement x = gen(cd43, "x");
    const GradedElement theta = gen(cd43, "theta");

    CHECK((one(cd43) + x) + (-one(cd43) + x) == x.scaled(Rational(2)));
    CHECK(x + GradedElement::zero(cd43) == x);
    CHECK((x + theta) + (x - theta) == x.scaled(Rational(2)));

    const AmbientSpace other = AmbientSpace::symmetric_product(4, 2);
    CHECK_THROWS_AS(x + gen(other, "x"), incompatible_spaces);
}

TEST_CASE("multiplication and truncation") {
    const GradedElement x = gen(cd43, "x");
    const GradedElement theta = gen(cd43, "theta");

    CHECK((one(cd43) + x) * (one(cd43) - x) == one(cd43) - x * x);
    CHECK((pow_int(x, 3) * x).is_zero()); // x^d * x dies at the truncation
    CHECK((one(cd43) + theta) * (one(cd43) + x) == one(cd43) + x + theta + x * theta);

    const AmbientSpace other = AmbientSpace::jacobian(4);
    CHECK_THROWS_AS(x * gen(other, "theta"), incompatible_spaces);
}

TEST_CASE("pow_int against the binomial oracle") {
    const AmbientSpace p5 = AmbientSpace::projective(5);
    const GradedElement u = one(p5) + gen(p5, "h");

    CHECK(pow_int(u, -3).coefficient(Monomial::power("h", 2)) == binom(-3, 2));
    CHECK(pow_int(u, -3).coefficient(Monomial::power("h", 2)) == 6);
    CHECK(pow_int(u, 0) == one(p5));

    // exponent d+1-g = 0 at g = d+1
    const AmbientSpace cd = AmbientSpace::symmetric_product(4, 3);
    CHECK(pow_int(one(cd) + gen(cd, "x"), 3 + 1 - 4) == one(cd));

    for (long n = -12; n <= 12; ++n) {
        const GradedElement p = pow_int(u, n);
        for (long m = 0; m <= p5.dim(); ++m)
            CHECK(p.coefficient(Monomial::power("h", m)) == binom(n, m));
    }
}

TEST_CASE("inverse") {
    const AmbientSpace p4 = AmbientSpace::projective(4);
    const GradedElement h = gen(p4, "h");
    GradedElement geom = GradedElement::zero(p4);
    for (long k = 0; k <= 4; ++k)
        geom += pow_int(h, k).scaled(Rational(k % 2 == 0 ? 1 : -1));
    CHECK(inverse(one(p4) + h) == geom);

    CHECK(inverse(one(p4)) == one(p4));
    CHECK_THROWS_AS(inverse(h), not_invertible);
    CHECK_THROWS_AS(pow_int(h, -1), not_invertible);

    // inverse(e^{-2 theta}) = e^{2 theta}, termwise against the series oracle
    const GradedElement two_theta = gen(jac3, "theta").scaled(Rational(2));
    CHECK(inverse(exp(-two_theta)) == exp(two_theta));
}

TEST_CASE("exp") {
    CHECK(exp(GradedElement::zero(jac3)) == one(jac3));

    // direct series oracle: coefficient of theta^3 in e^{2 theta} is 2^3/3!
    const GradedElement e = exp(gen(jac3, "theta").scaled(Rational(2)));
    CHECK(e.coefficient(Monomial::power("theta", 3)) == make_rational(8, 6));
    CHECK(e.coefficient(Monomial::power("theta", 3)) == make_rational(4, 3));

    const GradedElement x = gen(cd43, "x");
    CHECK(exp(x) * exp(-x) == one(cd43));
    CHECK_THROWS_AS(exp(one(jac3)), domain_error);
}

TEST_CASE("degree_part") {
    const AmbientSpace p3 = AmbientSpace::projective(3);
    const GradedElement h = gen(p3, "h");
    const GradedElement u = one(p3) + h.scaled(Rational(2)) + (h * h).scaled(Rational(3));

    CHECK(degree_part(u, 1) == h.scaled(Rational(2)));
    CHECK(degree_part(u, 0) == one(p3));

    // degree-g part of e^{2 theta} is (2 theta)^g / g!
    const GradedElement two_theta = gen(jac3, "theta").scaled(Rational(2));
    CHECK(degree_part(exp(two_theta), 3) == pow_int(two_theta, 3).scaled(make_rational(1, 6)));

    CHECK_THROWS_AS(degree_part(u, 4), argument_error);
    CHECK_THROWS_AS(degree_part(u, -1), argument_error);
}

TEST_CASE("canonical text form") {
    const AmbientSpace p3 = AmbientSpace::projective(3);
    const GradedElement h = gen(p3, "h");
    CHECK(pow_int(one(p3) + h, 3).str() == "1 + 3*h + 3*h^2 + 1*h^3");
    CHECK(GradedElement::zero(p3).str() == "0");
    CHECK((gen(cd43, "x") - gen(cd43, "theta")).str() == "-1*theta + 1*x");
    CHECK((one(cd43).scaled(make_rational(-3, 2)) + gen(cd43, "x")).str() == "-3/2 + 1*x");
    CHECK(exp(gen(jac3, "theta").scaled(Rational(2))).str() ==
          "1 + 2*theta + 2*theta^2 + 4/3*theta^3");
}

TEST_CASE("unknown generators are rejected") {
    CHECK_THROWS_AS(gen(cd43, "h"), domain_error);
    CHECK_THROWS_AS(GradedElement::from_term(jac3, Monomial::power("x", 1), Rational(1)), domain_error);
}
