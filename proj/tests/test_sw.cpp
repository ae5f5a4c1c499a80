#include <doctest.h>

#include <swcalc/sw.hpp>

using namespace swcalc;

TEST_CASE("elliptic cohomology dimensions") {
    CHECK(elliptic_cohomology_dims(2, 1) == std::tuple<long, long, long>{2, 0, 1});
    CHECK(elliptic_cohomology_dims(0, 0) == std::tuple<long, long, long>{1, 0, 0});
    CHECK(elliptic_cohomology_dims(1, 3) == std::tuple<long, long, long>{4, 2, 0});

    // Riemann-Roch: h0 - h1 + h2 = 1 + p_g
    for (long pg = 0; pg <= 6; ++pg)
        for (long a = 0; a <= 8; ++a) {
            const auto [h0, h1, h2] = elliptic_cohomology_dims(pg, a);
            CHECK(h0 - h1 + h2 == 1 + pg);
        }
    CHECK_THROWS_AS(elliptic_cohomology_dims(-1, 0), argument_error);
}

TEST_CASE("regular elliptic surfaces") {
    CHECK(sw_elliptic_regular(5, 2).value == 6);
    CHECK(sw_elliptic_regular(0, 3).value == 1);
    CHECK(sw_elliptic_regular(2, 3).value == 0);
    CHECK(sw_elliptic_regular(0, 0).value == 1);
    CHECK(sw_elliptic_regular(3, 0).value == 1);
    CHECK(sw_elliptic_regular(4, 1).value == -3);

    for (long pg = 0; pg <= 8; ++pg)
        for (long a = 0; a <= 10; ++a) {
            const SWResult r = sw_elliptic_regular(pg, a); // throws on pipeline/closed mismatch
            CHECK(r.method == Method::both);
            CHECK(r.expected_dim == 0);
            CHECK(is_integer(r.value));
        }
}

TEST_CASE("elliptic surfaces over a positive-genus base") {
    CHECK(sw_elliptic({1, 1, 1}).value == -1);
    CHECK(sw_elliptic({2, 2, 1}).value == -4);
    CHECK(sw_elliptic({3, 2, 0}).value == 1);

    for (long chi = 1; chi <= 5; ++chi)
        for (long g = 0; g <= 5; ++g)
            for (long d = 0; d <= 8; ++d) {
                Rational expected = binom(Integer(chi + 2 * g - 2), d);
                if (d % 2 != 0)
                    expected = -expected;
                CHECK(sw_elliptic({chi, g, d}).value == expected);
            }

    CHECK_THROWS_AS(sw_elliptic({0, 1, 1}), invalid_spec);
}

TEST_CASE("g = 0 elliptic pipeline matches the regular one") {
    for (long chi = 1; chi <= 6; ++chi)
        for (long d = 0; d <= 6; ++d)
            CHECK(sw_elliptic({chi, 0, d}).value == sw_elliptic_regular(chi - 1, d).value);
}

TEST_CASE("b = 1 ruled invariant is 1") {
    CHECK(sw_ruled_b1(2, 1).value == 1);
    CHECK(sw_ruled_b1(5, 0).value == 1);
    CHECK(sw_ruled_b1(3, 3).value == 1);
    for (long g = 1; g <= 6; ++g)
        for (long d = 0; d <= 6; ++d) {
            const SWResult r = sw_ruled_b1(g, d);
            CHECK(r.value == 1);
            CHECK(r.expected_dim == d);
        }
}

TEST_CASE("M0 contribution for b = 2") {
    CHECK(ruled_m0_contribution(3, 1) == 8);
    CHECK(ruled_m0_contribution(4, 2) == 16);
    CHECK(ruled_m0_contribution(4, 3) == 14);
    CHECK(ruled_m0_contribution(6, 4) == 59);
    CHECK(ruled_m0_contribution(2, 2) == 3); // N = 0: no obstruction, mu^(d+1) alone

    CHECK_THROWS_AS(ruled_m0_contribution(9, 3), inapplicable_case); // N = 6 > d+1
    CHECK_THROWS_AS(ruled_m0_contribution(1, 2), inapplicable_case); // N < 0
}

TEST_CASE("Castelnuovo count") {
    CHECK(castelnuovo_count(4, 3) == 2);
    CHECK(castelnuovo_count(2, 2) == 1);
    CHECK(castelnuovo_count(6, 4) == 5);
    CHECK(castelnuovo_count(8, 5) == 14);
    for (long d = 2; d <= 8; ++d)
        CHECK(is_integer(castelnuovo_count(2 * d - 2, d))); // both closed forms agree internally

    CHECK_THROWS_AS(castelnuovo_count(5, 3), inapplicable_case); // rho != 0
    CHECK_THROWS_AS(castelnuovo_count(0, 1), inapplicable_case);
}

TEST_CASE("b = 2 component totals equal 2^g") {
    const SWResult documented = sw_ruled_b2_total(4, 3);
    CHECK(documented.value == 16);
    CHECK(documented.m0 == Rational(14));
    CHECK(documented.m1 == Rational(2));
    CHECK(documented.expected_dim == 3);

    const SWResult unique_component = sw_ruled_b2_total(3, 1);
    CHECK(unique_component.value == 8);
    CHECK(unique_component.m0 == Rational(8));
    CHECK(unique_component.m1 == Rational(0));

    const SWResult g6 = sw_ruled_b2_total(6, 4);
    CHECK(g6.value == 64);
    CHECK(g6.m0 == Rational(59));
    CHECK(g6.m1 == Rational(5));

    for (long d = 1; d <= 5; ++d)
        for (long g : {2 * d + 1, 2 * d, 2 * d - 1, 2 * d - 2}) {
            if (g < 2)
                continue;
            CHECK(sw_ruled_b2_total(g, d).value == Rational(ipow(Integer(2), g)));
        }

    CHECK_THROWS_AS(sw_ruled_b2_total(9, 3), inapplicable_case);
}

TEST_CASE("Segre class of W_{1,d}") {
    const AmbientSpace jac2 = AmbientSpace::jacobian(2);
    CHECK(segre_w1d(2, 1) == GradedElement::generator(jac2, "theta").scaled(Rational(2)));

    CHECK(integrate(segre_w1d(3, 1)) == 8);
    CHECK(integrate(segre_w1d(5, 2)) == 32);

    // codegree above the dimension: the zero class
    CHECK(segre_w1d(4, 1).is_zero());
    CHECK(segre_w1d(8, 0).is_zero());

    CHECK_THROWS_AS(segre_w1d(1, 2), inapplicable_case);
}

TEST_CASE("section invariant 2^g by the Segre route") {
    CHECK(sw_section_invariant(2).value == 4);
    CHECK(sw_section_invariant(4).value == 16);
    CHECK(sw_section_invariant(12).value == 4096);
    CHECK_THROWS_AS(sw_section_invariant(1), argument_error);
}

TEST_CASE("two routes to the zero-dimensional 2^g") {
    for (long d = 1; d <= 5; ++d) {
        const long g = 2 * d + 1;
        CHECK(sw_section_invariant(g).value == sw_ruled_b2_total(g, d).value);
    }
}

TEST_CASE("ruled spec admissibility") {
    CHECK_NOTHROW(RuledSpec{3, -1, 2}.validate());
    CHECK_NOTHROW(RuledSpec{5, -4, 1}.validate()); // boundary a = 1-g at b = 1
    CHECK_THROWS_AS((RuledSpec{3, 0, 2}.validate()), invalid_spec);
    CHECK_THROWS_AS((RuledSpec{3, -5, 2}.validate()), invalid_spec);
    CHECK_THROWS_AS((RuledSpec{1, -1, 2}.validate()), invalid_spec);
    CHECK_THROWS_AS((RuledSpec{3, -1, 0}.validate()), invalid_spec);
}

TEST_CASE("general ruled invariant b^g with verification tiers") {
    const SWResult r1 = sw_ruled_general({3, -1, 2});
    CHECK(r1.value == 8);
    CHECK(r1.verification_tier == tier_component_sum);
    CHECK(r1.method == Method::both);

    const SWResult r2 = sw_ruled_general({5, -4, 1});
    CHECK(r2.value == 1);
    CHECK(r2.verification_tier == tier_pipeline);

    const SWResult r3 = sw_ruled_general({7, -2, 3});
    CHECK(r3.value == 2187);
    CHECK(r3.verification_tier == tier_closed_form);
    CHECK(r3.method == Method::closed_form);

    // b = 2 outside the component-computed range falls back to closed form
    const SWResult r4 = sw_ruled_general({9, -2, 2}); // d = 6, g = 9 < 2d-2
    CHECK(r4.value == 512);
    CHECK(r4.verification_tier == tier_closed_form);
}

TEST_CASE("expected dimensions") {
    CHECK(sw_expected_dim({3, -1, 2}) == 0);
    CHECK(sw_expected_dim({4, -1, 2}) == 1);
    CHECK(sw_expected_dim({5, -4, 1}) == 0);

    // section of square 2d on a ruled surface: (2d - (2d - 2g + 2))/2 = g - 1
    CHECK(hilbert_expected_dim(Rational(6), Rational(6 - 2 * 4 + 2)) == Rational(4 - 1));
    CHECK(hilbert_expected_dim(Rational(7), Rational(2)) == make_rational(5, 2));
}

TEST_CASE("hilbert scheme dimensions") {
    for (long d = 0; d <= 6; ++d)
        for (long g = 0; g <= 6; ++g) {
            CHECK(hilbert_dims(2, g, d, 1).first == d + 2);
            CHECK(hilbert_dims(2, g, d, 0).first == d + 1);
            CHECK(hilbert_dims(1, g, d, 0).second == 0);
        }
    CHECK(hilbert_dims(2, 6, 4, 1) == std::pair<long, long>{6, 3});
    CHECK_THROWS_AS(hilbert_dims(0, 2, 1, 0), argument_error);
}

TEST_CASE("every admissible value is an integer") {
    for (long g = 2; g <= 8; ++g)
        for (long b = 1; b <= 4; ++b)
            for (long a = -8; a < 0; ++a) {
                if (a * b < 1 - g)
                    continue;
                const SWResult r = sw_ruled_general({g, a, b});
                CHECK(is_integer(r.value));
            }
}
