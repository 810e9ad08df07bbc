#include "identities.hpp"
#include "quartic3d.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <cmath>

using namespace coposit;
using coposit::test::Rng;

TEST_CASE("residual reference values") {
    CHECK(residual(InequalityId::T312_i, std::vector<double>{1, 1, 1}) == doctest::Approx(9.0));
    CHECK(residual(InequalityId::T313_a, std::vector<double>{1, 1, 0}) == doctest::Approx(0.0));
    CHECK(residual(InequalityId::T314_e, std::vector<double>{1, 0, 1}) == doctest::Approx(0.0));
    CHECK(residual_exact(InequalityId::T313_b,
                         std::array<Rational, 3>{Rational(1), Rational(1), Rational(1)}) == 17);
    CHECK(residual(InequalityId::T312_i, std::vector<double>{0, 0, 0}) == 0.0);
    CHECK_THROWS_AS(residual(InequalityId::T312_i, std::vector<double>{-1, 0, 0}),
                    std::invalid_argument);
}

TEST_CASE("expanded and compact routes are the same polynomial") {
    for (InequalityId id : all_inequality_ids()) {
        CHECK(expanded_coefficients(id) == compact_coefficients(id));
        auto [lhs, rhs] = expanded_equals_compact(id, std::vector<double>{1, 2, 3});
        CHECK(lhs == doctest::Approx(rhs));
        auto [z1, z2] = expanded_equals_compact(id, std::vector<double>{0, 0, 0});
        CHECK(z1 == 0.0);
        CHECK(z2 == 0.0);
    }
    auto [a, b] = expanded_equals_compact(InequalityId::T312_ii, std::vector<double>{1, 2, 3});
    CHECK(a == doctest::Approx(564.0));
    CHECK(b == doctest::Approx(564.0));
}

TEST_CASE("residuals are degree-4 homogeneous") {
    Rng rng(601);
    for (InequalityId id : all_inequality_ids()) {
        for (int it = 0; it < 50; ++it) {
            std::vector<double> x = {rng.uniform(0, 2), rng.uniform(0, 2), rng.uniform(0, 2)};
            double lam = rng.uniform(0.1, 3.0);
            std::vector<double> lx = {lam * x[0], lam * x[1], lam * x[2]};
            double r = residual(id, x);
            double rl = residual(id, lx);
            double expect = std::pow(lam, 4) * r;
            CHECK(std::abs(rl - expect) <= 1e-10 * std::max(1.0, std::abs(expect)));
        }
    }
}

TEST_CASE("strict inequalities are positive away from the origin") {
    Rng rng(602);
    for (InequalityId id : all_inequality_ids()) {
        if (!is_strict_inequality(id)) continue;
        for (int it = 0; it < 2000; ++it) {
            std::vector<double> x = {rng.uniform(0, 2), rng.uniform(0, 2), rng.uniform(0, 2)};
            if (x[0] == 0 && x[1] == 0 && x[2] == 0) continue;
            CHECK(residual(id, x) > 0.0);
        }
        // exact spot checks on rational points
        for (int it = 0; it < 200; ++it) {
            std::array<Rational, 3> x = {Rational(rng.integer(0, 20), 10),
                                         Rational(rng.integer(0, 20), 10),
                                         Rational(rng.integer(0, 20), 10)};
            if (x[0] == 0 && x[1] == 0 && x[2] == 0) continue;
            CHECK(residual_exact(id, x) > 0);
        }
    }
}

TEST_CASE("nonnegative inequalities never dip below zero") {
    Rng rng(603);
    for (InequalityId id : all_inequality_ids()) {
        if (is_strict_inequality(id)) continue;
        for (int it = 0; it < 2000; ++it) {
            std::vector<double> x = {rng.uniform(0, 2), rng.uniform(0, 2), rng.uniform(0, 2)};
            CHECK(residual(id, x) >= 0.0);
        }
        for (int it = 0; it < 200; ++it) {
            std::array<Rational, 3> x = {Rational(rng.integer(0, 20), 10),
                                         Rational(rng.integer(0, 20), 10),
                                         Rational(rng.integer(0, 20), 10)};
            CHECK(residual_exact(id, x) >= 0);
        }
    }
}

TEST_CASE("equality loci are exact and isolated") {
    CHECK(equality_locus_check(InequalityId::T313_a, 2000, 11));
    CHECK(equality_locus_check(InequalityId::T313_b, 2000, 12));
    CHECK(equality_locus_check(InequalityId::T313_c, 2000, 13));
    CHECK(equality_locus_check(InequalityId::T313_d, 2000, 14));
    CHECK(equality_locus_check(InequalityId::T314_e, 2000, 15));
    CHECK(equality_locus_check(InequalityId::T314_f, 2000, 16));
    CHECK(equality_locus_check(InequalityId::T314_g, 2000, 17));
    CHECK_THROWS_AS(equality_locus_check(InequalityId::T312_i, 10, 1), std::invalid_argument);
}

TEST_CASE("T314_f vanishes on the diagonal edge, not at (t,0,t)") {
    // the zero set of (x3+x2-x1)^4 - 8x3^3(x2-x1) is x3=0, x1=x2
    std::array<Rational, 3> diag = {Rational(7), Rational(7), Rational(0)};
    CHECK(residual_exact(InequalityId::T314_f, diag) == 0);
    std::array<Rational, 3> other = {Rational(7), Rational(0), Rational(7)};
    CHECK(residual_exact(InequalityId::T314_f, other) == Rational(8) * 7 * 7 * 7 * 7);
    auto locus = equality_locus(InequalityId::T314_f);
    REQUIRE(locus.size() == 1);
    CHECK(locus[0] == LocusLine::X3ZeroX1EqX2);
}

TEST_CASE("residual tensors classify consistently with the +-1 families") {
    for (InequalityId id : all_inequality_ids()) {
        SymTensor4 t = residual_tensor(id);
        if (is_strict_inequality(id)) {
            auto p = match_strict_family(t);
            REQUIRE(p.has_value());
            CHECK(strict_copositive_pm1(*p));
        } else {
            auto p = match_cop_family(t);
            REQUIRE(p.has_value());
            CHECK(copositive_pm1(*p));
        }
    }
}
