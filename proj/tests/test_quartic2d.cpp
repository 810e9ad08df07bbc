#include "oracle.hpp"
#include "quartic2d.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <cmath>

using namespace coposit;
using coposit::test::Rng;

namespace {

SymTensor4 quartic2_tensor(const Rational& d1, const Rational& a, const Rational& b,
                           const Rational& c, const Rational& d2) {
    return SymTensor4::build(2, {{{1, 1, 1, 1}, d1},
                                 {{1, 1, 1, 2}, a},
                                 {{1, 1, 2, 2}, b},
                                 {{1, 2, 2, 2}, c},
                                 {{2, 2, 2, 2}, d2}});
}

double cubic_grid_min(const Cubic2& t, int n) {
    double best = 1e300;
    for (int i = 0; i <= n; ++i) {
        double x1 = static_cast<double>(i) / n;
        best = std::min(best, t.evaluate(x1, 1.0 - x1));
    }
    return best;
}

}  // namespace

TEST_CASE("delta prime reference values") {
    CHECK(discriminant_delta_prime_exact(1, 1, 1) == 0);
    CHECK(discriminant_delta_prime_exact(1, -1, 1) == -432);
    CHECK(discriminant_delta_prime_exact(1, 1, -1) == 80);
    CHECK(discriminant_delta_prime(Quartic2{1, 1, -1, std::nullopt}) == doctest::Approx(80.0));
}

TEST_CASE("normalized quartic classification") {
    CHECK(copositive_quartic_2d_normalized(Quartic2::from_exact(1, -1, 1)) ==
          Verdict::Copositive);
    Quartic2Result r = copositive_quartic_2d_normalized_detail(Quartic2::from_exact(1, -1, 1));
    CHECK(r.branch == 1);

    CHECK(copositive_quartic_2d_normalized(Quartic2::from_exact(-1, -1, -1)) ==
          Verdict::NotCopositive);
    // witness x=(1,1): 1-4-6-4+1
    CHECK(Quartic2::from_exact(-1, -1, -1).evaluate(1, 1) == doctest::Approx(-12.0));

    Quartic2Result r2 = copositive_quartic_2d_normalized_detail(Quartic2::from_exact(0, 0, 0));
    CHECK(r2.verdict == Verdict::Copositive);
    CHECK(r2.branch == 2);
}

TEST_CASE("general quartic test normalizes first") {
    // built by inverting the scaling so the normalized coefficients are (1,-1,1)
    SymTensor4 t = quartic2_tensor(16, 8, -4, 2, 1);
    Quartic2 q = Quartic2::from_normalized_tensor(t.normalize_diagonal());
    CHECK((*q.exact)[0] == 1);
    CHECK((*q.exact)[1] == -1);
    CHECK((*q.exact)[2] == 1);
    CHECK(copositive_quartic_2d(t) == Verdict::Copositive);

    CHECK(copositive_quartic_2d(quartic2_tensor(1, 1, 1, 1, 1)) == Verdict::Copositive);

    SymTensor4 bad = quartic2_tensor(1, 0, -1, 0, 1);
    CHECK(copositive_quartic_2d(bad) == Verdict::NotCopositive);
    CHECK(bad.evaluate(std::vector<double>{1, 1}) == doctest::Approx(-4.0));

    CHECK_THROWS_AS(copositive_quartic_2d(quartic2_tensor(0, 0, 0, 0, 1)), std::domain_error);
}

TEST_CASE("+-1 classification closed form") {
    CHECK(copositive_pm1_2d(-1, 1, -1));
    CHECK(copositive_pm1_2d(1, -1, 1));
    CHECK_FALSE(copositive_pm1_2d(-1, -1, 1));
    CHECK(Quartic2::from_exact(-1, -1, 1).evaluate(1, 1) == doctest::Approx(-4.0));
    CHECK_THROWS_AS(copositive_pm1_2d(0, 1, 1), std::invalid_argument);
}

TEST_CASE("all 8 +-1 patterns: closed form == branch evaluation == exact grid oracle") {
    for (int a : {-1, 1})
        for (int b : {-1, 1})
            for (int c : {-1, 1}) {
                bool closed = copositive_pm1_2d(a, b, c);
                Verdict branch = copositive_quartic_2d_normalized(Quartic2::from_exact(a, b, c));
                SymTensor4 t = quartic2_tensor(1, a, b, c, 1);
                OracleParams params = OracleParams::defaults_for_dim(2);
                params.refine = false;
                OracleReport rep = min_on_simplex(t, params);
                REQUIRE(rep.exact_min.has_value());
                bool oracle = *rep.exact_min >= 0;
                CHECK(closed == is_copositive(branch));
                CHECK(closed == oracle);
            }
}

TEST_CASE("sufficient conditions by scaling") {
    CHECK(sufficient_2d(quartic2_tensor(1, 1, -1, 1, 1), true));
    CHECK(sufficient_2d(quartic2_tensor(1, -1, 1, -1, 1), false));
    CHECK_FALSE(sufficient_2d(quartic2_tensor(1, 1, Rational(-101, 100), 1, 1), true));
    // soundness: when the sufficient test fires, the oracle agrees
    Rng rng(301);
    int fired = 0;
    for (int it = 0; it < 300; ++it) {
        SymTensor4 t = quartic2_tensor(Rational(rng.integer(1, 4)), Rational(rng.integer(-3, 3)),
                                       Rational(rng.integer(-3, 3)), Rational(rng.integer(-3, 3)),
                                       Rational(rng.integer(1, 4)));
        bool strict_ok = sufficient_2d(t, true);
        bool cop_ok = sufficient_2d(t, false);
        if (!strict_ok && !cop_ok) continue;
        ++fired;
        OracleParams params = OracleParams::defaults_for_dim(2);
        params.denominator = 10000;
        params.refine = false;
        OracleReport rep = min_on_simplex(t, params);
        REQUIRE(rep.exact_min.has_value());
        if (strict_ok)
            CHECK(*rep.exact_min > 0);
        else
            CHECK(*rep.exact_min >= 0);
    }
    CHECK(fired > 10);
}

TEST_CASE("verdicts are invariant under positive diagonal rescaling") {
    Rng rng(302);
    for (int it = 0; it < 100; ++it) {
        Rational a(rng.integer(-3, 3)), b(rng.integer(-3, 3)), c(rng.integer(-3, 3));
        SymTensor4 t = quartic2_tensor(1, a, b, c, 1);
        // x1 -> 2 x1, x2 -> 3 x2 rescaling of the form
        SymTensor4 s = quartic2_tensor(16, a * 8 * 3, b * 4 * 9, c * 2 * 27, 81);
        CHECK(copositive_quartic_2d(t) == copositive_quartic_2d(s));
    }
}

TEST_CASE("cubic criterion examples") {
    CHECK(copositive_cubic_2d(Cubic2::from_exact(1, 0, 0, 1), true) ==
          Verdict::StrictlyCopositive);

    Cubic2 bad = Cubic2::from_exact(1, -1, -1, 1);
    CHECK(copositive_cubic_2d(bad, false) == Verdict::NotCopositive);
    CHECK(bad.evaluate(1, 1) == doctest::Approx(-4.0));

    CHECK(copositive_cubic_2d(Cubic2::from_exact(1, 1, 1, 1), true) ==
          Verdict::StrictlyCopositive);
}

TEST_CASE("cubic criterion agrees with a grid oracle on random draws") {
    Rng rng(303);
    for (int it = 0; it < 1000; ++it) {
        Cubic2 t;
        t.t111 = rng.uniform(-2, 2);
        t.t112 = rng.uniform(-2, 2);
        t.t122 = rng.uniform(-2, 2);
        t.t222 = rng.uniform(-2, 2);
        Verdict v = copositive_cubic_2d(t, false);
        if (v == Verdict::Unknown) continue;
        double g = cubic_grid_min(t, 4000);
        if (is_copositive(v))
            CHECK(g >= -1e-6);
        else
            CHECK(g < 1e-4);
    }
}
