#include "matrix_cop.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace coposit;
using coposit::test::Rng;

namespace {

SymMatrix pm1_matrix(int n, const std::vector<int>& offdiag) {
    std::vector<std::pair<Index2, Rational>> raw;
    int q = 0;
    for (int i = 1; i <= n; ++i) {
        raw.push_back({{i, i}, 1});
        for (int j = i + 1; j <= n; ++j) raw.push_back({{i, j}, offdiag[q++]});
    }
    return SymMatrix::build(n, raw);
}

SymMatrix m3(double m11, double m22, double m33, double m12, double m13, double m23) {
    return SymMatrix::from_values(3, std::vector<double>{m11, m12, m13, m22, m23, m33});
}

SymMatrix m3_exact(int m11, int m22, int m33, int m12, int m13, int m23) {
    return SymMatrix::build(3, {{{1, 1}, m11}, {{2, 2}, m22}, {{3, 3}, m33},
                                {{1, 2}, m12}, {{1, 3}, m13}, {{2, 3}, m23}});
}

}  // namespace

TEST_CASE("baston classifies +-1 matrices by all-(-1) triangles") {
    MatrixVerdict v = baston_pm1(pm1_matrix(3, {-1, -1, -1}));
    CHECK(v.verdict == Verdict::NotCopositive);
    REQUIRE(v.violating_triple.has_value());
    CHECK(*v.violating_triple == std::array<int, 3>{1, 2, 3});
    // cross-check the certificate numerically
    CHECK(pm1_matrix(3, {-1, -1, -1}).evaluate(std::vector<double>{1, 1, 1}) ==
          doctest::Approx(-3.0));

    CHECK(baston_pm1(pm1_matrix(3, {1, 1, 1})).verdict == Verdict::Copositive);

    // n=4: m12=m34=-1, others +1; pairs order: 12,13,14,23,24,34
    MatrixVerdict v4 = baston_pm1(pm1_matrix(4, {-1, 1, 1, 1, 1, -1}));
    CHECK(v4.verdict == Verdict::Copositive);

    CHECK_THROWS_AS(baston_pm1(m3(1, 1, 1, 0, 1, 1)), std::invalid_argument);
}

TEST_CASE("baston strictness is never claimed") {
    for (unsigned bits = 0; bits < 8; ++bits) {
        std::vector<int> off = {bits & 1 ? -1 : 1, bits & 2 ? -1 : 1, bits & 4 ? -1 : 1};
        MatrixVerdict v = baston_pm1(pm1_matrix(3, off));
        CHECK(v.verdict != Verdict::StrictlyCopositive);
    }
}

TEST_CASE("2x2 criterion") {
    SymMatrix boundary = SymMatrix::build(2, {{{1, 1}, 1}, {{2, 2}, 1}, {{1, 2}, -1}});
    MatrixVerdict v = copositive_2x2(boundary, false);
    CHECK(v.verdict == Verdict::Copositive);  // (x1-x2)^2: copositive, not strictly
    CHECK(v.certificate == "alpha");

    SymMatrix ones = SymMatrix::build(2, {{{1, 1}, 1}, {{2, 2}, 1}, {{1, 2}, 1}});
    CHECK(copositive_2x2(ones, true).verdict == Verdict::StrictlyCopositive);

    SymMatrix bad = SymMatrix::build(2, {{{1, 1}, 1}, {{2, 2}, 1}, {{1, 2}, -2}});
    MatrixVerdict nv = copositive_2x2(bad, false);
    CHECK(nv.verdict == Verdict::NotCopositive);
    CHECK(nv.certificate == "alpha");
    CHECK(bad.evaluate(std::vector<double>{1, 1}) == doctest::Approx(-2.0));
}

TEST_CASE("3x3 criterion on the paper cases") {
    MatrixVerdict id = copositive_3x3(m3_exact(1, 1, 1, 0, 0, 0), true);
    CHECK(id.verdict == Verdict::StrictlyCopositive);

    MatrixVerdict allneg = copositive_3x3(m3_exact(1, 1, 1, -1, -1, -1), false);
    CHECK(allneg.verdict == Verdict::NotCopositive);
    CHECK(allneg.certificate == "final");

    MatrixVerdict boundary = copositive_3x3(m3_exact(1, 1, 1, 1, 1, -1), false);
    CHECK(boundary.verdict == Verdict::Copositive);
    CHECK(boundary.certificate == "gamma");

    MatrixVerdict negdiag = copositive_3x3(m3_exact(-1, 1, 1, 0, 0, 0), false);
    CHECK(negdiag.verdict == Verdict::NotCopositive);
    CHECK(negdiag.certificate == "m11");
}

TEST_CASE("3x3 agrees with the simplex grid oracle on random matrices") {
    Rng rng(201);
    int unknowns = 0;
    for (int it = 0; it < 300; ++it) {
        SymMatrix m = m3(rng.uniform(0, 2), rng.uniform(0, 2), rng.uniform(0, 2),
                         rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2));
        MatrixVerdict v = copositive_3x3(m, false);
        if (v.verdict == Verdict::Unknown) {
            ++unknowns;
            continue;
        }
        QuadraticGridReport g = min_quadratic_on_simplex(m, 400);
        if (is_copositive(v.verdict))
            CHECK(g.min_value >= -1e-7);
        else
            CHECK(g.min_value < 1e-7);
    }
    CHECK(unknowns <= 3);
}

TEST_CASE("baston agrees with the grid oracle on all 64 four-dimensional patterns") {
    for (unsigned bits = 0; bits < 64; ++bits) {
        std::vector<int> off;
        for (int b = 0; b < 6; ++b) off.push_back(bits & (1u << b) ? -1 : 1);
        SymMatrix m = pm1_matrix(4, off);
        bool analytic = baston_pm1(m).verdict == Verdict::Copositive;
        QuadraticGridReport g = min_quadratic_on_simplex(m, 200);
        REQUIRE(g.exact_min.has_value());
        bool oracle = *g.exact_min >= 0;
        CHECK(analytic == oracle);
    }
}

TEST_CASE("3x3 restricted to a zero third row/column matches the 2x2 test") {
    Rng rng(202);
    for (int it = 0; it < 200; ++it) {
        double m11 = rng.uniform(0, 2), m22 = rng.uniform(0, 2), m12 = rng.uniform(-2, 2);
        SymMatrix two = SymMatrix::from_values(2, std::vector<double>{m11, m12, m22});
        SymMatrix three = m3(m11, m22, 0, m12, 0, 0);
        CHECK(is_copositive(copositive_2x2(two, false).verdict) ==
              is_copositive(copositive_3x3(three, false).verdict));
    }
}
