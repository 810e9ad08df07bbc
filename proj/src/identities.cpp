#include "identities.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace coposit {

namespace {

constexpr std::array<InequalityId, 14> kAllIds = {
    InequalityId::T312_i,  InequalityId::T312_ii, InequalityId::T312_iii, InequalityId::T312_iv,
    InequalityId::T312_v,  InequalityId::T312_vi, InequalityId::T312_vii, InequalityId::T313_a,
    InequalityId::T313_b,  InequalityId::T313_c,  InequalityId::T313_d,   InequalityId::T314_e,
    InequalityId::T314_f,  InequalityId::T314_g,
};

// Integer polynomial over the 15 canonical quartic monomials, coefficients
// stored in canonical (per-entry) normalization: the x1^a x2^b x3^c
// coefficient equals value * multiplicity.
struct Poly15 {
    std::array<int, 15> c{};

    static int position_of_exponents(int e1, int e2, int e3) {
        Index4 key{};
        int q = 0;
        for (int i = 0; i < e1; ++i) key[q++] = 1;
        for (int i = 0; i < e2; ++i) key[q++] = 2;
        for (int i = 0; i < e3; ++i) key[q++] = 3;
        return SymTensor4::key_position(3, key);
    }

    // adds coeff * x1^e1 x2^e2 x3^e3 (monomial coefficient, not canonical)
    Poly15& add_term(int coeff, int e1, int e2, int e3) {
        int pos = position_of_exponents(e1, e2, e3);
        Index4 key{};
        int q = 0;
        for (int i = 0; i < e1; ++i) key[q++] = 1;
        for (int i = 0; i < e2; ++i) key[q++] = 2;
        for (int i = 0; i < e3; ++i) key[q++] = 3;
        int mult = SymTensor4::multiplicity(key);
        if (coeff % mult != 0) throw std::logic_error("non-integral canonical coefficient");
        c[pos] += coeff / mult;
        return *this;
    }

    // (s1 x1 + s2 x2 + s3 x3)^4 with s in {-1, +1}
    static Poly15 signed_sum_pow4(int s1, int s2, int s3) {
        Poly15 p;
        auto table = SymTensor4::keys(3);
        const int s[3] = {s1, s2, s3};
        for (int pos = 0; pos < 15; ++pos) {
            int v = 1;
            for (int q = 0; q < 4; ++q) v *= s[table[pos][q] - 1];
            p.c[pos] = v;
        }
        return p;
    }
};

struct Spec {
    const char* tag;
    std::array<int, 15> expanded;
    Poly15 (*compact)();
    std::vector<LocusLine> locus;  // empty for the strict ones
};

Poly15 compact_312_i() {
    return Poly15::signed_sum_pow4(1, 1, 1)
        .add_term(-24, 2, 1, 1).add_term(-24, 1, 2, 1).add_term(-24, 1, 1, 2);
}
Poly15 compact_312_ii() {
    return Poly15::signed_sum_pow4(1, 1, 1)
        .add_term(-12, 2, 2, 0).add_term(-12, 2, 0, 2).add_term(-12, 0, 2, 2)
        .add_term(-24, 2, 1, 1);
}
Poly15 compact_312_iii() {
    return Poly15::signed_sum_pow4(1, 1, 1)
        .add_term(-12, 2, 2, 0).add_term(-12, 2, 0, 2).add_term(-12, 0, 2, 2)
        .add_term(-24, 1, 1, 2);
}
Poly15 compact_312_iv() {
    return Poly15::signed_sum_pow4(1, 1, 1)
        .add_term(-12, 2, 2, 0).add_term(-12, 2, 0, 2).add_term(-12, 0, 2, 2)
        .add_term(-24, 1, 2, 1);
}
Poly15 compact_312_v() {
    return Poly15::signed_sum_pow4(1, -1, 1)
        .add_term(-12, 2, 2, 0).add_term(-12, 0, 2, 2)
        .add_term(8, 3, 1, 0).add_term(8, 1, 3, 0).add_term(8, 0, 3, 1).add_term(8, 0, 1, 3);
}
Poly15 compact_312_vi() {
    return Poly15::signed_sum_pow4(-1, 1, 1)
        .add_term(-12, 2, 0, 2).add_term(-12, 2, 2, 0)
        .add_term(8, 3, 1, 0).add_term(8, 3, 0, 1).add_term(8, 1, 3, 0).add_term(8, 1, 0, 3);
}
Poly15 compact_312_vii() {
    return Poly15::signed_sum_pow4(1, 1, -1)
        .add_term(-12, 2, 0, 2).add_term(-12, 0, 2, 2)
        .add_term(8, 3, 0, 1).add_term(8, 0, 3, 1).add_term(8, 1, 0, 3).add_term(8, 0, 1, 3);
}
Poly15 compact_313_a() {
    return Poly15::signed_sum_pow4(1, 1, 1)
        .add_term(-8, 3, 0, 1).add_term(-8, 1, 3, 0).add_term(-8, 0, 3, 1)
        .add_term(-8, 0, 1, 3).add_term(-8, 3, 1, 0).add_term(-8, 1, 0, 3);
}
Poly15 compact_313_b() {
    return Poly15::signed_sum_pow4(1, 1, -1).add_term(-8, 3, 1, 0).add_term(24, 2, 1, 1);
}
Poly15 compact_313_c() {
    return Poly15::signed_sum_pow4(1, -1, 1).add_term(-8, 1, 0, 3).add_term(24, 1, 1, 2);
}
Poly15 compact_313_d() {
    return Poly15::signed_sum_pow4(-1, 1, 1).add_term(-8, 0, 3, 1).add_term(24, 1, 2, 1);
}
Poly15 compact_314_e() {
    return Poly15::signed_sum_pow4(1, 1, -1).add_term(-8, 1, 3, 0).add_term(8, 0, 3, 1);
}
Poly15 compact_314_f() {
    return Poly15::signed_sum_pow4(-1, 1, 1).add_term(-8, 0, 1, 3).add_term(8, 1, 0, 3);
}
Poly15 compact_314_g() {
    return Poly15::signed_sum_pow4(1, -1, 1).add_term(-8, 1, 0, 3).add_term(8, 0, 1, 3);
}

const Spec& spec_for(InequalityId id) {
    static const std::array<Spec, 14> specs = {{
        {"T312_i", {1, 1, 1, 1, -1, 1, 1, -1, -1, 1, 1, 1, 1, 1, 1}, compact_312_i, {}},
        {"T312_ii", {1, 1, 1, -1, -1, -1, 1, 1, 1, 1, 1, 1, -1, 1, 1}, compact_312_ii, {}},
        {"T312_iii", {1, 1, 1, -1, 1, -1, 1, 1, -1, 1, 1, 1, -1, 1, 1}, compact_312_iii, {}},
        {"T312_iv", {1, 1, 1, -1, 1, -1, 1, -1, 1, 1, 1, 1, -1, 1, 1}, compact_312_iv, {}},
        {"T312_v", {1, 1, 1, -1, -1, 1, 1, 1, -1, 1, 1, 1, -1, 1, 1}, compact_312_v, {}},
        {"T312_vi", {1, 1, 1, -1, 1, -1, 1, -1, -1, 1, 1, 1, 1, 1, 1}, compact_312_vi, {}},
        {"T312_vii", {1, 1, 1, 1, -1, -1, 1, -1, 1, 1, 1, 1, -1, 1, 1}, compact_312_vii, {}},
        {"T313_a", {1, -1, -1, 1, 1, 1, -1, 1, 1, -1, 1, -1, 1, -1, 1}, compact_313_a,
         {LocusLine::X3ZeroX1EqX2, LocusLine::X2ZeroX1EqX3, LocusLine::X1ZeroX2EqX3}},
        {"T313_b", {1, -1, -1, 1, 1, 1, 1, -1, 1, -1, 1, -1, 1, -1, 1}, compact_313_b,
         {LocusLine::X1ZeroX2EqX3, LocusLine::X2ZeroX1EqX3}},
        {"T313_c", {1, -1, 1, 1, -1, 1, -1, 1, 1, -1, 1, -1, 1, -1, 1}, compact_313_c,
         {LocusLine::X3ZeroX1EqX2, LocusLine::X1ZeroX2EqX3}},
        {"T313_d", {1, -1, -1, 1, 1, 1, -1, 1, -1, -1, 1, -1, 1, 1, 1}, compact_313_d,
         {LocusLine::X3ZeroX1EqX2, LocusLine::X2ZeroX1EqX3}},
        {"T314_e", {1, 1, -1, 1, -1, 1, -1, -1, 1, -1, 1, 1, 1, -1, 1}, compact_314_e,
         {LocusLine::X2ZeroX1EqX3}},
        {"T314_f", {1, -1, -1, 1, 1, 1, -1, -1, -1, 1, 1, 1, 1, -1, 1}, compact_314_f,
         {LocusLine::X3ZeroX1EqX2}},
        {"T314_g", {1, -1, 1, 1, -1, 1, -1, 1, -1, -1, 1, -1, 1, 1, 1}, compact_314_g,
         {LocusLine::X3ZeroX1EqX2}},
    }};
    return specs[static_cast<size_t>(id)];
}

double eval_coeffs(const std::array<int, 15>& c, std::span<const double> x) {
    auto table = SymTensor4::keys(3);
    double acc = 0.0;
    for (int p = 0; p < 15; ++p) {
        const Index4& k = table[p];
        acc += c[p] * SymTensor4::multiplicity(k) * x[k[0] - 1] * x[k[1] - 1] * x[k[2] - 1] *
               x[k[3] - 1];
    }
    return acc;
}

void check_nonnegative(std::span<const double> x) {
    if (x.size() != 3) throw std::invalid_argument("expected 3 coordinates");
    for (double v : x)
        if (v < 0) throw std::invalid_argument("negative coordinate");
}

double uniform01(std::mt19937_64& g) {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

}  // namespace

std::span<const InequalityId> all_inequality_ids() { return kAllIds; }

std::string tag_name(InequalityId id) { return spec_for(id).tag; }

bool is_strict_inequality(InequalityId id) { return spec_for(id).locus.empty(); }

std::array<int, 15> expanded_coefficients(InequalityId id) { return spec_for(id).expanded; }

std::array<int, 15> compact_coefficients(InequalityId id) { return spec_for(id).compact().c; }

double residual(InequalityId id, std::span<const double> x) {
    check_nonnegative(x);
    return eval_coeffs(spec_for(id).expanded, x);
}

Rational residual_exact(InequalityId id, std::span<const Rational> x) {
    if (x.size() != 3) throw std::invalid_argument("expected 3 coordinates");
    for (const auto& v : x)
        if (v < 0) throw std::invalid_argument("negative coordinate");
    return residual_tensor(id).evaluate_exact(x);
}

std::pair<double, double> expanded_equals_compact(InequalityId id, std::span<const double> x) {
    if (x.size() != 3) throw std::invalid_argument("expected 3 coordinates");
    return {eval_coeffs(spec_for(id).expanded, x), eval_coeffs(spec_for(id).compact().c, x)};
}

std::vector<LocusLine> equality_locus(InequalityId id) {
    const auto& locus = spec_for(id).locus;
    if (locus.empty()) throw std::invalid_argument(tag_name(id) + " has no stated equality case");
    return locus;
}

std::array<Rational, 3> locus_point(LocusLine line, const Rational& t) {
    switch (line) {
        case LocusLine::X3ZeroX1EqX2: return {t, t, Rational(0)};
        case LocusLine::X2ZeroX1EqX3: return {t, Rational(0), t};
        case LocusLine::X1ZeroX2EqX3: return {Rational(0), t, t};
    }
    throw std::logic_error("bad locus line");
}

std::array<double, 3> locus_simplex_point(LocusLine line) {
    switch (line) {
        case LocusLine::X3ZeroX1EqX2: return {0.5, 0.5, 0.0};
        case LocusLine::X2ZeroX1EqX3: return {0.5, 0.0, 0.5};
        case LocusLine::X1ZeroX2EqX3: return {0.0, 0.5, 0.5};
    }
    throw std::logic_error("bad locus line");
}

SymTensor4 residual_tensor(InequalityId id) {
    std::array<Rational, 15> exact{};
    auto c = spec_for(id).expanded;
    for (int p = 0; p < 15; ++p) exact[p] = c[p];
    return SymTensor4::from_exact(3, exact);
}

bool equality_locus_check(InequalityId id, int samples, unsigned long long seed) {
    auto locus = equality_locus(id);

    for (LocusLine line : locus) {
        for (int q = 1; q <= 100; ++q) {
            auto pt = locus_point(line, Rational(q, 100));
            if (residual_exact(id, pt) != 0) return false;
        }
    }

    std::mt19937_64 gen(seed);
    std::vector<std::array<double, 3>> anchors;
    for (LocusLine line : locus) anchors.push_back(locus_simplex_point(line));

    int accepted = 0;
    while (accepted < samples) {
        double u = uniform01(gen), v = uniform01(gen);
        if (u > v) std::swap(u, v);
        std::array<double, 3> x = {u, v - u, 1.0 - v};
        bool away = true;
        for (const auto& a : anchors) {
            double dist = 0.0;
            for (int i = 0; i < 3; ++i) dist = std::max(dist, std::abs(x[i] - a[i]));
            away = away && dist >= 1e-2;
        }
        if (!away) continue;
        ++accepted;
        if (residual(id, x) <= 0.0) return false;
    }
    return true;
}

}  // namespace coposit
