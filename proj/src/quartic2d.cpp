#include "quartic2d.hpp"

#include <cmath>
#include <stdexcept>

namespace coposit {

namespace {

enum class Tri { False_, True_, Border };

Tri tri_and(Tri x, Tri y) {
    if (x == Tri::False_ || y == Tri::False_) return Tri::False_;
    if (x == Tri::Border || y == Tri::Border) return Tri::Border;
    return Tri::True_;
}

Tri tri_or(Tri x, Tri y) {
    if (x == Tri::True_ || y == Tri::True_) return Tri::True_;
    if (x == Tri::Border || y == Tri::Border) return Tri::Border;
    return Tri::False_;
}

Tri from_bool(bool b) { return b ? Tri::True_ : Tri::False_; }

// float comparisons against 0 cannot separate > from >= inside the band
Tri ge0(double v) {
    Sign s = sign_with_band(v);
    if (s == Sign::Positive) return Tri::True_;
    if (s == Sign::Negative) return Tri::False_;
    return Tri::Border;
}
Tri gt0(double v) { return ge0(v); }

struct BranchEval {
    Tri b1, b2, b3;
};

BranchEval eval_branches_exact(const Rational& a, const Rational& b, const Rational& c) {
    BranchEval r;
    r.b2 = from_bool(a >= 0 && c >= 0 && 1 + 3 * b >= 0);
    Rational dp = discriminant_delta_prime_exact(a, b, c);
    r.b1 = from_bool(dp <= 0 && a + c > 0);
    bool amp = 6 * b + 2 >= 0 && (a - c) * (a - c) <= 6 * b + 2;
    bool tail = (-1 <= 3 * b && 3 * b <= 3) ||
                (b > 1 && (a + c >= 0 || (a + c) * (a + c) <= 6 * b - 2));
    r.b3 = from_bool(dp >= 0 && amp && tail);
    return r;
}

BranchEval eval_branches_float(double a, double b, double c) {
    BranchEval r;
    r.b2 = tri_and(tri_and(ge0(a), ge0(c)), ge0(1 + 3 * b));
    double dp = discriminant_delta_prime(Quartic2{a, b, c, std::nullopt});
    // relative band for the degree-6 discriminant
    double scale = std::max(1.0, std::pow(std::max({std::abs(a), std::abs(b), std::abs(c)}), 6.0));
    Sign dps = sign_with_band(dp, kComparisonBand * scale);
    Tri dp_le0 = dps == Sign::Negative ? Tri::True_
                                       : (dps == Sign::Positive ? Tri::False_ : Tri::Border);
    Tri dp_ge0 = dps == Sign::Positive ? Tri::True_
                                       : (dps == Sign::Negative ? Tri::False_ : Tri::Border);
    r.b1 = tri_and(dp_le0, gt0(a + c));
    Tri amp = 6 * b + 2 < 0 ? Tri::False_ : ge0(6 * b + 2 - (a - c) * (a - c));
    Tri tail = tri_or(tri_and(ge0(3 * b + 1), ge0(3 - 3 * b)),
                      tri_and(gt0(b - 1), 6 * b - 2 < 0 ? ge0(a + c)
                                                        : tri_or(ge0(a + c),
                                                                 ge0(6 * b - 2 - (a + c) * (a + c)))));
    r.b3 = tri_and(tri_and(dp_ge0, amp), tail);
    return r;
}

}  // namespace

Quartic2 Quartic2::from_exact(const Rational& a, const Rational& b, const Rational& c) {
    Quartic2 q;
    q.exact = {a, b, c};
    q.a = to_double(a);
    q.b = to_double(b);
    q.c = to_double(c);
    return q;
}

Quartic2 Quartic2::from_normalized_tensor(const SymTensor4& t) {
    if (t.dim() != 2) throw std::invalid_argument("expected a dim-2 tensor");
    Quartic2 q;
    q.a = t.entry(1, 1, 1, 2);
    q.b = t.entry(1, 1, 2, 2);
    q.c = t.entry(1, 2, 2, 2);
    if (t.has_exact())
        q.exact = {t.exact_entry(1, 1, 1, 2), t.exact_entry(1, 1, 2, 2),
                   t.exact_entry(1, 2, 2, 2)};
    return q;
}

double Quartic2::evaluate(double x1, double x2) const {
    return x1 * x1 * x1 * x1 + 4 * a * x1 * x1 * x1 * x2 + 6 * b * x1 * x1 * x2 * x2 +
           4 * c * x1 * x2 * x2 * x2 + x2 * x2 * x2 * x2;
}

double discriminant_delta_prime(const Quartic2& q) {
    double a = q.a, b = q.b, c = q.c;
    double p = 1 - 4 * a * c + 3 * b * b;
    double s = b + 2 * a * b * c - b * b * b - c * c - a * a;
    return p * p * p - 27 * s * s;
}

Rational discriminant_delta_prime_exact(const Rational& a, const Rational& b, const Rational& c) {
    Rational p = 1 - 4 * a * c + 3 * b * b;
    Rational s = b + 2 * a * b * c - b * b * b - c * c - a * a;
    return p * p * p - 27 * s * s;
}

Quartic2Result copositive_quartic_2d_normalized_detail(const Quartic2& q) {
    BranchEval e = q.exact ? eval_branches_exact((*q.exact)[0], (*q.exact)[1], (*q.exact)[2])
                           : eval_branches_float(q.a, q.b, q.c);
    // cheapest/root-free branch first
    if (e.b2 == Tri::True_) return {Verdict::Copositive, 2};
    if (e.b1 == Tri::True_) return {Verdict::Copositive, 1};
    if (e.b3 == Tri::True_) return {Verdict::Copositive, 3};
    if (e.b1 == Tri::Border || e.b2 == Tri::Border || e.b3 == Tri::Border)
        return {Verdict::Unknown, 0};
    return {Verdict::NotCopositive, 0};
}

Verdict copositive_quartic_2d_normalized(const Quartic2& q) {
    return copositive_quartic_2d_normalized_detail(q).verdict;
}

Verdict copositive_quartic_2d(const SymTensor4& t) {
    if (t.dim() != 2) throw std::invalid_argument("expected a dim-2 tensor");
    if (!t.diagonal_positive()) throw std::domain_error("diagonal entries must be positive");
    return copositive_quartic_2d_normalized(Quartic2::from_normalized_tensor(t.normalize_diagonal()));
}

bool copositive_pm1_2d(int a, int b, int c) {
    auto pm1 = [](int v) { return v == 1 || v == -1; };
    if (!pm1(a) || !pm1(b) || !pm1(c))
        throw std::invalid_argument("copositive_pm1_2d requires +-1 coefficients");
    return b == 1 || (a == 1 && c == 1);
}

bool sufficient_2d(const SymTensor4& t, bool strict) {
    if (t.dim() != 2) throw std::invalid_argument("expected a dim-2 tensor");
    if (!t.diagonal_positive()) throw std::domain_error("diagonal entries must be positive");

    if (t.has_exact()) {
        Rational d1 = t.exact_entry(1, 1, 1, 1), d2 = t.exact_entry(2, 2, 2, 2);
        Rational a = t.exact_entry(1, 1, 1, 2), b = t.exact_entry(1, 1, 2, 2),
                 c = t.exact_entry(1, 2, 2, 2);
        // x >= (d1^p d2^q)^(1/4) and x >= -(d1^p d2^q)^(1/4), decided via 4th powers
        auto ge_pos_root = [](const Rational& x, const Rational& rad4) {
            return x >= 0 && x * x * x * x >= rad4;
        };
        auto ge_neg_root = [](const Rational& x, const Rational& rad4) {
            return x >= 0 || x * x * x * x <= rad4;
        };
        if (strict)
            return ge_pos_root(a, d1 * d1 * d1 * d2) && ge_neg_root(b, d1 * d1 * d2 * d2) &&
                   ge_pos_root(c, d1 * d2 * d2 * d2);
        return ge_neg_root(a, d1 * d1 * d1 * d2) && ge_pos_root(b, d1 * d1 * d2 * d2) &&
               ge_neg_root(c, d1 * d2 * d2 * d2);
    }

    double d1 = t.entry(1, 1, 1, 1), d2 = t.entry(2, 2, 2, 2);
    double a = t.entry(1, 1, 1, 2), b = t.entry(1, 1, 2, 2), c = t.entry(1, 2, 2, 2);
    double ba = std::pow(d1, 0.75) * std::pow(d2, 0.25);
    double bb = std::sqrt(d1 * d2);
    double bc = std::pow(d1, 0.25) * std::pow(d2, 0.75);
    auto ge = [](double x, double bound) { return ge0(x - bound) == Tri::True_; };
    if (strict) return ge(a, ba) && ge(b, -bb) && ge(c, bc);
    return ge(a, -ba) && ge(b, bb) && ge(c, -bc);
}

Verdict copositive_cubic_2d(const Cubic2& t, bool strict) {
    Tri cop, strict_ok;
    if (t.exact) {
        Rational t111 = (*t.exact)[0], t112 = (*t.exact)[1], t122 = (*t.exact)[2],
                 t222 = (*t.exact)[3];
        Rational e = 4 * t111 * t122 * t122 * t122 + 4 * t112 * t112 * t112 * t222 +
                     t111 * t111 * t222 * t222 - 6 * t111 * t112 * t122 * t222 -
                     3 * t112 * t112 * t122 * t122;
        bool branch = t112 >= 0 && t122 >= 0;
        cop = from_bool(t111 >= 0 && t222 >= 0 && (branch || e >= 0));
        strict_ok = from_bool(t111 > 0 && t222 > 0 && (branch || e > 0));
    } else {
        double e = 4 * t.t111 * t.t122 * t.t122 * t.t122 + 4 * t.t112 * t.t112 * t.t112 * t.t222 +
                   t.t111 * t.t111 * t.t222 * t.t222 - 6 * t.t111 * t.t112 * t.t122 * t.t222 -
                   3 * t.t112 * t.t112 * t.t122 * t.t122;
        Tri branch = tri_and(ge0(t.t112), ge0(t.t122));
        cop = tri_and(tri_and(ge0(t.t111), ge0(t.t222)), tri_or(branch, ge0(e)));
        strict_ok = tri_and(tri_and(gt0(t.t111), gt0(t.t222)), tri_or(branch, gt0(e)));
    }
    if (strict && strict_ok == Tri::True_) return Verdict::StrictlyCopositive;
    if (cop == Tri::True_)
        return strict_ok == Tri::True_ ? Verdict::StrictlyCopositive : Verdict::Copositive;
    if (cop == Tri::Border) return Verdict::Unknown;
    return Verdict::NotCopositive;
}

}  // namespace coposit
