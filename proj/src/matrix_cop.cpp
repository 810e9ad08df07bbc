#include "matrix_cop.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace coposit {

namespace {

std::optional<Rational> exact_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    auto n = exact_kth_root(numerator(r), 2);
    auto d = exact_kth_root(denominator(r), 2);
    if (!n || !d) return std::nullopt;
    return Rational(*n, *d);
}

Sign sign_of_rational(const Rational& v) {
    if (v > 0) return Sign::Positive;
    if (v < 0) return Sign::Negative;
    return Sign::Zero;
}

// Sign of a + sqrt(p), p >= 0, decided exactly.
Sign sign_a_plus_sqrt(const Rational& a, const Rational& p) {
    if (a >= 0) return (a == 0 && p == 0) ? Sign::Zero : Sign::Positive;
    Rational a2 = a * a;
    if (a2 < p) return Sign::Positive;
    if (a2 == p) return Sign::Zero;
    return Sign::Negative;
}

struct Cond {
    std::string name;
    Sign sign;
};

MatrixVerdict assemble(const std::vector<Cond>& conds) {
    MatrixVerdict out;
    for (const auto& c : conds) {
        if (c.sign == Sign::Negative) {
            out.verdict = Verdict::NotCopositive;
            out.certificate = c.name;
            return out;
        }
    }
    for (const auto& c : conds) {
        if (c.sign == Sign::Borderline) {
            out.verdict = Verdict::Unknown;
            out.certificate = c.name;
            return out;
        }
    }
    for (const auto& c : conds) {
        if (c.sign == Sign::Zero) {
            out.verdict = Verdict::Copositive;  // copositive, not strictly
            out.certificate = c.name;
            return out;
        }
    }
    out.verdict = Verdict::StrictlyCopositive;
    return out;
}

}  // namespace

MatrixVerdict baston_pm1(const SymMatrix& m) {
    if (!m.is_pm1_unit_diagonal())
        throw std::invalid_argument("baston_pm1 requires |m_ij| = m_ii = 1");
    const int n = m.dim();
    for (int r = 1; r <= n; ++r)
        for (int s = r + 1; s <= n; ++s)
            for (int t = s + 1; t <= n; ++t)
                if (m.entry(r, s) == -1.0 && m.entry(r, t) == -1.0 && m.entry(s, t) == -1.0) {
                    MatrixVerdict out;
                    out.verdict = Verdict::NotCopositive;
                    out.violating_triple = {{r, s, t}};
                    out.certificate = "triple (" + std::to_string(r) + "," + std::to_string(s) +
                                      "," + std::to_string(t) + ")";
                    return out;
                }
    MatrixVerdict out;
    out.verdict = Verdict::Copositive;  // strictness undetermined by this criterion
    return out;
}

MatrixVerdict copositive_2x2(const SymMatrix& m, bool /*strict*/) {
    if (m.dim() != 2) throw std::invalid_argument("copositive_2x2 requires dim 2");
    std::vector<Cond> conds;
    if (m.has_exact()) {
        Rational m11 = m.exact_entry(1, 1), m22 = m.exact_entry(2, 2), m12 = m.exact_entry(1, 2);
        conds.push_back({"m11", sign_of_rational(m11)});
        conds.push_back({"m22", sign_of_rational(m22)});
        if (m11 >= 0 && m22 >= 0)
            conds.push_back({"alpha", sign_a_plus_sqrt(m12, m11 * m22)});
    } else {
        double m11 = m.entry(1, 1), m22 = m.entry(2, 2), m12 = m.entry(1, 2);
        conds.push_back({"m11", sign_with_band(m11)});
        conds.push_back({"m22", sign_with_band(m22)});
        if (m11 >= 0 && m22 >= 0)
            conds.push_back({"alpha", sign_with_band(m12 + std::sqrt(m11 * m22))});
    }
    return assemble(conds);
}

MatrixVerdict copositive_3x3(const SymMatrix& m, bool /*strict*/) {
    if (m.dim() != 3) throw std::invalid_argument("copositive_3x3 requires dim 3");
    std::vector<Cond> conds;

    if (m.has_exact()) {
        Rational m11 = m.exact_entry(1, 1), m22 = m.exact_entry(2, 2), m33 = m.exact_entry(3, 3);
        Rational m12 = m.exact_entry(1, 2), m13 = m.exact_entry(1, 3), m23 = m.exact_entry(2, 3);
        conds.push_back({"m11", sign_of_rational(m11)});
        conds.push_back({"m22", sign_of_rational(m22)});
        conds.push_back({"m33", sign_of_rational(m33)});
        if (m11 < 0 || m22 < 0 || m33 < 0) return assemble(conds);

        conds.push_back({"alpha", sign_a_plus_sqrt(m12, m11 * m22)});
        conds.push_back({"beta", sign_a_plus_sqrt(m13, m11 * m33)});
        conds.push_back({"gamma", sign_a_plus_sqrt(m23, m33 * m22)});
        for (const auto& c : conds)
            if (c.sign == Sign::Negative) return assemble(conds);

        // final expression; exact when every radical is rational
        auto r11 = exact_sqrt(m11), r22 = exact_sqrt(m22), r33 = exact_sqrt(m33);
        if (r11 && r22 && r33) {
            Rational alpha = m12 + *r11 * *r22;
            Rational beta = m13 + *r11 * *r33;
            Rational gamma = m23 + *r33 * *r22;
            auto tail = exact_sqrt(2 * alpha * beta * gamma);
            if (tail) {
                Rational e = m12 * *r33 + m13 * *r22 + m23 * *r11 + *r11 * *r22 * *r33 + *tail;
                conds.push_back({"final", sign_of_rational(e)});
                return assemble(conds);
            }
        }
        double alpha = to_double(m12) + std::sqrt(to_double(m11 * m22));
        double beta = to_double(m13) + std::sqrt(to_double(m11 * m33));
        double gamma = to_double(m23) + std::sqrt(to_double(m33 * m22));
        double e = to_double(m12) * std::sqrt(to_double(m33)) +
                   to_double(m13) * std::sqrt(to_double(m22)) +
                   to_double(m23) * std::sqrt(to_double(m11)) +
                   std::sqrt(to_double(m11 * m22 * m33)) +
                   std::sqrt(std::max(0.0, 2 * alpha * beta * gamma));
        conds.push_back({"final", sign_with_band(e)});
        return assemble(conds);
    }

    double m11 = m.entry(1, 1), m22 = m.entry(2, 2), m33 = m.entry(3, 3);
    double m12 = m.entry(1, 2), m13 = m.entry(1, 3), m23 = m.entry(2, 3);
    conds.push_back({"m11", sign_with_band(m11)});
    conds.push_back({"m22", sign_with_band(m22)});
    conds.push_back({"m33", sign_with_band(m33)});
    if (m11 < 0 || m22 < 0 || m33 < 0) return assemble(conds);

    double alpha = m12 + std::sqrt(m11 * m22);
    double beta = m13 + std::sqrt(m11 * m33);
    double gamma = m23 + std::sqrt(m33 * m22);
    conds.push_back({"alpha", sign_with_band(alpha)});
    conds.push_back({"beta", sign_with_band(beta)});
    conds.push_back({"gamma", sign_with_band(gamma)});
    for (const auto& c : conds)
        if (c.sign == Sign::Negative) return assemble(conds);

    double e = m12 * std::sqrt(m33) + m13 * std::sqrt(m22) + m23 * std::sqrt(m11) +
               std::sqrt(m11 * m22 * m33) + std::sqrt(std::max(0.0, 2 * alpha * beta * gamma));
    conds.push_back({"final", sign_with_band(e)});
    return assemble(conds);
}

}  // namespace coposit
