#ifndef COPOSIT_QUARTIC2D_HPP
#define COPOSIT_QUARTIC2D_HPP

#include "tensor.hpp"
#include "verdict.hpp"

#include <optional>

namespace coposit {

// Coefficients of the normalized 2-dimensional quartic
//   f(x1,x2) = x1^4 + 4a x1^3 x2 + 6b x1^2 x2^2 + 4c x1 x2^3 + x2^4
// i.e. t1112=a, t1122=b, t1222=c with t1111=t2222=1.
struct Quartic2 {
    double a = 0, b = 0, c = 0;
    std::optional<std::array<Rational, 3>> exact;

    static Quartic2 from_exact(const Rational& a, const Rational& b, const Rational& c);
    // Reads (a,b,c) off a dim-2 tensor that already has unit diagonal.
    static Quartic2 from_normalized_tensor(const SymTensor4& t);
    double evaluate(double x1, double x2) const;
};

// (1-4ac+3b^2)^3 - 27(b+2abc-b^3-c^2-a^2)^2
double discriminant_delta_prime(const Quartic2& q);
Rational discriminant_delta_prime_exact(const Rational& a, const Rational& b, const Rational& c);

// Copositivity of the normalized quartic; Copositive carries no strictness
// claim. `branch` reports which condition group decided (1..3; 0 otherwise).
struct Quartic2Result {
    Verdict verdict = Verdict::Unknown;
    int branch = 0;
};
Quartic2Result copositive_quartic_2d_normalized_detail(const Quartic2& q);
Verdict copositive_quartic_2d_normalized(const Quartic2& q);

// General dim-2 tensor with positive diagonal: normalize, then test.
Verdict copositive_quartic_2d(const SymTensor4& t);

// +-1 classification: copositive iff b=1 or a=c=1.
bool copositive_pm1_2d(int a, int b, int c);

// Scaling-based sufficient conditions. True implies (strict) copositivity;
// false is inconclusive.
bool sufficient_2d(const SymTensor4& t, bool strict);

// 3rd-order 2-dimensional criterion.
Verdict copositive_cubic_2d(const Cubic2& t, bool strict);

}  // namespace coposit

#endif
