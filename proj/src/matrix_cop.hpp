#ifndef COPOSIT_MATRIX_COP_HPP
#define COPOSIT_MATRIX_COP_HPP

#include "tensor.hpp"
#include "verdict.hpp"

#include <optional>
#include <string>

namespace coposit {

struct MatrixVerdict {
    Verdict verdict = Verdict::Unknown;
    // Failed (or borderline) scalar condition; present whenever the verdict
    // is NotCopositive, and for the condition that blocks strictness.
    std::string certificate;
    // Baston certificate: lexicographically first all-(-1) triple.
    std::optional<std::array<int, 3>> violating_triple;
};

// +-1 matrix criterion (any dimension; requires |m_ij| = m_ii = 1).
// Copositive verdicts carry no strictness claim.
MatrixVerdict baston_pm1(const SymMatrix& m);

// Closed-form 2x2 / 3x3 criteria. Comparisons are exact for rational input;
// double arithmetic with a 1e-12 band (-> Unknown) otherwise.
MatrixVerdict copositive_2x2(const SymMatrix& m, bool strict);
MatrixVerdict copositive_3x3(const SymMatrix& m, bool strict);

}  // namespace coposit

#endif
