#ifndef COPOSIT_QUARTIC3D_HPP
#define COPOSIT_QUARTIC3D_HPP

#include "tensor.hpp"
#include "verdict.hpp"

#include <optional>
#include <vector>

namespace coposit {

struct OracleParams;  // oracle.hpp

// Free signs of the strict +-1 family: t_iiii = t_iiij = +1 fixed,
// the three t_iijj and three t_iijk entries are +-1. 64 patterns.
struct StrictFamilyPattern {
    std::array<int, 3> iijj;   // t1122, t1133, t2233
    std::array<int, 3> mixed;  // t1123, t1223, t1233 (keyed by repeated index)

    static StrictFamilyPattern from_bits(unsigned bits);  // bit set => entry -1
    unsigned bits() const;
    SymTensor4 tensor() const;
    StrictFamilyPattern permuted(const std::array<int, 3>& p) const;
};

// Free signs of the copositive +-1 family: t_iiii = t_iijj = +1 fixed,
// the six t_iiij and three t_iijk entries are +-1. 512 patterns.
struct CopFamilyPattern {
    std::array<int, 6> iiij;   // t1112, t1113, t1222, t2223, t1333, t2333
    std::array<int, 3> mixed;  // t1123, t1223, t1233

    static CopFamilyPattern from_bits(unsigned bits);
    unsigned bits() const;
    SymTensor4 tensor() const;
    CopFamilyPattern permuted(const std::array<int, 3>& p) const;

    int a(int u, int v) const;  // t_uuuv sign, u != v
};

// Which classifier case fired, and under which relabeling.
struct ClassifierDetail {
    bool result = false;
    int kase = 0;  // 1..3 (strict) or 1..4 (cop); 0 when result is false
    std::array<int, 3> perm = {1, 2, 3};
};

// Exact strict-copositivity classification of the strict family.
// The case analysis is pattern matching over the 6 index relabelings,
// calibrated against the exact-arithmetic oracle on all 64 patterns
// (see tests/fixtures/strict_family_table.txt).
ClassifierDetail strict_copositive_pm1_detail(const StrictFamilyPattern& p);
bool strict_copositive_pm1(const StrictFamilyPattern& p);

// Exact copositivity classification of the copositive family, calibrated
// against the oracle on all 512 patterns (tests/fixtures/cop_family_table.txt).
ClassifierDetail copositive_pm1_detail(const CopFamilyPattern& p);
bool copositive_pm1(const CopFamilyPattern& p);

// Recognizers for the CLI dispatch: exact +-1 tensors with the right fixed part.
std::optional<StrictFamilyPattern> match_strict_family(const SymTensor4& t);
std::optional<CopFamilyPattern> match_cop_family(const SymTensor4& t);

enum class Family { Strict, Cop };

struct FamilyRow {
    unsigned bits;
    bool analytic;
    Verdict oracle;
};

// All 64 / 512 patterns with analytic and oracle verdicts, bits ascending.
std::vector<FamilyRow> enumerate_family(Family family, const OracleParams& params);

// Scaling-based sufficient conditions for general dim-3 tensors with
// positive diagonal. True implies (strict) copositivity; false says nothing.
struct SufficiencyResult {
    bool fired = false;
    const char* rule = "";
};
SufficiencyResult sufficient_strict_general_detail(const SymTensor4& t);
SufficiencyResult sufficient_cop_general_detail(const SymTensor4& t);
bool sufficient_strict_general(const SymTensor4& t);
bool sufficient_cop_general(const SymTensor4& t);

}  // namespace coposit

#endif
