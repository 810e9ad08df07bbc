#include "quartic3d.hpp"

#include "oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace coposit {

namespace {

int sign_bit(unsigned bits, int b) { return (bits >> b) & 1u ? -1 : 1; }

SymTensor4 pattern_tensor(const std::array<int, 6>& iiij, const std::array<int, 3>& iijj,
                          const std::array<int, 3>& mixed) {
    std::vector<std::pair<Index4, Rational>> raw;
    for (int i = 1; i <= 3; ++i) raw.push_back({{i, i, i, i}, 1});
    const std::array<std::pair<Index4, int>, 6> iiij_keys = {{
        {{1, 1, 1, 2}, 0}, {{1, 1, 1, 3}, 1}, {{1, 2, 2, 2}, 2},
        {{2, 2, 2, 3}, 3}, {{1, 3, 3, 3}, 4}, {{2, 3, 3, 3}, 5},
    }};
    for (const auto& [k, slot] : iiij_keys) raw.push_back({k, iiij[slot]});
    raw.push_back({{1, 1, 2, 2}, iijj[0]});
    raw.push_back({{1, 1, 3, 3}, iijj[1]});
    raw.push_back({{2, 2, 3, 3}, iijj[2]});
    raw.push_back({{1, 1, 2, 3}, mixed[0]});
    raw.push_back({{1, 2, 2, 3}, mixed[1]});
    raw.push_back({{1, 2, 3, 3}, mixed[2]});
    return SymTensor4::build(3, raw);
}

int entry_sign(const SymTensor4& t, int i, int j, int k, int l) {
    Rational v = t.exact_entry(i, j, k, l);
    if (v == 1) return 1;
    if (v == -1) return -1;
    throw std::logic_error("pattern tensor entry is not +-1");
}

StrictFamilyPattern strict_from_tensor(const SymTensor4& t) {
    StrictFamilyPattern p;
    p.iijj = {entry_sign(t, 1, 1, 2, 2), entry_sign(t, 1, 1, 3, 3), entry_sign(t, 2, 2, 3, 3)};
    p.mixed = {entry_sign(t, 1, 1, 2, 3), entry_sign(t, 1, 2, 2, 3), entry_sign(t, 1, 2, 3, 3)};
    return p;
}

CopFamilyPattern cop_from_tensor(const SymTensor4& t) {
    CopFamilyPattern p;
    p.iiij = {entry_sign(t, 1, 1, 1, 2), entry_sign(t, 1, 1, 1, 3), entry_sign(t, 1, 2, 2, 2),
              entry_sign(t, 2, 2, 2, 3), entry_sign(t, 1, 3, 3, 3), entry_sign(t, 2, 3, 3, 3)};
    p.mixed = {entry_sign(t, 1, 1, 2, 3), entry_sign(t, 1, 2, 2, 3), entry_sign(t, 1, 2, 3, 3)};
    return p;
}

int neg_mixed_count(const std::array<int, 3>& mixed) {
    int c = 0;
    for (int v : mixed) c += (v == -1);
    return c;
}

}  // namespace

StrictFamilyPattern StrictFamilyPattern::from_bits(unsigned bits) {
    StrictFamilyPattern p;
    for (int i = 0; i < 3; ++i) p.iijj[i] = sign_bit(bits, i);
    for (int i = 0; i < 3; ++i) p.mixed[i] = sign_bit(bits, 3 + i);
    return p;
}

unsigned StrictFamilyPattern::bits() const {
    unsigned b = 0;
    for (int i = 0; i < 3; ++i)
        if (iijj[i] == -1) b |= 1u << i;
    for (int i = 0; i < 3; ++i)
        if (mixed[i] == -1) b |= 1u << (3 + i);
    return b;
}

SymTensor4 StrictFamilyPattern::tensor() const {
    return pattern_tensor({1, 1, 1, 1, 1, 1}, iijj, mixed);
}

StrictFamilyPattern StrictFamilyPattern::permuted(const std::array<int, 3>& p) const {
    return strict_from_tensor(tensor().permuted(p));
}

CopFamilyPattern CopFamilyPattern::from_bits(unsigned bits) {
    CopFamilyPattern p;
    for (int i = 0; i < 6; ++i) p.iiij[i] = sign_bit(bits, i);
    for (int i = 0; i < 3; ++i) p.mixed[i] = sign_bit(bits, 6 + i);
    return p;
}

unsigned CopFamilyPattern::bits() const {
    unsigned b = 0;
    for (int i = 0; i < 6; ++i)
        if (iiij[i] == -1) b |= 1u << i;
    for (int i = 0; i < 3; ++i)
        if (mixed[i] == -1) b |= 1u << (6 + i);
    return b;
}

SymTensor4 CopFamilyPattern::tensor() const {
    return pattern_tensor(iiij, {1, 1, 1}, mixed);
}

CopFamilyPattern CopFamilyPattern::permuted(const std::array<int, 3>& p) const {
    return cop_from_tensor(tensor().permuted(p));
}

int CopFamilyPattern::a(int u, int v) const {
    if (u == 1 && v == 2) return iiij[0];
    if (u == 1 && v == 3) return iiij[1];
    if (u == 2 && v == 1) return iiij[2];
    if (u == 2 && v == 3) return iiij[3];
    if (u == 3 && v == 1) return iiij[4];
    if (u == 3 && v == 2) return iiij[5];
    throw std::invalid_argument("bad (u,v)");
}

// Strict family, canonical templates (checked under every relabeling):
//   case 1: at most one -1 among the mixed entries.
//   case 2: mixed = (-1,-1,+1) and (t1122 = 1, or t1133 = t2233 = 1).
//   case 3: mixed all -1 and t1122 = t1133 = t2233 = 1.
ClassifierDetail strict_copositive_pm1_detail(const StrictFamilyPattern& p) {
    if (neg_mixed_count(p.mixed) <= 1) return {true, 1, {1, 2, 3}};
    for (const auto& perm : all_permutations3()) {
        StrictFamilyPattern q = p.permuted(perm);
        if (q.mixed[0] == -1 && q.mixed[1] == -1 && q.mixed[2] == 1 &&
            (q.iijj[0] == 1 || (q.iijj[1] == 1 && q.iijj[2] == 1)))
            return {true, 2, perm};
        if (q.mixed[0] == -1 && q.mixed[1] == -1 && q.mixed[2] == -1 && q.iijj[0] == 1 &&
            q.iijj[1] == 1 && q.iijj[2] == 1)
            return {true, 3, perm};
    }
    return {false, 0, {1, 2, 3}};
}

bool strict_copositive_pm1(const StrictFamilyPattern& p) {
    return strict_copositive_pm1_detail(p).result;
}

// Copositive family, canonical templates:
//   case 1: mixed all +1.
//   case 2: mixed = (-1,+1,+1) and a(1,2)=1 or a(1,3)=1.
//   case 3: mixed = (-1,-1,+1), each deficient repeated index has a +1 in its
//           {a(i,j), a(i,k)} pair, and a(1,2)=1 or a(2,1)=1.
//   case 4: mixed all -1 and all six a(u,v)=1.
ClassifierDetail copositive_pm1_detail(const CopFamilyPattern& p) {
    int neg = neg_mixed_count(p.mixed);
    if (neg == 0) return {true, 1, {1, 2, 3}};
    for (const auto& perm : all_permutations3()) {
        CopFamilyPattern q = p.permuted(perm);
        if (neg == 1 && q.mixed[0] == -1 && q.mixed[1] == 1 && q.mixed[2] == 1 &&
            (q.a(1, 2) == 1 || q.a(1, 3) == 1))
            return {true, 2, perm};
        if (neg == 2 && q.mixed[0] == -1 && q.mixed[1] == -1 && q.mixed[2] == 1 &&
            (q.a(1, 2) == 1 || q.a(1, 3) == 1) && (q.a(2, 1) == 1 || q.a(2, 3) == 1) &&
            (q.a(1, 2) == 1 || q.a(2, 1) == 1))
            return {true, 3, perm};
    }
    if (neg == 3) {
        bool all_pos = true;
        for (int v : p.iiij) all_pos = all_pos && v == 1;
        if (all_pos) return {true, 4, {1, 2, 3}};
    }
    return {false, 0, {1, 2, 3}};
}

bool copositive_pm1(const CopFamilyPattern& p) { return copositive_pm1_detail(p).result; }

std::optional<StrictFamilyPattern> match_strict_family(const SymTensor4& t) {
    if (t.dim() != 3 || !t.integer_entries()) return std::nullopt;
    for (int p = 0; p < SymTensor4::key_count(3); ++p) {
        Rational v = t.exact_at(p);
        if (v != 1 && v != -1) return std::nullopt;
    }
    for (int i = 1; i <= 3; ++i)
        if (t.exact_entry(i, i, i, i) != 1) return std::nullopt;
    const int tri[6][4] = {{1, 1, 1, 2}, {1, 1, 1, 3}, {1, 2, 2, 2},
                           {2, 2, 2, 3}, {1, 3, 3, 3}, {2, 3, 3, 3}};
    for (const auto& k : tri)
        if (t.exact_entry(k[0], k[1], k[2], k[3]) != 1) return std::nullopt;
    return strict_from_tensor(t);
}

std::optional<CopFamilyPattern> match_cop_family(const SymTensor4& t) {
    if (t.dim() != 3 || !t.integer_entries()) return std::nullopt;
    for (int p = 0; p < SymTensor4::key_count(3); ++p) {
        Rational v = t.exact_at(p);
        if (v != 1 && v != -1) return std::nullopt;
    }
    for (int i = 1; i <= 3; ++i)
        if (t.exact_entry(i, i, i, i) != 1) return std::nullopt;
    const int sq[3][4] = {{1, 1, 2, 2}, {1, 1, 3, 3}, {2, 2, 3, 3}};
    for (const auto& k : sq)
        if (t.exact_entry(k[0], k[1], k[2], k[3]) != 1) return std::nullopt;
    return cop_from_tensor(t);
}

std::vector<FamilyRow> enumerate_family(Family family, const OracleParams& params) {
    std::vector<FamilyRow> rows;
    const unsigned count = family == Family::Strict ? 64u : 512u;
    rows.reserve(count);
    for (unsigned bits = 0; bits < count; ++bits) {
        SymTensor4 t = family == Family::Strict ? StrictFamilyPattern::from_bits(bits).tensor()
                                                : CopFamilyPattern::from_bits(bits).tensor();
        bool analytic = family == Family::Strict
                            ? strict_copositive_pm1(StrictFamilyPattern::from_bits(bits))
                            : copositive_pm1(CopFamilyPattern::from_bits(bits));
        Verdict v = oracle_verdict(t, params);
        rows.push_back({bits, analytic, v});
    }
    return rows;
}

// ------------------------------------------------------ sufficient conditions

namespace {

// Exact comparisons of entries against products of fractional diagonal powers
// are done via 4th powers; the double path uses a tolerance band and treats
// borderline as "condition not met" (the check is only a sufficient one).
struct BoundChecker {
    const SymTensor4& t;
    bool exact;

    Rational ed(int i) const { return t.exact_entry(i, i, i, i); }
    double dd(int i) const { return t.entry(i, i, i, i); }

    static bool ge_pos_root4(const Rational& x, const Rational& rad4) {
        return x >= 0 && x * x * x * x >= rad4;
    }
    static bool ge_neg_root4(const Rational& x, const Rational& rad4) {
        return x >= 0 || x * x * x * x <= rad4;
    }
    static bool ge_band(double x, double bound) { return x - bound > kComparisonBand; }

    // t_iiij >= sign * d_i^(3/4) d_j^(1/4)
    bool iiij(int i, int j, int sign) const {
        if (exact) {
            Rational x = t.exact_entry(i, i, i, j);
            Rational rad4 = ed(i) * ed(i) * ed(i) * ed(j);
            return sign > 0 ? ge_pos_root4(x, rad4) : ge_neg_root4(x, rad4);
        }
        double bound = std::pow(dd(i), 0.75) * std::pow(dd(j), 0.25);
        return ge_band(t.entry(i, i, i, j), sign > 0 ? bound : -bound);
    }

    // t_iijj >= sign * sqrt(d_i d_j)
    bool iijj(int i, int j, int sign) const {
        if (exact) {
            Rational x = t.exact_entry(i, i, j, j);
            Rational rad2 = ed(i) * ed(j);
            if (sign > 0) return x >= 0 && x * x >= rad2;
            return x >= 0 || x * x <= rad2;
        }
        double bound = std::sqrt(dd(i) * dd(j));
        return ge_band(t.entry(i, i, j, j), sign > 0 ? bound : -bound);
    }

    // t_iijk >= sign * d_i^(1/2) d_j^(1/4) d_k^(1/4), {i,j,k} = {1,2,3}
    bool mixed(int i, int sign) const {
        int j = i == 1 ? 2 : 1;
        int k = i == 3 ? 2 : 3;
        if (exact) {
            Rational x = t.exact_entry(i, i, j, k);
            Rational rad4 = ed(i) * ed(i) * ed(j) * ed(k);
            return sign > 0 ? ge_pos_root4(x, rad4) : ge_neg_root4(x, rad4);
        }
        double bound = std::sqrt(dd(i)) * std::pow(dd(j), 0.25) * std::pow(dd(k), 0.25);
        return ge_band(t.entry(i, i, j, k), sign > 0 ? bound : -bound);
    }
};

struct SufficiencyContext {
    BoundChecker chk;
    std::array<bool, 4> mixed_pos{}, mixed_neg{};  // 1-based
    std::vector<int> deficient;                    // repeated indices with mixed below +bound
    bool all_deficient_above_neg = true;
    bool all_iijj_pos = true, all_iijj_neg = true;
    bool all_iiij_pos = true, all_iiij_neg = true;

    explicit SufficiencyContext(const SymTensor4& t) : chk{t, t.has_exact()} {
        for (int r = 1; r <= 3; ++r) {
            mixed_pos[r] = chk.mixed(r, +1);
            mixed_neg[r] = chk.mixed(r, -1);
            if (!mixed_pos[r]) {
                deficient.push_back(r);
                all_deficient_above_neg = all_deficient_above_neg && mixed_neg[r];
            }
        }
        const int pairs[3][2] = {{1, 2}, {1, 3}, {2, 3}};
        for (const auto& pr : pairs) {
            all_iijj_pos = all_iijj_pos && chk.iijj(pr[0], pr[1], +1);
            all_iijj_neg = all_iijj_neg && chk.iijj(pr[0], pr[1], -1);
        }
        for (int u = 1; u <= 3; ++u)
            for (int v = 1; v <= 3; ++v) {
                if (u == v) continue;
                all_iiij_pos = all_iiij_pos && chk.iiij(u, v, +1);
                all_iiij_neg = all_iiij_neg && chk.iiij(u, v, -1);
            }
    }

    bool pair_has_pos(int r) const {
        int j = r == 1 ? 2 : 1;
        int k = r == 3 ? 2 : 3;
        return chk.iiij(r, j, +1) || chk.iiij(r, k, +1);
    }
};

void require_dim3_positive_diag(const SymTensor4& t) {
    if (t.dim() != 3) throw std::invalid_argument("expected a dim-3 tensor");
    if (!t.diagonal_positive()) throw std::domain_error("diagonal entries must be positive");
}

}  // namespace

SufficiencyResult sufficient_strict_general_detail(const SymTensor4& t) {
    require_dim3_positive_diag(t);
    SufficiencyContext c(t);
    if (!c.all_deficient_above_neg || !c.all_iiij_pos) return {false, ""};

    if (c.deficient.size() <= 1 && c.all_iijj_neg) return {true, "Thm3.9(1)"};
    if (c.mixed_neg[1] && c.mixed_neg[2] && c.mixed_neg[3] && c.all_iijj_pos)
        return {true, "Thm3.10"};
    if (c.deficient.size() == 2) {
        int i = c.deficient[0], j = c.deficient[1];
        if (c.chk.iijj(i, j, +1) && c.all_iijj_neg) return {true, "Thm3.11(1)"};
    }
    return {false, ""};
}

SufficiencyResult sufficient_cop_general_detail(const SymTensor4& t) {
    require_dim3_positive_diag(t);
    SufficiencyContext c(t);
    if (!c.all_deficient_above_neg || !c.all_iijj_pos || !c.all_iiij_neg) return {false, ""};

    if (c.deficient.empty()) return {true, "Cor3.6"};
    if (c.deficient.size() == 1) {
        if (c.pair_has_pos(c.deficient[0])) return {true, "Thm3.9(2)"};
        return {false, ""};
    }
    if (c.deficient.size() == 2) {
        int i = c.deficient[0], j = c.deficient[1];
        bool cross = c.chk.iiij(i, j, +1) || c.chk.iiij(j, i, +1);
        if (c.pair_has_pos(i) && c.pair_has_pos(j) && cross) return {true, "Thm3.11(2)"};
    }
    return {false, ""};
}

bool sufficient_strict_general(const SymTensor4& t) {
    return sufficient_strict_general_detail(t).fired;
}

bool sufficient_cop_general(const SymTensor4& t) { return sufficient_cop_general_detail(t).fired; }

}  // namespace coposit
