#include "tensor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace coposit {

namespace {

constexpr std::array<Index4, 5> kKeys2 = {{
    {1, 1, 1, 1}, {1, 1, 1, 2}, {1, 1, 2, 2}, {1, 2, 2, 2}, {2, 2, 2, 2},
}};

constexpr std::array<Index4, 15> kKeys3 = {{
    {1, 1, 1, 1}, {1, 1, 1, 2}, {1, 1, 1, 3}, {1, 1, 2, 2}, {1, 1, 2, 3},
    {1, 1, 3, 3}, {1, 2, 2, 2}, {1, 2, 2, 3}, {1, 2, 3, 3}, {1, 3, 3, 3},
    {2, 2, 2, 2}, {2, 2, 2, 3}, {2, 2, 3, 3}, {2, 3, 3, 3}, {3, 3, 3, 3},
}};

constexpr std::array<std::array<int, 3>, 6> kPerms3 = {{
    {1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1},
}};

int count_in_key(const Index4& key, int v) {
    int c = 0;
    for (int x : key) c += (x == v);
    return c;
}

void check_dim(int dim) {
    if (dim != 2 && dim != 3) throw std::invalid_argument("tensor dimension must be 2 or 3");
}

std::string index_string(const Index4& k) {
    std::string s = "(";
    for (int i = 0; i < 4; ++i) s += std::to_string(k[i]) + (i < 3 ? "," : ")");
    return s;
}

}  // namespace

std::span<const Index4> SymTensor4::keys(int dim) {
    return dim == 2 ? std::span<const Index4>(kKeys2) : std::span<const Index4>(kKeys3);
}

int SymTensor4::multiplicity(const Index4& key) {
    // sorted key: repetition shape determines 4!/prod(rep!)
    int reps[4] = {0, 0, 0, 0};
    int nd = -1;
    for (int i = 0; i < 4; ++i) {
        if (i == 0 || key[i] != key[i - 1]) ++nd;
        ++reps[nd];
    }
    int denom = 1;
    for (int i = 0; i <= nd; ++i)
        for (int f = 2; f <= reps[i]; ++f) denom *= f;
    return 24 / denom;
}

int SymTensor4::key_position(int dim, Index4 idx) {
    std::sort(idx.begin(), idx.end());
    auto table = keys(dim);
    for (size_t p = 0; p < table.size(); ++p)
        if (table[p] == idx) return static_cast<int>(p);
    throw std::invalid_argument("index out of range for dimension " + std::to_string(dim) +
                                ": " + index_string(idx));
}

SymTensor4 SymTensor4::build(int dim, const std::vector<std::pair<Index4, Rational>>& raw) {
    check_dim(dim);
    SymTensor4 t(dim);
    std::array<Rational, 15> exact{};
    std::array<bool, 15> seen{};
    for (const auto& [idx, val] : raw) {
        for (int v : idx)
            if (v < 1 || v > dim)
                throw std::invalid_argument("index out of range for dimension " +
                                            std::to_string(dim) + ": " + index_string(idx));
        int p = key_position(dim, idx);
        if (seen[p] && exact[p] != val)
            throw std::invalid_argument("conflicting duplicate value at index " +
                                        index_string(idx));
        seen[p] = true;
        exact[p] = val;
    }
    for (int p = 0; p < key_count(dim); ++p) t.vals_[p] = to_double(exact[p]);
    t.exact_ = exact;
    return t;
}

SymTensor4 SymTensor4::from_values(int dim, std::span<const double> canonical_values) {
    check_dim(dim);
    if (static_cast<int>(canonical_values.size()) != key_count(dim))
        throw std::invalid_argument("wrong canonical value count");
    SymTensor4 t(dim);
    std::copy(canonical_values.begin(), canonical_values.end(), t.vals_.begin());
    return t;
}

SymTensor4 SymTensor4::from_exact(int dim, std::span<const Rational> canonical_values) {
    check_dim(dim);
    if (static_cast<int>(canonical_values.size()) != key_count(dim))
        throw std::invalid_argument("wrong canonical value count");
    SymTensor4 t(dim);
    std::array<Rational, 15> exact{};
    for (int p = 0; p < key_count(dim); ++p) {
        exact[p] = canonical_values[p];
        t.vals_[p] = to_double(exact[p]);
    }
    t.exact_ = exact;
    return t;
}

bool SymTensor4::integer_entries() const {
    if (!exact_) return false;
    for (int p = 0; p < key_count(dim_); ++p)
        if (!is_integer((*exact_)[p])) return false;
    return true;
}

double SymTensor4::entry(int i, int j, int k, int l) const {
    return vals_[key_position(dim_, {i, j, k, l})];
}

Rational SymTensor4::exact_entry(int i, int j, int k, int l) const {
    if (!exact_) throw std::logic_error("tensor has no exact entries");
    return (*exact_)[key_position(dim_, {i, j, k, l})];
}

double SymTensor4::evaluate(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != dim_)
        throw std::invalid_argument("vector length does not match tensor dimension");
    auto table = keys(dim_);
    double acc = 0.0;
    for (int p = 0; p < key_count(dim_); ++p) {
        const Index4& k = table[p];
        acc += vals_[p] * multiplicity(k) * x[k[0] - 1] * x[k[1] - 1] * x[k[2] - 1] * x[k[3] - 1];
    }
    return acc;
}

Rational SymTensor4::evaluate_exact(std::span<const Rational> x) const {
    if (static_cast<int>(x.size()) != dim_)
        throw std::invalid_argument("vector length does not match tensor dimension");
    if (!exact_) throw std::logic_error("tensor has no exact entries");
    auto table = keys(dim_);
    Rational acc = 0;
    for (int p = 0; p < key_count(dim_); ++p) {
        const Index4& k = table[p];
        acc += (*exact_)[p] * multiplicity(k) * x[k[0] - 1] * x[k[1] - 1] * x[k[2] - 1] *
               x[k[3] - 1];
    }
    return acc;
}

Rational SymTensor4::evaluate_at_integers(std::span<const long long> nums) const {
    if (static_cast<int>(nums.size()) != dim_)
        throw std::invalid_argument("vector length does not match tensor dimension");
    if (!exact_) throw std::logic_error("tensor has no exact entries");
    auto table = keys(dim_);
    Rational acc = 0;
    for (int p = 0; p < key_count(dim_); ++p) {
        const Index4& k = table[p];
        BigInt mon = BigInt(nums[k[0] - 1]) * nums[k[1] - 1] * nums[k[2] - 1] * nums[k[3] - 1];
        acc += (*exact_)[p] * multiplicity(k) * Rational(mon);
    }
    return acc;
}

std::vector<double> SymTensor4::gradient_form(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != dim_)
        throw std::invalid_argument("vector length does not match tensor dimension");
    auto table = keys(dim_);
    std::vector<double> y(dim_, 0.0);
    for (int p = 0; p < key_count(dim_); ++p) {
        const Index4& k = table[p];
        int mult = multiplicity(k);
        for (int v = 1; v <= dim_; ++v) {
            int c = count_in_key(k, v);
            if (c == 0) continue;
            // (1/4) d/dx_v of vals*mult*x^k; mult*c is divisible by 4
            double mon = 1.0;
            bool skipped = false;
            for (int q = 0; q < 4; ++q) {
                if (!skipped && k[q] == v) {
                    skipped = true;
                    continue;
                }
                mon *= x[k[q] - 1];
            }
            y[v - 1] += vals_[p] * (mult * c / 4) * mon;
        }
    }
    return y;
}

bool SymTensor4::dominates_below(const SymTensor4& hi) const {
    if (dim_ != hi.dim_) throw std::invalid_argument("dimension mismatch");
    if (exact_ && hi.exact_) {
        for (int p = 0; p < key_count(dim_); ++p)
            if ((*exact_)[p] > (*hi.exact_)[p]) return false;
        return true;
    }
    for (int p = 0; p < key_count(dim_); ++p)
        if (vals_[p] > hi.vals_[p]) return false;
    return true;
}

bool SymTensor4::diagonal_positive() const {
    for (int i = 1; i <= dim_; ++i)
        if (entry(i, i, i, i) <= 0) return false;
    return true;
}

SymTensor4 SymTensor4::normalize_diagonal() const {
    if (!diagonal_positive()) throw std::domain_error("diagonal entries must be positive");
    auto table = keys(dim_);
    std::array<double, 3> inv_root{};
    for (int i = 1; i <= dim_; ++i)
        inv_root[i - 1] = std::pow(entry(i, i, i, i), -0.25);

    SymTensor4 out(dim_);
    for (int p = 0; p < key_count(dim_); ++p) {
        double f = 1.0;
        for (int q = 0; q < 4; ++q) f *= inv_root[table[p][q] - 1];
        out.vals_[p] = vals_[p] * f;
    }
    for (int i = 1; i <= dim_; ++i)
        out.vals_[key_position(dim_, {i, i, i, i})] = 1.0;

    if (exact_) {
        std::array<Rational, 3> exact_inv{};
        bool all_exact = true;
        for (int i = 1; i <= dim_ && all_exact; ++i) {
            auto root = exact_fourth_root(exact_entry(i, i, i, i));
            if (root && *root != 0)
                exact_inv[i - 1] = Rational(denominator(*root), numerator(*root));
            else
                all_exact = false;
        }
        if (all_exact) {
            std::array<Rational, 15> exact{};
            for (int p = 0; p < key_count(dim_); ++p) {
                Rational f = 1;
                for (int q = 0; q < 4; ++q) f *= exact_inv[table[p][q] - 1];
                exact[p] = (*exact_)[p] * f;
            }
            out.exact_ = exact;
        }
    }
    return out;
}

SymTensor4 SymTensor4::permuted(const std::array<int, 3>& p) const {
    auto table = keys(dim_);
    SymTensor4 out(dim_);
    if (exact_) out.exact_.emplace();
    for (int pos = 0; pos < key_count(dim_); ++pos) {
        const Index4& k = table[pos];
        int src = key_position(dim_, {p[k[0] - 1], p[k[1] - 1], p[k[2] - 1], p[k[3] - 1]});
        out.vals_[pos] = vals_[src];
        if (exact_) (*out.exact_)[pos] = (*exact_)[src];
    }
    return out;
}

// ---------------------------------------------------------------- SymMatrix

int SymMatrix::pos(int i, int j) const {
    if (i < 1 || j < 1 || i > dim_ || j > dim_) throw std::invalid_argument("matrix index out of range");
    if (i > j) std::swap(i, j);
    // row-major upper triangle
    return (i - 1) * dim_ - (i - 1) * (i - 2) / 2 + (j - i);
}

SymMatrix SymMatrix::build(int dim, const std::vector<std::pair<Index2, Rational>>& raw) {
    if (dim < 1) throw std::invalid_argument("matrix dimension must be >= 1");
    SymMatrix m(dim);
    std::vector<Rational> exact(m.triangle_size());
    std::vector<bool> seen(m.triangle_size(), false);
    for (const auto& [idx, val] : raw) {
        int p = m.pos(idx[0], idx[1]);
        if (seen[p] && exact[p] != val)
            throw std::invalid_argument("conflicting duplicate matrix entry");
        seen[p] = true;
        exact[p] = val;
    }
    for (int p = 0; p < m.triangle_size(); ++p) m.vals_[p] = to_double(exact[p]);
    m.exact_ = std::move(exact);
    return m;
}

SymMatrix SymMatrix::from_values(int dim, std::span<const double> upper) {
    SymMatrix m(dim);
    if (static_cast<int>(upper.size()) != m.triangle_size())
        throw std::invalid_argument("wrong triangle size");
    std::copy(upper.begin(), upper.end(), m.vals_.begin());
    return m;
}

bool SymMatrix::integer_entries() const {
    if (!exact_) return false;
    for (const auto& v : *exact_)
        if (!is_integer(v)) return false;
    return true;
}

double SymMatrix::entry(int i, int j) const { return vals_[pos(i, j)]; }

Rational SymMatrix::exact_entry(int i, int j) const {
    if (!exact_) throw std::logic_error("matrix has no exact entries");
    return (*exact_)[pos(i, j)];
}

double SymMatrix::evaluate(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != dim_)
        throw std::invalid_argument("vector length does not match matrix dimension");
    double acc = 0.0;
    for (int i = 1; i <= dim_; ++i) {
        acc += entry(i, i) * x[i - 1] * x[i - 1];
        for (int j = i + 1; j <= dim_; ++j) acc += 2.0 * entry(i, j) * x[i - 1] * x[j - 1];
    }
    return acc;
}

Rational SymMatrix::evaluate_at_integers(std::span<const long long> nums) const {
    if (!exact_) throw std::logic_error("matrix has no exact entries");
    Rational acc = 0;
    for (int i = 1; i <= dim_; ++i) {
        acc += exact_entry(i, i) * Rational(BigInt(nums[i - 1]) * nums[i - 1]);
        for (int j = i + 1; j <= dim_; ++j)
            acc += 2 * exact_entry(i, j) * Rational(BigInt(nums[i - 1]) * nums[j - 1]);
    }
    return acc;
}

bool SymMatrix::is_pm1_unit_diagonal() const {
    for (int i = 1; i <= dim_; ++i) {
        if (entry(i, i) != 1.0) return false;
        for (int j = i + 1; j <= dim_; ++j)
            if (std::abs(entry(i, j)) != 1.0) return false;
    }
    return true;
}

// ------------------------------------------------------------------- Cubic2

Cubic2 Cubic2::from_exact(const Rational& a, const Rational& b, const Rational& c,
                          const Rational& d) {
    Cubic2 t;
    t.exact = {a, b, c, d};
    t.t111 = to_double(a);
    t.t112 = to_double(b);
    t.t122 = to_double(c);
    t.t222 = to_double(d);
    return t;
}

double Cubic2::evaluate(double x1, double x2) const {
    return t111 * x1 * x1 * x1 + 3 * t112 * x1 * x1 * x2 + 3 * t122 * x1 * x2 * x2 +
           t222 * x2 * x2 * x2;
}

Rational Cubic2::evaluate_at_integers(long long n1, long long n2) const {
    if (!exact) throw std::logic_error("cubic has no exact entries");
    Rational a = (*exact)[0], b = (*exact)[1], c = (*exact)[2], d = (*exact)[3];
    BigInt x1 = n1, x2 = n2;
    return a * Rational(x1 * x1 * x1) + 3 * b * Rational(x1 * x1 * x2) +
           3 * c * Rational(x1 * x2 * x2) + d * Rational(x2 * x2 * x2);
}

bool Cubic2::integer_entries() const {
    if (!exact) return false;
    for (const auto& v : *exact)
        if (!is_integer(v)) return false;
    return true;
}

std::span<const std::array<int, 3>> all_permutations3() { return kPerms3; }

std::string permutation_name(const std::array<int, 3>& p) {
    return "perm(" + std::to_string(p[0]) + std::to_string(p[1]) + std::to_string(p[2]) + ")";
}

}  // namespace coposit
