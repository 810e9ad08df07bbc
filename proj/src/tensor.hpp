#ifndef COPOSIT_TENSOR_HPP
#define COPOSIT_TENSOR_HPP

#include "rational.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace coposit {

// 1-based multi-index, stored sorted nondecreasing.
using Index4 = std::array<int, 4>;
using Index2 = std::array<int, 2>;

// Dense symmetric 4th-order tensor over dimension 2 or 3.
//
// Storage is a fixed array over the canonical sorted multi-indices (5 entries
// at dim 2, 15 at dim 3). Every tensor keeps a double view; tensors built
// from rational input additionally keep exact entries, which downstream code
// uses for exact-arithmetic evaluation and comparisons.
class SymTensor4 {
public:
    // Canonical key table for a dimension, sorted lexicographically.
    static std::span<const Index4> keys(int dim);
    static int key_count(int dim) { return dim == 2 ? 5 : 15; }
    // Multinomial multiplicity 4!/(repetition factorials): 1, 4, 6 or 12.
    static int multiplicity(const Index4& key);
    // Position of a (not necessarily sorted) index in the canonical table.
    static int key_position(int dim, Index4 idx);

    // Builds from (index, value) pairs; missing keys default to 0.
    // Throws std::invalid_argument on bad dim/index or conflicting duplicates.
    static SymTensor4 build(int dim, const std::vector<std::pair<Index4, Rational>>& raw);
    static SymTensor4 from_values(int dim, std::span<const double> canonical_values);
    static SymTensor4 from_exact(int dim, std::span<const Rational> canonical_values);

    int dim() const { return dim_; }
    bool has_exact() const { return exact_.has_value(); }
    bool integer_entries() const;

    double value_at(int pos) const { return vals_[pos]; }
    const Rational& exact_at(int pos) const { return (*exact_)[pos]; }
    double entry(int i, int j, int k, int l) const;
    Rational exact_entry(int i, int j, int k, int l) const;

    // Tx^4 = sum over all ordered index tuples t_{i1..i4} x_{i1}..x_{i4}.
    double evaluate(std::span<const double> x) const;
    Rational evaluate_exact(std::span<const Rational> x) const;
    // Exact value of the homogenized integer form at integer coordinates.
    Rational evaluate_at_integers(std::span<const long long> nums) const;

    // (Tx^3)_k; satisfies x . (Tx^3) = Tx^4.
    std::vector<double> gradient_form(std::span<const double> x) const;

    // Entrywise comparison: every entry of *this <= every entry of hi.
    bool dominates_below(const SymTensor4& hi) const;

    // Positive-diagonal rescaling making every t_iiii = 1; each occurrence of
    // index a in a key contributes a factor t_aaaa^(-1/4). Exactness is kept
    // when all diagonal entries have exact rational fourth roots.
    SymTensor4 normalize_diagonal() const;

    bool diagonal_positive() const;

    // Relabels coordinates: result(i,j,k,l) = (*this)(p(i),p(j),p(k),p(l)).
    SymTensor4 permuted(const std::array<int, 3>& p) const;

private:
    SymTensor4(int dim) : dim_(dim) { vals_.fill(0.0); }

    int dim_;
    std::array<double, 15> vals_{};
    std::optional<std::array<Rational, 15>> exact_;
};

// Symmetric matrix (order-2 tensor); any dimension >= 1. Dim 2/3 feed the
// closed-form tests, larger dims only the +-1 criterion and the grid oracle.
class SymMatrix {
public:
    static SymMatrix build(int dim, const std::vector<std::pair<Index2, Rational>>& raw);
    static SymMatrix from_values(int dim, std::span<const double> upper);  // row-major upper triangle

    int dim() const { return dim_; }
    bool has_exact() const { return exact_.has_value(); }
    bool integer_entries() const;

    double entry(int i, int j) const;
    Rational exact_entry(int i, int j) const;

    double evaluate(std::span<const double> x) const;  // x^T M x
    Rational evaluate_at_integers(std::span<const long long> nums) const;

    // All |m_ij| == m_ii == 1.
    bool is_pm1_unit_diagonal() const;

    int triangle_size() const { return dim_ * (dim_ + 1) / 2; }
    int pos(int i, int j) const;  // 1-based, any order

private:
    SymMatrix(int dim) : dim_(dim), vals_(triangle_size(), 0.0) {}

    int dim_;
    std::vector<double> vals_;
    std::optional<std::vector<Rational>> exact_;
};

// 3rd-order 2-dimensional symmetric tensor, by its four distinct entries.
struct Cubic2 {
    double t111 = 0, t112 = 0, t122 = 0, t222 = 0;
    std::optional<std::array<Rational, 4>> exact;

    static Cubic2 from_exact(const Rational& a, const Rational& b, const Rational& c,
                             const Rational& d);
    double evaluate(double x1, double x2) const;
    Rational evaluate_at_integers(long long n1, long long n2) const;
    bool integer_entries() const;
};

// The 6 relabelings of {1,2,3}.
std::span<const std::array<int, 3>> all_permutations3();
std::string permutation_name(const std::array<int, 3>& p);

}  // namespace coposit

#endif
