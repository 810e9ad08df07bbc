#ifndef COPOSIT_ORACLE_HPP
#define COPOSIT_ORACLE_HPP

#include "tensor.hpp"
#include "verdict.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace coposit {

// Barycentric lattice point: nonnegative integer numerators summing to the
// denominator; exactly on the standard simplex.
struct SimplexPoint {
    std::vector<long long> numerators;
    long long denominator = 1;

    std::vector<double> as_doubles() const;
    std::vector<Rational> as_rationals() const;
    void reduce();  // divide out gcd(numerators..., denominator)
    std::string to_string() const;
};

struct OracleParams {
    long long denominator = 60;
    bool refine = true;
    int refine_starts = 8;
    double tol = 1e-7;
    int threads = 1;  // capped by COPOSIT_THREADS

    static OracleParams defaults_for_dim(int dim);
};

struct OracleReport {
    double min_value = 0.0;                 // best value found (refined when enabled)
    std::optional<Rational> exact_min;      // exact grid minimum (integer-entry tensors)
    SimplexPoint argmin;                    // grid argmin, lexicographically smallest
    SimplexPoint refined_argmin;            // best refined point (== argmin when not refined)
    Verdict verdict = Verdict::Unknown;
    std::optional<std::pair<int, double>> witness;  // semi-positivity witness at argmin
    long long grid_denominator = 0;
    bool refined = false;
};

// Evaluates T at every lattice point with the given denominator (exact
// integer arithmetic when all entries are integers), optionally followed by
// shrinking-neighborhood refinement around the best grid points.
OracleReport min_on_simplex(const SymTensor4& t, const OracleParams& params);
OracleReport min_on_simplex(const SymTensor4& t, long long denominator, bool refine);

// Verdict from the minimum under the tolerance policy; float-negative
// refinement candidates are confirmed with exact rational evaluation.
Verdict oracle_verdict(const SymTensor4& t, const OracleParams& params);
Verdict oracle_verdict(const SymTensor4& t, double tol);

// Smallest k with x_k > 0 and (Tx^3)_k >= 0, with the component value.
// Empty when no such k exists at this x.
std::optional<std::pair<int, double>> semi_positivity_witness(const SymTensor4& t,
                                                              std::span<const double> x);

// Exact positivity at every lattice point with the given denominator, and
// nonnegativity persists at one refinement level (denominator doubled).
bool certify_strict_on_grid(const SymTensor4& t, long long denominator);

// Quadratic analogue for matrices (used by the matrix agreement tests).
struct QuadraticGridReport {
    double min_value = 0.0;
    std::optional<Rational> exact_min;
    SimplexPoint argmin;
};
QuadraticGridReport min_quadratic_on_simplex(const SymMatrix& m, long long denominator);

int env_thread_cap();  // COPOSIT_THREADS, default 1

}  // namespace coposit

#endif
