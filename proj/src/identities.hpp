#ifndef COPOSIT_IDENTITIES_HPP
#define COPOSIT_IDENTITIES_HPP

#include "rational.hpp"
#include "tensor.hpp"

#include <array>
#include <span>
#include <string>
#include <vector>

namespace coposit {

// The 14 ternary quartic inequalities: T312_* are strict (> 0 off the
// origin), T313_*/T314_* are >= 0 with known equality loci.
enum class InequalityId {
    T312_i, T312_ii, T312_iii, T312_iv, T312_v, T312_vi, T312_vii,
    T313_a, T313_b, T313_c, T313_d,
    T314_e, T314_f, T314_g,
};

std::span<const InequalityId> all_inequality_ids();
std::string tag_name(InequalityId id);
bool is_strict_inequality(InequalityId id);  // true for T312 tags

// Residual polynomial LHS - RHS over the 15 canonical quartic monomials.
// Two stored routes per inequality: the expanded monomial form and the
// compact (+-x1 +-x2 +-x3)^4-based form; they must be the same polynomial.
std::array<int, 15> expanded_coefficients(InequalityId id);
std::array<int, 15> compact_coefficients(InequalityId id);

// Residual at a nonnegative point (expanded route); throws on negative
// coordinates. The zero vector gives 0 by homogeneity.
double residual(InequalityId id, std::span<const double> x);
Rational residual_exact(InequalityId id, std::span<const Rational> x);

// Evaluates both routes; callers assert the pair agrees.
std::pair<double, double> expanded_equals_compact(InequalityId id, std::span<const double> x);

// Equality loci of the >= inequalities, as rays through simplex points.
enum class LocusLine { X3ZeroX1EqX2, X2ZeroX1EqX3, X1ZeroX2EqX3 };
std::vector<LocusLine> equality_locus(InequalityId id);  // throws for T312 tags
std::array<Rational, 3> locus_point(LocusLine line, const Rational& t);
std::array<double, 3> locus_simplex_point(LocusLine line);

// (a) residual is exactly zero at 100 rational points along every locus
// line; (b) residual > 0 at `samples` random simplex points at max-norm
// distance >= 1e-2 from the locus.
bool equality_locus_check(InequalityId id, int samples = 10000, unsigned long long seed = 20240613);

// View of the residual as a symmetric tensor (exact integer entries).
SymTensor4 residual_tensor(InequalityId id);

}  // namespace coposit

#endif
