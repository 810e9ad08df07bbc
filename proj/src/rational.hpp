#ifndef COPOSIT_RATIONAL_HPP
#define COPOSIT_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace coposit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p", "p/q", or a decimal literal ("2.1", "-0.25", "1e-3") exactly.
std::optional<Rational> parse_rational(const std::string& text);

// "p" for integers, "p/q" otherwise. Lossless; used by the file writer.
std::string rational_to_string(const Rational& r);

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline double to_double(const Rational& r) { return static_cast<double>(r); }

// Exact integer k-th root: returns r with r^k == n, if one exists (n >= 0).
std::optional<BigInt> exact_kth_root(const BigInt& n, unsigned k);

// Exact rational 4th root, if one exists (used by diagonal normalization).
std::optional<Rational> exact_fourth_root(const Rational& r);

}  // namespace coposit

#endif
