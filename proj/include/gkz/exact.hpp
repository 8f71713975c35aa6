#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gkz {

using Integer = mpz_class;
using Rational = mpq_class;

using IntegerMatrix = std::vector<std::vector<Integer>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Determinant of a square integer matrix by fraction-free (Bareiss)
/// elimination. The empty matrix has determinant 1.
Integer integer_determinant(IntegerMatrix m);

/// Determinant of a square rational matrix by Gaussian elimination.
Rational determinant(RationalMatrix m);

/// Rank of a rational matrix (any shape).
std::size_t rank(RationalMatrix m);

/// Solves the square system a·x = b. Returns nothing when a is singular.
std::optional<std::vector<Rational>> solve(RationalMatrix a, std::vector<Rational> b);

int sign(const Integer& x);
int sign(const Rational& x);

/// "p/q" or "p" in lowest terms.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "p", "-p" or "p/q" with decimal digits. Throws Error(InputParseError).
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

/// Nonnegative gcd of the entries; 0 for the zero vector.
long gcd_of(const std::vector<long>& v);

}  // namespace gkz
