#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gkz/exact.hpp"

namespace gkz {

using Exponents = std::vector<std::uint32_t>;

/// Sparse multivariate polynomial with big-integer coefficients over an
/// ordered list of named variables. Never stores a zero coefficient.
///
/// Binary operations align their operands by variable name: the result uses
/// the left operand's variables followed by any new names from the right.
class SparsePoly {
 public:
  SparsePoly() = default;
  explicit SparsePoly(std::vector<std::string> variables);

  static SparsePoly constant(const Integer& c);
  static SparsePoly variable(const std::string& name);
  static SparsePoly monomial(std::vector<std::string> variables, Exponents exponents, const Integer& coeff = 1);

  /// Parses integer expressions over identifiers with + - * ^ and
  /// parentheses, e.g. "a*c*(b^2 - 4*a*c)". Throws InputParseError.
  static SparsePoly parse(std::string_view text);

  const std::vector<std::string>& variables() const { return vars_; }
  const std::map<Exponents, Integer>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Integer coefficient(const Exponents& e) const;

  /// Adds the term c·x^e (e in this polynomial's variable order).
  void add_term(const Exponents& e, const Integer& c);

  /// Same polynomial over a variable list that must contain every variable
  /// this polynomial actually uses.
  SparsePoly aligned_to(const std::vector<std::string>& variables) const;

  /// Drops variables that occur in no term.
  SparsePoly trimmed() const;

  /// Renames variables; names missing from the map are kept.
  SparsePoly renamed(const std::map<std::string, std::string>& names) const;

  /// Variables with a nonzero exponent in some term.
  std::vector<std::string> used_variables() const;

  long total_degree() const;  // -1 for the zero polynomial
  bool is_homogeneous() const;

  /// Exact evaluation. Throws MissingVariable if a used variable is unassigned.
  Rational eval(const std::map<std::string, Rational>& point) const;

  SparsePoly& operator+=(const SparsePoly& q);
  SparsePoly& operator-=(const SparsePoly& q);
  SparsePoly& operator*=(const SparsePoly& q);

  friend SparsePoly operator+(SparsePoly p, const SparsePoly& q) { return p += q; }
  friend SparsePoly operator-(SparsePoly p, const SparsePoly& q) { return p -= q; }
  friend SparsePoly operator*(SparsePoly p, const SparsePoly& q) { return p *= q; }
  friend SparsePoly operator-(SparsePoly p);
  friend SparsePoly operator*(const Integer& c, SparsePoly p);

  /// Mathematical equality: variable order and unused variables are ignored.
  friend bool operator==(const SparsePoly& p, const SparsePoly& q);

  /// Terms in decreasing lexicographic exponent order, e.g. "-4*a^2*c^2 + a*b^2*c".
  std::string to_string() const;

 private:
  std::vector<std::string> vars_;
  std::map<Exponents, Integer> terms_;
};

SparsePoly pow(const SparsePoly& p, unsigned k);

/// Union of the variable lists, in first-seen order.
std::vector<std::string> merge_variables(const std::vector<std::string>& a, const std::vector<std::string>& b);

/// Exact quotient p / q. Throws InexactDivision when q does not divide p,
/// ZeroPolynomial when q = 0.
SparsePoly exact_divide(const SparsePoly& p, const SparsePoly& q);

/// gcd of the coefficients (0 for the zero polynomial).
Integer content(const SparsePoly& p);

struct Term {
  Exponents exponents;
  Integer coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Support of a polynomial with its Newton-polytope vertices flagged.
struct NewtonPolytope {
  std::vector<Exponents> support;
  std::vector<bool> is_vertex;

  std::vector<Exponents> vertices() const;
};

NewtonPolytope newton_polytope(const SparsePoly& p);

/// Terms of p sitting at vertices of its Newton polytope, in lexicographic
/// exponent order (over p's own variable order).
std::vector<Term> extremal_terms(const SparsePoly& p);

using PolyMatrix = std::vector<std::vector<SparsePoly>>;

/// Fraction-free (Bareiss) determinant; every division is an exact
/// polynomial division.
SparsePoly bareiss_determinant(PolyMatrix m);

}  // namespace gkz
