#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "gkz/config.hpp"
#include "gkz/poly.hpp"

namespace gkz {

/// A generic univariate polynomial of a fixed degree whose coefficients are
/// independent symbols, listed leading coefficient first.
struct UnivariateSymbolic {
  std::size_t degree = 0;
  std::vector<std::string> coeff_names;

  /// degree d with names a<suffix>, b<suffix>, ... e.g. a1, b1, c1.
  static UnivariateSymbolic generic(std::size_t degree, const std::string& suffix = "");
  static UnivariateSymbolic named(std::vector<std::string> names);

  std::vector<SparsePoly> coefficients() const;
};

/// Letters naming the coefficients of a degree-d polynomial, leading first:
/// "a", "b", ... (then "p26", ...).
std::vector<std::string> coefficient_letters(std::size_t degree);

/// Sylvester matrix of f and g, coefficient lists leading to constant:
/// deg(g) shifted rows of f followed by deg(f) shifted rows of g.
PolyMatrix sylvester_matrix(std::span<const SparsePoly> f, std::span<const SparsePoly> g);
PolyMatrix sylvester_matrix(const UnivariateSymbolic& f, const UnivariateSymbolic& g);

/// det of the Sylvester matrix.
SparsePoly resultant(std::span<const SparsePoly> f, std::span<const SparsePoly> g);
SparsePoly resultant(const UnivariateSymbolic& f, const UnivariateSymbolic& g);

/// Coefficients of df/dX for a coefficient list (leading first).
std::vector<SparsePoly> derivative(std::span<const SparsePoly> f);

/// Discriminant of the generic degree-d polynomial in the variables
/// coefficient_letters(d): resultant(f, f') divided by the leading
/// coefficient, signed so that the b^2 c^2 ... term has coefficient +1.
SparsePoly discriminant_univariate(std::size_t degree);

/// (leading coefficient) * (constant coefficient) * discriminant.
SparsePoly ea_univariate(std::size_t degree);

using SpecializationMap = std::map<std::string, SparsePoly>;

/// Substitutes a polynomial for every variable of r and expands.
/// Throws UnassignedVariable when a used variable has no image.
SparsePoly specialize(const SparsePoly& r, const SpecializationMap& m);

/// Basis of the lattice spanned by f_A and its logarithmic derivatives, as
/// integer affine functionals: row k maps a point a to row[0] + sum row[c+1]*a[c].
/// The default {1, a_1, ..., a_d} corresponds to f, X_1 d/dX_1 f, ..., X_d d/dX_d f.
using LogDerivativeBasis = std::vector<std::vector<long>>;

LogDerivativeBasis default_log_derivative_basis(std::size_t dim);

/// Specialization matrix: one row per point, entry (i, k) = label_i * functional_k(a_i).
PolyMatrix log_derivative_matrix(const PointConfiguration& config, const LogDerivativeBasis& basis);

struct PluckerImage {
  Integer coefficient;  // signed; |coefficient| is the normalized volume
  SparsePoly monomial;  // product of the vertex labels
};

/// Image of the Plücker coordinate of s (the maximal minor on s's rows)
/// under the log-derivative specialization. Throws DegenerateSimplex for a
/// flat simplex, InvalidBasis for a basis that is not unimodular.
PluckerImage plucker_specialization(const PointConfiguration& config, const Simplex& s,
                                    const LogDerivativeBasis& basis);
PluckerImage plucker_specialization(const PointConfiguration& config, const Simplex& s);

}  // namespace gkz
