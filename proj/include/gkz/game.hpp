#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gkz/config.hpp"
#include "gkz/poly.hpp"
#include "gkz/triangulation.hpp"

namespace gkz {

/// The monomial a coherent triangulation contributes to E_A: the product
/// over its simplices of (volume × vertices)^volume.
struct GkzMonomial {
  Integer coefficient;
  GkzVector exponents;
  Triangulation source;

  /// coefficient · Π label_i^exponent_i over the configuration's labels.
  SparsePoly as_polynomial(const PointConfiguration& config) const;
};

GkzMonomial game_term(const PointConfiguration& config, const Triangulation& t);

/// One term per coherent triangulation, sorted by exponent vector.
std::vector<GkzMonomial> all_game_terms(const PointConfiguration& config, const EnumerationOptions& options = {});

/// Π π_σ^vol(σ) over the simplices of a triangulation.
struct ChowMonomial {
  std::map<Simplex, unsigned> factors;

  /// e.g. "(π_acd)²·π_cde"; factors in simplex order.
  std::string render(const PointConfiguration& config) const;
};

ChowMonomial chow_monomial(const PointConfiguration& config, const Triangulation& t);

struct SecondaryPolytope {
  std::vector<std::pair<GkzVector, Triangulation>> vertices;
};

/// GKZ vectors of the coherent triangulations; each is checked to be a
/// vertex of the hull of all of them (std::logic_error otherwise).
SecondaryPolytope secondary_polytope(const PointConfiguration& config, const EnumerationOptions& options = {});

/// Expanded E_A from the built-in library: the intervals {0..d} for
/// 2 <= d <= 4 (through resultants), the unit square, {1, X, X^2, Y} and the
/// pentagon {1, X, X^2, Y, XY}, each up to translation. Variables are the
/// configuration's labels. Throws UnsupportedConfiguration otherwise.
SparsePoly ea_oracle(const PointConfiguration& config);

struct ReportTerm {
  std::vector<long> exponents;  // one entry per configuration point
  Integer coefficient;
};

struct MatchedTerm {
  std::vector<long> exponents;
  Integer game_coefficient;
  Integer oracle_coefficient;
};

struct VerificationReport {
  bool passed = false;
  std::vector<MatchedTerm> matched;
  std::vector<ReportTerm> game_only;
  std::vector<ReportTerm> oracle_only;
  std::vector<ReportTerm> interior;
  bool secondary_matches_newton = false;
};

/// Compares the game terms with the extremal terms of the oracle E_A as
/// multisets of (|coefficient|, exponents), and the secondary-polytope
/// vertices with the oracle's Newton-polytope vertices.
VerificationReport verify_main_theorem(const PointConfiguration& config, const EnumerationOptions& options = {});

/// Renders a monomial over the configuration's labels, e.g. "ab²c²d", with
/// "·" separators when some label is longer than one character.
std::string render_monomial(const PointConfiguration& config, const std::vector<long>& exponents);

}  // namespace gkz
