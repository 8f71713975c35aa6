#include "gkz/game.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "gkz/error.hpp"
#include "gkz/lp.hpp"
#include "gkz/resultant.hpp"

namespace gkz {

namespace {

std::string superscript(unsigned long k) {
  static const char* const digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string out;
  for (char c : std::to_string(k)) out += digits[c - '0'];
  return out;
}

bool short_labels(const PointConfiguration& config) {
  return std::all_of(config.labels().begin(), config.labels().end(), [](const auto& l) { return l.size() == 1; });
}

}  // namespace

std::string render_monomial(const PointConfiguration& config, const std::vector<long>& exponents) {
  const std::string sep = short_labels(config) ? "" : "·";
  std::string out;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    if (!out.empty()) out += sep;
    out += config.label(i);
    if (exponents[i] > 1) out += superscript(static_cast<unsigned long>(exponents[i]));
  }
  return out.empty() ? "1" : out;
}

SparsePoly GkzMonomial::as_polynomial(const PointConfiguration& config) const {
  Exponents e(exponents.entries.begin(), exponents.entries.end());
  return SparsePoly::monomial(config.labels(), std::move(e), coefficient);
}

GkzMonomial game_term(const PointConfiguration& config, const Triangulation& t) {
  GkzMonomial term;
  term.coefficient = 1;
  for (const auto& s : t.simplices()) {
    const Integer vol = normalized_volume(config, s);
    Integer factor;
    mpz_pow_ui(factor.get_mpz_t(), vol.get_mpz_t(), vol.get_ui());
    term.coefficient *= factor;
  }
  term.exponents = gkz_vector(config, t);
  term.source = t;
  return term;
}

std::vector<GkzMonomial> all_game_terms(const PointConfiguration& config, const EnumerationOptions& options) {
  std::vector<GkzMonomial> out;
  for (const auto& ct : enumerate_coherent_triangulations(config, options)) {
    out.push_back(game_term(config, ct.triangulation));
  }
  std::sort(out.begin(), out.end(),
            [](const GkzMonomial& a, const GkzMonomial& b) { return a.exponents < b.exponents; });
  return out;
}

ChowMonomial chow_monomial(const PointConfiguration& config, const Triangulation& t) {
  ChowMonomial m;
  for (const auto& s : t.simplices()) m.factors[s] = static_cast<unsigned>(normalized_volume(config, s).get_ui());
  return m;
}

std::string ChowMonomial::render(const PointConfiguration& config) const {
  std::string out;
  for (const auto& [s, mult] : factors) {
    if (!out.empty()) out += "·";
    const std::string symbol = "π_" + simplex_name(config, s);
    out += mult == 1 ? symbol : "(" + symbol + ")" + superscript(mult);
  }
  return out;
}

SecondaryPolytope secondary_polytope(const PointConfiguration& config, const EnumerationOptions& options) {
  SecondaryPolytope poly;
  RationalMatrix points;
  for (auto& ct : enumerate_coherent_triangulations(config, options)) {
    auto phi = gkz_vector(config, ct.triangulation);
    points.emplace_back(phi.entries.begin(), phi.entries.end());
    poly.vertices.emplace_back(std::move(phi), std::move(ct.triangulation));
  }
  const auto flags = extreme_point_flags(points);
  if (std::find(flags.begin(), flags.end(), false) != flags.end()) {
    throw std::logic_error("a coherent triangulation's GKZ vector is not a vertex of the secondary polytope");
  }
  std::sort(poly.vertices.begin(), poly.vertices.end());
  return poly;
}

namespace {

struct OracleEntry {
  std::vector<LatticePoint> points;     // canonical coordinates
  std::vector<std::string> variables;   // canonical variable per point
  std::function<SparsePoly()> build;
};

std::vector<OracleEntry> oracle_library() {
  std::vector<OracleEntry> lib;
  for (std::size_t d = 2; d <= 4; ++d) {
    OracleEntry e;
    const auto letters = coefficient_letters(d);
    for (std::size_t k = 0; k <= d; ++k) {
      // The leading coefficient multiplies X^d.
      e.points.push_back({static_cast<long>(d - k)});
      e.variables.push_back(letters[k]);
    }
    e.build = [d] { return ea_univariate(d); };
    lib.push_back(std::move(e));
  }
  lib.push_back({{{0, 0}, {1, 0}, {0, 1}, {1, 1}},
                 {"a", "b", "c", "d"},
                 [] { return SparsePoly::parse("a*b*c*d*(a*d - b*c)"); }});
  lib.push_back({{{0, 0}, {1, 0}, {2, 0}, {0, 1}},
                 {"a", "b", "c", "d"},
                 [] { return SparsePoly::parse("a*c*d^2*(b^2 - 4*a*c)"); }});
  lib.push_back({{{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}},
                 {"a", "b", "c", "d", "e"},
                 [] { return SparsePoly::parse("a*c*d*e*(b^2 - 4*a*c)*(a*e^2 - b*d*e + c*d^2)"); }});
  return lib;
}

std::vector<LatticePoint> translated_to_origin(const PointConfiguration& config) {
  LatticePoint low = config.point(0);
  for (const auto& p : config.points()) {
    for (std::size_t c = 0; c < p.size(); ++c) low[c] = std::min(low[c], p[c]);
  }
  std::vector<LatticePoint> out;
  for (auto p : config.points()) {
    for (std::size_t c = 0; c < p.size(); ++c) p[c] -= low[c];
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<long> to_long(const Exponents& e) { return {e.begin(), e.end()}; }

}  // namespace

SparsePoly ea_oracle(const PointConfiguration& config) {
  const auto pts = translated_to_origin(config);
  const std::set<LatticePoint> given(pts.begin(), pts.end());
  for (const auto& entry : oracle_library()) {
    if (std::set<LatticePoint>(entry.points.begin(), entry.points.end()) != given) continue;
    std::map<std::string, std::string> names;
    for (std::size_t k = 0; k < entry.points.size(); ++k) {
      const auto it = std::find(pts.begin(), pts.end(), entry.points[k]);
      names[entry.variables[k]] = config.label(static_cast<std::size_t>(it - pts.begin()));
    }
    return entry.build().renamed(names).aligned_to(config.labels());
  }
  throw Error(ErrorKind::UnsupportedConfiguration, "no E_A oracle for this configuration");
}

VerificationReport verify_main_theorem(const PointConfiguration& config, const EnumerationOptions& options) {
  const SparsePoly oracle = ea_oracle(config);
  VerificationReport report;

  const auto np = newton_polytope(oracle);
  std::multimap<std::vector<long>, Integer> oracle_extremal;
  std::set<std::vector<long>> newton_vertices;
  for (std::size_t i = 0; i < np.support.size(); ++i) {
    const auto e = to_long(np.support[i]);
    const Integer c = oracle.coefficient(np.support[i]);
    if (np.is_vertex[i]) {
      oracle_extremal.emplace(e, c);
      newton_vertices.insert(e);
    } else {
      report.interior.push_back({e, c});
    }
  }

  for (const auto& term : all_game_terms(config, options)) {
    const auto& e = term.exponents.entries;
    auto it = oracle_extremal.find(e);
    if (it != oracle_extremal.end() && abs(it->second) == term.coefficient) {
      report.matched.push_back({e, term.coefficient, it->second});
      oracle_extremal.erase(it);
    } else {
      report.game_only.push_back({e, term.coefficient});
    }
  }
  for (const auto& [e, c] : oracle_extremal) report.oracle_only.push_back({e, c});

  std::set<std::vector<long>> secondary;
  for (const auto& [phi, t] : secondary_polytope(config, options).vertices) secondary.insert(phi.entries);
  report.secondary_matches_newton = secondary == newton_vertices;
  report.passed = report.game_only.empty() && report.oracle_only.empty() && report.secondary_matches_newton;
  return report;
}

}  // namespace gkz
