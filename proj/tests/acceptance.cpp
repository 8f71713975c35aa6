// Acceptance checks: one PASS/FAIL line per criterion. All comparisons are
// exact (big-integer and rational arithmetic); there is no numeric tolerance.

#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "oracles.hpp"
#include "gkz/game.hpp"
#include "gkz/resultant.hpp"

#ifndef GKZ_CLI_PATH
#define GKZ_CLI_PATH "gkz"
#endif

using namespace gkz;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) detail << what;
      ok = false;
    }
  }
};

std::string run_cli(const std::string& args, int* status = nullptr) {
  const std::string cmd = std::string("\"") + GKZ_CLI_PATH + "\" " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("cannot start " + cmd);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int rc = pclose(pipe);
  if (status) *status = WEXITSTATUS(rc);
  return out;
}

std::string cfg(const std::string& name) { return std::string("\"") + GKZ_CONFIG_DIR + "/" + name + ".json\""; }

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

SparsePoly P(const char* text) { return SparsePoly::parse(text); }

using TermSet = std::multiset<std::pair<std::string, std::vector<long>>>;

// (|coefficient|, exponents over the configuration's labels)
TermSet game_set(const PointConfiguration& config) {
  TermSet out;
  for (const auto& t : all_game_terms(config)) out.insert({t.coefficient.get_str(), t.exponents.entries});
  return out;
}

TermSet extremal_set(const PointConfiguration& config, const SparsePoly& e) {
  TermSet out;
  for (const auto& t : extremal_terms(e.aligned_to(config.labels()))) {
    out.insert({Integer(abs(t.coefficient)).get_str(), std::vector<long>(t.exponents.begin(), t.exponents.end())});
  }
  return out;
}

// a·last·Res(f, f')/a for the generic degree-d polynomial, built here from
// the Sylvester matrix rather than through ea_univariate.
SparsePoly interval_oracle(std::size_t d) {
  const auto f = UnivariateSymbolic::generic(d).coefficients();
  const auto r = resultant(f, derivative(f));
  const auto letters = coefficient_letters(d);
  const auto disc = exact_divide(r, SparsePoly::variable(letters.front()));
  return SparsePoly::variable(letters.front()) * SparsePoly::variable(letters.back()) * disc;
}

std::vector<std::vector<std::string>> rendered(const PolyMatrix& m) {
  std::vector<std::vector<std::string>> out;
  for (const auto& row : m) {
    out.emplace_back();
    for (const auto& e : row) out.back().push_back(e.to_string());
  }
  return out;
}

void criterion1(Check& c) {
  int status = 0;
  auto out = lines_of(run_cli("game " + cfg("cubic"), &status));
  std::set<std::string> got(out.begin(), out.end());
  c.expect(status == 0, "game exited with status " + std::to_string(status));
  c.expect(out.size() == 4, "expected 4 lines, got " + std::to_string(out.size()));
  c.expect(got == std::set<std::string>{"1·ab²c²d", "4·a²c³d", "4·ab³d²", "27·a³d³"}, "monomials differ");
}

void criterion2(Check& c) {
  auto cubic = oracle::load("cubic");
  auto e = interval_oracle(3);
  // Res(f, f') = (-1)^(d(d-1)/2) a·disc with the Sylvester convention used here
  c.expect(e == -P("a*d*(b^2*c^2 - 4*a*c^3 - 4*b^3*d - 27*a^2*d^2 + 18*a*b*c*d)"), "ad*disc mismatch");
  c.expect(game_set(cubic) == extremal_set(cubic, e), "game terms != extremal terms");
  auto report = verify_main_theorem(cubic);
  c.expect(report.passed, "verify report FAIL");
  bool interior = false;
  for (const auto& t : report.interior) interior |= t.exponents == std::vector<long>{2, 1, 1, 2} && t.coefficient == 18;
  c.expect(interior && report.interior.size() == 1, "18a²bcd² not the sole interior term");
}

void criterion3(Check& c) {
  const auto expected = P("a*b^2*c - 4*a^2*c^2");
  c.expect(ea_univariate(2) == expected, "ea_univariate(2) = " + ea_univariate(2).to_string());
  const auto quad_res = P("(b1*c2 - c1*b2)*(a1*b2 - b1*a2) - (c1*a2 - a1*c2)^2");
  SpecializationMap logd{{"a1", P("a")}, {"b1", P("b")}, {"c1", P("c")},
                         {"a2", P("2*a")}, {"b2", P("b")}, {"c2", P("0")}};
  const auto s = specialize(quad_res, logd);
  c.expect(s == expected || s == -expected, "specialization gave " + s.to_string());
  // the same specialization read off the log-derivative matrix of {0, 1, 2}
  auto m = log_derivative_matrix(oracle::load("quadratic"), default_log_derivative_basis(1));
  SpecializationMap from_matrix;
  const char* names[2][3] = {{"c1", "b1", "a1"}, {"c2", "b2", "a2"}};
  // rows are the points X^0, X^1, X^2 (coefficients c, b, a); Y-homogenized order is reversed
  for (int col = 0; col < 2; ++col) {
    for (int row = 0; row < 3; ++row) from_matrix[names[col][row]] = m[static_cast<std::size_t>(row)][col];
  }
  const auto relabel = std::map<std::string, std::string>{{"a", "c"}, {"c", "a"}};
  const auto s2 = specialize(quad_res, from_matrix).renamed(relabel);
  c.expect(s2 == expected || s2 == -expected, "matrix specialization gave " + s2.to_string());
}

void criterion4(Check& c) {
  auto quartic = oracle::load("quartic");
  auto coherent = enumerate_coherent_triangulations(quartic);
  c.expect(coherent.size() == 8, "coherent count " + std::to_string(coherent.size()));
  auto game = game_set(quartic);
  auto has = [&](const char* coeff, std::vector<long> reduced) {
    reduced[0] += 1;
    reduced[4] += 1;
    return game.count({coeff, reduced}) == 1;
  };
  c.expect(has("1", {0, 2, 2, 2, 0}), "b²c²d² missing");
  // disc4 is homogeneous of degree 6, so the term is ac³d², not ac³d²e
  c.expect(has("4", {1, 0, 3, 2, 0}), "4ac³d² missing");
  c.expect(has("256", {3, 0, 0, 0, 3}), "256a³e³ missing");
  auto e = interval_oracle(4);
  c.expect(game == extremal_set(quartic, e), "8-term match against ae*disc4 failed");
  c.expect(extremal_terms(e).size() == 8, "oracle has " + std::to_string(extremal_terms(e).size()) + " extremal terms");
}

void criterion5(Check& c) {
  auto square = oracle::load("square");
  c.expect(enumerate_triangulations(square).size() == 2, "triangulation count");
  TermSet expected{{"1", {2, 1, 1, 2}}, {"1", {1, 2, 2, 1}}};
  c.expect(game_set(square) == expected, "game terms");
  c.expect(game_set(square) == extremal_set(square, P("a*b*c*d*(a*d - b*c)")), "oracle abcd(ad-bc) mismatch");
  c.expect(verify_main_theorem(square).passed, "verify FAIL");
}

void criterion6(Check& c) {
  auto pentagon = oracle::load("pentagon");
  using Factors = std::map<std::string, unsigned>;
  std::set<Factors> expected{{{"abd", 1}, {"bcd", 1}, {"cde", 1}},
                             {{"abd", 1}, {"bde", 1}, {"bce", 1}},
                             {{"ade", 1}, {"abe", 1}, {"bce", 1}},
                             {{"ade", 1}, {"ace", 2}},
                             {{"acd", 2}, {"cde", 1}}};
  std::set<Factors> got;
  std::size_t count = 0;
  for (const auto& t : enumerate_coherent_triangulations(pentagon)) {
    Factors f;
    for (const auto& [s, mult] : chow_monomial(pentagon, t.triangulation).factors) f[simplex_name(pentagon, s)] = mult;
    got.insert(f);
    ++count;
  }
  c.expect(count == 5, "expected 5 Chow monomials");
  c.expect(got == expected, "Chow monomials differ");
}

void criterion7(Check& c) {
  auto pentagon = oracle::load("pentagon");
  const auto e = P("a*c*d*e*(b^2 - 4*a*c)*(a*e^2 - b*d*e + c*d^2)");
  c.expect(game_set(pentagon) == extremal_set(pentagon, e), "game terms != Newton vertices of oracle");
  c.expect(extremal_terms(e).size() == 5, "oracle vertex count");
  c.expect(secondary_polytope(pentagon).vertices.size() == 5, "secondary polytope vertex count");
  c.expect(verify_main_theorem(pentagon).passed, "verify FAIL");
}

void criterion8(Check& c) {
  for (const char* name : {"pentagon", "cubic"}) {
    auto config = oracle::load(name);
    for (const auto& s : oracle::full_simplices(config)) {
      auto img = plucker_specialization(config, s);
      c.expect(abs(img.coefficient) == normalized_volume(config, s),
               std::string(name) + ": volume mismatch on " + simplex_name(config, s));
    }
  }
  auto pentagon = oracle::load("pentagon");
  auto acd = plucker_specialization(pentagon, Simplex({0, 2, 3}));
  c.expect(abs(acd.coefficient) == 2 && acd.monomial == P("a*c*d"),
           "pi_acd -> " + acd.coefficient.get_str() + "*" + acd.monomial.to_string());
}

void criterion9(Check& c) {
  using Grid = std::vector<std::vector<std::string>>;
  const Grid d4{{"a1", "b1", "c1", "0"}, {"0", "a1", "b1", "c1"}, {"a2", "b2", "c2", "0"}, {"0", "a2", "b2", "c2"}};
  const Grid d6{{"a1", "b1", "c1", "d1", "0", "0"}, {"0", "a1", "b1", "c1", "d1", "0"},
                {"0", "0", "a1", "b1", "c1", "d1"}, {"a2", "b2", "c2", "d2", "0", "0"},
                {"0", "a2", "b2", "c2", "d2", "0"}, {"0", "0", "a2", "b2", "c2", "d2"}};
  const auto m4 = sylvester_matrix(UnivariateSymbolic::generic(2, "1"), UnivariateSymbolic::generic(2, "2"));
  const auto m6 = sylvester_matrix(UnivariateSymbolic::generic(3, "1"), UnivariateSymbolic::generic(3, "2"));
  c.expect(rendered(m4) == d4, "4x4 layout");
  c.expect(rendered(m6) == d6, "6x6 layout");
  // the quadratic resultant formula is the negative of the usual Sylvester
  // determinant; both cut out the same hypersurface
  c.expect(bareiss_determinant(m4) == -P("(b1*c2 - c1*b2)*(a1*b2 - b1*a2) - (c1*a2 - a1*c2)^2"), "det D != -quad_res");
}

void criterion10(Check& c) {
  auto names = oracle::example_names();
  names.push_back("nested_triangles");
  std::size_t triangulations = 0, certificates = 0;
  for (const auto& name : names) {
    auto config = oracle::load(name);
    const Integer target = Integer(static_cast<long>(config.dim() + 1)) * hull_volume(config);
    for (const auto& t : enumerate_triangulations(config)) {
      long sum = 0;
      for (long x : gkz_vector(config, t).entries) sum += x;
      c.expect(sum == target, name + ": GKZ sum rule");
      ++triangulations;
    }
    for (const auto& ct : enumerate_coherent_triangulations(config)) {
      c.expect(ct.certificate.slack > 0 && check_certificate(config, ct.triangulation, ct.certificate),
               name + ": certificate does not re-verify");
      c.expect(triangulation_from_heights(config, ct.certificate.heights) == ct.triangulation,
               name + ": heights do not round-trip");
      ++certificates;
    }
  }
  // root detection: every pair of monic polynomials with roots in -3..3,
  // degrees 1..2 each plus cubic-by-quadratic
  std::vector<std::vector<long>> roots;
  for (long r = -3; r <= 3; ++r) roots.push_back({r});
  for (long r = -3; r <= 3; ++r) {
    for (long s = r; s <= 3; ++s) roots.push_back({r, s});
  }
  for (long r = -3; r <= 3; ++r) {
    for (long s = r; s <= 3; ++s) {
      for (long t = s; t <= 3; ++t) roots.push_back({r, s, t});
    }
  }
  std::size_t pairs = 0;
  for (const auto& fr : roots) {
    for (const auto& gr : roots) {
      if (fr.size() + gr.size() > 5) continue;
      bool share = false;
      for (long r : fr) share |= std::find(gr.begin(), gr.end(), r) != gr.end();
      const auto f = oracle::as_constants(oracle::from_roots(fr));
      const auto g = oracle::as_constants(oracle::from_roots(gr));
      c.expect(resultant(f, g).is_zero() == share, "root detection failed");
      ++pairs;
    }
  }
  // Bareiss against cofactor expansion
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> coeff(-2, 2);
  std::size_t matrices = 0;
  for (int n = 1; n <= 4; ++n) {
    PolyMatrix sym(n, std::vector<SparsePoly>(n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) sym[i][j] = SparsePoly::variable("m" + std::to_string(i) + std::to_string(j));
    }
    c.expect(bareiss_determinant(sym) == oracle::cofactor_det(sym), "symbolic Bareiss");
    for (int trial = 0; trial < 250; ++trial) {
      PolyMatrix m(n, std::vector<SparsePoly>(n));
      for (auto& row : m) {
        for (auto& e : row) {
          e = SparsePoly::constant(coeff(rng));
          for (const char* v : {"x", "y", "z"}) e += Integer(coeff(rng)) * SparsePoly::variable(v);
          if (coeff(rng) == 0) e = SparsePoly::constant(0);
        }
      }
      c.expect(bareiss_determinant(m) == oracle::cofactor_det(m), "random Bareiss");
      ++matrices;
    }
  }
  c.detail << (c.ok ? "" : "; ") << triangulations << " triangulations, " << certificates << " certificates, "
           << pairs << " root pairs, " << matrices + 4 << " matrices";
}

void criterion11(Check& c) {
  auto config = oracle::load("nested_triangles");
  const std::string twisted = "abd acf adf bce bde cef deg dfi dgi efh egh fhi ghi  gkz";
  int status = 0;
  const auto all = run_cli("triangulate --include-noncoherent " + cfg("nested_triangles"), &status);
  c.expect(status == 0, "triangulate --include-noncoherent failed");
  const auto at = all.find(twisted);
  c.expect(at != std::string::npos, "twisted triangulation not enumerated");
  if (at != std::string::npos) {
    c.expect(all.substr(at, all.find('\n', at) - at).ends_with("not coherent"), "twisted triangulation certified");
  }
  const auto coherent = run_cli("triangulate " + cfg("nested_triangles"), &status);
  c.expect(coherent.find(twisted) == std::string::npos, "twisted triangulation listed as coherent");
  // the same triangulation built by hand
  std::vector<Simplex> cells{Simplex({6, 7, 8})};
  for (std::size_t k = 0; k < 3; ++k) {
    const std::size_t n = (k + 1) % 3;
    cells.push_back(Simplex({3 + k, 3 + n, 6 + k}));
    cells.push_back(Simplex({6 + k, 6 + n, 3 + n}));
    cells.push_back(Simplex({k, n, 3 + k}));
    cells.push_back(Simplex({3 + k, 3 + n, n}));
  }
  Triangulation t(cells);
  c.expect(is_triangulation(config, t.simplices()), "hand-built twisted complex is not a triangulation");
  c.expect(!is_coherent(config, t), "is_coherent found a certificate");
  c.expect(!oracle::coherent_by_global_lp(config, t), "global LP feasible");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"cubic game emits exactly the 4 monomials", criterion1},
      {"cubic extremal terms of ad*Res(f,f')/a match the game; 18a^2bcd^2 interior", criterion2},
      {"quadratic E_A and log-derivative specialization", criterion3},
      {"quartic: 8 coherent triangulations, b²c²d², 4ac³d², 256a³e³, full match with ae*disc4", criterion4},
      {"square: 2 triangulations, oracle abcd(ad-bc)", criterion5},
      {"pentagon Chow monomials", criterion6},
      {"pentagon verification and secondary polytope", criterion7},
      {"Pluecker specialization volumes, pi_acd -> 2acd", criterion8},
      {"Sylvester 4x4 and 6x6 layouts, det D = -quad_res (equal up to global sign)", criterion9},
      {"property suites", criterion10},
      {"negative control: non-coherent nested-triangle triangulation", criterion11},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail << "exception: " << e.what();
    }
    failures += !c.ok;
    std::cout << (c.ok ? "PASS" : "FAIL") << "  criterion " << i + 1 << ": " << criteria[i].first;
    if (!c.detail.str().empty()) std::cout << "  (" << c.detail.str() << ")";
    std::cout << '\n';
  }
  std::cout << criteria.size() - failures << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
