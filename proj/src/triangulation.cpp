#include "gkz/triangulation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "gkz/error.hpp"
#include "gkz/lp.hpp"

namespace gkz {

Triangulation::Triangulation(std::vector<Simplex> simplices) : simplices_(std::move(simplices)) {
  std::sort(simplices_.begin(), simplices_.end());
  std::set<std::size_t> used;
  for (const auto& s : simplices_) used.insert(s.vertices().begin(), s.vertices().end());
  used_points_.assign(used.begin(), used.end());
}

bool Triangulation::uses(std::size_t point) const {
  return std::binary_search(used_points_.begin(), used_points_.end(), point);
}

namespace {

std::vector<Rational> to_rational(const LatticePoint& p) {
  return std::vector<Rational>(p.begin(), p.end());
}

// Barycentric coordinates of x with respect to the vertices of s.
std::vector<Rational> barycentric(const PointConfiguration& config, const Simplex& s,
                                  const std::vector<Rational>& x) {
  const std::size_t d = config.dim();
  RationalMatrix a(d + 1, std::vector<Rational>(d + 1));
  for (std::size_t k = 0; k <= d; ++k) {
    const auto& v = config.point(s.vertices()[k]);
    for (std::size_t c = 0; c < d; ++c) a[c][k] = v[c];
    a[d][k] = 1;
  }
  std::vector<Rational> rhs(x);
  rhs.emplace_back(1);
  auto sol = solve(std::move(a), std::move(rhs));
  if (!sol) throw Error(ErrorKind::DegenerateSimplex, "simplex " + simplex_name(config, s) + " is flat");
  return *sol;
}

// Sign of det(r_1 - r_0, ..., r_{d-1} - r_0, x - r_0) for an ordered ridge r.
int orientation(const PointConfiguration& config, const std::vector<std::size_t>& ridge,
                const std::vector<Rational>& x) {
  const std::size_t d = config.dim();
  const auto& base = config.point(ridge[0]);
  RationalMatrix m;
  for (std::size_t k = 1; k < ridge.size(); ++k) {
    std::vector<Rational> row;
    for (std::size_t c = 0; c < d; ++c) row.emplace_back(config.point(ridge[k])[c] - base[c]);
    m.push_back(std::move(row));
  }
  std::vector<Rational> last;
  for (std::size_t c = 0; c < d; ++c) last.push_back(x[c] - base[c]);
  m.push_back(std::move(last));
  return sign(determinant(std::move(m)));
}

// All full-dimensional simplices on the configuration, in lexicographic order.
std::vector<Simplex> all_simplices(const PointConfiguration& config) {
  const std::size_t n = config.size();
  const std::size_t k = config.dim() + 1;
  std::vector<Simplex> out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return out;
  for (;;) {
    Simplex s(idx);
    if (oriented_volume(config, s) != 0) out.push_back(std::move(s));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

class Enumerator {
 public:
  explicit Enumerator(const PointConfiguration& config)
      : config_(config), simplices_(all_simplices(config)), hull_volume_(hull_volume(config)) {
    const std::size_t d = config.dim();
    std::vector<std::vector<std::size_t>> boundary_facets;
    for (const auto& f : faces(config)) {
      if (f.dim + 1 == d) boundary_facets.push_back(f.point_indices);
    }
    std::map<std::vector<std::size_t>, std::size_t> ridge_ids;
    for (std::size_t s = 0; s < simplices_.size(); ++s) {
      const auto& verts = simplices_[s].vertices();
      volumes_.push_back(normalized_volume(config, simplices_[s]));
      std::vector<std::size_t> ids;
      std::vector<int> sides;
      for (std::size_t drop = 0; drop < verts.size(); ++drop) {
        std::vector<std::size_t> ridge;
        for (std::size_t k = 0; k < verts.size(); ++k) {
          if (k != drop) ridge.push_back(verts[k]);
        }
        auto [it, inserted] = ridge_ids.emplace(ridge, ridge_vertices_.size());
        if (inserted) {
          ridge_vertices_.push_back(ridge);
          simplices_with_ridge_.emplace_back();
          bool on_boundary = false;
          for (const auto& f : boundary_facets) {
            if (std::includes(f.begin(), f.end(), ridge.begin(), ridge.end())) on_boundary = true;
          }
          ridge_boundary_.push_back(on_boundary);
        }
        ids.push_back(it->second);
        simplices_with_ridge_[it->second].push_back(s);
        sides.push_back(orientation(config, ridge, to_rational(config.point(verts[drop]))));
      }
      ridges_of_.push_back(std::move(ids));
      sides_.push_back(std::move(sides));
    }
    compatible_.assign(simplices_.size() * simplices_.size(), -1);
    ridge_count_.assign(ridge_vertices_.size(), 0);
    chosen_flag_.assign(simplices_.size(), false);
  }

  std::vector<Triangulation> run() {
    if (simplices_.empty()) return {};
    const auto anchor = generic_point();
    for (std::size_t s = 0; s < simplices_.size(); ++s) {
      const auto lambda = barycentric(config_, simplices_[s], anchor);
      if (std::all_of(lambda.begin(), lambda.end(), [](const Rational& q) { return q > 0; })) {
        add(s);
        search();
        remove(s);
      }
    }
    return {found_.begin(), found_.end()};
  }

 private:
  // A point interior to the first simplex lying on no hyperplane spanned by
  // points of A. Every triangulation has exactly one simplex containing it.
  std::vector<Rational> generic_point() const {
    const std::size_t d = config_.dim();
    std::vector<std::vector<std::size_t>> hyperplanes;
    std::vector<std::size_t> idx(d);
    for (std::size_t i = 0; i < d; ++i) idx[i] = i;
    const std::size_t n = config_.size();
    for (;;) {
      if (affine_dimension(config_, idx) + 1 == d) hyperplanes.push_back(idx);
      std::size_t i = d;
      while (i > 0 && idx[i - 1] == n - d + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }
    const auto& first = simplices_.front().vertices();
    // Points along a moment curve inside the first simplex; each hyperplane
    // meets the curve at most d times.
    for (long m = 2;; ++m) {
      const Rational t(1, m);
      std::vector<Rational> weights;
      Rational power = 1, total = 0;
      for (std::size_t k = 0; k <= d; ++k) {
        weights.push_back(1 + power);
        total += weights.back();
        power *= t;
      }
      std::vector<Rational> x(d);
      for (std::size_t k = 0; k <= d; ++k) {
        for (std::size_t c = 0; c < d; ++c) x[c] += weights[k] / total * config_.point(first[k])[c];
      }
      const bool generic = std::none_of(hyperplanes.begin(), hyperplanes.end(),
                                        [&](const auto& h) { return orientation(config_, h, x) == 0; });
      if (generic) return x;
    }
  }

  bool compatible(std::size_t a, std::size_t b) {
    auto& slot = compatible_[a * simplices_.size() + b];
    if (slot < 0) {
      slot = intersect_properly(config_, simplices_[a], simplices_[b]) ? 1 : 0;
      compatible_[b * simplices_.size() + a] = slot;
    }
    return slot == 1;
  }

  void add(std::size_t s) {
    chosen_.push_back(s);
    chosen_flag_[s] = true;
    for (std::size_t r : ridges_of_[s]) {
      if (ridge_boundary_[r]) continue;
      if (++ridge_count_[r] == 1) open_.insert(r);
      else open_.erase(r);
    }
  }

  void remove(std::size_t s) {
    chosen_.pop_back();
    chosen_flag_[s] = false;
    for (std::size_t r : ridges_of_[s]) {
      if (ridge_boundary_[r]) continue;
      if (--ridge_count_[r] == 1) open_.insert(r);
      else open_.erase(r);
    }
  }

  int side_of(std::size_t s, std::size_t ridge) const {
    const auto& ids = ridges_of_[s];
    for (std::size_t k = 0; k < ids.size(); ++k) {
      if (ids[k] == ridge) return sides_[s][k];
    }
    throw std::logic_error("simplex does not contain ridge");
  }

  void search() {
    if (open_.empty()) {
      record();
      return;
    }
    const std::size_t ridge = *open_.begin();
    std::size_t owner = SIZE_MAX;
    for (std::size_t s : simplices_with_ridge_[ridge]) {
      if (chosen_flag_[s]) owner = s;
    }
    const int owner_side = side_of(owner, ridge);
    for (std::size_t cand : simplices_with_ridge_[ridge]) {
      if (chosen_flag_[cand] || side_of(cand, ridge) == owner_side) continue;
      const bool fits = std::all_of(chosen_.begin(), chosen_.end(), [&](std::size_t c) { return compatible(c, cand); });
      if (!fits) continue;
      add(cand);
      search();
      remove(cand);
    }
  }

  void record() {
    Integer total = 0;
    std::vector<Simplex> cells;
    for (std::size_t s : chosen_) {
      total += volumes_[s];
      cells.push_back(simplices_[s]);
    }
    if (total != hull_volume_) throw std::logic_error("closed simplicial complex does not cover conv(A)");
    found_.insert(Triangulation(std::move(cells)));
  }

  const PointConfiguration& config_;
  std::vector<Simplex> simplices_;
  std::vector<Integer> volumes_;
  Integer hull_volume_;
  std::vector<std::vector<std::size_t>> ridge_vertices_;
  std::vector<std::vector<std::size_t>> simplices_with_ridge_;
  std::vector<bool> ridge_boundary_;
  std::vector<std::vector<std::size_t>> ridges_of_;
  std::vector<std::vector<int>> sides_;
  std::vector<signed char> compatible_;

  std::vector<std::size_t> chosen_;
  std::vector<bool> chosen_flag_;
  std::vector<int> ridge_count_;
  std::set<std::size_t> open_;
  std::set<Triangulation> found_;
};

void check_cap(const PointConfiguration& config, const EnumerationOptions& options) {
  if (config.size() > options.cap) {
    throw Error(ErrorKind::CapExceeded, std::to_string(config.size()) + " points exceeds the enumeration cap of " +
                                            std::to_string(options.cap));
  }
}

Rational interpolate(const std::vector<Rational>& lambda, const Simplex& s, const std::vector<Rational>& heights) {
  Rational value = 0;
  for (std::size_t k = 0; k < lambda.size(); ++k) value += lambda[k] * heights[s.vertices()[k]];
  return value;
}

}  // namespace

bool intersect_properly(const PointConfiguration& config, const Simplex& s, const Simplex& t) {
  if (s == t) return true;
  const std::size_t d = config.dim();
  // Variables: h_1..h_d, h_0 (free), eps >= 0.  maximize eps <= 1.
  LinearProgram lp(d + 2);
  for (std::size_t c = 0; c <= d; ++c) lp.set_free(c);
  std::vector<Rational> objective(d + 2);
  objective[d + 1] = 1;
  lp.set_objective(objective);
  std::vector<Rational> cap_row(d + 2);
  cap_row[d + 1] = 1;
  lp.add_constraint(cap_row, Relation::LessEqual, 1);
  auto functional = [&](std::size_t v) {
    std::vector<Rational> row(d + 2);
    for (std::size_t c = 0; c < d; ++c) row[c] = config.point(v)[c];
    row[d] = 1;
    return row;
  };
  for (std::size_t v : s.vertices()) {
    auto row = functional(v);
    if (t.contains(v)) {
      lp.add_constraint(std::move(row), Relation::Equal, 0);
    } else {
      row[d + 1] = -1;
      lp.add_constraint(std::move(row), Relation::GreaterEqual, 0);
    }
  }
  for (std::size_t v : t.vertices()) {
    if (s.contains(v)) continue;
    auto row = functional(v);
    row[d + 1] = 1;
    lp.add_constraint(std::move(row), Relation::LessEqual, 0);
  }
  const auto sol = lp.maximize();
  return sol.status == LpStatus::Optimal && sol.objective > 0;
}

bool is_triangulation(const PointConfiguration& config, const std::vector<Simplex>& simplices) {
  Integer total = 0;
  for (const auto& s : simplices) {
    if (s.size() != config.dim() + 1) return false;
    for (std::size_t v : s.vertices()) {
      if (v >= config.size()) return false;
    }
    const Integer vol = abs(oriented_volume(config, s));
    if (vol == 0) return false;
    total += vol;
  }
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    for (std::size_t j = i + 1; j < simplices.size(); ++j) {
      if (simplices[i] == simplices[j] || !intersect_properly(config, simplices[i], simplices[j])) return false;
    }
  }
  return total == hull_volume(config);
}

std::vector<Triangulation> enumerate_triangulations(const PointConfiguration& config,
                                                    const EnumerationOptions& options) {
  check_cap(config, options);
  return Enumerator(config).run();
}

std::optional<HeightCertificate> is_coherent(const PointConfiguration& config, const Triangulation& t) {
  const std::size_t n = config.size();
  // Heights w (free) and slack in [0, 1]; maximize slack subject to the
  // local folding conditions: across every interior ridge the apex of one
  // cell sits at least `slack` above the other cell's affine extension, and
  // every unused point sits that far above the cell containing it. A strictly
  // folding convex lift satisfies the global lower-envelope condition too.
  LinearProgram lp(n + 1);
  for (std::size_t j = 0; j < n; ++j) lp.set_free(j);
  std::vector<Rational> objective(n + 1);
  objective[n] = 1;
  lp.set_objective(objective);
  std::vector<Rational> cap_row(n + 1);
  cap_row[n] = 1;
  lp.add_constraint(cap_row, Relation::LessEqual, 1);

  auto lift_above = [&](const Simplex& s, std::size_t j) {
    const auto lambda = barycentric(config, s, to_rational(config.point(j)));
    std::vector<Rational> row(n + 1);
    row[j] = 1;
    for (std::size_t k = 0; k < lambda.size(); ++k) row[s.vertices()[k]] -= lambda[k];
    row[n] = -1;
    lp.add_constraint(std::move(row), Relation::GreaterEqual, 0);
  };

  const auto& cells = t.simplices();
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> cells_by_ridge;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const auto& verts = cells[c].vertices();
    for (std::size_t drop = 0; drop < verts.size(); ++drop) {
      std::vector<std::size_t> ridge;
      for (std::size_t k = 0; k < verts.size(); ++k) {
        if (k != drop) ridge.push_back(verts[k]);
      }
      cells_by_ridge[ridge].push_back(c);
    }
  }
  for (const auto& [ridge, owners] : cells_by_ridge) {
    if (owners.size() != 2) continue;
    for (int side = 0; side < 2; ++side) {
      const Simplex& s = cells[owners[side]];
      for (std::size_t v : cells[owners[1 - side]].vertices()) {
        if (!s.contains(v)) lift_above(s, v);
      }
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (t.uses(j)) continue;
    const auto x = to_rational(config.point(j));
    for (const auto& s : cells) {
      const auto lambda = barycentric(config, s, x);
      if (std::all_of(lambda.begin(), lambda.end(), [](const Rational& q) { return q >= 0; })) {
        lift_above(s, j);
        break;
      }
    }
  }
  const auto sol = lp.maximize();
  if (sol.status != LpStatus::Optimal || sol.objective <= 0) return std::nullopt;

  HeightCertificate cert;
  cert.heights.assign(sol.x.begin(), sol.x.begin() + static_cast<std::ptrdiff_t>(n));
  std::optional<Rational> slack;
  for (const auto& s : cells) {
    for (std::size_t j = 0; j < n; ++j) {
      if (s.contains(j)) continue;
      const Rational gap =
          cert.heights[j] - interpolate(barycentric(config, s, to_rational(config.point(j))), s, cert.heights);
      if (!slack || gap < *slack) slack = gap;
    }
  }
  cert.slack = slack.value_or(Rational(1));
  if (cert.slack <= 0) throw std::logic_error("local folding certificate is not globally convex");

  // Present the certificate with nonnegative integer heights, minimum zero.
  Integer scale = cert.slack.get_den();
  for (const auto& h : cert.heights) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), h.get_den_mpz_t());
  const Rational lowest = *std::min_element(cert.heights.begin(), cert.heights.end());
  for (auto& h : cert.heights) h = (h - lowest) * scale;
  cert.slack *= scale;
  return cert;
}

bool check_certificate(const PointConfiguration& config, const Triangulation& t, const HeightCertificate& cert) {
  if (cert.heights.size() != config.size() || cert.slack <= 0) return false;
  for (const auto& s : t.simplices()) {
    for (std::size_t j = 0; j < config.size(); ++j) {
      if (s.contains(j)) continue;
      const auto lambda = barycentric(config, s, to_rational(config.point(j)));
      if (interpolate(lambda, s, cert.heights) > cert.heights[j] - cert.slack) return false;
    }
  }
  return true;
}

std::vector<CoherentTriangulation> enumerate_coherent_triangulations(const PointConfiguration& config,
                                                                     const EnumerationOptions& options) {
  std::vector<CoherentTriangulation> out;
  for (auto& t : enumerate_triangulations(config, options)) {
    if (auto cert = is_coherent(config, t)) out.push_back({std::move(t), std::move(*cert)});
  }
  return out;
}

GkzVector gkz_vector(const PointConfiguration& config, const Triangulation& t) {
  GkzVector phi;
  phi.entries.assign(config.size(), 0);
  for (const auto& s : t.simplices()) {
    const long vol = normalized_volume(config, s).get_si();
    for (std::size_t v : s.vertices()) phi.entries[v] += vol;
  }
  return phi;
}

Triangulation triangulation_from_heights(const PointConfiguration& config, const std::vector<Rational>& heights) {
  if (heights.size() != config.size()) throw Error(ErrorKind::InvalidInput, "expected one height per point");
  std::vector<Simplex> lower;
  for (const auto& s : all_simplices(config)) {
    bool below_all = true;
    bool touches = false;
    for (std::size_t j = 0; j < config.size() && below_all; ++j) {
      if (s.contains(j)) continue;
      const Rational value = interpolate(barycentric(config, s, to_rational(config.point(j))), s, heights);
      if (value > heights[j]) below_all = false;
      else if (value == heights[j]) touches = true;
    }
    if (!below_all) continue;
    if (touches) {
      throw Error(ErrorKind::NonGenericHeights,
                  "lower cell through " + simplex_name(config, s) + " carries more than dim+1 points");
    }
    lower.push_back(s);
  }
  return Triangulation(std::move(lower));
}

}  // namespace gkz
