#include "gkz/config.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gkz/error.hpp"

namespace gkz {

namespace {

RationalMatrix edge_vectors(const std::vector<LatticePoint>& pts, const std::vector<std::size_t>& idx) {
  RationalMatrix rows;
  for (std::size_t k = 1; k < idx.size(); ++k) {
    std::vector<Rational> row;
    for (std::size_t c = 0; c < pts[idx[0]].size(); ++c) row.emplace_back(pts[idx[k]][c] - pts[idx[0]][c]);
    rows.push_back(std::move(row));
  }
  return rows;
}

// Generalized cross product of d-1 integer vectors in Z^d: the covector
// whose pairing with w equals det(v_1, ..., v_{d-1}, w).
LatticePoint cross_product(const std::vector<LatticePoint>& vs, std::size_t d) {
  LatticePoint normal(d);
  for (std::size_t k = 0; k < d; ++k) {
    IntegerMatrix minor;
    for (const auto& v : vs) {
      std::vector<Integer> row;
      for (std::size_t c = 0; c < d; ++c) {
        if (c != k) row.emplace_back(v[c]);
      }
      minor.push_back(std::move(row));
    }
    Integer det = integer_determinant(std::move(minor));
    if ((d - 1 + k) % 2 == 1) det = -det;
    normal[k] = det.get_si();
  }
  return normal;
}

long dot(const LatticePoint& a, const LatticePoint& b) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void make_primitive(LatticePoint& v) {
  const long g = gcd_of(v);
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
}

// Calls visit(subset) for every k-subset of {0..n-1} in lexicographic order.
template <typename Visit>
void for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

struct Facet {
  std::vector<std::size_t> points;
  LatticePoint normal;  // outward: maximized on the facet
};

std::vector<Facet> facets(const PointConfiguration& config) {
  const std::size_t d = config.dim();
  const auto& pts = config.points();
  std::map<std::vector<std::size_t>, LatticePoint> found;
  for_each_subset(config.size(), d, [&](const std::vector<std::size_t>& idx) {
    std::vector<LatticePoint> vs;
    for (std::size_t k = 1; k < idx.size(); ++k) {
      LatticePoint v(d);
      for (std::size_t c = 0; c < d; ++c) v[c] = pts[idx[k]][c] - pts[idx[0]][c];
      vs.push_back(std::move(v));
    }
    LatticePoint normal = cross_product(vs, d);
    if (std::all_of(normal.begin(), normal.end(), [](long x) { return x == 0; })) return;
    make_primitive(normal);
    const long level = dot(normal, pts[idx[0]]);
    bool above = false, below = false;
    std::vector<std::size_t> on;
    for (std::size_t j = 0; j < pts.size(); ++j) {
      const long v = dot(normal, pts[j]);
      if (v > level) above = true;
      else if (v < level) below = true;
      else on.push_back(j);
    }
    if (above && below) return;
    if (above) {
      for (auto& x : normal) x = -x;
    }
    found.emplace(std::move(on), std::move(normal));
  });
  std::vector<Facet> out;
  for (auto& [points, normal] : found) out.push_back({points, normal});
  return out;
}

}  // namespace

PointConfiguration PointConfiguration::create(std::vector<LatticePoint> points,
                                              std::vector<std::string> labels,
                                              std::optional<std::size_t> declared_dim) {
  if (points.empty()) throw Error(ErrorKind::InvalidInput, "configuration has no points");
  if (labels.size() != points.size()) {
    throw Error(ErrorKind::InvalidInput, "expected one label per point");
  }
  const std::size_t d = declared_dim.value_or(points.front().size());
  if (d == 0) throw Error(ErrorKind::InvalidInput, "ambient dimension must be positive");
  for (const auto& p : points) {
    if (p.size() != d) throw Error(ErrorKind::InvalidInput, "point has wrong number of coordinates");
  }
  std::set<LatticePoint> seen_points;
  for (const auto& p : points) {
    if (!seen_points.insert(p).second) throw Error(ErrorKind::DuplicatePoint, "repeated point");
  }
  std::set<std::string> seen_labels;
  for (const auto& l : labels) {
    if (l.empty()) throw Error(ErrorKind::InvalidInput, "empty label");
    if (!seen_labels.insert(l).second) throw Error(ErrorKind::DuplicateLabel, "repeated label '" + l + "'");
  }
  std::vector<std::size_t> all(points.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  const std::size_t r = rank(edge_vectors(points, all));
  if (r < d) {
    throw Error(ErrorKind::NotFullDimensional,
                "affine span has dimension " + std::to_string(r) + " < " + std::to_string(d));
  }
  PointConfiguration config;
  config.points_ = std::move(points);
  config.labels_ = std::move(labels);
  config.dim_ = d;
  return config;
}

std::optional<std::size_t> PointConfiguration::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "p" + std::to_string(i));
  }
  return out;
}

Simplex::Simplex(std::vector<std::size_t> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw Error(ErrorKind::InvalidInput, "simplex has a repeated vertex");
  }
}

bool Simplex::contains(std::size_t i) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), i);
}

Integer oriented_volume(const PointConfiguration& config, const Simplex& s) {
  const std::size_t d = config.dim();
  if (s.size() != d + 1) {
    throw Error(ErrorKind::InvalidInput, "simplex needs " + std::to_string(d + 1) + " vertices");
  }
  for (std::size_t v : s.vertices()) {
    if (v >= config.size()) throw Error(ErrorKind::IndexOutOfRange, "simplex vertex index");
  }
  const auto& base = config.point(s.vertices()[0]);
  IntegerMatrix m;
  for (std::size_t k = 1; k <= d; ++k) {
    const auto& p = config.point(s.vertices()[k]);
    std::vector<Integer> row;
    for (std::size_t c = 0; c < d; ++c) row.emplace_back(p[c] - base[c]);
    m.push_back(std::move(row));
  }
  return integer_determinant(std::move(m));
}

Integer normalized_volume(const PointConfiguration& config, const Simplex& s) {
  Integer det = oriented_volume(config, s);
  if (det == 0) throw Error(ErrorKind::DegenerateSimplex, "simplex " + simplex_name(config, s) + " is flat");
  return abs(det);
}

std::size_t affine_dimension(const PointConfiguration& config, const std::vector<std::size_t>& indices) {
  if (indices.empty()) return 0;
  return rank(edge_vectors(config.points(), indices));
}

std::vector<Face> faces(const PointConfiguration& config) {
  const auto fs = facets(config);
  // Every proper face is an intersection of facets; close the facet point
  // sets under pairwise intersection.
  std::set<std::vector<std::size_t>> sets;
  for (const auto& f : fs) sets.insert(f.points);
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<std::vector<std::size_t>> current(sets.begin(), sets.end());
    for (std::size_t i = 0; i < current.size(); ++i) {
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        std::vector<std::size_t> both;
        std::set_intersection(current[i].begin(), current[i].end(), current[j].begin(), current[j].end(),
                              std::back_inserter(both));
        if (!both.empty() && sets.insert(both).second) grew = true;
      }
    }
  }

  std::vector<Face> out;
  for (const auto& pts : sets) {
    Face face;
    face.point_indices = pts;
    face.dim = affine_dimension(config, pts);
    face.supporting_normal.assign(config.dim(), 0);
    // The sum of the facet normals through the face is tight exactly on it.
    for (const auto& f : fs) {
      if (std::includes(f.points.begin(), f.points.end(), pts.begin(), pts.end())) {
        for (std::size_t c = 0; c < config.dim(); ++c) face.supporting_normal[c] += f.normal[c];
      }
    }
    make_primitive(face.supporting_normal);
    out.push_back(std::move(face));
  }
  Face whole;
  whole.point_indices.resize(config.size());
  for (std::size_t i = 0; i < config.size(); ++i) whole.point_indices[i] = i;
  whole.supporting_normal.assign(config.dim(), 0);
  whole.dim = config.dim();
  out.push_back(std::move(whole));
  std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
    return std::tie(a.dim, a.point_indices) < std::tie(b.dim, b.point_indices);
  });
  return out;
}

std::vector<std::size_t> hull_vertices(const PointConfiguration& config) {
  std::vector<std::size_t> out;
  for (const auto& f : faces(config)) {
    if (f.dim == 0) out.push_back(f.point_indices.front());
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<std::vector<std::size_t>> pull(const std::vector<Face>& all, const Face& face) {
  if (face.dim == 0) return {{face.point_indices.front()}};
  std::size_t apex = SIZE_MAX;
  for (const auto& f : all) {
    if (f.dim == 0 && std::binary_search(face.point_indices.begin(), face.point_indices.end(),
                                         f.point_indices.front())) {
      apex = std::min(apex, f.point_indices.front());
    }
  }
  std::vector<std::vector<std::size_t>> out;
  for (const auto& g : all) {
    if (g.dim + 1 != face.dim) continue;
    if (!std::includes(face.point_indices.begin(), face.point_indices.end(), g.point_indices.begin(),
                       g.point_indices.end())) {
      continue;
    }
    if (std::binary_search(g.point_indices.begin(), g.point_indices.end(), apex)) continue;
    for (auto cell : pull(all, g)) {
      cell.push_back(apex);
      out.push_back(std::move(cell));
    }
  }
  return out;
}

}  // namespace

std::vector<Simplex> pulling_triangulation(const PointConfiguration& config) {
  const auto all = faces(config);
  std::vector<Simplex> out;
  for (auto& cell : pull(all, all.back())) out.emplace_back(std::move(cell));
  std::sort(out.begin(), out.end());
  return out;
}

Integer hull_volume(const PointConfiguration& config) {
  Integer total = 0;
  for (const auto& s : pulling_triangulation(config)) total += normalized_volume(config, s);
  return total;
}

std::string simplex_name(const PointConfiguration& config, const Simplex& s) {
  bool short_labels = true;
  for (std::size_t v : s.vertices()) {
    if (v >= config.size() || config.label(v).size() != 1) short_labels = false;
  }
  std::string out;
  for (std::size_t k = 0; k < s.size(); ++k) {
    const std::size_t v = s.vertices()[k];
    if (!short_labels && k > 0) out += ',';
    out += v < config.size() ? config.label(v) : "?" + std::to_string(v);
  }
  return out;
}

}  // namespace gkz
