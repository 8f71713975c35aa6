#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gkz/exact.hpp"

namespace gkz {

using LatticePoint = std::vector<long>;

/// A labeled, full-dimensional finite subset A of Z^d. Immutable once built.
class PointConfiguration {
 public:
  /// Validates and builds a configuration. When declared_dim is given every
  /// point must have exactly that many coordinates.
  static PointConfiguration create(std::vector<LatticePoint> points, std::vector<std::string> labels,
                                   std::optional<std::size_t> declared_dim = std::nullopt);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }

  const LatticePoint& point(std::size_t i) const { return points_.at(i); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<LatticePoint>& points() const { return points_; }
  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<std::size_t> index_of(std::string_view label) const;

  friend bool operator==(const PointConfiguration&, const PointConfiguration&) = default;

 private:
  PointConfiguration() = default;

  std::vector<LatticePoint> points_;
  std::vector<std::string> labels_;
  std::size_t dim_ = 0;
};

/// "a", "b", ..., "z", then "p26", "p27", ...
std::vector<std::string> default_labels(std::size_t n);

/// A set of point indices, kept sorted. Full-dimensional simplices of a
/// configuration have dim+1 vertices.
class Simplex {
 public:
  Simplex() = default;
  explicit Simplex(std::vector<std::size_t> vertices);

  const std::vector<std::size_t>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool contains(std::size_t i) const;

  friend auto operator<=>(const Simplex&, const Simplex&) = default;
  friend bool operator==(const Simplex&, const Simplex&) = default;

 private:
  std::vector<std::size_t> vertices_;
};

/// A face of conv(A): all points of A on the face, an integer covector whose
/// maximum over A is attained exactly on those points (zero for A itself),
/// and the face's intrinsic dimension.
struct Face {
  std::vector<std::size_t> point_indices;
  LatticePoint supporting_normal;
  std::size_t dim = 0;

  friend bool operator==(const Face&, const Face&) = default;
};

/// |det(v1 - v0, ..., vd - v0)|; the unit simplex has volume 1.
/// Throws DegenerateSimplex for a zero determinant.
Integer normalized_volume(const PointConfiguration& config, const Simplex& s);

/// Signed version of the same determinant (no degeneracy check).
Integer oriented_volume(const PointConfiguration& config, const Simplex& s);

/// Dimension of the affine span of the selected points (-1 maps to 0 for
/// an empty selection).
std::size_t affine_dimension(const PointConfiguration& config, const std::vector<std::size_t>& indices);

/// All faces of conv(A) of every dimension, sorted by (dim, point_indices).
std::vector<Face> faces(const PointConfiguration& config);

/// Indices of the points that are vertices of conv(A).
std::vector<std::size_t> hull_vertices(const PointConfiguration& config);

/// Pulling triangulation of conv(A) that uses only its vertices: cone the
/// lowest-index vertex over the pulled triangulations of the facets missing it.
std::vector<Simplex> pulling_triangulation(const PointConfiguration& config);

/// Normalized lattice volume of conv(A), summed over the pulling triangulation.
Integer hull_volume(const PointConfiguration& config);

/// Concatenated labels of the simplex vertices, e.g. "abd".
std::string simplex_name(const PointConfiguration& config, const Simplex& s);

}  // namespace gkz
