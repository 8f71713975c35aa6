#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "gkz/config.hpp"
#include "gkz/exact.hpp"

namespace gkz {

/// A triangulation of conv(A) by full-dimensional simplices on points of A.
/// Points of A may be left unused.
class Triangulation {
 public:
  Triangulation() = default;
  explicit Triangulation(std::vector<Simplex> simplices);

  const std::vector<Simplex>& simplices() const { return simplices_; }
  const std::vector<std::size_t>& used_points() const { return used_points_; }
  bool uses(std::size_t point) const;

  friend auto operator<=>(const Triangulation& a, const Triangulation& b) {
    return a.simplices_ <=> b.simplices_;
  }
  friend bool operator==(const Triangulation& a, const Triangulation& b) {
    return a.simplices_ == b.simplices_;
  }

 private:
  std::vector<Simplex> simplices_;
  std::vector<std::size_t> used_points_;
};

/// Lifting heights (one per point) under which the certified triangulation
/// is the lower envelope: for each simplex and each point j off it, the
/// affine interpolant of the heights at a_j is at most height(j) - slack.
struct HeightCertificate {
  std::vector<Rational> heights;
  Rational slack;
};

/// exponent(i) = total normalized volume of the simplices containing point i.
struct GkzVector {
  std::vector<long> entries;

  friend auto operator<=>(const GkzVector&, const GkzVector&) = default;
  friend bool operator==(const GkzVector&, const GkzVector&) = default;
};

struct CoherentTriangulation {
  Triangulation triangulation;
  HeightCertificate certificate;
};

struct EnumerationOptions {
  std::size_t cap = 10;  // maximum number of points accepted
};

/// Exact test that two full-dimensional simplices meet in a common face:
/// searches for an affine functional vanishing on the shared vertices,
/// positive on the rest of the first and negative on the rest of the second.
bool intersect_properly(const PointConfiguration& config, const Simplex& s, const Simplex& t);

/// Checks every Triangulation invariant: full-dimensional simplices,
/// pairwise proper intersection, volumes summing to the volume of conv(A).
bool is_triangulation(const PointConfiguration& config, const std::vector<Simplex>& simplices);

/// Every triangulation of conv(A) (coherent or not), sorted lexicographically.
/// Throws CapExceeded when the configuration has more than options.cap points.
std::vector<Triangulation> enumerate_triangulations(const PointConfiguration& config,
                                                    const EnumerationOptions& options = {});

/// Solves the regularity LP. Returns a certificate iff t is coherent.
std::optional<HeightCertificate> is_coherent(const PointConfiguration& config, const Triangulation& t);

/// Re-checks a certificate with exact arithmetic; requires slack > 0.
bool check_certificate(const PointConfiguration& config, const Triangulation& t, const HeightCertificate& cert);

std::vector<CoherentTriangulation> enumerate_coherent_triangulations(const PointConfiguration& config,
                                                                     const EnumerationOptions& options = {});

GkzVector gkz_vector(const PointConfiguration& config, const Triangulation& t);

/// Lower envelope of the lifted points. Throws NonGenericHeights when a
/// lower cell carries more than dim+1 points.
Triangulation triangulation_from_heights(const PointConfiguration& config, const std::vector<Rational>& heights);

}  // namespace gkz
