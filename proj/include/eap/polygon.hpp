#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <span>
#include <utility>
#include <vector>

#include "eap/geometry.hpp"

namespace eap {

/// Outcome of checking a vertex loop for strict convexity and the equal-area
/// property. triangle_areas holds the consecutive-edge brackets
/// [v_{i-1/2}, v_{i+1/2}] (twice the Euclidean triangle areas); l is their
/// mean, the common value on a genuine equal-area polygon.
struct ValidationReport {
  bool is_convex = false;
  bool is_equal_area = false;
  std::vector<double> triangle_areas;
  double max_rel_deviation = std::numeric_limits<double>::infinity();
  double l = 0.0;
};

namespace detail {

inline void require_loop(std::span<const Point2> vertices) {
  if (vertices.size() < 5) fail(ErrorCode::TooFewVertices, "need at least 5 vertices");
  for (const auto& p : vertices) {
    if (!is_finite(p)) fail(ErrorCode::NonFinite, "vertex coordinates must be finite");
  }
}

/// Sum of exterior turning angles; 2*pi for a positively oriented convex loop,
/// larger multiples for locally convex star polygons.
inline double turning_angle(std::span<const Point2> vertices) {
  const std::size_t n = vertices.size();
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = vertices[i] - vertices[(i + n - 1) % n];
    const Vec2 b = vertices[(i + 1) % n] - vertices[i];
    total += std::atan2(det2(a, b), dot(a, b));
  }
  return total;
}

}  // namespace detail

/// Checks the defining property [v_{i-1/2}, v_{i+1/2}] = const > 0 for every
/// cyclic index, at relative tolerance `tol` around the mean.
inline ValidationReport validate(std::span<const Point2> vertices, double tol = kEqualAreaTol) {
  detail::require_loop(vertices);
  const std::size_t n = vertices.size();

  ValidationReport report;
  report.triangle_areas.resize(n);
  bool all_positive = true;
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 prev = vertices[i] - vertices[(i + n - 1) % n];
    const Vec2 next = vertices[(i + 1) % n] - vertices[i];
    const double d = det2(prev, next);
    report.triangle_areas[i] = d;
    all_positive = all_positive && d > 0;
    sum += d;
  }
  report.l = sum / static_cast<double>(n);

  // det > 0 at every vertex still admits star polygons; a simple convex loop
  // turns by exactly one full revolution.
  report.is_convex = all_positive &&
                     std::abs(detail::turning_angle(vertices) - 2.0 * std::numbers::pi) < 1e-6;

  if (report.l > 0) {
    double dev = 0.0;
    for (double d : report.triangle_areas) dev = std::max(dev, std::abs(d - report.l));
    report.max_rel_deviation = dev / report.l;
    report.is_equal_area = report.max_rel_deviation <= tol;
  }
  return report;
}

/// Convex equal-area polygon: an ordered, positively oriented vertex loop in
/// which every triangle of three consecutive vertices has the same area.
/// Construction validates; instances are immutable values.
///
/// Indexing: edge k runs from vertex k to vertex k+1 (mod n) and carries the
/// curvature mu[k], the scalar with P_{k+2} - P_{k-1} = (3 - mu[k]) (P_{k+1} - P_k).
class EqualAreaPolygon {
 public:
  static EqualAreaPolygon from_vertices(std::vector<Point2> vertices, double tol = kEqualAreaTol) {
    ValidationReport report = validate(vertices, tol);
    if (!report.is_convex) fail(ErrorCode::NotConvex, "vertex loop is not strictly convex");
    if (!report.is_equal_area) {
      fail(ErrorCode::NotEqualArea, "triangle areas deviate beyond tolerance");
    }
    return EqualAreaPolygon(std::move(vertices), report.l, tol);
  }

  std::size_t size() const { return vertices_.size(); }
  const std::vector<Point2>& vertices() const { return vertices_; }
  const Point2& vertex(std::size_t i) const { return vertices_[i % size()]; }

  /// Common consecutive-edge bracket [v_{i-1/2}, v_{i+1/2}] (mean over i).
  double l() const { return l_; }

  /// True when l == 1 within 1e-9, the scale assumed by parallels, evolute
  /// and the isoperimetric inequality.
  bool normalized() const { return std::abs(l_ - 1.0) <= 1e-9; }

  /// Per-edge discrete curvature mu[k], invariant under nondegenerate affine maps.
  const std::vector<double>& curvatures() const { return mu_; }

  Vec2 edge(std::size_t k) const {
    return vertices_[(k + 1) % size()] - vertices_[k % size()];
  }

  /// Affine normal n_i = P_{i-1} + P_{i+1} - 2 P_i at each vertex.
  std::vector<Vec2> normals() const {
    const std::size_t n = size();
    std::vector<Vec2> out(n);
    for (std::size_t i = 0; i < n; ++i) {
      out[i] = vertices_[(i + n - 1) % n] + vertices_[(i + 1) % n] - 2.0 * vertices_[i];
    }
    return out;
  }

  Point2 centroid() const {
    Vec2 c{0, 0};
    for (const auto& p : vertices_) c += p;
    return c / static_cast<double>(size());
  }

  /// Enclosed (shoelace) area; positive for the positive orientation.
  double area() const {
    double s = 0.0;
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i) s += det2(vertices_[i], vertices_[(i + 1) % n]);
    return 0.5 * s;
  }

  /// Rescales about the centroid so that l = 1. Curvatures are ratios of
  /// parallel vectors and do not change.
  EqualAreaPolygon normalize_unit_l() const {
    if (!(l_ > 0)) fail(ErrorCode::DegenerateScale, "l must be positive");
    const double s = 1.0 / std::sqrt(l_);
    const Point2 c = centroid();
    std::vector<Point2> scaled(size());
    for (std::size_t i = 0; i < size(); ++i) scaled[i] = c + s * (vertices_[i] - c);
    return from_vertices(std::move(scaled), tol_);
  }

  /// Image under a nondegenerate affine map (orientation-preserving maps keep
  /// the vertex order; orientation-reversing ones get the loop reversed so the
  /// result is again positively oriented).
  EqualAreaPolygon transformed(const AffineMap2& map) const {
    if (std::abs(map.det()) < 1e-300) fail(ErrorCode::DegenerateMap, "map is singular");
    std::vector<Point2> mapped(size());
    for (std::size_t i = 0; i < size(); ++i) mapped[i] = map(vertices_[i]);
    if (map.det() < 0) std::reverse(mapped.begin(), mapped.end());
    return from_vertices(std::move(mapped), tol_);
  }

  double validation_tol() const { return tol_; }

 private:
  EqualAreaPolygon(std::vector<Point2> vertices, double l, double tol)
      : vertices_(std::move(vertices)), l_(l), tol_(tol) {
    compute_curvatures();
  }

  void compute_curvatures() {
    const std::size_t n = vertices_.size();
    mu_.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
      const Vec2 diag = vertices_[(k + 2) % n] - vertices_[(k + n - 1) % n];
      const Vec2 e = vertices_[(k + 1) % n] - vertices_[k];
      if (std::abs(det2(diag, e)) > std::max(tol_, kEqualAreaTol) * norm(diag) * norm(e)) {
        fail(ErrorCode::NotEqualArea, "diagonal not parallel to its edge");
      }
      mu_[k] = 3.0 - dot(diag, e) / dot(e, e);
    }
  }

  std::vector<Point2> vertices_;
  double l_ = 0.0;
  double tol_ = kEqualAreaTol;
  std::vector<double> mu_;
};

/// Unit-circumradius regular n-gon, vertex 0 at angle 0.
inline std::vector<Point2> regular_ngon_vertices(int n) {
  if (n < 5) fail(ErrorCode::TooFewVertices, "need n >= 5");
  std::vector<Point2> v(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double t = 2.0 * std::numbers::pi * k / n;
    v[static_cast<std::size_t>(k)] = {std::cos(t), std::sin(t)};
  }
  return v;
}

/// Affinely regular polygon: the image of the unit regular n-gon under `map`.
inline EqualAreaPolygon gen_affinely_regular(int n, const AffineMap2& map = AffineMap2::identity()) {
  if (std::abs(map.det()) < 1e-300) fail(ErrorCode::DegenerateMap, "map is singular");
  auto v = regular_ngon_vertices(n);
  for (auto& p : v) p = map(p);
  if (map.det() < 0) std::reverse(v.begin(), v.end());
  return EqualAreaPolygon::from_vertices(std::move(v));
}

struct RegularMatch {
  AffineMap2 map;               // least-squares map from the unit regular n-gon
  double max_rel_residual = 0;  // worst vertex mismatch relative to the diameter
};

/// Fits an affine image of the regular n-gon to the polygon (vertex 0 onto
/// vertex 0). An affinely regular polygon admits an exact fit at any cyclic
/// offset, so fixing the offset loses nothing.
inline RegularMatch match_affinely_regular(const EqualAreaPolygon& poly) {
  const std::size_t n = poly.size();
  const auto ref = regular_ngon_vertices(static_cast<int>(n));
  const auto& target = poly.vertices();

  // Normal equations for x and y rows of the affine map over basis (x, y, 1).
  double g[3][3] = {};
  double rx[3] = {}, ry[3] = {};
  for (std::size_t i = 0; i < n; ++i) {
    const double b[3] = {ref[i].x, ref[i].y, 1.0};
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) g[r][c] += b[r] * b[c];
      rx[r] += b[r] * target[i].x;
      ry[r] += b[r] * target[i].y;
    }
  }
  // Solve the two 3x3 systems by Gaussian elimination with partial pivoting.
  auto solve3 = [](double m[3][3], double rhs[3], double out[3]) {
    double a[3][4];
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) a[r][c] = m[r][c];
      a[r][3] = rhs[r];
    }
    for (int col = 0; col < 3; ++col) {
      int piv = col;
      for (int r = col + 1; r < 3; ++r) {
        if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
      }
      std::swap(a[col], a[piv]);
      for (int r = col + 1; r < 3; ++r) {
        const double f = a[r][col] / a[col][col];
        for (int c = col; c < 4; ++c) a[r][c] -= f * a[col][c];
      }
    }
    for (int r = 2; r >= 0; --r) {
      double s = a[r][3];
      for (int c = r + 1; c < 3; ++c) s -= a[r][c] * out[c];
      out[r] = s / a[r][r];
    }
  };
  double gx[3][3], gy[3][3];
  std::copy(&g[0][0], &g[0][0] + 9, &gx[0][0]);
  std::copy(&g[0][0], &g[0][0] + 9, &gy[0][0]);
  double sx[3], sy[3];
  solve3(gx, rx, sx);
  solve3(gy, ry, sy);

  RegularMatch fit;
  fit.map = {sx[0], sx[1], sy[0], sy[1], {sx[2], sy[2]}};

  double diameter = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) diameter = std::max(diameter, norm(target[i] - target[j]));
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, norm(fit.map(ref[i]) - target[i]));
  fit.max_rel_residual = diameter > 0 ? worst / diameter : worst;
  return fit;
}

}  // namespace eap
