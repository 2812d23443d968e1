#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <vector>

#include "eap/errors.hpp"

namespace eap {

// Scale-invariant threshold below which two directions count as parallel.
inline constexpr double kParallelTol = 1e-12;
// Relative threshold on a quadratic discriminant below which the two roots
// collapse to a tangency.
inline constexpr double kTangencyTol = 1e-10;
// Default relative tolerance for the equal-area validation.
inline constexpr double kEqualAreaTol = 1e-9;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator-() const { return {-x, -y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
  Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
  Vec2& operator-=(Vec2 o) { x -= o.x; y -= o.y; return *this; }
  constexpr bool operator==(const Vec2&) const = default;
};

/// Points and displacement vectors share one representation; the geometry here
/// is affine, so the distinction lives in how values are used.
using Point2 = Vec2;

constexpr Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }

/// Cross-product bracket [u, v] = u.x v.y - u.y v.x. Bilinear, antisymmetric;
/// twice the signed area of the triangle spanned by u and v.
constexpr double det2(Vec2 u, Vec2 v) { return u.x * v.y - u.y * v.x; }

constexpr double dot(Vec2 u, Vec2 v) { return u.x * v.x + u.y * v.y; }

inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }

inline bool is_finite(Vec2 v) { return std::isfinite(v.x) && std::isfinite(v.y); }

/// Line through `base` with direction `dir` (nonzero).
struct Line2 {
  Point2 base;
  Vec2 dir;

  Point2 at(double s) const { return base + s * dir; }
};

/// Affine map x -> linear * x + translation, with linear = [[a, b], [c, d]].
struct AffineMap2 {
  double a = 1.0, b = 0.0, c = 0.0, d = 1.0;
  Vec2 translation{0.0, 0.0};

  static constexpr AffineMap2 identity() { return {}; }

  constexpr double det() const { return a * d - b * c; }

  constexpr Point2 operator()(Point2 p) const {
    return {a * p.x + b * p.y + translation.x, c * p.x + d * p.y + translation.y};
  }

  /// Applies only the linear part (for displacement vectors).
  constexpr Vec2 apply_vec(Vec2 v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }

  AffineMap2 inverse() const {
    const double dt = det();
    if (std::abs(dt) < 1e-300) fail(ErrorCode::DegenerateMap, "affine map is singular");
    AffineMap2 inv{d / dt, -b / dt, -c / dt, a / dt, {}};
    inv.translation = -inv.apply_vec(translation);
    return inv;
  }

  /// Composition: (*this) after `other`.
  AffineMap2 compose(const AffineMap2& o) const {
    AffineMap2 r;
    r.a = a * o.a + b * o.c;
    r.b = a * o.b + b * o.d;
    r.c = c * o.a + d * o.c;
    r.d = c * o.b + d * o.d;
    r.translation = apply_vec(o.translation) + translation;
    return r;
  }
};

/// The unique affine map sending the triangle (a1, a2, a3) onto (b1, b2, b3).
inline AffineMap2 affine_from_triangles(Point2 a1, Point2 a2, Point2 a3,
                                        Point2 b1, Point2 b2, Point2 b3) {
  const Vec2 u1 = a2 - a1, u2 = a3 - a1;
  const Vec2 w1 = b2 - b1, w2 = b3 - b1;
  const double d = det2(u1, u2);
  if (std::abs(d) <= kParallelTol * norm(u1) * norm(u2)) {
    fail(ErrorCode::DegenerateMap, "source triangle is collinear");
  }
  // Solve M * [u1 u2] = [w1 w2].
  AffineMap2 m;
  m.a = (w1.x * u2.y - w2.x * u1.y) / d;
  m.b = (w2.x * u1.x - w1.x * u2.x) / d;
  m.c = (w1.y * u2.y - w2.y * u1.y) / d;
  m.d = (w2.y * u1.x - w1.y * u2.x) / d;
  m.translation = b1 - m.apply_vec(a1);
  return m;
}

/// Intersection point of two lines, or nullopt when they are parallel within
/// the scale-invariant threshold |[d1, d2]| <= kParallelTol |d1||d2|.
inline std::optional<Point2> line_intersection(const Line2& l1, const Line2& l2) {
  const double d = det2(l1.dir, l2.dir);
  if (std::abs(d) <= kParallelTol * norm(l1.dir) * norm(l2.dir)) return std::nullopt;
  const double s = det2(l2.base - l1.base, l2.dir) / d;
  return l1.at(s);
}

/// One branch of a hyperbola given by its asymptote lines and a point the
/// curve passes through. With same_branch the represented branch is the one
/// containing `through`; otherwise it is the opposite branch.
struct HyperbolaBranch {
  Line2 asym1;
  Line2 asym2;
  Point2 through;
  bool same_branch = true;
};

namespace detail {

/// Coordinates of a point in the oblique frame centered at the asymptote
/// intersection with axes along the asymptote directions: X = O + u e1 + v e2.
/// In these coordinates the hyperbola is u v = const.
struct AsymptoteFrame {
  Point2 origin;
  Vec2 e1, e2;
  double basis_det;

  std::array<double, 2> coords(Point2 p) const {
    const Vec2 r = p - origin;
    return {det2(r, e2) / basis_det, det2(e1, r) / basis_det};
  }
  std::array<double, 2> coords_vec(Vec2 v) const {
    return {det2(v, e2) / basis_det, det2(e1, v) / basis_det};
  }
};

inline AsymptoteFrame asymptote_frame(const HyperbolaBranch& h) {
  const auto origin = line_intersection(h.asym1, h.asym2);
  if (!origin) fail(ErrorCode::DegenerateAsymptotes, "asymptotes are parallel");
  AsymptoteFrame f{*origin, h.asym1.dir, h.asym2.dir, det2(h.asym1.dir, h.asym2.dir)};
  return f;
}

}  // namespace detail

namespace detail {

struct HyperbolaLineRoots {
  std::vector<double> params;       // line parameters of on-branch intersections, sorted
  int full_hyperbola_roots = 0;     // intersections with the whole hyperbola
  bool tangent = false;             // the two roots collapsed within kTangencyTol
  bool parallel_to_asymptote = false;
};

inline HyperbolaLineRoots solve_hyperbola_line(const HyperbolaBranch& h, const Line2& l) {
  const auto frame = asymptote_frame(h);
  const auto [up, vp] = frame.coords(h.through);
  const double c = up * vp;
  const double through_scale = std::abs(up) + std::abs(vp);
  if (std::abs(c) <= 1e-14 * through_scale * through_scale + 1e-300) {
    fail(ErrorCode::DegenerateHyperbola, "through-point lies on an asymptote");
  }

  const auto [ub, vb] = frame.coords(l.base);
  const auto [ud, vd] = frame.coords_vec(l.dir);

  // Quadratic (ub + s ud)(vb + s vd) = c in the line parameter s.
  const double qa = ud * vd;
  const double qb = ub * vd + vb * ud;
  const double qc = ub * vb - c;

  // The intended branch has u-coordinates of one fixed sign.
  const double target_u_sign = (h.same_branch ? 1.0 : -1.0) * (up > 0 ? 1.0 : -1.0);

  HyperbolaLineRoots out;
  std::vector<double> roots;
  const double dir_scale = std::abs(ud) * norm(frame.e1) + std::abs(vd) * norm(frame.e2);
  const bool parallel_asym1 = std::abs(vd) * norm(frame.e2) <= kParallelTol * dir_scale;
  const bool parallel_asym2 = std::abs(ud) * norm(frame.e1) <= kParallelTol * dir_scale;
  if (parallel_asym1 || parallel_asym2) {
    // Line parallel to an asymptote: the equation degenerates to linear and
    // there is at most one intersection with the full hyperbola.
    out.parallel_to_asymptote = true;
    if (std::abs(qb) > 0) roots.push_back(-qc / qb);
  } else {
    const double disc = qb * qb - 4.0 * qa * qc;
    const double disc_scale = std::max(qb * qb, std::abs(4.0 * qa * qc));
    if (std::abs(disc) <= kTangencyTol * disc_scale) {
      out.tangent = true;
      roots.push_back(-qb / (2.0 * qa));
    } else if (disc > 0) {
      // Numerically stable pair of roots.
      const double q = -0.5 * (qb + std::copysign(std::sqrt(disc), qb));
      roots.push_back(q / qa);
      if (std::abs(q) > 0) roots.push_back(qc / q); else roots.push_back(0.0);
    }
  }
  out.full_hyperbola_roots = static_cast<int>(roots.size());

  for (double s : roots) {
    const double u = ub + s * ud;
    if (u * target_u_sign > 0) out.params.push_back(s);
  }
  std::sort(out.params.begin(), out.params.end());
  out.params.erase(std::unique(out.params.begin(), out.params.end()), out.params.end());
  return out;
}

}  // namespace detail

/// Intersects the selected hyperbola branch with a line. Returns 0, 1 or 2
/// points sorted by the parameter along `l`; a tangency (discriminant within
/// kTangencyTol of zero relative to the coefficient scale) yields one point.
inline std::vector<Point2> hyperbola_line_intersection(const HyperbolaBranch& h, const Line2& l) {
  const auto roots = detail::solve_hyperbola_line(h, l);
  std::vector<Point2> points;
  points.reserve(roots.params.size());
  for (double s : roots.params) points.push_back(l.at(s));
  return points;
}

}  // namespace eap
