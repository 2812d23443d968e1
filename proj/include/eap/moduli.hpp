#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <span>
#include <vector>

#include "eap/geometry.hpp"
#include "eap/polygon.hpp"

namespace eap {

/// A point of the moduli space of convex equal-area n-gons: the interior
/// curvatures mu_seed (one per constructible vertex, n-5 of them) plus a fixed
/// frame of three base points that selects a representative modulo affine
/// equivalence.
struct ModuliPoint {
  int n = 5;
  std::vector<double> mu_seed;
  std::array<Point2, 3> frame{Point2{0, 0}, Point2{1, 0}, Point2{2, 1}};
};

enum class ClosureCase { Case0, Case1, Case2a, CaseW, Infeasible };

inline const char* to_string(ClosureCase c) {
  switch (c) {
    case ClosureCase::Case0: return "Case0";
    case ClosureCase::Case1: return "Case1";
    case ClosureCase::Case2a: return "Case2a";
    case ClosureCase::CaseW: return "CaseW";
    case ClosureCase::Infeasible: return "Infeasible";
  }
  return "?";
}

/// Result of closing a curvature vector into polygons. area_ratio is the
/// quantity R = Area(AOB) / Area(P1 P2 P3); it is reported whenever the
/// configuration is in the double-intersection regime (cases 2a / W and the
/// infeasible R < 4 outcome).
struct ClosureClassification {
  ClosureCase closure_case = ClosureCase::Infeasible;
  std::optional<double> area_ratio;
  std::vector<EqualAreaPolygon> polygons;
  int dropped_candidates = 0;  // closure points whose polygon failed validation
};

namespace detail {

/// Builds the open chain P_1 ... P_{n-2} from the frame and seed curvatures
/// via P_{k} = P_{k-3} + (3 - mu) (P_{k-1} - P_{k-2}). Local convexity is
/// automatic (the consecutive-edge bracket stays equal to the frame's), so the
/// failure mode is the chain turning by more than a full revolution.
inline std::vector<Point2> build_chain(const ModuliPoint& m) {
  if (m.n < 5) fail(ErrorCode::TooFewVertices, "need n >= 5");
  if (static_cast<int>(m.mu_seed.size()) != m.n - 5) {
    fail(ErrorCode::InvalidArgument, "mu_seed must have n - 5 entries");
  }
  const Vec2 e1 = m.frame[1] - m.frame[0];
  const Vec2 e2 = m.frame[2] - m.frame[1];
  if (det2(e1, e2) <= kParallelTol * norm(e1) * norm(e2)) {
    fail(ErrorCode::FrameDegenerate, "frame must be positively oriented and non-collinear");
  }
  for (double mu : m.mu_seed) {
    if (!(mu < 2.0)) {
      fail(ErrorCode::NonConvexIntermediate, "curvature >= 2 breaks convexity");
    }
  }

  std::vector<Point2> chain(m.frame.begin(), m.frame.end());
  chain.reserve(static_cast<std::size_t>(m.n - 2));
  double turning = std::atan2(det2(e1, e2), dot(e1, e2));
  for (int k = 3; k <= m.n - 3; ++k) {
    const Point2 next =
        chain[k - 3] + (3.0 - m.mu_seed[k - 3]) * (chain[k - 1] - chain[k - 2]);
    const Vec2 a = chain[k - 1] - chain[k - 2];
    const Vec2 b = next - chain[k - 1];
    const double turn = std::atan2(det2(a, b), dot(a, b));
    if (turn <= 0) fail(ErrorCode::NonConvexIntermediate, "chain lost local convexity");
    turning += turn;
    if (turning >= 2.0 * std::numbers::pi) {
      fail(ErrorCode::NonConvexIntermediate, "chain turns by more than a full revolution");
    }
    chain.push_back(next);
  }
  return chain;
}

struct ChainClosure {
  // Candidate full vertex loops (chain plus the two synthesized vertices);
  // in the two-solution case the loop from the intersection closer to A along
  // the A->B direction comes first.
  std::vector<std::vector<Point2>> candidates;
  std::optional<double> area_ratio;  // R, when the chord regime applies
  bool tangent = false;
  bool r2_parallel_r3 = false;
};

/// Closes an open chain P_1 ... P_{n-2} of a prospective equal-area n-gon.
/// The last vertex P_n must lie on r3 (parallel to P_1 P_2 through P_3) and on
/// the hyperbola through P_{n-3} with asymptotes r1 (through P_{n-2} and P_1)
/// and r2 (parallel to P_{n-3} P_{n-2} through P_{n-4}), on the branch away
/// from P_{n-3}; P_{n-1} then falls out of the remaining parallelism demands.
inline ChainClosure close_chain(std::span<const Point2> chain) {
  const std::size_t k = chain.size();
  if (k < 3) fail(ErrorCode::TooFewVertices, "chain needs at least 3 points");
  const Point2 first = chain[0];
  const Point2 second = chain[1];
  const Point2 third = chain[2];
  const Point2 last = chain[k - 1];
  const Point2 last1 = chain[k - 2];  // P_{n-3}
  const Point2 last2 = chain[k - 3];  // P_{n-4}

  const Line2 r1{last, first - last};
  const Line2 r2{last2, last - last1};
  const Line2 r3{third, second - first};

  const HyperbolaBranch branch{r1, r2, last1, /*same_branch=*/false};
  const auto frame = detail::asymptote_frame(branch);  // throws if r1 || r2
  const auto roots = detail::solve_hyperbola_line(branch, r3);

  ChainClosure out;
  out.tangent = roots.tangent;
  out.r2_parallel_r3 =
      std::abs(det2(r2.dir, r3.dir)) <= kParallelTol * norm(r2.dir) * norm(r3.dir);

  const auto a_point = line_intersection(r1, r3);
  const auto b_point = line_intersection(r2, r3);

  // R = Area(AOB)/Area(P1 P2 P3), meaningful in the chord regime where the
  // line meets the hyperbola between A and B (equivalently c/(a b) > 0 in
  // asymptote coordinates). Guard against the concurrent-lines degeneracy
  // where A and B collapse onto the asymptote center.
  if (a_point && b_point) {
    const double a = frame.coords(*a_point)[0];
    const double b = frame.coords(*b_point)[1];
    const auto tp = frame.coords(branch.through);
    const double c = tp[0] * tp[1];
    const double scale = std::abs(tp[0]) + std::abs(tp[1]);
    if (std::abs(a) > 1e-12 * scale && std::abs(b) > 1e-12 * scale && c / (a * b) > 0) {
      const double area_aob = 0.5 * std::abs(det2(frame.origin - *a_point, *b_point - *a_point));
      const double area_frame = 0.5 * std::abs(det2(second - first, third - first));
      out.area_ratio = area_aob / area_frame;
    }
  }

  std::vector<Point2> points;
  for (double s : roots.params) points.push_back(r3.at(s));
  if (points.size() == 2 && a_point && b_point) {
    const Vec2 ab = *b_point - *a_point;
    if (dot(points[1] - *a_point, ab) < dot(points[0] - *a_point, ab)) {
      std::swap(points[0], points[1]);
    }
  }

  for (const Point2& closing : points) {
    // P_{n-1} sits on r2, on the line through P_n parallel to r1.
    const auto penultimate = line_intersection(r2, Line2{closing, r1.dir});
    if (!penultimate) continue;
    std::vector<Point2> loop(chain.begin(), chain.end());
    loop.push_back(*penultimate);
    loop.push_back(closing);
    out.candidates.push_back(std::move(loop));
  }
  return out;
}

}  // namespace detail

/// Builds the chain for `m` and closes it, materializing every closure point
/// whose polygon validates as a convex equal-area n-gon. The reported case
/// describes the validated closure structure: two solutions is Case2a, one
/// solution is Case1 / CaseW / Case0 according to the closing geometry
/// (parallel lines, tangency, transversal crossing), and no valid closure at
/// all is Infeasible. Closure points whose loop fails validation are counted
/// in dropped_candidates. Throws NonConvexIntermediate when a seed curvature
/// breaks convexity before closure and FrameDegenerate for a bad frame.
inline ClosureClassification construct(const ModuliPoint& m, double tol = kEqualAreaTol) {
  const auto chain = detail::build_chain(m);
  auto closure = detail::close_chain(chain);

  ClosureClassification result;
  result.area_ratio = closure.area_ratio;
  for (auto& loop : closure.candidates) {
    try {
      result.polygons.push_back(EqualAreaPolygon::from_vertices(std::move(loop), tol));
    } catch (const Error&) {
      ++result.dropped_candidates;
    }
  }
  switch (result.polygons.size()) {
    case 2:
      result.closure_case = ClosureCase::Case2a;
      break;
    case 1:
      result.closure_case = closure.r2_parallel_r3 ? ClosureCase::Case1
                           : closure.tangent       ? ClosureCase::CaseW
                                                   : ClosureCase::Case0;
      break;
    default:
      result.closure_case = ClosureCase::Infeasible;
      break;
  }
  return result;
}

/// Case and R only: same pipeline as construct, but the validated polygons are
/// not returned.
inline ClosureClassification classify_closure(const ModuliPoint& m) {
  ClosureClassification result = construct(m);
  result.polygons.clear();
  return result;
}

/// Closed form of R for the affinely regular n-gon, valid for n >= 9:
/// R = (X+Y)^2 / (XY) with X = 1/(2 cos a), Y = 1/sqrt(2(1 + cos a)),
/// a = 4 pi / n. Strictly greater than 4 and decreasing toward 4.
inline double regular_area_ratio(int n) {
  if (n < 9) fail(ErrorCode::OutOfRegime, "closed form holds for n >= 9");
  const double alpha = 4.0 * std::numbers::pi / n;
  const double x = 1.0 / (2.0 * std::cos(alpha));
  const double y = 1.0 / std::sqrt(2.0 * (1.0 + std::cos(alpha)));
  return (x + y) * (x + y) / (x * y);
}

/// Three consecutive vertices of the unit regular n-gon, the frame that makes
/// constant-curvature seeds reproduce the regular polygon itself.
inline std::array<Point2, 3> regular_frame(int n) {
  const auto v = regular_ngon_vertices(n);
  return {v[0], v[1], v[2]};
}

}  // namespace eap
