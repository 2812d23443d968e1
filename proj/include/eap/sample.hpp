#pragma once

#include <algorithm>
#include <cmath>

#include "eap/moduli.hpp"
#include "eap/rng.hpp"

namespace eap {

/// Rejection-sampling controls for random moduli points. Seed entries are
/// drawn uniformly from (mu_min, mu_max); draws that fail to close into a
/// valid polygon are discarded and retried.
struct SampleOptions {
  double mu_min = -0.5;
  double mu_max = 1.9;
  bool require_positive_mu = false;     // every measured curvature > positive_mu_floor
  double positive_mu_floor = 1e-6;
  bool require_strict_sign_changes = false;  // no vanishing cyclic difference of mu
  double sign_change_floor = 1e-9;           // relative to max |mu|
  bool normalize = true;
  int max_attempts = 200000;
};

inline EqualAreaPolygon sample_polygon(int n, SplitMix64& rng, const SampleOptions& opt = {}) {
  ModuliPoint m;
  m.n = n;
  m.mu_seed.resize(static_cast<std::size_t>(std::max(0, n - 5)));
  for (int attempt = 0; attempt < opt.max_attempts; ++attempt) {
    for (auto& mu : m.mu_seed) mu = rng.uniform(opt.mu_min, opt.mu_max);
    ClosureClassification result;
    try {
      result = construct(m);
    } catch (const Error&) {
      continue;
    }
    if (result.polygons.empty()) continue;
    const std::size_t pick = result.polygons.size() > 1 ? rng.next() % result.polygons.size() : 0;
    const EqualAreaPolygon& poly = result.polygons[pick];

    const auto& mu = poly.curvatures();
    double mu_max_abs = 0.0;
    for (double v : mu) mu_max_abs = std::max(mu_max_abs, std::abs(v));
    if (opt.require_positive_mu &&
        *std::min_element(mu.begin(), mu.end()) <= opt.positive_mu_floor) {
      continue;
    }
    if (opt.require_strict_sign_changes) {
      bool strict = true;
      for (std::size_t i = 0; i < mu.size() && strict; ++i) {
        const double delta = mu[i] - mu[(i + mu.size() - 1) % mu.size()];
        strict = std::abs(delta) > opt.sign_change_floor * mu_max_abs;
      }
      if (!strict) continue;
    }
    return opt.normalize ? poly.normalize_unit_l() : poly;
  }
  fail(ErrorCode::InternalInvariantViolation, "sampling did not find a valid polygon");
}

}  // namespace eap
