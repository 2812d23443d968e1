#include <cstdio>
#include <cmath>
#include <numbers>

#include "eap/moduli.hpp"
#include "eap/sample.hpp"

using namespace eap;

int main() {
  // n = 5, default frame
  {
    ModuliPoint m{5, {}, {Point2{0, 0}, {1, 0}, {2, 1}}};
    auto r = construct(m);
    std::printf("n=5 default frame: case=%s R=%s polys=%zu dropped=%d\n", to_string(r.closure_case),
                r.area_ratio ? std::to_string(*r.area_ratio).c_str() : "-", r.polygons.size(),
                r.dropped_candidates);
    if (!r.polygons.empty()) {
      for (double mu : r.polygons[0].curvatures()) std::printf("  mu=%.12f\n", mu);
    }
  }
  // n = 6 regular frame seed {1.0}
  {
    ModuliPoint m{6, {1.0}, regular_frame(6)};
    auto r = construct(m);
    std::printf("n=6 regular seed 1.0: case=%s R=%s polys=%zu dropped=%d\n", to_string(r.closure_case),
                r.area_ratio ? std::to_string(*r.area_ratio).c_str() : "-", r.polygons.size(),
                r.dropped_candidates);
    for (auto& p : r.polygons) {
      auto fit = match_affinely_regular(p);
      std::printf("  regular-fit residual=%.3e  mu0=%.12f\n", fit.max_rel_residual, p.curvatures()[0]);
    }
  }
  // n = 9 regular frame constant regular seed
  {
    const double mu = 2.0 - 2.0 * std::cos(2.0 * std::numbers::pi / 9);
    ModuliPoint m{9, {mu, mu, mu, mu}, regular_frame(9)};
    auto r = construct(m);
    std::printf("n=9 regular seed: case=%s R=%.10f regular_R=%.10f polys=%zu dropped=%d\n",
                to_string(r.closure_case), r.area_ratio.value_or(-1), regular_area_ratio(9),
                r.polygons.size(), r.dropped_candidates);
    for (auto& p : r.polygons) {
      auto fit = match_affinely_regular(p);
      std::printf("  regular-fit residual=%.3e\n", fit.max_rel_residual);
    }
  }
  // n = 7 regular frame constant seed -> paper says closure of U0 for n=5..8
  {
    const double mu = 2.0 - 2.0 * std::cos(2.0 * std::numbers::pi / 7);
    ModuliPoint m{7, {mu, mu}, regular_frame(7)};
    auto r = classify_closure(m);
    std::printf("n=7 regular seed: case=%s R=%s\n", to_string(r.closure_case),
                r.area_ratio ? std::to_string(*r.area_ratio).c_str() : "-");
  }
  {
    const double mu = 2.0 - 2.0 * std::cos(2.0 * std::numbers::pi / 8);
    ModuliPoint m{8, {mu, mu, mu}, regular_frame(8)};
    auto r = classify_closure(m);
    std::printf("n=8 regular seed: case=%s R=%s\n", to_string(r.closure_case),
                r.area_ratio ? std::to_string(*r.area_ratio).c_str() : "-");
  }
  // n = 6 sweep over single seed value
  {
    std::printf("n=6 sweep:\n");
    for (double mu = -1.4; mu < 2.0; mu += 0.2) {
      ModuliPoint m{6, {mu}, {Point2{0, 0}, {1, 0}, {2, 1}}};
      try {
        auto r = construct(m);
        std::printf("  mu=%+.2f case=%-10s R=%-12s polys=%zu dropped=%d\n", mu,
                    to_string(r.closure_case),
                    r.area_ratio ? std::to_string(*r.area_ratio).c_str() : "-",
                    r.polygons.size(), r.dropped_candidates);
      } catch (const Error& e) {
        std::printf("  mu=%+.2f error=%s\n", mu, e.what());
      }
    }
  }
  // count-consistency sampling experiment
  {
    SplitMix64 rng(12345);
    int total = 0, mismatch = 0, dropped_cases = 0, infeasible = 0, errors = 0;
    int case_counts[5] = {};
    for (int n = 6; n <= 12; ++n) {
      ModuliPoint m;
      m.n = n;
      m.mu_seed.resize(n - 5);
      for (int trial = 0; trial < 3000; ++trial) {
        for (auto& s : m.mu_seed) s = rng.uniform(-0.5, 1.9);
        try {
          auto r = construct(m);
          ++total;
          ++case_counts[static_cast<int>(r.closure_case)];
          int expect = r.closure_case == ClosureCase::Case2a ? 2
                     : r.closure_case == ClosureCase::Infeasible ? 0 : 1;
          if (static_cast<int>(r.polygons.size()) != expect) {
            ++mismatch;
            if (mismatch < 8)
              std::printf("  mismatch n=%d case=%s polys=%zu dropped=%d R=%s\n", n,
                          to_string(r.closure_case), r.polygons.size(), r.dropped_candidates,
                          r.area_ratio ? std::to_string(*r.area_ratio).c_str() : "-");
          }
          if (r.dropped_candidates > 0) ++dropped_cases;
          if (r.closure_case == ClosureCase::Infeasible) ++infeasible;
        } catch (const Error&) {
          ++errors;
        }
      }
    }
    std::printf("sampling: total=%d mismatch=%d dropped_cases=%d infeasible=%d errors=%d\n",
                total, mismatch, dropped_cases, infeasible, errors);
    std::printf("cases: Case0=%d Case1=%d Case2a=%d CaseW=%d Infeasible=%d\n", case_counts[0],
                case_counts[1], case_counts[2], case_counts[3], case_counts[4]);
  }
  return 0;
}
