#include <cstdio>
#include <cmath>
#include <map>
#include <numbers>
#include <string>

#include "eap/moduli.hpp"
#include "eap/sample.hpp"

using namespace eap;

int main() {
  // Full histogram: (geometric case, candidates, valid) over random seeds.
  {
    SplitMix64 rng(777);
    std::map<std::string, int> hist;
    int errors = 0;
    std::map<std::string, double> r_min, r_max;
    for (int n = 6; n <= 12; ++n) {
      ModuliPoint m;
      m.n = n;
      m.mu_seed.resize(n - 5);
      for (int trial = 0; trial < 4000; ++trial) {
        for (auto& s : m.mu_seed) s = rng.uniform(-0.5, 1.9);
        try {
          auto chain = detail::build_chain(m);
          auto closure = detail::close_chain(chain);
          int valid = 0;
          for (auto& loop : closure.candidates) {
            try {
              auto p = EqualAreaPolygon::from_vertices(loop);
              (void)p;
              ++valid;
            } catch (const Error&) {}
          }
          char key[128];
          std::snprintf(key, sizeof key, "%-10s cand=%zu valid=%d R=%d",
                        to_string(closure.closure_case), closure.candidates.size(), valid,
                        closure.area_ratio.has_value() ? 1 : 0);
          hist[key]++;
          if (closure.area_ratio) {
            auto [it, inserted] = r_min.try_emplace(key, *closure.area_ratio);
            if (!inserted) it->second = std::min(it->second, *closure.area_ratio);
            auto [it2, ins2] = r_max.try_emplace(key, *closure.area_ratio);
            if (!ins2) it2->second = std::max(it2->second, *closure.area_ratio);
          }
        } catch (const Error&) {
          ++errors;
        }
      }
    }
    for (auto& [k, v] : hist) {
      std::printf("%-44s : %6d", k.c_str(), v);
      if (r_min.count(k)) std::printf("   R in [%.4f, %.4f]", r_min[k], r_max[k]);
      std::printf("\n");
    }
    std::printf("chain errors: %d\n\n", errors);
  }

  // Fine n=6 sweep with diagnostics.
  {
    std::printf("n=6 sweep (fine):\n");
    for (double mu = -2.8; mu < 1.999; mu += 0.1) {
      ModuliPoint m{6, {mu}, {Point2{0, 0}, {1, 0}, {2, 1}}};
      try {
        auto chain = detail::build_chain(m);
        auto closure = detail::close_chain(chain);
        int valid = 0;
        for (auto& loop : closure.candidates) {
          try { EqualAreaPolygon::from_vertices(loop); ++valid; } catch (const Error&) {}
        }
        std::printf("  mu=%+.2f case=%-10s cand=%zu valid=%d R=%s\n", mu,
                    to_string(closure.closure_case), closure.candidates.size(), valid,
                    closure.area_ratio ? std::to_string(*closure.area_ratio).c_str() : "-");
      } catch (const Error& e) {
        std::printf("  mu=%+.2f error=%s\n", mu, e.what());
      }
    }
  }
  return 0;
}
