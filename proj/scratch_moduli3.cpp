#include <cstdio>
#include <cmath>
#include <map>
#include <string>

#include "eap/moduli.hpp"
#include "eap/sample.hpp"

using namespace eap;

static void probe6(double mu) {
  ModuliPoint m{6, {mu}, {Point2{0, 0}, {1, 0}, {2, 1}}};
  try {
    auto chain = detail::build_chain(m);
    auto closure = detail::close_chain(chain);
    int valid = 0;
    for (auto& loop : closure.candidates) {
      try { EqualAreaPolygon::from_vertices(loop); ++valid; } catch (const Error&) {}
    }
    std::printf("  mu=%+.6f case=%-10s cand=%zu valid=%d R=%s\n", mu,
                to_string(closure.closure_case), closure.candidates.size(), valid,
                closure.area_ratio ? std::to_string(*closure.area_ratio).c_str() : "-");
  } catch (const Error& e) {
    std::printf("  mu=%+.6f error=%s\n", mu, e.what());
  }
}

int main() {
  std::printf("n=6 near 2:\n");
  for (double mu : {1.95, 1.99, 1.999, 1.9999, 1.99999}) probe6(mu);
  std::printf("n=6 very negative:\n");
  for (double mu : {-5.0, -10.0, -30.0, -100.0, -1000.0}) probe6(mu);

  // Which n produce genuine branch-misses (cand=0), and with what geometry?
  {
    SplitMix64 rng(2024);
    std::map<std::string, int> hist;
    for (int n = 6; n <= 12; ++n) {
      ModuliPoint m;
      m.n = n;
      m.mu_seed.resize(n - 5);
      int miss = 0, tried = 0;
      for (int trial = 0; trial < 20000 && miss < 2000; ++trial) {
        for (auto& s : m.mu_seed) s = rng.uniform(-0.5, 1.9);
        ++tried;
        try {
          auto chain = detail::build_chain(m);
          auto closure = detail::close_chain(chain);
          if (closure.candidates.empty()) {
            ++miss;
            char key[64];
            std::snprintf(key, sizeof key, "n=%d miss R=%s", n,
                          !closure.area_ratio ? "none" : *closure.area_ratio < 4 ? "<4" : ">=4");
            hist[key]++;
          }
        } catch (const Error&) {}
      }
    }
    for (auto& [k, v] : hist) std::printf("%-24s : %d\n", k.c_str(), v);
  }
  return 0;
}
