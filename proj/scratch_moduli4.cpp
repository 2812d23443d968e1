#include <cstdio>
#include <cmath>

#include "eap/moduli.hpp"

using namespace eap;

int main() {
  // Constant-seed family at n=7: find the R < 4 infeasible band.
  std::printf("n=7 constant family:\n");
  for (double mu = -0.5; mu < 2.0; mu += 0.1) {
    ModuliPoint m{7, {mu, mu}, {Point2{0, 0}, {1, 0}, {2, 1}}};
    try {
      auto r = construct(m);
      std::printf("  mu=%+.2f case=%-10s R=%-12s polys=%zu dropped=%d\n", mu,
                  to_string(r.closure_case),
                  r.area_ratio ? std::to_string(*r.area_ratio).c_str() : "-", r.polygons.size(),
                  r.dropped_candidates);
    } catch (const Error& e) {
      std::printf("  mu=%+.2f error=%s\n", mu, e.what());
    }
  }

  return 0;
}
