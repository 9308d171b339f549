// Prints the exact partial-time-reversal matrices and the N = 4 state-space
// geometry: the PPT cube, the separable prism, and the bound-entangled
// vertices that separate them.

#include <cstdio>

#include "rotstate/geometry.hpp"
#include "rotstate/separability.hpp"

using namespace rotstate;

int main() {
  for (int n = 2; n <= 4; ++n) {
    std::printf("Theta for N = %d:\n", n);
    const ThetaMatrix& theta = cached_theta(n);
    for (int J = 0; J < n; ++J) {
      for (int K = 0; K < n; ++K)
        std::printf("%14s", theta.exact(J, K).to_string().c_str());
      std::printf("\n");
    }
    std::printf("\n");
  }

  std::printf("N = 4 PPT cube vertices and their classification:\n");
  Polytope cube = geometry::ppt_polytope(4);
  for (const auto& v : cube.vertices()) {
    AlphaVector alpha = AlphaVector::lift_reduced_exact(v);
    std::printf("  (%s, %s, %s) -> %s\n", v[0].to_string().c_str(),
                v[1].to_string().c_str(), v[2].to_string().c_str(),
                to_string(classify(alpha)).c_str());
  }
  return 0;
}
