#pragma once

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <cstdint>
#include <random>

#include "rotstate/alpha.hpp"
#include "rotstate/dense.hpp"

namespace rotstate {
namespace sampling {

/// Haar-distributed pure local state: complex standard-normal amplitudes,
/// normalized.
inline LocalState haar_state(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXcd amps(n);
  for (int i = 0; i < n; ++i) amps(i) = Complex(gauss(rng), gauss(rng));
  amps /= amps.norm();
  return LocalState(n, std::move(amps));
}

/// Uniform point of the invariant state simplex: Dirichlet(1,...,1) weights
/// p_J, then alpha_J = N p_J / sqrt(2J+1).
inline AlphaVector random_state_alpha(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> w(n);
  double sum = 0;
  for (int J = 0; J < n; ++J) {
    w[J] = -std::log(1.0 - unit(rng));
    sum += w[J];
  }
  std::vector<double> alpha(n);
  for (int J = 0; J < n; ++J)
    alpha[J] = n * (w[J] / sum) / std::sqrt(2.0 * J + 1.0);
  return AlphaVector(std::move(alpha));
}

/// Rotation axis uniform on the sphere, angle uniform in [0, 2 pi).
inline std::array<double, 3> random_axis_angle(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double z = 2.0 * unit(rng) - 1.0;
  double phi = 2.0 * M_PI * unit(rng);
  double r = std::sqrt(1.0 - z * z);
  double angle = 2.0 * M_PI * unit(rng);
  return {angle * r * std::cos(phi), angle * r * std::sin(phi), angle * z};
}

/// Matrix with independent complex standard-normal entries.
inline Eigen::MatrixXcd random_matrix(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd m(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) m(r, c) = Complex(gauss(rng), gauss(rng));
  return m;
}

/// Random full-rank density matrix G G^dagger / tr on the product space.
inline DenseOperator random_density(int n, std::mt19937_64& rng) {
  Eigen::MatrixXcd g = random_matrix(n * n, rng);
  Eigen::MatrixXcd rho = g * g.adjoint();
  rho /= rho.trace();
  return DenseOperator(n, std::move(rho));
}

}  // namespace sampling
}  // namespace rotstate
