#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include "rotstate/alpha.hpp"
#include "rotstate/dense.hpp"
#include "rotstate/theta.hpp"

namespace rotstate {

enum class Classification {
  NotAState,
  Separable,
  BoundEntangledPPT,
  NPTEntangled,
  PPTUnknown,  // PPT at N >= 5, where the exact separable set is open
};

inline std::string to_string(Classification c) {
  switch (c) {
    case Classification::NotAState: return "NotAState";
    case Classification::Separable: return "Separable";
    case Classification::BoundEntangledPPT: return "BoundEntangledPPT";
    case Classification::NPTEntangled: return "NPTEntangled";
    case Classification::PPTUnknown: return "PPTUnknown";
  }
  return "?";
}

/// Peres criterion in parameter space: the state is PPT iff every component
/// of Theta alpha is non-negative. Exact inputs are decided exactly; float
/// inputs allow -tol, so the PPT boundary counts as PPT.
inline bool is_ppt(const AlphaVector& alpha, double tol = 1e-12) {
  if (!alpha.is_state(tol)) throw std::domain_error("alpha is not a state");
  AlphaVector image = apply_theta(cached_theta(alpha.n()), alpha);
  if (image.is_exact()) {
    for (const auto& c : image.exact())
      if (c.sign() < 0) return false;
    return true;
  }
  for (double v : image.values())
    if (v < -tol) return false;
  return true;
}

namespace detail {

/// sqrt(5) alpha_2 - alpha_0 >= 0, the prism face at N = 4. Boundary counts
/// as satisfied (the separable set is closed).
inline bool prism_inequality(const AlphaVector& alpha, double tol) {
  if (alpha.is_exact()) {
    SqrtSum margin = SqrtSum::sqrt_of(mpq_class(5)) * alpha.exact()[2] -
                     alpha.exact()[0];
    return margin.sign() >= 0;
  }
  return std::sqrt(5.0) * alpha[2] - alpha[0] >= -tol;
}

}  // namespace detail

/// Full classification. N = 2, 3: PPT is necessary and sufficient. N = 4:
/// separable iff PPT and sqrt5 alpha_2 >= alpha_0; PPT states violating the
/// plane are bound entangled. N >= 5: PPT states are reported as unknown.
inline Classification classify(const AlphaVector& alpha, double tol = 1e-12) {
  if (!alpha.is_state(tol)) return Classification::NotAState;
  bool ppt = is_ppt(alpha, tol);
  if (!ppt) return Classification::NPTEntangled;
  int n = alpha.n();
  if (n <= 3) return Classification::Separable;
  if (n == 4)
    return detail::prism_inequality(alpha, tol)
               ? Classification::Separable
               : Classification::BoundEntangledPPT;
  return Classification::PPTUnknown;
}

/// tr{(P_2 - P_0) rho} = (sqrt5 alpha_2 - alpha_0)/N for N = 4; non-negative
/// exactly on the separable side of the prism plane.
inline double witness_expectation(const AlphaVector& alpha, double tol = 1e-12) {
  if (alpha.n() != 4) throw std::domain_error("witness is defined for n = 4");
  if (!alpha.is_state(tol)) throw std::domain_error("alpha is not a state");
  return (std::sqrt(5.0) * alpha[2] - alpha[0]) / 4.0;
}

/// Positivity of rho under I (x) Phi with
/// Phi B = sum_M T_2M B T_2M^dagger - T_00 B T_00^dagger. Accepts any 16x16
/// state, invariant or not.
inline bool phi_map_check(const DenseOperator& rho, double tol = 1e-10) {
  if (rho.n != 4) throw std::domain_error("phi map is defined for n = 4");
  int n = 4;
  Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n * n, n * n);
  for (int M = -2; M <= 2; ++M) {
    Eigen::MatrixXcd big = dense::kron(id, dense::tensor_operator(n, 2, M));
    out += big * rho.mat * big.adjoint();
  }
  Eigen::MatrixXcd t00 = dense::kron(id, dense::tensor_operator(n, 0, 0));
  out -= t00 * rho.mat * t00.adjoint();
  return DenseOperator(n, out).min_eigenvalue() >= -tol;
}

/// Reduction criterion I/N (x) I - rho >= 0, i.e. alpha_J <= sqrt(2J+1).
inline bool reduction_criterion(const AlphaVector& alpha, double tol = 1e-12) {
  if (!alpha.is_state(tol)) throw std::domain_error("alpha is not a state");
  int n = alpha.n();
  if (alpha.is_exact()) {
    for (int J = 0; J < n; ++J) {
      SqrtSum margin = SqrtSum::sqrt_of(mpq_class(2 * J + 1)) - alpha.exact()[J];
      if (margin.sign() < 0) return false;
    }
    return true;
  }
  for (int J = 0; J < n; ++J)
    if (alpha[J] > std::sqrt(2.0 * J + 1.0) + tol) return false;
  return true;
}

/// Negativity via the trace norm of the partially time-reversed state:
/// ||theta_2 rho||_1 = sum_J sqrt(2J+1)/N |sum_K Theta_JK alpha_K|.
/// Equals 1 exactly on PPT states.
inline double negativity_trace_norm(const AlphaVector& alpha, double tol = 1e-12) {
  if (!alpha.is_state(tol)) throw std::domain_error("alpha is not a state");
  int n = alpha.n();
  AlphaVector image = apply_theta(cached_theta(n), alpha);
  double sum = 0;
  for (int J = 0; J < n; ++J)
    sum += std::sqrt(2.0 * J + 1.0) / n * std::abs(image[J]);
  return sum;
}

/// Cross norm (realignment) criterion:
/// ||Phi_rho||_1 = sum_J sqrt(2J+1)/N |sum_K Theta_JK (-1)^K alpha_K|, with
/// separability requiring a value <= 1.
inline double cross_norm(const AlphaVector& alpha, double tol = 1e-12) {
  if (!alpha.is_state(tol)) throw std::domain_error("alpha is not a state");
  int n = alpha.n();
  const ThetaMatrix& theta = cached_theta(n);
  double sum = 0;
  for (int J = 0; J < n; ++J) {
    double inner = 0;
    for (int K = 0; K < n; ++K)
      inner += theta(J, K) * (K % 2 == 0 ? 1.0 : -1.0) * alpha[K];
    sum += std::sqrt(2.0 * J + 1.0) / n * std::abs(inner);
  }
  return sum;
}

struct CriteriaReport {
  Classification classification = Classification::NotAState;
  bool ppt = false;
  std::optional<bool> prism_inequality;  // N = 4 only
  std::optional<double> witness_value;   // N = 4 only
  bool reduction_ok = false;
  double cross_norm = 0;
  double negativity_trace_norm = 0;
};

inline CriteriaReport evaluate_criteria(const AlphaVector& alpha,
                                        double tol = 1e-12) {
  CriteriaReport report;
  report.classification = classify(alpha, tol);
  if (report.classification == Classification::NotAState) return report;
  report.ppt = is_ppt(alpha, tol);
  if (alpha.n() == 4) {
    report.prism_inequality = detail::prism_inequality(alpha, tol);
    report.witness_value = witness_expectation(alpha, tol);
  }
  report.reduction_ok = reduction_criterion(alpha, tol);
  report.cross_norm = cross_norm(alpha, tol);
  report.negativity_trace_norm = negativity_trace_norm(alpha, tol);
  return report;
}

}  // namespace rotstate
