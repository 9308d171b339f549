#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rotstate/sqrt_sum.hpp"

namespace rotstate {

/// Parameter vector (alpha_0 ... alpha_{2j}) of a rotationally invariant
/// operator rho = (1/N) sum_J alpha_J / sqrt(2J+1) P_J. Carries an exact
/// backing when constructed from exact data; the float view is always
/// available. A valid state has alpha_J >= 0 and sum_J sqrt(2J+1) alpha_J / N
/// equal to one.
class AlphaVector {
 public:
  explicit AlphaVector(std::vector<double> values) : values_(std::move(values)) {
    if (values_.size() < 2) throw std::domain_error("alpha vector needs n >= 2");
  }

  explicit AlphaVector(std::vector<SqrtSum> exact) : exact_(std::move(exact)) {
    if (exact_->size() < 2) throw std::domain_error("alpha vector needs n >= 2");
    values_.reserve(exact_->size());
    for (const auto& c : *exact_) values_.push_back(c.to_double());
  }

  int n() const { return static_cast<int>(values_.size()); }
  double operator[](int J) const { return values_.at(J); }
  const std::vector<double>& values() const { return values_; }

  bool is_exact() const { return exact_.has_value(); }
  const std::vector<SqrtSum>& exact() const {
    if (!exact_) throw std::logic_error("alpha vector has no exact backing");
    return *exact_;
  }

  /// tr(rho) = sum_J sqrt(2J+1) alpha_J / N.
  double trace_functional() const {
    double sum = 0;
    for (int J = 0; J < n(); ++J) sum += std::sqrt(2.0 * J + 1.0) * values_[J];
    return sum / n();
  }

  SqrtSum trace_functional_exact() const {
    SqrtSum sum;
    for (int J = 0; J < n(); ++J)
      sum += SqrtSum::sqrt_of(mpq_class(2 * J + 1)) * exact().at(J);
    return sum / SqrtSum(n());
  }

  /// Exact when backed exactly, tolerance-based otherwise.
  bool is_state(double tol = 1e-10) const {
    if (exact_) {
      for (const auto& c : *exact_)
        if (c.sign() < 0) return false;
      return trace_functional_exact() == SqrtSum(1);
    }
    for (double v : values_)
      if (v < -tol) return false;
    return std::abs(trace_functional() - 1.0) <= tol;
  }

  /// Reduced coordinates (alpha_0 ... alpha_{2j-1}); alpha_{2j} is fixed by
  /// normalization.
  std::vector<double> reduced() const {
    return {values_.begin(), values_.end() - 1};
  }

  std::vector<SqrtSum> reduced_exact() const {
    const auto& e = exact();
    return {e.begin(), e.end() - 1};
  }

  /// Lifts reduced coordinates back to the full vector via the unit-trace
  /// condition: alpha_{2j} = (N - sum_{J<2j} sqrt(2J+1) alpha_J) / sqrt(4j+1).
  static AlphaVector lift_reduced(const std::vector<double>& reduced) {
    int n = static_cast<int>(reduced.size()) + 1;
    std::vector<double> full = reduced;
    double sum = 0;
    for (int J = 0; J + 1 < n; ++J) sum += std::sqrt(2.0 * J + 1.0) * reduced[J];
    full.push_back((n - sum) / std::sqrt(2.0 * n - 1.0));
    return AlphaVector(full);
  }

  static AlphaVector lift_reduced_exact(const std::vector<SqrtSum>& reduced) {
    int n = static_cast<int>(reduced.size()) + 1;
    std::vector<SqrtSum> full = reduced;
    SqrtSum sum;
    for (int J = 0; J + 1 < n; ++J)
      sum += SqrtSum::sqrt_of(mpq_class(2 * J + 1)) * reduced[J];
    full.push_back((SqrtSum(n) - sum) / SqrtSum::sqrt_of(mpq_class(2 * n - 1)));
    return AlphaVector(std::move(full));
  }

 private:
  std::vector<double> values_;
  std::optional<std::vector<SqrtSum>> exact_;
};

/// The singlet projector P_0: alpha_0 = N, all other components zero.
inline AlphaVector singlet_alpha(int n) {
  if (n < 2) throw std::domain_error("n must be >= 2");
  std::vector<SqrtSum> c(n);
  c[0] = SqrtSum(n);
  return AlphaVector(std::move(c));
}

/// The maximally mixed state I/N^2: alpha_J = sqrt(2J+1)/N.
inline AlphaVector max_entropy_alpha(int n) {
  if (n < 2) throw std::domain_error("n must be >= 2");
  std::vector<SqrtSum> c(n);
  for (int J = 0; J < n; ++J)
    c[J] = SqrtSum::sqrt_of(mpq_class(2 * J + 1, n * n));
  return AlphaVector(std::move(c));
}

/// Werner state embedding: alpha_J = sqrt(2J+1)/(N^2-1) *
/// [N - lambda + (-1)^{2j+J} (N lambda - 1)], for -1 <= lambda <= +1.
inline AlphaVector werner_alpha_exact(int n, const mpq_class& lambda) {
  if (n < 2) throw std::domain_error("n must be >= 2");
  mpq_class lam = lambda;
  lam.canonicalize();
  if (lam < -1 || lam > 1)
    throw std::domain_error("werner parameter must lie in [-1, 1]");
  std::vector<SqrtSum> c(n);
  for (int J = 0; J < n; ++J) {
    int phase = (n - 1 + J) % 2 == 0 ? 1 : -1;  // (-1)^{2j+J} with 2j = n-1
    mpq_class bracket = n - lam + phase * (n * lam - 1);
    c[J] = SqrtSum::sqrt_of(mpq_class(2 * J + 1)) *
           SqrtSum(bracket / (n * n - 1));
  }
  return AlphaVector(std::move(c));
}

inline AlphaVector werner_alpha(int n, double lambda) {
  if (n < 2) throw std::domain_error("n must be >= 2");
  if (lambda < -1 || lambda > 1)
    throw std::domain_error("werner parameter must lie in [-1, 1]");
  std::vector<double> c(n);
  for (int J = 0; J < n; ++J) {
    int phase = (n - 1 + J) % 2 == 0 ? 1 : -1;
    c[J] = std::sqrt(2.0 * J + 1.0) *
           (n - lambda + phase * (n * lambda - 1)) / (n * n - 1.0);
  }
  return AlphaVector(std::move(c));
}

}  // namespace rotstate
