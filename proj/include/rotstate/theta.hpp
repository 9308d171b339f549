#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rotstate/alpha.hpp"
#include "rotstate/sqrt_rational.hpp"
#include "rotstate/sqrt_sum.hpp"
#include "rotstate/wigner.hpp"

namespace rotstate {

/// The matrix of the partial time reversal on parameter space:
/// Theta_JK = sqrt((2J+1)(2K+1)) {j j J; j j K} with j = (n-1)/2. It is real
/// symmetric, orthogonal, an involution, and has trace 0 for even N and 1 for
/// odd N. Entries are held exactly with a cached float view.
class ThetaMatrix {
 public:
  explicit ThetaMatrix(int n) : n_(n) {
    if (n < 2) throw std::domain_error("n must be >= 2");
    HalfInt j = HalfInt::from_twice(n - 1);
    exact_.reserve(n * n);
    flt_.reserve(n * n);
    for (int J = 0; J < n; ++J)
      for (int K = 0; K < n; ++K) {
        SignedSqrtRational scale =
            SignedSqrtRational::sqrt_of(mpq_class((2 * J + 1) * (2 * K + 1)));
        SignedSqrtRational entry =
            scale * wigner::six_j(j, j, HalfInt(J), j, j, HalfInt(K));
        exact_.push_back(entry);
        flt_.push_back(entry.to_double());
      }
  }

  int n() const { return n_; }

  const SignedSqrtRational& exact(int J, int K) const {
    check_index(J);
    check_index(K);
    return exact_[J * n_ + K];
  }

  double operator()(int J, int K) const {
    check_index(J);
    check_index(K);
    return flt_[J * n_ + K];
  }

  /// Row-major float view.
  const std::vector<double>& values() const { return flt_; }

 private:
  void check_index(int J) const {
    if (J < 0 || J >= n_) throw std::domain_error("index out of range");
  }

  int n_;
  std::vector<SignedSqrtRational> exact_;
  std::vector<double> flt_;
};

inline ThetaMatrix theta_matrix(int n) { return ThetaMatrix(n); }

/// Shared per-dimension instance; criteria evaluation hits Theta constantly.
inline const ThetaMatrix& cached_theta(int n) {
  static std::map<int, ThetaMatrix> cache;
  static std::shared_mutex mutex;
  {
    std::shared_lock lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  ThetaMatrix theta(n);
  std::unique_lock lock(mutex);
  return cache.emplace(n, std::move(theta)).first->second;
}

/// Closed form for the first column, Theta_J0 = sqrt(2J+1)/N * (-1)^{2j+J}.
inline SignedSqrtRational theta_row0(int n, int J) {
  if (n < 2) throw std::domain_error("n must be >= 2");
  if (J < 0 || J >= n) throw std::domain_error("J out of range");
  int phase = (n - 1 + J) % 2 == 0 ? 1 : -1;
  return SignedSqrtRational(phase, mpq_class(2 * J + 1, n * n));
}

/// Closed form for the second column,
/// Theta_J1 = sqrt(3(2J+1)) [(N-1)(N+1) - 2J(J+1)] / [N(N-1)(N+1)]
///            * (-1)^{2j+1+J}.
inline SignedSqrtRational theta_row1(int n, int J) {
  if (n < 2) throw std::domain_error("n must be >= 2");
  if (J < 0 || J >= n) throw std::domain_error("J out of range");
  mpq_class factor((n - 1) * (n + 1) - 2 * J * (J + 1),
                   n * (n - 1) * (n + 1));
  factor.canonicalize();
  int phase = (n + J) % 2 == 0 ? 1 : -1;  // (-1)^{2j+1+J} with 2j = n-1
  return SignedSqrtRational(phase, mpq_class(1)) *
         SignedSqrtRational::of_rational(factor) *
         SignedSqrtRational::sqrt_of(mpq_class(3 * (2 * J + 1)));
}

/// alpha' = Theta alpha; exact when the input carries exact backing.
inline AlphaVector apply_theta(const ThetaMatrix& theta, const AlphaVector& alpha) {
  if (theta.n() != alpha.n())
    throw std::domain_error("dimension mismatch between Theta and alpha");
  int n = theta.n();
  if (alpha.is_exact()) {
    std::vector<SqrtSum> out(n);
    for (int J = 0; J < n; ++J) {
      SqrtSum sum;
      for (int K = 0; K < n; ++K)
        sum += SqrtSum(theta.exact(J, K)) * alpha.exact()[K];
      out[J] = std::move(sum);
    }
    return AlphaVector(std::move(out));
  }
  std::vector<double> out(n, 0.0);
  for (int J = 0; J < n; ++J)
    for (int K = 0; K < n; ++K) out[J] += theta(J, K) * alpha[K];
  return AlphaVector(std::move(out));
}

/// The eigenbasis read off the 6-j sum rule: the vector with components
/// alpha_J^{(L)} = (-1)^J Theta_JL has eigenvalue (-1)^L. The vectors form an
/// orthonormal basis of parameter space.
inline std::vector<std::pair<AlphaVector, int>> theta_eigenvectors(
    const ThetaMatrix& theta) {
  std::vector<std::pair<AlphaVector, int>> out;
  int n = theta.n();
  for (int L = 0; L < n; ++L) {
    std::vector<SqrtSum> v(n);
    for (int J = 0; J < n; ++J) {
      const SignedSqrtRational& e = theta.exact(J, L);
      v[J] = SqrtSum(J % 2 == 0 ? e : -e);
    }
    out.emplace_back(AlphaVector(std::move(v)), L % 2 == 0 ? 1 : -1);
  }
  return out;
}

}  // namespace rotstate
