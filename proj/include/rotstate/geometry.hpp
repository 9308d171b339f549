#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "rotstate/polytope.hpp"
#include "rotstate/theta.hpp"

namespace rotstate {
namespace geometry {

namespace detail {

/// Bridges exact and float scalar construction for the builders below.
template <class Ops>
struct ScalarMaker;

template <>
struct ScalarMaker<ExactOps> {
  using S = SqrtSum;
  static S rational(long num, long den) { return S(mpq_class(num, den)); }
  static S sqrt_frac(long num, long den) {
    return S::sqrt_of(mpq_class(num, den));
  }
  static S theta_entry(const ThetaMatrix& t, int J, int K) {
    return S(t.exact(J, K));
  }
};

template <>
struct ScalarMaker<FloatOps> {
  using S = double;
  static S rational(long num, long den) {
    return static_cast<double>(num) / static_cast<double>(den);
  }
  static S sqrt_frac(long num, long den) {
    return std::sqrt(static_cast<double>(num) / static_cast<double>(den));
  }
  static S theta_entry(const ThetaMatrix& t, int J, int K) { return t(J, K); }
};

}  // namespace detail

/// The state simplex S in reduced coordinates (alpha_0 ... alpha_{2j-1}):
/// alpha_J >= 0 and sum sqrt(2J+1)/N alpha_J <= 1. Vertices are the origin
/// and the scaled unit vectors N/sqrt(2J+1) e_J.
template <class Ops = ExactOps>
PolytopeT<Ops> simplex_S(int n) {
  if (n < 2) throw std::domain_error("n must be >= 2");
  using M = detail::ScalarMaker<Ops>;
  using S = typename Ops::Scalar;
  int dim = n - 1;
  std::vector<HalfspaceT<Ops>> halfspaces;
  for (int J = 0; J < dim; ++J) {
    std::vector<S> normal(dim, S{});
    normal[J] = S{} - M::rational(1, 1);
    halfspaces.push_back({std::move(normal), S{}});
  }
  std::vector<S> trace_normal(dim);
  for (int J = 0; J < dim; ++J)
    trace_normal[J] = M::sqrt_frac(2 * J + 1, static_cast<long>(n) * n);
  halfspaces.push_back({std::move(trace_normal), M::rational(1, 1)});
  return PolytopeT<Ops>::from_halfspaces(dim, std::move(halfspaces));
}

/// Lifts a reduced point, applies Theta exactly, and drops the last
/// coordinate again.
template <class Ops = ExactOps>
std::vector<typename Ops::Scalar> apply_theta_reduced(
    const ThetaMatrix& theta, const std::vector<typename Ops::Scalar>& x) {
  using M = detail::ScalarMaker<Ops>;
  using S = typename Ops::Scalar;
  int n = theta.n();
  int dim = n - 1;
  // alpha_{2j} from the unit-trace condition
  S rest = M::rational(n, 1);
  for (int J = 0; J < dim; ++J) rest = rest - M::sqrt_frac(2 * J + 1, 1) * x[J];
  S last = rest / M::sqrt_frac(2 * n - 1, 1);
  std::vector<S> image(dim);
  for (int J = 0; J < dim; ++J) {
    S sum{};
    for (int K = 0; K < dim; ++K)
      sum += M::theta_entry(theta, J, K) * x[K];
    sum += M::theta_entry(theta, J, n - 1) * last;
    image[J] = std::move(sum);
  }
  return image;
}

/// Image of a polytope under the map Theta in reduced coordinates. Theta
/// restricted to the unit-trace hyperplane is an affine involution f, so the
/// image halfspace of {<h,x> <= c} is {<A^T h, y> <= c - <h,d>} with
/// f(y) = A y + d, and vertices map through f directly.
template <class Ops = ExactOps>
PolytopeT<Ops> image_under_theta(const PolytopeT<Ops>& p, int n) {
  using M = detail::ScalarMaker<Ops>;
  using S = typename Ops::Scalar;
  if (p.dim() != n - 1)
    throw std::domain_error("polytope dimension does not match n");
  const ThetaMatrix& theta = cached_theta(n);
  int dim = n - 1;

  // linear part and offset of the reduced map
  std::vector<std::vector<S>> a(dim, std::vector<S>(dim));
  std::vector<S> d(dim);
  S inv_sqrt_last = M::rational(1, 1) / M::sqrt_frac(2 * n - 1, 1);
  for (int J = 0; J < dim; ++J) {
    S last = M::theta_entry(theta, J, n - 1);
    for (int K = 0; K < dim; ++K)
      a[J][K] = M::theta_entry(theta, J, K) -
                last * inv_sqrt_last * M::sqrt_frac(2 * K + 1, 1);
    d[J] = last * inv_sqrt_last * M::rational(n, 1);
  }

  std::vector<HalfspaceT<Ops>> mapped_halfspaces;
  for (const auto& h : p.halfspaces()) {
    std::vector<S> normal(dim);
    for (int K = 0; K < dim; ++K) {
      S sum{};
      for (int J = 0; J < dim; ++J) sum += a[J][K] * h.normal[J];
      normal[K] = std::move(sum);
    }
    S shift{};
    for (int J = 0; J < dim; ++J) shift += h.normal[J] * d[J];
    mapped_halfspaces.push_back({std::move(normal), h.offset - shift});
  }
  return PolytopeT<Ops>::from_halfspaces(dim, std::move(mapped_halfspaces));
}

/// S_p = S intersect Theta S, the PPT states.
template <class Ops = ExactOps>
PolytopeT<Ops> ppt_polytope(int n) {
  PolytopeT<Ops> s = simplex_S<Ops>(n);
  return intersect(s, image_under_theta<Ops>(s, n));
}

/// The separable set: [0,1] for N=2, the PPT rectangle for N=3, and the PPT
/// cube cut by the witness plane sqrt5 alpha_2 >= alpha_0 for N=4. Unknown
/// beyond N=4.
template <class Ops = ExactOps>
PolytopeT<Ops> separable_polytope(int n) {
  using M = detail::ScalarMaker<Ops>;
  using S = typename Ops::Scalar;
  if (n < 2) throw std::domain_error("n must be >= 2");
  if (n > 4)
    throw std::domain_error(
        "the separable set is not characterized for n >= 5");
  if (n == 2) {
    std::vector<HalfspaceT<Ops>> hs;
    hs.push_back({{S{} - M::rational(1, 1)}, S{}});
    hs.push_back({{M::rational(1, 1)}, M::rational(1, 1)});
    return PolytopeT<Ops>::from_halfspaces(1, std::move(hs));
  }
  PolytopeT<Ops> ppt = ppt_polytope<Ops>(n);
  if (n == 3) return ppt;
  // alpha_0 / sqrt5 - alpha_2 <= 0
  std::vector<S> normal(3, S{});
  normal[0] = M::sqrt_frac(1, 5);
  normal[2] = S{} - M::rational(1, 1);
  return ppt.cut_with({std::move(normal), S{}});
}

/// Fixed points of the partial time reversal inside S: the +1 eigenspace of
/// Theta cut by the simplex, obtained by adding the equality rows of
/// (Theta - I) as opposing halfspace pairs. Usually lower-dimensional.
template <class Ops = ExactOps>
PolytopeT<Ops> fixed_point_set(int n) {
  using M = detail::ScalarMaker<Ops>;
  using S = typename Ops::Scalar;
  if (n < 2) throw std::domain_error("n must be >= 2");
  const ThetaMatrix& theta = cached_theta(n);
  int dim = n - 1;
  PolytopeT<Ops> simplex = simplex_S<Ops>(n);
  std::vector<HalfspaceT<Ops>> halfspaces = simplex.halfspaces();
  for (int J = 0; J < n; ++J) {
    // row J of (Theta - I) applied to the lifted point, as a function of the
    // reduced coordinates: <row, x> = -constant
    std::vector<S> row(dim);
    S last_coeff = M::theta_entry(theta, J, n - 1);
    if (J == n - 1) last_coeff = last_coeff - M::rational(1, 1);
    S inv_sqrt_last = M::rational(1, 1) / M::sqrt_frac(2 * n - 1, 1);
    for (int K = 0; K < dim; ++K) {
      row[K] = M::theta_entry(theta, J, K);
      if (J == K) row[K] = row[K] - M::rational(1, 1);
      row[K] = row[K] - last_coeff * inv_sqrt_last * M::sqrt_frac(2 * K + 1, 1);
    }
    S constant = last_coeff * inv_sqrt_last * M::rational(n, 1);
    // keep <row, x> == -constant as a pair of halfspaces
    Ops ops{};
    bool zero_row = true;
    for (const auto& c : row)
      if (ops.sign(c) != 0) zero_row = false;
    if (zero_row) continue;
    std::vector<S> neg(dim);
    for (int K = 0; K < dim; ++K) neg[K] = S{} - row[K];
    halfspaces.push_back({row, S{} - constant});
    halfspaces.push_back({std::move(neg), constant});
  }
  return PolytopeT<Ops>::from_halfspaces(dim, std::move(halfspaces));
}

}  // namespace geometry
}  // namespace rotstate
