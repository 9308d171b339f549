#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <array>
#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rotstate/alpha.hpp"
#include "rotstate/wigner.hpp"

namespace rotstate {

using Complex = std::complex<double>;

/// Operator on the N (x) N product space, stored in the basis
/// |j m1> (x) |j m2> with m descending (+j ... -j) in each factor.
struct DenseOperator {
  int n = 0;
  Eigen::MatrixXcd mat;

  DenseOperator(int n_, Eigen::MatrixXcd m) : n(n_), mat(std::move(m)) {
    if (mat.rows() != n * n || mat.cols() != n * n)
      throw std::domain_error("operator must be N^2 x N^2");
  }

  Complex trace() const { return mat.trace(); }

  bool is_hermitian(double tol = 1e-10) const {
    return (mat - mat.adjoint()).cwiseAbs().maxCoeff() <= tol;
  }

  double min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(mat,
                                                       Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
  }

  bool is_positive_semidefinite(double tol = 1e-10) const {
    return is_hermitian(tol) && min_eigenvalue() >= -tol;
  }

  bool is_state(double tol = 1e-10) const {
    return is_positive_semidefinite(tol) &&
           std::abs(trace() - Complex(1.0)) <= tol;
  }
};

/// Pure state of one subsystem: amplitudes c_m in the basis |j m>,
/// m descending.
struct LocalState {
  int n = 0;
  Eigen::VectorXcd amps;

  LocalState(int n_, Eigen::VectorXcd a) : n(n_), amps(std::move(a)) {
    if (amps.size() != n) throw std::domain_error("amplitude count must be N");
  }

  bool is_normalized(double tol = 1e-12) const {
    return std::abs(amps.norm() - 1.0) <= tol;
  }
};

namespace dense {

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k)
      out.block(i * b.rows(), k * b.cols(), b.rows(), b.cols()) = a(i, k) * b;
  return out;
}

/// Standard spin-j matrices; j3 is diagonal with entries j ... -j, j1 and j2
/// come from the ladder operators.
inline std::array<Eigen::MatrixXcd, 3> spin_matrices(int n) {
  if (n < 2) throw std::domain_error("n must be >= 2");
  double j = (n - 1) / 2.0;
  Eigen::MatrixXcd jplus = Eigen::MatrixXcd::Zero(n, n);
  Eigen::MatrixXcd j3 = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    double m = j - i;
    j3(i, i) = m;
    if (i > 0) jplus(i - 1, i) = std::sqrt(j * (j + 1) - (m + 1) * m);
  }
  Eigen::MatrixXcd jminus = jplus.adjoint();
  Eigen::MatrixXcd j1 = (jplus + jminus) / 2.0;
  Eigen::MatrixXcd j2 = (jplus - jminus) / Complex(0.0, 2.0);
  return {j1, j2, j3};
}

/// D(R) = exp(-i n.j) for the rotation about axis n by angle |n|, evaluated
/// through the eigendecomposition of the Hermitian generator.
inline Eigen::MatrixXcd rotation(int n, const std::array<double, 3>& axis_angle) {
  auto jk = spin_matrices(n);
  Eigen::MatrixXcd h = axis_angle[0] * jk[0] + axis_angle[1] * jk[1] +
                       axis_angle[2] * jk[2];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  Eigen::VectorXcd phases(n);
  for (int i = 0; i < n; ++i)
    phases(i) = std::exp(Complex(0.0, -es.eigenvalues()(i)));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

/// V = D(0, pi, 0), the pi-rotation about the 2-axis:
/// <j m'|V|j m> = (-1)^{j-m} delta_{m',-m}. Real orthogonal with
/// V^2 = (-1)^{2j} I.
inline Eigen::MatrixXd v_matrix(int n) {
  if (n < 2) throw std::domain_error("n must be >= 2");
  int tj = n - 1;
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(n, n);
  for (int col = 0; col < n; ++col) {
    int tm = tj - 2 * col;       // column holds |j m>
    int row = (tj + tm) / 2;     // row of |j -m>
    v(row, col) = ((tj - tm) / 2) % 2 == 0 ? 1.0 : -1.0;
  }
  return v;
}

/// Columns are the coupled vectors |J M>, M = +J ... -J, expanded over the
/// product basis with exact Clebsch-Gordan coefficients.
inline std::vector<Eigen::MatrixXcd> coupled_basis(int n) {
  if (n < 2) throw std::domain_error("n must be >= 2");
  int tj = n - 1;
  HalfInt j = HalfInt::from_twice(tj);
  std::vector<Eigen::MatrixXcd> basis;
  for (int J = 0; J <= tj; ++J) {
    Eigen::MatrixXcd block = Eigen::MatrixXcd::Zero(n * n, 2 * J + 1);
    for (int col = 0; col < 2 * J + 1; ++col) {
      int tM = 2 * (J - col);
      for (int i1 = 0; i1 < n; ++i1)
        for (int i2 = 0; i2 < n; ++i2) {
          int tm1 = tj - 2 * i1, tm2 = tj - 2 * i2;
          if (tm1 + tm2 != tM) continue;
          SignedSqrtRational cg = wigner::clebsch_gordan(
              j, HalfInt::from_twice(tm1), j, HalfInt::from_twice(tm2),
              HalfInt(J), HalfInt::from_twice(tM));
          block(i1 * n + i2, col) = cg.to_double();
        }
    }
    basis.push_back(std::move(block));
  }
  return basis;
}

/// P_J = sum_M |J M><J M|, the rank-(2J+1) invariant projector.
inline DenseOperator projector(int n, int J) {
  if (J < 0 || J > n - 1) throw std::domain_error("J out of range");
  Eigen::MatrixXcd block = coupled_basis(n)[J];
  return DenseOperator(n, block * block.adjoint());
}

/// rho = (1/N) sum_J alpha_J / sqrt(2J+1) P_J.
inline DenseOperator invariant_operator(const AlphaVector& alpha) {
  int n = alpha.n();
  auto basis = coupled_basis(n);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n * n, n * n);
  for (int J = 0; J < n; ++J)
    m += alpha[J] / (n * std::sqrt(2.0 * J + 1.0)) *
         (basis[J] * basis[J].adjoint());
  return DenseOperator(n, m);
}

/// T_2: transposition of the second tensor factor.
inline DenseOperator partial_transpose(const DenseOperator& rho) {
  int n = rho.n;
  Eigen::MatrixXcd out(n * n, n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          out(a * n + b, c * n + d) = rho.mat(a * n + d, c * n + b);
  return DenseOperator(n, std::move(out));
}

/// theta_2 rho = (I (x) V) T_2 rho (I (x) V)^dagger, the partial time
/// reversal. Unitarily equivalent to T_2 but preserves rotational invariance.
inline DenseOperator partial_time_reversal(const DenseOperator& rho) {
  int n = rho.n;
  Eigen::MatrixXcd iv =
      kron(Eigen::MatrixXcd::Identity(n, n), v_matrix(n).cast<Complex>());
  DenseOperator t2 = partial_transpose(rho);
  return DenseOperator(n, iv * t2.mat * iv.adjoint());
}

/// Theta matrix built entirely from dense operators,
/// Theta_JK = tr{P_J theta_2 P_K} / sqrt((2J+1)(2K+1)). Oracle for the 6-j
/// construction.
inline Eigen::MatrixXd theta_from_trace(int n) {
  if (n < 2) throw std::domain_error("n must be >= 2");
  auto basis = coupled_basis(n);
  Eigen::MatrixXd theta(n, n);
  for (int K = 0; K < n; ++K) {
    DenseOperator pk(n, basis[K] * basis[K].adjoint());
    DenseOperator tpk = partial_time_reversal(pk);
    for (int J = 0; J < n; ++J) {
      Eigen::MatrixXcd pj = basis[J] * basis[J].adjoint();
      Complex tr = (pj * tpk.mat).trace();
      theta(J, K) = tr.real() / std::sqrt((2.0 * J + 1.0) * (2.0 * K + 1.0));
    }
  }
  return theta;
}

/// Irreducible spherical tensor operator:
/// <j m|T_JM|j m'> = (-1)^{j-m} sqrt(2J+1) (j j J; m -m' -M).
inline Eigen::MatrixXcd tensor_operator(int n, int J, int M) {
  if (n < 2) throw std::domain_error("n must be >= 2");
  if (J < 0 || J > n - 1 || std::abs(M) > J)
    throw std::domain_error("tensor operator indices out of range");
  int tj = n - 1;
  HalfInt j = HalfInt::from_twice(tj);
  Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      int tm = tj - 2 * r, tmp = tj - 2 * c;
      if (tm - tmp != 2 * M) continue;
      SignedSqrtRational w =
          wigner::three_j(j, j, HalfInt(J), HalfInt::from_twice(tm),
                          HalfInt::from_twice(-tmp), HalfInt(-M));
      int phase = ((tj - tm) / 2) % 2 == 0 ? 1 : -1;
      t(r, c) = phase * std::sqrt(2.0 * J + 1.0) * w.to_double();
    }
  return t;
}

/// Q_J = sum_M T_JM (x) T_JM^dagger, rotationally invariant.
inline DenseOperator q_operator(int n, int J) {
  if (J < 0 || J > n - 1) throw std::domain_error("J out of range");
  Eigen::MatrixXcd q = Eigen::MatrixXcd::Zero(n * n, n * n);
  for (int M = -J; M <= J; ++M) {
    Eigen::MatrixXcd t = tensor_operator(n, J, M);
    q += kron(t, t.adjoint());
  }
  return DenseOperator(n, q);
}

/// Flip operator F |j m1 j m2> = |j m2 j m1>.
inline DenseOperator flip(int n) {
  if (n < 2) throw std::domain_error("n must be >= 2");
  Eigen::MatrixXcd f = Eigen::MatrixXcd::Zero(n * n, n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) f(a * n + b, b * n + a) = 1.0;
  return DenseOperator(n, f);
}

/// The Werner family rho_W = [(N-lambda) I + (N lambda - 1) F] / (N^3 - N).
inline DenseOperator werner_dense(int n, double lambda) {
  if (lambda < -1 || lambda > 1)
    throw std::domain_error("werner parameter must lie in [-1, 1]");
  Eigen::MatrixXcd m =
      ((n - lambda) * Eigen::MatrixXcd::Identity(n * n, n * n) +
       (n * lambda - 1) * flip(n).mat) /
      (static_cast<double>(n) * n * n - n);
  return DenseOperator(n, m);
}

struct TwirlResult {
  AlphaVector alpha;
  DenseOperator projected;
};

/// Twirl projection Pi rho = sum_J P_J tr{P_J rho} / (2J+1), together with
/// the parameter vector alpha_J = N tr{P_J rho} / sqrt(2J+1).
inline TwirlResult twirl(const DenseOperator& rho) {
  int n = rho.n;
  if (std::abs(rho.trace() - Complex(1.0)) > 1e-9)
    throw std::domain_error("twirl input must have unit trace");
  auto basis = coupled_basis(n);
  std::vector<double> alpha(n);
  Eigen::MatrixXcd proj = Eigen::MatrixXcd::Zero(n * n, n * n);
  for (int J = 0; J < n; ++J) {
    Eigen::MatrixXcd pj = basis[J] * basis[J].adjoint();
    double tr = (pj * rho.mat).trace().real();
    alpha[J] = n * tr / std::sqrt(2.0 * J + 1.0);
    proj += tr / (2.0 * J + 1.0) * pj;
  }
  return {AlphaVector(std::move(alpha)), DenseOperator(n, std::move(proj))};
}

enum class FunctionalForm { ProjectorForm, TensorForm };

/// The parameter point of the twirled pure product state:
/// P-form  alpha_J = N/sqrt(2J+1) <phi1 phi2|P_J|phi1 phi2>,
/// T-form  alpha_J = N/sqrt(2J+1) sum_M |<phi1|T_JM|phi2>|^2.
/// The two are related by alpha(T) = Theta alpha(P).
inline AlphaVector alpha_functionals(const LocalState& phi1, const LocalState& phi2,
                                     FunctionalForm form) {
  if (phi1.n != phi2.n) throw std::domain_error("local dimensions differ");
  if (!phi1.is_normalized(1e-9) || !phi2.is_normalized(1e-9))
    throw std::domain_error("local states must be normalized");
  int n = phi1.n;
  std::vector<double> alpha(n);
  if (form == FunctionalForm::ProjectorForm) {
    Eigen::VectorXcd psi(n * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) psi(a * n + b) = phi1.amps(a) * phi2.amps(b);
    auto basis = coupled_basis(n);
    for (int J = 0; J < n; ++J) {
      Eigen::VectorXcd proj = basis[J].adjoint() * psi;
      alpha[J] = n * proj.squaredNorm() / std::sqrt(2.0 * J + 1.0);
    }
  } else {
    for (int J = 0; J < n; ++J) {
      double sum = 0;
      for (int M = -J; M <= J; ++M) {
        Complex amp = phi1.amps.dot(tensor_operator(n, J, M) * phi2.amps);
        sum += std::norm(amp);
      }
      alpha[J] = n * sum / std::sqrt(2.0 * J + 1.0);
    }
  }
  return AlphaVector(std::move(alpha));
}

/// Anti-unitary time reversal tau = V tau_0:
/// sum_m c_m |j m>  ->  sum_m c_m^* (-1)^{j-m} |j -m>.
inline LocalState time_reversal_local(const LocalState& phi) {
  int n = phi.n;
  int tj = n - 1;
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(n);
  for (int i = 0; i < n; ++i) {
    int tm = tj - 2 * i;
    int target = (tj + tm) / 2;  // index of |j -m>
    double phase = ((tj - tm) / 2) % 2 == 0 ? 1.0 : -1.0;
    out(target) = phase * std::conj(phi.amps(i));
  }
  return LocalState(n, std::move(out));
}

/// A = (4/sqrt5) sum_M T_2M |phi><phi| T_2M^dagger for a spin-3/2 local
/// state; phi is an eigenvector with eigenvalue 1/sqrt5.
inline Eigen::MatrixXcd appendix_b_operator(const LocalState& phi2) {
  if (phi2.n != 4) throw std::domain_error("defined for n = 4 only");
  if (!phi2.is_normalized(1e-9))
    throw std::domain_error("local state must be normalized");
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(4, 4);
  Eigen::MatrixXcd proj = phi2.amps * phi2.amps.adjoint();
  for (int M = -2; M <= 2; ++M) {
    Eigen::MatrixXcd t = tensor_operator(4, 2, M);
    a += t * proj * t.adjoint();
  }
  return 4.0 / std::sqrt(5.0) * a;
}

inline Eigen::MatrixXcd reduced_density_first(const DenseOperator& rho) {
  int n = rho.n;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n, n);
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c)
      for (int b = 0; b < n; ++b) out(a, c) += rho.mat(a * n + b, c * n + b);
  return out;
}

inline Eigen::MatrixXcd reduced_density_second(const DenseOperator& rho) {
  int n = rho.n;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n, n);
  for (int b = 0; b < n; ++b)
    for (int d = 0; d < n; ++d)
      for (int a = 0; a < n; ++a) out(b, d) += rho.mat(a * n + b, a * n + d);
  return out;
}

/// Trace norm ||A||_1 of a Hermitian operator (sum of |eigenvalues|).
inline double trace_norm_hermitian(const DenseOperator& op) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(op.mat,
                                                     Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().sum();
}

/// Trace norm of the realignment map: rearrange rho into the matrix
/// R[(a,b),(c,d)] = <a c|rho|b d> and sum its singular values. The local
/// unitary in the map's definition drops out of the norm.
inline double realignment_trace_norm(const DenseOperator& rho) {
  int n = rho.n;
  Eigen::MatrixXcd r(n * n, n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          r(a * n + b, c * n + d) = rho.mat(a * n + c, b * n + d);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(r);
  return svd.singularValues().sum();
}

}  // namespace dense
}  // namespace rotstate
