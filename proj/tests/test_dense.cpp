#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "rotstate/dense.hpp"
#include "rotstate/sampling.hpp"
#include "rotstate/theta.hpp"

using namespace rotstate;
using namespace rotstate::dense;

namespace {

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

Eigen::MatrixXcd pauli(int k) {
  Eigen::MatrixXcd s(2, 2);
  if (k == 1)
    s << 0, 1, 1, 0;
  else if (k == 2)
    s << 0, Complex(0, -1), Complex(0, 1), 0;
  else
    s << 1, 0, 0, -1;
  return s;
}

TEST(SpinMatrices, SpinHalfIsPauliOverTwo) {
  auto jk = spin_matrices(2);
  for (int k = 0; k < 3; ++k)
    EXPECT_LT(max_abs(jk[k] - 0.5 * pauli(k + 1)), 1e-15);
}

TEST(SpinMatrices, AlgebraAndCasimir) {
  for (int n = 2; n <= 6; ++n) {
    auto jk = spin_matrices(n);
    EXPECT_LT(max_abs(jk[0] * jk[1] - jk[1] * jk[0] - Complex(0, 1) * jk[2]),
              1e-14);
    double j = (n - 1) / 2.0;
    Eigen::MatrixXcd casimir =
        jk[0] * jk[0] + jk[1] * jk[1] + jk[2] * jk[2];
    EXPECT_LT(max_abs(casimir - j * (j + 1) *
                                    Eigen::MatrixXcd::Identity(n, n)),
              1e-13);
  }
}

TEST(Rotation, SpecialCases) {
  EXPECT_LT(max_abs(rotation(3, {0, 0, 0}) -
                    Eigen::MatrixXcd::Identity(3, 3)),
            1e-15);
  // D(0,pi,0) at spin-1/2 is -i sigma_2
  Eigen::MatrixXcd want(2, 2);
  want << 0, -1, 1, 0;
  EXPECT_LT(max_abs(rotation(2, {0, M_PI, 0}) - want), 1e-14);
  // a 2 pi turn is -I for half-integer spin
  EXPECT_LT(max_abs(rotation(2, {0, 2 * M_PI, 0}) +
                    Eigen::MatrixXcd::Identity(2, 2)),
            1e-13);
}

TEST(Rotation, UnitaryOnRandomAxes) {
  std::mt19937_64 rng(7);
  for (int n = 2; n <= 5; ++n)
    for (int rep = 0; rep < 20; ++rep) {
      Eigen::MatrixXcd d = rotation(n, sampling::random_axis_angle(rng));
      EXPECT_LT(max_abs(d * d.adjoint() - Eigen::MatrixXcd::Identity(n, n)),
                1e-12);
    }
}

TEST(VMatrix, ExplicitFormAndSquare) {
  Eigen::MatrixXd v2 = v_matrix(2);
  Eigen::MatrixXd want(2, 2);
  want << 0, -1, 1, 0;
  EXPECT_LT((v2 - want).cwiseAbs().maxCoeff(), 1e-15);

  for (int n = 2; n <= 6; ++n) {
    Eigen::MatrixXd v = v_matrix(n);
    EXPECT_LT((v * v.transpose() - Eigen::MatrixXd::Identity(n, n))
                  .cwiseAbs()
                  .maxCoeff(),
              1e-15);
    double parity = (n - 1) % 2 == 0 ? 1.0 : -1.0;  // (-1)^{2j}
    EXPECT_LT((v * v - parity * Eigen::MatrixXd::Identity(n, n))
                  .cwiseAbs()
                  .maxCoeff(),
              1e-15);
    EXPECT_LT(max_abs(v.cast<Complex>() - rotation(n, {0, M_PI, 0})), 1e-13);
  }
}

// V D(R)* V^dagger = D(R): the conjugation property that makes the partial
// time reversal preserve invariance.
TEST(VMatrix, ConjugatesRotationsBack) {
  std::mt19937_64 rng(11);
  for (int n = 2; n <= 5; ++n) {
    Eigen::MatrixXcd v = v_matrix(n).cast<Complex>();
    for (int rep = 0; rep < 100; ++rep) {
      Eigen::MatrixXcd d = rotation(n, sampling::random_axis_angle(rng));
      EXPECT_LT(max_abs(v * d.conjugate() * v.adjoint() - d), 1e-11);
    }
  }
}

TEST(CoupledBasis, SingletColumnAtN2) {
  auto basis = coupled_basis(2);
  Eigen::VectorXcd singlet = basis[0].col(0);
  Eigen::VectorXcd want(4);
  want << 0, 1 / std::sqrt(2.0), -1 / std::sqrt(2.0), 0;
  EXPECT_LT((singlet - want).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(CoupledBasis, DiagonalizesTotalAngularMomentum) {
  for (int n = 2; n <= 5; ++n) {
    auto jk = spin_matrices(n);
    Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
    Eigen::MatrixXcd j2 = Eigen::MatrixXcd::Zero(n * n, n * n);
    for (int k = 0; k < 3; ++k) {
      Eigen::MatrixXcd big = kron(jk[k], id) + kron(id, jk[k]);
      j2 += big * big;
    }
    auto basis = coupled_basis(n);
    int count = 0;
    for (int J = 0; J < n; ++J) {
      count += basis[J].cols();
      EXPECT_LT(max_abs(j2 * basis[J] - J * (J + 1.0) * basis[J]), 1e-12)
          << "n=" << n << " J=" << J;
      EXPECT_LT(max_abs(basis[J].adjoint() * basis[J] -
                        Eigen::MatrixXcd::Identity(2 * J + 1, 2 * J + 1)),
                1e-14);
    }
    EXPECT_EQ(count, n * n);
  }
}

TEST(Projector, RankTraceOrthogonalityCompleteness) {
  for (int n = 2; n <= 5; ++n) {
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(n * n, n * n);
    for (int J = 0; J < n; ++J) {
      DenseOperator pj = projector(n, J);
      EXPECT_NEAR(pj.trace().real(), 2.0 * J + 1.0, 1e-12);
      sum += pj.mat;
      for (int K = 0; K < n; ++K) {
        DenseOperator pk = projector(n, K);
        Eigen::MatrixXcd want =
            (J == K) ? pk.mat : Eigen::MatrixXcd::Zero(n * n, n * n);
        EXPECT_LT(max_abs(pj.mat * pk.mat - want), 1e-14);
      }
    }
    EXPECT_LT(max_abs(sum - Eigen::MatrixXcd::Identity(n * n, n * n)), 1e-13);
  }
  EXPECT_THROW(projector(3, 3), std::domain_error);
}

TEST(Projector, SingletProjectorAtN2) {
  DenseOperator p0 = projector(2, 0);
  DenseOperator rho = invariant_operator(singlet_alpha(2));
  EXPECT_LT(max_abs(p0.mat - rho.mat), 1e-14);
}

TEST(PartialMaps, InvolutionAndUnitaryEquivalence) {
  std::mt19937_64 rng(3);
  for (int n = 2; n <= 5; ++n) {
    DenseOperator rho = sampling::random_density(n, rng);
    DenseOperator twice = partial_time_reversal(partial_time_reversal(rho));
    EXPECT_LT(max_abs(twice.mat - rho.mat), 1e-13);
    EXPECT_NEAR(partial_time_reversal(rho).min_eigenvalue(),
                partial_transpose(rho).min_eigenvalue(), 1e-12);
    // theta_2 preserves hermiticity and trace
    DenseOperator image = partial_time_reversal(rho);
    EXPECT_TRUE(image.is_hermitian(1e-12));
    EXPECT_NEAR(image.trace().real(), 1.0, 1e-12);
  }
}

TEST(PartialMaps, PreservesInvariance) {
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 5; ++n) {
    AlphaVector alpha = sampling::random_state_alpha(n, rng);
    DenseOperator rho = invariant_operator(alpha);
    DenseOperator image = partial_time_reversal(rho);
    auto jk = spin_matrices(n);
    Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
    for (int k = 0; k < 3; ++k) {
      Eigen::MatrixXcd big = kron(jk[k], id) + kron(id, jk[k]);
      EXPECT_LT(max_abs(big * image.mat - image.mat * big), 1e-12);
    }
  }
}

// Self-adjointness of theta_2 in the Hilbert-Schmidt inner product.
TEST(PartialMaps, SelfAdjoint) {
  std::mt19937_64 rng(13);
  for (int n = 2; n <= 4; ++n)
    for (int rep = 0; rep < 5; ++rep) {
      DenseOperator x(n, sampling::random_matrix(n * n, rng));
      DenseOperator y(n, sampling::random_matrix(n * n, rng));
      Complex lhs = (x.mat.adjoint() * partial_time_reversal(y).mat).trace();
      Complex rhs = (partial_time_reversal(x).mat.adjoint() * y.mat).trace();
      EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-11);
    }
}

// <m1 m2|theta_2 P_J|m1' m2'> = (-1)^{2j - m2 - m2'} <m1 -m2'|P_J|m1' -m2>.
TEST(PartialMaps, MatrixElementIdentity) {
  std::mt19937_64 rng(17);
  for (int n = 3; n <= 5; ++n) {
    std::uniform_int_distribution<int> pick(0, n - 1);
    int tj = n - 1;
    for (int J = 0; J < n; ++J) {
      DenseOperator pj = projector(n, J);
      DenseOperator tpj = partial_time_reversal(pj);
      for (int rep = 0; rep < 50; ++rep) {
        int i1 = pick(rng), i2 = pick(rng), i1p = pick(rng), i2p = pick(rng);
        int tm2 = tj - 2 * i2, tm2p = tj - 2 * i2p;
        // exponent 2j - m2 - m2' is the integer tj - (tm2 + tm2p)/2
        int expo = tj - (tm2 + tm2p) / 2;
        double phase = expo % 2 == 0 ? 1.0 : -1.0;
        int i2_neg = (tj + tm2) / 2, i2p_neg = (tj + tm2p) / 2;
        Complex lhs = tpj.mat(i1 * n + i2, i1p * n + i2p);
        Complex rhs = phase * pj.mat(i1 * n + i2p_neg, i1p * n + i2_neg);
        EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-13);
      }
    }
  }
}

TEST(ThetaFromTrace, MatchesExplicitMatrices) {
  Eigen::MatrixXd t2(2, 2), t3(3, 3), t4(4, 4);
  double s3 = std::sqrt(3.0), s5 = std::sqrt(5.0), s7 = std::sqrt(7.0);
  t2 << -1, s3, s3, 1;
  t2 /= 2.0;
  t3 << 1, -s3, s5, -s3, 1.5, std::sqrt(15.0) / 2, s5, std::sqrt(15.0) / 2, 0.5;
  t3 /= 3.0;
  t4 << -1, s3, -s5, s7,
        s3, -11.0 / 5, std::sqrt(3.0 / 5), 3 * std::sqrt(21.0) / 5,
        -s5, std::sqrt(3.0 / 5), 3, std::sqrt(7.0 / 5),
        s7, 3 * std::sqrt(21.0) / 5, std::sqrt(7.0 / 5), 1.0 / 5;
  t4 /= 4.0;
  EXPECT_LT((theta_from_trace(2) - t2).cwiseAbs().maxCoeff(), 1e-13);
  EXPECT_LT((theta_from_trace(3) - t3).cwiseAbs().maxCoeff(), 1e-13);
  EXPECT_LT((theta_from_trace(4) - t4).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(ThetaFromTrace, AgreesWithSixJConstruction) {
  for (int n = 2; n <= 5; ++n) {
    Eigen::MatrixXd oracle = theta_from_trace(n);
    ThetaMatrix direct(n);
    for (int J = 0; J < n; ++J)
      for (int K = 0; K < n; ++K)
        EXPECT_NEAR(oracle(J, K), direct(J, K), 1e-12)
            << "n=" << n << " J=" << J << " K=" << K;
  }
}

TEST(TensorOperators, SpinHalfClosedForms) {
  EXPECT_LT(max_abs(tensor_operator(2, 0, 0) -
                    pauli(3) * 0.0 -
                    Eigen::MatrixXcd::Identity(2, 2) / std::sqrt(2.0)),
            1e-15);
  EXPECT_LT(max_abs(tensor_operator(2, 1, 0) - pauli(3) / std::sqrt(2.0)),
            1e-15);
  EXPECT_LT(max_abs(tensor_operator(2, 1, 1) +
                    (pauli(1) + Complex(0, 1) * pauli(2)) / 2.0),
            1e-15);
  EXPECT_LT(max_abs(tensor_operator(2, 1, -1) -
                    (pauli(1) - Complex(0, 1) * pauli(2)) / 2.0),
            1e-15);
}

TEST(TensorOperators, HilbertSchmidtOrthonormal) {
  for (int n = 2; n <= 5; ++n)
    for (int J = 0; J < n; ++J)
      for (int M = -J; M <= J; ++M) {
        Eigen::MatrixXcd t = tensor_operator(n, J, M);
        for (int Jp = 0; Jp < n; ++Jp)
          for (int Mp = -Jp; Mp <= Jp; ++Mp) {
            Complex ip = (t.adjoint() * tensor_operator(n, Jp, Mp)).trace();
            double want = (J == Jp && M == Mp) ? 1.0 : 0.0;
            EXPECT_NEAR(std::abs(ip), want, 1e-13);
          }
      }
  EXPECT_THROW(tensor_operator(3, 1, 2), std::domain_error);
  EXPECT_THROW(tensor_operator(3, 3, 0), std::domain_error);
}

// theta T_JM = (-1)^J T_JM and the J=0 component is I/sqrt(N).
TEST(TensorOperators, TimeReversalEigenOperators) {
  for (int n = 2; n <= 6; ++n) {
    EXPECT_LT(max_abs(tensor_operator(n, 0, 0) -
                      Eigen::MatrixXcd::Identity(n, n) / std::sqrt(double(n))),
              1e-14);
    Eigen::MatrixXcd v = v_matrix(n).cast<Complex>();
    for (int J = 0; J < n; ++J) {
      double phase = J % 2 == 0 ? 1.0 : -1.0;
      for (int M = -J; M <= J; ++M) {
        Eigen::MatrixXcd t = tensor_operator(n, J, M);
        EXPECT_LT(max_abs(v * t.transpose() * v.adjoint() - phase * t), 1e-13);
      }
    }
  }
}

// <j,-m|T_J0|j,-m> = (-1)^J <j,+m|T_J0|j,+m>, exhaustive.
TEST(TensorOperators, DiagonalReflectionSymmetry) {
  for (int n = 2; n <= 6; ++n) {
    int tj = n - 1;
    for (int J = 0; J < n; ++J) {
      Eigen::MatrixXcd t = tensor_operator(n, J, 0);
      double phase = J % 2 == 0 ? 1.0 : -1.0;
      for (int i = 0; i < n; ++i) {
        int tm = tj - 2 * i;
        int ineg = (tj + tm) / 2;
        EXPECT_NEAR(std::abs(t(ineg, ineg) - phase * t(i, i)), 0.0, 1e-14);
      }
    }
  }
}

TEST(QAndFlip, AppendixAIdentity) {
  for (int n = 2; n <= 6; ++n) {
    DenseOperator f = flip(n);
    EXPECT_LT(max_abs(f.mat * f.mat - Eigen::MatrixXcd::Identity(n * n, n * n)),
              1e-15);
    for (int J = 0; J < n; ++J) {
      DenseOperator lhs = partial_time_reversal(projector(n, J));
      Eigen::MatrixXcd rhs = q_operator(n, J).mat * f.mat;
      EXPECT_LT(max_abs(lhs.mat - rhs), 1e-13) << "n=" << n << " J=" << J;
    }
    // F = N theta_2 P_0
    EXPECT_LT(max_abs(f.mat - double(n) * partial_time_reversal(projector(n, 0)).mat),
              1e-13);
    // tr{P_J F} = N sqrt(2J+1) Theta_J0
    for (int J = 0; J < n; ++J) {
      double lhs = (projector(n, J).mat * f.mat).trace().real();
      double rhs = n * std::sqrt(2.0 * J + 1.0) * theta_row0(n, J).to_double();
      EXPECT_NEAR(lhs, rhs, 1e-12);
    }
  }
}

TEST(Twirl, InvariantInputIsFixed) {
  std::mt19937_64 rng(23);
  for (int n = 2; n <= 5; ++n) {
    AlphaVector alpha = sampling::random_state_alpha(n, rng);
    auto result = twirl(invariant_operator(alpha));
    for (int J = 0; J < n; ++J) EXPECT_NEAR(result.alpha[J], alpha[J], 1e-12);
  }
}

TEST(Twirl, WernerFamilyParameters) {
  for (int n = 2; n <= 4; ++n)
    for (double lambda : {-1.0, -0.25, 0.0, 0.6, 1.0}) {
      auto result = twirl(werner_dense(n, lambda));
      AlphaVector want = werner_alpha(n, lambda);
      for (int J = 0; J < n; ++J)
        EXPECT_NEAR(result.alpha[J], want[J], 1e-12)
            << "n=" << n << " lambda=" << lambda;
    }
}

TEST(Twirl, Idempotent) {
  std::mt19937_64 rng(29);
  DenseOperator rho = sampling::random_density(3, rng);
  auto once = twirl(rho);
  auto again = twirl(once.projected);
  EXPECT_LT(max_abs(once.projected.mat - again.projected.mat), 1e-13);
}

TEST(AlphaFunctionals, SpinHalfParallelPair) {
  Eigen::VectorXcd up(2);
  up << 1, 0;
  LocalState phi(2, up);
  AlphaVector t = alpha_functionals(phi, phi, FunctionalForm::TensorForm);
  EXPECT_NEAR(t[0], 1.0, 1e-14);
  EXPECT_NEAR(t[1], 1.0 / std::sqrt(3.0), 1e-14);
}

TEST(AlphaFunctionals, StretchedOrthogonalPairAtN4) {
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(4), b = Eigen::VectorXcd::Zero(4);
  a(0) = 1;  // |+3/2>
  b(3) = 1;  // |-3/2>
  AlphaVector t = alpha_functionals(LocalState(4, a), LocalState(4, b),
                                    FunctionalForm::TensorForm);
  EXPECT_NEAR(t[0], 0.0, 1e-14);
  EXPECT_NEAR(t[1], 0.0, 1e-14);
  EXPECT_NEAR(t[2], 0.0, 1e-14);
  EXPECT_NEAR(t[3], 4.0 / std::sqrt(7.0), 1e-13);
}

TEST(AlphaFunctionals, TensorFormIsThetaTimesProjectorForm) {
  std::mt19937_64 rng(31);
  for (int n = 2; n <= 5; ++n) {
    ThetaMatrix theta(n);
    for (int rep = 0; rep < 10; ++rep) {
      LocalState phi1 = sampling::haar_state(n, rng);
      LocalState phi2 = sampling::haar_state(n, rng);
      AlphaVector p = alpha_functionals(phi1, phi2, FunctionalForm::ProjectorForm);
      AlphaVector t = alpha_functionals(phi1, phi2, FunctionalForm::TensorForm);
      AlphaVector mapped = apply_theta(theta, p);
      for (int J = 0; J < n; ++J) EXPECT_NEAR(t[J], mapped[J], 1e-12);
      EXPECT_NEAR(t[0], std::norm(phi1.amps.dot(phi2.amps)), 1e-13);
      EXPECT_TRUE(p.is_state(1e-10));
    }
  }
  Eigen::VectorXcd big(2);
  big << 2, 0;
  EXPECT_THROW(alpha_functionals(LocalState(2, big), LocalState(2, big),
                                 FunctionalForm::TensorForm),
               std::domain_error);
}

TEST(TimeReversalLocal, SpotChecksAndFunctionalRelation) {
  // (|1,+1> + |1,-1>)/sqrt2 is tau-invariant
  Eigen::VectorXcd sym = Eigen::VectorXcd::Zero(3);
  sym(0) = sym(2) = 1 / std::sqrt(2.0);
  LocalState tau_sym = time_reversal_local(LocalState(3, sym));
  EXPECT_LT((tau_sym.amps - sym).cwiseAbs().maxCoeff(), 1e-15);

  // |+1/2> -> |-1/2> with phase (+1)
  Eigen::VectorXcd up(2);
  up << 1, 0;
  LocalState down = time_reversal_local(LocalState(2, up));
  EXPECT_NEAR(std::abs(down.amps(1) - Complex(1.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(down.amps(0)), 0.0, 1e-15);

  // P-form with tau phi2 equals T-form with phi2
  std::mt19937_64 rng(37);
  for (int n = 2; n <= 4; ++n) {
    LocalState phi1 = sampling::haar_state(n, rng);
    LocalState phi2 = sampling::haar_state(n, rng);
    AlphaVector lhs = alpha_functionals(phi1, time_reversal_local(phi2),
                                        FunctionalForm::ProjectorForm);
    AlphaVector rhs = alpha_functionals(phi1, phi2, FunctionalForm::TensorForm);
    for (int J = 0; J < n; ++J) EXPECT_NEAR(lhs[J], rhs[J], 1e-12);
  }
}

// The explicit 4x4 matrix of the operator A in terms of the amplitudes
// c_1..c_4, used as the entrywise oracle.
Eigen::MatrixXcd appendix_b_reference(const Eigen::VectorXcd& c) {
  auto sq = [](Complex z) { return std::norm(z); };
  Eigen::MatrixXcd a(4, 4);
  a(0, 0) = sq(c(0)) + 2 * sq(c(1)) + 2 * sq(c(2));
  a(0, 1) = -c(0) * std::conj(c(1)) + 2.0 * c(2) * std::conj(c(3));
  a(0, 2) = -c(0) * std::conj(c(2)) - 2.0 * c(1) * std::conj(c(3));
  a(0, 3) = c(0) * std::conj(c(3));
  a(1, 1) = sq(c(1)) + 2 * sq(c(0)) + 2 * sq(c(3));
  a(1, 2) = c(1) * std::conj(c(2));
  a(1, 3) = -c(1) * std::conj(c(3)) - 2.0 * c(0) * std::conj(c(2));
  a(2, 2) = sq(c(2)) + 2 * sq(c(3)) + 2 * sq(c(0));
  a(2, 3) = -c(2) * std::conj(c(3)) + 2.0 * c(0) * std::conj(c(1));
  a(3, 3) = sq(c(3)) + 2 * sq(c(2)) + 2 * sq(c(1));
  for (int r = 0; r < 4; ++r)
    for (int col = 0; col < r; ++col) a(r, col) = std::conj(a(col, r));
  return a / std::sqrt(5.0);
}

TEST(AppendixB, EigenvectorAndExplicitMatrix) {
  std::mt19937_64 rng(41);
  for (int rep = 0; rep < 100; ++rep) {
    LocalState phi2 = sampling::haar_state(4, rng);
    Eigen::MatrixXcd a = appendix_b_operator(phi2);
    EXPECT_LT((a * phi2.amps - phi2.amps / std::sqrt(5.0)).norm(), 1e-10);
    EXPECT_LT(max_abs(a - appendix_b_reference(phi2.amps)), 1e-12);
    EXPECT_LT(max_abs(a - a.adjoint()), 1e-13);

    // <phi1|A|phi1> equals the alpha_2 functional
    LocalState phi1 = sampling::haar_state(4, rng);
    AlphaVector t = alpha_functionals(phi1, phi2, FunctionalForm::TensorForm);
    double quad = (phi1.amps.adjoint() * a * phi1.amps)(0, 0).real();
    EXPECT_NEAR(quad, t[2], 1e-12);
  }
  Eigen::VectorXcd c(3);
  c << 1, 0, 0;
  EXPECT_THROW(appendix_b_operator(LocalState(3, c)), std::domain_error);
}

// The hand-picked |+-3/2> combinations map to the prism vertex
// F = (0, 3 sqrt3 / 5, 0, .).
TEST(AlphaFunctionals, PrismVertexFFromExplicitStates) {
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(4), b = Eigen::VectorXcd::Zero(4);
  a(0) = a(3) = 1 / std::sqrt(2.0);
  b(0) = 1 / std::sqrt(2.0);
  b(3) = -1 / std::sqrt(2.0);
  AlphaVector t = alpha_functionals(LocalState(4, a), LocalState(4, b),
                                    FunctionalForm::TensorForm);
  EXPECT_NEAR(t[0], 0.0, 1e-14);
  EXPECT_NEAR(t[1], 3.0 * std::sqrt(3.0) / 5.0, 1e-13);
  EXPECT_NEAR(t[2], 0.0, 1e-14);
}

TEST(InvariantOperator, CommutesWithGeneratorsAndMixedMarginals) {
  std::mt19937_64 rng(43);
  for (int n = 2; n <= 5; ++n) {
    DenseOperator rho = invariant_operator(sampling::random_state_alpha(n, rng));
    auto jk = spin_matrices(n);
    Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
    for (int k = 0; k < 3; ++k) {
      Eigen::MatrixXcd big = kron(jk[k], id) + kron(id, jk[k]);
      EXPECT_LT(max_abs(big * rho.mat - rho.mat * big), 1e-12);
    }
    EXPECT_LT(max_abs(reduced_density_first(rho) - id / double(n)), 1e-12);
    EXPECT_LT(max_abs(reduced_density_second(rho) - id / double(n)), 1e-12);
  }
}

}  // namespace
