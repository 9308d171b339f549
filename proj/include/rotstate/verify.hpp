#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rotstate/geometry.hpp"
#include "rotstate/sampling.hpp"
#include "rotstate/separability.hpp"

namespace rotstate {
namespace verify {

struct CheckResult {
  std::string name;
  int n = 0;
  bool pass = false;
  std::string detail;  // empty on success
};

struct CheckContext {
  int n;
  std::mt19937_64 rng;
  double tol;
};

/// A check returns nullopt on success and a failure description otherwise.
using CheckFn = std::function<std::optional<std::string>(CheckContext&)>;

namespace detail {

inline std::string fmt(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

inline std::optional<std::string> check_theta_structure(CheckContext& ctx) {
  int n = ctx.n;
  const ThetaMatrix& t = cached_theta(n);
  for (int J = 0; J < n; ++J)
    for (int K = 0; K < n; ++K)
      if (!(t.exact(J, K) == t.exact(K, J))) return "Theta not symmetric";
  for (int J = 0; J < n; ++J)
    for (int L = 0; L < n; ++L) {
      SqrtSum sum;
      for (int K = 0; K < n; ++K)
        sum += SqrtSum(t.exact(J, K)) * SqrtSum(t.exact(K, L));
      if (!(sum == SqrtSum(J == L ? 1 : 0))) return "Theta^2 != I";
    }
  SqrtSum trace;
  for (int J = 0; J < n; ++J) trace += SqrtSum(t.exact(J, J));
  if (!(trace == SqrtSum(n % 2 == 0 ? 0 : 1))) return "trace rule violated";
  return std::nullopt;
}

inline std::optional<std::string> check_theta_closed_forms(CheckContext& ctx) {
  int n = ctx.n;
  const ThetaMatrix& t = cached_theta(n);
  for (int J = 0; J < n; ++J) {
    if (!(t.exact(J, 0) == theta_row0(n, J))) return "row 0 closed form";
    if (!(t.exact(J, 1) == theta_row1(n, J))) return "row 1 closed form";
  }
  for (int J = 0; J < n; ++J) {
    SqrtSum sum;
    for (int K = 0; K < n; ++K)
      sum += SqrtSum(t.exact(J, K)) * SqrtSum::sqrt_of(mpq_class(2 * K + 1));
    if (!(sum == SqrtSum::sqrt_of(mpq_class(2 * J + 1))))
      return "normalization not preserved";
  }
  return std::nullopt;
}

inline std::optional<std::string> check_theta_eigenvectors(CheckContext& ctx) {
  const ThetaMatrix& t = cached_theta(ctx.n);
  auto basis = theta_eigenvectors(t);
  for (int L = 0; L < ctx.n; ++L) {
    AlphaVector image = apply_theta(t, basis[L].first);
    for (int J = 0; J < ctx.n; ++J) {
      SqrtSum want = basis[L].second == 1 ? basis[L].first.exact()[J]
                                          : -basis[L].first.exact()[J];
      if (!(image.exact()[J] == want)) return "sum-rule eigenvector broken";
    }
  }
  return std::nullopt;
}

inline std::optional<std::string> check_theta_oracle(CheckContext& ctx) {
  Eigen::MatrixXd oracle = dense::theta_from_trace(ctx.n);
  const ThetaMatrix& direct = cached_theta(ctx.n);
  for (int J = 0; J < ctx.n; ++J)
    for (int K = 0; K < ctx.n; ++K)
      if (std::abs(oracle(J, K) - direct(J, K)) > 1e-12)
        return "dense trace oracle deviates at (" + std::to_string(J) + "," +
               std::to_string(K) + ")";
  return std::nullopt;
}

/// theta_2 P_J = Q_J F. The V matrix is injectable so a deliberately broken
/// V can be shown to trip this check.
inline std::optional<std::string> check_appendix_a(int n,
                                                   const Eigen::MatrixXd& v) {
  Eigen::MatrixXcd iv =
      dense::kron(Eigen::MatrixXcd::Identity(n, n), v.cast<Complex>());
  Eigen::MatrixXcd f = dense::flip(n).mat;
  for (int J = 0; J < n; ++J) {
    DenseOperator pj = dense::projector(n, J);
    Eigen::MatrixXcd lhs =
        iv * dense::partial_transpose(pj).mat * iv.adjoint();
    Eigen::MatrixXcd rhs = dense::q_operator(n, J).mat * f;
    double defect = (lhs - rhs).cwiseAbs().maxCoeff();
    if (defect > 1e-12)
      return "max defect " + fmt(defect) + " at J=" + std::to_string(J);
  }
  return std::nullopt;
}

inline std::optional<std::string> check_appendix_b(CheckContext& ctx) {
  if (ctx.n != 4) return std::nullopt;
  for (int rep = 0; rep < 100; ++rep) {
    LocalState phi = sampling::haar_state(4, ctx.rng);
    Eigen::MatrixXcd a = dense::appendix_b_operator(phi);
    double defect = (a * phi.amps - phi.amps / std::sqrt(5.0)).norm();
    if (defect > 1e-10) return "eigenvector defect " + fmt(defect);
  }
  return std::nullopt;
}

inline std::optional<std::string> check_rotation_conjugation(CheckContext& ctx) {
  Eigen::MatrixXcd v = dense::v_matrix(ctx.n).cast<Complex>();
  for (int rep = 0; rep < 100; ++rep) {
    Eigen::MatrixXcd d =
        dense::rotation(ctx.n, sampling::random_axis_angle(ctx.rng));
    double defect = (v * d.conjugate() * v.adjoint() - d).cwiseAbs().maxCoeff();
    if (defect > 1e-11) return "conjugation defect " + fmt(defect);
  }
  return std::nullopt;
}

inline std::optional<std::string> check_invariance(CheckContext& ctx) {
  int n = ctx.n;
  auto jk = dense::spin_matrices(n);
  Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
  for (int rep = 0; rep < 5; ++rep) {
    AlphaVector alpha = sampling::random_state_alpha(n, ctx.rng);
    DenseOperator rho = dense::invariant_operator(alpha);
    for (int k = 0; k < 3; ++k) {
      Eigen::MatrixXcd big = dense::kron(jk[k], id) + dense::kron(id, jk[k]);
      double defect = (big * rho.mat - rho.mat * big).cwiseAbs().maxCoeff();
      if (defect > 1e-12) return "commutator defect " + fmt(defect);
    }
    double m1 = (dense::reduced_density_first(rho) - id / double(n))
                    .cwiseAbs()
                    .maxCoeff();
    double m2 = (dense::reduced_density_second(rho) - id / double(n))
                    .cwiseAbs()
                    .maxCoeff();
    if (m1 > 1e-12 || m2 > 1e-12) return "marginals not maximally mixed";
  }
  return std::nullopt;
}

inline std::optional<std::string> check_tensor_operators(CheckContext& ctx) {
  int n = ctx.n;
  Eigen::MatrixXcd v = dense::v_matrix(n).cast<Complex>();
  for (int J = 0; J < n; ++J) {
    double parity = J % 2 == 0 ? 1.0 : -1.0;
    for (int M = -J; M <= J; ++M) {
      Eigen::MatrixXcd t = dense::tensor_operator(n, J, M);
      double defect =
          (v * t.transpose() * v.adjoint() - parity * t).cwiseAbs().maxCoeff();
      if (defect > 1e-13) return "time-reversal parity broken";
      for (int Jp = 0; Jp < n; ++Jp)
        for (int Mp = -Jp; Mp <= Jp; ++Mp) {
          Complex ip =
              (t.adjoint() * dense::tensor_operator(n, Jp, Mp)).trace();
          double want = (J == Jp && M == Mp) ? 1.0 : 0.0;
          if (std::abs(std::abs(ip) - want) > 1e-13)
            return "orthonormality broken";
        }
    }
  }
  return std::nullopt;
}

inline std::optional<std::string> check_selfadjoint(CheckContext& ctx) {
  int n = ctx.n;
  for (int rep = 0; rep < 5; ++rep) {
    DenseOperator x(n, sampling::random_matrix(n * n, ctx.rng));
    DenseOperator y(n, sampling::random_matrix(n * n, ctx.rng));
    Complex lhs =
        (x.mat.adjoint() * dense::partial_time_reversal(y).mat).trace();
    Complex rhs =
        (dense::partial_time_reversal(x).mat.adjoint() * y.mat).trace();
    if (std::abs(lhs - rhs) > 1e-10) return "selfadjointness broken";
  }
  return std::nullopt;
}

inline std::optional<std::string> check_negativity_oracle(CheckContext& ctx) {
  for (int rep = 0; rep < 40; ++rep) {
    AlphaVector alpha = sampling::random_state_alpha(ctx.n, ctx.rng);
    double formula = negativity_trace_norm(alpha);
    double oracle = dense::trace_norm_hermitian(
        dense::partial_transpose(dense::invariant_operator(alpha)));
    if (std::abs(formula - oracle) > 1e-11)
      return "negativity mismatch " + fmt(formula - oracle);
    bool ppt = is_ppt(alpha, ctx.tol);
    if (ppt != (formula <= 1.0 + 1e-12)) return "negativity/PPT inconsistent";
  }
  return std::nullopt;
}

inline std::optional<std::string> check_cross_norm_oracle(CheckContext& ctx) {
  for (int rep = 0; rep < 40; ++rep) {
    AlphaVector alpha = sampling::random_state_alpha(ctx.n, ctx.rng);
    double formula = cross_norm(alpha);
    double oracle =
        dense::realignment_trace_norm(dense::invariant_operator(alpha));
    if (std::abs(formula - oracle) > 1e-10)
      return "cross norm mismatch " + fmt(formula - oracle);
  }
  return std::nullopt;
}

inline std::optional<std::string> check_range_inequality(CheckContext& ctx) {
  if (ctx.n != 4) return std::nullopt;
  for (int rep = 0; rep < 2000; ++rep) {
    LocalState phi1 = sampling::haar_state(4, ctx.rng);
    LocalState phi2 = sampling::haar_state(4, ctx.rng);
    AlphaVector alpha = dense::alpha_functionals(
        phi1, phi2, dense::FunctionalForm::TensorForm);
    if (std::sqrt(5.0) * alpha[2] - alpha[0] < -1e-12)
      return "range point below the witness plane";
    if (classify(alpha, 1e-9) != Classification::Separable)
      return "range point not separable";
  }
  return std::nullopt;
}

inline std::optional<std::string> check_werner_twirl(CheckContext& ctx) {
  for (double lambda : {-1.0, -0.3, 0.25, 1.0}) {
    auto result = dense::twirl(dense::werner_dense(ctx.n, lambda));
    AlphaVector want = werner_alpha(ctx.n, lambda);
    for (int J = 0; J < ctx.n; ++J)
      if (std::abs(result.alpha[J] - want[J]) > 1e-12)
        return "werner parameters off at lambda=" + fmt(lambda);
  }
  return std::nullopt;
}

inline std::optional<std::string> check_geometry(CheckContext& ctx) {
  int n = ctx.n;
  if (n > 4) return std::nullopt;
  if (n == 2) {
    Polytope ppt = geometry::ppt_polytope(2);
    if (!ppt.same_vertices({{SqrtSum(0)}, {SqrtSum(1)}}))
      return "PPT interval is not [0,1]";
    return std::nullopt;
  }
  Polytope ppt = geometry::ppt_polytope(n);
  Polytope image = geometry::image_under_theta(ppt, n);
  if (!image.same_vertices(ppt.vertices())) return "PPT set not Theta-symmetric";
  Polytope sep = geometry::separable_polytope(n);
  for (const auto& v : sep.vertices()) {
    if (!ppt.contains(v)) return "separable vertex escapes the PPT set";
    if (classify(AlphaVector::lift_reduced_exact(v)) !=
        Classification::Separable)
      return "separable vertex misclassified";
  }
  return std::nullopt;
}

}  // namespace detail

struct NamedCheck {
  std::string name;
  CheckFn fn;
};

inline const std::vector<NamedCheck>& registry() {
  static const std::vector<NamedCheck> checks = {
      {"theta-structure", detail::check_theta_structure},
      {"theta-closed-forms", detail::check_theta_closed_forms},
      {"theta-eigenvector-sum-rule", detail::check_theta_eigenvectors},
      {"theta-oracle-agreement", detail::check_theta_oracle},
      {"appendix-a-identity",
       [](CheckContext& ctx) {
         return detail::check_appendix_a(ctx.n, dense::v_matrix(ctx.n));
       }},
      {"appendix-b-eigenvector", detail::check_appendix_b},
      {"rotation-conjugation", detail::check_rotation_conjugation},
      {"invariant-state-structure", detail::check_invariance},
      {"tensor-operator-family", detail::check_tensor_operators},
      {"selfadjoint-time-reversal", detail::check_selfadjoint},
      {"negativity-dense-agreement", detail::check_negativity_oracle},
      {"cross-norm-dense-agreement", detail::check_cross_norm_oracle},
      {"range-inequality", detail::check_range_inequality},
      {"werner-twirl-agreement", detail::check_werner_twirl},
      {"geometry-cross-check", detail::check_geometry},
  };
  return checks;
}

inline std::vector<CheckResult> run_all(int n_min, int n_max, uint64_t seed,
                                        double tol) {
  std::vector<CheckResult> results;
  for (int n = n_min; n <= n_max; ++n)
    for (const auto& check : registry()) {
      CheckContext ctx{n, std::mt19937_64(seed ^ (n * 0x9e3779b97f4a7c15ULL)),
                       tol};
      auto failure = check.fn(ctx);
      results.push_back({check.name, n, !failure.has_value(),
                         failure.value_or("")});
    }
  return results;
}

}  // namespace verify
}  // namespace rotstate
