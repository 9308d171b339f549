#pragma once

#include <json.hpp>

#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rotstate/alpha.hpp"
#include "rotstate/dense.hpp"
#include "rotstate/polytope.hpp"
#include "rotstate/separability.hpp"
#include "rotstate/theta.hpp"

namespace rotstate {

inline constexpr const char* kSchemaTag = "rotstate/1";

using nlohmann::json;

// ---- SignedSqrtRational: {"sign": s, "num": "p", "den": "q"} ----

inline json to_json(const SignedSqrtRational& v) {
  return json{{"sign", v.sign()},
              {"num", v.radicand().get_num().get_str()},
              {"den", v.radicand().get_den().get_str()}};
}

inline SignedSqrtRational sqrt_rational_from_json(const json& j) {
  mpq_class radicand(mpz_class(j.at("num").get<std::string>()),
                     mpz_class(j.at("den").get<std::string>()));
  if (sgn(radicand.get_den()) == 0)
    throw std::invalid_argument("zero denominator in radicand");
  radicand.canonicalize();
  return SignedSqrtRational(j.at("sign").get<int>(), radicand);
}

// ---- AlphaVector: {"n": n, "alpha": [number | exact-triple, ...]} ----

inline json to_json(const AlphaVector& alpha) {
  json components = json::array();
  for (int J = 0; J < alpha.n(); ++J) {
    if (alpha.is_exact()) {
      auto single = alpha.exact()[J].as_single_sqrt();
      if (single) {
        components.push_back(to_json(*single));
        continue;
      }
    }
    components.push_back(alpha[J]);
  }
  return json{{"n", alpha.n()}, {"alpha", components}};
}

inline AlphaVector alpha_from_json(const json& j) {
  int n = j.at("n").get<int>();
  const json& comps = j.at("alpha");
  if (static_cast<int>(comps.size()) != n)
    throw std::invalid_argument("alpha length does not match n");
  bool all_exact = true;
  for (const auto& c : comps)
    if (!c.is_object()) all_exact = false;
  if (all_exact) {
    std::vector<SqrtSum> exact;
    for (const auto& c : comps) exact.emplace_back(sqrt_rational_from_json(c));
    return AlphaVector(std::move(exact));
  }
  std::vector<double> values;
  for (const auto& c : comps) {
    if (c.is_object())
      values.push_back(sqrt_rational_from_json(c).to_double());
    else
      values.push_back(c.get<double>());
  }
  return AlphaVector(std::move(values));
}

// ---- ThetaMatrix: row-major float entries plus exact entries ----

inline json to_json(const ThetaMatrix& theta) {
  json exact = json::array();
  for (int J = 0; J < theta.n(); ++J)
    for (int K = 0; K < theta.n(); ++K)
      exact.push_back(to_json(theta.exact(J, K)));
  return json{{"n", theta.n()}, {"entries", theta.values()}, {"exact", exact}};
}

// ---- DenseOperator: {"n": n, "re": [[...]], "im": [[...]]} row-major ----

inline json to_json(const DenseOperator& op) {
  int dim = op.n * op.n;
  json re = json::array(), im = json::array();
  for (int r = 0; r < dim; ++r) {
    json re_row = json::array(), im_row = json::array();
    for (int c = 0; c < dim; ++c) {
      re_row.push_back(op.mat(r, c).real());
      im_row.push_back(op.mat(r, c).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  return json{{"n", op.n}, {"re", re}, {"im", im}};
}

inline DenseOperator dense_from_json(const json& j) {
  int n = j.at("n").get<int>();
  int dim = n * n;
  Eigen::MatrixXcd m(dim, dim);
  const json& re = j.at("re");
  const json& im = j.at("im");
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c)
      m(r, c) = Complex(re.at(r).at(c).get<double>(),
                        im.at(r).at(c).get<double>());
  return DenseOperator(n, std::move(m));
}

// ---- CriteriaReport ----

inline json to_json(const CriteriaReport& report) {
  json j{{"classification", to_string(report.classification)}};
  if (report.classification == Classification::NotAState) return j;
  j["ppt"] = report.ppt;
  j["reduction_ok"] = report.reduction_ok;
  j["cross_norm"] = report.cross_norm;
  j["negativity_trace_norm"] = report.negativity_trace_norm;
  if (report.prism_inequality) j["prism_inequality"] = *report.prism_inequality;
  if (report.witness_value) j["witness_value"] = *report.witness_value;
  return j;
}

// ---- Polytope ----
// Exact coordinates travel as strings next to their float approximations;
// float-mode polytopes carry plain numbers.

inline json coord_to_json(const SqrtSum& c) {
  return json{{"exact", c.to_string()}, {"float", c.to_double()}};
}
inline json coord_to_json(double c) { return json(c); }

inline SqrtSum coord_from_json_exact(const json& j) {
  return SqrtSum::parse(j.at("exact").get<std::string>());
}

template <class Ops>
json to_json(const PolytopeT<Ops>& p) {
  json vertices = json::array();
  for (const auto& v : p.vertices()) {
    json row = json::array();
    for (const auto& c : v) row.push_back(coord_to_json(c));
    vertices.push_back(std::move(row));
  }
  json halfspaces = json::array();
  for (const auto& h : p.halfspaces()) {
    json normal = json::array();
    for (const auto& c : h.normal) normal.push_back(coord_to_json(c));
    halfspaces.push_back(json{{"normal", std::move(normal)},
                              {"offset", coord_to_json(h.offset)}});
  }
  return json{{"dim", p.dim()},
              {"affine_dim", p.affine_dim()},
              {"vertices", std::move(vertices)},
              {"halfspaces", std::move(halfspaces)}};
}

inline Polytope polytope_from_json(const json& j) {
  int dim = j.at("dim").get<int>();
  std::vector<HalfspaceT<ExactOps>> halfspaces;
  for (const auto& h : j.at("halfspaces")) {
    std::vector<SqrtSum> normal;
    for (const auto& c : h.at("normal")) normal.push_back(coord_from_json_exact(c));
    halfspaces.push_back({std::move(normal), coord_from_json_exact(h.at("offset"))});
  }
  return Polytope::from_halfspaces(dim, std::move(halfspaces));
}

// ---- OFF mesh of the polytope boundary (dim 2 or 3) ----

namespace detail {

template <class Ops>
std::vector<std::vector<int>> boundary_faces(const PolytopeT<Ops>& p) {
  using Scalar = typename Ops::Scalar;
  Ops ops{};
  int nv = static_cast<int>(p.vertices().size());
  std::vector<std::array<double, 3>> coords(nv, {0, 0, 0});
  for (int i = 0; i < nv; ++i)
    for (int c = 0; c < p.dim(); ++c)
      coords[i][c] = Ops::to_double(p.vertices()[i][c]);

  auto ordered_cycle = [&](const std::vector<int>& incident,
                           const std::array<double, 3>& axis) {
    std::array<double, 3> centroid{0, 0, 0};
    for (int i : incident)
      for (int c = 0; c < 3; ++c) centroid[c] += coords[i][c] / incident.size();
    // in-plane frame (u, v) right-handed about the outward axis
    std::array<double, 3> seed{1, 0, 0};
    if (std::abs(axis[0]) > 0.9) seed = {0, 1, 0};
    std::array<double, 3> u{seed[1] * axis[2] - seed[2] * axis[1],
                            seed[2] * axis[0] - seed[0] * axis[2],
                            seed[0] * axis[1] - seed[1] * axis[0]};
    double un = std::hypot(u[0], u[1], u[2]);
    for (auto& x : u) x /= un;
    std::array<double, 3> v{axis[1] * u[2] - axis[2] * u[1],
                            axis[2] * u[0] - axis[0] * u[2],
                            axis[0] * u[1] - axis[1] * u[0]};
    std::vector<std::pair<double, int>> angles;
    for (int i : incident) {
      std::array<double, 3> r{coords[i][0] - centroid[0],
                              coords[i][1] - centroid[1],
                              coords[i][2] - centroid[2]};
      double x = r[0] * u[0] + r[1] * u[1] + r[2] * u[2];
      double y = r[0] * v[0] + r[1] * v[1] + r[2] * v[2];
      angles.emplace_back(std::atan2(y, x), i);
    }
    std::sort(angles.begin(), angles.end());
    std::vector<int> cycle;
    for (auto& [angle, i] : angles) cycle.push_back(i);
    return cycle;
  };

  std::vector<std::vector<int>> faces;
  if (p.dim() == 2) {
    std::vector<int> all(nv);
    for (int i = 0; i < nv; ++i) all[i] = i;
    faces.push_back(ordered_cycle(all, {0, 0, 1}));
    return faces;
  }
  for (const auto& h : p.halfspaces()) {
    std::vector<int> incident;
    for (int i = 0; i < nv; ++i) {
      Scalar margin = PolytopeT<Ops>::dot(h.normal, p.vertices()[i]) - h.offset;
      if (ops.sign(margin) == 0) incident.push_back(i);
    }
    if (incident.size() < 3) continue;
    std::array<double, 3> axis{Ops::to_double(h.normal[0]),
                               Ops::to_double(h.normal[1]),
                               Ops::to_double(h.normal[2])};
    double norm = std::hypot(axis[0], axis[1], axis[2]);
    for (auto& x : axis) x /= norm;
    faces.push_back(ordered_cycle(incident, axis));
  }
  return faces;
}

}  // namespace detail

template <class Ops>
std::string export_off(const PolytopeT<Ops>& p) {
  if (p.dim() != 2 && p.dim() != 3)
    throw std::domain_error("OFF export supports dim 2 and 3");
  if (p.affine_dim() < 2)
    throw std::domain_error("OFF export needs a two-dimensional boundary");
  auto faces = detail::boundary_faces(p);
  size_t edges = 0;
  for (const auto& f : faces) edges += f.size();
  if (p.dim() == 3) edges /= 2;  // each edge borders two faces of a closed surface
  std::ostringstream out;
  out << "OFF\n"
      << p.vertices().size() << " " << faces.size() << " " << edges << "\n";
  out << std::setprecision(17);
  for (const auto& v : p.vertices()) {
    for (int c = 0; c < 3; ++c)
      out << (c < p.dim() ? Ops::to_double(v[c]) : 0.0) << (c < 2 ? " " : "\n");
  }
  for (const auto& f : faces) {
    out << f.size();
    for (int i : f) out << " " << i;
    out << "\n";
  }
  return out.str();
}

/// One vertex per row; exact polytopes render field elements, float ones
/// plain numbers.
template <class Ops>
std::string export_csv(const PolytopeT<Ops>& p, bool exact_strings = false) {
  std::ostringstream out;
  out << std::setprecision(17);
  for (const auto& v : p.vertices()) {
    for (size_t c = 0; c < v.size(); ++c) {
      if (c) out << ",";
      if constexpr (std::is_same_v<typename Ops::Scalar, SqrtSum>) {
        if (exact_strings)
          out << v[c].to_string();
        else
          out << Ops::to_double(v[c]);
      } else {
        out << Ops::to_double(v[c]);
      }
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace rotstate
