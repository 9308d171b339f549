// Command-line surface for the SO(3)-invariant bipartite state toolkit:
// Theta matrices, state classification, polytope geometry, range sampling
// and the self-verification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/parse error,
// 3 input is not a state.

#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "rotstate/geometry.hpp"
#include "rotstate/sampling.hpp"
#include "rotstate/separability.hpp"
#include "rotstate/serialize.hpp"
#include "rotstate/verify.hpp"

namespace {

using namespace rotstate;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNotAState = 3;

struct CliConfig {
  std::string format;
  double tolerance = 1e-10;
  std::uint64_t seed = 12345;
  bool exact = false;
};

std::string default_format() {
  const char* env = std::getenv("ROTSTATE_FORMAT");
  if (env && (std::string(env) == "json" || std::string(env) == "csv" ||
              std::string(env) == "text"))
    return env;
  return "text";
}

void add_common_options(CLI::App* cmd, CliConfig& cfg,
                        const std::vector<std::string>& formats) {
  cmd->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember(formats))
      ->capture_default_str();
  cmd->add_option("--tolerance", cfg.tolerance, "numerical tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  cmd->add_flag("--exact", cfg.exact, "exact square-root-rational arithmetic");
}

// ---- theta ----

int run_theta(int n, const CliConfig& cfg) {
  if (n < 2) {
    std::cerr << "theta requires --n >= 2\n";
    return kExitUsage;
  }
  const ThetaMatrix& theta = cached_theta(n);
  if (cfg.format == "json") {
    json j = to_json(theta);
    j["schema"] = kSchemaTag;
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << std::setprecision(17);
  for (int J = 0; J < n; ++J) {
    for (int K = 0; K < n; ++K) {
      if (K) std::cout << (cfg.format == "csv" ? "," : " ");
      if (cfg.exact)
        std::cout << theta.exact(J, K).to_string();
      else
        std::cout << theta(J, K);
    }
    std::cout << "\n";
  }
  return kExitOk;
}

// ---- classify ----

std::optional<AlphaVector> parse_alpha(const std::string& text, int n,
                                       bool reduced) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  int expected = reduced ? n - 1 : n;
  if (static_cast<int>(parts.size()) != expected) return std::nullopt;

  // exact path when every component parses as a field element
  std::vector<SqrtSum> exact;
  bool all_exact = true;
  for (const auto& p : parts) {
    try {
      exact.push_back(SqrtSum::parse(p));
    } catch (...) {
      all_exact = false;
      break;
    }
  }
  try {
    if (all_exact)
      return reduced ? AlphaVector::lift_reduced_exact(exact)
                     : AlphaVector(std::move(exact));
    std::vector<double> values;
    for (const auto& p : parts) {
      size_t used = 0;
      double v = std::stod(p, &used);
      if (used != p.size()) return std::nullopt;
      values.push_back(v);
    }
    return reduced ? AlphaVector::lift_reduced(values)
                   : AlphaVector(std::move(values));
  } catch (...) {
    return std::nullopt;
  }
}

int run_classify(int n, const std::string& alpha_text,
                 const std::string& alpha_file, bool reduced,
                 const CliConfig& cfg) {
  std::optional<AlphaVector> alpha;
  if (!alpha_file.empty()) {
    std::ifstream in(alpha_file);
    if (!in) {
      std::cerr << "cannot open " << alpha_file << "\n";
      return kExitUsage;
    }
    try {
      alpha = alpha_from_json(json::parse(in));
    } catch (const std::exception& e) {
      std::cerr << "cannot parse alpha file: " << e.what() << "\n";
      return kExitUsage;
    }
    if (n != 0 && alpha->n() != n) {
      std::cerr << "alpha file dimension disagrees with --n\n";
      return kExitUsage;
    }
  } else {
    if (n < 2) {
      std::cerr << "classify requires --n >= 2\n";
      return kExitUsage;
    }
    alpha = parse_alpha(alpha_text, n, reduced);
    if (!alpha) {
      std::cerr << "cannot parse --alpha (expected " << (reduced ? n - 1 : n)
                << " comma-separated components)\n";
      return kExitUsage;
    }
  }

  CriteriaReport report = evaluate_criteria(*alpha, cfg.tolerance);
  if (cfg.format == "json") {
    json j = to_json(report);
    j["schema"] = kSchemaTag;
    j["n"] = alpha->n();
    j["alpha"] = to_json(*alpha)["alpha"];
    std::cout << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    std::cout << to_string(report.classification);
    if (report.classification != Classification::NotAState)
      std::cout << "," << (report.ppt ? 1 : 0) << ","
                << (report.reduction_ok ? 1 : 0) << "," << report.cross_norm
                << "," << report.negativity_trace_norm;
    std::cout << "\n";
  } else {
    std::cout << "classification: " << to_string(report.classification) << "\n";
    if (report.classification != Classification::NotAState) {
      std::cout << "ppt: " << (report.ppt ? "yes" : "no") << "\n";
      if (report.prism_inequality)
        std::cout << "prism inequality: "
                  << (*report.prism_inequality ? "satisfied" : "violated")
                  << "\n";
      if (report.witness_value)
        std::cout << "witness expectation: " << *report.witness_value << "\n";
      std::cout << "reduction criterion: "
                << (report.reduction_ok ? "satisfied" : "violated") << "\n";
      std::cout << "cross norm: " << report.cross_norm << "\n";
      std::cout << "negativity trace norm: " << report.negativity_trace_norm
                << "\n";
    }
  }
  return report.classification == Classification::NotAState ? kExitNotAState
                                                            : kExitOk;
}

// ---- vertices ----

using AnyPolytope = std::variant<Polytope, PolytopeF>;

std::optional<AnyPolytope> build_polytope(const std::string& which, int n,
                                          const CliConfig& cfg,
                                          std::string& error) {
  bool exact = cfg.exact;
  if (!exact) {
    // defaults: exact wherever the field arithmetic is the intended mode
    if (which == "ppt" || which == "separable")
      exact = n <= 4;
    else
      exact = n <= 5;
  }
  try {
    if (exact) {
      if (which == "S") return AnyPolytope(geometry::simplex_S(n));
      if (which == "thetaS")
        return AnyPolytope(geometry::image_under_theta(geometry::simplex_S(n), n));
      if (which == "ppt") return AnyPolytope(geometry::ppt_polytope(n));
      if (which == "separable")
        return AnyPolytope(geometry::separable_polytope(n));
      if (which == "fixed") return AnyPolytope(geometry::fixed_point_set(n));
    } else {
      FloatOps ops{cfg.tolerance};
      (void)ops;
      if (which == "S") return AnyPolytope(geometry::simplex_S<FloatOps>(n));
      if (which == "thetaS")
        return AnyPolytope(geometry::image_under_theta<FloatOps>(
            geometry::simplex_S<FloatOps>(n), n));
      if (which == "ppt") return AnyPolytope(geometry::ppt_polytope<FloatOps>(n));
      if (which == "separable")
        return AnyPolytope(geometry::separable_polytope<FloatOps>(n));
      if (which == "fixed")
        return AnyPolytope(geometry::fixed_point_set<FloatOps>(n));
    }
    error = "unknown polytope selector: " + which;
  } catch (const std::exception& e) {
    error = e.what();
  }
  return std::nullopt;
}

int run_vertices(int n, const std::string& which, const CliConfig& cfg) {
  if (n < 2) {
    std::cerr << "vertices requires --n >= 2\n";
    return kExitUsage;
  }
  std::string error;
  auto polytope = build_polytope(which, n, cfg, error);
  if (!polytope) {
    std::cerr << error << "\n";
    return kExitUsage;
  }
  int status = kExitOk;
  std::visit(
      [&](const auto& p) {
        using P = std::decay_t<decltype(p)>;
        constexpr bool is_exact = std::is_same_v<P, Polytope>;
        if (cfg.format == "json") {
          json j = to_json(p);
          j["schema"] = kSchemaTag;
          j["which"] = which;
          j["n"] = n;
          std::cout << j.dump(2) << "\n";
        } else if (cfg.format == "csv") {
          std::cout << export_csv(p, cfg.exact);
        } else if (cfg.format == "off") {
          try {
            std::cout << export_off(p);
          } catch (const std::exception& e) {
            std::cerr << e.what() << "\n";
            status = kExitUsage;
          }
        } else {
          std::cout << std::setprecision(17);
          for (const auto& v : p.vertices()) {
            for (size_t c = 0; c < v.size(); ++c) {
              if (c) std::cout << " ";
              if constexpr (is_exact) {
                if (cfg.exact)
                  std::cout << v[c].to_string();
                else
                  std::cout << v[c].to_double();
              } else {
                std::cout << v[c] + 0.0;
              }
            }
            std::cout << "\n";
          }
        }
      },
      *polytope);
  return status;
}

// ---- sample-range ----

int run_sample_range(int n, int count, const CliConfig& cfg) {
  if (n < 2 || count < 1) {
    std::cerr << "sample-range requires --n >= 2 and --count >= 1\n";
    return kExitUsage;
  }
  std::mt19937_64 rng(cfg.seed);
  json points = json::array();
  std::cout << std::setprecision(17);
  for (int i = 0; i < count; ++i) {
    LocalState phi1 = sampling::haar_state(n, rng);
    LocalState phi2 = sampling::haar_state(n, rng);
    AlphaVector alpha = dense::alpha_functionals(
        phi1, phi2, dense::FunctionalForm::TensorForm);
    if (cfg.format == "json") {
      points.push_back(alpha.values());
    } else {
      const char* sep = cfg.format == "csv" ? "," : " ";
      for (int J = 0; J < n; ++J)
        std::cout << alpha[J] << (J + 1 < n ? sep : "\n");
    }
  }
  if (cfg.format == "json") {
    json j{{"schema", kSchemaTag}, {"n", n}, {"points", std::move(points)}};
    std::cout << j.dump(2) << "\n";
  }
  return kExitOk;
}

// ---- verify ----

std::optional<std::pair<int, int>> parse_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      int n = std::stoi(text);
      return std::make_pair(n, n);
    }
    int lo = std::stoi(text.substr(0, dots));
    int hi = std::stoi(text.substr(dots + 2));
    if (lo < 2 || hi < lo) return std::nullopt;
    return std::make_pair(lo, hi);
  } catch (...) {
    return std::nullopt;
  }
}

int run_verify(const std::string& range_text, const CliConfig& cfg) {
  auto range = parse_range(range_text);
  if (!range || range->first < 2) {
    std::cerr << "verify requires --n <lo>..<hi> with lo >= 2\n";
    return kExitUsage;
  }
  auto results =
      verify::run_all(range->first, range->second, cfg.seed, cfg.tolerance);
  int failures = 0;
  if (cfg.format == "json") {
    json checks = json::array();
    for (const auto& r : results) {
      checks.push_back(json{{"name", r.name},
                            {"n", r.n},
                            {"pass", r.pass},
                            {"detail", r.detail}});
      if (!r.pass) ++failures;
    }
    json j{{"schema", kSchemaTag},
           {"checks", std::move(checks)},
           {"failures", failures}};
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << "n=" << r.n << " "
                << r.name;
      if (!r.pass) {
        std::cout << " : " << r.detail;
        ++failures;
      }
      std::cout << "\n";
    }
    std::cout << (failures == 0 ? "all checks passed"
                                : std::to_string(failures) + " check(s) failed")
              << "\n";
  }
  return failures == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SO(3)-invariant bipartite N x N quantum states: Theta "
               "matrices, classification, polytope geometry"};
  app.require_subcommand(1);

  CliConfig cfg;
  cfg.format = default_format();

  int n = 0;
  std::string alpha_text, alpha_file, which = "ppt", range_text = "2..4";
  int count = 100;
  bool reduced = false;

  CLI::App* theta_cmd = app.add_subcommand("theta", "print the Theta matrix");
  theta_cmd->add_option("--n", n, "local dimension N")->required();
  add_common_options(theta_cmd, cfg, {"text", "json", "csv"});

  CLI::App* classify_cmd =
      app.add_subcommand("classify", "classify an invariant state");
  classify_cmd->add_option("--n", n, "local dimension N");
  classify_cmd->add_option("--alpha", alpha_text,
                           "comma-separated components (accepts exact "
                           "values such as 2/3 or 1/5*sqrt(5))");
  classify_cmd->add_option("--alpha-file", alpha_file,
                           "JSON file with {\"n\":..., \"alpha\":[...]}");
  classify_cmd->add_flag("--reduced", reduced,
                         "input has N-1 components; lift by unit trace");
  add_common_options(classify_cmd, cfg, {"text", "json", "csv"});

  CLI::App* vertices_cmd =
      app.add_subcommand("vertices", "vertices of a state-space polytope");
  vertices_cmd->add_option("--n", n, "local dimension N")->required();
  vertices_cmd
      ->add_option("--which", which, "S | thetaS | ppt | separable | fixed")
      ->check(CLI::IsMember({"S", "thetaS", "ppt", "separable", "fixed"}));
  add_common_options(vertices_cmd, cfg, {"text", "json", "csv", "off"});

  CLI::App* sample_cmd = app.add_subcommand(
      "sample-range", "sample the range W from Haar product pairs");
  sample_cmd->add_option("--n", n, "local dimension N")->required();
  sample_cmd->add_option("--count", count, "number of points")
      ->capture_default_str();
  add_common_options(sample_cmd, cfg, {"text", "json", "csv"});

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run the invariant verification suites");
  verify_cmd->add_option("--n", range_text, "dimension range, e.g. 2..6")
      ->capture_default_str();
  add_common_options(verify_cmd, cfg, {"text", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (theta_cmd->parsed()) return run_theta(n, cfg);
    if (classify_cmd->parsed())
      return run_classify(n, alpha_text, alpha_file, reduced, cfg);
    if (vertices_cmd->parsed()) return run_vertices(n, which, cfg);
    if (sample_cmd->parsed()) return run_sample_range(n, count, cfg);
    if (verify_cmd->parsed()) return run_verify(range_text, cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
