#include "tikhscale/model.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "tikhscale/errors.hpp"

#include <json.hpp>

namespace tikhscale {

namespace {

constexpr double kPaperC = 0.9;
constexpr double kPaperKappa = 1.8;
constexpr double kPaperRadius = 3.0;
constexpr double kPaperLinearCoeff = 7.0;

void require_finite(const Vec& x, const char* what) {
  for (double v : x) {
    if (!std::isfinite(v)) throw InvalidInput(std::string(what) + ": non-finite entry");
  }
}

double plain_norm(const Vec& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

}  // namespace

Vec forward(const TestProblem& problem, const Vec& u) {
  if (u.size() != problem.size()) throw InvalidInput("forward: length mismatch");
  require_finite(u, "forward");
  Vec f(u.size());
  const double lin = problem.linear_coeff;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double quad = problem.quadratic_term ? u[i] * u[i] : 0.0;
    f[i] = (lin * u[i] + quad) / problem.scale.diag()[i];
  }
  return f;
}

bool in_domain(const TestProblem& problem, const Vec& u) {
  if (u.size() != problem.size()) throw InvalidInput("in_domain: length mismatch");
  return plain_norm(u) <= problem.domain_radius;
}

std::pair<TestProblem, SourceSpec> make_paper_problem(std::size_t n) {
  if (n < 2) throw ConfigError("make_paper_problem requires N >= 2");

  TestProblem problem{natural_number_scale(n, 1.0), kPaperLinearCoeff, true, kPaperRadius,
                      Vec(n), Vec(n, 0.0), Vec()};
  SourceSpec source{kPaperC, kPaperKappa, Vec(n), 0.0};

  // u_1 = 1, u_n = 1 / (sqrt(n) (ln(0.9^{-1/4} n))^{2.31});
  // w_1 = (-ln c)^kappa, w_n = 4^kappa / (sqrt(n) (ln(c^{-1/4} n))^{0.51}).
  const double c_quarter = std::pow(kPaperC, -0.25);
  problem.u_true[0] = 1.0;
  source.w[0] = std::pow(-std::log(kPaperC), kPaperKappa);
  for (std::size_t i = 1; i < n; ++i) {
    const double nn = static_cast<double>(i + 1);
    const double lg = std::log(c_quarter * nn);
    problem.u_true[i] = 1.0 / (std::sqrt(nn) * std::pow(lg, 2.31));
    source.w[i] = std::pow(4.0, kPaperKappa) / (std::sqrt(nn) * std::pow(lg, 0.51));
  }
  source.rho = plain_norm(source.w);
  problem.f_true = forward(problem, problem.u_true);

  const IndexFunctionPhi phi{source.c, source.kappa};
  const Vec mapped = apply_phi_G(problem.scale, phi, source.w);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = problem.u_true[i] - problem.u_bar[i] - mapped[i];
    num += d * d;
    den += problem.u_true[i] * problem.u_true[i];
  }
  if (std::sqrt(num / den) > 1e-10)
    throw ConfigError("make_paper_problem: source-condition residual exceeds 1e-10");

  return {std::move(problem), std::move(source)};
}

SmoothingEstimate estimate_smoothing_constants(const TestProblem& problem, int num_samples,
                                               std::uint64_t seed) {
  if (num_samples < 1) throw InvalidInput("estimate_smoothing_constants: num_samples < 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  const double a = problem.scale.smoothing_order_a();
  SmoothingEstimate est{std::numeric_limits<double>::infinity(), 0.0};
  Vec u(problem.size());
  for (int s = 0; s < num_samples; ++s) {
    double norm2 = 0.0;
    for (double& v : u) {
      v = gauss(rng);
      norm2 += v * v;
    }
    const double scale_to = problem.domain_radius * unif(rng) / std::sqrt(norm2);
    for (double& v : u) v *= scale_to;

    const Vec fu = forward(problem, u);
    double mis = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
      const double d = fu[i] - problem.f_true[i];
      mis += d * d;
    }
    Vec diff(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) diff[i] = u[i] - problem.u_true[i];
    const double weak = norm_tau(problem.scale, diff, -a);
    if (weak == 0.0) continue;  // sample coincides with u_true
    const double ratio = std::sqrt(mis) / weak;
    est.lo = std::min(est.lo, ratio);
    est.hi = std::max(est.hi, ratio);
  }
  return est;
}

std::string problem_to_json(const TestProblem& problem, const SourceSpec& source) {
  nlohmann::json j;
  j["N"] = problem.size();
  j["c"] = source.c;
  j["kappa"] = source.kappa;
  j["a"] = problem.scale.smoothing_order_a();
  j["radius"] = problem.domain_radius;
  j["linear_coeff"] = problem.linear_coeff;
  j["quadratic_term"] = problem.quadratic_term;
  j["diag"] = "natural";
  j["u_true"] = problem.u_true;
  j["u_bar"] = problem.u_bar;
  j["w"] = source.w;
  return j.dump(2) + "\n";
}

std::pair<TestProblem, SourceSpec> problem_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  if (j.at("diag").get<std::string>() != "natural")
    throw ConfigError("problem_from_json: unsupported diag generator");
  const auto n = j.at("N").get<std::size_t>();

  TestProblem problem{natural_number_scale(n, j.at("a").get<double>()),
                      j.at("linear_coeff").get<double>(),
                      j.at("quadratic_term").get<bool>(),
                      j.at("radius").get<double>(),
                      j.at("u_true").get<Vec>(),
                      j.at("u_bar").get<Vec>(),
                      Vec()};
  SourceSpec source{j.at("c").get<double>(), j.at("kappa").get<double>(), j.at("w").get<Vec>(), 0.0};
  if (problem.u_true.size() != n || problem.u_bar.size() != n || source.w.size() != n)
    throw ConfigError("problem_from_json: vector length mismatch");
  source.rho = plain_norm(source.w);
  // Exact data is never persisted; recompute so a stale file cannot drift.
  problem.f_true = forward(problem, problem.u_true);
  return {std::move(problem), std::move(source)};
}

}  // namespace tikhscale
