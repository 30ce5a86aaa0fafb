#include "tikhscale/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <random>

#include <json.hpp>

#include "tikhscale/errors.hpp"
#include "tikhscale/format.hpp"

namespace tikhscale {

namespace {

// Deterministic mapping of raw engine output to [0, 1); avoids relying on the
// implementation-defined rounding of std::uniform_real_distribution.
double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Vec perturb(const Vec& f_true, const NoiseSpec& spec) {
  if (!(spec.delta > 0.0)) throw InvalidInput("perturb: delta must be positive");
  if (f_true.empty()) throw InvalidInput("perturb: empty data vector");
  const double bound = spec.delta / std::sqrt(static_cast<double>(f_true.size()));
  std::mt19937_64 rng(spec.seed);
  Vec f_delta(f_true.size());
  for (std::size_t i = 0; i < f_true.size(); ++i)
    f_delta[i] = f_true[i] + bound * (2.0 * unit_uniform(rng) - 1.0);
  return f_delta;
}

double phi_of_delta(const IndexFunctionPhi& phi, double delta) {
  if (!(delta > 0.0)) throw InvalidInput("phi_of_delta: delta must be positive");
  if (!(phi.c * delta < 1.0))
    throw InvalidInput("phi_of_delta: c * delta must be below 1");
  return phi(delta);
}

std::vector<SweepRow> run_sweep(const TestProblem& problem, const IndexFunctionPhi& phi,
                                const std::vector<double>& deltas,
                                const DiscrepancyConfig& config, std::uint64_t seed) {
  config.validate();
  std::vector<SweepRow> rows;
  rows.reserve(deltas.size());
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    SweepRow row;
    row.delta = deltas[i];
    row.seed = seed + i;
    try {
      row.phi_delta = phi_of_delta(phi, row.delta);
      const Vec f_delta = perturb(problem.f_true, {row.delta, row.seed});
      SelectionResult sel = select_alpha(problem, f_delta, row.delta, config);
      row.alpha_star = sel.alpha_star;
      Vec diff(problem.size());
      for (std::size_t n = 0; n < diff.size(); ++n)
        diff[n] = sel.solution.u[n] - problem.u_true[n];
      row.error = norm_tau(problem.scale, diff, 0.0);
      row.ratio = row.error / row.phi_delta;
      row.penalty_norm = sel.solution.penalty;
    } catch (const std::exception& e) {
      row.failed = true;
      row.message = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

RegularizedSolution oracle_minimize(const TestProblem& problem, const Vec& f_delta, double alpha,
                                    int grid_points) {
  if (problem.size() > 32)
    throw InvalidInput("oracle_minimize: reference search limited to N <= 32");
  if (grid_points < 1000) throw InvalidInput("oracle_minimize: need at least 1000 grid points");
  if (f_delta.size() != problem.size())
    throw InvalidInput("oracle_minimize: data length mismatch");
  if (!(alpha > 0.0)) throw InvalidInput("oracle_minimize: alpha must be positive");

  const double radius = problem.domain_radius;
  RegularizedSolution sol;
  sol.alpha = alpha;
  sol.u.resize(problem.size());

  // Separable objective: scan each coordinate on a dense grid, then refine
  // twice around the best cell. The ball constraint is checked afterwards.
  for (std::size_t i = 0; i < problem.size(); ++i) {
    const double b = problem.scale.diag()[i];
    const double lin = problem.linear_coeff;
    const double ubar = problem.u_bar[i];
    auto coord_objective = [&](double t) {
      const double ft = problem.quadratic_term ? (lin * t + t * t) / b : lin * t / b;
      const double r = ft - f_delta[i];
      const double p = b * (t - ubar);
      return r * r + alpha * p * p;
    };
    double lo = -radius - 0.5, hi = radius + 0.5;
    double best_t = lo, best_v = std::numeric_limits<double>::infinity();
    for (int pass = 0; pass < 3; ++pass) {
      const double step = (hi - lo) / grid_points;
      best_v = std::numeric_limits<double>::infinity();
      for (int j = 0; j <= grid_points; ++j) {
        const double t = lo + step * j;
        const double v = coord_objective(t);
        if (v < best_v) {
          best_v = v;
          best_t = t;
        }
      }
      const double new_lo = best_t - step;
      const double new_hi = best_t + step;
      lo = new_lo;
      hi = new_hi;
    }
    sol.u[i] = best_t;
  }

  const double norm = norm_tau(problem.scale, sol.u, 0.0);
  if (norm > radius) {
    // Rare for the reference cases; fall back to the production minimizer,
    // which handles the active ball constraint exactly.
    return minimize_tikhonov(problem, f_delta, alpha);
  }
  sol.residual = residual_norm(problem, sol.u, f_delta);
  Vec shifted(problem.size());
  for (std::size_t i = 0; i < problem.size(); ++i) shifted[i] = sol.u[i] - problem.u_bar[i];
  sol.penalty = norm_tau(problem.scale, shifted, 1.0);
  sol.objective = sol.residual * sol.residual + alpha * sol.penalty * sol.penalty;
  return sol;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "delta,alpha_star,error,phi_delta,ratio,penalty_norm,seed\n";
  for (const SweepRow& r : rows) {
    out << format_full(r.delta) << ',' << format_full(r.alpha_star) << ','
        << format_full(r.error) << ',' << format_full(r.phi_delta) << ','
        << format_full(r.ratio) << ',' << format_full(r.penalty_norm) << ',' << r.seed << '\n';
  }
}

std::string sweep_to_json(const std::vector<SweepRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const SweepRow& r : rows) {
    nlohmann::json j;
    j["delta"] = r.delta;
    j["alpha_star"] = std::isinf(r.alpha_star) ? nlohmann::json("inf")
                                               : nlohmann::json(r.alpha_star);
    j["error"] = r.error;
    j["phi_delta"] = r.phi_delta;
    j["ratio"] = r.ratio;
    j["penalty_norm"] = r.penalty_norm;
    j["seed"] = r.seed;
    j["failed"] = r.failed;
    if (r.failed) j["message"] = r.message;
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

const std::vector<double>& paper_delta_grid() {
  static const std::vector<double> grid = {1e-3,      5e-4,      2.5e-4,     1.25e-4,
                                           6.25e-5,   3.125e-5,  1.5625e-5,  7.8125e-6,
                                           3.90625e-6, 1.953125e-6};
  return grid;
}

}  // namespace tikhscale
