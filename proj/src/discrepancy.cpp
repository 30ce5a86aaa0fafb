#include "tikhscale/discrepancy.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

#include "tikhscale/errors.hpp"
#include "tikhscale/format.hpp"

namespace tikhscale {

void DiscrepancyConfig::validate() const {
  if (!(k > 1.0)) throw ConfigError("discrepancy factor k must exceed 1");
  if (!(theta > 1.0)) throw ConfigError("grid ratio theta must exceed 1");
  if (!(alpha0 > 0.0)) throw ConfigError("alpha0 must be positive");
  if (max_steps < 1) throw ConfigError("max_steps must be at least 1");
}

namespace {

[[noreturn]] void throw_with_trace(const char* what, const std::vector<TracePoint>& trace) {
  std::ostringstream msg;
  msg << what << "; trace:";
  for (const TracePoint& p : trace)
    msg << " (" << format_full(p.alpha) << ", " << format_full(p.residual) << ")";
  throw SearchFailure(msg.str());
}

}  // namespace

SelectionResult select_alpha(const TestProblem& problem, const Vec& f_delta, double delta,
                             const DiscrepancyConfig& config) {
  config.validate();
  if (!(delta > 0.0)) throw InvalidInput("select_alpha: delta must be positive");
  const double threshold = config.k * delta;

  SelectionResult result;

  // Initial-guess case: the data is already matched to within k*delta.
  const double bar_residual = residual_norm(problem, problem.u_bar, f_delta);
  if (bar_residual <= threshold) {
    result.alpha_star = std::numeric_limits<double>::infinity();
    result.solution.u = problem.u_bar;
    result.solution.alpha = result.alpha_star;
    result.solution.residual = bar_residual;
    result.solution.penalty = 0.0;
    result.solution.objective = bar_residual * bar_residual;
    return result;
  }

  auto evaluate = [&](double alpha) {
    RegularizedSolution sol = minimize_tikhonov(problem, f_delta, alpha);
    result.trace.push_back({alpha, sol.residual});
    return sol;
  };

  RegularizedSolution current = evaluate(config.alpha0);
  if (current.residual >= threshold) {
    // Walk down. Stop at the first grid point whose residual drops to k*delta
    // or below and report the preceding one, so the last two evaluations
    // bracket the threshold.
    RegularizedSolution previous = std::move(current);
    for (int i = 1; i <= config.max_steps; ++i) {
      const double alpha = config.alpha0 * std::pow(config.theta, -i);
      current = evaluate(alpha);
      if (current.residual <= threshold) {
        result.alpha_star = previous.alpha;
        result.solution = std::move(previous);
        return result;
      }
      previous = std::move(current);
    }
    throw_with_trace("select_alpha: residual never reached k*delta walking down", result.trace);
  }

  // Walk up; keep the last grid point whose residual is still within k*delta.
  RegularizedSolution previous = std::move(current);
  for (int i = 1; i <= config.max_steps; ++i) {
    const double alpha = config.alpha0 * std::pow(config.theta, i);
    current = evaluate(alpha);
    if (current.residual >= threshold) {
      result.alpha_star = previous.alpha;
      result.solution = std::move(previous);
      return result;
    }
    previous = std::move(current);
  }
  throw_with_trace("select_alpha: residual never reached k*delta walking up", result.trace);
}

bool check_bracket(const std::vector<TracePoint>& trace, double k, double delta, double theta) {
  if (trace.size() < 2) throw InvalidInput("check_bracket: trace too short");
  // The walk must be geometric with ratio theta, consistently up or down.
  const bool down = trace[1].alpha < trace[0].alpha;
  for (std::size_t i = 1; i < trace.size(); ++i) {
    const double ratio = down ? trace[i - 1].alpha / trace[i].alpha
                              : trace[i].alpha / trace[i - 1].alpha;
    if (std::abs(ratio - theta) > 1e-9 * theta)
      throw InvalidInput("check_bracket: trace is not a monotone geometric walk");
  }
  const double threshold = k * delta;
  for (std::size_t i = 1; i < trace.size(); ++i) {
    const TracePoint& hi = down ? trace[i - 1] : trace[i];
    const TracePoint& lo = down ? trace[i] : trace[i - 1];
    if (lo.residual <= threshold && threshold <= hi.residual) return true;
  }
  return false;
}

void write_trace_csv(std::ostream& out, const std::vector<TracePoint>& trace, double k,
                     double delta) {
  out << "step,alpha,residual,k_delta\n";
  for (std::size_t i = 0; i < trace.size(); ++i) {
    out << i << ',' << format_full(trace[i].alpha) << ',' << format_full(trace[i].residual)
        << ',' << format_full(k * delta) << '\n';
  }
}

}  // namespace tikhscale
