#pragma once

#include <iosfwd>

#include "tikhscale/solver.hpp"

namespace tikhscale {

struct DiscrepancyConfig {
  double k = 3.0;       // discrepancy factor, > 1
  double theta = 10.0;  // geometric grid ratio, > 1
  double alpha0 = 0.9;  // initial grid point
  int max_steps = 60;

  void validate() const;
};

struct TracePoint {
  double alpha;
  double residual;
};

struct SelectionResult {
  // Selected parameter. +infinity when the initial guess already fits the data
  // to within k*delta. For a downward walk this is the last grid point whose
  // residual still exceeds k*delta; the grid point one step below it (the
  // final trace entry) closes the bracket residual <= k*delta <= residual(alpha_star).
  double alpha_star;
  RegularizedSolution solution;  // solution at alpha_star
  std::vector<TracePoint> trace;
};

// Sequential discrepancy principle on the geometric grid alpha0 * theta^{+-i}.
SelectionResult select_alpha(const TestProblem& problem, const Vec& f_delta, double delta,
                             const DiscrepancyConfig& config);

// Verifies from the trace that it is a monotone geometric walk containing a
// bracket pair (alpha_lo, theta * alpha_lo) with
// residual(alpha_lo) <= k*delta <= residual(theta * alpha_lo).
bool check_bracket(const std::vector<TracePoint>& trace, double k, double delta, double theta);

// CSV columns: step, alpha, residual, k_delta
void write_trace_csv(std::ostream& out, const std::vector<TracePoint>& trace, double k,
                     double delta);

}  // namespace tikhscale
