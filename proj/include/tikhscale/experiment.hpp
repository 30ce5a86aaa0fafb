#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "tikhscale/discrepancy.hpp"

namespace tikhscale {

// Componentwise uniform noise with |Delta_n| <= delta / sqrt(N), which keeps
// ||f_delta - f_true|| <= delta by construction.
struct NoiseSpec {
  double delta;
  std::uint64_t seed;
};

Vec perturb(const Vec& f_true, const NoiseSpec& spec);

// phi evaluated at the noise level.
double phi_of_delta(const IndexFunctionPhi& phi, double delta);

struct SweepRow {
  double delta = 0.0;
  double alpha_star = 0.0;  // +infinity serialized as "inf"
  double error = 0.0;       // ||u - u_true||
  double phi_delta = 0.0;
  double ratio = 0.0;       // error / phi_delta
  double penalty_norm = 0.0;
  std::uint64_t seed = 0;
  bool failed = false;
  std::string message;
};

// One row per delta: perturb with seed + row index, select alpha, record the
// error against u_true. A failed row is marked and the sweep continues.
std::vector<SweepRow> run_sweep(const TestProblem& problem, const IndexFunctionPhi& phi,
                                const std::vector<double>& deltas,
                                const DiscrepancyConfig& config, std::uint64_t seed);

// Independent reference minimizer: per-coordinate dense grid search over
// [-R-0.5, R+0.5] with two x100 refinement passes. Validation only; N <= 32.
RegularizedSolution oracle_minimize(const TestProblem& problem, const Vec& f_delta, double alpha,
                                    int grid_points);

// CSV columns: delta,alpha_star,error,phi_delta,ratio,penalty_norm,seed
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);
std::string sweep_to_json(const std::vector<SweepRow>& rows);

// Table 1 noise levels, 1e-3 halving down to 1.953e-6 as printed.
const std::vector<double>& paper_delta_grid();

}  // namespace tikhscale
