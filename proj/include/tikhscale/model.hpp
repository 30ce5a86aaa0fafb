#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "tikhscale/hilbert_scale.hpp"

namespace tikhscale {

// Forward operator F(u)_n = (L u_n + u_n^2) / b_n on the ball ||u|| <= R,
// together with the exact solution and exact data of the shipped instance.
struct TestProblem {
  DiagonalHilbertScale scale;
  double linear_coeff = 7.0;
  bool quadratic_term = true;
  double domain_radius = 3.0;
  Vec u_true;
  Vec u_bar;
  Vec f_true;

  std::size_t size() const { return scale.size(); }
};

// Constants and source element of the logarithmic source condition
// u_true - u_bar = phi(G) w with ||w|| <= rho.
struct SourceSpec {
  double c;
  double kappa;
  Vec w;
  double rho;
};

// Pure formula evaluation; membership in the domain ball is not enforced here.
Vec forward(const TestProblem& problem, const Vec& u);

bool in_domain(const TestProblem& problem, const Vec& u);

// Builds the shipped instance on R^N: b_n = n, a = 1, R = 3, u_bar = 0,
// c = 0.9, kappa = 1.8. Validates the source-condition identity on construction.
std::pair<TestProblem, SourceSpec> make_paper_problem(std::size_t n);

struct SmoothingEstimate {
  double lo;  // min sampled ||Fu - f_true|| / ||u - u_true||_{-a}
  double hi;  // max sampled ratio
};

// Samples u uniformly in direction and radius over the domain ball and returns
// the extreme ratios of the two-sided smoothing property.
SmoothingEstimate estimate_smoothing_constants(const TestProblem& problem, int num_samples,
                                               std::uint64_t seed);

std::string problem_to_json(const TestProblem& problem, const SourceSpec& source);
std::pair<TestProblem, SourceSpec> problem_from_json(const std::string& text);

}  // namespace tikhscale
