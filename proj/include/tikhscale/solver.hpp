#pragma once

#include "tikhscale/model.hpp"

namespace tikhscale {

// Minimizer of T_alpha(u) = ||F u - f_delta||^2 + alpha ||u - u_bar||_1^2
// together with the quantities the parameter search consumes.
struct RegularizedSolution {
  Vec u;
  double alpha = 0.0;      // +infinity marks the "keep the initial guess" case
  double residual = 0.0;   // ||F u - f_delta||
  double penalty = 0.0;    // ||u - u_bar||_1
  double objective = 0.0;  // residual^2 + alpha * penalty^2
};

// Real roots of a3 x^3 + a2 x^2 + a1 x + a0, ascending; returns the count.
// a3 must be nonzero.
int solve_cubic_real(double a3, double a2, double a1, double a0, double roots[3]);

// Global minimizer over R of the coordinate objective
//   q_i(t) = ((L t + t^2)/b_i - f_i)^2 + (alpha b_i^2 + mu) t^2,
// the i-th coordinate of the Tikhonov functional plus a ball multiplier term.
// Ties between equal-objective critical points break toward the smallest t.
double coordinate_minimize(const TestProblem& problem, std::size_t i, double f_i, double alpha,
                           double mu = 0.0);

// Coordinate-separable exact minimization; if the assembled vector leaves the
// domain ball, re-solves with the multiplier mu chosen so that ||u(mu)|| = R.
RegularizedSolution minimize_tikhonov(const TestProblem& problem, const Vec& f_delta,
                                      double alpha);

double residual_norm(const TestProblem& problem, const Vec& u, const Vec& f_delta);

}  // namespace tikhscale
