#include "tikhscale/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tikhscale/errors.hpp"

namespace tikhscale {

namespace {

constexpr double kBallTol = 1e-10;

void require_finite(const Vec& x, const char* what) {
  for (double v : x) {
    if (!std::isfinite(v)) throw InvalidInput(std::string(what) + ": non-finite entry");
  }
}

double cubic_value(double p, double q, double r, double t) {
  return ((t + p) * t + q) * t + r;
}

// Coordinate objective q_i(t); s = alpha b^2 + mu is the weight on t^2.
double coord_objective(double lin, bool quad, double b, double f, double s, double t) {
  const double quad_term = quad ? t * t : 0.0;
  const double mis = (lin * t + quad_term) / b - f;
  return mis * mis + s * t * t;
}

}  // namespace

int solve_cubic_real(double a3, double a2, double a1, double a0, double roots[3]) {
  if (a3 == 0.0) throw InvalidInput("solve_cubic_real: leading coefficient is zero");
  const double p = a2 / a3;
  const double q = a1 / a3;
  const double r = a0 / a3;

  // Depressed form y^3 + P y + Q with t = y - p/3.
  const double P = q - p * p / 3.0;
  const double Q = 2.0 * p * p * p / 27.0 - p * q / 3.0 + r;
  const double disc = 0.25 * Q * Q + P * P * P / 27.0;

  int count = 0;
  if (disc > 0.0) {
    const double sq = std::sqrt(disc);
    double y;
    if (Q == 0.0) {
      const double u = std::cbrt(sq);
      y = u - P / (3.0 * u);
    } else {
      // Pick the branch without cancellation; the other factor follows from
      // cbrt(S1) * cbrt(S2) = -P/3.
      const double big = -0.5 * Q - std::copysign(sq, Q);
      const double u = std::cbrt(big);
      y = u - P / (3.0 * u);
    }
    roots[count++] = y - p / 3.0;
  } else if (P == 0.0) {
    roots[count++] = std::cbrt(-Q) - p / 3.0;
  } else {
    const double m = 2.0 * std::sqrt(-P / 3.0);
    const double arg = std::clamp(3.0 * Q / (P * m), -1.0, 1.0);
    const double theta = std::acos(arg);
    for (int k = 0; k < 3; ++k) {
      roots[count++] = m * std::cos((theta - 2.0 * M_PI * k) / 3.0) - p / 3.0;
    }
  }

  // A couple of Newton steps against the normalized cubic clean up the
  // closed-form rounding.
  for (int i = 0; i < count; ++i) {
    double t = roots[i];
    for (int it = 0; it < 3; ++it) {
      const double h = cubic_value(p, q, r, t);
      const double hp = (3.0 * t + 2.0 * p) * t + q;
      if (hp == 0.0) break;
      const double step = h / hp;
      if (!std::isfinite(step)) break;
      t -= step;
    }
    if (std::isfinite(t)) roots[i] = t;
  }
  std::sort(roots, roots + count);
  return count;
}

double coordinate_minimize(const TestProblem& problem, std::size_t i, double f_i, double alpha,
                           double mu) {
  if (i >= problem.size()) throw InvalidInput("coordinate_minimize: index out of range");
  if (!(alpha > 0.0)) throw InvalidInput("coordinate_minimize: alpha must be positive");
  const double b = problem.scale.diag()[i];
  const double lin = problem.linear_coeff;
  const double s = alpha * b * b + mu;
  const double g = b * f_i;

  if (!problem.quadratic_term) {
    return lin * g / (lin * lin + s * b * b);
  }

  // Stationarity of q_i(t) scaled by b^2:
  //   (L + 2t)(L t + t^2 - g) + s b^2 t = 0.
  double roots[3];
  const int count =
      solve_cubic_real(2.0, 3.0 * lin, lin * lin - 2.0 * g + s * b * b, -lin * g, roots);

  double best_t = std::numeric_limits<double>::quiet_NaN();
  double best_val = std::numeric_limits<double>::infinity();
  for (int k = 0; k < count; ++k) {
    if (!std::isfinite(roots[k])) continue;
    const double val = coord_objective(lin, true, b, f_i, s, roots[k]);
    if (val < best_val) {  // roots ascend, so ties keep the smallest t
      best_val = val;
      best_t = roots[k];
    }
  }
  if (std::isfinite(best_t)) return best_t;

  // Closed form failed entirely; fall back to bisection on derivative sign
  // changes over [-R-1, R+1].
  const double lo = -problem.domain_radius - 1.0, hi = problem.domain_radius + 1.0;
  const auto deriv = [&](double t) {
    return (lin + 2.0 * t) * (lin * t + t * t - g) + s * b * b * t;
  };
  constexpr int kCells = 1024;
  double prev_t = lo, prev_d = deriv(lo);
  for (int cell = 1; cell <= kCells; ++cell) {
    const double t = lo + (hi - lo) * cell / kCells;
    const double d = deriv(t);
    if (prev_d == 0.0 || (prev_d < 0.0) != (d < 0.0)) {
      double a = prev_t, c = t;
      for (int it = 0; it < 120; ++it) {
        const double m = 0.5 * (a + c);
        if ((deriv(a) < 0.0) != (deriv(m) < 0.0)) c = m; else a = m;
      }
      const double root = 0.5 * (a + c);
      const double val = coord_objective(lin, true, b, f_i, s, root);
      if (val < best_val) {
        best_val = val;
        best_t = root;
      }
    }
    prev_t = t;
    prev_d = d;
  }
  if (!std::isfinite(best_t)) throw SearchFailure("coordinate_minimize: no stationary point found");
  return best_t;
}

namespace {

Vec solve_all_coordinates(const TestProblem& problem, const Vec& f_delta, double alpha,
                          double mu) {
  Vec u(problem.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    u[i] = coordinate_minimize(problem, i, f_delta[i], alpha, mu);
  }
  return u;
}

double plain_norm(const Vec& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

}  // namespace

RegularizedSolution minimize_tikhonov(const TestProblem& problem, const Vec& f_delta,
                                      double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw InvalidInput("minimize_tikhonov: alpha must be positive and finite");
  if (f_delta.size() != problem.size()) throw InvalidInput("minimize_tikhonov: length mismatch");
  require_finite(f_delta, "minimize_tikhonov");

  Vec u = solve_all_coordinates(problem, f_delta, alpha, 0.0);
  const double radius = problem.domain_radius;

  if (plain_norm(u) > radius) {
    // KKT multiplier for the active ball constraint: ||u(mu)|| decreases in mu,
    // bisect until it lands on the sphere.
    double lo = 0.0, hi = 1.0;
    Vec u_hi = solve_all_coordinates(problem, f_delta, alpha, hi);
    int expand = 0;
    while (plain_norm(u_hi) > radius) {
      if (++expand > 200) throw SearchFailure("minimize_tikhonov: ball multiplier bracket failed");
      lo = hi;
      hi *= 8.0;
      u_hi = solve_all_coordinates(problem, f_delta, alpha, hi);
    }
    bool converged = false;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      Vec u_mid = solve_all_coordinates(problem, f_delta, alpha, mid);
      const double norm_mid = plain_norm(u_mid);
      if (norm_mid > radius) {
        lo = mid;
      } else {
        hi = mid;
        u_hi = std::move(u_mid);
      }
      if (std::abs(norm_mid - radius) <= kBallTol) {
        u = (norm_mid <= radius) ? std::move(u_mid) : std::move(u_hi);
        converged = true;
        break;
      }
    }
    if (!converged) {
      // The feasible endpoint is still a valid KKT candidate only if it sits
      // on the sphere; otherwise the norm jumped across R and we report it.
      if (std::abs(plain_norm(u_hi) - radius) > kBallTol)
        throw SearchFailure("minimize_tikhonov: ball multiplier bisection did not converge");
      u = std::move(u_hi);
    }
  }

  RegularizedSolution sol;
  sol.residual = residual_norm(problem, u, f_delta);
  Vec diff(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) diff[i] = u[i] - problem.u_bar[i];
  sol.penalty = norm_tau(problem.scale, diff, 1.0);
  sol.alpha = alpha;
  sol.objective = sol.residual * sol.residual + alpha * sol.penalty * sol.penalty;
  sol.u = std::move(u);
  return sol;
}

double residual_norm(const TestProblem& problem, const Vec& u, const Vec& f_delta) {
  if (f_delta.size() != problem.size()) throw InvalidInput("residual_norm: length mismatch");
  const Vec fu = forward(problem, u);
  double s = 0.0;
  for (std::size_t i = 0; i < fu.size(); ++i) {
    const double d = fu[i] - f_delta[i];
    s += d * d;
  }
  return std::sqrt(s);
}

}  // namespace tikhscale
