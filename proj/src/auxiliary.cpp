#include "tikhscale/auxiliary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tikhscale/errors.hpp"
#include "tikhscale/experiment.hpp"

namespace tikhscale {

AuxiliaryElement auxiliary_element(const DiagonalHilbertScale& scale, const Vec& u_true,
                                   const Vec& u_bar, double alpha) {
  if (!(alpha > 0.0)) throw InvalidInput("auxiliary_element: alpha must be positive");
  if (u_true.size() != scale.size() || u_bar.size() != scale.size())
    throw InvalidInput("auxiliary_element: length mismatch");
  AuxiliaryElement el{Vec(scale.size()), alpha};
  for (std::size_t i = 0; i < scale.size(); ++i) {
    const double g = scale.g_entry(i);
    el.u_hat[i] = u_bar[i] + g / (g + alpha) * (u_true[i] - u_bar[i]);
  }
  return el;
}

RatioCurves bounded_approximation_ratios(const DiagonalHilbertScale& scale,
                                         const IndexFunctionPhi& phi, const Vec& u_true,
                                         const Vec& u_bar, const Vec& alpha_grid) {
  RatioCurves curves;
  curves.abscissa = alpha_grid;
  const double a = scale.smoothing_order_a();
  const double r = scale.r();
  Vec diff_true(scale.size()), diff_bar(scale.size());
  for (double alpha : alpha_grid) {
    const AuxiliaryElement el = auxiliary_element(scale, u_true, u_bar, alpha);
    for (std::size_t i = 0; i < scale.size(); ++i) {
      diff_true[i] = el.u_hat[i] - u_true[i];
      diff_bar[i] = el.u_hat[i] - u_bar[i];
    }
    const double p = phi(alpha);
    curves.r1.push_back(norm_tau(scale, diff_true, 0.0) / p);
    curves.r2.push_back(norm_tau(scale, diff_true, -a) / (std::pow(alpha, 1.0 / r) * p));
    curves.r3.push_back(norm_tau(scale, diff_bar, 1.0) / (std::pow(alpha, -1.0 / (r * a)) * p));
  }
  curves.sup1 = *std::max_element(curves.r1.begin(), curves.r1.end());
  curves.sup2 = *std::max_element(curves.r2.begin(), curves.r2.end());
  curves.sup3 = *std::max_element(curves.r3.begin(), curves.r3.end());
  return curves;
}

double a_priori_beta(const IndexFunctionPhi& phi, double delta, double r) {
  if (!(delta > 0.0) || !(phi.c * delta < 1.0))
    throw InvalidInput("a_priori_beta requires 0 < c*delta < 1");
  return std::pow(delta, r) * std::pow(-std::log(phi.c * delta), phi.kappa * r);
}

RatioCurves a_priori_limit_ratios(const IndexFunctionPhi& phi, double smoothing_order_a,
                                  double r, const Vec& delta_grid) {
  RatioCurves curves;
  curves.abscissa = delta_grid;
  const double a = smoothing_order_a;
  for (double delta : delta_grid) {
    const double beta = a_priori_beta(phi, delta, r);
    const double pb = phi(beta);
    const double pd = phi(delta);
    curves.r1.push_back(pb / pd);
    curves.r2.push_back(std::pow(beta, 1.0 / r) * pb / delta);
    curves.r3.push_back(std::pow(beta, -1.0 / (r * a)) * pb /
                        (std::pow(delta, -1.0 / a) * std::pow(pd, r / 2.0)));
  }
  curves.sup1 = *std::max_element(curves.r1.begin(), curves.r1.end());
  curves.sup2 = *std::max_element(curves.r2.begin(), curves.r2.end());
  curves.sup3 = *std::max_element(curves.r3.begin(), curves.r3.end());
  return curves;
}

double chi(double c, double b, double d, double t, double g_norm) {
  if (!(b > 0.0) || !(d > 0.0)) throw InvalidInput("chi requires b, d > 0");
  if (!(t > 0.0) || t > g_norm) throw InvalidInput("chi argument outside (0, ||G||]");
  return std::pow(t, 1.0 / b) * std::pow(-std::log(c * t), -d);
}

double chi_inverse(double c, double b, double d, double t, double g_norm) {
  if (!(t > 0.0) || t > chi(c, b, d, g_norm, g_norm))
    throw InvalidInput("chi_inverse argument outside the range of chi");
  // chi is strictly increasing, so bisect on ln(lambda). The lower endpoint is
  // pushed until chi drops below t (chi -> 0 as lambda -> 0).
  double lo = std::log(std::numeric_limits<double>::min()) / 2.0;
  double hi = std::log(g_norm);
  while (chi(c, b, d, std::exp(lo), g_norm) > t) {
    lo *= 2.0;
    if (std::exp(lo) == 0.0) throw SearchFailure("chi_inverse: argument below representable range");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (chi(c, b, d, std::exp(mid), g_norm) < t) lo = mid; else hi = mid;
  }
  return std::exp(0.5 * (lo + hi));
}

double chi_lower_bound_check(double c, double b, double d, const Vec& t_grid, double g_norm) {
  if (t_grid.empty()) throw InvalidInput("chi_lower_bound_check: empty grid");
  double c5 = std::numeric_limits<double>::infinity();
  for (double t : t_grid) {
    const double inv = chi_inverse(c, b, d, t, g_norm);
    c5 = std::min(c5, inv / (std::pow(t, b) * std::pow(-std::log(c * t), b * d)));
  }
  return c5;
}

double selected_alpha_lower_bound_check(const std::vector<SweepRow>& rows,
                                        const IndexFunctionPhi& phi, double r) {
  double worst = std::numeric_limits<double>::infinity();
  bool any = false;
  for (const SweepRow& row : rows) {
    if (row.failed || std::isinf(row.alpha_star)) continue;
    any = true;
    worst = std::min(worst, row.alpha_star / a_priori_beta(phi, row.delta, r));
  }
  if (!any) throw InvalidInput("selected_alpha_lower_bound_check: no finite-alpha rows");
  return worst;
}

Vec penalty_growth_check(const std::vector<SweepRow>& rows, const IndexFunctionPhi& phi,
                         double smoothing_order_a, double r) {
  Vec ratios;
  ratios.reserve(rows.size());
  for (const SweepRow& row : rows) {
    const double envelope =
        std::pow(row.delta, -1.0 / smoothing_order_a) * std::pow(phi(row.delta), r / 2.0);
    ratios.push_back(row.failed ? std::numeric_limits<double>::quiet_NaN()
                                : row.penalty_norm / envelope);
  }
  return ratios;
}

}  // namespace tikhscale
