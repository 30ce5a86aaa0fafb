#pragma once

#include "tikhscale/hilbert_scale.hpp"

namespace tikhscale {

struct SweepRow;  // experiment.hpp

// Minimizer of the artificial functional ||u - u_true||_{-a}^2 + alpha ||u - u_bar||_1^2,
// available in closed form for a diagonal generator.
struct AuxiliaryElement {
  Vec u_hat;
  double alpha;
};

AuxiliaryElement auxiliary_element(const DiagonalHilbertScale& scale, const Vec& u_true,
                                   const Vec& u_bar, double alpha);

// One diagnostic curve: ratios sampled along an abscissa grid.
struct RatioCurves {
  Vec abscissa;
  Vec r1, r2, r3;
  double sup1 = 0.0, sup2 = 0.0, sup3 = 0.0;
};

// r1 = ||u_hat - u_true|| / phi(alpha),
// r2 = ||u_hat - u_true||_{-a} / (alpha^{1/r} phi(alpha)),
// r3 = ||u_hat - u_bar||_1 / (alpha^{-1/(r a)} phi(alpha)).
RatioCurves bounded_approximation_ratios(const DiagonalHilbertScale& scale,
                                         const IndexFunctionPhi& phi, const Vec& u_true,
                                         const Vec& u_bar, const Vec& alpha_grid);

// beta(delta) = delta^r (-ln(c delta))^{kappa r}
double a_priori_beta(const IndexFunctionPhi& phi, double delta, double r);

// r1 = phi(beta)/phi(delta), r2 = beta^{1/r} phi(beta) / delta,
// r3 = beta^{-1/(r a)} phi(beta) / (delta^{-1/a} phi(delta)^{r/2});
// all three share the limit r^{-kappa} as delta -> 0.
RatioCurves a_priori_limit_ratios(const IndexFunctionPhi& phi, double smoothing_order_a,
                                  double r, const Vec& delta_grid);

// chi_{b,d}(t) = t^{1/b} (-ln(c t))^{-d} on (0, g_norm]
double chi(double c, double b, double d, double t, double g_norm);

// Inverse of chi by bisection in log space; relative accuracy ~1e-14.
double chi_inverse(double c, double b, double d, double t, double g_norm);

// Largest constant C5 with chi^{-1}(t) >= C5 t^b (-ln(c t))^{b d} on the grid.
double chi_lower_bound_check(double c, double b, double d, const Vec& t_grid, double g_norm);

// min over finite-alpha rows of alpha_star / beta(delta); positive when the
// selected parameters respect the theoretical lower bound.
double selected_alpha_lower_bound_check(const std::vector<SweepRow>& rows,
                                        const IndexFunctionPhi& phi, double r);

// Per-row ratio ||u - u_bar||_1 / (delta^{-1/a} phi(delta)^{r/2}).
Vec penalty_growth_check(const std::vector<SweepRow>& rows, const IndexFunctionPhi& phi,
                         double smoothing_order_a, double r);

}  // namespace tikhscale
