#pragma once

#include <cstddef>
#include <vector>

namespace tikhscale {

using Vec = std::vector<double>;

// Generator B of the scale of norms ||u||_tau = ||B^tau u||, represented by its
// positive diagonal b_n on the truncated sequence space R^N. The operator
// G = B^{-(2a+2)} is diagonal as well, with entries g_n = b_n^{-(2a+2)}.
class DiagonalHilbertScale {
 public:
  DiagonalHilbertScale(Vec diag, double lower_bound_k, double smoothing_order_a);

  std::size_t size() const { return diag_.size(); }
  const Vec& diag() const { return diag_; }
  double lower_bound_k() const { return lower_bound_k_; }
  double smoothing_order_a() const { return smoothing_order_a_; }

  // r = (2a+2)/a
  double r() const { return (2.0 * smoothing_order_a_ + 2.0) / smoothing_order_a_; }

  // g_n = b_n^{-(2a+2)}
  double g_entry(std::size_t i) const;

  // ||G|| = max_n g_n, exact for a diagonal operator.
  double g_norm() const { return g_norm_; }

 private:
  Vec diag_;
  double lower_bound_k_;
  double smoothing_order_a_;
  double g_norm_;
};

// b_n = n, n = 1..N
DiagonalHilbertScale natural_number_scale(std::size_t n, double smoothing_order_a = 1.0);

// phi(t) = (-ln(c t))^{-kappa}, defined on (0, 1/c).
struct IndexFunctionPhi {
  double c;
  double kappa;

  double operator()(double t) const;
};

// sqrt(sum_n b_n^{2 tau} x_n^2); fixed sequential summation order.
double norm_tau(const DiagonalHilbertScale& scale, const Vec& x, double tau);

// componentwise x_n -> g_n x_n
Vec apply_G(const DiagonalHilbertScale& scale, const Vec& x);

// componentwise x_n -> g_n^p x_n
Vec apply_G_power(const DiagonalHilbertScale& scale, const Vec& x, double p);

// componentwise x_n -> phi(g_n) x_n; requires c * ||G|| < 1
Vec apply_phi_G(const DiagonalHilbertScale& scale, const IndexFunctionPhi& phi, const Vec& x);

struct InterpolationCheck {
  bool holds;
  double ratio;  // ||x||_q / (||x||_p^{1-psi} ||x||_s^{psi})
};

// Checks ||x||_q <= ||x||_p^{1-psi} ||x||_s^{psi} with psi = (p-q)/(p-s).
InterpolationCheck check_interpolation(const DiagonalHilbertScale& scale, const Vec& x,
                                       double p, double q, double s, double tol = 1e-12);

// Empirical constant sup_alpha [sup_lambda alpha lambda^theta phi(lambda)/(lambda+alpha)]
// / (alpha^theta phi(alpha)) over the given grids.
double check_index_function(const DiagonalHilbertScale& scale, const IndexFunctionPhi& phi,
                            double theta, const Vec& alpha_grid, const Vec& lambda_grid);

// True when t -> t^eta / phi(t) is strictly increasing along the sorted grid.
bool quotient_strictly_increasing(const IndexFunctionPhi& phi, double eta, const Vec& t_grid);

}  // namespace tikhscale
