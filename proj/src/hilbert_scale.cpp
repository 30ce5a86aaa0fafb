#include "tikhscale/hilbert_scale.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tikhscale/errors.hpp"

namespace tikhscale {

namespace {

void require_finite(const Vec& x, const char* what) {
  for (double v : x) {
    if (!std::isfinite(v)) throw InvalidInput(std::string(what) + ": non-finite entry");
  }
}

void require_length(const Vec& x, std::size_t n) {
  if (x.size() != n) throw InvalidInput("vector length does not match scale dimension");
}

}  // namespace

DiagonalHilbertScale::DiagonalHilbertScale(Vec diag, double lower_bound_k,
                                           double smoothing_order_a)
    : diag_(std::move(diag)),
      lower_bound_k_(lower_bound_k),
      smoothing_order_a_(smoothing_order_a) {
  if (diag_.empty()) throw ConfigError("scale diagonal must be nonempty");
  if (!(lower_bound_k_ > 0.0)) throw ConfigError("lower_bound_k must be positive");
  if (!(smoothing_order_a_ > 0.0)) throw ConfigError("smoothing_order_a must be positive");
  double g_max = 0.0;
  for (double b : diag_) {
    if (!std::isfinite(b) || !(b > 0.0)) throw ConfigError("scale diagonal entries must be finite and positive");
    if (b < lower_bound_k_) throw ConfigError("scale diagonal entry below lower_bound_k");
    g_max = std::max(g_max, std::pow(b, -(2.0 * smoothing_order_a_ + 2.0)));
  }
  g_norm_ = g_max;
}

double DiagonalHilbertScale::g_entry(std::size_t i) const {
  return std::pow(diag_[i], -(2.0 * smoothing_order_a_ + 2.0));
}

DiagonalHilbertScale natural_number_scale(std::size_t n, double smoothing_order_a) {
  Vec d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = static_cast<double>(i + 1);
  return DiagonalHilbertScale(std::move(d), 1.0, smoothing_order_a);
}

double IndexFunctionPhi::operator()(double t) const {
  if (!(t > 0.0) || !(c * t < 1.0)) throw InvalidInput("phi argument outside (0, 1/c)");
  return std::pow(-std::log(c * t), -kappa);
}

double norm_tau(const DiagonalHilbertScale& scale, const Vec& x, double tau) {
  require_length(x, scale.size());
  require_finite(x, "norm_tau");
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double w = std::pow(scale.diag()[i], tau);
    const double t = w * x[i];
    sum += t * t;
  }
  return std::sqrt(sum);
}

Vec apply_G(const DiagonalHilbertScale& scale, const Vec& x) {
  return apply_G_power(scale, x, 1.0);
}

Vec apply_G_power(const DiagonalHilbertScale& scale, const Vec& x, double p) {
  require_length(x, scale.size());
  require_finite(x, "apply_G_power");
  Vec y(x.size());
  const double expo = -(2.0 * scale.smoothing_order_a() + 2.0) * p;
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = std::pow(scale.diag()[i], expo) * x[i];
  return y;
}

Vec apply_phi_G(const DiagonalHilbertScale& scale, const IndexFunctionPhi& phi, const Vec& x) {
  require_length(x, scale.size());
  require_finite(x, "apply_phi_G");
  if (!(phi.c > 0.0) || !(phi.c * scale.g_norm() < 1.0))
    throw ConfigError("apply_phi_G requires c * ||G|| < 1");
  Vec y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    y[i] = phi(scale.g_entry(i)) * x[i];
  }
  return y;
}

InterpolationCheck check_interpolation(const DiagonalHilbertScale& scale, const Vec& x,
                                       double p, double q, double s, double tol) {
  if (!(p >= q && q >= s)) throw InvalidInput("check_interpolation requires p >= q >= s");
  if (p == s) throw InvalidInput("check_interpolation requires p != s");
  const double psi = (p - q) / (p - s);
  const double lhs = norm_tau(scale, x, q);
  const double rhs = std::pow(norm_tau(scale, x, p), 1.0 - psi) * std::pow(norm_tau(scale, x, s), psi);
  if (lhs == 0.0 && rhs == 0.0) return {true, 1.0};
  const double ratio = lhs / rhs;
  return {ratio <= 1.0 + tol, ratio};
}

double check_index_function(const DiagonalHilbertScale& scale, const IndexFunctionPhi& phi,
                            double theta, const Vec& alpha_grid, const Vec& lambda_grid) {
  if (alpha_grid.empty() || lambda_grid.empty())
    throw InvalidInput("check_index_function: empty grid");
  const double g_norm = scale.g_norm();
  double worst = 0.0;
  for (double alpha : alpha_grid) {
    if (!(alpha > 0.0) || alpha > g_norm) throw InvalidInput("alpha grid outside (0, ||G||]");
    double inner = 0.0;
    for (double lambda : lambda_grid) {
      if (!(lambda > 0.0) || lambda > g_norm) throw InvalidInput("lambda grid outside (0, ||G||]");
      inner = std::max(inner, alpha * std::pow(lambda, theta) * phi(lambda) / (lambda + alpha));
    }
    worst = std::max(worst, inner / (std::pow(alpha, theta) * phi(alpha)));
  }
  return worst;
}

bool quotient_strictly_increasing(const IndexFunctionPhi& phi, double eta, const Vec& t_grid) {
  double prev = -std::numeric_limits<double>::infinity();
  for (double t : t_grid) {
    const double v = std::pow(t, eta) / phi(t);
    if (!(v > prev)) return false;
    prev = v;
  }
  return true;
}

}  // namespace tikhscale
