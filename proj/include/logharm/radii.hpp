#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace logharm {

/// Real polynomial with degree-descending coefficients.
class RealPolynomial {
 public:
  RealPolynomial() = default;
  explicit RealPolynomial(std::vector<double> descending);

  const std::vector<double>& coefficients() const { return coeffs_; }
  /// Degree after dropping (numerically) vanishing leading coefficients; -1 for the zero polynomial.
  int degree() const;
  double operator()(double x) const;
  RealPolynomial derivative() const;
  /// Leading-zero-free copy.
  RealPolynomial trimmed() const;

  friend RealPolynomial operator*(const RealPolynomial& a, const RealPolynomial& b);

 private:
  std::vector<double> coeffs_;
};

/// The radius equation for the disk of centres about which every member of
/// ST_Lh(alpha) stays starlike; a quintic in r with coefficients cubic in alpha.
RealPolynomial quintic_coeffs(double alpha);

/// Smallest root of p in the open interval (lo, hi), refined to `tol`.
/// Sturm counts isolate the root; sign-change bisection refines it.
/// Throws DomainError when no root lies in the interval.
double smallest_positive_root(const RealPolynomial& p, double lo = 0.0, double hi = 1.0,
                              double tol = 1e-10);

/// Number of distinct real roots of p in (a, b].
int sturm_count(const RealPolynomial& p, double a, double b);

enum class RadiusKind { omega, close_to_starlike, order_alpha, q_product, q_product_order0 };

std::string_view to_string(RadiusKind kind);
std::optional<RadiusKind> radius_kind_from_string(std::string_view name);

struct RadiusReport {
  RadiusKind kind = RadiusKind::close_to_starlike;
  double alpha = 0.0;
  std::optional<double> lambda_weight;
  double closed_form = 0.0;
  std::optional<double> numeric_check;
  std::optional<double> abs_gap;
};

/// Closed-form radius of starlikeness for the close-to-starlike family.
///   close_to_starlike: root of (1-2a) r^2 + (2a-4) r + 1
///   order_alpha:       root of (1-a) r^2 + (2a-4) r + 1 - a
///   q_product:         root of (1-2a) r^2 + 2(a-l-1) r + 1
///   q_product_order0:  root of (1-2la) r^2 + 2(la-l-1) r + 1
/// For `omega` the closed form is the smallest root of quintic_coeffs(alpha).
RadiusReport closed_form_radius(RadiusKind kind, double alpha, std::optional<double> lambda = std::nullopt);

/// Residual of the kind's defining polynomial at rho.
double defining_polynomial_residual(RadiusKind kind, double alpha, std::optional<double> lambda, double rho);

struct LambdaMaximum {
  double r_star = 0.0;
  double lambda_star = 0.0;
};

/// Maximizer of r -> lambda_alpha(r, alpha) on (1e-4, 1 - 1e-4): a 256-point
/// scan brackets the peak and golden-section search refines it to 1e-8.
LambdaMaximum argmax_lambda(double alpha);

}  // namespace logharm
