#include "logharm/radii.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "logharm/errors.hpp"
#include "logharm/geometry.hpp"
#include "logharm/optimize.hpp"

namespace logharm {

namespace {

constexpr double kLeadingZeroTol = 1e-13;

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double c : v) m = std::max(m, std::abs(c));
  return m;
}

// Remainder of a / b (both trimmed, degree-descending).
RealPolynomial remainder(const RealPolynomial& a, const RealPolynomial& b) {
  std::vector<double> r = a.coefficients();
  const auto& d = b.coefficients();
  while (r.size() >= d.size()) {
    const double q = r.front() / d.front();
    for (std::size_t i = 0; i < d.size(); ++i) r[i] -= q * d[i];
    r.erase(r.begin());
  }
  return RealPolynomial(std::move(r)).trimmed();
}

std::vector<RealPolynomial> sturm_sequence(const RealPolynomial& p) {
  std::vector<RealPolynomial> seq{p.trimmed()};
  seq.push_back(seq.front().derivative().trimmed());
  const double scale = max_abs(seq.front().coefficients());
  while (seq.back().degree() > 0) {
    RealPolynomial r = remainder(seq[seq.size() - 2], seq.back());
    if (r.degree() < 0 || max_abs(r.coefficients()) <= 1e-14 * scale) break;
    std::vector<double> neg = r.coefficients();
    for (double& c : neg) c = -c;
    seq.emplace_back(std::move(neg));
  }
  return seq;
}

int sign_variations(const std::vector<RealPolynomial>& seq, double x) {
  int changes = 0;
  int last = 0;
  for (const auto& q : seq) {
    const double v = q(x);
    const int s = (v > 0) - (v < 0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

double rationalized_root(double b, double discriminant) {
  // Smaller root of c r^2 - 2 b r + 1 = 0, i.e. (b - sqrt(b^2 - c)) / c,
  // written as 1 / (b + sqrt(b^2 - c)) so that c -> 0 is not a 0/0.
  // b^2 - c is passed expanded: forming it from b and c cancels badly as lambda -> 0.
  return 1.0 / (b + std::sqrt(discriminant));
}

void require_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw DomainError("alpha must lie in [0, 1)");
}

}  // namespace

RealPolynomial::RealPolynomial(std::vector<double> descending) : coeffs_(std::move(descending)) {}

RealPolynomial RealPolynomial::trimmed() const {
  const double scale = max_abs(coeffs_);
  std::size_t first = 0;
  while (first < coeffs_.size() && std::abs(coeffs_[first]) <= kLeadingZeroTol * scale) ++first;
  return RealPolynomial(std::vector<double>(coeffs_.begin() + static_cast<std::ptrdiff_t>(first), coeffs_.end()));
}

int RealPolynomial::degree() const { return static_cast<int>(trimmed().coeffs_.size()) - 1; }

double RealPolynomial::operator()(double x) const {
  double v = 0.0;
  for (double c : coeffs_) v = v * x + c;
  return v;
}

RealPolynomial RealPolynomial::derivative() const {
  std::vector<double> d;
  const std::size_t n = coeffs_.size();
  for (std::size_t i = 0; i + 1 < n; ++i) d.push_back(coeffs_[i] * static_cast<double>(n - 1 - i));
  return RealPolynomial(std::move(d));
}

RealPolynomial operator*(const RealPolynomial& a, const RealPolynomial& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
  std::vector<double> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RealPolynomial(std::move(c));
}

RealPolynomial quintic_coeffs(double alpha) {
  const double a = alpha;
  const double a2 = a * a;
  const double a3 = a2 * a;
  return RealPolynomial({
      8 * a3 - 12 * a2 + 6 * a - 1,   // (2a - 1)^3
      -16 * a3 + 12 * a2 + 4 * a - 3,
      8 * a3 - 36 * a2 + 32 * a - 8,
      4 * a2 - 4 * a + 4,
      -6 * a + 9,
      -1,
  });
}

int sturm_count(const RealPolynomial& p, double a, double b) {
  const auto seq = sturm_sequence(p);
  return sign_variations(seq, a) - sign_variations(seq, b);
}

double smallest_positive_root(const RealPolynomial& p, double lo, double hi, double tol) {
  const RealPolynomial q = p.trimmed();
  if (q.degree() < 0) throw DomainError("smallest_positive_root: zero polynomial");
  if (q.degree() == 0) throw DomainError("smallest_positive_root: no root in interval");
  const auto seq = sturm_sequence(q);
  const int v_lo = sign_variations(seq, lo);
  auto roots_up_to = [&](double x) { return v_lo - sign_variations(seq, x); };

  if (roots_up_to(hi) <= 0) throw DomainError("smallest_positive_root: no root in interval");

  // Shrink (a, b] until it holds exactly the smallest root with a sign change.
  double a = lo;
  double b = hi;
  while (b - a > tol) {
    if (roots_up_to(b) == 1 && (q(a) > 0) != (q(b) > 0) && q(a) != 0.0 && q(b) != 0.0) break;
    const double mid = 0.5 * (a + b);
    if (roots_up_to(mid) >= 1) {
      b = mid;
    } else {
      a = mid;
    }
  }
  // Sign-change bisection inside the isolating interval.
  double fa = q(a);
  while (b - a > tol) {
    const double mid = 0.5 * (a + b);
    const double fm = q(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0) == (fa > 0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  const double root = 0.5 * (a + b);
  if (hi - root <= 10 * tol) throw DomainError("smallest_positive_root: no root in the open interval");
  return root;
}

std::string_view to_string(RadiusKind kind) {
  switch (kind) {
    case RadiusKind::omega: return "omega";
    case RadiusKind::close_to_starlike: return "close_to_starlike";
    case RadiusKind::order_alpha: return "order_alpha";
    case RadiusKind::q_product: return "q_product";
    case RadiusKind::q_product_order0: return "q_product_order0";
  }
  return "?";
}

std::optional<RadiusKind> radius_kind_from_string(std::string_view name) {
  for (auto k : {RadiusKind::omega, RadiusKind::close_to_starlike, RadiusKind::order_alpha,
                 RadiusKind::q_product, RadiusKind::q_product_order0}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

RadiusReport closed_form_radius(RadiusKind kind, double alpha, std::optional<double> lambda) {
  require_alpha(alpha);
  const bool needs_lambda = kind == RadiusKind::q_product || kind == RadiusKind::q_product_order0;
  if (needs_lambda && !(lambda && *lambda > 0.0 && *lambda < 1.0)) {
    throw DomainError("lambda must lie in (0, 1) for q-product radii");
  }
  RadiusReport report;
  report.kind = kind;
  report.alpha = alpha;
  if (needs_lambda) report.lambda_weight = lambda;

  switch (kind) {
    case RadiusKind::omega:
      report.closed_form = smallest_positive_root(quintic_coeffs(alpha));
      break;
    case RadiusKind::close_to_starlike:
      report.closed_form =
          alpha == 0.5 ? 1.0 / 3.0 : rationalized_root(2.0 - alpha, alpha * alpha - 2.0 * alpha + 3.0);
      break;
    case RadiusKind::order_alpha:
      report.closed_form =
          rationalized_root((2.0 - alpha) / (1.0 - alpha), (3.0 - 2.0 * alpha) / ((1.0 - alpha) * (1.0 - alpha)));
      break;
    case RadiusKind::q_product: {
      const double l = *lambda;
      report.closed_form =
          alpha == 0.5 ? 1.0 / (2.0 * l + 1.0)
                       : rationalized_root(1.0 + l - alpha, alpha * alpha + 2.0 * l * (1.0 - alpha) + l * l);
      break;
    }
    case RadiusKind::q_product_order0: {
      const double l = *lambda;
      const double la = l * alpha;
      report.closed_form =
          std::abs(1.0 - 2.0 * la) < 1e-14 ? 1.0 / (2.0 * l + 1.0)
                                           : rationalized_root(1.0 + l - la, la * la + 2.0 * l * (1.0 - la) + l * l);
      break;
    }
  }
  return report;
}

double defining_polynomial_residual(RadiusKind kind, double alpha, std::optional<double> lambda, double rho) {
  const double l = lambda.value_or(0.0);
  switch (kind) {
    case RadiusKind::omega: return quintic_coeffs(alpha)(rho);
    case RadiusKind::close_to_starlike:
      return (1 - 2 * alpha) * rho * rho + (2 * alpha - 4) * rho + 1;
    case RadiusKind::order_alpha:
      return (1 - alpha) * rho * rho + (2 * alpha - 4) * rho + 1 - alpha;
    case RadiusKind::q_product:
      return (1 - 2 * alpha) * rho * rho + 2 * (alpha - l - 1) * rho + 1;
    case RadiusKind::q_product_order0:
      return (1 - 2 * l * alpha) * rho * rho + 2 * (l * alpha - l - 1) * rho + 1;
  }
  return 0.0;
}

LambdaMaximum argmax_lambda(double alpha) {
  require_alpha(alpha);
  constexpr double lo = 1e-4;
  constexpr double hi = 1.0 - 1e-4;
  constexpr int samples = 256;
  auto objective = [alpha](double r) { return -lambda_alpha(r, alpha); };
  const auto bracket = scan_bracket(objective, lo, hi, samples);
  const double r = golden_section_minimize(objective, bracket.first, bracket.second, 1e-8);
  return {r, lambda_alpha(r, alpha)};
}

}  // namespace logharm
