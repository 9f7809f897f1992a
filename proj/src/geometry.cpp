#include "logharm/geometry.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "logharm/errors.hpp"
#include "logharm/optimize.hpp"
#include "logharm/radii.hpp"

namespace logharm {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSmallestSearchRadius = 1e-3;
constexpr double kRadiusTol = 1e-6;
constexpr int kRadiusScan = 64;
constexpr int kOrderRadii = 32;

void require_radius(const LogharmonicMap& f, double r) {
  if (!(r > 0.0 && r <= 1.0 - f.guard())) throw DomainError("radius must lie in (0, 1 - guard]");
}

}  // namespace

double sigma(const LogharmonicMap& f, cplx z) {
  require_in_guarded_disk(z, f.guard());
  if (z == 0.0) return f.star_weight_sum();
  return f.analytic_log_derivative(z).real();
}

CircleMinimum min_sigma_on_circle(const LogharmonicMap& f, double r, int n) {
  require_radius(f, r);
  if (n < 8) throw DomainError("circle scan needs at least 8 samples");
  const double step = 2.0 * kPi / n;
  auto on_circle = [&f, r](double theta) { return f.analytic_log_derivative(std::polar(r, theta)).real(); };

  CircleMinimum best{std::numeric_limits<double>::infinity(), 0.0};
  for (int k = 0; k < n; ++k) {
    const double theta = -kPi + step * (k + 1);
    const double v = on_circle(theta);
    if (v < best.value) best = {v, theta};
  }
  const double refined = golden_section_minimize(on_circle, best.theta - step, best.theta + step, 1e-10);
  const double refined_value = on_circle(refined);
  if (refined_value < best.value) {
    double theta = std::remainder(refined, 2.0 * kPi);
    if (theta <= -kPi) theta += 2.0 * kPi;
    best = {refined_value, theta};
  }
  return best;
}

double starlike_order(const LogharmonicMap& f, double r, int n) {
  require_radius(f, r);
  double order = std::numeric_limits<double>::infinity();
  for (int k = 0; k < kOrderRadii; ++k) {
    const double rk = r * std::pow(1e-3, static_cast<double>(k) / (kOrderRadii - 1));
    order = std::min(order, min_sigma_on_circle(f, rk, n).value);
  }
  return order;
}

double numeric_radius(const LogharmonicMap& f, double threshold, int n) {
  auto excess = [&](double r) { return min_sigma_on_circle(f, r, n).value - threshold; };
  const double outer = 1.0 - f.guard();
  if (!(excess(kSmallestSearchRadius) > 0.0)) {
    throw DomainError("sigma is already below the threshold at r = 1e-3");
  }
  double lo = kSmallestSearchRadius;
  double hi = lo;
  bool crossed = false;
  for (int i = 1; i <= kRadiusScan; ++i) {
    hi = kSmallestSearchRadius + (outer - kSmallestSearchRadius) * i / kRadiusScan;
    if (!(excess(hi) > 0.0)) {
      crossed = true;
      break;
    }
    lo = hi;
  }
  if (!crossed) return outer;
  while (hi - lo > kRadiusTol) {
    const double mid = 0.5 * (lo + hi);
    if (excess(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

DistortionBounds distortion_bounds(double r, double alpha) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("distortion_bounds requires r in [0, 1)");
  if (!(alpha >= 0.0 && alpha < 1.0)) throw DomainError("distortion_bounds requires alpha in [0, 1)");
  const double lower = r / std::pow(1.0 + r, 2.0 * alpha) * std::exp(-4.0 * (1.0 - alpha) * r / (1.0 + r));
  const double upper = r / std::pow(1.0 - r, 2.0 * alpha) * std::exp(4.0 * (1.0 - alpha) * r / (1.0 - r));
  return {lower, upper};
}

double psi(const LogharmonicMap& f, cplx z) {
  const auto ratios = wirtinger_analytic(f, z);
  const double denominator = std::abs(ratios.zfz_over_f - ratios.zbar_fzbar_over_f);
  if (denominator == 0.0) return std::numeric_limits<double>::infinity();
  return std::abs(eval_map(f, z)) * sigma(f, z) / denominator;
}

double lambda_alpha(double r, double alpha) {
  const double lower = r / std::pow(1.0 + r, 2.0 * alpha) * std::exp(-4.0 * (1.0 - alpha) * r / (1.0 + r));
  const double ratio = (1.0 + r) / (1.0 - r);
  const double numerator = alpha + (1.0 - alpha) / ratio;
  const double denominator = (alpha + (1.0 - alpha) * ratio) * ratio;
  return lower * numerator / denominator;
}

double lambda_alt_cor24(double r) {
  return r * std::exp(-4.0 * r * std::pow(1.0 - r, 3) / std::pow(1.0 + r, 4));
}

OmegaReport omega_report(double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw DomainError("omega_report requires alpha in [0, 1)");
  OmegaReport report;
  report.alpha = alpha;
  report.r0 = smallest_positive_root(quintic_coeffs(alpha));
  report.lambda_thm23 = lambda_alpha(report.r0, alpha);
  if (alpha == 0.0) {
    report.lambda_alt_expression = lambda_alt_cor24(report.r0);
    report.paper_reported = kReportedOmegaRadius;
    report.discrepancy_flag = std::abs(report.lambda_thm23 - kReportedOmegaRadius) > 1e-4;
  }
  return report;
}

bool starlike_wrt_point(const LogharmonicMap& f, double r, cplx w0, int n) {
  require_radius(f, r);
  for (int k = 0; k < n; ++k) {
    const cplx z = std::polar(r, -kPi + 2.0 * kPi * (k + 1) / n);
    const cplx value = eval_map(f, z);
    const auto ratios = wirtinger_analytic(f, z);
    const cplx speed = value * (ratios.zfz_over_f - ratios.zbar_fzbar_over_f);
    if (speed == 0.0) throw DomainError("stationary phase on the sampling circle");
    if (!(((value - w0) / speed).real() > 0.0)) return false;
  }
  return true;
}

ImageCurve image_curve(const LogharmonicMap& f, double r, int n) {
  require_radius(f, r);
  if (n < 4) throw DomainError("image_curve needs n >= 4");
  ImageCurve curve{r, {}, f.label()};
  curve.samples.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double theta = -kPi + 2.0 * kPi * (k + 1) / n;
    curve.samples.push_back({theta, eval_map(f, std::polar(r, theta))});
  }
  return curve;
}

WindingSummary winding(const ImageCurve& curve) {
  WindingSummary summary;
  const auto& s = curve.samples;
  for (std::size_t k = 0; k < s.size(); ++k) {
    const cplx next = s[(k + 1) % s.size()].w;
    const double step = std::arg(next / s[k].w);
    summary.total_turn += step;
    if (step < 0.0) ++summary.backward_steps;
  }
  return summary;
}

}  // namespace logharm
