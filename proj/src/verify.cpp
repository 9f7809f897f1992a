#include "logharm/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "logharm/catalog.hpp"
#include "logharm/geometry.hpp"
#include "logharm/radii.hpp"

namespace logharm {

namespace {

using AF = AnalyticFunction;
constexpr double kPi = std::numbers::pi;

class PointSampler {
 public:
  explicit PointSampler(std::uint64_t seed) : rng_(seed) {}

  // Uniform by area in the annulus r_min <= |z| <= r_max.
  cplx next(double r_min, double r_max) {
    std::uniform_real_distribution<double> u(r_min * r_min, r_max * r_max);
    std::uniform_real_distribution<double> t(-kPi, kPi);
    return std::polar(std::sqrt(u(rng_)), t(rng_));
  }

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

 private:
  std::mt19937_64 rng_;
};

struct Check {
  std::string name;
  std::string module;
  double tolerance;
  // Returns the worst measured gap; pass iff gap <= tolerance (scaled).
  std::function<double(PointSampler&, std::string&)> measure;
  // Checks whose measure is a boolean-like violation count compare against 0.
  bool strict_count = false;
};

double rel_gap(cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

// Eq. (2.6)-type closed form of from_representation(koebe_alpha(alpha), a = z).
cplx f0_closed_form(cplx z, double alpha) {
  const cplx w = 1.0 - z;
  const cplx wbar = std::conj(w);
  return z * wbar / w * std::exp(-2.0 * alpha * std::log(wbar)) * std::exp((1.0 - alpha) * (4.0 * z / w).real());
}

std::vector<AF> derivative_catalog() {
  return {AF::identity(),
          AF::constant({0.3, -0.2}),
          AF::koebe_alpha(0.0),
          AF::koebe_alpha(0.6),
          AF::half_plane_p(),
          AF::one_minus_z(),
          AF::scaled_identity({0.5, 0.5}),
          AF::series({0.0, 1.0, 0.2, -0.1}),
          AF::product(AF::koebe_alpha(0.3), AF::half_plane_p()),
          AF::quotient(AF::identity(), AF::one_minus_z()),
          AF::rotated(AF::koebe_alpha(0.25), 1.1),
          AF::precomposed_rotation(AF::half_plane_p(), -0.4)};
}

std::vector<Check> build_checks() {
  std::vector<Check> checks;

  // analytic_fn
  checks.push_back({"derivative_vs_central_difference", "analytic_fn", 1e-6, [](PointSampler& rng, std::string&) {
                      double worst = 0.0;
                      const double h = 1e-5;
                      for (const auto& f : derivative_catalog()) {
                        for (int i = 0; i < 100; ++i) {
                          const cplx z = rng.next(0.0, 0.8);
                          const cplx fd = (f(z + h) - f(z - h)) / (2.0 * h);
                          worst = std::max(worst, rel_gap(fd, eval_with_derivative(f, z).derivative));
                        }
                      }
                      return worst;
                    }});
  checks.push_back({"log_quotient_exp_roundtrip", "analytic_fn", 1e-8, [](PointSampler& rng, std::string&) {
                      double worst = 0.0;
                      for (const auto& phi : {AF::koebe_alpha(0.0), AF::koebe_alpha(0.5), phi_by_name("quadratic", 0),
                                              AF::rotated(AF::koebe_alpha(0.2), 2.0)}) {
                        for (int i = 0; i < 25; ++i) {
                          const cplx z = rng.next(0.01, 0.95);
                          const cplx back = std::exp(log_quotient_over_z(phi, z)) * z;
                          worst = std::max(worst, std::abs(back - phi(z)) / std::abs(phi(z)));
                        }
                      }
                      return worst;
                    }});
  checks.push_back({"radial_integral_linearity", "analytic_fn", 1e-12, [](PointSampler& rng, std::string&) {
                      double worst = 0.0;
                      auto f = [](cplx s) { return 1.0 / (1.0 - s); };
                      auto g = [](cplx s) { return s * s; };
                      for (int i = 0; i < 20; ++i) {
                        const cplx z = rng.next(0.0, 0.9);
                        const cplx sum = radial_integral([&](cplx s) { return f(s) + 2.0 * g(s); }, z);
                        const cplx parts = radial_integral(f, z) + 2.0 * radial_integral(g, z);
                        worst = std::max(worst, rel_gap(sum, parts));
                        const double c = rng.uniform(0.1, 1.0);
                        const cplx scaled = radial_integral([](cplx) { return cplx(3.0); }, c * z);
                        worst = std::max(worst, rel_gap(scaled, c * radial_integral([](cplx) { return cplx(3.0); }, z)));
                      }
                      return worst;
                    }});
  checks.push_back({"dilatation_validation", "analytic_fn", 0.0, [](PointSampler&, std::string& detail) {
                      double failures = 0;
                      for (const char* d : {"0", "z", "z/2", "z^2"}) failures += !validate_dilatation(dilatation_by_name(d)).pass;
                      failures += validate_dilatation(Dilatation(AF::constant(1.2))).pass;
                      detail = "violations counted";
                      return failures;
                    }, true});

  // logharmonic_core
  checks.push_back({"representation_identity", "logharmonic_core", 1e-5, [](PointSampler& rng, std::string&) {
                      double worst = 0.0;
                      for (const auto& entry : standard_constructions(0.25)) {
                        for (int i = 0; i < 100 / 4; ++i) {
                          const cplx z = rng.next(0.05, 0.7);
                          const auto d = wirtinger_fd([&](cplx w) { return eval_map(entry.map, w); }, z, 1e-5);
                          const cplx f = eval_map(entry.map, z);
                          const double fd_sigma = ((z * d.fz - std::conj(z) * d.fzbar) / f).real();
                          worst = std::max(worst, std::abs(fd_sigma - sigma(entry.map, z)));
                        }
                      }
                      return worst;
                    }});
  checks.push_back({"phase_from_star_part", "logharmonic_core", 1e-8, [](PointSampler& rng, std::string&) {
                      double worst = 0.0;
                      for (const auto& entry : standard_constructions(0.5)) {
                        for (int i = 0; i < 10; ++i) {
                          const cplx z = rng.next(0.05, 0.9);
                          cplx log_star = 0.0;
                          for (const auto& s : entry.map.star_factors()) log_star += s.weight * log_quotient_over_z(s.phi, z);
                          for (const auto& p : entry.map.p_factors()) log_star += p.weight * std::log(p.p(z));
                          const cplx phase = z * std::exp(cplx(0.0, log_star.imag())) / std::abs(z);
                          const cplx f = eval_map(entry.map, z);
                          worst = std::max(worst, std::abs(f / std::abs(f) - phase));
                        }
                      }
                      return worst;
                    }});
  checks.push_back({"f0_closed_form", "logharmonic_core", 1e-8, [](PointSampler& rng, std::string&) {
                      double worst = 0.0;
                      for (double alpha : {0.0, 0.25, 0.5, 0.75}) {
                        const auto f = from_representation(AF::koebe_alpha(alpha), dilatation_by_name("z"));
                        for (int i = 0; i < 100; ++i) {
                          const cplx z = rng.next(0.0, 0.95);
                          const cplx oracle = f0_closed_form(z, alpha);
                          worst = std::max(worst, std::abs(eval_map(f, z) - oracle) / std::abs(oracle));
                        }
                      }
                      return worst;
                    }});
  checks.push_back({"pde_residual", "logharmonic_core", 1e-5, [](PointSampler& rng, std::string&) {
                      double worst = 0.0;
                      for (const auto& entry : standard_constructions(0.25)) {
                        for (int i = 0; i < 50; ++i) {
                          worst = std::max(worst, pde_residual(entry.map, rng.next(0.05, 0.7), 1e-5));
                        }
                      }
                      return worst;
                    }});
  checks.push_back({"pde_negative_control", "logharmonic_core", 0.0, [](PointSampler& rng, std::string& detail) {
                      const auto f = from_representation(AF::koebe_alpha(0.0), dilatation_by_name("z"));
                      double small = 0;
                      for (int i = 0; i < 20; ++i) {
                        small += pde_residual(f, rng.next(0.2, 0.7), 1e-5, AF::scaled_identity(0.5)) < 1e-3;
                      }
                      detail = "mismatched dilatation residuals below 1e-3";
                      return small;
                    }, true});
  checks.push_back({"jacobian_positive", "logharmonic_core", 0.0, [](PointSampler& rng, std::string& detail) {
                      double nonpositive = 0;
                      for (const auto& entry : standard_constructions(0.5)) {
                        for (int i = 0; i < 50; ++i) nonpositive += !(jacobian(entry.map, rng.next(0.01, 0.9)) > 0.0);
                      }
                      detail = "non-positive Jacobians";
                      return nonpositive;
                    }, true});

  // geometry
  checks.push_back({"sigma_additivity", "geometry", 1e-10, [](PointSampler& rng, std::string&) {
                      double worst = 0.0;
                      const auto a = dilatation_by_name("z/2");
                      const auto f = from_representation(AF::koebe_alpha(0.3), a);
                      const auto g = close_to_starlike(from_representation(phi_by_name("quadratic", 0), a), AF::half_plane_p());
                      const auto k = k_kernel(a);
                      for (int i = 0; i < 50; ++i) {
                        const double w = rng.uniform(0.05, 0.95);
                        const auto q = weighted_product({{f, w}, {g, 1.0 - w}});
                        const auto s = weighted_product({{q, 1.0 - w}, {k, w}});
                        const cplx z = rng.next(0.05, 0.95);
                        worst = std::max(worst, std::abs(sigma(q, z) - (w * sigma(f, z) + (1.0 - w) * sigma(g, z))));
                        worst = std::max(worst, std::abs(sigma(s, z) - ((1.0 - w) * sigma(q, z) + w * sigma(k, z))));
                      }
                      return worst;
                    }});
  checks.push_back({"order_shift_forward", "geometry", 0.0, [](PointSampler&, std::string& detail) {
                      double violations = 0;
                      const auto a = dilatation_by_name("z");
                      const auto f = from_representation(AF::koebe_alpha(0.0), a);
                      for (double alpha : {0.1, 0.4, 0.8}) {
                        const auto g = weighted_product({{f, 1.0 - alpha}, {k_kernel(a), alpha}});
                        for (double r : {0.2, 0.5, 0.8, 0.99}) violations += !(min_sigma_on_circle(g, r).value > alpha);
                      }
                      detail = "radii where sigma <= alpha";
                      return violations;
                    }, true});
  checks.push_back({"close_to_starlike_bound_attained", "geometry", 1e-6, [](PointSampler&, std::string&) {
                      double worst = 0.0;
                      for (double alpha : {0.0, 0.25, 0.5, 0.75}) {
                        const auto F = close_to_starlike_extremal(alpha);
                        for (double r : {0.1, 0.3, 0.5, 0.7, 0.9}) {
                          const double bound = ((1 - 2 * alpha) * r * r + (2 * alpha - 4) * r + 1) / (1 - r * r);
                          worst = std::max(worst, std::abs(min_sigma_on_circle(F, r).value - bound));
                        }
                      }
                      return worst;
                    }});
  checks.push_back({"rotation_invariance", "geometry", 1e-8, [](PointSampler& rng, std::string&) {
                      double worst = 0.0;
                      const auto f = close_to_starlike(from_representation(AF::koebe_alpha(0.3), dilatation_by_name("z")),
                                                       AF::half_plane_p());
                      const double base = starlike_order(f, 0.6);
                      for (int i = 0; i < 10; ++i) {
                        worst = std::max(worst, std::abs(starlike_order(rotate(f, rng.uniform(-kPi, kPi)), 0.6) - base));
                      }
                      return worst;
                    }});
  checks.push_back({"distortion_bounds_hold", "distortion", 0.0, [](PointSampler& rng, std::string& detail) {
                      double violations = 0;
                      for (double alpha : {0.0, 0.25, 0.5, 0.75}) {
                        for (const auto& entry : standard_constructions(alpha)) {
                          if (!entry.star_order || *entry.star_order < alpha) continue;
                          for (int k = 1; k <= 9; ++k) {
                            const double r = 0.1 * k;
                            const auto b = distortion_bounds(r, alpha);
                            for (int j = 0; j < 8; ++j) {
                              const double m = std::abs(eval_map(entry.map, std::polar(r, rng.uniform(-kPi, kPi))));
                              violations += !(m >= b.lower * (1 - 1e-12) && m <= b.upper * (1 + 1e-12));
                            }
                          }
                        }
                      }
                      detail = "samples outside the bounds";
                      return violations;
                    }, true});
  checks.push_back({"distortion_sharpness", "distortion", 1e-8, [](PointSampler&, std::string&) {
                      double worst = 0.0;
                      for (double alpha : {0.0, 0.25, 0.5, 0.75}) {
                        const auto f = from_representation(AF::koebe_alpha(alpha), dilatation_by_name("z"));
                        for (int k = 1; k <= 9; ++k) {
                          const double r = 0.1 * k;
                          const auto b = distortion_bounds(r, alpha);
                          worst = std::max(worst, std::abs(std::abs(eval_map(f, -r)) - b.lower) / b.lower);
                          worst = std::max(worst, std::abs(std::abs(eval_map(f, r)) - b.upper) / b.upper);
                        }
                      }
                      return worst;
                    }});
  checks.push_back({"lambda_conservative", "geometry", 1e-8, [](PointSampler& rng, std::string&) {
                      double worst = 0.0;
                      for (double alpha : {0.0, 0.25, 0.5, 0.75}) {
                        const double r0 = omega_report(alpha).r0;
                        for (const auto& entry : standard_constructions(alpha)) {
                          if (!entry.star_order || *entry.star_order < alpha) continue;
                          for (int i = 0; i < 10; ++i) {
                            const cplx z = rng.next(0.01, r0);
                            worst = std::max(worst, lambda_alpha(std::abs(z), alpha) - psi(entry.map, z));
                          }
                        }
                      }
                      return std::max(worst, 0.0);
                    }});
  checks.push_back({"omega_discrepancy_surfaced", "geometry", 1e-5, [](PointSampler&, std::string& detail) {
                      const auto report = omega_report(0.0);
                      detail = report.discrepancy_flag ? "flag set" : "flag NOT set";
                      const double gap = std::abs(*report.lambda_alt_expression - kReportedOmegaRadius);
                      return report.discrepancy_flag ? gap : 1.0;
                    }});
  checks.push_back({"starlike_about_omega_points", "geometry", 0.0, [](PointSampler&, std::string& detail) {
                      const auto report = omega_report(0.0);
                      const auto f = from_representation(AF::koebe_alpha(0.0), dilatation_by_name("z"));
                      double failures = 0;
                      for (int k = 0; k < 64; ++k) {
                        const cplx w0 = std::polar(0.999 * report.lambda_thm23, 2 * kPi * k / 64);
                        failures += !starlike_wrt_point(f, report.r0, w0, 128);
                      }
                      detail = "centres with a backward-turning radius vector";
                      return failures;
                    }, true});

  // radii
  checks.push_back({"quintic_factorization", "radii", 0.0, [](PointSampler&, std::string&) {
                      const auto product = RealPolynomial({-1.0, 0.0, 1.0}) * RealPolynomial({1.0, 3.0, 9.0, -1.0});
                      const auto q = quintic_coeffs(0.0).coefficients();
                      double worst = 0.0;
                      for (std::size_t i = 0; i < q.size(); ++i) worst = std::max(worst, std::abs(q[i] - product.coefficients()[i]));
                      return worst;
                    }});
  checks.push_back({"cubic_root", "radii", 1e-5, [](PointSampler&, std::string&) {
                      return std::abs(smallest_positive_root(RealPolynomial({1.0, 3.0, 9.0, -1.0})) - 0.10715);
                    }});
  checks.push_back({"alt_form_reported_value", "radii", 1e-5, [](PointSampler&, std::string&) {
                      return std::abs(lambda_alt_cor24(0.10715) - kReportedOmegaRadius);
                    }});
  checks.push_back({"close_to_starlike_continuity", "radii", 1e-4, [](PointSampler&, std::string&) {
                      const double lo = closed_form_radius(RadiusKind::close_to_starlike, 0.5 - 1e-6).closed_form;
                      const double hi = closed_form_radius(RadiusKind::close_to_starlike, 0.5 + 1e-6).closed_form;
                      return std::max(std::abs(lo - 1.0 / 3.0), std::abs(hi - 1.0 / 3.0));
                    }});
  checks.push_back({"back_substitution", "radii", 1e-9, [](PointSampler&, std::string&) {
                      double worst = 0.0;
                      for (double alpha = 0.0; alpha < 0.99; alpha += 0.05) {
                        for (auto kind : {RadiusKind::close_to_starlike, RadiusKind::order_alpha}) {
                          const double rho = closed_form_radius(kind, alpha).closed_form;
                          worst = std::max(worst, std::abs(defining_polynomial_residual(kind, alpha, std::nullopt, rho)));
                        }
                        for (double l = 0.1; l < 0.95; l += 0.2) {
                          for (auto kind : {RadiusKind::q_product, RadiusKind::q_product_order0}) {
                            const double rho = closed_form_radius(kind, alpha, l).closed_form;
                            worst = std::max(worst, std::abs(defining_polynomial_residual(kind, alpha, l, rho)));
                          }
                        }
                      }
                      return worst;
                    }});
  checks.push_back({"q_product_consistency", "radii", 1e-10, [](PointSampler&, std::string&) {
                      double worst = 0.0;
                      for (double l = 0.05; l < 1.0; l += 0.1) {
                        worst = std::max(worst, std::abs(closed_form_radius(RadiusKind::q_product, 0.0, l).closed_form -
                                                         closed_form_radius(RadiusKind::q_product_order0, 0.0, l).closed_form));
                      }
                      const double near_one = 1.0 - 1e-12;
                      for (double alpha = 0.0; alpha < 0.99; alpha += 0.1) {
                        const double cst = closed_form_radius(RadiusKind::close_to_starlike, alpha).closed_form;
                        worst = std::max(worst, std::abs(closed_form_radius(RadiusKind::q_product, alpha, near_one).closed_form - cst));
                        worst = std::max(worst,
                                         std::abs(closed_form_radius(RadiusKind::q_product_order0, alpha, near_one).closed_form - cst));
                      }
                      return worst;
                    }});
  checks.push_back({"q_product_monotone_in_lambda", "radii", 0.0, [](PointSampler&, std::string& detail) {
                      double violations = 0;
                      for (double alpha = 0.0; alpha < 0.99; alpha += 0.1) {
                        double previous = 1.0;
                        for (double l = 0.05; l < 1.0; l += 0.05) {
                          const double rho = closed_form_radius(RadiusKind::q_product, alpha, l).closed_form;
                          violations += !(rho < previous);
                          previous = rho;
                        }
                      }
                      detail = "non-decreasing steps";
                      return violations;
                    }, true});
  checks.push_back({"argmax_matches_quintic", "radii", 1e-4, [](PointSampler&, std::string&) {
                      double worst = 0.0;
                      for (double alpha = 0.0; alpha < 0.99; alpha += 0.05) {
                        worst = std::max(worst, std::abs(argmax_lambda(alpha).r_star - omega_report(alpha).r0));
                      }
                      return worst;
                    }});
  checks.push_back({"numeric_vs_closed_radii", "radii", 1e-4, [](PointSampler&, std::string&) {
                      double worst = 0.0;
                      for (double alpha : {0.0, 0.25, 0.5, 0.75}) {
                        const auto F = close_to_starlike_extremal(alpha);
                        worst = std::max(worst, std::abs(numeric_radius(F, 0.0) -
                                                         closed_form_radius(RadiusKind::close_to_starlike, alpha).closed_form));
                        worst = std::max(worst, std::abs(numeric_radius(F, alpha) -
                                                         closed_form_radius(RadiusKind::order_alpha, alpha).closed_form));
                        for (double l : {0.25, 0.75}) {
                          worst = std::max(worst, std::abs(numeric_radius(q_product_extremal(alpha, l, alpha), 0.0) -
                                                           closed_form_radius(RadiusKind::q_product, alpha, l).closed_form));
                          worst = std::max(worst, std::abs(numeric_radius(q_product_extremal(alpha, l, 0.0), 0.0) -
                                                           closed_form_radius(RadiusKind::q_product_order0, alpha, l).closed_form));
                        }
                      }
                      return worst;
                    }});
  checks.push_back({"not_starlike_beyond_half", "radii", 1e-5, [](PointSampler&, std::string&) {
                      return std::abs(numeric_radius(build_map("identity", "0", "one_minus_z", 0.0), 0.0) - 0.5);
                    }});
  return checks;
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  std::vector<CheckResult> results;
  for (const auto& check : build_checks()) {
    if (!options.filter.empty() && check.name.find(options.filter) == std::string::npos &&
        check.module.find(options.filter) == std::string::npos) {
      continue;
    }
    // Each check draws from its own stream so filtering does not change the samples.
    PointSampler rng(options.seed ^ std::hash<std::string>{}(check.name));
    CheckResult result{check.name, check.module, check.tolerance * options.tolerance_scale, 0.0, false, {}};
    try {
      result.measured = check.measure(rng, result.detail);
      result.pass = check.strict_count ? result.measured == 0.0 : result.measured <= result.tolerance;
    } catch (const std::exception& e) {
      result.detail = std::string("exception: ") + e.what();
      result.pass = false;
    }
    results.push_back(std::move(result));
  }
  return results;
}

}  // namespace logharm
