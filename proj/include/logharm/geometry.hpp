#pragma once

#include <optional>
#include <string>
#include <vector>

#include "logharm/logharmonic_map.hpp"

namespace logharm {

/// Starlikeness density Re[(z f_z - conj(z) f_zbar) / f], i.e. d arg f(r e^{it}) / dt.
/// At z = 0 returns the limit, the sum of the star weights.
double sigma(const LogharmonicMap& f, cplx z);

struct CircleMinimum {
  double value = 0.0;
  double theta = 0.0;
};

/// Minimum of sigma on |z| = r: n-point scan over (-pi, pi] followed by
/// golden-section refinement over the neighbouring cells.
CircleMinimum min_sigma_on_circle(const LogharmonicMap& f, double r, int n = 512);

/// Largest alpha with f starlike of order alpha on |z| <= r, sampled on 32
/// geometrically spaced radii in [1e-3 r, r].
double starlike_order(const LogharmonicMap& f, double r, int n = 512);

/// First radius where min sigma on |z| = r drops to `threshold`, to 1e-6.
/// Returns 1 - guard when no crossing is found.
double numeric_radius(const LogharmonicMap& f, double threshold, int n = 512);

struct DistortionBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// Two-sided bound on |f(z)|, |z| = r, for f in ST_Lh(alpha) with a(0) = 0:
///   r/(1+r)^{2a} exp(-4(1-a) r/(1+r)) <= |f| <= r/(1-r)^{2a} exp(4(1-a) r/(1-r)).
DistortionBounds distortion_bounds(double r, double alpha);

/// |f|^2 sigma / |z f_z - conj(z) f_zbar|. Infinite where the denominator vanishes.
double psi(const LogharmonicMap& f, cplx z);

/// Lower estimate of psi over ST_Lh(alpha) on |z| = r.
double lambda_alpha(double r, double alpha);

/// r exp(-4 r (1-r)^3 / (1+r)^4), the alternative alpha = 0 expression.
double lambda_alt_cor24(double r);

inline constexpr double kReportedOmegaRadius = 8.7462e-2;

struct OmegaReport {
  double alpha = 0.0;
  double r0 = 0.0;
  double lambda_thm23 = 0.0;
  std::optional<double> lambda_alt_expression;
  std::optional<double> paper_reported;
  bool discrepancy_flag = false;
};

OmegaReport omega_report(double alpha);

/// True iff Re[(f(z) - w0) / (z f_z - conj(z) f_zbar)] > 0 at n points of |z| = r.
bool starlike_wrt_point(const LogharmonicMap& f, double r, cplx w0, int n = 256);

struct CurveSample {
  double theta;
  cplx w;
};

struct ImageCurve {
  double r = 0.0;
  std::vector<CurveSample> samples;
  std::string map_id;
};

/// f(r e^{i theta}) with theta_k = -pi + 2 pi (k+1)/n, k = 0..n-1.
ImageCurve image_curve(const LogharmonicMap& f, double r, int n);

/// Total change of arg w along the closed curve, and the number of sign
/// changes of the angular speed between consecutive samples.
struct WindingSummary {
  double total_turn = 0.0;
  int backward_steps = 0;
};
WindingSummary winding(const ImageCurve& curve);

}  // namespace logharm
