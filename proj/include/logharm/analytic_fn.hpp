#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace logharm {

using cplx = std::complex<double>;

/// Evaluations are refused outside |z| <= 1 - guard.
inline constexpr double kDefaultGuard = 1e-3;

struct Evaluation {
  cplx value;
  cplx derivative;
};

/// An analytic function on the unit disk with an exact first derivative.
///
/// Instances are immutable handles onto a shared expression tree built from
/// a small catalog of primitives and combinators. Copying is cheap and
/// evaluation is thread-safe.
class AnalyticFunction {
 public:
  enum class Kind {
    identity,
    constant,
    koebe_alpha,
    half_plane_p,
    one_minus_z,
    scaled_identity,
    series,
    product,
    quotient,
    rotated,
    precomposed_rotation,
  };

  /// z
  static AnalyticFunction identity();
  /// c
  static AnalyticFunction constant(cplx c);
  /// z / (1 - z)^(2 - 2 alpha), the extremal of ST(alpha).
  static AnalyticFunction koebe_alpha(double alpha);
  /// (1 + z) / (1 - z)
  static AnalyticFunction half_plane_p();
  /// 1 - z
  static AnalyticFunction one_minus_z();
  /// c z
  static AnalyticFunction scaled_identity(cplx c);
  /// sum_{k < N} c_k z^k for the given coefficients, truncated to N terms.
  static AnalyticFunction series(std::vector<cplx> coefficients, std::size_t truncation);
  static AnalyticFunction series(std::vector<cplx> coefficients);
  static AnalyticFunction product(const AnalyticFunction& f, const AnalyticFunction& g);
  static AnalyticFunction quotient(const AnalyticFunction& f, const AnalyticFunction& g);
  /// e^{i theta} f(e^{-i theta} z). Keeps phi-like functions phi-like.
  static AnalyticFunction rotated(const AnalyticFunction& f, double theta);
  /// f(e^{-i theta} z). Keeps p-like functions p-like and dilatations in B.
  static AnalyticFunction precomposed_rotation(const AnalyticFunction& f, double theta);

  /// Value and derivative without the guard-band check.
  Evaluation eval_unchecked(cplx z) const;
  cplx operator()(cplx z) const { return eval_unchecked(z).value; }

  Kind kind() const;
  std::string describe() const;

  /// phi(0) = 0 and phi'(0) = 1.
  bool vanishes_simply_at_0() const;
  /// p(0) = 1.
  bool unit_at_0() const;

  struct Node;  // expression-tree node, defined in the implementation

 private:
  explicit AnalyticFunction(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Value and exact derivative at z; throws DomainError if |z| > 1 - guard.
Evaluation eval_with_derivative(const AnalyticFunction& fn, cplx z, double guard = kDefaultGuard);

void require_in_guarded_disk(cplx z, double guard);

struct QuadratureOptions {
  double tol = 1e-10;
  int max_panels = 1024;
};

/// \int_0^z integrand(s) ds along the straight segment, i.e.
/// \int_0^1 integrand(t z) z dt, by composite 32-point Gauss-Legendre with
/// panel doubling. Stops when two successive refinements agree to
/// tol * max(1, |I|). Throws ConvergenceError past max_panels.
cplx radial_integral(const std::function<cplx(cplx)>& integrand, cplx z,
                     const QuadratureOptions& options = {});

/// Branch of log(phi(z)/z) that vanishes at the origin, as
/// \int_0^z (phi'(s)/phi(s) - 1/s) ds.
cplx log_quotient_over_z(const AnalyticFunction& phi, cplx z, double guard = kDefaultGuard,
                         const QuadratureOptions& options = {});

/// Exponent of |z|^{2 beta} in the general representation:
/// beta = conj(a0) (1 + a0) / (1 - |a0|^2).
cplx beta_from_a0(cplx a0);

struct GridSpec {
  int radii = 32;
  int angles = 128;
};

/// Sample points r_k e^{i theta_j}, r_k = (1 - guard) k / radii, theta_j = 2 pi j / angles.
std::vector<cplx> disk_grid(const GridSpec& grid, double guard = kDefaultGuard);

/// Second dilatation a in B. Membership is checked by sampling only.
class Dilatation {
 public:
  explicit Dilatation(AnalyticFunction inner, GridSpec grid = {}, double guard = kDefaultGuard);

  const AnalyticFunction& function() const { return inner_; }
  const GridSpec& grid() const { return grid_; }
  double guard() const { return guard_; }
  bool zero_at_origin() const { return zero_at_origin_; }
  cplx operator()(cplx z) const { return inner_(z); }

 private:
  AnalyticFunction inner_;
  GridSpec grid_;
  double guard_;
  bool zero_at_origin_;
};

struct DilatationReport {
  double max_modulus = 0.0;
  bool pass = false;
};

DilatationReport validate_dilatation(const Dilatation& a);

}  // namespace logharm
