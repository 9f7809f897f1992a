#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "logharm/analytic_fn.hpp"

namespace logharm {

struct StarFactor {
  AnalyticFunction phi;  // phi(0) = 0, phi'(0) = 1
  double weight = 1.0;
};

struct PFactor {
  AnalyticFunction p;  // p(0) = 1, Re p > 0
  double weight = 1.0;
};

/// A logharmonic mapping stored in log-space:
///
///   f(z) = z exp( sum_i w_i [log(phi_i/z) + 2 Re I_i] ) exp( sum_j v_j [Log p_j + 2 Re J_j] )
///
/// with I_i = \int_0^z a phi_i' / ((1 - a) phi_i) and J_j = \int_0^z a p_j' / ((1 - a) p_j).
/// The star weights sum to 1, so the lone z factor is never raised to a
/// power and every weighted product stays single-valued.
class LogharmonicMap {
 public:
  LogharmonicMap(std::vector<StarFactor> star_factors, std::vector<PFactor> p_factors,
                 Dilatation dilatation, std::string label = "map",
                 QuadratureOptions quadrature = {});

  const std::vector<StarFactor>& star_factors() const { return star_factors_; }
  const std::vector<PFactor>& p_factors() const { return p_factors_; }
  const Dilatation& dilatation() const { return dilatation_; }
  const std::string& label() const { return label_; }
  const QuadratureOptions& quadrature() const { return quadrature_; }
  double guard() const { return dilatation_.guard(); }

  LogharmonicMap with_label(std::string label) const;

  /// sum_i w_i z phi_i'/phi_i + sum_j v_j z p_j'/p_j, the analytic part of z f_z / f.
  cplx analytic_log_derivative(cplx z) const;

  double star_weight_sum() const;

 private:
  std::vector<StarFactor> star_factors_;
  std::vector<PFactor> p_factors_;
  Dilatation dilatation_;
  std::string label_;
  QuadratureOptions quadrature_;
};

/// f = phi exp(2 Re \int_0^z a phi' / ((1 - a) phi)). Requires a(0) = 0.
LogharmonicMap from_representation(const AnalyticFunction& phi, const Dilatation& a);

/// K = z exp(2 Re \int_0^z a / ((1 - a) s) ds); the starlikeness density of K is 1.
LogharmonicMap k_kernel(const Dilatation& a);

using WeightedMap = std::pair<LogharmonicMap, double>;

/// prod f_k^{w_k}, with the branch fixed by the log-space representation.
/// All members must share the dilatation and the expanded star weights must sum to 1.
LogharmonicMap weighted_product(std::span<const WeightedMap> factors);
LogharmonicMap weighted_product(std::initializer_list<WeightedMap> factors);

/// F = f R with R = p exp(2 Re \int_0^z a p' / ((1 - a) p)) sharing f's dilatation.
LogharmonicMap close_to_starlike(const LogharmonicMap& f, const AnalyticFunction& p);

/// z -> e^{i theta} f(e^{-i theta} z).
LogharmonicMap rotate(const LogharmonicMap& f, double theta);

cplx eval_map(const LogharmonicMap& f, cplx z);

struct WirtingerRatios {
  cplx zfz_over_f;
  cplx zbar_fzbar_over_f;
};

/// Exact z f_z / f and conj(z) f_zbar / f from the representation. z != 0.
WirtingerRatios wirtinger_analytic(const LogharmonicMap& f, cplx z);

struct WirtingerPair {
  cplx fz;
  cplx fzbar;
};

/// Central differences: f_z = (f_x - i f_y)/2, f_zbar = (f_x + i f_y)/2.
WirtingerPair wirtinger_fd(const std::function<cplx(cplx)>& f, cplx z, double h,
                           double guard = kDefaultGuard);

/// |conj(f_zbar)/conj(f) - a f_z / f| with finite-difference derivatives.
double pde_residual(const LogharmonicMap& f, cplx z, double h = 1e-5);
/// Same, but checked against `a` rather than the map's own dilatation.
double pde_residual(const LogharmonicMap& f, cplx z, double h, const AnalyticFunction& a);

/// |f_z|^2 (1 - |a|^2).
double jacobian(const LogharmonicMap& f, cplx z);

}  // namespace logharm
