#include "logharm/logharmonic_map.hpp"

#include <cmath>
#include <sstream>

#include "logharm/errors.hpp"

namespace logharm {

namespace {

constexpr double kSameDilatationTol = 1e-10;
constexpr double kWeightSumTol = 1e-12;

void require_positive_real_part(const AnalyticFunction& p, const Dilatation& a) {
  if (!p.unit_at_0()) throw DomainError("p-factor must satisfy p(0) = 1");
  for (const cplx z : disk_grid(a.grid(), a.guard())) {
    if (!(p(z).real() > 0.0)) {
      throw DomainError("p-factor " + p.describe() + " has Re p <= 0 on the validation grid");
    }
  }
}

bool same_dilatation(const Dilatation& a, const Dilatation& b) {
  for (const cplx z : disk_grid(a.grid(), a.guard())) {
    if (std::abs(a(z) - b(z)) > kSameDilatationTol) return false;
  }
  return std::abs(a(0.0) - b(0.0)) <= kSameDilatationTol;
}

}  // namespace

LogharmonicMap::LogharmonicMap(std::vector<StarFactor> star_factors, std::vector<PFactor> p_factors,
                               Dilatation dilatation, std::string label, QuadratureOptions quadrature)
    : star_factors_(std::move(star_factors)),
      p_factors_(std::move(p_factors)),
      dilatation_(std::move(dilatation)),
      label_(std::move(label)),
      quadrature_(quadrature) {
  if (!dilatation_.zero_at_origin()) throw DomainError("dilatation must vanish at origin");
  for (const auto& s : star_factors_) {
    if (!std::isfinite(s.weight)) throw DomainError("star factor weight must be finite");
    if (!s.phi.vanishes_simply_at_0()) {
      throw DomainError("star factor " + s.phi.describe() + " is not normalized (phi(0)=0, phi'(0)=1)");
    }
  }
  for (const auto& p : p_factors_) {
    if (!std::isfinite(p.weight)) throw DomainError("p-factor weight must be finite");
  }
  if (std::abs(star_weight_sum() - 1.0) > kWeightSumTol) {
    std::ostringstream os;
    os << "star weights must sum to 1 (got " << star_weight_sum() << ")";
    throw DomainError(os.str());
  }
}

LogharmonicMap LogharmonicMap::with_label(std::string label) const {
  LogharmonicMap copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

double LogharmonicMap::star_weight_sum() const {
  double sum = 0.0;
  for (const auto& s : star_factors_) sum += s.weight;
  return sum;
}

cplx LogharmonicMap::analytic_log_derivative(cplx z) const {
  cplx total = 0.0;
  for (const auto& s : star_factors_) {
    const auto e = s.phi.eval_unchecked(z);
    total += s.weight * z * e.derivative / e.value;
  }
  for (const auto& p : p_factors_) {
    const auto e = p.p.eval_unchecked(z);
    total += p.weight * z * e.derivative / e.value;
  }
  return total;
}

LogharmonicMap from_representation(const AnalyticFunction& phi, const Dilatation& a) {
  if (!a.zero_at_origin()) throw DomainError("dilatation must vanish at origin");
  return LogharmonicMap({{phi, 1.0}}, {}, a, "rep(" + phi.describe() + ")");
}

LogharmonicMap k_kernel(const Dilatation& a) {
  return from_representation(AnalyticFunction::identity(), a).with_label("K");
}

LogharmonicMap weighted_product(std::span<const WeightedMap> factors) {
  if (factors.empty()) throw DomainError("weighted_product needs at least one factor");
  const Dilatation& a = factors.front().first.dilatation();
  std::vector<StarFactor> stars;
  std::vector<PFactor> ps;
  std::string label;
  for (const auto& [map, weight] : factors) {
    if (!same_dilatation(a, map.dilatation())) {
      throw DomainError("weighted_product members must share the same dilatation");
    }
    for (const auto& s : map.star_factors()) stars.push_back({s.phi, s.weight * weight});
    for (const auto& p : map.p_factors()) ps.push_back({p.p, p.weight * weight});
    std::ostringstream os;
    os << (label.empty() ? "" : "*") << map.label() << "^" << weight;
    label += os.str();
  }
  return LogharmonicMap(std::move(stars), std::move(ps), a, label, factors.front().first.quadrature());
}

LogharmonicMap weighted_product(std::initializer_list<WeightedMap> factors) {
  return weighted_product(std::span<const WeightedMap>(factors.begin(), factors.size()));
}

LogharmonicMap close_to_starlike(const LogharmonicMap& f, const AnalyticFunction& p) {
  if (!f.p_factors().empty()) throw DomainError("close_to_starlike expects a map with star factors only");
  require_positive_real_part(p, f.dilatation());
  auto ps = f.p_factors();
  ps.push_back({p, 1.0});
  return LogharmonicMap(f.star_factors(), std::move(ps), f.dilatation(),
                        f.label() + "*R(" + p.describe() + ")", f.quadrature());
}

LogharmonicMap rotate(const LogharmonicMap& f, double theta) {
  std::vector<StarFactor> stars;
  std::vector<PFactor> ps;
  for (const auto& s : f.star_factors()) stars.push_back({AnalyticFunction::rotated(s.phi, theta), s.weight});
  for (const auto& p : f.p_factors()) {
    ps.push_back({AnalyticFunction::precomposed_rotation(p.p, theta), p.weight});
  }
  const Dilatation& a = f.dilatation();
  Dilatation turned(AnalyticFunction::precomposed_rotation(a.function(), theta), a.grid(), a.guard());
  std::ostringstream os;
  os << "rot(" << f.label() << "," << theta << ")";
  return LogharmonicMap(std::move(stars), std::move(ps), std::move(turned), os.str(), f.quadrature());
}

cplx eval_map(const LogharmonicMap& f, cplx z) {
  require_in_guarded_disk(z, f.guard());
  if (z == 0.0) return f.star_factors().empty() ? cplx(1.0) : cplx(0.0);

  cplx log_modulus_phase = 0.0;
  for (const auto& s : f.star_factors()) {
    log_modulus_phase += s.weight * log_quotient_over_z(s.phi, z, f.guard(), f.quadrature());
  }
  for (const auto& p : f.p_factors()) log_modulus_phase += p.weight * std::log(p.p(z));

  // One integral for all the 2 Re I / 2 Re J terms: the integrand is
  // a/(1-a) times the weighted analytic log-derivative.
  const Dilatation& a = f.dilatation();
  const cplx t = radial_integral(
      [&f, &a](cplx s) {
        const cplx as = a(s);
        return as / (1.0 - as) * f.analytic_log_derivative(s) / s;
      },
      z, f.quadrature());
  return z * std::exp(log_modulus_phase + 2.0 * t.real());
}

WirtingerRatios wirtinger_analytic(const LogharmonicMap& f, cplx z) {
  require_in_guarded_disk(z, f.guard());
  if (z == 0.0) throw DomainError("wirtinger_analytic is undefined at z = 0");
  const cplx analytic = f.analytic_log_derivative(z);
  const cplx as = f.dilatation()(z);
  const cplx z_t_prime = as / (1.0 - as) * analytic;
  return {analytic + z_t_prime, std::conj(z_t_prime)};
}

WirtingerPair wirtinger_fd(const std::function<cplx(cplx)>& f, cplx z, double h, double guard) {
  if (!(h > 0.0)) throw DomainError("finite-difference step must be positive");
  if (std::abs(z) + h > 1.0 - guard) throw DomainError("finite-difference stencil leaves the guarded disk");
  const cplx ih(0.0, h);
  const cplx fx = (f(z + h) - f(z - h)) / (2.0 * h);
  const cplx fy = (f(z + ih) - f(z - ih)) / (2.0 * h);
  const cplx i(0.0, 1.0);
  return {(fx - i * fy) / 2.0, (fx + i * fy) / 2.0};
}

double pde_residual(const LogharmonicMap& f, cplx z, double h, const AnalyticFunction& a) {
  if (z == 0.0) throw DomainError("pde_residual is undefined at z = 0");
  const cplx value = eval_map(f, z);
  if (value == 0.0) throw DomainError("pde_residual evaluated at a zero of f");
  const auto d = wirtinger_fd([&f](cplx w) { return eval_map(f, w); }, z, h, f.guard());
  return std::abs(std::conj(d.fzbar) / std::conj(value) - a(z) * d.fz / value);
}

double pde_residual(const LogharmonicMap& f, cplx z, double h) {
  return pde_residual(f, z, h, f.dilatation().function());
}

double jacobian(const LogharmonicMap& f, cplx z) {
  if (z == 0.0) throw DomainError("jacobian is evaluated off the origin");
  const auto ratios = wirtinger_analytic(f, z);
  const cplx fz = eval_map(f, z) * ratios.zfz_over_f / z;
  return std::norm(fz) * (1.0 - std::norm(f.dilatation()(z)));
}

}  // namespace logharm
