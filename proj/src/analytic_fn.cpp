#include "logharm/analytic_fn.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "logharm/errors.hpp"

namespace logharm {

struct AnalyticFunction::Node {
  Kind kind;
  double real_param = 0.0;  // alpha, or theta for rotations
  cplx complex_param{};     // constant / scale
  std::vector<cplx> coefficients;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

using Node = AnalyticFunction::Node;

Evaluation eval_node(const Node& n, cplx z) {
  using K = AnalyticFunction::Kind;
  switch (n.kind) {
    case K::identity:
      return {z, 1.0};
    case K::constant:
      return {n.complex_param, 0.0};
    case K::koebe_alpha: {
      // (1-z)^{-(2-2a)} via the principal log; Re(1-z) > 0 on the disk.
      const double exponent = 2.0 - 2.0 * n.real_param;
      const cplx w = 1.0 - z;
      const cplx power = std::exp(-exponent * std::log(w));
      return {z * power, power * (1.0 + exponent * z / w)};
    }
    case K::half_plane_p: {
      const cplx w = 1.0 - z;
      return {(1.0 + z) / w, 2.0 / (w * w)};
    }
    case K::one_minus_z:
      return {1.0 - z, -1.0};
    case K::scaled_identity:
      return {n.complex_param * z, n.complex_param};
    case K::series: {
      cplx value = 0.0;
      cplx derivative = 0.0;
      for (auto it = n.coefficients.rbegin(); it != n.coefficients.rend(); ++it) {
        derivative = derivative * z + value;
        value = value * z + *it;
      }
      return {value, derivative};
    }
    case K::product: {
      const auto f = eval_node(*n.lhs, z);
      const auto g = eval_node(*n.rhs, z);
      return {f.value * g.value, f.derivative * g.value + f.value * g.derivative};
    }
    case K::quotient: {
      const auto f = eval_node(*n.lhs, z);
      const auto g = eval_node(*n.rhs, z);
      return {f.value / g.value, (f.derivative * g.value - f.value * g.derivative) / (g.value * g.value)};
    }
    case K::rotated: {
      const cplx turn = std::polar(1.0, n.real_param);
      const auto f = eval_node(*n.lhs, z / turn);
      return {turn * f.value, f.derivative};
    }
    case K::precomposed_rotation: {
      const cplx turn = std::polar(1.0, n.real_param);
      const auto f = eval_node(*n.lhs, z / turn);
      return {f.value, f.derivative / turn};
    }
  }
  return {};
}


std::string fmt_cplx(cplx c) {
  std::ostringstream os;
  os.precision(6);
  if (c.imag() == 0.0) {
    os << c.real();
  } else {
    os << "(" << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)";
  }
  return os.str();
}

std::string describe_node(const Node& n) {
  using K = AnalyticFunction::Kind;
  std::ostringstream os;
  switch (n.kind) {
    case K::identity: return "z";
    case K::constant: return fmt_cplx(n.complex_param);
    case K::koebe_alpha: os << "koebe_alpha(" << n.real_param << ")"; return os.str();
    case K::half_plane_p: return "(1+z)/(1-z)";
    case K::one_minus_z: return "1-z";
    case K::scaled_identity: return fmt_cplx(n.complex_param) + "*z";
    case K::series: os << "series[" << n.coefficients.size() << "]"; return os.str();
    case K::product: return describe_node(*n.lhs) + "*" + describe_node(*n.rhs);
    case K::quotient: return describe_node(*n.lhs) + "/(" + describe_node(*n.rhs) + ")";
    case K::rotated: os << "rot(" << describe_node(*n.lhs) << "," << n.real_param << ")"; return os.str();
    case K::precomposed_rotation:
      os << describe_node(*n.lhs) << "@rot(" << n.real_param << ")";
      return os.str();
  }
  return "?";
}

std::shared_ptr<const Node> make_node(AnalyticFunction::Kind kind, double real_param = 0.0, cplx complex_param = {},
                                      std::vector<cplx> coefficients = {}, std::shared_ptr<const Node> lhs = nullptr,
                                      std::shared_ptr<const Node> rhs = nullptr) {
  Node node{kind, real_param, complex_param, std::move(coefficients), std::move(lhs), std::move(rhs)};
  return std::make_shared<const Node>(std::move(node));
}

}  // namespace

AnalyticFunction AnalyticFunction::identity() {
  return AnalyticFunction(make_node(Kind::identity));
}

AnalyticFunction AnalyticFunction::constant(cplx c) {
  return AnalyticFunction(make_node(Kind::constant, 0.0, c));
}

AnalyticFunction AnalyticFunction::koebe_alpha(double alpha) {
  if (!std::isfinite(alpha) || alpha >= 1.0) {
    throw DomainError("koebe_alpha requires a finite alpha < 1");
  }
  return AnalyticFunction(make_node(Kind::koebe_alpha, alpha));
}

AnalyticFunction AnalyticFunction::half_plane_p() {
  return AnalyticFunction(make_node(Kind::half_plane_p));
}

AnalyticFunction AnalyticFunction::one_minus_z() {
  return AnalyticFunction(make_node(Kind::one_minus_z));
}

AnalyticFunction AnalyticFunction::scaled_identity(cplx c) {
  return AnalyticFunction(make_node(Kind::scaled_identity, 0.0, c));
}

AnalyticFunction AnalyticFunction::series(std::vector<cplx> coefficients, std::size_t truncation) {
  if (coefficients.size() > truncation) coefficients.resize(truncation);
  if (coefficients.empty()) coefficients.push_back(0.0);
  return AnalyticFunction(
      make_node(Kind::series, 0.0, {}, std::move(coefficients)));
}

AnalyticFunction AnalyticFunction::series(std::vector<cplx> coefficients) {
  const auto n = coefficients.size();
  return series(std::move(coefficients), n);
}

AnalyticFunction AnalyticFunction::product(const AnalyticFunction& f, const AnalyticFunction& g) {
  return AnalyticFunction(
      make_node(Kind::product, 0.0, {}, {}, f.node_, g.node_));
}

AnalyticFunction AnalyticFunction::quotient(const AnalyticFunction& f, const AnalyticFunction& g) {
  return AnalyticFunction(
      make_node(Kind::quotient, 0.0, {}, {}, f.node_, g.node_));
}

AnalyticFunction AnalyticFunction::rotated(const AnalyticFunction& f, double theta) {
  return AnalyticFunction(
      make_node(Kind::rotated, theta, {}, {}, f.node_, nullptr));
}

AnalyticFunction AnalyticFunction::precomposed_rotation(const AnalyticFunction& f, double theta) {
  return AnalyticFunction(make_node(Kind::precomposed_rotation, theta, {}, {}, f.node_, nullptr));
}

Evaluation AnalyticFunction::eval_unchecked(cplx z) const { return eval_node(*node_, z); }

AnalyticFunction::Kind AnalyticFunction::kind() const { return node_->kind; }

std::string AnalyticFunction::describe() const { return describe_node(*node_); }

bool AnalyticFunction::vanishes_simply_at_0() const {
  const auto e = eval_unchecked(0.0);
  return std::abs(e.value) < 1e-12 && std::abs(e.derivative - 1.0) < 1e-12;
}

bool AnalyticFunction::unit_at_0() const { return std::abs(eval_unchecked(0.0).value - 1.0) < 1e-12; }

void require_in_guarded_disk(cplx z, double guard) {
  if (!(std::abs(z) <= 1.0 - guard)) {
    std::ostringstream os;
    os << "point " << fmt_cplx(z) << " lies outside |z| <= " << 1.0 - guard;
    throw DomainError(os.str());
  }
}

Evaluation eval_with_derivative(const AnalyticFunction& fn, cplx z, double guard) {
  require_in_guarded_disk(z, guard);
  return fn.eval_unchecked(z);
}

namespace {

struct GaussRule {
  std::array<double, 32> nodes{};  // on [0, 1]
  std::array<double, 32> weights{};
};

const GaussRule& gauss32() {
  static const GaussRule rule = [] {
    using boost::math::quadrature::gauss;
    const auto& x = gauss<double, 32>::abscissa();
    const auto& w = gauss<double, 32>::weights();
    GaussRule r;
    std::size_t k = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      r.nodes[k] = 0.5 * (1.0 - x[i]);
      r.weights[k++] = 0.5 * w[i];
      r.nodes[k] = 0.5 * (1.0 + x[i]);
      r.weights[k++] = 0.5 * w[i];
    }
    return r;
  }();
  return rule;
}

cplx composite_sum(const std::function<cplx(cplx)>& integrand, cplx z, int panels) {
  const auto& rule = gauss32();
  const double width = 1.0 / panels;
  cplx total = 0.0;
  for (int p = 0; p < panels; ++p) {
    cplx panel = 0.0;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      const double t = (p + rule.nodes[k]) * width;
      panel += rule.weights[k] * integrand(t * z);
    }
    total += panel;
  }
  return total * width * z;
}

}  // namespace

cplx radial_integral(const std::function<cplx(cplx)>& integrand, cplx z, const QuadratureOptions& options) {
  if (z == 0.0) return 0.0;
  cplx coarse = composite_sum(integrand, z, 1);
  for (int panels = 2; panels <= options.max_panels; panels *= 2) {
    const cplx fine = composite_sum(integrand, z, panels);
    if (std::abs(fine - coarse) < options.tol * std::max(1.0, std::abs(fine))) return fine;
    coarse = fine;
  }
  throw ConvergenceError("radial_integral: tolerance not reached within panel budget");
}

cplx log_quotient_over_z(const AnalyticFunction& phi, cplx z, double guard, const QuadratureOptions& options) {
  require_in_guarded_disk(z, guard);
  if (!phi.vanishes_simply_at_0()) {
    throw DomainError("log_quotient_over_z requires phi(0) = 0, phi'(0) = 1");
  }
  if (phi.kind() == AnalyticFunction::Kind::identity) return 0.0;
  return radial_integral(
      [&phi](cplx s) {
        const auto e = phi.eval_unchecked(s);
        return e.derivative / e.value - 1.0 / s;
      },
      z, options);
}

cplx beta_from_a0(cplx a0) {
  const double m2 = std::norm(a0);
  if (!(m2 < 1.0)) throw DomainError("beta_from_a0 requires |a(0)| < 1");
  return std::conj(a0) * (1.0 + a0) / (1.0 - m2);
}

std::vector<cplx> disk_grid(const GridSpec& grid, double guard) {
  std::vector<cplx> points;
  points.reserve(static_cast<std::size_t>(grid.radii) * grid.angles);
  for (int k = 1; k <= grid.radii; ++k) {
    const double r = (1.0 - guard) * k / grid.radii;
    for (int j = 0; j < grid.angles; ++j) {
      points.push_back(std::polar(r, 2.0 * std::numbers::pi * j / grid.angles));
    }
  }
  return points;
}

Dilatation::Dilatation(AnalyticFunction inner, GridSpec grid, double guard)
    : inner_(std::move(inner)),
      grid_(grid),
      guard_(guard),
      zero_at_origin_(std::abs(inner_(0.0)) < 1e-12) {}

DilatationReport validate_dilatation(const Dilatation& a) {
  DilatationReport report;
  report.max_modulus = std::abs(a(0.0));
  for (const cplx z : disk_grid(a.grid(), a.guard())) {
    report.max_modulus = std::max(report.max_modulus, std::abs(a(z)));
  }
  report.pass = report.max_modulus < 1.0;
  return report;
}

}  // namespace logharm
