#include "logharm/catalog.hpp"

#include <numbers>
#include <sstream>

#include "logharm/errors.hpp"

namespace logharm {

namespace {

using AF = AnalyticFunction;

std::string with_alpha(const std::string& name, double alpha) {
  std::ostringstream os;
  os << name << "(" << alpha << ")";
  return os.str();
}

}  // namespace

std::vector<PrimitiveInfo> primitive_catalog() {
  return {
      {"identity", "z", "phi", "ST(alpha) for every alpha in [0,1)"},
      {"koebe_alpha", "z/(1-z)^(2-2alpha)", "phi", "ST(alpha)"},
      {"koebe_alpha_reflected", "z/(1+z)^(2-2alpha)", "phi", "ST(alpha)"},
      {"quadratic", "z + z^2/5", "phi", "ST(alpha) for alpha < 3/4"},
      {"one", "1", "p", "P"},
      {"half_plane_p", "(1+z)/(1-z)", "p", "P"},
      {"half_plane_p_reflected", "(1-z)/(1+z)", "p", "P"},
      {"one_minus_z", "1-z", "p", "P"},
      {"a=0", "0", "dilatation", "B, a(0)=0"},
      {"a=z", "z", "dilatation", "B, a(0)=0"},
      {"a=z/2", "z/2", "dilatation", "B, a(0)=0"},
      {"a=z^2", "z^2", "dilatation", "B, a(0)=0"},
      {"a=1/2", "1/2", "dilatation", "B, a(0)!=0 (not constructible)"},
  };
}

AnalyticFunction phi_by_name(std::string_view name, double alpha) {
  if (name == "identity") return AF::identity();
  if (name == "koebe_alpha") return AF::koebe_alpha(alpha);
  if (name == "koebe_alpha_reflected") return AF::rotated(AF::koebe_alpha(alpha), std::numbers::pi);
  if (name == "quadratic") return AF::series({0.0, 1.0, 0.2});
  throw DomainError("unknown phi '" + std::string(name) + "'");
}

AnalyticFunction p_by_name(std::string_view name) {
  if (name == "one") return AF::constant(1.0);
  if (name == "half_plane_p") return AF::half_plane_p();
  if (name == "half_plane_p_reflected") return AF::precomposed_rotation(AF::half_plane_p(), std::numbers::pi);
  if (name == "one_minus_z") return AF::one_minus_z();
  throw DomainError("unknown p '" + std::string(name) + "'");
}

Dilatation dilatation_by_name(std::string_view name) {
  if (name.starts_with("a=")) name.remove_prefix(2);
  if (name == "0" || name == "zero") return Dilatation(AF::constant(0.0));
  if (name == "z") return Dilatation(AF::identity());
  if (name == "z/2" || name == "half_z") return Dilatation(AF::scaled_identity(0.5));
  if (name == "z^2" || name == "z_squared") return Dilatation(AF::series({0.0, 0.0, 1.0}));
  if (name == "1/2" || name == "const_half") return Dilatation(AF::constant(0.5));
  throw DomainError("unknown dilatation '" + std::string(name) + "'");
}

LogharmonicMap build_map(std::string_view phi, std::string_view dil, std::optional<std::string_view> p,
                         double alpha) {
  auto f = from_representation(phi_by_name(phi, alpha), dilatation_by_name(dil));
  if (p) f = close_to_starlike(f, p_by_name(*p));
  return f;
}

LogharmonicMap close_to_starlike_extremal(double alpha) {
  const Dilatation analytic(AF::constant(0.0));
  return close_to_starlike(from_representation(AF::koebe_alpha(alpha), analytic), AF::half_plane_p())
      .with_label(with_alpha("cst_extremal", alpha));
}

LogharmonicMap q_product_extremal(double alpha, double lambda, double star_order) {
  const Dilatation analytic(AF::constant(0.0));
  const auto f_star = from_representation(AF::koebe_alpha(star_order), analytic);
  return weighted_product({{close_to_starlike_extremal(alpha), lambda}, {f_star, 1.0 - lambda}});
}

std::vector<CatalogEntry> standard_constructions(double alpha) {
  std::vector<CatalogEntry> out;
  const char* dils[] = {"0", "z", "z/2", "z^2"};
  out.push_back({"identity", from_representation(AF::identity(), dilatation_by_name("0")), 1.0});
  for (const char* d : dils) {
    const auto a = dilatation_by_name(d);
    out.push_back({with_alpha("koebe_alpha", alpha) + ",a=" + d, from_representation(AF::koebe_alpha(alpha), a),
                   alpha});
    out.push_back({std::string("quadratic,a=") + d, from_representation(phi_by_name("quadratic", alpha), a), 0.75});
  }
  for (const char* d : {"z", "z/2", "z^2"}) {
    out.push_back({std::string("K,a=") + d, k_kernel(dilatation_by_name(d)), 1.0});
  }
  const auto a = dilatation_by_name("z");
  out.push_back({with_alpha("rotated_koebe", alpha), rotate(from_representation(AF::koebe_alpha(alpha), a), 0.7),
                 alpha});
  // f in ST_Lh(0) shifted to order alpha with the kernel.
  const auto f0 = from_representation(AF::koebe_alpha(0.0), a);
  out.push_back({with_alpha("order_shift", alpha), weighted_product({{f0, 1.0 - alpha}, {k_kernel(a), alpha}}),
                 alpha});
  const auto cst = close_to_starlike(from_representation(AF::koebe_alpha(alpha), a), AF::half_plane_p());
  out.push_back({with_alpha("close_to_starlike", alpha), cst, std::nullopt});
  out.push_back({with_alpha("q_product", alpha),
                 weighted_product({{cst, 0.5}, {from_representation(AF::koebe_alpha(alpha), a), 0.5}}),
                 std::nullopt});
  return out;
}

}  // namespace logharm
