#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "logharm/logharmonic_map.hpp"

namespace logharm {

struct PrimitiveInfo {
  std::string name;
  std::string formula;
  std::string role;     // "phi", "p" or "dilatation"
  std::string classes;  // e.g. "ST(alpha)", "P", "B"
};

/// Every named primitive the CLI accepts.
std::vector<PrimitiveInfo> primitive_catalog();

/// Named lookups; alpha parametrizes the koebe family. Throw DomainError for unknown names.
AnalyticFunction phi_by_name(std::string_view name, double alpha);
AnalyticFunction p_by_name(std::string_view name);
Dilatation dilatation_by_name(std::string_view name);

/// from_representation(phi, a), optionally made close-to-starlike with p.
LogharmonicMap build_map(std::string_view phi, std::string_view dil, std::optional<std::string_view> p,
                         double alpha);

/// Extremal of F = f R for the radius kinds: koebe_alpha(alpha) times (1+z)/(1-z), a = 0.
LogharmonicMap close_to_starlike_extremal(double alpha);
/// F^lambda f*^{1-lambda} with F as above and f* = koebe_alpha(order) (order = alpha or 0).
LogharmonicMap q_product_extremal(double alpha, double lambda, double star_order);

struct CatalogEntry {
  std::string name;
  LogharmonicMap map;
  /// Order alpha for which the map is known to lie in ST_Lh(alpha); empty
  /// for close-to-starlike composites.
  std::optional<double> star_order;
};

/// The fixed set of constructions exercised by the verification suite.
std::vector<CatalogEntry> standard_constructions(double alpha);

}  // namespace logharm
