#include "logharm/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "logharm/catalog.hpp"
#include "logharm/errors.hpp"
#include "logharm/geometry.hpp"
#include "logharm/radii.hpp"
#include "logharm/verify.hpp"

namespace logharm::cli {

using nlohmann::ordered_json;

double round_significant(double x, int digits) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*g", digits, x);
  return std::strtod(buffer, nullptr);
}

namespace {

struct RunConfig {
  double alpha = 0.0;
  std::optional<double> lambda;
  double r = 0.5;
  double theta = 0.0;
  std::string phi = "koebe_alpha";
  std::string dil = "z";
  std::optional<std::string> p;
  int n = 360;
  std::string format;
  bool check = false;
  std::uint64_t seed = 0;
  std::string out_path;
  std::string kind = "close_to_starlike";
  std::string filter;
  double tol_scale = 1.0;
};

ordered_json number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return nullptr;
  return round_significant(x);
}

ordered_json complex_json(cplx z) { return {{"re", number(z.real())}, {"im", number(z.imag())}}; }

std::string fmt12(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.12g", x);
  return buffer;
}

void add_map_options(CLI::App* app, RunConfig& cfg) {
  app->add_option("--alpha", cfg.alpha, "Order alpha in [0, 1)");
  app->add_option("--phi", cfg.phi, "Starlike generator (see `catalog`)");
  app->add_option("--dil", cfg.dil, "Dilatation (see `catalog`)");
  app->add_option("--p", cfg.p, "Optional positive-real-part factor");
}

class OutputSink {
 public:
  OutputSink(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw std::runtime_error("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

 private:
  std::ofstream file_;
  std::ostream& fallback_;
};

void emit_json(const ordered_json& j, const RunConfig& cfg, std::ostream& out) {
  OutputSink sink(cfg.out_path, out);
  sink.stream() << j.dump(2) << "\n";
}

int cmd_catalog(const RunConfig& cfg, std::ostream& out) {
  const auto items = primitive_catalog();
  if (cfg.format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& item : items) {
      arr.push_back({{"name", item.name}, {"formula", item.formula}, {"role", item.role}, {"classes", item.classes}});
    }
    emit_json(arr, cfg, out);
    return kSuccess;
  }
  OutputSink sink(cfg.out_path, out);
  for (const auto& item : items) {
    sink.stream() << item.role << "\t" << item.name << "\t" << item.formula << "\t" << item.classes << "\n";
  }
  return kSuccess;
}

int cmd_eval(const RunConfig& cfg, std::ostream& out) {
  const auto f = build_map(cfg.phi, cfg.dil, cfg.p, cfg.alpha);
  const cplx z = std::polar(cfg.r, cfg.theta);
  ordered_json j;
  j["map"] = f.label();
  j["z"] = complex_json(z);
  j["value"] = complex_json(eval_map(f, z));
  j["sigma"] = number(sigma(f, z));
  if (z != 0.0) {
    j["jacobian"] = number(jacobian(f, z));
    j["pde_residual"] = number(pde_residual(f, z, 1e-5));
    j["pde_residual_step"] = number(1e-5);
  }
  emit_json(j, cfg, out);
  return kSuccess;
}

int cmd_radius(const RunConfig& cfg, std::ostream& out) {
  const auto kind = radius_kind_from_string(cfg.kind);
  if (!kind) throw DomainError("unknown radius kind '" + cfg.kind + "'");
  auto report = closed_form_radius(*kind, cfg.alpha, cfg.lambda);
  double tolerance = 1e-4;
  if (cfg.check) {
    switch (*kind) {
      case RadiusKind::omega: report.numeric_check = argmax_lambda(cfg.alpha).r_star; break;
      case RadiusKind::close_to_starlike:
        report.numeric_check = numeric_radius(close_to_starlike_extremal(cfg.alpha), 0.0);
        break;
      case RadiusKind::order_alpha:
        report.numeric_check = numeric_radius(close_to_starlike_extremal(cfg.alpha), cfg.alpha);
        break;
      case RadiusKind::q_product:
        report.numeric_check = numeric_radius(q_product_extremal(cfg.alpha, *cfg.lambda, cfg.alpha), 0.0);
        break;
      case RadiusKind::q_product_order0:
        report.numeric_check = numeric_radius(q_product_extremal(cfg.alpha, *cfg.lambda, 0.0), 0.0);
        break;
    }
    report.abs_gap = std::abs(*report.numeric_check - report.closed_form);
  }
  ordered_json j;
  j["kind"] = std::string(to_string(report.kind));
  j["alpha"] = number(report.alpha);
  j["lambda"] = report.lambda_weight ? number(*report.lambda_weight) : ordered_json(nullptr);
  j["closed_form"] = number(report.closed_form);
  if (report.numeric_check) {
    j["numeric_check"] = number(*report.numeric_check);
    j["abs_gap"] = number(*report.abs_gap);
    j["tolerance"] = number(tolerance);
    j["pass"] = *report.abs_gap <= tolerance;
  }
  emit_json(j, cfg, out);
  return report.abs_gap && *report.abs_gap > tolerance ? kFailure : kSuccess;
}

int cmd_omega(const RunConfig& cfg, std::ostream& out) {
  const auto report = omega_report(cfg.alpha);
  ordered_json j;
  j["alpha"] = number(report.alpha);
  j["r0"] = number(report.r0);
  j["lambda_thm23"] = number(report.lambda_thm23);
  j["lambda_alt_expression"] =
      report.lambda_alt_expression ? number(*report.lambda_alt_expression) : ordered_json(nullptr);
  j["paper_reported"] = report.paper_reported ? number(*report.paper_reported) : ordered_json(nullptr);
  j["discrepancy_flag"] = report.discrepancy_flag;
  j["discrepancy_tolerance"] = number(1e-4);
  emit_json(j, cfg, out);
  return kSuccess;
}

void write_svg(const ImageCurve& curve, std::ostream& os) {
  double extent = 0.0;
  for (const auto& s : curve.samples) extent = std::max({extent, std::abs(s.w.real()), std::abs(s.w.imag())});
  extent = extent > 0.0 ? 1.05 * extent : 1.0;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt12(-extent) << " " << fmt12(-extent) << " "
     << fmt12(2 * extent) << " " << fmt12(2 * extent) << "\">\n";
  os << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"" << fmt12(extent / 200) << "\" points=\"";
  for (std::size_t k = 0; k < curve.samples.size(); ++k) {
    if (k) os << ' ';
    // SVG's y axis points down.
    os << fmt12(curve.samples[k].w.real()) << ',' << fmt12(-curve.samples[k].w.imag());
  }
  os << "\"/>\n</svg>\n";
}

int cmd_curve(const RunConfig& cfg, std::ostream& out) {
  const auto f = build_map(cfg.phi, cfg.dil, cfg.p, cfg.alpha);
  const auto curve = image_curve(f, cfg.r, cfg.n);
  const std::string format = cfg.format.empty() ? "csv" : cfg.format;
  if (format == "json") {
    ordered_json j;
    j["map"] = curve.map_id;
    j["r"] = number(curve.r);
    ordered_json samples = ordered_json::array();
    for (const auto& s : curve.samples) samples.push_back({{"theta", number(s.theta)}, {"w", complex_json(s.w)}});
    j["samples"] = samples;
    emit_json(j, cfg, out);
    return kSuccess;
  }
  OutputSink sink(cfg.out_path, out);
  if (format == "svg") {
    write_svg(curve, sink.stream());
  } else {
    sink.stream() << "theta,re,im\n";
    for (const auto& s : curve.samples) {
      sink.stream() << fmt12(s.theta) << ',' << fmt12(s.w.real()) << ',' << fmt12(s.w.imag()) << '\n';
    }
  }
  return kSuccess;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  VerifyOptions options;
  options.seed = cfg.seed;
  options.tolerance_scale = cfg.tol_scale;
  options.filter = cfg.filter;
  const auto results = run_verification(options);
  bool all_pass = !results.empty();
  if (cfg.format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& r : results) {
      arr.push_back({{"name", r.name},
                     {"module", r.module},
                     {"pass", r.pass},
                     {"measured", number(r.measured)},
                     {"tolerance", number(r.tolerance)},
                     {"detail", r.detail}});
      all_pass = all_pass && r.pass;
    }
    emit_json(arr, cfg, out);
  } else {
    OutputSink sink(cfg.out_path, out);
    for (const auto& r : results) {
      sink.stream() << (r.pass ? "PASS " : "FAIL ") << r.module << "/" << r.name << "  measured=" << fmt12(r.measured)
                    << " tol=" << fmt12(r.tolerance);
      if (!r.detail.empty()) sink.stream() << "  (" << r.detail << ")";
      sink.stream() << "\n";
      all_pass = all_pass && r.pass;
    }
    sink.stream() << results.size() << " checks, " << (all_pass ? "all passed" : "FAILURES") << "\n";
  }
  return all_pass ? kSuccess : kFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Starlike logharmonic mappings of order alpha: construction, verification and radii", "logharm"};
  app.require_subcommand(1, 1);
  RunConfig cfg;

  auto* catalog = app.add_subcommand("catalog", "List the phi, p and dilatation primitives");
  catalog->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}));
  catalog->add_option("--out", cfg.out_path);

  auto* eval = app.add_subcommand("eval", "Evaluate a map at z = r e^{i theta}");
  add_map_options(eval, cfg);
  eval->add_option("--r", cfg.r, "Modulus of z");
  eval->add_option("--theta", cfg.theta, "Argument of z");
  eval->add_option("--format", cfg.format)->check(CLI::IsMember({"json"}));
  eval->add_option("--out", cfg.out_path);

  auto* radius = app.add_subcommand("radius", "Closed-form radius of starlikeness");
  radius->add_option("--kind", cfg.kind, "omega|close_to_starlike|order_alpha|q_product|q_product_order0");
  radius->add_option("--alpha", cfg.alpha);
  radius->add_option("--lambda", cfg.lambda);
  radius->add_flag("--check", cfg.check, "Cross-check against a numeric search on the extremal map");
  radius->add_option("--format", cfg.format)->check(CLI::IsMember({"json"}));
  radius->add_option("--out", cfg.out_path);

  auto* omega = app.add_subcommand("omega", "Radius of the disk of admissible star centres");
  omega->add_option("--alpha", cfg.alpha);
  omega->add_option("--format", cfg.format)->check(CLI::IsMember({"json"}));
  omega->add_option("--out", cfg.out_path);

  auto* curve = app.add_subcommand("curve", "Image of |z| = r as CSV, SVG or JSON");
  add_map_options(curve, cfg);
  curve->add_option("--r", cfg.r);
  curve->add_option("--n", cfg.n);
  curve->add_option("--format", cfg.format)->check(CLI::IsMember({"csv", "svg", "json"}));
  curve->add_option("--out", cfg.out_path);

  auto* verify = app.add_subcommand("verify", "Run the invariant suite");
  verify->add_option("--filter", cfg.filter, "Only checks whose name or module contains this text");
  verify->add_option("--seed", cfg.seed);
  verify->add_option("--tol-scale", cfg.tol_scale, "Multiply every tolerance by this factor");
  verify->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", cfg.out_path);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (*catalog) return cmd_catalog(cfg, out);
    if (*eval) return cmd_eval(cfg, out);
    if (*radius) return cmd_radius(cfg, out);
    if (*omega) return cmd_omega(cfg, out);
    if (*curve) return cmd_curve(cfg, out);
    if (*verify) return cmd_verify(cfg, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}

}  // namespace logharm::cli
