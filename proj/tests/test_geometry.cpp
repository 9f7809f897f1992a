#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "logharm/catalog.hpp"
#include "logharm/errors.hpp"
#include "logharm/geometry.hpp"

using namespace logharm;
using AF = AnalyticFunction;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;
const Dilatation kAnalytic{AF::constant(0.0)};
const Dilatation kAz{AF::identity()};

LogharmonicMap identity_map() { return from_representation(AF::identity(), kAnalytic); }
LogharmonicMap z_times_one_minus_z() { return close_to_starlike(identity_map(), AF::one_minus_z()); }

double koebe_min_sigma(double r, double alpha) { return alpha + (1.0 - alpha) * (1.0 - r) / (1.0 + r); }

}  // namespace

TEST_CASE("sigma") {
  CHECK(sigma(identity_map(), {0.4, 0.4}) == Approx(1.0));
  CHECK(sigma(identity_map(), 0.0) == 1.0);
  for (double alpha : {0.0, 0.5}) {
    const auto f = from_representation(AF::koebe_alpha(alpha), kAz);
    for (double r : {0.2, 0.7}) CHECK(sigma(f, -r) == Approx(koebe_min_sigma(r, alpha)).epsilon(1e-13));
  }
  const auto g = z_times_one_minus_z();
  for (double r : {0.25, 0.5, 0.8}) CHECK(sigma(g, r) == Approx((1 - 2 * r) / (1 - r)).epsilon(1e-13));
  CHECK(std::abs(sigma(g, 0.5)) < 1e-15);
}

TEST_CASE("min_sigma_on_circle") {
  const auto id = min_sigma_on_circle(identity_map(), 0.6);
  CHECK(id.value == Approx(1.0));

  const double r = 2.0 - std::sqrt(3.0);
  const auto extremal = min_sigma_on_circle(close_to_starlike_extremal(0.0), r);
  CHECK(std::abs(extremal.value) < 1e-12);
  CHECK(std::abs(std::abs(extremal.theta) - kPi) < 1e-6);

  for (double alpha : {0.0, 0.4, 0.8}) {
    const auto f = from_representation(AF::koebe_alpha(alpha), kAz);
    for (double radius : {0.1, 0.5, 0.95}) {
      CHECK(min_sigma_on_circle(f, radius).value == Approx(koebe_min_sigma(radius, alpha)).epsilon(1e-12));
    }
  }
  // The minimum does not have to be on the real axis: a rotated map moves it.
  const auto spun = rotate(from_representation(AF::koebe_alpha(0.2), kAz), 1.0);
  const auto m = min_sigma_on_circle(spun, 0.5);
  CHECK(m.theta == Approx(1.0 - kPi).epsilon(1e-6));
  CHECK(m.value == Approx(koebe_min_sigma(0.5, 0.2)).epsilon(1e-12));
  CHECK_THROWS_AS(min_sigma_on_circle(identity_map(), 1.0), DomainError);
}

TEST_CASE("starlike_order") {
  CHECK(starlike_order(identity_map(), 0.9) == Approx(1.0));
  const auto f = from_representation(AF::koebe_alpha(0.3), kAz);
  const double near_boundary = starlike_order(f, 1.0 - kDefaultGuard);
  CHECK(near_boundary > 0.3);
  CHECK(near_boundary < 0.3 + 1e-3);
  CHECK(std::abs(starlike_order(z_times_one_minus_z(), 0.5)) < 1e-12);

  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> t(-kPi, kPi);
  const auto g = close_to_starlike(f, AF::half_plane_p());
  const double base = starlike_order(g, 0.6);
  for (int i = 0; i < 10; ++i) CHECK(std::abs(starlike_order(rotate(g, t(rng)), 0.6) - base) < 1e-8);
}

TEST_CASE("numeric_radius") {
  CHECK(numeric_radius(identity_map(), 0.0) == 1.0 - kDefaultGuard);
  CHECK(std::abs(numeric_radius(z_times_one_minus_z(), 0.0) - 0.5) < 1e-5);
  CHECK(std::abs(numeric_radius(close_to_starlike_extremal(0.0), 0.0) - (2.0 - std::sqrt(3.0))) < 1e-4);
  // threshold above sigma(0) is a degenerate request
  CHECK_THROWS_AS(numeric_radius(identity_map(), 1.0), DomainError);
}

TEST_CASE("distortion_bounds") {
  const auto zero = distortion_bounds(0.0, 0.3);
  CHECK(zero.lower == 0.0);
  CHECK(zero.upper == 0.0);
  const auto half = distortion_bounds(0.5, 0.0);
  CHECK(half.lower == Approx(0.131798569057863385).epsilon(1e-14));
  CHECK(half.upper == Approx(27.2990750165721195).epsilon(1e-14));
  for (double alpha : {0.0, 0.5}) {
    const auto f0 = from_representation(AF::koebe_alpha(alpha), kAz);
    for (double r : {0.3, 0.6}) {
      const auto b = distortion_bounds(r, alpha);
      CHECK(std::abs(std::abs(eval_map(f0, -r)) - b.lower) <= 1e-8 * b.lower);
      CHECK(std::abs(std::abs(eval_map(f0, r)) - b.upper) <= 1e-8 * b.upper);
    }
  }
  CHECK_THROWS_AS(distortion_bounds(1.0, 0.0), DomainError);
}

TEST_CASE("psi") {
  CHECK(psi(identity_map(), std::polar(0.3, 2.0)) == Approx(0.3));
  // K with a = z: psi = |K| / |1 + 2i Im(z/(1-z))|.
  const auto k = k_kernel(kAz);
  CHECK(psi(k, 0.5) == Approx(2.0).epsilon(1e-12));
  CHECK(psi(k, {0.0, 0.5}) == Approx(0.312347523777212131).epsilon(1e-12));

  const double r0 = 0.10715;
  const auto f0 = from_representation(AF::koebe_alpha(0.0), kAz);
  const double value = psi(f0, -r0);
  CHECK(std::isfinite(value));
  CHECK(value >= lambda_alpha(r0, 0.0));
}

TEST_CASE("lambda_alpha and the alternative form") {
  CHECK(lambda_alpha(1e-12, 0.3) < 1e-11);
  CHECK(lambda_alpha(0.10715, 0.0) == Approx(0.0381578744907264862).epsilon(1e-12));
  CHECK(lambda_alpha(0.154700538379251529, 0.5) == Approx(0.0549206981365817332).epsilon(1e-12));
  CHECK(std::abs(lambda_alt_cor24(0.10715) - 8.7462e-2) < 1e-5);
  CHECK(lambda_alt_cor24(1e-12) < 1e-11);
  CHECK(std::abs(lambda_alt_cor24(0.10715) - lambda_alpha(0.10715, 0.0)) > 4e-2);
}

TEST_CASE("omega_report") {
  const auto zero = omega_report(0.0);
  CHECK(std::abs(zero.r0 - 0.10715) < 1e-5);
  REQUIRE(zero.lambda_alt_expression);
  CHECK(std::abs(*zero.lambda_alt_expression - 8.7462e-2) < 1e-5);
  CHECK(zero.discrepancy_flag);

  const auto half = omega_report(0.5);
  CHECK(half.r0 == Approx((-3.0 + 2.0 * std::sqrt(3.0)) / 3.0).epsilon(1e-9));
  CHECK_FALSE(half.paper_reported);
  CHECK_FALSE(half.discrepancy_flag);

  const auto late = omega_report(0.99);
  CHECK(late.r0 > 0.0);
  CHECK(late.r0 < 1.0);
  CHECK(late.lambda_thm23 > 0.0);
}

TEST_CASE("starlike_wrt_point") {
  const auto f0 = from_representation(AF::koebe_alpha(0.0), kAz);
  CHECK(starlike_wrt_point(f0, 0.5, 0.0));
  const auto report = omega_report(0.0);
  for (int k = 0; k < 64; ++k) {
    CHECK(starlike_wrt_point(f0, report.r0, std::polar(0.99 * report.lambda_thm23, 2 * kPi * k / 64)));
  }
  CHECK_FALSE(starlike_wrt_point(z_times_one_minus_z(), 0.9, 0.0));
  // A centre outside the image cannot be a star centre.
  CHECK_FALSE(starlike_wrt_point(identity_map(), 0.3, 0.5));
}

TEST_CASE("image_curve") {
  const auto id = image_curve(identity_map(), 0.5, 4);
  REQUIRE(id.samples.size() == 4);
  const cplx expected[] = {{0.0, -0.5}, {0.5, 0.0}, {0.0, 0.5}, {-0.5, 0.0}};
  for (int k = 0; k < 4; ++k) CHECK(std::abs(id.samples[k].w - expected[k]) < 1e-15);

  const auto f0 = from_representation(AF::koebe_alpha(0.0), kAz);
  const auto curve = image_curve(f0, 0.3, 360);
  for (std::size_t k = 1; k < curve.samples.size(); ++k) CHECK(curve.samples[k].theta > curve.samples[k - 1].theta);
  CHECK(curve.samples.back().theta == Approx(kPi));
  CHECK(std::abs(curve.samples.back().w - eval_map(f0, std::polar(0.3, -kPi))) < 1e-8);

  const auto lobe = winding(image_curve(z_times_one_minus_z(), 0.7, 720));
  CHECK(lobe.total_turn == Approx(2 * kPi));
  CHECK(lobe.backward_steps > 0);
  CHECK(winding(curve).backward_steps == 0);
  CHECK_THROWS_AS(image_curve(identity_map(), 0.5, 3), DomainError);
}
