#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "monolab/operational.hpp"

using namespace monolab;

namespace {

GhzParams ghz(double g1, double g2, double g3, Complex z) { return {{g1, g2, g3}, z}; }

struct VolumePoint {
  GhzParams p;
  double want;
};

const std::array<VolumePoint, 3> kSourcePoints{{
    {ghz(0.0, 0.0, 0.0, 0.25), 0.75},
    {ghz(0.25, 0.0, 0.0, 0.5), 0.125},
    {ghz(0.1, 0.2, 0.0, 0.5), 0.01},
}};

const std::array<VolumePoint, 3> kAccessiblePoints{{
    {ghz(0.0, 0.0, 0.0, 0.5), 0.375},
    {ghz(0.25, 0.0, 0.0, 0.5), 0.125},
    {ghz(0.1, 0.2, 0.0, 1.0), 0.12},
}};

}  // namespace

TEST_CASE("f_z") {
  CHECK(f_z(1.0) == 1.0);
  CHECK(f_z(Complex{0.5, 0.5}) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(std::abs(f_z(0.5) - 0.470588) < 1e-6);
  CHECK(f_z(Complex{0.0, 1.0}) == 1.0);
  CHECK_THROWS_AS(f_z(0.0), std::invalid_argument);
}

TEST_CASE("source bracket endpoints and gradient") {
  CHECK(source_bracket(0.0) == 1.0);
  CHECK(std::abs(source_bracket(1.0)) <= 1e-12);
  CHECK(std::abs(source_bracket(1e-12) - 1.0) < 1e-9);
  constexpr double h = 1e-5;
  for (int i = 1; i <= 9; ++i) {
    const double f = 0.1 * i;
    const double fd = (source_bracket(f + h) - source_bracket(f - h)) / (2.0 * h);
    const double l = std::log(f);
    const double want = -0.5 * l * l;
    CHECK(std::abs(fd - want) <= 1e-6 * std::abs(want));
  }
  double prev = source_bracket(0.0);
  for (int i = 1; i <= 1000; ++i) {
    const double cur = source_bracket(i / 1000.0);
    CHECK(cur <= prev);
    prev = cur;
  }
}

TEST_CASE("source entanglement examples") {
  CHECK(source_entanglement(ghz(0, 0, 0, 0.5)) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(source_entanglement(ghz(0.25, 0, 0, 1.0)) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(source_entanglement(ghz(0.25, 0.25, 0.25, Complex{0.5, 0.5})) == doctest::Approx(0.875).epsilon(1e-14));
  CHECK(source_entanglement(WParams{0.5, 0.2, 0.2, 0.1}) == doctest::Approx(0.875).epsilon(1e-15));
  // Case 2 just below r = 1 keeps the open-interval formula.
  CHECK(source_entanglement(ghz(0.25, 0, 0, 0.999)) == doctest::Approx(1.0 - 0.5 * 0.001).epsilon(1e-14));
  CHECK(source_entanglement(ghz(0.1, 0.2, 0, 0.5)) == doctest::Approx(1.0 - 0.08 * 0.5).epsilon(1e-14));
  CHECK(source_entanglement(ghz(0.1, 0.2, 0, 1.0)) == doctest::Approx(1.0 - 0.08).epsilon(1e-14));
  CHECK(source_entanglement(ghz(0.1, 0.2, 0.3, 1.0)) == 1.0);
  CHECK(source_entanglement(ghz(0, 0, 0, -1.0)) == 1.0);
}

TEST_CASE("accessible entanglement examples") {
  CHECK(accessible_entanglement(ghz(0, 0, 0, 0.5)) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(accessible_entanglement(ghz(0.25, 0, 0, 0.5)) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(accessible_entanglement(WParams{0.0, 1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0}) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(accessible_entanglement(ghz(0.25, 0.25, 0.25, 1.0)) == doctest::Approx(0.015625).epsilon(1e-15));
  CHECK(accessible_entanglement(ghz(0, 0.1, 0.2, 0.5)) == doctest::Approx(4 * 0.4 * 0.3 * 0.5).epsilon(1e-14));
  CHECK(accessible_entanglement(ghz(0, 0.1, 0.2, 1.0)) == doctest::Approx(4 * 0.4 * 0.3).epsilon(1e-14));
}

TEST_CASE("operational pair stays in [0, 1] on every family") {
  for (FamilyTag f : kAllFamilies)
    for (const auto& rec : sample_family({f, 5000, 17})) {
      const auto op = operational_pair(rec);
      CHECK(op.e_s >= -1e-12);
      CHECK(op.e_s <= 1.0 + 1e-12);
      CHECK(op.e_a >= -1e-12);
      CHECK(op.e_a <= 1.0 + 1e-12);
    }
}

TEST_CASE("generic source entanglement brackets") {
  for (const auto& rec : sample_family({FamilyTag::GhzGeneric, 2000, 3})) {
    const auto& p = std::get<GhzParams>(rec);
    const double lo = 1.0 - 8.0 * p.g[0] * p.g[1] * p.g[2];
    const double e = source_entanglement(rec);
    CHECK(e >= lo - 1e-15);
    CHECK(e <= 1.0 + 1e-15);
  }
}

TEST_CASE("locc convertibility examples") {
  const auto p = ghz(0.1, 0.2, 0.3, Complex{0.3, 0.4});
  CHECK(locc_convertible(p, p));
  CHECK(locc_convertible(ghz(0.2, 0, 0, 0.8), ghz(0.25, 0, 0, 0.5)));
  CHECK_FALSE(locc_convertible(ghz(0.25, 0, 0, 0.8), ghz(0.2, 0.3, 0.4, Complex{0.1, 0.7})));
  CHECK_FALSE(locc_convertible(ghz(0.25, 0, 0, 0.8), ghz(0.2, 0.3, 0.4, 1.0)));
  CHECK_FALSE(locc_convertible(ghz(0, 0.1, 0.2, 1.0), ghz(0.1, 0.2, 0.3, std::polar(0.7, std::numbers::pi / 3))));
  CHECK(locc_convertible(ghz(0, 0.1, 0.2, 1.0), ghz(0.1, 0.2, 0.3, std::polar(0.7, std::numbers::pi / 4))));
  CHECK(locc_convertible(ghz(0, 0.1, 0.2, -1.0), ghz(0.1, 0.2, 0.3, std::polar(0.2, -std::numbers::pi / 4))));
  CHECK_FALSE(locc_convertible(ghz(0, 0.1, 0.2, 0.9), ghz(0.1, 0.2, 0.3, std::polar(0.7, std::numbers::pi / 4))));
  // Target with a vanishing slot needs r >= r'.
  CHECK_FALSE(locc_convertible(ghz(0.2, 0, 0, 0.4), ghz(0.25, 0, 0, 0.5)));
  // Dominance fails in one slot.
  CHECK_FALSE(locc_convertible(ghz(0.3, 0.2, 0.1, 0.5), ghz(0.2, 0.3, 0.2, 0.5)));
}

TEST_CASE("locc convertibility is reflexive on the all-nonzero stratum") {
  for (FamilyTag f : {FamilyTag::GhzGeneric, FamilyTag::GhzMesNonzero})
    for (const auto& rec : sample_family({f, 2000, 9})) {
      const auto& p = std::get<GhzParams>(rec);
      CHECK(locc_convertible(p, p));
    }
}

TEST_CASE("locc convertibility is transitive on sampled chains") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> pattern(0, 3);
  auto random_ghz = [&](int zeros) {
    GhzParams p;
    for (int i = zeros; i < 3; ++i) p.g[static_cast<std::size_t>(i)] = 0.5 * u(rng);
    p.z = std::polar(1.0 - u(rng), 2.0 * std::numbers::pi * u(rng));
    return p;
  };
  // Push a state upward: larger g on every nonzero slot, smaller radius.
  auto push = [&](const GhzParams& p, bool keep_zeros) {
    GhzParams q = p;
    for (auto& g : q.g)
      if (g > 0.0 || !keep_zeros) g += (0.5 - g) * u(rng) * 0.999;
    q.z = p.z * (1.0 - u(rng) * 0.999);
    return q;
  };
  int chains = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int zeros = 1 + pattern(rng) % 3;
    const GhzParams a = random_ghz(zeros);
    const bool random_links = trial % 4 == 0;
    const GhzParams b = random_links ? random_ghz(zeros) : push(a, true);
    const GhzParams c = random_links ? random_ghz(zeros) : push(b, true);
    if (locc_convertible(a, b) && locc_convertible(b, c)) {
      ++chains;
      CHECK(locc_convertible(a, c));
    }
  }
  CHECK(chains >= 500);
  // Chains ending in the all-nonzero stratum through a unit-radius source.
  for (int trial = 0; trial < 200; ++trial) {
    GhzParams a = random_ghz(1);
    a.z = 1.0;
    GhzParams b = push(a, false);
    b.z = std::polar(1.0 - u(rng), std::numbers::pi / 4);
    const GhzParams c = b;
    CHECK(locc_convertible(a, b));
    CHECK(locc_convertible(b, c));
    CHECK(locc_convertible(a, c));
  }
}

TEST_CASE("volume estimators match the closed-form test points") {
  constexpr std::size_t n = 1000000;
  for (const auto& pt : kSourcePoints) {
    const auto est = estimate_source_volume(pt.p, n, 42);
    CHECK(est.n == n);
    CHECK(est.std_error > 0.0);
    CHECK(std::abs(est.mean - pt.want) <= 4.0 * est.std_error);
  }
  for (const auto& pt : kAccessiblePoints) {
    const auto est = estimate_accessible_volume(pt.p, n, 42);
    CHECK(std::abs(est.mean - pt.want) <= 4.0 * est.std_error);
  }
}

TEST_CASE("volume estimators: closed forms across the strata") {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 12; ++trial) {
    const double g1 = 0.02 + 0.46 * u(rng);
    const double g2 = 0.02 + 0.46 * u(rng);
    const double r = 0.05 + 0.9 * u(rng);
    const auto s = estimate_source_volume(ghz(g1, g2, 0, r), 200000, trial);
    CHECK(std::abs(s.mean - g1 * g2 * (1 - r)) <= 4.0 * s.std_error);
    const auto a = estimate_accessible_volume(ghz(g1, 0, 0, r), 200000, trial);
    CHECK(std::abs(a.mean - (0.5 - g1) * r) <= 4.0 * a.std_error);
  }
}

TEST_CASE("volume estimators converge and are reproducible") {
  for (const auto& pt : kSourcePoints) {
    const auto a = estimate_source_volume(pt.p, 100000, 7);
    const auto b = estimate_source_volume(pt.p, 200000, 7);
    CHECK(std::abs(a.mean - b.mean) <= 6.0 * a.std_error);
    const auto c = estimate_source_volume(pt.p, 100000, 7);
    CHECK(a.mean == c.mean);
    CHECK(a.std_error == c.std_error);
  }
  for (const auto& pt : kAccessiblePoints) {
    const auto a = estimate_accessible_volume(pt.p, 100000, 7);
    const auto b = estimate_accessible_volume(pt.p, 200000, 7);
    CHECK(std::abs(a.mean - b.mean) <= 6.0 * a.std_error);
  }
}

TEST_CASE("volume estimators reject unsupported input") {
  CHECK_THROWS_AS(estimate_source_volume(ghz(0.1, 0.2, 0.3, 0.5), 10, 1), std::invalid_argument);
  CHECK_THROWS_AS(estimate_accessible_volume(ghz(0, 0, 0, 1.0), 10, 1), std::invalid_argument);
  CHECK_THROWS_AS(estimate_source_volume(ghz(0, 0, 0, 0.5), 0, 1), std::invalid_argument);
}
