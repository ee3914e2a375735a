#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "monolab/monogamy.hpp"

using namespace monolab;

namespace {

// E_ij of the W state from its pair concurrence 2/3, computed directly.
double w_pair_eof() {
  const double x = 0.5 * (1.0 + std::sqrt(1.0 - 4.0 / 9.0));
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

// Independent root of M2 along g1 for (g1, 0, 0, r = 0.5), found offline by
// Brent's method on the closed forms.
constexpr double kCase2HalfRootM2 = 0.33153086561727835;

}  // namespace

TEST_CASE("W state constants") {
  const auto rec = evaluate(WParams{0.0, 1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0});
  CHECK(rec.family == FamilyTag::WClassMes);
  for (double e : {rec.e12, rec.e13, rec.e23}) {
    CHECK(std::abs(e - w_pair_eof()) < 1e-12);
    CHECK(std::abs(e - 0.550048) < 1e-5);
  }
  const double m = 1.0 - 3.0 * w_pair_eof() * w_pair_eof();
  CHECK(std::abs(rec.m1 - m) < 1e-12);
  CHECK(std::abs(rec.m2 - m) < 1e-12);
  CHECK(std::abs(rec.m1 - 0.0923424) < 1e-5);
  CHECK(rec.tau <= 1e-10);
}

TEST_CASE("GHZ and case 1 scores") {
  const auto ghz = evaluate(GhzParams{{0.0, 0.0, 0.0}, 1.0});
  CHECK(ghz.family == FamilyTag::GhzMesAllZero);
  CHECK(ghz.m1 == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(ghz.m2 == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(ghz.tau == doctest::Approx(1.0).epsilon(1e-12));
  const auto half = evaluate(GhzParams{{0.0, 0.0, 0.0}, 0.5});
  CHECK(std::abs(half.m1 - 0.25) < 1e-12);
  CHECK(std::abs(half.m2 - 0.25) < 1e-12);
}

TEST_CASE("record invariants") {
  for (FamilyTag f : kAllFamilies)
    for (const auto& p : sample_family({f, 300, 11})) {
      const auto r = evaluate(p);
      const double pairs = r.e12 * r.e12 + r.e13 * r.e13 + r.e23 * r.e23;
      CHECK(std::abs(r.m1 - (r.e_s * r.e_s - pairs)) <= 1e-12);
      CHECK(std::abs(r.m2 - (r.e_a * r.e_a - pairs)) <= 1e-12);
      CHECK(r.family == f);
    }
}

TEST_CASE("verdicts flip with the score sign") {
  CHECK(verdict_of(0.0) == Verdict::Satisfied);
  CHECK(verdict_of(-1e-13) == Verdict::Satisfied);
  CHECK(verdict_of(-1e-11) == Verdict::Violated);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(1e-11, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double s = u(rng);
    CHECK(verdict_of(s) == Verdict::Satisfied);
    CHECK(verdict_of(-s) == Verdict::Violated);
  }
  CHECK(to_string(Verdict::Satisfied) == "Satisfied");
  CHECK(to_string(Verdict::Violated) == "Violated");
}

TEST_CASE("scores are invariant under qubit relabelling") {
  for (FamilyTag f : {FamilyTag::GhzGeneric, FamilyTag::GhzMesNonzero, FamilyTag::GhzTwoNonzero,
                      FamilyTag::GhzOneNonzero})
    for (const auto& p : sample_family({f, 300, 23})) {
      const auto base = evaluate(p);
      auto q = std::get<GhzParams>(p);
      std::sort(q.g.begin(), q.g.end());
      do {
        const auto r = evaluate(q);
        CHECK(std::abs(r.m1 - base.m1) <= 1e-12);
        CHECK(std::abs(r.m2 - base.m2) <= 1e-12);
      } while (std::next_permutation(q.g.begin(), q.g.end()));
    }
}

TEST_CASE("evaluate rejects invalid parameters") {
  CHECK_THROWS_AS(evaluate(GhzParams{{0.6, 0.0, 0.0}, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(evaluate(WParams{0.1, 0.1, 0.1, 0.1}), std::invalid_argument);
}

TEST_CASE("preset axes and parameters") {
  CHECK(scan_cases().size() == 10);
  for (const auto& id : scan_cases()) {
    const auto axes = preset_axes(id, {5});
    std::vector<double> mid;
    for (const auto& a : axes) {
      CHECK(a.points == 5);
      CHECK(a.at(0) == a.lo);
      CHECK(a.at(4) == a.hi);
      mid.push_back(a.at(2));
    }
    CHECK_NOTHROW(preset_params(id, mid));
  }
  CHECK_THROWS_AS(preset_axes("case9"), std::invalid_argument);
  CHECK_THROWS_AS(preset_axes("case1", {1}), std::invalid_argument);
  const std::array<double, 2> c{0.1, 0.3};
  CHECK(preset_params("case3", c, {3, 0.7}).r() == doctest::Approx(0.7));
  CHECK(std::abs(preset_params("appendixD3", c).z - Complex{0.3, 0.3}) == 0.0);
  CHECK(std::abs(preset_params("appendixD1", c).z - Complex{0.0, 0.3}) == 0.0);
  CHECK_THROWS_AS(preset_params("case2", std::span<const double>(c.data(), 1)), std::invalid_argument);
}

TEST_CASE("case 1 scan is exact and satisfied") {
  const auto scan = scan_region("case1", {101});
  REQUIRE(scan.cells.size() == 101);
  for (const auto& cell : scan.cells) {
    const double r = cell.coords[0];
    CHECK(std::abs(cell.record.m1 - r * r) <= 1e-12);
    CHECK(std::abs(cell.record.m2 - r * r) <= 1e-12);
    CHECK(cell.record.verdict1() == Verdict::Satisfied);
    CHECK(cell.record.verdict2() == Verdict::Satisfied);
  }
}

TEST_CASE("scan ordering is row-major and cells re-evaluate exactly") {
  const ScanOptions opt{41, 0.5};
  const auto scan = scan_region("case2", opt);
  REQUIRE(scan.cells.size() == 41 * 41);
  CHECK(scan.cells[1].coords[0] == scan.cells[0].coords[0]);
  CHECK(scan.cells[1].coords[1] > scan.cells[0].coords[1]);
  CHECK(scan.cells[41].coords[0] > scan.cells[0].coords[0]);
  std::mt19937_64 rng(100);
  std::uniform_int_distribution<std::size_t> pick(0, scan.cells.size() - 1);
  for (int i = 0; i < 100; ++i) {
    const auto& cell = scan.cells[pick(rng)];
    const auto again = evaluate(preset_params("case2", cell.coords, opt));
    CHECK(std::abs(again.m1 - cell.record.m1) <= 1e-12);
    CHECK(std::abs(again.m2 - cell.record.m2) <= 1e-12);
  }
}

TEST_CASE("case 2 at r = 1 changes verdict near 0.28") {
  const auto scan = scan_region("case2-r1");
  for (const auto& cell : scan.cells) {
    const double g = cell.coords[0];
    if (g < 0.27) CHECK(cell.record.verdict1() == Verdict::Satisfied);
    if (g > 0.29) CHECK(cell.record.verdict1() == Verdict::Violated);
  }
  const double root = find_boundary("case2-r1", {}, Score::M1);
  CHECK(std::abs(root - 0.28) <= 0.005);
  // At r = 1 the two scores coincide, so the boundaries do too.
  CHECK(std::abs(find_boundary("case2-r1", {}, Score::M2) - root) <= 1e-6);
  CHECK(evaluate(GhzParams{{0.20, 0.0, 0.0}, 1.0}).m1 > 0.0);
  CHECK(evaluate(GhzParams{{0.40, 0.0, 0.0}, 1.0}).m1 < 0.0);
}

TEST_CASE("boundary search: regression root and failure modes") {
  const std::array<double, 1> r{0.5};
  CHECK(std::abs(find_boundary("case2", r, Score::M2) - kCase2HalfRootM2) <= 1e-6);
  CHECK_THROWS_AS(find_boundary("case2", r, Score::M1), std::domain_error);
  CHECK_THROWS_AS(find_boundary("case1", {}, Score::M1), std::domain_error);
  CHECK_THROWS_AS(find_boundary("case2", {}, Score::M1), std::invalid_argument);
}

TEST_CASE("batch evaluation is deterministic and summarized") {
  const SampleSpec spec{FamilyTag::GhzGeneric, 2000, 7};
  const auto a = batch_evaluate(spec);
  const auto b = batch_evaluate(spec);
  REQUIRE(a.records.size() == 2000);
  CHECK(a.summary.n == 2000);
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].m1 == b.records[i].m1);
    CHECK(a.records[i].m2 == b.records[i].m2);
  }
  double lo = 1e9;
  std::size_t v2 = 0;
  for (const auto& r : a.records) {
    lo = std::min(lo, r.m1);
    v2 += r.m2 < -kVerdictTol;
  }
  CHECK(a.summary.min_m1 == lo);
  CHECK(a.summary.fraction_m2_violated == doctest::Approx(static_cast<double>(v2) / 2000.0));
  CHECK(a.summary.min_m1 >= -1e-9);
  CHECK(a.summary.fraction_m2_violated >= 0.9);
  CHECK(summarize({}).n == 0);
}
