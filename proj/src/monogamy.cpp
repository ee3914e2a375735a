#include "monolab/monogamy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace monolab {

namespace {

constexpr double kGridEdge = 1e-4;
constexpr double kBisectionWidth = 1e-6;

double sum_sq(double a, double b, double c) { return a * a + b * b + c * c; }

GridAxis g_axis(std::string name, std::size_t n) { return {std::move(name), kGridEdge, 0.5 - kGridEdge, n}; }
GridAxis unit_axis(std::string name, std::size_t n) { return {std::move(name), kGridEdge, 1.0 - kGridEdge, n}; }

[[noreturn]] void unknown_case(std::string_view case_id) {
  throw std::invalid_argument("unknown scan case: " + std::string(case_id));
}

}  // namespace

Verdict verdict_of(double score) { return score >= -kVerdictTol ? Verdict::Satisfied : Verdict::Violated; }

std::string_view to_string(Verdict v) { return v == Verdict::Satisfied ? "Satisfied" : "Violated"; }

MeasureRecord evaluate(const ParamRecord& params) {
  MeasureRecord rec;
  rec.params = params;
  rec.family = classify(params);
  const PureState3Q state = build_state(params);

  rec.c = reduced_pair_concurrences(state);
  const ConcurrenceTriple closed = closed_form_concurrences(params);
  const double gap = ConcurrenceTriple::max_deviation(rec.c, closed);
  if (!(gap <= kOracleMismatchTol))
    throw std::logic_error("closed-form concurrence disagrees with the numeric pipeline by " + std::to_string(gap));

  rec.e12 = eof_from_concurrence(rec.c.c12);
  rec.e13 = eof_from_concurrence(rec.c.c13);
  rec.e23 = eof_from_concurrence(rec.c.c23);
  rec.tau = tangle(state);
  rec.c3 = generalized_concurrence(state);

  const OperationalPair op = operational_pair(params);
  rec.e_s = op.e_s;
  rec.e_a = op.e_a;
  const double pairs = sum_sq(rec.e12, rec.e13, rec.e23);
  rec.m1 = rec.e_s * rec.e_s - pairs;
  rec.m2 = rec.e_a * rec.e_a - pairs;
  return rec;
}

double GridAxis::at(std::size_t i) const {
  if (points < 2) return lo;
  if (i + 1 == points) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
}

const std::vector<std::string>& scan_cases() {
  static const std::vector<std::string> cases{"case1",      "case2",       "case2-r1",    "case3",
                                              "case3-r1",   "appendixB",   "appendixD1",  "appendixD2",
                                              "appendixD3", "appendixE"};
  return cases;
}

std::vector<GridAxis> preset_axes(std::string_view case_id, const ScanOptions& options) {
  const std::size_t n = options.resolution;
  if (n < 2) throw std::invalid_argument("grid resolution must be at least 2");
  if (case_id == "case1") return {unit_axis("r", n)};
  if (case_id == "case2") return {g_axis("g1", n), unit_axis("r", n)};
  if (case_id == "case2-r1") return {g_axis("g1", n)};
  if (case_id == "case3" || case_id == "case3-r1") return {g_axis("g1", n), g_axis("g2", n)};
  if (case_id == "appendixB") return {g_axis("g", n), unit_axis("r", n)};
  if (case_id == "appendixD1") return {g_axis("g", n), {"y", kGridEdge, 1.0, n}};
  if (case_id == "appendixD2") return {g_axis("g", n), unit_axis("x", n)};
  if (case_id == "appendixD3") return {g_axis("g", n), {"y", kGridEdge, 1.0 / std::sqrt(2.0), n}};
  if (case_id == "appendixE") return {g_axis("g", n)};
  unknown_case(case_id);
}

GhzParams preset_params(std::string_view case_id, std::span<const double> c, const ScanOptions& options) {
  const auto need = [&](std::size_t k) {
    if (c.size() != k) throw std::invalid_argument("case " + std::string(case_id) + " takes " + std::to_string(k) +
                                                   " coordinates, got " + std::to_string(c.size()));
  };
  GhzParams p;
  if (case_id == "case1") {
    need(1);
    p.z = c[0];
  } else if (case_id == "case2") {
    need(2);
    p.g = {c[0], 0.0, 0.0};
    p.z = c[1];
  } else if (case_id == "case2-r1") {
    need(1);
    p.g = {c[0], 0.0, 0.0};
  } else if (case_id == "case3") {
    need(2);
    p.g = {c[0], c[1], 0.0};
    p.z = options.r_slice;
  } else if (case_id == "case3-r1") {
    need(2);
    p.g = {c[0], c[1], 0.0};
  } else if (case_id == "appendixB") {
    need(2);
    p.g = {c[0], c[0], 0.0};
    p.z = c[1];
  } else if (case_id == "appendixD1") {
    need(2);
    p.g = {c[0], c[0], c[0]};
    p.z = Complex{0.0, c[1]};
  } else if (case_id == "appendixD2") {
    need(2);
    p.g = {c[0], c[0], c[0]};
    p.z = c[1];
  } else if (case_id == "appendixD3") {
    need(2);
    p.g = {c[0], c[0], c[0]};
    p.z = Complex{c[1], c[1]};
  } else if (case_id == "appendixE") {
    need(1);
    p.g = {c[0], c[0], c[0]};
  } else {
    unknown_case(case_id);
  }
  p.validate();
  return p;
}

ScanResult scan_region(std::string_view case_id, const ScanOptions& options) {
  ScanResult out;
  out.case_id = std::string(case_id);
  out.axes = preset_axes(case_id, options);

  std::size_t total = 1;
  for (const auto& a : out.axes) total *= a.points;
  out.cells.reserve(total);

  std::vector<double> coords(out.axes.size());
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rest = flat;
    for (std::size_t k = out.axes.size(); k-- > 0;) {
      coords[k] = out.axes[k].at(rest % out.axes[k].points);
      rest /= out.axes[k].points;
    }
    out.cells.push_back({coords, evaluate(preset_params(case_id, coords, options))});
  }
  return out;
}

double find_boundary(std::string_view case_id, std::span<const double> fixed, Score which,
                     const ScanOptions& options) {
  const auto axes = preset_axes(case_id, options);
  if (fixed.size() + 1 != axes.size())
    throw std::invalid_argument("case " + std::string(case_id) + " needs " + std::to_string(axes.size() - 1) +
                                " fixed coordinate(s)");
  std::vector<double> coords(axes.size());
  std::copy(fixed.begin(), fixed.end(), coords.begin() + 1);
  const auto score_at = [&](double x) {
    coords[0] = x;
    return evaluate(preset_params(case_id, coords, options)).score(which);
  };

  const GridAxis& axis = axes[0];
  double lo = axis.at(0);
  double f_lo = score_at(lo);
  for (std::size_t i = 1; i < axis.points; ++i) {
    double hi = axis.at(i);
    const double f_hi = score_at(hi);
    if ((f_lo < 0.0) == (f_hi < 0.0)) {
      lo = hi;
      f_lo = f_hi;
      continue;
    }
    while (hi - lo >= kBisectionWidth) {
      const double mid = 0.5 * (lo + hi);
      const double f_mid = score_at(mid);
      if ((f_mid < 0.0) == (f_lo < 0.0)) {
        lo = mid;
        f_lo = f_mid;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  }
  throw std::domain_error("no sign change of the score along " + axis.name + " for case " + std::string(case_id));
}

BatchSummary summarize(std::span<const MeasureRecord> records) {
  BatchSummary s;
  s.n = records.size();
  if (records.empty()) return s;
  constexpr double inf = std::numeric_limits<double>::infinity();
  s.min_m1 = s.min_m2 = inf;
  s.max_m1 = s.max_m2 = -inf;
  std::size_t v1 = 0;
  std::size_t v2 = 0;
  for (const auto& r : records) {
    s.min_m1 = std::min(s.min_m1, r.m1);
    s.max_m1 = std::max(s.max_m1, r.m1);
    s.min_m2 = std::min(s.min_m2, r.m2);
    s.max_m2 = std::max(s.max_m2, r.m2);
    v1 += r.verdict1() == Verdict::Violated;
    v2 += r.verdict2() == Verdict::Violated;
  }
  s.fraction_m1_violated = static_cast<double>(v1) / static_cast<double>(s.n);
  s.fraction_m2_violated = static_cast<double>(v2) / static_cast<double>(s.n);
  return s;
}

BatchResult batch_evaluate(const SampleSpec& spec) {
  BatchResult out;
  const auto params = sample_family(spec);
  out.records.reserve(params.size());
  for (const auto& p : params) out.records.push_back(evaluate(p));
  out.summary = summarize(out.records);
  return out;
}

}  // namespace monolab
