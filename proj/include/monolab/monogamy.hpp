// Monogamy scores M1 = E_s^2 - sum E_ij^2 and M2 = E_a^2 - sum E_ij^2, preset
// parameter-grid scans, boundary root-finding and seeded batch sweeps.

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "monolab/measures.hpp"
#include "monolab/operational.hpp"

namespace monolab {

/// Scores at or above -kVerdictTol count as Satisfied.
inline constexpr double kVerdictTol = 1e-12;
/// Allowed gap between closed-form and numeric pair concurrences.
inline constexpr double kOracleMismatchTol = 1e-9;

enum class Verdict { Satisfied, Violated };

Verdict verdict_of(double score);
std::string_view to_string(Verdict v);

enum class Score { M1, M2 };

struct MeasureRecord {
  ParamRecord params;
  FamilyTag family = FamilyTag::GhzGeneric;
  ConcurrenceTriple c;  ///< numeric pipeline
  double e12 = 0.0;
  double e13 = 0.0;
  double e23 = 0.0;
  double tau = 0.0;
  double c3 = 0.0;
  double e_s = 0.0;
  double e_a = 0.0;
  double m1 = 0.0;
  double m2 = 0.0;

  Verdict verdict1() const { return verdict_of(m1); }
  Verdict verdict2() const { return verdict_of(m2); }
  double score(Score s) const { return s == Score::M1 ? m1 : m2; }
};

/// Full measure set for one state. E_ij come from the reduced density
/// matrices; the closed-form concurrences are checked against them and a
/// disagreement above kOracleMismatchTol throws std::logic_error.
MeasureRecord evaluate(const ParamRecord& params);

struct GridAxis {
  std::string name;
  double lo = 0.0;
  double hi = 1.0;
  std::size_t points = 2;

  double at(std::size_t i) const;
};

struct ScanOptions {
  std::size_t resolution = 201;  ///< points per axis
  double r_slice = 0.5;          ///< fixed radius of the "case3" preset
};

struct ScanCell {
  std::vector<double> coords;
  MeasureRecord record;
};

struct ScanResult {
  std::string case_id;
  std::vector<GridAxis> axes;
  std::vector<ScanCell> cells;  ///< row-major, last axis fastest
};

/// Preset identifiers accepted by scan_region and find_boundary.
const std::vector<std::string>& scan_cases();

/// Axes of a preset at the given resolution. Throws std::invalid_argument
/// for an unknown case or a resolution below 2.
std::vector<GridAxis> preset_axes(std::string_view case_id, const ScanOptions& options = {});

/// Parameters of a preset at one point of its axes.
GhzParams preset_params(std::string_view case_id, std::span<const double> coords, const ScanOptions& options = {});

ScanResult scan_region(std::string_view case_id, const ScanOptions& options = {});

/// Root of the chosen score along the first axis of a preset, with any
/// remaining axes pinned to `fixed`. The first sign change on the grid is
/// bracketed and bisected until the bracket is narrower than 1e-6. Throws
/// std::domain_error when the score keeps one sign along the axis.
double find_boundary(std::string_view case_id, std::span<const double> fixed, Score which,
                     const ScanOptions& options = {});

struct BatchSummary {
  std::size_t n = 0;
  double min_m1 = 0.0;
  double max_m1 = 0.0;
  double min_m2 = 0.0;
  double max_m2 = 0.0;
  double fraction_m1_violated = 0.0;
  double fraction_m2_violated = 0.0;
};

struct BatchResult {
  std::vector<MeasureRecord> records;
  BatchSummary summary;
};

BatchSummary summarize(std::span<const MeasureRecord> records);

BatchResult batch_evaluate(const SampleSpec& spec);

}  // namespace monolab
