// Canonical three-qubit states of the GHZ and W SLOCC classes, their family
// classification, and seeded parameter sampling.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "monolab/linalg.hpp"

namespace monolab {

/// g_i counts as zero below this; z counts as +-1 within this distance.
inline constexpr double kZeroParamTol = 1e-12;
inline constexpr double kUnitZTol = 1e-12;

/// GHZ-class coordinates (g1, g2, g3, z) with g_i in [0, 1/2) and 0 < |z| <= 1.
struct GhzParams {
  std::array<double, 3> g{};
  Complex z{1.0, 0.0};

  /// Throws std::invalid_argument naming the violated bound.
  void validate() const;

  /// k = (1 + |z|^4 + 2 Re(z^2) 8 g1 g2 g3) / (8 |z|^2), the squared norm of
  /// the unnormalized construction.
  double normalizer() const;

  double r() const { return std::abs(z); }
  int nonzero_count() const;
  bool z_is_plus_minus_one() const;
  bool has_unit_modulus() const { return std::abs(std::abs(z) - 1.0) < kUnitZTol; }

  friend bool operator==(const GhzParams&, const GhzParams&) = default;
};

/// W-class coefficients: sqrt(t)|000> + sqrt(x)|100> + sqrt(y)|010> + sqrt(z)|001>.
struct WParams {
  double t = 0.0;
  double x = 1.0 / 3.0;
  double y = 1.0 / 3.0;
  double z = 1.0 / 3.0;

  static constexpr double kSumTol = 1e-12;

  void validate() const;

  friend bool operator==(const WParams&, const WParams&) = default;
};

enum class FamilyTag {
  GhzAllZero,
  GhzOneNonzero,
  GhzTwoNonzero,
  GhzGeneric,
  GhzMesNonzero,
  GhzMesAllZero,
  WClass,
  WClassMes,
};

inline constexpr std::array<FamilyTag, 8> kAllFamilies{
    FamilyTag::GhzAllZero,  FamilyTag::GhzOneNonzero, FamilyTag::GhzTwoNonzero, FamilyTag::GhzGeneric,
    FamilyTag::GhzMesNonzero, FamilyTag::GhzMesAllZero, FamilyTag::WClass,      FamilyTag::WClassMes,
};

/// "GhzGeneric" etc.
std::string_view to_string(FamilyTag tag);
/// Command-line spelling, e.g. "ghz-generic", "w", "w-mes".
std::string_view cli_name(FamilyTag tag);
/// Accepts either spelling.
std::optional<FamilyTag> parse_family(std::string_view name);

bool is_ghz_family(FamilyTag tag);

using ParamRecord = std::variant<GhzParams, WParams>;

PureState3Q build_ghz(const GhzParams& p);
PureState3Q build_w(const WParams& p);
PureState3Q build_state(const ParamRecord& p);

FamilyTag classify_ghz(const GhzParams& p);
FamilyTag classify_w(const WParams& p);
FamilyTag classify(const ParamRecord& p);

struct SampleSpec {
  FamilyTag family = FamilyTag::GhzGeneric;
  std::size_t count = 1;
  std::uint64_t seed = 42;
};

/// Sample `index` of a seeded family run. Depends only on (family, seed, index).
ParamRecord sample_at(FamilyTag family, std::uint64_t seed, std::uint64_t index);

/// count records in index order. Throws std::invalid_argument if count == 0.
std::vector<ParamRecord> sample_family(const SampleSpec& spec);

}  // namespace monolab
