#include "monolab/states.hpp"

#include <stdexcept>
#include <string>

#include "monolab/rng.hpp"

namespace monolab {

namespace {

constexpr double kMaxSampledG = 0.5 - 1e-6;
constexpr double kRadialMargin = 1e-6;
constexpr double kGenericUnitExclusion = 1e-9;
constexpr double kWFloor = 1e-9;

std::string bound_message(const char* name, double value, const char* range) {
  return std::string(name) + " out of " + range + ": " + std::to_string(value);
}

}  // namespace

void GhzParams::validate() const {
  static constexpr const char* kNames[3] = {"g1", "g2", "g3"};
  for (std::size_t i = 0; i < 3; ++i)
    if (!std::isfinite(g[i]) || g[i] < 0.0 || g[i] >= 0.5)
      throw std::invalid_argument(bound_message(kNames[i], g[i], "[0, 0.5)"));
  if (!is_finite(z)) throw std::invalid_argument("z is not finite");
  const double m = std::abs(z);
  if (!(m > 0.0)) throw std::invalid_argument("|z| must be positive");
  if (m > 1.0 + kUnitZTol) throw std::invalid_argument(bound_message("|z|", m, "(0, 1]"));
  if (!(normalizer() > 0.0)) throw std::invalid_argument("normalizer k is not positive");
}

double GhzParams::normalizer() const {
  const double m2 = std::norm(z);
  const double re_z2 = (z * z).real();
  return (1.0 + m2 * m2 + 2.0 * re_z2 * 8.0 * g[0] * g[1] * g[2]) / (8.0 * m2);
}

int GhzParams::nonzero_count() const {
  int n = 0;
  for (double gi : g)
    if (gi >= kZeroParamTol) ++n;
  return n;
}

bool GhzParams::z_is_plus_minus_one() const {
  return std::abs(z - 1.0) < kUnitZTol || std::abs(z + 1.0) < kUnitZTol;
}

void WParams::validate() const {
  if (!std::isfinite(t) || t < 0.0) throw std::invalid_argument(bound_message("t", t, "[0, 1]"));
  if (!std::isfinite(x) || x <= 0.0) throw std::invalid_argument(bound_message("x", x, "(0, 1]"));
  if (!std::isfinite(y) || y <= 0.0) throw std::invalid_argument(bound_message("y", y, "(0, 1]"));
  if (!std::isfinite(z) || z <= 0.0) throw std::invalid_argument(bound_message("z", z, "(0, 1]"));
  const double sum = t + x + y + z;
  if (std::abs(sum - 1.0) > kSumTol)
    throw std::invalid_argument("t + x + y + z must equal 1, got " + std::to_string(sum));
}

std::string_view to_string(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::GhzAllZero: return "GhzAllZero";
    case FamilyTag::GhzOneNonzero: return "GhzOneNonzero";
    case FamilyTag::GhzTwoNonzero: return "GhzTwoNonzero";
    case FamilyTag::GhzGeneric: return "GhzGeneric";
    case FamilyTag::GhzMesNonzero: return "GhzMesNonzero";
    case FamilyTag::GhzMesAllZero: return "GhzMesAllZero";
    case FamilyTag::WClass: return "WClass";
    case FamilyTag::WClassMes: return "WClassMes";
  }
  return "?";
}

std::string_view cli_name(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::GhzAllZero: return "ghz-all-zero";
    case FamilyTag::GhzOneNonzero: return "ghz-one-nonzero";
    case FamilyTag::GhzTwoNonzero: return "ghz-two-nonzero";
    case FamilyTag::GhzGeneric: return "ghz-generic";
    case FamilyTag::GhzMesNonzero: return "ghz-mes-nonzero";
    case FamilyTag::GhzMesAllZero: return "ghz-mes-all-zero";
    case FamilyTag::WClass: return "w";
    case FamilyTag::WClassMes: return "w-mes";
  }
  return "?";
}

std::optional<FamilyTag> parse_family(std::string_view name) {
  for (FamilyTag tag : kAllFamilies)
    if (name == to_string(tag) || name == cli_name(tag)) return tag;
  return std::nullopt;
}

bool is_ghz_family(FamilyTag tag) { return tag != FamilyTag::WClass && tag != FamilyTag::WClassMes; }

PureState3Q build_ghz(const GhzParams& p) {
  p.validate();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  // Each local filter g_x^i maps |0> -> |0>/sqrt2 and
  // |1> -> sqrt2 g_i |0> + sqrt(1 - 4 g_i^2)/sqrt2 |1>.
  std::array<Matrix2, 3> filters;
  for (std::size_t i = 0; i < 3; ++i) {
    filters[i](0, 0) = inv_sqrt2;
    filters[i](0, 1) = std::sqrt(2.0) * p.g[i];
    filters[i](1, 1) = inv_sqrt2 * std::sqrt(1.0 - 4.0 * p.g[i] * p.g[i]);
  }
  const Matrix8 local = kron(kron(filters[0], filters[1]), filters[2]);

  CVector<8> seed{};
  seed[0] = p.z;
  seed[7] = 1.0 / p.z;
  CVector<8> amps = local * seed;

  const double scale = 1.0 / std::sqrt(p.normalizer());
  for (auto& a : amps) a *= scale;
  return PureState3Q(amps);
}

PureState3Q build_w(const WParams& p) {
  p.validate();
  CVector<8> amps{};
  amps[0] = std::sqrt(p.t);
  amps[4] = std::sqrt(p.x);
  amps[2] = std::sqrt(p.y);
  amps[1] = std::sqrt(p.z);
  return PureState3Q(amps);
}

PureState3Q build_state(const ParamRecord& p) {
  return std::visit(
      [](const auto& params) -> PureState3Q {
        if constexpr (std::is_same_v<std::decay_t<decltype(params)>, GhzParams>)
          return build_ghz(params);
        else
          return build_w(params);
      },
      p);
}

FamilyTag classify_ghz(const GhzParams& p) {
  p.validate();
  const int nonzero = p.nonzero_count();
  const bool mes_z = p.z_is_plus_minus_one();
  switch (nonzero) {
    case 0: return mes_z ? FamilyTag::GhzMesAllZero : FamilyTag::GhzAllZero;
    case 1: return FamilyTag::GhzOneNonzero;
    case 2: return FamilyTag::GhzTwoNonzero;
    default: return mes_z ? FamilyTag::GhzMesNonzero : FamilyTag::GhzGeneric;
  }
}

FamilyTag classify_w(const WParams& p) {
  p.validate();
  return p.t < kZeroParamTol ? FamilyTag::WClassMes : FamilyTag::WClass;
}

FamilyTag classify(const ParamRecord& p) {
  if (const auto* g = std::get_if<GhzParams>(&p)) return classify_ghz(*g);
  return classify_w(std::get<WParams>(p));
}

namespace {

double draw_nonzero_g(SplitMix64& rng) {
  for (;;) {
    const double g = rng.uniform(0.0, kMaxSampledG);
    if (g >= kZeroParamTol) return g;
  }
}

double draw_radius(SplitMix64& rng) { return rng.uniform(kRadialMargin, 1.0 - kRadialMargin); }

Complex draw_generic_z(SplitMix64& rng) {
  for (;;) {
    const Complex z{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    const double m = std::abs(z);
    if (m > 1.0 || m < kRadialMargin) continue;
    if (std::abs(z - 1.0) < kGenericUnitExclusion || std::abs(z + 1.0) < kGenericUnitExclusion) continue;
    return z;
  }
}

Complex draw_sign(SplitMix64& rng) { return rng.uniform() < 0.5 ? Complex{1.0, 0.0} : Complex{-1.0, 0.0}; }

// Uniform on the simplex via the spacings of sorted uniforms.
template <std::size_t K>
std::array<double, K> draw_simplex(SplitMix64& rng) {
  std::array<double, K - 1> cuts;
  for (auto& c : cuts) c = rng.uniform();
  std::sort(cuts.begin(), cuts.end());
  std::array<double, K> out;
  double prev = 0.0;
  for (std::size_t i = 0; i + 1 < K; ++i) {
    out[i] = cuts[i] - prev;
    prev = cuts[i];
  }
  out[K - 1] = 1.0 - prev;
  return out;
}

}  // namespace

ParamRecord sample_at(FamilyTag family, std::uint64_t seed, std::uint64_t index) {
  SplitMix64 rng = SplitMix64::substream(seed, static_cast<std::uint64_t>(family), index);
  GhzParams p;
  switch (family) {
    case FamilyTag::GhzAllZero:
      p.z = draw_radius(rng);
      return p;
    case FamilyTag::GhzOneNonzero:
      p.g[0] = draw_nonzero_g(rng);
      p.z = draw_radius(rng);
      return p;
    case FamilyTag::GhzTwoNonzero:
      p.g[0] = draw_nonzero_g(rng);
      p.g[1] = draw_nonzero_g(rng);
      p.z = draw_radius(rng);
      return p;
    case FamilyTag::GhzGeneric:
      for (auto& g : p.g) g = draw_nonzero_g(rng);
      p.z = draw_generic_z(rng);
      return p;
    case FamilyTag::GhzMesNonzero:
      for (auto& g : p.g) g = draw_nonzero_g(rng);
      p.z = draw_sign(rng);
      return p;
    case FamilyTag::GhzMesAllZero:
      p.z = draw_sign(rng);
      return p;
    case FamilyTag::WClass:
      for (;;) {
        const auto s = draw_simplex<4>(rng);
        if (s[0] < kZeroParamTol || s[1] < kWFloor || s[2] < kWFloor || s[3] < kWFloor) continue;
        return WParams{s[0], s[1], s[2], s[3]};
      }
    case FamilyTag::WClassMes:
      for (;;) {
        const auto s = draw_simplex<3>(rng);
        if (s[0] < kWFloor || s[1] < kWFloor || s[2] < kWFloor) continue;
        return WParams{0.0, s[0], s[1], s[2]};
      }
  }
  throw std::invalid_argument("sample_at: unknown family");
}

std::vector<ParamRecord> sample_family(const SampleSpec& spec) {
  if (spec.count == 0) throw std::invalid_argument("sample count must be at least 1");
  std::vector<ParamRecord> out;
  out.reserve(spec.count);
  for (std::size_t i = 0; i < spec.count; ++i) out.push_back(sample_at(spec.family, spec.seed, i));
  return out;
}

}  // namespace monolab
