#include "monolab/operational.hpp"

#include <numbers>
#include <stdexcept>
#include <vector>

#include "monolab/rng.hpp"

namespace monolab {

namespace {

// Stream identifiers keep estimator substreams disjoint from family sampling.
constexpr std::uint64_t kSourceStream = 0x5352434556ULL;
constexpr std::uint64_t kAccessibleStream = 0x4143435653ULL;

bool at_unit_radius(const GhzParams& p) { return p.has_unit_modulus(); }

// Nonzero entries of g in slot order.
std::vector<double> nonzero_gs(const GhzParams& p) {
  std::vector<double> out;
  for (double g : p.g)
    if (g >= kZeroParamTol) out.push_back(g);
  return out;
}

OperationalPair ghz_pair(const GhzParams& p) {
  const FamilyTag tag = classify_ghz(p);
  const double r = p.r();
  const bool unit = at_unit_radius(p);
  const auto nz = nonzero_gs(p);
  const double product = p.g[0] * p.g[1] * p.g[2];
  const double accessible_product = (0.5 - p.g[0]) * (0.5 - p.g[1]) * (0.5 - p.g[2]);
  switch (tag) {
    case FamilyTag::GhzMesAllZero: return {1.0, 1.0};
    case FamilyTag::GhzAllZero:
      if (unit) return {1.0, 1.0};
      return {r, r};
    case FamilyTag::GhzOneNonzero: {
      const double a = nz[0];
      if (unit) return {1.0 - 2.0 * a, 1.0 - 2.0 * a};
      return {1.0 - 2.0 * a * (1.0 - r), 2.0 * (0.5 - a) * r};
    }
    case FamilyTag::GhzTwoNonzero: {
      const double a = nz[0];
      const double b = nz[1];
      const double acc = 4.0 * (0.5 - a) * (0.5 - b);
      if (unit) return {1.0 - 4.0 * a * b, acc};
      return {1.0 - 4.0 * a * b * (1.0 - r), acc * r};
    }
    case FamilyTag::GhzGeneric: return {1.0 - 8.0 * product * source_bracket(f_z(p.z)), accessible_product};
    case FamilyTag::GhzMesNonzero: return {1.0, accessible_product};
    default: break;
  }
  throw std::invalid_argument("operational measures: unroutable GHZ family");
}

OperationalPair w_pair(const WParams& p) {
  p.validate();
  return {1.0 - p.t * p.t * p.t, 27.0 * p.x * p.y * p.z};
}

bool dominated(const GhzParams& from, const GhzParams& to) {
  for (std::size_t i = 0; i < 3; ++i)
    if (from.g[i] > to.g[i] + kZeroParamTol) return false;
  return true;
}

bool near(double a, double b) { return std::abs(a - b) <= kConvertibilityTol; }

// arg z' reduced mod pi lies at pi/4 or 3pi/4.
bool diagonal_phase(Complex z) {
  double phase = std::fmod(std::arg(z), std::numbers::pi);
  if (phase < 0.0) phase += std::numbers::pi;
  return near(phase, std::numbers::pi / 4.0) || near(phase, 3.0 * std::numbers::pi / 4.0);
}

VolumeEstimate summarize(double sum, double sum_sq, std::size_t n) {
  VolumeEstimate out;
  out.n = n;
  out.mean = sum / static_cast<double>(n);
  if (n > 1) {
    const double var = (sum_sq - static_cast<double>(n) * out.mean * out.mean) / static_cast<double>(n - 1);
    out.std_error = std::sqrt(std::max(var, 0.0) / static_cast<double>(n));
  }
  return out;
}

void require_volume_family(const GhzParams& p, std::size_t n) {
  if (n == 0) throw std::invalid_argument("volume estimate needs n >= 1");
  const FamilyTag tag = classify_ghz(p);
  if (tag != FamilyTag::GhzAllZero && tag != FamilyTag::GhzOneNonzero && tag != FamilyTag::GhzTwoNonzero)
    throw std::invalid_argument("volume estimate: unsupported family " + std::string(to_string(tag)));
}

}  // namespace

double f_z(Complex z) {
  const double m2 = std::norm(z);
  if (!(m2 > 0.0)) throw std::invalid_argument("f_z: z must be nonzero");
  return 2.0 * std::abs((z * z).real()) / (1.0 + m2 * m2);
}

double source_bracket(double f) {
  if (f < 0.0 || f > 1.0 + 1e-12) throw std::invalid_argument("source_bracket: f out of [0, 1]");
  if (f == 0.0) return 1.0;
  const double l = std::log(f);
  return 1.0 + f * (l * (1.0 - 0.5 * l) - 1.0);
}

OperationalPair operational_pair(const ParamRecord& p) {
  if (const auto* g = std::get_if<GhzParams>(&p)) return ghz_pair(*g);
  return w_pair(std::get<WParams>(p));
}

double source_entanglement(const ParamRecord& p) { return operational_pair(p).e_s; }

double accessible_entanglement(const ParamRecord& p) { return operational_pair(p).e_a; }

bool locc_convertible(const GhzParams& from, const GhzParams& to) {
  from.validate();
  to.validate();
  if (!dominated(from, to)) return false;

  const bool target_has_zero = to.nonzero_count() < 3;
  const bool source_has_zero = from.nonzero_count() < 3;

  if (target_has_zero) return from.r() >= to.r() - kZeroParamTol;

  if (source_has_zero) return near(from.r(), 1.0) && diagonal_phase(to.z);

  const double ratio = (from.g[0] * from.g[1] * from.g[2]) / (to.g[0] * to.g[1] * to.g[2]);
  const Complex z2 = from.z * from.z;
  const Complex w2 = to.z * to.z;
  const double m4 = std::norm(from.z) * std::norm(from.z);
  const double n4 = std::norm(to.z) * std::norm(to.z);

  // ratio = Re(w2)/(1+n4) * (1+m4)/Re(z2)
  const bool real_part = near(ratio * (1.0 + n4) * z2.real(), w2.real() * (1.0 + m4));
  // ratio = Im(w2)/(n4-1) * (m4-1)/Im(z2)
  const bool imag_part = near(ratio * (n4 - 1.0) * z2.imag(), w2.imag() * (m4 - 1.0));
  return real_part && imag_part;
}

VolumeEstimate estimate_source_volume(const GhzParams& p, std::size_t n, std::uint64_t seed) {
  require_volume_family(p, n);
  std::array<bool, 3> free{};
  double box = 1.0;
  for (std::size_t i = 0; i < 3; ++i)
    if ((free[i] = p.g[i] >= kZeroParamTol)) box *= 0.5;

  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    SplitMix64 rng = SplitMix64::substream(seed, kSourceStream, k);
    GhzParams candidate;
    for (std::size_t i = 0; i < 3; ++i)
      if (free[i]) candidate.g[i] = rng.uniform(0.0, 0.5);
    candidate.z = 1.0 - rng.uniform();  // (0, 1]
    const double v = locc_convertible(candidate, p) ? box : 0.0;
    sum += v;
    sum_sq += v * v;
  }
  return summarize(sum, sum_sq, n);
}

VolumeEstimate estimate_accessible_volume(const GhzParams& p, std::size_t n, std::uint64_t seed) {
  require_volume_family(p, n);
  constexpr double kFaceMeasure = 0.25;
  constexpr double kTotal = 3.0 * kFaceMeasure;

  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    SplitMix64 rng = SplitMix64::substream(seed, kAccessibleStream, k);
    const auto zero_slot = static_cast<std::size_t>(rng.next() % 3U);
    GhzParams candidate;
    for (std::size_t i = 0; i < 3; ++i)
      if (i != zero_slot) candidate.g[i] = rng.uniform(0.0, 0.5);
    candidate.z = 1.0 - rng.uniform();
    const double v = locc_convertible(p, candidate) ? kTotal : 0.0;
    sum += v;
    sum_sq += v * v;
  }
  return summarize(sum, sum_sq, n);
}

}  // namespace monolab
