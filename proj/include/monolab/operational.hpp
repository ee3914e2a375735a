// Operational measures: source and accessible entanglement per family, LOCC
// convertibility inside the GHZ class, and Monte-Carlo estimates of the
// source/accessible volumes of non-generic GHZ states.

#pragma once

#include <cstdint>

#include "monolab/states.hpp"

namespace monolab {

struct OperationalPair {
  double e_s = 0.0;
  double e_a = 0.0;
};

struct VolumeEstimate {
  double mean = 0.0;
  double std_error = 0.0;  ///< sample standard deviation / sqrt(n)
  std::size_t n = 0;
};

/// f_z = 2 |Re(z^2)| / (1 + |z|^4). Throws std::invalid_argument for z = 0.
double f_z(Complex z);

/// phi(f) = 1 + f (ln f (1 - ln f / 2) - 1), with phi(0) = 1. Decreasing on
/// [0, 1] from 1 to phi(1) = 0; d phi / df = -(ln f)^2 / 2.
double source_bracket(double f);

/// E_s for any valid GHZ or W parameter record, dispatched on its family.
/// Non-generic strata use r = |z|; the r = 1 rows are distinct formulas.
double source_entanglement(const ParamRecord& p);

/// E_a, dispatched the same way.
double accessible_entanglement(const ParamRecord& p);

OperationalPair operational_pair(const ParamRecord& p);

/// Tolerance for the equalities and the phase test in the convertibility
/// conditions.
inline constexpr double kConvertibilityTol = 1e-9;

/// Whether psi(from) -> psi(to) is possible by LOCC.
///  - some target h_i = 0: g_i <= h_i and |z| >= |z'|;
///  - some source g_i = 0, all h_i != 0: g_i <= h_i, |z| = 1 and
///    arg z' in {pi/4, 3pi/4} (mod pi, since z -> -z is a global sign);
///  - otherwise g_i <= h_i and
///      g1g2g3/(h1h2h3) = Re(z'^2)/(1+|z'|^4) * (1+|z|^4)/Re(z^2)
///                      = Im(z'^2)/(|z'|^4-1) * (|z|^4-1)/Im(z^2),
///    compared in cross-multiplied form so 0/0 factors impose nothing.
bool locc_convertible(const GhzParams& from, const GhzParams& to);

/// Monte-Carlo estimate of the source volume of a non-generic GHZ state
/// (families GhzAllZero, GhzOneNonzero, GhzTwoNonzero). Candidate sources
/// share the target's zero pattern; each nonzero h_i ~ U[0, 1/2) and
/// r' ~ U(0, 1], so the sampled box has measure (1/2)^(#nonzero).
VolumeEstimate estimate_source_volume(const GhzParams& p, std::size_t n, std::uint64_t seed);

/// Monte-Carlo estimate of the accessible volume. Candidate targets live on
/// the three faces with exactly one vanishing h_k: (h_a, h_b) ~ U[0, 1/2)^2,
/// r' ~ U(0, 1]; total measure 3/4.
VolumeEstimate estimate_accessible_volume(const GhzParams& p, std::size_t n, std::uint64_t seed);

}  // namespace monolab
