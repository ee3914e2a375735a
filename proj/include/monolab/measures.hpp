// Bipartite and tripartite entanglement measures for three-qubit pure states.

#pragma once

#include <array>

#include "monolab/linalg.hpp"
#include "monolab/states.hpp"

namespace monolab {

struct ConcurrenceTriple {
  double c12 = 0.0;
  double c13 = 0.0;
  double c23 = 0.0;

  std::array<double, 3> as_array() const { return {c12, c13, c23}; }
  /// Largest componentwise |a - b|.
  static double max_deviation(const ConcurrenceTriple& a, const ConcurrenceTriple& b);
};

/// Relative eigenvalue threshold below which a component of rho is treated as
/// outside its support when forming the spin-flip matrix.
inline constexpr double kSupportRelTol = 1e-12;

/// The four spin-flip singular values lambda_1 >= ... >= lambda_4, i.e. the
/// square roots of the eigenvalues of sqrt(rho) rho~ sqrt(rho).
std::array<double, 4> spin_flip_lambdas(const DensityMatrix4& rho);

/// Wootters concurrence max{0, l1 - l2 - l3 - l4}.
///
/// Writing rho = W W^dagger with W = V sqrt(P) from the eigendecomposition,
/// the Hermitian matrix sqrt(rho) rho~ sqrt(rho) is unitarily similar to
/// tau^dagger tau where tau = W^T (sy x sy) W. Only the support of rho
/// contributes, so eigenvalues at rounding level never enter a square root.
/// For rank two the smaller value is taken as |det tau| / l1, which keeps it
/// accurate when it is close to zero.
double wootters_concurrence(const DensityMatrix4& rho);

/// 2 sqrt(det rho_q) for the cut q | rest.
double concurrence_pure_bipartition(const PureState3Q& state, int qubit);

/// -x log2 x - (1-x) log2 (1-x), with h(0) = h(1) = 0.
double binary_entropy(double x);

/// Entanglement of formation h((1 + sqrt(1 - c^2)) / 2). Throws
/// std::invalid_argument outside [0, 1] beyond 1e-12.
double eof_from_concurrence(double c);

/// Wootters concurrence of each reduced pair (12, 13, 23).
ConcurrenceTriple reduced_pair_concurrences(const PureState3Q& state);

/// Closed forms C_ij = 2 g_k sqrt(1-4g_i^2) sqrt(1-4g_j^2) / (4k).
ConcurrenceTriple ghz_closed_form_concurrences(const GhzParams& p);

/// C12 = 2 sqrt(xy), C13 = 2 sqrt(xz), C23 = 2 sqrt(yz).
ConcurrenceTriple w_closed_form_concurrences(const WParams& p);

ConcurrenceTriple closed_form_concurrences(const ParamRecord& p);

/// Residual tangle with `focus` as party A. Evaluated as 4 l1 l2 of the pair
/// (A, B), where l1 l2 = |det tau| comes straight from the two conditional
/// vectors of the traced qubit. Algebraically equal to
/// C^2_{A|BC} - C^2_AB - C^2_AC but keeps full relative accuracy when the
/// tangle is tiny.
double tangle(const PureState3Q& state, int focus = 1);

/// C^2_{A|BC} - C^2_AB - C^2_AC evaluated literally, clipped at 0 from
/// (-1e-10, 0).
double tangle_by_definition(const PureState3Q& state, int focus = 1);

/// C_3 = 2^{1-3/2} sqrt(6 - sum of the six reduced purities).
double generalized_concurrence(const PureState3Q& state);

}  // namespace monolab
