#include "monolab/linalg.hpp"

#include <numeric>
#include <string>

namespace monolab {

Complex det2(const Matrix2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

Matrix2 sigma_y() {
  Matrix2 m;
  m(0, 1) = Complex{0.0, -1.0};
  m(1, 0) = Complex{0.0, 1.0};
  return m;
}

double clip_negative(double value, const char* what) {
  if (value >= 0.0) return value;
  if (value > -kNegativeEigenvalueClip) return 0.0;
  throw std::domain_error(std::string(what) + " is negative beyond rounding: " + std::to_string(value));
}

namespace {

template <std::size_t N>
double off_diagonal_norm(const CMatrix<N>& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

// One two-sided rotation annihilating a(p,q). The unitary is a phase on
// column q followed by a real plane rotation, so a(p,q) becomes real first.
template <std::size_t N>
void jacobi_rotate(CMatrix<N>& a, CMatrix<N>& v, std::size_t p, std::size_t q) {
  const double mag = std::abs(a(p, q));
  if (mag == 0.0) return;

  const Complex phase = std::conj(a(p, q)) / mag;  // a(p,q) * phase is real
  for (std::size_t k = 0; k < N; ++k) {
    a(k, q) *= phase;
    v(k, q) *= phase;
  }
  for (std::size_t k = 0; k < N; ++k) a(q, k) *= std::conj(phase);

  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double tau = (aqq - app) / (2.0 * mag);
  double t;
  if (std::abs(tau) > 1e150) {
    t = 0.5 / tau;
  } else {
    t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  }
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  for (std::size_t k = 0; k < N; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = c * vkp - s * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
  for (std::size_t k = 0; k < N; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk - s * aqk;
    a(q, k) = s * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
}

}  // namespace

template <std::size_t N>
EigenSystem<N> eigen_hermitian(const CMatrix<N>& m) {
  const double norm = m.frobenius_norm();
  for (const auto& e : m.entries())
    if (!is_finite(e)) throw std::invalid_argument("eigen_hermitian: non-finite entry");
  if (m.hermiticity_defect() > kHermitianInputTol * std::max(1.0, norm))
    throw std::invalid_argument("eigen_hermitian: matrix is not Hermitian");

  // Symmetrize so rounding in the input cannot leak into the spectrum.
  CMatrix<N> a = (m + m.adjoint()) * Complex{0.5, 0.0};
  CMatrix<N> v = CMatrix<N>::identity();

  const double tol = kJacobiOffDiagonalTol * std::max(1.0, norm);
  constexpr int kMaxSweeps = 64;
  for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_norm(a) >= tol; ++sweep)
    for (std::size_t p = 0; p + 1 < N; ++p)
      for (std::size_t q = p + 1; q < N; ++q) jacobi_rotate(a, v, p, q);
  // Jacobi converges quadratically; one more sweep after crossing the
  // threshold drives the residual coupling far below it.
  for (std::size_t p = 0; p + 1 < N; ++p)
    for (std::size_t q = p + 1; q < N; ++q) jacobi_rotate(a, v, p, q);

  std::array<std::size_t, N> order;
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

  EigenSystem<N> out;
  for (std::size_t k = 0; k < N; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < N; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

template EigenSystem<2> eigen_hermitian<2>(const CMatrix<2>&);
template EigenSystem<4> eigen_hermitian<4>(const CMatrix<4>&);
template EigenSystem<8> eigen_hermitian<8>(const CMatrix<8>&);

template <std::size_t N>
  requires(N == 2 || N == 4)
DensityMatrix<N>::DensityMatrix(const CMatrix<N>& m) : m_(m) {
  for (const auto& e : m.entries())
    if (!is_finite(e)) throw std::invalid_argument("density matrix: non-finite entry");
  if (m.hermiticity_defect() > kDensityTol) throw std::invalid_argument("density matrix: not Hermitian");
  const Complex tr = m.trace();
  if (std::abs(tr - 1.0) > kDensityTol) throw std::invalid_argument("density matrix: trace is not 1");
  const auto ev = eig_hermitian(m);
  if (ev[N - 1] < -kNegativeEigenvalueClip)
    throw std::invalid_argument("density matrix: negative eigenvalue");
}

template <std::size_t N>
  requires(N == 2 || N == 4)
double DensityMatrix<N>::purity() const {
  // tr(rho^2) = sum |rho_ij|^2 for Hermitian rho
  double s = 0.0;
  for (const auto& e : m_.entries()) s += std::norm(e);
  return s;
}

template class DensityMatrix<2>;
template class DensityMatrix<4>;

PureState3Q::PureState3Q(const CVector<8>& amplitudes) : amps_(amplitudes) {
  for (const auto& a : amps_)
    if (!is_finite(a)) throw std::invalid_argument("state: non-finite amplitude");
  const double n2 = squared_norm(amps_);
  if (std::abs(std::sqrt(n2) - 1.0) > kNormTol) throw std::invalid_argument("state: not normalized");
}

PureState3Q PureState3Q::normalized(const CVector<8>& amplitudes) {
  const double n = std::sqrt(squared_norm(amplitudes));
  if (!(n > 0.0) || !std::isfinite(n)) throw std::invalid_argument("state: cannot normalize");
  CVector<8> a = amplitudes;
  for (auto& e : a) e /= n;
  return PureState3Q(a);
}

namespace {

constexpr int bit_of(int qubit) { return 3 - qubit; }

int qubit_value(std::size_t index, int qubit) { return static_cast<int>((index >> bit_of(qubit)) & 1U); }

void check_label(int q) {
  if (q < 1 || q > 3) throw std::invalid_argument("qubit label must be 1, 2 or 3");
}

}  // namespace

PureState3Q PureState3Q::permuted(const std::array<int, 3>& perm) const {
  for (int q : perm) check_label(q);
  if (perm[0] == perm[1] || perm[0] == perm[2] || perm[1] == perm[2])
    throw std::invalid_argument("permuted: labels must be distinct");
  CVector<8> out{};
  for (std::size_t idx = 0; idx < 8; ++idx) {
    std::size_t src = 0;
    for (int k = 1; k <= 3; ++k)
      src |= static_cast<std::size_t>(qubit_value(idx, k)) << bit_of(perm[k - 1]);
    out[idx] = amps_[src];
  }
  return PureState3Q(out);
}

std::array<CVector<4>, 2> conditional_pair_vectors(const PureState3Q& state, int traced) {
  check_label(traced);
  int lo = traced == 1 ? 2 : 1;
  int hi = traced == 3 ? 2 : 3;
  std::array<CVector<4>, 2> w{};
  for (std::size_t idx = 0; idx < 8; ++idx) {
    const int c = qubit_value(idx, traced);
    const std::size_t r = static_cast<std::size_t>(2 * qubit_value(idx, lo) + qubit_value(idx, hi));
    w[static_cast<std::size_t>(c)][r] = state[idx];
  }
  return w;
}

DensityMatrix4 partial_trace(const PureState3Q& state, int a, int b) {
  check_label(a);
  check_label(b);
  if (a == b) throw std::invalid_argument("partial_trace: kept qubits must differ");
  const auto w = conditional_pair_vectors(state, 6 - a - b);
  Matrix4 rho;
  for (const auto& wc : w)
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) rho(r, c) += wc[r] * std::conj(wc[c]);
  // The state is normalized only to 1e-10; the reduced trace is pinned to 1.
  rho *= Complex{1.0 / squared_norm(state.amplitudes()), 0.0};
  return DensityMatrix4(rho);
}

DensityMatrix2 partial_trace(const PureState3Q& state, int keep) {
  check_label(keep);
  Matrix2 rho;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      const std::size_t mask = ~(std::size_t{1} << bit_of(keep)) & 7U;
      if ((i & mask) != (j & mask)) continue;
      rho(static_cast<std::size_t>(qubit_value(i, keep)), static_cast<std::size_t>(qubit_value(j, keep))) +=
          state[i] * std::conj(state[j]);
    }
  rho *= Complex{1.0 / squared_norm(state.amplitudes()), 0.0};
  return DensityMatrix2(rho);
}

}  // namespace monolab
