// Fixed-size complex linear algebra for qubit objects of dimension 2, 4 and 8.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>

namespace monolab {

using Complex = std::complex<double>;

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

template <std::size_t N>
concept QubitDim = (N == 2 || N == 4 || N == 8);

template <std::size_t N>
  requires QubitDim<N>
using CVector = std::array<Complex, N>;

/// Dense row-major N x N complex matrix.
template <std::size_t N>
  requires QubitDim<N>
class CMatrix {
 public:
  static constexpr std::size_t dim = N;

  CMatrix() { entries_.fill(Complex{0.0, 0.0}); }

  static CMatrix identity() {
    CMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  static CMatrix diagonal(const std::array<Complex, N>& d) {
    CMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
    return m;
  }

  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * N + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * N + c]; }

  const std::array<Complex, N * N>& entries() const { return entries_; }

  CMatrix adjoint() const {
    CMatrix out;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
  }

  CMatrix conjugate() const {
    CMatrix out;
    for (std::size_t i = 0; i < N * N; ++i) out.entries_[i] = std::conj(entries_[i]);
    return out;
  }

  Complex trace() const {
    Complex t{0.0, 0.0};
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const auto& e : entries_) s += std::norm(e);
    return std::sqrt(s);
  }

  /// Largest |m(r,c) - conj(m(c,r))|.
  double hermiticity_defect() const {
    double worst = 0.0;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = r; c < N; ++c)
        worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    return worst;
  }

  CMatrix& operator+=(const CMatrix& o) {
    for (std::size_t i = 0; i < N * N; ++i) entries_[i] += o.entries_[i];
    return *this;
  }
  CMatrix& operator-=(const CMatrix& o) {
    for (std::size_t i = 0; i < N * N; ++i) entries_[i] -= o.entries_[i];
    return *this;
  }
  CMatrix& operator*=(Complex s) {
    for (auto& e : entries_) e *= s;
    return *this;
  }

  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(CMatrix a, Complex s) { return a *= s; }
  friend CMatrix operator*(Complex s, CMatrix a) { return a *= s; }

  friend CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    CMatrix out;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t k = 0; k < N; ++k) {
        const Complex ark = a(r, k);
        if (ark == Complex{0.0, 0.0}) continue;
        for (std::size_t c = 0; c < N; ++c) out(r, c) += ark * b(k, c);
      }
    return out;
  }

  friend CVector<N> operator*(const CMatrix& a, const CVector<N>& v) {
    CVector<N> out{};
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) out[r] += a(r, c) * v[c];
    return out;
  }

  friend bool operator==(const CMatrix&, const CMatrix&) = default;

 private:
  std::array<Complex, N * N> entries_;
};

using Matrix2 = CMatrix<2>;
using Matrix4 = CMatrix<4>;
using Matrix8 = CMatrix<8>;

/// Tensor (Kronecker) product. Results larger than 8 x 8 do not compile.
template <std::size_t A, std::size_t B>
  requires QubitDim<A> && QubitDim<B> && QubitDim<A * B>
CMatrix<A * B> kron(const CMatrix<A>& a, const CMatrix<B>& b) {
  CMatrix<A * B> out;
  for (std::size_t ra = 0; ra < A; ++ra)
    for (std::size_t ca = 0; ca < A; ++ca) {
      const Complex s = a(ra, ca);
      for (std::size_t rb = 0; rb < B; ++rb)
        for (std::size_t cb = 0; cb < B; ++cb) out(ra * B + rb, ca * B + cb) = s * b(rb, cb);
    }
  return out;
}

template <std::size_t A, std::size_t B>
  requires QubitDim<A> && QubitDim<B> && QubitDim<A * B>
CVector<A * B> kron(const CVector<A>& a, const CVector<B>& b) {
  CVector<A * B> out{};
  for (std::size_t i = 0; i < A; ++i)
    for (std::size_t j = 0; j < B; ++j) out[i * B + j] = a[i] * b[j];
  return out;
}

template <std::size_t N>
double squared_norm(const CVector<N>& v) {
  double s = 0.0;
  for (const auto& e : v) s += std::norm(e);
  return s;
}

template <std::size_t N>
Complex inner(const CVector<N>& a, const CVector<N>& b) {
  Complex s{0.0, 0.0};
  for (std::size_t i = 0; i < N; ++i) s += std::conj(a[i]) * b[i];
  return s;
}

Complex det2(const Matrix2& m);

/// Pauli Y.
Matrix2 sigma_y();

/// Tolerances shared by the eigensolver and the density-matrix checks.
inline constexpr double kJacobiOffDiagonalTol = 1e-13;
inline constexpr double kHermitianInputTol = 1e-10;
inline constexpr double kNegativeEigenvalueClip = 1e-10;
inline constexpr double kDensityTol = 1e-12;

template <std::size_t N>
struct EigenSystem {
  std::array<double, N> values;  ///< descending
  CMatrix<N> vectors;            ///< column k belongs to values[k]
};

/// Cyclic complex Jacobi on a Hermitian matrix. Throws std::invalid_argument
/// if the input is not Hermitian within 1e-10 (relative to its norm when the
/// norm exceeds 1).
template <std::size_t N>
EigenSystem<N> eigen_hermitian(const CMatrix<N>& m);

/// Eigenvalues only, descending.
template <std::size_t N>
std::array<double, N> eig_hermitian(const CMatrix<N>& m) {
  return eigen_hermitian(m).values;
}

/// Zero out eigenvalues in (-1e-10, 0); anything more negative is an error.
double clip_negative(double value, const char* what);

/// Validated Hermitian, unit-trace, positive semidefinite matrix.
template <std::size_t N>
  requires(N == 2 || N == 4)
class DensityMatrix {
 public:
  /// Throws std::invalid_argument naming the violated property.
  explicit DensityMatrix(const CMatrix<N>& m);

  const CMatrix<N>& matrix() const { return m_; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

  /// tr(rho^2)
  double purity() const;

 private:
  CMatrix<N> m_;
};

using DensityMatrix2 = DensityMatrix<2>;
using DensityMatrix4 = DensityMatrix<4>;

/// Normalized three-qubit pure state. Basis index b = 4*q1 + 2*q2 + q3, so
/// qubit 1 is the most significant bit: index 3 is |011>.
class PureState3Q {
 public:
  static constexpr double kNormTol = 1e-10;

  /// Throws std::invalid_argument if an amplitude is not finite or the norm
  /// deviates from 1 by more than 1e-10.
  explicit PureState3Q(const CVector<8>& amplitudes);

  /// Divides by the norm first; rejects the zero vector.
  static PureState3Q normalized(const CVector<8>& amplitudes);

  const CVector<8>& amplitudes() const { return amps_; }
  const Complex& operator[](std::size_t i) const { return amps_[i]; }

  /// Relabel qubits: qubit k of the result is qubit perm[k] of this state
  /// (labels 1..3).
  PureState3Q permuted(const std::array<int, 3>& perm) const;

 private:
  CVector<8> amps_;
};

/// Reduced state of the two qubits {a, b} (labels 1..3, a != b). The reduced
/// basis is |q_min q_max>.
DensityMatrix4 partial_trace(const PureState3Q& state, int a, int b);

/// Reduced state of a single qubit (label 1..3).
DensityMatrix2 partial_trace(const PureState3Q& state, int keep);

/// The two conditional vectors w_c = <c|_k psi, one per value c of the traced
/// qubit k. rho_{ij} = sum_c |w_c><w_c|, in the same basis as partial_trace.
std::array<CVector<4>, 2> conditional_pair_vectors(const PureState3Q& state, int traced);

}  // namespace monolab
