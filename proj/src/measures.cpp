#include "monolab/measures.hpp"

#include <stdexcept>
#include <string>

namespace monolab {

namespace {

constexpr double kUnitSlack = 1e-12;

// (sy x sy)|ab> = -|~a~b> for a == b, +|~a~b> otherwise; real and symmetric.
Complex spin_flip_form(const CVector<4>& a, const CVector<4>& b) {
  return -a[0] * b[3] + a[1] * b[2] + a[2] * b[1] - a[3] * b[0];
}

double clamp_unit(double v, const char* what) {
  if (v > 1.0 + kUnitSlack) throw std::domain_error(std::string(what) + " exceeds 1: " + std::to_string(v));
  return std::min(std::max(v, 0.0), 1.0);
}

// |det tau| for the pair whose complementary qubit is `traced`.
double spin_flip_product(const PureState3Q& state, int traced) {
  const auto w = conditional_pair_vectors(state, traced);
  const Complex t00 = spin_flip_form(w[0], w[0]);
  const Complex t01 = spin_flip_form(w[0], w[1]);
  const Complex t11 = spin_flip_form(w[1], w[1]);
  return std::abs(t00 * t11 - t01 * t01);
}

}  // namespace

double ConcurrenceTriple::max_deviation(const ConcurrenceTriple& a, const ConcurrenceTriple& b) {
  return std::max({std::abs(a.c12 - b.c12), std::abs(a.c13 - b.c13), std::abs(a.c23 - b.c23)});
}

std::array<double, 4> spin_flip_lambdas(const DensityMatrix4& rho) {
  const auto es = eigen_hermitian(rho.matrix());
  const double top = clip_negative(es.values[0], "density eigenvalue");

  std::array<CVector<4>, 4> w{};
  std::size_t rank = 0;
  for (std::size_t k = 0; k < 4; ++k) {
    const double p = clip_negative(es.values[k], "density eigenvalue");
    if (!(p > kSupportRelTol * top)) break;
    const double s = std::sqrt(p);
    for (std::size_t r = 0; r < 4; ++r) w[rank][r] = es.vectors(r, k) * s;
    ++rank;
  }

  std::array<double, 4> lambdas{};
  if (rank == 0) return lambdas;

  Matrix4 tau;
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j) tau(i, j) = spin_flip_form(w[i], w[j]);

  if (rank == 1) {
    lambdas[0] = std::abs(tau(0, 0));
    return lambdas;
  }

  const Matrix4 gram = tau.adjoint() * tau;
  if (rank == 2) {
    Matrix2 g2;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) g2(i, j) = gram(i, j);
    const double top_sq = clip_negative(eig_hermitian(g2)[0], "spin-flip eigenvalue");
    lambdas[0] = std::sqrt(top_sq);
    const double det = std::abs(tau(0, 0) * tau(1, 1) - tau(0, 1) * tau(1, 0));
    lambdas[1] = lambdas[0] > 0.0 ? std::min(det / lambdas[0], lambdas[0]) : 0.0;
    return lambdas;
  }

  const auto mu = eig_hermitian(gram);
  for (std::size_t k = 0; k < 4; ++k) lambdas[k] = std::sqrt(clip_negative(mu[k], "spin-flip eigenvalue"));
  return lambdas;
}

double wootters_concurrence(const DensityMatrix4& rho) {
  const auto l = spin_flip_lambdas(rho);
  return clamp_unit(std::max(0.0, l[0] - l[1] - l[2] - l[3]), "concurrence");
}

double concurrence_pure_bipartition(const PureState3Q& state, int qubit) {
  const auto rho = partial_trace(state, qubit);
  const double det = clip_negative(det2(rho.matrix()).real(), "single-qubit determinant");
  return clamp_unit(2.0 * std::sqrt(det), "bipartition concurrence");
}

double binary_entropy(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double eof_from_concurrence(double c) {
  if (!std::isfinite(c) || c < -kUnitSlack || c > 1.0 + kUnitSlack)
    throw std::invalid_argument("concurrence out of [0, 1]: " + std::to_string(c));
  if (c <= 0.0) return 0.0;
  if (c >= 1.0) return 1.0;
  const double x = 0.5 * (1.0 + std::sqrt(1.0 - c * c));
  return binary_entropy(x);
}

ConcurrenceTriple reduced_pair_concurrences(const PureState3Q& state) {
  return {wootters_concurrence(partial_trace(state, 1, 2)), wootters_concurrence(partial_trace(state, 1, 3)),
          wootters_concurrence(partial_trace(state, 2, 3))};
}

ConcurrenceTriple ghz_closed_form_concurrences(const GhzParams& p) {
  p.validate();
  const double four_k = 4.0 * p.normalizer();
  const auto& g = p.g;
  const double s1 = std::sqrt(1.0 - 4.0 * g[0] * g[0]);
  const double s2 = std::sqrt(1.0 - 4.0 * g[1] * g[1]);
  const double s3 = std::sqrt(1.0 - 4.0 * g[2] * g[2]);
  return {2.0 * g[2] * s1 * s2 / four_k, 2.0 * g[1] * s1 * s3 / four_k, 2.0 * g[0] * s2 * s3 / four_k};
}

ConcurrenceTriple w_closed_form_concurrences(const WParams& p) {
  p.validate();
  return {2.0 * std::sqrt(p.x * p.y), 2.0 * std::sqrt(p.x * p.z), 2.0 * std::sqrt(p.y * p.z)};
}

ConcurrenceTriple closed_form_concurrences(const ParamRecord& p) {
  if (const auto* g = std::get_if<GhzParams>(&p)) return ghz_closed_form_concurrences(*g);
  return w_closed_form_concurrences(std::get<WParams>(p));
}

double tangle(const PureState3Q& state, int focus) {
  if (focus < 1 || focus > 3) throw std::invalid_argument("focus qubit must be 1, 2 or 3");
  const int partner = focus == 1 ? 2 : 1;
  return 4.0 * spin_flip_product(state, 6 - focus - partner);
}

double tangle_by_definition(const PureState3Q& state, int focus) {
  if (focus < 1 || focus > 3) throw std::invalid_argument("focus qubit must be 1, 2 or 3");
  const int b = focus == 1 ? 2 : 1;
  const int c = 6 - focus - b;
  const double whole = concurrence_pure_bipartition(state, focus);
  const double cab = wootters_concurrence(partial_trace(state, focus, b));
  const double cac = wootters_concurrence(partial_trace(state, focus, c));
  return clip_negative(whole * whole - cab * cab - cac * cac, "tangle");
}

double generalized_concurrence(const PureState3Q& state) {
  double purities = 0.0;
  for (int q = 1; q <= 3; ++q) purities += partial_trace(state, q).purity();
  purities += partial_trace(state, 1, 2).purity();
  purities += partial_trace(state, 1, 3).purity();
  purities += partial_trace(state, 2, 3).purity();
  const double radicand = clip_negative(6.0 - purities, "generalized concurrence radicand");
  return std::pow(2.0, 1.0 - 1.5) * std::sqrt(radicand);
}

}  // namespace monolab
