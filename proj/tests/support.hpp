#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <utility>
#include <random>
#include <vector>

#include "spinthermal/linalg.hpp"

namespace spinthermal::fixtures {

inline ComplexVector basis_ket(std::size_t dim, std::size_t index) {
  ComplexVector v(dim);
  v.at(index) = 1.0;
  return v;
}

inline const Complex kQ = std::polar(1.0, 2.0 * std::acos(-1.0) / 3.0);

/// The eight ring eigenstates written out term by term (|q1 q2 q3> -> 4 q1 + 2 q2 + q3).
inline std::vector<ComplexVector> listed_eigenstates() {
  const double n = 1.0 / std::sqrt(3.0);
  const Complex q = kQ, q2 = kQ * kQ;
  auto ket = [](std::initializer_list<std::pair<int, Complex>> terms, double scale) {
    ComplexVector v(8);
    for (auto [i, a] : terms) v[i] = a * scale;
    return v;
  };
  return {
      ket({{0, 1.0}}, 1.0),
      ket({{1, q}, {2, q2}, {4, 1.0}}, n),
      ket({{1, q2}, {2, q}, {4, 1.0}}, n),
      ket({{1, 1.0}, {2, 1.0}, {4, 1.0}}, n),
      ket({{6, q}, {5, q2}, {3, 1.0}}, n),
      ket({{6, q2}, {5, q}, {3, 1.0}}, n),
      ket({{6, 1.0}, {5, 1.0}, {3, 1.0}}, n),
      ket({{7, 1.0}}, 1.0),
  };
}

/// Sum of |psi_k><psi_k| over the listed indices (unnormalized).
inline ComplexMatrix projector_sum(std::initializer_list<int> indices) {
  const auto states = listed_eigenstates();
  ComplexMatrix m(8);
  for (int k : indices) m += ComplexMatrix::outer(states[k], states[k]);
  return m;
}

/// Largest |a_i - b_i| after sorting both ascending.
inline double multiset_distance(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double worst = a.size() == b.size() ? 0.0 : 1e300;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

inline ComplexMatrix random_hermitian(std::mt19937_64& rng, std::size_t dim) {
  std::normal_distribution<double> g;
  ComplexMatrix m(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    m(r, r) = g(rng);
    for (std::size_t c = r + 1; c < dim; ++c) {
      m(r, c) = {g(rng), g(rng)};
      m(c, r) = std::conj(m(r, c));
    }
  }
  return m;
}

/// A^H A / tr(A^H A) for a random complex A: a generic full-rank state.
inline ComplexMatrix random_density(std::mt19937_64& rng, std::size_t dim) {
  std::normal_distribution<double> g;
  ComplexMatrix a(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) a(r, c) = {g(rng), g(rng)};
  ComplexMatrix rho = a.adjoint() * a;
  return rho * (1.0 / rho.trace().real());
}

}  // namespace spinthermal::fixtures
