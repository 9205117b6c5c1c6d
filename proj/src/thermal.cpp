#include "spinthermal/thermal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "spinthermal/errors.hpp"

namespace spinthermal {

ThermalPoint ThermalPoint::from(double T, double J) {
  if (!std::isfinite(T) || T < 0.0)
    throw InvalidTemperature("temperature must be finite and >= 0, got " + std::to_string(T));
  ThermalPoint p;
  p.T = T;
  if (T == 0.0) {
    p.beta = std::numeric_limits<double>::infinity();
    p.x = J == 0.0 ? 0.0 : std::copysign(std::numeric_limits<double>::infinity(), J);
  } else {
    p.beta = 1.0 / T;
    p.x = J / T;
  }
  p.z = std::exp(p.x);
  return p;
}

ComplexMatrix XStateParams::matrix() const {
  const double s = 2.0 / (3.0 * Z);
  return {{s * u, 0.0, 0.0, 0.0}, {0.0, s * w, s * y, 0.0}, {0.0, s * y, s * w, 0.0}, {0.0, 0.0, 0.0, s * v}};
}

namespace {

void require_positive(double T) {
  if (!std::isfinite(T) || T <= 0.0)
    throw InvalidTemperature("temperature must be finite and > 0, got " + std::to_string(T));
}

}  // namespace

double log_partition_function(const ModelSpec& spec, double T) {
  require_positive(T);
  const Spectrum s = hermitian_eigen(build_hamiltonian(spec));
  const double e_min = s.eigenvalues.front();
  double sum = 0.0;
  for (double e : s.eigenvalues) sum += std::exp(-(e - e_min) / T);
  return -e_min / T + std::log(sum);
}

double partition_function(const ModelSpec& spec, double T) {
  return std::exp(log_partition_function(spec, T));
}

ComplexMatrix gibbs_density(const ModelSpec& spec, double T) {
  if (!std::isfinite(T) || T < 0.0)
    throw InvalidTemperature("temperature must be finite and >= 0, got " + std::to_string(T));
  const Spectrum s = hermitian_eigen(build_hamiltonian(spec));
  const std::size_t n = s.eigenvalues.size();

  std::vector<double> weights(n, 0.0);
  if (T == 0.0) {
    const DegenerateGroup ground = degenerate_groups(s.eigenvalues).front();
    for (std::size_t k = ground.begin; k < ground.end; ++k) weights[k] = 1.0;
  } else {
    const double e_min = s.eigenvalues.front();
    for (std::size_t k = 0; k < n; ++k) weights[k] = std::exp(-(s.eigenvalues[k] - e_min) / T);
  }
  double total = 0.0;
  for (double w : weights) total += w;

  ComplexMatrix rho(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (weights[k] == 0.0) continue;
    const double p = weights[k] / total;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        rho(r, c) += p * s.vectors(r, k) * std::conj(s.vectors(c, k));
  }
  return rho;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, int traced_site) {
  if (rho.dim() != kHilbertDim) throw std::invalid_argument("partial_trace: expected an 8x8 state");
  if (traced_site < 1 || traced_site > 3) throw std::invalid_argument("partial_trace: site must be 1..3");

  // Site s occupies bit (3 - s) of the basis index.
  std::array<int, 2> kept{};
  for (int s = 1, i = 0; s <= 3; ++s)
    if (s != traced_site) kept[i++] = s;
  auto full_index = [&](std::size_t pair, std::size_t e) {
    const std::size_t hi = (pair >> 1) & 1, lo = pair & 1;
    return (hi << (3 - kept[0])) | (lo << (3 - kept[1])) | (e << (3 - traced_site));
  };

  ComplexMatrix out(4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      for (std::size_t e = 0; e < 2; ++e) out(r, c) += rho(full_index(r, e), full_index(c, e));
  return out;
}

ScaledXState scaled_xstate_params(const ModelSpec& spec, double T) {
  if (!spec.has_closed_form())
    throw UnsupportedModel("xstate_params: no closed form for the general XYZ ring");
  require_positive(T);
  const double x = spec.J / T;
  const double d = spec.effective_delta();
  const double b = spec.effective_field() / T;

  // Boltzmann exponents: z^(2d+1) and z^(2d-2) are the one- and
  // two-magnon families, e^(+-b), e^(+-3b) the Zeeman factors.
  const double a1 = (2.0 * d + 1.0) * x;
  const double a2 = (2.0 * d - 2.0) * x;
  const double m = std::max({3.0 * std::abs(b), std::abs(b) + a1, std::abs(b) + a2});
  auto e = [m](double t) { return std::exp(t - m); };

  const double up = 2.0 * e(b + a1) + e(b + a2);     // e^{bB} z^{2d}(2z + z^-2)
  const double down = 2.0 * e(-b + a1) + e(-b + a2);  // e^{-bB} z^{2d}(2z + z^-2)

  XStateParams p;
  p.u = 1.5 * e(3.0 * b) + 0.5 * up;
  p.v = 1.5 * e(-3.0 * b) + 0.5 * down;
  p.w = 0.5 * (up + down);
  p.y = 0.5 * ((e(b + a2) - e(b + a1)) + (e(-b + a2) - e(-b + a1)));
  p.Z = e(3.0 * b) + e(-3.0 * b) + up + down;
  return {p, m};
}

XStateParams xstate_params(const ModelSpec& spec, double T) {
  const ScaledXState s = scaled_xstate_params(spec, T);
  const double k = std::exp(s.log_scale);
  XStateParams p = s.params;
  p.u *= k;
  p.v *= k;
  p.w *= k;
  p.y *= k;
  p.Z *= k;
  return p;
}

}  // namespace spinthermal
