#include "spinthermal/concurrence.hpp"

#include <algorithm>
#include <cmath>

#include "spinthermal/errors.hpp"

namespace spinthermal {

namespace {

double clip_boundary(double c) { return c > 0.0 ? c : 0.0; }

}  // namespace

ComplexMatrix spin_flip(const ComplexMatrix& rho) {
  static const ComplexMatrix yy = kron(single_qubit(Axis::Y), single_qubit(Axis::Y));
  return yy * rho.conj() * yy;
}

ConcurrenceResult concurrence_general(const ComplexMatrix& rho) {
  if (rho.dim() != 4) throw std::invalid_argument("concurrence_general: expected a 4x4 state");
  // lambda_i are the singular values of sqrt(rho) sqrt(rho_tilde), and
  // sqrt(rho_tilde) = YY conj(sqrt(rho)) YY. Reading them off the Hermitian
  // dilation [[0, A], [A^H, 0]] keeps absolute accuracy near zero; taking
  // square roots of the eigenvalues of A A^H would amplify roundoff to ~1e-8.
  static const ComplexMatrix yy = kron(single_qubit(Axis::Y), single_qubit(Axis::Y));
  const ComplexMatrix root = psd_sqrt(rho);
  const ComplexMatrix a = root * yy * root.conj();

  ComplexMatrix dilation(8);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      dilation(r, c + 4) = a(r, c);
      dilation(c + 4, r) = std::conj(a(r, c));
    }
  const Spectrum s = hermitian_eigen(dilation);
  ConcurrenceResult out;
  for (std::size_t k = 0; k < 4; ++k) out.lambdas[k] = std::max(s.eigenvalues[7 - k], 0.0);
  out.C = clip_boundary(out.lambdas[0] - out.lambdas[1] - out.lambdas[2] - out.lambdas[3]);
  return out;
}

double concurrence_xstate(const XStateParams& p) {
  return 4.0 / (3.0 * p.Z) * clip_boundary(std::abs(p.y) - std::sqrt(p.u * p.v));
}

namespace {

// max[(2|e^{-2x} - e^x| - 3 - 2e^x - e^{-2x}) / (3(1 + 2e^x + e^{-2x})), 0],
// with numerator and denominator divided by the dominant exponential.
double xx_closed_form(double x) {
  double num, den;
  if (x < 0.0) {
    const double e2 = std::exp(2.0 * x);  // 1 / e^{-2x}
    const double e3 = std::exp(3.0 * x);  // e^x / e^{-2x}
    num = 2.0 * std::abs(1.0 - e3) - 3.0 * e2 - 2.0 * e3 - 1.0;
    den = 3.0 * (e2 + 2.0 * e3 + 1.0);
  } else {
    const double em = std::exp(-x);       // 1 / e^x
    const double em3 = std::exp(-3.0 * x);  // e^{-2x} / e^x
    num = 2.0 * std::abs(em3 - 1.0) - 3.0 * em - 2.0 - em3;
    den = 3.0 * (em + 2.0 + em3);
  }
  return clip_boundary(num / den);
}

}  // namespace

double concurrence_closed_form(const ModelSpec& spec, double T) {
  if (!spec.has_closed_form())
    throw UnsupportedModel("concurrence_closed_form: no closed form for the general XYZ ring");
  if (!std::isfinite(T) || T <= 0.0) throw InvalidTemperature("concurrence_closed_form: T must be > 0");
  if (spec.kind == ModelKind::XX) return xx_closed_form(spec.J / T);
  const XStateParams p = scaled_xstate_params(spec, T).params;
  if (spec.kind == ModelKind::XXZ) return 4.0 / (3.0 * p.Z) * clip_boundary(std::abs(p.y) - p.v);
  return concurrence_xstate(p);
}

ConcurrenceResult concurrence_numeric(const ModelSpec& spec, double T, int traced_site) {
  return concurrence_general(partial_trace(gibbs_density(spec, T), traced_site));
}

}  // namespace spinthermal
