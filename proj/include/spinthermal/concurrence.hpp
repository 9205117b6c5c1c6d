#pragma once

#include <array>

#include "spinthermal/linalg.hpp"
#include "spinthermal/spin_model.hpp"
#include "spinthermal/thermal.hpp"

namespace spinthermal {

struct ConcurrenceResult {
  std::array<double, 4> lambdas{};  // descending
  double C = 0.0;
};

/// Wootters concurrence of an arbitrary two-qubit state.
///
/// The lambdas are square roots of the eigenvalues of rho * rho_tilde with
/// rho_tilde = (sy x sy) conj(rho) (sy x sy), conj taken entry-wise in the
/// computational basis. They are computed as the singular values of
/// sqrt(rho) sqrt(rho_tilde), which avoids any general complex eigensolver.
/// Throws NotPSD if rho has eigenvalues below -1e-12.
ConcurrenceResult concurrence_general(const ComplexMatrix& rho);

/// (sy x sy) conj(rho) (sy x sy)
ComplexMatrix spin_flip(const ComplexMatrix& rho);

/// C = 4/(3Z) max(|y| - sqrt(uv), 0)
double concurrence_xstate(const XStateParams& p);

/// Evaluates the model's closed-form concurrence at temperature T > 0.
/// Throws UnsupportedModel for GeneralXYZ.
double concurrence_closed_form(const ModelSpec& spec, double T);

/// Full numeric route: diagonalize, build the Gibbs state, trace out one site
/// (default: site 3, leaving pair (1,2)) and apply concurrence_general.
ConcurrenceResult concurrence_numeric(const ModelSpec& spec, double T, int traced_site = 3);

}  // namespace spinthermal
