#pragma once

// Three-qubit Heisenberg rings with periodic boundary (site 4 == site 1).
//
// Basis convention (fixed):
//   * basis index b = 4*q1 + 2*q2 + q3 for |q1 q2 q3>, qubit 1 most significant;
//   * sigma_z|1> = +|1>, sigma_z|0> = -|0>, so |000> has H_mag = -3B;
//   * sigma_+ = (sigma_x + i sigma_y)/2 maps |0> -> |1>.
// In this convention sigma_y = [[0, i], [-i, 0]]; the Pauli algebra
// sigma_x sigma_y = i sigma_z still holds.

#include <array>
#include <complex>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "spinthermal/linalg.hpp"

namespace spinthermal {

enum class ModelKind { XX, XXZ, XXZField, GeneralXYZ };

std::string_view to_string(ModelKind kind);
/// Accepts xx, xxz, xxzfield, xyz (case-insensitive). Throws std::invalid_argument.
ModelKind parse_model_kind(std::string_view name);

/// Which Hamiltonian and its couplings. Fields outside the variant are ignored.
struct ModelSpec {
  ModelKind kind = ModelKind::XX;
  double J = 0.0;
  double delta = 0.0;
  double B = 0.0;
  std::array<double, 3> couplings{};  // J1, J2, J3 (GeneralXYZ)
  std::array<double, 3> fields{};     // B1, B2, B3 (GeneralXYZ)

  static ModelSpec xx(double J) { return {ModelKind::XX, J}; }
  static ModelSpec xxz(double J, double delta) { return {ModelKind::XXZ, J, delta}; }
  static ModelSpec xxz_field(double J, double delta, double B) {
    return {ModelKind::XXZField, J, delta, B};
  }
  static ModelSpec xyz(std::array<double, 3> couplings, std::array<double, 3> fields) {
    return {ModelKind::GeneralXYZ, 0.0, 0.0, 0.0, couplings, fields};
  }

  /// Effective anisotropy and field (0 where the variant has none).
  double effective_delta() const;
  double effective_field() const;
  bool has_closed_form() const { return kind != ModelKind::GeneralXYZ; }
  /// Uniform couplings and fields: the ring commutes with the cyclic shift.
  bool is_uniform() const;

  bool operator==(const ModelSpec&) const = default;
};

enum class Axis { X, Y, Z, Plus, Minus };

inline constexpr std::size_t kSites = 3;
inline constexpr std::size_t kHilbertDim = 8;

/// q = exp(i 2 pi / 3)
inline const Complex kOmega = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);

/// Single-qubit operator in the fixed basis convention.
ComplexMatrix single_qubit(Axis axis);

/// Operator acting with `axis` on site 1..3, identity elsewhere (8x8).
ComplexMatrix pauli(int site, Axis axis);

ComplexMatrix build_hamiltonian(const ModelSpec& spec);

/// P|ijk> = |kij>.
ComplexMatrix cyclic_shift();

/// The eight closed-form ring eigenstates |psi_0> .. |psi_7>.
std::vector<ComplexVector> analytic_eigenstates();

/// Closed-form energies E_0 .. E_7 paired with analytic_eigenstates().
/// Throws UnsupportedModel for GeneralXYZ.
std::array<double, 8> analytic_energies(const ModelSpec& spec);

/// Eigenvalues of cyclic_shift() on |psi_0> .. |psi_7>: 1 on the symmetric
/// states, q on psi_1/psi_4 and q^2 on psi_2/psi_5. The inverse shift
/// P^-1|ijk> = |jki> swaps q and q^2.
std::array<Complex, 8> shift_eigenvalues();

}  // namespace spinthermal
