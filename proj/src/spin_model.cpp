#include "spinthermal/spin_model.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>

#include "spinthermal/errors.hpp"

namespace spinthermal {

std::string_view to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::XX: return "xx";
    case ModelKind::XXZ: return "xxz";
    case ModelKind::XXZField: return "xxzfield";
    case ModelKind::GeneralXYZ: return "xyz";
  }
  return "?";
}

ModelKind parse_model_kind(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (lower == "xx") return ModelKind::XX;
  if (lower == "xxz") return ModelKind::XXZ;
  if (lower == "xxzfield") return ModelKind::XXZField;
  if (lower == "xyz") return ModelKind::GeneralXYZ;
  throw std::invalid_argument("unknown model '" + std::string(name) + "'");
}

double ModelSpec::effective_delta() const {
  return (kind == ModelKind::XXZ || kind == ModelKind::XXZField) ? delta : 0.0;
}

double ModelSpec::effective_field() const { return kind == ModelKind::XXZField ? B : 0.0; }

bool ModelSpec::is_uniform() const {
  if (kind != ModelKind::GeneralXYZ) return true;
  return fields[0] == fields[1] && fields[1] == fields[2];
}

ComplexMatrix single_qubit(Axis axis) {
  const Complex i{0.0, 1.0};
  switch (axis) {
    case Axis::X: return {{0.0, 1.0}, {1.0, 0.0}};
    case Axis::Y: return {{0.0, i}, {-i, 0.0}};
    case Axis::Z: return {{-1.0, 0.0}, {0.0, 1.0}};
    case Axis::Plus: return {{0.0, 0.0}, {1.0, 0.0}};
    case Axis::Minus: return {{0.0, 1.0}, {0.0, 0.0}};
  }
  throw std::invalid_argument("single_qubit: bad axis");
}

ComplexMatrix pauli(int site, Axis axis) {
  if (site < 1 || site > static_cast<int>(kSites))
    throw std::invalid_argument("pauli: site must be 1..3");
  const ComplexMatrix id = ComplexMatrix::identity(2);
  ComplexMatrix out = ComplexMatrix::identity(1);
  for (int s = 1; s <= static_cast<int>(kSites); ++s) out = kron(out, s == site ? single_qubit(axis) : id);
  return out;
}

namespace {

int next_site(int n) { return n % static_cast<int>(kSites) + 1; }

ComplexMatrix bond_sum(Axis axis) {
  ComplexMatrix sum(kHilbertDim);
  for (int n = 1; n <= static_cast<int>(kSites); ++n) sum += pauli(n, axis) * pauli(next_site(n), axis);
  return sum;
}

ComplexMatrix magnetization() {
  ComplexMatrix sum(kHilbertDim);
  for (int n = 1; n <= static_cast<int>(kSites); ++n) sum += pauli(n, Axis::Z);
  return sum;
}

}  // namespace

ComplexMatrix build_hamiltonian(const ModelSpec& spec) {
  const ComplexMatrix id = ComplexMatrix::identity(kHilbertDim);
  if (spec.kind == ModelKind::GeneralXYZ) {
    ComplexMatrix h = 0.5 * spec.couplings[0] * bond_sum(Axis::X) +
                      0.5 * spec.couplings[1] * bond_sum(Axis::Y) +
                      0.5 * spec.couplings[2] * bond_sum(Axis::Z);
    for (int n = 1; n <= static_cast<int>(kSites); ++n) h += spec.fields[n - 1] * pauli(n, Axis::Z);
    return h;
  }

  ComplexMatrix h = 0.5 * spec.J * (bond_sum(Axis::X) + bond_sum(Axis::Y));
  if (spec.kind == ModelKind::XX) return h;

  // The (sigma_z sigma_z - 1) shift is kept exactly as in the model definition.
  h += 0.5 * spec.delta * spec.J * (bond_sum(Axis::Z) - 3.0 * id);
  if (spec.kind == ModelKind::XXZ) return h;

  h += spec.B * magnetization();
  return h;
}

ComplexMatrix cyclic_shift() {
  ComplexMatrix p(kHilbertDim);
  for (std::size_t b = 0; b < kHilbertDim; ++b) {
    const std::size_t i = (b >> 2) & 1, j = (b >> 1) & 1, k = b & 1;
    p(4 * k + 2 * i + j, b) = 1.0;
  }
  return p;
}

std::vector<ComplexVector> analytic_eigenstates() {
  const Complex q = kOmega;
  const Complex q2 = q * q;
  const double s = 1.0 / std::sqrt(3.0);
  auto ket = [](std::initializer_list<std::pair<std::size_t, Complex>> terms) {
    ComplexVector v(kHilbertDim);
    for (const auto& [index, amp] : terms) v[index] = amp;
    return v;
  };
  // Indices: |001>=1 |010>=2 |011>=3 |100>=4 |101>=5 |110>=6 |111>=7
  return {
      ket({{0, 1.0}}),
      ket({{1, s * q}, {2, s * q2}, {4, s}}),
      ket({{1, s * q2}, {2, s * q}, {4, s}}),
      ket({{1, s}, {2, s}, {4, s}}),
      ket({{6, s * q}, {5, s * q2}, {3, s}}),
      ket({{6, s * q2}, {5, s * q}, {3, s}}),
      ket({{6, s}, {5, s}, {3, s}}),
      ket({{7, 1.0}}),
  };
}

std::array<double, 8> analytic_energies(const ModelSpec& spec) {
  if (spec.kind == ModelKind::GeneralXYZ)
    throw UnsupportedModel("analytic_energies: no closed-form spectrum for the general XYZ ring");
  const double J = spec.J;
  const double d = spec.effective_delta();
  const double B = spec.effective_field();
  const double single = -2.0 * J * (d + 0.5);  // psi_1, psi_2, psi_4, psi_5
  const double sym = -2.0 * J * (d - 1.0);     // psi_3, psi_6
  return {-3.0 * B, single - B, single - B, sym - B, single + B, single + B, sym + B, 3.0 * B};
}

std::array<Complex, 8> shift_eigenvalues() {
  const Complex q = kOmega;
  const Complex q2 = q * q;
  return {1.0, q, q2, 1.0, q, q2, 1.0, 1.0};
}

}  // namespace spinthermal
