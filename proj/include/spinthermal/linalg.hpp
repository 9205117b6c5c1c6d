#pragma once

// Dense complex linear algebra for the small (2x2 .. 8x8) matrices used
// throughout the library. No external numeric dependencies.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace spinthermal {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Square complex matrix, row-major storage.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim);
  /// Row-major nested list; throws std::invalid_argument if not square.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> values);
  /// |a><b|
  static ComplexMatrix outer(std::span<const Complex> a, std::span<const Complex> b);

  std::size_t dim() const { return dim_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

  std::span<const Complex> data() const { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix conj() const;
  Complex trace() const;
  double frobenius_norm() const;
  double max_abs() const;

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(Complex s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexVector operator*(const ComplexMatrix& a, std::span<const Complex> v);

  bool operator==(const ComplexMatrix&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

/// Largest entry-wise |a - b|. Dimensions must match.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

double norm(std::span<const Complex> v);
Complex inner(std::span<const Complex> a, std::span<const Complex> b);  // <a|b>

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Eigenvalues ascending; eigenvectors()[k] pairs with eigenvalues[k].
struct Spectrum {
  std::vector<double> eigenvalues;
  ComplexMatrix vectors;  // column k is eigenvector k

  ComplexVector eigenvector(std::size_t k) const;
};

/// Half-open index range [begin, end) of eigenvalues sharing one level.
struct DegenerateGroup {
  std::size_t begin = 0;
  std::size_t end = 0;
  double energy = 0.0;  // mean of the group
  std::size_t size() const { return end - begin; }
};

inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kJacobiThreshold = 1e-13;
inline constexpr int kJacobiSweepCap = 100;
inline constexpr double kDegeneracyTolerance = 1e-9;
inline constexpr double kPsdClamp = 1e-12;

bool is_hermitian(const ComplexMatrix& m, double rel_tol = kHermitianTolerance);

/// Cyclic complex Jacobi. Throws NotHermitian or NoConvergence.
Spectrum hermitian_eigen(const ComplexMatrix& m);

/// Groups consecutive eigenvalues closer than tol * (1 + |E|).
std::vector<DegenerateGroup> degenerate_groups(std::span<const double> sorted_eigenvalues,
                                               double tol = kDegeneracyTolerance);

/// Principal square root of a Hermitian PSD matrix. Eigenvalues in
/// [-1e-12, 0) are clamped to zero; anything lower throws NotPSD.
ComplexMatrix psd_sqrt(const ComplexMatrix& m);

}  // namespace spinthermal
