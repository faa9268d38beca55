// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qwalk {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Raised when a numeric contract is broken at run time (non-convergence,
/// a density matrix with a clearly negative eigenvalue, non-finite values).
/// Precondition violations use std::invalid_argument instead.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Absolute tolerance for |m(r,c) - conj(m(c,r))|.
inline constexpr double kHermitianTolerance = 1e-12;

/// Dense row-major square complex matrix that is Hermitian within
/// kHermitianTolerance. Construction validates the invariant.
class HermitianMatrix {
 public:
  /// Validates symmetry; throws std::invalid_argument on dim == 0, a size
  /// mismatch, non-finite entries, or a symmetry violation.
  HermitianMatrix(std::size_t dim, ComplexVector entries);

  /// Builds from the upper triangle only; the lower triangle is mirrored, so
  /// the result is exactly Hermitian. Diagonal imaginary parts are dropped.
  static HermitianMatrix from_upper(std::size_t dim, ComplexVector entries);

  std::size_t dim() const noexcept { return dim_; }
  const Complex& operator()(std::size_t r, std::size_t c) const noexcept {
    return entries_[r * dim_ + c];
  }
  std::span<const Complex> entries() const noexcept { return entries_; }

  Complex trace() const noexcept;
  double frobenius_norm() const noexcept;
  /// max |m(r,c) - conj(m(c,r))|.
  double hermitian_defect() const noexcept;

 private:
  HermitianMatrix() = default;
  std::size_t dim_ = 0;
  ComplexVector entries_;
};

/// Sum of |x_i|^2.
double squared_norm(std::span<const Complex> x) noexcept;

/// All eigenvalues in ascending order, by cyclic complex Jacobi rotation.
/// Iterates until the off-diagonal Frobenius norm drops below 1e-12 of the
/// matrix norm; throws NumericError if that does not happen in 64 sweeps.
std::vector<double> hermitian_eigenvalues(const HermitianMatrix& m);

/// X[k] = sum_n x[n] exp(-2 pi i k n / L), for any L >= 1.
/// Power-of-two lengths use iterative radix-2; other lengths go through
/// Bluestein's chirp-z reduction. Throws std::invalid_argument on empty input.
ComplexVector dft(std::span<const Complex> x);

}  // namespace qwalk
