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

#include "qwalk/numkernel.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <utility>

namespace qwalk {

namespace {

bool all_finite(std::span<const Complex> v) {
  return std::all_of(v.begin(), v.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

}  // namespace

HermitianMatrix::HermitianMatrix(std::size_t dim, ComplexVector entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim_ == 0) {
    throw std::invalid_argument("HermitianMatrix: dimension must be positive");
  }
  if (entries_.size() != dim_ * dim_) {
    throw std::invalid_argument("HermitianMatrix: expected " +
                                std::to_string(dim_ * dim_) + " entries, got " +
                                std::to_string(entries_.size()));
  }
  if (!all_finite(entries_)) {
    throw std::invalid_argument("HermitianMatrix: non-finite entry");
  }
  const double defect = hermitian_defect();
  if (defect > kHermitianTolerance) {
    throw std::invalid_argument("HermitianMatrix: symmetry violation " +
                                std::to_string(defect));
  }
}

HermitianMatrix HermitianMatrix::from_upper(std::size_t dim,
                                            ComplexVector entries) {
  if (dim == 0) {
    throw std::invalid_argument("HermitianMatrix: dimension must be positive");
  }
  if (entries.size() != dim * dim) {
    throw std::invalid_argument("HermitianMatrix: entry count mismatch");
  }
  if (!all_finite(entries)) {
    throw std::invalid_argument("HermitianMatrix: non-finite entry");
  }
  for (std::size_t r = 0; r < dim; ++r) {
    entries[r * dim + r] = Complex(entries[r * dim + r].real(), 0.0);
    for (std::size_t c = r + 1; c < dim; ++c) {
      entries[c * dim + r] = std::conj(entries[r * dim + c]);
    }
  }
  HermitianMatrix m;
  m.dim_ = dim;
  m.entries_ = std::move(entries);
  return m;
}

Complex HermitianMatrix::trace() const noexcept {
  Complex t{};
  for (std::size_t i = 0; i < dim_; ++i) t += entries_[i * dim_ + i];
  return t;
}

double HermitianMatrix::frobenius_norm() const noexcept {
  return std::sqrt(squared_norm(entries_));
}

double HermitianMatrix::hermitian_defect() const noexcept {
  double worst = 0.0;
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = r; c < dim_; ++c) {
      worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    }
  }
  return worst;
}

double squared_norm(std::span<const Complex> x) noexcept {
  double s = 0.0;
  for (const Complex& z : x) s += std::norm(z);
  return s;
}

std::vector<double> hermitian_eigenvalues(const HermitianMatrix& m) {
  const std::size_t n = m.dim();
  ComplexVector a(m.entries().begin(), m.entries().end());
  auto at = [&](std::size_t r, std::size_t c) -> Complex& { return a[r * n + c]; };

  const double scale = m.frobenius_norm();
  const double target = 1e-12 * scale;

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = r + 1; c < n; ++c) s += 2.0 * std::norm(at(r, c));
    return std::sqrt(s);
  };

  // Pivots this small cannot move the off-diagonal norm across the target.
  const double negligible = target / (2.0 * static_cast<double>(n));

  constexpr int kMaxSweeps = 64;
  for (int sweep = 0; sweep < kMaxSweeps && off_norm() > target; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex g = at(p, q);
        const double mag = std::abs(g);
        if (mag <= negligible) continue;

        // Phase row/column q so that the pivot becomes the real number |g|,
        // then rotate rows p and q; columns follow by symmetry.
        const Complex u = g / mag;
        const double app = at(p, p).real();
        const double aqq = at(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        Complex* row_p = &at(p, 0);
        Complex* row_q = &at(q, 0);
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const Complex apr = row_p[r];
          const Complex aqr = u * row_q[r];
          row_p[r] = c * apr - s * aqr;
          row_q[r] = s * apr + c * aqr;
          at(r, p) = std::conj(row_p[r]);
          at(r, q) = std::conj(row_q[r]);
        }
        at(p, p) = app - t * mag;
        at(q, q) = aqq + t * mag;
        at(p, q) = 0.0;
        at(q, p) = 0.0;
      }
    }
  }
  if (off_norm() > target) {
    throw NumericError("hermitian_eigenvalues: no convergence after " +
                       std::to_string(kMaxSweeps) + " sweeps");
  }

  std::vector<double> evals(n);
  for (std::size_t i = 0; i < n; ++i) evals[i] = at(i, i).real();
  std::sort(evals.begin(), evals.end());
  return evals;
}

namespace {

// In-place iterative radix-2 transform; data.size() must be a power of two.
// Twiddles are evaluated directly rather than by recurrence.
void fft_pow2(ComplexVector& data, bool inverse) {
  const std::size_t n = data.size();
  if (n <= 1) return;

  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }

  const double sign = inverse ? 1.0 : -1.0;
  ComplexVector twiddle(n / 2);
  for (std::size_t k = 0; k < n / 2; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) /
                         static_cast<double>(n);
    twiddle[k] = Complex(std::cos(angle), sign * std::sin(angle));
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = n / len;
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const Complex w = twiddle[k * stride];
        const Complex even = data[start + k];
        const Complex odd = data[start + k + half] * w;
        data[start + k] = even + odd;
        data[start + k + half] = even - odd;
      }
    }
  }
}

ComplexVector bluestein(std::span<const Complex> x) {
  const std::size_t n = x.size();
  const std::size_t m = std::bit_ceil(2 * n - 1);

  // chirp[k] = exp(-i pi k^2 / n); k^2 is reduced mod 2n to keep the
  // argument small and the phase exact.
  ComplexVector chirp(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t k2 = (k * k) % (2 * n);
    const double angle =
        std::numbers::pi * static_cast<double>(k2) / static_cast<double>(n);
    chirp[k] = Complex(std::cos(angle), -std::sin(angle));
  }

  ComplexVector a(m), b(m);
  for (std::size_t k = 0; k < n; ++k) a[k] = x[k] * chirp[k];
  b[0] = std::conj(chirp[0]);
  for (std::size_t k = 1; k < n; ++k) {
    b[k] = std::conj(chirp[k]);
    b[m - k] = b[k];
  }

  fft_pow2(a, false);
  fft_pow2(b, false);
  for (std::size_t k = 0; k < m; ++k) a[k] *= b[k];
  fft_pow2(a, true);

  const double inv_m = 1.0 / static_cast<double>(m);
  ComplexVector out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = a[k] * inv_m * chirp[k];
  return out;
}

}  // namespace

ComplexVector dft(std::span<const Complex> x) {
  if (x.empty()) throw std::invalid_argument("dft: empty input");
  if (std::has_single_bit(x.size())) {
    ComplexVector out(x.begin(), x.end());
    fft_pow2(out, false);
    return out;
  }
  return bluestein(x);
}

}  // namespace qwalk
