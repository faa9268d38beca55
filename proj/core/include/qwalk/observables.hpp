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

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "qwalk/numkernel.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

/// P(i, k): particle 1 on vertex i and particle 2 on vertex k.
struct JointProbability {
  std::size_t n = 0;
  std::vector<double> p;  // row-major n x n

  double operator()(std::size_t i, std::size_t k) const { return p[i * n + k]; }
  double total() const;
};

struct Marginals {
  std::vector<double> particle1;
  std::vector<double> particle2;
};

JointProbability joint_probability(const TwoParticleState& state);

/// Row and column sums of the joint distribution.
Marginals marginal_probabilities(const JointProbability& joint);
Marginals marginal_probabilities(const TwoParticleState& state);

/// Partial trace over particle 2 (position and coin). With the amplitudes
/// viewed as an A x A matrix M, this is M M^dagger, an A x A matrix over the
/// single-particle arc basis.
HermitianMatrix reduced_density(const TwoParticleState& state);

/// Eigenvalues in [-kEigenClampWindow, 0) are treated as exact zeros.
inline constexpr double kEigenClampWindow = 1e-12;
/// Anything more negative than this means the density matrix is broken.
inline constexpr double kEigenFailureThreshold = -1e-9;

/// -sum lambda log2 lambda with 0 log 0 = 0. Throws NumericError if any
/// eigenvalue is below kEigenFailureThreshold.
double entropy_bits(std::span<const double> eigenvalues);

/// Von Neumann entropy of particle 1's reduced density matrix, in bits.
double entanglement_entropy(const TwoParticleState& state);

/// Contract checks for one reduced density matrix.
struct DensityReport {
  double trace_error = 0.0;       // |Tr rho - 1|
  double hermitian_defect = 0.0;  // max |rho(r,c) - conj rho(c,r)|
  double min_eigenvalue = 0.0;
  double entropy_bits = 0.0;
  double max_entropy_bits = 0.0;  // log2(A)
};

DensityReport analyze_density(const TwoParticleState& state);

/// E(t) and the marginals for t = 0..steps.
struct SeriesRecord {
  std::vector<double> entanglement;
  /// marginal1[v][t] = P1(v, t); likewise for particle 2.
  std::vector<std::vector<double>> marginal1;
  std::vector<std::vector<double>> marginal2;
};

/// Called once per recorded step with the state and its density report.
using DensityObserver =
    std::function<void(std::size_t t, const TwoParticleState&, const DensityReport&)>;

/// Throws std::invalid_argument when steps < 1.
SeriesRecord record_series(TwoParticleState initial, const InteractionScheme& scheme,
                           std::size_t steps, const DensityObserver& observer = {});

}  // namespace qwalk
