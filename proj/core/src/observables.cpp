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

#include "qwalk/observables.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qwalk {

double JointProbability::total() const {
  return std::accumulate(p.begin(), p.end(), 0.0);
}

JointProbability joint_probability(const TwoParticleState& state) {
  const ArcTable& arcs = state.space().arcs();
  const std::size_t n = arcs.vertex_count();
  const std::size_t a = arcs.size();
  const auto& off = arcs.vertex_offset;
  const auto amps = state.amplitudes();

  JointProbability joint{n, std::vector<double>(n * n, 0.0)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t row = off[i]; row < off[i + 1]; ++row) {
      const Complex* r = amps.data() + row * a;
      for (std::size_t k = 0; k < n; ++k) {
        double s = 0.0;
        for (std::size_t c = off[k]; c < off[k + 1]; ++c) s += std::norm(r[c]);
        joint.p[i * n + k] += s;
      }
    }
  }
  return joint;
}

Marginals marginal_probabilities(const JointProbability& joint) {
  const std::size_t n = joint.n;
  Marginals m{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      m.particle1[i] += joint(i, k);
      m.particle2[k] += joint(i, k);
    }
  }
  return m;
}

Marginals marginal_probabilities(const TwoParticleState& state) {
  return marginal_probabilities(joint_probability(state));
}

HermitianMatrix reduced_density(const TwoParticleState& state) {
  const std::size_t a = state.arc_count();
  const auto amps = state.amplitudes();
  ComplexVector rho(a * a);
  for (std::size_t i = 0; i < a; ++i) {
    const Complex* ri = amps.data() + i * a;
    double diag = 0.0;
    for (std::size_t m = 0; m < a; ++m) diag += std::norm(ri[m]);
    rho[i * a + i] = diag;
    for (std::size_t k = i + 1; k < a; ++k) {
      const Complex* rk = amps.data() + k * a;
      Complex s{};
      for (std::size_t m = 0; m < a; ++m) s += ri[m] * std::conj(rk[m]);
      rho[i * a + k] = s;
    }
  }
  return HermitianMatrix::from_upper(a, std::move(rho));
}

double entropy_bits(std::span<const double> eigenvalues) {
  double e = 0.0;
  for (double lambda : eigenvalues) {
    if (lambda < kEigenFailureThreshold) {
      throw NumericError("entropy: eigenvalue " + std::to_string(lambda) +
                         " below failure threshold");
    }
    if (lambda <= 0.0) continue;
    e -= lambda * std::log2(lambda);
  }
  return std::max(e, 0.0);
}

double entanglement_entropy(const TwoParticleState& state) {
  return entropy_bits(hermitian_eigenvalues(reduced_density(state)));
}

DensityReport analyze_density(const TwoParticleState& state) {
  const HermitianMatrix rho = reduced_density(state);
  const std::vector<double> evals = hermitian_eigenvalues(rho);
  DensityReport r;
  r.trace_error = std::abs(rho.trace() - 1.0);
  r.hermitian_defect = rho.hermitian_defect();
  r.min_eigenvalue = evals.front();
  r.entropy_bits = entropy_bits(evals);
  r.max_entropy_bits = std::log2(static_cast<double>(rho.dim()));
  return r;
}

SeriesRecord record_series(TwoParticleState initial, const InteractionScheme& scheme,
                           std::size_t steps, const DensityObserver& observer) {
  if (steps < 1) throw std::invalid_argument("record_series: steps must be >= 1");
  const std::size_t n = initial.space().vertex_count();

  SeriesRecord rec;
  rec.entanglement.reserve(steps + 1);
  rec.marginal1.assign(n, std::vector<double>(steps + 1));
  rec.marginal2.assign(n, std::vector<double>(steps + 1));

  evolve(std::move(initial), scheme, steps,
         [&](std::size_t t, const TwoParticleState& s) {
           if (observer) {
             const DensityReport report = analyze_density(s);
             observer(t, s, report);
             rec.entanglement.push_back(report.entropy_bits);
           } else {
             rec.entanglement.push_back(entanglement_entropy(s));
           }
           const Marginals m = marginal_probabilities(s);
           for (std::size_t v = 0; v < n; ++v) {
             rec.marginal1[v][t] = m.particle1[v];
             rec.marginal2[v][t] = m.particle2[v];
           }
         });
  return rec;
}

}  // namespace qwalk
