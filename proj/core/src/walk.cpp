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

#include "qwalk/walk.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace qwalk {

WalkSpace::WalkSpace(Graph graph)
    : graph_(std::move(graph)), arcs_(build_arc_table(graph_)) {}

std::shared_ptr<const WalkSpace> make_space(Graph graph) {
  return std::make_shared<const WalkSpace>(std::move(graph));
}

InteractionScheme::InteractionScheme(double phi) : phi_(phi) {
  if (!std::isfinite(phi)) throw std::invalid_argument("InteractionScheme: phi not finite");
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  if (phi_ < 0.0 || phi_ >= kTwoPi) {
    phi_ = std::fmod(phi_, kTwoPi);
    if (phi_ < 0.0) phi_ += kTwoPi;
    if (phi_ >= kTwoPi) phi_ = 0.0;
  }
  phase_ = phi_ == 0.0 ? Complex(1.0, 0.0) : std::polar(1.0, phi_);
}

TwoParticleState::TwoParticleState(std::shared_ptr<const WalkSpace> space,
                                   ComplexVector amplitudes)
    : space_(std::move(space)), amplitudes_(std::move(amplitudes)) {
  if (!space_) throw std::invalid_argument("TwoParticleState: null space");
  if (amplitudes_.size() != space_->dimension()) {
    throw std::invalid_argument("TwoParticleState: expected " +
                                std::to_string(space_->dimension()) +
                                " amplitudes, got " + std::to_string(amplitudes_.size()));
  }
  for (const Complex& z : amplitudes_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw std::invalid_argument("TwoParticleState: non-finite amplitude");
    }
  }
  const double drift = std::abs(squared_norm() - 1.0);
  if (drift > kNormTolerance) {
    throw std::invalid_argument("TwoParticleState: not normalized (|norm^2 - 1| = " +
                                std::to_string(drift) + ")");
  }
}

std::vector<double> grover_coin(std::size_t d) {
  if (d < 1) throw std::invalid_argument("grover_coin: d must be >= 1");
  std::vector<double> g(d * d, 2.0 / static_cast<double>(d));
  for (std::size_t i = 0; i < d; ++i) g[i * d + i] -= 1.0;
  return g;
}

namespace kernel {

void apply_coin(const ArcTable& arcs, Complex interaction_phase, std::span<Complex> amps) {
  const std::size_t a = arcs.size();
  const std::size_t n = arcs.vertex_count();
  const auto& off = arcs.vertex_offset;

  // Particle 2: G(d_k) on each contiguous column segment of every row.
  for (std::size_t row = 0; row < a; ++row) {
    Complex* r = amps.data() + row * a;
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t lo = off[k], hi = off[k + 1];
      Complex sum{};
      for (std::size_t c = lo; c < hi; ++c) sum += r[c];
      sum *= 2.0 / static_cast<double>(hi - lo);
      for (std::size_t c = lo; c < hi; ++c) r[c] = sum - r[c];
    }
  }

  // Particle 1: G(d_i) down each column within the row segment of vertex i.
  ComplexVector col_sum(a);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t lo = off[i], hi = off[i + 1];
    std::fill(col_sum.begin(), col_sum.end(), Complex{});
    for (std::size_t row = lo; row < hi; ++row) {
      const Complex* r = amps.data() + row * a;
      for (std::size_t c = 0; c < a; ++c) col_sum[c] += r[c];
    }
    const double scale = 2.0 / static_cast<double>(hi - lo);
    for (std::size_t c = 0; c < a; ++c) col_sum[c] *= scale;
    for (std::size_t row = lo; row < hi; ++row) {
      Complex* r = amps.data() + row * a;
      for (std::size_t c = 0; c < a; ++c) r[c] = col_sum[c] - r[c];
    }
  }

  if (interaction_phase == Complex(1.0, 0.0)) return;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t row = off[i]; row < off[i + 1]; ++row) {
      Complex* r = amps.data() + row * a;
      for (std::size_t c = off[i]; c < off[i + 1]; ++c) r[c] *= interaction_phase;
    }
  }
}

void apply_shift(const ArcTable& arcs, std::span<const Complex> src, std::span<Complex> dst) {
  const std::size_t a = arcs.size();
  const auto& rev = arcs.reverse;
  for (std::size_t a1 = 0; a1 < a; ++a1) {
    const Complex* s = src.data() + a1 * a;
    Complex* d = dst.data() + rev[a1] * a;
    for (std::size_t a2 = 0; a2 < a; ++a2) d[rev[a2]] = s[a2];
  }
}

}  // namespace kernel

TwoParticleState apply_coin(const TwoParticleState& state, const InteractionScheme& scheme) {
  ComplexVector amps(state.amplitudes().begin(), state.amplitudes().end());
  kernel::apply_coin(state.space().arcs(), scheme.phase(), amps);
  return TwoParticleState(state.space_ptr(), std::move(amps));
}

TwoParticleState apply_shift(const TwoParticleState& state) {
  ComplexVector amps(state.amplitudes().size());
  kernel::apply_shift(state.space().arcs(), state.amplitudes(), amps);
  return TwoParticleState(state.space_ptr(), std::move(amps));
}

TwoParticleState step(const TwoParticleState& state, const InteractionScheme& scheme) {
  return apply_shift(apply_coin(state, scheme));
}

TwoParticleState equal_superposition_state(std::shared_ptr<const WalkSpace> space) {
  const ArcTable& arcs = space->arcs();
  const std::size_t a = arcs.size();
  const double n = static_cast<double>(space->vertex_count());

  // Per-arc factor 1 / sqrt(d_tail); the amplitude is their product over N.
  std::vector<double> factor(a);
  for (std::size_t v = 0; v < arcs.vertex_count(); ++v) {
    const double f = 1.0 / std::sqrt(static_cast<double>(arcs.degree(v)));
    for (std::size_t arc = arcs.vertex_offset[v]; arc < arcs.vertex_offset[v + 1]; ++arc) {
      factor[arc] = f;
    }
  }
  ComplexVector amps(a * a);
  for (std::size_t a1 = 0; a1 < a; ++a1) {
    for (std::size_t a2 = 0; a2 < a; ++a2) {
      amps[a1 * a + a2] = factor[a1] * factor[a2] / n;
    }
  }
  return TwoParticleState(std::move(space), std::move(amps));
}

TwoParticleState random_state(std::shared_ptr<const WalkSpace> space, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  ComplexVector amps(space->dimension());
  for (Complex& z : amps) {
    z = static_cast<double>(engine() >> 11) * 0x1.0p-53;
  }
  const double norm = std::sqrt(squared_norm(amps));
  if (norm == 0.0) throw NumericError("random_state: all draws were zero");
  for (Complex& z : amps) z /= norm;
  return TwoParticleState(std::move(space), std::move(amps));
}

TwoParticleState product_state(std::shared_ptr<const WalkSpace> space,
                               std::span<const Complex> particle1,
                               std::span<const Complex> particle2) {
  const std::size_t a = space->arc_count();
  if (particle1.size() != a || particle2.size() != a) {
    throw std::invalid_argument("product_state: factor length must equal arc count");
  }
  ComplexVector amps(a * a);
  for (std::size_t a1 = 0; a1 < a; ++a1) {
    for (std::size_t a2 = 0; a2 < a; ++a2) amps[a1 * a + a2] = particle1[a1] * particle2[a2];
  }
  const double norm = std::sqrt(squared_norm(amps));
  if (norm == 0.0) throw std::invalid_argument("product_state: zero vector");
  for (Complex& z : amps) z /= norm;
  return TwoParticleState(std::move(space), std::move(amps));
}

TwoParticleState basis_state(std::shared_ptr<const WalkSpace> space, std::size_t arc1,
                             std::size_t arc2) {
  const std::size_t a = space->arc_count();
  if (arc1 >= a || arc2 >= a) throw std::invalid_argument("basis_state: arc out of range");
  ComplexVector amps(a * a);
  amps[arc1 * a + arc2] = 1.0;
  return TwoParticleState(std::move(space), std::move(amps));
}

Evolver::Evolver(TwoParticleState initial, InteractionScheme scheme)
    : state_(std::move(initial)),
      scheme_(scheme),
      scratch_(state_.amplitudes().size()) {}

void Evolver::step() {
  const ArcTable& arcs = state_.space().arcs();
  kernel::apply_coin(arcs, scheme_.phase(), state_.amplitudes_);
  kernel::apply_shift(arcs, state_.amplitudes_, scratch_);
  std::swap(state_.amplitudes_, scratch_);
  ++time_;
}

TwoParticleState evolve(TwoParticleState initial, const InteractionScheme& scheme,
                        std::size_t steps, const StepObserver& observer) {
  Evolver ev(std::move(initial), scheme);
  if (observer) observer(0, ev.state());
  for (std::size_t t = 1; t <= steps; ++t) {
    ev.step();
    if (observer) observer(t, ev.state());
  }
  return std::move(ev).take_state();
}

}  // namespace qwalk
