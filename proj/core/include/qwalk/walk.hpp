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
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "qwalk/graph.hpp"
#include "qwalk/numkernel.hpp"

namespace qwalk {

/// A graph together with its arc table. States hold a shared pointer to one
/// of these; it is immutable after construction.
class WalkSpace {
 public:
  explicit WalkSpace(Graph graph);

  const Graph& graph() const noexcept { return graph_; }
  const ArcTable& arcs() const noexcept { return arcs_; }
  std::size_t arc_count() const noexcept { return arcs_.size(); }
  std::size_t vertex_count() const noexcept { return graph_.vertex_count(); }
  /// Two-particle Hilbert space dimension, arc_count()^2.
  std::size_t dimension() const noexcept { return arcs_.size() * arcs_.size(); }

 private:
  Graph graph_;
  ArcTable arcs_;
};

std::shared_ptr<const WalkSpace> make_space(Graph graph);

/// Strength of the phi-Grover interaction: the joint coin picks up e^{i phi}
/// whenever both particles sit on the same vertex.
class InteractionScheme {
 public:
  /// Finite phases are reduced into [0, 2 pi); non-finite ones throw.
  explicit InteractionScheme(double phi);

  double phi() const noexcept { return phi_; }
  Complex phase() const noexcept { return phase_; }

 private:
  double phi_;
  Complex phase_;
};

/// Normalization tolerance enforced on every state.
inline constexpr double kNormTolerance = 1e-10;

/// Pure state of two distinguishable walkers. Amplitude of the arc pair
/// (a1, a2), particle 1 first, lives at index a1 * A + a2.
class TwoParticleState {
 public:
  /// Throws std::invalid_argument on a size mismatch, non-finite entries, or
  /// |norm^2 - 1| > kNormTolerance.
  TwoParticleState(std::shared_ptr<const WalkSpace> space, ComplexVector amplitudes);

  const WalkSpace& space() const noexcept { return *space_; }
  const std::shared_ptr<const WalkSpace>& space_ptr() const noexcept { return space_; }
  std::size_t arc_count() const noexcept { return space_->arc_count(); }

  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  const Complex& amplitude(std::size_t arc1, std::size_t arc2) const {
    return amplitudes_[arc1 * arc_count() + arc2];
  }
  double squared_norm() const noexcept { return qwalk::squared_norm(amplitudes_); }

 private:
  friend class Evolver;
  struct Unchecked {};
  TwoParticleState(Unchecked, std::shared_ptr<const WalkSpace> space,
                   ComplexVector amplitudes)
      : space_(std::move(space)), amplitudes_(std::move(amplitudes)) {}

  std::shared_ptr<const WalkSpace> space_;
  ComplexVector amplitudes_;
};

/// d x d row-major Grover coin, entries 2/d - delta.
std::vector<double> grover_coin(std::size_t d);

/// Applies 1 (x) C: Grover (x) Grover on every vertex-pair block, with the
/// extra e^{i phi} on blocks where both particles share a vertex.
TwoParticleState apply_coin(const TwoParticleState& state, const InteractionScheme& scheme);

/// Flip-flop shift: moves amplitude of (a1, a2) to (reverse(a1), reverse(a2)).
TwoParticleState apply_shift(const TwoParticleState& state);

/// One walk step, shift after coin.
TwoParticleState step(const TwoParticleState& state, const InteractionScheme& scheme);

/// Amplitude 1 / (N sqrt(d_i d_k)) on every basis state.
TwoParticleState equal_superposition_state(std::shared_ptr<const WalkSpace> space);

/// Real amplitudes drawn i.i.d. uniform in [0, 1) then normalized. The
/// generator is std::mt19937_64 seeded with `seed`; each draw is the top 53
/// bits of one engine output scaled by 2^-53, taken in basis-index order.
TwoParticleState random_state(std::shared_ptr<const WalkSpace> space, std::uint64_t seed);

/// u (x) w for single-particle vectors of length A; normalized on return.
TwoParticleState product_state(std::shared_ptr<const WalkSpace> space,
                               std::span<const Complex> particle1,
                               std::span<const Complex> particle2);

/// |a1> (x) |a2>.
TwoParticleState basis_state(std::shared_ptr<const WalkSpace> space,
                             std::size_t arc1, std::size_t arc2);

/// Reusable in-place stepping engine. Never materializes the A^2 x A^2
/// operator: the coin costs O(A^2) per step via row/column sums and the
/// shift is a permutation into a scratch buffer.
class Evolver {
 public:
  Evolver(TwoParticleState initial, InteractionScheme scheme);

  void step();
  std::size_t time() const noexcept { return time_; }
  const TwoParticleState& state() const noexcept { return state_; }
  TwoParticleState take_state() && { return std::move(state_); }

 private:
  TwoParticleState state_;
  InteractionScheme scheme_;
  ComplexVector scratch_;
  std::size_t time_ = 0;
};

using StepObserver = std::function<void(std::size_t t, const TwoParticleState&)>;

/// Runs `steps` steps. The observer sees t = 0 (the initial state) and then
/// every t = 1..steps, synchronously and in order.
TwoParticleState evolve(TwoParticleState initial, const InteractionScheme& scheme,
                        std::size_t steps, const StepObserver& observer = {});

namespace kernel {

// In-place coin on a raw amplitude buffer of size A^2.
void apply_coin(const ArcTable& arcs, Complex interaction_phase, std::span<Complex> amps);

// dst = S src; dst must not alias src.
void apply_shift(const ArcTable& arcs, std::span<const Complex> src, std::span<Complex> dst);

}  // namespace kernel

}  // namespace qwalk
