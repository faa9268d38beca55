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
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

#include "qwalk/walk.hpp"

namespace qwalk {

/// Subtracts the least-squares line a + b t (t = 0, 1, ...).
/// Throws std::invalid_argument for fewer than 2 samples.
std::vector<double> linear_detrend(std::span<const double> series);

/// Tapered cosine window of the given length: cosine lobes over the first
/// and last alpha (length - 1) / 2 samples, flat 1 in between. alpha = 0 is
/// rectangular, alpha = 1 a full raised cosine.
std::vector<double> tukey_window(std::size_t length, double alpha);

inline constexpr double kDefaultAlpha = 0.4;
inline constexpr std::size_t kMinSpectrumLength = 8;
/// Windowed series whose largest magnitude is at or below this are reported
/// as an empty spectrum rather than normalized noise.
inline constexpr double kEmptySpectrumTolerance = 1e-9;

/// One-sided power spectrum of a real series, normalized to unit sum.
struct PowerSpectrum {
  std::size_t series_length = 0;
  /// bins[k] for k = 0..floor(L/2); frequency k / L cycles per step.
  std::vector<double> bins;
  bool empty = false;

  double frequency(std::size_t bin) const {
    return static_cast<double>(bin) / static_cast<double>(series_length);
  }
};

/// detrend -> window -> DFT -> |X|^2 on 0..floor(L/2) -> unit-sum.
/// Throws std::invalid_argument for L < 8 or alpha outside [0, 1].
PowerSpectrum power_spectrum(std::span<const double> series, double alpha = kDefaultAlpha,
                             double empty_tolerance = kEmptySpectrumTolerance);

struct ProminentFrequency {
  std::size_t bin = 0;
  double frequency = 0.0;
  int tier = 0;  // 1: top 5% of bin powers, 2: next 5%
};

/// Tiers over the bins 1..floor(L/2) (DC excluded). With M bins, the tier-1
/// threshold is the ceil(5M/100)-th largest power and the tier-2 threshold
/// the ceil(10M/100)-th largest; ties at a threshold go to the higher tier.
/// Output is ordered by bin. An empty spectrum yields no frequencies.
std::vector<ProminentFrequency> prominent_frequencies(const PowerSpectrum& spectrum);

struct InitialStateSpec {
  enum class Kind { kEqual, kRandom };
  Kind kind = Kind::kEqual;
  std::uint64_t seed = 0;
};

TwoParticleState make_initial_state(std::shared_ptr<const WalkSpace> space,
                                    const InitialStateSpec& spec);

struct FeigenbaumPoint {
  double phi = 0.0;
  double frequency = 0.0;
  int tier = 0;

  friend bool operator==(const FeigenbaumPoint&, const FeigenbaumPoint&) = default;
};

struct FeigenbaumData {
  /// Sorted by (phi, frequency).
  std::vector<FeigenbaumPoint> points;
};

/// Thrown when one grid point of a sweep fails; carries the offending phi.
class SweepError : public std::runtime_error {
 public:
  SweepError(double phi, const std::string& what);
  double phi() const noexcept { return phi_; }

 private:
  double phi_;
};

struct SweepOptions {
  std::size_t steps = 500;
  double alpha = kDefaultAlpha;
  InitialStateSpec initial;
  /// 0 = std::thread::hardware_concurrency(). Output does not depend on it.
  std::size_t threads = 0;
};

/// Prominent frequencies of the entanglement series for one phi.
std::vector<ProminentFrequency> entanglement_frequencies(
    std::shared_ptr<const WalkSpace> space, double phi, const SweepOptions& options);

/// Runs entanglement_frequencies for every phi in the grid, in parallel,
/// and aggregates deterministically. Throws SweepError on the first failing
/// phi (in grid order).
FeigenbaumData feigenbaum_sweep(std::shared_ptr<const WalkSpace> space,
                                std::span<const double> phi_grid,
                                const SweepOptions& options);

}  // namespace qwalk
