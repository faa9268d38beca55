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

#include "qwalk/spectral.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <numbers>
#include <optional>
#include <string>
#include <thread>

#include "qwalk/numkernel.hpp"
#include "qwalk/observables.hpp"

namespace qwalk {

std::vector<double> linear_detrend(std::span<const double> series) {
  const std::size_t n = series.size();
  if (n < 2) throw std::invalid_argument("linear_detrend: need at least 2 samples");

  const double t_mean = 0.5 * static_cast<double>(n - 1);
  double x_mean = 0.0;
  for (double x : series) x_mean += x;
  x_mean /= static_cast<double>(n);

  double sxy = 0.0, sxx = 0.0;
  for (std::size_t t = 0; t < n; ++t) {
    const double tc = static_cast<double>(t) - t_mean;
    sxy += tc * (series[t] - x_mean);
    sxx += tc * tc;
  }
  const double slope = sxy / sxx;

  std::vector<double> out(n);
  for (std::size_t t = 0; t < n; ++t) {
    out[t] = series[t] - x_mean - slope * (static_cast<double>(t) - t_mean);
  }
  return out;
}

std::vector<double> tukey_window(std::size_t length, double alpha) {
  if (length < 2) throw std::invalid_argument("tukey_window: length must be >= 2");
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("tukey_window: alpha must lie in [0, 1]");
  }
  std::vector<double> w(length, 1.0);
  if (alpha == 0.0) return w;

  const double span = static_cast<double>(length - 1);
  const double lobe = alpha * span;
  const double rise_end = lobe / 2.0;
  const double fall_start = span * (1.0 - alpha / 2.0);
  for (std::size_t i = 0; i < length; ++i) {
    const double n = static_cast<double>(i);
    if (n <= rise_end) {
      w[i] = 0.5 * (1.0 + std::cos(std::numbers::pi * (2.0 * n / lobe - 1.0)));
    } else if (n >= fall_start) {
      w[i] = 0.5 * (1.0 + std::cos(std::numbers::pi *
                                   (2.0 * n / lobe - 2.0 / alpha + 1.0)));
    }
  }
  return w;
}

PowerSpectrum power_spectrum(std::span<const double> series, double alpha,
                             double empty_tolerance) {
  const std::size_t len = series.size();
  if (len < kMinSpectrumLength) {
    throw std::invalid_argument("power_spectrum: series needs at least " +
                                std::to_string(kMinSpectrumLength) + " samples");
  }
  const std::vector<double> detrended = linear_detrend(series);
  const std::vector<double> window = tukey_window(len, alpha);

  ComplexVector windowed(len);
  double peak = 0.0;
  for (std::size_t i = 0; i < len; ++i) {
    windowed[i] = detrended[i] * window[i];
    peak = std::max(peak, std::abs(windowed[i].real()));
  }

  PowerSpectrum spec;
  spec.series_length = len;
  spec.bins.assign(len / 2 + 1, 0.0);
  if (peak <= empty_tolerance) {
    spec.empty = true;
    return spec;
  }

  const ComplexVector transform = dft(windowed);
  double total = 0.0;
  for (std::size_t k = 0; k < spec.bins.size(); ++k) {
    spec.bins[k] = std::norm(transform[k]);
    total += spec.bins[k];
  }
  if (!(total > 0.0)) {
    std::fill(spec.bins.begin(), spec.bins.end(), 0.0);
    spec.empty = true;
    return spec;
  }
  for (double& b : spec.bins) b /= total;
  return spec;
}

std::vector<ProminentFrequency> prominent_frequencies(const PowerSpectrum& spectrum) {
  std::vector<ProminentFrequency> out;
  if (spectrum.empty || spectrum.bins.size() < 2) return out;

  std::vector<double> sorted(spectrum.bins.begin() + 1, spectrum.bins.end());
  const std::size_t m = sorted.size();
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  const std::size_t top = (5 * m + 99) / 100;
  const std::size_t second = (10 * m + 99) / 100;
  const double tier1 = sorted[top - 1];
  const double tier2 = sorted[second - 1];

  for (std::size_t k = 1; k < spectrum.bins.size(); ++k) {
    const double p = spectrum.bins[k];
    if (p >= tier1) {
      out.push_back({k, spectrum.frequency(k), 1});
    } else if (p >= tier2) {
      out.push_back({k, spectrum.frequency(k), 2});
    }
  }
  return out;
}

TwoParticleState make_initial_state(std::shared_ptr<const WalkSpace> space,
                                    const InitialStateSpec& spec) {
  switch (spec.kind) {
    case InitialStateSpec::Kind::kEqual:
      return equal_superposition_state(std::move(space));
    case InitialStateSpec::Kind::kRandom:
      return random_state(std::move(space), spec.seed);
  }
  throw std::invalid_argument("make_initial_state: unknown kind");
}

SweepError::SweepError(double phi, const std::string& what)
    : std::runtime_error("sweep failed at phi = " + std::to_string(phi) + ": " + what),
      phi_(phi) {}

std::vector<ProminentFrequency> entanglement_frequencies(
    std::shared_ptr<const WalkSpace> space, double phi, const SweepOptions& options) {
  const InteractionScheme scheme(phi);
  const SeriesRecord rec =
      record_series(make_initial_state(std::move(space), options.initial), scheme,
                    options.steps);
  return prominent_frequencies(power_spectrum(rec.entanglement, options.alpha));
}

FeigenbaumData feigenbaum_sweep(std::shared_ptr<const WalkSpace> space,
                                std::span<const double> phi_grid,
                                const SweepOptions& options) {
  if (phi_grid.empty()) throw std::invalid_argument("feigenbaum_sweep: empty phi grid");
  if (options.steps < kMinSpectrumLength) {
    throw std::invalid_argument("feigenbaum_sweep: steps must be >= " +
                                std::to_string(kMinSpectrumLength));
  }

  const std::size_t count = phi_grid.size();
  std::vector<std::vector<ProminentFrequency>> results(count);
  std::vector<std::optional<std::string>> errors(count);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
      try {
        results[i] = entanglement_frequencies(space, phi_grid[i], options);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };

  std::size_t threads = options.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, count);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  FeigenbaumData data;
  for (std::size_t i = 0; i < count; ++i) {
    if (errors[i]) throw SweepError(phi_grid[i], *errors[i]);
    for (const ProminentFrequency& f : results[i]) {
      data.points.push_back({phi_grid[i], f.frequency, f.tier});
    }
  }
  std::stable_sort(data.points.begin(), data.points.end(),
                   [](const FeigenbaumPoint& a, const FeigenbaumPoint& b) {
                     if (a.phi != b.phi) return a.phi < b.phi;
                     return a.frequency < b.frequency;
                   });
  return data;
}

}  // namespace qwalk
