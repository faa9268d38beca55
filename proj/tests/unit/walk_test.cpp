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

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "qwalk/observables.hpp"

using namespace qwalk;

namespace {

constexpr double kPi = std::numbers::pi;

std::shared_ptr<const WalkSpace> space_of(const std::string& name) {
  return make_space(catalog(name));
}

ComplexVector swapped(const TwoParticleState& s) {
  const std::size_t a = s.arc_count();
  ComplexVector out(a * a);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t k = 0; k < a; ++k) out[k * a + i] = s.amplitude(i, k);
  return out;
}

ComplexVector normalized(ComplexVector v) {
  const double n = std::sqrt(squared_norm(v));
  for (Complex& z : v) z /= n;
  return v;
}

std::size_t arc_index(const ArcTable& t, Vertex tail, Vertex head) {
  const auto it = std::find(t.arcs.begin(), t.arcs.end(), Edge{tail, head});
  return static_cast<std::size_t>(it - t.arcs.begin());
}

}  // namespace

TEST(GroverCoin, SmallCases) {
  EXPECT_EQ(grover_coin(1), (std::vector<double>{1.0}));
  EXPECT_EQ(grover_coin(2), (std::vector<double>{0.0, 1.0, 1.0, 0.0}));
  const auto g3 = grover_coin(3);
  const double expected[] = {-1, 2, 2, 2, -1, 2, 2, 2, -1};
  for (std::size_t i = 0; i < 9; ++i) EXPECT_NEAR(g3[i], expected[i] / 3.0, 1e-15);
  for (std::size_t r = 0; r < 3; ++r) EXPECT_NEAR(g3[3 * r] + g3[3 * r + 1] + g3[3 * r + 2], 1.0, 1e-15);
  EXPECT_THROW(grover_coin(0), std::invalid_argument);
}

TEST(GroverCoin, UnitaryAndSymmetric) {
  for (std::size_t d = 1; d <= 9; ++d) {
    const auto g = grover_coin(d);
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) {
        EXPECT_EQ(g[r * d + c], g[c * d + r]);
        double dot = 0.0;
        for (std::size_t k = 0; k < d; ++k) dot += g[k * d + r] * g[k * d + c];
        EXPECT_NEAR(dot, r == c ? 1.0 : 0.0, 1e-12);
      }
    }
  }
}

TEST(InteractionScheme, ReducesPhaseAndRejectsNonFinite) {
  EXPECT_DOUBLE_EQ(InteractionScheme(0.5).phi(), 0.5);
  EXPECT_NEAR(InteractionScheme(-kPi / 2).phi(), 1.5 * kPi, 1e-15);
  EXPECT_NEAR(InteractionScheme(5 * kPi).phi(), kPi, 1e-14);
  EXPECT_EQ(InteractionScheme(0.0).phase(), Complex(1.0, 0.0));
  EXPECT_THROW(InteractionScheme{NAN}, std::invalid_argument);
  EXPECT_THROW(InteractionScheme{INFINITY}, std::invalid_argument);
}

TEST(TwoParticleState, ValidatesSizeAndNorm) {
  auto space = make_space(complete_graph(2, false));
  EXPECT_THROW(TwoParticleState(space, ComplexVector(3, 0.5)), std::invalid_argument);
  EXPECT_THROW(TwoParticleState(space, ComplexVector(4, 0.4)), std::invalid_argument);
  EXPECT_NO_THROW(TwoParticleState(space, ComplexVector(4, 0.5)));
}

TEST(EqualSuperposition, Amplitudes) {
  const auto k8 = equal_superposition_state(space_of("k8"));
  EXPECT_EQ(k8.amplitudes().size(), 3136u);
  for (const Complex& z : k8.amplitudes()) EXPECT_NEAR(std::abs(z - 1.0 / 56.0), 0.0, 1e-17);

  const auto k2 = equal_superposition_state(make_space(complete_graph(2, false)));
  for (const Complex& z : k2.amplitudes()) EXPECT_EQ(z, Complex(0.5, 0.0));

  for (const std::string& name : catalog_names()) {
    const auto s = equal_superposition_state(space_of(name));
    EXPECT_NEAR(s.squared_norm(), 1.0, 1e-12) << name;
    const ArcTable& t = s.space().arcs();
    const double n = static_cast<double>(t.vertex_count());
    for (std::size_t a1 = 0; a1 < t.size(); ++a1) {
      for (std::size_t a2 = 0; a2 < t.size(); ++a2) {
        const double di = static_cast<double>(t.degree(t.arcs[a1].first));
        const double dk = static_cast<double>(t.degree(t.arcs[a2].first));
        EXPECT_NEAR(s.amplitude(a1, a2).real(), 1.0 / (n * std::sqrt(di * dk)), 1e-16);
      }
    }
  }
}

TEST(RandomState, DeterministicNormalizedAndSeedSensitive) {
  auto space = space_of("q3");
  const auto a = random_state(space, 7);
  const auto b = random_state(space, 7);
  const auto c = random_state(space, 8);
  EXPECT_TRUE(std::equal(a.amplitudes().begin(), a.amplitudes().end(), b.amplitudes().begin()));
  EXPECT_NEAR(a.squared_norm(), 1.0, 1e-12);
  EXPECT_GT(oracle::max_abs_diff(a.amplitudes(), c.amplitudes()), 1e-6);
  for (const Complex& z : a.amplitudes()) {
    EXPECT_GE(z.real(), 0.0);
    EXPECT_EQ(z.imag(), 0.0);
  }
}

TEST(ApplyCoin, ZeroPhiIsNonInteracting) {
  // At phi = 0 every block is G (x) G, which the dense operator with phi = 0
  // followed by the inverse shift also produces.
  const Graph g = catalog("q3-modified");
  auto space = make_space(g);
  const auto psi = random_state(space, 3);
  const auto coined = apply_coin(psi, InteractionScheme(0.0));
  const auto via_dense = oracle::multiply(oracle::dense_two_particle_operator(g, 0.0), psi.amplitudes());
  const auto stepped = apply_shift(coined);
  EXPECT_LE(oracle::max_abs_diff(stepped.amplitudes(), via_dense), 1e-12);
}

TEST(ApplyCoin, PiFlipsSignOfSharedVertexBlocks) {
  auto space = space_of("k8-modified");
  const auto psi = random_state(space, 11);
  const auto c0 = apply_coin(psi, InteractionScheme(0.0));
  const auto cpi = apply_coin(psi, InteractionScheme(kPi));
  const ArcTable& t = space->arcs();
  for (std::size_t a1 = 0; a1 < t.size(); ++a1) {
    for (std::size_t a2 = 0; a2 < t.size(); ++a2) {
      const bool shared = t.arcs[a1].first == t.arcs[a2].first;
      const Complex expected = shared ? -c0.amplitude(a1, a2) : c0.amplitude(a1, a2);
      EXPECT_NEAR(std::abs(cpi.amplitude(a1, a2) - expected), 0.0, 1e-15);
    }
  }
}

TEST(ApplyCoin, EqualSuperpositionOnK8IsFixed) {
  const auto psi = equal_superposition_state(space_of("k8"));
  const auto coined = apply_coin(psi, InteractionScheme(0.0));
  EXPECT_LE(oracle::max_abs_diff(coined.amplitudes(), psi.amplitudes()), 1e-15);
}

TEST(ApplyCoin, PreservesNorm) {
  for (const std::string& name : catalog_names()) {
    const auto psi = random_state(space_of(name), 5);
    const auto coined = apply_coin(psi, InteractionScheme(0.37 * kPi));
    EXPECT_NEAR(coined.squared_norm(), 1.0, 1e-12) << name;
  }
}

TEST(ApplyShift, MovesAlongArcAndReversesCoin) {
  auto space = space_of("k8");
  const ArcTable& t = space->arcs();
  const auto psi = basis_state(space, arc_index(t, 0, 1), arc_index(t, 2, 3));
  const auto shifted = apply_shift(psi);
  EXPECT_EQ(shifted.amplitude(arc_index(t, 1, 0), arc_index(t, 3, 2)), Complex(1.0, 0.0));
  EXPECT_DOUBLE_EQ(shifted.squared_norm(), 1.0);
}

TEST(ApplyShift, IsAnInvolution) {
  const auto psi = random_state(space_of("k8"), 19);
  const auto twice = apply_shift(apply_shift(psi));
  EXPECT_TRUE(std::equal(psi.amplitudes().begin(), psi.amplitudes().end(),
                         twice.amplitudes().begin()));
}

TEST(ApplyShift, SelfLoopPairIsFixed) {
  auto space = make_space(complete_graph(3, true));
  const ArcTable& t = space->arcs();
  const std::size_t loop = arc_index(t, 1, 1);
  const auto shifted = apply_shift(basis_state(space, loop, loop));
  EXPECT_EQ(shifted.amplitude(loop, loop), Complex(1.0, 0.0));
}

TEST(Step, EqualSuperpositionOnK8IsStationaryAtZeroPhi) {
  const auto psi = equal_superposition_state(space_of("k8"));
  const auto next = step(psi, InteractionScheme(0.0));
  EXPECT_LE(oracle::max_abs_diff(next.amplitudes(), psi.amplitudes()), 1e-15);
}

TEST(Step, MatchesDenseOperatorOnSmallGraphs) {
  std::vector<Graph> graphs{oracle::path_graph(4), catalog("q3-modified"),
                            catalog("3ct2-unjoined"), cayley_tree(3, 1, false),
                            complete_graph(3, true),
                            Graph::from_edges(3, {{0, 1}, {1, 2}, {2, 2}})};
  for (const Graph& g : graphs) {
    auto space = make_space(g);
    ASSERT_LE(space->arc_count(), 20u);
    for (double phi : {0.0, 0.4 * kPi, 1.3}) {
      const auto u = oracle::dense_two_particle_operator(g, phi);
      auto psi = random_state(space, 21);
      ComplexVector dense(psi.amplitudes().begin(), psi.amplitudes().end());
      for (int t = 0; t < 10; ++t) {
        psi = step(psi, InteractionScheme(phi));
        dense = oracle::multiply(u, dense);
        EXPECT_LE(oracle::max_abs_diff(psi.amplitudes(), dense), 1e-12)
            << g.name() << " phi=" << phi << " t=" << t;
      }
    }
  }
}

TEST(Step, NormDriftPerStepAndOverThousandSteps) {
  auto psi = random_state(space_of("q3"), 4);
  Evolver ev(psi, InteractionScheme(0.3 * kPi));
  double prev = ev.state().squared_norm();
  for (int t = 0; t < 1000; ++t) {
    ev.step();
    const double now = ev.state().squared_norm();
    EXPECT_LE(std::abs(now - prev), 1e-13);
    prev = now;
  }
  EXPECT_NEAR(prev, 1.0, 1e-10);
}

TEST(Evolve, ZeroStepsCallsObserverOnce) {
  const auto psi = random_state(space_of("q3"), 1);
  int calls = 0;
  const auto out = evolve(psi, InteractionScheme(1.0), 0, [&](std::size_t t, const TwoParticleState& s) {
    EXPECT_EQ(t, 0u);
    EXPECT_TRUE(std::equal(s.amplitudes().begin(), s.amplitudes().end(), psi.amplitudes().begin()));
    ++calls;
  });
  EXPECT_EQ(calls, 1);
  EXPECT_TRUE(std::equal(out.amplitudes().begin(), out.amplitudes().end(), psi.amplitudes().begin()));
}

TEST(Evolve, ObserverSeesEveryStepInOrderAndMatchesStep) {
  const auto psi = random_state(space_of("3ct2-joined"), 2);
  const InteractionScheme scheme(0.6 * kPi);
  std::vector<std::size_t> seen;
  auto manual = psi;
  evolve(psi, scheme, 12, [&](std::size_t t, const TwoParticleState& s) {
    seen.push_back(t);
    if (t > 0) manual = step(manual, scheme);
    EXPECT_TRUE(std::equal(s.amplitudes().begin(), s.amplitudes().end(),
                           manual.amplitudes().begin()));
  });
  EXPECT_EQ(seen.size(), 13u);
  for (std::size_t t = 0; t < seen.size(); ++t) EXPECT_EQ(seen[t], t);
}

TEST(Evolve, ZeroPhiProductStateHasNoEntanglement) {
  auto space = space_of("q3-modified");
  const auto u = oracle::random_vector(space->arc_count(), 77);
  const auto w = oracle::random_vector(space->arc_count(), 78);
  evolve(product_state(space, u, w), InteractionScheme(0.0), 60,
         [](std::size_t, const TwoParticleState& s) { EXPECT_LE(entanglement_entropy(s), 1e-9); });
}

TEST(Evolve, K8EqualSuperpositionMarginalsStayUniform) {
  for (double phi : {0.1 * kPi, 0.75 * kPi, 0.99 * kPi}) {
    evolve(equal_superposition_state(space_of("k8")), InteractionScheme(phi), 50,
           [](std::size_t, const TwoParticleState& s) {
             const Marginals m = marginal_probabilities(s);
             for (std::size_t v = 0; v < 8; ++v) {
               EXPECT_NEAR(m.particle1[v], 0.125, 1e-12);
               EXPECT_NEAR(m.particle2[v], 0.125, 1e-12);
             }
           });
  }
}

TEST(Properties, ExchangeCovariance) {
  for (const std::string& name : catalog_names()) {
    auto space = space_of(name);
    const auto u = normalized(oracle::random_vector(space->arc_count(), 31));
    for (const auto& initial : {equal_superposition_state(space), product_state(space, u, u)}) {
      evolve(initial, InteractionScheme(0.7 * kPi), 40, [&](std::size_t t, const TwoParticleState& s) {
        EXPECT_LE(oracle::max_abs_diff(swapped(s), s.amplitudes()), 1e-10) << name << " t=" << t;
      });
    }
  }
}

TEST(Properties, ZeroPhiSeparabilityAgainstSingleParticleOracle) {
  for (const std::string& name : catalog_names()) {
    const Graph g = catalog(name);
    auto space = make_space(g);
    const auto single = oracle::dense_single_particle_operator(g);
    ComplexVector u = normalized(oracle::random_vector(space->arc_count(), 1234));
    auto psi = product_state(space, u, u);
    for (int t = 1; t <= 50; ++t) {
      psi = step(psi, InteractionScheme(0.0));
      u = oracle::multiply(single, u);
      const std::size_t a = u.size();
      ComplexVector expected(a * a);
      for (std::size_t i = 0; i < a; ++i)
        for (std::size_t k = 0; k < a; ++k) expected[i * a + k] = u[i] * u[k];
      ASSERT_LE(oracle::max_abs_diff(psi.amplitudes(), expected), 1e-10) << name << " t=" << t;
    }
  }
}
