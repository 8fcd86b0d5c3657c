// Copyright 2026 The ddskit Authors
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

#include <doctest.h>

#include "ddskit/attractor.hpp"
#include "ddskit/error.hpp"
#include "ddskit/semidirect.hpp"
#include "support.hpp"

using namespace ddskit;
using namespace ddskit::testing;

namespace {

// X = Z/2 (swap), E = X, p = id, Y = {0, 1}, g(e, y) = y xor e.
SemiDirectSpec parity_spec() {
  SemiDirectSpec s;
  s.base = cyclic_system(2);
  s.env_size = 2;
  s.drive = {0, 1};
  s.fiber_size = 2;
  s.fiber_update = {0, 1, 1, 0};
  return s;
}

}  // namespace

TEST_CASE("spec validation") {
  SemiDirectSpec s = parity_spec();
  CHECK_NOTHROW(s.validate());
  s.drive = {0};
  CHECK_THROWS_AS(s.validate(), Error);
  s = parity_spec();
  s.fiber_update = {0, 1, 1, 2};
  CHECK_THROWS_AS(s.validate(), Error);
  s = parity_spec();
  s.drive = {0, 2};
  CHECK_THROWS_AS(semidirect(s), Error);
}

TEST_CASE("semi-direct product update and projection") {
  Rng rng(51);
  for (int t = 0; t < 40; ++t) {
    const SemiDirectSpec s = random_semidirect_spec(rng, 5, 3, 3);
    const SemiDirect sd = semidirect(s);
    const std::size_t ny = s.fiber_size;
    for (StateId x = 0; x < s.base.size(); ++x)
      for (std::size_t y = 0; y < ny; ++y) {
        CHECK(sd.system(x * ny + y) == s.base(x) * ny + s.g(s.drive[x], y));
        CHECK(sd.projection.map[x * ny + y] == x);
      }
    CHECK(check_morphism(sd.projection));
  }
}

TEST_CASE("driven systems along a cycle") {
  const SemiDirectSpec s = parity_spec();
  const DdsMorphism c = cycle_morphism(s.base, NCycle{{0, 1}});
  CHECK(c.map == std::vector<StateId>{0, 1});
  const FiniteDds d = driven_system(c, s);
  // (t, y) -> (t + 1, y xor t).
  CHECK(d.update()[0 * 2 + 0] == 1 * 2 + 0);
  CHECK(d.update()[0 * 2 + 1] == 1 * 2 + 1);
  CHECK(d.update()[1 * 2 + 0] == 0 * 2 + 1);
  CHECK(d.update()[1 * 2 + 1] == 0 * 2 + 0);
  CHECK_THROWS_AS(cycle_morphism(s.base, NCycle{{0, 0}}), Error);
}

TEST_CASE("driven systems are pullbacks") {
  Rng rng(52);
  for (int t = 0; t < 40; ++t) {
    const SemiDirectSpec s = random_semidirect_spec(rng, 6, 3, 3);
    for (const auto& w : brute_system_cycles(s.base, uniform(rng, 1, 4))) {
      NCycle c{w};
      c.vertices.resize(minimal_period(c));
      const DdsMorphism alpha = cycle_morphism(s.base, c);
      std::vector<std::size_t> drive;
      for (StateId v : c.vertices) drive.push_back(s.drive[v]);
      const PullbackCheck pc = verify_pullback(alpha, drive, s);
      CHECK(pc.ok);
      CHECK(is_isomorphism(pc.phi));
      CHECK(pc.square.system.size() == c.length() * s.fiber_size);
    }
  }
}

TEST_CASE("parity example decomposes level by level") {
  const SemiDirectSpec s = parity_spec();
  // The product: (0, y) -> (1, y), (1, y) -> (0, 1 - y): a single 4-cycle.
  for (std::size_t n = 1; n <= 8; ++n) {
    const DecompositionReport r = decompose_attractors(s, n);
    CHECK(r.verified);
    CHECK(r.lhs.size() == (n % 4 == 0 ? 4u : 0u));
    CHECK(r.orbits.size() == (n % 2 == 0 ? 1u : 0u));
    CHECK(r.bijection.size() == r.lhs.size());
  }
}

TEST_CASE("decomposition sizes match brute force") {
  Rng rng(53);
  for (int t = 0; t < 60; ++t) {
    const SemiDirectSpec s = random_semidirect_spec(rng, 6, 3, 4);
    const FiniteDds total = semidirect(s).system;
    for (std::size_t n = 1; n <= 6; ++n) {
      const DecompositionReport r = decompose_attractors(s, n);
      CHECK(r.verified);
      CHECK(r.lhs.size() == brute_system_cycles(total, n).size());
      std::size_t rhs = 0;
      for (const auto& b : r.orbits) rhs += b.driven_cycles.size();
      CHECK(r.rhs.size() == rhs);
      CHECK(rhs == r.lhs.size());
      CHECK(r.base_cycles.size() == brute_system_cycles(s.base, n).size());
    }
  }
}

TEST_CASE("the driven system does not depend on the representative") {
  Rng rng(54);
  for (int t = 0; t < 40; ++t) {
    const SemiDirectSpec s = random_semidirect_spec(rng, 6, 3, 3);
    for (const auto& w : brute_system_cycles(s.base, 4)) {
      NCycle c{w};
      c.vertices.resize(minimal_period(c));
      const DdsMorphism alpha = cycle_morphism(s.base, c);
      for (std::size_t i = 0; i < c.length(); ++i) {
        const InvarianceCheck inv = representative_invariance(s, alpha, i);
        CHECK(inv.ok);
        CHECK(is_isomorphism(inv.iso));
      }
    }
  }
}
