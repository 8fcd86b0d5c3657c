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

#include "ddskit/semidirect.hpp"

#include <algorithm>

#include "ddskit/digraph.hpp"
#include "ddskit/error.hpp"

namespace ddskit {

void SemiDirectSpec::validate() const {
  if (env_size == 0 && !base.empty()) throw invalid_argument("environment set is empty");
  if (fiber_size == 0) throw invalid_argument("fiber set is empty");
  if (drive.size() != base.size()) throw invalid_argument("drive map is not total on X");
  for (std::size_t x = 0; x < drive.size(); ++x) {
    if (drive[x] >= env_size)
      throw invalid_argument("drive map sends state " + std::to_string(x) + " outside E");
  }
  if (fiber_update.size() != env_size * fiber_size)
    throw invalid_argument("fiber update is not total on E × Y");
  for (std::size_t v : fiber_update) {
    if (v >= fiber_size) throw invalid_argument("fiber update leaves Y");
  }
}

SemiDirect semidirect(const SemiDirectSpec& spec) {
  spec.validate();
  const std::size_t Y = spec.fiber_size;
  std::vector<StateId> update(spec.base.size() * Y);
  std::vector<StateId> proj(update.size());
  for (StateId x = 0; x < spec.base.size(); ++x) {
    for (std::size_t y = 0; y < Y; ++y) {
      update[x * Y + y] = spec.base.update()[x] * Y + spec.g(spec.drive[x], y);
      proj[x * Y + y] = x;
    }
  }
  SemiDirect out;
  out.system = FiniteDds(std::move(update));
  out.projection = DdsMorphism{out.system, spec.base, std::move(proj)};
  return out;
}

SemiDirectSpec driven_spec(const DdsMorphism& c, const SemiDirectSpec& spec) {
  spec.validate();
  const std::size_t k = c.source.size();
  if (k == 0 || c.source != cyclic_system(k))
    throw invalid_argument("driving cycle must start at (Z/k, succ)");
  if (c.target != spec.base) throw invalid_argument("driving cycle must land in the base");
  if (!check_morphism(c)) throw invalid_argument("driving cycle is not a morphism");
  SemiDirectSpec out;
  out.base = c.source;
  out.env_size = spec.env_size;
  out.fiber_size = spec.fiber_size;
  out.fiber_update = spec.fiber_update;
  for (StateId t = 0; t < k; ++t) out.drive.push_back(spec.drive[c.map[t]]);
  return out;
}

FiniteDds driven_system(const DdsMorphism& c, const SemiDirectSpec& spec) {
  return semidirect(driven_spec(c, spec)).system;
}

DdsMorphism cycle_morphism(const FiniteDds& base, const NCycle& c) {
  DdsMorphism out{cyclic_system(c.length()), base, c.vertices};
  if (c.length() == 0 || !check_morphism(out))
    throw invalid_argument("vertex sequence is not a cycle of the system");
  return out;
}

PullbackCheck verify_pullback(const DdsMorphism& alpha, const std::vector<std::size_t>& drive,
                              const SemiDirectSpec& lower) {
  lower.validate();
  if (!check_morphism(alpha)) throw invalid_argument("alpha is not a morphism");
  if (alpha.target != lower.base) throw invalid_argument("alpha must land in the lower base");
  if (drive.size() != alpha.source.size()) throw invalid_argument("drive map is not total");
  for (StateId x = 0; x < drive.size(); ++x) {
    if (drive[x] != lower.drive[alpha.map[x]]) {
      throw invalid_argument("drive maps do not form a commutative triangle at state " +
                             std::to_string(x));
    }
  }
  SemiDirectSpec upper = lower;
  upper.base = alpha.source;
  upper.drive = drive;
  const SemiDirect top = semidirect(upper);
  const SemiDirect bottom = semidirect(lower);

  PullbackCheck out;
  out.square = pullback(alpha, bottom.projection);
  const std::size_t Y = lower.fiber_size;
  std::vector<StateId> phi(top.system.size());
  for (StateId x = 0; x < alpha.source.size(); ++x) {
    for (std::size_t y = 0; y < Y; ++y) {
      const std::pair<StateId, StateId> target{x, alpha.map[x] * Y + y};
      auto it = std::find(out.square.pairs.begin(), out.square.pairs.end(), target);
      if (it == out.square.pairs.end()) throw internal_error("pullback misses (x, alpha(x), y)");
      phi[x * Y + y] = static_cast<StateId>(it - out.square.pairs.begin());
    }
  }
  out.phi = DdsMorphism{top.system, out.square.system, std::move(phi)};
  const CheckResult iso = is_isomorphism(out.phi);
  out.ok = iso.ok;
  if (!iso.ok) {
    out.message = "comparison map is not an isomorphism";
    if (iso.witness) out.message += " at state " + std::to_string(*iso.witness);
  }
  return out;
}

namespace {

ZnSet cycle_action(const std::vector<NCycle>& cycles) {
  ZnSet out;
  out.n = cycles.empty() ? 1 : cycles.front().length();
  for (const auto& c : cycles) {
    auto it = std::lower_bound(cycles.begin(), cycles.end(), rotate(c));
    out.action.push_back(static_cast<Index>(it - cycles.begin()));
  }
  return out;
}

Index index_of(const std::vector<NCycle>& sorted, const NCycle& c) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), c);
  if (it == sorted.end() || !(*it == c)) throw internal_error("cycle missing from its level");
  return static_cast<Index>(it - sorted.begin());
}

}  // namespace

DecompositionReport decompose_attractors(const SemiDirectSpec& spec, std::size_t n,
                                         const AttractorOptions& options) {
  if (n == 0) throw invalid_argument("cycle length must be >= 1");
  const std::size_t Y = spec.fiber_size;
  DecompositionReport r;
  r.n = n;
  r.total = semidirect(spec).system;
  r.lhs_cycles = enumerate_n_cycles(state_space(r.total), n, options);
  r.lhs = cycle_action(r.lhs_cycles);
  r.lhs.n = n;
  r.base_cycles = enumerate_n_cycles(state_space(spec.base), n, options);
  const ZnSet base_action = [&] {
    ZnSet z = cycle_action(r.base_cycles);
    z.n = n;
    return z;
  }();

  r.rhs.n = n;
  for (const auto& orbit : base_action.orbits()) {
    OrbitBlock block;
    block.base_orbit = orbit;
    // Orbits come ordered by least member; the least member is the least
    // rotation, and its orbit size is its minimal period.
    const NCycle& least = r.base_cycles[orbit.front()];
    block.k = minimal_period(least);
    if (block.k != orbit.size()) throw internal_error("orbit size differs from minimal period");
    block.representative.vertices.assign(least.vertices.begin(),
                                         least.vertices.begin() +
                                             static_cast<std::ptrdiff_t>(block.k));
    block.c = cycle_morphism(spec.base, block.representative);
    block.driven = driven_system(block.c, spec);
    block.driven_cycles = enumerate_n_cycles(state_space(block.driven), n, options);
    block.rhs_offset = r.rhs.action.size();
    const ZnSet local = cycle_action(block.driven_cycles);
    for (Index a : local.action) r.rhs.action.push_back(a + block.rhs_offset);
    for (const auto& w : block.driven_cycles) {
      NCycle image;
      for (Vertex s : w.vertices) image.vertices.push_back(block.c.map[s / Y] * Y + s % Y);
      r.bijection.push_back(index_of(r.lhs_cycles, image));
    }
    r.orbits.push_back(std::move(block));
  }

  // Bijectivity, equivariance, and compatibility with the projection.
  if (r.bijection.size() != r.lhs_cycles.size())
    throw internal_error("decomposition sides have different sizes");
  std::vector<bool> hit(r.lhs_cycles.size(), false);
  for (Index w = 0; w < r.bijection.size(); ++w) {
    if (hit[r.bijection[w]]) throw internal_error("decomposition map is not injective");
    hit[r.bijection[w]] = true;
    if (r.bijection[r.rhs.action[w]] != r.lhs.action[r.bijection[w]])
      throw internal_error("decomposition map is not equivariant");
  }
  for (const auto& block : r.orbits) {
    for (std::size_t j = 0; j < block.driven_cycles.size(); ++j) {
      NCycle down;
      for (Vertex s : r.lhs_cycles[r.bijection[block.rhs_offset + j]].vertices)
        down.vertices.push_back(s / Y);
      const Index b = index_of(r.base_cycles, down);
      if (std::find(block.base_orbit.begin(), block.base_orbit.end(), b) ==
          block.base_orbit.end())
        throw internal_error("projection leaves the indexing orbit");
    }
  }
  r.verified = true;
  return r;
}

InvarianceCheck representative_invariance(const SemiDirectSpec& spec, const DdsMorphism& c,
                                          std::size_t i) {
  const std::size_t k = c.source.size();
  if (k == 0 || i >= k) throw invalid_argument("rotation offset must be below the cycle length");
  DdsMorphism rotated = c;
  for (StateId t = 0; t < k; ++t) rotated.map[t] = c.map[(t + i) % k];
  const FiniteDds from = driven_system(rotated, spec);
  const FiniteDds to = driven_system(c, spec);
  const std::size_t Y = spec.fiber_size;
  std::vector<StateId> map(from.size());
  for (StateId t = 0; t < k; ++t)
    for (std::size_t y = 0; y < Y; ++y) map[t * Y + y] = ((t + i) % k) * Y + y;
  InvarianceCheck out;
  out.iso = DdsMorphism{from, to, std::move(map)};
  out.ok = is_isomorphism(out.iso).ok;
  return out;
}

}  // namespace ddskit
