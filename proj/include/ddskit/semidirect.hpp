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

// Semi-direct products (x, y) |-> (f(x), g(p(x), y)) and the decomposition of
// their periodic orbits over the periodic orbits of the base.
//
// Product states (x, y) are encoded as x * |Y| + y throughout.

#ifndef DDSKIT_SEMIDIRECT_HPP
#define DDSKIT_SEMIDIRECT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "ddskit/attractor.hpp"
#include "ddskit/core.hpp"

namespace ddskit {

struct SemiDirectSpec {
  FiniteDds base;                         // (X, f)
  std::size_t env_size = 1;               // |E|
  std::vector<std::size_t> drive;         // p: X -> E
  std::size_t fiber_size = 1;             // |Y|
  std::vector<std::size_t> fiber_update;  // g(e, y) at e * |Y| + y

  // Throws invalid_argument when p or g is not total or out of range.
  void validate() const;
  std::size_t g(std::size_t e, std::size_t y) const { return fiber_update[e * fiber_size + y]; }
};

struct SemiDirect {
  FiniteDds system;       // on X × Y
  DdsMorphism projection;  // to (X, f)
};

SemiDirect semidirect(const SemiDirectSpec& spec);

// The spec of (Z/k, succ) ⋊_{p∘c} g for a morphism c: (Z/k, succ) -> (X, f).
SemiDirectSpec driven_spec(const DdsMorphism& c, const SemiDirectSpec& spec);
FiniteDds driven_system(const DdsMorphism& c, const SemiDirectSpec& spec);

// The morphism (Z/k, succ) -> (X, f) reading the k-cycle of the base state
// space (v_0 ... v_{k-1}) as t |-> v_t.
DdsMorphism cycle_morphism(const FiniteDds& base, const NCycle& c);

struct PullbackCheck {
  bool ok = false;
  Pullback square;          // P = { (x, (x', y)) : alpha(x) = x' }
  DdsMorphism phi;          // (x, y) |-> (x, (alpha(x), y)) into P
  std::string message;

  explicit operator bool() const noexcept { return ok; }
};

// The semi-direct product over alpha.source along `drive` is the pullback of
// `lower` along alpha. Requires drive = lower.drive ∘ alpha.
PullbackCheck verify_pullback(const DdsMorphism& alpha, const std::vector<std::size_t>& drive,
                              const SemiDirectSpec& lower);

struct OrbitBlock {
  std::size_t k = 0;              // orbit size = minimal period
  NCycle representative;          // least rotation, cut to length k
  DdsMorphism c;                  // (Z/k, succ) -> base
  std::vector<Index> base_orbit;  // indices into DecompositionReport::base_cycles
  FiniteDds driven;
  std::vector<NCycle> driven_cycles;  // n-cycles of driven, lexicographic
  std::size_t rhs_offset = 0;         // first index of this block in rhs
};

struct DecompositionReport {
  std::size_t n = 0;
  FiniteDds total;
  std::vector<NCycle> lhs_cycles;  // n-cycles of the product system
  ZnSet lhs;
  std::vector<NCycle> base_cycles;
  std::vector<OrbitBlock> orbits;  // by least member of the base orbit
  ZnSet rhs;                       // block-wise disjoint union
  std::vector<Index> bijection;    // rhs index -> lhs index
  bool verified = false;
};

// Builds the decomposition at level n and checks that the bijection is a
// Z/n-equivariant bijection compatible with the projection to the base.
// A failed check throws internal_error.
DecompositionReport decompose_attractors(const SemiDirectSpec& spec, std::size_t n,
                                         const AttractorOptions& options = {});

struct InvarianceCheck {
  bool ok = false;
  DdsMorphism iso;  // driven(c ∘ ρ_i) -> driven(c), (t, y) |-> (t + i mod k, y)

  explicit operator bool() const noexcept { return ok; }
};

InvarianceCheck representative_invariance(const SemiDirectSpec& spec, const DdsMorphism& c,
                                          std::size_t i);

}  // namespace ddskit

#endif  // DDSKIT_SEMIDIRECT_HPP
