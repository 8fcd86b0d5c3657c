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

// Finite discrete dynamical systems: a finite state set with an endofunction,
// equivariant maps between such systems, and the few limits and colimits the
// rest of the library is built from.

#ifndef DDSKIT_CORE_HPP
#define DDSKIT_CORE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ddskit {

// States are dense ids 0..size()-1.
using StateId = std::size_t;

class FiniteDds {
 public:
  // The empty system.
  FiniteDds() = default;

  // Throws invalid_argument on an out-of-range update target, a label count
  // that does not match the state count, or duplicate labels.
  explicit FiniteDds(std::vector<StateId> update,
                     std::vector<std::string> labels = {});

  std::size_t size() const noexcept { return update_.size(); }
  bool empty() const noexcept { return update_.empty(); }

  // f(x). Throws invalid_argument for an invalid state.
  StateId operator()(StateId x) const;

  std::span<const StateId> update() const noexcept { return update_; }

  bool has_labels() const noexcept { return !labels_.empty(); }
  std::span<const std::string> labels() const noexcept { return labels_; }

  // The label of x, or its decimal id when the system is unlabeled.
  std::string display(StateId x) const;

  bool operator==(const FiniteDds&) const = default;

 private:
  std::vector<StateId> update_;
  std::vector<std::string> labels_;
};

FiniteDds make_dds(std::size_t size, std::vector<StateId> update,
                   std::vector<std::string> labels = {});

// (Z/n, succ). Requires n >= 1.
FiniteDds cyclic_system(std::size_t n);

// f^t(x).
StateId step(const FiniteDds& d, StateId x, std::uint64_t t);

struct Trajectory {
  std::vector<StateId> tail;   // pre-periodic part
  std::vector<StateId> cycle;  // periodic part, nonempty

  std::size_t period() const noexcept { return cycle.size(); }
};

Trajectory trajectory(const FiniteDds& d, StateId x);

struct DdsMorphism {
  FiniteDds source;
  FiniteDds target;
  std::vector<StateId> map;
};

// Outcome of a structural check. On failure `witness` names a state at which
// the property breaks (when one exists).
struct CheckResult {
  bool ok = true;
  std::optional<StateId> witness;

  explicit operator bool() const noexcept { return ok; }
};

CheckResult check_morphism(const DdsMorphism& m);
CheckResult is_isomorphism(const DdsMorphism& m);

// Inverse of an isomorphism; nullopt when `m` is not one.
std::optional<DdsMorphism> inverse(const DdsMorphism& m);

// outer ∘ inner. Throws invalid_argument when inner.target != outer.source.
DdsMorphism compose(const DdsMorphism& outer, const DdsMorphism& inner);

DdsMorphism identity_morphism(const FiniteDds& d);

// State (x, y) of the product is encoded as x * b.size() + y.
FiniteDds product(const FiniteDds& a, const FiniteDds& b);
std::pair<DdsMorphism, DdsMorphism> product_projections(const FiniteDds& a,
                                                        const FiniteDds& b);

// States of `a` keep their ids; states of `b` are shifted by a.size().
FiniteDds coproduct(const FiniteDds& a, const FiniteDds& b);
std::pair<DdsMorphism, DdsMorphism> coproduct_injections(const FiniteDds& a,
                                                          const FiniteDds& b);

struct Pullback {
  FiniteDds system;
  std::vector<std::pair<StateId, StateId>> pairs;  // state id -> (x, y)
  DdsMorphism first;                               // to m1.source
  DdsMorphism second;                              // to m2.source
};

// { (x, y) : m1(x) = m2(y) } with the componentwise update. Both morphisms must
// be valid and share a target.
Pullback pullback(const DdsMorphism& m1, const DdsMorphism& m2);

// Connected components of the state space (orbits of the N-action), each
// sorted, ordered by smallest member.
std::vector<std::vector<StateId>> orbit_components(const FiniteDds& d);

}  // namespace ddskit

#endif  // DDSKIT_CORE_HPP
