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

// Abstract truncated cycle sets: validation, Properties A and B, the
// adjoints of evaluation, realization as a digraph and recognition.
//
// x·φ for a cycle map φ = (m, n, i) is deg_{n,m}(rot_n^i(x)).

#ifndef DDSKIT_CYCLESET_HPP
#define DDSKIT_CYCLESET_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ddskit/attractor.hpp"
#include "ddskit/digraph.hpp"
#include "ddskit/error.hpp"

namespace ddskit {

enum class Provenance {
  explicit_data,
  builtin_example,
  representable,
  coproduct,
  attractor_derived,
};

const char* provenance_name(Provenance p);

// A TruncatedCycleSet whose relations have been checked.
class AbstractCycleSet {
 public:
  const TruncatedCycleSet& cycles() const noexcept { return cycles_; }
  Provenance provenance() const noexcept { return provenance_; }
  std::size_t bound() const noexcept { return cycles_.bound(); }

  // x·φ for φ: C_m -> C_n, x in K_n.
  Index act(Index x, const CycleMap& phi) const;

  bool operator==(const AbstractCycleSet& o) const { return cycles_ == o.cycles_; }

 private:
  friend AbstractCycleSet validate(TruncatedCycleSet, Provenance);
  AbstractCycleSet(TruncatedCycleSet c, Provenance p)
      : cycles_(std::move(c)), provenance_(p) {}

  TruncatedCycleSet cycles_;
  Provenance provenance_ = Provenance::explicit_data;
};

// Throws RelationError carrying the first broken relation instance.
class RelationError : public Error {
 public:
  explicit RelationError(RelationViolation v);
  const RelationViolation& violation() const noexcept { return violation_; }

 private:
  RelationViolation violation_;
};

const char* relation_name(RelationViolation::Relation r);

AbstractCycleSet validate(TruncatedCycleSet raw,
                          Provenance provenance = Provenance::explicit_data);

AbstractCycleSet from_attractors(const AttractorSet& a);

struct NamedCycleSet {
  std::string name;
  AbstractCycleSet set;
};

// "a-not-b", "b-not-a", "not-ab", "a-without-unique-degens", truncated at N.
// Requires N >= 6.
std::vector<NamedCycleSet> builtin_examples(std::size_t bound);
AbstractCycleSet builtin_example(const std::string& name, std::size_t bound);

struct PropertyViolation {
  enum class Kind { A, B };
  Kind kind = Kind::A;
  // A: x != y in K_n with deg_{n,m}(x) == deg_{n,m}(y).
  // B: x in K_n with rot^k(x) == x for a proper divisor k of n, and x not in
  //    the image of deg_{k,n}. `m` holds k; `y` is unused.
  std::size_t n = 0;
  std::size_t m = 0;
  Index x = 0;
  Index y = 0;

  std::string describe(const AbstractCycleSet& k) const;
};

std::optional<PropertyViolation> check_property_A(const AbstractCycleSet& k);
std::optional<PropertyViolation> check_property_B(const AbstractCycleSet& k);
// True iff the witness still violates its property in k.
bool recheck(const AbstractCycleSet& k, const PropertyViolation& v);

// x is not deg_{d,n}(y) for any proper divisor d of n.
bool is_nondegenerate(const AbstractCycleSet& k, std::size_t n, Index x);

struct AncestorWitness {
  std::size_t level = 0;  // d | n
  Index element = 0;      // non-degenerate y in K_d with deg_{d,n}(y) == x
  // Least i with y == rot^i(r), r the least-labelled member of y's orbit.
  std::size_t offset = 0;

  bool operator==(const AncestorWitness&) const = default;
};

struct AncestorResult {
  // All witnesses ordered by (level, element).
  std::vector<AncestorWitness> witnesses;

  bool unique() const { return witnesses.size() == 1; }
};

AncestorResult nondegenerate_ancestor(const AbstractCycleSet& k, std::size_t n, Index x);

// Cy(-, C_k) truncated at N. Element i of level n is the map with offset i.
AbstractCycleSet representable(std::size_t k, std::size_t bound);

// Level-wise disjoint union with labels prefixed "0." and "1.".
AbstractCycleSet coproduct(const AbstractCycleSet& a, const AbstractCycleSet& b);

ZnSet ev(const AbstractCycleSet& k, std::size_t n);

// Left adjoint of ev_n: the quotient X ×_{Z/n} Ĉ_n. Level j is a copy of X
// when n | j and empty otherwise, with rot = the action and deg = identity.
AbstractCycleSet adjoint_L(const ZnSet& x, std::size_t bound);
// Right adjoint of ev_n: level j is Fix(j) when j | n and {*} otherwise.
AbstractCycleSet adjoint_R(const ZnSet& x, std::size_t bound);

// The digraph obtained by gluing one copy of C_n per element of K_n along all
// identifications (m, x·φ, t) ~ (n, x, φ(t)) with n | m <= N. Vertices are
// numbered by first appearance in (n, x, t) order.
struct Realization {
  Digraph graph;
  // unit[n-1][x] = η_n(x), the image of x's cycle in the realization.
  std::vector<std::vector<NCycle>> unit;
};

Realization realize_truncated(const AbstractCycleSet& k);

// η: K -> A(|K|) is a level-wise bijection commuting with rot and deg.
struct UnitCheck {
  bool ok = true;
  std::size_t n = 0;
  Index element = 0;
  std::string message;

  explicit operator bool() const noexcept { return ok; }
};

UnitCheck verify_unit(const AbstractCycleSet& k, const Realization& r,
                      const AttractorOptions& options = {});

// One generator per non-degenerate orbit, labelled by its least member.
CycleSetPresentation presentation(const AbstractCycleSet& k);

struct Recognition {
  std::optional<CycleSetPresentation> presentation;
  std::vector<PropertyViolation> violations;  // first A, then first B

  bool recognized() const { return presentation.has_value(); }
};

// Under A and B returns the presentation after verifying the unit of the
// realization (failure there throws internal_error). Otherwise returns the
// violations.
Recognition recognize(const AbstractCycleSet& k);

// Coproduct of C_k over the generators, in generator order.
Digraph realize_presentation(const CycleSetPresentation& p);

// An equivariant bijection a -> b, if one exists (equal n required).
std::optional<std::vector<Index>> zn_isomorphism(const ZnSet& a, const ZnSet& b);

// Number of level-wise maps a -> b commuting with rot and deg (equal bounds
// required). Exhaustive: meant for tiny inputs.
std::uint64_t count_cycleset_maps(const AbstractCycleSet& a, const AbstractCycleSet& b);
std::uint64_t count_equivariant_maps(const ZnSet& a, const ZnSet& b);

// Orbit bookkeeping per level: |Orb K_n|, the number of non-degenerate orbits,
// and the value of the recursion count(n) = |Orb K_n| - Σ_{d | n, d < n}
// count(d), which agrees with the non-degenerate orbit count whenever K
// comes from a digraph.
struct CountingRow {
  std::size_t n = 0;
  std::uint64_t orbits = 0;
  std::uint64_t nondeg_orbits = 0;
  std::int64_t recursion = 0;
};

struct CountingDiagnostics {
  std::vector<CountingRow> rows;

  // Every recursion value is non-negative and equals nondeg_orbits.
  bool consistent() const;
};

CountingDiagnostics counting_diagnostics(const AbstractCycleSet& k);

}  // namespace ddskit

#endif  // DDSKIT_CYCLESET_HPP
