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

// Attractors of a digraph as a cycle set, truncated at a length bound N.
//
// An n-cycle of G is a graph map C_n -> G, stored as the started vertex
// sequence (v_0 ... v_{n-1}). Level n of the cycle set holds all n-cycles;
// rotation precomposes with k |-> k+1 (shift the sequence left by one) and the
// degeneracy into level m precomposes with k |-> k mod n (repeat m/n times).
// Results at level n never depend on the bound as long as N >= n.

#ifndef DDSKIT_ATTRACTOR_HPP
#define DDSKIT_ATTRACTOR_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ddskit/core.hpp"
#include "ddskit/digraph.hpp"

namespace ddskit {

// Index of an element inside one level of a cycle set.
using Index = std::size_t;

std::vector<std::size_t> divisors(std::size_t n);  // ascending, includes 1 and n
std::uint64_t euler_totient(std::uint64_t n);

struct NCycle {
  std::vector<Vertex> vertices;

  std::size_t length() const noexcept { return vertices.size(); }
  bool operator==(const NCycle&) const = default;
  auto operator<=>(const NCycle&) const = default;
};

// Sequence rotated left by `times` (precomposition with a rotation).
NCycle rotate(const NCycle& c, std::size_t times = 1);
// Sequence repeated out to length m (precomposition with C_m -> C_n).
NCycle repeat(const NCycle& c, std::size_t m);
// Least p >= 1 with v_{k+p} = v_k for all k; p divides the length.
std::size_t minimal_period(const NCycle& c);

// A finite set with a Z/n action, given by the generator's permutation.
struct ZnSet {
  std::size_t n = 1;
  std::vector<std::string> labels;
  std::vector<Index> action;

  std::size_t size() const noexcept { return action.size(); }
  // action^n == id and action is a permutation.
  bool is_valid() const;
  // Orbits, each listed from its least member by repeated action, ordered by
  // least member.
  std::vector<std::vector<Index>> orbits() const;
  bool is_transitive() const { return orbits().size() == 1; }
};

// First relation instance a candidate cycle set breaks.
struct RelationViolation {
  enum class Relation {
    table_shape,          // missing or mis-sized table, out-of-range entry
    rotation_bijective,   // rot_n is not a permutation
    rotation_order,       // rot_n^n != id
    degeneracy_chain,     // deg_{m,l} deg_{n,m} != deg_{n,l}
    naturality,           // rot_m deg_{n,m} != deg_{n,m} rot_n
  };
  Relation relation = Relation::table_shape;
  std::size_t n = 0;  // source level
  std::size_t m = 0;  // target level (or n)
  Index element = 0;
  std::string message;
};

// Levels K_1..K_N of a cycle set with rotation and degeneracy tables.
// Construction does not validate: call check_relations() (or go through
// AbstractCycleSet) before relying on the relations.
class TruncatedCycleSet {
 public:
  TruncatedCycleSet() = default;
  explicit TruncatedCycleSet(std::size_t bound);

  std::size_t bound() const noexcept { return labels_.size(); }
  std::size_t size(std::size_t n) const { return level(n).size(); }
  std::size_t total_size() const;

  const std::vector<std::string>& labels(std::size_t n) const { return level(n); }
  const std::string& label(std::size_t n, Index x) const;
  std::optional<Index> find(std::size_t n, const std::string& label) const;

  Index rot(std::size_t n, Index x) const;
  Index rot(std::size_t n, Index x, std::size_t times) const;
  const std::vector<Index>& rot_table(std::size_t n) const;

  // x·π^m_n : K_n -> K_m for n | m. deg(n, n, x) == x.
  Index deg(std::size_t n, std::size_t m, Index x) const;
  bool has_deg_table(std::size_t n, std::size_t m) const;
  const std::vector<Index>& deg_table(std::size_t n, std::size_t m) const;

  // Replaces level n; its rotation table defaults to the identity.
  void set_level(std::size_t n, std::vector<std::string> labels,
                 std::vector<Index> rot = {});
  void set_rot(std::size_t n, std::vector<Index> rot);
  void set_deg(std::size_t n, std::size_t m, std::vector<Index> table);

  std::optional<RelationViolation> check_relations() const;

  // The Z/n-set (K_n, rot_n).
  ZnSet level_action(std::size_t n) const;

  bool operator==(const TruncatedCycleSet&) const = default;

 private:
  const std::vector<std::string>& level(std::size_t n) const;
  void require_level(std::size_t n) const;

  std::vector<std::vector<std::string>> labels_;
  std::vector<std::vector<Index>> rot_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Index>> deg_;
};

struct AttractorOptions {
  std::size_t cap = 1'000'000;  // max n-cycles enumerated per level
};

// |A(G)_n| = trace(adjacency^n). Throws limit_exceeded on 64-bit overflow.
std::uint64_t closed_walk_count(const Digraph& g, std::size_t n);

// All n-cycles in lexicographic order of their vertex sequences. Throws
// limit_exceeded when more than options.cap would be produced.
std::vector<NCycle> enumerate_n_cycles(const Digraph& g, std::size_t n,
                                       const AttractorOptions& options = {});

// The truncated attractor cycle set. Level elements are listed in
// lexicographic vertex order and labelled by their vertex ids, zero padded to a
// common width so that label order matches that order.
struct AttractorSet {
  TruncatedCycleSet cycles;
  std::vector<std::vector<NCycle>> walks;  // walks[n-1][x]

  const NCycle& walk(std::size_t n, Index x) const { return walks.at(n - 1).at(x); }
  std::optional<Index> find(const NCycle& c) const;
};

AttractorSet attractor_truncated(const Digraph& g, std::size_t bound,
                                 const AttractorOptions& options = {});

// Number of Z/n-orbits of A(G)_n. Enumerates when the level fits under the
// cap and falls back to the Burnside count otherwise.
std::uint64_t orbit_count(const Digraph& g, std::size_t n,
                          const AttractorOptions& options = {});
// (1/n) Σ_{d | n} φ(n/d) |A(G)_d|.
std::uint64_t orbit_count_burnside(const Digraph& g, std::size_t n);
std::uint64_t orbit_count_enumerated(const Digraph& g, std::size_t n,
                                     const AttractorOptions& options = {});

// Non-degenerate orbits per length 1..N via
//   count(n) = |Orb A(G)_n| - Σ_{d | n, d < n} count(d).
std::map<std::size_t, std::uint64_t> nondeg_orbit_counts(const Digraph& g,
                                                         std::size_t bound);

struct Generator {
  std::size_t length = 0;
  std::string label;
  std::vector<Vertex> vertices;  // empty for opaque generators
};

// Coproduct-of-representables normal form: one generator per non-degenerate
// orbit.
struct CycleSetPresentation {
  std::vector<Generator> generators;

  std::map<std::size_t, std::uint64_t> counts_by_length() const;
};

// One generator per periodic orbit of d: length = minimal period,
// representative = the orbit read from its smallest state. Sorted by
// (length, representative).
CycleSetPresentation attractor_presentation(const FiniteDds& d);

}  // namespace ddskit

#endif  // DDSKIT_ATTRACTOR_HPP
