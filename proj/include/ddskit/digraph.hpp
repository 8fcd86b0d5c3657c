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

#ifndef DDSKIT_DIGRAPH_HPP
#define DDSKIT_DIGRAPH_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ddskit/core.hpp"

namespace ddskit {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

// A digraph in the strict sense: at most one edge per ordered vertex pair.
// Self-loops and isolated vertices are allowed.
class Digraph {
 public:
  Digraph() = default;

  // Throws invalid_argument on an out-of-range endpoint or a repeated edge.
  Digraph(std::size_t vertex_count, std::vector<Edge> edges);

  // Same, but silently drops repeated edges.
  static Digraph from_edges_dedup(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  // Sorted lexicographically.
  std::span<const Edge> edges() const noexcept { return edges_; }

  // Sorted out-neighbors of v.
  std::span<const Vertex> successors(Vertex v) const;
  std::span<const Vertex> predecessors(Vertex v) const;

  bool has_edge(Vertex u, Vertex v) const;
  std::size_t out_degree(Vertex v) const { return successors(v).size(); }
  std::size_t in_degree(Vertex v) const { return predecessors(v).size(); }

  bool operator==(const Digraph& other) const {
    return vertex_count_ == other.vertex_count_ && edges_ == other.edges_;
  }

 private:
  void index();

  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
};

struct GraphMap {
  Digraph source;
  Digraph target;
  std::vector<Vertex> vmap;

  // Edge preservation and totality.
  bool is_valid() const;
};

// Vertices = states, one edge x -> f(x) per state.
Digraph state_space(const FiniteDds& d);

bool is_functional(const Digraph& g);

// Inverse of state_space on functional digraphs. Throws invalid_argument
// naming the first vertex whose out-degree is not 1.
FiniteDds dds_from_functional(const Digraph& g);

// The directed n-cycle: edges k -> k+1 mod n. Requires n >= 1.
Digraph cycle_graph(std::size_t n);

// The graph map C_m -> C_n, k |-> k + offset mod n. Every graph map between
// cycle graphs has exactly this form, and exists only when n divides m.
struct CycleMap {
  std::size_t domain = 1;    // m
  std::size_t codomain = 1;  // n
  std::size_t offset = 0;    // in [0, n)

  Vertex operator()(Vertex k) const { return (k + offset) % codomain; }
  GraphMap as_graph_map() const;

  bool operator==(const CycleMap&) const = default;
};

// The repetition map C_m -> C_n (offset 0). Requires n | m.
CycleMap degeneracy_map(std::size_t m, std::size_t n);
// The rotation C_n -> C_n by i.
CycleMap rotation_map(std::size_t n, std::size_t i);

// All graph maps C_m -> C_n, by increasing offset; empty unless n | m.
std::vector<CycleMap> cycle_hom_set(std::size_t m, std::size_t n);

// a ∘ b. Throws invalid_argument unless b.codomain == a.domain.
CycleMap compose(const CycleMap& a, const CycleMap& b);

// Categorical product (vertex (u, v) encoded as u * h.vertex_count() + v) and
// disjoint union (h's vertices shifted by g.vertex_count()).
Digraph graph_product(const Digraph& g, const Digraph& h);
Digraph graph_coproduct(const Digraph& g, const Digraph& h);

// A vertex bijection g -> h preserving and reflecting edges, if one exists.
// Backtracking over colour-refined candidate classes.
std::optional<std::vector<Vertex>> find_isomorphism(const Digraph& g,
                                                    const Digraph& h);
bool are_isomorphic(const Digraph& g, const Digraph& h);

// Iso-invariant normal form: the lexicographically least relabelled edge list
// over all vertex orders compatible with colour refinement. Exhaustive, so
// meant for small graphs; throws limit_exceeded past `max_orders` candidates.
struct CanonicalForm {
  std::size_t vertex_count = 0;
  std::vector<Edge> edges;

  bool operator==(const CanonicalForm&) const = default;
};
CanonicalForm canonical_form(const Digraph& g, std::size_t max_orders = 5'000'000);

// An isomorphism of systems found through their state spaces; nullopt when the
// systems are not isomorphic.
std::optional<DdsMorphism> find_dds_isomorphism(const FiniteDds& a,
                                                const FiniteDds& b);

}  // namespace ddskit

#endif  // DDSKIT_DIGRAPH_HPP
