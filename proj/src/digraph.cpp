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

#include "ddskit/digraph.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "ddskit/error.hpp"

namespace ddskit {

Digraph::Digraph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  for (const auto& [u, v] : edges_) {
    if (u >= vertex_count_ || v >= vertex_count_) {
      throw invalid_argument("edge (" + std::to_string(u) + ", " +
                             std::to_string(v) + ") has an endpoint outside " +
                             std::to_string(vertex_count_) + " vertices");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw invalid_argument("duplicate edge (" + std::to_string(dup->first) + ", " +
                           std::to_string(dup->second) + ")");
  }
  index();
}

Digraph Digraph::from_edges_dedup(std::size_t vertex_count, std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Digraph(vertex_count, std::move(edges));
}

void Digraph::index() {
  out_.assign(vertex_count_, {});
  in_.assign(vertex_count_, {});
  for (const auto& [u, v] : edges_) {
    out_[u].push_back(v);
    in_[v].push_back(u);
  }
  for (auto& preds : in_) std::sort(preds.begin(), preds.end());
}

std::span<const Vertex> Digraph::successors(Vertex v) const {
  if (v >= vertex_count_) throw invalid_argument("vertex out of range");
  return out_[v];
}

std::span<const Vertex> Digraph::predecessors(Vertex v) const {
  if (v >= vertex_count_) throw invalid_argument("vertex out of range");
  return in_[v];
}

bool Digraph::has_edge(Vertex u, Vertex v) const {
  if (u >= vertex_count_ || v >= vertex_count_) return false;
  return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

bool GraphMap::is_valid() const {
  if (vmap.size() != source.vertex_count()) return false;
  for (Vertex v : vmap)
    if (v >= target.vertex_count()) return false;
  for (const auto& [u, v] : source.edges())
    if (!target.has_edge(vmap[u], vmap[v])) return false;
  return true;
}

Digraph state_space(const FiniteDds& d) {
  std::vector<Edge> edges;
  edges.reserve(d.size());
  for (StateId x = 0; x < d.size(); ++x) edges.emplace_back(x, d.update()[x]);
  return Digraph(d.size(), std::move(edges));
}

bool is_functional(const Digraph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.out_degree(v) != 1) return false;
  return true;
}

FiniteDds dds_from_functional(const Digraph& g) {
  std::vector<StateId> update(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto succ = g.successors(v);
    if (succ.size() != 1) {
      throw invalid_argument("vertex " + std::to_string(v) + " has out-degree " +
                             std::to_string(succ.size()) +
                             "; a functional digraph needs exactly 1");
    }
    update[v] = succ.front();
  }
  return FiniteDds(std::move(update));
}

Digraph cycle_graph(std::size_t n) {
  if (n == 0) throw invalid_argument("cycle graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex k = 0; k < n; ++k) edges.emplace_back(k, (k + 1) % n);
  return Digraph(n, std::move(edges));
}

GraphMap CycleMap::as_graph_map() const {
  std::vector<Vertex> vmap(domain);
  for (Vertex k = 0; k < domain; ++k) vmap[k] = (*this)(k);
  return GraphMap{cycle_graph(domain), cycle_graph(codomain), std::move(vmap)};
}

CycleMap degeneracy_map(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0 || m % n != 0) {
    throw invalid_argument("no graph map C_" + std::to_string(m) + " -> C_" +
                           std::to_string(n));
  }
  return CycleMap{m, n, 0};
}

CycleMap rotation_map(std::size_t n, std::size_t i) {
  if (n == 0) throw invalid_argument("rotation needs n >= 1");
  return CycleMap{n, n, i % n};
}

std::vector<CycleMap> cycle_hom_set(std::size_t m, std::size_t n) {
  std::vector<CycleMap> maps;
  if (m == 0 || n == 0 || m % n != 0) return maps;
  maps.reserve(n);
  for (std::size_t i = 0; i < n; ++i) maps.push_back(CycleMap{m, n, i});
  return maps;
}

CycleMap compose(const CycleMap& a, const CycleMap& b) {
  if (b.codomain != a.domain) {
    throw invalid_argument("cannot compose C_" + std::to_string(a.domain) +
                           " -> C_" + std::to_string(a.codomain) + " after C_" +
                           std::to_string(b.domain) + " -> C_" +
                           std::to_string(b.codomain));
  }
  // a(b(k)) = (k + i_b) mod m + i_a mod n, and n | m.
  return CycleMap{b.domain, a.codomain, (a.offset + b.offset) % a.codomain};
}

Digraph graph_product(const Digraph& g, const Digraph& h) {
  const std::size_t w = h.vertex_count();
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() * h.edge_count());
  for (const auto& [u1, v1] : g.edges())
    for (const auto& [u2, v2] : h.edges()) edges.emplace_back(u1 * w + u2, v1 * w + v2);
  return Digraph(g.vertex_count() * w, std::move(edges));
}

Digraph graph_coproduct(const Digraph& g, const Digraph& h) {
  const std::size_t shift = g.vertex_count();
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (const auto& [u, v] : h.edges()) edges.emplace_back(u + shift, v + shift);
  return Digraph(shift + h.vertex_count(), std::move(edges));
}

namespace {

// Colour refinement with canonical colour names: each round ranks the sorted
// set of (colour, out-colours, in-colours) signatures, so isomorphic graphs get
// identical colourings.
std::vector<std::size_t> refine_colours(const Digraph& g) {
  const std::size_t n = g.vertex_count();
  using Signature = std::tuple<std::size_t, std::vector<std::size_t>,
                               std::vector<std::size_t>>;
  std::vector<std::size_t> colour(n);
  {
    std::vector<std::tuple<std::size_t, std::size_t, bool>> base(n);
    for (Vertex v = 0; v < n; ++v)
      base[v] = {g.out_degree(v), g.in_degree(v), g.has_edge(v, v)};
    auto sorted = base;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Vertex v = 0; v < n; ++v)
      colour[v] = static_cast<std::size_t>(
          std::lower_bound(sorted.begin(), sorted.end(), base[v]) - sorted.begin());
  }
  std::size_t classes = 0;
  for (;;) {
    const std::size_t current =
        n == 0 ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;
    if (current == classes) break;
    classes = current;
    std::vector<Signature> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      std::vector<std::size_t> outs, ins;
      for (Vertex w : g.successors(v)) outs.push_back(colour[w]);
      for (Vertex w : g.predecessors(v)) ins.push_back(colour[w]);
      std::sort(outs.begin(), outs.end());
      std::sort(ins.begin(), ins.end());
      sig[v] = {colour[v], std::move(outs), std::move(ins)};
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Vertex v = 0; v < n; ++v)
      colour[v] = static_cast<std::size_t>(
          std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
  }
  return colour;
}

class IsoSearch {
 public:
  IsoSearch(const Digraph& g, const Digraph& h, std::vector<std::size_t> cg,
            std::vector<std::size_t> ch)
      : g_(g), h_(h), cg_(std::move(cg)), ch_(std::move(ch)),
        map_(g.vertex_count(), kNone), used_(h.vertex_count(), false) {
    plan_order();
  }

  std::optional<std::vector<Vertex>> run() {
    if (search(0)) return map_;
    return std::nullopt;
  }

 private:
  static constexpr Vertex kNone = static_cast<Vertex>(-1);

  // Most-connected-to-placed first, breaking ties by colour class size.
  void plan_order() {
    const std::size_t n = g_.vertex_count();
    std::map<std::size_t, std::size_t> class_size;
    for (auto c : cg_) ++class_size[c];
    std::vector<bool> placed(n, false);
    std::vector<std::size_t> links(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
      Vertex best = kNone;
      for (Vertex v = 0; v < n; ++v) {
        if (placed[v]) continue;
        if (best == kNone ||
            std::tuple(links[v], std::size_t(0) - class_size[cg_[v]]) >
                std::tuple(links[best], std::size_t(0) - class_size[cg_[best]]))
          best = v;
      }
      placed[best] = true;
      order_.push_back(best);
      for (Vertex w : g_.successors(best)) ++links[w];
      for (Vertex w : g_.predecessors(best)) ++links[w];
    }
  }

  bool consistent(Vertex v, Vertex w) const {
    if (cg_[v] != ch_[w]) return false;
    if (g_.has_edge(v, v) != h_.has_edge(w, w)) return false;
    for (Vertex u : order_) {
      const Vertex mu = map_[u];
      if (mu == kNone) break;
      if (g_.has_edge(v, u) != h_.has_edge(w, mu)) return false;
      if (g_.has_edge(u, v) != h_.has_edge(mu, w)) return false;
    }
    return true;
  }

  bool search(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex v = order_[depth];
    for (Vertex w = 0; w < h_.vertex_count(); ++w) {
      if (used_[w] || !consistent(v, w)) continue;
      map_[v] = w;
      used_[w] = true;
      if (search(depth + 1)) return true;
      map_[v] = kNone;
      used_[w] = false;
    }
    return false;
  }

  const Digraph& g_;
  const Digraph& h_;
  std::vector<std::size_t> cg_, ch_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const Digraph& g, const Digraph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
    return std::nullopt;
  const std::size_t n = g.vertex_count();
  // Refining the disjoint union keeps colour names comparable across g and h.
  const auto joint = refine_colours(graph_coproduct(g, h));
  std::vector<std::size_t> cg(joint.begin(), joint.begin() + static_cast<std::ptrdiff_t>(n));
  std::vector<std::size_t> ch(joint.begin() + static_cast<std::ptrdiff_t>(n), joint.end());
  auto hg = cg, hh = ch;
  std::sort(hg.begin(), hg.end());
  std::sort(hh.begin(), hh.end());
  if (hg != hh) return std::nullopt;
  return IsoSearch(g, h, std::move(cg), std::move(ch)).run();
}

bool are_isomorphic(const Digraph& g, const Digraph& h) {
  return find_isomorphism(g, h).has_value();
}

CanonicalForm canonical_form(const Digraph& g, std::size_t max_orders) {
  const std::size_t n = g.vertex_count();
  const auto colour = refine_colours(g);

  // Cells of equally coloured vertices, in colour order.
  std::map<std::size_t, std::vector<Vertex>> cells_by_colour;
  for (Vertex v = 0; v < n; ++v) cells_by_colour[colour[v]].push_back(v);
  std::vector<std::vector<Vertex>> cells;
  std::size_t orders = 1;
  for (auto& [c, cell] : cells_by_colour) {
    for (std::size_t k = 2; k <= cell.size(); ++k) {
      orders *= k;
      if (orders > max_orders) {
        throw limit_exceeded("canonical form needs more than " +
                             std::to_string(max_orders) + " vertex orders");
      }
    }
    cells.push_back(std::move(cell));
  }

  CanonicalForm best{n, {}};
  bool have_best = false;
  std::vector<Vertex> position(n);
  for (;;) {
    std::size_t p = 0;
    for (const auto& cell : cells)
      for (Vertex v : cell) position[v] = p++;
    std::vector<Edge> relabelled;
    relabelled.reserve(g.edge_count());
    for (const auto& [u, v] : g.edges()) relabelled.emplace_back(position[u], position[v]);
    std::sort(relabelled.begin(), relabelled.end());
    if (!have_best || relabelled < best.edges) {
      best.edges = std::move(relabelled);
      have_best = true;
    }
    // Odometer over per-cell permutations.
    std::size_t c = 0;
    for (; c < cells.size(); ++c) {
      if (std::next_permutation(cells[c].begin(), cells[c].end())) break;
    }
    if (c == cells.size()) break;
  }
  return best;
}

std::optional<DdsMorphism> find_dds_isomorphism(const FiniteDds& a, const FiniteDds& b) {
  auto map = find_isomorphism(state_space(a), state_space(b));
  if (!map) return std::nullopt;
  DdsMorphism m{a, b, std::move(*map)};
  if (!is_isomorphism(m)) throw internal_error("state space isomorphism is not equivariant");
  return m;
}

}  // namespace ddskit
