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

#include "ddskit/cycleset.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <utility>

#include "union_find.hpp"

namespace ddskit {

namespace {

constexpr Index kUnset = static_cast<Index>(-1);

std::vector<Index> identity_table(std::size_t n) {
  std::vector<Index> t(n);
  for (Index x = 0; x < n; ++x) t[x] = x;
  return t;
}

// Orbits of rot_n restricted to `members` (a rot-closed subset), each listed
// by repeated rotation from its least-labelled member, ordered by that label.
std::vector<std::vector<Index>> labelled_orbits(const TruncatedCycleSet& k, std::size_t n,
                                                const std::vector<Index>& members) {
  std::vector<Index> order = members;
  std::sort(order.begin(), order.end(),
            [&](Index a, Index b) { return k.label(n, a) < k.label(n, b); });
  std::vector<bool> seen(k.size(n), false);
  std::vector<std::vector<Index>> out;
  for (Index x : order) {
    if (seen[x]) continue;
    std::vector<Index> orbit;
    for (Index y = x; !seen[y]; y = k.rot(n, y)) {
      seen[y] = true;
      orbit.push_back(y);
    }
    out.push_back(std::move(orbit));
  }
  return out;
}

std::vector<Index> nondegenerate_elements(const AbstractCycleSet& k, std::size_t n) {
  std::vector<Index> out;
  for (Index x = 0; x < k.cycles().size(n); ++x)
    if (is_nondegenerate(k, n, x)) out.push_back(x);
  return out;
}

std::vector<Index> all_elements(const TruncatedCycleSet& k, std::size_t n) {
  return identity_table(k.size(n));
}

// Counts maps F of a finite "pointed structure" into another: nodes are
// (level, element) pairs; forced(level, x) lists the constraints
// F(x') = y' implied by F(x) = y, as pairs of (source node, target node).
class MapCounter {
 public:
  using Node = std::pair<std::size_t, Index>;
  using Forced = std::function<std::vector<std::pair<Node, Node>>(Node, Node)>;

  MapCounter(std::vector<std::size_t> source_sizes, std::vector<std::size_t> target_sizes,
             Forced forced)
      : target_sizes_(std::move(target_sizes)), forced_(std::move(forced)) {
    for (std::size_t l = 0; l < source_sizes.size(); ++l) {
      assigned_.emplace_back(source_sizes[l], kUnset);
      for (Index x = 0; x < source_sizes[l]; ++x) nodes_.emplace_back(l, x);
    }
  }

  std::uint64_t count() { return search(0); }

 private:
  std::uint64_t search(std::size_t next) {
    while (next < nodes_.size() && assigned_[nodes_[next].first][nodes_[next].second] != kUnset)
      ++next;
    if (next == nodes_.size()) return 1;
    const Node src = nodes_[next];
    std::uint64_t total = 0;
    for (Index y = 0; y < target_sizes_[src.first]; ++y) {
      const std::size_t mark = log_.size();
      if (assign(src, {src.first, y})) total += search(next + 1);
      undo(mark);
    }
    return total;
  }

  bool assign(Node src, Node dst) {
    std::vector<std::pair<Node, Node>> work{{src, dst}};
    while (!work.empty()) {
      auto [s, d] = work.back();
      work.pop_back();
      Index& slot = assigned_[s.first][s.second];
      if (slot != kUnset) {
        if (slot != d.second) return false;
        continue;
      }
      slot = d.second;
      log_.push_back(s);
      for (auto& pair : forced_(s, d)) work.push_back(pair);
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (log_.size() > mark) {
      assigned_[log_.back().first][log_.back().second] = kUnset;
      log_.pop_back();
    }
  }

  std::vector<std::size_t> target_sizes_;
  Forced forced_;
  std::vector<std::vector<Index>> assigned_;
  std::vector<Node> nodes_;
  std::vector<Node> log_;
};

}  // namespace

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::explicit_data: return "explicit";
    case Provenance::builtin_example: return "builtin-example";
    case Provenance::representable: return "representable";
    case Provenance::coproduct: return "coproduct";
    case Provenance::attractor_derived: return "attractor-derived";
  }
  return "unknown";
}

const char* relation_name(RelationViolation::Relation r) {
  using R = RelationViolation::Relation;
  switch (r) {
    case R::table_shape: return "table shape";
    case R::rotation_bijective: return "rotation bijective";
    case R::rotation_order: return "rotation order";
    case R::degeneracy_chain: return "degeneracy chain";
    case R::naturality: return "naturality";
  }
  return "unknown";
}

RelationError::RelationError(RelationViolation v)
    : Error(ErrorKind::invalid_argument,
            std::string("relation '") + relation_name(v.relation) + "' fails at level " +
                std::to_string(v.n) + (v.m != v.n ? " -> " + std::to_string(v.m) : "") +
                ", element " + std::to_string(v.element) + ": " + v.message),
      violation_(std::move(v)) {}

Index AbstractCycleSet::act(Index x, const CycleMap& phi) const {
  if (phi.domain % phi.codomain != 0) throw invalid_argument("invalid cycle map");
  return cycles_.deg(phi.codomain, phi.domain, cycles_.rot(phi.codomain, x, phi.offset));
}

AbstractCycleSet validate(TruncatedCycleSet raw, Provenance provenance) {
  if (raw.bound() == 0) throw invalid_argument("cycle set bound must be >= 1");
  if (auto v = raw.check_relations()) throw RelationError(std::move(*v));
  return AbstractCycleSet(std::move(raw), provenance);
}

AbstractCycleSet from_attractors(const AttractorSet& a) {
  return validate(a.cycles, Provenance::attractor_derived);
}

namespace {

// Levels n with present(n) hold the single element "*n"; all maps are forced.
TruncatedCycleSet star_levels(std::size_t bound, const std::function<bool(std::size_t)>& present) {
  TruncatedCycleSet k(bound);
  for (std::size_t n = 1; n <= bound; ++n) {
    if (present(n)) k.set_level(n, {"*" + std::to_string(n)});
  }
  for (std::size_t n = 1; n <= bound; ++n) {
    if (!present(n)) continue;
    for (std::size_t m = 2 * n; m <= bound; m += n) k.set_deg(n, m, {0});
  }
  return k;
}

}  // namespace

AbstractCycleSet builtin_example(const std::string& name, std::size_t bound) {
  if (bound < 6) throw invalid_argument("builtin examples need bound >= 6");
  if (name == "a-not-b") {
    return validate(star_levels(bound, [](std::size_t n) { return n % 2 == 0; }),
                    Provenance::builtin_example);
  }
  if (name == "b-not-a") {
    TruncatedCycleSet k = star_levels(bound, [](std::size_t n) { return n >= 2; });
    k.set_level(1, {"0", "1"});
    for (std::size_t m = 2; m <= bound; ++m) k.set_deg(1, m, {0, 0});
    return validate(std::move(k), Provenance::builtin_example);
  }
  if (name == "a-without-unique-degens") {
    return validate(star_levels(bound, [](std::size_t n) { return n >= 2; }),
                    Provenance::builtin_example);
  }
  if (name == "not-ab") {
    TruncatedCycleSet k =
        coproduct(builtin_example("a-not-b", bound), builtin_example("b-not-a", bound)).cycles();
    return validate(std::move(k), Provenance::builtin_example);
  }
  throw invalid_argument("unknown builtin cycle set '" + name + "'");
}

std::vector<NamedCycleSet> builtin_examples(std::size_t bound) {
  std::vector<NamedCycleSet> out;
  for (const char* name : {"a-not-b", "b-not-a", "not-ab", "a-without-unique-degens"})
    out.push_back({name, builtin_example(name, bound)});
  return out;
}

std::string PropertyViolation::describe(const AbstractCycleSet& k) const {
  const auto& c = k.cycles();
  if (kind == Kind::A) {
    return "deg " + std::to_string(n) + " -> " + std::to_string(m) + " identifies '" +
           c.label(n, x) + "' and '" + c.label(n, y) + "'";
  }
  return "'" + c.label(n, x) + "' at level " + std::to_string(n) + " is fixed by rotation by " +
         std::to_string(m) + " but is not a degeneracy from level " + std::to_string(m);
}

std::optional<PropertyViolation> check_property_A(const AbstractCycleSet& k) {
  const auto& c = k.cycles();
  for (std::size_t n = 1; n <= c.bound(); ++n) {
    for (std::size_t m = 2 * n; m <= c.bound(); m += n) {
      std::map<Index, Index> first;
      for (Index x = 0; x < c.size(n); ++x) {
        auto [it, fresh] = first.emplace(c.deg(n, m, x), x);
        if (!fresh) {
          return PropertyViolation{PropertyViolation::Kind::A, n, m, it->second, x};
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

bool in_deg_image(const TruncatedCycleSet& c, std::size_t k, std::size_t n, Index x) {
  for (Index y = 0; y < c.size(k); ++y)
    if (c.deg(k, n, y) == x) return true;
  return false;
}

}  // namespace

std::optional<PropertyViolation> check_property_B(const AbstractCycleSet& k) {
  const auto& c = k.cycles();
  for (std::size_t n = 1; n <= c.bound(); ++n) {
    for (Index x = 0; x < c.size(n); ++x) {
      for (std::size_t d : divisors(n)) {
        if (d == n) break;
        if (c.rot(n, x, d) == x && !in_deg_image(c, d, n, x))
          return PropertyViolation{PropertyViolation::Kind::B, n, d, x, 0};
      }
    }
  }
  return std::nullopt;
}

bool recheck(const AbstractCycleSet& k, const PropertyViolation& v) {
  const auto& c = k.cycles();
  if (v.n == 0 || v.n > c.bound() || v.m == 0 || v.m > c.bound() || v.x >= c.size(v.n))
    return false;
  if (v.kind == PropertyViolation::Kind::A) {
    return v.m % v.n == 0 && v.m != v.n && v.y < c.size(v.n) && v.x != v.y &&
           c.deg(v.n, v.m, v.x) == c.deg(v.n, v.m, v.y);
  }
  return v.n % v.m == 0 && v.m < v.n && c.rot(v.n, v.x, v.m) == v.x &&
         !in_deg_image(c, v.m, v.n, v.x);
}

bool is_nondegenerate(const AbstractCycleSet& k, std::size_t n, Index x) {
  for (std::size_t d : divisors(n)) {
    if (d == n) break;
    if (in_deg_image(k.cycles(), d, n, x)) return false;
  }
  return true;
}

AncestorResult nondegenerate_ancestor(const AbstractCycleSet& k, std::size_t n, Index x) {
  const auto& c = k.cycles();
  if (x >= c.size(n)) throw invalid_argument("element index out of range");
  AncestorResult out;
  for (std::size_t d : divisors(n)) {
    const auto orbits = labelled_orbits(c, d, all_elements(c, d));
    for (Index y = 0; y < c.size(d); ++y) {
      if (c.deg(d, n, y) != x || !is_nondegenerate(k, d, y)) continue;
      AncestorWitness w{d, y, 0};
      for (const auto& orbit : orbits) {
        auto it = std::find(orbit.begin(), orbit.end(), y);
        if (it != orbit.end()) w.offset = static_cast<std::size_t>(it - orbit.begin());
      }
      out.witnesses.push_back(w);
    }
  }
  return out;
}

AbstractCycleSet representable(std::size_t k, std::size_t bound) {
  if (k == 0) throw invalid_argument("representable needs k >= 1");
  TruncatedCycleSet c(bound);
  for (std::size_t n = 1; n <= bound; ++n) {
    const auto homs = cycle_hom_set(n, k);
    std::vector<std::string> labels;
    std::vector<Index> rot;
    for (const auto& phi : homs) {
      labels.push_back(std::to_string(phi.offset));
      rot.push_back(compose(phi, rotation_map(n, 1)).offset);
    }
    c.set_level(n, std::move(labels), std::move(rot));
    if (homs.empty()) continue;
    for (std::size_t m = 2 * n; m <= bound; m += n) {
      std::vector<Index> deg;
      for (const auto& phi : homs) deg.push_back(compose(phi, degeneracy_map(m, n)).offset);
      c.set_deg(n, m, std::move(deg));
    }
  }
  return validate(std::move(c), Provenance::representable);
}

AbstractCycleSet coproduct(const AbstractCycleSet& a, const AbstractCycleSet& b) {
  if (a.bound() != b.bound()) throw invalid_argument("coproduct needs equal bounds");
  const auto& ca = a.cycles();
  const auto& cb = b.cycles();
  TruncatedCycleSet c(a.bound());
  for (std::size_t n = 1; n <= a.bound(); ++n) {
    std::vector<std::string> labels;
    for (const auto& l : ca.labels(n)) labels.push_back("0." + l);
    for (const auto& l : cb.labels(n)) labels.push_back("1." + l);
    std::vector<Index> rot = ca.rot_table(n);
    for (Index r : cb.rot_table(n)) rot.push_back(r + ca.size(n));
    c.set_level(n, std::move(labels), std::move(rot));
  }
  for (std::size_t n = 1; n <= a.bound(); ++n) {
    if (ca.size(n) + cb.size(n) == 0) continue;
    for (std::size_t m = 2 * n; m <= a.bound(); m += n) {
      std::vector<Index> deg = ca.size(n) ? ca.deg_table(n, m) : std::vector<Index>{};
      if (cb.size(n)) {
        for (Index r : cb.deg_table(n, m)) deg.push_back(r + ca.size(m));
      }
      c.set_deg(n, m, std::move(deg));
    }
  }
  return validate(std::move(c), Provenance::coproduct);
}

ZnSet ev(const AbstractCycleSet& k, std::size_t n) { return k.cycles().level_action(n); }

namespace {

std::vector<std::string> zn_labels(const ZnSet& x) {
  if (!x.labels.empty()) return x.labels;
  std::vector<std::string> out;
  for (Index i = 0; i < x.size(); ++i) out.push_back(std::to_string(i));
  return out;
}

void require_valid(const ZnSet& x, std::size_t bound) {
  if (!x.is_valid()) throw invalid_argument("not a valid Z/n-set");
  if (x.n > bound) throw invalid_argument("Z/n-set level exceeds the bound");
}

}  // namespace

AbstractCycleSet adjoint_L(const ZnSet& x, std::size_t bound) {
  require_valid(x, bound);
  TruncatedCycleSet c(bound);
  for (std::size_t j = x.n; j <= bound; j += x.n) c.set_level(j, zn_labels(x), x.action);
  if (x.size() != 0) {
    for (std::size_t j = x.n; j <= bound; j += x.n)
      for (std::size_t l = 2 * j; l <= bound; l += j) c.set_deg(j, l, identity_table(x.size()));
  }
  return validate(std::move(c), Provenance::explicit_data);
}

AbstractCycleSet adjoint_R(const ZnSet& x, std::size_t bound) {
  require_valid(x, bound);
  const auto labels = zn_labels(x);
  // members[j-1]: the fixed points of j (j | n), empty for the {*} levels.
  std::vector<std::vector<Index>> members(bound);
  TruncatedCycleSet c(bound);
  for (std::size_t j = 1; j <= bound; ++j) {
    if (x.n % j != 0) {
      c.set_level(j, {"*"});
      continue;
    }
    std::map<Index, Index> position;
    for (Index e = 0; e < x.size(); ++e) {
      Index y = e;
      for (std::size_t t = 0; t < j; ++t) y = x.action[y];
      if (y == e) {
        position[e] = members[j - 1].size();
        members[j - 1].push_back(e);
      }
    }
    std::vector<std::string> level_labels;
    std::vector<Index> rot;
    for (Index e : members[j - 1]) {
      level_labels.push_back(labels[e]);
      rot.push_back(position.at(x.action[e]));
    }
    c.set_level(j, std::move(level_labels), std::move(rot));
  }
  for (std::size_t j = 1; j <= bound; ++j) {
    if (c.size(j) == 0) continue;
    for (std::size_t l = 2 * j; l <= bound; l += j) {
      std::vector<Index> deg;
      if (x.n % l != 0) {
        deg.assign(c.size(j), 0);
      } else {
        for (Index e : members[j - 1]) {
          auto it = std::find(members[l - 1].begin(), members[l - 1].end(), e);
          deg.push_back(static_cast<Index>(it - members[l - 1].begin()));
        }
      }
      c.set_deg(j, l, std::move(deg));
    }
  }
  return validate(std::move(c), Provenance::explicit_data);
}

Realization realize_truncated(const AbstractCycleSet& k) {
  const auto& c = k.cycles();
  const std::size_t N = c.bound();
  std::vector<std::size_t> base(N + 1, 0);
  for (std::size_t n = 1; n <= N; ++n) base[n] = base[n - 1] + c.size(n) * n;
  // Cells of level n start at base[n-1].
  auto cell = [&](std::size_t n, Index x, std::size_t t) { return base[n - 1] + x * n + t; };

  detail::UnionFind uf(base[N]);
  for (std::size_t n = 1; n <= N; ++n) {
    for (Index x = 0; x < c.size(n); ++x) {
      for (std::size_t m = n; m <= N; m += n) {
        for (const CycleMap& phi : cycle_hom_set(m, n)) {
          const Index y = k.act(x, phi);
          for (std::size_t t = 0; t < m; ++t) uf.unite(cell(m, y, t), cell(n, x, phi(t)));
        }
      }
    }
  }

  std::vector<Vertex> vertex_of_root(base[N], static_cast<Vertex>(-1));
  std::size_t vertex_count = 0;
  Realization out;
  out.unit.resize(N);
  std::vector<Edge> edges;
  for (std::size_t n = 1; n <= N; ++n) {
    for (Index x = 0; x < c.size(n); ++x) {
      NCycle cyc;
      for (std::size_t t = 0; t < n; ++t) {
        Vertex& v = vertex_of_root[uf.find(cell(n, x, t))];
        if (v == static_cast<Vertex>(-1)) v = vertex_count++;
        cyc.vertices.push_back(v);
      }
      for (std::size_t t = 0; t < n; ++t)
        edges.emplace_back(cyc.vertices[t], cyc.vertices[(t + 1) % n]);
      out.unit[n - 1].push_back(std::move(cyc));
    }
  }
  out.graph = Digraph::from_edges_dedup(vertex_count, std::move(edges));
  return out;
}

UnitCheck verify_unit(const AbstractCycleSet& k, const Realization& r,
                      const AttractorOptions& options) {
  const auto& c = k.cycles();
  const std::size_t N = c.bound();
  const AttractorSet a = attractor_truncated(r.graph, N, options);
  auto fail = [](std::size_t n, Index x, std::string msg) {
    return UnitCheck{false, n, x, std::move(msg)};
  };
  if (r.unit.size() != N) return fail(0, 0, "unit has the wrong number of levels");
  std::vector<std::vector<Index>> image(N);
  for (std::size_t n = 1; n <= N; ++n) {
    if (r.unit[n - 1].size() != c.size(n)) return fail(n, 0, "unit level has the wrong size");
    std::vector<bool> hit(a.cycles.size(n), false);
    for (Index x = 0; x < c.size(n); ++x) {
      const auto idx = a.find(r.unit[n - 1][x]);
      if (!idx) return fail(n, x, "image is not a cycle of the realization");
      if (hit[*idx]) return fail(n, x, "unit is not injective");
      hit[*idx] = true;
      image[n - 1].push_back(*idx);
    }
    if (c.size(n) != a.cycles.size(n)) return fail(n, 0, "unit is not surjective");
  }
  for (std::size_t n = 1; n <= N; ++n) {
    for (Index x = 0; x < c.size(n); ++x) {
      const Index ex = image[n - 1][x];
      if (image[n - 1][c.rot(n, x)] != a.cycles.rot(n, ex))
        return fail(n, x, "unit does not commute with rotation");
      for (std::size_t m = 2 * n; m <= N; m += n) {
        if (image[m - 1][c.deg(n, m, x)] != a.cycles.deg(n, m, ex))
          return fail(n, x, "unit does not commute with degeneracy to level " +
                                std::to_string(m));
      }
    }
  }
  return UnitCheck{};
}

CycleSetPresentation presentation(const AbstractCycleSet& k) {
  const auto& c = k.cycles();
  CycleSetPresentation out;
  for (std::size_t n = 1; n <= c.bound(); ++n) {
    for (const auto& orbit : labelled_orbits(c, n, nondegenerate_elements(k, n)))
      out.generators.push_back(Generator{n, c.label(n, orbit.front()), {}});
  }
  return out;
}

Recognition recognize(const AbstractCycleSet& k) {
  Recognition out;
  if (auto a = check_property_A(k)) out.violations.push_back(*a);
  if (auto b = check_property_B(k)) out.violations.push_back(*b);
  if (!out.violations.empty()) return out;
  out.presentation = presentation(k);
  const auto check = verify_unit(k, realize_truncated(k));
  if (!check) {
    throw internal_error("unit of the realization fails on a cycle set with Properties A and B"
                         " at level " + std::to_string(check.n) + ": " + check.message);
  }
  return out;
}

Digraph realize_presentation(const CycleSetPresentation& p) {
  Digraph g;
  for (const auto& gen : p.generators) g = graph_coproduct(g, cycle_graph(gen.length));
  return g;
}

std::optional<std::vector<Index>> zn_isomorphism(const ZnSet& a, const ZnSet& b) {
  if (a.n != b.n || a.size() != b.size() || !a.is_valid() || !b.is_valid()) return std::nullopt;
  auto by_size = [](std::vector<std::vector<Index>> orbits) {
    std::stable_sort(orbits.begin(), orbits.end(),
                     [](const auto& x, const auto& y) { return x.size() < y.size(); });
    return orbits;
  };
  const auto oa = by_size(a.orbits());
  const auto ob = by_size(b.orbits());
  if (oa.size() != ob.size()) return std::nullopt;
  std::vector<Index> map(a.size(), kUnset);
  for (std::size_t i = 0; i < oa.size(); ++i) {
    if (oa[i].size() != ob[i].size()) return std::nullopt;
    for (std::size_t j = 0; j < oa[i].size(); ++j) map[oa[i][j]] = ob[i][j];
  }
  return map;
}

std::uint64_t count_cycleset_maps(const AbstractCycleSet& a, const AbstractCycleSet& b) {
  if (a.bound() != b.bound()) throw invalid_argument("map count needs equal bounds");
  const auto& ca = a.cycles();
  const auto& cb = b.cycles();
  const std::size_t N = a.bound();
  std::vector<std::size_t> sa, sb;
  for (std::size_t n = 1; n <= N; ++n) {
    sa.push_back(ca.size(n));
    sb.push_back(cb.size(n));
  }
  MapCounter counter(
      sa, sb, [&](MapCounter::Node s, MapCounter::Node d) {
        const std::size_t n = s.first + 1;
        std::vector<std::pair<MapCounter::Node, MapCounter::Node>> out;
        out.push_back({{s.first, ca.rot(n, s.second)}, {s.first, cb.rot(n, d.second)}});
        for (std::size_t m = 2 * n; m <= N; m += n) {
          out.push_back({{m - 1, ca.deg(n, m, s.second)}, {m - 1, cb.deg(n, m, d.second)}});
        }
        return out;
      });
  return counter.count();
}

std::uint64_t count_equivariant_maps(const ZnSet& a, const ZnSet& b) {
  if (a.n != b.n) throw invalid_argument("equivariant maps need equal n");
  MapCounter counter({a.size()}, {b.size()}, [&](MapCounter::Node s, MapCounter::Node d) {
    return std::vector<std::pair<MapCounter::Node, MapCounter::Node>>{
        {{0, a.action[s.second]}, {0, b.action[d.second]}}};
  });
  return counter.count();
}

bool CountingDiagnostics::consistent() const {
  for (const auto& row : rows)
    if (row.recursion < 0 || static_cast<std::uint64_t>(row.recursion) != row.nondeg_orbits)
      return false;
  return true;
}

CountingDiagnostics counting_diagnostics(const AbstractCycleSet& k) {
  const auto& c = k.cycles();
  CountingDiagnostics out;
  for (std::size_t n = 1; n <= c.bound(); ++n) {
    CountingRow row;
    row.n = n;
    row.orbits = labelled_orbits(c, n, all_elements(c, n)).size();
    row.nondeg_orbits = labelled_orbits(c, n, nondegenerate_elements(k, n)).size();
    row.recursion = static_cast<std::int64_t>(row.orbits);
    for (std::size_t d : divisors(n)) {
      if (d == n) break;
      row.recursion -= out.rows[d - 1].recursion;
    }
    out.rows.push_back(row);
  }
  return out;
}

}  // namespace ddskit
