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

#include "ddskit/wiring.hpp"

#include <algorithm>
#include <set>

namespace ddskit {

namespace {

constexpr std::size_t kMaxStates = std::size_t{1} << 26;

}  // namespace

std::size_t state_count(std::size_t alphabet, std::size_t arity) {
  if (alphabet == 0) throw invalid_argument("alphabet must be nonempty");
  std::size_t count = 1;
  for (std::size_t i = 0; i < arity; ++i) {
    if (alphabet > 1 && count > kMaxStates / alphabet)
      throw limit_exceeded("state space A^" + std::to_string(arity) + " is too large");
    count *= alphabet;
  }
  return count;
}

std::vector<Letter> decode_state(std::size_t state, std::size_t alphabet, std::size_t arity) {
  std::vector<Letter> digits(arity);
  for (std::size_t i = arity; i-- > 0;) {
    digits[i] = state % alphabet;
    state /= alphabet;
  }
  return digits;
}

std::size_t encode_state(const std::vector<Letter>& digits, std::size_t alphabet) {
  std::size_t state = 0;
  for (Letter d : digits) state = state * alphabet + d;
  return state;
}

void LetterMap::validate() const {
  const std::size_t inputs = input_count();
  for (std::size_t j = 0; j < tables.size(); ++j) {
    if (tables[j].size() != inputs)
      throw invalid_argument("table " + std::to_string(j) + " has the wrong size");
    for (Letter v : tables[j]) {
      if (v >= alphabet) throw invalid_argument("table " + std::to_string(j) + " leaves A");
    }
  }
}

std::size_t LetterMap::apply(std::size_t input) const {
  std::size_t out = 0;
  for (const auto& t : tables) out = out * alphabet + t[input];
  return out;
}

ProductFunction ProductFunction::from_tables(std::size_t alphabet, std::vector<std::string> names,
                                             std::vector<std::vector<Letter>> tables) {
  if (names.size() != tables.size()) throw invalid_argument("one name per coordinate required");
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (names[i] == names[j]) throw invalid_argument("duplicate coordinate name '" + names[i] + "'");
  ProductFunction f{LetterMap{alphabet, tables.size(), std::move(tables)}, std::move(names)};
  f.map.validate();
  return f;
}

std::string state_label(std::size_t state, std::size_t alphabet, std::size_t arity) {
  std::string out;
  for (Letter d : decode_state(state, alphabet, arity)) {
    if (alphabet > 10 && !out.empty()) out += ',';
    out += std::to_string(d);
  }
  return out;
}

FiniteDds ProductFunction::to_dds() const {
  const std::size_t n = map.input_count();
  std::vector<StateId> update(n);
  std::vector<std::string> labels(n);
  for (std::size_t s = 0; s < n; ++s) {
    update[s] = map.apply(s);
    labels[s] = state_label(s, alphabet(), arity());
  }
  return FiniteDds(std::move(update), std::move(labels));
}

bool table_depends_on(const std::vector<Letter>& table, std::size_t alphabet,
                      std::size_t arity, std::size_t i) {
  if (i >= arity) throw invalid_argument("input index out of range");
  if (alphabet == 1) return false;
  const std::size_t weight = state_count(alphabet, arity - 1 - i);
  for (std::size_t s = 0; s < table.size(); ++s) {
    if ((s / weight) % alphabet != 0) continue;
    for (Letter a = 1; a < alphabet; ++a)
      if (table[s + a * weight] != table[s]) return true;
  }
  return false;
}

bool depends_on(const ProductFunction& f, std::size_t j, std::size_t i) {
  if (j >= f.arity()) throw invalid_argument("coordinate index out of range");
  return table_depends_on(f.table(j), f.alphabet(), f.arity(), i);
}

std::vector<Letter> independent_lift(const std::vector<Letter>& table, std::size_t alphabet,
                                     std::size_t arity, const std::vector<std::size_t>& dropped) {
  std::vector<bool> drop(arity, false);
  for (std::size_t i : dropped) {
    if (i >= arity) throw invalid_argument("lift position out of range");
    drop[i] = true;
  }
  std::size_t kept = 0;
  for (bool d : drop) kept += d ? 0 : 1;
  std::vector<Letter> lifted(state_count(alphabet, kept));
  std::vector<bool> filled(lifted.size(), false);
  for (std::size_t s = 0; s < table.size(); ++s) {
    const auto digits = decode_state(s, alphabet, arity);
    std::vector<Letter> rest;
    bool at_default = true;
    for (std::size_t i = 0; i < arity; ++i) {
      if (!drop[i]) rest.push_back(digits[i]);
      else if (digits[i] != 0) at_default = false;
    }
    if (at_default) {
      const std::size_t r = encode_state(rest, alphabet);
      lifted[r] = table[s];
      filled[r] = true;
    }
  }
  for (std::size_t s = 0; s < table.size(); ++s) {
    auto digits = decode_state(s, alphabet, arity);
    std::vector<Letter> rest;
    for (std::size_t i = 0; i < arity; ++i) {
      if (!drop[i]) rest.push_back(digits[i]);
      else digits[i] = 0;
    }
    const std::size_t r = encode_state(rest, alphabet);
    if (!filled[r]) throw internal_error("lift left an input unset");
    if (lifted[r] != table[s]) {
      throw LiftError(s, encode_state(digits, alphabet),
                      "table depends on a lifted position: inputs " + std::to_string(s) +
                          " and " + std::to_string(encode_state(digits, alphabet)) + " differ");
    }
  }
  return lifted;
}

Digraph wiring_diagram(const ProductFunction& f) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < f.arity(); ++i)
    for (std::size_t j = 0; j < f.arity(); ++j)
      if (depends_on(f, j, i)) edges.emplace_back(i, j);
  return Digraph(f.arity(), std::move(edges));
}

Digraph dedge() { return Digraph(2, {{0, 0}, {0, 1}, {1, 1}}); }

Cut make_cut(std::size_t arity, std::vector<std::size_t> x) {
  std::sort(x.begin(), x.end());
  if (std::adjacent_find(x.begin(), x.end()) != x.end())
    throw invalid_argument("cut lists a coordinate twice");
  if (!x.empty() && x.back() >= arity) throw invalid_argument("cut coordinate out of range");
  Cut cut;
  cut.x = std::move(x);
  for (std::size_t i = 0; i < arity; ++i)
    if (!std::binary_search(cut.x.begin(), cut.x.end(), i)) cut.y.push_back(i);
  return cut;
}

bool is_valid_cut(const Digraph& w, const Cut& cut) {
  if (cut.x.size() + cut.y.size() != w.vertex_count()) return false;
  std::vector<char> in_x(w.vertex_count(), 0);
  for (std::size_t i : cut.x) {
    if (i >= w.vertex_count()) return false;
    in_x[i] = 1;
  }
  for (const auto& [u, v] : w.edges())
    if (!in_x[u] && in_x[v]) return false;
  return true;
}

std::vector<std::vector<Vertex>> strongly_connected_components(const Digraph& w) {
  const std::size_t V = w.vertex_count();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(V, kNone), low(V, 0);
  std::vector<char> on_stack(V, 0);
  std::vector<Vertex> stack;
  std::vector<std::vector<Vertex>> comps;
  std::size_t counter = 0;
  // Explicit DFS frames: (vertex, next successor position).
  std::vector<std::pair<Vertex, std::size_t>> frames;
  for (Vertex root = 0; root < V; ++root) {
    if (index[root] != kNone) continue;
    frames.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      const auto succ = w.successors(v);
      if (pos < succ.size()) {
        const Vertex u = succ[pos++];
        if (index[u] == kNone) {
          index[u] = low[u] = counter++;
          stack.push_back(u);
          on_stack[u] = 1;
          frames.emplace_back(u, 0);
        } else if (on_stack[u]) {
          low[v] = std::min(low[v], index[u]);
        }
        continue;
      }
      const Vertex done = v;
      frames.pop_back();
      if (!frames.empty()) low[frames.back().first] = std::min(low[frames.back().first], low[done]);
      if (low[done] == index[done]) {
        std::vector<Vertex> comp;
        Vertex u;
        do {
          u = stack.back();
          stack.pop_back();
          on_stack[u] = 0;
          comp.push_back(u);
        } while (u != done);
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
      }
    }
  }
  // Tarjan emits sinks first.
  std::reverse(comps.begin(), comps.end());
  return comps;
}

std::vector<Cut> enumerate_cuts(const Digraph& w, std::size_t max_cuts) {
  const auto comps = strongly_connected_components(w);
  std::vector<std::size_t> comp_of(w.vertex_count());
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (Vertex v : comps[c]) comp_of[v] = c;
  std::vector<std::set<std::size_t>> preds(comps.size());
  for (const auto& [u, v] : w.edges())
    if (comp_of[u] != comp_of[v]) preds[comp_of[v]].insert(comp_of[u]);

  std::vector<std::vector<std::size_t>> ideals;
  std::vector<char> chosen(comps.size(), 0);
  auto search = [&](auto&& self, std::size_t c) -> void {
    if (c == comps.size()) {
      if (ideals.size() >= max_cuts)
        throw limit_exceeded("more than " + std::to_string(max_cuts) + " cuts");
      std::vector<std::size_t> x;
      for (std::size_t d = 0; d < comps.size(); ++d)
        if (chosen[d]) x.insert(x.end(), comps[d].begin(), comps[d].end());
      std::sort(x.begin(), x.end());
      ideals.push_back(std::move(x));
      return;
    }
    self(self, c + 1);
    bool closed = true;
    for (std::size_t p : preds[c]) closed = closed && chosen[p];
    if (closed) {
      chosen[c] = 1;
      self(self, c + 1);
      chosen[c] = 0;
    }
  };
  search(search, 0);
  std::sort(ideals.begin(), ideals.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<Cut> cuts;
  for (auto& x : ideals) cuts.push_back(make_cut(w.vertex_count(), std::move(x)));
  return cuts;
}

ExtractedDecomposition extract(const ProductFunction& f, const Cut& cut) {
  const std::size_t k = f.arity();
  const std::size_t q = f.alphabet();
  const Digraph w = wiring_diagram(f);
  if (!is_valid_cut(w, cut)) {
    std::string msg = "cut is not valid for the wiring diagram";
    std::vector<char> in_x(k, 0);
    for (std::size_t i : cut.x)
      if (i < k) in_x[i] = 1;
    for (const auto& [u, v] : w.edges()) {
      if (!in_x[u] && in_x[v]) {
        msg += ": coordinate " + f.names[v] + " depends on " + f.names[u];
        break;
      }
    }
    throw invalid_argument(msg);
  }

  ExtractedDecomposition d;
  d.m = cut.x.size();
  d.sigma.resize(k);
  for (std::size_t p = 0; p < k; ++p) d.sigma[p] = p;
  std::vector<std::size_t> x_out, y_in;  // misplaced coordinates
  for (std::size_t i : cut.x)
    if (i >= d.m) x_out.push_back(i);
  for (std::size_t i : cut.y)
    if (i < d.m) y_in.push_back(i);
  for (std::size_t t = 0; t < x_out.size(); ++t) std::swap(d.sigma[x_out[t]], d.sigma[y_in[t]]);

  // (σ·f)_p(a') = f_{σ(p)}(a) where a_{σ(q)} = a'_q.
  const std::size_t states = state_count(q, k);
  std::vector<std::vector<Letter>> tables(k, std::vector<Letter>(states));
  std::vector<std::string> names(k);
  for (std::size_t s = 0; s < states; ++s) {
    const auto digits = decode_state(s, q, k);
    std::vector<Letter> original(k);
    for (std::size_t p = 0; p < k; ++p) original[d.sigma[p]] = digits[p];
    const std::size_t o = encode_state(original, q);
    for (std::size_t p = 0; p < k; ++p) tables[p][s] = f.table(d.sigma[p])[o];
  }
  for (std::size_t p = 0; p < k; ++p) names[p] = f.names[d.sigma[p]];
  d.permuted = ProductFunction::from_tables(q, names, tables);

  std::vector<std::size_t> y_block, x_block;
  for (std::size_t p = d.m; p < k; ++p) y_block.push_back(p);
  for (std::size_t p = 0; p < d.m; ++p) {
    bool used = false;
    for (std::size_t j = d.m; j < k && !used; ++j)
      used = depends_on(d.permuted, j, p);
    if (used) d.inputs.push_back(p);
    else x_block.push_back(p);
  }

  std::vector<std::vector<Letter>> g_tables;
  for (std::size_t p = 0; p < d.m; ++p)
    g_tables.push_back(independent_lift(d.permuted.table(p), q, k, y_block));
  d.g = ProductFunction::from_tables(q, {names.begin(), names.begin() + d.m}, std::move(g_tables));

  d.h.alphabet = q;
  d.h.input_arity = d.inputs.size() + (k - d.m);
  for (std::size_t p = d.m; p < k; ++p)
    d.h.tables.push_back(independent_lift(d.permuted.table(p), q, k, x_block));
  d.h.validate();

  const SemiDirect rebuilt = semidirect(to_semidirect_spec(d));
  for (std::size_t s = 0; s < states; ++s) {
    if (rebuilt.system.update()[s] != d.permuted.map.apply(s))
      throw internal_error("extracted decomposition does not reproduce the function at state " +
                           std::to_string(s));
  }
  return d;
}

SemiDirectSpec to_semidirect_spec(const ExtractedDecomposition& d) {
  const std::size_t q = d.g.alphabet();
  SemiDirectSpec spec;
  spec.base = d.g.to_dds();
  spec.env_size = state_count(q, d.inputs.size());
  spec.fiber_size = state_count(q, d.permuted.arity() - d.m);
  for (std::size_t x = 0; x < spec.base.size(); ++x) {
    const auto digits = decode_state(x, q, d.m);
    std::vector<Letter> e;
    for (std::size_t i : d.inputs) e.push_back(digits[i]);
    spec.drive.push_back(encode_state(e, q));
  }
  for (std::size_t s = 0; s < d.h.input_count(); ++s) spec.fiber_update.push_back(d.h.apply(s));
  spec.validate();
  return spec;
}

bool verify_semidirect_projection(const ProductFunction& f, const Cut& cut) {
  for (std::size_t i : cut.x)
    for (std::size_t j : cut.y)
      if (depends_on(f, i, j)) return false;
  return true;
}

ProductFunction assemble_semidirect(const ProductFunction& g, const std::vector<std::size_t>& inputs,
                                    const LetterMap& h, std::vector<std::string> fiber_names) {
  const std::size_t q = g.alphabet();
  const std::size_t m = g.arity();
  const std::size_t n = h.output_arity();
  if (h.alphabet != q || h.input_arity != inputs.size() + n || fiber_names.size() != n)
    throw invalid_argument("fiber map does not match the base");
  for (std::size_t i : inputs)
    if (i >= m) throw invalid_argument("drive index out of range");
  h.validate();
  const std::size_t states = state_count(q, m + n);
  std::vector<std::vector<Letter>> tables(m + n, std::vector<Letter>(states));
  const std::size_t fiber_states = state_count(q, n);
  for (std::size_t s = 0; s < states; ++s) {
    const std::size_t x = s / fiber_states;
    const std::size_t y = s % fiber_states;
    const auto xd = decode_state(x, q, m);
    std::vector<Letter> e;
    for (std::size_t i : inputs) e.push_back(xd[i]);
    const std::size_t h_in = encode_state(e, q) * fiber_states + y;
    for (std::size_t p = 0; p < m; ++p) tables[p][s] = g.table(p)[x];
    for (std::size_t p = 0; p < n; ++p) tables[m + p][s] = h.tables[p][h_in];
  }
  std::vector<std::string> names = g.names;
  names.insert(names.end(), fiber_names.begin(), fiber_names.end());
  return ProductFunction::from_tables(q, std::move(names), std::move(tables));
}

}  // namespace ddskit
