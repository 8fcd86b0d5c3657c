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

// Random generators and brute-force oracles shared by the tests. Oracles use
// only the data structures of the library, never its algorithms.

#ifndef DDSKIT_TESTS_SUPPORT_HPP
#define DDSKIT_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ddskit/core.hpp"
#include "ddskit/digraph.hpp"
#include "ddskit/semidirect.hpp"
#include "ddskit/wiring.hpp"

namespace ddskit::testing {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline double uniform_real(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Each of the V^2 possible edges (loops included) is present with
// probability `density`.
inline Digraph random_digraph(Rng& rng, std::size_t vertices, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < vertices; ++u)
    for (Vertex v = 0; v < vertices; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Digraph(vertices, std::move(edges));
}

inline std::vector<std::size_t> random_function(Rng& rng, std::size_t domain,
                                                std::size_t codomain) {
  std::vector<std::size_t> f(domain);
  for (auto& y : f) y = uniform(rng, 0, codomain - 1);
  return f;
}

inline FiniteDds random_dds(Rng& rng, std::size_t size) {
  return FiniteDds(random_function(rng, size, size));
}

inline SemiDirectSpec random_semidirect_spec(Rng& rng, std::size_t max_x, std::size_t max_e,
                                             std::size_t max_y) {
  SemiDirectSpec s;
  s.base = random_dds(rng, uniform(rng, 1, max_x));
  s.env_size = uniform(rng, 1, max_e);
  s.drive = random_function(rng, s.base.size(), s.env_size);
  s.fiber_size = uniform(rng, 1, max_y);
  s.fiber_update = random_function(rng, s.env_size * s.fiber_size, s.fiber_size);
  return s;
}

inline std::vector<Letter> random_table(Rng& rng, std::size_t alphabet, std::size_t arity) {
  return random_function(rng, state_count(alphabet, arity), alphabet);
}

inline std::vector<std::string> variable_names(std::size_t k, const std::string& stem = "x") {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) names.push_back(stem + std::to_string(i + 1));
  return names;
}

inline ProductFunction random_product_function(Rng& rng, std::size_t alphabet,
                                               std::size_t arity) {
  std::vector<std::vector<Letter>> tables;
  for (std::size_t j = 0; j < arity; ++j) tables.push_back(random_table(rng, alphabet, arity));
  return ProductFunction::from_tables(alphabet, variable_names(arity), std::move(tables));
}

inline std::vector<std::size_t> random_permutation(Rng& rng, std::size_t k) {
  std::vector<std::size_t> p(k);
  for (std::size_t i = 0; i < k; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// F(z)_p = f(w)_{pi[p]} where w_{pi[p]} = z_p: f with coordinate p of the new
// system being coordinate pi[p] of the old one.
inline ProductFunction permute_coordinates(const ProductFunction& f,
                                           const std::vector<std::size_t>& pi) {
  const std::size_t k = f.arity(), q = f.alphabet();
  std::vector<std::vector<Letter>> tables(k, std::vector<Letter>(state_count(q, k)));
  std::vector<std::string> names(k);
  for (std::size_t p = 0; p < k; ++p) names[p] = f.names[pi[p]];
  for (std::size_t s = 0; s < state_count(q, k); ++s) {
    const auto z = decode_state(s, q, k);
    std::vector<Letter> w(k);
    for (std::size_t p = 0; p < k; ++p) w[pi[p]] = z[p];
    const auto out = decode_state(f.map.apply(encode_state(w, q)), q, k);
    for (std::size_t p = 0; p < k; ++p) tables[p][s] = out[pi[p]];
  }
  return ProductFunction::from_tables(q, std::move(names), std::move(tables));
}

// ---------------------------------------------------------------------------
// Closed walks

// Every closed walk of length n, found by extending along all out-edges
// without pruning, in lexicographic order.
inline std::vector<std::vector<Vertex>> brute_closed_walks(const Digraph& g, std::size_t n) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> walk;
  auto extend = [&](auto&& self) -> void {
    if (walk.size() == n) {
      if (g.has_edge(walk.back(), walk.front())) out.push_back(walk);
      return;
    }
    for (Vertex v : g.successors(walk.back())) {
      walk.push_back(v);
      self(self);
      walk.pop_back();
    }
  };
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    walk.assign(1, s);
    extend(extend);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Vertex> rotated(const std::vector<Vertex>& w, std::size_t i) {
  std::vector<Vertex> r(w.size());
  for (std::size_t j = 0; j < w.size(); ++j) r[j] = w[(j + i) % w.size()];
  return r;
}

inline bool is_aperiodic(const std::vector<Vertex>& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (rotated(w, i) == w) return false;
  return true;
}

inline std::vector<Vertex> least_rotation(const std::vector<Vertex>& w) {
  std::vector<Vertex> best = w;
  for (std::size_t i = 1; i < w.size(); ++i) best = std::min(best, rotated(w, i));
  return best;
}

// Rotation classes of closed walks of length n.
inline std::uint64_t brute_orbit_count(const Digraph& g, std::size_t n) {
  std::set<std::vector<Vertex>> classes;
  for (const auto& w : brute_closed_walks(g, n)) classes.insert(least_rotation(w));
  return classes.size();
}

// Rotation classes of aperiodic closed walks of length n.
inline std::uint64_t brute_aperiodic_necklaces(const Digraph& g, std::size_t n) {
  std::set<std::vector<Vertex>> classes;
  for (const auto& w : brute_closed_walks(g, n))
    if (is_aperiodic(w)) classes.insert(least_rotation(w));
  return classes.size();
}

// The n-cycles of a system: states x with f^n(x) = x, each giving the walk
// (x, f(x), ..., f^{n-1}(x)).
inline std::vector<std::vector<Vertex>> brute_system_cycles(const FiniteDds& d, std::size_t n) {
  std::vector<std::vector<Vertex>> out;
  for (StateId x = 0; x < d.size(); ++x) {
    std::vector<Vertex> w{x};
    while (w.size() < n) w.push_back(d.update()[w.back()]);
    if (d.update()[w.back()] == x) out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Wiring

inline bool brute_depends(const ProductFunction& f, std::size_t j, std::size_t i) {
  const std::size_t q = f.alphabet(), k = f.arity();
  for (std::size_t s = 0; s < state_count(q, k); ++s) {
    auto z = decode_state(s, q, k);
    const Letter base = decode_state(f.map.apply(s), q, k)[j];
    for (Letter a = 0; a < q; ++a) {
      z[i] = a;
      if (decode_state(f.map.apply(encode_state(z, q)), q, k)[j] != base) return true;
    }
  }
  return false;
}

// Subsets X (as sorted index lists) with no dependency of an X coordinate on
// a coordinate outside X, ordered by size then lexicographically.
inline std::vector<std::vector<std::size_t>> brute_cuts(const ProductFunction& f) {
  const std::size_t k = f.arity();
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    bool ok = true;
    for (std::size_t j = 0; j < k && ok; ++j) {
      if (!(mask >> j & 1)) continue;
      for (std::size_t i = 0; i < k && ok; ++i)
        if (!(mask >> i & 1) && brute_depends(f, j, i)) ok = false;
    }
    if (!ok) continue;
    std::vector<std::size_t> x;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) x.push_back(i);
    out.push_back(std::move(x));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

// (x, y) |-> (g(x), h(x|_I, y)) computed digit by digit.
inline std::vector<std::size_t> semidirect_table(const ProductFunction& g,
                                                 const std::vector<std::size_t>& inputs,
                                                 const LetterMap& h, std::size_t fiber_arity) {
  const std::size_t q = g.alphabet(), m = g.arity(), k = m + fiber_arity;
  std::vector<std::size_t> out(state_count(q, k));
  for (std::size_t s = 0; s < out.size(); ++s) {
    const auto z = decode_state(s, q, k);
    std::vector<Letter> x(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(m));
    std::vector<Letter> hin;
    for (std::size_t i : inputs) hin.push_back(z[i]);
    hin.insert(hin.end(), z.begin() + static_cast<std::ptrdiff_t>(m), z.end());
    auto next = decode_state(g.map.apply(encode_state(x, q)), q, m);
    const auto fiber = decode_state(h.apply(encode_state(hin, q)), q, fiber_arity);
    next.insert(next.end(), fiber.begin(), fiber.end());
    out[s] = encode_state(next, q);
  }
  return out;
}

inline std::vector<std::size_t> full_table(const ProductFunction& f) {
  std::vector<std::size_t> out(state_count(f.alphabet(), f.arity()));
  for (std::size_t s = 0; s < out.size(); ++s) out[s] = f.map.apply(s);
  return out;
}

}  // namespace ddskit::testing

#endif  // DDSKIT_TESTS_SUPPORT_HPP
