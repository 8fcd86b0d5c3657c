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

#include "ddskit/attractor.hpp"

#include <algorithm>
#include <tuple>
#include <set>

#include "ddskit/error.hpp"
#include "functional.hpp"

namespace ddskit {

std::vector<std::size_t> divisors(std::size_t n) {
  std::vector<std::size_t> small, large;
  for (std::size_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::uint64_t euler_totient(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

NCycle rotate(const NCycle& c, std::size_t times) {
  NCycle out = c;
  if (!c.vertices.empty()) {
    std::rotate(out.vertices.begin(),
                out.vertices.begin() + static_cast<std::ptrdiff_t>(times % c.length()),
                out.vertices.end());
  }
  return out;
}

NCycle repeat(const NCycle& c, std::size_t m) {
  if (c.vertices.empty() || m % c.length() != 0)
    throw invalid_argument("repeat length must be a multiple of the cycle length");
  NCycle out;
  out.vertices.reserve(m);
  for (std::size_t k = 0; k < m; ++k) out.vertices.push_back(c.vertices[k % c.length()]);
  return out;
}

std::size_t minimal_period(const NCycle& c) {
  const std::size_t n = c.length();
  for (std::size_t p : divisors(n)) {
    bool periodic = true;
    for (std::size_t k = 0; k + p < n && periodic; ++k)
      periodic = c.vertices[k] == c.vertices[k + p];
    if (periodic) return p;
  }
  return n;
}

bool ZnSet::is_valid() const {
  if (n == 0) return false;
  if (!labels.empty() && labels.size() != action.size()) return false;
  std::vector<bool> hit(action.size(), false);
  for (Index y : action) {
    if (y >= action.size() || hit[y]) return false;
    hit[y] = true;
  }
  for (Index x = 0; x < action.size(); ++x) {
    Index y = x;
    for (std::size_t i = 0; i < n; ++i) y = action[y];
    if (y != x) return false;
  }
  return true;
}

std::vector<std::vector<Index>> ZnSet::orbits() const {
  std::vector<std::vector<Index>> out;
  std::vector<bool> seen(action.size(), false);
  for (Index x = 0; x < action.size(); ++x) {
    if (seen[x]) continue;
    std::vector<Index> orbit;
    for (Index y = x; !seen[y]; y = action[y]) {
      seen[y] = true;
      orbit.push_back(y);
    }
    out.push_back(std::move(orbit));
  }
  return out;
}

TruncatedCycleSet::TruncatedCycleSet(std::size_t bound)
    : labels_(bound), rot_(bound) {
  if (bound == 0) throw invalid_argument("cycle set bound must be >= 1");
}

void TruncatedCycleSet::require_level(std::size_t n) const {
  if (n == 0 || n > labels_.size()) {
    throw invalid_argument("level " + std::to_string(n) + " is outside 1.." +
                           std::to_string(labels_.size()));
  }
}

const std::vector<std::string>& TruncatedCycleSet::level(std::size_t n) const {
  require_level(n);
  return labels_[n - 1];
}

std::size_t TruncatedCycleSet::total_size() const {
  std::size_t total = 0;
  for (const auto& l : labels_) total += l.size();
  return total;
}

const std::string& TruncatedCycleSet::label(std::size_t n, Index x) const {
  const auto& l = level(n);
  if (x >= l.size()) throw invalid_argument("element index out of range");
  return l[x];
}

std::optional<Index> TruncatedCycleSet::find(std::size_t n, const std::string& label) const {
  const auto& l = level(n);
  auto it = std::find(l.begin(), l.end(), label);
  if (it == l.end()) return std::nullopt;
  return static_cast<Index>(it - l.begin());
}

Index TruncatedCycleSet::rot(std::size_t n, Index x) const {
  return rot_table(n).at(x);
}

Index TruncatedCycleSet::rot(std::size_t n, Index x, std::size_t times) const {
  const auto& table = rot_table(n);
  for (std::size_t i = 0; i < times % n; ++i) x = table.at(x);
  return x;
}

const std::vector<Index>& TruncatedCycleSet::rot_table(std::size_t n) const {
  require_level(n);
  return rot_[n - 1];
}

Index TruncatedCycleSet::deg(std::size_t n, std::size_t m, Index x) const {
  if (n == m) {
    require_level(n);
    return x;
  }
  return deg_table(n, m).at(x);
}

bool TruncatedCycleSet::has_deg_table(std::size_t n, std::size_t m) const {
  return deg_.count({n, m}) != 0;
}

const std::vector<Index>& TruncatedCycleSet::deg_table(std::size_t n, std::size_t m) const {
  require_level(n);
  require_level(m);
  if (m % n != 0)
    throw invalid_argument("no degeneracy from level " + std::to_string(n) +
                           " to level " + std::to_string(m));
  auto it = deg_.find({n, m});
  if (it == deg_.end()) {
    static const std::vector<Index> kEmpty;
    if (size(n) == 0) return kEmpty;
    throw invalid_argument("missing degeneracy table " + std::to_string(n) + " -> " +
                           std::to_string(m));
  }
  return it->second;
}

void TruncatedCycleSet::set_level(std::size_t n, std::vector<std::string> labels,
                                  std::vector<Index> rot) {
  require_level(n);
  if (rot.empty()) {
    rot.resize(labels.size());
    for (Index x = 0; x < rot.size(); ++x) rot[x] = x;
  }
  labels_[n - 1] = std::move(labels);
  rot_[n - 1] = std::move(rot);
}

void TruncatedCycleSet::set_rot(std::size_t n, std::vector<Index> rot) {
  require_level(n);
  rot_[n - 1] = std::move(rot);
}

void TruncatedCycleSet::set_deg(std::size_t n, std::size_t m, std::vector<Index> table) {
  require_level(n);
  require_level(m);
  if (m % n != 0 || m == n)
    throw invalid_argument("degeneracy tables exist only for proper divisors");
  deg_[{n, m}] = std::move(table);
}

std::optional<RelationViolation> TruncatedCycleSet::check_relations() const {
  using R = RelationViolation::Relation;
  const std::size_t N = bound();
  auto fail = [](R rel, std::size_t n, std::size_t m, Index x, std::string msg) {
    return RelationViolation{rel, n, m, x, std::move(msg)};
  };

  for (std::size_t n = 1; n <= N; ++n) {
    const auto& labels = labels_[n - 1];
    const auto& rot = rot_[n - 1];
    std::set<std::string> seen;
    for (Index x = 0; x < labels.size(); ++x) {
      if (!seen.insert(labels[x]).second)
        return fail(R::table_shape, n, n, x, "duplicate label '" + labels[x] + "'");
    }
    if (rot.size() != labels.size())
      return fail(R::table_shape, n, n, 0, "rotation table has wrong size");
    for (Index x = 0; x < rot.size(); ++x) {
      if (rot[x] >= labels.size())
        return fail(R::table_shape, n, n, x, "rotation image out of range");
    }
    for (std::size_t m = 2 * n; m <= N; m += n) {
      if (labels.empty()) continue;
      auto it = deg_.find({n, m});
      if (it == deg_.end())
        return fail(R::table_shape, n, m, 0, "missing degeneracy table");
      if (it->second.size() != labels.size())
        return fail(R::table_shape, n, m, 0, "degeneracy table has wrong size");
      for (Index x = 0; x < labels.size(); ++x) {
        if (it->second[x] >= labels_[m - 1].size())
          return fail(R::table_shape, n, m, x, "degeneracy image out of range");
      }
    }
  }

  for (std::size_t n = 1; n <= N; ++n) {
    const auto& rot = rot_[n - 1];
    std::vector<bool> hit(rot.size(), false);
    for (Index x = 0; x < rot.size(); ++x) {
      if (hit[rot[x]])
        return fail(R::rotation_bijective, n, n, x, "rotation is not injective");
      hit[rot[x]] = true;
    }
    for (Index x = 0; x < rot.size(); ++x) {
      Index y = x;
      for (std::size_t i = 0; i < n; ++i) y = rot[y];
      if (y != x)
        return fail(R::rotation_order, n, n, x, "rotation to the power n is not the identity");
    }
  }

  for (std::size_t n = 1; n <= N; ++n) {
    for (std::size_t m = 2 * n; m <= N; m += n) {
      for (Index x = 0; x < size(n); ++x) {
        if (rot(m, deg(n, m, x)) != deg(n, m, rot(n, x)))
          return fail(R::naturality, n, m, x,
                      "rotating after degenerating differs from degenerating after rotating");
      }
    }
  }

  for (std::size_t n = 1; n <= N; ++n) {
    for (std::size_t m = 2 * n; m <= N; m += n) {
      for (std::size_t l = 2 * m; l <= N; l += m) {
        for (Index x = 0; x < size(n); ++x) {
          if (deg(m, l, deg(n, m, x)) != deg(n, l, x))
            return fail(R::degeneracy_chain, n, l, x,
                        "degeneracy via level " + std::to_string(m) +
                            " differs from the direct degeneracy");
        }
      }
    }
  }
  return std::nullopt;
}

ZnSet TruncatedCycleSet::level_action(std::size_t n) const {
  return ZnSet{n, labels(n), rot_table(n)};
}

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw limit_exceeded("cycle count overflows 64 bits");
  return out;
}

// W[n] = |A(G)_n| for n = 0..bound (W[0] unused).
std::vector<std::uint64_t> walk_counts(const Digraph& g, std::size_t bound) {
  std::vector<std::uint64_t> counts(bound + 1, 0);
  if (is_functional(g)) {
    std::vector<StateId> f(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) f[v] = g.successors(v).front();
    const auto period = detail::periods(f);
    std::map<std::size_t, std::uint64_t> histogram;
    for (auto p : period)
      if (p != 0) ++histogram[p];
    for (auto [p, c] : histogram)
      for (std::size_t n = p; n <= bound; n += p) counts[n] = checked_add(counts[n], c);
    return counts;
  }
  const std::size_t V = g.vertex_count();
  std::vector<std::uint64_t> cur(V), next(V);
  for (Vertex s = 0; s < V; ++s) {
    std::fill(cur.begin(), cur.end(), 0);
    cur[s] = 1;
    for (std::size_t step = 1; step <= bound; ++step) {
      std::fill(next.begin(), next.end(), 0);
      for (const auto& [u, v] : g.edges())
        if (cur[u] != 0) next[v] = checked_add(next[v], cur[u]);
      cur.swap(next);
      counts[step] = checked_add(counts[step], cur[s]);
    }
  }
  return counts;
}

std::uint64_t burnside(std::size_t n, const std::vector<std::uint64_t>& walks) {
  std::uint64_t sum = 0;
  for (std::size_t d : divisors(n)) {
    std::uint64_t term;
    if (__builtin_mul_overflow(euler_totient(n / d), walks[d], &term))
      throw limit_exceeded("Burnside sum overflows 64 bits");
    sum = checked_add(sum, term);
  }
  if (sum % n != 0) throw internal_error("Burnside sum is not divisible by n");
  return sum / n;
}

std::string cycle_label(const NCycle& c, std::size_t width) {
  std::string out;
  for (std::size_t k = 0; k < c.length(); ++k) {
    if (k) out += '.';
    std::string id = std::to_string(c.vertices[k]);
    out += std::string(width > id.size() ? width - id.size() : 0, '0') + id;
  }
  return out;
}

}  // namespace

std::uint64_t closed_walk_count(const Digraph& g, std::size_t n) {
  if (n == 0) throw invalid_argument("cycle length must be >= 1");
  return walk_counts(g, n)[n];
}

std::vector<NCycle> enumerate_n_cycles(const Digraph& g, std::size_t n,
                                       const AttractorOptions& options) {
  if (n == 0) throw invalid_argument("cycle length must be >= 1");
  const std::size_t V = g.vertex_count();
  std::vector<NCycle> out;
  auto emit = [&](NCycle c) {
    if (out.size() >= options.cap) {
      throw limit_exceeded("more than " + std::to_string(options.cap) + " cycles of length " +
                           std::to_string(n));
    }
    out.push_back(std::move(c));
  };

  if (is_functional(g)) {
    std::vector<StateId> f(V);
    for (Vertex v = 0; v < V; ++v) f[v] = g.successors(v).front();
    const auto period = detail::periods(f);
    for (Vertex s = 0; s < V; ++s) {
      if (period[s] == 0 || n % period[s] != 0) continue;
      NCycle c;
      c.vertices.reserve(n);
      for (Vertex v = s; c.vertices.size() < n; v = f[v]) c.vertices.push_back(v);
      emit(std::move(c));
    }
    return out;
  }

  // reach[r][v]: v reaches the start vertex in exactly r steps.
  std::vector<std::vector<char>> reach(n + 1, std::vector<char>(V, 0));
  NCycle path;
  for (Vertex s = 0; s < V; ++s) {
    std::fill(reach[0].begin(), reach[0].end(), 0);
    reach[0][s] = 1;
    for (std::size_t r = 1; r <= n; ++r) {
      for (Vertex v = 0; v < V; ++v) {
        char ok = 0;
        for (Vertex w : g.successors(v))
          if (reach[r - 1][w]) { ok = 1; break; }
        reach[r][v] = ok;
      }
    }
    if (!reach[n][s]) continue;
    path.vertices.assign(1, s);
    auto extend = [&](auto&& self) -> void {
      const std::size_t len = path.vertices.size();
      if (len == n) {
        emit(path);
        return;
      }
      for (Vertex w : g.successors(path.vertices.back())) {
        if (!reach[n - len][w]) continue;
        path.vertices.push_back(w);
        self(self);
        path.vertices.pop_back();
      }
    };
    extend(extend);
  }
  return out;
}

std::optional<Index> AttractorSet::find(const NCycle& c) const {
  if (c.length() == 0 || c.length() > walks.size()) return std::nullopt;
  const auto& level = walks[c.length() - 1];
  auto it = std::lower_bound(level.begin(), level.end(), c);
  if (it == level.end() || !(*it == c)) return std::nullopt;
  return static_cast<Index>(it - level.begin());
}

AttractorSet attractor_truncated(const Digraph& g, std::size_t bound,
                                 const AttractorOptions& options) {
  if (bound == 0) throw invalid_argument("truncation bound must be >= 1");
  AttractorSet out{TruncatedCycleSet(bound), {}};
  const std::size_t width =
      g.vertex_count() <= 1 ? 1 : std::to_string(g.vertex_count() - 1).size();
  for (std::size_t n = 1; n <= bound; ++n) {
    out.walks.push_back(enumerate_n_cycles(g, n, options));
  }
  auto lookup = [&](const NCycle& c) {
    auto idx = out.find(c);
    if (!idx) throw internal_error("precomposed cycle missing from its level");
    return *idx;
  };
  for (std::size_t n = 1; n <= bound; ++n) {
    const auto& level = out.walks[n - 1];
    std::vector<std::string> labels;
    std::vector<Index> rot;
    labels.reserve(level.size());
    rot.reserve(level.size());
    for (const auto& c : level) {
      labels.push_back(cycle_label(c, width));
      rot.push_back(lookup(rotate(c)));
    }
    out.cycles.set_level(n, std::move(labels), std::move(rot));
    if (level.empty()) continue;
    for (std::size_t m = 2 * n; m <= bound; m += n) {
      std::vector<Index> table;
      table.reserve(level.size());
      for (const auto& c : level) table.push_back(lookup(repeat(c, m)));
      out.cycles.set_deg(n, m, std::move(table));
    }
  }
  return out;
}

std::uint64_t orbit_count_burnside(const Digraph& g, std::size_t n) {
  if (n == 0) throw invalid_argument("cycle length must be >= 1");
  return burnside(n, walk_counts(g, n));
}

std::uint64_t orbit_count_enumerated(const Digraph& g, std::size_t n,
                                     const AttractorOptions& options) {
  std::uint64_t orbits = 0;
  for (const auto& c : enumerate_n_cycles(g, n, options)) {
    // Each orbit has exactly one lexicographically least member.
    bool least = true;
    for (std::size_t i = 1; i < n && least; ++i) least = !(rotate(c, i) < c);
    if (least) ++orbits;
  }
  return orbits;
}

std::uint64_t orbit_count(const Digraph& g, std::size_t n, const AttractorOptions& options) {
  if (closed_walk_count(g, n) <= options.cap) return orbit_count_enumerated(g, n, options);
  return orbit_count_burnside(g, n);
}

std::map<std::size_t, std::uint64_t> nondeg_orbit_counts(const Digraph& g, std::size_t bound) {
  if (bound == 0) throw invalid_argument("truncation bound must be >= 1");
  const auto walks = walk_counts(g, bound);
  std::map<std::size_t, std::uint64_t> counts;
  for (std::size_t n = 1; n <= bound; ++n) {
    std::uint64_t value = burnside(n, walks);
    for (std::size_t d : divisors(n)) {
      if (d == n) break;
      if (counts[d] > value)
        throw internal_error("negative non-degenerate orbit count at length " +
                             std::to_string(n));
      value -= counts[d];
    }
    counts[n] = value;
  }
  return counts;
}

std::map<std::size_t, std::uint64_t> CycleSetPresentation::counts_by_length() const {
  std::map<std::size_t, std::uint64_t> counts;
  for (const auto& gen : generators) ++counts[gen.length];
  return counts;
}

CycleSetPresentation attractor_presentation(const FiniteDds& d) {
  const auto period = detail::periods({d.update().begin(), d.update().end()});
  std::vector<bool> taken(d.size(), false);
  CycleSetPresentation out;
  for (StateId x = 0; x < d.size(); ++x) {
    if (period[x] == 0 || taken[x]) continue;
    Generator gen;
    gen.length = period[x];
    for (StateId y = x; !taken[y]; y = d.update()[y]) {
      taken[y] = true;
      gen.vertices.push_back(y);
      if (!gen.label.empty()) gen.label += ' ';
      gen.label += d.display(y);
    }
    out.generators.push_back(std::move(gen));
  }
  std::stable_sort(out.generators.begin(), out.generators.end(),
                   [](const Generator& a, const Generator& b) {
                     return std::tie(a.length, a.vertices) < std::tie(b.length, b.vertices);
                   });
  return out;
}

}  // namespace ddskit
