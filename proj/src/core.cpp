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

#include "ddskit/core.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ddskit/error.hpp"
#include "union_find.hpp"

namespace ddskit {

namespace {

constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);

void require_state(const FiniteDds& d, StateId x) {
  if (x >= d.size()) {
    throw invalid_argument("state " + std::to_string(x) +
                           " is out of range for a system with " +
                           std::to_string(d.size()) + " states");
  }
}

std::vector<std::string> paired_labels(const FiniteDds& a, const FiniteDds& b) {
  if (!a.has_labels() || !b.has_labels()) return {};
  std::vector<std::string> out;
  out.reserve(a.size() * b.size());
  for (StateId x = 0; x < a.size(); ++x)
    for (StateId y = 0; y < b.size(); ++y)
      out.push_back("(" + a.labels()[x] + "," + b.labels()[y] + ")");
  return out;
}

}  // namespace

FiniteDds::FiniteDds(std::vector<StateId> update, std::vector<std::string> labels)
    : update_(std::move(update)), labels_(std::move(labels)) {
  for (std::size_t x = 0; x < update_.size(); ++x) {
    if (update_[x] >= update_.size()) {
      throw invalid_argument("update of state " + std::to_string(x) + " is " +
                             std::to_string(update_[x]) +
                             ", outside the state set of size " +
                             std::to_string(update_.size()));
    }
  }
  if (!labels_.empty()) {
    if (labels_.size() != update_.size())
      throw invalid_argument("label count does not match state count");
    std::set<std::string> seen;
    for (const auto& label : labels_) {
      if (!seen.insert(label).second)
        throw invalid_argument("duplicate state label '" + label + "'");
    }
  }
}

StateId FiniteDds::operator()(StateId x) const {
  require_state(*this, x);
  return update_[x];
}

std::string FiniteDds::display(StateId x) const {
  require_state(*this, x);
  return labels_.empty() ? std::to_string(x) : labels_[x];
}

FiniteDds make_dds(std::size_t size, std::vector<StateId> update,
                   std::vector<std::string> labels) {
  if (update.size() != size) {
    throw invalid_argument("update table has " + std::to_string(update.size()) +
                           " entries, expected " + std::to_string(size));
  }
  return FiniteDds(std::move(update), std::move(labels));
}

FiniteDds cyclic_system(std::size_t n) {
  if (n == 0) throw invalid_argument("cyclic system needs n >= 1");
  std::vector<StateId> update(n);
  for (std::size_t i = 0; i < n; ++i) update[i] = (i + 1) % n;
  return FiniteDds(std::move(update));
}

StateId step(const FiniteDds& d, StateId x, std::uint64_t t) {
  require_state(d, x);
  if (t <= d.size()) {
    for (std::uint64_t i = 0; i < t; ++i) x = d.update()[x];
    return x;
  }
  // Past the tail: reduce into the cycle.
  const Trajectory tr = trajectory(d, x);
  const std::uint64_t offset = (t - tr.tail.size()) % tr.period();
  return tr.cycle[static_cast<std::size_t>(offset)];
}

Trajectory trajectory(const FiniteDds& d, StateId x) {
  require_state(d, x);
  std::vector<std::size_t> position(d.size(), kUnvisited);
  std::vector<StateId> seq;
  while (position[x] == kUnvisited) {
    position[x] = seq.size();
    seq.push_back(x);
    x = d.update()[x];
  }
  const auto split = seq.begin() + static_cast<std::ptrdiff_t>(position[x]);
  return Trajectory{std::vector<StateId>(seq.begin(), split),
                    std::vector<StateId>(split, seq.end())};
}

CheckResult check_morphism(const DdsMorphism& m) {
  const auto& src = m.source;
  const auto& tgt = m.target;
  if (m.map.size() != src.size()) return {false, std::nullopt};
  for (StateId x = 0; x < src.size(); ++x) {
    if (m.map[x] >= tgt.size()) return {false, x};
  }
  for (StateId x = 0; x < src.size(); ++x) {
    if (m.map[src.update()[x]] != tgt.update()[m.map[x]]) return {false, x};
  }
  return {};
}

CheckResult is_isomorphism(const DdsMorphism& m) {
  CheckResult morphism = check_morphism(m);
  if (!morphism) return morphism;
  if (m.source.size() != m.target.size()) return {false, std::nullopt};
  std::vector<StateId> preimage(m.target.size(), kUnvisited);
  for (StateId x = 0; x < m.source.size(); ++x) {
    if (preimage[m.map[x]] != kUnvisited) return {false, x};
    preimage[m.map[x]] = x;
  }
  return {};
}

std::optional<DdsMorphism> inverse(const DdsMorphism& m) {
  if (!is_isomorphism(m)) return std::nullopt;
  std::vector<StateId> inv(m.map.size());
  for (StateId x = 0; x < m.map.size(); ++x) inv[m.map[x]] = x;
  return DdsMorphism{m.target, m.source, std::move(inv)};
}

DdsMorphism compose(const DdsMorphism& outer, const DdsMorphism& inner) {
  if (!(inner.target == outer.source))
    throw invalid_argument("cannot compose morphisms: target/source mismatch");
  if (outer.map.size() != outer.source.size() ||
      inner.map.size() != inner.source.size())
    throw invalid_argument("cannot compose morphisms with partial maps");
  std::vector<StateId> map(inner.map.size());
  for (StateId x = 0; x < map.size(); ++x) map[x] = outer.map.at(inner.map[x]);
  return DdsMorphism{inner.source, outer.target, std::move(map)};
}

DdsMorphism identity_morphism(const FiniteDds& d) {
  std::vector<StateId> map(d.size());
  for (StateId x = 0; x < d.size(); ++x) map[x] = x;
  return DdsMorphism{d, d, std::move(map)};
}

FiniteDds product(const FiniteDds& a, const FiniteDds& b) {
  std::vector<StateId> update;
  update.reserve(a.size() * b.size());
  for (StateId x = 0; x < a.size(); ++x)
    for (StateId y = 0; y < b.size(); ++y)
      update.push_back(a.update()[x] * b.size() + b.update()[y]);
  return FiniteDds(std::move(update), paired_labels(a, b));
}

std::pair<DdsMorphism, DdsMorphism> product_projections(const FiniteDds& a,
                                                        const FiniteDds& b) {
  FiniteDds p = product(a, b);
  std::vector<StateId> first, second;
  for (StateId x = 0; x < a.size(); ++x) {
    for (StateId y = 0; y < b.size(); ++y) {
      first.push_back(x);
      second.push_back(y);
    }
  }
  return {DdsMorphism{p, a, std::move(first)},
          DdsMorphism{p, b, std::move(second)}};
}

FiniteDds coproduct(const FiniteDds& a, const FiniteDds& b) {
  std::vector<StateId> update(a.update().begin(), a.update().end());
  for (StateId y : b.update()) update.push_back(y + a.size());
  std::vector<std::string> labels;
  if (a.has_labels() && b.has_labels()) {
    for (const auto& l : a.labels()) labels.push_back("0." + l);
    for (const auto& l : b.labels()) labels.push_back("1." + l);
  }
  return FiniteDds(std::move(update), std::move(labels));
}

std::pair<DdsMorphism, DdsMorphism> coproduct_injections(const FiniteDds& a,
                                                          const FiniteDds& b) {
  FiniteDds c = coproduct(a, b);
  std::vector<StateId> left(a.size()), right(b.size());
  for (StateId x = 0; x < a.size(); ++x) left[x] = x;
  for (StateId y = 0; y < b.size(); ++y) right[y] = a.size() + y;
  return {DdsMorphism{a, c, std::move(left)}, DdsMorphism{b, c, std::move(right)}};
}

Pullback pullback(const DdsMorphism& m1, const DdsMorphism& m2) {
  if (!(m1.target == m2.target))
    throw invalid_argument("pullback needs morphisms with a common target");
  if (!check_morphism(m1) || !check_morphism(m2))
    throw invalid_argument("pullback arguments must be valid morphisms");

  Pullback out;
  std::map<std::pair<StateId, StateId>, StateId> index;
  for (StateId x = 0; x < m1.source.size(); ++x) {
    for (StateId y = 0; y < m2.source.size(); ++y) {
      if (m1.map[x] != m2.map[y]) continue;
      index.emplace(std::pair{x, y}, out.pairs.size());
      out.pairs.emplace_back(x, y);
    }
  }
  std::vector<StateId> update;
  std::vector<StateId> first, second;
  update.reserve(out.pairs.size());
  for (auto [x, y] : out.pairs) {
    update.push_back(index.at({m1.source.update()[x], m2.source.update()[y]}));
    first.push_back(x);
    second.push_back(y);
  }
  out.system = FiniteDds(std::move(update));
  out.first = DdsMorphism{out.system, m1.source, std::move(first)};
  out.second = DdsMorphism{out.system, m2.source, std::move(second)};
  return out;
}

std::vector<std::vector<StateId>> orbit_components(const FiniteDds& d) {
  detail::UnionFind uf(d.size());
  for (StateId x = 0; x < d.size(); ++x) uf.unite(x, d.update()[x]);
  std::vector<std::vector<StateId>> components;
  std::vector<std::size_t> slot(d.size(), kUnvisited);
  // Ascending scan: components come out ordered by smallest member and each
  // one is already sorted.
  for (StateId x = 0; x < d.size(); ++x) {
    const std::size_t root = uf.find(x);
    if (slot[root] == kUnvisited) {
      slot[root] = components.size();
      components.emplace_back();
    }
    components[slot[root]].push_back(x);
  }
  return components;
}

}  // namespace ddskit
