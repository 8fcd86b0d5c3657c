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

#include <doctest.h>

#include <numeric>

#include "ddskit/attractor.hpp"
#include "ddskit/cycleset.hpp"
#include "ddskit/error.hpp"
#include "support.hpp"

using namespace ddskit;
using namespace ddskit::testing;

namespace {

bool single_looped_vertex(const Digraph& g) {
  return g.vertex_count() == 1 && g.edge_count() == 1 && g.has_edge(0, 0);
}

AbstractCycleSet random_attractors(Rng& rng, std::size_t bound) {
  const Digraph g = random_digraph(rng, uniform(rng, 1, 4), uniform_real(rng, 0.2, 0.6));
  return from_attractors(attractor_truncated(g, bound));
}

ZnSet random_zn_set(Rng& rng, std::size_t n, std::size_t max_orbits) {
  // Disjoint union of cyclic orbits whose sizes divide n.
  ZnSet s;
  s.n = n;
  const auto ds = divisors(n);
  const std::size_t orbits = uniform(rng, 1, max_orbits);
  for (std::size_t o = 0; o < orbits; ++o) {
    const std::size_t size = ds[uniform(rng, 0, ds.size() - 1)];
    const std::size_t base = s.action.size();
    for (std::size_t i = 0; i < size; ++i) s.action.push_back(base + (i + 1) % size);
  }
  return s;
}

// Equivariant maps counted over all functions.
std::uint64_t brute_equivariant(const ZnSet& a, const ZnSet& b) {
  if (a.size() == 0) return 1;
  if (b.size() == 0) return 0;
  std::vector<Index> f(a.size(), 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (Index x = 0; x < a.size() && ok; ++x) ok = f[a.action[x]] == b.action[f[x]];
    count += ok;
    std::size_t i = 0;
    while (i < f.size() && ++f[i] == b.size()) f[i++] = 0;
    if (i == f.size()) return count;
  }
}

}  // namespace

TEST_CASE("builtin examples classify as constructed") {
  const std::size_t bound = 8;
  const auto anb = builtin_example("a-not-b", bound);
  const auto bna = builtin_example("b-not-a", bound);
  const auto nab = builtin_example("not-ab", bound);
  const auto awu = builtin_example("a-without-unique-degens", bound);
  CHECK(anb.provenance() == Provenance::builtin_example);

  CHECK_FALSE(check_property_A(anb));
  CHECK(check_property_B(anb));
  CHECK(check_property_A(bna));
  CHECK_FALSE(check_property_B(bna));
  CHECK(check_property_A(nab));
  CHECK(check_property_B(nab));
  // K_1 is empty while *_2 is fixed by the rotation of level 2.
  CHECK_FALSE(check_property_A(awu));
  const auto b = check_property_B(awu);
  REQUIRE(b);
  CHECK(b->n == 2);
  CHECK(b->m == 1);
  CHECK(b->describe(awu) ==
        "'*2' at level 2 is fixed by rotation by 1 but is not a degeneracy from level 1");

  const auto a = check_property_A(bna);
  REQUIRE(a);
  CHECK(a->describe(bna) == "deg 1 -> 2 identifies '0' and '1'");
  CHECK(recheck(bna, *a));
  CHECK(recheck(awu, *b));

  CHECK(builtin_examples(bound).size() == 4);
  CHECK_THROWS_AS(builtin_example("nope", bound), Error);
  CHECK_THROWS_AS(builtin_example("a-not-b", 5), Error);
}

TEST_CASE("degeneracies of *_6 are ambiguous") {
  const auto awu = builtin_example("a-without-unique-degens", 6);
  const Index star6 = *awu.cycles().find(6, "*6");
  const AncestorResult r = nondegenerate_ancestor(awu, 6, star6);
  REQUIRE(r.witnesses.size() == 2);
  CHECK(r.witnesses[0].level == 2);
  CHECK(r.witnesses[1].level == 3);
  CHECK_FALSE(r.unique());
  CHECK(is_nondegenerate(awu, 2, 0));
  CHECK(is_nondegenerate(awu, 5, 0));
  CHECK_FALSE(is_nondegenerate(awu, 4, 0));
}

TEST_CASE("realizations of the builtin examples") {
  CHECK(single_looped_vertex(realize_truncated(builtin_example("a-not-b", 8)).graph));
  CHECK(single_looped_vertex(realize_truncated(builtin_example("b-not-a", 8)).graph));
  // The coproduct realizes to the coproduct of looped vertices.
  const Digraph two = realize_truncated(builtin_example("not-ab", 8)).graph;
  CHECK(two.vertex_count() == 2);
  CHECK(two.edge_count() == 2);
  CHECK(two.has_edge(0, 0));
  CHECK(two.has_edge(1, 1));

  // Truncation leaves *_n isolated when no multiple of n within the bound
  // meets another level; count components by divisibility.
  for (std::size_t bound = 6; bound <= 20; ++bound) {
    std::vector<std::size_t> parent(bound + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t n = 2; n <= bound; ++n)
      for (std::size_t m = 2 * n; m <= bound; m += n) parent[find(n)] = find(m);
    std::size_t components = 0;
    for (std::size_t n = 2; n <= bound; ++n) components += find(n) == n;

    const auto k = builtin_example("a-without-unique-degens", bound);
    const Realization r = realize_truncated(k);
    CHECK(r.graph.vertex_count() == components);
    CHECK(r.graph.edge_count() == components);
    for (Vertex v = 0; v < r.graph.vertex_count(); ++v) CHECK(r.graph.has_edge(v, v));
  }
}

TEST_CASE("representables") {
  for (std::size_t k = 1; k <= 5; ++k) {
    const std::size_t bound = 10;
    const auto c = representable(k, bound);
    for (std::size_t n = 1; n <= bound; ++n)
      CHECK(c.cycles().size(n) == cycle_hom_set(n, k).size());
    CHECK_FALSE(check_property_A(c));
    CHECK_FALSE(check_property_B(c));
    const Recognition rec = recognize(c);
    REQUIRE(rec.recognized());
    REQUIRE(rec.presentation->generators.size() == 1);
    CHECK(rec.presentation->generators[0].length == k);
    CHECK(are_isomorphic(realize_truncated(c).graph, cycle_graph(k)));
  }
}

TEST_CASE("maps out of a representable are elements (Yoneda)") {
  Rng rng(41);
  for (int t = 0; t < 25; ++t) {
    const std::size_t bound = 6;
    const auto k = random_attractors(rng, bound);
    for (std::size_t j = 1; j <= 3; ++j)
      CHECK(count_cycleset_maps(representable(j, bound), k) == k.cycles().size(j));
  }
}

TEST_CASE("the action of cycle maps") {
  Rng rng(42);
  for (int t = 0; t < 20; ++t) {
    const auto k = random_attractors(rng, 6);
    for (std::size_t n = 1; n <= 6; ++n)
      for (std::size_t m = n; m <= 6; m += n)
        for (const CycleMap& phi : cycle_hom_set(m, n))
          for (Index x = 0; x < k.cycles().size(n); ++x)
            CHECK(k.act(x, phi) == k.cycles().deg(n, m, k.cycles().rot(n, x, phi.offset)));
  }
}

TEST_CASE("validation rejects relation failures") {
  TruncatedCycleSet raw(2);
  raw.set_level(1, {"a"});
  raw.set_level(2, {"b"});
  CHECK_THROWS_AS(validate(raw), RelationError);
  try {
    validate(raw);
  } catch (const RelationError& e) {
    CHECK(e.violation().relation == RelationViolation::Relation::table_shape);
  }
  raw.set_deg(1, 2, {0});
  CHECK_NOTHROW(validate(raw));
}

TEST_CASE("coproducts and evaluation") {
  Rng rng(43);
  for (int t = 0; t < 20; ++t) {
    const auto a = random_attractors(rng, 6);
    const auto b = random_attractors(rng, 6);
    const auto c = coproduct(a, b);
    for (std::size_t n = 1; n <= 6; ++n) {
      CHECK(c.cycles().size(n) == a.cycles().size(n) + b.cycles().size(n));
      CHECK(ev(c, n).size() == c.cycles().size(n));
      CHECK(ev(a, n).action == a.cycles().rot_table(n));
    }
    CHECK_THROWS_AS(coproduct(a, representable(1, 5)), Error);
  }
}

TEST_CASE("adjoints of evaluation") {
  Rng rng(44);
  for (int t = 0; t < 30; ++t) {
    const std::size_t bound = 6;
    const std::size_t n = uniform(rng, 1, 4);
    const ZnSet x = random_zn_set(rng, n, 2);
    const auto k = random_attractors(rng, bound);
    const ZnSet kn = ev(k, n);
    // Hom(L X, K) = Hom(X, K_n) and Hom(K, R X) = Hom(K_n, X).
    CHECK(count_cycleset_maps(adjoint_L(x, bound), k) == brute_equivariant(x, kn));
    CHECK(count_cycleset_maps(k, adjoint_R(x, bound)) == brute_equivariant(kn, x));
  }
  // Level j of L X is a copy of X when n | j.
  const ZnSet swap{2, {}, {1, 0, 3, 2}};
  const auto l = adjoint_L(swap, 6);
  CHECK(l.cycles().size(1) == 0);
  CHECK(l.cycles().size(2) == 4);
  CHECK(l.cycles().size(4) == 4);
  CHECK(l.cycles().size(5) == 0);
  // Level j of R X is Fix_j(X) when j | n, a point otherwise.
  const ZnSet mixed{2, {}, {0, 2, 1}};
  const auto r = adjoint_R(mixed, 4);
  CHECK(r.cycles().size(1) == 1);
  CHECK(r.cycles().size(2) == 3);
  CHECK(r.cycles().size(3) == 1);
  CHECK(r.cycles().size(4) == 1);
}

TEST_CASE("equivariant map counts") {
  Rng rng(45);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = uniform(rng, 1, 6);
    const ZnSet a = random_zn_set(rng, n, 3), b = random_zn_set(rng, n, 3);
    if (a.size() > 7 || b.size() > 7) continue;
    CHECK(count_equivariant_maps(a, b) == brute_equivariant(a, b));
  }
}

TEST_CASE("realization unit and recognition on attractor sets") {
  Rng rng(46);
  for (int t = 0; t < 30; ++t) {
    const auto k = random_attractors(rng, 6);
    CHECK_FALSE(check_property_A(k));
    CHECK_FALSE(check_property_B(k));
    const Realization r = realize_truncated(k);
    CHECK(verify_unit(k, r));
    const Recognition rec = recognize(k);
    REQUIRE(rec.recognized());
    std::map<std::size_t, std::uint64_t> expected;
    for (std::size_t n = 1; n <= 6; ++n) {
      const auto orbits = k.cycles().level_action(n).orbits();
      for (const auto& o : orbits)
        if (o.size() == n) ++expected[n];
      for (Index x = 0; x < k.cycles().size(n); ++x)
        CHECK(nondegenerate_ancestor(k, n, x).unique());
    }
    CHECK(rec.presentation->counts_by_length() == expected);
    CHECK(counting_diagnostics(k).consistent());
  }
}

TEST_CASE("recognition reports violations") {
  const Recognition rec = recognize(builtin_example("not-ab", 6));
  CHECK_FALSE(rec.recognized());
  REQUIRE(rec.violations.size() == 2);
  CHECK(rec.violations[0].kind == PropertyViolation::Kind::A);
  CHECK(rec.violations[1].kind == PropertyViolation::Kind::B);
}

TEST_CASE("counting recursion goes negative without unique degeneracies") {
  const auto k = builtin_example("a-without-unique-degens", 6);
  const CountingDiagnostics d = counting_diagnostics(k);
  CHECK_FALSE(d.consistent());
  // One orbit per level n >= 2: r(n) = orbits(n) - sum of r(d) over proper d.
  std::vector<std::int64_t> r(7, 0);
  for (std::size_t n = 1; n <= 6; ++n) {
    r[n] = n >= 2 ? 1 : 0;
    for (std::size_t d = 1; d < n; ++d)
      if (n % d == 0) r[n] -= r[d];
  }
  REQUIRE(d.rows.size() == 6);
  for (const auto& row : d.rows) CHECK(row.recursion == r[row.n]);
  CHECK(r[6] == -1);
}

TEST_CASE("Z/n isomorphisms pair orbits of equal size") {
  const ZnSet a{4, {}, {1, 0, 2, 3, 4}};
  const ZnSet b{4, {}, {0, 2, 1, 3, 4}};
  const auto iso = zn_isomorphism(a, b);
  REQUIRE(iso);
  for (Index x = 0; x < a.size(); ++x) CHECK((*iso)[a.action[x]] == b.action[(*iso)[x]]);
  const ZnSet c{4, {}, {1, 0, 3, 2, 4}};
  CHECK_FALSE(zn_isomorphism(a, c));
}
