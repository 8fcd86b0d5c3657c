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

#include <functional>
#include <memory>

#include <json.hpp>

#include "ddskit/attractor.hpp"
#include "ddskit/error.hpp"
#include "ddskit/ingest.hpp"
#include "support.hpp"

using namespace ddskit;
using namespace ddskit::testing;

namespace {

std::vector<Letter> column(const ProductFunction& f, std::size_t j) { return f.table(j); }

// Random expression trees, printed fully parenthesized and evaluated directly.
struct Expr {
  std::string text;
  std::function<Letter(const std::vector<Letter>&)> eval;
};

Expr random_expr(Rng& rng, std::size_t q, std::size_t vars, int depth) {
  const std::size_t pick = depth <= 0 ? uniform(rng, 0, 1) : uniform(rng, 0, q == 2 ? 7 : 3);
  if (pick == 0) {
    const std::size_t i = uniform(rng, 0, vars - 1);
    return {"x" + std::to_string(i + 1), [i](const auto& z) { return z[i]; }};
  }
  if (pick == 1) {
    const Letter c = uniform(rng, 0, q - 1);
    return {std::to_string(c), [c](const auto&) { return c; }};
  }
  const Expr a = random_expr(rng, q, vars, depth - 1);
  const Expr b = random_expr(rng, q, vars, depth - 1);
  switch (pick) {
    case 2:
      return {"(" + a.text + " + " + b.text + ")",
              [a, b, q](const auto& z) { return (a.eval(z) + b.eval(z)) % q; }};
    case 3:
      return {"(" + a.text + " * " + b.text + ")",
              [a, b, q](const auto& z) { return (a.eval(z) * b.eval(z)) % q; }};
    case 4:
      return {"(" + a.text + " AND " + b.text + ")",
              [a, b](const auto& z) { return a.eval(z) & b.eval(z); }};
    case 5:
      return {"(" + a.text + " | " + b.text + ")",
              [a, b](const auto& z) { return a.eval(z) | b.eval(z); }};
    case 6:
      return {"(" + a.text + " XOR " + b.text + ")",
              [a, b](const auto& z) { return a.eval(z) ^ b.eval(z); }};
    default:
      return {"!" + a.text, [a](const auto& z) { return Letter{1} - a.eval(z); }};
  }
}

void check_parse_error(const std::string& text, std::size_t line, std::size_t col) {
  try {
    parse_network(text);
    FAIL("no error for: " << text);
  } catch (const ParseError& e) {
    CHECK(e.line() == line);
    CHECK(e.column() == col);
  }
}

}  // namespace

TEST_CASE("network parsing of a Boolean rule set") {
  const ProductFunction f = parse_network(
      "# comment\n"
      "var x1 x2 x3\n"
      "f(x1) = x1\n"
      "f(x2) = x2 XOR x3\n"
      "f(x3) = x1 OR x2\n");
  CHECK(f.names == std::vector<std::string>{"x1", "x2", "x3"});
  for (std::size_t s = 0; s < 8; ++s) {
    const auto z = decode_state(s, 2, 3);
    CHECK(decode_state(f.map.apply(s), 2, 3) ==
          std::vector<Letter>{z[0], Letter(z[1] ^ z[2]), Letter(z[0] | z[1])});
  }
}

TEST_CASE("operator precedence") {
  auto eval = [](const std::string& expr, std::vector<Letter> z) {
    const ProductFunction f =
        parse_network("var a b c\nf(a) = " + expr + "\nf(b) = b\nf(c) = c\n");
    return decode_state(f.map.apply(encode_state(z, 2)), 2, 3)[0];
  };
  // OR < XOR < AND: a OR b AND c == a OR (b AND c).
  CHECK(eval("a OR b AND c", {1, 0, 0}) == 1);
  CHECK(eval("a OR b AND c", {0, 1, 0}) == 0);
  // a XOR b AND c == a XOR (b AND c).
  CHECK(eval("a XOR b AND c", {1, 1, 0}) == 1);
  // a | b ^ c == a | (b ^ c).
  CHECK(eval("a | b ^ c", {1, 1, 1}) == 1);
  CHECK(eval("NOT a AND b", {0, 1, 0}) == 1);
  CHECK(eval("~(a & b)", {1, 1, 0}) == 0);

  const ProductFunction m = parse_network("alphabet 3\nvar a b\nf(a) = a + 2 * b\nf(b) = b\n");
  CHECK(decode_state(m.map.apply(encode_state({1, 2}, 3)), 3, 2)[0] == (1 + 2 * 2) % 3);
}

TEST_CASE("parsed expressions evaluate like their trees") {
  Rng rng(71);
  for (int t = 0; t < 120; ++t) {
    const std::size_t q = uniform(rng, 2, 4), vars = uniform(rng, 1, 3);
    const Expr e = random_expr(rng, q, vars, 3);
    std::string text = "alphabet " + std::to_string(q) + "\nvar";
    for (std::size_t i = 0; i < vars; ++i) text += " x" + std::to_string(i + 1);
    text += "\nf(x1) = " + e.text + "\n";
    for (std::size_t v = 2; v <= vars; ++v)
      text += "f(x" + std::to_string(v) + ") = x" + std::to_string(v) + "\n";
    const ProductFunction f = parse_network(text);
    REQUIRE(f.arity() == vars);
    for (std::size_t s = 0; s < state_count(q, vars); ++s)
      CHECK(column(f, 0)[s] == e.eval(decode_state(s, q, vars)));
  }
}

TEST_CASE("tables") {
  const ProductFunction f =
      parse_network("var a b\nf(a) = table(a, b)[0 1 1 1]\nf(b) = b\n");
  CHECK(column(f, 0) == std::vector<Letter>{0, 1, 1, 1});
  CHECK(column(f, 1) == std::vector<Letter>{0, 1, 0, 1});
}

TEST_CASE("network parse errors carry positions") {
  check_parse_error("var a\nf(a) = b\n", 2, 8);
  check_parse_error("var a\nf(a) = a +\n", 2, 11);
  check_parse_error("alphabet 3\nvar a\nf(a) = a AND a\n", 3, 10);
  check_parse_error("var a\nalphabet 3\n", 2, 1);
  check_parse_error("var a\nf(a) = table(a)[0]\n", 2, 16);
  check_parse_error("var a\nf(a) = 2\n", 2, 8);
  CHECK_THROWS_AS(parse_network("input u\nvar a\nf(a) = u\n"), Error);
  check_parse_error("var a b\nf(a) = b\n", 1, 1);
  const NetworkSource src = parse_network_source("input u\nvar a\nf(a) = u XOR a\n");
  CHECK(src.inputs == std::vector<std::string>{"u"});
  CHECK(src.map.input_arity == 2);
}

TEST_CASE("printed networks parse back to the same function") {
  Rng rng(72);
  for (int t = 0; t < 40; ++t) {
    const ProductFunction f = random_product_function(rng, uniform(rng, 2, 3), uniform(rng, 1, 4));
    const ProductFunction g = parse_network(print_network(f));
    CHECK(g == f);
  }
}

TEST_CASE("digraph text format") {
  const Digraph g = parse_digraph("vertices 3\nedge 0 1\nedge 2 2\n");
  CHECK(g.edge_count() == 2);
  CHECK(parse_digraph(print_digraph(g)) == g);
  CHECK(looks_like_digraph("# x\nvertices 2\n"));
  CHECK_FALSE(looks_like_digraph("var a\n"));
  try {
    parse_digraph("vertices 2\nedge 0 1\nedge 0 1\n");
    FAIL("duplicate edge accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_digraph("vertices 2\nedge 0 5\n"), ParseError);
}

TEST_CASE("cycle-set text format round trips") {
  Rng rng(73);
  for (int t = 0; t < 20; ++t) {
    const Digraph g = random_digraph(rng, uniform(rng, 1, 4), 0.4);
    const TruncatedCycleSet k = attractor_truncated(g, 5).cycles;
    CHECK(parse_cycleset_raw(print_cycleset(k)) == k);
    CHECK_NOTHROW(parse_cycleset(print_cycleset(k)));
  }
  const std::string bad = "bound 2\nlevel 1: a\nlevel 2: b c\nrot 2: c b\ndeg 1 2: b\n";
  CHECK_NOTHROW(parse_cycleset_raw(bad));
  CHECK_THROWS_AS(parse_cycleset(bad), RelationError);
  CHECK_THROWS_AS(parse_cycleset_raw("level 1: a\n"), ParseError);
  CHECK_THROWS_AS(parse_cycleset_raw("bound 2\nlevel 1: a a\n"), ParseError);
  CHECK_THROWS_AS(parse_cycleset_raw("bound 2\nlevel 1: a\ndeg 1 2: z\nlevel 2: b\n"),
                  ParseError);
}

TEST_CASE("DOT output") {
  const Digraph g(2, {{0, 1}, {1, 1}});
  CHECK(to_dot(g) ==
        "digraph {\n  n0 [label=\"0\"];\n  n1 [label=\"1\"];\n  n0 -> n1;\n  n1 -> n1;\n}\n");
  CHECK(to_dot(g, {"a\"b", "c"}).find("label=\"a\\\"b\"") != std::string::npos);
  CHECK_THROWS_AS(to_dot(g, {"a"}), Error);
}

TEST_CASE("attractor report JSON") {
  const ProductFunction f =
      parse_network("var x1 x2 x3\nf(x1) = x1\nf(x2) = x2 XOR x3\nf(x3) = x1 OR x2\n");
  const AttractorReport r = attractor_report(f);
  CHECK(r.verified);
  CHECK(r.states == 8);
  const auto j = nlohmann::ordered_json::parse(report_json(r));
  std::vector<std::string> keys;
  for (const auto& [key, value] : j.items()) keys.push_back(key);
  CHECK(keys == std::vector<std::string>{"schema", "kind", "input", "system", "max_length",
                                         "lengths", "nondegenerate_orbit_counts", "orbits",
                                         "wiring", "cuts", "verified"});
  CHECK(j["lengths"] == nlohmann::json::array({1, 2, 3}));
  CHECK(j["cuts"].size() == 1);

  const AttractorReport small = attractor_report(f, 2);
  CHECK(small.max_length == 2);
  CHECK(small.orbits.size() == 2);

  const AttractorReport dg = attractor_report(Digraph(2, {{0, 1}, {1, 0}, {0, 0}}));
  CHECK(dg.input_kind == "digraph");
  const auto jd = nlohmann::json::parse(report_json(dg));
  CHECK_FALSE(jd.contains("wiring"));
  // Orbits {0}, {01}, {001}: Lyndon words avoiding 11.
  CHECK(jd["nondegenerate_orbit_counts"]["1"] == 1);
  CHECK(jd["nondegenerate_orbit_counts"]["2"] == 1);
}

TEST_CASE("cut listing and parsing") {
  const ProductFunction f = parse_network(
      "alphabet 3\nvar x1 x2 x3\nf(x1) = x1 + 1\nf(x2) = x1 * x2 + 1\nf(x3) = x2 + 2 * x3\n");
  CHECK(cuts_text(f, false) == "X={x1} Y={x2,x3} nontrivial\nX={x1,x2} Y={x3} nontrivial\n");
  CHECK(cuts_text(f, true).find("X={} Y={x1,x2,x3} trivial") == 0);
  CHECK(parse_cut(f, "x1,x2") == make_cut(3, {0, 1}));
  CHECK(parse_cut(f, "{1, 2}") == make_cut(3, {0, 1}));
  CHECK(parse_cut(f, "x2,1") == make_cut(3, {0, 1}));
  CHECK_THROWS_AS(parse_cut(f, "x9"), Error);
  CHECK_THROWS_AS(parse_cut(f, "4"), Error);
}

TEST_CASE("decomposition outputs") {
  const ProductFunction f = parse_network(
      "var a b c\nf(a) = b\nf(b) = a\nf(c) = c XOR a\n");
  const Cut cut = parse_cut(f, "a,b");
  const std::string text = decomposition_text(f, cut);
  CHECK(text.find("# cut: X={a,b} Y={c}\n") == 0);
  CHECK(text.find("# verified: true\n") != std::string::npos);
  CHECK(text.find("input a\n") != std::string::npos);

  const auto j = nlohmann::json::parse(decomposition_json(f, cut, {1, 2, 4}));
  CHECK(j["verified"] == true);
  CHECK(j["levels"].size() == 3);
  for (const auto& level : j["levels"]) {
    CHECK(level["verified"] == true);
    CHECK(level["lhs_size"] == level["rhs_size"]);
  }
  CHECK(j["inputs"] == nlohmann::json::array({"a"}));
  CHECK_THROWS_AS(decomposition_text(f, make_cut(3, {2})), Error);
}

TEST_CASE("cycle-set verdicts") {
  const CycleSetVerdict v =
      check_cycleset(builtin_example("a-without-unique-degens", 6).cycles());
  CHECK_FALSE(v.relations);
  CHECK_FALSE(v.property_a);
  CHECK(v.property_b);
  CHECK_FALSE(v.presentation);
  CHECK(v.text.find("ancestors: ambiguous for 1 element, first at level 6: '*6' <- (2, '*2'), "
                    "(3, '*3')") != std::string::npos);

  const CycleSetVerdict ok =
      check_cycleset(attractor_truncated(Digraph(2, {{0, 1}, {1, 0}}), 4).cycles);
  REQUIRE(ok.presentation);
  CHECK(ok.text ==
        "relations: ok\nProperty A: ok\nProperty B: ok\nancestors: unique\ngenerators:\n"
        "  length 2: 0.1\n");

  TruncatedCycleSet broken(2);
  broken.set_level(1, {"a"});
  broken.set_level(2, {"b"});
  const CycleSetVerdict bad = check_cycleset(broken);
  CHECK(bad.relations);
  CHECK(bad.text.find("relations: violated") == 0);
}
