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

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

// stdout of the CLI; stderr is folded in when `merge` is set. `input` is a
// printf format piped to standard input.
Run cli(const std::string& args, bool merge = false, const std::string& input = "") {
  const std::string feed = input.empty() ? "" : "printf '" + input + "' | ";
  const std::string cmd = feed + "\"" + DDSKIT_CLI_PATH + "\" " + args +
                          (merge ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string data(const std::string& name) {
  return std::string("\"") + DDSKIT_DATA_DIR + "/" + name + "\"";
}

}  // namespace

TEST_CASE("attractors of a network and a digraph") {
  const Run r = cli("attractors " + data("xor_or.net"));
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["orbits"].size() == 3);
  CHECK(j["orbits"][1]["representative"] == nlohmann::json::array({"101", "111"}));

  const Run d = cli("attractors " + data("four_vertex.dg") + " --max-length 4");
  REQUIRE(d.status == 0);
  CHECK(nlohmann::json::parse(d.out)["input"] == "digraph");
}

TEST_CASE("standard input") {
  const Run r = cli("cuts - < " + data("xor_or.net"));
  CHECK(r.status == 0);
  CHECK(r.out == "X={x1} Y={x2,x3} nontrivial\n");
}

TEST_CASE("DOT emitters") {
  const Run s = cli("state-space " + data("feedback2.net"));
  CHECK(s.status == 0);
  CHECK(s.out ==
        "digraph {\n  n0 [label=\"00\"];\n  n1 [label=\"01\"];\n  n2 [label=\"10\"];\n"
        "  n3 [label=\"11\"];\n  n0 -> n0;\n  n1 -> n2;\n  n2 -> n3;\n  n3 -> n1;\n}\n");
  const Run w = cli("wiring " + data("feedback2.net"));
  CHECK(w.status == 0);
  CHECK(w.out.find("n0 -> n1;") != std::string::npos);
  CHECK(w.out.find("n1 -> n0;") != std::string::npos);
}

TEST_CASE("cuts and decompositions") {
  CHECK(cli("cuts " + data("feedback2.net")).out.empty());
  CHECK(cli("cuts --all " + data("feedback2.net")).out ==
        "X={} Y={x1,x2} trivial\nX={x1,x2} Y={} trivial\n");
  const Run d = cli("decompose " + data("mod3.net") + " --cut x1,x2");
  CHECK(d.status == 0);
  CHECK(d.out.find("# verified: true") != std::string::npos);
  const Run v = cli("verify-theorem " + data("cascade.net") + " --cut x1 --level 2 --level 4");
  CHECK(v.status == 0);
  CHECK(nlohmann::json::parse(v.out)["verified"] == true);
}

TEST_CASE("cycle-set checks") {
  const Run r = cli("cycleset-check " + data("b-not-a.cs"));
  CHECK(r.status == 0);
  CHECK(r.out.find("Property A: violated") != std::string::npos);
  CHECK(cli("cycleset-check --strict " + data("b-not-a.cs")).status == 1);
  CHECK(cli("cycleset-check --strict builtin:a-not-b --bound 8").status == 1);
  const Run real = cli("realize builtin:b-not-a");
  CHECK(real.out == "digraph {\n  n0 [label=\"0\"];\n  n0 -> n0;\n}\n");
  const Run with = cli("cycleset-check --realize " + data("a-not-b.cs"));
  CHECK(with.out.find("digraph {") != std::string::npos);
}

TEST_CASE("exit codes and diagnostics") {
  const Run bad_cut = cli("decompose " + data("feedback2.net") + " --cut x1", true);
  CHECK(bad_cut.status == 1);
  CHECK(bad_cut.out.find("ddskit: cut 'x1' is not valid") == 0);
  const Run missing = cli("attractors /nonexistent/file.net", true);
  CHECK(missing.status == 2);
  CHECK(missing.out.find("ddskit: cannot open") == 0);
  const Run parse = cli("cuts -", true, "var a\\nf(a) = q\\n");
  CHECK(parse.status == 2);
  CHECK(cli("no-such-command").status == 2);
  CHECK(cli("decompose " + data("mod3.net")).status == 2);  // --cut is required
  CHECK(cli("--help").status == 0);
  CHECK(cli("--version").status == 0);
  const Run broken = cli("cycleset-check -", true, "bound 2\\nlevel 1: a\\nlevel 2: b\\n");
  CHECK(broken.status == 1);
  CHECK(broken.out.find("relations: violated") == 0);
}
