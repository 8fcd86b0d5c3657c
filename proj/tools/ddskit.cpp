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

// Command-line front end. Talks to the library only through the C API.
//
// Exit codes: 0 success, 1 a checked property fails or the cut is invalid,
// 2 unreadable or malformed input.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ddskit/ddskit.h"

namespace {

constexpr int kOk = 0;
constexpr int kFinding = 1;
constexpr int kInputError = 2;

// Thrown to unwind with an exit code after the message has been printed.
struct Exit {
  int code;
};

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};

using NetworkPtr = std::unique_ptr<ddk_network, Deleter<ddk_network, ddk_network_free>>;
using DigraphPtr = std::unique_ptr<ddk_digraph, Deleter<ddk_digraph, ddk_digraph_free>>;
using CycleSetPtr = std::unique_ptr<ddk_cycleset, Deleter<ddk_cycleset, ddk_cycleset_free>>;
using StringPtr = std::unique_ptr<ddk_string, Deleter<ddk_string, ddk_string_free>>;

int exit_code_for(ddk_status status) {
  switch (status) {
    case DDK_PARSE_ERROR:
    case DDK_INVALID_ARGUMENT:
      return kInputError;
    default:
      return kFinding;
  }
}

void check(ddk_status status) {
  if (status == DDK_OK) return;
  std::cerr << "ddskit: " << ddk_status_name(status) << ": " << ddk_last_error_message() << "\n";
  throw Exit{status == DDK_INTERNAL_ERROR || status == DDK_LIMIT_EXCEEDED ||
                     status == DDK_OUT_OF_MEMORY
                 ? kFinding
                 : exit_code_for(status)};
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "ddskit: cannot open '" << path << "'\n";
    throw Exit{kInputError};
  }
  return std::string(std::istreambuf_iterator<char>(in), {});
}

NetworkPtr load_network(const std::string& path) {
  const std::string text = read_input(path);
  ddk_network* raw = nullptr;
  check(ddk_network_parse(text.data(), text.size(), &raw));
  return NetworkPtr(raw);
}

// A file path, `-`, or `builtin:<name>`.
CycleSetPtr load_cycleset(const std::string& source, std::size_t bound) {
  ddk_cycleset* raw = nullptr;
  const std::string prefix = "builtin:";
  if (source.rfind(prefix, 0) == 0) {
    check(ddk_cycleset_builtin(source.substr(prefix.size()).c_str(), bound, &raw));
  } else {
    const std::string text = read_input(source);
    check(ddk_cycleset_parse(text.data(), text.size(), &raw));
  }
  return CycleSetPtr(raw);
}

void print(ddk_string* s) {
  StringPtr owned(s);
  std::fwrite(ddk_string_data(s), 1, ddk_string_size(s), stdout);
}

void require_valid_cut(const ddk_network* net, const std::string& cut) {
  int valid = 0;
  check(ddk_network_cut_is_valid(net, cut.c_str(), &valid));
  if (!valid) {
    std::cerr << "ddskit: cut '" << cut << "' is not valid for the wiring diagram\n";
    throw Exit{kFinding};
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Attractors, cycle sets and semi-direct decompositions of finite systems"};
  app.set_version_flag("--version", std::string(ddk_version()));
  app.require_subcommand(1);

  std::string input;
  std::size_t max_length = 0;
  bool all_cuts = false;
  std::string cut;
  std::vector<std::size_t> levels;
  bool realize_too = false;
  bool strict = false;
  std::size_t bound = 6;

  auto* state_space = app.add_subcommand("state-space", "DOT of the state space of a network");
  state_space->add_option("input", input, "network file or -")->required();

  auto* attractors = app.add_subcommand(
      "attractors", "JSON listing of the non-degenerate periodic orbits of a network or digraph");
  attractors->add_option("input", input, "network or digraph file, or -")->required();
  attractors->add_option("--max-length", max_length,
                         "largest cycle length considered (default: number of states)");

  auto* wiring = app.add_subcommand("wiring", "DOT of the wiring diagram of a network");
  wiring->add_option("input", input, "network file or -")->required();

  auto* cuts = app.add_subcommand("cuts", "valid cuts of the wiring diagram");
  cuts->add_option("input", input, "network file or -")->required();
  cuts->add_flag("--all", all_cuts, "include the two trivial cuts");

  auto* decompose = app.add_subcommand("decompose", "semi-direct decomposition along a cut");
  decompose->add_option("input", input, "network file or -")->required();
  decompose->add_option("--cut", cut, "variables of X: names or 1-based indices, comma separated")
      ->required();

  auto* verify = app.add_subcommand("verify-theorem",
                                    "JSON check of the orbit decomposition along a cut");
  verify->add_option("input", input, "network file or -")->required();
  verify->add_option("--cut", cut, "variables of X: names or 1-based indices, comma separated")
      ->required();
  verify->add_option("--level", levels, "cycle length to check (repeatable)")->required();

  auto* cs_check = app.add_subcommand("cycleset-check",
                                      "relations, Property A and Property B of a cycle set");
  cs_check->add_option("input", input, "cycle-set file, -, or builtin:<name>")->required();
  cs_check->add_flag("--realize", realize_too, "append the DOT of the truncated realization");
  cs_check->add_flag("--strict", strict, "exit 1 when Property A or Property B fails");
  cs_check->add_option("--bound", bound, "truncation bound for builtin cycle sets")
      ->capture_default_str();

  auto* realize = app.add_subcommand("realize", "DOT of the truncated realization of a cycle set");
  realize->add_option("input", input, "cycle-set file, -, or builtin:<name>")->required();
  realize->add_option("--bound", bound, "truncation bound for builtin cycle sets")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (state_space->parsed()) {
      auto net = load_network(input);
      ddk_string* out = nullptr;
      check(ddk_network_state_space_dot(net.get(), &out));
      print(out);
    } else if (attractors->parsed()) {
      const std::string text = read_input(input);
      int is_digraph = 0;
      check(ddk_text_is_digraph(text.data(), text.size(), &is_digraph));
      ddk_string* out = nullptr;
      if (is_digraph) {
        ddk_digraph* raw = nullptr;
        check(ddk_digraph_parse(text.data(), text.size(), &raw));
        DigraphPtr g(raw);
        check(ddk_digraph_attractors_json(g.get(), max_length, &out));
      } else {
        ddk_network* raw = nullptr;
        check(ddk_network_parse(text.data(), text.size(), &raw));
        NetworkPtr net(raw);
        check(ddk_network_attractors_json(net.get(), max_length, &out));
      }
      print(out);
    } else if (wiring->parsed()) {
      auto net = load_network(input);
      ddk_string* out = nullptr;
      check(ddk_network_wiring_dot(net.get(), &out));
      print(out);
    } else if (cuts->parsed()) {
      auto net = load_network(input);
      ddk_string* out = nullptr;
      check(ddk_network_cuts(net.get(), all_cuts ? 1 : 0, &out));
      print(out);
    } else if (decompose->parsed()) {
      auto net = load_network(input);
      require_valid_cut(net.get(), cut);
      ddk_string* out = nullptr;
      check(ddk_network_decompose(net.get(), cut.c_str(), &out));
      print(out);
    } else if (verify->parsed()) {
      auto net = load_network(input);
      require_valid_cut(net.get(), cut);
      ddk_string* out = nullptr;
      check(ddk_network_verify_theorem_json(net.get(), cut.c_str(), levels.data(), levels.size(),
                                            &out));
      print(out);
    } else if (cs_check->parsed()) {
      auto cs = load_cycleset(input, bound);
      ddk_string* out = nullptr;
      int relations = 0, a = 0, b = 0;
      check(ddk_cycleset_check(cs.get(), &out, &relations, &a, &b));
      print(out);
      if (!relations) return kFinding;
      if (realize_too) {
        ddk_string* dot = nullptr;
        check(ddk_cycleset_realize_dot(cs.get(), &dot));
        print(dot);
      }
      if (strict && (!a || !b)) return kFinding;
    } else if (realize->parsed()) {
      auto cs = load_cycleset(input, bound);
      ddk_string* out = nullptr;
      check(ddk_cycleset_realize_dot(cs.get(), &out));
      print(out);
    }
  } catch (const Exit& e) {
    return e.code;
  }
  return kOk;
}
