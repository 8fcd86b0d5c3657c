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

// Text formats, DOT and JSON emitters.
//
// Network format (one statement per line, `#` starts a comment):
//
//   alphabet <q>            optional, first statement, default 2, q >= 2
//   var <name>...           declares state variables in order
//   input <name>...         declares read-only inputs (letter maps only)
//   f(<name>) = <expr>      update rule; declares <name> if needed
//
//   expr    := or
//   or      := xor   { (OR | '|') xor }
//   xor     := and   { (XOR | '^') and }
//   and     := sum   { (AND | '&') sum }
//   sum     := prod  { '+' prod }            mod q
//   prod    := unary { '*' unary }           mod q
//   unary   := (NOT | '!' | '~') unary | primary
//   primary := <int> | <name> | '(' expr ')'
//            | table '(' expr {',' expr} ')' '[' <int>... ']'
//
// Boolean operators require q = 2. A table lists q^r entries, the first
// argument most significant.
//
// Digraph format: `vertices <n>` then `edge <u> <v>` lines.
// Cycle-set format: `bound <N>`, then `level <n>: <labels>`,
// `rot <n>: <images>` (identity when omitted) and `deg <n> <m>: <images>`
// lines; images are labels of the target level, in element order.

#ifndef DDSKIT_INGEST_HPP
#define DDSKIT_INGEST_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ddskit/cycleset.hpp"
#include "ddskit/digraph.hpp"
#include "ddskit/wiring.hpp"

namespace ddskit {

// A parsed letter map; inputs occupy the leading input positions, followed by
// the variables.
struct NetworkSource {
  std::size_t alphabet = 2;
  std::vector<std::string> inputs;
  std::vector<std::string> variables;
  LetterMap map;
};

NetworkSource parse_network_source(std::string_view text);
// Rejects `input` declarations.
ProductFunction parse_network(std::string_view text);

// Each rule is printed as a table over the positions it depends on.
std::string print_network(const ProductFunction& f);
std::string print_letter_map(const LetterMap& map, const std::vector<std::string>& inputs,
                             const std::vector<std::string>& variables);

Digraph parse_digraph(std::string_view text);
std::string print_digraph(const Digraph& g);

// Parses without checking relations.
TruncatedCycleSet parse_cycleset_raw(std::string_view text);
// Parses and validates; relation failures throw RelationError.
AbstractCycleSet parse_cycleset(std::string_view text);
std::string print_cycleset(const TruncatedCycleSet& k);

// True when the first statement is `vertices`.
bool looks_like_digraph(std::string_view text);

// `digraph {` with nodes n<id> in ascending order, then edges in sorted order.
std::string to_dot(const Digraph& g, const std::vector<std::string>& labels = {});

struct OrbitEntry {
  std::size_t length = 0;
  std::vector<std::string> representative;  // state or vertex labels
};

struct AttractorReport {
  std::string input_kind;  // "network" or "digraph"
  std::size_t states = 0;
  std::size_t alphabet = 0;             // networks only
  std::vector<std::string> variables;  // networks only
  std::size_t max_length = 0;
  std::vector<OrbitEntry> orbits;  // by (length, representative)
  std::map<std::size_t, std::uint64_t> nondeg_counts;  // nonzero entries
  std::vector<Edge> wiring;        // networks only, 0-based
  std::vector<Cut> nontrivial_cuts;  // networks only
  bool verified = false;           // orbit list re-counted against the recursion
};

// Default max_length is the state count.
AttractorReport attractor_report(const ProductFunction& f,
                                 std::optional<std::size_t> max_length = std::nullopt);
AttractorReport attractor_report(const Digraph& g,
                                 std::optional<std::size_t> max_length = std::nullopt,
                                 const AttractorOptions& options = {});

std::string report_json(const AttractorReport& r);

// One line per cut: `X={..} Y={..}` and a trivial/nontrivial flag.
std::string cuts_text(const ProductFunction& f, bool include_trivial);

// Parses a comma separated list of variable names or 1-based indices.
Cut parse_cut(const ProductFunction& f, std::string_view spec);

// σ, I and the verdict as comments, then g and h in network format.
std::string decomposition_text(const ProductFunction& f, const Cut& cut);

// The decomposition theorem check at the given levels. Product states are
// labelled in the original coordinate order.
std::string decomposition_json(const ProductFunction& f, const Cut& cut,
                               const std::vector<std::size_t>& levels);

struct CycleSetVerdict {
  std::optional<RelationViolation> relations;
  std::optional<PropertyViolation> property_a;
  std::optional<PropertyViolation> property_b;
  // Elements with more than one non-degenerate ancestor: (n, x, witnesses).
  struct Ambiguity {
    std::size_t n = 0;
    Index x = 0;
    std::vector<AncestorWitness> witnesses;
  };
  std::vector<Ambiguity> ambiguities;
  std::optional<CycleSetPresentation> presentation;  // under A and B
  std::string text;
};

CycleSetVerdict check_cycleset(const TruncatedCycleSet& raw);

}  // namespace ddskit

#endif  // DDSKIT_INGEST_HPP
