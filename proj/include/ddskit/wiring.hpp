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

// Product functions A^k -> A^k, their wiring diagrams, cuts and the
// extraction of semi-direct decompositions.
//
// Coordinates are 0-based here. A state of A^k is encoded in mixed radix with
// coordinate 0 most significant; the default letter is 0.

#ifndef DDSKIT_WIRING_HPP
#define DDSKIT_WIRING_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "ddskit/core.hpp"
#include "ddskit/digraph.hpp"
#include "ddskit/error.hpp"
#include "ddskit/semidirect.hpp"

namespace ddskit {

using Letter = std::size_t;

// q^k, throwing limit_exceeded past 2^26.
std::size_t state_count(std::size_t alphabet, std::size_t arity);
std::vector<Letter> decode_state(std::size_t state, std::size_t alphabet, std::size_t arity);
std::size_t encode_state(const std::vector<Letter>& digits, std::size_t alphabet);

// A map A^input_arity -> A^tables.size(), one table per output coordinate.
// input_arity 0 is allowed (a single input).
struct LetterMap {
  std::size_t alphabet = 2;
  std::size_t input_arity = 0;
  std::vector<std::vector<Letter>> tables;

  std::size_t output_arity() const noexcept { return tables.size(); }
  std::size_t input_count() const { return state_count(alphabet, input_arity); }
  // Throws invalid_argument on a mis-sized table or an out-of-range letter.
  void validate() const;
  // Output state (mixed radix) for an input state.
  std::size_t apply(std::size_t input) const;

  bool operator==(const LetterMap&) const = default;
};

// An endomorphism of A^k with named coordinates.
struct ProductFunction {
  LetterMap map;                   // input_arity == output_arity == k
  std::vector<std::string> names;  // one per coordinate

  static ProductFunction from_tables(std::size_t alphabet, std::vector<std::string> names,
                                     std::vector<std::vector<Letter>> tables);

  std::size_t alphabet() const noexcept { return map.alphabet; }
  std::size_t arity() const noexcept { return map.tables.size(); }
  const std::vector<Letter>& table(std::size_t j) const { return map.tables.at(j); }

  // The system on A^k. States are labelled by their digits, concatenated when
  // q <= 10 and comma separated otherwise.
  FiniteDds to_dds() const;

  bool operator==(const ProductFunction&) const = default;
};

std::string state_label(std::size_t state, std::size_t alphabet, std::size_t arity);

// Some pair of inputs differing only at position i changes output j.
bool depends_on(const ProductFunction& f, std::size_t j, std::size_t i);
bool table_depends_on(const std::vector<Letter>& table, std::size_t alphabet,
                      std::size_t arity, std::size_t i);

class LiftError : public Error {
 public:
  LiftError(std::size_t a, std::size_t b, const std::string& message)
      : Error(ErrorKind::invalid_argument, message), a_(a), b_(b) {}
  // Input states differing only inside the lifted positions, with different
  // outputs.
  std::size_t first() const noexcept { return a_; }
  std::size_t second() const noexcept { return b_; }

 private:
  std::size_t a_;
  std::size_t b_;
};

// The factorization of `table` (arity `arity`) through the projection
// dropping the positions in `dropped`, obtained by substituting the default
// letter. Throws LiftError when the table depends on a dropped position.
std::vector<Letter> independent_lift(const std::vector<Letter>& table, std::size_t alphabet,
                                     std::size_t arity, const std::vector<std::size_t>& dropped);

// Edge i -> j iff coordinate j depends on input i.
Digraph wiring_diagram(const ProductFunction& f);

// Vertices {0, 1}, edges 0 -> 0, 0 -> 1, 1 -> 1.
Digraph dedge();

struct Cut {
  std::vector<std::size_t> x;  // sorted, predecessor closed
  std::vector<std::size_t> y;  // sorted complement

  bool trivial() const noexcept { return x.empty() || y.empty(); }
  bool operator==(const Cut&) const = default;
};

Cut make_cut(std::size_t arity, std::vector<std::size_t> x);

// No edge from y into x; equivalently the colouring is a graph map to dedge().
bool is_valid_cut(const Digraph& w, const Cut& cut);

// Every valid cut, trivial ones included, ordered by |x| and then
// lexicographically. Enumerates downward closed sets of the condensation.
std::vector<Cut> enumerate_cuts(const Digraph& w, std::size_t max_cuts = 1'000'000);

// Strongly connected components in topological order (every edge between
// components goes from an earlier one to a later one), each sorted.
std::vector<std::vector<Vertex>> strongly_connected_components(const Digraph& w);

struct ExtractedDecomposition {
  std::vector<std::size_t> sigma;  // involution; new coordinate p is old sigma[p]
  std::size_t m = 0;               // |x|
  std::vector<std::size_t> inputs;  // I ⊆ {0..m-1}, sorted
  ProductFunction permuted;        // σ·f
  ProductFunction g;               // on A^m
  LetterMap h;                     // A^|I| × A^(k-m) -> A^(k-m)
};

// Throws invalid_argument for a cut that is not valid for wiring_diagram(f);
// a failed table check throws internal_error.
ExtractedDecomposition extract(const ProductFunction& f, const Cut& cut);

// E = A^|I| and Y = A^(k-m); semidirect() of this spec reproduces σ·f.
SemiDirectSpec to_semidirect_spec(const ExtractedDecomposition& d);

// No coordinate in x depends on an input in y.
bool verify_semidirect_projection(const ProductFunction& f, const Cut& cut);

// Assembles a product function from g (on A^m), the indices I ⊆ {0..m-1} and
// h: A^|I| × A^n -> A^n, so that coordinates 0..m-1 follow g.
ProductFunction assemble_semidirect(const ProductFunction& g, const std::vector<std::size_t>& inputs,
                                    const LetterMap& h, std::vector<std::string> fiber_names);

}  // namespace ddskit

#endif  // DDSKIT_WIRING_HPP
