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

#include "ddskit/ddskit.h"

#include <new>
#include <string>
#include <string_view>
#include <utility>

#include "ddskit/attractor.hpp"
#include "ddskit/cycleset.hpp"
#include "ddskit/error.hpp"
#include "ddskit/ingest.hpp"
#include "ddskit/wiring.hpp"

struct ddk_string {
  std::string value;
};

struct ddk_network {
  ddskit::ProductFunction f;
};

struct ddk_digraph {
  ddskit::Digraph g;
};

struct ddk_cycleset {
  ddskit::TruncatedCycleSet raw;
};

namespace {

thread_local std::string g_last_error;

ddk_status fail(ddk_status status, const char* message) {
  g_last_error = message;
  return status;
}

template <typename Fn>
ddk_status guarded(Fn&& fn) {
  try {
    fn();
    return DDK_OK;
  } catch (const ddskit::Error& e) {
    switch (e.kind()) {
      case ddskit::ErrorKind::invalid_argument: return fail(DDK_INVALID_ARGUMENT, e.what());
      case ddskit::ErrorKind::parse: return fail(DDK_PARSE_ERROR, e.what());
      case ddskit::ErrorKind::limit_exceeded: return fail(DDK_LIMIT_EXCEEDED, e.what());
      case ddskit::ErrorKind::internal: return fail(DDK_INTERNAL_ERROR, e.what());
    }
    return fail(DDK_INTERNAL_ERROR, e.what());
  } catch (const std::bad_alloc&) {
    return fail(DDK_OUT_OF_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(DDK_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(DDK_INTERNAL_ERROR, "unknown exception");
  }
}

// The null checks run before any work so that failed calls never touch the
// out-parameters.
#define DDK_REQUIRE(cond)                                                   \
  do {                                                                      \
    if (!(cond)) return fail(DDK_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

ddk_status emit(std::string value, ddk_string** out) {
  *out = new ddk_string{std::move(value)};
  return DDK_OK;
}

std::string_view view(const char* text, std::size_t size) { return {text, size}; }

}  // namespace

extern "C" {

const char* ddk_version(void) { return "0.1.0"; }

const char* ddk_status_name(ddk_status status) {
  switch (status) {
    case DDK_OK: return "ok";
    case DDK_INVALID_ARGUMENT: return "invalid argument";
    case DDK_PARSE_ERROR: return "parse error";
    case DDK_LIMIT_EXCEEDED: return "limit exceeded";
    case DDK_INTERNAL_ERROR: return "internal error";
    case DDK_OUT_OF_MEMORY: return "out of memory";
  }
  return "unknown status";
}

const char* ddk_last_error_message(void) { return g_last_error.c_str(); }

const char* ddk_string_data(const ddk_string* s) { return s ? s->value.c_str() : ""; }
size_t ddk_string_size(const ddk_string* s) { return s ? s->value.size() : 0; }
void ddk_string_free(ddk_string* s) { delete s; }

ddk_status ddk_text_is_digraph(const char* text, size_t size, int* out) {
  DDK_REQUIRE(text || size == 0);
  DDK_REQUIRE(out);
  return guarded([&] { *out = ddskit::looks_like_digraph(view(text, size)) ? 1 : 0; });
}

// ---- Networks -------------------------------------------------------------

ddk_status ddk_network_parse(const char* text, size_t size, ddk_network** out) {
  DDK_REQUIRE(text || size == 0);
  DDK_REQUIRE(out);
  return guarded([&] { *out = new ddk_network{ddskit::parse_network(view(text, size))}; });
}

void ddk_network_free(ddk_network* net) { delete net; }

ddk_status ddk_network_arity(const ddk_network* net, size_t* out) {
  DDK_REQUIRE(net && out);
  *out = net->f.arity();
  return DDK_OK;
}

ddk_status ddk_network_alphabet(const ddk_network* net, size_t* out) {
  DDK_REQUIRE(net && out);
  *out = net->f.alphabet();
  return DDK_OK;
}

ddk_status ddk_network_state_count(const ddk_network* net, size_t* out) {
  DDK_REQUIRE(net && out);
  return guarded([&] { *out = net->f.map.input_count(); });
}

ddk_status ddk_network_apply(const ddk_network* net, size_t state, size_t* out) {
  DDK_REQUIRE(net && out);
  return guarded([&] {
    if (state >= net->f.map.input_count()) throw ddskit::invalid_argument("state out of range");
    *out = net->f.map.apply(state);
  });
}

ddk_status ddk_network_print(const ddk_network* net, ddk_string** out) {
  DDK_REQUIRE(net && out);
  return guarded([&] { emit(ddskit::print_network(net->f), out); });
}

ddk_status ddk_network_state_space(const ddk_network* net, ddk_digraph** out) {
  DDK_REQUIRE(net && out);
  return guarded([&] { *out = new ddk_digraph{ddskit::state_space(net->f.to_dds())}; });
}

ddk_status ddk_network_state_space_dot(const ddk_network* net, ddk_string** out) {
  DDK_REQUIRE(net && out);
  return guarded([&] {
    const ddskit::FiniteDds d = net->f.to_dds();
    emit(ddskit::to_dot(ddskit::state_space(d), {d.labels().begin(), d.labels().end()}), out);
  });
}

ddk_status ddk_network_attractors_json(const ddk_network* net, size_t max_length,
                                       ddk_string** out) {
  DDK_REQUIRE(net && out);
  return guarded([&] {
    std::optional<std::size_t> n;
    if (max_length) n = max_length;
    emit(ddskit::report_json(ddskit::attractor_report(net->f, n)), out);
  });
}

ddk_status ddk_network_wiring_dot(const ddk_network* net, ddk_string** out) {
  DDK_REQUIRE(net && out);
  return guarded([&] { emit(ddskit::to_dot(ddskit::wiring_diagram(net->f), net->f.names), out); });
}

ddk_status ddk_network_cuts(const ddk_network* net, int include_trivial, ddk_string** out) {
  DDK_REQUIRE(net && out);
  return guarded([&] { emit(ddskit::cuts_text(net->f, include_trivial != 0), out); });
}

ddk_status ddk_network_cut_is_valid(const ddk_network* net, const char* cut, int* valid) {
  DDK_REQUIRE(net && cut && valid);
  return guarded([&] {
    const ddskit::Cut c = ddskit::parse_cut(net->f, cut);
    *valid = ddskit::is_valid_cut(ddskit::wiring_diagram(net->f), c) ? 1 : 0;
  });
}

ddk_status ddk_network_decompose(const ddk_network* net, const char* cut, ddk_string** out) {
  DDK_REQUIRE(net && cut && out);
  return guarded([&] {
    emit(ddskit::decomposition_text(net->f, ddskit::parse_cut(net->f, cut)), out);
  });
}

ddk_status ddk_network_verify_theorem_json(const ddk_network* net, const char* cut,
                                           const size_t* levels, size_t level_count,
                                           ddk_string** out) {
  DDK_REQUIRE(net && cut && out);
  DDK_REQUIRE(levels || level_count == 0);
  return guarded([&] {
    std::vector<std::size_t> lv(levels, levels + level_count);
    emit(ddskit::decomposition_json(net->f, ddskit::parse_cut(net->f, cut), lv), out);
  });
}

// ---- Digraphs -------------------------------------------------------------

ddk_status ddk_digraph_parse(const char* text, size_t size, ddk_digraph** out) {
  DDK_REQUIRE(text || size == 0);
  DDK_REQUIRE(out);
  return guarded([&] { *out = new ddk_digraph{ddskit::parse_digraph(view(text, size))}; });
}

void ddk_digraph_free(ddk_digraph* g) { delete g; }

ddk_status ddk_digraph_vertex_count(const ddk_digraph* g, size_t* out) {
  DDK_REQUIRE(g && out);
  *out = g->g.vertex_count();
  return DDK_OK;
}

ddk_status ddk_digraph_edge_count(const ddk_digraph* g, size_t* out) {
  DDK_REQUIRE(g && out);
  *out = g->g.edge_count();
  return DDK_OK;
}

ddk_status ddk_digraph_print(const ddk_digraph* g, ddk_string** out) {
  DDK_REQUIRE(g && out);
  return guarded([&] { emit(ddskit::print_digraph(g->g), out); });
}

ddk_status ddk_digraph_dot(const ddk_digraph* g, ddk_string** out) {
  DDK_REQUIRE(g && out);
  return guarded([&] { emit(ddskit::to_dot(g->g), out); });
}

ddk_status ddk_digraph_closed_walk_count(const ddk_digraph* g, size_t n, uint64_t* out) {
  DDK_REQUIRE(g && out);
  return guarded([&] { *out = ddskit::closed_walk_count(g->g, n); });
}

ddk_status ddk_digraph_orbit_count(const ddk_digraph* g, size_t n, uint64_t* out) {
  DDK_REQUIRE(g && out);
  return guarded([&] { *out = ddskit::orbit_count(g->g, n); });
}

ddk_status ddk_digraph_nondeg_orbit_count(const ddk_digraph* g, size_t n, uint64_t* out) {
  DDK_REQUIRE(g && out);
  return guarded([&] {
    if (n == 0) throw ddskit::invalid_argument("cycle length must be >= 1");
    *out = ddskit::nondeg_orbit_counts(g->g, n).at(n);
  });
}

ddk_status ddk_digraph_attractors_json(const ddk_digraph* g, size_t max_length,
                                       ddk_string** out) {
  DDK_REQUIRE(g && out);
  return guarded([&] {
    std::optional<std::size_t> n;
    if (max_length) n = max_length;
    emit(ddskit::report_json(ddskit::attractor_report(g->g, n)), out);
  });
}

// ---- Cycle sets -----------------------------------------------------------

ddk_status ddk_cycleset_parse(const char* text, size_t size, ddk_cycleset** out) {
  DDK_REQUIRE(text || size == 0);
  DDK_REQUIRE(out);
  return guarded([&] { *out = new ddk_cycleset{ddskit::parse_cycleset_raw(view(text, size))}; });
}

ddk_status ddk_cycleset_builtin(const char* name, size_t bound, ddk_cycleset** out) {
  DDK_REQUIRE(name && out);
  return guarded([&] { *out = new ddk_cycleset{ddskit::builtin_example(name, bound).cycles()}; });
}

ddk_status ddk_cycleset_attractors(const ddk_digraph* g, size_t bound, ddk_cycleset** out) {
  DDK_REQUIRE(g && out);
  return guarded([&] { *out = new ddk_cycleset{ddskit::attractor_truncated(g->g, bound).cycles}; });
}

void ddk_cycleset_free(ddk_cycleset* cs) { delete cs; }

ddk_status ddk_cycleset_bound(const ddk_cycleset* cs, size_t* out) {
  DDK_REQUIRE(cs && out);
  *out = cs->raw.bound();
  return DDK_OK;
}

ddk_status ddk_cycleset_level_size(const ddk_cycleset* cs, size_t n, size_t* out) {
  DDK_REQUIRE(cs && out);
  return guarded([&] { *out = cs->raw.size(n); });
}

ddk_status ddk_cycleset_print(const ddk_cycleset* cs, ddk_string** out) {
  DDK_REQUIRE(cs && out);
  return guarded([&] { emit(ddskit::print_cycleset(cs->raw), out); });
}

ddk_status ddk_cycleset_check(const ddk_cycleset* cs, ddk_string** text, int* relations_ok,
                              int* property_a, int* property_b) {
  DDK_REQUIRE(cs);
  return guarded([&] {
    const ddskit::CycleSetVerdict v = ddskit::check_cycleset(cs->raw);
    const bool rel = !v.relations.has_value();
    if (relations_ok) *relations_ok = rel ? 1 : 0;
    if (property_a) *property_a = rel ? (v.property_a ? 0 : 1) : -1;
    if (property_b) *property_b = rel ? (v.property_b ? 0 : 1) : -1;
    if (text) emit(v.text, text);
  });
}

ddk_status ddk_cycleset_realize(const ddk_cycleset* cs, ddk_digraph** out) {
  DDK_REQUIRE(cs && out);
  return guarded([&] {
    *out = new ddk_digraph{ddskit::realize_truncated(ddskit::validate(cs->raw)).graph};
  });
}

ddk_status ddk_cycleset_realize_dot(const ddk_cycleset* cs, ddk_string** out) {
  DDK_REQUIRE(cs && out);
  return guarded([&] {
    emit(ddskit::to_dot(ddskit::realize_truncated(ddskit::validate(cs->raw)).graph), out);
  });
}

}  // extern "C"
