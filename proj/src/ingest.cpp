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

#include "ddskit/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <memory>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ddskit/error.hpp"

namespace ddskit {

namespace {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Line and word splitting

struct Line {
  std::size_t number = 0;
  std::string text;  // comment stripped
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    out.push_back({number, std::move(line)});
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

bool blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

struct Word {
  std::string text;
  std::size_t column = 0;  // 1-based
};

std::vector<Word> split_words(const std::string& s, std::size_t offset = 0) {
  std::vector<Word> out;
  std::size_t i = offset;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i >= s.size()) break;
    const std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    out.push_back({s.substr(start, i - start), start + 1});
  }
  return out;
}

std::optional<std::size_t> to_number(std::string_view s) {
  std::size_t value = 0;
  if (s.empty()) return std::nullopt;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

std::size_t number_word(const Line& line, const Word& w, const char* what) {
  auto v = to_number(w.text);
  if (!v) throw ParseError(line.number, w.column, std::string("expected ") + what);
  return *v;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
    return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

bool is_reserved(std::string_view s) {
  return s == "AND" || s == "OR" || s == "XOR" || s == "NOT" || s == "table";
}

// ---------------------------------------------------------------------------
// Expression lexer and parser

struct Token {
  enum Kind { ident, number, symbol, end } kind = end;
  std::string text;
  std::size_t column = 0;
};

std::vector<Token> lex(const Line& line, std::size_t from) {
  std::vector<Token> out;
  const std::string& s = line.text;
  std::size_t i = from;
  while (true) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i >= s.size()) break;
    const std::size_t start = i;
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isalpha(c) || c == '_') {
      while (i < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
        ++i;
      out.push_back({Token::ident, s.substr(start, i - start), start + 1});
    } else if (std::isdigit(c)) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Token::number, s.substr(start, i - start), start + 1});
    } else if (std::string_view("()[],=+*&|^!~").find(static_cast<char>(c)) !=
               std::string_view::npos) {
      ++i;
      out.push_back({Token::symbol, std::string(1, static_cast<char>(c)), start + 1});
    } else {
      throw ParseError(line.number, start + 1,
                       std::string("unexpected character '") + static_cast<char>(c) + "'");
    }
  }
  out.push_back({Token::end, "", s.size() + 1});
  return out;
}

struct Expr {
  enum Kind { constant, variable, op_not, op_and, op_or, op_xor, op_add, op_mul, table } kind =
      constant;
  Letter value = 0;
  std::string name;
  std::size_t line = 0;
  std::size_t column = 0;
  std::size_t slot = 0;  // resolved input position
  std::vector<std::unique_ptr<Expr>> kids;
  std::vector<Letter> entries;
};

class ExprParser {
 public:
  ExprParser(const Line& line, std::vector<Token> tokens, std::size_t alphabet)
      : line_(line), tokens_(std::move(tokens)), q_(alphabet) {}

  std::unique_ptr<Expr> parse_all() {
    auto e = parse_or();
    if (peek().kind != Token::end) fail(peek(), "unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw ParseError(line_.number, t.column, msg);
  }

  bool accept(std::initializer_list<const char*> spellings, Token* taken) {
    const Token& t = peek();
    if (t.kind != Token::symbol && t.kind != Token::ident) return false;
    for (const char* s : spellings) {
      if (t.text == s) {
        *taken = next();
        return true;
      }
    }
    return false;
  }

  void require_boolean(const Token& t) const {
    if (q_ != 2) fail(t, "operator '" + t.text + "' needs alphabet 2");
  }

  std::unique_ptr<Expr> binary(Expr::Kind kind, const Token& t, std::unique_ptr<Expr> a,
                               std::unique_ptr<Expr> b) {
    auto e = std::make_unique<Expr>();
    e->kind = kind;
    e->line = line_.number;
    e->column = t.column;
    e->kids.push_back(std::move(a));
    e->kids.push_back(std::move(b));
    return e;
  }

  std::unique_ptr<Expr> parse_or() {
    auto left = parse_xor();
    Token t;
    while (accept({"OR", "|"}, &t)) {
      require_boolean(t);
      left = binary(Expr::op_or, t, std::move(left), parse_xor());
    }
    return left;
  }

  std::unique_ptr<Expr> parse_xor() {
    auto left = parse_and();
    Token t;
    while (accept({"XOR", "^"}, &t)) {
      require_boolean(t);
      left = binary(Expr::op_xor, t, std::move(left), parse_and());
    }
    return left;
  }

  std::unique_ptr<Expr> parse_and() {
    auto left = parse_sum();
    Token t;
    while (accept({"AND", "&"}, &t)) {
      require_boolean(t);
      left = binary(Expr::op_and, t, std::move(left), parse_sum());
    }
    return left;
  }

  std::unique_ptr<Expr> parse_sum() {
    auto left = parse_prod();
    Token t;
    while (accept({"+"}, &t)) left = binary(Expr::op_add, t, std::move(left), parse_prod());
    return left;
  }

  std::unique_ptr<Expr> parse_prod() {
    auto left = parse_unary();
    Token t;
    while (accept({"*"}, &t)) left = binary(Expr::op_mul, t, std::move(left), parse_unary());
    return left;
  }

  std::unique_ptr<Expr> parse_unary() {
    Token t;
    if (accept({"NOT", "!", "~"}, &t)) {
      require_boolean(t);
      auto e = std::make_unique<Expr>();
      e->kind = Expr::op_not;
      e->line = line_.number;
      e->column = t.column;
      e->kids.push_back(parse_unary());
      return e;
    }
    return parse_primary();
  }

  Letter letter(const Token& t) const {
    auto v = to_number(t.text);
    if (!v || *v >= q_) fail(t, "constant " + t.text + " is not a letter of the alphabet");
    return *v;
  }

  void expect(const char* symbol) {
    if (peek().kind != Token::symbol || peek().text != symbol)
      fail(peek(), std::string("expected '") + symbol + "'");
    next();
  }

  std::unique_ptr<Expr> parse_primary() {
    const Token t = peek();
    auto e = std::make_unique<Expr>();
    e->line = line_.number;
    e->column = t.column;
    if (t.kind == Token::number) {
      next();
      e->kind = Expr::constant;
      e->value = letter(t);
      return e;
    }
    if (t.kind == Token::ident && t.text == "table") {
      next();
      e->kind = Expr::table;
      expect("(");
      e->kids.push_back(parse_or());
      while (peek().kind == Token::symbol && peek().text == ",") {
        next();
        e->kids.push_back(parse_or());
      }
      expect(")");
      const Token open = peek();
      expect("[");
      while (peek().kind == Token::number) e->entries.push_back(letter(next()));
      expect("]");
      const std::size_t want = state_count(q_, e->kids.size());
      if (e->entries.size() != want) {
        fail(open, "table over " + std::to_string(e->kids.size()) + " arguments needs " +
                       std::to_string(want) + " entries, got " +
                       std::to_string(e->entries.size()));
      }
      return e;
    }
    if (t.kind == Token::ident) {
      if (is_reserved(t.text)) fail(t, "unexpected '" + t.text + "'");
      next();
      e->kind = Expr::variable;
      e->name = t.text;
      return e;
    }
    if (t.kind == Token::symbol && t.text == "(") {
      next();
      auto inner = parse_or();
      expect(")");
      return inner;
    }
    fail(t, t.kind == Token::end ? "unexpected end of expression" : "unexpected '" + t.text + "'");
  }

  const Line& line_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t q_;
};

void resolve(Expr& e, const std::map<std::string, std::size_t>& slots) {
  if (e.kind == Expr::variable) {
    auto it = slots.find(e.name);
    if (it == slots.end())
      throw ParseError(e.line, e.column, "undeclared variable '" + e.name + "'");
    e.slot = it->second;
  }
  for (auto& k : e.kids) resolve(*k, slots);
}

Letter eval(const Expr& e, const std::vector<Letter>& digits, std::size_t q) {
  switch (e.kind) {
    case Expr::constant: return e.value;
    case Expr::variable: return digits[e.slot];
    case Expr::op_not: return 1 - eval(*e.kids[0], digits, q);
    case Expr::op_and: return eval(*e.kids[0], digits, q) & eval(*e.kids[1], digits, q);
    case Expr::op_or: return eval(*e.kids[0], digits, q) | eval(*e.kids[1], digits, q);
    case Expr::op_xor: return eval(*e.kids[0], digits, q) ^ eval(*e.kids[1], digits, q);
    case Expr::op_add: return (eval(*e.kids[0], digits, q) + eval(*e.kids[1], digits, q)) % q;
    case Expr::op_mul: return (eval(*e.kids[0], digits, q) * eval(*e.kids[1], digits, q)) % q;
    case Expr::table: {
      std::size_t index = 0;
      for (const auto& k : e.kids) index = index * q + eval(*k, digits, q);
      return e.entries[index];
    }
  }
  return 0;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Networks

NetworkSource parse_network_source(std::string_view text) {
  NetworkSource src;
  struct Rule {
    std::string name;
    std::unique_ptr<Expr> expr;
  };
  std::vector<Rule> rules;
  std::map<std::string, std::size_t> rule_of;
  std::vector<std::string> declared_inputs;
  std::vector<std::string> declared_vars;
  std::set<std::string> names;
  bool seen_statement = false;

  auto declare = [&](const Line& line, const Word& w, std::vector<std::string>& into) {
    if (!is_identifier(w.text) || is_reserved(w.text))
      throw ParseError(line.number, w.column, "invalid variable name '" + w.text + "'");
    if (!names.insert(w.text).second)
      throw ParseError(line.number, w.column, "variable '" + w.text + "' declared twice");
    into.push_back(w.text);
  };

  for (const Line& line : split_lines(text)) {
    if (blank(line.text)) continue;
    const auto words = split_words(line.text);
    const std::string& head = words.front().text;
    if (head == "alphabet") {
      if (seen_statement)
        throw ParseError(line.number, words.front().column, "alphabet must come first");
      if (words.size() != 2)
        throw ParseError(line.number, words.front().column, "expected 'alphabet <q>'");
      src.alphabet = number_word(line, words[1], "an alphabet size");
      if (src.alphabet < 2)
        throw ParseError(line.number, words[1].column, "alphabet size must be at least 2");
      seen_statement = true;
      continue;
    }
    seen_statement = true;
    if (head == "var" || head == "input") {
      if (words.size() < 2)
        throw ParseError(line.number, words.front().column, "expected a variable name");
      for (std::size_t i = 1; i < words.size(); ++i)
        declare(line, words[i], head == "var" ? declared_vars : declared_inputs);
      continue;
    }
    const auto tokens = lex(line, 0);
    if (tokens.size() < 5 || tokens[0].text != "f" || tokens[1].text != "(" ||
        tokens[2].kind != Token::ident || tokens[3].text != ")" || tokens[4].text != "=") {
      throw ParseError(line.number, words.front().column,
                       "expected 'alphabet', 'var', 'input' or 'f(<name>) = <expr>'");
    }
    const std::string name = tokens[2].text;
    if (is_reserved(name))
      throw ParseError(line.number, tokens[2].column, "invalid variable name '" + name + "'");
    if (rule_of.count(name))
      throw ParseError(line.number, tokens[2].column, "second rule for '" + name + "'");
    if (std::find(declared_inputs.begin(), declared_inputs.end(), name) != declared_inputs.end())
      throw ParseError(line.number, tokens[2].column, "input '" + name + "' cannot have a rule");
    if (!names.count(name)) declare(line, Word{name, tokens[2].column}, declared_vars);
    ExprParser parser(line, std::vector<Token>(tokens.begin() + 5, tokens.end()), src.alphabet);
    auto expr = parser.parse_all();
    rule_of[name] = rules.size();
    rules.push_back({name, std::move(expr)});
  }

  src.inputs = declared_inputs;
  src.variables = declared_vars;
  if (src.variables.empty()) throw ParseError(1, 1, "network declares no variables");
  std::map<std::string, std::size_t> slots;
  for (const auto& n : src.inputs) slots.emplace(n, slots.size());
  for (const auto& n : src.variables) slots.emplace(n, slots.size());
  for (auto& r : rules) resolve(*r.expr, slots);
  for (const auto& v : src.variables) {
    if (!rule_of.count(v)) throw ParseError(1, 1, "variable '" + v + "' has no update rule");
  }

  src.map.alphabet = src.alphabet;
  src.map.input_arity = slots.size();
  const std::size_t states = state_count(src.alphabet, slots.size());
  for (const auto& v : src.variables) {
    const Expr& e = *rules[rule_of.at(v)].expr;
    std::vector<Letter> table(states);
    for (std::size_t s = 0; s < states; ++s)
      table[s] = eval(e, decode_state(s, src.alphabet, slots.size()), src.alphabet);
    src.map.tables.push_back(std::move(table));
  }
  return src;
}

ProductFunction parse_network(std::string_view text) {
  NetworkSource src = parse_network_source(text);
  if (!src.inputs.empty())
    throw invalid_argument("a network cannot declare inputs ('" + src.inputs.front() + "')");
  return ProductFunction::from_tables(src.alphabet, src.variables, std::move(src.map.tables));
}

std::string print_letter_map(const LetterMap& map, const std::vector<std::string>& inputs,
                             const std::vector<std::string>& variables) {
  std::vector<std::string> all = inputs;
  all.insert(all.end(), variables.begin(), variables.end());
  if (all.size() != map.input_arity || variables.size() != map.output_arity())
    throw invalid_argument("names do not match the letter map");
  std::ostringstream out;
  out << "alphabet " << map.alphabet << "\n";
  if (!inputs.empty()) out << "input " << join(inputs, " ") << "\n";
  if (!variables.empty()) out << "var " << join(variables, " ") << "\n";
  for (std::size_t j = 0; j < variables.size(); ++j) {
    const auto& table = map.tables[j];
    std::vector<std::size_t> used, unused;
    for (std::size_t i = 0; i < map.input_arity; ++i) {
      if (table_depends_on(table, map.alphabet, map.input_arity, i)) used.push_back(i);
      else unused.push_back(i);
    }
    const auto lifted = independent_lift(table, map.alphabet, map.input_arity, unused);
    out << "f(" << variables[j] << ") = ";
    if (used.empty()) {
      out << lifted.front() << "\n";
      continue;
    }
    std::vector<std::string> args;
    for (std::size_t i : used) args.push_back(all[i]);
    out << "table(" << join(args, ", ") << ")[";
    for (std::size_t s = 0; s < lifted.size(); ++s) out << (s ? " " : "") << lifted[s];
    out << "]\n";
  }
  return out.str();
}

std::string print_network(const ProductFunction& f) {
  return print_letter_map(f.map, {}, f.names);
}

// ---------------------------------------------------------------------------
// Digraphs

bool looks_like_digraph(std::string_view text) {
  for (const Line& line : split_lines(text)) {
    if (blank(line.text)) continue;
    return split_words(line.text).front().text == "vertices";
  }
  return false;
}

Digraph parse_digraph(std::string_view text) {
  std::optional<std::size_t> count;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (const Line& line : split_lines(text)) {
    if (blank(line.text)) continue;
    const auto w = split_words(line.text);
    if (w[0].text == "vertices") {
      if (count) throw ParseError(line.number, w[0].column, "vertex count given twice");
      if (w.size() != 2) throw ParseError(line.number, w[0].column, "expected 'vertices <n>'");
      count = number_word(line, w[1], "a vertex count");
    } else if (w[0].text == "edge") {
      if (!count) throw ParseError(line.number, w[0].column, "'vertices' must come first");
      if (w.size() != 3) throw ParseError(line.number, w[0].column, "expected 'edge <u> <v>'");
      const std::size_t u = number_word(line, w[1], "a vertex id");
      const std::size_t v = number_word(line, w[2], "a vertex id");
      if (u >= *count) throw ParseError(line.number, w[1].column, "vertex out of range");
      if (v >= *count) throw ParseError(line.number, w[2].column, "vertex out of range");
      if (!seen.insert({u, v}).second)
        throw ParseError(line.number, w[0].column,
                         "duplicate edge " + std::to_string(u) + " -> " + std::to_string(v));
      edges.emplace_back(u, v);
    } else {
      throw ParseError(line.number, w[0].column, "expected 'vertices' or 'edge'");
    }
  }
  if (!count) throw ParseError(1, 1, "missing 'vertices <n>'");
  return Digraph(*count, std::move(edges));
}

std::string print_digraph(const Digraph& g) {
  std::ostringstream out;
  out << "vertices " << g.vertex_count() << "\n";
  for (const auto& [u, v] : g.edges()) out << "edge " << u << " " << v << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Cycle sets

TruncatedCycleSet parse_cycleset_raw(std::string_view text) {
  struct Statement {
    Line line;
    std::vector<Word> head;  // words before the colon
    std::vector<Word> body;  // words after the colon
  };
  std::optional<std::size_t> bound;
  std::vector<Statement> statements;
  for (const Line& line : split_lines(text)) {
    if (blank(line.text)) continue;
    const auto colon = line.text.find(':');
    Statement st{line, {}, {}};
    if (colon == std::string::npos) {
      st.head = split_words(line.text);
    } else {
      st.head = split_words(line.text.substr(0, colon));
      st.body = split_words(line.text, colon + 1);
    }
    if (st.head.empty()) throw ParseError(line.number, 1, "expected a statement");
    if (st.head[0].text == "bound") {
      if (bound) throw ParseError(line.number, st.head[0].column, "bound given twice");
      if (!statements.empty())
        throw ParseError(line.number, st.head[0].column, "bound must come first");
      if (st.head.size() != 2 || colon != std::string::npos)
        throw ParseError(line.number, st.head[0].column, "expected 'bound <N>'");
      bound = number_word(line, st.head[1], "a bound");
      if (*bound == 0) throw ParseError(line.number, st.head[1].column, "bound must be >= 1");
      continue;
    }
    if (!bound) throw ParseError(line.number, st.head[0].column, "'bound <N>' must come first");
    if (colon == std::string::npos)
      throw ParseError(line.number, line.text.size() + 1, "expected ':'");
    statements.push_back(std::move(st));
  }
  if (!bound) throw ParseError(1, 1, "missing 'bound <N>'");

  TruncatedCycleSet k(*bound);
  auto level_arg = [&](const Statement& st, std::size_t i) {
    if (i >= st.head.size())
      throw ParseError(st.line.number, st.head.back().column, "missing level number");
    const std::size_t n = number_word(st.line, st.head[i], "a level number");
    if (n == 0 || n > *bound)
      throw ParseError(st.line.number, st.head[i].column, "level outside 1..bound");
    return n;
  };

  std::vector<bool> defined(*bound + 1, false);
  for (const auto& st : statements) {
    if (st.head[0].text != "level") continue;
    if (st.head.size() != 2)
      throw ParseError(st.line.number, st.head[0].column, "expected 'level <n>:'");
    const std::size_t n = level_arg(st, 1);
    if (defined[n]) throw ParseError(st.line.number, st.head[1].column, "level defined twice");
    defined[n] = true;
    std::vector<std::string> labels;
    std::set<std::string> unique;
    for (const auto& w : st.body) {
      if (!unique.insert(w.text).second)
        throw ParseError(st.line.number, w.column, "duplicate label '" + w.text + "'");
      labels.push_back(w.text);
    }
    k.set_level(n, std::move(labels));
  }

  auto images = [&](const Statement& st, std::size_t source, std::size_t target) {
    if (st.body.size() != k.size(source)) {
      throw ParseError(st.line.number, st.head[0].column,
                       "expected " + std::to_string(k.size(source)) + " images, got " +
                           std::to_string(st.body.size()));
    }
    std::vector<Index> out;
    for (const auto& w : st.body) {
      auto idx = k.find(target, w.text);
      if (!idx) {
        throw ParseError(st.line.number, w.column,
                         "unknown label '" + w.text + "' at level " + std::to_string(target));
      }
      out.push_back(*idx);
    }
    return out;
  };

  std::vector<bool> rot_seen(*bound + 1, false);
  std::set<std::pair<std::size_t, std::size_t>> deg_seen;
  for (const auto& st : statements) {
    const std::string& head = st.head[0].text;
    if (head == "level") continue;
    if (head == "rot") {
      if (st.head.size() != 2)
        throw ParseError(st.line.number, st.head[0].column, "expected 'rot <n>:'");
      const std::size_t n = level_arg(st, 1);
      if (rot_seen[n]) throw ParseError(st.line.number, st.head[1].column, "rot given twice");
      rot_seen[n] = true;
      k.set_rot(n, images(st, n, n));
    } else if (head == "deg") {
      if (st.head.size() != 3)
        throw ParseError(st.line.number, st.head[0].column, "expected 'deg <n> <m>:'");
      const std::size_t n = level_arg(st, 1);
      const std::size_t m = level_arg(st, 2);
      if (m % n != 0 || m == n) {
        throw ParseError(st.line.number, st.head[2].column,
                         "degeneracies go to proper multiples of the source level");
      }
      if (!deg_seen.insert({n, m}).second)
        throw ParseError(st.line.number, st.head[0].column, "deg given twice");
      k.set_deg(n, m, images(st, n, m));
    } else {
      throw ParseError(st.line.number, st.head[0].column,
                       "expected 'bound', 'level', 'rot' or 'deg'");
    }
  }
  return k;
}

AbstractCycleSet parse_cycleset(std::string_view text) {
  return validate(parse_cycleset_raw(text), Provenance::explicit_data);
}

std::string print_cycleset(const TruncatedCycleSet& k) {
  std::ostringstream out;
  out << "bound " << k.bound() << "\n";
  for (std::size_t n = 1; n <= k.bound(); ++n) {
    out << "level " << n << ":";
    for (const auto& l : k.labels(n)) out << " " << l;
    out << "\n";
    const auto& rot = k.rot_table(n);
    bool identity = true;
    for (Index x = 0; x < rot.size(); ++x) identity = identity && rot[x] == x;
    if (!identity) {
      out << "rot " << n << ":";
      for (Index y : rot) out << " " << k.label(n, y);
      out << "\n";
    }
    for (std::size_t m = 2 * n; m <= k.bound(); m += n) {
      if (!k.has_deg_table(n, m)) continue;
      out << "deg " << n << " " << m << ":";
      for (Index y : k.deg_table(n, m)) out << " " << k.label(m, y);
      out << "\n";
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// DOT

std::string to_dot(const Digraph& g, const std::vector<std::string>& labels) {
  if (!labels.empty() && labels.size() != g.vertex_count())
    throw invalid_argument("one label per vertex required");
  std::ostringstream out;
  out << "digraph {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << "  n" << v << " [label=\""
        << dot_escape(labels.empty() ? std::to_string(v) : labels[v]) << "\"];\n";
  }
  for (const auto& [u, v] : g.edges()) out << "  n" << u << " -> n" << v << ";\n";
  out << "}\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Reports

namespace {

void finish_report(AttractorReport& r) {
  std::map<std::size_t, std::uint64_t> listed;
  for (const auto& o : r.orbits) ++listed[o.length];
  r.verified = listed == r.nondeg_counts;
}

std::map<std::size_t, std::uint64_t> nonzero(const std::map<std::size_t, std::uint64_t>& m) {
  std::map<std::size_t, std::uint64_t> out;
  for (auto [k, v] : m)
    if (v) out.emplace(k, v);
  return out;
}

}  // namespace

AttractorReport attractor_report(const ProductFunction& f, std::optional<std::size_t> max_length) {
  const FiniteDds d = f.to_dds();
  AttractorReport r;
  r.input_kind = "network";
  r.states = d.size();
  r.alphabet = f.alphabet();
  r.variables = f.names;
  r.max_length = max_length.value_or(d.size());
  if (r.max_length == 0) throw invalid_argument("max length must be >= 1");
  for (const auto& gen : attractor_presentation(d).generators) {
    if (gen.length > r.max_length) continue;
    OrbitEntry e{gen.length, {}};
    for (Vertex v : gen.vertices) e.representative.push_back(d.display(v));
    r.orbits.push_back(std::move(e));
  }
  r.nondeg_counts = nonzero(nondeg_orbit_counts(state_space(d), r.max_length));
  const Digraph w = wiring_diagram(f);
  r.wiring.assign(w.edges().begin(), w.edges().end());
  for (auto& cut : enumerate_cuts(w))
    if (!cut.trivial()) r.nontrivial_cuts.push_back(std::move(cut));
  finish_report(r);
  return r;
}

AttractorReport attractor_report(const Digraph& g, std::optional<std::size_t> max_length,
                                 const AttractorOptions& options) {
  AttractorReport r;
  r.input_kind = "digraph";
  r.states = g.vertex_count();
  r.max_length = max_length.value_or(std::max<std::size_t>(g.vertex_count(), 1));
  if (r.max_length == 0) throw invalid_argument("max length must be >= 1");
  const AttractorSet a = attractor_truncated(g, r.max_length, options);
  const AbstractCycleSet k = from_attractors(a);
  for (const auto& gen : presentation(k).generators) {
    OrbitEntry e{gen.length, {}};
    const auto idx = a.cycles.find(gen.length, gen.label);
    for (Vertex v : a.walk(gen.length, *idx).vertices) e.representative.push_back(std::to_string(v));
    r.orbits.push_back(std::move(e));
  }
  r.nondeg_counts = nonzero(nondeg_orbit_counts(g, r.max_length));
  finish_report(r);
  return r;
}

std::string report_json(const AttractorReport& r) {
  Json j;
  j["schema"] = 1;
  j["kind"] = "attractors";
  j["input"] = r.input_kind;
  Json system;
  system["states"] = r.states;
  if (r.input_kind == "network") {
    system["alphabet"] = r.alphabet;
    system["variables"] = r.variables;
  }
  j["system"] = system;
  j["max_length"] = r.max_length;
  Json lengths = Json::array();
  Json counts = Json::object();
  for (auto [len, c] : r.nondeg_counts) {
    lengths.push_back(len);
    counts[std::to_string(len)] = c;
  }
  j["lengths"] = lengths;
  j["nondegenerate_orbit_counts"] = counts;
  Json orbits = Json::array();
  for (const auto& o : r.orbits) {
    Json e;
    e["length"] = o.length;
    e["representative"] = o.representative;
    orbits.push_back(e);
  }
  j["orbits"] = orbits;
  if (r.input_kind == "network") {
    Json wiring = Json::array();
    for (const auto& [u, v] : r.wiring) wiring.push_back({r.variables[u], r.variables[v]});
    j["wiring"] = wiring;
    Json cuts = Json::array();
    for (const auto& c : r.nontrivial_cuts) {
      Json x = Json::array(), y = Json::array();
      for (auto i : c.x) x.push_back(r.variables[i]);
      for (auto i : c.y) y.push_back(r.variables[i]);
      cuts.push_back({{"x", x}, {"y", y}});
    }
    j["cuts"] = cuts;
  }
  j["verified"] = r.verified;
  return j.dump(2) + "\n";
}

namespace {

std::string name_set(const ProductFunction& f, const std::vector<std::size_t>& idx) {
  std::vector<std::string> names;
  for (auto i : idx) names.push_back(f.names[i]);
  return "{" + join(names, ",") + "}";
}

}  // namespace

std::string cuts_text(const ProductFunction& f, bool include_trivial) {
  std::ostringstream out;
  for (const auto& cut : enumerate_cuts(wiring_diagram(f))) {
    if (cut.trivial() && !include_trivial) continue;
    out << "X=" << name_set(f, cut.x) << " Y=" << name_set(f, cut.y) << " "
        << (cut.trivial() ? "trivial" : "nontrivial") << "\n";
  }
  return out.str();
}

Cut parse_cut(const ProductFunction& f, std::string_view spec) {
  std::string s(spec);
  for (char& c : s)
    if (c == ',' || c == '{' || c == '}') c = ' ';
  std::vector<std::size_t> x;
  for (const auto& w : split_words(s)) {
    auto it = std::find(f.names.begin(), f.names.end(), w.text);
    if (it != f.names.end()) {
      x.push_back(static_cast<std::size_t>(it - f.names.begin()));
      continue;
    }
    auto n = to_number(w.text);
    if (!n || *n == 0 || *n > f.arity())
      throw invalid_argument("unknown cut coordinate '" + w.text + "'");
    x.push_back(*n - 1);
  }
  return make_cut(f.arity(), std::move(x));
}

std::string decomposition_text(const ProductFunction& f, const Cut& cut) {
  const ExtractedDecomposition d = extract(f, cut);
  const SemiDirect rebuilt = semidirect(to_semidirect_spec(d));
  const FiniteDds permuted = d.permuted.to_dds();
  const bool verified = rebuilt.system.update().size() == permuted.update().size() &&
                        std::equal(permuted.update().begin(), permuted.update().end(),
                                   rebuilt.system.update().begin());
  std::vector<std::string> sigma, inputs, fiber;
  for (auto s : d.sigma) sigma.push_back(std::to_string(s + 1));
  for (auto i : d.inputs) inputs.push_back(d.permuted.names[i]);
  for (std::size_t p = d.m; p < d.permuted.arity(); ++p) fiber.push_back(d.permuted.names[p]);

  std::ostringstream out;
  out << "# cut: X=" << name_set(f, cut.x) << " Y=" << name_set(f, cut.y) << "\n";
  out << "# sigma: " << join(sigma, " ") << "\n";
  out << "# order: " << join(d.permuted.names, " ") << "\n";
  out << "# I: " << join(inputs, " ") << "\n";
  out << "# verified: " << (verified ? "true" : "false") << "\n";
  out << "# g: A^" << d.m << " -> A^" << d.m << "\n";
  out << print_network(d.g);
  out << "# h: A^" << d.inputs.size() << " x A^" << fiber.size() << " -> A^" << fiber.size()
      << "\n";
  out << print_letter_map(d.h, inputs, fiber);
  return out.str();
}

std::string decomposition_json(const ProductFunction& f, const Cut& cut,
                               const std::vector<std::size_t>& levels) {
  const ExtractedDecomposition d = extract(f, cut);
  const SemiDirectSpec spec = to_semidirect_spec(d);
  const std::size_t q = f.alphabet();
  const std::size_t k = f.arity();
  const std::size_t fiber_arity = k - d.m;

  auto product_label = [&](StateId s) {
    const auto digits = decode_state(s, q, k);
    std::vector<Letter> original(k);
    for (std::size_t p = 0; p < k; ++p) original[d.sigma[p]] = digits[p];
    return state_label(encode_state(original, q), q, k);
  };
  auto base_label = [&](StateId x) { return state_label(x, q, d.m); };
  auto driven_label = [&](StateId s) {
    return std::to_string(s / spec.fiber_size) + ":" +
           state_label(s % spec.fiber_size, q, fiber_arity);
  };
  auto names_of = [&](const std::vector<std::size_t>& idx, const ProductFunction& from) {
    Json a = Json::array();
    for (auto i : idx) a.push_back(from.names[i]);
    return a;
  };

  Json j;
  j["schema"] = 1;
  j["kind"] = "decomposition";
  j["cut"] = {{"x", names_of(cut.x, f)}, {"y", names_of(cut.y, f)}};
  Json sigma = Json::array();
  for (auto s : d.sigma) sigma.push_back(s + 1);
  j["sigma"] = sigma;
  j["inputs"] = names_of(d.inputs, d.permuted);
  std::vector<std::size_t> base_idx, fiber_idx;
  for (std::size_t p = 0; p < k; ++p) (p < d.m ? base_idx : fiber_idx).push_back(p);
  j["base_variables"] = names_of(base_idx, d.permuted);
  j["fiber_variables"] = names_of(fiber_idx, d.permuted);

  bool all_ok = true;
  Json level_list = Json::array();
  for (std::size_t n : levels) {
    const DecompositionReport r = decompose_attractors(spec, n);
    Json lv;
    lv["n"] = n;
    Json lhs = Json::array();
    for (const auto& c : r.lhs_cycles) {
      Json cyc = Json::array();
      for (auto s : c.vertices) cyc.push_back(product_label(s));
      lhs.push_back(cyc);
    }
    lv["lhs_size"] = r.lhs_cycles.size();
    lv["lhs"] = lhs;
    Json orbits = Json::array();
    for (const auto& b : r.orbits) {
      Json ob;
      ob["k"] = b.k;
      Json rep = Json::array();
      for (auto x : b.representative.vertices) rep.push_back(base_label(x));
      ob["representative"] = rep;
      ob["driven_states"] = b.driven.size();
      Json cycles = Json::array();
      Json images = Json::array();
      for (std::size_t w = 0; w < b.driven_cycles.size(); ++w) {
        Json cyc = Json::array();
        for (auto s : b.driven_cycles[w].vertices) cyc.push_back(driven_label(s));
        cycles.push_back(cyc);
        images.push_back(r.bijection[b.rhs_offset + w]);
      }
      ob["cycles"] = cycles;
      ob["images"] = images;
      orbits.push_back(ob);
    }
    lv["orbits"] = orbits;
    lv["rhs_size"] = r.rhs.size();
    lv["verified"] = r.verified;
    all_ok = all_ok && r.verified;
    level_list.push_back(lv);
  }
  j["levels"] = level_list;
  j["verified"] = all_ok;
  return j.dump(2) + "\n";
}

CycleSetVerdict check_cycleset(const TruncatedCycleSet& raw) {
  CycleSetVerdict v;
  std::ostringstream out;
  v.relations = raw.check_relations();
  if (v.relations) {
    const auto& r = *v.relations;
    out << "relations: violated (" << relation_name(r.relation) << ") at level " << r.n;
    if (r.m != r.n) out << " -> " << r.m;
    out << ", element " << r.element << ": " << r.message << "\n";
    v.text = out.str();
    return v;
  }
  out << "relations: ok\n";
  const AbstractCycleSet k = validate(raw);
  const auto& c = k.cycles();
  v.property_a = check_property_A(k);
  v.property_b = check_property_B(k);
  out << "Property A: ";
  if (v.property_a) {
    out << "violated at level " << v.property_a->n << ": " << v.property_a->describe(k) << "\n";
  } else {
    out << "ok\n";
  }
  out << "Property B: ";
  if (v.property_b) {
    out << "violated at level " << v.property_b->n << ": " << v.property_b->describe(k) << "\n";
  } else {
    out << "ok\n";
  }
  for (std::size_t n = 1; n <= c.bound(); ++n) {
    for (Index x = 0; x < c.size(n); ++x) {
      auto anc = nondegenerate_ancestor(k, n, x);
      if (!anc.unique()) v.ambiguities.push_back({n, x, anc.witnesses});
    }
  }
  out << "ancestors: ";
  if (v.ambiguities.empty()) {
    out << "unique\n";
  } else {
    const auto& a = v.ambiguities.front();
    out << "ambiguous for " << v.ambiguities.size() << " element"
        << (v.ambiguities.size() == 1 ? "" : "s") << ", first at level " << a.n << ": '"
        << c.label(a.n, a.x) << "' <-";
    for (std::size_t i = 0; i < a.witnesses.size(); ++i) {
      out << (i ? ", " : " ") << "(" << a.witnesses[i].level << ", '"
          << c.label(a.witnesses[i].level, a.witnesses[i].element) << "')";
    }
    out << "\n";
  }
  if (!v.property_a && !v.property_b) {
    const Recognition rec = recognize(k);
    v.presentation = rec.presentation;
    out << "generators:";
    if (v.presentation->generators.empty()) out << " none";
    out << "\n";
    for (const auto& g : v.presentation->generators)
      out << "  length " << g.length << ": " << g.label << "\n";
  }
  v.text = out.str();
  return v;
}

}  // namespace ddskit
