#include "decpi/formats.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace decpi {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

// Nonblank lines, tokenized.
std::vector<Line> lines_of(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    auto tokens = split_ws(text.substr(start, end - start));
    if (!tokens.empty()) out.push_back({number, std::move(tokens)});
    start = end + 1;
  }
  return out;
}

template <class Int>
Int parse_int(std::string_view tok, std::size_t line, const char* what) {
  Int value{};
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(tok) + "'");
  }
  return value;
}

Var parse_var(std::string_view tok, std::size_t line) {
  if (!is_valid_var_name(tok)) {
    throw ParseError(line, "invalid variable name '" + std::string(tok) + "'");
  }
  return Var(std::string(tok));
}

Literal parse_literal(std::string_view tok, std::size_t line) {
  if (!tok.empty() && tok.front() == '-') return {parse_var(tok.substr(1), line), false};
  return {parse_var(tok, line), true};
}

void expect_arity(const Line& l, std::size_t n, const char* shape) {
  if (l.tokens.size() != n) throw ParseError(l.number, std::string("expected '") + shape + "'");
}

std::size_t child_index(std::string_view tok, std::size_t line, std::size_t self) {
  const auto i = parse_int<std::size_t>(tok, line, "node index");
  if (i >= self) {
    throw ParseError(line, "child index " + std::to_string(i) + " does not precede node " +
                               std::to_string(self));
  }
  return i;
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

RawCircuit parse_circuit_raw(std::string_view text) {
  const std::vector<Line> lines = lines_of(text);
  if (lines.empty()) throw ParseError(0, "empty input");
  const Line& header = lines.front();
  if (header.tokens.size() != 3 || header.tokens[0] != "dec-dnnf") {
    throw ParseError(header.number, "expected 'dec-dnnf <nodes> <vars>'");
  }
  const auto num_nodes = parse_int<std::size_t>(header.tokens[1], header.number, "node count");
  const auto num_vars = parse_int<std::size_t>(header.tokens[2], header.number, "variable count");
  if (num_nodes == 0) throw ParseError(header.number, "circuit has no nodes");

  RawCircuit raw;
  std::vector<Var> vars;
  std::size_t next = 1;
  if (next < lines.size() && lines[next].tokens.front() == "vars") {
    const Line& l = lines[next++];
    std::set<Var> seen;
    for (std::size_t i = 1; i < l.tokens.size(); ++i) {
      Var v = parse_var(l.tokens[i], l.number);
      if (!seen.insert(v).second) throw ParseError(l.number, "duplicate variable '" + v.name() + "'");
      vars.push_back(std::move(v));
    }
    if (vars.size() != num_vars) {
      throw ParseError(l.number, "header declares " + std::to_string(num_vars) +
                                     " variables, 'vars' lists " + std::to_string(vars.size()));
    }
  } else if (num_vars != 0) {
    throw ParseError(next < lines.size() ? lines[next].number : header.number,
                     "expected 'vars' line");
  }
  raw.declared = std::move(vars);

  for (; next < lines.size(); ++next) {
    const Line& l = lines[next];
    const std::size_t self = raw.nodes.size();
    if (self == num_nodes) throw ParseError(l.number, "more nodes than declared in header");
    const std::string_view kind = l.tokens.front();
    if (kind == "F") {
      expect_arity(l, 1, "F");
      raw.nodes.push_back(RawNode::make_false());
    } else if (kind == "T") {
      expect_arity(l, 1, "T");
      raw.nodes.push_back(RawNode::make_true());
    } else if (kind == "L") {
      expect_arity(l, 2, "L <literal>");
      raw.nodes.push_back(RawNode::make_literal(parse_literal(l.tokens[1], l.number)));
    } else if (kind == "A") {
      std::vector<std::size_t> kids;
      for (std::size_t i = 1; i < l.tokens.size(); ++i) {
        kids.push_back(child_index(l.tokens[i], l.number, self));
      }
      raw.nodes.push_back(RawNode::make_and(std::move(kids)));
    } else if (kind == "D") {
      expect_arity(l, 4, "D <var> <low> <high>");
      raw.nodes.push_back(RawNode::make_decision(parse_var(l.tokens[1], l.number),
                                                 child_index(l.tokens[2], l.number, self),
                                                 child_index(l.tokens[3], l.number, self)));
    } else {
      throw ParseError(l.number, "unknown node kind '" + std::string(kind) + "'");
    }
  }
  if (raw.nodes.size() != num_nodes) {
    throw ParseError(0, "header declares " + std::to_string(num_nodes) + " nodes, found " +
                            std::to_string(raw.nodes.size()));
  }
  raw.root = raw.nodes.size() - 1;
  return raw;
}

Circuit parse_circuit(std::string_view text) { return from_raw(parse_circuit_raw(text)); }

std::string print_circuit(const Circuit& c) {
  std::ostringstream out;
  out << "dec-dnnf " << c.node_count() << ' ' << c.vars().size() << '\n';
  out << "vars";
  for (const Var& v : c.vars()) out << ' ' << v.name();
  out << '\n';
  for (const Node& n : c.nodes()) {
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, FalseLeaf>) out << "F\n";
          if constexpr (std::is_same_v<T, TrueLeaf>) out << "T\n";
          if constexpr (std::is_same_v<T, LiteralLeaf>) out << "L " << v.literal.to_string() << '\n';
          if constexpr (std::is_same_v<T, AndNode>) out << "A " << v.left << ' ' << v.right << '\n';
          if constexpr (std::is_same_v<T, DecisionNode>) {
            out << "D " << v.var.name() << ' ' << v.low << ' ' << v.high << '\n';
          }
        },
        n);
  }
  return out.str();
}

Circuit import_c2d_nnf(std::string_view text) {
  std::vector<Line> lines = lines_of(text);
  std::erase_if(lines, [](const Line& l) { return l.tokens.front() == "c"; });
  if (lines.empty()) throw ParseError(0, "empty input");
  const Line& header = lines.front();
  if (header.tokens.size() != 4 || header.tokens[0] != "nnf") {
    throw ParseError(header.number, "expected 'nnf <nodes> <edges> <vars>'");
  }
  const auto num_nodes = parse_int<std::size_t>(header.tokens[1], header.number, "node count");
  const auto num_vars = parse_int<int>(header.tokens[3], header.number, "variable count");
  if (num_nodes == 0) throw ParseError(header.number, "circuit has no nodes");
  if (lines.size() - 1 != num_nodes) {
    throw ParseError(0, "header declares " + std::to_string(num_nodes) + " nodes, found " +
                            std::to_string(lines.size() - 1));
  }

  auto var_of = [](int j) { return Var(std::to_string(j)); };
  auto literal_of = [&](int lit, std::size_t line) {
    if (lit == 0 || lit > num_vars || lit < -num_vars) {
      throw ParseError(line, "literal " + std::to_string(lit) + " out of range");
    }
    return Literal{var_of(lit < 0 ? -lit : lit), lit > 0};
  };

  RawCircuit raw;
  raw.declared.emplace();
  for (int j = 1; j <= num_vars; ++j) raw.declared->push_back(var_of(j));
  raw.nodes.resize(num_nodes);

  // Literal of a c2d child on variable j, and the index of what remains.
  auto split_on = [&](std::size_t child, int j) -> std::optional<std::pair<bool, std::size_t>> {
    const RawNode& n = raw.nodes[child];
    const Var x = var_of(j);
    if (n.kind == RawNode::Kind::Literal && n.literal.var == x) {
      const bool positive = n.literal.positive;
      raw.nodes.push_back(RawNode::make_true());
      return std::pair{positive, raw.nodes.size() - 1};
    }
    if (n.kind != RawNode::Kind::And) return std::nullopt;
    std::optional<bool> polarity;
    std::vector<std::size_t> rest;
    for (std::size_t k : n.children) {
      const RawNode& kid = raw.nodes[k];
      if (!polarity && kid.kind == RawNode::Kind::Literal && kid.literal.var == x) {
        polarity = kid.literal.positive;
      } else {
        rest.push_back(k);
      }
    }
    if (!polarity) return std::nullopt;
    raw.nodes.push_back(RawNode::make_and(std::move(rest)));
    return std::pair{*polarity, raw.nodes.size() - 1};
  };

  for (std::size_t i = 0; i < num_nodes; ++i) {
    const Line& l = lines[i + 1];
    const std::string_view kind = l.tokens.front();
    if (kind == "L") {
      expect_arity(l, 2, "L <literal>");
      raw.nodes[i] = RawNode::make_literal(literal_of(parse_int<int>(l.tokens[1], l.number, "literal"), l.number));
      continue;
    }
    const bool is_or = kind == "O";
    if (!is_or && kind != "A") throw ParseError(l.number, "unknown node kind '" + std::string(kind) + "'");
    const std::size_t first = is_or ? 3 : 2;
    if (l.tokens.size() < first) throw ParseError(l.number, "truncated node line");
    const auto count = parse_int<std::size_t>(l.tokens[first - 1], l.number, "child count");
    if (l.tokens.size() != first + count) throw ParseError(l.number, "child count mismatch");
    std::vector<std::size_t> kids;
    for (std::size_t k = first; k < l.tokens.size(); ++k) {
      kids.push_back(child_index(l.tokens[k], l.number, i));
    }
    if (!is_or) {
      raw.nodes[i] = RawNode::make_and(std::move(kids));
      continue;
    }
    const int j = parse_int<int>(l.tokens[1], l.number, "decision variable");
    if (kids.empty()) {
      raw.nodes[i] = RawNode::make_false();
    } else if (kids.size() == 1) {
      raw.nodes[i] = RawNode::make_and(std::move(kids));
    } else {
      std::optional<std::pair<bool, std::size_t>> a;
      std::optional<std::pair<bool, std::size_t>> b;
      if (j > 0 && j <= num_vars && kids.size() == 2) {
        a = split_on(kids[0], j);
        b = split_on(kids[1], j);
      }
      if (!a || !b || a->first == b->first) {
        throw UnsupportedStructure("line " + std::to_string(l.number) + ": OR node " +
                                   std::to_string(i) + " is not a decision node");
      }
      const auto& low = a->first ? *b : *a;
      const auto& high = a->first ? *a : *b;
      raw.nodes[i] = RawNode::make_decision(var_of(j), low.second, high.second);
    }
  }
  raw.root = num_nodes - 1;
  return from_raw(raw);
}

Assignment parse_assignment(std::string_view text) {
  Assignment a;
  const std::string all = trim(text);
  if (all.empty()) return a;
  std::size_t start = 0;
  while (start <= all.size()) {
    std::size_t end = all.find(',', start);
    if (end == std::string::npos) end = all.size();
    const std::string item = trim(std::string_view(all).substr(start, end - start));
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos) throw ParseError(0, "expected 'name=0|1', got '" + item + "'");
    const Var v = parse_var(trim(std::string_view(item).substr(0, eq)), 0);
    const std::string value = trim(std::string_view(item).substr(eq + 1));
    if (value != "0" && value != "1") {
      throw ParseError(0, "value of '" + v.name() + "' must be 0 or 1, got '" + value + "'");
    }
    if (a.get(v)) throw ParseError(0, "duplicate variable '" + v.name() + "'");
    a.set(v, value == "1");
    start = end + 1;
  }
  return a;
}

Term parse_term(std::string_view text) {
  std::vector<Literal> lits;
  for (std::string_view tok : split_ws(text)) {
    Literal l = parse_literal(tok, 0);
    for (const Literal& seen : lits) {
      if (seen.var != l.var) continue;
      if (seen.positive == l.positive) throw ParseError(0, "duplicate literal '" + l.to_string() + "'");
      throw ParseError(0, "contradictory literals on '" + l.var.name() + "'");
    }
    lits.push_back(std::move(l));
  }
  return Term(std::move(lits));
}

Hypergraph parse_hypergraph(std::string_view text) {
  Hypergraph h;
  std::set<Var> vertices;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view line = text.substr(start, end - start);
    line = line.substr(0, line.find('#'));
    std::vector<Var> edge;
    for (std::string_view tok : split_ws(line)) edge.push_back(parse_var(tok, number));
    if (!edge.empty()) {
      edge = sorted_vars(std::move(edge));
      vertices.insert(edge.begin(), edge.end());
      h.edges.push_back(std::move(edge));
    }
    start = end + 1;
  }
  h.vertices.assign(vertices.begin(), vertices.end());
  return h;
}

std::string print_hypergraph(const Hypergraph& h) {
  std::string out;
  for (const auto& edge : h.edges) {
    for (std::size_t i = 0; i < edge.size(); ++i) {
      if (i) out += ' ';
      out += edge[i].name();
    }
    out += '\n';
  }
  return out;
}

Cnf parse_dimacs(std::string_view text) {
  Cnf cnf;
  bool have_header = false;
  std::size_t expected = 0;
  std::vector<int> clause;
  std::size_t last_line = 0;
  for (const Line& l : lines_of(text)) {
    last_line = l.number;
    const std::string_view first = l.tokens.front();
    if (first == "c") continue;
    if (first == "%") break;
    if (first == "p") {
      if (have_header) throw ParseError(l.number, "duplicate problem line");
      if (l.tokens.size() != 4 || l.tokens[1] != "cnf") {
        throw ParseError(l.number, "expected 'p cnf <vars> <clauses>'");
      }
      cnf.num_vars = parse_int<int>(l.tokens[2], l.number, "variable count");
      expected = parse_int<std::size_t>(l.tokens[3], l.number, "clause count");
      if (cnf.num_vars < 0) throw ParseError(l.number, "negative variable count");
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(l.number, "clause before problem line");
    for (std::string_view tok : l.tokens) {
      const int lit = parse_int<int>(tok, l.number, "literal");
      if (lit == 0) {
        cnf.clauses.push_back(std::move(clause));
        clause.clear();
      } else if (lit > cnf.num_vars || lit < -cnf.num_vars) {
        throw ParseError(l.number, "literal " + std::to_string(lit) + " out of range");
      } else {
        clause.push_back(lit);
      }
    }
  }
  if (!have_header) throw ParseError(0, "missing problem line");
  if (!clause.empty()) throw ParseError(last_line, "last clause is not terminated by 0");
  if (cnf.clauses.size() != expected) {
    throw ParseError(0, "problem line declares " + std::to_string(expected) + " clauses, found " +
                            std::to_string(cnf.clauses.size()));
  }
  return cnf;
}

}  // namespace decpi
