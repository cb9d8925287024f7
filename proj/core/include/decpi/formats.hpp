#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "decpi/circuit.hpp"
#include "decpi/raw_circuit.hpp"

namespace decpi {

struct Hypergraph {
  std::vector<Var> vertices;            // sorted
  std::vector<std::vector<Var>> edges;  // each sorted, in file order
};

struct Cnf {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;
};

/// Native text format:
///
///   dec-dnnf <nodes> <vars>
///   vars <name>...
///   F | T | L <lit> | A <i> <j>... | D <var> <i0> <i1>
///
/// Children must precede their parent; the last node is the root. ANDs of any
/// arity are accepted and binarized. The result is validated, not reduced.
/// Throws ParseError for syntax and InvalidCircuit for structural problems.
Circuit parse_circuit(std::string_view text);
/// Stops after syntax checking.
RawCircuit parse_circuit_raw(std::string_view text);
std::string print_circuit(const Circuit& c);

/// c2d/d4 `nnf` files. Variables are named by their decimal index. An O-node
/// becomes a decision node when its two children each carry a literal on
/// its decision variable, with opposite signs. Throws UnsupportedStructure
/// for any other O-node.
Circuit import_c2d_nnf(std::string_view text);

/// `name=0|1` pairs separated by commas.
Assignment parse_assignment(std::string_view text);
/// Whitespace-separated literals; empty text is the empty term.
Term parse_term(std::string_view text);
/// One edge per line, whitespace-separated vertex names, `#` comments.
Hypergraph parse_hypergraph(std::string_view text);
Cnf parse_dimacs(std::string_view text);

std::string print_hypergraph(const Hypergraph& h);

}  // namespace decpi
