#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "decpi/circuit.hpp"

namespace decpi {

/// Unchecked node table as read from a file or assembled by hand. ANDs may
/// have any arity and child indices may point anywhere (including forward).
struct RawNode {
  enum class Kind { False, True, Literal, And, Decision };

  Kind kind = Kind::False;
  Literal literal;                    // Kind::Literal
  Var var;                            // Kind::Decision
  std::vector<std::size_t> children;  // And: operands; Decision: {low, high}

  static RawNode make_false() { return {}; }
  static RawNode make_true() { return {Kind::True, {}, {}, {}}; }
  static RawNode make_literal(Literal l) { return {Kind::Literal, std::move(l), {}, {}}; }
  static RawNode make_and(std::vector<std::size_t> kids) { return {Kind::And, {}, {}, std::move(kids)}; }
  static RawNode make_decision(Var v, std::size_t low, std::size_t high) {
    return {Kind::Decision, {}, std::move(v), {low, high}};
  }
};

struct RawCircuit {
  std::vector<RawNode> nodes;
  std::size_t root = 0;
  /// nullopt: declare exactly the variables that occur.
  std::optional<std::vector<Var>> declared;
};

struct Violation {
  enum class Kind {
    BadIndex,
    Cycle,
    BadArity,
    NonBinaryAnd,
    NonDecomposableAnd,
    DecisionVarBelow,
    UndeclaredVariable,
  };

  Kind kind;
  std::size_t node;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  /// Ignores NonBinaryAnd, which binarize() repairs.
  bool ok_except_arity() const noexcept;
  bool has(Violation::Kind kind) const noexcept;
  /// One "node N: message" line per violation.
  std::string to_string() const;
};

/// Reports every structural violation among the nodes reachable from the root.
ValidationReport validate(const RawCircuit& raw);

/// Left-folds n-ary ANDs. AND() becomes the 1-leaf and AND(a) becomes a copy
/// of a. Existing indices keep their meaning; new nodes are appended.
RawCircuit binarize(const RawCircuit& raw);

/// validate + binarize + build. Throws InvalidCircuit carrying the report.
Circuit from_raw(const RawCircuit& raw);

/// Node table of a circuit, in its canonical order.
RawCircuit to_raw(const Circuit& c);

}  // namespace decpi
