#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <unordered_map>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "decpi/error.hpp"
#include "decpi/term.hpp"

namespace decpi {

using NodeId = std::uint32_t;
using BigCount = boost::multiprecision::cpp_int;

struct FalseLeaf {
  friend bool operator==(const FalseLeaf&, const FalseLeaf&) = default;
};
struct TrueLeaf {
  friend bool operator==(const TrueLeaf&, const TrueLeaf&) = default;
};
struct LiteralLeaf {
  Literal literal;
  friend bool operator==(const LiteralLeaf&, const LiteralLeaf&) = default;
};
struct AndNode {
  NodeId left;
  NodeId right;
  friend bool operator==(const AndNode&, const AndNode&) = default;
};
/// (¬var ∧ low) ∨ (var ∧ high); `var` occurs in neither child.
struct DecisionNode {
  Var var;
  NodeId low;
  NodeId high;
  friend bool operator==(const DecisionNode&, const DecisionNode&) = default;
};

using Node = std::variant<FalseLeaf, TrueLeaf, LiteralLeaf, AndNode, DecisionNode>;

struct NodeHash {
  std::size_t operator()(const Node& n) const noexcept;
};

/// Structural violation found while building or validating a circuit.
class InvalidCircuit : public Error {
 public:
  using Error::Error;
};

/// Immutable dec-DNNF circuit over binary AND and decision nodes.
///
/// Nodes are stored children-first in a canonical depth-first post-order
/// from the root (low/left child visited first), so the root is always the
/// last node and two structurally equal circuits have identical node tables.
/// Copies share the same storage.
class Circuit {
 public:
  /// The constant-0 circuit over no variables.
  Circuit();

  const Node& node(NodeId id) const { return impl_->nodes[id]; }
  std::span<const Node> nodes() const noexcept { return impl_->nodes; }
  NodeId root() const noexcept { return static_cast<NodeId>(impl_->nodes.size() - 1); }
  std::size_t node_count() const noexcept { return impl_->nodes.size(); }
  /// |Σ|: number of parent-child edges.
  std::size_t edge_count() const noexcept { return impl_->edges; }

  /// Declared variables, sorted. Always a superset of vars_of(root()).
  std::span<const Var> vars() const noexcept { return impl_->vars; }
  /// var(Σ_v), sorted.
  std::span<const Var> vars_of(NodeId id) const { return impl_->node_vars[id]; }
  bool satisfiable(NodeId id) const { return impl_->sat[id] != 0; }
  bool satisfiable() const { return satisfiable(root()); }
  /// Models of Σ_v counted over var(Σ_v).
  const BigCount& model_count(NodeId id) const { return impl_->counts[id]; }

  /// True when no node other than a 0-leaf is unsatisfiable.
  bool is_reduced() const noexcept { return impl_->reduced; }

  /// Σ_v as a standalone circuit declared over var(Σ_v).
  Circuit subcircuit(NodeId id) const;

  bool is_leaf(NodeId id) const {
    return !std::holds_alternative<AndNode>(node(id)) &&
           !std::holds_alternative<DecisionNode>(node(id));
  }

  /// Structural equality: same declared variables and same node table.
  friend bool operator==(const Circuit& a, const Circuit& b);

 private:
  friend class CircuitBuilder;

  struct Impl {
    std::vector<Node> nodes;
    std::vector<Var> vars;
    std::vector<std::vector<Var>> node_vars;
    std::vector<char> sat;
    std::vector<BigCount> counts;
    std::size_t edges = 0;
    bool reduced = true;
  };

  explicit Circuit(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

/// Hash-consing node factory. Checks decomposability and decision-variable
/// freshness as nodes are added; performs no simplification.
class CircuitBuilder {
 public:
  NodeId false_leaf();
  NodeId true_leaf();
  NodeId literal(const Literal& l);
  /// Throws InvalidCircuit if the children share a variable.
  NodeId conjoin(NodeId left, NodeId right);
  /// Throws InvalidCircuit if `var` occurs in either child.
  NodeId decision(const Var& var, NodeId low, NodeId high);
  NodeId add(const Node& n);

  const Node& node(NodeId id) const { return nodes_[id]; }
  std::span<const Var> vars_of(NodeId id) const { return node_vars_[id]; }
  std::size_t size() const noexcept { return nodes_.size(); }

  /// Circuit made of the nodes reachable from `root`. `declared` defaults to
  /// var(root) and must contain it otherwise (throws InvalidCircuit).
  Circuit build(NodeId root) const;
  Circuit build(NodeId root, std::vector<Var> declared) const;

 private:
  NodeId intern(Node n, std::vector<Var> vars);

  std::vector<Node> nodes_;
  std::vector<std::vector<Var>> node_vars_;
  std::unordered_map<Node, NodeId, NodeHash> index_;
};

}  // namespace decpi
