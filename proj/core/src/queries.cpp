#include "decpi/queries.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace decpi {

namespace {

// Marks the nodes of Σ_node. Children have smaller indices than parents.
std::vector<char> reachable(const Circuit& c, NodeId node) {
  std::vector<char> mark(node + 1, 0);
  mark[node] = 1;
  for (NodeId i = node + 1; i-- > 0;) {
    if (!mark[i]) continue;
    if (const auto* a = std::get_if<AndNode>(&c.node(i))) {
      mark[a->left] = mark[a->right] = 1;
    } else if (const auto* d = std::get_if<DecisionNode>(&c.node(i))) {
      mark[d->low] = mark[d->high] = 1;
    }
  }
  return mark;
}

std::size_t free_count(const Circuit& c, NodeId v, const Term& t) {
  std::size_t fixed = 0;
  for (const Literal& l : t) fixed += sorted_contains(c.vars_of(v), l.var);
  return c.vars_of(v).size() - fixed;
}

// Bit k set when the k-th literal of t is on `v`.
std::uint64_t bit_of(const Term& t, const Var& v) {
  const auto lits = t.literals();
  const auto it = std::lower_bound(lits.begin(), lits.end(), v,
                                   [](const Literal& l, const Var& x) { return l.var < x; });
  if (it == lits.end() || it->var != v) return 0;
  return std::uint64_t{1} << (it - lits.begin());
}

// Models of Σ_node|t over var(Σ_node) \ var(t).
template <class N>
N conditioned_count(const Circuit& c, NodeId node, const Term& t) {
  const std::vector<char> mark = reachable(c, node);
  std::vector<N> count(node + 1);
  std::vector<std::size_t> free(node + 1);
  // For short terms, var(Σ_i) ∩ var(t) is tracked as a bitmask over t.
  const bool masks = t.size() <= 64;
  std::vector<std::uint64_t> mask(masks ? node + 1 : 0);
  for (NodeId i = 0; i <= node; ++i) {
    if (!mark[i]) continue;
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if (!masks) return;
          if constexpr (std::is_same_v<T, LiteralLeaf>) {
            mask[i] = bit_of(t, v.literal.var);
          } else if constexpr (std::is_same_v<T, AndNode>) {
            mask[i] = mask[v.left] | mask[v.right];
          } else if constexpr (std::is_same_v<T, DecisionNode>) {
            mask[i] = mask[v.low] | mask[v.high] | bit_of(t, v.var);
          }
        },
        c.node(i));
    free[i] = masks ? c.vars_of(i).size() - std::popcount(mask[i]) : free_count(c, i, t);
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, FalseLeaf>) {
            count[i] = 0;
          } else if constexpr (std::is_same_v<T, TrueLeaf>) {
            count[i] = 1;
          } else if constexpr (std::is_same_v<T, LiteralLeaf>) {
            auto value = t.value_of(v.literal.var);
            count[i] = (!value || *value == v.literal.positive) ? 1 : 0;
          } else if constexpr (std::is_same_v<T, AndNode>) {
            count[i] = count[v.left] * count[v.right];
          } else if constexpr (std::is_same_v<T, DecisionNode>) {
            if (auto value = t.value_of(v.var)) {
              const NodeId k = *value ? v.high : v.low;
              count[i] = count[k] << (free[i] - free[k]);
            } else {
              count[i] = (count[v.low] << (free[i] - 1 - free[v.low])) +
                         (count[v.high] << (free[i] - 1 - free[v.high]));
            }
          }
        },
        c.node(i));
  }
  return count[node];
}

}  // namespace

bool evaluate(const Circuit& c, NodeId node, const Assignment& a) {
  const std::vector<char> mark = reachable(c, node);
  std::vector<char> value(node + 1, 0);
  for (NodeId i = 0; i <= node; ++i) {
    if (!mark[i]) continue;
    value[i] = std::visit(
        [&](const auto& v) -> bool {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, FalseLeaf>) return false;
          if constexpr (std::is_same_v<T, TrueLeaf>) return true;
          if constexpr (std::is_same_v<T, LiteralLeaf>) return a.at(v.literal.var) == v.literal.positive;
          if constexpr (std::is_same_v<T, AndNode>) return value[v.left] && value[v.right];
          if constexpr (std::is_same_v<T, DecisionNode>) return a.at(v.var) ? value[v.high] : value[v.low];
        },
        c.node(i));
  }
  return value[node];
}

BigCount count_models(const Circuit& c, std::span<const Var> over) {
  const std::vector<Var> sorted = sorted_vars({over.begin(), over.end()});
  if (!is_sorted_subset(c.vars_of(c.root()), sorted)) {
    throw std::invalid_argument("counting domain does not contain the circuit's variables");
  }
  return c.model_count(c.root()) << (sorted.size() - c.vars_of(c.root()).size());
}

BigCount count_models(const Circuit& c) { return count_models(c, c.vars()); }

Circuit reduce(const Circuit& c) {
  CircuitBuilder b;
  std::vector<NodeId> to(c.node_count());
  for (NodeId i = 0; i < c.node_count(); ++i) {
    if (!c.satisfiable(i)) {
      to[i] = b.false_leaf();
    } else if (const auto* a = std::get_if<AndNode>(&c.node(i))) {
      to[i] = b.conjoin(to[a->left], to[a->right]);
    } else if (const auto* d = std::get_if<DecisionNode>(&c.node(i))) {
      to[i] = b.decision(d->var, to[d->low], to[d->high]);
    } else {
      to[i] = b.add(c.node(i));
    }
  }
  return b.build(to[c.root()], {c.vars().begin(), c.vars().end()});
}

Circuit condition(const Circuit& c, const Term& t) {
  CircuitBuilder b;
  std::vector<NodeId> to(c.node_count());
  for (NodeId i = 0; i < c.node_count(); ++i) {
    const Node& n = c.node(i);
    if (const auto* l = std::get_if<LiteralLeaf>(&n)) {
      auto value = t.value_of(l->literal.var);
      if (!value) {
        to[i] = b.literal(l->literal);
      } else {
        to[i] = *value == l->literal.positive ? b.true_leaf() : b.false_leaf();
      }
    } else if (const auto* a = std::get_if<AndNode>(&n)) {
      to[i] = b.conjoin(to[a->left], to[a->right]);
    } else if (const auto* d = std::get_if<DecisionNode>(&n)) {
      if (auto value = t.value_of(d->var)) {
        to[i] = *value ? to[d->high] : to[d->low];
      } else {
        to[i] = b.decision(d->var, to[d->low], to[d->high]);
      }
    } else {
      to[i] = b.add(n);
    }
  }
  std::vector<Var> declared;
  for (const Var& v : c.vars()) {
    if (!t.mentions(v)) declared.push_back(v);
  }
  return reduce(b.build(to[c.root()], std::move(declared)));
}

bool satisfiable_with(const Circuit& c, NodeId node, const Term& t) {
  const std::vector<char> mark = reachable(c, node);
  std::vector<char> sat(node + 1, 0);
  for (NodeId i = 0; i <= node; ++i) {
    if (!mark[i]) continue;
    sat[i] = std::visit(
        [&](const auto& v) -> bool {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, FalseLeaf>) return false;
          if constexpr (std::is_same_v<T, TrueLeaf>) return true;
          if constexpr (std::is_same_v<T, LiteralLeaf>) {
            auto value = t.value_of(v.literal.var);
            return !value || *value == v.literal.positive;
          }
          if constexpr (std::is_same_v<T, AndNode>) return sat[v.left] && sat[v.right];
          if constexpr (std::is_same_v<T, DecisionNode>) {
            if (auto value = t.value_of(v.var)) return *value ? sat[v.high] : sat[v.low];
            return sat[v.low] || sat[v.high];
          }
        },
        c.node(i));
  }
  return sat[node];
}

bool is_implicant(const Circuit& c, NodeId node, const Term& t) {
  const std::size_t free = free_count(c, node, t);
  if (c.vars_of(node).size() <= 62) {
    return conditioned_count<std::uint64_t>(c, node, t) == (std::uint64_t{1} << free);
  }
  return conditioned_count<BigCount>(c, node, t) == (BigCount{1} << free);
}

bool is_prime_implicant(const Circuit& c, NodeId node, const Term& t) {
  // A literal on a variable Σ_node does not mention can always be dropped.
  for (const Literal& l : t) {
    if (!sorted_contains(c.vars_of(node), l.var)) return false;
  }
  if (!is_implicant(c, node, t)) return false;
  for (const Literal& l : t) {
    if (is_implicant(c, node, t.without(l.var))) return false;
  }
  return true;
}

}  // namespace decpi
