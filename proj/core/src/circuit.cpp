#include "decpi/circuit.hpp"

#include <algorithm>
#include <utility>

namespace decpi {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::vector<Var> merge_vars(std::span<const Var> a, std::span<const Var> b) {
  std::vector<Var> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

template <class F>
void for_each_child(const Node& n, F&& f) {
  if (const auto* a = std::get_if<AndNode>(&n)) {
    f(a->left);
    f(a->right);
  } else if (const auto* d = std::get_if<DecisionNode>(&n)) {
    f(d->low);
    f(d->high);
  }
}

Node remap(const Node& n, const std::vector<NodeId>& to) {
  if (const auto* a = std::get_if<AndNode>(&n)) return AndNode{to[a->left], to[a->right]};
  if (const auto* d = std::get_if<DecisionNode>(&n)) return DecisionNode{d->var, to[d->low], to[d->high]};
  return n;
}

}  // namespace

std::size_t NodeHash::operator()(const Node& n) const noexcept {
  std::size_t h = n.index();
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, LiteralLeaf>) {
          h = mix(h, std::hash<Var>{}(v.literal.var));
          h = mix(h, v.literal.positive);
        } else if constexpr (std::is_same_v<T, AndNode>) {
          h = mix(h, v.left);
          h = mix(h, v.right);
        } else if constexpr (std::is_same_v<T, DecisionNode>) {
          h = mix(h, std::hash<Var>{}(v.var));
          h = mix(h, v.low);
          h = mix(h, v.high);
        }
      },
      n);
  return h;
}

Circuit::Circuit() {
  CircuitBuilder b;
  *this = b.build(b.false_leaf());
}

Circuit Circuit::subcircuit(NodeId id) const {
  CircuitBuilder b;
  std::vector<NodeId> to(id + 1);
  // Children precede parents, so one ascending pass suffices.
  for (NodeId i = 0; i <= id; ++i) to[i] = b.add(remap(node(i), to));
  return b.build(to[id]);
}

bool operator==(const Circuit& a, const Circuit& b) {
  if (a.impl_ == b.impl_) return true;
  return a.impl_->vars == b.impl_->vars && a.impl_->nodes == b.impl_->nodes;
}

NodeId CircuitBuilder::false_leaf() { return intern(FalseLeaf{}, {}); }

NodeId CircuitBuilder::true_leaf() { return intern(TrueLeaf{}, {}); }

NodeId CircuitBuilder::literal(const Literal& l) { return intern(LiteralLeaf{l}, {l.var}); }

NodeId CircuitBuilder::conjoin(NodeId left, NodeId right) {
  if (!sorted_disjoint(node_vars_.at(left), node_vars_.at(right))) {
    throw InvalidCircuit("AND children share a variable");
  }
  return intern(AndNode{left, right}, merge_vars(node_vars_[left], node_vars_[right]));
}

NodeId CircuitBuilder::decision(const Var& var, NodeId low, NodeId high) {
  if (sorted_contains(node_vars_.at(low), var) || sorted_contains(node_vars_.at(high), var)) {
    throw InvalidCircuit("decision variable '" + var.name() + "' occurs below its node");
  }
  std::vector<Var> vars = merge_vars(node_vars_[low], node_vars_[high]);
  vars.insert(std::upper_bound(vars.begin(), vars.end(), var), var);
  return intern(DecisionNode{var, low, high}, std::move(vars));
}

NodeId CircuitBuilder::add(const Node& n) {
  return std::visit(
      [&](const auto& v) -> NodeId {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, FalseLeaf>) return false_leaf();
        if constexpr (std::is_same_v<T, TrueLeaf>) return true_leaf();
        if constexpr (std::is_same_v<T, LiteralLeaf>) return literal(v.literal);
        if constexpr (std::is_same_v<T, AndNode>) return conjoin(v.left, v.right);
        if constexpr (std::is_same_v<T, DecisionNode>) return decision(v.var, v.low, v.high);
      },
      n);
}

NodeId CircuitBuilder::intern(Node n, std::vector<Var> vars) {
  auto [it, inserted] = index_.try_emplace(n, static_cast<NodeId>(nodes_.size()));
  if (inserted) {
    nodes_.push_back(std::move(n));
    node_vars_.push_back(std::move(vars));
  }
  return it->second;
}

Circuit CircuitBuilder::build(NodeId root) const {
  return build(root, {node_vars_.at(root).begin(), node_vars_.at(root).end()});
}

Circuit CircuitBuilder::build(NodeId root, std::vector<Var> declared) const {
  declared = sorted_vars(std::move(declared));
  if (!is_sorted_subset(node_vars_.at(root), declared)) {
    throw InvalidCircuit("declared variables do not cover the circuit");
  }

  // Canonical post-order, low/left child first.
  constexpr NodeId kUnset = static_cast<NodeId>(-1);
  std::vector<NodeId> to(nodes_.size(), kUnset);
  std::vector<NodeId> order;
  std::vector<std::pair<NodeId, bool>> stack{{root, false}};
  while (!stack.empty()) {
    auto [id, expanded] = stack.back();
    stack.pop_back();
    if (to[id] != kUnset) continue;
    if (expanded) {
      to[id] = static_cast<NodeId>(order.size());
      order.push_back(id);
      continue;
    }
    stack.push_back({id, true});
    std::vector<NodeId> kids;
    for_each_child(nodes_[id], [&](NodeId c) { kids.push_back(c); });
    for (auto k = kids.rbegin(); k != kids.rend(); ++k) {
      if (to[*k] == kUnset) stack.push_back({*k, false});
    }
  }

  auto impl = std::make_shared<Circuit::Impl>();
  impl->vars = std::move(declared);
  impl->nodes.reserve(order.size());
  impl->node_vars.reserve(order.size());
  impl->sat.reserve(order.size());
  impl->counts.reserve(order.size());
  for (NodeId old : order) {
    const Node n = remap(nodes_[old], to);
    const std::vector<Var>& vars = node_vars_[old];
    bool sat = false;
    BigCount count = 0;
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, TrueLeaf> || std::is_same_v<T, LiteralLeaf>) {
            sat = true;
            count = 1;
          } else if constexpr (std::is_same_v<T, AndNode>) {
            sat = impl->sat[v.left] && impl->sat[v.right];
            count = impl->counts[v.left] * impl->counts[v.right];
            impl->edges += 2;
          } else if constexpr (std::is_same_v<T, DecisionNode>) {
            sat = impl->sat[v.low] || impl->sat[v.high];
            const std::size_t below = vars.size() - 1;
            count = (impl->counts[v.low] << (below - impl->node_vars[v.low].size())) +
                    (impl->counts[v.high] << (below - impl->node_vars[v.high].size()));
            impl->edges += 2;
          }
        },
        n);
    if (!sat && !std::holds_alternative<FalseLeaf>(n)) impl->reduced = false;
    impl->nodes.push_back(n);
    impl->node_vars.push_back(vars);
    impl->sat.push_back(sat);
    impl->counts.push_back(std::move(count));
  }
  return Circuit(std::move(impl));
}

}  // namespace decpi
