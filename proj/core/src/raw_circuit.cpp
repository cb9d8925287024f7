#include "decpi/raw_circuit.hpp"

#include <algorithm>

namespace decpi {

namespace {

std::string describe(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::BadIndex: return "bad index";
    case Violation::Kind::Cycle: return "cycle";
    case Violation::Kind::BadArity: return "bad arity";
    case Violation::Kind::NonBinaryAnd: return "non-binary AND";
    case Violation::Kind::NonDecomposableAnd: return "non-decomposable AND";
    case Violation::Kind::DecisionVarBelow: return "decision variable below";
    case Violation::Kind::UndeclaredVariable: return "undeclared variable";
  }
  return "violation";
}

// Reachable nodes in post-order; flags bad indices and cycles.
std::vector<std::size_t> post_order(const RawCircuit& raw, ValidationReport& report) {
  enum : char { kWhite, kGrey, kBlack };
  std::vector<char> color(raw.nodes.size(), kWhite);
  std::vector<std::size_t> order;
  std::vector<std::pair<std::size_t, std::size_t>> stack{{raw.root, 0}};
  color[raw.root] = kGrey;
  while (!stack.empty()) {
    auto& [id, next] = stack.back();
    const auto& kids = raw.nodes[id].children;
    if (next == kids.size()) {
      color[id] = kBlack;
      order.push_back(id);
      stack.pop_back();
      continue;
    }
    const std::size_t child = kids[next++];
    if (child >= raw.nodes.size()) {
      report.violations.push_back({Violation::Kind::BadIndex, id,
                                   "child index " + std::to_string(child) + " out of range"});
    } else if (color[child] == kGrey) {
      report.violations.push_back({Violation::Kind::Cycle, id,
                                   "edge to node " + std::to_string(child) + " closes a cycle"});
    } else if (color[child] == kWhite) {
      color[child] = kGrey;
      stack.push_back({child, 0});
    }
  }
  return order;
}

}  // namespace

bool ValidationReport::ok_except_arity() const noexcept {
  return std::all_of(violations.begin(), violations.end(),
                     [](const Violation& v) { return v.kind == Violation::Kind::NonBinaryAnd; });
}

bool ValidationReport::has(Violation::Kind kind) const noexcept {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.kind == kind; });
}

std::string ValidationReport::to_string() const {
  std::string out;
  for (const Violation& v : violations) {
    if (!out.empty()) out += '\n';
    out += "node " + std::to_string(v.node) + ": " + describe(v.kind) + ": " + v.message;
  }
  return out;
}

ValidationReport validate(const RawCircuit& raw) {
  ValidationReport report;
  if (raw.root >= raw.nodes.size()) {
    report.violations.push_back({Violation::Kind::BadIndex, raw.root, "root index out of range"});
    return report;
  }
  const std::vector<std::size_t> order = post_order(raw, report);
  const bool structural_ok = report.ok();

  std::vector<Var> declared;
  if (raw.declared) declared = sorted_vars(*raw.declared);
  auto check_declared = [&](std::size_t id, const Var& v) {
    if (raw.declared && !sorted_contains(declared, v)) {
      report.violations.push_back(
          {Violation::Kind::UndeclaredVariable, id, "variable '" + v.name() + "' is not declared"});
    }
  };

  std::vector<std::vector<Var>> vars(raw.nodes.size());
  for (std::size_t id : order) {
    const RawNode& n = raw.nodes[id];
    switch (n.kind) {
      case RawNode::Kind::False:
      case RawNode::Kind::True:
      case RawNode::Kind::Literal:
        if (!n.children.empty()) {
          report.violations.push_back({Violation::Kind::BadArity, id, "leaf has children"});
        }
        if (n.kind == RawNode::Kind::Literal) {
          check_declared(id, n.literal.var);
          vars[id] = {n.literal.var};
        }
        break;
      case RawNode::Kind::And: {
        if (n.children.size() != 2) {
          report.violations.push_back({Violation::Kind::NonBinaryAnd, id,
                                       std::to_string(n.children.size()) + " children"});
        }
        if (!structural_ok) break;
        std::vector<Var> acc;
        for (std::size_t c : n.children) {
          std::vector<Var> shared;
          std::set_intersection(acc.begin(), acc.end(), vars[c].begin(), vars[c].end(),
                                std::back_inserter(shared));
          if (!shared.empty()) {
            report.violations.push_back({Violation::Kind::NonDecomposableAnd, id,
                                         "children share variable '" + shared.front().name() + "'"});
          }
          std::vector<Var> merged;
          std::set_union(acc.begin(), acc.end(), vars[c].begin(), vars[c].end(),
                         std::back_inserter(merged));
          acc = std::move(merged);
        }
        vars[id] = std::move(acc);
        break;
      }
      case RawNode::Kind::Decision: {
        check_declared(id, n.var);
        if (n.children.size() != 2) {
          report.violations.push_back({Violation::Kind::BadArity, id,
                                       "decision node needs exactly 2 children"});
        }
        if (!structural_ok) break;
        std::vector<Var> acc{n.var};
        for (std::size_t c : n.children) {
          if (sorted_contains(vars[c], n.var)) {
            report.violations.push_back({Violation::Kind::DecisionVarBelow, id,
                                         "variable '" + n.var.name() + "' occurs below node " +
                                             std::to_string(id)});
          }
          std::vector<Var> merged;
          std::set_union(acc.begin(), acc.end(), vars[c].begin(), vars[c].end(),
                         std::back_inserter(merged));
          acc = std::move(merged);
        }
        vars[id] = std::move(acc);
        break;
      }
    }
  }
  return report;
}

RawCircuit binarize(const RawCircuit& raw) {
  RawCircuit out = raw;
  const std::size_t n = raw.nodes.size();

  // AND(a) is an alias of a; follow chains, guarding against cycles.
  auto resolve = [&](std::size_t id) {
    for (std::size_t steps = 0; steps <= n && id < n; ++steps) {
      const RawNode& node = raw.nodes[id];
      if (node.kind != RawNode::Kind::And || node.children.size() != 1) return id;
      id = node.children.front();
    }
    return id;
  };

  for (std::size_t id = 0; id < n; ++id) {
    for (std::size_t& c : out.nodes[id].children) c = resolve(c);
  }
  out.root = resolve(raw.root);
  for (std::size_t id = 0; id < n; ++id) {
    const std::size_t target = resolve(id);
    if (target != id && target < n) out.nodes[id] = out.nodes[target];
  }

  for (std::size_t id = 0; id < n; ++id) {
    RawNode& node = out.nodes[id];
    if (node.kind != RawNode::Kind::And) continue;
    if (node.children.empty()) {
      node = RawNode::make_true();
      continue;
    }
    if (node.children.size() <= 2) continue;
    std::vector<std::size_t> kids = node.children;
    std::size_t acc = kids[0];
    for (std::size_t i = 1; i + 1 < kids.size(); ++i) {
      out.nodes.push_back(RawNode::make_and({acc, kids[i]}));
      acc = out.nodes.size() - 1;
    }
    out.nodes[id] = RawNode::make_and({acc, kids.back()});
  }
  return out;
}

Circuit from_raw(const RawCircuit& raw) {
  const ValidationReport report = validate(raw);
  if (!report.ok_except_arity()) throw InvalidCircuit(report.to_string());
  const RawCircuit bin = binarize(raw);

  ValidationReport scratch;
  const std::vector<std::size_t> order = post_order(bin, scratch);
  CircuitBuilder b;
  std::vector<NodeId> to(bin.nodes.size());
  for (std::size_t id : order) {
    const RawNode& n = bin.nodes[id];
    switch (n.kind) {
      case RawNode::Kind::False: to[id] = b.false_leaf(); break;
      case RawNode::Kind::True: to[id] = b.true_leaf(); break;
      case RawNode::Kind::Literal: to[id] = b.literal(n.literal); break;
      case RawNode::Kind::And: to[id] = b.conjoin(to[n.children[0]], to[n.children[1]]); break;
      case RawNode::Kind::Decision:
        to[id] = b.decision(n.var, to[n.children[0]], to[n.children[1]]);
        break;
    }
  }
  if (raw.declared) return b.build(to[bin.root], *raw.declared);
  return b.build(to[bin.root]);
}

RawCircuit to_raw(const Circuit& c) {
  RawCircuit raw;
  raw.declared = std::vector<Var>(c.vars().begin(), c.vars().end());
  raw.root = c.root();
  for (const Node& n : c.nodes()) {
    raw.nodes.push_back(std::visit(
        [](const auto& v) -> RawNode {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, FalseLeaf>) return RawNode::make_false();
          if constexpr (std::is_same_v<T, TrueLeaf>) return RawNode::make_true();
          if constexpr (std::is_same_v<T, LiteralLeaf>) return RawNode::make_literal(v.literal);
          if constexpr (std::is_same_v<T, AndNode>) return RawNode::make_and({v.left, v.right});
          if constexpr (std::is_same_v<T, DecisionNode>) {
            return RawNode::make_decision(v.var, v.low, v.high);
          }
        },
        n));
  }
  return raw;
}

}  // namespace decpi
