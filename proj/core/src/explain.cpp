#include "decpi/explain.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "decpi/pi_batch.hpp"
#include "decpi/queries.hpp"

namespace decpi {

namespace {

// Calls `accept` on every term over `vars` by increasing size; within a size,
// variable subsets in lexicographic order, negative polarity first. Returns
// the first accepted term.
std::optional<Term> first_term_by_size(std::span<const Var> vars,
                                       const std::function<bool(const Term&)>& accept) {
  const std::size_t n = vars.size();
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    for (;;) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        std::vector<Literal> lits;
        lits.reserve(k);
        for (std::size_t i = 0; i < k; ++i) {
          lits.push_back({vars[pick[i]], ((mask >> (k - 1 - i)) & 1) != 0});
        }
        Term t(std::move(lits));
        if (accept(t)) return t;
      }
      // Next k-combination of [0, n).
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

void check_cap(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap) {
    throw CapExceeded(std::string(what) + " has " + std::to_string(n) +
                      " variables, above the brute-force cap of " + std::to_string(cap) +
                      "; this search is NP-hard in general");
  }
}

}  // namespace

bool is_decision_diagram(const Circuit& c) {
  return std::none_of(c.nodes().begin(), c.nodes().end(),
                      [](const Node& n) { return std::holds_alternative<AndNode>(n); });
}

Circuit negate(const Circuit& c) {
  if (!is_decision_diagram(c)) {
    throw Unsupported("negation is only available for circuits without AND nodes");
  }
  CircuitBuilder b;
  std::vector<NodeId> to(c.node_count());
  for (NodeId i = 0; i < c.node_count(); ++i) {
    const Node& n = c.node(i);
    if (std::holds_alternative<FalseLeaf>(n)) {
      to[i] = b.true_leaf();
    } else if (std::holds_alternative<TrueLeaf>(n)) {
      to[i] = b.false_leaf();
    } else if (const auto* l = std::get_if<LiteralLeaf>(&n)) {
      to[i] = b.literal(l->literal.negated());
    } else {
      const auto& d = std::get<DecisionNode>(n);
      to[i] = b.decision(d.var, to[d.low], to[d.high]);
    }
  }
  return reduce(b.build(to[c.root()], {c.vars().begin(), c.vars().end()}));
}

Circuit explained_side(const Circuit& c, const Assignment& a) {
  for (const Var& v : c.vars()) {
    if (!a.get(v)) throw MissingVariable("instance has no value for '" + v.name() + "'");
  }
  if (evaluate(c, a)) return c;
  if (!is_decision_diagram(c)) {
    throw Unsupported(
        "instance falsifies the circuit; explaining it needs implicant checks on the "
        "negation, which is intractable for circuits with AND nodes");
  }
  return negate(c);
}

Term sr_greedy(const Circuit& c, const Assignment& a) {
  const Circuit target = explained_side(c, a);
  Term t = a.canonical_term(target.vars());
  const std::vector<Literal> order(t.begin(), t.end());
  for (const Literal& l : order) {
    Term smaller = t.without(l.var);
    if (is_implicant(target, smaller)) t = std::move(smaller);
  }
  return t;
}

TermSet sr_all(const Circuit& c, const Assignment& a, SrMethod method) {
  const Circuit target = explained_side(c, a);
  if (method == SrMethod::Filter) {
    std::vector<Term> keep;
    for (const Term& t : ip_all(target)) {
      if (a.satisfies(t)) keep.push_back(t);
    }
    return TermSet(std::move(keep));
  }

  std::vector<TermSet> sr(target.node_count());
  for (NodeId v = 0; v < target.node_count(); ++v) {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, TrueLeaf>) {
            sr[v] = TermSet{Term{}};
          } else if constexpr (std::is_same_v<T, LiteralLeaf>) {
            if (a.satisfies(Term{n.literal})) sr[v] = TermSet{Term{n.literal}};
          } else if constexpr (std::is_same_v<T, AndNode>) {
            sr[v] = combine_and(sr[n.left], sr[n.right], true);
          } else if constexpr (std::is_same_v<T, DecisionNode>) {
            const bool value = a.at(n.var);
            const NodeId taken = value ? n.high : n.low;
            const NodeId other = value ? n.low : n.high;
            std::vector<Term> out;
            for (const Term& t : sr[taken]) {
              if (!is_implicant(target, other, t)) out.push_back(t.with({n.var, value}));
            }
            const TermSet both = combine_and(sr[n.low], sr[n.high], false);
            out.insert(out.end(), both.begin(), both.end());
            sr[v] = TermSet(std::move(out));
          }
        },
        target.node(v));
  }
  return sr.back();
}

bool is_abductive_explanation(const AbductionInstance& inst, const Term& t) {
  const std::vector<Var> h = sorted_vars(inst.hypotheses);
  for (const Literal& l : t) {
    if (!sorted_contains(h, l.var)) return false;
  }
  const Circuit& f = inst.circuit;
  if (!satisfiable_with(f, f.root(), t)) return false;
  for (const Literal& l : inst.manifestation) {
    auto counter = t.conjoin(Term{l.negated()});
    if (counter && satisfiable_with(f, f.root(), *counter)) return false;
  }
  return true;
}

std::optional<Term> abduction_exists(const AbductionInstance& inst, std::size_t cap) {
  const std::vector<Var> h = sorted_vars(inst.hypotheses);
  for (const Literal& l : inst.manifestation) {
    if (sorted_contains(h, l.var)) {
      throw std::invalid_argument("manifestation mentions hypothesis '" + l.var.name() + "'");
    }
  }
  check_cap(h.size(), cap, "hypothesis set");
  return first_term_by_size(h, [&](const Term& t) { return is_abductive_explanation(inst, t); });
}

ChainCircuit cnf_to_obdd_chain(const Cnf& cnf) {
  CircuitBuilder b;
  const NodeId one = b.true_leaf();
  const NodeId zero = b.false_leaf();
  auto x = [](int j) { return Var(std::to_string(j)); };

  std::vector<NodeId> clause_nodes;
  for (const auto& clause : cnf.clauses) {
    std::vector<int> lits = clause;
    std::sort(lits.begin(), lits.end(), [](int p, int q) {
      return std::abs(p) != std::abs(q) ? std::abs(p) < std::abs(q) : p < q;
    });
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    bool tautology = false;
    for (std::size_t i = 1; i < lits.size(); ++i) tautology |= lits[i] == -lits[i - 1];
    if (tautology) {
      clause_nodes.push_back(one);
      continue;
    }
    NodeId node = zero;
    for (auto it = lits.rbegin(); it != lits.rend(); ++it) {
      node = *it > 0 ? b.decision(x(*it), node, one) : b.decision(x(-*it), one, node);
    }
    clause_nodes.push_back(node);
  }

  std::vector<Var> declared;
  NodeId chain = one;
  for (std::size_t i = clause_nodes.size(); i-- > 0;) {
    Var z("z" + std::to_string(i + 1));
    chain = b.decision(z, clause_nodes[i], chain);
    declared.push_back(std::move(z));
  }
  ChainCircuit out{Circuit{}, {}};
  for (int j = 1; j <= cnf.num_vars; ++j) out.y.push_back(x(j));
  out.y = sorted_vars(std::move(out.y));
  declared.insert(declared.end(), out.y.begin(), out.y.end());
  out.circuit = b.build(chain, std::move(declared));
  return out;
}

std::optional<Term> restricted_implicant_exists(const Circuit& c, std::span<const Var> y,
                                                std::size_t cap) {
  const std::vector<Var> vars = sorted_vars({y.begin(), y.end()});
  check_cap(vars.size(), cap, "restriction set");
  return first_term_by_size(vars, [&](const Term& t) { return is_implicant(c, t); });
}

Circuit obdd_from_models(std::span<const Var> vars, std::span<const Assignment> models) {
  CircuitBuilder b;
  std::vector<std::vector<char>> rows;
  rows.reserve(models.size());
  for (const Assignment& m : models) {
    std::vector<char> row;
    for (const Var& v : vars) row.push_back(m.at(v));
    rows.push_back(std::move(row));
  }
  std::function<NodeId(std::size_t, const std::vector<std::size_t>&)> build =
      [&](std::size_t level, const std::vector<std::size_t>& keep) -> NodeId {
    if (keep.empty()) return b.false_leaf();
    if (level == vars.size()) return b.true_leaf();
    std::vector<std::size_t> lo;
    std::vector<std::size_t> hi;
    for (std::size_t r : keep) (rows[r][level] ? hi : lo).push_back(r);
    const NodeId low = build(level + 1, lo);
    const NodeId high = build(level + 1, hi);
    if (low == high) return low;
    return b.decision(vars[level], low, high);
  };
  std::vector<std::size_t> all(rows.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return b.build(build(0, all), {vars.begin(), vars.end()});
}

HypergraphCircuit hypergraph_to_circuit(const Hypergraph& h) {
  const std::vector<Var> vertices = sorted_vars(h.vertices);
  Assignment ones;
  for (const Var& v : vertices) ones.set(v, true);
  std::vector<Assignment> models;
  for (const auto& edge : h.edges) {
    if (edge.empty()) throw std::invalid_argument("hypergraph has an empty edge");
    Assignment a = ones;
    for (const Var& v : edge) {
      if (!sorted_contains(vertices, v)) {
        throw std::invalid_argument("edge vertex '" + v.name() + "' is not a vertex");
      }
      a.set(v, false);
    }
    models.push_back(std::move(a));
  }
  return {negate(obdd_from_models(vertices, models)), ones};
}

std::vector<std::vector<Var>> min_transversals_via_sr(const Hypergraph& h) {
  const HypergraphCircuit hc = hypergraph_to_circuit(h);
  std::vector<std::vector<Var>> out;
  for (const Term& t : sr_all(hc.negated, hc.all_ones)) {
    std::vector<Var> set;
    for (const Literal& l : t) set.push_back(l.var);
    out.push_back(std::move(set));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

}  // namespace decpi
