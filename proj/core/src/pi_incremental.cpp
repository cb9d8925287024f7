#include "decpi/pi_incremental.hpp"

#include <stdexcept>

#include "decpi/pi_batch.hpp"
#include "decpi/queries.hpp"

namespace decpi {

namespace {

struct PathGuard {
  Path& path;
  PathGuard(Path& p, NodeId v) : path(p) { path.push_back(v); }
  ~PathGuard() { path.pop_back(); }
};

void check_subset_of_ip(const Circuit& c, NodeId node, const TermSet& s) {
  for (const Term& t : s) {
    if (!is_prime_implicant(c, node, t)) {
      throw PromiseViolation("'" + t.to_string() + "' is not a prime implicant of node " +
                             std::to_string(node));
    }
  }
}

}  // namespace

Term generate_ip(const Circuit& c, NodeId node) {
  if (!c.satisfiable(node)) throw PromiseViolation("generate_ip on an unsatisfiable circuit");

  Assignment a;
  std::vector<char> seen(node + 1, 0);
  std::vector<NodeId> stack{node};
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    if (seen[v]) continue;
    seen[v] = 1;
    const Node& n = c.node(v);
    if (const auto* l = std::get_if<LiteralLeaf>(&n)) {
      a.set(l->literal.var, l->literal.positive);
    } else if (const auto* x = std::get_if<AndNode>(&n)) {
      stack.push_back(x->right);
      stack.push_back(x->left);
    } else if (const auto* d = std::get_if<DecisionNode>(&n)) {
      const bool high = !c.satisfiable(d->low);
      a.set(d->var, high);
      stack.push_back(high ? d->high : d->low);
    }
  }

  std::vector<Literal> lits;
  for (const Var& v : c.vars_of(node)) lits.push_back({v, a.get(v).value_or(false)});
  Term t(std::move(lits));
  // One pass suffices: if t - l is not an implicant, no subterm of it is.
  const std::vector<Literal> order(t.begin(), t.end());
  for (const Literal& l : order) {
    Term smaller = t.without(l.var);
    if (is_implicant(c, node, smaller)) t = std::move(smaller);
  }
  return t;
}

MissingResult missing_ip(const Circuit& c, NodeId node, const TermSet& s, Path& path,
                         MemoTable& memo, const MissingIpOptions& options) {
  PathGuard guard(path, node);
  if (memo.get(node) == static_cast<long long>(s.size())) return std::nullopt;
  if (options.check_promises) check_subset_of_ip(c, node, s);

  if (s.empty()) {
    if (!c.satisfiable(node)) {
      memo.set(node, 0);
      return std::nullopt;
    }
    return Found{generate_ip(c, node), path};
  }

  const Node& n = c.node(node);
  if (const auto* a = std::get_if<AndNode>(&n)) {
    TermSet su;
    TermSet sw;
    for (const Term& t : s) {
      su.insert(t.restricted_to(c.vars_of(a->left)));
      sw.insert(t.restricted_to(c.vars_of(a->right)));
    }
    if (auto r = missing_ip(c, a->left, su, path, memo, options)) return r;
    if (auto r = missing_ip(c, a->right, sw, path, memo, options)) return r;
    const TermSet star = combine_and(su, sw, true);
    if (star != s) {
      const TermSet missing = star.minus(s);
      if (missing.empty()) throw PromiseViolation("set is not contained in IP at node " + std::to_string(node));
      return Found{missing[0], path};
    }
  } else if (const auto* d = std::get_if<DecisionNode>(&n)) {
    TermSet su;
    TermSet sw;
    TermSet rest;
    for (const Term& t : s) {
      const auto value = t.value_of(d->var);
      if (value) {
        (*value ? sw : su).insert(t.without(d->var));
        continue;
      }
      rest.insert(t);
      if (is_prime_implicant(c, d->low, t)) su.insert(t);
      if (is_prime_implicant(c, d->high, t)) sw.insert(t);
    }
    const bool high_first = options.decision_order == ChildOrder::HighFirst;
    const NodeId first = high_first ? d->high : d->low;
    const NodeId second = high_first ? d->low : d->high;
    if (auto r = missing_ip(c, first, first == d->high ? sw : su, path, memo, options)) return r;
    if (auto r = missing_ip(c, second, second == d->high ? sw : su, path, memo, options)) return r;
    const TermSet star = combine_and(su, sw, false);
    if (star != rest) {
      const TermSet missing = star.minus(rest);
      if (missing.empty()) throw PromiseViolation("set is not contained in IP at node " + std::to_string(node));
      return Found{missing[0], path};
    }
  }

  memo.set(node, static_cast<long long>(s.size()));
  return std::nullopt;
}

Term propagate(const Circuit& c, Term t, const Path& path) {
  for (std::size_t i = path.size(); i-- > 1;) {
    const NodeId parent = path[i - 1];
    const NodeId child = path[i];
    const Node& n = c.node(parent);
    if (const auto* a = std::get_if<AndNode>(&n)) {
      const NodeId sibling = child == a->left ? a->right : a->left;
      t = *t.conjoin(generate_ip(c, sibling));
    } else if (const auto* d = std::get_if<DecisionNode>(&n)) {
      const bool came_high = child == d->high;
      const NodeId other = came_high ? d->low : d->high;
      if (!is_implicant(c, other, t)) t = t.with({d->var, came_high});
    } else {
      throw std::invalid_argument("path goes through a leaf");
    }
  }
  return t;
}

std::optional<Term> another_ip(const Circuit& c, const TermSet& s, const MissingIpOptions& options) {
  if (!c.is_reduced()) throw PromiseViolation("another_ip needs a reduced circuit");
  MemoTable memo(c.node_count());
  Path path;
  MissingResult r = missing_ip(c, c.root(), s, path, memo, options);
  if (!r) return std::nullopt;
  return propagate(c, std::move(r->term), r->path);
}

IpEnumerator::IpEnumerator(const Circuit& c, MissingIpOptions options)
    : circuit_(c.is_reduced() ? c : reduce(c)), options_(options) {}

std::optional<Term> IpEnumerator::next() {
  if (done_) return std::nullopt;
  std::optional<Term> t = another_ip(circuit_, found_, options_);
  if (!t) {
    done_ = true;
    return std::nullopt;
  }
  if (!found_.insert(*t)) throw std::logic_error("enumerator produced '" + t->to_string() + "' twice");
  return t;
}

std::vector<Term> enumerate_ip(const Circuit& c, std::optional<std::size_t> k,
                               const MissingIpOptions& options) {
  std::vector<Term> out;
  IpEnumerator e(c, options);
  while (!k || out.size() < *k) {
    auto t = e.next();
    if (!t) break;
    out.push_back(std::move(*t));
  }
  return out;
}

}  // namespace decpi
