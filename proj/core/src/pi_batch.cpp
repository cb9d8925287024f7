#include "decpi/pi_batch.hpp"

#include <algorithm>
#include <stdexcept>

#include "decpi/queries.hpp"

namespace decpi {

namespace {

template <class EntailsHigh, class EntailsLow>
TermSet lift(const TermSet& s0, const TermSet& s1, const Var& x, EntailsHigh entails_high,
             EntailsLow entails_low) {
  std::vector<Term> out;
  out.reserve(s0.size() + s1.size());
  for (const Term& t : s0) {
    if (!entails_high(t)) out.push_back(t.with({x, false}));
  }
  for (const Term& t : s1) {
    if (!entails_low(t)) out.push_back(t.with({x, true}));
  }
  const TermSet both = combine_and(s0, s1, false);
  out.insert(out.end(), both.begin(), both.end());
  return TermSet(std::move(out));
}

}  // namespace

TermSet combine_and(const TermSet& su, const TermSet& sw, bool disjoint) {
  std::vector<Term> out;
  out.reserve(su.size() * sw.size());
  for (const Term& a : su) {
    for (const Term& b : sw) {
      if (auto t = a.conjoin(b)) out.push_back(std::move(*t));
    }
  }
  TermSet products(std::move(out));
  return disjoint ? products : products.maximal();
}

TermSet lift_decision(const TermSet& s0, const TermSet& s1, const Var& x, const Circuit& c,
                      NodeId low, NodeId high) {
  return lift(
      s0, s1, x, [&](const Term& t) { return is_implicant(c, high, t); },
      [&](const Term& t) { return is_implicant(c, low, t); });
}

TermSet lift_decision(const TermSet& s0, const TermSet& s1, const Var& x, const Circuit& c0,
                      const Circuit& c1) {
  return lift(
      s0, s1, x, [&](const Term& t) { return is_implicant(c1, t); },
      [&](const Term& t) { return is_implicant(c0, t); });
}

std::vector<TermSet> ip_all_nodes(const Circuit& c) {
  std::vector<TermSet> ip(c.node_count());
  for (NodeId v = 0; v < c.node_count(); ++v) {
    std::size_t floor = 0;
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, TrueLeaf>) {
            ip[v] = TermSet{Term{}};
          } else if constexpr (std::is_same_v<T, LiteralLeaf>) {
            ip[v] = TermSet{Term{n.literal}};
          } else if constexpr (std::is_same_v<T, AndNode>) {
            ip[v] = combine_and(ip[n.left], ip[n.right], true);
            floor = std::max(ip[n.left].size(), ip[n.right].size());
          } else if constexpr (std::is_same_v<T, DecisionNode>) {
            ip[v] = lift_decision(ip[n.low], ip[n.high], n.var, c, n.low, n.high);
            floor = std::max(ip[n.low].size(), ip[n.high].size());
          }
        },
        c.node(v));
    // Conditioning never increases the number of prime implicants.
    if (c.is_reduced() && ip[v].size() < floor) {
      throw std::logic_error("prime implicant count decreased at node " + std::to_string(v));
    }
  }
  return ip;
}

TermSet ip_all(const Circuit& c) {
  if (c.is_reduced()) return std::move(ip_all_nodes(c).back());
  const Circuit r = reduce(c);
  return std::move(ip_all_nodes(r).back());
}

}  // namespace decpi
