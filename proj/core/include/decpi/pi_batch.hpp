#pragma once

#include "decpi/circuit.hpp"

namespace decpi {

/// Pairwise conjunctions of Su × Sw. With `disjoint` the caller promises that
/// no two terms share a variable and the products are returned as is;
/// otherwise contradictory pairs are dropped and the result is max(·, ⊨).
TermSet combine_and(const TermSet& su, const TermSet& sw, bool disjoint);

/// Prime implicants of the decision node (¬x ∧ Σ_low) ∨ (x ∧ Σ_high), given
/// s0 = IP(Σ_low) and s1 = IP(Σ_high).
TermSet lift_decision(const TermSet& s0, const TermSet& s1, const Var& x, const Circuit& c,
                      NodeId low, NodeId high);
/// Same, with the two branches given as separate circuits.
TermSet lift_decision(const TermSet& s0, const TermSet& s1, const Var& x, const Circuit& c0,
                      const Circuit& c1);

/// All prime implicants, by one bottom-up pass over the reduced circuit.
TermSet ip_all(const Circuit& c);
/// IP(Σ_v) for every node of an already reduced circuit, indexed by NodeId.
std::vector<TermSet> ip_all_nodes(const Circuit& c);

}  // namespace decpi
