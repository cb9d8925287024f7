#pragma once

#include <optional>
#include <vector>

#include "decpi/circuit.hpp"
#include "decpi/formats.hpp"

namespace decpi {

/// True when no AND node is reachable (decision trees, OBDDs, FBDDs).
bool is_decision_diagram(const Circuit& c);

/// ¬f for a decision diagram, by swapping the 0- and 1-leaves and negating
/// literal leaves. Throws Unsupported on circuits with AND nodes.
Circuit negate(const Circuit& c);

/// The function a sufficient reason is taken from: f when a satisfies f,
/// otherwise ¬f (decision diagrams only; throws Unsupported for other
/// circuits). `a` must cover the declared variables; extra ones are ignored.
Circuit explained_side(const Circuit& c, const Assignment& a);

/// One sufficient reason: shrink a's canonical term in variable order while
/// it still entails the explained side.
Term sr_greedy(const Circuit& c, const Assignment& a);

enum class SrMethod {
  Recursive,  // node-by-node decomposition
  Filter,     // ip_all, keep the terms a satisfies
};

/// Every sufficient reason of `a`.
TermSet sr_all(const Circuit& c, const Assignment& a, SrMethod method = SrMethod::Recursive);

struct AbductionInstance {
  Circuit circuit;
  std::vector<Var> hypotheses;
  Term manifestation;
};

inline constexpr std::size_t kDefaultSearchCap = 24;

/// f ∧ t is satisfiable and f ∧ t ⊨ m, with var(t) ⊆ H.
bool is_abductive_explanation(const AbductionInstance& inst, const Term& t);

/// Searches H-terms by increasing size, so a returned explanation is
/// subset-minimal. Throws CapExceeded when |H| > cap.
std::optional<Term> abduction_exists(const AbductionInstance& inst,
                                     std::size_t cap = kDefaultSearchCap);

struct ChainCircuit {
  Circuit circuit;
  std::vector<Var> y;  // variables of the CNF
};

/// Decision chain over fresh z1..zm: step i tests z_i, with the clause
/// OBDD of clause i on its 0-branch and step i+1 on its 1-branch; the last
/// step continues into the 1-leaf. Clause variables are named by their
/// decimal index and ordered after all z variables.
ChainCircuit cnf_to_obdd_chain(const Cnf& cnf);

/// A subset-minimal implicant whose variables all lie in `y`, if any.
/// Throws CapExceeded when |y| > cap.
std::optional<Term> restricted_implicant_exists(const Circuit& c, std::span<const Var> y,
                                                std::size_t cap = kDefaultSearchCap);

/// Reduced OBDD, in the order of `vars`, whose models are exactly `models`
/// (each model is read on `vars`).
Circuit obdd_from_models(std::span<const Var> vars, std::span<const Assignment> models);

struct HypergraphCircuit {
  Circuit negated;   // ¬f, where the models of f are the edge assignments
  Assignment all_ones;
};

/// The edge assignment of E sets exactly the vertices of E to 0.
HypergraphCircuit hypergraph_to_circuit(const Hypergraph& h);

/// Minimal transversals, decoded from the sufficient reasons of the all-ones
/// assignment for ¬f. Sorted by size, then lexicographically.
std::vector<std::vector<Var>> min_transversals_via_sr(const Hypergraph& h);

}  // namespace decpi
