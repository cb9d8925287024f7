#pragma once

#include <span>

#include "decpi/circuit.hpp"

namespace decpi {

/// f(a). Throws MissingVariable when `a` leaves a variable of Σ_node unset.
bool evaluate(const Circuit& c, NodeId node, const Assignment& a);
inline bool evaluate(const Circuit& c, const Assignment& a) { return evaluate(c, c.root(), a); }

/// Models over `over`, which must contain var(c) (throws std::invalid_argument).
BigCount count_models(const Circuit& c, std::span<const Var> over);
/// Models over the declared variables.
BigCount count_models(const Circuit& c);

inline bool is_satisfiable(const Circuit& c) { return c.satisfiable(); }

/// Replaces every unsatisfiable node by the 0-leaf. Declared variables are kept.
Circuit reduce(const Circuit& c);

/// Circuit for f|t over the declared variables minus var(t), reduced.
Circuit condition(const Circuit& c, const Term& t);

/// Is Σ_node ∧ t satisfiable? One pass over Σ_node.
bool satisfiable_with(const Circuit& c, NodeId node, const Term& t);

/// t ⊨ Σ_node, decided by counting the models of Σ_node|t.
bool is_implicant(const Circuit& c, NodeId node, const Term& t);
inline bool is_implicant(const Circuit& c, const Term& t) { return is_implicant(c, c.root(), t); }

bool is_prime_implicant(const Circuit& c, NodeId node, const Term& t);
inline bool is_prime_implicant(const Circuit& c, const Term& t) {
  return is_prime_implicant(c, c.root(), t);
}

}  // namespace decpi
