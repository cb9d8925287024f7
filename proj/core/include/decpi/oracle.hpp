#pragma once

#include <cstdint>
#include <vector>

#include "decpi/circuit.hpp"
#include "decpi/formats.hpp"

// Brute-force ground truth. Nothing here calls into the enumeration code.
namespace decpi::oracle {

inline constexpr std::size_t kMaxTableVars = 20;
inline constexpr std::size_t kMaxPrimeVars = 20;
inline constexpr std::size_t kMaxVertices = 16;

/// Bit j of a row index is the value of vars[j].
struct TruthTable {
  std::vector<Var> vars;
  std::vector<bool> values;

  std::size_t rows() const noexcept { return values.size(); }
  Assignment row(std::uint64_t index) const;
};

/// Exhaustive evaluation over the declared variables.
TruthTable tt_of_circuit(const Circuit& c);
TruthTable complement(const TruthTable& tt);

/// Every term t with t ⊨ f that has no implicant among its one-literal
/// relaxations, found by scanning all 3^n terms.
TermSet tt_prime_implicants(const TruthTable& tt);

/// Subset-minimal hitting sets, sorted by size then lexicographically.
std::vector<std::vector<Var>> tt_min_transversals(const Hypergraph& h);

bool brute_force_sat(const Cnf& cnf);

/// Reduced dec-DNNF over variables x00, x01, ... Deterministic per seed.
Circuit random_circuit(std::uint64_t seed, int nvars, int max_nodes);
/// The same draw before reduction; may contain unsatisfiable internal nodes.
Circuit random_unreduced_circuit(std::uint64_t seed, int nvars, int max_nodes);
Cnf random_cnf(std::uint64_t seed, int max_vars, int max_clauses);
/// Vertices named 1..n; every edge is nonempty.
Hypergraph random_hypergraph(std::uint64_t seed, int max_vertices, int max_edges);

}  // namespace decpi::oracle
