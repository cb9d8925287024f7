#pragma once

#include <optional>
#include <vector>

#include "decpi/circuit.hpp"

namespace decpi {

/// λ: per node, the size of a set certified equal to IP(Σ_v), or -1.
class MemoTable {
 public:
  explicit MemoTable(std::size_t nodes) : lambda_(nodes, -1) {}

  long long get(NodeId v) const { return lambda_[v]; }
  void set(NodeId v, long long value) { lambda_[v] = value; }
  std::size_t size() const noexcept { return lambda_.size(); }

 private:
  std::vector<long long> lambda_;
};

/// Node sequence from the root downward along parent-child edges.
using Path = std::vector<NodeId>;

struct Found {
  Term term;  // in IP(Σ_last) but not derivable from the set passed down to it
  Path path;
};

/// nullopt means the given set is complete.
using MissingResult = std::optional<Found>;

enum class ChildOrder {
  HighFirst,  // decision nodes: 1-child, then 0-child
  LowFirst,
};

struct MissingIpOptions {
  /// Visiting order at decision nodes. AND nodes always go left, then right.
  ChildOrder decision_order = ChildOrder::HighFirst;
  /// Check S ⊆ IP(Σ_v) at every call. Expensive.
#ifdef NDEBUG
  bool check_promises = false;
#else
  bool check_promises = true;
#endif
};

/// A prime implicant of the satisfiable Σ_node. The satisfying assignment
/// prefers 0-children and sets free variables to 0; literals are then dropped
/// in variable order while the rest still entails Σ_node.
Term generate_ip(const Circuit& c, NodeId node);
inline Term generate_ip(const Circuit& c) { return generate_ip(c, c.root()); }

/// Decides whether S = IP(Σ_node) for S ⊆ IP(Σ_node), on a reduced circuit.
/// `path` holds the ancestors of `node` and is restored before returning.
MissingResult missing_ip(const Circuit& c, NodeId node, const TermSet& s, Path& path,
                         MemoTable& memo, const MissingIpOptions& options = {});

/// Lifts t ∈ IP(Σ_last(path)) to a prime implicant of the whole circuit.
Term propagate(const Circuit& c, Term t, const Path& path);

/// A prime implicant of the reduced circuit outside S, or nullopt if S is
/// already all of IP(Σ). Uses a fresh memo table.
std::optional<Term> another_ip(const Circuit& c, const TermSet& s,
                               const MissingIpOptions& options = {});

/// Calls another_ip repeatedly, accumulating what it returns.
class IpEnumerator {
 public:
  /// Reduces `c` if needed.
  explicit IpEnumerator(const Circuit& c, MissingIpOptions options = {});

  std::optional<Term> next();
  const TermSet& found() const noexcept { return found_; }
  const Circuit& circuit() const noexcept { return circuit_; }

 private:
  Circuit circuit_;
  MissingIpOptions options_;
  TermSet found_;
  bool done_ = false;
};

/// The first min(k, |IP|) prime implicants in discovery order.
std::vector<Term> enumerate_ip(const Circuit& c, std::optional<std::size_t> k = std::nullopt,
                               const MissingIpOptions& options = {});

}  // namespace decpi
