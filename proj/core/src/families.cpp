#include "decpi/families.hpp"

#include <stdexcept>

#include "decpi/explain.hpp"

namespace decpi {

namespace {

std::string padded(char prefix, int i, int n) {
  std::string digits = std::to_string(i);
  const std::size_t width = std::to_string(n).size();
  return prefix + std::string(width - digits.size(), '0') + digits;
}

}  // namespace

Circuit gadget_family(int n) {
  if (n < 1) throw std::invalid_argument("gadget family needs n >= 1");
  CircuitBuilder b;
  NodeId acc = 0;
  for (int i = 1; i <= n; ++i) {
    const NodeId g = b.decision(Var(padded('x', i, n)), b.literal({Var(padded('y', i, n)), true}),
                                b.true_leaf());
    acc = i == 1 ? g : b.conjoin(acc, g);
  }
  return b.build(acc);
}

Circuit chain_family(int n) {
  if (n < 2) throw std::invalid_argument("chain family needs n >= 2");
  Cnf cnf;
  cnf.num_vars = n;
  for (int i = 1; i <= n; ++i) cnf.clauses.push_back({i, i % n + 1});
  return cnf_to_obdd_chain(cnf).circuit;
}

}  // namespace decpi
