#include "decpi/oracle.hpp"

#include <algorithm>
#include <random>

#include "decpi/queries.hpp"

namespace decpi::oracle {

namespace {

std::string var_name(int i) {
  std::string s = std::to_string(i);
  return "x" + std::string(s.size() < 2 ? 2 - s.size() : 0, '0') + s;
}

// Base-3 odometer over n digits: 0 = negative, 1 = positive, 2 = absent.
bool advance(std::vector<int>& digits) {
  for (int& d : digits) {
    if (++d < 3) return true;
    d = 0;
  }
  return false;
}

}  // namespace

Assignment TruthTable::row(std::uint64_t index) const {
  Assignment a;
  for (std::size_t j = 0; j < vars.size(); ++j) a.set(vars[j], ((index >> j) & 1) != 0);
  return a;
}

TruthTable tt_of_circuit(const Circuit& c) {
  if (c.vars().size() > kMaxTableVars) {
    throw CapExceeded("truth table needs at most " + std::to_string(kMaxTableVars) + " variables");
  }
  TruthTable tt;
  tt.vars.assign(c.vars().begin(), c.vars().end());
  const std::size_t n = tt.vars.size();

  // Bit position of every variable a node reads.
  std::vector<int> bit(c.node_count(), -1);
  auto position = [&](const Var& v) {
    return static_cast<int>(std::lower_bound(tt.vars.begin(), tt.vars.end(), v) - tt.vars.begin());
  };
  for (NodeId i = 0; i < c.node_count(); ++i) {
    if (const auto* l = std::get_if<LiteralLeaf>(&c.node(i))) bit[i] = position(l->literal.var);
    if (const auto* d = std::get_if<DecisionNode>(&c.node(i))) bit[i] = position(d->var);
  }

  tt.values.resize(std::size_t{1} << n);
  std::vector<char> value(c.node_count());
  for (std::uint64_t row = 0; row < tt.values.size(); ++row) {
    for (NodeId i = 0; i < c.node_count(); ++i) {
      const Node& node = c.node(i);
      const bool x = bit[i] >= 0 && ((row >> bit[i]) & 1) != 0;
      switch (node.index()) {
        case 0: value[i] = 0; break;
        case 1: value[i] = 1; break;
        case 2: value[i] = x == std::get<LiteralLeaf>(node).literal.positive; break;
        case 3: {
          const auto& a = std::get<AndNode>(node);
          value[i] = value[a.left] && value[a.right];
          break;
        }
        default: {
          const auto& d = std::get<DecisionNode>(node);
          value[i] = x ? value[d.high] : value[d.low];
        }
      }
    }
    tt.values[row] = value[c.root()] != 0;
  }
  return tt;
}

TruthTable complement(const TruthTable& tt) {
  TruthTable out = tt;
  out.values.flip();
  return out;
}

TermSet tt_prime_implicants(const TruthTable& tt) {
  const std::size_t n = tt.vars.size();
  if (n > kMaxPrimeVars) {
    throw CapExceeded("prime implicant oracle needs at most " + std::to_string(kMaxPrimeVars) +
                      " variables");
  }
  std::vector<std::uint64_t> p3(n + 1, 1);
  for (std::size_t j = 1; j <= n; ++j) p3[j] = p3[j - 1] * 3;

  // implicant[code]: every row matching the partial assignment is a model.
  std::vector<bool> implicant(p3[n]);
  std::vector<int> digits(n, 0);
  for (std::uint64_t code = 0; code < p3[n]; ++code, advance(digits)) {
    std::size_t j = 0;
    while (j < n && digits[j] != 2) ++j;
    if (j == n) {
      std::uint64_t row = 0;
      for (std::size_t k = 0; k < n; ++k) row |= std::uint64_t(digits[k]) << k;
      implicant[code] = tt.values[row];
    } else {
      implicant[code] = implicant[code - 2 * p3[j]] && implicant[code - p3[j]];
    }
  }

  std::vector<Term> primes;
  std::fill(digits.begin(), digits.end(), 0);
  for (std::uint64_t code = 0; code < p3[n]; ++code, advance(digits)) {
    if (!implicant[code]) continue;
    bool prime = true;
    std::vector<Literal> lits;
    for (std::size_t j = 0; j < n && prime; ++j) {
      if (digits[j] == 2) continue;
      prime = !implicant[code + (2 - digits[j]) * p3[j]];
      lits.push_back({tt.vars[j], digits[j] == 1});
    }
    if (prime) primes.emplace_back(std::move(lits));
  }
  return TermSet(std::move(primes));
}

std::vector<std::vector<Var>> tt_min_transversals(const Hypergraph& h) {
  const std::vector<Var> vertices = sorted_vars(h.vertices);
  const std::size_t n = vertices.size();
  if (n > kMaxVertices) {
    throw CapExceeded("transversal oracle needs at most " + std::to_string(kMaxVertices) + " vertices");
  }
  std::vector<std::uint32_t> edges;
  for (const auto& e : h.edges) {
    std::uint32_t mask = 0;
    for (const Var& v : e) {
      mask |= 1u << (std::lower_bound(vertices.begin(), vertices.end(), v) - vertices.begin());
    }
    edges.push_back(mask);
  }
  auto hits = [&](std::uint32_t s) {
    return std::all_of(edges.begin(), edges.end(), [&](std::uint32_t e) { return (e & s) != 0; });
  };
  std::vector<std::vector<Var>> out;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    if (!hits(s)) continue;
    bool minimal = true;
    for (std::size_t j = 0; j < n && minimal; ++j) {
      if ((s >> j) & 1) minimal = !hits(s & ~(1u << j));
    }
    if (!minimal) continue;
    std::vector<Var> set;
    for (std::size_t j = 0; j < n; ++j) {
      if ((s >> j) & 1) set.push_back(vertices[j]);
    }
    out.push_back(std::move(set));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

bool brute_force_sat(const Cnf& cnf) {
  const int n = cnf.num_vars;
  for (std::uint64_t row = 0; row < (std::uint64_t{1} << n); ++row) {
    const bool sat = std::all_of(cnf.clauses.begin(), cnf.clauses.end(), [&](const auto& clause) {
      return std::any_of(clause.begin(), clause.end(), [&](int lit) {
        const bool value = ((row >> (std::abs(lit) - 1)) & 1) != 0;
        return lit > 0 ? value : !value;
      });
    });
    if (sat) return true;
  }
  return false;
}

Circuit random_unreduced_circuit(std::uint64_t seed, int nvars, int max_nodes) {
  std::mt19937_64 rng(seed);
  auto coin = [&](double p) { return std::bernoulli_distribution(p)(rng); };
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };

  std::vector<Var> all;
  for (int i = 0; i < nvars; ++i) all.emplace_back(var_name(i));

  CircuitBuilder b;
  std::vector<NodeId> pool;

  // Top-down: each call may use only `avail`, so ANDs stay decomposable and
  // decision variables stay fresh.
  auto gen = [&](auto&& self, std::vector<Var> avail, int depth) -> NodeId {
    if (!pool.empty() && coin(0.2)) {
      const NodeId reuse = pool[pick(pool.size())];
      if (is_sorted_subset(b.vars_of(reuse), avail)) return reuse;
    }
    const bool leaf = avail.empty() || static_cast<int>(b.size()) >= max_nodes ||
                      coin(std::min(0.5, 0.03 * depth));
    NodeId id;
    if (leaf) {
      if (!avail.empty() && coin(0.6)) {
        id = b.literal({avail[pick(avail.size())], coin(0.5)});
      } else {
        id = coin(0.85) ? b.true_leaf() : b.false_leaf();
      }
    } else if (avail.size() >= 2 && coin(0.35)) {
      std::shuffle(avail.begin(), avail.end(), rng);
      const std::size_t cut = 1 + pick(avail.size() - 1);
      std::vector<Var> left(avail.begin(), avail.begin() + cut);
      std::vector<Var> right(avail.begin() + cut, avail.end());
      const NodeId l = self(self, sorted_vars(std::move(left)), depth + 1);
      const NodeId r = self(self, sorted_vars(std::move(right)), depth + 1);
      id = b.conjoin(l, r);
    } else {
      const std::size_t k = pick(avail.size());
      const Var x = avail[k];
      avail.erase(avail.begin() + k);
      const NodeId low = self(self, avail, depth + 1);
      const NodeId high = self(self, avail, depth + 1);
      id = b.decision(x, low, high);
    }
    pool.push_back(id);
    return id;
  };
  const NodeId root = gen(gen, all, 0);
  return b.build(root, all);
}

Circuit random_circuit(std::uint64_t seed, int nvars, int max_nodes) {
  return reduce(random_unreduced_circuit(seed, nvars, max_nodes));
}

Cnf random_cnf(std::uint64_t seed, int max_vars, int max_clauses) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  Cnf cnf;
  cnf.num_vars = uniform(1, max_vars);
  const int m = uniform(1, max_clauses);
  for (int i = 0; i < m; ++i) {
    std::vector<int> clause;
    const int len = uniform(1, std::min(3, cnf.num_vars));
    for (int k = 0; k < len; ++k) {
      const int v = uniform(1, cnf.num_vars);
      clause.push_back(uniform(0, 1) ? v : -v);
    }
    cnf.clauses.push_back(std::move(clause));
  }
  return cnf;
}

Hypergraph random_hypergraph(std::uint64_t seed, int max_vertices, int max_edges) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int n = uniform(1, max_vertices);
  const int m = uniform(1, max_edges);
  Hypergraph h;
  for (int i = 1; i <= n; ++i) h.vertices.emplace_back(std::to_string(i));
  h.vertices = sorted_vars(std::move(h.vertices));
  for (int e = 0; e < m; ++e) {
    std::vector<Var> edge;
    while (edge.empty()) {
      for (const Var& v : h.vertices) {
        if (uniform(0, 2) == 0) edge.push_back(v);
      }
    }
    h.edges.push_back(sorted_vars(std::move(edge)));
  }
  return h;
}

}  // namespace decpi::oracle
