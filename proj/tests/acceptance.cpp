// Acceptance checks AC1-AC8. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>

#include "decpi/explain.hpp"
#include "decpi/families.hpp"
#include "decpi/oracle.hpp"
#include "decpi/pi_batch.hpp"
#include "decpi/pi_incremental.hpp"
#include "decpi/queries.hpp"
#include "creatures.hpp"

using namespace decpi;
using decpi::testing::creatures;
using decpi::testing::t;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects the first failure message of a criterion.
struct Check {
  std::ostringstream why;
  bool ok = true;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      why << what;
    }
  }
};

constexpr int kCorpus = 500;

Circuit corpus(int i) { return oracle::random_circuit(i + 1, 1 + i % 12, 60); }

std::vector<Assignment> models_of(const oracle::TruthTable& tt) {
  std::vector<Assignment> out;
  for (std::uint64_t r = 0; r < tt.rows(); ++r) {
    if (tt.values[r]) out.push_back(tt.row(r));
  }
  return out;
}

void ac1(Check& c) {
  const auto f = creatures();
  const auto ip = ip_all_nodes(f.circuit);
  c.expect(ip[f.v3] == TermSet{t("-s"), t("p")}, "IP(v3) = " + ip[f.v3].to_string());
  c.expect(ip[f.v2] == TermSet{t("b -p"), t("-b -s"), t("-b p"), t("-p -s")}, "IP(v2) = " + ip[f.v2].to_string());
  c.expect(ip[f.v1] == TermSet{t("-b -e p"), t("b -e -p"), t("-b -e -s"), t("-p -s")},
           "IP(v1) = " + ip[f.v1].to_string());
  const auto next = another_ip(f.circuit, TermSet{t("b -e h -p"), t("h -p -s"), t("-e -p -s")});
  c.expect(next == t("-b -e h -s"), "another_ip returned " + (next ? next->to_string() : "nothing"));
}

void ac2(Check& c) {
  for (int i = 0; i < kCorpus && c.ok; ++i) {
    const Circuit circ = corpus(i);
    c.expect(ip_all(circ) == oracle::tt_prime_implicants(oracle::tt_of_circuit(circ)),
             "mismatch on circuit " + std::to_string(i));
  }
}

bool all_subsets_ok(const Circuit& c, const TermSet& all) {
  for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
    std::vector<Term> pick;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (mask >> i & 1) pick.push_back(all[i]);
    }
    const TermSet s(std::move(pick));
    MemoTable memo(c.node_count());
    Path path;
    const bool complete = !missing_ip(c, c.root(), s, path, memo).has_value();
    if (complete != (s.size() == all.size())) return false;
  }
  return true;
}

void ac3(Check& c) {
  int exhaustive = 0;
  for (int i = 0; i < kCorpus && c.ok; ++i) {
    const Circuit circ = corpus(i);
    const TermSet all = ip_all(circ);
    const std::vector<Term> order = enumerate_ip(circ);
    c.expect(order.size() == all.size() && TermSet(order) == all, "enumeration differs on circuit " + std::to_string(i));
    if (exhaustive < 50 && all.size() <= 8) {
      c.expect(all_subsets_ok(circ, all), "subset contract fails on circuit " + std::to_string(i));
      ++exhaustive;
    }
  }
  c.expect(exhaustive == 50, "only " + std::to_string(exhaustive) + " circuits with at most 8 implicants");
}

double time_first_k(int n, std::size_t k) {
  const Circuit c = gadget_family(n);
  const auto start = Clock::now();
  IpEnumerator e(c);
  for (std::size_t i = 0; i < k; ++i) {
    if (!e.next()) break;
  }
  return seconds_since(start);
}

void ac4(Check& c, std::ostringstream& detail) {
  const std::vector<int> ns{10, 15, 20, 25, 30};
  std::vector<double> xs;
  std::vector<double> ys;
  for (int n : ns) {
    std::vector<double> runs;
    for (int rep = 0; rep < 3; ++rep) runs.push_back(time_first_k(n, 100));
    std::sort(runs.begin(), runs.end());
    xs.push_back(std::log(n));
    ys.push_back(std::log(runs[1]));
    detail << " n" << n << "=" << runs[1] << "s";
    if (n == 30) c.expect(runs[1] < 10.0, "n=30 took " + std::to_string(runs[1]) + " s");
  }
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / ys.size();
  double sxy = 0;
  double sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  const double slope = sxy / sxx;
  detail << " slope=" << slope;
  c.expect(slope <= 3.5, "fitted exponent " + std::to_string(slope));
}

void ac5(Check& c) {
  const auto f = creatures();
  const Assignment a3 = parse_assignment("b=1,e=1,p=0,s=0");
  for (SrMethod m : {SrMethod::Recursive, SrMethod::Filter}) {
    c.expect(sr_all(f.circuit.subcircuit(f.v1), a3, m) == TermSet{t("-p -s")}, "SR at v1");
    c.expect(sr_all(f.circuit.subcircuit(f.v2), a3, m) == TermSet{t("-p -s"), t("b -p")}, "SR at v2");
  }

  const auto tt = oracle::tt_of_circuit(f.circuit);
  const Circuit obdd = obdd_from_models(tt.vars, models_of(tt));
  const TermSet neg = sr_all(obdd, parse_assignment("h=1,b=0,p=1,s=1,e=1"));
  c.expect(neg.contains(t("e h p")) && neg.contains(t("e h s")), "SR of the negation is " + neg.to_string());

  for (int i = 0; i < 200 && c.ok; ++i) {
    const Circuit circ = corpus(i);
    const auto table = oracle::tt_of_circuit(circ);
    const Assignment a = table.row((static_cast<std::uint64_t>(i) * 2654435761u) % table.rows());
    const bool positive = evaluate(circ, a);
    const Circuit target = positive ? circ : obdd_from_models(table.vars, models_of(table));
    std::vector<Term> expected;
    for (const Term& term : oracle::tt_prime_implicants(positive ? table : oracle::complement(table))) {
      if (a.satisfies(term)) expected.push_back(term);
    }
    const TermSet got = sr_all(target, a);
    c.expect(got == TermSet(expected) && sr_all(target, a, SrMethod::Filter) == got,
             "SR mismatch on instance " + std::to_string(i));
  }
}

void ac6(Check& c) {
  for (int i = 1; i <= 100 && c.ok; ++i) {
    const Cnf cnf = oracle::random_cnf(i, 8, 10);
    const ChainCircuit ch = cnf_to_obdd_chain(cnf);
    c.expect(restricted_implicant_exists(ch.circuit, ch.y).has_value() == oracle::brute_force_sat(cnf),
             "disagreement on CNF " + std::to_string(i));
  }
}

void ac7(Check& c) {
  for (int i = 1; i <= 100 && c.ok; ++i) {
    const Hypergraph h = oracle::random_hypergraph(i, 8, 8);
    c.expect(min_transversals_via_sr(h) == oracle::tt_min_transversals(h),
             "disagreement on hypergraph " + std::to_string(i));
  }
}

void ac8(Check& c) {
  for (int i = 0; i < kCorpus && c.ok; ++i) {
    const Circuit raw = oracle::random_unreduced_circuit(i + 1, 1 + i % 12, 60);
    const Circuit r = reduce(raw);
    c.expect(reduce(r) == r, "reduce not idempotent on circuit " + std::to_string(i));
    c.expect(oracle::tt_of_circuit(r).values == oracle::tt_of_circuit(raw).values,
             "reduce changed the function of circuit " + std::to_string(i));

    const TermSet ip = ip_all(r);
    for (const Var& x : r.vars()) {
      for (bool value : {false, true}) {
        const Literal l{x, value};
        const TermSet cond = ip_all(condition(r, Term{l}));
        c.expect(cond.size() <= ip.size(), "conditioning grew the implicant set");
        std::vector<Term> restricted;
        for (const Term& term : ip) {
          if (auto s = term.conditioned(l)) restricted.push_back(*s);
        }
        c.expect(cond == TermSet(std::move(restricted)).maximal(),
                 "conditioning identity fails on circuit " + std::to_string(i) + " at " + l.to_string());
      }
    }
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_s;
    std::function<void(Check&, std::ostringstream&)> run;
  };
  const std::vector<Criterion> criteria{
      {"AC1 golden examples", 1, [](Check& c, auto&) { ac1(c); }},
      {"AC2 batch vs oracle", 300, [](Check& c, auto&) { ac2(c); }},
      {"AC3 incremental vs batch", 300, [](Check& c, auto&) { ac3(c); }},
      {"AC4 incremental delay scaling", 0, [](Check& c, auto& d) { ac4(c, d); }},
      {"AC5 sufficient reasons", 0, [](Check& c, auto&) { ac5(c); }},
      {"AC6 cnf chain reduction", 60, [](Check& c, auto&) { ac6(c); }},
      {"AC7 transversal bridge", 60, [](Check& c, auto&) { ac7(c); }},
      {"AC8 structural invariants", 0, [](Check& c, auto&) { ac8(c); }},
  };

  bool all = true;
  for (const Criterion& cr : criteria) {
    Check check;
    std::ostringstream detail;
    const auto start = Clock::now();
    try {
      cr.run(check, detail);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double took = seconds_since(start);
    if (cr.limit_s > 0) check.expect(took < cr.limit_s, "took " + std::to_string(took) + " s");
    all &= check.ok;
    std::cout << (check.ok ? "PASS " : "FAIL ") << cr.name << " (" << took << " s" << detail.str() << ")";
    if (!check.ok) std::cout << ": " << check.why.str();
    std::cout << std::endl;
  }
  return all ? 0 : 1;
}
