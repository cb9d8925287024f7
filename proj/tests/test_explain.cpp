#include <gtest/gtest.h>

#include "decpi/explain.hpp"
#include "decpi/oracle.hpp"
#include "decpi/pi_batch.hpp"
#include "decpi/queries.hpp"
#include "creatures.hpp"

using namespace decpi;
using decpi::testing::creatures;
using decpi::testing::t;

namespace {

std::vector<Assignment> models_of(const Circuit& c) {
  const oracle::TruthTable tt = oracle::tt_of_circuit(c);
  std::vector<Assignment> out;
  for (std::uint64_t r = 0; r < tt.rows(); ++r) {
    if (tt.values[r]) out.push_back(tt.row(r));
  }
  return out;
}

// The creature circuit rewritten as an OBDD, so that its negation is available.
Circuit creatures_obdd() {
  const Circuit c = creatures().circuit;
  return obdd_from_models(c.vars(), models_of(c));
}

std::vector<std::vector<Var>> sets(std::initializer_list<std::initializer_list<const char*>> in) {
  std::vector<std::vector<Var>> out;
  for (const auto& s : in) {
    std::vector<Var> set;
    for (const char* v : s) set.emplace_back(v);
    out.push_back(std::move(set));
  }
  return out;
}

Hypergraph hypergraph(std::initializer_list<std::initializer_list<const char*>> edges,
                      std::vector<Var> vertices) {
  return {std::move(vertices), sets(edges)};
}

}  // namespace

TEST(Negate, SwapsLeaves) {
  const Circuit f = creatures_obdd();
  EXPECT_TRUE(is_decision_diagram(f));
  const Circuit g = negate(f);
  const auto a = oracle::tt_of_circuit(f);
  const auto b = oracle::tt_of_circuit(g);
  EXPECT_EQ(b.values, oracle::complement(a).values);
  EXPECT_THROW(negate(creatures().circuit), Unsupported);
}

TEST(SufficientReason, EvilBeardedInstance) {
  const auto f = creatures();
  const Assignment a = parse_assignment("b=1,e=1,p=0,s=0");
  const Circuit v1 = f.circuit.subcircuit(f.v1);
  const Circuit v2 = f.circuit.subcircuit(f.v2);
  for (SrMethod m : {SrMethod::Recursive, SrMethod::Filter}) {
    EXPECT_EQ(sr_all(v1, a, m), TermSet{t("-p -s")});
    EXPECT_EQ(sr_all(v2, a, m), (TermSet{t("-p -s"), t("b -p")}));
  }
}

TEST(SufficientReason, ConditioningCanGrowTheSet) {
  const auto f = creatures();
  const Assignment a = parse_assignment("b=1,e=1,p=0,s=0");
  const Circuit v1 = f.circuit.subcircuit(f.v1);
  std::size_t most = 0;
  for (const char* l : {"e", "-e"}) most = std::max(most, sr_all(condition(v1, t(l)), a).size());
  EXPECT_LT(sr_all(v1, a).size(), most);
}

TEST(SufficientReason, RejectedInstanceUsesNegation) {
  const Circuit f = creatures_obdd();
  const Assignment a = parse_assignment("h=1,b=0,p=1,s=1,e=1");
  EXPECT_FALSE(evaluate(f, a));
  const TermSet all = sr_all(f, a);
  EXPECT_TRUE(all.contains(t("e h p")));
  EXPECT_TRUE(all.contains(t("e h s")));
  EXPECT_EQ(all, sr_all(f, a, SrMethod::Filter));
  EXPECT_TRUE(all.contains(sr_greedy(f, a)));
}

TEST(SufficientReason, RefusesNegativeSideWithAnd) {
  const Assignment a = parse_assignment("h=1,b=0,p=1,s=1,e=1");
  EXPECT_THROW(sr_all(creatures().circuit, a), Unsupported);
  EXPECT_THROW(sr_greedy(creatures().circuit, a), Unsupported);
  EXPECT_THROW(sr_all(creatures().circuit, parse_assignment("h=1")), MissingVariable);
}

TEST(SufficientReason, Trivial) {
  CircuitBuilder b;
  const Circuit one = b.build(b.true_leaf());
  EXPECT_EQ(sr_all(one, parse_assignment("x=1")), TermSet{Term{}});
  EXPECT_EQ(sr_greedy(one, Assignment{}), Term{});
  CircuitBuilder b2;
  const Circuit x = b2.build(b2.literal(pos("x")));
  EXPECT_EQ(sr_greedy(x, parse_assignment("x=1")), t("x"));
  EXPECT_EQ(sr_greedy(x, parse_assignment("x=0")), t("-x"));
}

class SrProperties : public ::testing::TestWithParam<int> {};

TEST_P(SrProperties, AgreesWithFilteredOracle) {
  const std::uint64_t seed = GetParam();
  const Circuit c = oracle::random_circuit(seed, 1 + seed % 10, 40);
  const auto tt = oracle::tt_of_circuit(c);
  const Assignment a = tt.row((seed * 2654435761u) % tt.rows());
  const bool positive = evaluate(c, a);
  const Circuit f = positive ? c : obdd_from_models(c.vars(), models_of(c));
  const TermSet pis = oracle::tt_prime_implicants(positive ? tt : oracle::complement(tt));
  std::vector<Term> expected;
  for (const Term& term : pis) {
    if (a.satisfies(term)) expected.push_back(term);
  }
  const TermSet rec = sr_all(f, a, SrMethod::Recursive);
  EXPECT_EQ(rec, TermSet(expected));
  EXPECT_EQ(sr_all(f, a, SrMethod::Filter), rec);
  EXPECT_TRUE(rec.contains(sr_greedy(f, a)));
}

INSTANTIATE_TEST_SUITE_P(Random, SrProperties, ::testing::Range(1, 81));

TEST(Abduction, CreatureExample) {
  const AbductionInstance inst{creatures().circuit, {Var("h"), Var("b"), Var("p"), Var("s")}, t("e")};
  EXPECT_TRUE(is_abductive_explanation(inst, t("-h p")));
  EXPECT_FALSE(is_abductive_explanation(inst, t("h")));
  EXPECT_FALSE(is_abductive_explanation(inst, t("-h p e")));
  const auto found = abduction_exists(inst);
  ASSERT_TRUE(found);
  EXPECT_TRUE(is_abductive_explanation(inst, *found));
  for (const Literal& l : *found) EXPECT_FALSE(is_abductive_explanation(inst, found->without(l.var)));
}

TEST(Abduction, Trivial) {
  const Circuit c = creatures().circuit;
  EXPECT_EQ(abduction_exists({c, {Var("h")}, Term{}}), Term{});
  CircuitBuilder b;
  EXPECT_FALSE(abduction_exists({b.build(b.false_leaf(), {Var("h")}), {Var("h")}, Term{}}));
  EXPECT_THROW(abduction_exists({c, {Var("h")}, t("h")}), std::invalid_argument);
  EXPECT_THROW(abduction_exists({c, {Var("h"), Var("b")}, t("e")}, 1), CapExceeded);
}

TEST(Chain, SingleClause) {
  const ChainCircuit ch = cnf_to_obdd_chain(Cnf{2, {{1, 2}}});
  const Circuit& c = ch.circuit;
  const auto& root = std::get<DecisionNode>(c.node(c.root()));
  EXPECT_EQ(root.var, Var("z1"));
  EXPECT_TRUE(std::holds_alternative<TrueLeaf>(c.node(root.high)));
  EXPECT_EQ(ch.y, (std::vector<Var>{Var("1"), Var("2")}));
  EXPECT_TRUE(is_decision_diagram(c));
}

TEST(Chain, SatisfiableIffImplicantOverY) {
  const ChainCircuit sat = cnf_to_obdd_chain(Cnf{1, {{1}}});
  EXPECT_EQ(restricted_implicant_exists(sat.circuit, sat.y), t("1"));
  const ChainCircuit unsat = cnf_to_obdd_chain(Cnf{1, {{1}, {-1}}});
  EXPECT_FALSE(restricted_implicant_exists(unsat.circuit, unsat.y));
  const ChainCircuit taut = cnf_to_obdd_chain(Cnf{1, {{1, -1}}});
  EXPECT_EQ(restricted_implicant_exists(taut.circuit, taut.y), Term{});
}

TEST(RestrictedImplicant, Trivial) {
  const Circuit c = creatures().circuit;
  EXPECT_FALSE(restricted_implicant_exists(c, std::vector<Var>{}));
  const auto full = restricted_implicant_exists(c, c.vars());
  ASSERT_TRUE(full);
  EXPECT_TRUE(is_prime_implicant(c, *full));
  EXPECT_THROW(restricted_implicant_exists(c, c.vars(), 4), CapExceeded);
}

class ChainProperties : public ::testing::TestWithParam<int> {};

TEST_P(ChainProperties, MatchesBruteForceSat) {
  const Cnf cnf = oracle::random_cnf(GetParam(), 8, 10);
  const ChainCircuit ch = cnf_to_obdd_chain(cnf);
  const auto found = restricted_implicant_exists(ch.circuit, ch.y);
  EXPECT_EQ(found.has_value(), oracle::brute_force_sat(cnf));
}

INSTANTIATE_TEST_SUITE_P(Random, ChainProperties, ::testing::Range(1, 41));

TEST(Transversals, Examples) {
  const std::vector<Var> v123{Var("1"), Var("2"), Var("3")};
  EXPECT_EQ(min_transversals_via_sr(hypergraph({{"1", "2"}, {"2", "3"}}, v123)), sets({{"2"}, {"1", "3"}}));
  EXPECT_EQ(min_transversals_via_sr(hypergraph({{"1"}, {"2"}, {"3"}}, v123)), sets({{"1", "2", "3"}}));
  EXPECT_EQ(min_transversals_via_sr(hypergraph({{"2"}}, {Var("2")})), sets({{"2"}}));
  EXPECT_EQ(min_transversals_via_sr(hypergraph({{"1", "2"}}, {Var("1"), Var("2")})), sets({{"1"}, {"2"}}));
  EXPECT_EQ(min_transversals_via_sr(hypergraph({}, v123)), sets({{}}));
  EXPECT_THROW(hypergraph_to_circuit(hypergraph({{"4"}}, v123)), std::invalid_argument);
}

TEST(Transversals, EdgeAssignmentsAreTheModels) {
  const std::vector<Var> v123{Var("1"), Var("2"), Var("3")};
  const HypergraphCircuit hc = hypergraph_to_circuit(hypergraph({{"1", "2"}, {"2", "3"}}, v123));
  EXPECT_EQ(count_models(hc.negated), 6);
  EXPECT_FALSE(evaluate(hc.negated, parse_assignment("1=0,2=0,3=1")));
  EXPECT_TRUE(evaluate(hc.negated, hc.all_ones));
}

class TransversalProperties : public ::testing::TestWithParam<int> {};

TEST_P(TransversalProperties, MatchesBruteForce) {
  const Hypergraph h = oracle::random_hypergraph(GetParam(), 8, 8);
  EXPECT_EQ(min_transversals_via_sr(h), oracle::tt_min_transversals(h));
}

INSTANTIATE_TEST_SUITE_P(Random, TransversalProperties, ::testing::Range(1, 41));
