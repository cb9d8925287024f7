#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "decpi/error.hpp"
#include "decpi/formats.hpp"
#include "decpi/oracle.hpp"
#include "decpi/queries.hpp"
#include "creatures.hpp"

using namespace decpi;
using decpi::testing::creatures;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(DECPI_TEST_DATA) + "/" + name);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

template <class F>
std::size_t parse_error_line(F&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no ParseError";
  return 0;
}

}  // namespace

TEST(NativeFormat, CreaturesFileMatchesBuilder) {
  const Circuit c = parse_circuit(slurp("creatures.dnnf"));
  EXPECT_EQ(c, creatures().circuit);
  EXPECT_EQ(print_circuit(c), slurp("creatures.dnnf"));
}

TEST(NativeFormat, RoundTripsRandomCircuits) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Circuit c = oracle::random_unreduced_circuit(seed, 6, 30);
    EXPECT_EQ(parse_circuit(print_circuit(c)), c) << seed;
  }
}

TEST(NativeFormat, KeepsDeclaredButUnusedVariables) {
  const Circuit c = parse_circuit("dec-dnnf 1 2\nvars a b\nT\n");
  EXPECT_EQ(c.vars().size(), 2u);
  EXPECT_EQ(count_models(c), 4);
}

TEST(NativeFormat, NaryAndIsBinarized) {
  const Circuit c = parse_circuit("dec-dnnf 4 3\nvars a b c\nL a\nL -b\nL c\nA 0 1 2\n");
  EXPECT_EQ(count_models(c), 1);
  EXPECT_TRUE(std::holds_alternative<AndNode>(c.node(c.root())));
}

TEST(NativeFormat, BlankLinesAreIgnored) {
  EXPECT_NO_THROW(parse_circuit("\ndec-dnnf 1 0\n\nvars\n\nF\n\n"));
}

TEST(NativeFormat, SyntaxErrorsCarryLineNumbers) {
  EXPECT_EQ(parse_error_line([] { parse_circuit("dec-dnnf 2 1\nvars x\nL x\nQ 0\n"); }), 4u);
  EXPECT_EQ(parse_error_line([] { parse_circuit("dec-dnnf 2 1\nvars x\nL x\nA 0 1\n"); }), 4u);
  EXPECT_EQ(parse_error_line([] { parse_circuit("dec-dnnf 1 1\nvars x\nD x 0\n"); }), 3u);
  EXPECT_EQ(parse_error_line([] { parse_circuit("dnnf 1 1\n"); }), 1u);
  EXPECT_EQ(parse_error_line([] { parse_circuit("dec-dnnf 1 2\nvars x\nT\n"); }), 2u);
  EXPECT_EQ(parse_error_line([] { parse_circuit("dec-dnnf 1 1\nvars x\nL x=\n"); }), 3u);
  EXPECT_THROW(parse_circuit(""), ParseError);
  EXPECT_THROW(parse_circuit("dec-dnnf 3 1\nvars x\nT\n"), ParseError);
}

TEST(NativeFormat, StructuralProblemsAreNotSyntaxErrors) {
  EXPECT_THROW(parse_circuit(slurp("invalid_and.dnnf")), InvalidCircuit);
  EXPECT_THROW(parse_circuit("dec-dnnf 2 1\nvars x\nL x\nD x 0 0\n"), InvalidCircuit);
  EXPECT_THROW(parse_circuit("dec-dnnf 1 1\nvars x\nL y\n"), InvalidCircuit);
  EXPECT_THROW(parse_circuit(slurp("malformed.dnnf")), ParseError);
}

TEST(C2d, ImportsDecisionOrNodes) {
  // x1 ? x2 : ¬x2, written with c2d's O-node convention.
  const char* text =
      "nnf 7 6 2\n"
      "L 1\n"
      "L 2\n"
      "A 2 0 1\n"
      "L -1\n"
      "L -2\n"
      "A 2 3 4\n"
      "O 1 2 2 5\n";
  const Circuit c = import_c2d_nnf(text);
  EXPECT_EQ(count_models(c), 2);
  EXPECT_TRUE(evaluate(c, parse_assignment("1=1,2=1")));
  EXPECT_TRUE(evaluate(c, parse_assignment("1=0,2=0")));
  EXPECT_FALSE(evaluate(c, parse_assignment("1=0,2=1")));
  EXPECT_TRUE(std::holds_alternative<DecisionNode>(c.node(c.root())));
}

TEST(C2d, CommentsAndConstants) {
  const Circuit t = import_c2d_nnf("c comment\nnnf 1 0 3\nA 0\n");
  EXPECT_EQ(count_models(t), 8);
  const Circuit f = import_c2d_nnf("nnf 1 0 1\nO 0 0\n");
  EXPECT_EQ(count_models(f), 0);
}

TEST(C2d, RejectsNonDecisionOr) {
  EXPECT_THROW(import_c2d_nnf("nnf 3 2 2\nL 1\nL 2\nO 0 2 0 1\n"), UnsupportedStructure);
  EXPECT_THROW(import_c2d_nnf("nnf 3 2 2\nL 1\nL 2\nO 1 2 0 1\n"), UnsupportedStructure);
  EXPECT_THROW(import_c2d_nnf("nnf 1 0 1\nL 3\n"), ParseError);
}

TEST(Assignment, Parse) {
  const Assignment a = parse_assignment("h=1, b=0,p=1");
  EXPECT_EQ(a.size(), 3u);
  EXPECT_TRUE(a.at(Var("h")));
  EXPECT_FALSE(a.at(Var("b")));
  EXPECT_THROW(parse_assignment("h=2"), ParseError);
  EXPECT_THROW(parse_assignment("h"), ParseError);
  EXPECT_THROW(parse_assignment("h=1,h=0"), ParseError);
  EXPECT_EQ(parse_assignment("").size(), 0u);
}

TEST(TermText, Parse) {
  EXPECT_EQ(parse_term("-s p"), (Term{pos("p"), neg("s")}));
  EXPECT_TRUE(parse_term("  ").empty());
  EXPECT_THROW(parse_term("p p"), ParseError);
  EXPECT_THROW(parse_term("p -p"), ParseError);
  EXPECT_THROW(parse_term("p --q"), ParseError);
}

TEST(HypergraphText, RoundTrip) {
  const Hypergraph h = parse_hypergraph("# two edges\n1 2\n\n2 3\n");
  EXPECT_EQ(h.vertices, (std::vector<Var>{Var("1"), Var("2"), Var("3")}));
  ASSERT_EQ(h.edges.size(), 2u);
  EXPECT_EQ(h.edges[1], (std::vector<Var>{Var("2"), Var("3")}));
  EXPECT_EQ(parse_hypergraph(print_hypergraph(h)).edges, h.edges);
  EXPECT_EQ(parse_hypergraph(slurp("path.hg")).edges, h.edges);
}

TEST(Dimacs, Parse) {
  const Cnf cnf = parse_dimacs("c x\np cnf 3 2\n1 -2 0\n2 3\n0\n");
  EXPECT_EQ(cnf.num_vars, 3);
  EXPECT_EQ(cnf.clauses, (std::vector<std::vector<int>>{{1, -2}, {2, 3}}));
  EXPECT_EQ(parse_dimacs("p cnf 1 1\n1 0\n%\n0\n").clauses.size(), 1u);
  EXPECT_THROW(parse_dimacs("p cnf 1 1\n2 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 1 1\n1\n"), ParseError);
  EXPECT_THROW(parse_dimacs("1 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 1 2\n1 0\n"), ParseError);
  EXPECT_EQ(parse_dimacs(slurp("small.cnf")).num_vars, 3);
}
