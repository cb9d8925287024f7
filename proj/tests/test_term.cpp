#include <gtest/gtest.h>

#include "decpi/error.hpp"
#include "decpi/term.hpp"
#include "creatures.hpp"

using namespace decpi;
using decpi::testing::t;

TEST(Var, RejectsBadNames) {
  EXPECT_THROW(Var(""), std::invalid_argument);
  EXPECT_THROW(Var("-x"), std::invalid_argument);
  EXPECT_THROW(Var("a b"), std::invalid_argument);
  EXPECT_NO_THROW(Var("x_1"));
}

TEST(Literal, NegationIsAnInvolution) {
  const Literal l = neg("p");
  EXPECT_EQ(l.negated().negated(), l);
  EXPECT_NE(l.negated(), l);
  EXPECT_EQ(l.to_string(), "-p");
}

TEST(Term, CanonicalOrderAndDuplicates) {
  const Term a{pos("s"), neg("b"), pos("s")};
  EXPECT_EQ(a.to_string(), "-b s");
  EXPECT_EQ(a.size(), 2u);
  EXPECT_THROW((Term{pos("x"), neg("x")}), std::invalid_argument);
  EXPECT_FALSE(Term::make({pos("x"), neg("x")}).has_value());
}

TEST(Term, EmptyTermIsNeutral) {
  const Term e;
  EXPECT_EQ(e.to_string(), "");
  EXPECT_EQ(*t("-p s").conjoin(e), t("-p s"));
  EXPECT_TRUE(t("-p s").entails(e));
  EXPECT_FALSE(e.entails(t("p")));
}

TEST(Term, ConjoinDetectsContradiction) {
  EXPECT_EQ(*t("a -c").conjoin(t("b -c")), t("a b -c"));
  EXPECT_FALSE(t("a").conjoin(t("-a")).has_value());
}

TEST(Term, RestrictAndCondition) {
  const std::vector<Var> vars{Var("b"), Var("s")};
  EXPECT_EQ(t("-b h -p s").restricted_to(vars), t("-b s"));
  EXPECT_EQ(*t("-b s").conditioned(pos("s")), t("-b"));
  EXPECT_FALSE(t("-b s").conditioned(neg("s")).has_value());
  EXPECT_EQ(*t("-b s").conditioned(pos("x")), t("-b s"));
}

TEST(TermSet, PrintedOrderPutsNegativeFirst) {
  const TermSet s{t("p"), t("-s"), t("-b -p"), t("")};
  std::vector<std::string> printed;
  for (const Term& x : s) printed.push_back(x.to_string());
  EXPECT_EQ(printed, (std::vector<std::string>{"", "-b -p", "-s", "p"}));
}

TEST(TermSet, ComparePrintedMatchesStringComparison) {
  const std::vector<Term> terms{t("a"), t("a b"), t("ab"), t("-a"), t("-a b"), t("-ab"), t(""), t("a -b")};
  for (const Term& x : terms) {
    for (const Term& y : terms) {
      const int expect = x.to_string().compare(y.to_string());
      const int got = compare_printed(x, y);
      EXPECT_EQ(expect < 0, got < 0) << x.to_string() << " vs " << y.to_string();
      EXPECT_EQ(expect == 0, got == 0) << x.to_string() << " vs " << y.to_string();
    }
  }
}

TEST(TermSet, MaximalDropsEntailingTerms) {
  const TermSet s{t("-p"), t("-p -s"), t("p s"), t("s"), t("-b p")};
  EXPECT_EQ(s.maximal(), (TermSet{t("-p"), t("s"), t("-b p")}));
  EXPECT_TRUE(s.subsumes(t("-p x")));
  EXPECT_FALSE(s.subsumes(t("p")));
}

TEST(TermSet, SetOperations) {
  const TermSet a{t("x"), t("y"), t("z")};
  const TermSet b{t("y")};
  EXPECT_EQ(a.minus(b), (TermSet{t("x"), t("z")}));
  EXPECT_TRUE(b.is_subset_of(a));
  EXPECT_FALSE(a.is_subset_of(b));
  TermSet c = b;
  EXPECT_FALSE(c.insert(t("y")));
  EXPECT_TRUE(c.erase(t("y")));
  EXPECT_TRUE(c.empty());
}

TEST(Assignment, SatisfiesAndCanonicalTerm) {
  Assignment a{{Var("b"), false}, {Var("h"), true}};
  EXPECT_TRUE(a.satisfies(t("-b h")));
  EXPECT_FALSE(a.satisfies(t("b")));
  EXPECT_FALSE(a.satisfies(t("x")));
  const std::vector<Var> vars{Var("b"), Var("h")};
  EXPECT_EQ(a.canonical_term(vars), t("-b h"));
  EXPECT_EQ(a.to_string(), "b=0,h=1");
  EXPECT_THROW(a.at(Var("z")), MissingVariable);
}
