#include <gtest/gtest.h>

#include "mitl/error.hpp"
#include "mitl/formula.hpp"
#include "mitl/parser.hpp"

using mitl::Formula;
using mitl::NodeKind;
using mitl::parse_formula;

TEST(Parser, PrintsCaseStudyFormulas) {
  EXPECT_EQ(parse_formula("F[0,30]p1 && F[0,20]p1").str(), "(F[0,30] p1 && F[0,20] p1)");
  EXPECT_EQ(parse_formula("F[0,30](p1 -> G[0,20]p1)").str(), "F[0,30] (p1 -> G[0,20] p1)");
  EXPECT_EQ(parse_formula("G[0,27.5]((g2 && F(0,0.04] g1) -> G[0,2.5] !g2)").str(),
            "G[0,27.5] ((g2 && F(0,0.04] g1) -> G[0,2.5] !g2)");
}

TEST(Parser, Precedence) {
  Formula f = parse_formula("a || b && c -> d -> e");
  ASSERT_EQ(f.kind(), NodeKind::Implies);
  EXPECT_EQ(f.child(0).kind(), NodeKind::Or);
  EXPECT_EQ(f.child(0).child(1).kind(), NodeKind::And);
  EXPECT_EQ(f.child(1).kind(), NodeKind::Implies);
  EXPECT_EQ(parse_formula("!a && b").child(0).kind(), NodeKind::Not);
  EXPECT_EQ(parse_formula("G[0,1] a && b").kind(), NodeKind::And);
}

TEST(Parser, UnicodeAliases) {
  EXPECT_EQ(parse_formula("◇[0,40](p1 ∨ p3) ∧ □[0,5] ¬p2").str(), "(F[0,40] (p1 || p3) && G[0,5] !p2)");
  EXPECT_EQ(parse_formula("⊤ ⇒ ⊥").str(), "(true -> false)");
}

TEST(Parser, Predicates) {
  Formula f = parse_formula("G[0,30](rpm <= 4500) -> G[0,10](speed <= 85)");
  EXPECT_EQ(f.str(), "(G[0,30] (rpm <= 4500) -> G[0,10] (speed <= 85))");
  EXPECT_EQ(parse_formula("x > -1.5").predicate_expr().threshold, mitl::Rational(-3, 2));
}

TEST(Parser, GAndFAreAtomsWithoutInterval) {
  Formula f = parse_formula("G && F");
  EXPECT_EQ(f.child(0).kind(), NodeKind::Atom);
  EXPECT_EQ(f.child(0).name(), "G");
}

TEST(Parser, CommentsAndWhitespace) { EXPECT_EQ(parse_formula("# spec\n  p  # trailing\n").str(), "p"); }

TEST(Parser, ErrorsCarryPosition) {
  try {
    parse_formula("p &&\n  F[3,1] q");
    FAIL();
  } catch (const mitl::ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 4);
  }
  for (const char* bad : {"", "p &&", "F[0,1", "(p", "p q", "F[1,1] p", "F[-1,2] p", "p $"})
    EXPECT_THROW(parse_formula(bad), mitl::ParseError) << bad;
}

TEST(Formula, StructuralEqualityIgnoresSharing) {
  EXPECT_EQ(parse_formula("F[0,1](a && b)"), parse_formula("F[0,1] (a&&b)"));
  EXPECT_NE(parse_formula("F[0,1] a"), parse_formula("F[0,2] a"));
  EXPECT_NE(parse_formula("F[0,1] a"), parse_formula("F(0,1] a"));
}

TEST(Formula, SizeAndLiterals) {
  Formula f = parse_formula("F[0,1](!a && b)");
  EXPECT_EQ(f.size(), 5u);
  EXPECT_TRUE(f.child(0).child(0).is_literal());
  EXPECT_FALSE(f.child(0).is_literal());
}

// Printing then parsing gives back the same formula.
TEST(Formula, PrintParseRoundTrip) {
  for (const char* text :
       {"F[0,30] p1", "(a -> (b -> c))", "((a -> b) -> c)", "G(0,0.04] !x", "F[1,2] G[3,5] (a || !b)",
        "((speed > 100) && (rpm <= 4500))", "(true || false)", "!(a && b)", "F[0,1/3] a"}) {
    Formula f = parse_formula(text);
    EXPECT_EQ(parse_formula(f.str()), f) << text;
  }
}
