#include <gtest/gtest.h>

#include <random>

#include "mitl/parser.hpp"
#include "mitl/predicates.hpp"
#include "mitl/transform.hpp"

using mitl::Formula;
using mitl::parse_formula;
using mitl::PredicateExpr;
using mitl::Rational;

namespace {

std::vector<PredicateExpr> preds(const char* text) { return mitl::predicates_of(parse_formula(text)); }

}  // namespace

TEST(Decomposition, SpeedExample) {
  auto table = mitl::generate_mutex_predicates(preds("(speed > 100) && (speed > 80)"));
  ASSERT_EQ(table.atoms().size(), 2u);
  EXPECT_EQ(table.atoms()[0].name, "speed_0");
  EXPECT_EQ(table.atoms()[0].region.str(), "(80,100]");
  EXPECT_EQ(table.atoms()[1].name, "speed_1");
  EXPECT_EQ(table.atoms()[1].region.str(), "(100,inf)");
  EXPECT_EQ(table.rewrites().at("speed > 100"), (std::vector<std::string>{"speed_1"}));
  EXPECT_EQ(table.rewrites().at("speed > 80"), (std::vector<std::string>{"speed_0", "speed_1"}));
  ASSERT_EQ(table.mutex_groups().size(), 1u);
  EXPECT_EQ(table.mutex_groups()[0].members, (std::vector<std::string>{"speed_0", "speed_1"}));
}

TEST(Decomposition, PairSplitsIntoThree) {
  mitl::PredicateAtom a{"a", "x", PredicateExpr{"x", mitl::Comparison::Greater, Rational(1)}.region()};
  mitl::PredicateAtom b{"b", "x", PredicateExpr{"x", mitl::Comparison::LessEqual, Rational(5)}.region()};
  auto parts = mitl::decompose_pair(a, b);
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[0].region.str(), "(1,5]");
  mitl::PredicateAtom c{"c", "y", a.region};
  EXPECT_ANY_THROW(mitl::decompose_pair(a, c));
  mitl::PredicateAtom d{"d", "x", PredicateExpr{"x", mitl::Comparison::Less, Rational(0)}.region()};
  EXPECT_ANY_THROW(mitl::decompose_pair(a, d));
}

TEST(Decomposition, SinglePredicateHasNoMutexGroup) {
  auto table = mitl::generate_mutex_predicates(preds("rpm <= 4500"));
  EXPECT_EQ(table.atoms().size(), 1u);
  EXPECT_TRUE(table.mutex_groups().empty());
}

TEST(Decomposition, EmptyInput) { EXPECT_TRUE(mitl::generate_mutex_predicates({}).empty()); }

TEST(Abstraction, ReplacesPredicatesByDisjunctions) {
  Formula f = parse_formula("G[0,5]((speed > 80) -> F[0,1] (speed > 100))");
  auto table = mitl::generate_mutex_predicates(mitl::predicates_of(f));
  EXPECT_EQ(mitl::abstract_formula(f, table).str(), "G[0,5] ((speed_0 || speed_1) -> F[0,1] speed_1)");
  EXPECT_ANY_THROW(mitl::abstract_formula(parse_formula("speed > 1"), table));
}

// Cells partition the union of the input regions, are pairwise disjoint,
// and every predicate is exactly the union of its rewrite cells.
TEST(Decomposition, PartitionProperty) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> threshold(0, 8), cmp(0, 3), count(1, 5);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<PredicateExpr> in;
    int n = count(rng);
    for (int i = 0; i < n; ++i)
      in.push_back({"x", static_cast<mitl::Comparison>(cmp(rng)), Rational(threshold(rng))});
    auto table = mitl::generate_mutex_predicates(in);
    const auto& atoms = table.atoms();
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      ASSERT_FALSE(atoms[i].region.empty());
      for (std::size_t j = i + 1; j < atoms.size(); ++j) ASSERT_FALSE(atoms[i].region.overlaps(atoms[j].region));
    }
    for (const auto& p : in) {
      mitl::IntervalSet covered;
      for (const auto& name : table.rewrites().at(p.str())) covered = covered.unite(table.find_atom(name)->region);
      ASSERT_EQ(covered, p.region()) << p.str();
    }
    for (int q = -4; q <= 40; ++q) {
      Rational v(q, 4);
      int holding = 0;
      for (const auto& a : atoms) holding += a.region.contains(v) ? 1 : 0;
      ASSERT_LE(holding, 1);
    }
  }
}
