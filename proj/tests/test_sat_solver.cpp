#include <gtest/gtest.h>

#include <random>

#include "mitl/sat_solver.hpp"

using mitl::Literal;
using mitl::SatSolver;

namespace {

using Cnf = std::vector<std::vector<int>>;  // DIMACS-style literals

bool brute_force(int vars, const Cnf& cnf) {
  for (std::uint32_t m = 0; m < (1u << vars); ++m) {
    bool all = true;
    for (const auto& c : cnf) {
      bool any = false;
      for (int l : c) any = any || ((m >> (std::abs(l) - 1) & 1u) == (l > 0 ? 1u : 0u));
      all = all && any;
    }
    if (all) return true;
  }
  return false;
}

bool load_and_solve(int vars, const Cnf& cnf, SatSolver& s) {
  for (int v = 0; v < vars; ++v) s.new_var();
  for (const auto& c : cnf) {
    std::vector<Literal> lits;
    for (int l : c) lits.push_back(Literal::of(std::abs(l) - 1, l < 0));
    s.add_clause(lits);
  }
  return s.solve();
}

}  // namespace

TEST(SatSolver, TrivialCases) {
  SatSolver empty;
  EXPECT_TRUE(empty.solve());
  SatSolver contradiction;
  int x = contradiction.new_var();
  contradiction.add_clause({Literal::of(x)});
  contradiction.add_clause({Literal::of(x, true)});
  EXPECT_FALSE(contradiction.solve());
}

TEST(SatSolver, PigeonholeThreeIntoTwoIsUnsat) {
  // p(i,h): pigeon i in hole h
  Cnf cnf;
  auto p = [](int i, int h) { return i * 2 + h + 1; };
  for (int i = 0; i < 3; ++i) cnf.push_back({p(i, 0), p(i, 1)});
  for (int h = 0; h < 2; ++h)
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) cnf.push_back({-p(i, h), -p(j, h)});
  SatSolver s;
  EXPECT_FALSE(load_and_solve(6, cnf, s));
  EXPECT_GT(s.stats().conflicts, 0u);
}

TEST(SatSolver, DimacsNumbering) {
  EXPECT_EQ(Literal::of(0).dimacs(), 1);
  EXPECT_EQ(Literal::of(4, true).dimacs(), -5);
  EXPECT_EQ((~Literal::of(2)).dimacs(), -3);
}

// Random 3-CNF around the threshold: verdict matches enumeration and
// models satisfy every clause.
TEST(SatSolver, AgreesWithEnumeration) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 400; ++trial) {
    int vars = 4 + trial % 9;
    int clauses = static_cast<int>(vars * 4.3);
    std::uniform_int_distribution<int> var(1, vars);
    std::bernoulli_distribution sign(0.5);
    Cnf cnf;
    for (int c = 0; c < clauses; ++c) {
      std::vector<int> cl;
      for (int k = 0; k < 3; ++k) cl.push_back(sign(rng) ? var(rng) : -var(rng));
      cnf.push_back(cl);
    }
    SatSolver s;
    bool sat = load_and_solve(vars, cnf, s);
    ASSERT_EQ(sat, brute_force(vars, cnf)) << "trial " << trial;
    if (sat) {
      for (const auto& c : cnf) {
        bool any = false;
        for (int l : c) any = any || s.value(std::abs(l) - 1) == (l > 0);
        ASSERT_TRUE(any);
      }
    }
  }
}
