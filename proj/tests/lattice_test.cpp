#include <gtest/gtest.h>

#include "jumpnum/error.hpp"
#include "jumpnum/lattice.hpp"
#include "support/fixtures.hpp"

using namespace jumpnum;
using testkit::gamma;

namespace {

ResolutionGraph cusp() { return testkit::cusp_ideal().graph; }
ResolutionGraph chain2() { return ResolutionGraph({{}, {0}}); }

Divisor e(std::vector<Integer> c) { return Divisor::from_integers(c, Basis::E); }
Divisor hat(std::vector<Integer> c) { return Divisor::from_integers(c, Basis::EHat); }

}  // namespace

TEST(ValuationTable, SmallGraphs) {
  EXPECT_EQ(valuation_table(ResolutionGraph({{}})).v, IntMatrix({{1}}));
  EXPECT_EQ(valuation_table(chain2()).v, IntMatrix({{1, 1}, {1, 2}}));
  EXPECT_EQ(valuation_table(cusp()).v, IntMatrix({{1, 1, 2}, {1, 2, 3}, {2, 3, 6}}));
}

TEST(ValuationTable, Example6MatchesPrintedMatrix) {
  auto g = testkit::load_fixture("example6.res").graph;
  EXPECT_EQ(valuation_table(g).v, testkit::example6_printed_valuation());
}

TEST(ToBasis, UnitAndZero) {
  auto v = valuation_table(cusp()).v;
  for (Vertex mu = 0; mu < 3; ++mu) {
    std::vector<Integer> unit(3, 0);
    unit[mu] = 1;
    EXPECT_EQ(to_basis(hat(unit), Basis::E, cusp()).integers(), v.row(mu));
  }
  for (Basis b : {Basis::E, Basis::EStar, Basis::EHat}) {
    EXPECT_EQ(to_basis(e({0, 0, 0}), b, cusp()).integers(), (std::vector<Integer>{0, 0, 0}));
  }
}

TEST(ToBasis, CuspCoordinates) {
  EXPECT_EQ(to_basis(e({0, 0, 1}), Basis::EHat, cusp()).integers(), (std::vector<Integer>{-1, -1, 1}));
  EXPECT_EQ(to_basis(e({2, 3, 6}), Basis::EStar, cusp()).integers(), (std::vector<Integer>{2, 1, 1}));
  Divisor half{{Rational(1, 2), Rational(0), Rational(0)}, Basis::EHat};
  auto back = to_basis(to_basis(half, Basis::E, cusp()), Basis::EHat, cusp());
  EXPECT_EQ(back, half);
}

TEST(ToBasis, Example6ValuationVector) {
  auto ideal = testkit::load_fixture("example6.res");
  auto d = to_basis(hat(ideal.d_hat), Basis::E, ideal.graph).integers();
  EXPECT_EQ(d[gamma(1)], 31);
}

TEST(ToBasis, DimensionMismatch) {
  EXPECT_THROW(to_basis(e({1, 2}), Basis::EHat, cusp()), DomainError);
}

TEST(Canonical, Examples) {
  auto one = canonical(ResolutionGraph({{}}));
  EXPECT_EQ(one.k, (std::vector<Integer>{1}));
  EXPECT_EQ(one.k_hat, (std::vector<Integer>{1}));
  auto two = canonical(chain2());
  EXPECT_EQ(two.k, (std::vector<Integer>{1, 2}));
  EXPECT_EQ(two.k_hat, (std::vector<Integer>{0, 1}));
  auto c = canonical(cusp());
  EXPECT_EQ(c.k, (std::vector<Integer>{1, 2, 4}));
  EXPECT_EQ(c.k_hat, (std::vector<Integer>{-1, 0, 1}));
  EXPECT_EQ(c.k_hat * valuation_table(cusp()).v, c.k);
}

TEST(Antinef, Examples) {
  EXPECT_TRUE(is_antinef(hat({1, 0, 0}), cusp()));
  EXPECT_FALSE(is_antinef(e({0, 0, 1}), cusp()));
  EXPECT_TRUE(is_antinef(e({0, 0, 0}), cusp()));
  EXPECT_TRUE(is_antinef(e({2, 3, 6}), cusp()));
}

TEST(AntinefClosure, AlreadyAntinef) {
  EXPECT_EQ(antinef_closure(e({2, 3, 6}), cusp()), e({2, 3, 6}));
}

TEST(AntinefClosure, CuspUnloading) {
  // smallest antinef divisor above E_3 is the maximal ideal's divisor
  EXPECT_EQ(antinef_closure(e({0, 0, 1}), cusp()), e({1, 1, 2}));
  EXPECT_EQ(antinef_closure(hat({0, 0, 1}), cusp()), e({2, 3, 6}));
}

TEST(AntinefClosure, ClampsNegativePart) {
  EXPECT_EQ(antinef_closure(e({-1}), ResolutionGraph({{}})), e({0}));
  EXPECT_EQ(antinef_closure(e({-3, 5}), chain2()), e({3, 5}));
}

TEST(AntinefClosure, RejectsNonIntegral) {
  Divisor d{{Rational(1, 2), Rational(0), Rational(0)}, Basis::E};
  EXPECT_THROW(antinef_closure(d, cusp()), DomainError);
}

TEST(Rho, Examples) {
  auto t = valuation_table(chain2());
  EXPECT_EQ(rho(t, 0, 1, 0), Rational(1));
  EXPECT_EQ(rho(t, 0, 1, 1), Rational(2));
  auto c = valuation_table(cusp());
  for (Vertex nu = 0; nu < 3; ++nu) EXPECT_EQ(rho(c, 1, 1, nu), Rational(1));
  // adjacent vertices: rho(gamma) = (V_{gamma,mu} + 1) / V_{mu,mu}
  EXPECT_EQ(rho(c, 2, 0, 0), Rational(c(0, 2) + 1, c(2, 2)));
}

TEST(Phi, VanishesOffTheBranch) {
  auto c = valuation_table(cusp());
  // mu = 3, gamma = 1: branch {1}
  EXPECT_GT(phi(c, 2, 0, 2, 0), Rational(0));
  EXPECT_EQ(phi(c, 2, 0, 2, 1), Rational(0));
  EXPECT_EQ(phi(c, 2, 0, 2, 2), Rational(0));
}

TEST(ExceptionalLattice, RejectsInvalidGraph) {
  EXPECT_THROW(ExceptionalLattice(ResolutionGraph({{}, {}})), InvalidGraph);
}
