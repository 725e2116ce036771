#pragma once

#include <optional>
#include <vector>

#include "jumpnum/lattice.hpp"
#include "jumpnum/rational.hpp"
#include "jumpnum/resolution_graph.hpp"

namespace jumpnum {

// Submonoid of N generated by finitely many positive integers. Membership is
// tabulated once up to the conductor, so contains() is O(1).
class NumericalSemigroup {
 public:
  NumericalSemigroup() : NumericalSemigroup(std::vector<Integer>{}) {}
  explicit NumericalSemigroup(std::vector<Integer> generators);

  const std::vector<Integer>& generators() const noexcept { return generators_; }
  std::vector<Integer> minimal_generators() const;
  Integer gcd() const noexcept { return gcd_; }

  bool contains(Integer x) const;

  // Largest gap, -1 for N itself; nullopt when the gcd is not 1.
  std::optional<Integer> frobenius_number() const;

 private:
  std::vector<Integer> generators_;
  Integer gcd_ = 0;
  // Membership of multiples of gcd_, indexed by x / gcd_, up to the conductor.
  std::vector<bool> table_;
};

bool membership(const NumericalSemigroup& s, Integer x);

// gcd of V_{mu,tau} over the ends tau of the branch of the tree at mu through nu.
Integer branch_gcd(const ValuationTable& t, const DualGraph& dual, Vertex mu, Vertex nu);

// sum over j in the branch of (v(j) - 2) V_{mu,j}; -V_{mu,mu} when nu == mu.
Integer frobenius_multiple(const ValuationTable& t, const DualGraph& dual, Vertex mu, Vertex nu);

struct BranchSemigroupData {
  Vertex neighbor;
  Integer s;
  Integer frobenius_multiple;
  std::vector<Integer> sv_generators;
};

// One entry per neighbour of mu, ascending.
std::vector<BranchSemigroupData> branch_data(const ValuationTable& t, const DualGraph& dual, Vertex mu);

NumericalSemigroup vertex_semigroup(const ValuationTable& t, const DualGraph& dual, Vertex mu);
NumericalSemigroup value_semigroup(const ValuationTable& t, const DualGraph& dual, Vertex mu);

}  // namespace jumpnum
