#pragma once

#include <utility>
#include <vector>

#include "jumpnum/ideal.hpp"
#include "jumpnum/lattice.hpp"

namespace jumpnum {

// Jumping numbers straight from multiplier ideals, independent of the
// semigroup machinery: J(a^xi) is the antinef closure of the effective part of
// floor(xi D) - K.
struct MultiplierIdealResult {
  Rational xi;
  Divisor divisor;  // Ê-coordinates
};

struct DivisorThreshold {
  Rational xi;
  std::vector<Vertex> support;
};

class MultiplierOracle {
 public:
  explicit MultiplierOracle(IdealSpec ideal);

  const ExceptionalLattice& lattice() const noexcept { return lattice_; }
  const std::vector<Integer>& d() const noexcept { return d_; }

  // E-coordinates of the divisor of J(a^xi), or of J(a^(xi - eps)) when left_limit.
  std::vector<Integer> multiplier_e(const Rational& xi, bool left_limit = false) const;

  MultiplierIdealResult multiplier_divisor(const Rational& xi) const;
  bool is_jumping(const Rational& xi) const;
  // Grid t / d_v over every vertex v. Support is the argmin set of the
  // threshold of the divisor just before the jump.
  JumpingSet jumping_set(const Rational& bound) const;
  // F in E-coordinates; throws DomainError unless F is antinef.
  DivisorThreshold xi_of_divisor(const std::vector<Integer>& f) const;

 private:
  IdealSpec ideal_;
  ExceptionalLattice lattice_;
  std::vector<Integer> d_;
};

MultiplierIdealResult multiplier_divisor(const IdealSpec& ideal, const Rational& xi);
bool is_jumping(const IdealSpec& ideal, const Rational& xi);
JumpingSet oracle_jumping_set(const IdealSpec& ideal, const Rational& bound);
DivisorThreshold xi_of_divisor(const IdealSpec& ideal, const Divisor& f);

// Membership of 0..limit in the monoid generated by `generators`, by closure.
std::vector<bool> semigroup_bruteforce(const std::vector<Integer>& generators, Integer limit);

}  // namespace jumpnum
