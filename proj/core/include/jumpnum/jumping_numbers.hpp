#pragma once

#include <optional>
#include <vector>

#include "jumpnum/ideal.hpp"
#include "jumpnum/lattice.hpp"
#include "jumpnum/semigroup.hpp"

namespace jumpnum {

// max(ceil(x), 1)
Integer ceil_plus(const Rational& x);

// Evaluates the semigroup criterion for jumping numbers vertex by vertex.
// Branch gcds, Psi values and S^mu are computed once at construction.
class JumpingCalculator {
 public:
  explicit JumpingCalculator(IdealSpec ideal);

  const IdealSpec& ideal() const noexcept { return ideal_; }
  const ExceptionalLattice& lattice() const noexcept { return lattice_; }
  // d = d_hat V
  const std::vector<Integer>& d() const noexcept { return d_; }

  // sum of d_hat_i V_{mu,i} over the branch at mu through nu
  Integer psi(Vertex mu, Vertex nu) const;
  const NumericalSemigroup& semigroup(Vertex mu) const { return vertices_.at(mu).semigroup; }

  // nullopt when d_mu * xi is not an integer (xi is then not a candidate at mu).
  std::optional<Integer> h_value(Vertex mu, const Rational& xi) const;

  // H_mu within (0, bound]
  JumpingSet jumping_at(Vertex mu, const Rational& bound) const;
  std::vector<Vertex> support_vertices() const;
  JumpingSet jumping_set(const Rational& bound) const;
  Rational lct() const;

 private:
  struct Branch {
    Vertex neighbor;
    Integer s;
    Integer psi;
  };
  struct VertexData {
    std::vector<Branch> branches;
    NumericalSemigroup semigroup;
  };

  IdealSpec ideal_;
  ExceptionalLattice lattice_;
  std::vector<Integer> d_;
  std::vector<VertexData> vertices_;
};

std::optional<Integer> h_value(const IdealSpec& ideal, Vertex mu, const Rational& xi);
JumpingSet jumping_at(const IdealSpec& ideal, Vertex mu, const Rational& bound);
std::vector<Vertex> support_vertices(const IdealSpec& ideal);
JumpingSet jumping_set(const IdealSpec& ideal, const Rational& bound);
Rational lct(const IdealSpec& ideal);

}  // namespace jumpnum
