#pragma once

#include <vector>

#include "jumpnum/int_matrix.hpp"
#include "jumpnum/rational.hpp"
#include "jumpnum/resolution_graph.hpp"

namespace jumpnum {

// Coordinates of a divisor: on the E_v, on the total transforms E*_v, or on
// the dual basis Ê_v (factorization vector).
enum class Basis { E, EStar, EHat };

struct Divisor {
  std::vector<Rational> coords;
  Basis basis = Basis::E;

  static Divisor from_integers(const std::vector<Integer>& c, Basis b);
  bool is_integral() const;
  std::vector<Integer> integers() const;  // throws DomainError unless integral

  friend bool operator==(const Divisor&, const Divisor&) = default;
};

// V = (P^T P)^-1, computed as Q Q^T.
struct ValuationTable {
  IntMatrix v;

  std::size_t size() const noexcept { return v.rows(); }
  Integer operator()(Vertex a, Vertex b) const { return v(a, b); }
};

struct CanonicalData {
  std::vector<Integer> k;      // E-coordinates
  std::vector<Integer> k_hat;  // Ê-coordinates
};

ValuationTable valuation_table(const ResolutionGraph& g);
CanonicalData canonical(const ResolutionGraph& g);
Divisor to_basis(const Divisor& d, Basis target, const ResolutionGraph& g);
bool is_antinef(const Divisor& d, const ResolutionGraph& g);
// Result is in E-coordinates.
Divisor antinef_closure(const Divisor& d, const ResolutionGraph& g);

// V_{gamma,nu} / V_{mu,nu}
Rational rho(const ValuationTable& t, Vertex mu, Vertex gamma, Vertex nu);

// ((1_gamma - rho_[mu,gamma](mu) 1_mu) V)_nu / V_{eta,nu}
Rational phi(const ValuationTable& t, Vertex mu, Vertex gamma, Vertex eta, Vertex nu);

// Everything derived from one validated graph, computed once.
class ExceptionalLattice {
 public:
  explicit ExceptionalLattice(ResolutionGraph g);

  std::size_t size() const noexcept { return graph_.size(); }
  const ResolutionGraph& graph() const noexcept { return graph_; }
  const DualGraph& dual() const noexcept { return dual_; }
  const IntMatrix& p() const noexcept { return p_; }
  const IntMatrix& q() const noexcept { return q_; }
  const IntMatrix& intersection() const noexcept { return a_; }
  const ValuationTable& valuations() const noexcept { return table_; }
  const CanonicalData& canonical() const noexcept { return canonical_; }

  Divisor to_basis(const Divisor& d, Basis target) const;
  bool is_antinef(const Divisor& d) const;

  std::vector<Integer> e_to_hat(const std::vector<Integer>& g) const;
  std::vector<Integer> hat_to_e(const std::vector<Integer>& g_hat) const;

  // Clamp to the effective part, then unload until antinef. E in, E out.
  std::vector<Integer> antinef_closure(std::vector<Integer> g) const;

 private:
  ResolutionGraph graph_;
  DualGraph dual_;
  IntMatrix p_, q_, a_;
  ValuationTable table_;
  CanonicalData canonical_;
};

}  // namespace jumpnum
