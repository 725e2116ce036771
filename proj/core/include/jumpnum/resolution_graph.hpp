#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "jumpnum/int_matrix.hpp"

namespace jumpnum {

// Vertices are 0-based and in blowup order; vertex 0 is the root.
using Vertex = std::size_t;

// Proximity structure of a sequence of point blowups. prox[m] holds the
// earlier vertices that m is proximate to, sorted ascending.
struct ResolutionGraph {
  std::vector<std::vector<Vertex>> prox;

  ResolutionGraph() = default;
  explicit ResolutionGraph(std::vector<std::vector<Vertex>> prox_sets);
  ResolutionGraph(std::initializer_list<std::vector<Vertex>> prox_sets)
      : ResolutionGraph(std::vector<std::vector<Vertex>>(prox_sets)) {}

  std::size_t size() const noexcept { return prox.size(); }
  bool is_free(Vertex m) const { return prox.at(m).size() <= 1; }

  friend bool operator==(const ResolutionGraph&, const ResolutionGraph&) = default;
};

struct Violation {
  Vertex vertex;
  std::string rule;
  std::string message;  // 1-based vertex numbers, as a user sees them
};

std::vector<Violation> validate(const ResolutionGraph& g);

// Throws InvalidGraph carrying the first violation.
void require_valid(const ResolutionGraph& g);

IntMatrix proximity_matrix(const ResolutionGraph& g);
// Q = P^-1, by forward substitution.
IntMatrix inverse_proximity(const ResolutionGraph& g);
// P^T P
IntMatrix intersection_matrix(const ResolutionGraph& g);

struct DualGraph {
  std::vector<std::vector<Vertex>> neighbors;
  std::vector<Integer> weight;

  std::size_t size() const noexcept { return neighbors.size(); }
  std::size_t valence(Vertex m) const { return neighbors.at(m).size(); }
  bool adjacent(Vertex a, Vertex b) const;
  std::vector<Vertex> ends() const;
  std::vector<Vertex> stars() const;
  std::vector<std::pair<Vertex, Vertex>> edges() const;
  // Vertices of the geodesic [a, b], a first.
  std::vector<Vertex> path(Vertex a, Vertex b) const;
};

DualGraph adjacency(const ResolutionGraph& g);

// Component of the tree minus mu that contains nu, sorted. Empty if mu == nu.
std::vector<Vertex> branch(const DualGraph& dual, Vertex mu, Vertex nu);

// nu is infinitely near to (or equal to) mu, i.e. q_{mu,nu} > 0.
bool infinitely_near(const ResolutionGraph& g, Vertex mu, Vertex nu);

struct AssociatedPair {
  Vertex gamma;
  Vertex tau;
  friend bool operator==(const AssociatedPair&, const AssociatedPair&) = default;
};

// ((gamma_0, tau_1), ..., (gamma_g, tau_{g+1})). For the root: ((root, root)).
std::vector<AssociatedPair> associated_pairs(const ResolutionGraph& g, Vertex mu);

}  // namespace jumpnum
