#include "jumpnum/resolution_graph.hpp"

#include <algorithm>
#include <queue>

#include "jumpnum/error.hpp"

namespace jumpnum {
namespace {

std::string label(Vertex v) { return std::to_string(v + 1); }

void check_vertex(std::size_t n, Vertex v) {
  if (v >= n) throw DomainError("vertex " + label(v) + " out of range 1.." + std::to_string(n));
}

// Vertices below mu in the infinitely-near order, by walking prox links.
std::vector<bool> below(const ResolutionGraph& g, Vertex mu) {
  std::vector<bool> seen(g.size(), false);
  seen[mu] = true;
  for (Vertex x = mu + 1; x-- > 0;) {
    if (!seen[x]) continue;
    for (Vertex p : g.prox[x]) seen[p] = true;
  }
  return seen;
}

}  // namespace

ResolutionGraph::ResolutionGraph(std::vector<std::vector<Vertex>> prox_sets) : prox(std::move(prox_sets)) {
  for (auto& s : prox) std::sort(s.begin(), s.end());
}

std::vector<Violation> validate(const ResolutionGraph& g) {
  std::vector<Violation> out;
  const std::size_t n = g.size();
  if (n == 0) {
    out.push_back({0, "nonempty", "graph has no vertices"});
    return out;
  }
  if (!g.prox[0].empty()) {
    out.push_back({0, "root", "vertex 1 is the root and cannot be proximate to any vertex"});
  }
  for (Vertex m = 1; m < n; ++m) {
    const auto& p = g.prox[m];
    if (p.empty()) {
      out.push_back({m, "prox-size", "vertex " + label(m) + " proximate to no vertex"});
    } else if (p.size() > 2) {
      out.push_back({m, "prox-size", "vertex " + label(m) + " proximate to more than two vertices"});
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] >= m) {
        out.push_back({m, "order", "vertex " + label(m) + " proximate to vertex " + label(p[i]) +
                                       " which is not earlier"});
      }
      if (i > 0 && p[i] == p[i - 1]) {
        out.push_back({m, "distinct", "vertex " + label(m) + " lists vertex " + label(p[i]) + " twice"});
      }
    }
  }
  if (!out.empty()) return out;

  IntMatrix a = intersection_matrix(g);
  std::size_t edge_count = 0;
  std::vector<std::vector<Vertex>> nbr(n);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      Integer x = a(i, j);
      if (x == -1) {
        ++edge_count;
        nbr[i].push_back(j);
        nbr[j].push_back(i);
      } else if (x != 0) {
        out.push_back({j, "intersection", "vertices " + label(i) + " and " + label(j) +
                                              " have intersection number " + std::to_string(-x)});
      }
    }
  }
  if (edge_count != n - 1) {
    out.push_back({0, "tree", "dual graph has " + std::to_string(edge_count) + " edges, expected " +
                                  std::to_string(n - 1)});
  }
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : nbr[v])
      if (!seen[u]) {
        seen[u] = true;
        stack.push_back(u);
      }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!seen[v]) {
      out.push_back({v, "tree", "vertex " + label(v) + " is not connected to the root in the dual graph"});
      break;
    }
  }
  std::vector<Integer> w(n, 1);
  for (Vertex m = 0; m < n; ++m)
    for (Vertex p : g.prox[m]) ++w[p];
  for (Vertex m = 0; m < n; ++m) {
    if (w[m] != a(m, m)) {
      out.push_back({m, "weight", "self-intersection of vertex " + label(m) + " disagrees with its weight"});
    }
  }
  return out;
}

void require_valid(const ResolutionGraph& g) {
  auto v = validate(g);
  if (!v.empty()) throw InvalidGraph(v.front().message);
}

IntMatrix proximity_matrix(const ResolutionGraph& g) {
  const std::size_t n = g.size();
  IntMatrix p = IntMatrix::identity(n);
  for (Vertex m = 0; m < n; ++m)
    for (Vertex v : g.prox[m]) {
      check_vertex(n, v);
      p(m, v) = -1;
    }
  return p;
}

IntMatrix inverse_proximity(const ResolutionGraph& g) {
  // q_{m,v} = delta_{m,v} + sum over r in prox(m) of q_{r,v}
  const std::size_t n = g.size();
  IntMatrix q(n, n);
  for (Vertex m = 0; m < n; ++m) {
    q(m, m) = 1;
    for (Vertex r : g.prox[m]) {
      if (r >= m) throw InvalidGraph("proximity sets are not in blowup order");
      for (Vertex v = 0; v <= r; ++v) q(m, v) = checked_add(q(m, v), q(r, v));
    }
  }
  return q;
}

IntMatrix intersection_matrix(const ResolutionGraph& g) {
  IntMatrix p = proximity_matrix(g);
  return p.transpose() * p;
}

bool DualGraph::adjacent(Vertex a, Vertex b) const {
  const auto& nb = neighbors.at(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::vector<Vertex> DualGraph::ends() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < size(); ++v)
    if (valence(v) <= 1) out.push_back(v);
  return out;
}

std::vector<Vertex> DualGraph::stars() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < size(); ++v)
    if (valence(v) >= 3) out.push_back(v);
  return out;
}

std::vector<std::pair<Vertex, Vertex>> DualGraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex v = 0; v < size(); ++v)
    for (Vertex u : neighbors[v])
      if (v < u) out.emplace_back(v, u);
  return out;
}

std::vector<Vertex> DualGraph::path(Vertex a, Vertex b) const {
  check_vertex(size(), a);
  check_vertex(size(), b);
  constexpr Vertex none = static_cast<Vertex>(-1);
  std::vector<Vertex> parent(size(), none);
  std::queue<Vertex> todo;
  parent[b] = b;
  todo.push(b);
  while (!todo.empty()) {
    Vertex v = todo.front();
    todo.pop();
    for (Vertex u : neighbors[v])
      if (parent[u] == none) {
        parent[u] = v;
        todo.push(u);
      }
  }
  if (parent[a] == none) throw InvalidGraph("dual graph is not connected");
  std::vector<Vertex> out{a};
  while (out.back() != b) out.push_back(parent[out.back()]);
  return out;
}

DualGraph adjacency(const ResolutionGraph& g) {
  require_valid(g);
  IntMatrix a = intersection_matrix(g);
  const std::size_t n = g.size();
  DualGraph d;
  d.neighbors.resize(n);
  d.weight.resize(n);
  for (Vertex i = 0; i < n; ++i) {
    d.weight[i] = a(i, i);
    for (Vertex j = 0; j < n; ++j)
      if (i != j && a(i, j) == -1) d.neighbors[i].push_back(j);
  }
  return d;
}

std::vector<Vertex> branch(const DualGraph& dual, Vertex mu, Vertex nu) {
  check_vertex(dual.size(), mu);
  check_vertex(dual.size(), nu);
  if (mu == nu) return {};
  std::vector<bool> seen(dual.size(), false);
  seen[mu] = true;
  seen[nu] = true;
  std::vector<Vertex> out{nu};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (Vertex u : dual.neighbors[out[i]])
      if (!seen[u]) {
        seen[u] = true;
        out.push_back(u);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool infinitely_near(const ResolutionGraph& g, Vertex mu, Vertex nu) {
  check_vertex(g.size(), mu);
  check_vertex(g.size(), nu);
  return inverse_proximity(g)(mu, nu) > 0;
}

std::vector<AssociatedPair> associated_pairs(const ResolutionGraph& g, Vertex mu) {
  check_vertex(g.size(), mu);
  std::vector<AssociatedPair> out;
  Vertex x = mu;
  while (true) {
    auto under_x = below(g, x);
    Vertex tau = 0;
    for (Vertex v = x + 1; v-- > 0;)
      if (under_x[v] && g.is_free(v)) {
        tau = v;
        break;
      }
    auto under_tau = below(g, tau);
    Vertex gamma = 0;
    for (Vertex v = tau + 1; v-- > 0;)
      if (under_tau[v] && !g.is_free(v)) {
        gamma = v;
        break;
      }
    out.push_back({gamma, tau});
    if (gamma == 0) break;
    x = gamma;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace jumpnum
