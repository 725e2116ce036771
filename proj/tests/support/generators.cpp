#include "generators.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace jumpnum::testkit {

ResolutionGraph random_graph(Rng& rng, std::size_t n) {
  std::vector<std::vector<Vertex>> prox(n);
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::bernoulli_distribution satellite(0.4);
  for (Vertex m = 1; m < n; ++m) {
    if (!edges.empty() && satellite(rng)) {
      std::size_t pick = std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng);
      auto [a, b] = edges[pick];
      prox[m] = {std::min(a, b), std::max(a, b)};
      edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(pick));
      edges.emplace_back(a, m);
      edges.emplace_back(b, m);
    } else {
      Vertex v = std::uniform_int_distribution<Vertex>(0, m - 1)(rng);
      prox[m] = {v};
      edges.emplace_back(v, m);
    }
  }
  return ResolutionGraph(std::move(prox));
}

IdealSpec random_ideal(Rng& rng, std::size_t max_vertices, Integer max_entry) {
  std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_vertices)(rng);
  IdealSpec ideal{random_graph(rng, n), std::vector<Integer>(n)};
  std::uniform_int_distribution<Integer> entry(0, max_entry);
  for (auto& x : ideal.d_hat) x = entry(rng);
  if (std::all_of(ideal.d_hat.begin(), ideal.d_hat.end(), [](Integer x) { return x == 0; })) {
    ideal.d_hat[std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)] = 1;
  }
  return ideal;
}

IdealSpec simple_ideal_chain(Rng& rng, std::size_t n) {
  std::vector<std::vector<Vertex>> prox(n);
  std::vector<std::set<Vertex>> nb(n);
  std::bernoulli_distribution coin(0.5);
  for (Vertex m = 1; m < n; ++m) {
    const Vertex prev = m - 1;
    bool sat = (m == n - 1) || coin(rng);
    if (sat && !nb[prev].empty()) {
      auto it = nb[prev].begin();
      std::advance(it, std::uniform_int_distribution<std::size_t>(0, nb[prev].size() - 1)(rng));
      Vertex x = *it;
      prox[m] = {std::min(prev, x), std::max(prev, x)};
      nb[prev].erase(x);
      nb[x].erase(prev);
      nb[m] = {prev, x};
      nb[prev].insert(m);
      nb[x].insert(m);
    } else {
      prox[m] = {prev};
      nb[m] = {prev};
      nb[prev].insert(m);
    }
  }
  std::vector<Integer> d_hat(n, 0);
  d_hat[n - 1] = 1;
  return {ResolutionGraph(std::move(prox)), std::move(d_hat)};
}

}  // namespace jumpnum::testkit
