#include "jumpnum/lattice.hpp"

#include <algorithm>

#include "jumpnum/error.hpp"

namespace jumpnum {
namespace {

std::vector<Rational> times(const std::vector<Rational>& x, const IntMatrix& m) {
  if (x.size() != m.rows()) throw DomainError("divisor has " + std::to_string(x.size()) +
                                              " coordinates, graph has " + std::to_string(m.rows()));
  std::vector<Rational> out(m.cols());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) out[j] += x[i] * Rational(m(i, j));
  }
  return out;
}

}  // namespace

Divisor Divisor::from_integers(const std::vector<Integer>& c, Basis b) {
  return {std::vector<Rational>(c.begin(), c.end()), b};
}

bool Divisor::is_integral() const {
  return std::all_of(coords.begin(), coords.end(), [](const Rational& r) { return r.is_integer(); });
}

std::vector<Integer> Divisor::integers() const {
  if (!is_integral()) throw DomainError("divisor has non-integral coordinates");
  std::vector<Integer> out;
  out.reserve(coords.size());
  for (const auto& r : coords) out.push_back(r.num());
  return out;
}

ValuationTable valuation_table(const ResolutionGraph& g) { return ExceptionalLattice(g).valuations(); }

CanonicalData canonical(const ResolutionGraph& g) { return ExceptionalLattice(g).canonical(); }

Divisor to_basis(const Divisor& d, Basis target, const ResolutionGraph& g) {
  return ExceptionalLattice(g).to_basis(d, target);
}

bool is_antinef(const Divisor& d, const ResolutionGraph& g) { return ExceptionalLattice(g).is_antinef(d); }

Divisor antinef_closure(const Divisor& d, const ResolutionGraph& g) {
  ExceptionalLattice lat(g);
  auto e = lat.to_basis(d, Basis::E);
  if (!e.is_integral()) throw DomainError("antinef closure needs integral E-coordinates");
  return Divisor::from_integers(lat.antinef_closure(e.integers()), Basis::E);
}

Rational rho(const ValuationTable& t, Vertex mu, Vertex gamma, Vertex nu) {
  return Rational(t(gamma, nu), t(mu, nu));
}

Rational phi(const ValuationTable& t, Vertex mu, Vertex gamma, Vertex eta, Vertex nu) {
  Rational top = Rational(t(gamma, nu)) - rho(t, mu, gamma, mu) * Rational(t(mu, nu));
  return top / Rational(t(eta, nu));
}

ExceptionalLattice::ExceptionalLattice(ResolutionGraph g) : graph_(std::move(g)) {
  require_valid(graph_);
  dual_ = adjacency(graph_);
  p_ = proximity_matrix(graph_);
  q_ = inverse_proximity(graph_);
  a_ = p_.transpose() * p_;
  table_.v = q_ * q_.transpose();
  const std::size_t n = size();
  canonical_.k.assign(n, 0);
  canonical_.k_hat.assign(n, 0);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j <= i; ++j) canonical_.k[i] = checked_add(canonical_.k[i], q_(i, j));
    canonical_.k_hat[i] = 2 - a_(i, i);
  }
}

Divisor ExceptionalLattice::to_basis(const Divisor& d, Basis target) const {
  if (d.coords.size() != size()) {
    throw DomainError("divisor has " + std::to_string(d.coords.size()) + " coordinates, graph has " +
                      std::to_string(size()));
  }
  // Go through E: g* = g P^T, ĝ = g P^T P, and back with g = g* Q^T, g = ĝ V.
  std::vector<Rational> e;
  switch (d.basis) {
    case Basis::E: e = d.coords; break;
    case Basis::EStar: e = times(d.coords, q_.transpose()); break;
    case Basis::EHat: e = times(d.coords, table_.v); break;
  }
  switch (target) {
    case Basis::E: return {e, Basis::E};
    case Basis::EStar: return {times(e, p_.transpose()), Basis::EStar};
    case Basis::EHat: return {times(e, a_), Basis::EHat};
  }
  throw DomainError("unknown basis");
}

bool ExceptionalLattice::is_antinef(const Divisor& d) const {
  auto hat = to_basis(d, Basis::EHat);
  return std::all_of(hat.coords.begin(), hat.coords.end(), [](const Rational& r) { return r.sign() >= 0; });
}

std::vector<Integer> ExceptionalLattice::e_to_hat(const std::vector<Integer>& g) const { return g * a_; }

std::vector<Integer> ExceptionalLattice::hat_to_e(const std::vector<Integer>& g_hat) const {
  return g_hat * table_.v;
}

std::vector<Integer> ExceptionalLattice::antinef_closure(std::vector<Integer> g) const {
  if (g.size() != size()) throw DomainError("divisor dimension mismatch");
  for (auto& x : g) x = std::max<Integer>(x, 0);
  auto hat = e_to_hat(g);
  for (bool changed = true; changed;) {
    changed = false;
    for (Vertex v = 0; v < size(); ++v) {
      if (hat[v] >= 0) continue;
      Integer w = dual_.weight[v];
      Integer c = ceil_div(-hat[v], w);
      g[v] = checked_add(g[v], c);
      hat[v] = checked_add(hat[v], checked_mul(w, c));
      for (Vertex u : dual_.neighbors[v]) hat[u] = checked_sub(hat[u], c);
      changed = true;
    }
  }
  return g;
}

}  // namespace jumpnum
