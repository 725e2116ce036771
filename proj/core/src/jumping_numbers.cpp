#include "jumpnum/jumping_numbers.hpp"

#include <map>
#include <set>

#include "jumpnum/error.hpp"

namespace jumpnum {
namespace {

void check_bound(const Rational& bound) {
  if (bound.sign() <= 0) throw DomainError("bound must be positive, got " + bound.to_string());
}

IdealSpec validated(IdealSpec ideal) {
  require_valid(ideal);
  return ideal;
}

}  // namespace

Integer ceil_plus(const Rational& x) { return std::max<Integer>(x.ceil(), 1); }

JumpingCalculator::JumpingCalculator(IdealSpec ideal)
    : ideal_(validated(std::move(ideal))), lattice_(ideal_.graph) {
  const auto& table = lattice_.valuations();
  const auto& dual = lattice_.dual();
  d_ = lattice_.hat_to_e(ideal_.d_hat);
  vertices_.resize(lattice_.size());
  for (Vertex mu = 0; mu < lattice_.size(); ++mu) {
    auto& data = vertices_[mu];
    for (Vertex nu : dual.neighbors[mu]) {
      Integer psi = 0;
      for (Vertex i : branch(dual, mu, nu)) psi = checked_add(psi, checked_mul(ideal_.d_hat[i], table(mu, i)));
      data.branches.push_back({nu, branch_gcd(table, dual, mu, nu), psi});
    }
    data.semigroup = vertex_semigroup(table, dual, mu);
  }
}

Integer JumpingCalculator::psi(Vertex mu, Vertex nu) const {
  for (const auto& b : vertices_.at(mu).branches)
    if (b.neighbor == nu) return b.psi;
  throw DomainError("vertex " + std::to_string(nu + 1) + " is not adjacent to " + std::to_string(mu + 1));
}

std::optional<Integer> JumpingCalculator::h_value(Vertex mu, const Rational& xi) const {
  Rational dx = Rational(d_.at(mu)) * xi;
  if (!dx.is_integer()) return std::nullopt;
  const auto& table = lattice_.valuations();
  const auto& data = vertices_[mu];
  auto valence = static_cast<Integer>(data.branches.size());
  Integer h = checked_add(dx.num(), checked_mul(valence - 2, table(mu, mu)));
  for (const auto& b : data.branches) {
    h = checked_sub(h, checked_mul(b.s, ceil_plus(Rational(b.psi) * xi / Rational(b.s))));
  }
  return h;
}

JumpingSet JumpingCalculator::jumping_at(Vertex mu, const Rational& bound) const {
  check_bound(bound);
  std::map<Rational, std::set<Vertex>> found;
  const Integer dm = d_.at(mu);
  const Integer last = (bound * Rational(dm)).floor();
  for (Integer t = 1; t <= last; ++t) {
    Rational xi(t, dm);
    if (semigroup(mu).contains(*h_value(mu, xi))) found[xi].insert(mu);
  }
  return JumpingSet(found);
}

std::vector<Vertex> JumpingCalculator::support_vertices() const {
  std::vector<Vertex> out;
  for (Vertex mu = 0; mu < lattice_.size(); ++mu)
    if (lattice_.dual().valence(mu) >= 3 || ideal_.d_hat[mu] > 0) out.push_back(mu);
  return out;
}

JumpingSet JumpingCalculator::jumping_set(const Rational& bound) const {
  check_bound(bound);
  std::map<Rational, std::set<Vertex>> found;
  for (Vertex mu : support_vertices()) {
    JumpingSet at = jumping_at(mu, bound);
    for (const auto& e : at.entries()) found[e.xi].insert(mu);
  }
  return JumpingSet(found);
}

Rational JumpingCalculator::lct() const {
  constexpr Integer cap = 64;
  for (Integer bound = 2; bound <= cap; bound *= 2) {
    auto set = jumping_set(bound);
    if (!set.empty()) return set.entries().front().xi;
  }
  throw Error("no jumping number found below " + std::to_string(cap));
}

std::optional<Integer> h_value(const IdealSpec& ideal, Vertex mu, const Rational& xi) {
  return JumpingCalculator(ideal).h_value(mu, xi);
}

JumpingSet jumping_at(const IdealSpec& ideal, Vertex mu, const Rational& bound) {
  return JumpingCalculator(ideal).jumping_at(mu, bound);
}

std::vector<Vertex> support_vertices(const IdealSpec& ideal) { return JumpingCalculator(ideal).support_vertices(); }

JumpingSet jumping_set(const IdealSpec& ideal, const Rational& bound) {
  return JumpingCalculator(ideal).jumping_set(bound);
}

Rational lct(const IdealSpec& ideal) { return JumpingCalculator(ideal).lct(); }

}  // namespace jumpnum
