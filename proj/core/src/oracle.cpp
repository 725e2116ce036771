#include "jumpnum/oracle.hpp"

#include <map>
#include <set>

#include "jumpnum/error.hpp"

namespace jumpnum {
namespace {

IdealSpec validated(IdealSpec ideal) {
  require_valid(ideal);
  return ideal;
}

}  // namespace

MultiplierOracle::MultiplierOracle(IdealSpec ideal)
    : ideal_(validated(std::move(ideal))), lattice_(ideal_.graph), d_(lattice_.hat_to_e(ideal_.d_hat)) {}

std::vector<Integer> MultiplierOracle::multiplier_e(const Rational& xi, bool left_limit) const {
  if (xi.sign() < 0) throw DomainError("xi must be nonnegative");
  const auto& k = lattice_.canonical().k;
  std::vector<Integer> g(d_.size());
  for (std::size_t v = 0; v < d_.size(); ++v) {
    Rational x = xi * Rational(d_[v]);
    Integer f = x.floor();
    if (left_limit && x.is_integer()) --f;
    g[v] = std::max<Integer>(f - k[v], 0);
  }
  return lattice_.antinef_closure(std::move(g));
}

MultiplierIdealResult MultiplierOracle::multiplier_divisor(const Rational& xi) const {
  return {xi, Divisor::from_integers(lattice_.e_to_hat(multiplier_e(xi)), Basis::EHat)};
}

bool MultiplierOracle::is_jumping(const Rational& xi) const {
  if (xi.sign() <= 0) throw DomainError("xi must be positive");
  return multiplier_e(xi) != multiplier_e(xi, true);
}

JumpingSet MultiplierOracle::jumping_set(const Rational& bound) const {
  if (bound.sign() <= 0) throw DomainError("bound must be positive");
  std::set<Rational> grid;
  for (Integer dv : d_) {
    Integer last = (bound * Rational(dv)).floor();
    for (Integer t = 1; t <= last; ++t) grid.insert(Rational(t, dv));
  }
  std::map<Rational, std::set<Vertex>> found;
  for (const auto& xi : grid) {
    auto before = multiplier_e(xi, true);
    if (before == multiplier_e(xi)) continue;
    auto threshold = xi_of_divisor(before);
    found[xi].insert(threshold.support.begin(), threshold.support.end());
  }
  return JumpingSet(found);
}

DivisorThreshold MultiplierOracle::xi_of_divisor(const std::vector<Integer>& f) const {
  if (f.size() != d_.size()) throw DomainError("divisor dimension mismatch");
  for (Integer x : lattice_.e_to_hat(f))
    if (x < 0) throw DomainError("divisor is not antinef");
  const auto& k = lattice_.canonical().k;
  DivisorThreshold out;
  for (Vertex v = 0; v < f.size(); ++v) {
    Rational lambda(checked_add(checked_add(f[v], k[v]), 1), d_[v]);
    if (out.support.empty() || lambda < out.xi) {
      out.xi = lambda;
      out.support = {v};
    } else if (lambda == out.xi) {
      out.support.push_back(v);
    }
  }
  return out;
}

MultiplierIdealResult multiplier_divisor(const IdealSpec& ideal, const Rational& xi) {
  return MultiplierOracle(ideal).multiplier_divisor(xi);
}

bool is_jumping(const IdealSpec& ideal, const Rational& xi) { return MultiplierOracle(ideal).is_jumping(xi); }

JumpingSet oracle_jumping_set(const IdealSpec& ideal, const Rational& bound) {
  return MultiplierOracle(ideal).jumping_set(bound);
}

DivisorThreshold xi_of_divisor(const IdealSpec& ideal, const Divisor& f) {
  MultiplierOracle oracle(ideal);
  return oracle.xi_of_divisor(oracle.lattice().to_basis(f, Basis::E).integers());
}

std::vector<bool> semigroup_bruteforce(const std::vector<Integer>& generators, Integer limit) {
  if (limit < 0) return {};
  std::vector<bool> in(static_cast<std::size_t>(limit) + 1, false);
  in[0] = true;
  for (Integer x = 0; x <= limit; ++x) {
    if (!in[static_cast<std::size_t>(x)]) continue;
    for (Integer g : generators) {
      if (g <= 0) throw DomainError("generators must be positive");
      if (x + g <= limit) in[static_cast<std::size_t>(x + g)] = true;
    }
  }
  return in;
}

}  // namespace jumpnum
