#include "jumpnum/semigroup.hpp"

#include <algorithm>

#include "jumpnum/error.hpp"

namespace jumpnum {

NumericalSemigroup::NumericalSemigroup(std::vector<Integer> generators) : generators_(std::move(generators)) {
  for (Integer g : generators_)
    if (g <= 0) throw DomainError("semigroup generators must be positive, got " + std::to_string(g));
  std::sort(generators_.begin(), generators_.end());
  generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
  for (Integer g : generators_) gcd_ = jumpnum::gcd(gcd_, g);
  if (generators_.empty()) return;

  // Work in the scaled semigroup S / gcd, which has gcd 1. Fill until a run of
  // `smallest` consecutive members; everything beyond is then a member.
  std::vector<Integer> scaled;
  for (Integer g : generators_) scaled.push_back(g / gcd_);
  const Integer smallest = scaled.front();
  table_.push_back(true);
  Integer run = 1;
  for (Integer x = 1; run < smallest; ++x) {
    bool in = false;
    for (Integer g : scaled) {
      if (g > x) break;
      if (table_[static_cast<std::size_t>(x - g)]) {
        in = true;
        break;
      }
    }
    table_.push_back(in);
    run = in ? run + 1 : 0;
  }
  table_.resize(table_.size() - static_cast<std::size_t>(run) + 1);
}

std::vector<Integer> NumericalSemigroup::minimal_generators() const {
  std::vector<Integer> out;
  for (Integer g : generators_) {
    // g is redundant iff g - h is a member for some smaller minimal generator h
    bool redundant = false;
    for (Integer h : out)
      if (contains(g - h)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  return out;
}

bool NumericalSemigroup::contains(Integer x) const {
  if (x == 0) return true;
  if (x < 0 || generators_.empty() || x % gcd_ != 0) return false;
  Integer y = x / gcd_;
  if (y >= static_cast<Integer>(table_.size())) return true;
  return table_[static_cast<std::size_t>(y)];
}

std::optional<Integer> NumericalSemigroup::frobenius_number() const {
  if (gcd_ != 1) return std::nullopt;
  return static_cast<Integer>(table_.size()) - 2;
}

bool membership(const NumericalSemigroup& s, Integer x) { return s.contains(x); }

Integer branch_gcd(const ValuationTable& t, const DualGraph& dual, Vertex mu, Vertex nu) {
  if (mu == nu) throw DomainError("branch at a vertex through itself is empty");
  Integer g = 0;
  for (Vertex j : branch(dual, mu, nu))
    if (dual.valence(j) <= 1) g = gcd(g, t(mu, j));
  return g;
}

Integer frobenius_multiple(const ValuationTable& t, const DualGraph& dual, Vertex mu, Vertex nu) {
  if (mu == nu) return -t(mu, mu);
  Integer m = 0;
  for (Vertex j : branch(dual, mu, nu)) {
    m = checked_add(m, checked_mul(static_cast<Integer>(dual.valence(j)) - 2, t(mu, j)));
  }
  return m;
}

std::vector<BranchSemigroupData> branch_data(const ValuationTable& t, const DualGraph& dual, Vertex mu) {
  std::vector<BranchSemigroupData> out;
  for (Vertex nu : dual.neighbors.at(mu)) {
    BranchSemigroupData d{nu, branch_gcd(t, dual, mu, nu), frobenius_multiple(t, dual, mu, nu), {}};
    for (Vertex j : branch(dual, mu, nu))
      if (dual.valence(j) <= 1) d.sv_generators.push_back(t(mu, j));
    out.push_back(std::move(d));
  }
  return out;
}

NumericalSemigroup vertex_semigroup(const ValuationTable& t, const DualGraph& dual, Vertex mu) {
  std::vector<Integer> gens{t(mu, mu)};
  for (Vertex nu : dual.neighbors.at(mu)) gens.push_back(branch_gcd(t, dual, mu, nu));
  return NumericalSemigroup(std::move(gens));
}

NumericalSemigroup value_semigroup(const ValuationTable& t, const DualGraph& dual, Vertex mu) {
  std::vector<Integer> gens;
  for (Vertex tau : dual.ends()) gens.push_back(t(mu, tau));
  return NumericalSemigroup(std::move(gens));
}

}  // namespace jumpnum
