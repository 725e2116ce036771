#include "jumpnum/ideal.hpp"

#include <algorithm>

#include "jumpnum/error.hpp"

namespace jumpnum {

void require_valid(const IdealSpec& ideal) {
  require_valid(ideal.graph);
  if (ideal.d_hat.size() != ideal.graph.size()) {
    throw DomainError("factorization vector has " + std::to_string(ideal.d_hat.size()) + " entries, graph has " +
                      std::to_string(ideal.graph.size()) + " vertices");
  }
  bool positive = false;
  for (Integer x : ideal.d_hat) {
    if (x < 0) throw DomainError("factorization vector has a negative entry");
    positive = positive || x > 0;
  }
  if (!positive) throw DomainError("factorization vector is zero; the ideal would be the unit ideal");
}

IdealSpec power(const IdealSpec& ideal, Integer n) {
  if (n <= 0) throw DomainError("ideal power must be positive");
  IdealSpec out = ideal;
  for (auto& x : out.d_hat) x = checked_mul(x, n);
  return out;
}

JumpingSet::JumpingSet(const std::map<Rational, std::set<Vertex>>& found) {
  entries_.reserve(found.size());
  for (const auto& [xi, support] : found) entries_.push_back({xi, {support.begin(), support.end()}});
}

std::vector<Rational> JumpingSet::values() const {
  std::vector<Rational> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.xi);
  return out;
}

bool JumpingSet::contains(const Rational& xi) const {
  return std::binary_search(entries_.begin(), entries_.end(), JumpingNumber{xi, {}},
                            [](const JumpingNumber& a, const JumpingNumber& b) { return a.xi < b.xi; });
}

}  // namespace jumpnum
