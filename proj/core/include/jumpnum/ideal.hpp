#pragma once

#include <map>
#include <set>
#include <vector>

#include "jumpnum/rational.hpp"
#include "jumpnum/resolution_graph.hpp"

namespace jumpnum {

// A complete finite-colength ideal given by its resolution and factorization
// vector d_hat (exponents of the simple ideals p_v).
struct IdealSpec {
  ResolutionGraph graph;
  std::vector<Integer> d_hat;

  friend bool operator==(const IdealSpec&, const IdealSpec&) = default;
};

// Throws InvalidGraph or DomainError.
void require_valid(const IdealSpec& ideal);

// a^n
IdealSpec power(const IdealSpec& ideal, Integer n);

struct JumpingNumber {
  Rational xi;
  std::vector<Vertex> support;  // ascending

  friend bool operator==(const JumpingNumber&, const JumpingNumber&) = default;
};

class JumpingSet {
 public:
  JumpingSet() = default;
  explicit JumpingSet(const std::map<Rational, std::set<Vertex>>& found);

  const std::vector<JumpingNumber>& entries() const noexcept { return entries_; }
  std::vector<Rational> values() const;
  bool contains(const Rational& xi) const;
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }

  friend bool operator==(const JumpingSet&, const JumpingSet&) = default;

 private:
  std::vector<JumpingNumber> entries_;
};

}  // namespace jumpnum
