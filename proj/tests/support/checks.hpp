#pragma once

#include <string>

#include "generators.hpp"
#include "jumpnum/ideal.hpp"
#include "jumpnum/rational.hpp"

// Each check returns an empty string on success, otherwise a description of
// the first counterexample.
namespace jumpnum::testkit {

std::string check_matrix_identities(const ResolutionGraph& g, Rng& rng);
std::string check_infinitely_near_order(const ResolutionGraph& g);
std::string check_rho_monotonicity(const ResolutionGraph& g);
std::string check_phi_positivity(const ResolutionGraph& g);
std::string check_branch_semigroups(const ResolutionGraph& g);
std::string check_closure(const ResolutionGraph& g, Rng& rng);

// Simple ideal at its last vertex: closed form for H_mu and the gcd product identity.
std::string check_simple_ideal(const IdealSpec& chain, const Rational& bound);
std::string check_gcd_product(const IdealSpec& chain);

std::string check_oracle_agreement(const IdealSpec& ideal, const Rational& bound);
std::string check_oracle_properties(const IdealSpec& ideal, const Rational& bound);
std::string check_periodicity(const IdealSpec& ideal, const Rational& bound);
std::string check_scaling(const IdealSpec& ideal, Integer n, const Rational& bound);

std::string describe(const ResolutionGraph& g);
std::string describe(const IdealSpec& ideal);

}  // namespace jumpnum::testkit
