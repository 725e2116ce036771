#pragma once

#include <string>
#include <string_view>

#include "jumpnum/ideal.hpp"
#include "jumpnum/int_matrix.hpp"

namespace jumpnum {

// Line-oriented resolution file; '#' starts a comment, blank lines are ignored.
//
//   N <n>
//   P <mu> <nu1> [<nu2>]     one line for each mu = 2..n, nu_i < mu
//   D <d1> ... <dn>          factorization vector
//
// Vertices are 1-based in the file. Structural errors throw ParseError with the
// offending line; graph validity is left to validate().
IdealSpec parse_resolution(std::string_view text);

// Canonical form: no comments, P lines ascending, single spaces.
std::string serialize_resolution(const IdealSpec& ideal);

// Whitespace-separated integer rows, '#' comments allowed.
IntMatrix parse_integer_matrix(std::string_view text);

// Recovers the proximity structure from a valuation matrix listed in blowup
// order. Throws InvalidGraph if no valid resolution graph has this matrix.
ResolutionGraph proximity_from_valuation(const IntMatrix& v);

}  // namespace jumpnum
