#pragma once

#include <string>
#include <vector>

#include "jumpnum/ideal.hpp"
#include "jumpnum/int_matrix.hpp"

namespace jumpnum::testkit {

std::string data_path(const std::string& name);
std::string read_text(const std::string& path);
IdealSpec load_fixture(const std::string& name);

IdealSpec maximal_ideal();
IdealSpec cusp_ideal();

// gamma_j of the 20-vertex example, 1-based as printed.
constexpr Vertex gamma(int j) { return static_cast<Vertex>(j - 1); }
IntMatrix example6_printed_valuation();
std::vector<Integer> example6_d_hat();

// Fourteen-vertex graph from the blow-down remark; its vertex 9 has pairs (1,2), (3,4), (7,9).
ResolutionGraph rem2kuva_graph();

}  // namespace jumpnum::testkit
