#include "fixtures.hpp"

#include <fstream>
#include <sstream>

#include "jumpnum/resolution_file.hpp"

#ifndef JUMPNUM_TEST_DATA_DIR
#error "JUMPNUM_TEST_DATA_DIR must point at the data/ directory"
#endif

namespace jumpnum::testkit {

std::string data_path(const std::string& name) { return std::string(JUMPNUM_TEST_DATA_DIR) + "/" + name; }

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

IdealSpec load_fixture(const std::string& name) { return parse_resolution(read_text(data_path(name))); }

IdealSpec maximal_ideal() { return {ResolutionGraph(std::vector<std::vector<Vertex>>(1)), {1}}; }

IdealSpec cusp_ideal() { return {ResolutionGraph({{}, {0}, {0, 1}}), {0, 0, 1}}; }

// Transcribed by hand from the worked example, independent of data/.
IntMatrix example6_printed_valuation() {
  return IntMatrix({
      {1, 1, 2, 2, 2, 4, 6, 6, 4, 1, 1, 2, 3, 3, 1, 2, 2, 4, 6, 1},
      {1, 2, 3, 3, 3, 6, 9, 9, 6, 1, 1, 2, 3, 3, 1, 2, 2, 4, 6, 1},
      {2, 3, 6, 6, 6, 12, 18, 18, 12, 2, 2, 4, 6, 6, 2, 4, 4, 8, 12, 2},
      {2, 3, 6, 7, 7, 14, 21, 21, 13, 2, 2, 4, 6, 6, 2, 4, 4, 8, 12, 2},
      {2, 3, 6, 7, 8, 15, 22, 22, 13, 2, 2, 4, 6, 6, 2, 4, 4, 8, 12, 2},
      {4, 6, 12, 14, 15, 30, 44, 44, 26, 4, 4, 8, 12, 12, 4, 8, 8, 16, 24, 4},
      {6, 9, 18, 21, 22, 44, 66, 66, 39, 6, 6, 12, 18, 18, 6, 12, 12, 24, 36, 6},
      {6, 9, 18, 21, 22, 44, 66, 67, 39, 6, 6, 12, 18, 18, 6, 12, 12, 24, 36, 6},
      {4, 6, 12, 13, 13, 26, 39, 39, 26, 4, 4, 8, 12, 12, 4, 8, 8, 16, 24, 4},
      {1, 1, 2, 2, 2, 4, 6, 6, 4, 2, 2, 4, 6, 6, 1, 2, 2, 4, 6, 1},
      {1, 1, 2, 2, 2, 4, 6, 6, 4, 2, 3, 5, 7, 7, 1, 2, 2, 4, 6, 1},
      {2, 2, 4, 4, 4, 8, 12, 12, 8, 4, 5, 10, 14, 14, 2, 4, 4, 8, 12, 2},
      {3, 3, 6, 6, 6, 12, 18, 18, 12, 6, 7, 14, 21, 21, 3, 6, 6, 12, 18, 3},
      {3, 3, 6, 6, 6, 12, 18, 18, 12, 6, 7, 14, 21, 22, 3, 6, 6, 12, 18, 3},
      {1, 1, 2, 2, 2, 4, 6, 6, 4, 1, 1, 2, 3, 3, 2, 3, 3, 6, 9, 1},
      {2, 2, 4, 4, 4, 8, 12, 12, 8, 2, 2, 4, 6, 6, 3, 6, 6, 12, 18, 2},
      {2, 2, 4, 4, 4, 8, 12, 12, 8, 2, 2, 4, 6, 6, 3, 6, 7, 13, 20, 2},
      {4, 4, 8, 8, 8, 16, 24, 24, 16, 4, 4, 8, 12, 12, 6, 12, 13, 26, 39, 4},
      {6, 6, 12, 12, 12, 24, 36, 36, 24, 6, 6, 12, 18, 18, 9, 18, 20, 39, 60, 6},
      {1, 1, 2, 2, 2, 4, 6, 6, 4, 1, 1, 2, 3, 3, 1, 2, 2, 4, 6, 2}
  });
}

std::vector<Integer> example6_d_hat() { return {0, 0, 0, 0, 0, 0, 0, 2, 1, 0, 0, 0, 0, 2, 0, 0, 0, 0, 1, 3}; }

ResolutionGraph rem2kuva_graph() {
  // 1-based: 2:{1} 3:{1,2} 4:{3} 5:{3,4} 6:{3,5} 7:{5,6} 8:{7} 9:{8} 10:{9} 11:{2} 12:{5} 13:{6} 14:{9}
  return ResolutionGraph({{}, {0}, {0, 1}, {2}, {2, 3}, {2, 4}, {4, 5}, {6}, {7}, {8}, {1}, {4}, {5}, {8}});
}

}  // namespace jumpnum::testkit
