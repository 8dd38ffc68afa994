// SPDX-License-Identifier: Apache-2.0
// Independent copy of the catalog rows, shared by the unit tests
// and the acceptance run.
#pragma once

#include <string>
#include <vector>

namespace oracle {

struct Row {
  const char* name;
  const char* packing;
  std::vector<int> per_crossing;
  int per_unit;
  const char* chirality;
  std::vector<std::string> types;
  char tier;
};

inline const std::vector<Row>& table() {
  static const std::vector<Row> rows = {
      {"Stacked Hexagonal MF", "NONE", {3, 2}, 3, "one", {"trio", "pair"}, 'C'},
      {"Strucwire®", "NONE", {4, 2}, 4, "one", {"quartet", "pair"}, 'C'},
      {"⟨100⟩ Simple Annular", "PI_PLUS_MINUS", {3}, 3, "one", {"annular"}, 'A'},
      {"⟨100⟩ Simple Trefoil", "PI_PLUS_MINUS", {3}, 3, "one", {"trefoil"}, 'A'},
      {"⟨100⟩ Simple Trio", "PI_PLUS_MINUS", {3}, 3, "one", {"trio"}, 'A'},
      {"⟨100⟩ Trigonal Laves", "PI_PLUS_MINUS", {3}, 6, "double", {"trigonal"}, 'A'},
      {"⟨100⟩ Trefoil Laves", "PI_PLUS_MINUS", {3}, 6, "double", {"trefoil"}, 'A'},
      {"⟨100⟩ Braid Laves", "PI_PLUS_MINUS", {6}, 6, "double", {"braid"}, 'A'},
      {"⟨100⟩ Triple Laves", "PI_PLUS_MINUS", {2}, 6, "double", {"pair"}, 'A'},
      {"⟨100⟩ Gyroid", "PI_STAR", {2}, 12, "both", {"saddle"}, 'A'},
      {"⟨100⟩ Tetrahedral", "PI_STAR", {6}, 6, "one", {"tetrahedral"}, 'B'},
      {"⟨100⟩ Expanded Tetrahedral", "PI_STAR", {6}, 6, "one", {"exp. tetra."}, 'B'},
      {"⟨111⟩ Gamma", "GAMMA", {2}, 12, "one", {"pair"}, 'B'},
      {"⟨111⟩ Trio", "OMEGA_PLUS_MINUS", {3}, 24, "one", {"trio"}, 'B'},
      {"⟨111⟩ Octahedral", "OMEGA_PLUS_MINUS", {2}, 12, "one", {"pair"}, 'B'},
      {"⟨111⟩ Expanded Octahedral", "OMEGA_PLUS_MINUS", {4}, 12, "one", {"quatrefoil"}, 'B'},
      {"⟨111⟩ Trigonal Laves", "SIGMA_PLUS_MINUS", {3}, 8, "double", {"trigonal"}, 'B'},
      {"⟨111⟩ Trefoil Laves", "SIGMA_PLUS_MINUS", {3}, 8, "double", {"trefoil"}, 'B'},
      {"⟨111⟩ Gyroid", "SIGMA_STAR", {2}, 16, "both", {"saddle"}, 'B'},
  };
  return rows;
}

}  // namespace oracle
