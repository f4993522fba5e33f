#pragma once

#include <string>
#include <vector>

#include "ihara/graph.hpp"

namespace ihara {

// Deterministic generators for the test corpus. Kinds and parameters:
//   cycle n            (n >= 3)
//   complete n         (n >= 2)
//   complete_bipartite a b
//   petersen
//   bowtie             (two triangles glued at vertex 0)
//   tree_ball d r      (radius-r ball of the d-regular tree, root 0)
//   grid_ball d r      (radius-r l1 ball of the Z^d lattice, origin 0)
struct FamilySpec {
  std::string kind;
  std::vector<Vertex> params;
};

Graph make_family(const FamilySpec& spec);

std::vector<std::string> family_kinds();

}  // namespace ihara
