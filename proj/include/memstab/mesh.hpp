#pragma once

#include <array>
#include <vector>

namespace memstab {

/// Closed axis-aligned box [a1,b1] x [a2,b2] inside the unit square.
struct Box {
  double a1, b1, a2, b2;
  void validate() const;
};

/// Structured P1 triangulation of the unit square with Dirichlet bookkeeping.
///
/// Nodes are ordered row-major (by y, then x); every cell is split along its
/// lower-left -> upper-right diagonal, both triangles counterclockwise.
struct Mesh {
  int n = 0;       // subdivisions per side
  double h = 0.0;  // 1/n
  std::vector<std::array<double, 2>> nodes;
  std::vector<std::array<int, 3>> triangles;
  std::vector<char> boundary_mask;      // per node
  std::vector<int> interior_index;      // node -> interior DOF, -1 on boundary
  std::vector<int> interior_nodes;      // interior DOF -> node

  int num_nodes() const { return static_cast<int>(nodes.size()); }
  int num_triangles() const { return static_cast<int>(triangles.size()); }
  int num_interior() const { return static_cast<int>(interior_nodes.size()); }
};

Mesh build_unit_square_mesh(int n);

/// Interior DOF indices whose node lies in the closed box, ascending.
std::vector<int> nodes_in_region(const Mesh& mesh, const Box& region);

}  // namespace memstab
