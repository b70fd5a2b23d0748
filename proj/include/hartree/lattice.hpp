// Uniform square lattice on (0,D)^2 with homogeneous Dirichlet boundary.
#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace hartree {

// Geometry of the bilinear finite element grid. Degrees of freedom live on
// the (m-2)^2 interior nodes only; boundary values are identically zero and
// never stored. Interior nodes are numbered row-major with the x index
// fastest.
struct LatticeSpec {
  double side_length = 1.0;  // domain edge D
  int node_count = 4;        // nodes per side, boundary included (m)
  double spacing = 1.0 / 3.0;  // h = D/(m-1)
  int interior_per_side = 2;   // m-2
  int interior_count = 4;      // M = (m-2)^2
};

inline LatticeSpec make_lattice(double side_length, int node_count) {
  if (!(side_length > 0.0))
    throw std::invalid_argument("lattice: side length must be positive");
  if (node_count < 4)
    throw std::invalid_argument("lattice: need at least 4 nodes per side");
  LatticeSpec lat;
  lat.side_length = side_length;
  lat.node_count = node_count;
  lat.spacing = side_length / static_cast<double>(node_count - 1);
  lat.interior_per_side = node_count - 2;
  lat.interior_count = lat.interior_per_side * lat.interior_per_side;
  return lat;
}

inline bool same_lattice(const LatticeSpec& a, const LatticeSpec& b) {
  return a.node_count == b.node_count && a.side_length == b.side_length;
}

// Interior pair (ix, iy) -> linear index, stride m-2.
inline int interior_index(int ix, int iy, const LatticeSpec& lat) {
  const int n = lat.interior_per_side;
  if (ix < 0 || ix >= n || iy < 0 || iy >= n)
    throw std::out_of_range("lattice: interior pair (" + std::to_string(ix) +
                            "," + std::to_string(iy) + ") outside [0," +
                            std::to_string(n) + ")^2");
  return ix + iy * n;
}

// Linear index -> interior pair; inverse of interior_index.
inline std::array<int, 2> interior_pair(int j, const LatticeSpec& lat) {
  if (j < 0 || j >= lat.interior_count)
    throw std::out_of_range("lattice: interior index " + std::to_string(j) +
                            " outside [0," +
                            std::to_string(lat.interior_count) + ")");
  const int n = lat.interior_per_side;
  return {j % n, j / n};
}

// Coordinates of interior node j. The pair (ix, iy) sits at
// ((ix+1)h, (iy+1)h); every position is strictly inside the domain.
inline std::array<double, 2> node_position(int j, const LatticeSpec& lat) {
  const auto p = interior_pair(j, lat);
  return {(p[0] + 1) * lat.spacing, (p[1] + 1) * lat.spacing};
}

}  // namespace hartree
