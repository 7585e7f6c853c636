#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tetralab/fourcube.hpp"
#include "tetralab/laurent.hpp"

namespace tetralab {

/// Periodic L1 x L2 x L3 cubic lattice.  Edge (v, a) joins v and v + e_a;
/// plaquette (v, c) is the unit square at v normal to axis c.  For L = 2 the
/// two axis-a edges between the same vertices stay distinct.
class TorusLattice {
 public:
  explicit TorusLattice(std::array<int, 3> sizes);
  static TorusLattice parse(const std::string& text);  // "2x2x2"

  const std::array<int, 3>& sizes() const { return L_; }
  std::string str() const;
  int vertex_count() const { return V_; }
  int edge_count() const { return 3 * V_; }
  int plaquette_count() const { return 3 * V_; }

  int vertex(int x, int y, int z) const;
  std::array<int, 3> coords(int v) const;
  int shift(int v, int axis, int by = 1) const;
  int edge(int v, int axis) const { return 3 * v + axis; }
  std::array<int, 2> endpoints(int e) const;
  /// The four edges of plaquette (v, c).
  std::array<int, 4> plaquette_edges(int v, int normal) const;
  const std::vector<std::uint64_t>& plaquette_masks() const { return masks_; }

 private:
  std::array<int, 3> L_;
  int V_;
  std::vector<std::uint64_t> masks_;
};

/// Sum over spins of u^(sum over edges of s_i s_j).
Laurent z_spin(const TorusLattice& lat);

enum class EdgeMethod { Exhaustive, Generators };

struct EdgeSum {
  std::map<int, Laurent> sectors;  // holonomy bits (axis a -> bit a) -> polynomial
  std::uint64_t admissible = 0;
  bool sectors_well_defined = true;
  EdgeMethod method = EdgeMethod::Exhaustive;
  Laurent total() const;
  Laurent trivial() const;
};

/// Sum over edge spins with every plaquette product +1 of u^(sum of edge spins).
EdgeSum z_edge(const TorusLattice& lat, EdgeMethod method = EdgeMethod::Exhaustive);

struct NetworkSum {
  Laurent value;
  std::uint64_t supported = 0;           // configurations with a nonzero summand
  bool support_swept = false;             // all 2^E configurations inspected
  bool support_equals_admissible = false;
  bool bindings_consistent = false;       // each plaquette: out-leg of one cell, in-leg of another
};

/// Closed network of one weight per 3-cell, summed over edge configurations.
NetworkSum z_network(const TorusLattice& lat, const CubeDirections& dirs = {1, 2, 3},
                     EdgeMethod method = EdgeMethod::Exhaustive);

struct Coverage {
  std::vector<int> multiplicity;  // per lattice edge
  bool exactly_one = false;
};

/// How many cells choose each lattice edge.
Coverage chosen_edge_coverage(const TorusLattice& lat, const CubeDirections& dirs = {1, 2, 3});

struct RelateReport {
  Laurent spin;
  EdgeSum edge;
  NetworkSum network;
  Coverage coverage;
  bool spin_is_twice_trivial = false;
  int kappa = 0;  // 0 when no exponent scale works
  BigInt c = 0;
  bool holds = false;
  std::string diff;  // when no relation is found
};

RelateReport relate(const TorusLattice& lat, EdgeMethod method = EdgeMethod::Exhaustive);

}  // namespace tetralab
