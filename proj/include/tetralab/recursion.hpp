#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "tetralab/coloring.hpp"
#include "tetralab/correspondence.hpp"
#include "tetralab/sparse_operator.hpp"

namespace tetralab {

/// Color of an n-face read off a coloring of (n-1)-faces: incoming facets
/// then outgoing facets, each block by ascending rank, as one digit string in
/// base |X| with the first incoming facet most significant.
std::uint32_t face_color(const ColoringProblem& p, const CubeColoring& c, const FaceWord& face,
                         std::uint32_t base = 2);

struct LiftedCorrespondence {
  Correspondence relation;            // arity n+1 over X^(2n)
  int n = 0;                          // level of the source solution
  FacetOrder leg_order = FacetOrder::DescendingRank;
  std::size_t colorings = 0;          // |C_{n+1}^{n-1}(X, R)|
  std::map<std::size_t, std::size_t> fibers;  // outputs per input -> inputs
  bool injective_on_colorings = false;
};

/// rho_n: one (incoming facets, outgoing facets) pair per admissible coloring
/// of the (n-1)-faces of I^(n+1).  Legs of the result follow `leg_order`.
LiftedCorrespondence rho(const Correspondence& r, int n, FacetOrder inner_order = FacetOrder::AscendingRank,
                         FacetOrder leg_order = FacetOrder::DescendingRank);

SimplexReport check_lifted_solution(const LiftedCorrespondence& w);

struct ImageReport {
  int N = 0;
  std::size_t source_colorings = 0;  // C_N^{n-1}(X, R)
  std::size_t image_size = 0;
  std::size_t target_colorings = 0;  // C_N^n(X^{2n}, W)
  std::size_t image_not_in_target = 0;
  std::size_t target_not_in_image = 0;
  bool coincides = false;
  double runtime_ms = 0;
};

/// Compares rho applied face by face to C_N^{n-1}(X, R) with C_N^n(X^{2n}, W).
ImageReport image_coincidence(const Correspondence& r, const LiftedCorrespondence& w, int N,
                              FacetOrder inner_order = FacetOrder::AscendingRank);

/// The Ising tetrahedron solution: rho of the Ising Yang-Baxter relation.
const LiftedCorrespondence& phi();
/// 0/1 operator of phi on three legs of dimension 16 (leg basis (i1,i2,o1,o2),
/// i1 most significant, bit 0 for +).
SparseOperator phi_matrix();

}  // namespace tetralab
