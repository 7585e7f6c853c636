#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tetralab/correspondence.hpp"
#include "tetralab/hypercube.hpp"

namespace tetralab {

/// Colors of all (n-1)-faces of I^N, indexed like ColoringProblem::cells.
using CubeColoring = std::vector<std::uint32_t>;

inline constexpr std::uint32_t kUncolored = 0xffffffffu;

/// Precomputed incidence for propagating colorings of (n-1)-faces of I^N.
struct ColoringProblem {
  int N = 0;
  int n = 0;
  FacetOrder order = FacetOrder::AscendingRank;
  TieBreak tie_break = TieBreak::Lexicographic;
  std::vector<FaceWord> cells;                    // (n-1)-faces, lexicographic
  std::vector<FaceWord> faces;                    // n-faces in propagation order
  std::vector<std::vector<std::size_t>> ins;      // per face, cell indices in `order`
  std::vector<std::vector<std::size_t>> outs;
  std::vector<std::size_t> seeds;                 // absolutely incoming cells
  std::vector<std::size_t> sinks;                 // absolutely outgoing cells
  std::unordered_map<FaceWord, std::size_t> index;

  std::size_t cell(const FaceWord& f) const;
};

ColoringProblem coloring_problem(int N, int n, FacetOrder order = FacetOrder::AscendingRank,
                                 TieBreak tie_break = TieBreak::Lexicographic);

/// All admissible completions of a (possibly partial) coloring.  Uncolored
/// seeds are branched over lazily, so an empty start enumerates everything.
std::vector<CubeColoring> propagate(const ColoringProblem& p, const Correspondence& r, CubeColoring start);

/// Completions of a seed given in the order of `p.seeds`.
std::vector<CubeColoring> propagate_seed(const ColoringProblem& p, const Correspondence& r,
                                         const std::vector<std::uint32_t>& seed);

std::vector<CubeColoring> enumerate_colorings(const ColoringProblem& p, const Correspondence& r);

bool is_admissible(const ColoringProblem& p, const Correspondence& r, const CubeColoring& c);

/// Edge colorings of I^N induced by vertex spins (edge = product of its ends),
/// one per vertex assignment modulo the global flip.  Cells as in
/// coloring_problem(N, 2).
std::vector<CubeColoring> vertex_shortcut(int N);

struct PathAuditReport {
  int N = 0;
  int n = 0;
  bool independent = true;
  std::uint64_t seeds_checked = 0;
  std::uint64_t differing_seeds = 0;
  std::optional<std::vector<std::uint32_t>> witness_seed;
  std::optional<FaceWord> witness_face;  // first absolutely outgoing face that differs
  double runtime_ms = 0;
};

/// Writer-only propagation: each cell keeps the color of the first face that
/// outputs it, later faces are not checked.  The sets of absolutely outgoing
/// projections under the two tie-break orders are compared per seed.
PathAuditReport path_independence_audit(int N, int n, const Correspondence& r,
                                        FacetOrder order = FacetOrder::AscendingRank);

std::string render_coloring(const ColoringProblem& p, const ColorSet& colors, const CubeColoring& c);

}  // namespace tetralab
