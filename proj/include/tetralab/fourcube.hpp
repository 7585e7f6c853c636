#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tetralab/face.hpp"
#include "tetralab/sparse_operator.hpp"

namespace tetralab {

enum class Side { Left, Right };

using CubeDirections = std::array<int, 3>;  // 1-based free positions, ascending

/// The four 3-faces of the 4-cube in application order of one side.
const std::vector<FaceWord>& chain_cubes(Side side);
CubeDirections cube_directions(const FaceWord& cube);

/// Chosen edges of a chain cube, in table row order.
const std::vector<FaceWord>& chosen_edges(const FaceWord& cube, Side side);
/// Both tables in star notation: a header of cube words, then one row per
/// chosen edge.
std::string render_tables_star();

/// Chosen edges of a cube with the given directions, in cube-local words.
std::vector<FaceWord> local_chosen_edges(const CubeDirections& dirs);

struct SharedEdges {
  std::vector<FaceWord> edges;  // covered by both chains
  std::map<FaceWord, std::vector<FaceWord>> left;   // per-cube partition
  std::map<FaceWord, std::vector<FaceWord>> right;
  bool equals_complement_of_corners = false;  // complement of edges at 1010 and 0101
  bool partitions_valid = false;              // each part inside its cube, disjoint, union = edges
  bool tables_inside_partition = false;       // chosen edges lie in their cube's part
};

SharedEdges shared_edges();

// ---- closed formula for the edge choice -------------------------------

enum class SReading { Raw, FaceTau, CubeTau };

struct FormulaConvention {
  bool mn_rank_minus_one = true;  // m, n as rank-1 (else rank)
  bool ijk_raw = false;           // i, j, k as raw positions (else p1, p2-1, p3-2)
  bool d_flipped = false;         // d = 1 for incoming (else 0)
  bool l_free_axis = false;       // l names the free axis of the edge (else the fixed one)
  SReading s_reading = SReading::FaceTau;
  std::string str() const;
};

struct FaceLocal {
  int m = 1;  // 1-based ranks of the face's free axes inside the cube, m < n
  int n = 2;
  int d = 0;  // 0 incoming, 1 outgoing
};

struct EdgeLocal {
  int l = 0;
  int s = 0;
};

/// The two mod-2 formulas, evaluated on inputs encoded per `conv`.
EdgeLocal edge_choice_formula(const FaceLocal& fl, const CubeDirections& dirs, const FormulaConvention& conv);
/// Edge of the 4-cube selected by the formula for one face of a cube.
FaceWord formula_edge(const FaceWord& cube, const FaceLocal& fl, const FormulaConvention& conv);

struct CalibrationEntry {
  FormulaConvention convention;
  int mismatched_faces = 0;
};

struct CalibrationReport {
  int faces = 0;  // 6 faces x 8 cubes
  std::vector<CalibrationEntry> entries;  // every convention tried, best first
  std::vector<FormulaConvention> matching;
  CalibrationEntry best;
  bool found() const { return !matching.empty(); }
};

CalibrationReport calibrate_formula();

struct PropertyCheck {
  std::string name;
  bool holds = false;
  std::string detail;
};

struct PropertiesReport {
  std::vector<PropertyCheck> checks;
  bool all_hold() const;
};

/// (a) choice depends only on directions, (b) three directions per cube,
/// (c) 1<->4, 2<->3 reversal maps the left table onto the right one,
/// (d) disjoint union is the 24 shared edges, (e) minimal domination; plus
/// informational checks (2-to-1 face projection, pairwise non-adjacency).
PropertiesReport structural_properties_audit();

// ---- weights --------------------------------------------------------------

/// How (l, s) -> (1-l, 1-s) is read on the face basis (i1, i2, o1, o2).
///   EdgeDirection: s is incoming/outgoing, giving (i1 o2)(i2 o1).
///   FixedValue:    s is the fixed coordinate value, giving (i1 i2)(o1 o2).
enum class AReading { EdgeDirection, FixedValue };

std::array<std::uint32_t, 16> a_permutation(AReading reading);
SparseOperator a_operator(AReading reading);

/// Direction pair -> slot: (1,2)->1 (1,3)->2 (2,3)->3 (1,4)->4 (2,4)->5 (3,4)->6.
int slot_number(int p, int q);
/// Slots (1-based) of the legs of the weight for a cube, in leg order.
std::array<int, 3> slot_subscripts(const CubeDirections& dirs);

/// Phi_M with each entry times u^(sum over the 6 faces of the chosen edge spin).
SparseOperator build_W(const CubeDirections& dirs);
std::shared_ptr<const SparseOperator> cached_W(const CubeDirections& dirs);

struct ChainSlotFactor {
  FaceWord cube;
  CubeDirections dirs{};
  std::vector<std::size_t> slots;  // 0-based
};

/// Left and right tetrahedron chains in written order.
std::pair<std::vector<ChainSlotFactor>, std::vector<ChainSlotFactor>> tetrahedron_layout();

EquationReport check_tetrahedron_matrix(unsigned threads = 0);

struct ResidualEntry {
  std::string relabeling;  // square symmetry in (l, s) value coordinates
  bool holds = false;
  std::uint64_t mismatched_inputs = 0;
};

struct TteReport {
  AReading reading = AReading::EdgeDirection;
  std::string lhs_label;
  std::string rhs_label;
  bool subscripts_match_printed = false;
  EquationReport exact;
  EquationReport at_one;          // u -> 1 on both sides
  bool weights_reduce_to_phi = false;
  bool supports_agree = false;    // lhs and rhs supports, when the exact check fails
  std::vector<ResidualEntry> residual;  // filled when the exact check fails
};

TteReport check_twisted_tetrahedron(AReading reading = AReading::EdgeDirection, unsigned threads = 0,
                                    bool residual_search = true);

struct TteEquivalenceReport {
  bool transpositions_commute = false;
  bool relabeled_form_identical = false;
  EquationReport tte2;
};

TteEquivalenceReport check_tte_equivalence(AReading reading = AReading::EdgeDirection, unsigned threads = 0);

}  // namespace tetralab
