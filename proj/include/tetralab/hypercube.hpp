#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "tetralab/face.hpp"

namespace tetralab {

/// How the facets of a face are listed within the incoming (or outgoing) block.
enum class FacetOrder { AscendingRank, DescendingRank };

/// Tie-breaking among ready vertices of a topological order.
enum class TieBreak { Lexicographic, ReverseLexicographic };

inline constexpr int kMaxGraphDimension = 6;

/// All faces of I^N with exactly k stars, in lexicographic order.
std::vector<FaceWord> enumerate_faces(int N, int k);

/// Orientation of `facet` inside `g`.  The facet fixes one free coordinate of g;
/// with rank r and value v it is incoming iff v == tau(r).
Orientation orientation(const FaceWord& g, const FaceWord& facet);

struct Facet {
  FaceWord face;
  int position = 0;  // the coordinate fixed by the facet
  int rank = 0;      // rank of that coordinate inside the parent
  Orientation orientation = Orientation::Incoming;
};

std::vector<Facet> facets(const FaceWord& g);
std::vector<FaceWord> incoming_facets(const FaceWord& g, FacetOrder order);
std::vector<FaceWord> outgoing_facets(const FaceWord& g, FacetOrder order);

struct FaceGraphEdge {
  FaceWord from;
  FaceWord to;
  FaceWord via;  // shared facet; empty word for the bipartite flow graph
};

struct FaceGraph {
  std::vector<FaceWord> vertices;
  std::vector<FaceGraphEdge> edges;
};

struct SimplexComponent {
  std::vector<FaceWord> chain;  // topological order = order of application
  bool transitive_tournament = false;
};

/// G_{n+1}: facets of I^(n+1) joined through shared (n-1)-faces that are
/// outgoing for one facet and incoming for the other.
struct ComponentGraph {
  int n = 0;
  FaceGraph graph;
  int component_count = 0;
  SimplexComponent left;   // contains (0**...*)
  SimplexComponent right;  // contains (1**...*)
};

ComponentGraph component_graph(int n);

/// f is not outgoing for any (dim f + 1)-face of I^N containing it.
bool is_absolutely_incoming(int N, const FaceWord& f);
bool is_absolutely_outgoing(int N, const FaceWord& f);

/// Literal absolute-position pattern for absolutely incoming faces: the t-th
/// fixed position p_t (1-based positions) carries tau(p_t - t + 1).  For two
/// fixed positions i < j this is tau(i) at i and tau(j-1) at j.
bool matches_absolute_tau_pattern(const FaceWord& f);

/// Gamma_{N,n}: bipartite graph on (n-1)-faces and n-faces with
/// facet -> face when incoming and face -> facet when outgoing.
struct FlowGraph {
  int N = 0;
  int n = 0;
  std::vector<FaceWord> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // indices into vertices
  std::vector<std::size_t> order;                          // topological order
};

FlowGraph flow_graph(int N, int n, TieBreak tie_break = TieBreak::Lexicographic);

/// Kahn's algorithm with a priority rule; `before(a, b)` picks which ready
/// vertex goes first.  Throws StructuralError naming a cycle when one exists.
std::vector<std::size_t> topological_order(
    std::size_t vertex_count, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
    const std::function<bool(std::size_t, std::size_t)>& before,
    const std::function<std::string(std::size_t)>& name);

struct CensusRow {
  int k = 0;  // 1-based position along the left chain
  FaceWord face;
  std::array<int, 4> counts{};    // abs. incoming, inner incoming, abs. outgoing, inner outgoing
  std::array<int, 4> expected{};  // (n-k+1, k-1, k-1, n-k+1)
  bool matches() const { return counts == expected; }
};

std::vector<CensusRow> i_configuration_census(int n);

}  // namespace tetralab
