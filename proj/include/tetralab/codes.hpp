#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tetralab/face.hpp"

namespace tetralab {

/// Binary words of a fixed length; character i of the text form is bit i.
struct WordSet {
  int length = 0;
  std::vector<std::uint32_t> words;

  static WordSet parse(const std::vector<std::string>& text);
  std::string str(std::uint32_t w) const;
};

/// The 8-cycle 0100,1100,1101,1001,0001,0011,0111,0110 in I^4.
WordSet coil8();
/// {1111, 0011, 1001, 0000, 1100, 0110}.
WordSet redundancy_code();

struct CycleCheck {
  bool distinct = false;
  bool steps_ok = false;   // consecutive and wraparound at Hamming distance 1
  bool induced = false;
  std::optional<std::size_t> bad_step;                       // index i of a bad step i -> i+1
  std::optional<std::pair<std::size_t, std::size_t>> chord;  // positions of a chord
  bool is_cycle() const { return distinct && steps_ok; }
};

CycleCheck check_cycle(const WordSet& cycle);
bool is_induced_cycle(const WordSet& cycle);

/// Rotated to the least vertex, oriented towards the smaller neighbour.
WordSet canonical_cycle(const WordSet& cycle);
/// Vertex sequence of a cycle given as edges (words with one '*').
WordSet cycle_from_edges(const std::vector<FaceWord>& edges);

struct ChainCodeReport {
  bool holds = true;
  std::uint64_t pairs_checked = 0;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  int witness_cycle_distance = 0;
  int witness_hamming = 0;
};

/// Every pair at cycle distance >= k is at Hamming distance >= k.  Open
/// paths use path distance.
ChainCodeReport chain_code_check(const WordSet& cycle, int k, bool closed = true);

int hamming(std::uint32_t a, std::uint32_t b);
int min_distance(const WordSet& code);
bool complement_closed(const WordSet& code);

struct PairDistance {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  int in_cube = 0;
  int in_subgraph = -1;  // -1: disconnected
};

struct DistanceAuditReport {
  std::vector<FaceWord> subgraph_edges;
  std::vector<std::uint32_t> vertices;
  std::vector<PairDistance> pairs;
  std::vector<PairDistance> stated_violations;   // d' <= 2 but d > 2
  std::vector<PairDistance> converse_violations; // d <= 2 but d' > 2
  bool coil_inside = false;
  std::vector<FaceWord> coil_edges_missing;
  bool stated_holds() const { return stated_violations.empty(); }
  bool converse_holds() const { return converse_violations.empty(); }
};

/// Distances in I^4 against the subgraph of chosen edges of the left chain.
DistanceAuditReport subgraph_distance_audit();

}  // namespace tetralab
