#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "doctest.h"
#include "tetralab/codes.hpp"
#include "tetralab/error.hpp"
#include "tetralab/lattice.hpp"

using namespace tetralab;

namespace {

// Spin sum written against coordinates, one bond per vertex and axis.
Laurent naive_z_spin(int L1, int L2, int L3) {
  const int V = L1 * L2 * L3;
  std::map<int, BigInt> terms;
  auto idx = [&](int x, int y, int z) { return (x % L1) + L1 * ((y % L2) + L2 * (z % L3)); };
  for (std::uint32_t s = 0; s < (1u << V); ++s) {
    int h = 0;
    for (int z = 0; z < L3; ++z)
      for (int y = 0; y < L2; ++y)
        for (int x = 0; x < L1; ++x) {
          const int me = 1 - 2 * static_cast<int>(s >> idx(x, y, z) & 1u);
          for (int nb : {idx(x + 1, y, z), idx(x, y + 1, z), idx(x, y, z + 1)})
            h += me * (1 - 2 * static_cast<int>(s >> nb & 1u));
        }
    terms[h] += 1;
  }
  return Laurent::from_terms(terms);
}

}  // namespace

TEST_CASE("torus lattice incidence") {
  const TorusLattice lat({2, 2, 3});
  CHECK(lat.edge_count() == 3 * lat.vertex_count());
  std::vector<int> in_plaquettes(lat.edge_count(), 0);
  for (int v = 0; v < lat.vertex_count(); ++v)
    for (int c = 0; c < 3; ++c)
      for (int e : lat.plaquette_edges(v, c)) ++in_plaquettes[e];
  for (int n : in_plaquettes) CHECK(n == 4);
  CHECK(TorusLattice::parse("2x3x3").sizes() == std::array<int, 3>{2, 3, 3});
  CHECK_THROWS_AS(TorusLattice::parse("2x2"), UsageError);
  CHECK_THROWS_AS(TorusLattice({1, 2, 2}), UsageError);
  CHECK_THROWS_AS(TorusLattice({2, 3, 4}), UsageError);
}

TEST_CASE("spin partition function") {
  const TorusLattice lat({2, 2, 2});
  const auto z = z_spin(lat);
  CHECK(z.at_one() == 256);
  CHECK(z.max_exponent() == 24);
  CHECK(z.coefficient(24) == 2);
  CHECK(z == naive_z_spin(2, 2, 2));
  CHECK(z == z.reflect());
  CHECK(z_spin(TorusLattice({2, 2, 3})) == naive_z_spin(2, 2, 3));
}

TEST_CASE("edge sums and sectors") {
  const TorusLattice lat({2, 2, 2});
  const auto e = z_edge(lat);
  CHECK(e.admissible == 1024);
  CHECK(e.admissible == (1u << (lat.vertex_count() - 1)) * 8u);
  CHECK(e.sectors.size() == 8);
  CHECK(e.trivial().at_one() == 128);
  CHECK(e.sectors_well_defined);
  CHECK(Laurent(2) * e.trivial() == z_spin(lat));
  const auto g = z_edge(lat, EdgeMethod::Generators);
  CHECK(g.sectors == e.sectors);

  // spin configurations land in the trivial sector, two to one
  std::map<std::uint64_t, int> hits;
  for (std::uint32_t s = 0; s < 256; ++s) {
    std::uint64_t cfg = 0;
    for (int ed = 0; ed < lat.edge_count(); ++ed) {
      const auto [a, b] = lat.endpoints(ed);
      if (((s >> a) ^ (s >> b)) & 1u) cfg |= 1ull << ed;
    }
    for (auto m : lat.plaquette_masks()) CHECK(std::popcount(cfg & m) % 2 == 0);
    ++hits[cfg];
  }
  CHECK(hits.size() == 128);
  for (const auto& [cfg, n] : hits) CHECK(n == 2);
}

TEST_CASE("network and relation") {
  const TorusLattice lat({2, 2, 2});
  const auto cov = chosen_edge_coverage(lat);
  CHECK(cov.exactly_one);
  const auto r = relate(lat);
  CHECK(r.network.bindings_consistent);
  CHECK(r.network.support_equals_admissible);
  CHECK(r.network.value.at_one() == 1024);
  CHECK(r.spin_is_twice_trivial);
  CHECK(r.kappa == 2);
  CHECK(r.c == 1);
  CHECK(r.holds);
  for (const auto& [exp, c] : r.network.value.terms()) CHECK(exp % 2 == 0);
}

TEST_CASE("induced cycles") {
  const auto coil = coil8();
  CHECK(is_induced_cycle(coil));
  CHECK(is_induced_cycle(WordSet::parse({"00", "01", "11", "10"})));
  CHECK(is_induced_cycle(WordSet::parse({"000", "100", "110", "111", "011", "001"})));
  const auto chorded = check_cycle(WordSet::parse({"000", "001", "011", "010", "110", "100"}));
  CHECK(chorded.is_cycle());
  CHECK_FALSE(chorded.induced);
  REQUIRE(chorded.chord.has_value());
  CHECK_FALSE(check_cycle(WordSet::parse({"000", "011", "001"})).steps_ok);

  // rotation and reversal
  for (std::size_t k = 0; k < coil.words.size(); ++k) {
    WordSet rot = coil;
    std::rotate(rot.words.begin(), rot.words.begin() + static_cast<long>(k), rot.words.end());
    CHECK(is_induced_cycle(rot));
    CHECK(canonical_cycle(rot).words == canonical_cycle(coil).words);
    std::reverse(rot.words.begin(), rot.words.end());
    CHECK(is_induced_cycle(rot));
    CHECK(canonical_cycle(rot).words == canonical_cycle(coil).words);
  }
  CHECK(coil.str(canonical_cycle(coil).words.front()) == "0001");
}

TEST_CASE("cycles from edge sets") {
  std::vector<FaceWord> edges;
  const auto coil = coil8();
  for (std::size_t i = 0; i < coil.words.size(); ++i) {
    const auto a = coil.words[i], b = coil.words[(i + 1) % coil.words.size()];
    edges.push_back(FaceWord(4, static_cast<std::uint16_t>(a ^ b), static_cast<std::uint16_t>(a & b)));
  }
  std::reverse(edges.begin(), edges.end());
  CHECK(cycle_from_edges(edges).words == canonical_cycle(coil).words);
  edges.pop_back();
  CHECK_THROWS_AS(cycle_from_edges(edges), UsageError);
}

TEST_CASE("chain code check") {
  CHECK(chain_code_check(coil8(), 2).holds);
  // Gray code of I^3 as a Hamiltonian cycle
  const auto gray = WordSet::parse({"000", "100", "110", "010", "011", "111", "101", "001"});
  CHECK(chain_code_check(gray, 1).holds);
  // a path that comes back next to its start
  const auto path = WordSet::parse({"0000", "1000", "1100", "0100"});
  const auto r = chain_code_check(path, 2, false);
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness_hamming == 1);
  CHECK(r.witness_cycle_distance >= 2);
}

TEST_CASE("code distances") {
  const auto code = redundancy_code();
  CHECK(min_distance(code) == 2);
  CHECK(complement_closed(code));
  CHECK(min_distance(WordSet::parse({"0000", "1111"})) == 4);
  CHECK_THROWS_AS(min_distance(WordSet::parse({"01"})), UsageError);
  CHECK_FALSE(complement_closed(WordSet::parse({"0000", "0011"})));
  // translation and coordinate permutation
  for (std::uint32_t t = 0; t < 16; ++t) {
    WordSet moved = code;
    for (auto& w : moved.words) w ^= t;
    CHECK(min_distance(moved) == 2);
    WordSet perm = code;
    for (auto& w : perm.words) w = ((w & 1u) << 3) | ((w >> 1 & 1u) << 0) | ((w >> 2 & 1u) << 1) | ((w >> 3 & 1u) << 2);
    CHECK(min_distance(perm) == 2);
  }
  CHECK_THROWS_AS(WordSet::parse({"01", "011"}), UsageError);
}

TEST_CASE("subgraph distance audit") {
  const auto a = subgraph_distance_audit();
  CHECK(a.subgraph_edges.size() == 12);
  CHECK(a.stated_holds());
  CHECK(a.coil_inside);
  // independent recount of the converse direction from the pair table
  std::size_t converse = 0;
  for (const auto& p : a.pairs) {
    CHECK(p.in_cube == std::popcount(p.a ^ p.b));
    if (p.in_subgraph >= 0) CHECK(p.in_subgraph >= p.in_cube);
    if (p.in_cube <= 2 && (p.in_subgraph < 0 || p.in_subgraph > 2)) ++converse;
  }
  CHECK(converse == a.converse_violations.size());
  CHECK(a.pairs.size() == a.vertices.size() * (a.vertices.size() - 1) / 2);
}
