#pragma once
// Small self-contained reimplementations used as test oracles.

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

inline int tau(int rank) { return rank % 2 == 0 ? 1 : 0; }

// Facets of a word as (facet word, rank, incoming).
struct TextFacet {
  std::string word;
  int rank;
  bool incoming;
};

inline std::vector<TextFacet> text_facets(const std::string& g) {
  std::vector<TextFacet> out;
  int rank = 0;
  for (std::size_t p = 0; p < g.size(); ++p) {
    if (g[p] != '*') continue;
    ++rank;
    for (char v : {'0', '1'}) {
      std::string f = g;
      f[p] = v;
      out.push_back({f, rank, (v - '0') == tau(rank)});
    }
  }
  return out;
}

// Edge spin (0 = +) from vertex spins: product of the endpoint spins.
inline int edge_spin(const std::string& edge, std::uint32_t spins) {
  std::uint32_t a = 0, b = 0;
  for (std::size_t p = 0; p < edge.size(); ++p) {
    if (edge[p] == '1') a |= 1u << p, b |= 1u << p;
    if (edge[p] == '*') b |= 1u << p;
  }
  return static_cast<int>(((spins >> a) ^ (spins >> b)) & 1u);
}

// (i1, i2, o1, o2) of a square, ascending rank inside each block, i1 most significant.
inline std::uint32_t square_color(const std::string& square, std::uint32_t spins) {
  std::vector<std::pair<int, std::string>> in, out;
  for (const auto& f : text_facets(square)) (f.incoming ? in : out).push_back({f.rank, f.word});
  std::sort(in.begin(), in.end());
  std::sort(out.begin(), out.end());
  std::uint32_t code = 0;
  for (const auto* block : {&in, &out})
    for (const auto& [r, w] : *block) code = code << 1 | static_cast<std::uint32_t>(edge_spin(w, spins));
  return code;
}

// The Ising cube relation from vertex spins: legs are the incoming and
// outgoing squares of the 3-cube by descending position of the fixed coordinate.
inline std::set<std::pair<std::uint64_t, std::uint64_t>> cube_relation() {
  std::vector<std::pair<int, std::string>> in, out;
  int pos = 0;
  for (const auto& f : text_facets("***")) {
    pos = static_cast<int>(f.word.find_first_not_of('*'));
    (f.incoming ? in : out).push_back({-pos, f.word});
  }
  std::sort(in.begin(), in.end());
  std::sort(out.begin(), out.end());
  std::set<std::pair<std::uint64_t, std::uint64_t>> rel;
  for (std::uint32_t s = 0; s < 256; ++s) {
    std::uint64_t a = 0, b = 0;
    for (const auto& [k, w] : in) a = a << 4 | square_color(w, s);
    for (const auto& [k, w] : out) b = b << 4 | square_color(w, s);
    rel.insert({a, b});
  }
  return rel;
}

}  // namespace oracle
