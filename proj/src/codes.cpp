#include "tetralab/codes.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <queue>
#include <set>

#include "tetralab/error.hpp"
#include "tetralab/fourcube.hpp"

namespace tetralab {

WordSet WordSet::parse(const std::vector<std::string>& text) {
  WordSet s;
  if (text.empty()) return s;
  s.length = static_cast<int>(text.front().size());
  if (s.length < 1 || s.length > 31) throw UsageError("word length must be 1..31");
  for (const auto& t : text) {
    if (static_cast<int>(t.size()) != s.length) throw UsageError("words of unequal length: " + t);
    std::uint32_t w = 0;
    for (int i = 0; i < s.length; ++i) {
      if (t[i] != '0' && t[i] != '1') throw UsageError("not a binary word: " + t);
      if (t[i] == '1') w |= 1u << i;
    }
    s.words.push_back(w);
  }
  return s;
}

std::string WordSet::str(std::uint32_t w) const {
  std::string s(length, '0');
  for (int i = 0; i < length; ++i)
    if (w >> i & 1u) s[i] = '1';
  return s;
}

WordSet coil8() {
  return WordSet::parse({"0100", "1100", "1101", "1001", "0001", "0011", "0111", "0110"});
}

WordSet redundancy_code() { return WordSet::parse({"1111", "0011", "1001", "0000", "1100", "0110"}); }

int hamming(std::uint32_t a, std::uint32_t b) { return std::popcount(a ^ b); }

CycleCheck check_cycle(const WordSet& cycle) {
  CycleCheck r;
  const auto& v = cycle.words;
  const std::size_t m = v.size();
  r.distinct = std::set<std::uint32_t>(v.begin(), v.end()).size() == m;
  r.steps_ok = m >= 3 || m == 0;
  for (std::size_t i = 0; i < m && r.steps_ok; ++i)
    if (hamming(v[i], v[(i + 1) % m]) != 1) {
      r.steps_ok = false;
      r.bad_step = i;
    }
  if (!r.is_cycle()) return r;
  r.induced = true;
  for (std::size_t i = 0; i < m && r.induced; ++i)
    for (std::size_t j = i + 2; j < m; ++j) {
      if (i == 0 && j == m - 1) continue;
      if (hamming(v[i], v[j]) == 1) {
        r.induced = false;
        r.chord = {i, j};
        break;
      }
    }
  return r;
}

bool is_induced_cycle(const WordSet& cycle) { return check_cycle(cycle).induced; }

WordSet canonical_cycle(const WordSet& cycle) {
  WordSet out = cycle;
  auto& v = out.words;
  if (v.empty()) return out;
  auto less = [&](std::uint32_t a, std::uint32_t b) { return cycle.str(a) < cycle.str(b); };
  auto least = std::min_element(v.begin(), v.end(), less);
  std::rotate(v.begin(), least, v.end());
  if (v.size() > 2 && less(v.back(), v[1])) std::reverse(v.begin() + 1, v.end());
  return out;
}

WordSet cycle_from_edges(const std::vector<FaceWord>& edges) {
  if (edges.size() < 3) throw UsageError("a cycle needs at least 3 edges");
  WordSet s;
  s.length = edges.front().size();
  std::map<std::uint32_t, std::vector<std::uint32_t>> adj;
  for (const auto& e : edges) {
    if (e.size() != s.length || e.dimension() != 1) throw UsageError("not an edge of I^n: " + e.str());
    const auto ends = e.vertices();
    adj[ends[0]].push_back(ends[1]);
    adj[ends[1]].push_back(ends[0]);
  }
  for (const auto& [v, nb] : adj)
    if (nb.size() != 2) throw UsageError("edge set is not a cycle: vertex degree " + std::to_string(nb.size()));
  std::uint32_t prev = adj.begin()->first;
  std::uint32_t cur = adj.begin()->second.front();
  s.words.push_back(prev);
  while (cur != s.words.front()) {
    s.words.push_back(cur);
    const auto& nb = adj[cur];
    const std::uint32_t next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  if (s.words.size() != adj.size()) throw UsageError("edge set is not a single cycle");
  return canonical_cycle(s);
}

ChainCodeReport chain_code_check(const WordSet& cycle, int k, bool closed) {
  ChainCodeReport r;
  const auto& v = cycle.words;
  const std::size_t m = v.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      int d = static_cast<int>(j - i);
      if (closed) d = std::min<int>(d, static_cast<int>(m) - d);
      if (d < k) continue;
      ++r.pairs_checked;
      const int h = hamming(v[i], v[j]);
      if (h < k && r.holds) {
        r.holds = false;
        r.witness = {i, j};
        r.witness_cycle_distance = d;
        r.witness_hamming = h;
      }
    }
  return r;
}

int min_distance(const WordSet& code) {
  if (code.words.size() < 2) throw UsageError("min_distance needs at least two words");
  int best = code.length + 1;
  for (std::size_t i = 0; i < code.words.size(); ++i)
    for (std::size_t j = i + 1; j < code.words.size(); ++j) best = std::min(best, hamming(code.words[i], code.words[j]));
  return best;
}

bool complement_closed(const WordSet& code) {
  const std::uint32_t all = (1u << code.length) - 1;
  const std::set<std::uint32_t> s(code.words.begin(), code.words.end());
  return std::all_of(s.begin(), s.end(), [&](std::uint32_t w) { return s.count(w ^ all) > 0; });
}

namespace {

std::vector<int> bfs(std::uint32_t from, const std::map<std::uint32_t, std::vector<std::uint32_t>>& adj,
                     int vertex_count) {
  std::vector<int> dist(vertex_count, -1);
  std::queue<std::uint32_t> q;
  dist[from] = 0;
  q.push(from);
  while (!q.empty()) {
    const auto x = q.front();
    q.pop();
    auto it = adj.find(x);
    if (it == adj.end()) continue;
    for (auto y : it->second)
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        q.push(y);
      }
  }
  return dist;
}

FaceWord edge_between(int n, std::uint32_t a, std::uint32_t b) {
  const std::uint32_t diff = a ^ b;
  return FaceWord(n, static_cast<std::uint16_t>(diff), static_cast<std::uint16_t>(a & ~diff));
}

}  // namespace

DistanceAuditReport subgraph_distance_audit() {
  constexpr int n = 4;
  DistanceAuditReport r;
  std::map<std::uint32_t, std::vector<std::uint32_t>> sub, cube;
  for (const auto& c : chain_cubes(Side::Left))
    for (const auto& e : chosen_edges(c, Side::Left)) {
      r.subgraph_edges.push_back(e);
      const auto ends = e.vertices();
      sub[ends[0]].push_back(ends[1]);
      sub[ends[1]].push_back(ends[0]);
    }
  for (std::uint32_t v = 0; v < (1u << n); ++v)
    for (int p = 0; p < n; ++p) cube[v].push_back(v ^ (1u << p));
  for (const auto& [v, nb] : sub) r.vertices.push_back(v);

  for (std::size_t i = 0; i < r.vertices.size(); ++i) {
    const auto dc = bfs(r.vertices[i], cube, 1 << n);
    const auto ds = bfs(r.vertices[i], sub, 1 << n);
    for (std::size_t j = i + 1; j < r.vertices.size(); ++j) {
      PairDistance p{r.vertices[i], r.vertices[j], dc[r.vertices[j]], ds[r.vertices[j]]};
      r.pairs.push_back(p);
      const bool sub_close = p.in_subgraph >= 0 && p.in_subgraph <= 2;
      if (sub_close && p.in_cube > 2) r.stated_violations.push_back(p);
      if (p.in_cube <= 2 && !sub_close) r.converse_violations.push_back(p);
    }
  }

  const std::set<FaceWord> have(r.subgraph_edges.begin(), r.subgraph_edges.end());
  const auto coil = coil8();
  for (std::size_t i = 0; i < coil.words.size(); ++i) {
    const auto e = edge_between(n, coil.words[i], coil.words[(i + 1) % coil.words.size()]);
    if (!have.count(e)) r.coil_edges_missing.push_back(e);
  }
  r.coil_inside = r.coil_edges_missing.empty();
  return r;
}

}  // namespace tetralab
