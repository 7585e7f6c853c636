#include "tetralab/hypercube.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>
#include <sstream>
#include <unordered_map>

#include "tetralab/error.hpp"

namespace tetralab {

namespace {

void require_dimension(int N, int cap, const char* what) {
  if (N < 0 || N > cap) {
    throw UsageError(std::string(what) + ": dimension " + std::to_string(N) +
                     " outside supported range 0.." + std::to_string(cap));
  }
}

int fixed_coordinate_between(const FaceWord& g, const FaceWord& facet) {
  if (facet.size() != g.size() || facet.dimension() + 1 != g.dimension() || !g.contains(facet)) {
    throw UsageError("facet " + facet.str() + " is not incident to " + g.str());
  }
  const std::uint16_t diff = g.free_mask() & ~facet.free_mask();
  return std::countr_zero(static_cast<unsigned>(diff));
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<FaceWord> enumerate_faces(int N, int k) {
  require_dimension(N, kMaxDimension, "enumerate_faces");
  if (k < 0 || k > N) throw UsageError("enumerate_faces: face dimension out of range");
  std::vector<FaceWord> out;
  const unsigned full = (1u << N) - 1u;
  for (unsigned mask = 0; mask <= full; ++mask) {
    if (std::popcount(mask) != k) continue;
    const unsigned fixed = full & ~mask;
    // all value assignments on the fixed coordinates
    unsigned sub = 0;
    do {
      out.emplace_back(N, static_cast<std::uint16_t>(mask), static_cast<std::uint16_t>(sub));
      sub = (sub - fixed) & fixed;
    } while (sub != 0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Orientation orientation(const FaceWord& g, const FaceWord& facet) {
  const int pos = fixed_coordinate_between(g, facet);
  const int rank = g.rank_of(pos);
  return facet.value(pos) == tau(rank) ? Orientation::Incoming : Orientation::Outgoing;
}

std::vector<Facet> facets(const FaceWord& g) {
  std::vector<Facet> out;
  for (int pos : g.free_positions()) {
    const int rank = g.rank_of(pos);
    for (int v = 0; v <= 1; ++v) {
      out.push_back({g.fix(pos, v), pos, rank,
                     v == tau(rank) ? Orientation::Incoming : Orientation::Outgoing});
    }
  }
  return out;
}

static std::vector<FaceWord> facets_with(const FaceWord& g, Orientation o, FacetOrder order) {
  std::vector<FaceWord> out;
  for (const Facet& f : facets(g))
    if (f.orientation == o) out.push_back(f.face);
  // facets() lists by ascending rank already
  if (order == FacetOrder::DescendingRank) std::reverse(out.begin(), out.end());
  return out;
}

std::vector<FaceWord> incoming_facets(const FaceWord& g, FacetOrder order) {
  return facets_with(g, Orientation::Incoming, order);
}

std::vector<FaceWord> outgoing_facets(const FaceWord& g, FacetOrder order) {
  return facets_with(g, Orientation::Outgoing, order);
}

ComponentGraph component_graph(int n) {
  if (n < 1 || n + 1 > kMaxGraphDimension) throw UsageError("component_graph: n must be in 1..5");
  ComponentGraph result;
  result.n = n;
  const FaceWord cube = FaceWord::full(n + 1);
  for (const Facet& f : facets(cube)) result.graph.vertices.push_back(f.face);
  std::sort(result.graph.vertices.begin(), result.graph.vertices.end());
  const auto& V = result.graph.vertices;

  UnionFind uf(V.size());
  for (std::size_t a = 0; a < V.size(); ++a) {
    for (std::size_t b = 0; b < V.size(); ++b) {
      if (a == b) continue;
      const std::uint16_t fixed_a = V[a].free_mask() ^ cube.free_mask();
      const std::uint16_t fixed_b = V[b].free_mask() ^ cube.free_mask();
      if (fixed_a == fixed_b) continue;  // parallel facets share nothing
      const int pos_b = std::countr_zero(static_cast<unsigned>(fixed_b));
      const FaceWord shared = V[a].fix(pos_b, V[b].value(pos_b));
      if (orientation(V[a], shared) == Orientation::Outgoing &&
          orientation(V[b], shared) == Orientation::Incoming) {
        result.graph.edges.push_back({V[a], V[b], shared});
        uf.unite(a, b);
      }
    }
  }

  std::unordered_map<std::size_t, std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < V.size(); ++i) members[uf.find(i)].push_back(i);
  result.component_count = static_cast<int>(members.size());

  auto index_of = [&](const FaceWord& f) {
    return static_cast<std::size_t>(std::find(V.begin(), V.end(), f) - V.begin());
  };
  auto build = [&](const FaceWord& seed) {
    SimplexComponent comp;
    const auto& ids = members[uf.find(index_of(seed))];
    std::vector<std::pair<std::size_t, std::size_t>> local_edges;
    std::vector<std::vector<int>> adj(ids.size(), std::vector<int>(ids.size(), 0));
    for (const auto& e : result.graph.edges) {
      auto ia = std::find(ids.begin(), ids.end(), index_of(e.from));
      auto ib = std::find(ids.begin(), ids.end(), index_of(e.to));
      if (ia == ids.end() || ib == ids.end()) continue;
      const auto la = static_cast<std::size_t>(ia - ids.begin());
      const auto lb = static_cast<std::size_t>(ib - ids.begin());
      local_edges.emplace_back(la, lb);
      ++adj[la][lb];
    }
    bool tournament = true;
    for (std::size_t i = 0; i < ids.size(); ++i)
      for (std::size_t j = i + 1; j < ids.size(); ++j)
        if (adj[i][j] + adj[j][i] != 1) tournament = false;
    try {
      const auto order = topological_order(
          ids.size(), local_edges, [&](std::size_t x, std::size_t y) { return V[ids[x]] < V[ids[y]]; },
          [&](std::size_t x) { return V[ids[x]].str(); });
      for (std::size_t x : order) comp.chain.push_back(V[ids[x]]);
    } catch (const StructuralError&) {
      tournament = false;
      for (std::size_t id : ids) comp.chain.push_back(V[id]);
    }
    // a tournament is transitive iff acyclic; check consecutive + all forward edges
    if (tournament) {
      for (std::size_t i = 0; i < comp.chain.size(); ++i)
        for (std::size_t j = i + 1; j < comp.chain.size(); ++j) {
          const auto a = static_cast<std::size_t>(std::find(ids.begin(), ids.end(), index_of(comp.chain[i])) - ids.begin());
          const auto b = static_cast<std::size_t>(std::find(ids.begin(), ids.end(), index_of(comp.chain[j])) - ids.begin());
          if (adj[a][b] != 1) tournament = false;
        }
    }
    comp.transitive_tournament = tournament;
    return comp;
  };
  result.left = build(cube.fix(0, 0));
  result.right = build(cube.fix(0, 1));
  return result;
}

bool is_absolutely_incoming(int N, const FaceWord& f) {
  if (f.size() != N || f.dimension() >= N) throw UsageError("is_absolutely_incoming: need dim(f) < N");
  for (int pos : f.fixed_positions())
    if (orientation(f.release(pos), f) == Orientation::Outgoing) return false;
  return true;
}

bool is_absolutely_outgoing(int N, const FaceWord& f) {
  if (f.size() != N || f.dimension() >= N) throw UsageError("is_absolutely_outgoing: need dim(f) < N");
  for (int pos : f.fixed_positions())
    if (orientation(f.release(pos), f) == Orientation::Incoming) return false;
  return true;
}

bool matches_absolute_tau_pattern(const FaceWord& f) {
  int t = 0;
  for (int pos : f.fixed_positions()) {
    ++t;
    const int one_based = pos + 1;
    if (f.value(pos) != tau(one_based - t + 1)) return false;
  }
  return true;
}

std::vector<std::size_t> topological_order(
    std::size_t vertex_count, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
    const std::function<bool(std::size_t, std::size_t)>& before,
    const std::function<std::string(std::size_t)>& name) {
  std::vector<std::vector<std::size_t>> out(vertex_count);
  std::vector<std::size_t> indegree(vertex_count, 0);
  for (const auto& [a, b] : edges) {
    out[a].push_back(b);
    ++indegree[b];
  }
  auto later = [&](std::size_t x, std::size_t y) { return before(y, x); };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(later)> ready(later);
  for (std::size_t v = 0; v < vertex_count; ++v)
    if (indegree[v] == 0) ready.push(v);
  std::vector<std::size_t> order;
  order.reserve(vertex_count);
  while (!ready.empty()) {
    const std::size_t v = ready.top();
    ready.pop();
    order.push_back(v);
    for (std::size_t w : out[v])
      if (--indegree[w] == 0) ready.push(w);
  }
  if (order.size() == vertex_count) return order;

  // Walk backwards through unfinished vertices until one repeats.
  std::vector<std::vector<std::size_t>> in(vertex_count);
  for (const auto& [a, b] : edges)
    if (indegree[a] > 0 && indegree[b] > 0) in[b].push_back(a);
  std::size_t v = 0;
  while (indegree[v] == 0) ++v;
  std::vector<std::size_t> path;
  std::vector<int> seen(vertex_count, -1);
  while (seen[v] < 0) {
    seen[v] = static_cast<int>(path.size());
    path.push_back(v);
    v = in[v].front();
  }
  std::vector<std::size_t> cycle(path.begin() + seen[v], path.end());
  std::reverse(cycle.begin(), cycle.end());
  std::ostringstream msg;
  msg << "cycle detected:";
  for (std::size_t c : cycle) msg << ' ' << name(c) << " ->";
  msg << ' ' << name(cycle.front());
  throw StructuralError(msg.str());
}

FlowGraph flow_graph(int N, int n, TieBreak tie_break) {
  require_dimension(N, kMaxGraphDimension, "flow_graph");
  if (n < 1 || n > N) throw UsageError("flow_graph: need 1 <= n <= N");
  FlowGraph g;
  g.N = N;
  g.n = n;
  g.vertices = enumerate_faces(N, n - 1);
  const std::size_t facet_count = g.vertices.size();
  const auto faces = enumerate_faces(N, n);
  g.vertices.insert(g.vertices.end(), faces.begin(), faces.end());

  std::unordered_map<FaceWord, std::size_t> index;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) index.emplace(g.vertices[i], i);
  for (std::size_t fi = facet_count; fi < g.vertices.size(); ++fi) {
    for (const Facet& f : facets(g.vertices[fi])) {
      const std::size_t ci = index.at(f.face);
      if (f.orientation == Orientation::Incoming)
        g.edges.emplace_back(ci, fi);
      else
        g.edges.emplace_back(fi, ci);
    }
  }
  const auto& V = g.vertices;
  std::function<bool(std::size_t, std::size_t)> before;
  if (tie_break == TieBreak::Lexicographic)
    before = [&](std::size_t a, std::size_t b) { return V[a] < V[b]; };
  else
    before = [&](std::size_t a, std::size_t b) { return V[b] < V[a]; };
  g.order = topological_order(V.size(), g.edges, before, [&](std::size_t a) { return V[a].str(); });
  return g;
}

std::vector<CensusRow> i_configuration_census(int n) {
  if (n < 1 || n > 5) throw UsageError("i_configuration_census: n must be in 1..5");
  const int N = n + 1;
  const ComponentGraph cg = component_graph(n);
  std::vector<CensusRow> rows;
  int k = 0;
  for (const FaceWord& face : cg.left.chain) {
    CensusRow row;
    row.k = ++k;
    row.face = face;
    for (const Facet& f : facets(face)) {
      if (f.orientation == Orientation::Incoming)
        ++row.counts[is_absolutely_incoming(N, f.face) ? 0 : 1];
      else
        ++row.counts[is_absolutely_outgoing(N, f.face) ? 2 : 3];
    }
    row.expected = {n - k + 1, k - 1, k - 1, n - k + 1};
    rows.push_back(row);
  }
  return rows;
}

}  // namespace tetralab
