#include "tetralab/coloring.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>

#include "tetralab/error.hpp"

namespace tetralab {

std::size_t ColoringProblem::cell(const FaceWord& f) const {
  auto it = index.find(f);
  if (it == index.end()) throw UsageError("face " + f.str() + " is not a cell of this problem");
  return it->second;
}

ColoringProblem coloring_problem(int N, int n, FacetOrder order, TieBreak tie_break) {
  if (N > 5) throw UsageError("coloring_problem: N <= 5 at desk scale");
  const FlowGraph g = flow_graph(N, n, tie_break);
  ColoringProblem p;
  p.N = N;
  p.n = n;
  p.order = order;
  p.tie_break = tie_break;
  p.cells = enumerate_faces(N, n - 1);
  for (std::size_t i = 0; i < p.cells.size(); ++i) p.index.emplace(p.cells[i], i);
  for (std::size_t v : g.order) {
    const FaceWord& f = g.vertices[v];
    if (f.dimension() != n) continue;
    p.faces.push_back(f);
    std::vector<std::size_t> in, out;
    for (const auto& x : incoming_facets(f, order)) in.push_back(p.cell(x));
    for (const auto& x : outgoing_facets(f, order)) out.push_back(p.cell(x));
    p.ins.push_back(std::move(in));
    p.outs.push_back(std::move(out));
  }
  for (std::size_t i = 0; i < p.cells.size(); ++i) {
    if (is_absolutely_incoming(N, p.cells[i])) p.seeds.push_back(i);
    if (is_absolutely_outgoing(N, p.cells[i])) p.sinks.push_back(i);
  }
  return p;
}

namespace {

void check_relation(const ColoringProblem& p, const Correspondence& r) {
  if (r.arity() != p.n) throw UsageError("correspondence arity must equal the face dimension");
}

std::uint64_t read_tuple(const std::vector<std::size_t>& cells, const CubeColoring& c, std::uint32_t q) {
  std::uint64_t key = 0;
  for (auto i : cells) key = key * q + c[i];
  return key;
}

}  // namespace

std::vector<CubeColoring> propagate(const ColoringProblem& p, const Correspondence& r, CubeColoring start) {
  check_relation(p, r);
  if (start.size() != p.cells.size()) throw UsageError("propagate: coloring size mismatch");
  const std::uint32_t q = r.colors().size();
  std::vector<CubeColoring> found;
  CubeColoring& c = start;

  std::function<void(std::size_t)> finish = [&](std::size_t from) {
    for (std::size_t i = from; i < c.size(); ++i) {
      if (c[i] != kUncolored) continue;
      for (std::uint32_t v = 0; v < q; ++v) {
        c[i] = v;
        finish(i + 1);
      }
      c[i] = kUncolored;
      return;
    }
    found.push_back(c);
  };

  std::function<void(std::size_t)> visit = [&](std::size_t k) {
    if (k == p.faces.size()) {
      finish(0);
      return;
    }
    const auto& in = p.ins[k];
    for (auto i : in) {
      if (c[i] != kUncolored) continue;
      for (std::uint32_t v = 0; v < q; ++v) {
        c[i] = v;
        visit(k);
      }
      c[i] = kUncolored;
      return;
    }
    const auto& out = p.outs[k];
    std::vector<std::size_t> written;
    for (std::uint64_t o : r.outputs(read_tuple(in, c, q))) {
      bool ok = true;
      written.clear();
      for (std::size_t j = out.size(); j-- > 0;) {
        const auto v = static_cast<std::uint32_t>(o % q);
        o /= q;
        const std::size_t i = out[j];
        if (c[i] == kUncolored) {
          c[i] = v;
          written.push_back(i);
        } else if (c[i] != v) {
          ok = false;
          break;
        }
      }
      if (ok) visit(k + 1);
      for (auto i : written) c[i] = kUncolored;
    }
  };
  visit(0);
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

std::vector<CubeColoring> propagate_seed(const ColoringProblem& p, const Correspondence& r,
                                         const std::vector<std::uint32_t>& seed) {
  if (seed.size() != p.seeds.size()) throw UsageError("seed must color every absolutely incoming face");
  CubeColoring c(p.cells.size(), kUncolored);
  for (std::size_t k = 0; k < seed.size(); ++k) {
    if (seed[k] >= r.colors().size()) throw UsageError("seed color out of range");
    c[p.seeds[k]] = seed[k];
  }
  return propagate(p, r, std::move(c));
}

std::vector<CubeColoring> enumerate_colorings(const ColoringProblem& p, const Correspondence& r) {
  return propagate(p, r, CubeColoring(p.cells.size(), kUncolored));
}

bool is_admissible(const ColoringProblem& p, const Correspondence& r, const CubeColoring& c) {
  check_relation(p, r);
  const std::uint32_t q = r.colors().size();
  for (std::size_t k = 0; k < p.faces.size(); ++k) {
    const auto& outs = r.outputs(read_tuple(p.ins[k], c, q));
    if (!std::binary_search(outs.begin(), outs.end(), read_tuple(p.outs[k], c, q))) return false;
  }
  return true;
}

std::vector<CubeColoring> vertex_shortcut(int N) {
  if (N < 1 || N > 5) throw UsageError("vertex_shortcut: N must be 1..5");
  const auto edges = enumerate_faces(N, 1);
  std::vector<std::pair<std::uint16_t, std::uint16_t>> ends;
  for (const auto& e : edges) {
    const auto v = e.vertices();
    ends.emplace_back(v[0], v[1]);
  }
  std::vector<CubeColoring> out;
  const std::uint64_t vertex_count = 1ull << N;
  // vertex 0 pinned to + to quotient by the global flip
  for (std::uint64_t spins = 0; spins < (1ull << (vertex_count - 1)); ++spins) {
    const std::uint64_t s = spins << 1;
    CubeColoring c(edges.size());
    for (std::size_t i = 0; i < ends.size(); ++i)
      c[i] = static_cast<std::uint32_t>(((s >> ends[i].first) ^ (s >> ends[i].second)) & 1u);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

using Projection = std::vector<std::uint32_t>;

std::set<Projection> writer_only(const ColoringProblem& p, const Correspondence& r, const CubeColoring& seed) {
  const std::uint32_t q = r.colors().size();
  // A cell stays live while a later face reads or writes it; sinks stay live.
  std::vector<std::size_t> last(p.cells.size(), 0);
  for (std::size_t k = 0; k < p.faces.size(); ++k) {
    for (auto i : p.ins[k]) last[i] = k + 1;
    for (auto i : p.outs[k]) last[i] = k + 1;
  }
  for (auto i : p.sinks) last[i] = p.faces.size() + 1;

  std::vector<CubeColoring> states{seed};
  std::vector<CubeColoring> next;
  for (std::size_t k = 0; k < p.faces.size(); ++k) {
    next.clear();
    const auto& out = p.outs[k];
    for (const auto& st : states) {
      for (std::uint64_t o : r.outputs(read_tuple(p.ins[k], st, q))) {
        CubeColoring c = st;
        for (std::size_t j = out.size(); j-- > 0;) {
          if (c[out[j]] == kUncolored) c[out[j]] = static_cast<std::uint32_t>(o % q);
          o /= q;
        }
        for (std::size_t i = 0; i < c.size(); ++i)
          if (last[i] <= k + 1) c[i] = kUncolored;
        next.push_back(std::move(c));
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    std::swap(states, next);
  }
  std::set<Projection> found;
  for (const auto& st : states) {
    Projection proj;
    for (auto i : p.sinks) proj.push_back(st[i]);
    found.insert(std::move(proj));
  }
  return found;
}

}  // namespace

PathAuditReport path_independence_audit(int N, int n, const Correspondence& r, FacetOrder order) {
  const auto start = std::chrono::steady_clock::now();
  const ColoringProblem a = coloring_problem(N, n, order, TieBreak::Lexicographic);
  const ColoringProblem b = coloring_problem(N, n, order, TieBreak::ReverseLexicographic);
  check_relation(a, r);
  const std::uint32_t q = r.colors().size();

  PathAuditReport rep;
  rep.N = N;
  rep.n = n;
  std::vector<std::uint32_t> seed(a.seeds.size(), 0);
  while (true) {
    CubeColoring c(a.cells.size(), kUncolored);
    for (std::size_t k = 0; k < seed.size(); ++k) c[a.seeds[k]] = seed[k];
    const auto x = writer_only(a, r, c);
    const auto y = writer_only(b, r, c);
    ++rep.seeds_checked;
    if (x != y) {
      ++rep.differing_seeds;
      rep.independent = false;
      if (!rep.witness_seed) {
        rep.witness_seed = seed;
        for (std::size_t j = 0; j < a.sinks.size() && !rep.witness_face; ++j) {
          std::set<std::uint32_t> vx, vy;
          for (const auto& t : x) vx.insert(t[j]);
          for (const auto& t : y) vy.insert(t[j]);
          if (vx != vy) rep.witness_face = a.cells[a.sinks[j]];
        }
        if (!rep.witness_face) {
          // marginals agree; report the first sink where the first differing tuples split
          auto ix = x.begin();
          auto iy = y.begin();
          while (ix != x.end() && iy != y.end() && *ix == *iy) ++ix, ++iy;
          const Projection& px = ix != x.end() ? *ix : *iy;
          const Projection& py = iy != y.end() ? *iy : *ix;
          for (std::size_t j = 0; j < px.size(); ++j)
            if (px[j] != py[j]) {
              rep.witness_face = a.cells[a.sinks[j]];
              break;
            }
          if (!rep.witness_face && !a.sinks.empty()) rep.witness_face = a.cells[a.sinks.front()];
        }
      }
    }
    std::size_t k = 0;
    while (k < seed.size() && ++seed[k] == q) seed[k++] = 0;
    if (k == seed.size()) break;
  }
  rep.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::string render_coloring(const ColoringProblem& p, const ColorSet& colors, const CubeColoring& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ' ';
    s += p.cells[i].str() + ":" + (c[i] == kUncolored ? std::string("?") : colors.name(c[i]));
  }
  return s;
}

}  // namespace tetralab
