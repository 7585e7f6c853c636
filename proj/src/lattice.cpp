#include "tetralab/lattice.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "tetralab/error.hpp"
#include "tetralab/hypercube.hpp"
#include "tetralab/recursion.hpp"

namespace tetralab {

TorusLattice::TorusLattice(std::array<int, 3> sizes) : L_(sizes), V_(sizes[0] * sizes[1] * sizes[2]) {
  for (int l : L_)
    if (l < 2) throw UsageError("lattice sizes must be >= 2");
  if (3 * V_ > 63) throw UsageError("lattice too large: at most 63 edges");
  for (int v = 0; v < V_; ++v)
    for (int c = 0; c < 3; ++c) {
      std::uint64_t m = 0;
      for (int e : plaquette_edges(v, c)) m |= 1ull << e;
      masks_.push_back(m);
    }
}

TorusLattice TorusLattice::parse(const std::string& text) {
  std::array<int, 3> s{};
  int k = 0;
  std::size_t pos = 0;
  while (k < 3) {
    std::size_t used = 0;
    try {
      s[k++] = std::stoi(text.substr(pos), &used);
    } catch (const std::exception&) {
      throw UsageError("bad lattice size '" + text + "', expected L1xL2xL3");
    }
    pos += used;
    if (k < 3) {
      if (pos >= text.size() || text[pos] != 'x') throw UsageError("bad lattice size '" + text + "'");
      ++pos;
    }
  }
  if (pos != text.size()) throw UsageError("bad lattice size '" + text + "'");
  return TorusLattice(s);
}

std::string TorusLattice::str() const {
  return std::to_string(L_[0]) + "x" + std::to_string(L_[1]) + "x" + std::to_string(L_[2]);
}

int TorusLattice::vertex(int x, int y, int z) const {
  auto wrap = [](int a, int l) { return ((a % l) + l) % l; };
  return wrap(x, L_[0]) + L_[0] * (wrap(y, L_[1]) + L_[1] * wrap(z, L_[2]));
}

std::array<int, 3> TorusLattice::coords(int v) const {
  return {v % L_[0], (v / L_[0]) % L_[1], v / (L_[0] * L_[1])};
}

int TorusLattice::shift(int v, int axis, int by) const {
  auto c = coords(v);
  c[axis] += by;
  return vertex(c[0], c[1], c[2]);
}

std::array<int, 2> TorusLattice::endpoints(int e) const { return {e / 3, shift(e / 3, e % 3)}; }

std::array<int, 4> TorusLattice::plaquette_edges(int v, int normal) const {
  const int a = normal == 0 ? 1 : 0;
  const int b = normal == 2 ? 1 : 2;
  return {edge(v, a), edge(shift(v, a), b), edge(shift(v, b), a), edge(v, b)};
}

Laurent z_spin(const TorusLattice& lat) {
  const int V = lat.vertex_count();
  const int E = lat.edge_count();
  if (V > 27) throw UsageError("z_spin: more than 2^27 configurations");
  std::vector<std::array<int, 2>> ends;
  for (int e = 0; e < E; ++e) ends.push_back(lat.endpoints(e));
  std::vector<std::uint64_t> count(2 * E + 1, 0);
  for (std::uint64_t s = 0; s < (1ull << V); ++s) {
    int unequal = 0;
    for (const auto& [a, b] : ends) unequal += static_cast<int>(((s >> a) ^ (s >> b)) & 1u);
    ++count[E - 2 * unequal + E];
  }
  std::map<int, BigInt> terms;
  for (int k = 0; k <= 2 * E; ++k)
    if (count[k]) terms[k - E] = count[k];
  return Laurent::from_terms(terms);
}

Laurent EdgeSum::total() const {
  Laurent t;
  for (const auto& [s, p] : sectors) t += p;
  return t;
}

Laurent EdgeSum::trivial() const {
  auto it = sectors.find(0);
  return it == sectors.end() ? Laurent() : it->second;
}

namespace {

bool admissible(const TorusLattice& lat, std::uint64_t cfg) {
  for (std::uint64_t m : lat.plaquette_masks())
    if (std::popcount(cfg & m) & 1) return false;
  return true;
}

// Straight cycles along `axis`, one per starting vertex with coordinate 0.
std::vector<std::uint64_t> cycle_masks(const TorusLattice& lat, int axis) {
  std::vector<std::uint64_t> out;
  for (int v = 0; v < lat.vertex_count(); ++v) {
    if (lat.coords(v)[axis] != 0) continue;
    std::uint64_t m = 0;
    int w = v;
    for (int k = 0; k < lat.sizes()[axis]; ++k) {
      m |= 1ull << lat.edge(w, axis);
      w = lat.shift(w, axis);
    }
    out.push_back(m);
  }
  return out;
}

// Spin images plus the sector generators (flip every axis-a edge leaving the
// layer x_a = 0).
std::vector<std::uint64_t> generated_configs(const TorusLattice& lat) {
  const int V = lat.vertex_count();
  if (V > 24) throw UsageError("generator route: more than 2^24 spin configurations");
  std::set<std::uint64_t> images;
  for (std::uint64_t s = 0; s < (1ull << V); s += 2) {  // vertex 0 pinned
    std::uint64_t cfg = 0;
    for (int e = 0; e < lat.edge_count(); ++e) {
      const auto [a, b] = lat.endpoints(e);
      if (((s >> a) ^ (s >> b)) & 1u) cfg |= 1ull << e;
    }
    images.insert(cfg);
  }
  std::array<std::uint64_t, 3> gen{};
  for (int a = 0; a < 3; ++a)
    for (int v = 0; v < V; ++v)
      if (lat.coords(v)[a] == 0) gen[a] |= 1ull << lat.edge(v, a);
  std::vector<std::uint64_t> out;
  for (int sector = 0; sector < 8; ++sector) {
    std::uint64_t flip = 0;
    for (int a = 0; a < 3; ++a)
      if (sector >> a & 1) flip ^= gen[a];
    for (auto cfg : images) out.push_back(cfg ^ flip);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

template <typename Visit>
void for_each_admissible(const TorusLattice& lat, EdgeMethod method, Visit&& visit) {
  if (method == EdgeMethod::Exhaustive) {
    if (lat.edge_count() > 25) throw UsageError("exhaustive edge sweep limited to 2^25 configurations");
    for (std::uint64_t cfg = 0; cfg < (1ull << lat.edge_count()); ++cfg)
      if (admissible(lat, cfg)) visit(cfg);
  } else {
    for (auto cfg : generated_configs(lat)) {
      if (!admissible(lat, cfg)) throw StructuralError("generator produced an inadmissible configuration");
      visit(cfg);
    }
  }
}

Laurent from_counts(const std::vector<std::uint64_t>& count, int offset) {
  std::map<int, BigInt> terms;
  for (std::size_t k = 0; k < count.size(); ++k)
    if (count[k]) terms[static_cast<int>(k) - offset] = count[k];
  return Laurent::from_terms(terms);
}

// Lattice edges of a cell's faces in the weight's leg order.
struct CellLayout {
  std::array<std::array<int, 4>, 6> face_edges{};  // (i1, i2, o1, o2) per leg
  std::array<int, 6> plaquette{};
  std::array<bool, 6> incoming{};
};

int lattice_edge_of(const TorusLattice& lat, int v, const FaceWord& local) {
  int axis = -1;
  int w = v;
  for (int p = 0; p < 3; ++p) {
    if (local.is_free(p))
      axis = p;
    else if (local.value(p))
      w = lat.shift(w, p);
  }
  return lat.edge(w, axis);
}

std::vector<CellLayout> cell_layouts(const TorusLattice& lat) {
  const FaceWord cube = FaceWord::full(3);
  const auto& w = phi();
  std::vector<FaceWord> legs = incoming_facets(cube, w.leg_order);
  const std::size_t nin = legs.size();
  for (const auto& f : outgoing_facets(cube, w.leg_order)) legs.push_back(f);
  std::vector<CellLayout> cells(lat.vertex_count());
  for (int v = 0; v < lat.vertex_count(); ++v) {
    for (std::size_t k = 0; k < legs.size(); ++k) {
      auto edges = incoming_facets(legs[k], FacetOrder::AscendingRank);
      for (const auto& e : outgoing_facets(legs[k], FacetOrder::AscendingRank)) edges.push_back(e);
      for (std::size_t j = 0; j < 4; ++j) cells[v].face_edges[k][j] = lattice_edge_of(lat, v, edges[j]);
      const int normal = legs[k].fixed_positions().front();
      const int base = legs[k].value(normal) ? lat.shift(v, normal) : v;
      cells[v].plaquette[k] = 3 * base + normal;
      cells[v].incoming[k] = k < nin;
    }
  }
  return cells;
}

bool layouts_consistent(const TorusLattice& lat, const std::vector<CellLayout>& cells) {
  std::vector<int> in(lat.plaquette_count(), 0), out(lat.plaquette_count(), 0);
  std::vector<std::array<int, 4>> seen(lat.plaquette_count(), {-1, -1, -1, -1});
  for (const auto& c : cells)
    for (std::size_t k = 0; k < 6; ++k) {
      const int p = c.plaquette[k];
      ++(c.incoming[k] ? in : out)[p];
      if (seen[p][0] < 0)
        seen[p] = c.face_edges[k];
      else if (seen[p] != c.face_edges[k])
        return false;
      std::array<int, 4> sorted_edges = c.face_edges[k];
      std::sort(sorted_edges.begin(), sorted_edges.end());
      auto expect = lat.plaquette_edges(p / 3, p % 3);
      std::sort(expect.begin(), expect.end());
      if (sorted_edges != expect) return false;
    }
  for (int p = 0; p < lat.plaquette_count(); ++p)
    if (in[p] != 1 || out[p] != 1) return false;
  return true;
}

std::uint32_t leg_color(const CellLayout& c, std::size_t k, std::uint64_t cfg) {
  std::uint32_t code = 0;
  for (int e : c.face_edges[k]) code = code << 1 | static_cast<std::uint32_t>(cfg >> e & 1u);
  return code;
}

}  // namespace

EdgeSum z_edge(const TorusLattice& lat, EdgeMethod method) {
  const int E = lat.edge_count();
  std::array<std::vector<std::uint64_t>, 3> cycles;
  for (int a = 0; a < 3; ++a) cycles[a] = cycle_masks(lat, a);
  std::map<int, std::vector<std::uint64_t>> counts;
  EdgeSum r;
  r.method = method;
  for_each_admissible(lat, method, [&](std::uint64_t cfg) {
    ++r.admissible;
    int sector = 0;
    for (int a = 0; a < 3; ++a) {
      const int bit = std::popcount(cfg & cycles[a].front()) & 1;
      for (auto m : cycles[a])
        if ((std::popcount(cfg & m) & 1) != bit) r.sectors_well_defined = false;
      sector |= bit << a;
    }
    auto& c = counts[sector];
    if (c.empty()) c.assign(2 * E + 1, 0);
    ++c[E - 2 * std::popcount(cfg) + E];
  });
  for (const auto& [s, c] : counts) r.sectors[s] = from_counts(c, E);
  return r;
}

NetworkSum z_network(const TorusLattice& lat, const CubeDirections& dirs, EdgeMethod method) {
  const auto cells = cell_layouts(lat);
  const auto weight = cached_W(dirs);
  const Correspondence& support = phi().relation;
  std::vector<bool> in_support(1ull << 24, false);
  for (const auto& [i, outs] : support.relation())
    for (auto o : outs) in_support[i << 12 | o] = true;

  auto cell_key = [&](const CellLayout& c, std::uint64_t cfg, std::uint64_t& in, std::uint64_t& out) {
    in = 0;
    out = 0;
    for (std::size_t k = 0; k < 3; ++k) {
      in = in << 4 | leg_color(c, k, cfg);
      out = out << 4 | leg_color(c, k + 3, cfg);
    }
  };

  NetworkSum r;
  r.bindings_consistent = layouts_consistent(lat, cells);
  if (!r.bindings_consistent) throw StructuralError("network leg bindings are inconsistent");

  std::vector<std::uint64_t> supported;
  if (method == EdgeMethod::Exhaustive) {
    if (lat.edge_count() > 25) throw UsageError("exhaustive network sweep limited to 2^25 configurations");
    r.support_swept = true;
    r.support_equals_admissible = true;
    for (std::uint64_t cfg = 0; cfg < (1ull << lat.edge_count()); ++cfg) {
      bool all = true;
      for (const auto& c : cells) {
        std::uint64_t in, out;
        cell_key(c, cfg, in, out);
        if (!in_support[in << 12 | out]) {
          all = false;
          break;
        }
      }
      if (all) supported.push_back(cfg);
      if (all != admissible(lat, cfg)) r.support_equals_admissible = false;
    }
  } else {
    for_each_admissible(lat, method, [&](std::uint64_t cfg) { supported.push_back(cfg); });
  }

  for (auto cfg : supported) {
    Laurent term(1);
    for (const auto& c : cells) {
      std::uint64_t in, out;
      cell_key(c, cfg, in, out);
      term *= weight->entry(in, out);
      if (term.is_zero()) break;
    }
    if (!term.is_zero()) ++r.supported;
    r.value += term;
  }
  return r;
}

Coverage chosen_edge_coverage(const TorusLattice& lat, const CubeDirections& dirs) {
  Coverage c;
  c.multiplicity.assign(lat.edge_count(), 0);
  const auto local = local_chosen_edges(dirs);
  for (int v = 0; v < lat.vertex_count(); ++v)
    for (const auto& e : local) ++c.multiplicity[lattice_edge_of(lat, v, e)];
  c.exactly_one = std::all_of(c.multiplicity.begin(), c.multiplicity.end(), [](int m) { return m == 1; });
  return c;
}

RelateReport relate(const TorusLattice& lat, EdgeMethod method) {
  RelateReport r;
  r.spin = z_spin(lat);
  r.edge = z_edge(lat, method);
  r.network = z_network(lat, {1, 2, 3}, method);
  r.coverage = chosen_edge_coverage(lat);
  r.spin_is_twice_trivial = r.spin == Laurent(2) * r.edge.trivial();
  for (int kappa : {1, 2}) {
    Laurent scaled;
    for (const auto& [s, p] : r.edge.sectors) scaled += p.substitute_power(kappa);
    if (scaled.is_zero() || r.network.value.is_zero()) continue;
    const BigInt lead_n = r.network.value.coefficient(r.network.value.max_exponent());
    const BigInt lead_s = scaled.coefficient(scaled.max_exponent());
    if (lead_n % lead_s != 0) continue;
    const BigInt c = lead_n / lead_s;
    if (r.network.value == Laurent::monomial(0, c) * scaled) {
      r.kappa = kappa;
      r.c = c;
      break;
    }
  }
  r.holds = r.kappa != 0 && r.spin_is_twice_trivial && r.coverage.exactly_one;
  if (r.kappa == 0) {
    Laurent scaled;
    for (const auto& [s, p] : r.edge.sectors) scaled += p.substitute_power(2);
    r.diff = "z_network - sum z_edge(u^2) = " + (r.network.value - scaled).str();
  }
  return r;
}

}  // namespace tetralab
