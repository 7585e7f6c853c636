#include "tetralab/fourcube.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>

#include "tetralab/correspondence.hpp"
#include "tetralab/error.hpp"
#include "tetralab/hypercube.hpp"
#include "tetralab/recursion.hpp"

namespace tetralab {

namespace {

using Table = std::vector<std::pair<std::string, std::vector<std::string>>>;

// Chosen edges, one column per cube.
const Table kLeftTable = {
    {"0***", {"01*0", "000*", "0*11"}},
    {"*1**", {"011*", "*100", "11*1"}},
    {"**0*", {"0*00", "110*", "*001"}},
    {"***1", {"00*1", "*111", "1*01"}},
};
const Table kRightTable = {
    {"***0", {"1*00", "00*0", "*110"}},
    {"**1*", {"0*10", "111*", "*011"}},
    {"*0**", {"001*", "*000", "10*1"}},
    {"1***", {"100*", "1*11", "11*0"}},
};

// Per-cube parts of the 24 shared edges.
const Table kLeftPartition = {
    {"0***", {"001*", "000*", "00*0", "01*0", "0*10", "0*11"}},
    {"*1**", {"111*", "011*", "11*0", "11*1", "*110", "*100"}},
    {"**0*", {"100*", "110*", "1*00", "0*00", "*000", "*001"}},
    {"***1", {"10*1", "00*1", "1*11", "1*01", "*011", "*111"}},
};
const Table kRightPartition = {
    {"***0", {"*100", "*110", "0*00", "1*00", "01*0", "00*0"}},
    {"**1*", {"*111", "*011", "0*11", "0*10", "011*", "111*"}},
    {"*0**", {"*001", "*000", "00*1", "10*1", "000*", "001*"}},
    {"1***", {"1*01", "1*11", "11*1", "11*0", "110*", "100*"}},
};

struct ParsedTable {
  std::vector<FaceWord> cubes;
  std::map<FaceWord, std::vector<FaceWord>> edges;
};

ParsedTable parse_table(const Table& t) {
  ParsedTable p;
  for (const auto& [cube, edges] : t) {
    const FaceWord c = FaceWord::parse(cube);
    p.cubes.push_back(c);
    for (const auto& e : edges) p.edges[c].push_back(FaceWord::parse(e));
  }
  return p;
}

const ParsedTable& table(Side side) {
  static const ParsedTable left = parse_table(kLeftTable);
  static const ParsedTable right = parse_table(kRightTable);
  return side == Side::Left ? left : right;
}

const ParsedTable& partition(Side side) {
  static const ParsedTable left = parse_table(kLeftPartition);
  static const ParsedTable right = parse_table(kRightPartition);
  return side == Side::Left ? left : right;
}

FaceWord local_word(const FaceWord& cube, const FaceWord& e) {
  std::string s;
  for (int p : cube.free_positions()) s += e.at(p);
  return FaceWord::parse(s);
}

bool share_vertex(const FaceWord& a, const FaceWord& b) {
  for (int p = 0; p < a.size(); ++p)
    if (!a.is_free(p) && !b.is_free(p) && a.value(p) != b.value(p)) return false;
  return true;
}

FaceWord reversed(const FaceWord& f) {
  std::string s = f.str();
  std::reverse(s.begin(), s.end());
  return FaceWord::parse(s);
}

std::string join(const std::vector<FaceWord>& v) {
  std::string s;
  for (const auto& f : v) {
    if (!s.empty()) s += ' ';
    s += f.str();
  }
  return s;
}

int mod2(int x) { return ((x % 2) + 2) % 2; }

}  // namespace

const std::vector<FaceWord>& chain_cubes(Side side) {
  static const std::vector<FaceWord> left = component_graph(3).left.chain;
  static const std::vector<FaceWord> right = component_graph(3).right.chain;
  return side == Side::Left ? left : right;
}

CubeDirections cube_directions(const FaceWord& cube) {
  const auto fp = cube.free_positions();
  if (cube.size() != 4 || fp.size() != 3) throw UsageError("expected a 3-face of the 4-cube, got " + cube.str());
  return {fp[0] + 1, fp[1] + 1, fp[2] + 1};
}

const std::vector<FaceWord>& chosen_edges(const FaceWord& cube, Side side) {
  const auto& t = table(side);
  auto it = t.edges.find(cube);
  if (it == t.edges.end())
    throw UsageError("cube " + cube.str() + " is not in the " + (side == Side::Left ? "left" : "right") + " chain");
  return it->second;
}

std::string render_tables_star() {
  std::ostringstream os;
  for (Side side : {Side::Left, Side::Right}) {
    const auto& t = table(side);
    os << (side == Side::Left ? "L\n" : "R\n");
    os << join(t.cubes) << '\n';
    for (std::size_t row = 0; row < 3; ++row) {
      std::vector<FaceWord> line;
      for (const auto& c : t.cubes) line.push_back(t.edges.at(c)[row]);
      os << join(line) << '\n';
    }
  }
  return os.str();
}

std::vector<FaceWord> local_chosen_edges(const CubeDirections& dirs) {
  for (Side side : {Side::Left, Side::Right})
    for (const auto& c : table(side).cubes)
      if (cube_directions(c) == dirs) {
        std::vector<FaceWord> out;
        for (const auto& e : table(side).edges.at(c)) out.push_back(local_word(c, e));
        std::sort(out.begin(), out.end());
        return out;
      }
  throw UsageError("no chain cube with these directions");
}

SharedEdges shared_edges() {
  SharedEdges r;
  const auto all = enumerate_faces(4, 1);
  auto covered = [&](Side side, const FaceWord& e) {
    return std::any_of(chain_cubes(side).begin(), chain_cubes(side).end(),
                       [&](const FaceWord& c) { return c.contains(e); });
  };
  for (const auto& e : all)
    if (covered(Side::Left, e) && covered(Side::Right, e)) r.edges.push_back(e);

  const FaceWord a = FaceWord::parse("1010");
  const FaceWord b = FaceWord::parse("0101");
  std::vector<FaceWord> complement;
  for (const auto& e : all)
    if (!e.contains(a) && !e.contains(b)) complement.push_back(e);
  r.equals_complement_of_corners = complement == r.edges;

  r.partitions_valid = true;
  r.tables_inside_partition = true;
  for (Side side : {Side::Left, Side::Right}) {
    auto& parts = side == Side::Left ? r.left : r.right;
    std::vector<FaceWord> seen;
    for (const auto& c : partition(side).cubes) {
      parts[c] = partition(side).edges.at(c);
      for (const auto& e : parts[c]) {
        if (!c.contains(e)) r.partitions_valid = false;
        seen.push_back(e);
      }
      for (const auto& e : chosen_edges(c, side))
        if (std::find(parts[c].begin(), parts[c].end(), e) == parts[c].end()) r.tables_inside_partition = false;
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end() || seen != r.edges) r.partitions_valid = false;
  }
  return r;
}

std::string FormulaConvention::str() const {
  std::string s = mn_rank_minus_one ? "mn=rank-1" : "mn=rank";
  s += ijk_raw ? " ijk=raw" : " ijk=shifted";
  s += d_flipped ? " d=flipped" : " d=plain";
  s += l_free_axis ? " l=free-axis" : " l=fixed-axis";
  switch (s_reading) {
    case SReading::Raw: s += " s=value"; break;
    case SReading::FaceTau: s += " s=face-tau"; break;
    case SReading::CubeTau: s += " s=cube-tau"; break;
  }
  return s;
}

EdgeLocal edge_choice_formula(const FaceLocal& fl, const CubeDirections& dirs, const FormulaConvention& conv) {
  if (!(1 <= fl.m && fl.m < fl.n && fl.n <= 3) || (fl.d != 0 && fl.d != 1))
    throw UsageError("edge_choice_formula: bad face-local data");
  const int off = conv.mn_rank_minus_one ? 1 : 0;
  const int m = fl.m - off;
  const int n = fl.n - 1 - off;
  const int i = dirs[0];
  const int j = conv.ijk_raw ? dirs[1] : dirs[1] - 1;
  const int k = conv.ijk_raw ? dirs[2] : dirs[2] - 2;
  const int d = fl.d ^ (conv.d_flipped ? 1 : 0);
  EdgeLocal e;
  e.l = mod2(m * (i + j + 1) + n * (j + k + 1) + (i + j + d));
  e.s = mod2(m * ((d + 1) * (i + j) + 1) + n * (d * (j + k) + 1) + (d * (i + j) + (j + k) + 1));
  return e;
}

FaceWord formula_edge(const FaceWord& cube, const FaceLocal& fl, const FormulaConvention& conv) {
  const CubeDirections dirs = cube_directions(cube);
  const EdgeLocal el = edge_choice_formula(fl, dirs, conv);
  const int r = 6 - fl.m - fl.n;
  const int val = fl.d == 0 ? tau(r) : 1 - tau(r);
  const FaceWord face = cube.fix(cube.position_of_rank(r), val);
  const int fr = conv.l_free_axis ? 1 - el.l : el.l;  // 0-based rank of the fixed axis inside the face
  const int cube_rank = fr == 0 ? fl.m : fl.n;
  int v = el.s;
  if (conv.s_reading == SReading::FaceTau) v ^= tau(fr + 1);
  if (conv.s_reading == SReading::CubeTau) v ^= tau(cube_rank);
  return face.fix(face.position_of_rank(fr + 1), v);
}

CalibrationReport calibrate_formula() {
  CalibrationReport rep;
  for (int bits = 0; bits < 16; ++bits)
    for (SReading sr : {SReading::Raw, SReading::FaceTau, SReading::CubeTau}) {
      FormulaConvention conv{(bits & 1) != 0, (bits & 2) != 0, (bits & 4) != 0, (bits & 8) != 0, sr};
      CalibrationEntry e{conv, 0};
      int faces = 0;
      for (Side side : {Side::Left, Side::Right})
        for (const auto& cube : chain_cubes(side)) {
          const auto& chosen = chosen_edges(cube, side);
          for (int m = 1; m <= 3; ++m)
            for (int n = m + 1; n <= 3; ++n)
              for (int d = 0; d < 2; ++d) {
                ++faces;
                const FaceLocal fl{m, n, d};
                const int r = 6 - m - n;
                const FaceWord face = cube.fix(cube.position_of_rank(r), d == 0 ? tau(r) : 1 - tau(r));
                const auto target = std::find_if(chosen.begin(), chosen.end(),
                                                 [&](const FaceWord& x) { return face.contains(x); });
                if (target == chosen.end() || formula_edge(cube, fl, conv) != *target) ++e.mismatched_faces;
              }
        }
      rep.faces = faces;
      rep.entries.push_back(e);
      if (e.mismatched_faces == 0) rep.matching.push_back(conv);
    }
  std::stable_sort(rep.entries.begin(), rep.entries.end(),
                   [](const CalibrationEntry& a, const CalibrationEntry& b) {
                     return a.mismatched_faces < b.mismatched_faces;
                   });
  rep.best = rep.entries.front();
  return rep;
}

bool PropertiesReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const PropertyCheck& c) { return c.holds; });
}

PropertiesReport structural_properties_audit() {
  PropertiesReport rep;

  {  // (a)
    PropertyCheck c{"a:depends-only-on-directions", true, ""};
    for (const auto& lc : chain_cubes(Side::Left))
      for (const auto& rc : chain_cubes(Side::Right)) {
        if (cube_directions(lc) != cube_directions(rc)) continue;
        std::vector<FaceWord> x, y;
        for (const auto& e : chosen_edges(lc, Side::Left)) x.push_back(local_word(lc, e));
        for (const auto& e : chosen_edges(rc, Side::Right)) y.push_back(local_word(rc, e));
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        const bool same = x == y;
        c.holds = c.holds && same;
        c.detail += lc.str() + "/" + rc.str() + (same ? " same " : " differ ") + join(x) + "; ";
      }
    rep.checks.push_back(c);
  }
  {  // (b)
    PropertyCheck c{"b:three-directions", true, ""};
    for (Side side : {Side::Left, Side::Right})
      for (const auto& cube : chain_cubes(side)) {
        std::set<int> dirs;
        for (const auto& e : chosen_edges(cube, side)) dirs.insert(e.free_positions().front());
        if (dirs.size() != 3) {
          c.holds = false;
          c.detail += cube.str() + " ";
        }
      }
    if (c.holds) c.detail = "every cube";
    rep.checks.push_back(c);
  }
  {  // (c)
    PropertyCheck c{"c:index-reversal", true, ""};
    std::set<FaceWord> left, right, left_cubes, right_cubes;
    for (const auto& cube : chain_cubes(Side::Left)) {
      left_cubes.insert(reversed(cube));
      for (const auto& e : chosen_edges(cube, Side::Left)) left.insert(reversed(e));
    }
    for (const auto& cube : chain_cubes(Side::Right)) {
      right_cubes.insert(cube);
      for (const auto& e : chosen_edges(cube, Side::Right)) right.insert(e);
    }
    c.holds = left == right && left_cubes == right_cubes;
    int per_cube = 0;
    for (const auto& cube : chain_cubes(Side::Left)) {
      std::set<FaceWord> img;
      for (const auto& e : chosen_edges(cube, Side::Left)) img.insert(reversed(e));
      const auto& rc = chosen_edges(reversed(cube), Side::Right);
      if (img == std::set<FaceWord>(rc.begin(), rc.end())) ++per_cube;
    }
    c.detail = std::string("setwise ") + (c.holds ? "equal" : "different") + ", cube-by-cube matches " +
               std::to_string(per_cube) + "/4";
    rep.checks.push_back(c);
  }
  {  // (d)
    PropertyCheck c{"d:disjoint-union-is-shared", true, ""};
    std::vector<FaceWord> all;
    for (Side side : {Side::Left, Side::Right})
      for (const auto& cube : chain_cubes(side))
        for (const auto& e : chosen_edges(cube, side)) all.push_back(e);
    std::sort(all.begin(), all.end());
    const bool disjoint = std::adjacent_find(all.begin(), all.end()) == all.end();
    c.holds = disjoint && all == shared_edges().edges;
    c.detail = std::to_string(all.size()) + " edges, " + (disjoint ? "disjoint" : "overlapping");
    rep.checks.push_back(c);
  }
  {  // (e)
    PropertyCheck c{"e:minimal-dominating", true, ""};
    for (Side side : {Side::Left, Side::Right})
      for (const auto& cube : chain_cubes(side)) {
        const auto& chosen = chosen_edges(cube, side);
        std::vector<FaceWord> cube_edges;
        for (const auto& e : enumerate_faces(4, 1))
          if (cube.contains(e)) cube_edges.push_back(e);
        auto dominates = [&](std::uint32_t mask) {
          return std::all_of(cube_edges.begin(), cube_edges.end(), [&](const FaceWord& e) {
            for (std::size_t k = 0; k < chosen.size(); ++k)
              if ((mask >> k & 1u) && share_vertex(e, chosen[k])) return true;
            return false;
          });
        };
        const std::uint32_t full = (1u << chosen.size()) - 1;
        bool ok = dominates(full);
        for (std::uint32_t k = 0; k < chosen.size() && ok; ++k)
          if (dominates(full & ~(1u << k))) ok = false;
        if (!ok) {
          c.holds = false;
          c.detail += cube.str() + " ";
        }
      }
    if (c.holds) c.detail = "all 8 cubes, 12 edges each";
    rep.checks.push_back(c);
  }
  {  // face projection is 2-to-1
    PropertyCheck c{"info:face-to-edge-2-to-1", true, ""};
    const FaceWord cube3 = FaceWord::full(3);
    for (const CubeDirections& dirs : {CubeDirections{1, 2, 3}, CubeDirections{1, 2, 4}, CubeDirections{1, 3, 4},
                                       CubeDirections{2, 3, 4}}) {
      const auto edges = local_chosen_edges(dirs);
      std::map<FaceWord, int> hits;
      for (const auto& f : facets(cube3)) {
        int inside = 0;
        for (const auto& e : edges)
          if (f.face.contains(e)) {
            ++inside;
            ++hits[e];
          }
        if (inside != 1) c.holds = false;
      }
      for (const auto& e : edges)
        if (hits[e] != 2) c.holds = false;
    }
    c.detail = c.holds ? "each face holds one chosen edge, each chosen edge lies in two faces" : "violated";
    rep.checks.push_back(c);
  }
  {  // pairwise non-adjacency, reported
    PropertyCheck c{"info:pairwise-non-adjacent", true, ""};
    for (Side side : {Side::Left, Side::Right})
      for (const auto& cube : chain_cubes(side)) {
        const auto& ch = chosen_edges(cube, side);
        for (std::size_t a = 0; a < ch.size(); ++a)
          for (std::size_t b = a + 1; b < ch.size(); ++b)
            if (share_vertex(ch[a], ch[b])) {
              c.holds = false;
              c.detail += ch[a].str() + "~" + ch[b].str() + " ";
            }
      }
    if (c.holds) c.detail = "chosen edges of each cube are vertex-disjoint";
    rep.checks.push_back(c);
  }
  return rep;
}

// ---- weights --------------------------------------------------------------

std::array<std::uint32_t, 16> a_permutation(AReading reading) {
  // bit 3 = i1, bit 2 = i2, bit 1 = o1, bit 0 = o2
  std::array<std::uint32_t, 16> p{};
  for (std::uint32_t x = 0; x < 16; ++x) {
    const std::uint32_t i1 = x >> 3 & 1, i2 = x >> 2 & 1, o1 = x >> 1 & 1, o2 = x & 1;
    if (reading == AReading::EdgeDirection)
      p[x] = o2 << 3 | o1 << 2 | i2 << 1 | i1;
    else
      p[x] = i2 << 3 | i1 << 2 | o2 << 1 | o1;
  }
  return p;
}

SparseOperator a_operator(AReading reading) {
  const auto p = a_permutation(reading);
  return SparseOperator::permutation(p);
}

int slot_number(int p, int q) {
  if (p > q) std::swap(p, q);
  if (p < 1 || q > 4 || p == q) throw UsageError("slot_number: need 1 <= p < q <= 4");
  return (p - 1) + (q - 1) * (q - 2) / 2 + 1;
}

std::array<int, 3> slot_subscripts(const CubeDirections& dirs) {
  std::string w = "0000";
  for (int d : dirs) w[d - 1] = '*';
  const auto legs = incoming_facets(FaceWord::parse(w), FacetOrder::DescendingRank);
  std::array<int, 3> out{};
  for (std::size_t k = 0; k < 3; ++k) {
    const auto fp = legs[k].free_positions();
    out[k] = slot_number(fp[0] + 1, fp[1] + 1);
    if (static_cast<std::size_t>(out[k]) != simplex_slot(legs[k]) + 1)
      throw StructuralError("slot numbering disagrees with the simplex slot order");
  }
  return out;
}

SparseOperator build_W(const CubeDirections& dirs) {
  const LiftedCorrespondence& w = phi();
  const FaceWord cube3 = FaceWord::full(3);
  const auto edges = local_chosen_edges(dirs);
  std::vector<FaceWord> legs = incoming_facets(cube3, w.leg_order);
  for (const auto& f : outgoing_facets(cube3, w.leg_order)) legs.push_back(f);

  // bit of the chosen edge inside each face color, 3 = i1 ... 0 = o2
  std::array<int, 6> shift{};
  for (std::size_t k = 0; k < legs.size(); ++k) {
    auto face_edges = incoming_facets(legs[k], FacetOrder::AscendingRank);
    for (const auto& e : outgoing_facets(legs[k], FacetOrder::AscendingRank)) face_edges.push_back(e);
    int hit = -1;
    for (std::size_t j = 0; j < face_edges.size(); ++j)
      if (std::find(edges.begin(), edges.end(), face_edges[j]) != edges.end()) {
        if (hit >= 0) throw StructuralError("face " + legs[k].str() + " holds two chosen edges");
        hit = static_cast<int>(j);
      }
    if (hit < 0) throw StructuralError("face " + legs[k].str() + " holds no chosen edge");
    shift[k] = 3 - hit;
  }

  SparseOperator op({16, 16, 16});
  const Correspondence& rel = w.relation;
  for (const auto& [in, outs] : rel.relation()) {
    const ColorTuple a = rel.unflatten(in);
    for (auto o : outs) {
      const ColorTuple b = rel.unflatten(o);
      int exponent = 0;
      for (std::size_t k = 0; k < 3; ++k) {
        exponent += 1 - 2 * static_cast<int>(a[k] >> shift[k] & 1u);
        exponent += 1 - 2 * static_cast<int>(b[k] >> shift[k + 3] & 1u);
      }
      op.add(in, o, Laurent::monomial(exponent));
    }
  }
  return op;
}

std::shared_ptr<const SparseOperator> cached_W(const CubeDirections& dirs) {
  static std::mutex mu;
  static std::map<CubeDirections, std::shared_ptr<const SparseOperator>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[dirs];
  if (!slot) slot = std::make_shared<const SparseOperator>(build_W(dirs));
  return slot;
}

std::pair<std::vector<ChainSlotFactor>, std::vector<ChainSlotFactor>> tetrahedron_layout() {
  auto layout = [](Side side) {
    std::vector<ChainSlotFactor> out;
    for (const auto& cube : chain_cubes(side)) {
      ChainSlotFactor f{cube, cube_directions(cube), {}};
      for (const auto& leg : incoming_facets(cube, FacetOrder::DescendingRank)) f.slots.push_back(simplex_slot(leg));
      out.push_back(std::move(f));
    }
    std::reverse(out.begin(), out.end());  // written order
    return out;
  };
  return {layout(Side::Left), layout(Side::Right)};
}

namespace {

const std::vector<std::uint32_t> kSixSlots(6, 16);

std::string subscript(const std::vector<std::size_t>& slots) {
  std::string s;
  for (auto x : slots) s += std::to_string(x + 1);
  return s;
}

std::string dirs_label(const CubeDirections& d) {
  return "(" + std::to_string(d[0]) + "," + std::to_string(d[1]) + "," + std::to_string(d[2]) + ")";
}

std::size_t sigma(std::size_t slot) {  // (1 6)(2 5) on 0-based slots
  static const std::size_t map[6] = {5, 4, 2, 3, 1, 0};
  return map[slot];
}

std::shared_ptr<const SparseOperator> conjugated_W(const CubeDirections& dirs, const std::array<std::uint32_t, 16>& q) {
  return std::make_shared<const SparseOperator>(cached_W(dirs)->conjugated(q));
}

AmbientChain tte_rhs() {
  std::vector<ChainFactor> fs;
  for (const auto& f : tetrahedron_layout().second)
    fs.push_back(bind(cached_W(f.dirs), f.slots, "W" + subscript(f.slots) + dirs_label(f.dirs)));
  return AmbientChain(kSixSlots, std::move(fs));
}

AmbientChain tte_lhs(const std::array<std::uint32_t, 16>& q, const std::string& tag) {
  std::vector<ChainFactor> fs;
  for (const auto& f : tetrahedron_layout().first) {
    std::vector<std::size_t> slots;
    for (auto s : f.slots) slots.push_back(sigma(s));
    fs.push_back(bind(conjugated_W(f.dirs, q), slots, "W" + tag + subscript(slots) + dirs_label(f.dirs)));
  }
  return AmbientChain(kSixSlots, std::move(fs));
}

// Square symmetry (l, s) -> (l ^ swap, s ^ flip[l]) in value coordinates,
// acting on the face bits (i1, i2, o1, o2) = ((0,0), (1,1), (0,1), (1,0)).
std::array<std::uint32_t, 16> square_symmetry(int swap, int flip0, int flip1) {
  auto index = [](int l, int s) {
    if (l == 0 && s == 0) return 0;
    if (l == 1 && s == 1) return 1;
    if (l == 0 && s == 1) return 2;
    return 3;
  };
  std::array<int, 4> to{};
  for (int l = 0; l < 2; ++l)
    for (int s = 0; s < 2; ++s) to[index(l, s)] = index(l ^ swap, s ^ (l == 0 ? flip0 : flip1));
  std::array<std::uint32_t, 16> p{};
  for (std::uint32_t x = 0; x < 16; ++x) {
    std::uint32_t y = 0;
    for (int pos = 0; pos < 4; ++pos)
      if (x >> (3 - pos) & 1u) y |= 1u << (3 - to[pos]);
    p[x] = y;
  }
  return p;
}

bool same_support(const AmbientChain& a, const AmbientChain& b) {
  for (std::uint64_t in = 0; in < a.space_dimension(); ++in) {
    const Combination x = a.apply(in);
    const Combination y = b.apply(in);
    if (x.size() != y.size()) return false;
    for (auto ix = x.begin(), iy = y.begin(); ix != x.end(); ++ix, ++iy)
      if (ix->first != iy->first) return false;
  }
  return true;
}

}  // namespace

EquationReport check_tetrahedron_matrix(unsigned threads) {
  auto m = std::make_shared<const SparseOperator>(phi_matrix());
  auto [left, right] = tetrahedron_layout();
  auto chain = [&](const std::vector<ChainSlotFactor>& fs) {
    std::vector<ChainFactor> out;
    for (const auto& f : fs) out.push_back(bind(m, f.slots, "Phi" + subscript(f.slots)));
    return AmbientChain(kSixSlots, std::move(out));
  };
  return check_equation(chain(left), chain(right), threads);
}

TteReport check_twisted_tetrahedron(AReading reading, unsigned threads, bool residual_search) {
  TteReport rep;
  rep.reading = reading;
  const AmbientChain lhs = tte_lhs(a_permutation(reading), "A");
  const AmbientChain rhs = tte_rhs();
  rep.lhs_label = lhs.label();
  rep.rhs_label = rhs.label();

  const std::vector<std::string> printed_lhs{"653", "642", "541", "321"};
  const std::vector<std::string> printed_rhs{"356", "246", "145", "123"};
  std::vector<std::string> got_lhs, got_rhs;
  for (const auto& f : lhs.factors()) got_lhs.push_back(subscript(f.slots));
  for (const auto& f : rhs.factors()) got_rhs.push_back(subscript(f.slots));
  rep.subscripts_match_printed = got_lhs == printed_lhs && got_rhs == printed_rhs;

  rep.weights_reduce_to_phi = true;
  const SparseOperator phi_m = phi_matrix();
  for (const auto& f : tetrahedron_layout().second)
    if (!(cached_W(f.dirs)->specialize_at_one() == phi_m)) rep.weights_reduce_to_phi = false;

  rep.exact = check_equation(lhs, rhs, threads);
  rep.at_one = check_equation(lhs.specialized_at_one(), rhs.specialized_at_one(), threads);
  rep.supports_agree = rep.exact.holds || same_support(lhs, rhs);

  if (!rep.exact.holds && residual_search) {
    for (int swap = 0; swap < 2; ++swap)
      for (int f0 = 0; f0 < 2; ++f0)
        for (int f1 = 0; f1 < 2; ++f1) {
          ResidualEntry e;
          e.relabeling = "l^" + std::to_string(swap) + " s^(" + std::to_string(f0) + "," + std::to_string(f1) + ")";
          const EquationReport r = check_equation(tte_lhs(square_symmetry(swap, f0, f1), "Q"), rhs, threads);
          e.holds = r.holds;
          e.mismatched_inputs = r.mismatched_inputs;
          rep.residual.push_back(e);
        }
  }
  return rep;
}

TteEquivalenceReport check_tte_equivalence(AReading reading, unsigned threads) {
  TteEquivalenceReport rep;
  const std::vector<std::size_t> p16{5, 1, 2, 3, 4, 0};
  const std::vector<std::size_t> p25{0, 4, 2, 3, 1, 5};
  {
    const std::vector<std::uint32_t> bits(6, 2);
    const AmbientChain ab(bits, {slot_permutation(p16, "P16"), slot_permutation(p25, "P25")});
    const AmbientChain ba(bits, {slot_permutation(p25, "P25"), slot_permutation(p16, "P16")});
    rep.transpositions_commute = check_equation(ab, ba, 1).holds;
  }
  const auto q = a_permutation(reading);
  std::vector<ChainFactor> fs{slot_permutation(p16, "P16"), slot_permutation(p25, "P25")};
  for (const auto& f : tetrahedron_layout().first)
    fs.push_back(bind(conjugated_W(f.dirs, q), f.slots, "WA" + subscript(f.slots) + dirs_label(f.dirs)));
  fs.push_back(slot_permutation(p16, "P16"));
  fs.push_back(slot_permutation(p25, "P25"));
  const AmbientChain tte2_lhs(kSixSlots, std::move(fs));
  rep.relabeled_form_identical = check_equation(tte2_lhs, tte_lhs(q, "A"), threads).holds;
  rep.tte2 = check_equation(tte2_lhs, tte_rhs(), threads);
  return rep;
}

}  // namespace tetralab
