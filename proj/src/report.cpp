#include "tetralab/report.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>

#include "tetralab/codes.hpp"
#include "tetralab/coloring.hpp"
#include "tetralab/correspondence.hpp"
#include "tetralab/error.hpp"
#include "tetralab/hypercube.hpp"
#include "tetralab/recursion.hpp"

namespace tetralab {

std::string to_string(Status s) {
  switch (s) {
    case Status::Holds: return "holds";
    case Status::Fails: return "fails";
    case Status::Finding: return "finding";
  }
  return "?";
}

Json Report::to_json() const {
  Json j;
  j["check"] = check;
  j["params"] = params;
  j["holds"] = status == Status::Holds;
  j["status"] = to_string(status);
  for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
  j["runtime_ms"] = runtime_ms;
  return j;
}

namespace {

Json bigint_json(const BigInt& v) {
  if (v <= BigInt(INT64_MAX) && v >= BigInt(INT64_MIN)) return static_cast<std::int64_t>(v);
  return v.str();
}

Json faces_json(const std::vector<FaceWord>& fs) {
  Json a = Json::array();
  for (const auto& f : fs) a.push_back(f.str());
  return a;
}

Status status_of(bool holds) { return holds ? Status::Holds : Status::Fails; }

Json simplex_json(const SimplexReport& r) {
  Json j{{"n", r.n},
         {"holds", r.holds},
         {"lhs", r.lhs_label},
         {"rhs", r.rhs_label},
         {"inputs_checked", r.inputs_checked},
         {"pairs", r.pairs},
         {"mismatched_inputs", r.mismatched_inputs}};
  if (r.witness) {
    auto tuple = [](const ColorTuple& t) {
      Json a = Json::array();
      for (auto c : t) a.push_back(c);
      return a;
    };
    Json lhs = Json::array(), rhs = Json::array();
    for (const auto& t : r.witness->lhs) lhs.push_back(tuple(t));
    for (const auto& t : r.witness->rhs) rhs.push_back(tuple(t));
    j["witness"] = {{"input", tuple(r.witness->input)}, {"lhs", lhs}, {"rhs", rhs}};
  }
  return j;
}

template <typename Fn>
Report timed(const std::string& name, Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  Report r;
  r.check = name;
  fn(r);
  r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

Report ybe_corr() {
  return timed("ybe-corr", [](Report& r) {
    const auto ising = check_n_simplex(ising_R(), 2);
    const auto swap = check_n_simplex(swap_correspondence(ColorSet::ising(), 2), 2);
    const auto shear = check_n_simplex(shear_correspondence(), 2);
    r.body["ising"] = simplex_json(ising);
    r.body["swap"] = simplex_json(swap);
    r.body["shear_control"] = simplex_json(shear);
    r.status = status_of(ising.holds && swap.holds && !shear.holds);
  });
}

Report ybe_poly() {
  return timed("ybe-poly", [](Report& r) {
    const auto p = check_R_poly_ybe();
    r.body = {{"identity_in_t", p.holds},
              {"matches_expansion", p.matches_expansion},
              {"identity_at_zero", p.identity_at_zero},
              {"entries_in_1_2_at_one", p.entries_in_1_2_at_one},
              {"histogram", histogram_json(p.histogram)}};
    r.status = status_of(p.holds && p.matches_expansion && p.identity_at_zero);
  });
}

// k-th left facet fixes position k to tau(k); the right chain mirrors it.
std::pair<std::vector<FaceWord>, std::vector<FaceWord>> expected_chains(int n) {
  std::vector<FaceWord> left, right;
  const FaceWord cube = FaceWord::full(n + 1);
  auto tau = [](int r) { return r % 2 == 0 ? 1 : 0; };
  for (int k = 1; k <= n + 1; ++k) left.push_back(cube.fix(k - 1, tau(k)));
  for (int k = 1; k <= n + 1; ++k) {
    const int pos = n + 2 - k;
    right.push_back(cube.fix(pos - 1, 1 - tau(pos)));
  }
  return {left, right};
}

Report simplex_components() {
  return timed("simplex-components", [](Report& r) {
    bool all = true;
    Json rows = Json::array();
    for (int n = 2; n <= 5; ++n) {
      const auto g = component_graph(n);
      const auto [left, right] = expected_chains(n);
      const bool ok = g.component_count == 2 && g.left.transitive_tournament && g.right.transitive_tournament &&
                      g.left.chain == left && g.right.chain == right;
      all = all && ok;
      rows.push_back({{"n", n},
                      {"components", g.component_count},
                      {"left", faces_json(g.left.chain)},
                      {"right", faces_json(g.right.chain)},
                      {"transitive", g.left.transitive_tournament && g.right.transitive_tournament},
                      {"chains_match", g.left.chain == left && g.right.chain == right}});
    }
    Json census = Json::array();
    for (int n = 1; n <= 5; ++n)
      for (const auto& row : i_configuration_census(n)) {
        all = all && row.matches();
        if (n == 3) census.push_back({{"k", row.k}, {"face", row.face.str()}, {"counts", row.counts}});
      }
    r.body["graphs"] = rows;
    r.body["census_n3"] = census;
    r.status = status_of(all);
  });
}

Report coloring_determinism(unsigned) {
  return timed("coloring-determinism", [](Report& r) {
    const auto R = ising_R();
    const auto p = coloring_problem(3, 2);
    auto all = enumerate_colorings(p, R);
    auto shortcut = vertex_shortcut(3);
    std::sort(all.begin(), all.end());
    std::sort(shortcut.begin(), shortcut.end());
    const auto single = coloring_problem(2, 2);
    bool two_each = true;
    for (std::uint32_t s = 0; s < 4; ++s)
      if (propagate_seed(single, R, {s >> 1 & 1u, s & 1u}).size() != 2) two_each = false;
    const auto audit = path_independence_audit(4, 2, R);
    r.body = {{"colorings_N3", all.size()},
              {"shortcut_N3", shortcut.size()},
              {"equals_shortcut", all == shortcut},
              {"single_square_two_completions", two_each},
              {"audit_N4",
               {{"independent", audit.independent},
                {"seeds_checked", audit.seeds_checked},
                {"differing_seeds", audit.differing_seeds}}}};
    if (audit.witness_face) r.body["audit_N4"]["witness_face"] = audit.witness_face->str();
    r.status = status_of(all.size() == 128 && all == shortcut && two_each && audit.independent);
  });
}

Report recursion_image() {
  return timed("recursion-image", [](Report& r) {
    const auto& w = phi();
    const auto lifted = check_lifted_solution(w);
    const auto image = image_coincidence(ising_R(), w, 4);
    Json fibers = Json::object();
    for (const auto& [k, v] : w.relation.fiber_histogram()) fibers[std::to_string(k)] = v;
    const bool partial = w.relation.is_partial_map();
    r.body = {{"support", w.relation.size()},
              {"colorings", w.colorings},
              {"domain", w.relation.domain_size()},
              {"fibers", fibers},
              {"partial_map", partial},
              {"injective_on_colorings", w.injective_on_colorings},
              {"tetrahedron", simplex_json(lifted)},
              {"image_N4",
               {{"source_colorings", image.source_colorings},
                {"image", image.image_size},
                {"target_colorings", image.target_colorings},
                {"image_not_in_target", image.image_not_in_target},
                {"target_not_in_image", image.target_not_in_image},
                {"coincides", image.coincides}}}};
    r.status = status_of(w.relation.size() == 128 && partial && lifted.holds && image.coincides);
  });
}

Report tetrahedron(unsigned threads) {
  return timed("tetrahedron", [&](Report& r) {
    const auto e = check_tetrahedron_matrix(threads);
    r.body = equation_json(e);
    const bool all_two = e.histogram.size() == 1 && e.histogram.begin()->first == "2";
    r.body["all_entries_two"] = all_two;
    r.status = status_of(e.holds && all_two);
  });
}

Report tables() {
  return timed("tables", [](Report& r) {
    const auto s = shared_edges();
    r.text = render_tables_star();
    r.body = {{"star", r.text},
              {"shared_edges", s.edges.size()},
              {"equals_complement_of_corners", s.equals_complement_of_corners},
              {"partitions_valid", s.partitions_valid},
              {"tables_inside_partition", s.tables_inside_partition}};
    r.status = status_of(s.edges.size() == 24 && s.equals_complement_of_corners && s.partitions_valid &&
                         s.tables_inside_partition);
  });
}

Report calibrate() {
  return timed("calibrate", [](Report& r) {
    const auto c = calibrate_formula();
    Json matching = Json::array();
    for (const auto& m : c.matching) matching.push_back(m.str());
    Json top = Json::array();
    for (std::size_t i = 0; i < std::min<std::size_t>(5, c.entries.size()); ++i)
      top.push_back({{"convention", c.entries[i].convention.str()}, {"mismatched_faces", c.entries[i].mismatched_faces}});
    r.body = {{"faces", c.faces},
              {"conventions_tried", c.entries.size()},
              {"matching", matching},
              {"best", {{"convention", c.best.convention.str()}, {"mismatched_faces", c.best.mismatched_faces}}},
              {"nearest", top}};
    r.status = c.found() ? Status::Holds : Status::Finding;
  });
}

Report properties() {
  return timed("properties", [](Report& r) {
    const auto p = structural_properties_audit();
    Json a = Json::array();
    for (const auto& c : p.checks) a.push_back({{"name", c.name}, {"holds", c.holds}, {"detail", c.detail}});
    r.body["checks"] = a;
    r.status = status_of(p.all_hold());
  });
}

std::string reading_name(AReading a) { return a == AReading::EdgeDirection ? "direction" : "value"; }

Report tte(AReading reading, unsigned threads) {
  return timed("tte", [&](Report& r) {
    const auto t = check_twisted_tetrahedron(reading, threads, true);
    r.params["a_reading"] = reading_name(reading);
    Json residual = Json::array();
    for (const auto& e : t.residual)
      residual.push_back({{"relabeling", e.relabeling}, {"holds", e.holds}, {"mismatched_inputs", e.mismatched_inputs}});
    r.body = {{"lhs", t.lhs_label},
              {"rhs", t.rhs_label},
              {"subscripts_match_printed", t.subscripts_match_printed},
              {"weights_reduce_to_phi", t.weights_reduce_to_phi},
              {"exact", equation_json(t.exact)},
              {"at_one", equation_json(t.at_one)}};
    if (!t.exact.holds) {
      r.body["supports_agree"] = t.supports_agree;
      r.body["residual"] = residual;
    }
    r.status = status_of(t.exact.holds && t.at_one.holds && t.subscripts_match_printed && t.weights_reduce_to_phi);
  });
}

Report tte_equivalence(AReading reading, unsigned threads) {
  return timed("tte-equivalence", [&](Report& r) {
    const auto e = check_tte_equivalence(reading, threads);
    r.params["a_reading"] = reading_name(reading);
    r.body = {{"transpositions_commute", e.transpositions_commute},
              {"relabeled_form_identical", e.relabeled_form_identical},
              {"tte2", equation_json(e.tte2)}};
    r.status = status_of(e.transpositions_commute && e.relabeled_form_identical && e.tte2.holds);
  });
}

EdgeMethod sweep_for(const TorusLattice& lat) {
  return lat.edge_count() <= 24 ? EdgeMethod::Exhaustive : EdgeMethod::Generators;
}

const char* method_name(EdgeMethod m) { return m == EdgeMethod::Exhaustive ? "exhaustive" : "generators"; }

Json sectors_json(const EdgeSum& e) {
  Json s = Json::object();
  for (const auto& [k, p] : e.sectors) {
    std::string bits;
    for (int a = 0; a < 3; ++a) bits += (k >> a & 1) ? '1' : '0';
    s[bits] = laurent_json(p);
  }
  return s;
}

Report relate_check(const CheckOptions& o) {
  return timed("relate", [&](Report& r) {
    const TorusLattice lat(o.size);
    const auto m = sweep_for(lat);
    const auto rel = relate(lat, m);
    r.params = {{"size", lat.str()}, {"sweep", method_name(m)}};
    Json mult = Json::object();
    for (std::size_t e = 0; e < rel.coverage.multiplicity.size(); ++e)
      if (rel.coverage.multiplicity[e] != 1) mult[std::to_string(e)] = rel.coverage.multiplicity[e];
    r.body = {{"kappa", rel.kappa},
              {"c", bigint_json(rel.c)},
              {"spin_is_twice_trivial", rel.spin_is_twice_trivial},
              {"coverage_exactly_one", rel.coverage.exactly_one},
              {"coverage_exceptions", mult},
              {"z_spin_at_one", bigint_json(rel.spin.at_one())},
              {"admissible", rel.edge.admissible},
              {"trivial_sector", bigint_json(rel.edge.trivial().at_one())},
              {"sectors_well_defined", rel.edge.sectors_well_defined},
              {"network_support", rel.network.supported},
              {"support_swept", rel.network.support_swept},
              {"support_equals_admissible",
               rel.network.support_swept ? Json(rel.network.support_equals_admissible) : Json(nullptr)},
              {"z_network", laurent_json(rel.network.value)}};
    if (!rel.diff.empty()) r.body["diff"] = rel.diff;
    const bool support_ok = !rel.network.support_swept || rel.network.support_equals_admissible;
    r.status = status_of(rel.holds && rel.edge.sectors_well_defined && support_ok &&
                         rel.spin.at_one() == (BigInt(1) << lat.vertex_count()));
  });
}

Report codes_check() {
  return timed("codes", [](Report& r) {
    auto coil = codes_coil_report(4);
    const auto code = redundancy_code();
    const int md = min_distance(code);
    const bool closed = complement_closed(code);
    const auto hex = WordSet::parse({"000", "100", "110", "111", "011", "001"});
    const auto chorded = WordSet::parse({"000", "001", "011", "010", "110", "100"});
    const auto audit = subgraph_distance_audit();
    auto pair_json = [](const PairDistance& p) {
      return Json{{"a", WordSet{4, {}}.str(p.a)}, {"b", WordSet{4, {}}.str(p.b)}, {"d", p.in_cube}, {"d_sub", p.in_subgraph}};
    };
    Json converse = Json::array();
    for (const auto& p : audit.converse_violations) converse.push_back(pair_json(p));
    Json pairs = Json::array();
    for (const auto& p : audit.pairs) pairs.push_back(pair_json(p));
    r.body = {{"coil", coil.body},
              {"code", {{"min_distance", md}, {"complement_closed", closed}}},
              {"hexagon_000_100_110_111_011_001_induced", is_induced_cycle(hex)},
              {"hexagon_chorded_control_induced", is_induced_cycle(chorded)},
              {"subgraph_audit",
               {{"edges", audit.subgraph_edges.size()},
                {"vertices", audit.vertices.size()},
                {"stated_direction_holds", audit.stated_holds()},
                {"converse_holds", audit.converse_holds()},
                {"converse_counterexamples", converse},
                {"coil_inside_subgraph", audit.coil_inside},
                {"coil_edges_missing", faces_json(audit.coil_edges_missing)},
                {"pairs", pairs}}}};
    r.status = status_of(coil.status == Status::Holds && md == 2 && closed && audit.stated_holds() &&
                         audit.subgraph_edges.size() == 12);
  });
}

}  // namespace

Json laurent_json(const Laurent& p) {
  Json j = Json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = bigint_json(c);
  return j;
}

Json histogram_json(const std::map<std::string, std::uint64_t>& h) {
  Json j = Json::object();
  for (const auto& [k, v] : h) j[k] = v;
  return j;
}

Json equation_json(const EquationReport& r, std::size_t slots, std::uint32_t dim) {
  Json j{{"holds", r.holds},
         {"inputs_checked", r.inputs_checked},
         {"mismatched_inputs", r.mismatched_inputs},
         {"nonzero_entries", r.nonzero_entries},
         {"histogram", histogram_json(r.histogram)}};
  if (!r.rhs_histogram.empty()) j["rhs_histogram"] = histogram_json(r.rhs_histogram);
  if (r.witness) {
    auto digits = [&](std::uint64_t flat) {
      std::vector<std::uint32_t> d(slots);
      for (std::size_t s = slots; s-- > 0;) {
        d[s] = static_cast<std::uint32_t>(flat % dim);
        flat /= dim;
      }
      return d;
    };
    auto combo = [&](const Combination& c) {
      Json a = Json::array();
      for (const auto& [state, value] : c) a.push_back({{"state", digits(state)}, {"value", value.str()}});
      return a;
    };
    j["witness"] = {{"input", r.witness->input}, {"lhs", combo(r.witness->lhs)}, {"rhs", combo(r.witness->rhs)}};
  }
  return j;
}

Report codes_coil_report(int n, const std::vector<std::string>& words) {
  return timed("codes-coil", [&](Report& r) {
    WordSet cycle;
    if (words.empty()) {
      if (n != 4) throw UsageError("no built-in cycle for n = " + std::to_string(n) + "; pass --cycle");
      cycle = coil8();
    } else if (std::any_of(words.begin(), words.end(), [](const std::string& w) { return w.find('*') != std::string::npos; })) {
      std::vector<FaceWord> edges;
      for (const auto& w : words) edges.push_back(FaceWord::parse(w));
      cycle = cycle_from_edges(edges);
    } else {
      cycle = WordSet::parse(words);
    }
    if (cycle.length != n) throw UsageError("cycle words have length " + std::to_string(cycle.length));
    const auto canon = canonical_cycle(cycle);
    const auto c = check_cycle(cycle);
    const auto chain = chain_code_check(cycle, 2);
    Json seq = Json::array();
    for (auto w : canon.words) seq.push_back(canon.str(w));
    r.params = {{"n", n}};
    r.body = {{"cycle", seq},
              {"is_cycle", c.is_cycle()},
              {"induced", c.induced},
              {"chain_code_k2", chain.holds},
              {"pairs_checked", chain.pairs_checked}};
    if (c.chord) r.body["chord"] = {cycle.str(cycle.words[c.chord->first]), cycle.str(cycle.words[c.chord->second])};
    if (chain.witness)
      r.body["chain_witness"] = {{"a", cycle.str(cycle.words[chain.witness->first])},
                                 {"b", cycle.str(cycle.words[chain.witness->second])},
                                 {"cycle_distance", chain.witness_cycle_distance},
                                 {"hamming", chain.witness_hamming}};
    r.status = status_of(c.induced && chain.holds);
  });
}

Report codes_distance_report(const std::vector<std::string>& words) {
  return timed("codes-distance", [&](Report& r) {
    const auto code = WordSet::parse(words);
    r.params = {{"words", words}};
    r.body = {{"size", code.words.size()}, {"min_distance", min_distance(code)}, {"complement_closed", complement_closed(code)}};
  });
}

Report partition_report(const CheckOptions& o) {
  return timed("partition", [&](Report& r) {
    const TorusLattice lat(o.size);
    const auto m = sweep_for(lat);
    const std::string& method = o.method;
    if (method != "all" && method != "spin" && method != "edge" && method != "network")
      throw UsageError("--method must be spin, edge, network or all");
    r.params = {{"size", lat.str()}, {"method", method}, {"sweep", method_name(m)}};
    bool ok = true;
    if (method == "all" || method == "spin") {
      const auto z = z_spin(lat);
      r.body["z_spin"] = laurent_json(z);
      r.body["z_spin_at_one"] = bigint_json(z.at_one());
      ok = ok && z.at_one() == (BigInt(1) << lat.vertex_count()) && z == z.reflect();
    }
    if (method == "all" || method == "edge") {
      const auto e = z_edge(lat, m);
      r.body["z_edge_sectors"] = sectors_json(e);
      r.body["admissible"] = e.admissible;
      r.body["sectors_well_defined"] = e.sectors_well_defined;
      ok = ok && e.sectors_well_defined;
    }
    if (method == "all" || method == "network") {
      const auto n = z_network(lat, o.dirs, m);
      r.body["z_network"] = laurent_json(n.value);
      r.body["network_support"] = n.supported;
      r.body["support_swept"] = n.support_swept;
      r.body["support_equals_admissible"] = n.support_swept ? Json(n.support_equals_admissible) : Json(nullptr);
      r.body["bindings_consistent"] = n.bindings_consistent;
      ok = ok && n.bindings_consistent && (!n.support_swept || n.support_equals_admissible);
    }
    r.status = status_of(ok);
  });
}

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids{"ybe-corr",   "ybe-poly", "simplex-components", "coloring-determinism",
                                            "recursion-image", "tetrahedron", "tables", "calibrate",
                                            "properties", "tte",      "tte-equivalence", "partition",
                                            "relate",     "codes"};
  return ids;
}

std::vector<Report> run_check(const std::string& id, const CheckOptions& o) {
  if (id == "all") {
    std::vector<Report> out;
    for (const auto& c : check_ids())
      for (auto& r : run_check(c, o)) out.push_back(std::move(r));
    return out;
  }
  static const std::map<std::string, std::function<Report(const CheckOptions&)>> table{
      {"ybe-corr", [](const CheckOptions&) { return ybe_corr(); }},
      {"ybe-poly", [](const CheckOptions&) { return ybe_poly(); }},
      {"simplex-components", [](const CheckOptions&) { return simplex_components(); }},
      {"coloring-determinism", [](const CheckOptions& o) { return coloring_determinism(o.threads); }},
      {"recursion-image", [](const CheckOptions&) { return recursion_image(); }},
      {"tetrahedron", [](const CheckOptions& o) { return tetrahedron(o.threads); }},
      {"tables", [](const CheckOptions&) { return tables(); }},
      {"calibrate", [](const CheckOptions&) { return calibrate(); }},
      {"properties", [](const CheckOptions&) { return properties(); }},
      {"tte", [](const CheckOptions& o) { return tte(o.a_reading, o.threads); }},
      {"tte-equivalence", [](const CheckOptions& o) { return tte_equivalence(o.a_reading, o.threads); }},
      {"partition", [](const CheckOptions& o) { return partition_report(o); }},
      {"relate", [](const CheckOptions& o) { return relate_check(o); }},
      {"codes", [](const CheckOptions&) { return codes_check(); }},
  };
  auto it = table.find(id);
  if (it == table.end()) throw UsageError("unknown check '" + id + "'");
  return {it->second(o)};
}

}  // namespace tetralab
