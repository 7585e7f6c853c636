#include "tetralab/recursion.hpp"

#include <algorithm>
#include <chrono>

#include "tetralab/error.hpp"

namespace tetralab {

std::uint32_t face_color(const ColoringProblem& p, const CubeColoring& c, const FaceWord& face,
                         std::uint32_t base) {
  std::uint32_t code = 0;
  for (const auto& block :
       {incoming_facets(face, FacetOrder::AscendingRank), outgoing_facets(face, FacetOrder::AscendingRank)})
    for (const auto& f : block) {
      const std::uint32_t v = c.at(p.cell(f));
      if (v >= base) throw UsageError("face_color: facet " + f.str() + " is uncolored");
      code = code * base + v;
    }
  return code;
}

LiftedCorrespondence rho(const Correspondence& r, int n, FacetOrder inner_order, FacetOrder leg_order) {
  if (n < 1 || n > 3) throw UsageError("rho: n must be 1..3");
  if (n >= 2) {
    const auto pre = check_n_simplex(r, n, inner_order);
    if (!pre.holds) throw StructuralError("rho: the source relation fails its " + std::to_string(n) + "-simplex check");
  }
  const ColoringProblem p = coloring_problem(n + 1, n, inner_order);
  const auto colorings = enumerate_colorings(p, r);
  const FaceWord cube = FaceWord::full(n + 1);
  const auto ins = incoming_facets(cube, leg_order);
  const auto outs = outgoing_facets(cube, leg_order);
  const std::uint32_t q = r.colors().size();

  LiftedCorrespondence w{Correspondence(ColorSet::tuples(r.colors(), 2 * n), n + 1), n, leg_order, {}, {}, false};
  for (const auto& c : colorings) {
    ColorTuple a, b;
    for (const auto& f : ins) a.push_back(face_color(p, c, f, q));
    for (const auto& f : outs) b.push_back(face_color(p, c, f, q));
    w.relation.add(a, b);
  }
  w.colorings = colorings.size();
  w.fibers = w.relation.fiber_histogram();
  w.injective_on_colorings = w.relation.size() == colorings.size();
  return w;
}

SimplexReport check_lifted_solution(const LiftedCorrespondence& w) {
  return check_n_simplex(w.relation, w.n + 1, w.leg_order);
}

ImageReport image_coincidence(const Correspondence& r, const LiftedCorrespondence& w, int N,
                              FacetOrder inner_order) {
  const auto start = std::chrono::steady_clock::now();
  const int n = w.n;
  const ColoringProblem low = coloring_problem(N, n, inner_order);
  const ColoringProblem high = coloring_problem(N, n + 1, w.leg_order);
  const std::uint32_t q = r.colors().size();

  const auto source = enumerate_colorings(low, r);
  std::vector<CubeColoring> image;
  image.reserve(source.size());
  for (const auto& c : source) {
    CubeColoring lifted(high.cells.size());
    for (std::size_t i = 0; i < high.cells.size(); ++i) lifted[i] = face_color(low, c, high.cells[i], q);
    image.push_back(std::move(lifted));
  }
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  const auto target = enumerate_colorings(high, w.relation);

  ImageReport rep;
  rep.N = N;
  rep.source_colorings = source.size();
  rep.image_size = image.size();
  rep.target_colorings = target.size();
  std::vector<CubeColoring> diff;
  std::set_difference(image.begin(), image.end(), target.begin(), target.end(), std::back_inserter(diff));
  rep.image_not_in_target = diff.size();
  diff.clear();
  std::set_difference(target.begin(), target.end(), image.begin(), image.end(), std::back_inserter(diff));
  rep.target_not_in_image = diff.size();
  rep.coincides = rep.image_not_in_target == 0 && rep.target_not_in_image == 0;
  rep.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

const LiftedCorrespondence& phi() {
  static const LiftedCorrespondence w = rho(ising_R(), 2);
  return w;
}

SparseOperator phi_matrix() { return associated_matrix(phi().relation); }

}  // namespace tetralab
