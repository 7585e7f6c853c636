#include "tetralab/correspondence.hpp"

#include <algorithm>
#include <chrono>

#include "tetralab/error.hpp"

namespace tetralab {

ColorSet::ColorSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw UsageError("ColorSet: empty");
}

ColorSet ColorSet::ising() { return ColorSet({"+", "-"}); }

ColorSet ColorSet::tuples(const ColorSet& base, int k) {
  std::vector<std::string> names{""};
  for (int i = 0; i < k; ++i) {
    std::vector<std::string> next;
    next.reserve(names.size() * base.size());
    for (const auto& prefix : names)
      for (std::uint32_t c = 0; c < base.size(); ++c) next.push_back(prefix + base.name(c));
    names = std::move(next);
  }
  return ColorSet(std::move(names));
}

std::uint32_t ColorSet::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw UsageError("unknown color '" + name + "'");
  return static_cast<std::uint32_t>(it - names_.begin());
}

Correspondence::Correspondence(ColorSet colors, int arity) : colors_(std::move(colors)), arity_(arity) {
  if (arity < 1) throw UsageError("Correspondence: arity must be positive");
  for (int i = 0; i < arity; ++i) {
    tuple_count_ *= colors_.size();
    if (tuple_count_ > (1ull << 40)) throw UsageError("Correspondence: tuple space too large");
  }
}

std::uint64_t Correspondence::flatten(const ColorTuple& t) const {
  if (static_cast<int>(t.size()) != arity_) throw UsageError("tuple arity mismatch");
  std::uint64_t flat = 0;
  for (auto c : t) {
    if (c >= colors_.size()) throw UsageError("color index out of range");
    flat = flat * colors_.size() + c;
  }
  return flat;
}

ColorTuple Correspondence::unflatten(std::uint64_t flat) const {
  ColorTuple t(arity_);
  for (int k = arity_; k-- > 0;) {
    t[k] = static_cast<std::uint32_t>(flat % colors_.size());
    flat /= colors_.size();
  }
  return t;
}

std::string Correspondence::render(const ColorTuple& t) const {
  std::string s = "(";
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k) s += ",";
    s += colors_.name(t[k]);
  }
  return s + ")";
}

void Correspondence::add_flat(std::uint64_t in, std::uint64_t out) {
  if (in >= tuple_count_ || out >= tuple_count_) throw UsageError("Correspondence::add: tuple out of range");
  auto& outs = rel_[in];
  auto it = std::lower_bound(outs.begin(), outs.end(), out);
  if (it != outs.end() && *it == out) return;
  outs.insert(it, out);
  ++size_;
}

void Correspondence::add(const ColorTuple& in, const ColorTuple& out) { add_flat(flatten(in), flatten(out)); }

bool Correspondence::contains(const ColorTuple& in, const ColorTuple& out) const {
  const auto& outs = outputs(flatten(in));
  return std::binary_search(outs.begin(), outs.end(), flatten(out));
}

const std::vector<std::uint64_t>& Correspondence::outputs(std::uint64_t in) const {
  static const std::vector<std::uint64_t> kNone;
  auto it = rel_.find(in);
  return it == rel_.end() ? kNone : it->second;
}

std::map<std::size_t, std::size_t> Correspondence::fiber_histogram() const {
  std::map<std::size_t, std::size_t> h;
  for (const auto& [in, outs] : rel_) ++h[outs.size()];
  return h;
}

bool Correspondence::is_partial_map() const {
  return std::all_of(rel_.begin(), rel_.end(), [](const auto& kv) { return kv.second.size() == 1; });
}

RelationChain::RelationChain(std::size_t slot_count, std::uint32_t colors, std::vector<SlotBinding> written)
    : slots_(slot_count), q_(colors), chain_(std::move(written)) {
  strides_.assign(slots_, 1);
  for (std::size_t s = slots_; s-- > 0;) {
    strides_[s] = space_;
    space_ *= q_;
  }
  for (const auto& b : chain_) {
    if (!b.relation) throw UsageError("binding without relation");
    if (static_cast<int>(b.slots.size()) != b.relation->arity())
      throw UsageError("binding arity mismatch for " + b.label);
    if (b.relation->colors().size() != q_) throw UsageError("color set mismatch for " + b.label);
    std::vector<bool> used(slots_, false);
    for (auto s : b.slots) {
      if (s >= slots_ || used[s]) throw UsageError("invalid slot binding for " + b.label);
      used[s] = true;
    }
  }
}

std::string RelationChain::label() const {
  std::string out;
  for (const auto& b : chain_) {
    if (!out.empty()) out += ' ';
    out += b.label;
  }
  return out;
}

ColorTuple RelationChain::unflatten(std::uint64_t flat) const {
  ColorTuple t(slots_);
  for (std::size_t s = 0; s < slots_; ++s) t[s] = static_cast<std::uint32_t>((flat / strides_[s]) % q_);
  return t;
}

std::vector<std::uint64_t> RelationChain::apply(std::uint64_t in) const {
  std::vector<std::uint64_t> cur{in};
  std::vector<std::uint64_t> next;
  for (auto it = chain_.rbegin(); it != chain_.rend() && !cur.empty(); ++it) {
    const SlotBinding& b = *it;
    next.clear();
    for (std::uint64_t state : cur) {
      std::uint64_t sub = 0;
      std::uint64_t base = state;
      for (auto s : b.slots) {
        const std::uint64_t d = (state / strides_[s]) % q_;
        sub = sub * q_ + d;
        base -= d * strides_[s];
      }
      for (std::uint64_t out : b.relation->outputs(sub)) {
        std::uint64_t moved = base;
        for (std::size_t k = b.slots.size(); k-- > 0;) {
          moved += (out % q_) * strides_[b.slots[k]];
          out /= q_;
        }
        next.push_back(moved);
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    std::swap(cur, next);
  }
  return cur;
}

Correspondence compose(const RelationChain& chain, const ColorSet& colors) {
  Correspondence out(colors, static_cast<int>(chain.slot_count()));
  for (std::uint64_t in = 0; in < chain.space_dimension(); ++in)
    for (auto o : chain.apply(in)) out.add_flat(in, o);
  return out;
}

std::size_t simplex_slot(const FaceWord& face) {
  std::size_t rank = 0;
  std::uint64_t k = 0;
  for (int p : face.free_positions()) {
    ++k;
    // colex: sum of C(p, k)
    std::uint64_t c = 1;
    if (static_cast<std::uint64_t>(p) < k) {
      c = 0;
    } else {
      for (std::uint64_t i = 0; i < k; ++i) c = c * (p - i) / (i + 1);
    }
    rank += c;
  }
  return rank;
}

std::pair<std::vector<SlotBinding>, std::vector<SlotBinding>> simplex_chains(const Correspondence& r, int n,
                                                                              FacetOrder order) {
  if (r.arity() != n) throw UsageError("n-simplex check needs arity n");
  const ComponentGraph g = component_graph(n);
  auto bindings = [&](const SimplexComponent& comp) {
    std::vector<SlotBinding> written;
    for (const FaceWord& facet : comp.chain) {
      const auto ins = incoming_facets(facet, order);
      const auto outs = outgoing_facets(facet, order);
      SlotBinding b{&r, {}, {}};
      for (std::size_t k = 0; k < ins.size(); ++k) {
        const std::size_t s = simplex_slot(ins[k]);
        if (simplex_slot(outs[k]) != s) throw StructuralError("incoming/outgoing slot mismatch at " + facet.str());
        b.slots.push_back(s);
        b.label += std::to_string(s + 1);
      }
      b.label = "R" + b.label;
      written.push_back(std::move(b));
    }
    std::reverse(written.begin(), written.end());
    return written;
  };
  return {bindings(g.left), bindings(g.right)};
}

SimplexReport check_n_simplex(const Correspondence& r, int n, FacetOrder order) {
  if (n < 2 || n > 4) throw UsageError("check_n_simplex: n must be 2..4");
  const auto start = std::chrono::steady_clock::now();
  auto [left, right] = simplex_chains(r, n, order);
  const std::size_t slots = static_cast<std::size_t>((n + 1) * n / 2);
  const RelationChain lhs(slots, r.colors().size(), std::move(left));
  const RelationChain rhs(slots, r.colors().size(), std::move(right));
  if (lhs.space_dimension() > (1ull << 26)) throw UsageError("check_n_simplex: ambient space too large");

  SimplexReport rep;
  rep.n = n;
  rep.lhs_label = lhs.label();
  rep.rhs_label = rhs.label();
  for (std::uint64_t in = 0; in < lhs.space_dimension(); ++in) {
    auto a = lhs.apply(in);
    auto b = rhs.apply(in);
    ++rep.inputs_checked;
    if (a != b) {
      rep.holds = false;
      ++rep.mismatched_inputs;
      if (!rep.witness) {
        RelationWitness w{lhs.unflatten(in), {}, {}};
        for (auto x : a) w.lhs.push_back(lhs.unflatten(x));
        for (auto x : b) w.rhs.push_back(rhs.unflatten(x));
        rep.witness = std::move(w);
      }
    } else {
      rep.pairs += a.size();
    }
  }
  rep.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

Correspondence ising_R() {
  Correspondence r(ColorSet::ising(), 2);
  for (std::uint32_t a = 0; a < 2; ++a)
    for (std::uint32_t b = 0; b < 2; ++b)
      for (std::uint32_t c = 0; c < 2; ++c)
        for (std::uint32_t d = 0; d < 2; ++d)
          if ((a ^ b) == (c ^ d)) r.add({a, b}, {c, d});
  return r;
}

Correspondence identity_correspondence(const ColorSet& colors, int arity) {
  Correspondence r(colors, arity);
  for (std::uint64_t t = 0; t < r.tuple_count(); ++t) r.add_flat(t, t);
  return r;
}

Correspondence swap_correspondence(const ColorSet& colors, int arity) {
  Correspondence r(colors, arity);
  for (std::uint64_t t = 0; t < r.tuple_count(); ++t) {
    ColorTuple x = r.unflatten(t);
    std::reverse(x.begin(), x.end());
    r.add_flat(t, r.flatten(x));
  }
  return r;
}

Correspondence shear_correspondence() {
  Correspondence r(ColorSet::ising(), 2);
  for (std::uint32_t a = 0; a < 2; ++a)
    for (std::uint32_t b = 0; b < 2; ++b) r.add({a, b}, {a, a ^ b});
  return r;
}

SparseOperator associated_matrix(const Correspondence& c) {
  SparseOperator op(std::vector<std::uint32_t>(c.arity(), c.colors().size()));
  for (const auto& [in, outs] : c.relation())
    for (auto o : outs) op.add(in, o, 1);
  return op;
}

SparseOperator r_poly() {
  SparseOperator r({2, 2});
  const Laurent t = Laurent::monomial(1);
  for (std::uint64_t in = 0; in < 4; ++in) {
    r.add(in, in, 1);
    r.add(in, in ^ 3u, t);
  }
  return r;
}

PolyYbeReport check_R_poly_ybe() {
  const auto start = std::chrono::steady_clock::now();
  auto r = std::make_shared<const SparseOperator>(r_poly());
  const std::vector<std::uint32_t> dims{2, 2, 2};
  const AmbientChain lhs(dims, {bind(r, {0, 1}, "R12"), bind(r, {0, 2}, "R13"), bind(r, {1, 2}, "R23")});
  const AmbientChain rhs(dims, {bind(r, {1, 2}, "R23"), bind(r, {0, 2}, "R13"), bind(r, {0, 1}, "R12")});

  // 1 + t^3 + (t + t^2)(s s 1 + s 1 s + 1 s s), s flipping a leg.
  auto expected = std::make_shared<SparseOperator>(std::vector<std::uint32_t>{2, 2, 2});
  const Laurent t = Laurent::monomial(1);
  const Laurent t2 = Laurent::monomial(2);
  for (std::uint64_t in = 0; in < 8; ++in) {
    expected->add(in, in, 1 + Laurent::monomial(3));
    for (std::uint64_t flip : {6u, 5u, 3u}) expected->add(in, in ^ flip, t + t2);
  }
  const AmbientChain exp_chain(dims, {bind(expected, {0, 1, 2}, "E")});

  PolyYbeReport rep;
  rep.holds = check_equation(lhs, rhs, 1).holds;
  const EquationReport e = check_equation(lhs, exp_chain, 1);
  rep.matches_expansion = e.holds;
  rep.histogram = e.histogram;

  rep.identity_at_zero = true;
  rep.entries_in_1_2_at_one = true;
  for (std::uint64_t in = 0; in < 8; ++in) {
    const Combination c = lhs.apply(in);
    for (const auto& [out, v] : c) {
      const BigInt at0 = v.coefficient(0);
      if (at0 != (out == in ? 1 : 0)) rep.identity_at_zero = false;
      const BigInt at1 = v.at_one();
      if (at1 != 1 && at1 != 2) rep.entries_in_1_2_at_one = false;
    }
    if (!c.contains(in)) rep.identity_at_zero = false;
  }
  rep.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace tetralab
