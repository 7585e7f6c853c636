#include "tetralab/sparse_operator.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

#include "tetralab/error.hpp"

namespace tetralab {

SparseOperator::SparseOperator(std::vector<std::uint32_t> leg_dims) : dims_(std::move(leg_dims)) {
  for (std::uint32_t d : dims_) {
    if (d == 0) throw UsageError("SparseOperator: zero leg dimension");
    space_ *= d;
    if (space_ > kMaxSpace) throw UsageError("SparseOperator: space too large for column storage");
  }
  columns_.resize(space_);
}

SparseOperator SparseOperator::identity(std::vector<std::uint32_t> leg_dims) {
  SparseOperator op(std::move(leg_dims));
  for (std::uint64_t i = 0; i < op.space_; ++i) op.add(i, i, 1);
  return op;
}

SparseOperator SparseOperator::permutation(std::span<const std::uint32_t> perm) {
  SparseOperator op({static_cast<std::uint32_t>(perm.size())});
  for (std::uint32_t i = 0; i < perm.size(); ++i) {
    if (perm[i] >= perm.size()) throw UsageError("permutation: image out of range");
    op.add(i, perm[i], 1);
  }
  return op;
}

void SparseOperator::add(std::uint64_t in, std::uint64_t out, const Laurent& value) {
  if (in >= space_ || out >= space_) throw UsageError("SparseOperator::add: index out of range");
  if (value.is_zero()) return;
  auto& col = columns_[in];
  auto it = std::lower_bound(col.begin(), col.end(), out,
                             [](const OperatorTerm& t, std::uint64_t o) { return t.out < o; });
  if (it != col.end() && it->out == out) {
    it->value += value;
    if (it->value.is_zero()) col.erase(it);
  } else {
    col.insert(it, OperatorTerm{out, value});
  }
}

void SparseOperator::add(std::span<const std::uint32_t> in, std::span<const std::uint32_t> out,
                         const Laurent& value) {
  add(flatten(in), flatten(out), value);
}

Laurent SparseOperator::entry(std::uint64_t in, std::uint64_t out) const {
  for (const auto& t : columns_.at(in))
    if (t.out == out) return t.value;
  return {};
}

std::size_t SparseOperator::nnz() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

std::uint64_t SparseOperator::flatten(std::span<const std::uint32_t> index) const {
  if (index.size() != dims_.size()) throw UsageError("flatten: leg count mismatch");
  std::uint64_t flat = 0;
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    if (index[k] >= dims_[k]) throw UsageError("flatten: index exceeds leg dimension");
    flat = flat * dims_[k] + index[k];
  }
  return flat;
}

std::vector<std::uint32_t> SparseOperator::unflatten(std::uint64_t flat) const {
  std::vector<std::uint32_t> idx(dims_.size());
  for (std::size_t k = dims_.size(); k-- > 0;) {
    idx[k] = static_cast<std::uint32_t>(flat % dims_[k]);
    flat /= dims_[k];
  }
  return idx;
}

SparseOperator SparseOperator::specialize_at_one() const {
  SparseOperator r(dims_);
  for (std::uint64_t in = 0; in < space_; ++in)
    for (const auto& t : columns_[in]) r.add(in, t.out, Laurent::monomial(0, t.value.at_one()));
  return r;
}

SparseOperator SparseOperator::conjugated(std::span<const std::uint32_t> perm) const {
  for (std::uint32_t d : dims_)
    if (d != perm.size()) throw UsageError("conjugated: permutation size differs from a leg dimension");
  auto map_state = [&](std::uint64_t flat) {
    auto idx = unflatten(flat);
    for (auto& x : idx) x = perm[x];
    return flatten(idx);
  };
  SparseOperator r(dims_);
  for (std::uint64_t in = 0; in < space_; ++in)
    for (const auto& t : columns_[in]) r.add(map_state(in), map_state(t.out), t.value);
  return r;
}

SparseOperator operator*(const SparseOperator& a, const SparseOperator& b) {
  if (a.dims_ != b.dims_) throw UsageError("operator*: leg dimensions differ");
  SparseOperator r(a.dims_);
  for (std::uint64_t in = 0; in < b.space_; ++in)
    for (const auto& mid : b.columns_[in])
      for (const auto& t : a.columns_[mid.out]) r.add(in, t.out, mid.value * t.value);
  return r;
}

bool SparseOperator::operator==(const SparseOperator& other) const {
  if (dims_ != other.dims_) return false;
  for (std::uint64_t in = 0; in < space_; ++in) {
    const auto& x = columns_[in];
    const auto& y = other.columns_[in];
    if (x.size() != y.size()) return false;
    for (std::size_t k = 0; k < x.size(); ++k)
      if (x[k].out != y[k].out || !(x[k].value == y[k].value)) return false;
  }
  return true;
}

ChainFactor bind(std::shared_ptr<const SparseOperator> op, std::vector<std::size_t> slots, std::string label) {
  ChainFactor f;
  f.op = std::move(op);
  f.slots = std::move(slots);
  f.label = std::move(label);
  return f;
}

ChainFactor slot_permutation(std::vector<std::size_t> target, std::string label) {
  ChainFactor f;
  f.permutation = std::move(target);
  f.label = std::move(label);
  return f;
}

AmbientChain::AmbientChain(std::vector<std::uint32_t> slot_dims, std::vector<ChainFactor> written)
    : dims_(std::move(slot_dims)), factors_(std::move(written)) {
  strides_.assign(dims_.size(), 1);
  for (std::size_t s = dims_.size(); s-- > 0;) {
    strides_[s] = space_;
    space_ *= dims_[s];
  }
  for (const auto& f : factors_) {
    if (!f.permutation.empty()) {
      if (f.permutation.size() != dims_.size()) throw UsageError("slot permutation size mismatch");
      std::vector<bool> hit(dims_.size(), false);
      for (std::size_t s = 0; s < dims_.size(); ++s) {
        const std::size_t t = f.permutation[s];
        if (t >= dims_.size() || hit[t] || dims_[t] != dims_[s]) throw UsageError("invalid slot permutation");
        hit[t] = true;
      }
      continue;
    }
    if (!f.op) throw UsageError("chain factor without operator");
    if (f.slots.size() != f.op->legs()) throw UsageError("binding arity mismatch for " + f.label);
    std::vector<bool> used(dims_.size(), false);
    for (std::size_t k = 0; k < f.slots.size(); ++k) {
      const std::size_t s = f.slots[k];
      if (s >= dims_.size() || used[s]) throw UsageError("invalid slot binding for " + f.label);
      if (dims_[s] != f.op->leg_dims()[k]) throw UsageError("dimension mismatch binding " + f.label);
      used[s] = true;
    }
  }
}

std::string AmbientChain::label() const {
  std::string out;
  for (const auto& f : factors_) {
    if (!out.empty()) out += ' ';
    out += f.label.empty() ? "?" : f.label;
  }
  return out;
}

std::uint64_t AmbientChain::flatten(std::span<const std::uint32_t> state) const {
  if (state.size() != dims_.size()) throw UsageError("ambient state has wrong slot count");
  std::uint64_t flat = 0;
  for (std::size_t s = 0; s < dims_.size(); ++s) {
    if (state[s] >= dims_[s]) throw UsageError("ambient state digit exceeds slot dimension");
    flat += state[s] * strides_[s];
  }
  return flat;
}

std::vector<std::uint32_t> AmbientChain::unflatten(std::uint64_t flat) const {
  std::vector<std::uint32_t> state(dims_.size());
  for (std::size_t s = 0; s < dims_.size(); ++s) state[s] = digit(flat, s);
  return state;
}

// Returns the ambient state with the factor's slots cleared; `sub` receives the
// operator-local input index.
std::uint64_t AmbientChain::step(const ChainFactor& f, std::uint64_t flat, std::uint64_t& sub) const {
  sub = 0;
  std::uint64_t base = flat;
  for (std::size_t k = 0; k < f.slots.size(); ++k) {
    const std::size_t s = f.slots[k];
    const std::uint32_t d = digit(flat, s);
    sub = sub * dims_[s] + d;
    base -= d * strides_[s];
  }
  return base;
}

std::uint64_t AmbientChain::permute(const ChainFactor& f, std::uint64_t flat) const {
  std::uint64_t moved = 0;
  for (std::size_t s = 0; s < dims_.size(); ++s) moved += digit(flat, s) * strides_[f.permutation[s]];
  return moved;
}

// Applies factors_[upto-1] .. factors_[0].
Combination AmbientChain::apply_range(Combination cur, std::size_t upto) const {
  for (std::size_t idx = upto; idx-- > 0;) {
    const ChainFactor& f = factors_[idx];
    Combination next;
    for (const auto& [flat, value] : cur) {
      if (!f.permutation.empty()) {
        next[permute(f, flat)] += value;
        continue;
      }
      std::uint64_t sub = 0;
      const std::uint64_t base = step(f, flat, sub);
      for (const auto& t : f.op->column(sub)) {
        std::uint64_t out = base;
        std::uint64_t rest = t.out;
        for (std::size_t k = f.slots.size(); k-- > 0;) {
          const std::size_t s = f.slots[k];
          out += (rest % dims_[s]) * strides_[s];
          rest /= dims_[s];
        }
        next[out] += value * t.value;
      }
    }
    std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
    cur = std::move(next);
    if (cur.empty()) break;
  }
  return cur;
}

Combination AmbientChain::apply(const Combination& state) const { return apply_range(state, factors_.size()); }

Combination AmbientChain::apply(std::uint64_t basis_state) const {
  if (basis_state >= space_) throw UsageError("apply: basis state out of range");
  // Leading permutations act on the basis state directly; then a cheap
  // rejection when the first operator annihilates it.
  std::size_t upto = factors_.size();
  std::uint64_t st = basis_state;
  while (upto > 0 && !factors_[upto - 1].permutation.empty()) st = permute(factors_[--upto], st);
  if (upto > 0) {
    std::uint64_t sub = 0;
    step(factors_[upto - 1], st, sub);
    if (factors_[upto - 1].op->column(sub).empty()) return {};
  }
  return apply_range(Combination{{st, Laurent(1)}}, upto);
}

AmbientChain AmbientChain::specialized_at_one() const {
  std::vector<ChainFactor> fs = factors_;
  for (auto& f : fs)
    if (f.op) f.op = std::make_shared<const SparseOperator>(f.op->specialize_at_one());
  return AmbientChain(dims_, std::move(fs));
}

namespace {

void tally(const Combination& c, std::map<std::string, std::uint64_t>& hist, std::uint64_t* nnz) {
  for (const auto& [k, v] : c) {
    ++hist[v.str()];
    if (nnz) ++*nnz;
  }
}

}  // namespace

EquationReport check_equation(const AmbientChain& lhs, const AmbientChain& rhs, unsigned threads) {
  if (lhs.slot_dims() != rhs.slot_dims()) throw UsageError("check_equation: ambient slot sets differ");
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t total = lhs.space_dimension();
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(1, total)));

  std::vector<EquationReport> parts(threads);
  auto worker = [&](unsigned t) {
    EquationReport& r = parts[t];
    const std::uint64_t lo = total * t / threads;
    const std::uint64_t hi = total * (t + 1) / threads;
    for (std::uint64_t in = lo; in < hi; ++in) {
      Combination a = lhs.apply(in);
      Combination b = rhs.apply(in);
      tally(a, r.histogram, &r.nonzero_entries);
      if (a != b) {
        ++r.mismatched_inputs;
        r.holds = false;
        tally(b, r.rhs_histogram, nullptr);
        if (!r.witness) r.witness = EquationWitness{lhs.unflatten(in), std::move(a), std::move(b)};
      } else if (!r.holds) {
        tally(b, r.rhs_histogram, nullptr);
      }
    }
    r.inputs_checked = hi - lo;
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }

  EquationReport out;
  for (auto& p : parts) {
    out.holds = out.holds && p.holds;
    out.inputs_checked += p.inputs_checked;
    out.mismatched_inputs += p.mismatched_inputs;
    out.nonzero_entries += p.nonzero_entries;
    for (const auto& [k, v] : p.histogram) out.histogram[k] += v;
    if (!out.witness && p.witness) out.witness = std::move(p.witness);  // parts are in input order
  }
  if (!out.holds) {
    // The per-part rhs tallies only start at the first mismatch; recount fully.
    out.rhs_histogram.clear();
    for (std::uint64_t in = 0; in < total; ++in) tally(rhs.apply(in), out.rhs_histogram, nullptr);
  }
  out.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace tetralab
