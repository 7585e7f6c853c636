#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tetralab/hypercube.hpp"
#include "tetralab/sparse_operator.hpp"

namespace tetralab {

/// Ordered finite color set.  The order fixes the basis order downstream.
class ColorSet {
 public:
  ColorSet() = default;
  explicit ColorSet(std::vector<std::string> names);

  /// {+, -} with + first.
  static ColorSet ising();
  /// base^k with names concatenated, first component most significant.
  static ColorSet tuples(const ColorSet& base, int k);

  std::uint32_t size() const { return static_cast<std::uint32_t>(names_.size()); }
  const std::string& name(std::uint32_t c) const { return names_.at(c); }
  std::uint32_t index_of(const std::string& name) const;
  bool operator==(const ColorSet& other) const = default;

 private:
  std::vector<std::string> names_;
};

using ColorTuple = std::vector<std::uint32_t>;

/// Finite relation between input and output tuples of a fixed arity.
class Correspondence {
 public:
  Correspondence() = default;
  Correspondence(ColorSet colors, int arity);

  const ColorSet& colors() const { return colors_; }
  int arity() const { return arity_; }
  std::uint64_t tuple_count() const { return tuple_count_; }

  void add(const ColorTuple& in, const ColorTuple& out);
  void add_flat(std::uint64_t in, std::uint64_t out);
  bool contains(const ColorTuple& in, const ColorTuple& out) const;

  /// Outputs of a flat input, sorted; empty when the input is outside the domain.
  const std::vector<std::uint64_t>& outputs(std::uint64_t in) const;
  const std::map<std::uint64_t, std::vector<std::uint64_t>>& relation() const { return rel_; }

  std::size_t size() const { return size_; }
  std::size_t domain_size() const { return rel_.size(); }
  /// fiber size -> number of inputs with that many outputs
  std::map<std::size_t, std::size_t> fiber_histogram() const;
  bool is_partial_map() const;

  std::uint64_t flatten(const ColorTuple& t) const;
  ColorTuple unflatten(std::uint64_t flat) const;
  std::string render(const ColorTuple& t) const;

  bool operator==(const Correspondence& other) const {
    return colors_ == other.colors_ && arity_ == other.arity_ && rel_ == other.rel_;
  }

 private:
  ColorSet colors_;
  int arity_ = 0;
  std::uint64_t tuple_count_ = 1;
  std::size_t size_ = 0;
  std::map<std::uint64_t, std::vector<std::uint64_t>> rel_;
};

/// Correspondence legs -> ambient slots (0-based, distinct).
struct SlotBinding {
  const Correspondence* relation = nullptr;
  std::vector<std::size_t> slots;
  std::string label;
};

/// Relational chain over ambient slots that all carry the same color set.
/// Written left to right, applied right to left.
class RelationChain {
 public:
  RelationChain(std::size_t slot_count, std::uint32_t colors, std::vector<SlotBinding> written);

  std::size_t slot_count() const { return slots_; }
  std::uint64_t space_dimension() const { return space_; }
  const std::vector<SlotBinding>& bindings() const { return chain_; }
  std::string label() const;

  /// Sorted ambient outputs reachable from `in`.
  std::vector<std::uint64_t> apply(std::uint64_t in) const;
  ColorTuple unflatten(std::uint64_t flat) const;

 private:
  std::size_t slots_;
  std::uint32_t q_;
  std::uint64_t space_ = 1;
  std::vector<std::uint64_t> strides_;
  std::vector<SlotBinding> chain_;
};

/// Full relation of a chain on the ambient tuple space.
Correspondence compose(const RelationChain& chain, const ColorSet& colors);

struct RelationWitness {
  ColorTuple input;
  std::vector<ColorTuple> lhs;
  std::vector<ColorTuple> rhs;
};

struct SimplexReport {
  int n = 0;
  bool holds = true;
  std::uint64_t inputs_checked = 0;
  std::uint64_t pairs = 0;  // size of the common relation when it holds
  std::uint64_t mismatched_inputs = 0;
  std::string lhs_label;
  std::string rhs_label;
  std::optional<RelationWitness> witness;
  double runtime_ms = 0;
};

/// Slot of an (n-1)-face of I^(n+1): index of its free-direction set in colex
/// order, e.g. for n = 3: {1,2} {1,3} {2,3} {1,4} {2,4} {3,4}.
std::size_t simplex_slot(const FaceWord& face);

/// Left and right chains of the n-simplex equation as bindings of `r`.
/// Facet legs follow `order`; every operator's i-th incoming and i-th
/// outgoing facet share a slot.
std::pair<std::vector<SlotBinding>, std::vector<SlotBinding>> simplex_chains(const Correspondence& r, int n,
                                                                              FacetOrder order);

SimplexReport check_n_simplex(const Correspondence& r, int n, FacetOrder order = FacetOrder::AscendingRank);

Correspondence ising_R();
Correspondence identity_correspondence(const ColorSet& colors, int arity);
/// Reverses the tuple: (a, b, ...) -> (..., b, a).
Correspondence swap_correspondence(const ColorSet& colors, int arity);
/// (a, b) -> (a, a xor b) on two colors; not a Yang-Baxter solution.
Correspondence shear_correspondence();

SparseOperator associated_matrix(const Correspondence& c);

struct PolyYbeReport {
  bool holds = false;            // R12 R13 R23 == R23 R13 R12
  bool matches_expansion = false;
  bool identity_at_zero = false;
  bool entries_in_1_2_at_one = false;
  std::map<std::string, std::uint64_t> histogram;  // entries of the product
  double runtime_ms = 0;
};

/// R(t) = 1 + t sigma (x) sigma with sigma the spin flip.
SparseOperator r_poly();
PolyYbeReport check_R_poly_ybe();

}  // namespace tetralab
