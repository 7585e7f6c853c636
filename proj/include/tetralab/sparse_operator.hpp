#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tetralab/laurent.hpp"

namespace tetralab {

struct OperatorTerm {
  std::uint64_t out = 0;
  Laurent value;
};

/// Sparse linear map on a tensor product of leg spaces with exact scalars.
///
/// Basis states of the product are flattened mixed-radix with leg 0 most
/// significant.  An entry (in, out) means e_in is sent to value * e_out.
class SparseOperator {
 public:
  static constexpr std::uint64_t kMaxSpace = 1ull << 24;

  explicit SparseOperator(std::vector<std::uint32_t> leg_dims);

  static SparseOperator identity(std::vector<std::uint32_t> leg_dims);
  /// One leg; e_i -> e_{perm[i]}.
  static SparseOperator permutation(std::span<const std::uint32_t> perm);

  const std::vector<std::uint32_t>& leg_dims() const { return dims_; }
  std::size_t legs() const { return dims_.size(); }
  std::uint64_t space_dimension() const { return space_; }

  void add(std::uint64_t in, std::uint64_t out, const Laurent& value);
  void add(std::span<const std::uint32_t> in, std::span<const std::uint32_t> out, const Laurent& value);

  const std::vector<OperatorTerm>& column(std::uint64_t in) const { return columns_[in]; }
  Laurent entry(std::uint64_t in, std::uint64_t out) const;
  std::size_t nnz() const;

  std::uint64_t flatten(std::span<const std::uint32_t> index) const;
  std::vector<std::uint32_t> unflatten(std::uint64_t flat) const;

  SparseOperator specialize_at_one() const;
  /// Q W Q^-1 where Q applies the single-leg permutation `perm` on every leg.
  SparseOperator conjugated(std::span<const std::uint32_t> perm) const;

  /// a * b: b acts first.
  friend SparseOperator operator*(const SparseOperator& a, const SparseOperator& b);
  bool operator==(const SparseOperator& other) const;

 private:
  std::vector<std::uint32_t> dims_;
  std::uint64_t space_ = 1;
  std::vector<std::vector<OperatorTerm>> columns_;
};

/// Formal combination of ambient basis states.
using Combination = std::map<std::uint64_t, Laurent>;

/// One factor of a chain: either an operator bound to ambient slots or a
/// slot permutation (content of slot s moves to slot target[s]).
struct ChainFactor {
  std::shared_ptr<const SparseOperator> op;
  std::vector<std::size_t> slots;
  std::vector<std::size_t> permutation;  // non-empty for a permutation factor
  std::string label;
};

ChainFactor bind(std::shared_ptr<const SparseOperator> op, std::vector<std::size_t> slots, std::string label = {});
ChainFactor slot_permutation(std::vector<std::size_t> target, std::string label = {});

/// Product of factors over a common slot set, written left to right and
/// applied right to left.
class AmbientChain {
 public:
  AmbientChain(std::vector<std::uint32_t> slot_dims, std::vector<ChainFactor> written);

  const std::vector<std::uint32_t>& slot_dims() const { return dims_; }
  const std::vector<ChainFactor>& factors() const { return factors_; }
  std::uint64_t space_dimension() const { return space_; }
  std::string label() const;

  std::uint64_t flatten(std::span<const std::uint32_t> state) const;
  std::vector<std::uint32_t> unflatten(std::uint64_t flat) const;

  Combination apply(std::uint64_t basis_state) const;
  Combination apply(const Combination& state) const;

  AmbientChain specialized_at_one() const;

 private:
  std::uint32_t digit(std::uint64_t flat, std::size_t slot) const {
    return static_cast<std::uint32_t>((flat / strides_[slot]) % dims_[slot]);
  }
  std::uint64_t step(const ChainFactor& f, std::uint64_t flat, std::uint64_t& sub) const;
  std::uint64_t permute(const ChainFactor& f, std::uint64_t flat) const;
  Combination apply_range(Combination cur, std::size_t upto) const;

  std::vector<std::uint32_t> dims_;
  std::vector<std::uint64_t> strides_;
  std::uint64_t space_ = 1;
  std::vector<ChainFactor> factors_;
};

struct EquationWitness {
  std::vector<std::uint32_t> input;
  Combination lhs;
  Combination rhs;
};

struct EquationReport {
  bool holds = true;
  std::uint64_t inputs_checked = 0;
  std::uint64_t mismatched_inputs = 0;
  std::uint64_t nonzero_entries = 0;                  // of the left side
  std::map<std::string, std::uint64_t> histogram;      // left-side entry value -> count
  std::map<std::string, std::uint64_t> rhs_histogram;  // filled only on failure
  std::optional<EquationWitness> witness;              // smallest failing input
  double runtime_ms = 0;
};

/// Compares both chains on every ambient basis input.
EquationReport check_equation(const AmbientChain& lhs, const AmbientChain& rhs, unsigned threads = 0);

}  // namespace tetralab
