#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace tetralab {

inline constexpr int kMaxDimension = 8;

enum class Orientation { Incoming, Outgoing };

std::string_view to_string(Orientation o);

/// The alternating sequence tau = (0,1,0,1,...) indexed by rank r >= 1.
constexpr int tau(int rank) { return rank % 2 == 1 ? 0 : 1; }

/// A face of the N-cube written as a word over {0,1,*}.
///
/// Positions are 0-based in the API; the text form is the usual one with
/// position 0 leftmost, e.g. "0***".  Ranks are 1-based and count free
/// positions from the left.
class FaceWord {
 public:
  FaceWord() = default;
  FaceWord(int size, std::uint16_t free_mask, std::uint16_t values);

  static FaceWord parse(std::string_view text);
  static FaceWord full(int size);  // "**...*"

  int size() const { return size_; }
  int dimension() const;
  bool is_free(int pos) const { return (free_mask_ >> pos) & 1u; }
  int value(int pos) const { return (values_ >> pos) & 1u; }
  char at(int pos) const;

  std::uint16_t free_mask() const { return free_mask_; }
  std::uint16_t values() const { return values_; }

  std::vector<int> free_positions() const;
  std::vector<int> fixed_positions() const;

  /// 1-based rank of a free position among the free positions.
  int rank_of(int pos) const;
  /// Free position with the given 1-based rank.
  int position_of_rank(int rank) const;

  FaceWord fix(int pos, int value) const;
  FaceWord release(int pos) const;

  /// True when `other` is a subface (every point of other lies in this face).
  bool contains(const FaceWord& other) const;

  /// Vertices as bit patterns (bit p = coordinate p).
  std::vector<std::uint16_t> vertices() const;

  std::string str() const;

  /// Lexicographic order of the text form with '0' < '1' < '*'.
  std::strong_ordering operator<=>(const FaceWord& other) const;
  bool operator==(const FaceWord& other) const = default;

  /// Dense key, unique per (size, word).
  std::uint32_t key() const {
    return (std::uint32_t(size_) << 24) | (std::uint32_t(free_mask_) << 8) |
           (std::uint32_t(values_) & ~std::uint32_t(free_mask_) & 0xffu);
  }

 private:
  int size_ = 0;
  std::uint16_t free_mask_ = 0;
  std::uint16_t values_ = 0;  // zero on free positions
};

std::string vertex_string(std::uint16_t vertex, int size);
std::uint16_t parse_vertex(std::string_view text);

}  // namespace tetralab

template <>
struct std::hash<tetralab::FaceWord> {
  std::size_t operator()(const tetralab::FaceWord& f) const noexcept {
    return std::hash<std::uint32_t>{}(f.key());
  }
};
