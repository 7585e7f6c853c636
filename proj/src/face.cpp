#include "tetralab/face.hpp"

#include <bit>

#include "tetralab/error.hpp"

namespace tetralab {

std::string_view to_string(Orientation o) {
  return o == Orientation::Incoming ? "in" : "out";
}

FaceWord::FaceWord(int size, std::uint16_t free_mask, std::uint16_t values)
    : size_(size), free_mask_(free_mask), values_(values & ~free_mask) {
  if (size < 0 || size > kMaxDimension) {
    throw UsageError("face size out of range: " + std::to_string(size));
  }
  const std::uint16_t all = static_cast<std::uint16_t>((1u << size) - 1u);
  if ((free_mask & ~all) != 0 || (values & ~all) != 0) {
    throw UsageError("face bits exceed word length");
  }
}

FaceWord FaceWord::parse(std::string_view text) {
  if (text.size() > static_cast<std::size_t>(kMaxDimension)) {
    throw UsageError("face word too long: " + std::string(text));
  }
  std::uint16_t free_mask = 0;
  std::uint16_t values = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case '0': break;
      case '1': values |= std::uint16_t(1u << i); break;
      case '*': free_mask |= std::uint16_t(1u << i); break;
      default: throw UsageError("bad face word: " + std::string(text));
    }
  }
  return FaceWord(static_cast<int>(text.size()), free_mask, values);
}

FaceWord FaceWord::full(int size) {
  return FaceWord(size, static_cast<std::uint16_t>((1u << size) - 1u), 0);
}

int FaceWord::dimension() const { return std::popcount(free_mask_); }

char FaceWord::at(int pos) const {
  if (is_free(pos)) return '*';
  return value(pos) ? '1' : '0';
}

std::vector<int> FaceWord::free_positions() const {
  std::vector<int> out;
  for (int p = 0; p < size_; ++p)
    if (is_free(p)) out.push_back(p);
  return out;
}

std::vector<int> FaceWord::fixed_positions() const {
  std::vector<int> out;
  for (int p = 0; p < size_; ++p)
    if (!is_free(p)) out.push_back(p);
  return out;
}

int FaceWord::rank_of(int pos) const {
  if (!is_free(pos)) throw UsageError("rank_of: position is not free in " + str());
  const std::uint16_t below = static_cast<std::uint16_t>(free_mask_ & ((1u << pos) - 1u));
  return std::popcount(below) + 1;
}

int FaceWord::position_of_rank(int rank) const {
  int r = 0;
  for (int p = 0; p < size_; ++p) {
    if (is_free(p) && ++r == rank) return p;
  }
  throw UsageError("rank " + std::to_string(rank) + " out of range for " + str());
}

FaceWord FaceWord::fix(int pos, int value) const {
  if (!is_free(pos)) throw UsageError("fix: position already fixed in " + str());
  const std::uint16_t bit = static_cast<std::uint16_t>(1u << pos);
  return FaceWord(size_, free_mask_ & ~bit, value ? (values_ | bit) : values_);
}

FaceWord FaceWord::release(int pos) const {
  if (is_free(pos)) throw UsageError("release: position already free in " + str());
  const std::uint16_t bit = static_cast<std::uint16_t>(1u << pos);
  return FaceWord(size_, free_mask_ | bit, values_ & ~bit);
}

bool FaceWord::contains(const FaceWord& other) const {
  if (other.size_ != size_) return false;
  // other's free positions must be free here; fixed positions here must agree.
  if ((other.free_mask_ & ~free_mask_) != 0) return false;
  const std::uint16_t fixed_here = static_cast<std::uint16_t>(~free_mask_);
  return ((other.values_ ^ values_) & fixed_here & ((1u << size_) - 1u)) == 0;
}

std::vector<std::uint16_t> FaceWord::vertices() const {
  std::vector<std::uint16_t> out;
  // Enumerate submasks of the free mask.
  std::uint16_t sub = 0;
  do {
    out.push_back(static_cast<std::uint16_t>(values_ | sub));
    sub = static_cast<std::uint16_t>((sub - free_mask_) & free_mask_);
  } while (sub != 0);
  return out;
}

std::string FaceWord::str() const {
  std::string s(static_cast<std::size_t>(size_), '0');
  for (int p = 0; p < size_; ++p) s[static_cast<std::size_t>(p)] = at(p);
  return s;
}

std::strong_ordering FaceWord::operator<=>(const FaceWord& other) const {
  auto sym = [](const FaceWord& f, int p) { return f.is_free(p) ? 2 : f.value(p); };
  const int n = std::min(size_, other.size_);
  for (int p = 0; p < n; ++p) {
    const int a = sym(*this, p);
    const int b = sym(other, p);
    if (a != b) return a <=> b;
  }
  return size_ <=> other.size_;
}

std::string vertex_string(std::uint16_t vertex, int size) {
  std::string s(static_cast<std::size_t>(size), '0');
  for (int p = 0; p < size; ++p)
    if ((vertex >> p) & 1u) s[static_cast<std::size_t>(p)] = '1';
  return s;
}

std::uint16_t parse_vertex(std::string_view text) {
  const FaceWord f = FaceWord::parse(text);
  if (f.dimension() != 0) throw UsageError("not a vertex: " + std::string(text));
  return f.values();
}

}  // namespace tetralab
