#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace toydj {

/// Packed little-endian bit vector. Bit i of the value lives at
/// words()[i / 64], position i % 64. Unused high bits of the last
/// word are kept at zero so whole-word comparison is valid.
class BitVector {
 public:
  BitVector() = default;

  explicit BitVector(std::size_t nbits)
      : size_(nbits), words_((nbits + 63) / 64, 0) {}

  static BitVector from_u64(std::uint64_t value, std::size_t nbits) {
    BitVector v(nbits);
    if (nbits == 0) return v;
    if (nbits < 64) value &= (std::uint64_t{1} << nbits) - 1;
    if (!v.words_.empty()) v.words_[0] = value;
    return v;
  }

  std::size_t size() const { return size_; }

  bool get(std::size_t i) const {
    check_index(i);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  void set(std::size_t i, bool value) {
    check_index(i);
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }

  void flip(std::size_t i) {
    check_index(i);
    words_[i >> 6] ^= std::uint64_t{1} << (i & 63);
  }

  void swap_bits(std::size_t i, std::size_t j) {
    const bool bi = get(i);
    const bool bj = get(j);
    set(i, bj);
    set(j, bi);
  }

  void clear() {
    for (auto& w : words_) w = 0;
  }

  /// Number of set bits.
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  /// XOR of all bits.
  bool parity() const {
    std::uint64_t acc = 0;
    for (auto w : words_) acc ^= w;
    return std::popcount(acc) & 1u;
  }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }

  bool none() const { return !any(); }

  /// Value as an integer; requires size() <= 64.
  std::uint64_t to_u64() const {
    if (size_ > 64)
      throw std::length_error("BitVector::to_u64: more than 64 bits");
    return words_.empty() ? 0 : words_[0];
  }

  std::span<const std::uint64_t> words() const { return words_; }

  std::uint64_t word(std::size_t w) const { return words_[w]; }

  void set_word(std::size_t w, std::uint64_t value) {
    words_[w] = value;
    if (w + 1 == words_.size()) mask_tail();
  }

  /// Most significant bit first, like a binary numeral.
  std::string to_string_msb_first() const {
    std::string s;
    s.reserve(size_);
    for (std::size_t i = size_; i-- > 0;) s.push_back(get(i) ? '1' : '0');
    return s;
  }

  bool operator==(const BitVector&) const = default;

 private:
  void check_index(std::size_t i) const {
    if (i >= size_) throw std::out_of_range("BitVector: index out of range");
  }

  void mask_tail() {
    const std::size_t rem = size_ & 63;
    if (rem != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << rem) - 1;
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace toydj
