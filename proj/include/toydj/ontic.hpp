#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "toydj/bitvec.hpp"

namespace toydj {

/// One ontic state of an elementary toy system, stored as two bits:
/// the computational bit b and the phase bit p. The ontic label is
/// L = 2b + p + 1, so labels 1..4 are (b,p) = (0,0),(0,1),(1,0),(1,1).
struct ToyBit {
  bool b = false;
  bool p = false;

  int label() const { return 2 * int(b) + int(p) + 1; }

  static ToyBit from_label(int label) {
    if (label < 1 || label > 4)
      throw std::invalid_argument("ToyBit: label must be in 1..4");
    return ToyBit{(label - 1) / 2 != 0, (label - 1) % 2 != 0};
  }

  bool operator==(const ToyBit&) const = default;
};

/// The six epistemic states of an elementary system: the two-element
/// subsets of {1,2,3,4} that form the three even partitions.
/// Z0 = 1v2, Z1 = 3v4, X0 = 1v3, X1 = 2v4, Y0 = 1v4, Y1 = 2v3.
enum class EpistemicPair : std::uint8_t { Z0, Z1, X0, X1, Y0, Y1 };

/// The two ontic labels of a pair, ascending.
constexpr std::pair<int, int> pair_labels(EpistemicPair pair) {
  switch (pair) {
    case EpistemicPair::Z0: return {1, 2};
    case EpistemicPair::Z1: return {3, 4};
    case EpistemicPair::X0: return {1, 3};
    case EpistemicPair::X1: return {2, 4};
    case EpistemicPair::Y0: return {1, 4};
    case EpistemicPair::Y1: return {2, 3};
  }
  return {0, 0};
}

constexpr bool pair_contains(EpistemicPair pair, int label) {
  auto [a, b] = pair_labels(pair);
  return label == a || label == b;
}

const char* pair_name(EpistemicPair pair);

/// The three even partitions of the ontic space, i.e. the measurable bases.
enum class MeasurementBasis : std::uint8_t { Computational, PhaseBasis, YBasis };

/// Deterministic seeded PRNG. Identical seeds give identical sequences;
/// independent streams are derived by reseeding (split).
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed)
      : seed_(seed), engine_(seed), bit_buffer_(0), bits_left_(0) {}

  std::uint64_t seed() const { return seed_; }

  bool next_bit() {
    if (bits_left_ == 0) {
      bit_buffer_ = engine_();
      bits_left_ = 64;
    }
    const bool bit = bit_buffer_ & 1u;
    bit_buffer_ >>= 1;
    --bits_left_;
    return bit;
  }

  std::uint64_t next_u64() {
    bits_left_ = 0;  // keep bit and word draws from interleaving mid-word
    return engine_();
  }

  /// Uniform value in [0, bound) by masked rejection; bound = 0 means
  /// the full 64-bit range.
  std::uint64_t next_below(std::uint64_t bound) {
    if (bound == 0) return next_u64();
    if ((bound & (bound - 1)) == 0) return next_u64() & (bound - 1);
    const int width = std::bit_width(bound);
    const std::uint64_t mask =
        width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
    for (;;) {
      const std::uint64_t v = next_u64() & mask;
      if (v < bound) return v;
    }
  }

  /// Independent stream derived from this source's seed.
  RandomSource split(std::uint64_t stream) const {
    std::uint64_t z = seed_ ^ (stream + 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return RandomSource(z ^ (z >> 31));
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  std::uint64_t bit_buffer_;
  int bits_left_;
};

/// Ordered sequence of toy bits: n input systems (index n-1 most
/// significant) plus one target system at index n. State is held in
/// two packed bit planes, 2(n+1) logical bits in total.
class ToyRegister {
 public:
  explicit ToyRegister(std::size_t n_inputs)
      : n_inputs_(n_inputs), b_(n_inputs + 1), p_(n_inputs + 1) {
    if (n_inputs == 0)
      throw std::invalid_argument("ToyRegister: need at least one input system");
  }

  std::size_t input_count() const { return n_inputs_; }
  std::size_t system_count() const { return n_inputs_ + 1; }
  std::size_t target_index() const { return n_inputs_; }
  std::size_t msb_input_index() const { return n_inputs_ - 1; }

  bool b(std::size_t i) const { return b_.get(i); }
  bool p(std::size_t i) const { return p_.get(i); }
  void set_b(std::size_t i, bool v) { b_.set(i, v); }
  void set_p(std::size_t i, bool v) { p_.set(i, v); }
  void flip_b(std::size_t i) { b_.flip(i); }
  void flip_p(std::size_t i) { p_.flip(i); }
  void swap_bp(std::size_t i) {
    const bool t = b_.get(i);
    b_.set(i, p_.get(i));
    p_.set(i, t);
  }

  ToyBit bit(std::size_t i) const { return ToyBit{b(i), p(i)}; }
  void set_bit(std::size_t i, ToyBit v) {
    set_b(i, v.b);
    set_p(i, v.p);
  }
  int label(std::size_t i) const { return bit(i).label(); }
  void set_label(std::size_t i, int label) { set_bit(i, ToyBit::from_label(label)); }

  /// Computational bits of the input register (the integer x, bit i
  /// of x at system i).
  BitVector input_b_bits() const {
    BitVector x(n_inputs_);
    const auto words = b_.words();
    for (std::size_t w = 0; w * 64 < n_inputs_; ++w) {
      std::uint64_t v = words[w];
      const std::size_t remaining = n_inputs_ - w * 64;
      if (remaining < 64) v &= (std::uint64_t{1} << remaining) - 1;
      x.set_word(w, v);
    }
    return x;
  }

  /// Replace the input register's b-bits; the target bit is untouched.
  void set_input_b_bits(const BitVector& x) {
    if (x.size() != n_inputs_)
      throw std::invalid_argument("ToyRegister: input width mismatch");
    for (std::size_t w = 0; w * 64 < n_inputs_; ++w) {
      const std::size_t remaining = n_inputs_ - w * 64;
      if (remaining >= 64) {
        b_.set_word(w, x.word(w));
      } else {
        const std::uint64_t low = (std::uint64_t{1} << remaining) - 1;
        b_.set_word(w, (b_.word(w) & ~low) | (x.word(w) & low));
      }
    }
  }

  /// Logical state payload: two bits per system, no padding.
  std::size_t payload_bits() const { return 2 * (n_inputs_ + 1); }

  /// Allocated backing-store bytes: two word-aligned planes.
  std::size_t allocated_state_bytes() const {
    return 2 * 8 * ((n_inputs_ + 1 + 63) / 64);
  }

  bool operator==(const ToyRegister&) const = default;

 private:
  std::size_t n_inputs_;
  BitVector b_;
  BitVector p_;
};

/// Sample a ToyBit uniformly from the two labels of a pair; choice
/// selects the lower (0) or higher (1) label.
ToyBit sample_pair(EpistemicPair pair, bool choice);

/// Prepare a register by sampling each system's pair with rng, one
/// bit per system in index order. The last pair is the target.
ToyRegister prepare(std::span<const EpistemicPair> pairs, RandomSource& rng);

/// Deterministic preparation: choice_bits[i] selects the ontic label
/// within pairs[i] (for Z pairs this is exactly the phase bit).
ToyRegister prepare(std::span<const EpistemicPair> pairs,
                    const BitVector& choice_bits);

/// Non-disturbing readout of the partition cell the system's ontic
/// state lies in: Computational -> b, PhaseBasis -> p, YBasis -> b^p.
int measure(const ToyRegister& reg, std::size_t index, MeasurementBasis basis);

/// Measurement with the knowledge-balance disturbance hook: after the
/// readout the ontic state is re-randomized within the certified pair.
int measure_disturbing(ToyRegister& reg, std::size_t index,
                       MeasurementBasis basis, RandomSource& rng);

/// The epistemic pair a measurement outcome certifies.
EpistemicPair readout_epistemic(int outcome, MeasurementBasis basis);

}  // namespace toydj
