#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <variant>
#include <vector>

#include "toydj/ontic.hpp"

namespace toydj {

/// A bijection over the computational basis states {0, ..., 2^m - 1}.
/// Backed either by an explicit table (validated eagerly, m <= 24) or
/// by a forward/inverse callable pair operating in place on an m-bit
/// value (spot-checked at construction). Immutable and cheap to copy.
class BasisPermutation {
 public:
  using BitFn = std::function<void(BitVector&)>;

  static BasisPermutation from_table(std::vector<std::uint32_t> forward);
  static BasisPermutation from_callables(std::size_t arity, BitFn forward,
                                         BitFn inverse);
  static BasisPermutation identity(std::size_t arity);

  std::size_t arity() const;
  bool is_table() const;
  bool is_identity() const;

  void forward(BitVector& x) const;
  void inverse(BitVector& x) const;

  /// Integer forms, usable when arity <= 64.
  std::uint64_t forward_value(std::uint64_t x) const;
  std::uint64_t inverse_value(std::uint64_t x) const;

  /// Same bijection with forward and inverse exchanged; shares storage.
  BasisPermutation inverted() const;

  const std::vector<std::uint32_t>& table() const;

 private:
  struct Impl;
  explicit BasisPermutation(std::shared_ptr<const Impl> impl, bool flipped);

  std::shared_ptr<const Impl> impl_;
  bool flipped_ = false;
};

/// Pauli-X: ontic permutation (1 3)(2 4); flips the computational bit.
void apply_x(ToyRegister& reg, std::size_t i);

/// Pauli-Z: ontic permutation (1 2)(3 4); flips the phase bit.
void apply_z(ToyRegister& reg, std::size_t i);

/// Hadamard: ontic permutation (2 3); swaps the computational and phase bits.
void apply_h(ToyRegister& reg, std::size_t i);

/// CNOT: X on the target iff the control label is 3 or 4, and Z on
/// the control iff the target label is 2 or 4, both decided on the
/// pre-update state.
void apply_cnot(ToyRegister& reg, std::size_t control, std::size_t target);

/// Relocates computational-basis epistemic blocks: gathers the b-bits
/// at the listed indices into x (bit i of x from indices[i]), replaces
/// them with the bits of perm.forward(x). Phase bits are untouched.
void apply_basis_perm(ToyRegister& reg, const BasisPermutation& perm,
                      std::span<const std::size_t> indices);

/// The 3-system permutation that flips bit t of x iff bits c1 and c2
/// are both set (the |110> <-> |111> block swap when t is taken least
/// significant).
const BasisPermutation& toffoli_permutation();

void apply_toffoli(ToyRegister& reg, std::size_t c1, std::size_t c2,
                   std::size_t t);

struct XGate {
  std::size_t index;
};
struct ZGate {
  std::size_t index;
};
struct HGate {
  std::size_t index;
};
struct CnotGate {
  std::size_t control;
  std::size_t target;
};
struct BasisPermGate {
  BasisPermutation perm;
  std::vector<std::size_t> indices;
};

using GateOp = std::variant<XGate, ZGate, HGate, CnotGate, BasisPermGate>;

void apply_gate(ToyRegister& reg, const GateOp& op);

/// Pure wrapper over apply_gate.
ToyRegister applied(ToyRegister reg, const GateOp& op);

}  // namespace toydj
