#include "toydj/transforms.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace toydj {

namespace {

constexpr std::size_t kMaxTableArity = 24;

void check_system(const ToyRegister& reg, std::size_t i) {
  if (i >= reg.system_count())
    throw std::out_of_range("gate index out of range");
}

}  // namespace

struct BasisPermutation::Impl {
  std::size_t arity = 0;
  bool identity = false;
  std::vector<std::uint32_t> fwd_table;
  std::vector<std::uint32_t> inv_table;
  BitFn fwd_fn;
  BitFn inv_fn;
};

BasisPermutation::BasisPermutation(std::shared_ptr<const Impl> impl, bool flipped)
    : impl_(std::move(impl)), flipped_(flipped) {}

BasisPermutation BasisPermutation::from_table(std::vector<std::uint32_t> forward) {
  const std::size_t size = forward.size();
  if (size == 0 || (size & (size - 1)) != 0)
    throw std::invalid_argument("BasisPermutation: table length must be a power of two");
  const std::size_t arity = std::bit_width(size) - 1;
  if (arity == 0 || arity > kMaxTableArity)
    throw std::invalid_argument("BasisPermutation: table arity out of range");

  auto impl = std::make_shared<Impl>();
  impl->arity = arity;
  impl->inv_table.assign(size, 0);
  std::vector<bool> seen(size, false);
  bool ident = true;
  for (std::size_t x = 0; x < size; ++x) {
    const std::uint32_t y = forward[x];
    if (y >= size || seen[y])
      throw std::invalid_argument("BasisPermutation: table is not a bijection");
    seen[y] = true;
    impl->inv_table[y] = static_cast<std::uint32_t>(x);
    ident = ident && (y == x);
  }
  impl->identity = ident;
  impl->fwd_table = std::move(forward);
  return BasisPermutation(std::move(impl), false);
}

BasisPermutation BasisPermutation::from_callables(std::size_t arity, BitFn forward,
                                                  BitFn inverse) {
  if (arity == 0)
    throw std::invalid_argument("BasisPermutation: arity must be positive");
  if (!forward || !inverse)
    throw std::invalid_argument("BasisPermutation: null callable");
  auto impl = std::make_shared<Impl>();
  impl->arity = arity;
  impl->fwd_fn = std::move(forward);
  impl->inv_fn = std::move(inverse);

  // Round-trip spot checks on a fixed pseudo-random sample.
  RandomSource probe(0x70bddceull);
  for (int trial = 0; trial < 3; ++trial) {
    BitVector x(arity);
    for (std::size_t w = 0; w * 64 < arity; ++w) {
      const std::size_t remaining = arity - w * 64;
      std::uint64_t v = probe.next_u64();
      if (remaining < 64) v &= (std::uint64_t{1} << remaining) - 1;
      x.set_word(w, v);
    }
    BitVector y = x;
    impl->fwd_fn(y);
    if (y.size() != arity)
      throw std::invalid_argument("BasisPermutation: callable changed the width");
    impl->inv_fn(y);
    if (!(y == x))
      throw std::invalid_argument("BasisPermutation: callables fail round trip");
  }
  return BasisPermutation(std::move(impl), false);
}

BasisPermutation BasisPermutation::identity(std::size_t arity) {
  if (arity == 0)
    throw std::invalid_argument("BasisPermutation: arity must be positive");
  auto impl = std::make_shared<Impl>();
  impl->arity = arity;
  impl->identity = true;
  return BasisPermutation(std::move(impl), false);
}

std::size_t BasisPermutation::arity() const { return impl_->arity; }

bool BasisPermutation::is_table() const { return !impl_->fwd_table.empty(); }

bool BasisPermutation::is_identity() const { return impl_->identity; }

void BasisPermutation::forward(BitVector& x) const {
  if (x.size() != impl_->arity)
    throw std::invalid_argument("BasisPermutation: width mismatch");
  if (impl_->identity) return;
  if (is_table()) {
    const auto& table = flipped_ ? impl_->inv_table : impl_->fwd_table;
    x = BitVector::from_u64(table[x.to_u64()], impl_->arity);
    return;
  }
  (flipped_ ? impl_->inv_fn : impl_->fwd_fn)(x);
}

void BasisPermutation::inverse(BitVector& x) const { inverted().forward(x); }

std::uint64_t BasisPermutation::forward_value(std::uint64_t x) const {
  BitVector v = BitVector::from_u64(x, impl_->arity);
  forward(v);
  return v.to_u64();
}

std::uint64_t BasisPermutation::inverse_value(std::uint64_t x) const {
  BitVector v = BitVector::from_u64(x, impl_->arity);
  inverse(v);
  return v.to_u64();
}

BasisPermutation BasisPermutation::inverted() const {
  return BasisPermutation(impl_, !flipped_);
}

const std::vector<std::uint32_t>& BasisPermutation::table() const {
  if (!is_table())
    throw std::logic_error("BasisPermutation: no explicit table");
  return flipped_ ? impl_->inv_table : impl_->fwd_table;
}

void apply_x(ToyRegister& reg, std::size_t i) {
  check_system(reg, i);
  reg.flip_b(i);
}

void apply_z(ToyRegister& reg, std::size_t i) {
  check_system(reg, i);
  reg.flip_p(i);
}

void apply_h(ToyRegister& reg, std::size_t i) {
  check_system(reg, i);
  reg.swap_bp(i);
}

void apply_cnot(ToyRegister& reg, std::size_t control, std::size_t target) {
  check_system(reg, control);
  check_system(reg, target);
  if (control == target)
    throw std::invalid_argument("apply_cnot: control equals target");
  const bool x_fires = reg.b(control);
  const bool z_fires = reg.p(target);
  if (x_fires) reg.flip_b(target);
  if (z_fires) reg.flip_p(control);
}

void apply_basis_perm(ToyRegister& reg, const BasisPermutation& perm,
                      std::span<const std::size_t> indices) {
  if (indices.size() != perm.arity())
    throw std::invalid_argument("apply_basis_perm: index count != arity");
  for (std::size_t i : indices) check_system(reg, i);
  if (indices.size() > 1) {
    BitVector seen(reg.system_count());
    for (std::size_t i : indices) {
      if (seen.get(i))
        throw std::invalid_argument("apply_basis_perm: duplicate index");
      seen.set(i, true);
    }
  }
  if (perm.is_identity()) return;

  BitVector x(indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i) x.set(i, reg.b(indices[i]));
  perm.forward(x);
  for (std::size_t i = 0; i < indices.size(); ++i) reg.set_b(indices[i], x.get(i));
}

const BasisPermutation& toffoli_permutation() {
  static const BasisPermutation perm =
      BasisPermutation::from_table({0, 1, 2, 7, 4, 5, 6, 3});
  return perm;
}

void apply_toffoli(ToyRegister& reg, std::size_t c1, std::size_t c2,
                   std::size_t t) {
  const std::size_t indices[3] = {c1, c2, t};
  apply_basis_perm(reg, toffoli_permutation(), indices);
}

void apply_gate(ToyRegister& reg, const GateOp& op) {
  std::visit(
      [&reg](const auto& gate) {
        using T = std::decay_t<decltype(gate)>;
        if constexpr (std::is_same_v<T, XGate>) {
          apply_x(reg, gate.index);
        } else if constexpr (std::is_same_v<T, ZGate>) {
          apply_z(reg, gate.index);
        } else if constexpr (std::is_same_v<T, HGate>) {
          apply_h(reg, gate.index);
        } else if constexpr (std::is_same_v<T, CnotGate>) {
          apply_cnot(reg, gate.control, gate.target);
        } else {
          apply_basis_perm(reg, gate.perm, gate.indices);
        }
      },
      op);
}

ToyRegister applied(ToyRegister reg, const GateOp& op) {
  apply_gate(reg, op);
  return reg;
}

}  // namespace toydj
