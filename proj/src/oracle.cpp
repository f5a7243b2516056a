#include "toydj/oracle.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

namespace toydj {

namespace {

std::uint64_t swap_bits_u64(std::uint64_t v, unsigned i, unsigned j) {
  const std::uint64_t x = ((v >> i) ^ (v >> j)) & 1u;
  return v ^ ((x << i) | (x << j));
}

bool masked_parity_u64(std::uint64_t v, std::uint64_t mask) {
  return std::popcount(v & mask) & 1u;
}

}  // namespace

const char* to_string(PromiseClass cls) {
  switch (cls) {
    case PromiseClass::ConstantZero: return "ConstantZero";
    case PromiseClass::ConstantOne: return "ConstantOne";
    case PromiseClass::Balanced: return "Balanced";
  }
  return "?";
}

const char* to_string(Verdict verdict) {
  return verdict == Verdict::Constant ? "Constant" : "Balanced";
}

FunctionSpec FunctionSpec::from_table(BitVector table) {
  const std::size_t size = table.size();
  if (size < 2 || (size & (size - 1)) != 0)
    throw std::invalid_argument("FunctionSpec: table length must be 2^n, n >= 1");
  const std::size_t n = std::bit_width(size) - 1;
  if (n > kMaxTableWidth)
    throw std::invalid_argument("FunctionSpec: explicit tables support n <= 24");
  FunctionSpec f;
  f.n_ = n;
  f.table_ = std::move(table);
  return f;
}

FunctionSpec FunctionSpec::from_table_string(std::string_view table) {
  BitVector bits(table.size());
  for (std::size_t x = 0; x < table.size(); ++x) {
    const char c = table[x];
    if (c != '0' && c != '1')
      throw std::invalid_argument("FunctionSpec: table characters must be 0 or 1");
    bits.set(x, c == '1');
  }
  return from_table(std::move(bits));
}

FunctionSpec FunctionSpec::family(Family kind, std::size_t n, std::uint64_t param) {
  if (n == 0) throw std::invalid_argument("FunctionSpec: n must be positive");
  switch (kind) {
    case Family::BitK:
      if (param >= n)
        throw std::invalid_argument("FunctionSpec: BitK needs k < n");
      break;
    case Family::MaskedParity:
      if (param == 0)
        throw std::invalid_argument("FunctionSpec: MaskedParity needs mask != 0");
      if (n < 64 && param >= (std::uint64_t{1} << n))
        throw std::invalid_argument("FunctionSpec: mask has bits outside the input");
      break;
    default:
      break;
  }
  FunctionSpec f;
  f.n_ = n;
  f.family_ = kind;
  f.param_ = param;
  return f;
}

Family FunctionSpec::family_kind() const {
  if (is_table())
    throw std::logic_error("FunctionSpec: explicit table has no family");
  return family_;
}

const BitVector& FunctionSpec::table() const {
  if (!is_table()) throw std::logic_error("FunctionSpec: no explicit table");
  return *table_;
}

int FunctionSpec::eval(std::uint64_t x) const {
  if (n_ < 64 && x >= (std::uint64_t{1} << n_))
    throw std::out_of_range("FunctionSpec: x out of range");
  if (is_table()) return table_->get(x);
  switch (family_) {
    case Family::Constant0: return 0;
    case Family::Constant1: return 1;
    case Family::MostSignificantBit:
      return n_ <= 64 ? int((x >> (n_ - 1)) & 1u) : 0;
    case Family::BitK: return int((x >> param_) & 1u);
    case Family::Parity: return std::popcount(x) & 1;
    case Family::MaskedParity: return masked_parity_u64(x, param_);
  }
  return 0;
}

int FunctionSpec::eval(const BitVector& x) const {
  if (x.size() != n_)
    throw std::invalid_argument("FunctionSpec: input width mismatch");
  if (is_table()) return table_->get(x.to_u64());
  switch (family_) {
    case Family::Constant0: return 0;
    case Family::Constant1: return 1;
    case Family::MostSignificantBit: return x.get(n_ - 1);
    case Family::BitK: return x.get(param_);
    case Family::Parity: return x.parity();
    case Family::MaskedParity: return masked_parity_u64(x.word(0), param_);
  }
  return 0;
}

FunctionSpec FunctionSpec::to_explicit_table() const {
  if (is_table()) return *this;
  if (n_ > kMaxTableWidth)
    throw std::invalid_argument("FunctionSpec: too wide to materialize");
  BitVector table(std::size_t{1} << n_);
  for (std::uint64_t x = 0; x < table.size(); ++x) table.set(x, eval(x));
  return from_table(std::move(table));
}

std::string FunctionSpec::name() const {
  if (is_table()) return "table";
  switch (family_) {
    case Family::Constant0: return "const0";
    case Family::Constant1: return "const1";
    case Family::MostSignificantBit: return "msb";
    case Family::BitK: return "bitk(" + std::to_string(param_) + ")";
    case Family::Parity: return "parity";
    case Family::MaskedParity: {
      std::ostringstream out;
      out << "maskedparity(0x" << std::hex << param_ << ")";
      return out.str();
    }
  }
  return "?";
}

PromiseClass classify(const FunctionSpec& f) {
  if (!f.is_table()) {
    switch (f.family_kind()) {
      case Family::Constant0: return PromiseClass::ConstantZero;
      case Family::Constant1: return PromiseClass::ConstantOne;
      default: return PromiseClass::Balanced;
    }
  }
  const std::size_t size = f.table().size();
  const std::size_t ones = f.table().count();
  if (ones == 0) return PromiseClass::ConstantZero;
  if (ones == size) return PromiseClass::ConstantOne;
  if (ones == size / 2) return PromiseClass::Balanced;
  std::ostringstream msg;
  msg << "function is neither constant nor balanced (" << ones << " ones of "
      << size << ")";
  throw PromiseViolation(msg.str());
}

namespace {

BasisPermutation sorted_rank_pi_f(const FunctionSpec& f) {
  const std::size_t size = f.table().size();
  std::vector<std::uint32_t> forward(size);
  std::uint32_t rank0 = 0;
  std::uint32_t rank1 = static_cast<std::uint32_t>(size / 2);
  for (std::size_t x = 0; x < size; ++x)
    forward[x] = f.table().get(x) ? rank1++ : rank0++;
  return BasisPermutation::from_table(std::move(forward));
}

BasisPermutation bit_swap_perm(std::size_t n, std::size_t k) {
  if (k == n - 1) return BasisPermutation::identity(n);
  auto swap_fn = [k, n](BitVector& x) { x.swap_bits(k, n - 1); };
  return BasisPermutation::from_callables(n, swap_fn, swap_fn);
}

BasisPermutation parity_perm(std::size_t n) {
  // Replaces the msb with the parity of all n bits; self-inverse since
  // the parity of the result recovers the original msb.
  auto fn = [n](BitVector& x) { x.set(n - 1, x.parity()); };
  return BasisPermutation::from_callables(n, fn, fn);
}

BasisPermutation masked_parity_perm(std::size_t n, std::uint64_t mask) {
  const unsigned j = 63 - std::countl_zero(mask);
  if (n <= 64) {
    const std::uint64_t mask_sw = swap_bits_u64(mask, j, unsigned(n - 1));
    auto step = [n, mask_sw](BitVector& x) {
      x.set(n - 1, masked_parity_u64(x.word(0), mask_sw));
    };
    auto fwd = [n, j, step](BitVector& x) {
      x.swap_bits(j, n - 1);
      step(x);
    };
    auto inv = [n, j, step](BitVector& x) {
      step(x);
      x.swap_bits(j, n - 1);
    };
    return BasisPermutation::from_callables(n, fwd, inv);
  }
  // Bit j moves beyond word 0; the swapped mask is its low part plus
  // the msb, which is handled separately.
  const std::uint64_t mask_low = mask & ~(std::uint64_t{1} << j);
  auto step = [n, mask_low](BitVector& x) {
    x.set(n - 1, masked_parity_u64(x.word(0), mask_low) ^ x.get(n - 1));
  };
  auto fwd = [n, j, step](BitVector& x) {
    x.swap_bits(j, n - 1);
    step(x);
  };
  auto inv = [n, j, step](BitVector& x) {
    step(x);
    x.swap_bits(j, n - 1);
  };
  return BasisPermutation::from_callables(n, fwd, inv);
}

}  // namespace

BasisPermutation build_pi_f(const FunctionSpec& f) {
  if (classify(f) != PromiseClass::Balanced)
    throw NotBalanced("build_pi_f: function is not balanced");
  if (f.is_table()) return sorted_rank_pi_f(f);
  switch (f.family_kind()) {
    case Family::MostSignificantBit: return BasisPermutation::identity(f.n());
    case Family::BitK: return bit_swap_perm(f.n(), f.param());
    case Family::Parity: return parity_perm(f.n());
    case Family::MaskedParity: return masked_parity_perm(f.n(), f.param());
    default: throw NotBalanced("build_pi_f: function is not balanced");
  }
}

Oracle build_oracle(const FunctionSpec& f) {
  const PromiseClass cls = classify(f);
  switch (cls) {
    case PromiseClass::ConstantZero:
      return Oracle(f.n(), cls, BasisPermutation::identity(f.n()), CenterGate::None);
    case PromiseClass::ConstantOne:
      return Oracle(f.n(), cls, BasisPermutation::identity(f.n()),
                    CenterGate::XOnTarget);
    case PromiseClass::Balanced:
      return Oracle(f.n(), cls, build_pi_f(f), CenterGate::CnotMsbToTarget);
  }
  throw PromiseViolation("build_oracle: unreachable");
}

void Oracle::apply(ToyRegister& reg) const {
  if (reg.input_count() != n_)
    throw std::invalid_argument("Oracle: register width mismatch");
  if (!pi_f_.is_identity()) {
    BitVector x = reg.input_b_bits();
    pi_f_.forward(x);
    reg.set_input_b_bits(x);
  }
  switch (center_) {
    case CenterGate::None: break;
    case CenterGate::XOnTarget: apply_x(reg, reg.target_index()); break;
    case CenterGate::CnotMsbToTarget:
      apply_cnot(reg, reg.msb_input_index(), reg.target_index());
      break;
  }
  if (!pi_f_.is_identity()) {
    BitVector x = reg.input_b_bits();
    pi_f_.inverse(x);
    reg.set_input_b_bits(x);
  }
}

void Oracle::apply_direct(ToyRegister& reg) const {
  if (reg.input_count() != n_)
    throw std::invalid_argument("Oracle: register width mismatch");
  int fx = 0;
  switch (class_) {
    case PromiseClass::ConstantZero: fx = 0; break;
    case PromiseClass::ConstantOne: fx = 1; break;
    case PromiseClass::Balanced: {
      BitVector x = reg.input_b_bits();
      pi_f_.forward(x);
      fx = x.get(n_ - 1);  // f(x) = msb(pi_f(x))
      break;
    }
  }
  if (fx) reg.flip_b(reg.target_index());
  if (class_ == PromiseClass::Balanced && reg.p(reg.target_index()))
    reg.flip_p(reg.msb_input_index());
}

int classical_query(const Oracle& oracle, std::uint64_t x, RandomSource& rng) {
  const std::size_t n = oracle.input_width();
  if (n < 64 && x >= (std::uint64_t{1} << n))
    throw std::out_of_range("classical_query: x out of range");
  std::vector<EpistemicPair> pairs(n + 1, EpistemicPair::Z0);
  for (std::size_t i = 0; i < n && i < 64; ++i)
    if ((x >> i) & 1u) pairs[i] = EpistemicPair::Z1;
  ToyRegister reg = prepare(pairs, rng);
  oracle.apply(reg);
  return measure(reg, reg.target_index(), MeasurementBasis::Computational);
}

FunctionSpec parse_truth_table(std::istream& in) {
  std::string n_token;
  if (!(in >> n_token))
    throw TruthTableParseError("truth table: missing width line");
  std::size_t n = 0;
  const auto [ptr, ec] =
      std::from_chars(n_token.data(), n_token.data() + n_token.size(), n);
  if (ec != std::errc{} || ptr != n_token.data() + n_token.size())
    throw TruthTableParseError("truth table: width is not a decimal integer");
  if (n < 1 || n > FunctionSpec::kMaxTableWidth)
    throw TruthTableParseError("truth table: width must be in 1..24");

  std::string table;
  if (!(in >> table))
    throw TruthTableParseError("truth table: missing table line");
  if (table.size() != (std::size_t{1} << n))
    throw TruthTableParseError("truth table: expected 2^n characters");
  for (char c : table)
    if (c != '0' && c != '1')
      throw TruthTableParseError("truth table: characters must be 0 or 1");

  std::string extra;
  if (in >> extra)
    throw TruthTableParseError("truth table: trailing content");
  return FunctionSpec::from_table_string(table);
}

FunctionSpec load_truth_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw TruthTableParseError("truth table: cannot open " + path);
  return parse_truth_table(in);
}

std::vector<FunctionSpec> all_promise_functions(std::size_t n) {
  if (n == 0 || n > 4)
    throw std::invalid_argument("all_promise_functions: n must be in 1..4");
  const std::size_t size = std::size_t{1} << n;
  std::vector<FunctionSpec> out;
  for (std::uint64_t t = 0; t < (std::uint64_t{1} << size); ++t) {
    const auto ones = static_cast<std::size_t>(std::popcount(t));
    if (ones != 0 && ones != size / 2 && ones != size) continue;
    out.push_back(FunctionSpec::from_table(BitVector::from_u64(t, size)));
  }
  return out;
}

FunctionSpec random_balanced_table(std::size_t n, RandomSource& rng) {
  if (n == 0 || n > FunctionSpec::kMaxTableWidth)
    throw std::invalid_argument("random_balanced_table: n must be in 1..24");
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::uint8_t> values(size, 0);
  std::fill(values.begin() + size / 2, values.end(), 1);
  for (std::size_t i = size - 1; i > 0; --i)
    std::swap(values[i], values[rng.next_below(i + 1)]);
  BitVector table(size);
  for (std::size_t x = 0; x < size; ++x) table.set(x, values[x]);
  return FunctionSpec::from_table(std::move(table));
}

}  // namespace toydj
