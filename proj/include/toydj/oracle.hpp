#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "toydj/transforms.hpp"

namespace toydj {

/// The promise is broken: the function is neither constant nor balanced.
struct PromiseViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An operation that needs a balanced function got a constant one.
struct NotBalanced : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class PromiseClass : std::uint8_t { ConstantZero, ConstantOne, Balanced };

enum class Verdict : std::uint8_t { Constant, Balanced };

const char* to_string(PromiseClass cls);
const char* to_string(Verdict verdict);

constexpr Verdict verdict_of(PromiseClass cls) {
  return cls == PromiseClass::Balanced ? Verdict::Balanced : Verdict::Constant;
}

/// Programmatic function families, constant or balanced by construction.
enum class Family : std::uint8_t {
  Constant0,
  Constant1,
  MostSignificantBit,
  BitK,          // f(x) = bit k of x
  Parity,        // f(x) = parity of all n bits
  MaskedParity,  // f(x) = parity of x & mask, mask != 0 over systems 0..63
};

/// A Boolean function f: {0,1}^n -> {0,1}, either an explicit truth
/// table (n <= 24, entry x = f(x)) or a named programmatic family
/// usable at arbitrary n.
class FunctionSpec {
 public:
  static constexpr std::size_t kMaxTableWidth = 24;

  /// table.size() must be 2^n for some 1 <= n <= 24.
  static FunctionSpec from_table(BitVector table);
  /// Characters over {0,1}; character x is f(x).
  static FunctionSpec from_table_string(std::string_view table);
  static FunctionSpec family(Family kind, std::size_t n, std::uint64_t param = 0);

  std::size_t n() const { return n_; }
  bool is_table() const { return table_.has_value(); }
  Family family_kind() const;
  std::uint64_t param() const { return param_; }
  const BitVector& table() const;

  /// f(x) for n <= 64.
  int eval(std::uint64_t x) const;
  /// f(x) with x given as n bits.
  int eval(const BitVector& x) const;

  /// Materialized truth table; n <= 24.
  FunctionSpec to_explicit_table() const;

  /// Short display name, e.g. "parity", "bitk(3)", "table".
  std::string name() const;

 private:
  FunctionSpec() = default;

  std::size_t n_ = 0;
  std::optional<BitVector> table_;
  Family family_ = Family::Constant0;
  std::uint64_t param_ = 0;
};

/// ConstantZero, ConstantOne, or Balanced; throws PromiseViolation for
/// an explicit table whose ones-count is none of 0, 2^(n-1), 2^n.
PromiseClass classify(const FunctionSpec& f);

/// Canonical computational-basis permutation with msb(forward(x)) = f(x)
/// for balanced f: explicit tables use the sorted-rank construction,
/// families carry O(n) closed-form bijections. Throws NotBalanced.
BasisPermutation build_pi_f(const FunctionSpec& f);

enum class CenterGate : std::uint8_t { None, XOnTarget, CnotMsbToTarget };

/// The assembled extended-toy-model oracle: pi_f on the input systems,
/// a center gate (CNOT from the msb input to the target for balanced
/// functions, X on the target for constant one, nothing for constant
/// zero), then pi_f inverse.
class Oracle {
 public:
  std::size_t input_width() const { return n_; }
  PromiseClass promise_class() const { return class_; }
  CenterGate center() const { return center_; }
  const BasisPermutation& pi_f() const { return pi_f_; }

  /// Composed route: apply_basis_perm(pi_f), center gate, apply_basis_perm(pi_f^-1).
  void apply(ToyRegister& reg) const;

  /// The equivalent two-step ontic-space description: X on the target
  /// iff f(x) = 1 for the register's computational value x, then (for
  /// balanced functions) Z on the msb input iff the target label is 2 or 4.
  void apply_direct(ToyRegister& reg) const;

  friend Oracle build_oracle(const FunctionSpec& f);

 private:
  Oracle(std::size_t n, PromiseClass cls, BasisPermutation pi_f, CenterGate center)
      : n_(n), class_(cls), pi_f_(std::move(pi_f)), center_(center) {}

  std::size_t n_;
  PromiseClass class_;
  BasisPermutation pi_f_;
  CenterGate center_;
};

Oracle build_oracle(const FunctionSpec& f);

/// Classical single-value query: prepare the computational product
/// state for x with the target in 1v2, apply the oracle once, measure
/// the target computationally. Returns f(x).
int classical_query(const Oracle& oracle, std::uint64_t x, RandomSource& rng);

/// Truth-table file format: line 1 is decimal n, line 2 is 2^n
/// characters over {0,1} (character x = f(x)); nothing but whitespace
/// may follow. Throws TruthTableParseError.
struct TruthTableParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

FunctionSpec parse_truth_table(std::istream& in);
FunctionSpec load_truth_table(const std::string& path);

/// All promise functions at width n (n <= 4): the two constants plus
/// every balanced table, in ascending table order.
std::vector<FunctionSpec> all_promise_functions(std::size_t n);

/// Uniformly random balanced explicit table.
FunctionSpec random_balanced_table(std::size_t n, RandomSource& rng);

}  // namespace toydj
