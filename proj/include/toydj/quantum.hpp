#pragma once

#include <complex>
#include <span>
#include <vector>

#include "toydj/oracle.hpp"

namespace toydj {

/// Dense statevector over n_qubits qubits, little-endian basis indices
/// (bit q of the index is qubit q). Qubit n is the target, matching
/// the toy-register layout.
class StateVector {
 public:
  explicit StateVector(std::size_t n_qubits, std::uint64_t basis_index = 0);

  std::size_t qubit_count() const { return n_qubits_; }
  std::size_t dimension() const { return amps_.size(); }
  std::complex<double>& amp(std::uint64_t i) { return amps_[i]; }
  const std::complex<double>& amp(std::uint64_t i) const { return amps_[i]; }
  std::span<const std::complex<double>> amplitudes() const { return amps_; }

  double norm() const;

 private:
  std::size_t n_qubits_;
  std::vector<std::complex<double>> amps_;
};

/// In-place Hadamard butterfly on one qubit.
void qh(StateVector& sv, std::size_t qubit);

/// Hadamard on each listed qubit.
void qh_all(StateVector& sv, std::span<const std::size_t> qubits);

void apply_x_q(StateVector& sv, std::size_t qubit);
void apply_cnot_q(StateVector& sv, std::size_t control, std::size_t target);

/// Permutes the computational-basis index of the low `count` qubits:
/// the amplitude at (x, rest) moves to (perm(x), rest).
void apply_index_perm(StateVector& sv, const BasisPermutation& perm,
                      std::size_t count);

/// U_f acting as |x>|y> -> |x>|y xor f(x)>; f must be an explicit table
/// and the statevector must have f.n() + 1 qubits.
class OracleUnitary {
 public:
  explicit OracleUnitary(FunctionSpec f);
  std::size_t input_width() const { return f_.n(); }
  const FunctionSpec& function() const { return f_; }

 private:
  FunctionSpec f_;
};

void apply_uf(StateVector& sv, const OracleUnitary& u);

/// Runs the quantum circuit |0>^n |1> -> H all -> U_f -> H all and
/// returns the probability that the input register measures all zeros.
/// Accepts any function with n <= 12; the promise is not checked.
double run_quantum_dj(const FunctionSpec& f);

/// Builds the permutation matrix of the oracle's gate sequence (pi_f,
/// center gate, pi_f inverse) column by column through the statevector
/// and compares it entrywise with U_f. Exact equality; n <= 6.
bool oracle_unitary_equivalence(const FunctionSpec& f);

}  // namespace toydj
