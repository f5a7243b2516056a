#include "toydj/quantum.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace toydj {

namespace {

void check_qubit(const StateVector& sv, std::size_t q) {
  if (q >= sv.qubit_count())
    throw std::out_of_range("StateVector: qubit index out of range");
}

}  // namespace

StateVector::StateVector(std::size_t n_qubits, std::uint64_t basis_index)
    : n_qubits_(n_qubits), amps_(std::size_t{1} << n_qubits) {
  if (n_qubits == 0 || n_qubits > 26)
    throw std::invalid_argument("StateVector: qubit count out of range");
  if (basis_index >= amps_.size())
    throw std::out_of_range("StateVector: basis index out of range");
  amps_[basis_index] = 1.0;
}

double StateVector::norm() const {
  double sum = 0.0;
  for (const auto& a : amps_) sum += std::norm(a);
  return std::sqrt(sum);
}

void qh(StateVector& sv, std::size_t qubit) {
  check_qubit(sv, qubit);
  const std::uint64_t stride = std::uint64_t{1} << qubit;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (std::uint64_t base = 0; base < sv.dimension(); base += 2 * stride) {
    for (std::uint64_t i = base; i < base + stride; ++i) {
      const auto a = sv.amp(i);
      const auto b = sv.amp(i + stride);
      sv.amp(i) = (a + b) * inv_sqrt2;
      sv.amp(i + stride) = (a - b) * inv_sqrt2;
    }
  }
}

void qh_all(StateVector& sv, std::span<const std::size_t> qubits) {
  for (std::size_t q : qubits) qh(sv, q);
}

void apply_x_q(StateVector& sv, std::size_t qubit) {
  check_qubit(sv, qubit);
  const std::uint64_t stride = std::uint64_t{1} << qubit;
  for (std::uint64_t base = 0; base < sv.dimension(); base += 2 * stride)
    for (std::uint64_t i = base; i < base + stride; ++i)
      std::swap(sv.amp(i), sv.amp(i + stride));
}

void apply_cnot_q(StateVector& sv, std::size_t control, std::size_t target) {
  check_qubit(sv, control);
  check_qubit(sv, target);
  if (control == target)
    throw std::invalid_argument("apply_cnot_q: control equals target");
  const std::uint64_t cbit = std::uint64_t{1} << control;
  const std::uint64_t tbit = std::uint64_t{1} << target;
  for (std::uint64_t i = 0; i < sv.dimension(); ++i)
    if ((i & cbit) && !(i & tbit)) std::swap(sv.amp(i), sv.amp(i | tbit));
}

void apply_index_perm(StateVector& sv, const BasisPermutation& perm,
                      std::size_t count) {
  if (count != perm.arity() || count > sv.qubit_count())
    throw std::invalid_argument("apply_index_perm: width mismatch");
  if (perm.is_identity()) return;
  const std::uint64_t low = std::uint64_t{1} << count;
  std::vector<std::complex<double>> out(sv.dimension());
  for (std::uint64_t i = 0; i < sv.dimension(); ++i) {
    const std::uint64_t x = i & (low - 1);
    const std::uint64_t rest = i & ~(low - 1);
    out[perm.forward_value(x) | rest] = sv.amp(i);
  }
  for (std::uint64_t i = 0; i < sv.dimension(); ++i) sv.amp(i) = out[i];
}

OracleUnitary::OracleUnitary(FunctionSpec f) : f_(std::move(f)) {
  if (!f_.is_table())
    throw std::invalid_argument("OracleUnitary: explicit table required");
}

void apply_uf(StateVector& sv, const OracleUnitary& u) {
  const std::size_t n = u.input_width();
  if (sv.qubit_count() != n + 1)
    throw std::invalid_argument("apply_uf: statevector width mismatch");
  const std::uint64_t tbit = std::uint64_t{1} << n;
  for (std::uint64_t x = 0; x < tbit; ++x)
    if (u.function().eval(x)) std::swap(sv.amp(x), sv.amp(x | tbit));
}

double run_quantum_dj(const FunctionSpec& f) {
  const std::size_t n = f.n();
  if (n > 12)
    throw std::invalid_argument("run_quantum_dj: n <= 12 required");
  const OracleUnitary u(f.is_table() ? f : f.to_explicit_table());

  StateVector sv(n + 1, std::uint64_t{1} << n);  // |0...0>|1>
  for (std::size_t q = 0; q <= n; ++q) qh(sv, q);
  apply_uf(sv, u);
  for (std::size_t q = 0; q <= n; ++q) qh(sv, q);

  double prob = 0.0;
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t i = 0; i < sv.dimension(); ++i)
    if ((i & mask) == 0) prob += std::norm(sv.amp(i));
  return prob;
}

bool oracle_unitary_equivalence(const FunctionSpec& f) {
  const std::size_t n = f.n();
  if (n > 6)
    throw std::invalid_argument("oracle_unitary_equivalence: n <= 6 required");
  const FunctionSpec table = f.is_table() ? f : f.to_explicit_table();
  const Oracle oracle = build_oracle(table);
  const std::uint64_t dim = std::uint64_t{1} << (n + 1);
  const std::uint64_t tbit = std::uint64_t{1} << n;

  for (std::uint64_t column = 0; column < dim; ++column) {
    StateVector sv(n + 1, column);
    apply_index_perm(sv, oracle.pi_f(), n);
    switch (oracle.center()) {
      case CenterGate::None: break;
      case CenterGate::XOnTarget: apply_x_q(sv, n); break;
      case CenterGate::CnotMsbToTarget: apply_cnot_q(sv, n - 1, n); break;
    }
    apply_index_perm(sv, oracle.pi_f().inverted(), n);

    // U_f column: |x>|y> -> |x>|y xor f(x)>.
    const std::uint64_t x = column & (tbit - 1);
    const std::uint64_t expected =
        table.eval(x) ? (column ^ tbit) : column;
    for (std::uint64_t row = 0; row < dim; ++row) {
      const std::complex<double> want = row == expected ? 1.0 : 0.0;
      if (sv.amp(row) != want) return false;
    }
  }
  return true;
}

}  // namespace toydj
