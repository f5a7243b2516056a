#include "toydj/dj.hpp"

#include "toydj/transforms.hpp"

namespace toydj {

namespace {

std::vector<EpistemicPair> dj_input_pairs(std::size_t n) {
  std::vector<EpistemicPair> pairs(n + 1, EpistemicPair::Z0);
  pairs[n] = EpistemicPair::Z1;
  return pairs;
}

DjResult run_stages(std::size_t n,
                    const std::function<void(ToyRegister&)>& invoke_oracle,
                    const BitVector& phase_bits, DjOptions opts,
                    std::vector<ToyRegister>* snapshots) {
  if (phase_bits.size() != n + 1)
    throw std::invalid_argument("run_dj: need n+1 phase bits");

  const auto pairs = dj_input_pairs(n);
  ToyRegister reg = prepare(pairs, phase_bits);
  if (snapshots) snapshots->push_back(reg);

  for (std::size_t i = 0; i <= n; ++i) apply_h(reg, i);
  if (snapshots) snapshots->push_back(reg);

  DjResult result;
  invoke_oracle(reg);
  result.queries_used = 1;
  if (snapshots) snapshots->push_back(reg);

  const std::size_t last = opts.final_hadamard_on_target ? n + 1 : n;
  for (std::size_t i = 0; i < last; ++i) apply_h(reg, i);
  if (snapshots) snapshots->push_back(reg);

  result.final_input_readout = BitVector(n);
  for (std::size_t i = 0; i < n; ++i)
    result.final_input_readout.set(
        i, measure(reg, i, MeasurementBasis::Computational));
  result.verdict =
      result.final_input_readout.none() ? Verdict::Constant : Verdict::Balanced;
  result.sampled_phase_bits = phase_bits;
  return result;
}

}  // namespace

DjResult run_dj_protocol(std::size_t n,
                         const std::function<void(ToyRegister&)>& invoke_oracle,
                         const BitVector& phase_bits, DjOptions opts) {
  return run_stages(n, invoke_oracle, phase_bits, opts, nullptr);
}

DjResult run_dj_with_phase_bits(const Oracle& oracle, const BitVector& phase_bits,
                                DjOptions opts) {
  return run_dj_protocol(
      oracle.input_width(), [&oracle](ToyRegister& reg) { oracle.apply(reg); },
      phase_bits, opts);
}

DjResult run_dj(const Oracle& oracle, RandomSource& rng, DjOptions opts) {
  BitVector phase_bits(oracle.input_width() + 1);
  for (std::size_t i = 0; i < phase_bits.size(); ++i)
    phase_bits.set(i, rng.next_bit());
  return run_dj_with_phase_bits(oracle, phase_bits, opts);
}

std::vector<ToyRegister> trace_dj(const Oracle& oracle, const BitVector& phase_bits,
                                  DjOptions opts) {
  std::vector<ToyRegister> snapshots;
  run_stages(
      oracle.input_width(), [&oracle](ToyRegister& reg) { oracle.apply(reg); },
      phase_bits, opts, &snapshots);
  return snapshots;
}

}  // namespace toydj
