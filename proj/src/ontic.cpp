#include "toydj/ontic.hpp"

namespace toydj {

const char* pair_name(EpistemicPair pair) {
  switch (pair) {
    case EpistemicPair::Z0: return "1v2";
    case EpistemicPair::Z1: return "3v4";
    case EpistemicPair::X0: return "1v3";
    case EpistemicPair::X1: return "2v4";
    case EpistemicPair::Y0: return "1v4";
    case EpistemicPair::Y1: return "2v3";
  }
  return "?";
}

ToyBit sample_pair(EpistemicPair pair, bool choice) {
  const auto [lo, hi] = pair_labels(pair);
  return ToyBit::from_label(choice ? hi : lo);
}

ToyRegister prepare(std::span<const EpistemicPair> pairs, RandomSource& rng) {
  if (pairs.empty()) throw std::invalid_argument("prepare: no pairs given");
  ToyRegister reg(pairs.size() - 1);
  for (std::size_t i = 0; i < pairs.size(); ++i)
    reg.set_bit(i, sample_pair(pairs[i], rng.next_bit()));
  return reg;
}

ToyRegister prepare(std::span<const EpistemicPair> pairs,
                    const BitVector& choice_bits) {
  if (pairs.empty()) throw std::invalid_argument("prepare: no pairs given");
  if (choice_bits.size() != pairs.size())
    throw std::invalid_argument("prepare: choice bit count != pair count");
  ToyRegister reg(pairs.size() - 1);
  for (std::size_t i = 0; i < pairs.size(); ++i)
    reg.set_bit(i, sample_pair(pairs[i], choice_bits.get(i)));
  return reg;
}

int measure(const ToyRegister& reg, std::size_t index, MeasurementBasis basis) {
  if (index >= reg.system_count())
    throw std::out_of_range("measure: index out of range");
  switch (basis) {
    case MeasurementBasis::Computational: return reg.b(index);
    case MeasurementBasis::PhaseBasis: return reg.p(index);
    case MeasurementBasis::YBasis: return reg.b(index) ^ reg.p(index);
  }
  return 0;
}

int measure_disturbing(ToyRegister& reg, std::size_t index,
                       MeasurementBasis basis, RandomSource& rng) {
  const int outcome = measure(reg, index, basis);
  reg.set_bit(index, sample_pair(readout_epistemic(outcome, basis), rng.next_bit()));
  return outcome;
}

EpistemicPair readout_epistemic(int outcome, MeasurementBasis basis) {
  switch (basis) {
    case MeasurementBasis::Computational:
      return outcome ? EpistemicPair::Z1 : EpistemicPair::Z0;
    case MeasurementBasis::PhaseBasis:
      return outcome ? EpistemicPair::X1 : EpistemicPair::X0;
    case MeasurementBasis::YBasis:
      return outcome ? EpistemicPair::Y1 : EpistemicPair::Y0;
  }
  return EpistemicPair::Z0;
}

}  // namespace toydj
