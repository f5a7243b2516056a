#pragma once

#include <functional>
#include <vector>

#include "toydj/oracle.hpp"

namespace toydj {

struct DjOptions {
  /// Apply the final Hadamard layer to the target as well as the input
  /// register. Off by default: the target is never measured, so the
  /// verdict is the same either way; the flag only changes the target's
  /// final ontic state in traces.
  bool final_hadamard_on_target = false;
};

struct DjResult {
  Verdict verdict = Verdict::Constant;
  int queries_used = 0;
  BitVector final_input_readout;  // length n, bit i = system i's readout
  BitVector sampled_phase_bits;   // length n+1, the preparation draws
};

/// One full protocol run: prepare (1v2, ..., 1v2, 3v4), Hadamard every
/// system, apply the oracle once, Hadamard the input register, measure
/// the input register computationally. Verdict is Constant iff every
/// readout is 0.
DjResult run_dj(const Oracle& oracle, RandomSource& rng, DjOptions opts = {});

/// Same protocol with the n+1 preparation phase bits given explicitly.
DjResult run_dj_with_phase_bits(const Oracle& oracle, const BitVector& phase_bits,
                                DjOptions opts = {});

/// Protocol core, parameterized over the oracle invocation so callers
/// can count or instrument it.
DjResult run_dj_protocol(std::size_t n,
                         const std::function<void(ToyRegister&)>& invoke_oracle,
                         const BitVector& phase_bits, DjOptions opts = {});

/// Register snapshots after each stage: preparation, first Hadamard
/// layer, oracle, final Hadamard layer.
std::vector<ToyRegister> trace_dj(const Oracle& oracle, const BitVector& phase_bits,
                                  DjOptions opts = {});

}  // namespace toydj
