#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "toydj/dj.hpp"

namespace toydj {

struct BenchRecord {
  std::size_t n = 0;
  std::string family;
  double wall_seconds = 0.0;
  std::uint64_t state_bytes = 0;  // allocated register planes, word-aligned
  int queries = 0;
  Verdict verdict = Verdict::Constant;
};

/// Word-rounding overhead allowed on top of the ceil(2(n+1)/8) logical
/// payload: two planes padded to 64-bit words.
inline constexpr std::uint64_t kStateBytesOverheadBound = 16;

struct FamilyConfig {
  Family kind = Family::Parity;
  std::uint64_t param = 0;  // k for BitK, mask for MaskedParity
};

/// Builds the family oracle at each n (ascending n_list), runs the
/// protocol once per repetition, and records the median wall time of
/// `reps` repetitions, the analytic state size, the query count, and
/// the verdict. Timing covers prepare through measure; the oracle is
/// built outside the timed region.
std::vector<BenchRecord> run_bench(FamilyConfig family,
                                   std::span<const std::size_t> n_list,
                                   std::uint64_t seed, int reps = 5);

/// Single-record variant for an arbitrary function spec.
BenchRecord run_bench_one(const FunctionSpec& f, std::uint64_t seed, int reps = 5);

/// CSV per the export contract: header n,family,wall_seconds,
/// state_bytes,queries,verdict; RFC 4180 quoting; floats with six
/// significant digits.
void write_csv(std::ostream& out, std::span<const BenchRecord> records);

/// Coefficient of determination of the least-squares line through
/// (x, y); 1.0 is a perfect linear fit.
double linear_fit_r2(std::span<const double> x, std::span<const double> y);

}  // namespace toydj
