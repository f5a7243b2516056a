#include "toydj/baselines.hpp"

#include <cmath>
#include <stdexcept>

namespace toydj {

QueryBudgetReport deterministic_classical(std::size_t n, const QueryFn& query,
                                          std::optional<Verdict> truth) {
  if (n == 0 || n > 24)
    throw std::invalid_argument("deterministic_classical: n must be in 1..24");
  const std::uint64_t budget = (std::uint64_t{1} << (n - 1)) + 1;
  QueryBudgetReport report;
  const int first = query(0);
  report.queries_used = 1;
  report.verdict = Verdict::Constant;
  for (std::uint64_t x = 1; x < budget; ++x) {
    const int value = query(x);
    ++report.queries_used;
    if (value != first) {
      report.verdict = Verdict::Balanced;
      break;
    }
  }
  report.error_flag = truth.has_value() && report.verdict != *truth;
  return report;
}

QueryBudgetReport deterministic_classical(const FunctionSpec& f) {
  const Verdict truth = verdict_of(classify(f));
  return deterministic_classical(
      f.n(), [&f](std::uint64_t x) { return f.eval(x); }, truth);
}

QueryBudgetReport randomized_classical(std::size_t n, const QueryFn& query, int k,
                                       RandomSource& rng,
                                       std::optional<Verdict> truth) {
  if (n == 0) throw std::invalid_argument("randomized_classical: n must be positive");
  if (k < 2) throw std::invalid_argument("randomized_classical: k >= 2 required");
  const std::uint64_t bound = n >= 64 ? 0 : (std::uint64_t{1} << n);
  QueryBudgetReport report;
  report.verdict = Verdict::Constant;
  int first = 0;
  for (int i = 0; i < k; ++i) {
    const int value = query(rng.next_below(bound));
    ++report.queries_used;
    if (i == 0) {
      first = value;
    } else if (value != first) {
      report.verdict = Verdict::Balanced;
    }
  }
  report.error_flag = truth.has_value() && report.verdict != *truth;
  return report;
}

QueryBudgetReport randomized_classical(const FunctionSpec& f, int k,
                                       RandomSource& rng) {
  const Verdict truth = verdict_of(classify(f));
  return randomized_classical(
      f.n(), [&f](std::uint64_t x) { return f.eval(x); }, k, rng, truth);
}

QueryFn oracle_query_fn(const Oracle& oracle, RandomSource& rng) {
  return [&oracle, &rng](std::uint64_t x) {
    return classical_query(oracle, x, rng);
  };
}

WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials,
                               double z) {
  if (trials == 0) return {};
  const double nt = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / nt;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nt;
  const double center = p + z2 / (2.0 * nt);
  const double spread = z * std::sqrt(p * (1.0 - p) / nt + z2 / (4.0 * nt * nt));
  return {std::max(0.0, (center - spread) / denom),
          std::min(1.0, (center + spread) / denom)};
}

}  // namespace toydj
