#pragma once

#include <functional>
#include <optional>

#include "toydj/oracle.hpp"

namespace toydj {

struct QueryBudgetReport {
  Verdict verdict = Verdict::Constant;
  std::uint64_t queries_used = 0;
  bool error_flag = false;  // verdict wrong, when ground truth was known
};

/// One function evaluation, however it is backed.
using QueryFn = std::function<int(std::uint64_t)>;

/// Scans x = 0, 1, ... in ascending order; answers Balanced on the
/// first differing output, Constant after 2^(n-1)+1 agreeing ones.
/// Always correct under the promise. n <= 24.
QueryBudgetReport deterministic_classical(std::size_t n, const QueryFn& query,
                                          std::optional<Verdict> truth = {});
QueryBudgetReport deterministic_classical(const FunctionSpec& f);

/// Queries k inputs drawn uniformly with replacement; Balanced if any
/// two outputs differ, Constant otherwise. Wrong only when f is
/// balanced and all k outputs agree, which happens with probability
/// 2^(1-k). k >= 2.
QueryBudgetReport randomized_classical(std::size_t n, const QueryFn& query, int k,
                                       RandomSource& rng,
                                       std::optional<Verdict> truth = {});
QueryBudgetReport randomized_classical(const FunctionSpec& f, int k,
                                       RandomSource& rng);

/// Wraps a toy-model oracle as a QueryFn via classical_query.
QueryFn oracle_query_fn(const Oracle& oracle, RandomSource& rng);

struct WilsonInterval {
  double lower = 0.0;
  double upper = 1.0;
};

/// Wilson score interval for a binomial proportion; z is the normal
/// quantile (2.5758 for 99% two-sided).
WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials,
                               double z);

}  // namespace toydj
