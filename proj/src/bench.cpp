#include "toydj/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace toydj {

namespace {

bool needs_quoting(const std::string& field) {
  return field.find_first_of(",\"\r\n") != std::string::npos;
}

std::string csv_field(const std::string& field) {
  if (!needs_quoting(field)) return field;
  std::string quoted = "\"";
  for (char c : field) {
    quoted.push_back(c);
    if (c == '"') quoted.push_back('"');
  }
  quoted.push_back('"');
  return quoted;
}

std::string format_seconds(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", value);
  return buf;
}

}  // namespace

BenchRecord run_bench_one(const FunctionSpec& f, std::uint64_t seed, int reps) {
  if (reps < 1) throw std::invalid_argument("run_bench: reps must be positive");
  const Oracle oracle = build_oracle(f);

  std::vector<double> times;
  times.reserve(reps);
  DjResult result;
  for (int rep = 0; rep < reps; ++rep) {
    RandomSource rng(seed);
    const auto start = std::chrono::steady_clock::now();
    result = run_dj(oracle, rng);
    const auto stop = std::chrono::steady_clock::now();
    times.push_back(std::chrono::duration<double>(stop - start).count());
  }
  std::sort(times.begin(), times.end());

  BenchRecord record;
  record.n = f.n();
  record.family = f.name();
  record.wall_seconds = times[times.size() / 2];
  record.state_bytes = ToyRegister(f.n()).allocated_state_bytes();
  record.queries = result.queries_used;
  record.verdict = result.verdict;
  return record;
}

std::vector<BenchRecord> run_bench(FamilyConfig family,
                                   std::span<const std::size_t> n_list,
                                   std::uint64_t seed, int reps) {
  if (n_list.empty()) throw std::invalid_argument("run_bench: empty n list");
  if (!std::is_sorted(n_list.begin(), n_list.end()))
    throw std::invalid_argument("run_bench: n list must be ascending");
  std::vector<BenchRecord> records;
  records.reserve(n_list.size());
  for (std::size_t n : n_list) {
    const FunctionSpec f = FunctionSpec::family(family.kind, n, family.param);
    records.push_back(run_bench_one(f, seed, reps));
  }
  return records;
}

void write_csv(std::ostream& out, std::span<const BenchRecord> records) {
  out << "n,family,wall_seconds,state_bytes,queries,verdict\r\n";
  for (const auto& record : records) {
    out << record.n << ',' << csv_field(record.family) << ','
        << format_seconds(record.wall_seconds) << ',' << record.state_bytes
        << ',' << record.queries << ',' << to_string(record.verdict) << "\r\n";
  }
}

double linear_fit_r2(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("linear_fit_r2: need matching series, size >= 2");
  const double count = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double denom = count * sxx - sx * sx;
  if (denom == 0.0) throw std::invalid_argument("linear_fit_r2: degenerate x");
  const double slope = (count * sxy - sx * sy) / denom;
  const double intercept = (sy - slope * sx) / count;

  double ss_res = 0, ss_tot = 0;
  const double mean_y = sy / count;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double fit = intercept + slope * x[i];
    ss_res += (y[i] - fit) * (y[i] - fit);
    ss_tot += (y[i] - mean_y) * (y[i] - mean_y);
  }
  if (ss_tot == 0.0) return 1.0;
  return 1.0 - ss_res / ss_tot;
}

}  // namespace toydj
