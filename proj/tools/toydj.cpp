#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "toydj/baselines.hpp"
#include "toydj/bench.hpp"
#include "toydj/dj.hpp"
#include "toydj/quantum.hpp"

namespace {

using namespace toydj;

// Exit codes: 0 success, 1 usage/parse error, 2 promise violation,
// 3 validation found a mismatch.
constexpr int kExitUsage = 1;
constexpr int kExitPromise = 2;
constexpr int kExitValidationFailed = 3;

struct SourceOptions {
  std::string family;
  std::string table_path;
  std::size_t n = 0;
  std::uint64_t k = 0;
  std::uint64_t mask = 1;
};

void add_source_options(CLI::App* cmd, SourceOptions& src) {
  cmd->add_option("--family", src.family,
                  "Function family: const0, const1, msb, bitk, parity, maskedparity");
  cmd->add_option("--table", src.table_path, "Truth-table file");
  cmd->add_option("--n", src.n, "Input width for --family");
  cmd->add_option("--k", src.k, "Bit index for the bitk family");
  cmd->add_option("--mask", src.mask, "Mask for the maskedparity family (nonzero)");
}

Family parse_family(const std::string& name) {
  if (name == "const0") return Family::Constant0;
  if (name == "const1") return Family::Constant1;
  if (name == "msb") return Family::MostSignificantBit;
  if (name == "bitk") return Family::BitK;
  if (name == "parity") return Family::Parity;
  if (name == "maskedparity") return Family::MaskedParity;
  throw std::invalid_argument("unknown family '" + name + "'");
}

FunctionSpec resolve_function(const SourceOptions& src) {
  if (!src.family.empty() && !src.table_path.empty())
    throw std::invalid_argument("give either --family or --table, not both");
  if (src.family.empty() && src.table_path.empty())
    throw std::invalid_argument("one of --family or --table is required");
  if (!src.family.empty()) {
    if (src.n == 0) throw std::invalid_argument("--family requires --n");
    const Family kind = parse_family(src.family);
    std::uint64_t param = 0;
    if (kind == Family::BitK) param = src.k;
    if (kind == Family::MaskedParity) param = src.mask;
    return FunctionSpec::family(kind, src.n, param);
  }
  return load_truth_table(src.table_path);
}

std::string table_string(const FunctionSpec& f) {
  const BitVector& table = f.table();
  std::string s(table.size(), '0');
  for (std::size_t x = 0; x < table.size(); ++x)
    if (table.get(x)) s[x] = '1';
  return s;
}

int cmd_run(const SourceOptions& src, std::uint64_t seed) {
  const Oracle oracle = build_oracle(resolve_function(src));
  RandomSource rng(seed);
  const DjResult result = run_dj(oracle, rng);
  std::cout << to_string(result.verdict) << ", " << result.queries_used
            << (result.queries_used == 1 ? " query" : " queries") << "\n";
  std::cout << "readout: " << result.final_input_readout.to_string_msb_first()
            << "\n";
  return 0;
}

int cmd_query(const SourceOptions& src, std::uint64_t x, std::uint64_t seed) {
  const Oracle oracle = build_oracle(resolve_function(src));
  RandomSource rng(seed);
  std::cout << classical_query(oracle, x, rng) << "\n";
  return 0;
}

int cmd_validate(std::size_t n, std::uint64_t samples, std::uint64_t seed) {
  if (n == 0 || n > 12)
    throw std::invalid_argument("validate: --n must be in 1..12");
  if (samples == 0 && n > 4)
    throw std::invalid_argument("validate: --samples is required for n > 4");

  std::vector<FunctionSpec> functions;
  functions.push_back(FunctionSpec::family(Family::Constant0, n));
  functions.push_back(FunctionSpec::family(Family::Constant1, n));
  if (samples == 0) {
    for (auto& f : all_promise_functions(n))
      if (classify(f) == PromiseClass::Balanced) functions.push_back(std::move(f));
  } else {
    RandomSource table_rng(seed);
    for (std::uint64_t s = 0; s < samples; ++s)
      functions.push_back(random_balanced_table(n, table_rng));
  }

  RandomSource run_rng = RandomSource(seed).split(1);
  std::size_t passed = 0;
  for (const auto& f : functions) {
    const Oracle oracle = build_oracle(f);
    const Verdict toy = run_dj(oracle, run_rng).verdict;
    const Verdict quantum =
        run_quantum_dj(f) > 0.5 ? Verdict::Constant : Verdict::Balanced;
    bool ok = toy == quantum && toy == verdict_of(classify(f));
    if (n <= 6) ok = ok && oracle_unitary_equivalence(f);
    if (ok) {
      ++passed;
    } else {
      std::cerr << "mismatch: " << f.name();
      if (f.is_table()) std::cerr << " " << table_string(f);
      std::cerr << "\n";
    }
  }
  std::cout << passed << "/" << functions.size() << " functions pass\n";
  return passed == functions.size() ? 0 : kExitValidationFailed;
}

int cmd_enumerate(std::size_t n) {
  if (n == 0 || n > 4)
    throw std::invalid_argument("enumerate: n too large for enumeration (max 4)");
  for (const auto& f : all_promise_functions(n)) {
    const Oracle oracle = build_oracle(f);
    const std::size_t assignments = std::size_t{1} << (n + 1);
    bool deterministic = true;
    DjResult first = run_dj_with_phase_bits(oracle, BitVector(n + 1));
    for (std::size_t bits = 1; bits < assignments; ++bits) {
      const DjResult r =
          run_dj_with_phase_bits(oracle, BitVector::from_u64(bits, n + 1));
      if (r.verdict != first.verdict ||
          !(r.final_input_readout == first.final_input_readout)) {
        deterministic = false;
        break;
      }
    }
    std::cout << table_string(f) << " " << to_string(first.verdict) << " "
              << (deterministic ? "deterministic" : "nondeterministic") << "\n";
  }
  return 0;
}

int cmd_bench(const SourceOptions& src, const std::vector<std::size_t>& n_list,
              std::uint64_t seed, int reps, const std::string& csv_path) {
  std::vector<BenchRecord> records;
  if (!src.table_path.empty()) {
    if (!n_list.empty())
      throw std::invalid_argument("bench: --n-list cannot be used with --table");
    records.push_back(run_bench_one(load_truth_table(src.table_path), seed, reps));
  } else {
    if (src.family.empty())
      throw std::invalid_argument("bench: one of --family or --table is required");
    if (n_list.empty())
      throw std::invalid_argument("bench: --n-list is required with --family");
    const Family kind = parse_family(src.family);
    std::uint64_t param = 0;
    if (kind == Family::BitK) param = src.k;
    if (kind == Family::MaskedParity) param = src.mask;
    records = run_bench(FamilyConfig{kind, param}, n_list, seed, reps);
  }

  for (const auto& r : records) {
    char wall[64];
    std::snprintf(wall, sizeof(wall), "%.6g", r.wall_seconds);
    std::cout << "n=" << r.n << " family=" << r.family << " wall_seconds=" << wall
              << " state_bytes=" << r.state_bytes << " queries=" << r.queries
              << " verdict=" << to_string(r.verdict) << "\n";
  }
  if (!csv_path.empty()) {
    std::ofstream out(csv_path, std::ios::binary);
    if (!out) throw std::invalid_argument("bench: cannot open " + csv_path);
    write_csv(out, records);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Deterministic one-query Deutsch-Jozsa solver in an extended Spekkens "
      "toy model, with a statevector reference and classical baselines"};
  app.require_subcommand(1);

  SourceOptions run_src, query_src, bench_src;
  std::uint64_t run_seed = 0, query_seed = 0, validate_seed = 0, bench_seed = 0;
  std::uint64_t query_x = 0, validate_samples = 0;
  std::size_t validate_n = 0, enumerate_n = 0;
  std::vector<std::size_t> bench_n_list;
  int bench_reps = 5;
  std::string bench_csv;

  auto* run_cmd =
      app.add_subcommand("run", "Classify a promise function with one oracle query");
  add_source_options(run_cmd, run_src);
  run_cmd->add_option("--seed", run_seed, "PRNG seed (default 0)");

  auto* query_cmd =
      app.add_subcommand("query", "Evaluate f(x) through the oracle");
  add_source_options(query_cmd, query_src);
  query_cmd->add_option("--x", query_x, "Input value")->required();
  query_cmd->add_option("--seed", query_seed, "PRNG seed (default 0)");

  auto* validate_cmd = app.add_subcommand(
      "validate", "Cross-check the toy protocol against the quantum circuit");
  validate_cmd->add_option("--n", validate_n, "Input width (1..12)")->required();
  validate_cmd->add_option("--samples", validate_samples,
                           "Random balanced tables (exhaustive if omitted, n <= 4)");
  validate_cmd->add_option("--seed", validate_seed, "PRNG seed (default 0)");

  auto* enumerate_cmd = app.add_subcommand(
      "enumerate", "Sweep every promise function at small n (max 4)");
  enumerate_cmd->add_option("--n", enumerate_n, "Input width (1..4)")->required();

  auto* bench_cmd =
      app.add_subcommand("bench", "Measure protocol scaling across input widths");
  add_source_options(bench_cmd, bench_src);
  bench_cmd->add_option("--n-list", bench_n_list, "Comma-separated widths, ascending")
      ->delimiter(',');
  bench_cmd->add_option("--seed", bench_seed, "PRNG seed (default 0)");
  bench_cmd->add_option("--reps", bench_reps, "Repetitions per width (default 5)");
  bench_cmd->add_option("--csv", bench_csv, "Write records as CSV to this file");

  int exit_code = 0;
  run_cmd->callback([&] { exit_code = cmd_run(run_src, run_seed); });
  query_cmd->callback(
      [&] { exit_code = cmd_query(query_src, query_x, query_seed); });
  validate_cmd->callback(
      [&] { exit_code = cmd_validate(validate_n, validate_samples, validate_seed); });
  enumerate_cmd->callback([&] { exit_code = cmd_enumerate(enumerate_n); });
  bench_cmd->callback([&] {
    exit_code = cmd_bench(bench_src, bench_n_list, bench_seed, bench_reps, bench_csv);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const PromiseViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPromise;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return exit_code;
}
