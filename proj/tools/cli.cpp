#include "cli.hpp"

#include "subpal/bench.hpp"
#include "subpal/detector.hpp"
#include "subpal/oracle.hpp"
#include "subpal/record.hpp"
#include "subpal/selftest.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <unordered_map>

namespace subpal::cli {

namespace {

struct RunOptions {
  std::string format = "table";
  std::string mode = "ordered";
  bool tokens = false;
  bool raw = false;
  std::string file;
};

struct BenchOptions {
  std::string generator = "random";
  std::size_t sigma = 2;
  std::vector<std::size_t> sizes;
  std::string mode = "ordered";
  unsigned reps = 1;
  std::uint64_t seed = 1;
};

/// Feeds every symbol of `in` to a detector, writing one record per symbol.
/// Bytes by default (line breaks skipped unless `raw`); whitespace-separated
/// tokens interned in order of first appearance with `tokens`.
int stream_records(std::istream &in, std::ostream &out, const RunOptions &opts,
                   OutputFormat format, ChildStorageMode mode, bool flush_each) {
  Detector detector(mode);
  if (format == OutputFormat::Table) out << table_header() << '\n';

  auto emit = [&](Symbol c) {
    out << format_record(detector.push(c), format) << '\n';
    if (flush_each) out.flush();
  };

  if (opts.tokens) {
    std::unordered_map<std::string, Symbol> ids;
    std::string token;
    while (in >> token) {
      auto [it, inserted] = ids.try_emplace(token, static_cast<Symbol>(ids.size()));
      emit(it->second);
    }
  } else {
    std::streambuf *buf = in.rdbuf();
    for (int ch = buf->sbumpc(); ch != std::char_traits<char>::eof(); ch = buf->sbumpc()) {
      if (!opts.raw && (ch == '\n' || ch == '\r')) continue;
      emit(static_cast<unsigned char>(ch));
    }
  }
  out.flush();
  return kExitOk;
}

int cmd_run(const RunOptions &opts, std::istream &in, std::ostream &out, std::ostream &err) {
  const auto format = parse_output_format(opts.format);
  const auto mode = parse_child_storage_mode(opts.mode);
  if (!format || !mode) {
    err << "subpal run: invalid --format or --mode\n";
    return kExitInputError;
  }
  if (opts.file.empty() || opts.file == "-")
    return stream_records(in, out, opts, *format, *mode, true);

  std::ifstream file(opts.file, std::ios::binary);
  if (!file) {
    err << "subpal run: cannot open '" << opts.file << "'\n";
    return kExitInputError;
  }
  return stream_records(file, out, opts, *format, *mode, false);
}

int cmd_bench(const BenchOptions &opts, std::ostream &out, std::ostream &err) {
  bench::BenchConfig config;
  const auto generator = bench::parse_generator(opts.generator);
  const auto mode = parse_child_storage_mode(opts.mode);
  if (!generator || !mode) {
    err << "subpal bench: invalid --gen or --mode\n";
    return kExitInputError;
  }
  config.generator = *generator;
  config.mode = *mode;
  config.sigma = opts.sigma;
  config.sizes = opts.sizes;
  config.repetitions = opts.reps;
  config.seed = opts.seed;
  if (auto problem = bench::validate(config)) {
    err << "subpal bench: " << *problem << '\n';
    return kExitInputError;
  }

  const auto results = bench::run(config);
  bool bounds_ok = true;
  for (const auto &r : results) {
    out << bench::to_json(r).dump() << '\n';
    bounds_ok = bounds_ok && r.manacher_bound_holds() && r.node_bound_holds();
  }
  bench::write_table(err, results);
  if (!bounds_ok) {
    err << "subpal bench: an amortization bound was exceeded\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

int cmd_selftest(std::size_t max_length, std::ostream &out, std::ostream &err) {
  const SelftestResult result = run_selftest(max_length);
  if (!result.ok) {
    err << "selftest FAILED: " << result.message << '\n';
    if (result.counterexample)
      err << "counterexample: " << oracle::describe(*result.counterexample) << '\n';
    return kExitCheckFailed;
  }
  out << "selftest passed: " << result.message << '\n';
  return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
            std::ostream &err) {
  CLI::App app{"Online detection of distinct palindromes"};
  app.require_subcommand(1);

  RunOptions run_opts;
  auto *run = app.add_subcommand("run", "Report every prefix of the input");
  run->add_option("--format", run_opts.format, "table or jsonl")
      ->check(CLI::IsMember({"table", "jsonl"}));
  run->add_option("--mode", run_opts.mode, "Child storage: ordered or unordered")
      ->check(CLI::IsMember({"ordered", "unordered"}));
  run->add_flag("--tokens", run_opts.tokens, "Whitespace-separated tokens instead of bytes");
  run->add_flag("--raw", run_opts.raw, "Keep line breaks as input bytes");
  run->add_option("FILE", run_opts.file, "Input file (default: standard input)");

  BenchOptions bench_opts;
  auto *bench = app.add_subcommand("bench", "Time the detector on generated input");
  bench->add_option("--gen", bench_opts.generator, "random, abx, uniform_a or paper_example")
      ->check(CLI::IsMember({"random", "abx", "uniform_a", "paper_example"}));
  bench->add_option("--sigma", bench_opts.sigma, "Alphabet size");
  bench->add_option("--sizes", bench_opts.sizes, "Input lengths, comma separated")
      ->delimiter(',')
      ->required();
  bench->add_option("--mode", bench_opts.mode, "ordered or unordered")
      ->check(CLI::IsMember({"ordered", "unordered"}));
  bench->add_option("--reps", bench_opts.reps, "Repetitions per size");
  bench->add_option("--seed", bench_opts.seed, "Generator seed");

  std::size_t max_length = 12;
  auto *selftest = app.add_subcommand("selftest", "Check the detector against brute force");
  selftest->add_option("--max-length", max_length, "Longest binary word in the sweep");

  std::vector<const char *> argv;
  for (const std::string &a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "subpal: " << e.what() << '\n';
    return kExitInputError;
  }

  if (*run) return cmd_run(run_opts, in, out, err);
  if (*bench) return cmd_bench(bench_opts, out, err);
  return cmd_selftest(max_length, out, err);
}

} // namespace subpal::cli
