#include "subpal/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <limits>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string_view>

namespace subpal::bench {

std::string_view to_string(Generator g) noexcept {
  switch (g) {
  case Generator::Random: return "random";
  case Generator::Abx: return "abx";
  case Generator::UniformA: return "uniform_a";
  case Generator::PaperExample: return "paper_example";
  }
  return "?";
}

std::optional<Generator> parse_generator(std::string_view text) noexcept {
  for (Generator g : {Generator::Random, Generator::Abx, Generator::UniformA,
                      Generator::PaperExample}) {
    if (text == to_string(g)) return g;
  }
  return std::nullopt;
}

std::optional<std::string> validate(const BenchConfig &config) {
  if (config.sizes.empty()) return "no sizes given";
  if (config.sizes.front() == 0) return "sizes must be positive";
  for (std::size_t k = 1; k < config.sizes.size(); ++k) {
    if (config.sizes[k] <= config.sizes[k - 1]) return "sizes must be strictly increasing";
  }
  if (config.repetitions < 1) return "repetitions must be at least 1";
  if (config.generator == Generator::Random && config.sigma < 1)
    return "random generator needs sigma >= 1";
  if (config.generator == Generator::Abx && config.sigma < 3)
    return "abx generator needs sigma >= 3";
  if (config.sigma > (std::size_t{1} << 32)) return "sigma exceeds the symbol range";
  return std::nullopt;
}

Word generate(Generator g, std::size_t sigma, std::size_t n, std::uint64_t seed) {
  Word w;
  w.reserve(n + 2);
  std::mt19937_64 rng(seed);
  switch (g) {
  case Generator::Random: {
    std::uniform_int_distribution<Symbol> letter(0, static_cast<Symbol>(sigma - 1));
    while (w.size() < n) w.push_back(letter(rng));
    break;
  }
  case Generator::Abx: {
    std::uniform_int_distribution<Symbol> letter(2, static_cast<Symbol>(sigma - 1));
    while (w.size() < n) {
      w.push_back(0);
      w.push_back(1);
      w.push_back(letter(rng));
    }
    break;
  }
  case Generator::UniformA:
    w.assign(n, 'a');
    break;
  case Generator::PaperExample: {
    constexpr std::string_view example = "abadaadcaa";
    for (std::size_t k = 0; k < n; ++k) w.push_back(static_cast<unsigned char>(example[k % example.size()]));
    break;
  }
  }
  w.resize(n);
  return w;
}

double BenchResult::symbols_per_second() const noexcept {
  return seconds_min > 0 ? static_cast<double>(n) / seconds_min : 0.0;
}

bool BenchResult::manacher_bound_holds() const noexcept {
  return summary.manacher_loop_total() <= 4 * static_cast<std::uint64_t>(n);
}

bool BenchResult::node_bound_holds() const noexcept {
  return summary.tree.explicit_nodes <= 2 * static_cast<std::uint64_t>(n);
}

double time_once(std::span<const Symbol> input, ChildStorageMode mode, DetectorSummary *summary) {
  Detector detector(mode);
  const auto start = std::chrono::steady_clock::now();
  for (Symbol c : input) detector.push(c);
  const auto stop = std::chrono::steady_clock::now();
  if (summary != nullptr) *summary = detector.finish();
  return std::chrono::duration<double>(stop - start).count();
}

double doubling_ratio(Generator g, std::size_t sigma, std::size_t n, ChildStorageMode mode,
                      unsigned rounds, std::uint64_t seed) {
  const Word small = generate(g, sigma, n, seed);
  const Word large = generate(g, sigma, 2 * n, seed);
  double best_small = std::numeric_limits<double>::infinity();
  double best_large = best_small;
  for (unsigned k = 0; k < rounds; ++k) {
    best_small = std::min(best_small, time_once(small, mode));
    best_large = std::min(best_large, time_once(large, mode));
  }
  return best_large / best_small;
}

BenchResult run_one(const BenchConfig &config, std::size_t n) {
  if (auto err = validate(config)) throw std::invalid_argument(*err);
  const Word input = generate(config.generator, config.sigma, n, config.seed);

  BenchResult r;
  r.generator = config.generator;
  r.sigma = config.sigma;
  r.mode = config.mode;
  r.n = n;
  r.repetitions = config.repetitions;

  std::vector<double> seconds;
  for (unsigned rep = 0; rep < config.repetitions; ++rep)
    seconds.push_back(time_once(input, config.mode, &r.summary));
  std::sort(seconds.begin(), seconds.end());
  r.seconds_min = seconds.front();
  r.seconds_median = seconds[seconds.size() / 2];
  return r;
}

std::vector<BenchResult> run(const BenchConfig &config) {
  if (auto err = validate(config)) throw std::invalid_argument(*err);
  std::vector<BenchResult> out;
  for (std::size_t n : config.sizes) out.push_back(run_one(config, n));
  return out;
}

nlohmann::ordered_json to_json(const BenchResult &r) {
  nlohmann::ordered_json j;
  j["generator"] = to_string(r.generator);
  j["sigma"] = r.sigma;
  j["mode"] = subpal::to_string(r.mode);
  j["n"] = r.n;
  j["repetitions"] = r.repetitions;
  j["seconds_min"] = r.seconds_min;
  j["seconds_median"] = r.seconds_median;
  j["symbols_per_second"] = r.symbols_per_second();
  j["distinct_count"] = r.summary.distinct_count;
  j["manacher_loop_odd"] = r.summary.manacher_loop_odd;
  j["manacher_loop_even"] = r.summary.manacher_loop_even;
  j["manacher_bound_ok"] = r.manacher_bound_holds();
  j["explicit_nodes"] = r.summary.tree.explicit_nodes;
  j["leaves"] = r.summary.tree.leaves;
  j["internal_nodes"] = r.summary.tree.internal_nodes;
  j["suffix_link_hops"] = r.summary.tree.suffix_link_hops;
  j["root_rewalks"] = r.summary.tree.root_rewalks;
  j["child_probes"] = r.summary.tree.child_probes;
  j["node_bound_ok"] = r.node_bound_holds();
  return j;
}

void write_table(std::ostream &out, const std::vector<BenchResult> &results) {
  char line[256];
  std::snprintf(line, sizeof line, "%-14s %8s %-9s %10s %11s %13s %10s %10s %14s\n", "generator",
                "sigma", "mode", "n", "seconds", "symbols/s", "loops/n", "nodes/n",
                "probes/n");
  out << line;
  for (const BenchResult &r : results) {
    const double n = static_cast<double>(r.n);
    std::snprintf(line, sizeof line,
                  "%-14s %8zu %-9s %10zu %11.6f %13.0f %10.3f %10.3f %14.3f\n",
                  std::string(to_string(r.generator)).c_str(), r.sigma,
                  std::string(subpal::to_string(r.mode)).c_str(), r.n, r.seconds_min,
                  r.symbols_per_second(),
                  static_cast<double>(r.summary.manacher_loop_total()) / n,
                  static_cast<double>(r.summary.tree.explicit_nodes) / n,
                  static_cast<double>(r.summary.tree.child_probes) / n);
    out << line;
  }
}

} // namespace subpal::bench
