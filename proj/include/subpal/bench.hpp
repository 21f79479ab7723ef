#ifndef SUBPAL_BENCH_HPP
#define SUBPAL_BENCH_HPP

#include "subpal/detector.hpp"
#include "subpal/suffix_tree.hpp"
#include "subpal/symbol.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace subpal::bench {

enum class Generator {
  Random,       ///< uniform letters from an alphabet of size sigma
  Abx,          ///< a b x1 a b x2 ..., x drawn from the other sigma - 2 letters
  UniformA,     ///< a single repeated letter
  PaperExample, ///< "abadaadcaa" repeated
};

std::string_view to_string(Generator g) noexcept;
std::optional<Generator> parse_generator(std::string_view text) noexcept;

struct BenchConfig {
  Generator generator = Generator::Random;
  std::size_t sigma = 2;
  ChildStorageMode mode = ChildStorageMode::Ordered;
  std::vector<std::size_t> sizes;
  unsigned repetitions = 1;
  std::uint64_t seed = 1;
};

/// Returns a description of the first problem, or nullopt if `config` is usable.
std::optional<std::string> validate(const BenchConfig &config);

/// Deterministic for a given (generator, sigma, n, seed).
Word generate(Generator g, std::size_t sigma, std::size_t n, std::uint64_t seed);

struct BenchResult {
  Generator generator = Generator::Random;
  std::size_t sigma = 0;
  ChildStorageMode mode = ChildStorageMode::Ordered;
  std::size_t n = 0;
  unsigned repetitions = 0;
  double seconds_min = 0;
  double seconds_median = 0;
  DetectorSummary summary;

  double symbols_per_second() const noexcept;
  /// Combined Manacher inner-loop count stays within 4n.
  bool manacher_bound_holds() const noexcept;
  /// Explicit suffix-tree vertices stay within 2n.
  bool node_bound_holds() const noexcept;
};

/// Wall-clock seconds for one fresh detector to consume `input`.
double time_once(std::span<const Symbol> input, ChildStorageMode mode,
                 DetectorSummary *summary = nullptr);

/// Wall-time ratio t(2n) / t(n) for a generator at fixed sigma. Runs of the
/// two sizes alternate for `rounds` rounds and the fastest run of each size
/// is used, so a slow period on a shared machine hits both sizes alike.
double doubling_ratio(Generator g, std::size_t sigma, std::size_t n, ChildStorageMode mode,
                      unsigned rounds, std::uint64_t seed);

/// Times the detector over generated input. Throws std::invalid_argument on
/// an invalid config.
BenchResult run_one(const BenchConfig &config, std::size_t n);
std::vector<BenchResult> run(const BenchConfig &config);

nlohmann::ordered_json to_json(const BenchResult &r);
void write_table(std::ostream &out, const std::vector<BenchResult> &results);

} // namespace subpal::bench

#endif // SUBPAL_BENCH_HPP
