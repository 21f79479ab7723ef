#ifndef SUBPAL_SELFTEST_HPP
#define SUBPAL_SELFTEST_HPP

#include "subpal/detector.hpp"
#include "subpal/symbol.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace subpal {

/// Produces the per-step reports for a whole word.
using TraceFn = std::function<std::vector<StepReport>(std::span<const Symbol>)>;

struct SelftestResult {
  bool ok = true;
  std::size_t words_checked = 0;
  std::optional<Word> counterexample;
  std::string message;
};

/// Checks the worked example "abadaadcaa" against its known rows, then every
/// word of length <= `max_binary_length` over {a, b} against the brute-force
/// reference, in both child-storage modes. `trace` replaces the detector
/// under test; by default a fresh Detector is used.
SelftestResult run_selftest(std::size_t max_binary_length = 12, const TraceFn &trace = {});

} // namespace subpal

#endif // SUBPAL_SELFTEST_HPP
