#ifndef SUBPAL_DETECTOR_HPP
#define SUBPAL_DETECTOR_HPP

#include "subpal/manacher.hpp"
#include "subpal/suffix_tree.hpp"
#include "subpal/symbol.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace subpal {

/// 1-based inclusive positions in the input.
struct Span {
  std::size_t first = 0;
  std::size_t last = 0;

  std::size_t length() const noexcept { return last - first + 1; }
  friend bool operator==(const Span &, const Span &) = default;
};

/// What the detector knows about the prefix ending at the latest letter.
struct StepReport {
  std::size_t n = 0;
  std::size_t max_pal_odd = 0;
  std::size_t max_pal_even = 0;
  std::size_t max_pal = 0;
  std::size_t min_unique_suff = 0;
  /// Set when the maximal suffix-palindrome has never occurred before.
  std::optional<Span> new_palindrome;
  /// Length of the shortest palindrome having the prefix as its prefix.
  std::size_t closure_len = 0;
  /// Distinct non-empty palindromes seen so far.
  std::size_t distinct_count = 0;

  friend bool operator==(const StepReport &, const StepReport &) = default;
};

struct DetectorSummary {
  std::size_t n = 0;
  std::size_t distinct_count = 0;
  std::uint64_t manacher_loop_odd = 0;
  std::uint64_t manacher_loop_even = 0;
  SuffixTreeCounters tree;

  std::uint64_t manacher_loop_total() const noexcept {
    return manacher_loop_odd + manacher_loop_even;
  }
};

/// Online detector of distinct palindromes.
///
/// Every letter goes to both Manacher parities and to the suffix tree. The
/// maximal suffix-palindrome is new exactly when it is at least as long as
/// the shortest suffix that occurs once.
class Detector {
public:
  explicit Detector(ChildStorageMode mode = ChildStorageMode::Ordered);

  StepReport push(Symbol c);

  DetectorSummary finish() const;

  std::size_t size() const noexcept { return n_; }
  std::size_t distinct_count() const noexcept { return distinct_count_; }

  const ManacherState &odd() const noexcept { return odd_; }
  const ManacherState &even() const noexcept { return even_; }
  const SuffixTree &tree() const noexcept { return tree_; }

private:
  ManacherState odd_;
  ManacherState even_;
  SuffixTree tree_;
  std::size_t n_ = 0;
  std::size_t distinct_count_ = 0;
};

/// Feeds `w` into a fresh detector and collects every report.
std::vector<StepReport> detect_all(std::span<const Symbol> w,
                                   ChildStorageMode mode = ChildStorageMode::Ordered);

} // namespace subpal

#endif // SUBPAL_DETECTOR_HPP
