#ifndef SUBPAL_ORACLE_HPP
#define SUBPAL_ORACLE_HPP

// Brute-force references. Nothing here touches Manacher or the suffix tree;
// these functions are the ground truth the fast structures are tested against.

#include "subpal/detector.hpp"
#include "subpal/symbol.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace subpal::oracle {

enum class LengthParity { Odd, Even, Any };

bool is_palindrome(std::span<const Symbol> s);

struct PalindromeEntry {
  Word value;
  Span first_occurrence;

  friend bool operator==(const PalindromeEntry &, const PalindromeEntry &) = default;
};

/// Distinct non-empty palindromic substrings with their leftmost occurrence,
/// ordered by the end of that occurrence.
using PalindromeSet = std::vector<PalindromeEntry>;

/// Enumerates every substring; O(n^3).
PalindromeSet naive_distinct_subpalindromes(std::span<const Symbol> w);

/// Longest palindromic suffix of the requested parity. For Even the answer
/// may be 0 (the empty suffix). Throws std::invalid_argument for an empty `w`
/// with Odd or Any.
std::size_t naive_max_suffix_palindrome(std::span<const Symbol> w, LengthParity parity);

/// Shortest suffix with exactly one occurrence in `w`. Throws on empty `w`.
std::size_t naive_min_unique_suffix(std::span<const Symbol> w);

/// u v reverse(u), where v is the longest palindromic suffix of w = u v.
Word naive_palindromic_closure(std::span<const Symbol> w);

/// Shortest palindrome with prefix `w`, found by trying every length from
/// |w| upward. Independent of the u v reverse(u) construction.
Word brute_force_palindromic_closure(std::span<const Symbol> w);

/// a b x1 a b x2 ... a b xk. Throws std::invalid_argument if a == b or some
/// x equals a or b.
Word gen_abx(Symbol a, Symbol b, std::span<const Symbol> xs);

/// Expected per-prefix values for one letter of the input.
struct ReferenceStep {
  std::size_t n = 0;
  std::size_t max_pal_odd = 0;
  std::size_t max_pal_even = 0;
  std::size_t max_pal = 0;
  std::size_t min_unique_suff = 0;
  /// Every palindrome whose first occurrence ends at n, shortest first.
  std::vector<Span> new_palindromes;
  std::size_t closure_len = 0;
  std::size_t distinct_count = 0;

  friend bool operator==(const ReferenceStep &, const ReferenceStep &) = default;
};

/// Per-prefix expectations from the literal functions above. Roughly O(n^4);
/// intended for strings of a dozen letters.
std::vector<ReferenceStep> naive_trace(std::span<const Symbol> w);

/// Same values from two O(n^2) dynamic programs: palindromic substrings and
/// longest common suffixes of prefix pairs.
std::vector<ReferenceStep> reference_trace(std::span<const Symbol> w);

/// Describes the first field where `got` disagrees with `want`.
std::optional<std::string> compare_step(const StepReport &got, const ReferenceStep &want);

/// Compares two traces step by step, including their lengths.
std::optional<std::string> compare_trace(std::span<const StepReport> got,
                                         std::span<const ReferenceStep> expected);

/// Renders `w` for diagnostics: bytes if every symbol is printable ASCII,
/// otherwise space-separated ids.
std::string describe(std::span<const Symbol> w);

} // namespace subpal::oracle

#endif // SUBPAL_ORACLE_HPP
