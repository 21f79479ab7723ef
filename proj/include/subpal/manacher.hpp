#ifndef SUBPAL_MANACHER_HPP
#define SUBPAL_MANACHER_HPP

#include "subpal/symbol.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace subpal {

/// Selects which palindromes a ManacherState tracks.
enum class Parity : std::uint8_t {
  Odd = 0,
  Even = 1,
};

/// Online Manacher structure for one parity.
///
/// Maintains the radius of the maximal odd (or even) suffix-palindrome of the
/// text consumed so far. The text is stored 1-based with the sentinel at
/// position 1; position 0 of both internal arrays is unused padding so the
/// index arithmetic reads like the textbook formulation.
///
/// Radii follow the usual convention: a subpalindrome w[l..r] has center
/// floor((l+r)/2) and radius floor((r-l+1)/2).
///
/// Amortized O(1) per letter; the combined inner-loop count of both parity
/// instances never exceeds four times the input length.
class ManacherState {
public:
  explicit ManacherState(Parity parity);

  /// Appends one input letter.
  void add_letter(ExtendedSymbol c);
  void add_letter(Symbol c) { add_letter(ExtendedSymbol::input(c)); }

  /// Length of the maximal suffix-palindrome of the tracked parity.
  /// Throws std::logic_error before the first add_letter.
  std::size_t max_pal() const;

  /// Inner-loop iterations since construction.
  std::uint64_t loop_iterations() const noexcept { return loop_iters_; }

  Parity parity() const noexcept { return parity_; }

  /// Number of input letters consumed (excludes the sentinel).
  std::size_t size() const noexcept { return n_ - 1; }

  /// Current center candidate, in internal 1-based text coordinates.
  std::size_t center() const noexcept { return i_; }

  /// Internal length of the text including the sentinel.
  std::size_t internal_length() const noexcept { return n_; }

  /// Radius stored at internal position `j` (zero if never written).
  std::size_t radius_at(std::size_t j) const noexcept {
    return j < rad_.size() ? rad_[j] : 0;
  }

  /// Raw radius array; index 0 is padding, index 1 the sentinel.
  std::span<const std::size_t> radii() const noexcept { return rad_; }

  friend bool operator==(const ManacherState &, const ManacherState &) = default;

private:
  std::size_t &rad(std::size_t j);

  std::vector<ExtendedSymbol> text_;
  std::vector<std::size_t> rad_;
  std::size_t n_ = 1;
  std::size_t i_ = 2;
  Parity parity_;
  std::uint64_t loop_iters_ = 0;
};

} // namespace subpal

#endif // SUBPAL_MANACHER_HPP
