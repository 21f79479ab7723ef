#ifndef SUBPAL_SYMBOL_HPP
#define SUBPAL_SYMBOL_HPP

#include <cstdint>
#include <string_view>
#include <vector>

namespace subpal {

/// An input letter. Bytes map to 0..255; token streams map to interned ids.
using Symbol = std::uint32_t;

/// A sequence of input letters.
using Word = std::vector<Symbol>;

/// An input symbol lifted into a domain with one out-of-band sentinel.
///
/// The sentinel is stored outside the 32-bit range of Symbol, so it compares
/// unequal to every input letter without reserving any real byte or token.
class ExtendedSymbol {
public:
  static constexpr ExtendedSymbol sentinel() noexcept {
    return ExtendedSymbol(kSentinel);
  }
  static constexpr ExtendedSymbol input(Symbol s) noexcept {
    return ExtendedSymbol(s);
  }

  constexpr bool is_sentinel() const noexcept { return raw_ == kSentinel; }
  constexpr Symbol value() const noexcept { return static_cast<Symbol>(raw_); }

  friend constexpr bool operator==(ExtendedSymbol, ExtendedSymbol) = default;

private:
  static constexpr std::uint64_t kSentinel = std::uint64_t{1} << 32;
  explicit constexpr ExtendedSymbol(std::uint64_t raw) noexcept : raw_(raw) {}
  std::uint64_t raw_;
};

/// Maps each byte of `text` to one Symbol.
inline Word to_word(std::string_view text) {
  Word w;
  w.reserve(text.size());
  for (unsigned char ch : text) w.push_back(ch);
  return w;
}

} // namespace subpal

#endif // SUBPAL_SYMBOL_HPP
