#include "subpal/manacher.hpp"

#include <doctest.h>

#include <cstddef>
#include <stdexcept>
#include <string_view>
#include <vector>

using subpal::ExtendedSymbol;
using subpal::ManacherState;
using subpal::Parity;
using subpal::Symbol;
using subpal::Word;

namespace {

std::vector<std::size_t> max_pal_row(Parity parity, std::string_view text) {
  ManacherState m(parity);
  std::vector<std::size_t> row;
  for (unsigned char ch : text) {
    m.add_letter(Symbol{ch});
    row.push_back(m.max_pal());
  }
  return row;
}

ManacherState fed(Parity parity, const Word &w) {
  ManacherState m(parity);
  for (Symbol c : w) m.add_letter(c);
  return m;
}

// Largest radius of a palindrome of the given parity centered at 0-based
// position p of w, under the floor((l+r)/2) center convention.
std::size_t brute_radius(const Word &w, std::size_t p, Parity parity) {
  std::size_t r = 0;
  if (parity == Parity::Odd) {
    while (p >= r + 1 && p + r + 1 < w.size() && w[p - r - 1] == w[p + r + 1]) ++r;
  } else {
    while (p >= r && p + r + 1 < w.size() && w[p - r] == w[p + r + 1]) ++r;
  }
  return r;
}

std::size_t brute_max_suffix(const Word &w, Parity parity) {
  for (std::size_t len = w.size(); len > 0; --len) {
    if ((len % 2 == 1) != (parity == Parity::Odd)) continue;
    bool pal = true;
    for (std::size_t k = 0; k < len / 2 && pal; ++k)
      pal = w[w.size() - len + k] == w[w.size() - 1 - k];
    if (pal) return len;
  }
  return 0;
}

// Every word of length `len` over the first `sigma` letters of 'a'..
std::vector<Word> all_words(std::size_t len, Symbol sigma) {
  std::vector<Word> out;
  Word w(len, 'a');
  while (true) {
    out.push_back(w);
    std::size_t k = len;
    while (k > 0 && w[k - 1] == 'a' + sigma - 1) w[--k] = 'a';
    if (k == 0) break;
    ++w[k - 1];
  }
  return out;
}

} // namespace

TEST_CASE("fresh state matches the initialization") {
  for (Parity parity : {Parity::Odd, Parity::Even}) {
    ManacherState m(parity);
    CHECK(m.internal_length() == 1);
    CHECK(m.center() == 2);
    CHECK(m.loop_iterations() == 0);
    CHECK(m.size() == 0);
    CHECK(m.parity() == parity);
    CHECK(m.radius_at(2) == 0);
    CHECK_THROWS_AS((void)m.max_pal(), std::logic_error);
  }
}

TEST_CASE("sentinel is rejected as input") {
  ManacherState m(Parity::Odd);
  CHECK_THROWS_AS(m.add_letter(ExtendedSymbol::sentinel()), std::invalid_argument);
  CHECK(m.loop_iterations() == 0);
  m.add_letter(Symbol{0});
  CHECK(m.max_pal() == 1);
}

TEST_CASE("worked example abadaadcaa") {
  CHECK(max_pal_row(Parity::Odd, "abadaadcaa") ==
        std::vector<std::size_t>{1, 1, 3, 1, 3, 1, 1, 1, 1, 1});
  CHECK(max_pal_row(Parity::Even, "abadaadcaa") ==
        std::vector<std::size_t>{0, 0, 0, 0, 0, 2, 4, 0, 0, 2});

  // Listed radii cover input positions 1..10, i.e. internal positions 2..11.
  const Word w = subpal::to_word("abadaadcaa");
  const std::vector<std::size_t> odd_rad{0, 1, 0, 1, 0, 0, 0, 0, 0, 0};
  const std::vector<std::size_t> even_rad{0, 0, 0, 0, 2, 0, 0, 0, 1, 0};
  const ManacherState odd = fed(Parity::Odd, w);
  const ManacherState even = fed(Parity::Even, w);
  for (std::size_t k = 0; k < 10; ++k) {
    CAPTURE(k);
    CHECK(odd.radius_at(k + 2) == odd_rad[k]);
    CHECK(even.radius_at(k + 2) == even_rad[k]);
  }
}

TEST_CASE("small cases") {
  CHECK(max_pal_row(Parity::Odd, "aba").back() == 3);
  CHECK(max_pal_row(Parity::Even, "a").back() == 0);
  CHECK(max_pal_row(Parity::Odd, "z").back() == 1);
}

TEST_CASE("loop count on aaaa, stepped by hand") {
  // Letter 1 skips the loop; letter 2 takes one pass and moves i to 3;
  // letter 3 extends rad[3] on the first pass; letter 4 fails at center 3,
  // then extends rad[4]. Total 0 + 1 + 1 + 2.
  ManacherState m(Parity::Odd);
  const std::vector<std::uint64_t> expected{0, 1, 2, 4};
  const std::vector<std::size_t> max_pal{1, 1, 3, 3};
  for (std::size_t k = 0; k < 4; ++k) {
    m.add_letter(Symbol{'a'});
    CHECK(m.loop_iterations() == expected[k]);
    CHECK(m.max_pal() == max_pal[k]);
  }
  CHECK(m.center() == 4);
  CHECK(m.radius_at(3) == 1);
  CHECK(m.radius_at(4) == 1);
}

TEST_CASE("every byte value, including 0 and 255, is an ordinary letter") {
  ManacherState m(Parity::Odd);
  for (Symbol c : {Symbol{0}, Symbol{255}, Symbol{0}}) m.add_letter(c);
  CHECK(m.max_pal() == 3);
}

TEST_CASE("agrees with brute force on all short words") {
  for (Symbol sigma : {Symbol{2}, Symbol{3}}) {
    const std::size_t max_len = sigma == 2 ? 11 : 7;
    for (std::size_t len = 1; len <= max_len; ++len) {
      for (const Word &w : all_words(len, sigma)) {
        ManacherState odd(Parity::Odd), even(Parity::Even);
        Word prefix;
        for (Symbol c : w) {
          odd.add_letter(c);
          even.add_letter(c);
          prefix.push_back(c);
          REQUIRE(odd.max_pal() == brute_max_suffix(prefix, Parity::Odd));
          REQUIRE(even.max_pal() == brute_max_suffix(prefix, Parity::Even));
          REQUIRE(odd.loop_iterations() + even.loop_iterations() <= 4 * prefix.size());
        }

        // Completed centers hold their final radius.
        for (const ManacherState *m : {&odd, &even}) {
          for (std::size_t j = 2; j < m->center(); ++j)
            REQUIRE(m->radius_at(j) == brute_radius(w, j - 2, m->parity()));
        }
      }
    }
  }
}

TEST_CASE("mirror symmetry of completed radii") {
  for (std::size_t len = 1; len <= 11; ++len) {
    for (const Word &w : all_words(len, 2)) {
      for (Parity parity : {Parity::Odd, Parity::Even}) {
        const ManacherState m = fed(parity, w);
        const std::size_t done = m.center();
        for (std::size_t c = 2; c < done; ++c) {
          const std::size_t r = m.radius_at(c);
          for (std::size_t k = 1; k <= r && c + k < done; ++k) {
            const std::size_t left = m.radius_at(c - k);
            if (left < r - k) REQUIRE(m.radius_at(c + k) == left);
            if (left > r - k) REQUIRE(m.radius_at(c + k) == r - k);
          }
        }
      }
    }
  }
}

TEST_CASE("identical input gives identical state") {
  const Word w = subpal::to_word("mississippi_ississim");
  CHECK(fed(Parity::Odd, w) == fed(Parity::Odd, w));
  CHECK(fed(Parity::Even, w) == fed(Parity::Even, w));
  CHECK_FALSE(fed(Parity::Odd, w) == fed(Parity::Odd, subpal::to_word("mississippi")));
}

TEST_CASE("loop count stays within 4n on long inputs") {
  for (std::string_view pattern : {"a", "ab", "aab", "abacaba", "abcd"}) {
    ManacherState odd(Parity::Odd), even(Parity::Even);
    const std::size_t n = 50000;
    for (std::size_t k = 0; k < n; ++k) {
      odd.add_letter(Symbol(static_cast<unsigned char>(pattern[k % pattern.size()])));
      even.add_letter(Symbol(static_cast<unsigned char>(pattern[k % pattern.size()])));
    }
    CAPTURE(pattern);
    CHECK(odd.loop_iterations() + even.loop_iterations() <= 4 * n);
  }
}
