#include "subpal/oracle.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle = subpal::oracle;
using oracle::LengthParity;
using subpal::Span;
using subpal::Symbol;
using subpal::to_word;
using subpal::Word;

namespace {

std::vector<std::string> values(const oracle::PalindromeSet &set) {
  std::vector<std::string> out;
  for (const auto &e : set) out.emplace_back(e.value.begin(), e.value.end());
  return out;
}

} // namespace

TEST_CASE("is_palindrome") {
  CHECK(oracle::is_palindrome(to_word("")));
  CHECK(oracle::is_palindrome(to_word("daad")));
  CHECK(oracle::is_palindrome(to_word("aba")));
  CHECK_FALSE(oracle::is_palindrome(to_word("ab")));
}

TEST_CASE("distinct subpalindromes of the worked example") {
  const auto set = oracle::naive_distinct_subpalindromes(to_word("abadaadcaa"));
  REQUIRE(set.size() == 8);
  const std::vector<Span> spans{{1, 1}, {2, 2}, {1, 3}, {4, 4}, {3, 5}, {5, 6}, {4, 7}, {8, 8}};
  for (std::size_t k = 0; k < spans.size(); ++k) CHECK(set[k].first_occurrence == spans[k]);
  CHECK(values(set) ==
        std::vector<std::string>{"a", "b", "aba", "d", "ada", "aa", "daad", "c"});
}

TEST_CASE("distinct subpalindromes, small cases") {
  CHECK(oracle::naive_distinct_subpalindromes(to_word("")).empty());
  CHECK(values(oracle::naive_distinct_subpalindromes(to_word("aaaa"))) ==
        std::vector<std::string>{"a", "aa", "aaa", "aaaa"});
}

TEST_CASE("max suffix palindrome") {
  CHECK(oracle::naive_max_suffix_palindrome(to_word("abadaa"), LengthParity::Any) == 2);
  CHECK(oracle::naive_max_suffix_palindrome(to_word("abadaad"), LengthParity::Even) == 4);
  CHECK(oracle::naive_max_suffix_palindrome(to_word("z"), LengthParity::Odd) == 1);
  CHECK(oracle::naive_max_suffix_palindrome(to_word("ab"), LengthParity::Even) == 0);
  CHECK(oracle::naive_max_suffix_palindrome(to_word(""), LengthParity::Even) == 0);
  CHECK_THROWS_AS(oracle::naive_max_suffix_palindrome(to_word(""), LengthParity::Any),
                  std::invalid_argument);
}

TEST_CASE("min unique suffix") {
  CHECK(oracle::naive_min_unique_suffix(to_word("abadaadcaa")) == 3);
  CHECK(oracle::naive_min_unique_suffix(to_word("a")) == 1);
  CHECK(oracle::naive_min_unique_suffix(to_word("aaa")) == 3);
  CHECK_THROWS_AS(oracle::naive_min_unique_suffix(to_word("")), std::invalid_argument);
}

TEST_CASE("palindromic closure") {
  CHECK(oracle::naive_palindromic_closure(to_word("abad")) == to_word("abadaba"));
  CHECK(oracle::naive_palindromic_closure(to_word("aba")) == to_word("aba"));
  CHECK(oracle::naive_palindromic_closure(to_word("abadaa")) == to_word("abadaadaba"));
  CHECK(oracle::naive_palindromic_closure(to_word("abada")).size() == 7);
  CHECK(oracle::naive_palindromic_closure(to_word("")).empty());
}

TEST_CASE("closure construction matches the exhaustive search") {
  for (std::size_t len = 0; len <= 10; ++len) {
    for (std::size_t bits = 0; bits < (std::size_t{1} << (2 * len)); bits += (len > 6 ? 7 : 1)) {
      Word w(len);
      for (std::size_t k = 0; k < len; ++k) w[k] = 'a' + ((bits >> (2 * k)) % 3);
      const Word closure = oracle::naive_palindromic_closure(w);
      REQUIRE(closure == oracle::brute_force_palindromic_closure(w));
      REQUIRE(oracle::is_palindrome(closure));
      REQUIRE(std::equal(w.begin(), w.end(), closure.begin()));
      if (!w.empty())
        REQUIRE(closure.size() ==
                2 * w.size() - oracle::naive_max_suffix_palindrome(w, LengthParity::Any));
    }
  }
}

TEST_CASE("gen_abx") {
  const Word c{'c'};
  CHECK(oracle::gen_abx('a', 'b', c) == to_word("abc"));
  const Word xs{'c', 'd', 'c'};
  const Word w = oracle::gen_abx('a', 'b', xs);
  CHECK(w == to_word("abcabdabc"));
  CHECK(values(oracle::naive_distinct_subpalindromes(w)) ==
        std::vector<std::string>{"a", "b", "c", "d"});
  CHECK_THROWS_AS(oracle::gen_abx('a', 'a', c), std::invalid_argument);
  const Word bad{'c', 'b'};
  CHECK_THROWS_AS(oracle::gen_abx('a', 'b', bad), std::invalid_argument);
}

TEST_CASE("abx words have only single-letter palindromes") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<Symbol> letter(2, 2 + trial % 10);
    Word xs(1 + trial % 12);
    for (Symbol &x : xs) x = letter(rng);
    const Word w = oracle::gen_abx(0, 1, xs);
    for (const auto &e : oracle::naive_distinct_subpalindromes(w)) REQUIRE(e.value.size() == 1);
  }
}

TEST_CASE("count bound holds on all short words") {
  for (std::size_t len = 0; len <= 10; ++len) {
    for (std::size_t bits = 0; bits < (std::size_t{1} << len); ++bits) {
      Word w(len);
      for (std::size_t k = 0; k < len; ++k) w[k] = (bits >> k) & 1;
      REQUIRE(oracle::naive_distinct_subpalindromes(w).size() <= len);
    }
  }
}

TEST_CASE("reference trace equals the literal trace") {
  std::mt19937 rng(23);
  for (std::size_t len = 0; len <= 10; ++len) {
    for (std::size_t bits = 0; bits < (std::size_t{1} << len); ++bits) {
      Word w(len);
      for (std::size_t k = 0; k < len; ++k) w[k] = (bits >> k) & 1;
      REQUIRE(oracle::reference_trace(w) == oracle::naive_trace(w));
    }
  }
  for (Symbol sigma : {Symbol{1}, Symbol{3}, Symbol{5}}) {
    std::uniform_int_distribution<Symbol> letter(0, sigma - 1);
    for (int trial = 0; trial < 50; ++trial) {
      Word w(1 + trial % 30);
      for (Symbol &c : w) c = letter(rng);
      REQUIRE(oracle::reference_trace(w) == oracle::naive_trace(w));
    }
  }
}

TEST_CASE("worked example through the reference trace") {
  const auto trace = oracle::reference_trace(to_word("abadaadcaa"));
  std::vector<std::size_t> max_pal, mus, closure;
  for (const auto &s : trace) {
    max_pal.push_back(s.max_pal);
    mus.push_back(s.min_unique_suff);
    closure.push_back(s.closure_len);
  }
  CHECK(max_pal == std::vector<std::size_t>{1, 1, 3, 1, 3, 2, 4, 1, 1, 2});
  CHECK(mus == std::vector<std::size_t>{1, 1, 2, 1, 2, 2, 3, 1, 2, 3});
  CHECK(closure == std::vector<std::size_t>{1, 3, 3, 7, 7, 10, 10, 15, 17, 18});
  CHECK(trace.back().distinct_count == 8);
}

TEST_CASE("compare_step names the differing field") {
  const auto want = oracle::reference_trace(to_word("aba"));
  subpal::StepReport got;
  got.n = 3;
  got.max_pal_odd = 3;
  got.max_pal = 3;
  got.min_unique_suff = 2;
  got.closure_len = 3;
  got.distinct_count = 3;
  got.new_palindrome = Span{1, 3};
  CHECK_FALSE(oracle::compare_step(got, want[2]).has_value());
  got.new_palindrome.reset();
  const auto err = oracle::compare_step(got, want[2]);
  REQUIRE(err.has_value());
  CHECK(err->find("new") != std::string::npos);
}

TEST_CASE("describe") {
  CHECK(oracle::describe(to_word("ab")) == "\"ab\"");
  const Word ids{0, 17};
  CHECK(oracle::describe(ids) == "[0 17]");
}
