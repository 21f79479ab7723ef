#include "subpal/selftest.hpp"

#include "subpal/oracle.hpp"

#include <array>
#include <sstream>

namespace subpal {

namespace {

struct GoldenRow {
  std::size_t odd, even, max_pal, min_unique;
  std::optional<Span> detected;
};

// Worked example: w = abadaadcaa.
constexpr std::array<GoldenRow, 10> kGolden{{
    {1, 0, 1, 1, Span{1, 1}},
    {1, 0, 1, 1, Span{2, 2}},
    {3, 0, 3, 2, Span{1, 3}},
    {1, 0, 1, 1, Span{4, 4}},
    {3, 0, 3, 2, Span{3, 5}},
    {1, 2, 2, 2, Span{5, 6}},
    {1, 4, 4, 3, Span{4, 7}},
    {1, 0, 1, 1, Span{8, 8}},
    {1, 0, 1, 2, std::nullopt},
    {1, 2, 2, 3, std::nullopt},
}};

std::optional<std::string> check_golden(const std::vector<StepReport> &got) {
  if (got.size() != kGolden.size()) return "golden example: wrong number of steps";
  for (std::size_t k = 0; k < kGolden.size(); ++k) {
    const GoldenRow &want = kGolden[k];
    const StepReport &r = got[k];
    if (r.max_pal_odd != want.odd || r.max_pal_even != want.even || r.max_pal != want.max_pal ||
        r.min_unique_suff != want.min_unique || r.new_palindrome != want.detected) {
      std::ostringstream msg;
      msg << "golden example differs at step " << k + 1;
      return msg.str();
    }
  }
  return std::nullopt;
}

} // namespace

SelftestResult run_selftest(std::size_t max_binary_length, const TraceFn &trace) {
  SelftestResult result;
  std::vector<TraceFn> runners;
  if (trace) {
    runners.push_back(trace);
  } else {
    for (ChildStorageMode mode : {ChildStorageMode::Ordered, ChildStorageMode::Unordered})
      runners.push_back([mode](std::span<const Symbol> w) { return detect_all(w, mode); });
  }

  auto fail = [&](Word w, std::string message) {
    result.ok = false;
    result.counterexample = std::move(w);
    result.message = std::move(message);
    return result;
  };

  const Word example = to_word("abadaadcaa");
  for (const TraceFn &run : runners) {
    if (auto err = check_golden(run(example))) return fail(example, *err);
  }
  ++result.words_checked;

  for (std::size_t len = 1; len <= max_binary_length; ++len) {
    Word w(len);
    for (std::size_t bits = 0; bits < (std::size_t{1} << len); ++bits) {
      for (std::size_t k = 0; k < len; ++k) w[k] = (bits >> (len - 1 - k)) & 1 ? 'b' : 'a';
      const auto expected = oracle::reference_trace(w);
      for (const TraceFn &run : runners) {
        if (auto err = oracle::compare_trace(run(w), expected)) return fail(w, *err);
      }
      ++result.words_checked;
    }
  }
  result.message = "all " + std::to_string(result.words_checked) + " words agree";
  return result;
}

} // namespace subpal
