#include "subpal/oracle.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace subpal::oracle {

bool is_palindrome(std::span<const Symbol> s) {
  return std::equal(s.begin(), s.end(), s.rbegin());
}

PalindromeSet naive_distinct_subpalindromes(std::span<const Symbol> w) {
  PalindromeSet out;
  std::set<Word> seen;
  for (std::size_t last = 0; last < w.size(); ++last) {
    for (std::size_t first = last + 1; first-- > 0;) {
      auto sub = w.subspan(first, last - first + 1);
      if (!is_palindrome(sub)) continue;
      Word value(sub.begin(), sub.end());
      if (seen.insert(value).second)
        out.push_back({std::move(value), Span{first + 1, last + 1}});
    }
  }
  return out;
}

std::size_t naive_max_suffix_palindrome(std::span<const Symbol> w, LengthParity parity) {
  if (w.empty() && parity != LengthParity::Even)
    throw std::invalid_argument("naive_max_suffix_palindrome: empty word has no odd suffix");
  for (std::size_t len = w.size(); len > 0; --len) {
    if (parity == LengthParity::Odd && len % 2 == 0) continue;
    if (parity == LengthParity::Even && len % 2 == 1) continue;
    if (is_palindrome(w.subspan(w.size() - len))) return len;
  }
  return 0;
}

std::size_t naive_min_unique_suffix(std::span<const Symbol> w) {
  if (w.empty()) throw std::invalid_argument("naive_min_unique_suffix: empty word");
  for (std::size_t len = 1; len <= w.size(); ++len) {
    auto suffix = w.subspan(w.size() - len);
    std::size_t occurrences = 0;
    for (std::size_t pos = 0; pos + len <= w.size(); ++pos) {
      if (std::equal(suffix.begin(), suffix.end(), w.begin() + pos)) ++occurrences;
    }
    if (occurrences == 1) return len;
  }
  return w.size();
}

Word naive_palindromic_closure(std::span<const Symbol> w) {
  Word out(w.begin(), w.end());
  if (w.empty()) return out;
  const std::size_t v = naive_max_suffix_palindrome(w, LengthParity::Any);
  const std::size_t u = w.size() - v;
  out.insert(out.end(), std::make_reverse_iterator(w.begin() + u), w.rend());
  return out;
}

Word brute_force_palindromic_closure(std::span<const Symbol> w) {
  const std::size_t n = w.size();
  for (std::size_t len = n; len <= 2 * n; ++len) {
    Word candidate(w.begin(), w.end());
    candidate.resize(len);
    for (std::size_t p = n; p < len; ++p) candidate[p] = candidate[len - 1 - p];
    if (is_palindrome(candidate)) return candidate;
  }
  return Word(w.begin(), w.end());
}

Word gen_abx(Symbol a, Symbol b, std::span<const Symbol> xs) {
  if (a == b) throw std::invalid_argument("gen_abx: a and b must differ");
  Word out;
  out.reserve(3 * xs.size());
  for (Symbol x : xs) {
    if (x == a || x == b)
      throw std::invalid_argument("gen_abx: every x must differ from a and b");
    out.push_back(a);
    out.push_back(b);
    out.push_back(x);
  }
  return out;
}

std::vector<ReferenceStep> naive_trace(std::span<const Symbol> w) {
  std::vector<ReferenceStep> out;
  PalindromeSet before;
  for (std::size_t n = 1; n <= w.size(); ++n) {
    auto prefix = w.first(n);
    ReferenceStep step;
    step.n = n;
    step.max_pal_odd = naive_max_suffix_palindrome(prefix, LengthParity::Odd);
    step.max_pal_even = naive_max_suffix_palindrome(prefix, LengthParity::Even);
    step.max_pal = naive_max_suffix_palindrome(prefix, LengthParity::Any);
    step.min_unique_suff = naive_min_unique_suffix(prefix);

    PalindromeSet now = naive_distinct_subpalindromes(prefix);
    for (const PalindromeEntry &e : now) {
      const bool known = std::any_of(before.begin(), before.end(),
                                     [&](const PalindromeEntry &b) { return b.value == e.value; });
      if (!known) step.new_palindromes.push_back(e.first_occurrence);
    }
    std::sort(step.new_palindromes.begin(), step.new_palindromes.end(),
              [](const Span &x, const Span &y) { return x.length() < y.length(); });
    step.distinct_count = now.size();
    step.closure_len = brute_force_palindromic_closure(prefix).size();
    out.push_back(std::move(step));
    before = std::move(now);
  }
  return out;
}

std::vector<ReferenceStep> reference_trace(std::span<const Symbol> w) {
  const std::size_t n = w.size();
  std::vector<ReferenceStep> out;
  out.reserve(n);

  // Column `last` of each table, computed from column `last - 1`.
  // pal[first]: w[first..last] is a palindrome.
  // common[j]: longest common suffix of w[0..j] and w[0..last], for j < last.
  std::vector<char> pal_prev(n, 0), pal(n, 0);
  std::vector<std::size_t> common_prev(n, 0), common(n, 0);
  std::size_t distinct = 0;

  for (std::size_t last = 0; last < n; ++last) {
    for (std::size_t first = 0; first <= last; ++first) {
      const bool ends_match = w[first] == w[last];
      pal[first] = ends_match && (last - first < 2 || pal_prev[first + 1]);
    }
    std::size_t repeated = 0;
    for (std::size_t j = 0; j < last; ++j) {
      common[j] = w[j] == w[last] ? (j == 0 ? 1 : common_prev[j - 1] + 1) : 0;
      repeated = std::max(repeated, common[j]);
    }

    ReferenceStep step;
    step.n = last + 1;
    for (std::size_t first = 0; first <= last; ++first) {
      if (!pal[first]) continue;
      const std::size_t len = last - first + 1;
      std::size_t &slot = len % 2 ? step.max_pal_odd : step.max_pal_even;
      slot = std::max(slot, len);
      if (len > repeated) step.new_palindromes.push_back(Span{first + 1, last + 1});
    }
    std::reverse(step.new_palindromes.begin(), step.new_palindromes.end());
    step.max_pal = std::max(step.max_pal_odd, step.max_pal_even);
    step.min_unique_suff = repeated + 1;
    distinct += step.new_palindromes.size();
    step.distinct_count = distinct;
    step.closure_len = 2 * step.n - step.max_pal;
    out.push_back(std::move(step));

    std::swap(pal, pal_prev);
    std::swap(common, common_prev);
  }
  return out;
}

namespace {

std::string span_text(const std::optional<Span> &s) {
  if (!s) return "none";
  return std::to_string(s->first) + "-" + std::to_string(s->last);
}

} // namespace

std::optional<std::string> compare_step(const StepReport &got, const ReferenceStep &want) {
  std::ostringstream msg;
  auto field = [&](const char *name, std::size_t g, std::size_t e) {
    if (g == e) return false;
    msg << "step " << want.n << ": " << name << " = " << g << ", expected " << e;
    return true;
  };
  if (field("n", got.n, want.n) || field("max_pal_odd", got.max_pal_odd, want.max_pal_odd) ||
      field("max_pal_even", got.max_pal_even, want.max_pal_even) ||
      field("max_pal", got.max_pal, want.max_pal) ||
      field("min_unique_suff", got.min_unique_suff, want.min_unique_suff) ||
      field("closure_len", got.closure_len, want.closure_len) ||
      field("distinct_count", got.distinct_count, want.distinct_count))
    return msg.str();

  std::optional<Span> expected;
  if (want.new_palindromes.size() > 1) {
    msg << "step " << want.n << ": " << want.new_palindromes.size()
        << " new palindromes end here, a detector reports at most one";
    return msg.str();
  }
  if (!want.new_palindromes.empty()) expected = want.new_palindromes.front();
  if (got.new_palindrome != expected) {
    msg << "step " << want.n << ": new = " << span_text(got.new_palindrome) << ", expected "
        << span_text(expected);
    return msg.str();
  }
  return std::nullopt;
}

std::optional<std::string> compare_trace(std::span<const StepReport> got,
                                         std::span<const ReferenceStep> expected) {
  if (got.size() != expected.size())
    return "trace has " + std::to_string(got.size()) + " steps, expected " +
           std::to_string(expected.size());
  for (std::size_t k = 0; k < got.size(); ++k) {
    if (auto err = compare_step(got[k], expected[k])) return err;
  }
  return std::nullopt;
}

std::string describe(std::span<const Symbol> w) {
  const bool printable =
      std::all_of(w.begin(), w.end(), [](Symbol s) { return s >= 0x20 && s < 0x7f; });
  std::string out;
  if (printable) {
    out.push_back('"');
    for (Symbol s : w) out.push_back(static_cast<char>(s));
    out.push_back('"');
    return out;
  }
  out.push_back('[');
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out.push_back(' ');
    out += std::to_string(w[k]);
  }
  out.push_back(']');
  return out;
}

} // namespace subpal::oracle
