#include "subpal/detector.hpp"

#include <algorithm>
#include <cassert>

namespace subpal {

Detector::Detector(ChildStorageMode mode)
    : odd_(Parity::Odd), even_(Parity::Even), tree_(mode) {}

StepReport Detector::push(Symbol c) {
  odd_.add_letter(c);
  even_.add_letter(c);
  tree_.add_letter(c);
  ++n_;

  StepReport r;
  r.n = n_;
  r.max_pal_odd = odd_.max_pal();
  r.max_pal_even = even_.max_pal();
  r.max_pal = std::max(r.max_pal_odd, r.max_pal_even);
  r.min_unique_suff = tree_.min_unique_suff();
  if (r.max_pal >= r.min_unique_suff) {
    r.new_palindrome = Span{n_ - r.max_pal + 1, n_};
    ++distinct_count_;
  }
  r.closure_len = 2 * n_ - r.max_pal;
  r.distinct_count = distinct_count_;
  assert(distinct_count_ <= n_);
  return r;
}

DetectorSummary Detector::finish() const {
  DetectorSummary s;
  s.n = n_;
  s.distinct_count = distinct_count_;
  s.manacher_loop_odd = odd_.loop_iterations();
  s.manacher_loop_even = even_.loop_iterations();
  s.tree = tree_.counters();
  return s;
}

std::vector<StepReport> detect_all(std::span<const Symbol> w, ChildStorageMode mode) {
  Detector d(mode);
  std::vector<StepReport> out;
  out.reserve(w.size());
  for (Symbol c : w) out.push_back(d.push(c));
  return out;
}

} // namespace subpal
