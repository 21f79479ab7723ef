#include "subpal/manacher.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace subpal {

ManacherState::ManacherState(Parity parity) : parity_(parity) {
  // Index 0 is padding; text[1] is the sentinel; rad[2] must exist for i = 2.
  text_ = {ExtendedSymbol::sentinel(), ExtendedSymbol::sentinel()};
  rad_.assign(3, 0);
}

std::size_t &ManacherState::rad(std::size_t j) {
  if (j >= rad_.size()) rad_.resize(std::max(j + 1, rad_.size() * 2), 0);
  return rad_[j];
}

void ManacherState::add_letter(ExtendedSymbol c) {
  if (c.is_sentinel())
    throw std::invalid_argument("ManacherState::add_letter: sentinel is not an input letter");

  const std::size_t delta = static_cast<std::size_t>(parity_);
  // Start of the maximal suffix-palindrome of text[1..n].
  const std::size_t s = i_ - rad(i_) + delta;
  text_.push_back(c);
  assert(text_.size() == n_ + 2);

  while (i_ + rad(i_) <= n_) {
    ++loop_iters_;
    assert(s + n_ >= i_ + delta + 1);
    rad(i_) = std::min(rad(s + n_ - i_ - delta), n_ - i_);
    if (i_ + rad_[i_] == n_ && text_[i_ - rad_[i_] - 1 + delta] == c) {
      ++rad_[i_];
      break;
    }
    ++i_;
  }
  ++n_;
  rad(i_);
}

std::size_t ManacherState::max_pal() const {
  if (n_ < 2)
    throw std::logic_error("ManacherState::max_pal: no letter has been added");
  const std::size_t delta = static_cast<std::size_t>(parity_);
  return 2 * rad_[i_] + 1 - delta;
}

} // namespace subpal
