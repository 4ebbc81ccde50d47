#include "wreath/word.hpp"

namespace wreath {

GroupWord GroupWord::from_factors(const std::vector<Factor>& factors) {
  GroupWord w;
  for (const Factor& f : factors)
    w.append(f);
  return w;
}

void GroupWord::append(Factor f) {
  if (!factors_.empty() && factors_.back().cancels(f))
    factors_.pop_back();
  else
    factors_.push_back(f);
}

void GroupWord::append(const GroupWord& w) {
  for (const Factor& f : w.factors_)
    append(f);
}

void GroupWord::append_inverse(const GroupWord& w) {
  for (auto it = w.factors_.rbegin(); it != w.factors_.rend(); ++it)
    append(it->opposite());
}

GroupWord GroupWord::operator*(const GroupWord& rhs) const {
  GroupWord out = *this;
  out.append(rhs);
  return out;
}

GroupWord GroupWord::inverse() const {
  GroupWord out;
  out.factors_.reserve(factors_.size());
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it)
    out.factors_.push_back(it->opposite());
  return out; // reduced input stays reduced under reversal
}

GroupWord GroupWord::pow(std::int64_t exponent) const {
  GroupWord base = exponent < 0 ? inverse() : *this;
  std::int64_t n = exponent < 0 ? -exponent : exponent;
  GroupWord out;
  for (std::int64_t i = 0; i < n; ++i)
    out.append(base);
  return out;
}

GroupWord GroupWord::conjugated_by(const GroupWord& c) const {
  GroupWord out = c;
  out.append(*this);
  out.append_inverse(c);
  return out;
}

} // namespace wreath
