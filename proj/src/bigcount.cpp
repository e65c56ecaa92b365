#include "bca/bigcount.hpp"

#include <stdexcept>

namespace bca {

BigCount BigCount::pow2(std::size_t exponent) {
  Int v = 1;
  v <<= exponent;
  return BigCount(std::move(v));
}

BigCount BigCount::from_wide(Wide w) {
  Int hi = static_cast<std::uint64_t>(w >> 64);
  hi <<= 64;
  hi += static_cast<std::uint64_t>(w);
  return BigCount(std::move(hi));
}

BigCount BigCount::parse(const std::string &digits) {
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("not a nonnegative decimal integer: '" + digits + "'");
  return BigCount(Int(digits));
}

std::optional<std::uint64_t> BigCount::to_u64() const {
  if (v_ > std::numeric_limits<std::uint64_t>::max())
    return std::nullopt;
  return static_cast<std::uint64_t>(v_);
}

BigCount &BigCount::operator-=(const BigCount &o) {
  if (v_ < o.v_)
    throw std::domain_error("BigCount subtraction would go negative");
  v_ -= o.v_;
  return *this;
}

DyadicRational::DyadicRational(BigCount numerator, std::size_t exponent)
    : num_(std::move(numerator)), exp_(exponent) {
  canonicalize();
}

void DyadicRational::canonicalize() {
  if (num_.is_zero()) {
    exp_ = 0;
    return;
  }
  while (exp_ > 0 && !num_.is_odd()) {
    num_ >>= 1;
    --exp_;
  }
}

DyadicRational DyadicRational::scaled_down(std::size_t k) const {
  return DyadicRational(num_, exp_ + k);
}

DyadicRational DyadicRational::scaled_up(std::size_t k) const {
  if (k <= exp_)
    return DyadicRational(num_, exp_ - k);
  return DyadicRational(num_ << (k - exp_), 0);
}

std::optional<BigCount> DyadicRational::as_integer() const {
  if (exp_ != 0)
    return std::nullopt;
  return num_;
}

DyadicRational &DyadicRational::operator+=(const DyadicRational &o) {
  const std::size_t e = std::max(exp_, o.exp_);
  num_ = (num_ << (e - exp_)) + (o.num_ << (e - o.exp_));
  exp_ = e;
  canonicalize();
  return *this;
}

std::strong_ordering operator<=>(const DyadicRational &a, const DyadicRational &b) {
  const std::size_t e = std::max(a.exp_, b.exp_);
  return (a.num_ << (e - a.exp_)) <=> (b.num_ << (e - b.exp_));
}

std::string DyadicRational::to_string() const {
  if (exp_ == 0)
    return num_.to_string();
  return num_.to_string() + "/" + BigCount::pow2(exp_).to_string();
}

} // namespace bca
