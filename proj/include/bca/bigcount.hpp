#ifndef BCA_BIGCOUNT_HPP
#define BCA_BIGCOUNT_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace bca {

/// 128-bit accumulator used on hot paths. Every quantity the library sums
/// (scores, D terms) is below 2^64 per term and there are at most 64 terms.
using Wide = unsigned __int128;

/// Arbitrary-precision nonnegative integer. Subtraction is checked.
class BigCount {
public:
  BigCount() = default;
  BigCount(std::uint64_t v) : v_(v) {} // NOLINT(google-explicit-constructor)

  static BigCount pow2(std::size_t exponent);
  static BigCount from_wide(Wide w);
  /// Decimal digits only; throws std::invalid_argument otherwise.
  static BigCount parse(const std::string &digits);

  bool is_zero() const { return v_.is_zero(); }
  bool is_odd() const { return bit_test(v_, 0); }
  std::optional<std::uint64_t> to_u64() const;
  std::string to_string() const { return v_.str(); }

  BigCount &operator+=(const BigCount &o) {
    v_ += o.v_;
    return *this;
  }
  BigCount &operator*=(const BigCount &o) {
    v_ *= o.v_;
    return *this;
  }
  BigCount &operator<<=(std::size_t k) {
    v_ <<= k;
    return *this;
  }
  BigCount &operator>>=(std::size_t k) {
    v_ >>= k;
    return *this;
  }
  /// Throws std::domain_error if the result would be negative.
  BigCount &operator-=(const BigCount &o);

  friend BigCount operator+(BigCount a, const BigCount &b) { return a += b; }
  friend BigCount operator-(BigCount a, const BigCount &b) { return a -= b; }
  friend BigCount operator*(BigCount a, const BigCount &b) { return a *= b; }
  friend BigCount operator<<(BigCount a, std::size_t k) { return a <<= k; }
  friend BigCount operator>>(BigCount a, std::size_t k) { return a >>= k; }

  friend bool operator==(const BigCount &a, const BigCount &b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const BigCount &a, const BigCount &b) {
    const int c = a.v_.compare(b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream &operator<<(std::ostream &os, const BigCount &b) {
    return os << b.to_string();
  }

private:
  using Int = boost::multiprecision::cpp_int;
  explicit BigCount(Int v) : v_(std::move(v)) {}

  Int v_;
};

/// Exact value numerator / 2^exponent, kept canonical: the numerator is odd,
/// or zero with exponent 0.
class DyadicRational {
public:
  DyadicRational() = default;
  DyadicRational(BigCount numerator, std::size_t exponent);

  static DyadicRational integer(BigCount v) { return DyadicRational(std::move(v), 0); }

  const BigCount &numerator() const { return num_; }
  std::size_t exponent() const { return exp_; }

  /// Multiplies by 2^-k.
  DyadicRational scaled_down(std::size_t k) const;
  /// Multiplies by 2^k.
  DyadicRational scaled_up(std::size_t k) const;
  /// Integral value, if there is one.
  std::optional<BigCount> as_integer() const;

  DyadicRational &operator+=(const DyadicRational &o);
  friend DyadicRational operator+(DyadicRational a, const DyadicRational &b) { return a += b; }
  friend DyadicRational operator*(DyadicRational a, const BigCount &k) {
    return DyadicRational(a.num_ * k, a.exp_);
  }

  friend bool operator==(const DyadicRational &, const DyadicRational &) = default;
  friend std::strong_ordering operator<=>(const DyadicRational &a, const DyadicRational &b);

  /// "7/4", or "5" for integers.
  std::string to_string() const;

  friend std::ostream &operator<<(std::ostream &os, const DyadicRational &d) {
    return os << d.to_string();
  }

private:
  void canonicalize();

  BigCount num_;
  std::size_t exp_ = 0;
};

} // namespace bca

#endif
