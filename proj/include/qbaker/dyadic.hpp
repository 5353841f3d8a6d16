#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qbaker/errors.hpp"

namespace qbaker {

// Signed 128-bit integer (GCC/Clang builtin). Wide enough to hold every
// numerator produced by binary strings of length <= 64 with headroom for
// the intermediate shifts used by addition and comparison.
using Int128 = __int128;

namespace detail {

inline std::string uint128_to_string(unsigned __int128 v) {
  if (v == 0) return "0";
  std::string out;
  while (v != 0) {
    out.insert(out.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return out;
}

inline std::string int128_to_string(Int128 v) {
  if (v < 0) return "-" + uint128_to_string(static_cast<unsigned __int128>(-(v + 1)) + 1);
  return uint128_to_string(static_cast<unsigned __int128>(v));
}

}  // namespace detail

// Exact rational with a power-of-two denominator: value = numerator / 2^log2_denominator.
//
// All arithmetic (add, subtract, multiply by a power of two, compare) is exact;
// no operation ever rounds. Canonical form is maintained eagerly: whenever
// log2_denominator > 0 the numerator is odd, and zero is stored as 0/2^0, so
// structural equality coincides with value equality.
//
// Supported range: log2_denominator <= 110 and |numerator| < 2^120, which
// covers binary strings up to length 64 (the documented limit) with ample
// headroom for intermediate common-denominator shifts. Exceeding the range
// throws std::overflow_error instead of silently wrapping.
class Dyadic {
 public:
  static constexpr int kMaxLog2Denominator = 110;

  Dyadic() = default;

  explicit Dyadic(long long integer_value) : num_(integer_value), log2_den_(0) {}

  // value = numerator / 2^log2_denominator, normalized to canonical form.
  static Dyadic from_ratio(Int128 numerator, int log2_denominator) {
    if (log2_denominator < 0) {
      throw std::invalid_argument("Dyadic: log2_denominator must be non-negative");
    }
    check_exponent(log2_denominator);
    check_magnitude(numerator);
    Dyadic d;
    d.num_ = numerator;
    d.log2_den_ = log2_denominator;
    d.normalize();
    return d;
  }

  // 2^{-k} for k >= 0.
  static Dyadic one_over_pow2(int k) { return from_ratio(1, k); }

  static Dyadic half() { return from_ratio(1, 1); }

  Int128 numerator() const { return num_; }
  int log2_denominator() const { return log2_den_; }

  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  Dyadic operator-() const {
    Dyadic d = *this;
    d.num_ = -d.num_;
    return d;
  }

  Dyadic abs() const { return num_ < 0 ? -*this : *this; }

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    int common = a.log2_den_ > b.log2_den_ ? a.log2_den_ : b.log2_den_;
    Int128 lhs = checked_shl(a.num_, common - a.log2_den_);
    Int128 rhs = checked_shl(b.num_, common - b.log2_den_);
    Dyadic d;
    d.num_ = lhs + rhs;
    d.log2_den_ = common;
    d.normalize();
    return d;
  }

  friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

  // value * 2^k for any integer k (negative k divides).
  Dyadic times_pow2(int k) const {
    if (num_ == 0) return Dyadic();
    Dyadic d = *this;
    if (k >= 0) {
      int reduce = k < d.log2_den_ ? k : d.log2_den_;
      d.log2_den_ -= reduce;
      d.num_ = checked_shl(d.num_, k - reduce);
    } else {
      check_exponent(d.log2_den_ - k);
      d.log2_den_ -= k;
    }
    d.normalize();
    return d;
  }

  // Fractional part in [0, 1): value - floor(value).
  Dyadic mod_one() const {
    if (log2_den_ == 0) return Dyadic();
    Int128 den = Int128(1) << log2_den_;
    Int128 r = num_ % den;
    if (r < 0) r += den;
    return from_ratio(r, log2_den_);
  }

  // Structural equality; canonical form makes this value equality.
  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.num_ == b.num_ && a.log2_den_ == b.log2_den_;
  }

  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
    int common = a.log2_den_ > b.log2_den_ ? a.log2_den_ : b.log2_den_;
    Int128 lhs = checked_shl(a.num_, common - a.log2_den_);
    Int128 rhs = checked_shl(b.num_, common - b.log2_den_);
    return lhs <=> rhs;
  }

  // Nearest double (exact whenever the numerator fits in 53 bits).
  double to_double() const;

  // "n/2^k", e.g. "5/2^3", "-1/2^2", "0/2^0". Parses back losslessly.
  std::string rational_string() const {
    return detail::int128_to_string(num_) + "/2^" + std::to_string(log2_den_);
  }

  // Exact decimal expansion, e.g. "0.625", "-0.1875", "0". A dyadic rational
  // always terminates in at most log2_denominator decimal digits.
  std::string decimal_string() const;

  // Inverse of rational_string(); std::nullopt on malformed input.
  static std::optional<Dyadic> parse_rational(std::string_view text);

 private:
  static void check_exponent(int log2_den) {
    if (log2_den > kMaxLog2Denominator) {
      throw std::overflow_error("Dyadic: denominator exponent " + std::to_string(log2_den) +
                                " exceeds supported maximum " +
                                std::to_string(kMaxLog2Denominator));
    }
  }

  static void check_magnitude(Int128 v) {
    constexpr Int128 limit = Int128(1) << 120;
    if (v >= limit || v <= -limit) {
      throw std::overflow_error("Dyadic: numerator magnitude exceeds 2^120");
    }
  }

  static Int128 checked_shl(Int128 v, int shift) {
    if (shift == 0 || v == 0) return v;
    check_magnitude(v);
    if (shift > kMaxLog2Denominator + 10) {
      throw std::overflow_error("Dyadic: shift amount out of range");
    }
    Int128 r = v << shift;
    if (r >> shift != v) {
      throw std::overflow_error("Dyadic: numerator overflow in shift");
    }
    return r;
  }

  void normalize() {
    if (num_ == 0) {
      log2_den_ = 0;
      return;
    }
    while ((num_ & 1) == 0 && log2_den_ > 0) {
      num_ >>= 1;
      --log2_den_;
    }
  }

  Int128 num_ = 0;
  int log2_den_ = 0;
};

inline double Dyadic::to_double() const {
  return std::ldexp(static_cast<double>(num_), -log2_den_);
}

inline std::string Dyadic::decimal_string() const {
  if (num_ == 0) return "0";
  bool negative = num_ < 0;
  unsigned __int128 mag =
      negative ? static_cast<unsigned __int128>(-(num_ + 1)) + 1 : static_cast<unsigned __int128>(num_);
  unsigned __int128 integer_part = mag >> log2_den_;
  unsigned __int128 mask = log2_den_ == 0 ? 0 : ((static_cast<unsigned __int128>(1) << log2_den_) - 1);
  unsigned __int128 rem = mag & mask;
  std::string out = negative ? "-" : "";
  out += detail::uint128_to_string(integer_part);
  if (rem != 0) {
    out += '.';
    while (rem != 0) {
      rem *= 10;
      out += static_cast<char>('0' + static_cast<int>(rem >> log2_den_));
      rem &= mask;
    }
  }
  return out;
}

inline std::optional<Dyadic> Dyadic::parse_rational(std::string_view text) {
  auto sep = text.find("/2^");
  if (sep == std::string_view::npos) return std::nullopt;
  std::string_view num_part = text.substr(0, sep);
  std::string_view exp_part = text.substr(sep + 3);
  if (num_part.empty() || exp_part.empty()) return std::nullopt;

  bool negative = false;
  if (num_part.front() == '-') {
    negative = true;
    num_part.remove_prefix(1);
  }
  if (num_part.empty()) return std::nullopt;

  Int128 num = 0;
  for (char c : num_part) {
    if (c < '0' || c > '9') return std::nullopt;
    num = num * 10 + (c - '0');
    constexpr Int128 limit = Int128(1) << 120;
    if (num >= limit) return std::nullopt;
  }
  if (negative) num = -num;

  int exp = 0;
  for (char c : exp_part) {
    if (c < '0' || c > '9') return std::nullopt;
    exp = exp * 10 + (c - '0');
    if (exp > kMaxLog2Denominator) return std::nullopt;
  }
  return from_ratio(num, exp);
}

}  // namespace qbaker
