#include "qbaker/symbolic.hpp"

#include <random>
#include <stdexcept>

namespace qbaker {

namespace {

// Binary expansion of a finite bit string: sum_k bit(k) 2^-k.
Dyadic binary_fraction(const BitString& s) {
  Int128 num = 0;
  const std::size_t len = s.length();
  for (std::size_t k = 1; k <= len; ++k) {
    num = (num << 1) | s.bit(k);
  }
  return Dyadic::from_ratio(num, static_cast<int>(len));
}

}  // namespace

BitString::BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_) {
    if (b != 0 && b != 1) {
      throw std::invalid_argument("BitString: elements must be 0 or 1");
    }
  }
}

BitString BitString::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument(std::string("BitString: invalid character '") + c +
                                  "' (expected 0 or 1)");
    }
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return BitString(std::move(bits));
}

BitString BitString::random(std::size_t length, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  std::vector<std::uint8_t> bits(length);
  for (auto& b : bits) b = static_cast<std::uint8_t>(engine() & 1u);
  return BitString(std::move(bits));
}

BitString BitString::zeros(std::size_t length) {
  return BitString(std::vector<std::uint8_t>(length, 0));
}

BitString BitString::ones(std::size_t length) {
  return BitString(std::vector<std::uint8_t>(length, 1));
}

BitString BitString::prefix(std::size_t n) const {
  std::vector<std::uint8_t> bits(n, 0);
  for (std::size_t i = 0; i < n && i < bits_.size(); ++i) bits[i] = bits_[i];
  return BitString(std::move(bits));
}

BitString BitString::with_prepended(int bit) const {
  if (bit != 0 && bit != 1) throw std::invalid_argument("BitString: bit must be 0 or 1");
  std::vector<std::uint8_t> bits;
  bits.reserve(bits_.size() + 1);
  bits.push_back(static_cast<std::uint8_t>(bit));
  bits.insert(bits.end(), bits_.begin(), bits_.end());
  return BitString(std::move(bits));
}

BitString BitString::without_first() const {
  if (bits_.empty()) return {};
  return BitString(std::vector<std::uint8_t>(bits_.begin() + 1, bits_.end()));
}

BitString BitString::concat(const BitString& tail) const {
  std::vector<std::uint8_t> bits = bits_;
  bits.insert(bits.end(), tail.bits_.begin(), tail.bits_.end());
  return BitString(std::move(bits));
}

BitString BitString::trimmed() const {
  std::size_t len = bits_.size();
  while (len > 0 && bits_[len - 1] == 0) --len;
  return BitString(std::vector<std::uint8_t>(bits_.begin(), bits_.begin() + len));
}

std::string BitString::to_string() const {
  std::string out;
  out.reserve(bits_.size());
  for (auto b : bits_) out += static_cast<char>('0' + b);
  return out;
}

PhasePoint::PhasePoint(Dyadic q, Dyadic p) : q_(q), p_(p) {
  if (q_ < Dyadic(0) || q_ > Dyadic(1) || p_ < Dyadic(0) || p_ > Dyadic(1)) {
    throw std::invalid_argument("PhasePoint: coordinates must lie in [0, 1]");
  }
}

bool same_sequence(const TwoSidedString& a, const TwoSidedString& b) {
  return a.past.trimmed() == b.past.trimmed() && a.future.trimmed() == b.future.trimmed();
}

PhasePoint decode_phase_point(const TwoSidedString& s) {
  return PhasePoint(binary_fraction(s.future), binary_fraction(s.past));
}

namespace {

// Digits of a dyadic in [0, 1) as a bit string of length log2_denominator.
BitString expansion_bits(const Dyadic& v, const char* what) {
  if (v < Dyadic(0) || v >= Dyadic(1)) {
    throw std::invalid_argument(std::string("encode_phase_point: ") + what +
                                " must lie in [0, 1)");
  }
  const int len = v.log2_denominator();
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(len));
  Int128 num = v.numerator();
  for (int k = 0; k < len; ++k) {
    bits[static_cast<std::size_t>(len - 1 - k)] = static_cast<std::uint8_t>(num & 1);
    num >>= 1;
  }
  return BitString(std::move(bits));
}

}  // namespace

TwoSidedString encode_phase_point(const PhasePoint& x) {
  return {expansion_bits(x.p(), "p"), expansion_bits(x.q(), "q")};
}

PhasePoint baker_step(const PhasePoint& x) {
  if (x.q() < Dyadic::half()) {
    return PhasePoint(x.q().times_pow2(1), x.p().times_pow2(-1));
  }
  return PhasePoint(x.q().times_pow2(1) - Dyadic(1), (x.p() + Dyadic(1)).times_pow2(-1));
}

TwoSidedString shift(const TwoSidedString& s) {
  // xi_1 becomes the new xi_0 at the head of the past; the zero tail supplies
  // the bit when the future is exhausted.
  return {s.past.with_prepended(s.future.bit(1)), s.future.without_first()};
}

TwoSidedString inverse_shift(const TwoSidedString& s) {
  return {s.past.without_first(), s.future.with_prepended(s.past.bit(1))};
}

Dyadic classical_q(const BitString& xi, int m) {
  if (m < 0) throw std::invalid_argument("classical_q: m must be non-negative");
  const std::size_t len = xi.length();
  if (static_cast<std::size_t>(m) >= len) return Dyadic();
  Int128 num = 0;
  const std::size_t terms = len - static_cast<std::size_t>(m);
  for (std::size_t k = 1; k <= terms; ++k) {
    num = (num << 1) | xi.bit(static_cast<std::size_t>(m) + k);
  }
  return Dyadic::from_ratio(num, static_cast<int>(terms));
}

}  // namespace qbaker
