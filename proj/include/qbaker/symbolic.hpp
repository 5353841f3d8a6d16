#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qbaker/dyadic.hpp"

namespace qbaker {

// Finite binary string xi_1 ... xi_L with an implicit all-zero tail: bit(k)
// returns 0 for every k > L, so a finite string stands for the infinite
// sequence it prefixes. The empty string is the canonical all-zeros sequence.
//
// Values are immutable; "mutators" return new strings.
class BitString {
 public:
  BitString() = default;

  explicit BitString(std::vector<std::uint8_t> bits);

  // Parses "0"/"1" characters, most significant (xi_1) first. Empty input is
  // the all-zeros string.
  static BitString parse(std::string_view text);

  // Deterministic pseudo-random string: bit k is the least significant bit of
  // the k-th draw of std::mt19937_64 seeded with `seed`. The engine is pinned
  // by the C++ standard, so identical (length, seed) reproduce identical
  // strings on every platform.
  static BitString random(std::size_t length, std::uint64_t seed);

  static BitString zeros(std::size_t length);
  static BitString ones(std::size_t length);

  std::size_t length() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }

  // 1-based accessor for xi_k; zero tail beyond the stored length.
  int bit(std::size_t k) const {
    return (k >= 1 && k <= bits_.size()) ? bits_[k - 1] : 0;
  }

  // First n bits, zero-padded when n exceeds the stored length.
  BitString prefix(std::size_t n) const;

  BitString with_prepended(int bit) const;
  BitString without_first() const;
  BitString concat(const BitString& tail) const;

  // Drops trailing zeros; two strings denote the same infinite sequence
  // exactly when their trimmed forms are structurally equal.
  BitString trimmed() const;

  std::string to_string() const;

  friend bool operator==(const BitString& a, const BitString& b) { return a.bits_ == b.bits_; }

 private:
  std::vector<std::uint8_t> bits_;
};

// Point of the unit square, both coordinates exact dyadic rationals in [0,1].
class PhasePoint {
 public:
  PhasePoint(Dyadic q, Dyadic p);

  const Dyadic& q() const { return q_; }
  const Dyadic& p() const { return p_; }

  friend bool operator==(const PhasePoint& a, const PhasePoint& b) {
    return a.q_ == b.q_ && a.p_ == b.p_;
  }

 private:
  Dyadic q_;
  Dyadic p_;
};

// Two-sided symbolic string ... xi_-2 xi_-1 xi_0 . xi_1 xi_2 ... with the dot
// sitting between `past` and `future`. past.bit(i) holds xi_{-(i-1)} (so
// past.bit(1) = xi_0) and future.bit(k) holds xi_k; both sides carry the
// implicit zero tail.
struct TwoSidedString {
  BitString past;
  BitString future;

  TwoSidedString trimmed() const { return {past.trimmed(), future.trimmed()}; }
};

// Same infinite two-sided sequence (structural equality up to zero tails).
bool same_sequence(const TwoSidedString& a, const TwoSidedString& b);

// (q, p) coordinates of a symbolic string:
//   q = sum_k future.bit(k) 2^-k,  p = sum_i past.bit(i) 2^-i.
PhasePoint decode_phase_point(const TwoSidedString& s);

// Zero-tail symbolic representation of a point with q, p in [0, 1).
// Inverse of decode_phase_point on zero-tail strings.
TwoSidedString encode_phase_point(const PhasePoint& x);

// One application of the baker transformation:
//   (2q, p/2)            if q < 1/2
//   (2q - 1, (p+1)/2)    if q >= 1/2
// The branch split is half-open so that the map agrees exactly with the
// symbolic shift on every zero-tail string (each dyadic q has a unique
// zero-tail expansion, and q >= 1/2 exactly when xi_1 = 1).
PhasePoint baker_step(const PhasePoint& x);

// Bernoulli shift: moves the dot one place to the right, xi'_m = xi_{m+1}.
TwoSidedString shift(const TwoSidedString& s);

// Moves the dot one place to the left; inverse of shift up to zero tails.
TwoSidedString inverse_shift(const TwoSidedString& s);

// q coordinate after m shift steps: q_m = sum_{k>=1} xi_{m+k} 2^-k, exact.
// The sum is finite because of the zero tail; m >= length gives 0.
Dyadic classical_q(const BitString& xi, int m);

}  // namespace qbaker
