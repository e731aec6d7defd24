#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ghd/bitstring.hpp"

namespace ghd {

/// Nonnegative rational p/q in lowest terms, q >= 1.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }

  /// Accepts "p/q", an integer, or a short decimal like "1.5".
  static Rational parse(const std::string& text);
};

enum class TernaryOutput : int { ZERO = -1, STAR = 0, ONE = 1 };

inline bool matches(TernaryOutput f, int bit) {
  return f == TernaryOutput::STAR || (f == TernaryOutput::ONE) == (bit == 1);
}

inline const char* to_string(TernaryOutput t) {
  switch (t) {
    case TernaryOutput::ZERO: return "0";
    case TernaryOutput::ONE: return "1";
    default: return "star";
  }
}

/// Problem instance (n, c) with exact threshold machinery.
///
/// c is kept as an exact rational square c^2 = c2_num/c2_den, so every
/// comparison against n/2 +- c*sqrt(n) reduces to integer arithmetic:
///   Delta >= n/2 + c*sqrt(n)  <=>  2*Delta-n >= 0  and
///                                  (2*Delta-n)^2 * c2_den >= 4 * c2_num * n.
/// The paper treats the thresholds as reals and never says how to round;
/// this exact rule is the project's resolution.
class GhdParams {
 public:
  GhdParams(std::size_t n, Rational c) : GhdParams(n, Rational(c.num * c.num, c.den * c.den), c.value()) {}

  static GhdParams from_c_squared(std::size_t n, Rational c_squared, double c_hint = -1.0) {
    return GhdParams(n, c_squared, c_hint);
  }

  std::size_t n() const { return n_; }
  double c() const { return c_; }
  std::int64_t c2_num() const { return c2_num_; }
  std::int64_t c2_den() const { return c2_den_; }

  /// Exact test of Delta >= n/2 + c*sqrt(n).
  bool at_least_upper(std::size_t delta) const {
    __int128 d2 = 2 * static_cast<__int128>(delta) - static_cast<__int128>(n_);
    return d2 >= 0 && d2 * d2 * c2_den_ >= four_c2_n_;
  }

  /// Exact test of Delta <= n/2 - c*sqrt(n).
  bool at_most_lower(std::size_t delta) const {
    __int128 d2 = static_cast<__int128>(n_) - 2 * static_cast<__int128>(delta);
    return d2 >= 0 && d2 * d2 * c2_den_ >= four_c2_n_;
  }

  TernaryOutput classify(std::size_t delta) const {
    if (at_least_upper(delta)) return TernaryOutput::ONE;
    if (at_most_lower(delta)) return TernaryOutput::ZERO;
    return TernaryOutput::STAR;
  }

  /// Smallest d >= 0 with d == n (mod 2) and d^2*c2_den >= 4*c2_num*n.
  /// This is the width of the undefined band in |2*Delta - n| units:
  /// GHD is defined exactly when |2*Delta - n| >= gap_dmin(). It also
  /// equals the exact witness-distance threshold of the one-way bound.
  std::size_t gap_dmin() const { return dmin_; }

  /// Largest defined weight on the low side, (n - dmin)/2; GHD(0^n, y) = 0
  /// exactly for |y| <= lower_weight().
  std::size_t lower_weight() const { return (n_ - dmin_) / 2; }
  /// Smallest defined weight on the high side, (n + dmin)/2.
  std::size_t upper_weight() const { return (n_ + dmin_) / 2; }

  /// True when the star band swallows everything (c*sqrt(n) >= n/2), i.e.
  /// mu has empty support.
  bool mu_support_empty() const { return dmin_ > n_; }

  /// Exact test of d >= 2c*sqrt(n) for a plain integer d (used by the
  /// witness construction attempt; note gap_dmin() is the exact
  /// witness-existence threshold, which exceeds this at parity boundaries).
  bool at_least_two_c_sqrt_n(std::size_t d) const {
    __int128 dd = d;
    return dd * dd * c2_den_ >= four_c2_n_;
  }

 private:
  GhdParams(std::size_t n, Rational c2, double c_hint) : n_(n), c2_num_(c2.num), c2_den_(c2.den) {
    if (n_ < 1) throw std::invalid_argument("GhdParams: n must be >= 1");
    if (n_ > kMaxBits) throw std::invalid_argument("GhdParams: n exceeds cap 2^20");
    if (c2_num_ <= 0) throw std::invalid_argument("GhdParams: c must be > 0");
    four_c2_n_ = 4 * static_cast<__int128>(c2_num_) * static_cast<__int128>(n_);
    c_ = c_hint > 0 ? c_hint : std::sqrt(static_cast<double>(c2_num_) / static_cast<double>(c2_den_));
    std::size_t d = n_ % 2;
    while (true) {
      __int128 dd = d;
      if (dd * dd * c2_den_ >= four_c2_n_) break;
      d += 2;
    }
    dmin_ = d;
  }

  std::size_t n_;
  std::int64_t c2_num_;
  std::int64_t c2_den_;
  __int128 four_c2_n_;
  double c_;
  std::size_t dmin_ = 0;
};

inline TernaryOutput ghd_eval(const GhdParams& p, const BitString& x, const BitString& y) {
  if (x.length() != p.n() || y.length() != p.n())
    throw std::invalid_argument("ghd_eval: input length differs from n");
  return p.classify(hamming_distance(x, y));
}

/// |Delta(x,y) - n/2| < c*sqrt(n); equivalent to ghd_eval == STAR.
inline bool near_orthogonal(const GhdParams& p, const BitString& x, const BitString& y) {
  return ghd_eval(p, x, y) == TernaryOutput::STAR;
}

}  // namespace ghd
