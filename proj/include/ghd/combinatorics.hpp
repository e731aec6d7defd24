#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <vector>

#include "ghd/bitstring.hpp"
#include "ghd/errors.hpp"

namespace ghd {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// C(n, k) as an exact big integer; 0 when k > n.
BigInt binomial(std::size_t n, std::size_t k);

/// |B(x, r)| = sum_{i<=r} C(n, i), exact.
BigInt ball_volume(std::size_t n, std::size_t r);

/// Largest subset of {0,1}^n with pairwise distance <= d (Bezrukov):
/// d = 2t gives |B(x,t)|, d = 2t+1 gives 2 * sum_{i<=t} C(n-1, i).
BigInt d_maximal_size(std::size_t n, std::size_t d);

/// H(a) = -a log2 a - (1-a) log2 (1-a), with H(0) = H(1) = 0.
double binary_entropy(double a);

/// log2 of a positive big integer, accurate to double precision.
double log2_big(const BigInt& v);

inline constexpr std::uint64_t kDefaultBallEnumCap = std::uint64_t{1} << 26;

/// Visits every y with Delta(center, y) <= r exactly once, radius first
/// (s = 0, 1, ..., r) and flip positions in lexicographic order within each
/// radius. The visitor may return false to stop early.
void ball_enumerate(const BitString& center, std::size_t r,
                    const std::function<bool(const BitString&)>& visit,
                    std::uint64_t cap = kDefaultBallEnumCap);

/// Convenience form collecting the whole ball.
std::vector<BitString> ball_to_vector(const BitString& center, std::size_t r,
                                      std::uint64_t cap = kDefaultBallEnumCap);

/// Visits ball members in lexicographic order of the member string itself
/// (not flip order), stopping early when the visitor returns false. Used by
/// the covering-protocol decode, which wants the lex-least qualifying
/// member without materializing the ball.
void ball_enumerate_lex(const BitString& center, std::size_t r,
                        const std::function<bool(const BitString&)>& visit);

}  // namespace ghd
