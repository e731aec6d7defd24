#include "ghd/combinatorics.hpp"

#include <cmath>

namespace ghd {

BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    r *= static_cast<unsigned long>(n - i);
    r /= static_cast<unsigned long>(i + 1);
  }
  return r;
}

BigInt ball_volume(std::size_t n, std::size_t r) {
  if (r > n) throw std::invalid_argument("ball_volume: r > n");
  BigInt total = 0;
  BigInt term = 1;  // C(n, 0)
  for (std::size_t i = 0;; ++i) {
    total += term;
    if (i == r) break;
    term *= static_cast<unsigned long>(n - i);
    term /= static_cast<unsigned long>(i + 1);
  }
  return total;
}

BigInt d_maximal_size(std::size_t n, std::size_t d) {
  if (d > n) throw std::invalid_argument("d_maximal_size: d > n");
  std::size_t t = d / 2;
  if (d % 2 == 0) return ball_volume(n, t);
  // B(x,t) union B(y,t) with Delta(x,y) = 1.
  BigInt half = 0;
  BigInt term = 1;  // C(n-1, 0)
  for (std::size_t i = 0;; ++i) {
    half += term;
    if (i == t) break;
    term *= static_cast<unsigned long>(n - 1 - i);
    term /= static_cast<unsigned long>(i + 1);
  }
  return 2 * half;
}

double binary_entropy(double a) {
  if (a < 0.0 || a > 1.0) throw std::invalid_argument("binary_entropy: argument outside [0,1]");
  if (a == 0.0 || a == 1.0) return 0.0;
  return -a * std::log2(a) - (1.0 - a) * std::log2(1.0 - a);
}

double log2_big(const BigInt& v) {
  if (v <= 0) throw std::invalid_argument("log2_big: nonpositive");
  std::size_t m = boost::multiprecision::msb(v);
  if (m <= 52) return std::log2(v.convert_to<double>());
  BigInt top = v >> (m - 52);
  return static_cast<double>(m - 52) + std::log2(top.convert_to<double>());
}

void ball_enumerate(const BitString& center, std::size_t r,
                    const std::function<bool(const BitString&)>& visit, std::uint64_t cap) {
  std::size_t n = center.length();
  if (r > n) throw std::invalid_argument("ball_enumerate: r > center.length()");
  BigInt vol = ball_volume(n, r);
  if (vol > cap) throw ResourceLimitError("ball_enumerate: ball volume exceeds enumeration cap");

  BitString cur = center;
  if (!visit(cur)) return;
  // Radius s flip sets in lexicographic order via the usual combination walk.
  std::vector<std::size_t> idx;
  for (std::size_t s = 1; s <= r; ++s) {
    idx.resize(s);
    for (std::size_t i = 0; i < s; ++i) {
      idx[i] = i;
      cur.flip(i);
    }
    while (true) {
      if (!visit(cur)) {
        for (std::size_t i = 0; i < s; ++i) cur.flip(idx[i]);
        return;
      }
      // Advance to the next s-combination.
      std::size_t j = s;
      while (j > 0) {
        --j;
        std::size_t limit = n - (s - j);
        if (idx[j] < limit) break;
        if (j == 0) {
          for (std::size_t i = 0; i < s; ++i) cur.flip(idx[i]);
          goto next_radius;
        }
      }
      cur.flip(idx[j]);
      ++idx[j];
      cur.flip(idx[j]);
      for (std::size_t i = j + 1; i < s; ++i) {
        cur.flip(idx[i]);
        idx[i] = idx[i - 1] + 1;
        cur.flip(idx[i]);
      }
    }
  next_radius:;
  }
}

std::vector<BitString> ball_to_vector(const BitString& center, std::size_t r, std::uint64_t cap) {
  std::vector<BitString> out;
  ball_enumerate(
      center, r,
      [&out](const BitString& s) {
        out.push_back(s);
        return true;
      },
      cap);
  return out;
}

namespace {

bool lex_dfs(BitString& cur, const BitString& center, std::size_t pos, std::size_t budget,
             const std::function<bool(const BitString&)>& visit, bool& keep_going) {
  std::size_t n = center.length();
  if (pos == n) {
    keep_going = visit(cur);
    return keep_going;
  }
  bool cbit = center.get(pos);
  // Try 0 first, then 1; spending a flip only when deviating from center.
  for (int v = 0; v <= 1; ++v) {
    bool bit = v == 1;
    std::size_t cost = bit != cbit ? 1 : 0;
    if (cost > budget) continue;
    cur.set(pos, bit);
    if (!lex_dfs(cur, center, pos + 1, budget - cost, visit, keep_going)) {
      cur.set(pos, cbit);
      return false;
    }
  }
  cur.set(pos, cbit);
  return true;
}

}  // namespace

void ball_enumerate_lex(const BitString& center, std::size_t r,
                        const std::function<bool(const BitString&)>& visit) {
  if (r > center.length()) throw std::invalid_argument("ball_enumerate_lex: r > center.length()");
  BitString cur = center;
  bool keep_going = true;
  lex_dfs(cur, center, 0, r, visit, keep_going);
}

}  // namespace ghd
