#include "ghd/tails.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace ghd {

namespace {

constexpr double kLnSqrt2Pi = 0.9189385332046727;  // ln sqrt(2 pi)
constexpr std::size_t kExactBinomCap = 1000;

double lchoose(double n, double k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

/// Stable sum of exp(terms) given log-space terms via max shift.
double sum_exp(const std::vector<double>& log_terms) {
  if (log_terms.empty()) return 0.0;
  double m = *std::max_element(log_terms.begin(), log_terms.end());
  if (m == -std::numeric_limits<double>::infinity()) return 0.0;
  double s = 0.0;
  for (double t : log_terms) s += std::exp(t - m);
  return std::exp(m) * s;
}

}  // namespace

double normal_phi(double x) { return std::exp(-0.5 * x * x - kLnSqrt2Pi); }

double normal_N(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

double log_normal_tail(double x) {
  if (x < 20.0) {
    double v = normal_N(x);
    if (v > 0.0) return std::log(v);
  }
  // Mills-ratio series: N(x) = phi(x)/x * (1 - 1/x^2 + 3/x^4 - 15/x^6 + ...).
  double inv2 = 1.0 / (x * x);
  double series = 1.0 - inv2 + 3.0 * inv2 * inv2 - 15.0 * inv2 * inv2 * inv2;
  return -0.5 * x * x - kLnSqrt2Pi - std::log(x) + std::log(series);
}

TailResult tail_Tn(std::size_t n, Rational c) {
  if (n < 1) throw std::invalid_argument("tail_Tn: n must be >= 1");
  if (c.num == 0) {
    TailResult r;
    r.value = 1.0;
    r.method = TailMethod::EXACT_BIGRATIONAL;
    r.exact = BigRational(1);
    return r;
  }
  GhdParams p(n, c);
  return tail_Tn(p);
}

TailResult tail_Tn(const GhdParams& p) {
  std::size_t n = p.n();
  TailResult r;
  if (p.mu_support_empty()) {
    r.value = 0.0;
    r.method = TailMethod::EXACT_BIGRATIONAL;
    r.exact = BigRational(0);
    return r;
  }
  std::size_t wlo = p.lower_weight();
  std::size_t whi = p.upper_weight();
  if (n <= kExactBinomCap) {
    BigInt hits = 0;
    BigInt term = 1;
    for (std::size_t w = 0; w <= wlo; ++w) {
      hits += term;
      term *= static_cast<unsigned long>(n - w);
      term /= static_cast<unsigned long>(w + 1);
    }
    term = 1;
    BigInt upper_hits = 0;
    for (std::size_t w = 0; w <= n - whi; ++w) {  // weights n-w >= whi by symmetry
      upper_hits += term;
      term *= static_cast<unsigned long>(n - w);
      term /= static_cast<unsigned long>(w + 1);
    }
    BigInt total = hits + upper_hits;
    BigRational exact(total, BigInt(1) << n);
    r.exact = exact;
    r.value = exact.convert_to<double>();
    r.method = TailMethod::EXACT_BIGRATIONAL;
    r.abs_error_bound = 0.0;
    return r;
  }
  double ln2n = static_cast<double>(n) * std::log(2.0);
  std::vector<double> terms;
  terms.reserve(2 * (wlo + 1));
  for (std::size_t w = 0; w <= wlo; ++w) {
    double t = lchoose(static_cast<double>(n), static_cast<double>(w)) - ln2n;
    terms.push_back(t);
    terms.push_back(t);  // symmetric upper weight n - w
  }
  r.value = sum_exp(terms);
  r.method = TailMethod::LOG_SPACE_FLOAT;
  r.abs_error_bound = 1e-12;
  return r;
}

double tail_T_limit(double c) {
  if (c <= 0.0) throw std::invalid_argument("tail_T_limit: c must be > 0");
  return 2.0 * normal_N(2.0 * c);
}

double inverse_T(double target) {
  if (!(target > 0.0 && target < 1.0)) throw std::invalid_argument("inverse_T: target outside (0,1)");
  double lo = 0.0, hi = 64.0;  // T(64) is astronomically small
  for (int i = 0; i < 200 && hi - lo > 1e-12; ++i) {
    double mid = 0.5 * (lo + hi);
    if (tail_T_limit(mid) > target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

TailResult binom_weight_range(std::size_t n, std::int64_t lo, std::int64_t hi) {
  TailResult r;
  std::int64_t a = std::max<std::int64_t>(lo, 0);
  std::int64_t b = std::min<std::int64_t>(hi, static_cast<std::int64_t>(n));
  if (a > b) {
    r.value = 0.0;
    r.method = TailMethod::EXACT_BIGRATIONAL;
    r.exact = BigRational(0);
    return r;
  }
  if (n <= kExactBinomCap) {
    BigInt hits = 0;
    for (std::int64_t w = a; w <= b; ++w) hits += binomial(n, static_cast<std::size_t>(w));
    BigRational exact(hits, BigInt(1) << n);
    r.exact = exact;
    r.value = exact.convert_to<double>();
    r.method = TailMethod::EXACT_BIGRATIONAL;
    return r;
  }
  double ln2n = static_cast<double>(n) * std::log(2.0);
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(b - a + 1));
  for (std::int64_t w = a; w <= b; ++w)
    terms.push_back(lchoose(static_cast<double>(n), static_cast<double>(w)) - ln2n);
  r.value = sum_exp(terms);
  r.method = TailMethod::LOG_SPACE_FLOAT;
  r.abs_error_bound = 1e-12;
  return r;
}

BinomRangeProb binom_range_prob(std::size_t n, double z1, double z2) {
  if (!(z1 < z2)) throw std::invalid_argument("binom_range_prob: need z1 < z2");
  double sq = std::sqrt(static_cast<double>(n));
  double half_n = 0.5 * static_cast<double>(n);
  std::int64_t lo = std::isinf(z1) ? 0
                                   : static_cast<std::int64_t>(std::ceil(half_n + 0.5 * z1 * sq));
  std::int64_t hi = std::isinf(z2)
                        ? static_cast<std::int64_t>(n)
                        : static_cast<std::int64_t>(std::floor(half_n + 0.5 * z2 * sq));
  BinomRangeProb out;
  out.exact = binom_weight_range(n, lo, hi);
  double n1 = std::isinf(z1) ? 1.0 : normal_N(z1);
  double n2 = std::isinf(z2) ? 0.0 : normal_N(z2);
  out.normal_approx = n1 - n2;
  return out;
}

double binom_tail_le(std::size_t trials, double p, std::int64_t kmax) {
  if (kmax < 0) return 0.0;
  if (kmax >= static_cast<std::int64_t>(trials)) return 1.0;
  double lp = std::log(p), lq = std::log1p(-p);
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(kmax) + 1);
  for (std::int64_t k = 0; k <= kmax; ++k) {
    double kk = static_cast<double>(k);
    terms.push_back(lchoose(static_cast<double>(trials), kk) + kk * lp +
                    (static_cast<double>(trials) - kk) * lq);
  }
  return std::min(1.0, sum_exp(terms));
}

namespace {

void hyp_check(std::size_t n, std::size_t m, std::size_t n1) {
  if (m > n || n1 > n) throw std::invalid_argument("hypergeom: need m <= n and n1 <= n");
}

std::int64_t hyp_kmin(std::size_t n, std::size_t m, std::size_t n1) {
  return std::max<std::int64_t>(0, static_cast<std::int64_t>(m + n1) - static_cast<std::int64_t>(n));
}

}  // namespace

double hypergeom_pmf(std::size_t k, std::size_t n, std::size_t m, std::size_t n1) {
  hyp_check(n, m, n1);
  std::int64_t kk = static_cast<std::int64_t>(k);
  if (kk < hyp_kmin(n, m, n1) || k > std::min(m, n1))
    throw std::invalid_argument("hypergeom_pmf: k outside support");
  double lt = lchoose(static_cast<double>(m), static_cast<double>(k)) +
              lchoose(static_cast<double>(n - m), static_cast<double>(n1 - k)) -
              lchoose(static_cast<double>(n), static_cast<double>(n1));
  return std::exp(lt);
}

double hypergeom_tail_le(std::int64_t kmax, std::size_t n, std::size_t m, std::size_t n1) {
  hyp_check(n, m, n1);
  std::int64_t lo = hyp_kmin(n, m, n1);
  std::int64_t hi = static_cast<std::int64_t>(std::min(m, n1));
  if (kmax < lo) return 0.0;
  if (kmax >= hi) return 1.0;
  double lden = lchoose(static_cast<double>(n), static_cast<double>(n1));
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(kmax - lo + 1));
  for (std::int64_t k = lo; k <= kmax; ++k) {
    terms.push_back(lchoose(static_cast<double>(m), static_cast<double>(k)) +
                    lchoose(static_cast<double>(n - m), static_cast<double>(n1 - k)) - lden);
  }
  return std::min(1.0, sum_exp(terms));
}

double hush_scovel_bound(std::size_t n, std::size_t m, std::size_t n1, double eta) {
  hyp_check(n, m, n1);
  if (m <= n1) throw std::invalid_argument("hush_scovel_bound: theorem assumes m > n1");
  if (m == n) return eta > 0 ? 0.0 : 1.0;  // degenerate: K is deterministic
  double beta = static_cast<double>(n) / (static_cast<double>(m) * static_cast<double>(n - m));
  return std::exp(-2.0 * beta * eta * eta);
}

}  // namespace ghd
