#pragma once

#include <cstdint>
#include <optional>

#include "ghd/combinatorics.hpp"
#include "ghd/params.hpp"

namespace ghd {

enum class TailMethod { EXACT_BIGRATIONAL, LOG_SPACE_FLOAT, NORMAL_APPROX };

inline const char* to_string(TailMethod m) {
  switch (m) {
    case TailMethod::EXACT_BIGRATIONAL: return "exact_bigrational";
    case TailMethod::LOG_SPACE_FLOAT: return "log_space_float";
    default: return "normal_approx";
  }
}

/// A probability plus how it was computed. Exact results carry the exact
/// rational alongside the rounded double and a zero error bound.
struct TailResult {
  double value = 0.0;
  TailMethod method = TailMethod::LOG_SPACE_FLOAT;
  double abs_error_bound = 0.0;
  std::optional<BigRational> exact;
};

/// phi(x) = e^{-x^2/2} / sqrt(2 pi).
double normal_phi(double x);

/// N(x) = integral_x^inf phi, via the complementary error function.
double normal_N(double x);

/// ln N(x), stable for large x (asymptotic series beyond erfc range).
double log_normal_tail(double x);

/// T_n(c) = Pr[| |x| - n/2 | >= c sqrt(n)] for uniform x in {0,1}^n.
/// Exact big-rational summation for n <= 1000, log-space beyond
/// (abs error <= 1e-12 for n <= 1e5). c = 0 gives 1.
TailResult tail_Tn(std::size_t n, Rational c);

/// Same tail evaluated through an existing parameter set.
TailResult tail_Tn(const GhdParams& p);

/// T(c) = lim_n T_n(c) = 2 N(2c): the weight fluctuation is (z/2) sqrt(n),
/// so a c sqrt(n) deviation is 2c normal units.
double tail_T_limit(double c);

/// b with T(b) = target, by bisection; abs tol 1e-9.
double inverse_T(double target);

/// Exact Pr[lo <= W <= hi] for W ~ Binom(n, 1/2), log-space beyond the
/// exact cap. Bounds are clamped to [0, n]; an empty range gives 0.
TailResult binom_weight_range(std::size_t n, std::int64_t lo, std::int64_t hi);

/// Pr[n/2 + (z1/2) sqrt(n) <= |y| <= n/2 + (z2/2) sqrt(n)] exactly, plus
/// the Feller approximation N(z1) - N(z2).
struct BinomRangeProb {
  TailResult exact;
  double normal_approx;
};
BinomRangeProb binom_range_prob(std::size_t n, double z1, double z2);

/// Pr[B(trials, p) <= kmax], exact log-space summation.
double binom_tail_le(std::size_t trials, double p, std::int64_t kmax);

/// Hypergeometric pmf C(m,k) C(n-m, n1-k) / C(n, n1), log-space.
double hypergeom_pmf(std::size_t k, std::size_t n, std::size_t m, std::size_t n1);

/// Pr[K <= kmax]; kmax below the support gives 0, above gives 1.
double hypergeom_tail_le(std::int64_t kmax, std::size_t n, std::size_t m, std::size_t n1);

/// Hush-Scovel upper bound exp(-2 beta eta^2) on Pr[K - E[K] > eta], with
/// beta = n / (m (n-m)) and the (1+o(1)) factor taken as 1.
double hush_scovel_bound(std::size_t n, std::size_t m, std::size_t n1, double eta);

}  // namespace ghd
