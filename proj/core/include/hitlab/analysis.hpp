#pragma once

#include <optional>
#include <vector>

#include "hitlab/numerics.hpp"

namespace hitlab {

// lg of the expected number of hitting sets of each size m in 0..n.
struct ExpectationCurve {
  int n = 0;
  Lg lg_p;
  std::vector<Lg> values;  // index m; values[n] == 0 exactly
};

// Finite-n two-point window: h_hat is the least m whose expected count
// reaches 1, and the predicted support is {h_hat, h_hat+1} (clipped at n).
struct Window {
  int h_hat = 0;
  int support_lo = 0;
  int support_hi = 0;
};

struct AsymptoticPrediction {
  int h = 0;
  double phi = 0.0;             // the correction term subtracted inside floor
  std::optional<double> delta;  // dense only: beta^-beta (1-beta)^(beta-1)
};

// Second-moment diagnostics at one m. pair_sum is the overlap series
// sum over s = 1..m of C(m,s) C(n-m,s) C(n,m)^(2^-s - 1); it splits at
// split_s0 into tail_sum (s >= ceil(split_s0)) and head_sum (the rest).
// range_ok reports whether m sits in the band where the head vanishes:
// ln m < (1 - 8 lg(m ln n)/m) ln n. zero_prob_bound is the Chebyshev
// bound on P(no hitting set of size m), meaningful when lambda >= 1:
// max(0, 1/lambda - 1 + pair_sum).
struct MomentDiagnostics {
  int m = 0;
  long double split_s0 = 0.0L;
  long double pair_sum = 0.0L;
  long double tail_sum = 0.0L;
  long double head_sum = 0.0L;
  bool range_ok = false;
  long double zero_prob_bound = 0.0L;
};

// lg lambda_m = lg C(n,m) + (2^(n-m) - 1) lg(1-p). The -1 in the
// exponent is the empty-set correction and is used everywhere.
Lg lg_lambda(int n, int m, Lg lg_p);

// Full curve for m in 0..n. Requires 1 <= n <= 8192 so every value is
// finite in extended precision.
ExpectationCurve curve(int n, Lg lg_p);

// h_hat = least m with lg lambda_m >= 0 (exists: lg lambda_n = 0).
Window finite_window(const ExpectationCurve& c);

// Dense regime p = 2^(-beta n): h = floor((1-beta) n - lg(n ln delta)) + 1
// with delta = beta^-beta (1-beta)^(beta-1). The vanishing correction
// term of the limit statement is dropped; callers compare with a +-1
// tolerance. Throws when n ln delta <= 1 (degenerate tiny n).
AsymptoticPrediction dense_h(int n, double beta);

// Sparse regime p = n^alpha / 2^n:
// h = floor(alpha lg n - lg(alpha lg n ln n)) + 1. Requires
// alpha lg n ln n > 1.
AsymptoticPrediction sparse_h(int n, double alpha);

// Predicted maximal independent set size: n - 2 - (dense_h(n,beta).h - 1).
int dense_i(int n, double beta);

// Diagnostics for 1 <= m <= n-1; lg_lambda_m is the value at the same
// (n, m, lg p). Everything is computed in log domain.
MomentDiagnostics second_moment(int n, int m, Lg lg_lambda_m);

}  // namespace hitlab
