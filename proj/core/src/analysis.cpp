#include "hitlab/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hitlab {

namespace {

constexpr int kMaxCurveN = 8192;

}  // namespace

Lg lg_lambda(int n, int m, Lg lg_p) {
  if (n < 0 || m < 0 || m > n) throw DomainError("lg_lambda: need 0 <= m <= n");
  const Lg binom = lg_binomial(static_cast<std::uint32_t>(n),
                               static_cast<std::uint32_t>(m));
  const Lg penalty = hit_penalty(lg_p, static_cast<std::uint32_t>(n - m));
  return Lg(binom.value() + penalty.value());
}

ExpectationCurve curve(int n, Lg lg_p) {
  if (n < 1 || n > kMaxCurveN) {
    throw DomainError("curve: n must be in [1, " + std::to_string(kMaxCurveN) + "]");
  }
  ExpectationCurve c;
  c.n = n;
  c.lg_p = lg_p;
  c.values.reserve(n + 1);
  for (int m = 0; m <= n; ++m) c.values.push_back(lg_lambda(n, m, lg_p));
  return c;
}

Window finite_window(const ExpectationCurve& c) {
  if (c.values.empty()) throw DomainError("finite_window: empty curve");
  Window w;
  for (int m = 0; m <= c.n; ++m) {
    if (c.values[m].value() >= 0.0L) {
      w.h_hat = m;
      break;
    }
  }
  w.support_lo = w.h_hat;
  w.support_hi = std::min(w.h_hat + 1, c.n);
  return w;
}

AsymptoticPrediction dense_h(int n, double beta) {
  if (!(beta > 0.0 && beta < 1.0)) throw DomainError("dense_h: need 0 < beta < 1");
  if (n < 2) throw DomainError("dense_h: need n >= 2");
  const long double b = beta;
  // delta = beta^-beta (1-beta)^(beta-1); exp2/log2 form is exact at 1/2.
  const long double delta =
      std::exp2(-b * std::log2(b) - (1.0L - b) * std::log2(1.0L - b));
  const long double n_ln_delta = static_cast<long double>(n) * std::log(delta);
  if (n_ln_delta <= 1.0L) {
    throw DomainError("dense_h: n ln delta <= 1, prediction degenerate");
  }
  const long double phi = std::log2(n_ln_delta);
  AsymptoticPrediction p;
  p.phi = static_cast<double>(phi);
  p.delta = static_cast<double>(delta);
  p.h = static_cast<int>(std::floor((1.0L - b) * n - phi)) + 1;
  return p;
}

AsymptoticPrediction sparse_h(int n, double alpha) {
  if (!(alpha > 0.0)) throw DomainError("sparse_h: need alpha > 0");
  if (n < 2) throw DomainError("sparse_h: need n >= 2");
  const long double a = alpha;
  const long double lg_n = std::log2(static_cast<long double>(n));
  const long double inner = a * lg_n * std::log(static_cast<long double>(n));
  if (inner <= 1.0L) {
    throw DomainError("sparse_h: alpha lg n ln n <= 1, prediction degenerate");
  }
  const long double phi = std::log2(inner);
  AsymptoticPrediction p;
  p.phi = static_cast<double>(phi);
  p.h = static_cast<int>(std::floor(a * lg_n - phi)) + 1;
  return p;
}

int dense_i(int n, double beta) {
  return n - 2 - (dense_h(n, beta).h - 1);
}

MomentDiagnostics second_moment(int n, int m, Lg lg_lambda_m) {
  if (m < 1 || m > n - 1) throw DomainError("second_moment: need 1 <= m <= n-1");
  MomentDiagnostics d;
  d.m = m;
  // Inner log natural, outer lg base 2.
  d.split_s0 = 2.0L * std::log2(static_cast<long double>(m) *
                                std::log(static_cast<long double>(n)));
  const int split = static_cast<int>(std::ceil(d.split_s0));

  const long double lg_cnm =
      lg_binomial(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(m))
          .value();
  std::vector<Lg> tail_terms, head_terms;
  for (int s = 1; s <= m; ++s) {
    if (s > n - m) break;  // C(n-m,s) = 0 from here on
    const long double lg_term =
        lg_binomial(static_cast<std::uint32_t>(m), static_cast<std::uint32_t>(s))
            .value() +
        lg_binomial(static_cast<std::uint32_t>(n - m),
                    static_cast<std::uint32_t>(s))
            .value() +
        (std::exp2(static_cast<long double>(-s)) - 1.0L) * lg_cnm;
    (s >= split ? tail_terms : head_terms).emplace_back(lg_term);
  }
  d.tail_sum = std::exp2(lg_sum(tail_terms).value());
  d.head_sum = std::exp2(lg_sum(head_terms).value());
  d.pair_sum = d.tail_sum + d.head_sum;

  const long double ln_n = std::log(static_cast<long double>(n));
  d.range_ok = std::log(static_cast<long double>(m)) <
               (1.0L - 8.0L * std::log2(m * ln_n) / m) * ln_n;

  d.zero_prob_bound =
      std::max(0.0L, std::exp2(-lg_lambda_m.value()) - 1.0L + d.pair_sum);
  return d;
}

}  // namespace hitlab
