#include "hitlab/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace hitlab {

namespace {

constexpr long double kLn2 = 0.69314718055994530941723212145817657L;
constexpr std::uint32_t kMaxN = 1u << 20;

}  // namespace

Lg::Lg(long double v) : v_(v) {
  if (std::isnan(v) || v == std::numeric_limits<long double>::infinity()) {
    throw DomainError("Lg must be finite or -infinity");
  }
}

Lg Lg::neg_inf() {
  return Lg(-std::numeric_limits<long double>::infinity());
}

bool Lg::is_neg_inf() const {
  return v_ == -std::numeric_limits<long double>::infinity();
}

Lg lg_binomial(std::uint32_t n, std::uint32_t m) {
  if (m > n) throw DomainError("lg_binomial: m > n");
  if (n > kMaxN) throw DomainError("lg_binomial: n > 2^20");
  if (m == 0 || m == n) return Lg(0.0L);
  if (m == 1 || m == n - 1) return Lg(std::log2(static_cast<long double>(n)));
  if (n <= 64) {
    // Exact product; C(64,32) < 2^63 so the running value fits a u64.
    // Multiply via 128-bit intermediate, divide at each step (always exact:
    // a prefix product of C(n,i) terms is an integer).
    unsigned __int128 c = 1;
    std::uint32_t r = std::min(m, n - m);
    for (std::uint32_t i = 1; i <= r; ++i) {
      c = c * (n - r + i) / i;
    }
    return Lg(std::log2(static_cast<long double>(static_cast<std::uint64_t>(c))));
  }
  long double v = std::lgamma(static_cast<long double>(n) + 1.0L) -
                  std::lgamma(static_cast<long double>(m) + 1.0L) -
                  std::lgamma(static_cast<long double>(n - m) + 1.0L);
  return Lg(v / kLn2);
}

Lg hit_penalty(Lg lg_p, std::uint32_t k) {
  if (lg_p.value() > 0.0L) throw DomainError("hit_penalty: lg_p > 0 means p > 1");
  if (k > kMaxN) throw DomainError("hit_penalty: k > 2^20");
  if (k == 0) return Lg(0.0L);  // 2^0 - 1 = 0
  const long double lp = lg_p.value();
  const long double p = std::exp2(lp);

  // lg(1-p) = -(p + p^2/2 + p^3/3 + ...)/ln 2 = -(p/ln 2) * (1 + c)
  // with c = p/2 + p^2/3 + ... For p > 1/2 the series tail converges
  // slowly; there 1-p is representable and log1p is used directly.
  long double result;
  if (p > 0.5L) {
    const long double lg1mp =
        std::log2(-std::expm1(lp * kLn2));  // lg(1-p), possibly -inf at p=1
    const long double factor = std::exp2(static_cast<long double>(k)) - 1.0L;
    result = factor * lg1mp;
  } else {
    long double c = 0.0L;
    if (p > 0.0L) {
      long double pow = p;  // p^(j-1) at the start of iteration j
      for (int j = 2;; ++j) {
        const long double term = pow / j;
        c += term;
        if (term < 1e-18L * (1.0L + c)) break;
        pow *= p;
      }
    }
    // (2^k - 1) * p = 2^(k + lg_p) * (1 - 2^-k)
    const long double lead = std::exp2(static_cast<long double>(k) + lp);
    const long double scale =
        (k >= 64) ? 1.0L : 1.0L - std::exp2(-static_cast<long double>(k));
    result = -(lead * scale) * (1.0L + c) / kLn2;
  }
  if (std::isnan(result)) result = -std::numeric_limits<long double>::infinity();
  return Lg(result == 0.0L ? 0.0L : result);  // normalize -0
}

Lg lg_sum(std::span<const Lg> terms) {
  long double top = -std::numeric_limits<long double>::infinity();
  for (const Lg& t : terms) top = std::max(top, t.value());
  if (top == -std::numeric_limits<long double>::infinity()) return Lg::neg_inf();
  long double acc = 0.0L;
  for (const Lg& t : terms) {
    if (!t.is_neg_inf()) acc += std::exp2(t.value() - top);
  }
  return Lg(top + std::log2(acc));
}

Lg lg_sum(std::initializer_list<Lg> terms) {
  return lg_sum(std::span<const Lg>(terms.begin(), terms.size()));
}

}  // namespace hitlab
