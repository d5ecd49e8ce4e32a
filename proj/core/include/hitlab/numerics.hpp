#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>

#include "hitlab/errors.hpp"

namespace hitlab {

// A base-2 logarithm. lg means log2 everywhere in this project.
//
// Values are finite or -infinity (the log of a true zero), never NaN.
// Backed by long double (x87 extended precision, 64-bit mantissa):
// lg-domain quantities here span roughly +-2^1024 and need ~10
// significant digits after large cancellations.
class Lg {
 public:
  constexpr Lg() = default;
  explicit Lg(long double v);  // throws DomainError on NaN or +inf

  static Lg neg_inf();

  long double value() const { return v_; }
  bool is_neg_inf() const;

  friend bool operator==(Lg a, Lg b) { return a.v_ == b.v_; }
  friend bool operator<(Lg a, Lg b) { return a.v_ < b.v_; }
  friend bool operator<=(Lg a, Lg b) { return a.v_ <= b.v_; }
  friend bool operator>(Lg a, Lg b) { return a.v_ > b.v_; }
  friend bool operator>=(Lg a, Lg b) { return a.v_ >= b.v_; }

 private:
  long double v_ = 0.0L;
};

// lg C(n,m). Exact big-integer product for n <= 64, log-gamma above.
// Requires m <= n <= 2^20; relative error of the lg value <= 1e-12.
Lg lg_binomial(std::uint32_t n, std::uint32_t m);

// (2^k - 1) * lg(1 - p) with p given as its base-2 log (p = 2^lg_p).
//
// The dominant product 2^k * p is formed in log domain as 2^(k + lg_p),
// so p as small as 2^-1000 and k as large as 2^20 never underflow.
// Result is <= 0; relative error <= 1e-10 whenever |result| > 2^-60.
// Magnitudes beyond long-double range saturate to -infinity.
Lg hit_penalty(Lg lg_p, std::uint32_t k);

// lg(sum of 2^t_i). Empty input yields -infinity. Stable: the largest
// term is factored out before summation.
Lg lg_sum(std::span<const Lg> terms);
Lg lg_sum(std::initializer_list<Lg> terms);

}  // namespace hitlab
