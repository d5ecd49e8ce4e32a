#pragma once

#include <cstdint>

#include "hitlab/numerics.hpp"
#include "hitlab/set_system.hpp"

namespace hitlab {

// Which p-family is in force. Each family yields lg p exactly, so p as
// small as n^alpha / 2^n stays representable at any supported n.
class Regime {
 public:
  enum class Kind { dense, sparse, explicit_lg_p };

  static Regime dense(double beta);          // p = 2^(-beta n), 0 < beta < 1
  static Regime sparse(double alpha);        // p = n^alpha / 2^n, alpha > 0
  static Regime explicit_lg_p(Lg lg_p);      // p = 2^lg_p, lg_p <= 0

  Kind kind() const { return kind_; }
  double beta() const;           // dense only
  double alpha() const;          // sparse only
  Lg explicit_value() const;     // explicit_lg_p only

 private:
  Regime(Kind kind, double param, Lg lg_p)
      : kind_(kind), param_(param), lg_p_(lg_p) {}

  Kind kind_;
  double param_;
  Lg lg_p_;
};

// lg p for the regime at ground size n: dense -> -beta*n,
// sparse -> alpha*lg n - n, explicit -> as given.
Lg lg_p_of(const Regime& regime, int n);

struct Seed {
  std::uint64_t master = 0;
};

// Derives the seed for trial `index` from the master seed. Bit-exact,
// platform-independent: z = master XOR (index * 0x9E3779B97F4A7C15);
// z ^= z>>30; z *= 0xBF58476D1CE4E5B9; z ^= z>>27;
// z *= 0x94D049BB133111EB; z ^= z>>31 (all mod 2^64).
Seed trial_seed(Seed master, std::uint64_t index);

// bernoulli_scan walks subset indices 1..2^n-1 with geometric gap
// skipping (exact Bernoulli process; needs n <= 63). poissonized draws
// the edge count from Poisson(mu), mu = (2^n - 1) p, then that many
// distinct uniform nonempty subsets; total-variation error <= mu*p.
// automatic picks bernoulli_scan for n <= 63, poissonized for n >= 64.
enum class SampleMethod { automatic, bernoulli_scan, poissonized };

// Draws R(n,p): every nonempty subset of {1..n} included independently
// with probability p = 2^(lg p). Pure in (n, regime, seed, method).
// Refuses instances with mu > 1e8 (InstanceTooLargeError).
SetSystem sample_system(int n, const Regime& regime, Seed seed,
                        SampleMethod method = SampleMethod::automatic);

}  // namespace hitlab
