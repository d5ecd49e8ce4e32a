#include "hitlab/sampler.hpp"

#include <cmath>
#include <limits>
#include <set>
#include <string>
#include <vector>

namespace hitlab {

namespace {

constexpr long double kLn2 = 0.69314718055994530941723212145817657L;
constexpr double kMaxMu = 1e8;

std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = x;
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

// xoshiro256++ (Blackman & Vigna), state expanded from the trial seed
// with splitmix64. Fixed for reproducibility; see README before touching.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& w : s_) w = splitmix64(x);
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform in (0,1], 53-bit grid; never returns 0 so logs are safe.
  long double unit() {
    return static_cast<long double>((next() >> 11) + 1) * 0x1.0p-53L;
  }

 private:
  static std::uint64_t rotl(std::uint64_t v, int k) {
    return (v << k) | (v >> (64 - k));
  }
  std::uint64_t s_[4];
};

// Poisson via the unit-rate arrival race: K = #exponentials summing
// below mu. O(mu) draws, deterministic in the stream order.
std::uint64_t draw_poisson(Rng& rng, long double mu) {
  std::uint64_t k = 0;
  long double acc = 0.0L;
  for (;;) {
    acc += -std::log(rng.unit());
    if (acc >= mu) return k;
    ++k;
  }
}

SetSystem sample_bernoulli_scan(int n, long double lg_p, Rng& rng) {
  // ln(1-p) from lg_p via the shared series: hit_penalty(lg_p,1) = lg(1-p).
  const long double ln1mp = hit_penalty(Lg(lg_p), 1).value() * kLn2;
  std::vector<Edge> edges;
  if (ln1mp == 0.0L) return SetSystem::from_bitvecs(n, std::move(edges));

  const std::uint64_t max_idx = (std::uint64_t{1} << n) - 1;
  std::uint64_t pos = 1;
  for (;;) {
    const long double gap = std::floor(std::log(rng.unit()) / ln1mp);
    if (gap > static_cast<long double>(max_idx - pos)) break;
    const std::uint64_t idx = pos + static_cast<std::uint64_t>(gap);
    Edge e(n);
    e.words()[0] = idx;
    edges.push_back(std::move(e));
    if (idx == max_idx) break;
    pos = idx + 1;
  }
  return SetSystem::from_bitvecs(n, std::move(edges));
}

SetSystem sample_poissonized(int n, long double mu, Rng& rng) {
  const std::uint64_t k = draw_poisson(rng, mu);
  const int nwords = (n + 63) / 64;
  const std::uint64_t top_mask =
      (n & 63) ? (std::uint64_t{1} << (n & 63)) - 1 : ~std::uint64_t{0};

  std::set<std::vector<std::uint64_t>> seen;
  while (seen.size() < k) {
    std::vector<std::uint64_t> w(nwords);
    bool nonzero = false;
    for (int i = 0; i < nwords; ++i) {
      w[i] = rng.next();
      if (i == nwords - 1) w[i] &= top_mask;
      nonzero |= w[i] != 0;
    }
    if (!nonzero) continue;     // reject the empty subset, redraw
    seen.insert(std::move(w));  // collision leaves the set unchanged: redraw
  }

  std::vector<Edge> edges;
  edges.reserve(seen.size());
  for (const auto& w : seen) {
    Edge e(n);
    for (int i = 0; i < nwords; ++i) e.words()[i] = w[i];
    edges.push_back(std::move(e));
  }
  return SetSystem::from_bitvecs(n, std::move(edges));
}

}  // namespace

Regime Regime::dense(double beta) {
  if (!(beta > 0.0 && beta < 1.0)) throw DomainError("dense regime needs 0 < beta < 1");
  return Regime(Kind::dense, beta, Lg(0.0L));
}

Regime Regime::sparse(double alpha) {
  if (!(alpha > 0.0)) throw DomainError("sparse regime needs alpha > 0");
  return Regime(Kind::sparse, alpha, Lg(0.0L));
}

Regime Regime::explicit_lg_p(Lg lg_p) {
  if (lg_p.value() > 0.0L) throw DomainError("explicit regime needs lg_p <= 0");
  return Regime(Kind::explicit_lg_p, 0.0, lg_p);
}

double Regime::beta() const {
  if (kind_ != Kind::dense) throw DomainError("beta: not a dense regime");
  return param_;
}

double Regime::alpha() const {
  if (kind_ != Kind::sparse) throw DomainError("alpha: not a sparse regime");
  return param_;
}

Lg Regime::explicit_value() const {
  if (kind_ != Kind::explicit_lg_p) throw DomainError("explicit_value: not explicit");
  return lg_p_;
}

Lg lg_p_of(const Regime& regime, int n) {
  if (n < 1) throw DomainError("lg_p_of: n >= 1 required");
  switch (regime.kind()) {
    case Regime::Kind::dense:
      return Lg(-static_cast<long double>(regime.beta()) * n);
    case Regime::Kind::sparse:
      return Lg(static_cast<long double>(regime.alpha()) *
                    std::log2(static_cast<long double>(n)) -
                n);
    case Regime::Kind::explicit_lg_p:
      return regime.explicit_value();
  }
  throw DomainError("lg_p_of: bad regime");
}

Seed trial_seed(Seed master, std::uint64_t index) {
  std::uint64_t z = master.master ^ (index * 0x9E3779B97F4A7C15ull);
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return Seed{z};
}

SetSystem sample_system(int n, const Regime& regime, Seed seed, SampleMethod method) {
  if (n < 1 || n > kMaxGroundSize) {
    throw DomainError("sample_system: n must be in [1, " +
                      std::to_string(kMaxGroundSize) + "]");
  }
  const long double lg_p = lg_p_of(regime, n).value();

  // mu = (2^n - 1) p, in log domain for n >= 64 (relative error < 2^-64).
  long double mu;
  if (n <= 63) {
    mu = (std::exp2(static_cast<long double>(n)) - 1.0L) * std::exp2(lg_p);
  } else {
    mu = std::exp2(static_cast<long double>(n) + lg_p);
  }
  if (mu > kMaxMu) {
    throw InstanceTooLargeError(
        static_cast<double>(mu),
        "sample_system: expected edge count mu = " +
            std::to_string(static_cast<double>(mu)) + " exceeds 1e8");
  }

  if (method == SampleMethod::automatic) {
    method = (n <= 63) ? SampleMethod::bernoulli_scan : SampleMethod::poissonized;
  }
  Rng rng(seed.master);
  if (method == SampleMethod::bernoulli_scan) {
    if (n > 63) throw DomainError("bernoulli_scan needs n <= 63");
    return sample_bernoulli_scan(n, lg_p, rng);
  }
  return sample_poissonized(n, mu, rng);
}

}  // namespace hitlab
