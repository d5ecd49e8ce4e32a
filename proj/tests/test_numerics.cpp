#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "doctest.h"
#include "hitlab/numerics.hpp"
#include "oracles.hpp"

using hitlab::Lg;

namespace {

double rel_err(long double got, long double want) {
  return static_cast<double>(std::fabs(got - want) / std::fabs(want));
}

}  // namespace

TEST_CASE("lg_binomial small values") {
  CHECK(rel_err(hitlab::lg_binomial(4, 2).value(), 2.584962500721156L) < 1e-12);
  CHECK(hitlab::lg_binomial(0, 0).value() == 0.0L);
  CHECK(hitlab::lg_binomial(7, 0).value() == 0.0L);
  CHECK(hitlab::lg_binomial(1 << 20, 0).value() == 0.0L);
  CHECK(hitlab::lg_binomial(9, 9).value() == 0.0L);
  CHECK(rel_err(hitlab::lg_binomial(10, 1).value(), std::log2(10.0L)) < 1e-15);
}

TEST_CASE("lg_binomial matches the big-integer oracle at (64,26)") {
  const long double want = std::log2(static_cast<long double>(oracle::binomial(64, 26)));
  CHECK(rel_err(hitlab::lg_binomial(64, 26).value(), want) < 1e-9);
  // frozen from an independent high-precision evaluation
  CHECK(rel_err(hitlab::lg_binomial(64, 26).value(), 59.06148110427887L) < 1e-12);
}

TEST_CASE("lg_binomial symmetry and Pascal identity") {
  std::mt19937_64 gen(11);
  for (int it = 0; it < 300; ++it) {
    const std::uint32_t n = 2 + gen() % ((it % 3 == 0) ? (1u << 20) : 2000u);
    const std::uint32_t m = gen() % (n + 1);
    const long double a = hitlab::lg_binomial(n, m).value();
    const long double b = hitlab::lg_binomial(n, n - m).value();
    if (a == 0.0L) {
      CHECK(b == 0.0L);
    } else {
      CHECK(rel_err(a, b) < 1e-12);
    }
  }
  for (int it = 0; it < 200; ++it) {
    const std::uint32_t n = 2 + gen() % 300;
    const std::uint32_t m = 1 + gen() % (n - 1);
    const Lg lhs = hitlab::lg_binomial(n, m);
    const Lg rhs = hitlab::lg_sum(
        {hitlab::lg_binomial(n - 1, m - 1), hitlab::lg_binomial(n - 1, m)});
    CHECK(rel_err(lhs.value(), rhs.value()) < 1e-10);
  }
}

TEST_CASE("lg_binomial domain errors") {
  CHECK_THROWS_AS(hitlab::lg_binomial(3, 4), hitlab::DomainError);
  CHECK_THROWS_AS(hitlab::lg_binomial((1u << 20) + 1, 2), hitlab::DomainError);
}

TEST_CASE("hit_penalty exact and frozen values") {
  CHECK(std::fabs(hitlab::hit_penalty(Lg(-1.0L), 4).value() + 15.0L) < 1e-12);
  CHECK(hitlab::hit_penalty(Lg(-1.0L), 0).value() == 0.0L);
  CHECK(hitlab::hit_penalty(Lg(-123.25L), 0).value() == 0.0L);
  CHECK(rel_err(hitlab::hit_penalty(Lg(-3.0L), 5).value(),
                -5.971997416214273L) < 1e-10);
}

TEST_CASE("hit_penalty stays accurate deep in log domain") {
  // (2^1000 - 1) lg(1 - 2^-1000): the factor and p only meet in log space.
  CHECK(rel_err(hitlab::hit_penalty(Lg(-1000.0L), 1000).value(),
                -1.4426950408889634L) < 1e-10);
  // far below 2^-60: only sign and magnitude sanity are required
  const long double tiny = hitlab::hit_penalty(Lg(-2000.0L), 500).value();
  CHECK(tiny <= 0.0L);
  CHECK(std::fabs(tiny) < std::exp2(-1400.0L));
}

TEST_CASE("hit_penalty agrees with naive evaluation for moderate p") {
  std::mt19937_64 gen(12);
  std::uniform_real_distribution<double> lg_p_dist(-20.0, 0.0);
  for (int it = 0; it < 2000; ++it) {
    const double lg_p = lg_p_dist(gen);
    const std::uint32_t k = gen() % 31;
    const double naive =
        (std::exp2(static_cast<double>(k)) - 1.0) * std::log2(1.0 - std::exp2(lg_p));
    const long double got = hitlab::hit_penalty(Lg(lg_p), k).value();
    if (naive == 0.0) {
      CHECK(got == 0.0L);
    } else {
      CHECK(rel_err(got, naive) < 1e-8);
    }
  }
}

TEST_CASE("hit_penalty is nonpositive and strictly decreasing in k") {
  std::mt19937_64 gen(13);
  std::uniform_real_distribution<double> lg_p_dist(-100.0, -0.01);
  for (int it = 0; it < 200; ++it) {
    const Lg lg_p(lg_p_dist(gen));
    long double prev = hitlab::hit_penalty(lg_p, 0).value();
    CHECK(prev == 0.0L);
    for (std::uint32_t k = 1; k <= 12; ++k) {
      const long double cur = hitlab::hit_penalty(lg_p, k).value();
      CHECK(cur < prev);
      prev = cur;
    }
  }
}

TEST_CASE("hit_penalty rejects p > 1") {
  CHECK_THROWS_AS(hitlab::hit_penalty(Lg(0.5L), 3), hitlab::DomainError);
}

TEST_CASE("lg_sum examples") {
  CHECK(std::fabs(hitlab::lg_sum({Lg(0.0L), Lg(0.0L)}).value() - 1.0L) < 1e-15);
  CHECK(hitlab::lg_sum({Lg(-3.25L)}).value() == -3.25L);
  CHECK(rel_err(hitlab::lg_sum({Lg(0.0L), Lg(-1.0L), Lg(-2.0L)}).value(),
                0.8073549220576041L) < 1e-12);
  CHECK(hitlab::lg_sum(std::initializer_list<Lg>{}).is_neg_inf());
  CHECK(hitlab::lg_sum({Lg::neg_inf()}).is_neg_inf());
  CHECK(hitlab::lg_sum({Lg(0.0L), Lg::neg_inf()}).value() == 0.0L);
}

TEST_CASE("lg_sum permutation invariance and monotonicity") {
  std::mt19937_64 gen(14);
  std::uniform_real_distribution<double> dist(-300.0, 300.0);
  for (int it = 0; it < 100; ++it) {
    std::vector<Lg> terms;
    const int len = 1 + gen() % 12;
    for (int i = 0; i < len; ++i) terms.emplace_back((long double)dist(gen));
    const long double base = hitlab::lg_sum(terms).value();
    std::shuffle(terms.begin(), terms.end(), gen);
    CHECK(rel_err(hitlab::lg_sum(terms).value(), base) < 1e-15);
    const int bump = gen() % len;
    terms[bump] = Lg(terms[bump].value() + 0.5L);
    CHECK(hitlab::lg_sum(terms).value() > base);
  }
}

TEST_CASE("lg_sum is stable for many equal tiny terms") {
  std::vector<Lg> terms(1000, Lg(-10000.0L));
  const long double want = -10000.0L + std::log2(1000.0L);
  CHECK(rel_err(hitlab::lg_sum(terms).value(), want) < 1e-12);
}

TEST_CASE("Lg rejects NaN and +inf") {
  CHECK_THROWS_AS(Lg(std::nan("")), hitlab::DomainError);
  CHECK_THROWS_AS(Lg(std::numeric_limits<long double>::infinity()),
                  hitlab::DomainError);
  CHECK(Lg::neg_inf().is_neg_inf());
}
