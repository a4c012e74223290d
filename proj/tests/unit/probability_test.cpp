#include <doctest.h>

#include <cmath>
#include <random>

#include "ilrc/probability.hpp"
#include "oracles.hpp"

using namespace ilrc;

namespace {

oracle::SmallField small_field(unsigned q) {
  if (q == 4) return {2, 2, 0b111};
  return {q, 1, 0};
}

Real real_of(const Rational& p) {
  return Real(boost::multiprecision::numerator(p)) / Real(boost::multiprecision::denominator(p));
}

double rel_diff(const Real& a, const Real& b) {
  return boost::multiprecision::abs((a - b) / b).convert_to<double>();
}

}  // namespace

TEST_CASE("full-rank fraction examples") {
  CHECK(full_rank_fraction(2, 3, 2).exact == Rational(21, 32));
  CHECK(full_rank_fraction(2, 3, 2).exact == Rational(42, 64));
  for (unsigned q : {2u, 5u, 256u}) {
    CHECK(full_rank_fraction(q, 4, 0).exact == 1);
    CHECK(full_rank_fraction(q, 4, 5).exact == 0);
    CHECK(full_rank_fraction(q, 4, 5).log.zero);
  }
  CHECK(nonzero_column_full_rank_fraction(2, 3, 2) == Rational(42, 49));
  CHECK_THROWS(full_rank_fraction(1, 3, 2));
}

TEST_CASE("full-rank fraction equals exhaustive enumeration") {
  // the naive oracle and the span-walking oracle agree where both are cheap
  for (unsigned q : {2u, 3u})
    for (unsigned l = 1; l <= 3; ++l)
      for (unsigned t = 0; t <= 3; ++t) {
        if (std::pow(q, l * t) > 4096) continue;
        REQUIRE(oracle::count_full_rank(small_field(q), l, t) == oracle::count_full_rank_dfs(small_field(q), l, t));
      }
  int cases = 0;
  for (unsigned q : {2u, 3u, 4u})
    for (unsigned l = 1; l <= 4; ++l)
      for (unsigned t = 0; t <= 4; ++t) {
        if (std::pow(q, l * t) > std::pow(2.0, 20)) continue;
        const auto full = oracle::count_full_rank_dfs(small_field(q), l, t);
        const Rational expect(BigInt(full), big_pow(BigInt(q), l * t));
        REQUIRE(full_rank_fraction(q, l, t).exact == expect);
        ++cases;
      }
  CHECK(cases >= 40);
}

TEST_CASE("nonzero-column fraction equals enumeration") {
  const oracle::SmallField gf3 = small_field(3);
  for (unsigned l = 1; l <= 3; ++l)
    for (unsigned t = 1; t <= 3; ++t) {
      const auto full = oracle::count_full_rank_dfs(gf3, l, t);
      const BigInt nonzero = big_pow(big_pow(BigInt(3), l) - 1, t);
      REQUIRE(nonzero_column_full_rank_fraction(3, l, t) == Rational(BigInt(full), nonzero));
    }
}

TEST_CASE("rank-deficiency tail") {
  const auto small = rank_deficiency_tail_log10(2, 3, 2);
  REQUIRE(small.exact.has_value());
  CHECK(*small.exact == Rational(22, 64));
  CHECK(rel_diff(small.log10_value, boost::multiprecision::log10(Real(22) / 64)) < 1e-60);

  CHECK(rank_deficiency_tail_log10(7, 3, 0).zero);
  CHECK_THROWS(rank_deficiency_tail_log10(2, 3, 4));

  const auto big = rank_deficiency_tail_log10(256, 512, 5);
  CHECK(big.log10() >= -1224);
  CHECK(big.log10() <= -1222);
  // dominant term q^(t - 1 - l) = 2^(-4064)
  CHECK(std::abs(big.log10() + 4064 * std::log10(2.0)) < 0.01);
  // independent high-precision reference: -1223.38420259354207794607671631142321464
  const Real reference("-1223.384202593542077946076716311423214641");
  CHECK(rel_diff(big.log10_value, reference) < 1e-36);
  REQUIRE(big.exact.has_value());
  CHECK(rel_diff(big.log10_value, boost::multiprecision::log10(real_of(*big.exact))) < 1e-40);
}

TEST_CASE("rational and log paths agree") {
  for (unsigned q : {2u, 3u, 16u, 256u, 65536u})
    for (unsigned l = 1; l <= 12; ++l)
      for (unsigned t = 1; t <= l; ++t) {
        const auto tail = rank_deficiency_tail_log10(q, l, t);
        REQUIRE(tail.exact.has_value());
        const Real exact_log = boost::multiprecision::log10(real_of(*tail.exact));
        REQUIRE(rel_diff(tail.log10_value, exact_log) < 1e-12);
        const auto frac = full_rank_fraction(q, l, t);
        REQUIRE(rel_diff(frac.log.value(), real_of(frac.exact)) < 1e-30);
      }
}

TEST_CASE("log probabilities round-trip rationals") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 2000; ++i) {
    const BigInt den = BigInt(rng() % 1000000007 + 1) * BigInt(rng() | 1);
    const BigInt num = BigInt(rng()) % den + 1;
    const Rational p(num, den);
    const auto lp = LogProbability::from_rational(p);
    REQUIRE(lp.exact == p);
    REQUIRE(rel_diff(lp.value(), real_of(p)) < 1e-30);
  }
  CHECK(LogProbability::from_rational(0).zero);
  CHECK(std::isinf(LogProbability::from_rational(0).log10()));
  CHECK(LogProbability::from_rational(1).log10() == 0);
  CHECK_THROWS(LogProbability::from_rational(Rational(3, 2)));
}

TEST_CASE("PMDS success probability") {
  const BigInt q = big_pow(2, 36);
  const auto p = pmds_success_probability(15, 8, 4, 2, q, 6, 6);
  CHECK(p.supports == 4375);
  CHECK(p.total == 5005);
  CHECK(p.support_ratio == Rational(125, 143));
  CHECK(to_double(Rational(1) - p.rank_factor) < 1e-9);
  CHECK(to_double(Rational(1) - p.rank_factor) == doctest::Approx(1.45519152285786e-11).epsilon(1e-9));
  CHECK(p.product == p.rank_factor * Rational(125, 143));
  CHECK(to_double(p.product) == doctest::Approx(125.0 / 143).epsilon(1e-9));
  CHECK(to_double(p.difference) == doctest::Approx(18.0 / 143).epsilon(1e-9));

  // huge l: the rank factor tends to 1
  const auto limit = pmds_success_probability(15, 8, 4, 2, 256, 512, 6);
  CHECK(to_double(Rational(1) - limit.rank_factor) < 1e-300);

  const auto tiny = pmds_success_probability(6, 3, 2, 2, big_pow(2, 16), 2, 2);
  CHECK(tiny.support_ratio == Rational(9, 15));
  CHECK(tiny.product == full_rank_fraction(big_pow(2, 16), 2, 2).exact * Rational(3, 5));

  CHECK_THROWS_AS(pmds_success_probability(15, 8, 4, 3, q, 6, 6), CodeError);
  CHECK_THROWS_AS(pmds_success_probability(15, 8, 4, 2, q, 6, 5), CodeError);
  CHECK_THROWS_AS(pmds_success_probability(14, 7, 4, 2, q, 6, 6), CodeError);
}

TEST_CASE("Wilson interval") {
  // reference values from an independent statistics package at alpha = 0.01
  const auto a = wilson_interval(50, 100);
  CHECK(a.lo == doctest::Approx(0.3752796250448398).epsilon(1e-12));
  CHECK(a.hi == doctest::Approx(0.6247203749551602).epsilon(1e-12));
  const auto b = wilson_interval(0, 10);
  CHECK(b.lo == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(b.hi == doctest::Approx(0.3988540933049082).epsilon(1e-12));
  const auto c = wilson_interval(10, 10);
  CHECK(c.lo == doctest::Approx(0.6011459066950917).epsilon(1e-12));
  CHECK(c.hi == 1.0);
  const auto d = wilson_interval(8741, 10000);
  CHECK(d.lo == doctest::Approx(0.865306216534053).epsilon(1e-12));
  CHECK(d.hi == doctest::Approx(0.8823976896553722).epsilon(1e-12));
  CHECK(d.contains(0.8741));
  CHECK_THROWS(wilson_interval(0, 0));
  CHECK_THROWS(wilson_interval(3, 2));
}

TEST_CASE("outcome counts merge associatively") {
  std::mt19937_64 rng(32);
  auto random_counts = [&] {
    OutcomeCounts c;
    c.success = rng() % 100;
    c.failure = rng() % 100;
    c.miscorrection = rng() % 10;
    c.detected = c.failure / 2;
    c.trials = c.success + c.failure + c.miscorrection;
    return c;
  };
  for (int i = 0; i < 100; ++i) {
    const auto a = random_counts(), b = random_counts(), c = random_counts();
    REQUIRE(merge(merge(a, b), c) == merge(a, merge(b, c)));
    REQUIRE(merge(a, b) == merge(b, a));
    REQUIRE(merge(a, OutcomeCounts{}) == a);
  }
  CHECK_THROWS(OutcomeCounts{}.rate());
}
