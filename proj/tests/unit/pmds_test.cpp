#include <doctest.h>

#include <random>

#include "ilrc/interleaved.hpp"
#include "ilrc/lrc.hpp"
#include "ilrc/pmds.hpp"
#include "oracles.hpp"

using namespace ilrc;

namespace {

const PmdsCode& instance_15_8_4_2() {
  static const PmdsCode c = pmds_random_search(FiniteField::binary(16), 15, 8, 4, 2, 10, 1);
  return c;
}

bool meets_groups_at_most(std::span<const Index> set, Index group_size, Index r) {
  std::vector<Index> hits(64, 0);
  for (Index i : set)
    if (++hits[static_cast<std::size_t>(i / group_size)] > r) return false;
  return true;
}

}  // namespace

TEST_CASE("random search finds a verified [15,8,4,2] PMDS code") {
  const auto& c = instance_15_8_4_2();
  CHECK(c.verified);
  CHECK(c.code.length() == 15);
  CHECK(c.code.dimension() == 8);
  CHECK(c.distance == 7);
  CHECK(c.seed == 1);
  const auto v = verify_pmds(c.code);
  CHECK(v.is_pmds);
  CHECK(v.patterns_checked == 125);
  CHECK(pmds_pattern_count(*c.code.locality()) == 125);
  // the global distance matches the singleton-like bound
  CHECK(min_distance_by_parity_columns(c.code, 100'000'000) == 7);

  // puncturing one position per group leaves an MDS [12,8,5] code
  const auto p = puncture(c.code, IndexSet{0, 7, 14});
  CHECK(p.dimension() == 8);
  CHECK(mds_witness_distance(p) == 15 - 3 - 8 + 1);

  // one erasure in a local group is filled from that group alone
  std::mt19937_64 rng(2);
  Word m(8);
  for (Index j = 0; j < 8; ++j) m(j) = c.code.field().random(rng);
  const Word w = encode(c.code, m);
  Word damaged = w;
  damaged(6) = 0;
  const auto rep = local_repair(c.code, *c.code.locality(), damaged, IndexSet{6}, 1);
  CHECK(rep.status == ErasureStatus::recovered);
  CHECK(rep.word == w);

  // seeded search is reproducible
  const auto again = pmds_random_search(FiniteField::binary(16), 15, 8, 4, 2, 10, 1);
  CHECK(again.code.generator() == c.code.generator());
}

TEST_CASE("small [6,3] instance over GF(2^16)") {
  const auto c = pmds_random_search(FiniteField::binary(16), 6, 3, 2, 2, 5, 77);
  const auto v = verify_pmds(c.code);
  CHECK(v.is_pmds);
  CHECK(v.patterns_checked == 9);
  CHECK(v.rank_checks <= 9 * 4);
}

TEST_CASE("degenerate and failing PMDS cases") {
  const auto gf16 = FiniteField::binary(4);
  SUBCASE("a single MDS group with no punctures") {
    std::vector<Element> pts;
    for (Element x = 1; x <= 10; ++x) pts.push_back(x);
    const ReedSolomonCode rs(gf16, pts, 4);
    LocalityPartition one{10, 1, {IndexSet{}}};
    for (Index i = 0; i < 10; ++i) one.groups[0].push_back(i);
    const auto v = verify_pmds(rs.code().with_locality(one));
    CHECK(v.is_pmds);
    CHECK(v.patterns_checked == 1);
  }
  SUBCASE("no global parities") {
    const auto c = pmds_random_search(FiniteField::binary(8), 15, 12, 4, 2, 1, 3);
    CHECK(c.attempts == 1);
    CHECK(c.code.redundancy() == 3);
    CHECK(verify_pmds(c.code).is_pmds);
  }
  SUBCASE("global parity supported on one group") {
    // H: one local parity per group plus a second check living on group 0 only
    const auto f = FiniteField::binary(8);
    GFMatrix h(f, 4, 9);
    for (Index g = 0; g < 3; ++g)
      for (Index j = 0; j < 3; ++j) h(g, 3 * g + j) = 1;
    h(3, 0) = 1;
    h(3, 1) = 2;
    h(3, 2) = 3;
    const auto code = LinearCode::from_parity_check(h).with_locality(LocalityPartition::contiguous(9, 2, 2));
    const auto v = verify_pmds(code);
    CHECK_FALSE(v.is_pmds);
    REQUIRE(v.witness_columns.has_value());
    REQUIRE(v.witness_pattern.has_value());
    CHECK(rank(select_columns(code.generator(), *v.witness_columns)) < code.dimension());
    for (Index p : *v.witness_pattern)
      CHECK(std::find(v.witness_columns->begin(), v.witness_columns->end(), p) == v.witness_columns->end());
  }
  SUBCASE("a field of four elements is too small") {
    CHECK_THROWS_AS(pmds_random_search(FiniteField::binary(2), 15, 8, 4, 2, 20, 5), SearchExhausted);
  }
  SUBCASE("budget is enforced") {
    const auto& c = instance_15_8_4_2();
    CHECK_THROWS_AS(verify_pmds(c.code, 1000), CodeError);
  }
}

TEST_CASE("G_S has full rank exactly when S meets every group in at most r positions") {
  const auto& c = instance_15_8_4_2();
  std::uint64_t in_family = 0;
  for_each_subset(15, 8, [&](const IndexSet& s) {
    const bool full = rank(select_columns(c.code.generator(), s)) == 8;
    const bool member = meets_groups_at_most(s, 5, 4);
    REQUIRE(full == member);
    in_family += member ? 1 : 0;
    return true;
  });
  CHECK(BigInt(in_family) == count_S_mu(15, 4, 2, 8).count);
}

TEST_CASE("(t+1)-independent supports and complements of S_{k+1}") {
  const auto& c = instance_15_8_4_2();
  const GFMatrix& h = c.code.parity_check();
  for (Index t = 0; t <= 7; ++t) {
    CAPTURE(t);
    std::uint64_t independent = 0, total = 0;
    for_each_subset(15, t, [&](const IndexSet& e) {
      const bool ind = is_t_plus_1_independent(h, e);
      // is there a (k+1)-subset of the complement inside S_{k+1}?
      const IndexSet comp = complement(15, e);
      std::vector<Index> per_group(3, 0);
      for (Index i : comp) ++per_group[static_cast<std::size_t>(i / 5)];
      Index capacity = 0;
      bool unsaturated = false;
      for (Index g : per_group) {
        capacity += std::min<Index>(g, 4);
        unsaturated = unsaturated || (g >= 1 && g <= 4);
      }
      // removing I and any further position must leave an information set
      REQUIRE(ind == (capacity >= 9 || (capacity == 8 && !unsaturated)));
      if (capacity >= 9) REQUIRE(ind);
      if (t == 6) REQUIRE(ind == (capacity >= 9));
      if (t <= 5) REQUIRE(ind);  // t <= d - 2
      if (t >= 7) REQUIRE_FALSE(ind);  // t >= n - k
      independent += ind ? 1 : 0;
      ++total;
      return true;
    });
    CHECK(BigInt(independent) == count_independent_supports(15, 8, 4, 2, static_cast<unsigned>(t)));
    CHECK(BigInt(independent) >= count_supports_avoiding_family(15, 8, 4, 2, static_cast<unsigned>(t)));
    if (t == 6) {
      CHECK(BigInt(independent) == count_supports_avoiding_family(15, 8, 4, 2, 6));
      CHECK(independent == 4375);
      CHECK(total == 5005);
    }
    if (t <= 6) {
      // fraction of independent t-sets is at least |S_9| / C(15, 9)
      CHECK(Rational(independent, total) >= count_S_mu(15, 4, 2, 9).ratio);
    }
  }
}

TEST_CASE("independence lemmas on a rho = 3 instance") {
  const auto c = pmds_random_search(FiniteField::binary(16), 12, 4, 2, 3, 10, 11);
  CHECK(verify_pmds(c.code).is_pmds);
  const GFMatrix& h = c.code.parity_check();
  const auto ratio = count_S_mu(12, 2, 3, 5).ratio;
  for (Index t = 0; t <= 7; ++t) {
    std::uint64_t independent = 0, total = 0;
    for_each_subset(12, t, [&](const IndexSet& e) {
      independent += is_t_plus_1_independent(h, e) ? 1 : 0;
      ++total;
      return true;
    });
    CAPTURE(t);
    CHECK(BigInt(independent) == count_independent_supports(12, 4, 2, 3, static_cast<unsigned>(t)));
    CHECK(Rational(independent, total) >= ratio);
    if (t == 7) CHECK(BigInt(independent) == count_S_mu(12, 2, 3, 5).count);
  }
  for_each_subset(12, 4, [&](const IndexSet& s) {
    REQUIRE((rank(select_columns(c.code.generator(), s)) == 4) == meets_groups_at_most(s, 4, 2));
    return true;
  });
}

TEST_CASE("set family counts") {
  const auto s9 = count_S_mu(15, 4, 2, 9);
  CHECK(s9.count == 4375);
  CHECK(s9.total == 5005);
  CHECK(s9.ratio == Rational(125, 143));
  REQUIRE(s9.enumerated.has_value());
  CHECK(*s9.enumerated == 4375);
  CHECK(oracle::count_bounded_subsets(15, 5, 4, 9) == 4375);

  const auto small = count_S_mu(15, 4, 2, 4);
  CHECK(small.count == 1365);
  CHECK(small.ratio == 1);

  CHECK(inclusion_exclusion_sum(15, 8, 4) == 630);
  CHECK(binomial(15, 9) - inclusion_exclusion_sum(15, 8, 4) == s9.count);

  CHECK_THROWS_AS(count_S_mu(14, 4, 2, 3), CodeError);

  // generating function against a bit-mask oracle on every small case
  for (unsigned rho = 2; rho <= 4; ++rho)
    for (unsigned r = 1; r <= 5; ++r) {
      const unsigned s = r + rho - 1;
      for (unsigned n = s; n <= 18; n += s)
        for (unsigned mu = 0; mu <= n; ++mu) {
          const auto got = count_S_mu(n, r, rho, mu);
          REQUIRE(got.count == oracle::count_bounded_subsets(n, s, r, mu));
          REQUIRE(got.count <= got.total);
          if (mu <= r) REQUIRE(got.ratio == 1);
        }
    }

  // the complement reading of the printed sum holds whenever groups have size r + 1
  for (unsigned r = 1; r <= 5; ++r)
    for (unsigned n = r + 1; n <= 20; n += r + 1)
      for (unsigned k = r; k + 1 <= n; ++k)
        REQUIRE(binomial(n, k + 1) - inclusion_exclusion_sum(n, k, r) == count_S_mu(n, r, 2, k + 1).count);
}

TEST_CASE("ratio lower bound") {
  const auto b = s_ratio_lower_bound(15, 8, 4, 2);
  CHECK(b.xi == 0);
  CHECK(b.exact == Rational(1) - Rational(15) * Rational(59049, 759375));
  CHECK(b.value == doctest::Approx(-0.1664).epsilon(1e-9));
  CHECK(b.exact <= Rational(125, 143));

  const auto big = s_ratio_lower_bound(60, 8, 4, 2);
  CHECK(big.value == doctest::Approx(1 - 60 * std::pow(9.0 / 60, 5)));
  CHECK(big.value == doctest::Approx(0.99544).epsilon(1e-5));
  CHECK(big.exact <= count_S_mu(60, 4, 2, 9).ratio);

  CHECK(s_ratio_lower_bound(24, 10, 4, 3).xi == 1);
  CHECK(s_ratio_lower_bound(24, 10, 2, 7).xi == 4);  // floor(8 / 2)

  int points = 0;
  for (unsigned rho = 2; rho <= 4; ++rho)
    for (unsigned r = 1; r <= 10; ++r) {
      const unsigned s = r + rho - 1;
      for (unsigned n = s; n <= 24; n += s)
        for (unsigned k = r; k <= (n / s) * r && k + 1 <= n; ++k) {
          const auto bound = s_ratio_lower_bound(n, k, r, rho);
          const auto exact = count_S_mu(n, r, rho, k + 1).ratio;
          CAPTURE(n);
          CAPTURE(k);
          CAPTURE(r);
          CAPTURE(rho);
          REQUIRE(bound.exact <= exact);
          ++points;
        }
    }
  CHECK(points >= 50);
}

TEST_CASE("asymptotic conditions") {
  const auto a = asymptotic_conditions(15, 8, 4, 2, 1.5, 1.1);
  CHECK(a.rate_condition);
  CHECK(a.rate_lhs == doctest::Approx(1.0));
  CHECK(a.rate_rhs == doctest::Approx(0.9));
  CHECK_FALSE(a.group_condition);
  CHECK(a.group_rhs == doctest::Approx(1.1 * std::log2(15.0) / std::log2(1.5)));
  CHECK(a.group_rhs == doctest::Approx(7.35).epsilon(1e-3));
  CHECK(a.remark_lhs == doctest::Approx(1.0));

  for (unsigned r = 1; r <= 60; ++r) CHECK_FALSE(asymptotic_conditions(64, 8, r, 3, 1.0001, 1.1).group_condition);
  // rho = 2: the rate condition is n > C1 (k + 1)
  CHECK(asymptotic_conditions(20, 8, 4, 2, 2.0, 1.1).rate_condition == (20 > 2.0 * 9));
  CHECK(asymptotic_conditions(20, 8, 4, 2, 2.5, 1.1).rate_condition == (20 > 2.5 * 9));
  CHECK_THROWS_AS(asymptotic_conditions(15, 8, 4, 2, 1.0, 1.1), CodeError);
}

TEST_CASE("ratio climbs toward one along a family meeting both conditions") {
  // local rate 2/3: r = 2j, rho = j + 1, four groups, k + 1 = n / 4
  Rational previous = 0;
  for (unsigned j = 6; j <= 12; ++j) {
    const unsigned r = 2 * j, rho = j + 1, n = 4 * (r + rho - 1), k = n / 4 - 1;
    const auto cond = asymptotic_conditions(n, k, r, rho, 1.5, 1.1);
    REQUIRE(cond.rate_condition);
    REQUIRE(cond.group_condition);
    const auto ratio = count_S_mu(n, r, rho, k + 1).ratio;
    CHECK(ratio >= previous);
    CHECK(s_ratio_lower_bound(n, k, r, rho).exact <= ratio);
    previous = ratio;
  }
  CHECK(to_double(previous) > 1 - 1e-6);
}
