#include "ilrc/pmds.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "ilrc/lrc.hpp"

namespace ilrc {

BigInt pmds_pattern_count(const LocalityPartition& partition) {
  BigInt total = 1;
  for (const auto& g : partition.groups)
    total *= binomial(static_cast<unsigned>(g.size()), static_cast<unsigned>(partition.rho - 1));
  return total;
}

Index pmds_distance(Index n, Index k, int r, int rho) { return lrc_singleton_bound(n, k, r, rho); }

namespace {

// Calls f(punctured positions) for every choice of rho - 1 positions per group.
template <class F>
bool for_each_pattern(const LocalityPartition& p, F&& f) {
  const auto drop = static_cast<Index>(p.rho - 1);
  const std::size_t groups = p.groups.size();
  std::vector<std::vector<IndexSet>> choices(groups);
  for (std::size_t g = 0; g < groups; ++g) {
    const IndexSet& members = p.groups[g];
    for_each_subset(static_cast<Index>(members.size()), drop, [&](const IndexSet& s) {
      IndexSet chosen;
      for (Index i : s) chosen.push_back(members[static_cast<std::size_t>(i)]);
      choices[g].push_back(std::move(chosen));
      return true;
    });
  }
  std::vector<std::size_t> idx(groups, 0);
  for (;;) {
    IndexSet pattern;
    for (std::size_t g = 0; g < groups; ++g)
      pattern.insert(pattern.end(), choices[g][idx[g]].begin(), choices[g][idx[g]].end());
    std::sort(pattern.begin(), pattern.end());
    if (!f(pattern)) return false;
    std::size_t g = 0;
    while (g < groups && ++idx[g] == choices[g].size()) idx[g++] = 0;
    if (g == groups) return true;
  }
}

}  // namespace

PmdsVerification verify_pmds(const LinearCode& code, std::uint64_t budget) {
  if (!code.locality()) throw CodeError("PMDS verification needs a locality partition");
  const LocalityPartition& part = *code.locality();
  if (!part.equal_sizes()) throw CodeError("PMDS verification needs equal group sizes");
  const Index n = code.length();
  const Index k = code.dimension();
  const Index s = part.r + part.rho - 1;
  if (static_cast<Index>(part.groups.front().size()) != s)
    throw CodeError("groups must have size r + rho - 1");
  if (n > 64) throw CodeError("PMDS verification supports n <= 64");
  const Index kept = n - static_cast<Index>(part.groups.size()) * (part.rho - 1);

  const BigInt work = pmds_pattern_count(part) * binomial(static_cast<unsigned>(kept), static_cast<unsigned>(k));
  if (work > BigInt(budget))
    throw CodeError("PMDS verification needs " + work.str() + " rank checks, over the budget");

  PmdsVerification out;
  const LocalityCertificate cert = verify_locality(code, part);
  if (!cert.holds) {
    out.witness_group = cert.violating_groups.front();
    return out;
  }

  std::unordered_set<std::uint64_t> checked;
  const GFMatrix& g = code.generator();
  out.is_pmds = for_each_pattern(part, [&](const IndexSet& pattern) {
    ++out.patterns_checked;
    const IndexSet keep = complement(n, pattern);
    return for_each_subset(static_cast<Index>(keep.size()), k, [&](const IndexSet& sub) {
      IndexSet cols;
      for (Index i : sub) cols.push_back(keep[static_cast<std::size_t>(i)]);
      if (!checked.insert(set_to_mask(cols)).second) return true;
      ++out.rank_checks;
      if (rank(select_columns(g, cols)) == k) return true;
      out.witness_pattern = pattern;
      out.witness_columns = cols;
      return false;
    });
  });
  return out;
}

PmdsCode pmds_random_search(const FiniteField& field, Index n, Index k, int r, int rho,
                            int max_attempts, std::uint64_t seed) {
  if (r < 1 || rho < 1) throw CodeError("r and rho must be positive");
  const Index s = r + rho - 1;
  if (n % s != 0) throw CodeError("r + rho - 1 must divide n");
  const Index groups = n / s;
  const Index global = n - k - groups * (rho - 1);
  if (k < 1 || k > groups * r || global < 0) throw CodeError("k out of range for the locality");
  if (rho > 2 && static_cast<std::uint64_t>(s) > field.max_element())
    throw CodeError("field too small for local Vandermonde parities");
  if (max_attempts < 1) throw CodeError("max_attempts must be positive");

  std::vector<Element> alpha(static_cast<std::size_t>(s));
  Element x = 1;
  for (auto& a : alpha) {
    a = x;
    x = field.mul(x, field.primitive_element());
  }
  GFMatrix local(field, groups * (rho - 1), n);
  for (Index g = 0; g < groups; ++g)
    for (Index i = 0; i < rho - 1; ++i)
      for (Index j = 0; j < s; ++j)
        local(g * (rho - 1) + i, g * s + j) = field.pow(alpha[static_cast<std::size_t>(j)], static_cast<std::uint64_t>(i));

  const auto partition = LocalityPartition::contiguous(n, r, rho);
  std::mt19937_64 rng(seed);
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    const GFMatrix h = vconcat(local, GFMatrix::random(field, global, n, rng));
    const LinearCode candidate = LinearCode::from_parity_check(h);
    if (candidate.dimension() != k) continue;
    const LinearCode code = candidate.with_locality(partition);
    if (!verify_pmds(code).is_pmds) continue;
    const Index d = pmds_distance(n, k, r, rho);
    return {code.with_distance(d), true, d, seed, attempt};
  }
  throw SearchExhausted("no PMDS code found in " + std::to_string(max_attempts) + " attempts");
}

SetFamilyCount count_S_mu(unsigned n, unsigned r, unsigned rho, unsigned mu) {
  const unsigned s = r + rho - 1;
  if (s == 0 || n % s != 0) throw CodeError("r + rho - 1 must divide n");
  if (mu > n) throw CodeError("mu exceeds n");

  std::vector<BigInt> group(std::min(r, s) + 1);
  for (unsigned a = 0; a < group.size(); ++a) group[a] = binomial(s, a);
  std::vector<BigInt> poly{1};
  for (unsigned g = 0; g < n / s; ++g) {
    std::vector<BigInt> next(poly.size() + group.size() - 1);
    for (std::size_t i = 0; i < poly.size(); ++i)
      for (std::size_t j = 0; j < group.size(); ++j) next[i + j] += poly[i] * group[j];
    poly = std::move(next);
  }

  SetFamilyCount out;
  out.n = n;
  out.r = r;
  out.rho = rho;
  out.mu = mu;
  out.count = mu < poly.size() ? poly[mu] : BigInt(0);
  out.total = binomial(n, mu);
  out.ratio = Rational(out.count, out.total);

  if (n < 64 && out.total <= kEnumerationLimit) {
    std::vector<std::uint64_t> masks;
    for (unsigned start = 0; start < n; start += s)
      masks.push_back(((std::uint64_t{1} << s) - 1) << start);
    std::uint64_t hits = 0;
    for_each_subset_mask(static_cast<int>(n), static_cast<int>(mu), [&](std::uint64_t set) {
      for (std::uint64_t m : masks)
        if (static_cast<unsigned>(std::popcount(set & m)) > r) return;
      ++hits;
    });
    out.enumerated = BigInt(hits);
    if (*out.enumerated != out.count)
      throw std::logic_error("set family count disagrees with enumeration");
  }
  return out;
}

BigInt inclusion_exclusion_sum(unsigned n, unsigned k, unsigned r) {
  const unsigned g = r + 1;
  if (n % g != 0) throw CodeError("r + 1 must divide n");
  BigInt sum = 0;
  for (unsigned j = 1; j <= n / g && j * g <= k + 1; ++j) {
    const BigInt term = binomial(n / g, j) * binomial(n - j * g, k + 1 - j * g);
    if (j % 2 == 1)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

namespace {

// Walks groups tracking (|I|, min(k + 1, capacity of the complement), whether
// some group keeps between 1 and r positions). Capacity is sum_g min(|R_g \ I|, r).
std::vector<std::vector<std::array<BigInt, 2>>> support_table(unsigned n, unsigned k, unsigned r,
                                                              unsigned rho, unsigned t) {
  const unsigned s = r + rho - 1;
  if (s == 0 || n % s != 0) throw CodeError("r + rho - 1 must divide n");
  const unsigned cap = k + 1;
  using Row = std::vector<std::array<BigInt, 2>>;
  std::vector<Row> dp(t + 1, Row(cap + 1));
  dp[0][0][0] = 1;
  for (unsigned g = 0; g < n / s; ++g) {
    std::vector<Row> next(t + 1, Row(cap + 1));
    for (unsigned size = 0; size <= t; ++size)
      for (unsigned v = 0; v <= cap; ++v)
        for (unsigned flag = 0; flag < 2; ++flag) {
          if (dp[size][v][flag] == 0) continue;
          for (unsigned a = 0; a <= s && size + a <= t; ++a) {
            const unsigned kept = s - a;
            const unsigned nv = std::min(cap, v + std::min(kept, r));
            const unsigned nf = flag | ((kept >= 1 && kept <= r) ? 1u : 0u);
            next[size + a][nv][nf] += dp[size][v][flag] * binomial(s, a);
          }
        }
    dp = std::move(next);
  }
  return dp;
}

}  // namespace

BigInt count_independent_supports(unsigned n, unsigned k, unsigned r, unsigned rho, unsigned t) {
  if (t >= n) return 0;
  const auto dp = support_table(n, k, r, rho, t);
  // Removing any one more position must leave an information set: capacity
  // k + 1 suffices; capacity k suffices only if every kept group holds > r.
  return dp[t][k + 1][0] + dp[t][k + 1][1] + dp[t][k][0];
}

BigInt count_supports_avoiding_family(unsigned n, unsigned k, unsigned r, unsigned rho, unsigned t) {
  if (t > n) return 0;
  const auto dp = support_table(n, k, r, rho, t);
  return dp[t][k + 1][0] + dp[t][k + 1][1];
}

namespace {

unsigned xi_of(unsigned r, unsigned rho) {
  if (rho < 2) throw CodeError("rho must be at least 2");
  return std::min(rho - 2, (r + rho - 1) / 2);
}

}  // namespace

RatioBound s_ratio_lower_bound(unsigned n, unsigned k, unsigned r, unsigned rho) {
  if (n == 0) throw CodeError("n must be positive");
  RatioBound out;
  out.xi = xi_of(r, rho);
  const BigInt c = binomial(r + rho - 1, out.xi);
  const Rational frac(big_pow(BigInt(k + 1), r + 1), big_pow(BigInt(n), r + 1));
  out.exact = Rational(1) - Rational(n) * Rational(c) * frac;
  out.value = to_double(out.exact);
  return out;
}

AsymptoticConditions asymptotic_conditions(unsigned n, unsigned k, unsigned r, unsigned rho,
                                           double c1, double c2) {
  if (!(c1 > 1) || !(c2 > 1)) throw CodeError("C1 and C2 must exceed 1");
  AsymptoticConditions out;
  out.xi = xi_of(r, rho);
  const double c = to_double(Rational(binomial(r + rho - 1, out.xi)));
  out.rate_lhs = std::pow(c, -1.0 / (r + 1));
  out.rate_rhs = c1 * (k + 1) / n;
  out.group_lhs = r + 1;
  out.group_rhs = c2 * std::log2(static_cast<double>(n)) / std::log2(c1);
  out.remark_lhs = std::pow((r + 1.0) / (std::numbers::e * (r + rho - 1)), static_cast<double>(rho) - 2);
  out.rate_condition = out.rate_lhs > out.rate_rhs;
  out.group_condition = out.group_lhs >= out.group_rhs;
  out.remark_condition = out.remark_lhs > out.rate_rhs;
  return out;
}

}  // namespace ilrc
