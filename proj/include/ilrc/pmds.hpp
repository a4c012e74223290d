#ifndef ILRC_PMDS_HPP
#define ILRC_PMDS_HPP

#include <cstdint>
#include <optional>

#include "ilrc/code.hpp"
#include "ilrc/combinatorics.hpp"

namespace ilrc {

class SearchExhausted : public CodeError {
 public:
  using CodeError::CodeError;
};

struct PmdsCode {
  LinearCode code;  // carries its locality partition
  bool verified = false;
  Index distance = 0;
  std::uint64_t seed = 0;
  int attempts = 0;
};

struct PmdsVerification {
  bool is_pmds = false;
  /// Positions punctured by the failing pattern and k dependent columns of it.
  std::optional<IndexSet> witness_pattern;
  std::optional<IndexSet> witness_columns;
  /// Group whose restriction has distance below rho.
  std::optional<Index> witness_group;
  std::uint64_t patterns_checked = 0;
  std::uint64_t rank_checks = 0;
};

inline constexpr std::uint64_t kDefaultPmdsBudget = 50'000'000;

/// Product of C(r + rho - 1, rho - 1) over the groups.
BigInt pmds_pattern_count(const LocalityPartition& partition);

/**
 * Exhaustive check that every puncturing of rho - 1 positions per group leaves
 * an MDS code of dimension k. Work is (patterns x C(n', k)) rank checks and
 * is refused with CodeError when it exceeds `budget`.
 */
PmdsVerification verify_pmds(const LinearCode& code,
                             std::uint64_t budget = kDefaultPmdsBudget);

/**
 * Parity-check matrix with block-diagonal local Vandermonde rows and
 * n - k - (n / (r + rho - 1))(rho - 1) uniformly random global rows; returns the
 * first candidate that verifies. Throws SearchExhausted after max_attempts.
 */
PmdsCode pmds_random_search(const FiniteField& field, Index n, Index k, int r, int rho,
                            int max_attempts, std::uint64_t seed);

/// Global distance of an [n, k, r, rho] PMDS code with equal groups.
Index pmds_distance(Index n, Index k, int r, int rho);

struct SetFamilyCount {
  unsigned n = 0, r = 0, rho = 0, mu = 0;
  BigInt count;
  BigInt total;
  Rational ratio;
  std::optional<BigInt> enumerated;  // present when the direct walk ran
};

inline constexpr std::uint64_t kEnumerationLimit = 1'000'000;

/// mu-subsets of [n] meeting every consecutive group of size r + rho - 1 in at most r positions.
SetFamilyCount count_S_mu(unsigned n, unsigned r, unsigned rho, unsigned mu);

/// sum_j (-1)^(j-1) C(n/(r+1), j) C(n - j(r+1), k + 1 - j(r+1)), groups of size r + 1.
BigInt inclusion_exclusion_sum(unsigned n, unsigned k, unsigned r);

/**
 * Number of (t+1)-independent t-sets of a PMDS code: I such that removing I
 * and any one further position still leaves an information set.
 */
BigInt count_independent_supports(unsigned n, unsigned k, unsigned r, unsigned rho, unsigned t);

/**
 * Number of t-sets whose complement contains a (k+1)-set meeting every group
 * in at most r positions. Equals count_independent_supports at t = n - k - 1
 * (for k > r) and is a lower bound for it below.
 */
BigInt count_supports_avoiding_family(unsigned n, unsigned k, unsigned r, unsigned rho, unsigned t);

struct RatioBound {
  unsigned xi = 0;
  Rational exact;  // 1 - n C(r+rho-1, xi) ((k+1)/n)^(r+1)
  double value = 0;
};

RatioBound s_ratio_lower_bound(unsigned n, unsigned k, unsigned r, unsigned rho);

struct AsymptoticConditions {
  unsigned xi = 0;
  double rate_lhs = 0, rate_rhs = 0;
  double group_lhs = 0, group_rhs = 0;
  double remark_lhs = 0;
  bool rate_condition = false;
  bool group_condition = false;
  bool remark_condition = false;
};

AsymptoticConditions asymptotic_conditions(unsigned n, unsigned k, unsigned r, unsigned rho,
                                           double c1, double c2);

}  // namespace ilrc

#endif  // ILRC_PMDS_HPP
