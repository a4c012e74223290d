#ifndef ILRC_PROBABILITY_HPP
#define ILRC_PROBABILITY_HPP

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cstdint>
#include <optional>
#include <string>

#include "ilrc/code.hpp"
#include "ilrc/combinatorics.hpp"

namespace ilrc {

/// 256-bit mantissa real for log-domain work.
using Real = boost::multiprecision::number<
    boost::multiprecision::backends::cpp_bin_float<256, boost::multiprecision::backends::digit_base_2>,
    boost::multiprecision::et_off>;

/// A probability carried as log10 of its magnitude, with the exact rational when known.
struct LogProbability {
  bool zero = true;
  Real log10_value;  // meaningful when !zero
  std::optional<Rational> exact;

  static LogProbability from_rational(const Rational& p);
  static LogProbability from_log10(const Real& log10_value);

  /// -infinity for zero.
  double log10() const;
  Real value() const;
  std::string log10_string(int digits = 12) const;
};

struct FullRankFraction {
  Rational exact;
  LogProbability log;
};

/// q^(-t l) prod_{j<t} (q^l - q^j): the fraction of l x t matrices over GF(q) with rank t.
FullRankFraction full_rank_fraction(const BigInt& q, unsigned ell, unsigned t);

/// Same fraction among matrices whose t columns are all nonzero.
Rational nonzero_column_full_rank_fraction(const BigInt& q, unsigned ell, unsigned t);

/**
 * 1 - full_rank_fraction in the log domain, built term by term from
 * x_j = q^(j - l) as tail <- tail + x_j (1 - tail), which never subtracts
 * nearly equal quantities. The exact rational is attached when l t log2 q
 * is at most kExactTailBits.
 */
LogProbability rank_deficiency_tail_log10(const BigInt& q, unsigned ell, unsigned t);

inline constexpr unsigned kExactTailBits = 1u << 16;

struct SuccessProbability {
  Rational rank_factor;    // P{rank(E) = t}
  BigInt supports;         // |S_{k+1}|
  BigInt total;            // C(n, k+1)
  Rational support_ratio;  // supports / total
  Rational product;        // rank_factor * support_ratio
  Rational difference;     // rank_factor - support_ratio, the alternative reading
};

/// Success probability of MK decoding at t = n - k - 1 on a PMDS code with rho = 2.
SuccessProbability pmds_success_probability(unsigned n, unsigned k, unsigned r, unsigned rho,
                                            const BigInt& q, unsigned ell, unsigned t);

inline constexpr double kZ99 = 2.5758293035489004;

struct WilsonInterval {
  double lo = 0, hi = 1;
  bool contains(double p) const noexcept { return lo <= p && p <= hi; }
};

WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = kZ99);

/// Trial tallies; detected miscorrections are a subset of failures.
struct OutcomeCounts {
  std::uint64_t trials = 0;
  std::uint64_t success = 0;
  std::uint64_t failure = 0;
  std::uint64_t miscorrection = 0;  // reported success with the wrong codeword
  std::uint64_t detected = 0;       // miscorrection_detected outcomes

  OutcomeCounts& operator+=(const OutcomeCounts& o) noexcept;
  bool operator==(const OutcomeCounts&) const = default;
  double rate() const;
};

OutcomeCounts merge(const OutcomeCounts& a, const OutcomeCounts& b) noexcept;

}  // namespace ilrc

#endif  // ILRC_PROBABILITY_HPP
