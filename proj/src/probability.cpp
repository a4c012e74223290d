#include "ilrc/probability.hpp"

#include <boost/math/special_functions/log1p.hpp>

#include <cmath>
#include <limits>
#include <sstream>

#include "ilrc/pmds.hpp"

namespace ilrc {

namespace {

Real to_real(const Rational& p) {
  return Real(boost::multiprecision::numerator(p)) / Real(boost::multiprecision::denominator(p));
}

void check_q(const BigInt& q) {
  if (q < 2) throw std::invalid_argument("field size must be at least 2");
}

}  // namespace

LogProbability LogProbability::from_rational(const Rational& p) {
  if (p < 0 || p > 1) throw std::invalid_argument("probability outside [0, 1]");
  LogProbability out;
  out.exact = p;
  out.zero = p == 0;
  if (!out.zero) out.log10_value = boost::multiprecision::log10(to_real(p));
  return out;
}

LogProbability LogProbability::from_log10(const Real& log10_value) {
  LogProbability out;
  out.zero = false;
  out.log10_value = log10_value;
  return out;
}

double LogProbability::log10() const {
  return zero ? -std::numeric_limits<double>::infinity() : log10_value.convert_to<double>();
}

Real LogProbability::value() const {
  return zero ? Real(0) : boost::multiprecision::pow(Real(10), log10_value);
}

std::string LogProbability::log10_string(int digits) const {
  if (zero) return "-inf";
  std::ostringstream os;
  os.precision(digits);
  os << log10_value;
  return os.str();
}

FullRankFraction full_rank_fraction(const BigInt& q, unsigned ell, unsigned t) {
  check_q(q);
  FullRankFraction out;
  if (t > ell) {
    out.exact = 0;
  } else {
    const BigInt ql = big_pow(q, ell);
    BigInt num = 1;
    for (unsigned j = 0; j < t; ++j) num *= ql - big_pow(q, j);
    out.exact = Rational(num, big_pow(ql, t));
  }
  out.log = LogProbability::from_rational(out.exact);
  return out;
}

Rational nonzero_column_full_rank_fraction(const BigInt& q, unsigned ell, unsigned t) {
  check_q(q);
  if (t > ell) return 0;
  const BigInt ql = big_pow(q, ell);
  BigInt num = 1;
  for (unsigned j = 0; j < t; ++j) num *= ql - big_pow(q, j);
  return Rational(num, big_pow(ql - 1, t));
}

LogProbability rank_deficiency_tail_log10(const BigInt& q, unsigned ell, unsigned t) {
  check_q(q);
  if (t > ell) throw std::invalid_argument("tail needs t <= l");
  if (t == 0) return LogProbability::from_rational(0);

  const Real rq(q);
  Real tail = 0;
  for (unsigned j = 0; j < t; ++j) {
    const Real x = boost::multiprecision::pow(rq, static_cast<int>(j) - static_cast<int>(ell));
    tail += x * (1 - tail);
  }
  LogProbability out = LogProbability::from_log10(boost::multiprecision::log10(tail));

  const double bits = static_cast<double>(ell) * t * std::log2(q.convert_to<double>());
  if (bits <= kExactTailBits) out.exact = Rational(1) - full_rank_fraction(q, ell, t).exact;
  return out;
}

SuccessProbability pmds_success_probability(unsigned n, unsigned k, unsigned r, unsigned rho,
                                            const BigInt& q, unsigned ell, unsigned t) {
  if (rho != 2) throw CodeError("success probability is defined for rho = 2");
  if (k == 0 || k >= n || t + k + 1 != n) throw CodeError("success probability needs t = n - k - 1");
  if (n % (r + rho - 1) != 0 || r == 0) throw CodeError("not a PMDS parameter set");
  if (k + n / (r + rho - 1) * (rho - 1) > n) throw CodeError("local parities exceed n - k");
  if (ell == 0) throw CodeError("interleaving order must be positive");

  SuccessProbability out;
  out.rank_factor = full_rank_fraction(q, ell, t).exact;
  const SetFamilyCount family = count_S_mu(n, r, rho, k + 1);
  out.supports = family.count;
  out.total = family.total;
  out.support_ratio = family.ratio;
  out.product = out.rank_factor * out.support_ratio;
  out.difference = out.rank_factor - out.support_ratio;
  return out;
}

WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
  if (trials == 0) throw std::invalid_argument("Wilson interval needs at least one trial");
  if (successes > trials) throw std::invalid_argument("more successes than trials");
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1 + z2 / n;
  const double center = (p + z2 / (2 * n)) / denom;
  const double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

OutcomeCounts& OutcomeCounts::operator+=(const OutcomeCounts& o) noexcept {
  trials += o.trials;
  success += o.success;
  failure += o.failure;
  miscorrection += o.miscorrection;
  detected += o.detected;
  return *this;
}

double OutcomeCounts::rate() const {
  if (trials == 0) throw std::invalid_argument("no trials recorded");
  return static_cast<double>(success) / static_cast<double>(trials);
}

OutcomeCounts merge(const OutcomeCounts& a, const OutcomeCounts& b) noexcept {
  OutcomeCounts out = a;
  out += b;
  return out;
}

}  // namespace ilrc
