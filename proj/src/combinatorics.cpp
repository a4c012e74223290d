#include "ilrc/combinatorics.hpp"

#include <bit>

namespace ilrc {

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

std::uint64_t binomial_u64(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

BigInt big_pow(const BigInt& base, unsigned exp) { return boost::multiprecision::pow(base, exp); }

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const Rational& v) {
  return boost::multiprecision::numerator(v).str() + "/" + boost::multiprecision::denominator(v).str();
}

double to_double(const Rational& v) { return v.convert_to<double>(); }

IndexSet mask_to_set(std::uint64_t mask) {
  IndexSet s;
  while (mask != 0) {
    s.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return s;
}

std::uint64_t set_to_mask(std::span<const Index> s) {
  std::uint64_t m = 0;
  for (Index i : s) m |= std::uint64_t{1} << i;
  return m;
}

}  // namespace ilrc
