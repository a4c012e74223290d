#ifndef ILRC_COMBINATORICS_HPP
#define ILRC_COMBINATORICS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <string>

#include "ilrc/matrix.hpp"

namespace ilrc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt binomial(unsigned n, unsigned k);
/// Saturates at UINT64_MAX.
std::uint64_t binomial_u64(unsigned n, unsigned k);
BigInt big_pow(const BigInt& base, unsigned exp);

std::string to_string(const BigInt& v);
std::string to_string(const Rational& v);
double to_double(const Rational& v);

/// Calls f(subset) for every k-subset of [0, n) in lexicographic order while
/// f returns true. Returns false if stopped early.
template <class F>
bool for_each_subset(Index n, Index k, F&& f) {
  if (k < 0 || k > n) return true;
  IndexSet s(static_cast<std::size_t>(k));
  for (Index i = 0; i < k; ++i) s[static_cast<std::size_t>(i)] = i;
  for (;;) {
    if (!f(static_cast<const IndexSet&>(s))) return false;
    Index i = k - 1;
    while (i >= 0 && s[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return true;
    ++s[static_cast<std::size_t>(i)];
    for (Index j = i + 1; j < k; ++j) s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + 1;
  }
}

/// Same enumeration over bit masks (n <= 64), Gosper's hack.
template <class F>
void for_each_subset_mask(int n, int k, F&& f) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    f(std::uint64_t{0});
    return;
  }
  const std::uint64_t limit = n == 64 ? 0 : (std::uint64_t{1} << n);
  std::uint64_t s = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  for (;;) {
    f(s);
    const std::uint64_t c = s & (~s + 1);
    const std::uint64_t r = s + c;
    if (r == 0) return;  // overflow past bit 63
    s = (((r ^ s) >> 2) / c) | r;
    if (limit != 0 && s >= limit) return;
  }
}

IndexSet mask_to_set(std::uint64_t mask);
std::uint64_t set_to_mask(std::span<const Index> s);

}  // namespace ilrc

#endif  // ILRC_COMBINATORICS_HPP
