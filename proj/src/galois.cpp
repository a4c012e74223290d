#include "ilrc/galois.hpp"

#include <bit>
#include <cmath>
#include <sstream>

namespace ilrc {

namespace gf2poly {

int degree(Poly a) noexcept {
  const auto hi = static_cast<std::uint64_t>(a >> 64);
  if (hi != 0) return 127 - std::countl_zero(hi);
  const auto lo = static_cast<std::uint64_t>(a);
  if (lo != 0) return 63 - std::countl_zero(lo);
  return -1;
}

Poly mod(Poly a, Poly m) noexcept {
  const int dm = degree(m);
  for (int da = degree(a); da >= dm; da = degree(a)) a ^= m << (da - dm);
  return a;
}

Poly gcd(Poly a, Poly b) noexcept {
  while (b != 0) {
    a = mod(a, b);
    std::swap(a, b);
  }
  return a;
}

namespace {

// a * b mod f for deg f = n <= 64, with a, b already reduced.
Poly mulmod(Poly a, Poly b, Poly f, int n) noexcept {
  const Poly top = Poly{1} << n;
  Poly r = 0;
  while (b != 0) {
    if ((b & 1) != 0) r ^= a;
    b >>= 1;
    a <<= 1;
    if ((a & top) != 0) a ^= f;
  }
  return r;
}

// x^(2^e) mod f
Poly frobenius_power(Poly f, int n, int e) noexcept {
  Poly x = mod(Poly{2}, f);
  for (int i = 0; i < e; ++i) x = mulmod(x, x, f, n);
  return x;
}

}  // namespace

bool is_irreducible_rabin(Poly f) noexcept {
  const int n = degree(f);
  if (n < 1 || n > 64) return false;
  if (n == 1) return true;
  const Poly x = 2;
  if (frobenius_power(f, n, n) != x) return false;
  for (std::uint64_t q : prime_factors(static_cast<std::uint64_t>(n))) {
    const Poly h = frobenius_power(f, n, n / static_cast<int>(q)) ^ x;
    if (degree(gcd(f, h)) != 0) return false;
  }
  return true;
}

bool is_irreducible_trial_division(Poly f) noexcept {
  const int n = degree(f);
  if (n < 1) return false;
  for (int d = 1; d <= n / 2; ++d) {
    for (Poly g = Poly{1} << d; g < (Poly{1} << (d + 1)); ++g) {
      if (mod(f, g) == 0) return false;
    }
  }
  return true;
}

}  // namespace gf2poly

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

namespace {

// Primitive polynomials; m = 64 stored without the x^64 term.
constexpr std::uint64_t kDefaultPolys[] = {
    0,           0x3,        0x7,     0xB,     0x13,    0x25,   0x43,   0x83,   0x11D,
    0x211,       0x409,      0x805,   0x1053,  0x201B,  0x4443, 0x8003, 0x1100B,
};
constexpr std::uint64_t kDefaultPoly32 = 0x100400007ULL;  // x^32+x^22+x^2+x+1
constexpr std::uint64_t kDefaultPoly64 = 0x1BULL;         // x^64+x^4+x^3+x+1

}  // namespace

std::uint64_t FiniteField::default_polynomial(unsigned m) {
  if (m >= 1 && m <= 16) return kDefaultPolys[m];
  if (m == 32) return kDefaultPoly32;
  if (m == 64) return kDefaultPoly64;
  throw FieldError("no default reduction polynomial for m = " + std::to_string(m));
}

FiniteField FiniteField::create(std::uint64_t p, unsigned m, std::optional<std::uint64_t> poly,
                                bool use_tables) {
  if (m == 0) throw FieldError("extension degree must be at least 1");
  if (!is_prime(p)) throw FieldError(std::to_string(p) + " is not prime");
  FiniteField f;
  f.p_ = p;
  f.m_ = m;
  if (m == 1) {
    if (p >= (std::uint64_t{1} << 31)) throw FieldError("prime fields require p < 2^31");
    f.kind_ = Kind::prime;
    f.max_ = p - 1;
    f.find_primitive();
    return f;
  }
  if (p != 2) throw FieldError("odd-characteristic extension fields are not supported");
  if (m > 64) throw FieldError("binary fields are limited to m <= 64");

  const std::uint64_t given = poly ? *poly : default_polynomial(m);
  gf2poly::Poly full;
  if (m == 64) {
    full = (gf2poly::Poly{1} << 64) | given;
  } else {
    full = given;
    if (gf2poly::degree(full) != static_cast<int>(m))
      throw FieldError("reduction polynomial must have degree " + std::to_string(m));
  }
  const bool irreducible = m <= 32 ? gf2poly::is_irreducible_trial_division(full)
                                   : gf2poly::is_irreducible_rabin(full);
  if (!irreducible) throw FieldError("reduction polynomial is reducible");

  f.kind_ = Kind::binary;
  f.low_ = static_cast<std::uint64_t>(full);
  if (m < 64) f.low_ &= (std::uint64_t{1} << m) - 1;
  f.max_ = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
  f.find_primitive();
  if (use_tables && m <= 16) f.build_tables();
  return f;
}

std::uint64_t FiniteField::polynomial() const noexcept {
  if (kind_ == Kind::prime) return 0;
  if (m_ == 64) return low_;
  return (std::uint64_t{1} << m_) | low_;
}

std::uint64_t FiniteField::order() const {
  if (max_ == ~std::uint64_t{0}) throw FieldError("field order 2^64 is not representable");
  return max_ + 1;
}

double FiniteField::order_log2() const noexcept {
  if (kind_ == Kind::binary) return static_cast<double>(m_);
  return std::log2(static_cast<double>(p_));
}

Element FiniteField::mul_shift_xor(Element a, Element b) const noexcept {
  if (kind_ == Kind::prime) return (a * b) % p_;
  const Element top = Element{1} << (m_ - 1);
  Element r = 0;
  while (b != 0) {
    if ((b & 1) != 0) r ^= a;
    b >>= 1;
    const bool carry = (a & top) != 0;
    a = (a << 1) & max_;
    if (carry) a ^= low_;
  }
  return r;
}

Element FiniteField::pow(Element a, std::uint64_t e) const noexcept {
  Element result = 1;
  while (e != 0) {
    if ((e & 1) != 0) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

Element FiniteField::inv(Element a) const {
  if (a == 0) throw FieldError("inversion of zero");
  if (tables_) {
    const auto& t = *tables_;
    return t.exp[max_ - t.log[a]];
  }
  return pow(a, max_ - 1);
}

Element FiniteField::eval_poly(std::span<const Element> coeffs, Element x) const noexcept {
  Element acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = add(mul(acc, x), *it);
  return acc;
}

std::vector<Element> FiniteField::eval_poly(std::span<const Element> coeffs,
                                            std::span<const Element> points) const {
  std::vector<Element> out;
  out.reserve(points.size());
  for (Element x : points) out.push_back(eval_poly(coeffs, x));
  return out;
}

std::uint64_t FiniteField::element_order(Element a) const {
  if (a == 0) throw FieldError("zero has no multiplicative order");
  std::uint64_t order = max_;
  for (std::uint64_t q : prime_factors(max_)) {
    while (order % q == 0 && pow(a, order / q) == 1) order /= q;
  }
  return order;
}

void FiniteField::find_primitive() {
  if (max_ == 1) {
    primitive_ = 1;
    return;
  }
  const auto factors = prime_factors(max_);
  for (Element g = 2; g <= max_; ++g) {
    bool generator = true;
    for (std::uint64_t q : factors) {
      if (pow(g, max_ / q) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) {
      primitive_ = g;
      return;
    }
  }
}

void FiniteField::build_tables() {
  auto t = std::make_shared<Tables>();
  const std::size_t q = static_cast<std::size_t>(max_) + 1;
  t->log.assign(q, 0);
  t->exp.assign(2 * max_, 0);
  Element x = 1;
  for (std::size_t i = 0; i < max_; ++i) {
    t->exp[i] = x;
    t->exp[i + max_] = x;
    t->log[x] = static_cast<std::uint32_t>(i);
    x = mul_shift_xor(x, primitive_);
  }
  tables_ = std::move(t);
}

std::string FiniteField::to_string() const {
  std::ostringstream os;
  if (kind_ == Kind::prime)
    os << "GF(" << p_ << ")";
  else
    os << "GF(2^" << m_ << ")";
  return os.str();
}

FieldElement::FieldElement(const FiniteField& field, Element value) : field_(&field), value_(value) {
  if (!field.contains(value)) throw FieldError("value outside of " + field.to_string());
}

void FieldElement::check_same(const FieldElement& o) const {
  if (!(*field_ == *o.field_)) throw FieldError("operands belong to different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  return {*field_, field_->add(value_, o.value_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  return {*field_, field_->sub(value_, o.value_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  return {*field_, field_->mul(value_, o.value_)};
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same(o);
  return {*field_, field_->div(value_, o.value_)};
}

}  // namespace ilrc
