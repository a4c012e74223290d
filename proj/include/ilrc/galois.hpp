#ifndef ILRC_GALOIS_HPP
#define ILRC_GALOIS_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ilrc {

/// Canonical representative of a field element, always in [0, q).
using Element = std::uint64_t;

class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/**
 * Arithmetic context for GF(p) (p < 2^31) and GF(2^m) (m <= 64).
 *
 * Binary extension elements are bit vectors of polynomial coefficients,
 * least significant bit = constant term. The reduction polynomial is kept
 * without its leading x^m term, so every supported degree fits in 64 bits.
 *
 * A FiniteField is an immutable value; copies share the optional log/antilog
 * tables built for m <= 16.
 */
class FiniteField {
 public:
  enum class Kind { prime, binary };

  /// GF(p^m). Only p = 2 admits m > 1. `poly` is the full reduction polynomial
  /// for m < 64 and its low 64 coefficients (x^64 implied) for m = 64.
  static FiniteField create(std::uint64_t p, unsigned m,
                            std::optional<std::uint64_t> poly = std::nullopt,
                            bool use_tables = true);
  static FiniteField binary(unsigned m, std::optional<std::uint64_t> poly = std::nullopt,
                            bool use_tables = true) {
    return create(2, m, poly, use_tables);
  }
  static FiniteField prime(std::uint64_t p) { return create(p, 1); }

  /// Built-in reduction polynomial (full form, or low bits for m = 64).
  static std::uint64_t default_polynomial(unsigned m);

  Kind kind() const noexcept { return kind_; }
  std::uint64_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return m_; }
  /// Reduction polynomial in the serialized convention (0 for prime fields).
  std::uint64_t polynomial() const noexcept;
  /// q - 1, always representable.
  std::uint64_t max_element() const noexcept { return max_; }
  /// q; throws for GF(2^64).
  std::uint64_t order() const;
  double order_log2() const noexcept;
  bool has_tables() const noexcept { return static_cast<bool>(tables_); }

  bool operator==(const FiniteField& other) const noexcept {
    return p_ == other.p_ && m_ == other.m_ && low_ == other.low_;
  }

  bool contains(Element a) const noexcept { return a <= max_; }

  Element zero() const noexcept { return 0; }
  Element one() const noexcept { return 1; }

  Element add(Element a, Element b) const noexcept {
    if (kind_ == Kind::binary) return a ^ b;
    const Element s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element neg(Element a) const noexcept {
    if (kind_ == Kind::binary || a == 0) return a;
    return p_ - a;
  }
  Element sub(Element a, Element b) const noexcept { return add(a, neg(b)); }

  Element mul(Element a, Element b) const noexcept {
    if (kind_ == Kind::prime) return (a * b) % p_;
    if (a == 0 || b == 0) return 0;
    if (tables_) {
      const auto& t = *tables_;
      return t.exp[t.log[a] + t.log[b]];
    }
    return mul_shift_xor(a, b);
  }

  /// Table-free GF(2^m) product; prime fields fall back to mul().
  Element mul_shift_xor(Element a, Element b) const noexcept;

  /// Throws FieldError for a == 0.
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element pow(Element a, std::uint64_t e) const noexcept;

  /// Horner evaluation; coeffs[i] multiplies x^i.
  Element eval_poly(std::span<const Element> coeffs, Element x) const noexcept;
  std::vector<Element> eval_poly(std::span<const Element> coeffs,
                                 std::span<const Element> points) const;

  /// A generator of the multiplicative group.
  Element primitive_element() const noexcept { return primitive_; }
  /// Multiplicative order of a nonzero element.
  std::uint64_t element_order(Element a) const;

  template <class Rng>
  Element random(Rng& rng) const {
    if (kind_ == Kind::binary) return rng() & max_;
    return std::uniform_int_distribution<Element>(0, max_)(rng);
  }
  template <class Rng>
  Element random_nonzero(Rng& rng) const {
    if (kind_ == Kind::binary) {
      for (;;) {
        const Element a = rng() & max_;
        if (a != 0) return a;
      }
    }
    return std::uniform_int_distribution<Element>(1, max_)(rng);
  }

  std::string to_string() const;

 private:
  struct Tables {
    std::vector<std::uint32_t> log;
    std::vector<Element> exp;  // doubled length, no index wrap in mul()
  };

  FiniteField() = default;
  void find_primitive();
  void build_tables();

  Kind kind_ = Kind::prime;
  std::uint64_t p_ = 2;
  unsigned m_ = 1;
  std::uint64_t low_ = 0;  // reduction polynomial without x^m
  Element max_ = 1;
  Element primitive_ = 1;
  std::shared_ptr<const Tables> tables_;
};

/// Element bound to its field, for scalar code where mixing fields is a bug.
class FieldElement {
 public:
  FieldElement(const FiniteField& field, Element value);

  const FiniteField& field() const noexcept { return *field_; }
  Element value() const noexcept { return value_; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const { return {*field_, field_->neg(value_)}; }
  FieldElement inv() const { return {*field_, field_->inv(value_)}; }
  FieldElement pow(std::uint64_t e) const { return {*field_, field_->pow(value_, e)}; }

  bool operator==(const FieldElement& o) const noexcept {
    return *field_ == *o.field_ && value_ == o.value_;
  }

 private:
  void check_same(const FieldElement& o) const;

  const FiniteField* field_;
  Element value_;
};

namespace gf2poly {

// Polynomials over GF(2) as bit masks. Degrees up to 127 via __int128.
using Poly = unsigned __int128;

int degree(Poly a) noexcept;
Poly mod(Poly a, Poly m) noexcept;
Poly gcd(Poly a, Poly b) noexcept;
/// Irreducibility of a polynomial of degree <= 64 (Rabin's test).
bool is_irreducible_rabin(Poly f) noexcept;
/// Irreducibility by trial division by every polynomial of degree <= deg/2.
bool is_irreducible_trial_division(Poly f) noexcept;

}  // namespace gf2poly

bool is_prime(std::uint64_t n) noexcept;
/// Distinct prime factors by trial division.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace ilrc

#endif  // ILRC_GALOIS_HPP
