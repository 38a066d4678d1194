#pragma once

// The commutative base ring R = k[u_1..u_n] / (u_i^2 - u_i : i a Clifford direction)
// and the automorphisms tau_i acting on it.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "tgw/rational.hpp"
#include "tgw/signature.hpp"

namespace tgw {

/// Exponent vector of a monomial u_1^{d_1} ... u_n^{d_n}.
using RingExponents = std::vector<int>;

/// Reduced polynomial in u_1..u_n. Clifford exponents are capped at 1 on
/// construction, so two elements are equal iff their term maps are equal.
class BaseRingElement {
 public:
  using Terms = std::map<RingExponents, Rational>;

  explicit BaseRingElement(Signature sig);
  /// Reduces `raw` modulo idempotency; zero coefficients are dropped.
  BaseRingElement(Signature sig, const Terms& raw);

  static BaseRingElement constant(Signature sig, const Rational& c);
  static BaseRingElement u(Signature sig, std::size_t i);

  const Signature& signature() const { return sig_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// The constant term when the element is a scalar, otherwise false.
  bool is_constant() const;
  Rational constant_term() const;

  BaseRingElement& operator+=(const BaseRingElement& o);
  BaseRingElement& operator-=(const BaseRingElement& o);
  BaseRingElement& operator*=(const Rational& c);

  friend BaseRingElement operator+(BaseRingElement a, const BaseRingElement& b) { return a += b; }
  friend BaseRingElement operator-(BaseRingElement a, const BaseRingElement& b) { return a -= b; }
  friend BaseRingElement operator*(const Rational& c, BaseRingElement a) { return a *= c; }
  friend BaseRingElement operator-(BaseRingElement a) { return a *= Rational(-1); }
  friend BaseRingElement operator*(const BaseRingElement& a, const BaseRingElement& b);

  /// Structural equality of reduced forms; throws on signature mismatch.
  friend bool operator==(const BaseRingElement& a, const BaseRingElement& b);

  /// Evaluate at a point (each Clifford coordinate is expected in {0, 1}).
  Rational evaluate(const std::vector<Rational>& point) const;

 private:
  void add_term(const RingExponents& e, const Rational& c);

  Signature sig_;
  Terms terms_;
};

/// Reduction of a raw polynomial: u_i^k -> u_i for Clifford i and k >= 1.
BaseRingElement reduce(Signature sig, const BaseRingElement::Terms& raw);

/// sigma = tau_1^{e_1} ... tau_n^{e_n}. The tau_i commute, so composition is addition.
struct Automorphism {
  std::vector<long> exponents;

  Automorphism compose(const Automorphism& o) const;
  Automorphism inverse() const;
  friend bool operator==(const Automorphism&, const Automorphism&) = default;
};

Automorphism identity_automorphism(std::size_t n);
Automorphism tau(std::size_t n, std::size_t i, long power = 1);

/// Image of u_i under tau_i^k in closed form: u_i - k on Weyl directions;
/// u_i or 1 - u_i (by parity of k) on Clifford directions.
BaseRingElement tau_power_of_u(const Signature& sig, std::size_t i, long k);

/// Applies sigma as a ring homomorphism.
BaseRingElement tau_apply(const Automorphism& sigma, const BaseRingElement& r);

/// True iff sigma acts as the identity on R (Weyl exponents zero, Clifford exponents even).
bool acts_trivially(const Signature& sig, const Automorphism& sigma);

/// Renders terms in descending graded-lex order, e.g. `(3/2)*u1^2*u3 - u2 + 1`.
std::string to_string(const BaseRingElement& r);

}  // namespace tgw
