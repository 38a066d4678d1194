#pragma once

// Normal-form arithmetic in the Clifford/Weyl superalgebra A_{p|q}^{+-}.
//
// Generators x_i, d_i (d_i standing for the derivation ∂_i) satisfy
//   d_i x_j = delta_ij + lambda_ij x_j d_i,   x_i x_j = lambda_ij x_j x_i,
//   d_i d_j = lambda_ij d_j d_i,
// so on a Clifford direction x_i^2 = d_i^2 = 0. Normal order places each
// direction in its own block x_i^a d_i^b, blocks in ascending index order.

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "tgw/basering.hpp"
#include "tgw/rational.hpp"
#include "tgw/signature.hpp"

namespace tgw {

/// Exponents (a_i, b_i) of the normal-ordered word x_1^{a_1} d_1^{b_1} ... x_n^{a_n} d_n^{b_n}.
class SuperMonomial {
 public:
  SuperMonomial() = default;
  explicit SuperMonomial(std::size_t n) : exps_(2 * n, 0) {}

  std::size_t size() const { return exps_.size() / 2; }
  int x_exp(std::size_t i) const { return exps_[2 * i]; }
  int d_exp(std::size_t i) const { return exps_[2 * i + 1]; }
  void set(std::size_t i, int a, int b) {
    exps_[2 * i] = a;
    exps_[2 * i + 1] = b;
  }
  int length(std::size_t i) const { return x_exp(i) + d_exp(i); }

  /// (a_i - b_i)_i.
  std::vector<long> degree() const;
  /// Parity in the ambient superalgebra: sum of (a_i + b_i) p(i) mod 2.
  int parity(const Signature& sig) const;
  bool is_unit() const;
  /// Clifford exponents at most 1.
  bool valid_for(const Signature& sig) const;

  const std::vector<int>& raw() const { return exps_; }

  friend auto operator<=>(const SuperMonomial&, const SuperMonomial&) = default;

 private:
  std::vector<int> exps_;
};

/// A single generator x_i or d_i.
struct Generator {
  std::size_t index;
  bool is_x;
  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Exact rational linear combination of normal-ordered monomials.
class SuperElement {
 public:
  using Terms = std::map<SuperMonomial, Rational>;

  /// The zero element.
  explicit SuperElement(Signature sig);

  static SuperElement one(Signature sig);
  static SuperElement scalar(Signature sig, const Rational& c);
  static SuperElement monomial(Signature sig, const SuperMonomial& m, const Rational& c = 1);
  static SuperElement x(Signature sig, std::size_t i);
  static SuperElement d(Signature sig, std::size_t i);
  static SuperElement generator(Signature sig, Generator g);

  const Signature& signature() const { return sig_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of the unit monomial.
  Rational constant_term() const;
  bool is_scalar() const;

  SuperElement& operator+=(const SuperElement& o);
  SuperElement& operator-=(const SuperElement& o);
  SuperElement& operator*=(const Rational& c);

  friend SuperElement operator+(SuperElement a, const SuperElement& b) { return a += b; }
  friend SuperElement operator-(SuperElement a, const SuperElement& b) { return a -= b; }
  friend SuperElement operator-(SuperElement a) { return a *= Rational(-1); }
  friend SuperElement operator*(const Rational& c, SuperElement a) { return a *= c; }
  friend SuperElement operator*(const SuperElement& a, const SuperElement& b);

  friend bool operator==(const SuperElement& a, const SuperElement& b);

  /// Adds c*m; a zero sum removes the term.
  void add_term(const SuperMonomial& m, const Rational& c);

 private:
  Signature sig_;
  Terms terms_;
};

/// Normal form of the concatenation m1 m2.
SuperElement mono_mul(const Signature& sig, const SuperMonomial& m1, const SuperMonomial& m2);

SuperElement elem_mul(const SuperElement& a, const SuperElement& b);
SuperElement elem_add(const SuperElement& a, const SuperElement& b);
SuperElement scalar_mul(const Rational& c, const SuperElement& a);

/// Normal form of a word of generators, folded left-to-right or right-to-left.
SuperElement normalize_word(const Signature& sig, std::span<const Generator> word, bool from_left = true);

/// Anti-automorphism with x_i* = d_i, d_i* = x_i.
SuperElement involution(const SuperElement& a);

/// Common Z^n-degree of a nonzero homogeneous element.
/// Throws UndefinedDegree for zero and Inhomogeneous otherwise.
std::vector<long> degree_of(const SuperElement& a);

/// The degree-zero part of `a` written in u_i = d_i x_i, using x_i d_i = lambda_ii (u_i - 1).
BaseRingElement project_zero(const SuperElement& a);

/// The embedding u_i -> d_i x_i of the base ring as the degree-zero subalgebra.
SuperElement iota_embed(const BaseRingElement& r);

/// x_j^k for k >= 0, d_j^{-k} for k < 0. Throws Nilpotent on a Clifford direction with |k| > 1.
SuperMonomial power_gen(const Signature& sig, std::size_t j, long k);

/// Terms sorted by degree then exponents, e.g. `1/2 + x1*d1 - (3/2)*x1*x2*d2`.
std::string to_string(const SuperMonomial& m);
std::string to_string(const SuperElement& a);

}  // namespace tgw
