#pragma once

// Test-only oracles that never touch the normal-form engine.
//
// FockState: the module k[y_1..y_n] (exterior in Clifford directions) on which
//   x_i a = s_i(a) y_i a,  d_i a = s_i(a) * (a_i for Weyl, 1 for Clifford) * y^{a - e_i},
// with s_i(a) = prod_{k<i} lambda_ik^{a_k}. This is a faithful representation of
// either variant, so an identity between elements can be tested by acting on
// enough basis vectors.

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "tgw/basering.hpp"
#include "tgw/errors.hpp"
#include "tgw/superweyl.hpp"
#include "tgw/tgwdatum.hpp"

namespace oracle {

using tgw::Rational;
using tgw::Signature;

using FockState = std::map<std::vector<int>, Rational>;

inline void add_to(FockState& s, const std::vector<int>& key, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = s.try_emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) s.erase(it);
  }
}

inline Rational swap_sign(const Signature& sig, std::size_t i, const std::vector<int>& a) {
  int s = 1;
  for (std::size_t k = 0; k < i; ++k) {
    if (a[k] % 2 != 0) s *= sig.lambda(i, k);
  }
  return Rational(s);
}

inline FockState act_generator(const Signature& sig, std::size_t i, bool is_x, const FockState& in) {
  FockState out;
  for (const auto& [a, c] : in) {
    std::vector<int> b = a;
    if (is_x) {
      if (sig.is_clifford(i) && a[i] == 1) continue;
      b[i] += 1;
      add_to(out, b, c * swap_sign(sig, i, a));
    } else {
      if (a[i] == 0) continue;
      b[i] -= 1;
      const Rational factor = sig.is_clifford(i) ? Rational(1) : Rational(a[i]);
      add_to(out, b, c * factor * swap_sign(sig, i, a));
    }
  }
  return out;
}

/// The word x_1^{a_1} d_1^{b_1} ... x_n^{a_n} d_n^{b_n}, applied right to left.
inline FockState act_monomial(const Signature& sig, const tgw::SuperMonomial& m, FockState v) {
  for (std::size_t i = sig.size(); i-- > 0;) {
    for (int k = 0; k < m.d_exp(i); ++k) v = act_generator(sig, i, false, v);
    for (int k = 0; k < m.x_exp(i); ++k) v = act_generator(sig, i, true, v);
  }
  return v;
}

inline FockState act(const tgw::SuperElement& a, const FockState& v) {
  FockState out;
  for (const auto& [m, c] : a.terms()) {
    for (const auto& [key, coef] : act_monomial(a.signature(), m, v)) add_to(out, key, coef * c);
  }
  return out;
}

inline FockState act_word(const Signature& sig, const std::vector<tgw::Generator>& word, FockState v) {
  for (std::size_t k = word.size(); k-- > 0;) v = act_generator(sig, word[k].index, word[k].is_x, v);
  return v;
}

inline FockState basis(const std::vector<int>& a) { return FockState{{a, Rational(1)}}; }

/// Basis vectors with Weyl exponents up to `weyl_max` (Clifford ones 0/1).
inline std::vector<std::vector<int>> basis_keys(const Signature& sig, int weyl_max) {
  std::vector<std::vector<int>> out{std::vector<int>(sig.size(), 0)};
  for (std::size_t i = 0; i < sig.size(); ++i) {
    const int top = sig.is_clifford(i) ? 1 : weyl_max;
    std::vector<std::vector<int>> next;
    for (const auto& a : out) {
      for (int e = 0; e <= top; ++e) {
        auto b = a;
        b[i] = e;
        next.push_back(b);
      }
    }
    out = std::move(next);
  }
  return out;
}

/// Random generation helpers.
struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }
  bool coin() { return uniform(0, 1) == 1; }

  Signature signature(std::size_t max_n = 3) {
    const std::size_t n = static_cast<std::size_t>(uniform(1, static_cast<int>(max_n)));
    std::vector<int> par(n);
    for (auto& p : par) p = uniform(0, 1);
    return Signature(coin() ? tgw::Variant::plus : tgw::Variant::minus, par);
  }

  tgw::SuperMonomial monomial(const Signature& sig, int max_len) {
    tgw::SuperMonomial m(sig.size());
    int budget = uniform(0, max_len);
    for (std::size_t i = 0; i < sig.size(); ++i) {
      const int top = sig.is_clifford(i) ? 1 : 2;
      const int a = std::min(budget, uniform(0, top));
      budget -= a;
      const int b = std::min(budget, uniform(0, top));
      budget -= b;
      m.set(i, a, b);
    }
    return m;
  }

  Rational coefficient() {
    int num = uniform(-4, 4);
    if (num == 0) num = 1;
    return tgw::make_rational(num, uniform(1, 3));
  }

  tgw::SuperElement element(const Signature& sig, int terms, int max_len) {
    tgw::SuperElement a(sig);
    for (int k = 0; k < terms; ++k) a.add_term(monomial(sig, max_len), coefficient());
    return a;
  }

  /// Nonzero homogeneous element: monomials sharing the degree of the first one.
  tgw::SuperElement homogeneous(const Signature& sig, int terms, int max_len) {
    for (;;) {
      const auto first = monomial(sig, max_len);
      const auto deg = first.degree();
      tgw::SuperElement a = tgw::SuperElement::monomial(sig, first, coefficient());
      for (int k = 1; k < terms * 4 && static_cast<int>(a.terms().size()) < terms; ++k) {
        auto m = monomial(sig, max_len + 2);
        if (m.degree() == deg) a.add_term(m, coefficient());
      }
      if (!a.is_zero()) return a;
    }
  }

  std::vector<tgw::Generator> word(const Signature& sig, int len) {
    std::vector<tgw::Generator> w;
    for (int k = 0; k < len; ++k) w.push_back({static_cast<std::size_t>(uniform(0, static_cast<int>(sig.size()) - 1)), coin()});
    return w;
  }

  tgw::BaseRingElement ring_element(const Signature& sig, int terms) {
    tgw::BaseRingElement::Terms raw;
    for (int k = 0; k < terms; ++k) {
      tgw::RingExponents e(sig.size());
      for (auto& d : e) d = uniform(0, 2);
      raw[e] += coefficient();
    }
    return tgw::BaseRingElement(sig, raw);
  }

  /// Random matrix over `sig` that passes validation, or nothing after `tries`.
  std::optional<tgw::GammaMatrix> valid_gamma(const Signature& sig, std::size_t m, int tries = 200) {
    for (int t = 0; t < tries; ++t) {
      std::vector<std::vector<long>> rows(sig.size(), std::vector<long>(m));
      for (std::size_t j = 0; j < sig.size(); ++j) {
        const int lim = sig.is_clifford(j) ? 1 : 2;
        for (auto& v : rows[j]) v = uniform(-lim, lim);
      }
      try {
        tgw::GammaMatrix g(sig, rows);
        if (tgw::validate_gamma(g).valid()) return g;
      } catch (const tgw::Error&) {
      }
    }
    return std::nullopt;
  }
};

/// a and b act identically on every basis vector with Weyl exponents <= weyl_max.
inline bool same_action(const tgw::SuperElement& a, const tgw::SuperElement& b, int weyl_max = 4) {
  for (const auto& key : basis_keys(a.signature(), weyl_max)) {
    if (act(a, basis(key)) != act(b, basis(key))) return false;
  }
  return true;
}

/// ab acts as a after b.
inline bool product_matches(const tgw::SuperElement& a, const tgw::SuperElement& b, const tgw::SuperElement& ab,
                            int weyl_max = 4) {
  for (const auto& key : basis_keys(a.signature(), weyl_max)) {
    if (act(ab, basis(key)) != act(a, act(b, basis(key)))) return false;
  }
  return true;
}

}  // namespace oracle
