#include "tgw/basering.hpp"

#include <algorithm>
#include <numeric>

#include "render.hpp"
#include "tgw/errors.hpp"

namespace tgw {

BaseRingElement::BaseRingElement(Signature sig) : sig_(std::move(sig)) {}

BaseRingElement::BaseRingElement(Signature sig, const Terms& raw) : sig_(std::move(sig)) {
  for (const auto& [e, c] : raw) {
    if (e.size() != sig_.size()) throw InvalidInput("exponent vector has wrong length");
    add_term(e, c);
  }
}

BaseRingElement BaseRingElement::constant(Signature sig, const Rational& c) {
  BaseRingElement r(sig);
  r.add_term(RingExponents(sig.size(), 0), c);
  return r;
}

BaseRingElement BaseRingElement::u(Signature sig, std::size_t i) {
  if (i >= sig.size()) throw InvalidInput("u index out of range");
  RingExponents e(sig.size(), 0);
  e[i] = 1;
  BaseRingElement r(sig);
  r.add_term(e, Rational(1));
  return r;
}

void BaseRingElement::add_term(const RingExponents& raw, const Rational& c) {
  if (c == 0) return;
  RingExponents e = raw;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0) throw InvalidInput("negative exponent in base ring element");
    if (sig_.is_clifford(i) && e[i] > 1) e[i] = 1;
  }
  Rational q = c;
  q.canonicalize();
  auto [it, inserted] = terms_.try_emplace(e, q);
  if (!inserted) {
    it->second += q;
    if (it->second == 0) terms_.erase(it);
  }
}

bool BaseRingElement::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int d) { return d == 0; });
}

Rational BaseRingElement::constant_term() const {
  auto it = terms_.find(RingExponents(sig_.size(), 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

BaseRingElement& BaseRingElement::operator+=(const BaseRingElement& o) {
  require_same(sig_, o.sig_, "base ring addition");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

BaseRingElement& BaseRingElement::operator-=(const BaseRingElement& o) {
  require_same(sig_, o.sig_, "base ring subtraction");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

BaseRingElement& BaseRingElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  Rational q = c;
  q.canonicalize();
  for (auto& [e, coef] : terms_) coef *= q;
  return *this;
}

BaseRingElement operator*(const BaseRingElement& a, const BaseRingElement& b) {
  require_same(a.sig_, b.sig_, "base ring multiplication");
  BaseRingElement out(a.sig_);
  RingExponents e(a.sig_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

bool operator==(const BaseRingElement& a, const BaseRingElement& b) {
  require_same(a.sig_, b.sig_, "base ring comparison");
  return a.terms_ == b.terms_;
}

Rational BaseRingElement::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != sig_.size()) throw InvalidInput("evaluation point has wrong length");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational v = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) v *= point[i];
    }
    total += v;
  }
  return total;
}

BaseRingElement reduce(Signature sig, const BaseRingElement::Terms& raw) {
  return BaseRingElement(std::move(sig), raw);
}

Automorphism Automorphism::compose(const Automorphism& o) const {
  if (o.exponents.size() != exponents.size()) throw InvalidInput("automorphism size mismatch");
  Automorphism out = *this;
  for (std::size_t i = 0; i < exponents.size(); ++i) out.exponents[i] += o.exponents[i];
  return out;
}

Automorphism Automorphism::inverse() const {
  Automorphism out = *this;
  for (auto& e : out.exponents) e = -e;
  return out;
}

Automorphism identity_automorphism(std::size_t n) { return Automorphism{std::vector<long>(n, 0)}; }

Automorphism tau(std::size_t n, std::size_t i, long power) {
  Automorphism a = identity_automorphism(n);
  a.exponents.at(i) = power;
  return a;
}

BaseRingElement tau_power_of_u(const Signature& sig, std::size_t i, long k) {
  const BaseRingElement u = BaseRingElement::u(sig, i);
  if (sig.is_clifford(i)) {
    if (k % 2 == 0) return u;
    return BaseRingElement::constant(sig, Rational(1)) - u;
  }
  return u - BaseRingElement::constant(sig, Rational(k));
}

namespace {

// (u_i - k)^d expanded binomially, without materializing the power by repeated products.
BaseRingElement shifted_power(const Signature& sig, std::size_t i, long k, int d) {
  BaseRingElement::Terms raw;
  Integer binom = 1;
  Integer shift_pow = 1;
  const Integer minus_k = -k;
  // term u^j * C(d, j) * (-k)^{d-j}, built from j = d downwards
  for (int j = d; j >= 0; --j) {
    RingExponents e(sig.size(), 0);
    e[i] = j;
    raw[e] = Rational(binom * shift_pow);
    binom = binom * j / (d - j + 1);
    shift_pow *= minus_k;
  }
  return BaseRingElement(sig, raw);
}

}  // namespace

BaseRingElement tau_apply(const Automorphism& sigma, const BaseRingElement& r) {
  const Signature& sig = r.signature();
  if (sigma.exponents.size() != sig.size()) throw InvalidInput("automorphism size mismatch");
  BaseRingElement out(sig);
  for (const auto& [e, c] : r.terms()) {
    BaseRingElement term = BaseRingElement::constant(sig, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      const long k = sigma.exponents[i];
      if (sig.is_clifford(i)) {
        // idempotent: any positive power of the image equals the image
        term = term * tau_power_of_u(sig, i, k);
      } else if (k == 0) {
        RingExponents single(sig.size(), 0);
        single[i] = e[i];
        term = term * BaseRingElement(sig, {{single, Rational(1)}});
      } else {
        term = term * shifted_power(sig, i, k, e[i]);
      }
    }
    out += term;
  }
  return out;
}

bool acts_trivially(const Signature& sig, const Automorphism& sigma) {
  for (std::size_t i = 0; i < sig.size(); ++i) {
    const long k = sigma.exponents.at(i);
    if (sig.is_clifford(i) ? (k % 2 != 0) : (k != 0)) return false;
  }
  return true;
}

std::string to_string(const BaseRingElement& r) {
  std::vector<std::pair<RingExponents, Rational>> sorted(r.terms().begin(), r.terms().end());
  auto total = [](const RingExponents& e) { return std::accumulate(e.begin(), e.end(), 0L); };
  std::sort(sorted.begin(), sorted.end(), [&](const auto& a, const auto& b) {
    const long da = total(a.first);
    const long db = total(b.first);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::vector<std::pair<Rational, std::string>> terms;
  for (const auto& [e, c] : sorted) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += detail::power("u" + std::to_string(i + 1), e[i]);
    }
    terms.emplace_back(c, mono);
  }
  return detail::render_sum(terms);
}

}  // namespace tgw
