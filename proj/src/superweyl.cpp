#include "tgw/superweyl.hpp"

#include <algorithm>
#include <sstream>

#include "render.hpp"
#include "tgw/errors.hpp"

namespace tgw {

std::vector<long> SuperMonomial::degree() const {
  std::vector<long> deg(size());
  for (std::size_t i = 0; i < size(); ++i) deg[i] = x_exp(i) - d_exp(i);
  return deg;
}

int SuperMonomial::parity(const Signature& sig) const {
  int p = 0;
  for (std::size_t i = 0; i < size(); ++i) p += length(i) * sig.parity(i);
  return p % 2;
}

bool SuperMonomial::is_unit() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

bool SuperMonomial::valid_for(const Signature& sig) const {
  if (size() != sig.size()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (x_exp(i) < 0 || d_exp(i) < 0) return false;
    if (sig.is_clifford(i) && (x_exp(i) > 1 || d_exp(i) > 1)) return false;
  }
  return true;
}

SuperElement::SuperElement(Signature sig) : sig_(std::move(sig)) {}

SuperElement SuperElement::one(Signature sig) { return scalar(std::move(sig), Rational(1)); }

SuperElement SuperElement::scalar(Signature sig, const Rational& c) {
  SuperElement e(sig);
  e.add_term(SuperMonomial(sig.size()), c);
  return e;
}

SuperElement SuperElement::monomial(Signature sig, const SuperMonomial& m, const Rational& c) {
  if (!m.valid_for(sig)) throw InvalidInput("monomial is not valid for the signature");
  SuperElement e(std::move(sig));
  e.add_term(m, c);
  return e;
}

SuperElement SuperElement::generator(Signature sig, Generator g) {
  if (g.index >= sig.size()) throw InvalidInput("generator index out of range");
  SuperMonomial m(sig.size());
  m.set(g.index, g.is_x ? 1 : 0, g.is_x ? 0 : 1);
  return monomial(std::move(sig), m);
}

SuperElement SuperElement::x(Signature sig, std::size_t i) { return generator(std::move(sig), {i, true}); }
SuperElement SuperElement::d(Signature sig, std::size_t i) { return generator(std::move(sig), {i, false}); }

void SuperElement::add_term(const SuperMonomial& m, const Rational& c) {
  if (c == 0) return;
  Rational q = c;
  q.canonicalize();
  auto [it, inserted] = terms_.try_emplace(m, q);
  if (!inserted) {
    it->second += q;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational SuperElement::constant_term() const {
  auto it = terms_.find(SuperMonomial(sig_.size()));
  return it == terms_.end() ? Rational(0) : it->second;
}

bool SuperElement::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

SuperElement& SuperElement::operator+=(const SuperElement& o) {
  require_same(sig_, o.sig_, "element addition");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SuperElement& SuperElement::operator-=(const SuperElement& o) {
  require_same(sig_, o.sig_, "element subtraction");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SuperElement& SuperElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  Rational q = c;
  q.canonicalize();
  for (auto& [m, coef] : terms_) coef *= q;
  return *this;
}

bool operator==(const SuperElement& a, const SuperElement& b) {
  require_same(a.sig_, b.sig_, "element comparison");
  return a.terms_ == b.terms_;
}

namespace {

struct BlockTerm {
  Integer coef;
  int a;
  int b;
};

// x^a d^b x^c d^d within one direction, as a list of normal-ordered blocks.
std::vector<BlockTerm> block_product(bool clifford, int a, int b, int c, int d) {
  std::vector<BlockTerm> out;
  if (clifford) {
    // d x = 1 - x d; everything else is already ordered
    if (b == 1 && c == 1) {
      out.push_back({Integer(1), a, d});
      out.push_back({Integer(-1), a + 1, d + 1});
    } else {
      out.push_back({Integer(1), a + c, b + d});
    }
    std::erase_if(out, [](const BlockTerm& t) { return t.a > 1 || t.b > 1; });
    return out;
  }
  // d^b x^c = sum_k C(b,k) C(c,k) k! x^{c-k} d^{b-k}
  const int kmax = std::min(b, c);
  Integer coef = 1;
  for (int k = 0; k <= kmax; ++k) {
    out.push_back({coef, a + c - k, b + d - k});
    // C(b,k+1)C(c,k+1)(k+1)! from C(b,k)C(c,k)k!
    coef = coef * (b - k) * (c - k) / (k + 1);
  }
  return out;
}

}  // namespace

SuperElement mono_mul(const Signature& sig, const SuperMonomial& m1, const SuperMonomial& m2) {
  if (!m1.valid_for(sig) || !m2.valid_for(sig)) throw InvalidInput("monomial is not valid for the signature");
  const std::size_t n = sig.size();

  // move each block of m2 left past the higher-index blocks of m1
  long negative_swaps = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const long moving = m2.length(j);
    if (moving == 0) continue;
    for (std::size_t k = j + 1; k < n; ++k) {
      if (sig.lambda(j, k) == -1) negative_swaps += moving * m1.length(k);
    }
  }
  const Integer sign = (negative_swaps % 2 == 0) ? 1 : -1;

  std::vector<std::vector<BlockTerm>> blocks(n);
  for (std::size_t i = 0; i < n; ++i) {
    blocks[i] = block_product(sig.is_clifford(i), m1.x_exp(i), m1.d_exp(i), m2.x_exp(i), m2.d_exp(i));
    if (blocks[i].empty()) return SuperElement(sig);
  }

  SuperElement out(sig);
  std::vector<std::size_t> pick(n, 0);
  SuperMonomial m(n);
  while (true) {
    Integer coef = sign;
    for (std::size_t i = 0; i < n; ++i) {
      const BlockTerm& t = blocks[i][pick[i]];
      coef *= t.coef;
      m.set(i, t.a, t.b);
    }
    out.add_term(m, Rational(coef));
    std::size_t i = 0;
    while (i < n && ++pick[i] == blocks[i].size()) pick[i++] = 0;
    if (i == n) break;
  }
  return out;
}

SuperElement operator*(const SuperElement& a, const SuperElement& b) {
  require_same(a.sig_, b.sig_, "element multiplication");
  SuperElement out(a.sig_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      const Rational c = ca * cb;
      for (const auto& [m, k] : mono_mul(a.sig_, ma, mb).terms_) out.add_term(m, c * k);
    }
  }
  return out;
}

SuperElement elem_mul(const SuperElement& a, const SuperElement& b) { return a * b; }
SuperElement elem_add(const SuperElement& a, const SuperElement& b) { return a + b; }
SuperElement scalar_mul(const Rational& c, const SuperElement& a) { return c * a; }

SuperElement normalize_word(const Signature& sig, std::span<const Generator> word, bool from_left) {
  SuperElement acc = SuperElement::one(sig);
  if (from_left) {
    for (const Generator& g : word) acc = acc * SuperElement::generator(sig, g);
  } else {
    for (auto it = word.rbegin(); it != word.rend(); ++it) acc = SuperElement::generator(sig, *it) * acc;
  }
  return acc;
}

SuperElement involution(const SuperElement& a) {
  const Signature& sig = a.signature();
  const std::size_t n = sig.size();
  SuperElement out(sig);
  for (const auto& [m, c] : a.terms()) {
    // (B_1 ... B_n)* = B_n* ... B_1*, with (x^a d^b)* = x^b d^a
    SuperMonomial star(n);
    long negative_swaps = 0;
    for (std::size_t i = 0; i < n; ++i) {
      star.set(i, m.d_exp(i), m.x_exp(i));
      for (std::size_t k = i + 1; k < n; ++k) {
        if (sig.lambda(i, k) == -1) negative_swaps += static_cast<long>(m.length(i)) * m.length(k);
      }
    }
    out.add_term(star, negative_swaps % 2 == 0 ? c : Rational(-c));
  }
  return out;
}

std::vector<long> degree_of(const SuperElement& a) {
  if (a.is_zero()) throw UndefinedDegree("the zero element has no degree");
  std::vector<std::vector<long>> seen;
  for (const auto& [m, c] : a.terms()) {
    auto deg = m.degree();
    if (std::find(seen.begin(), seen.end(), deg) == seen.end()) seen.push_back(std::move(deg));
  }
  if (seen.size() == 1) return seen.front();
  std::sort(seen.begin(), seen.end());
  std::ostringstream msg;
  msg << "inhomogeneous element; degrees:";
  for (const auto& deg : seen) {
    msg << " (";
    for (std::size_t i = 0; i < deg.size(); ++i) msg << (i ? "," : "") << deg[i];
    msg << ")";
  }
  throw Inhomogeneous(msg.str());
}

BaseRingElement project_zero(const SuperElement& a) {
  const Signature& sig = a.signature();
  BaseRingElement out(sig);
  for (const auto& [m, c] : a.terms()) {
    bool degree_zero = true;
    for (std::size_t i = 0; i < m.size() && degree_zero; ++i) degree_zero = m.x_exp(i) == m.d_exp(i);
    if (!degree_zero) continue;
    // x_i^k d_i^k = tau_i(u_i) tau_i^2(u_i) ... tau_i^k(u_i); distinct blocks commute
    BaseRingElement term = BaseRingElement::constant(sig, c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (int k = 1; k <= m.x_exp(i); ++k) term = term * tau_power_of_u(sig, i, k);
    }
    out += term;
  }
  return out;
}

SuperElement iota_embed(const BaseRingElement& r) {
  const Signature& sig = r.signature();
  std::vector<SuperElement> u_images;
  u_images.reserve(sig.size());
  for (std::size_t i = 0; i < sig.size(); ++i) u_images.push_back(SuperElement::d(sig, i) * SuperElement::x(sig, i));
  SuperElement out(sig);
  for (const auto& [e, c] : r.terms()) {
    SuperElement term = SuperElement::scalar(sig, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) term = term * u_images[i];
    }
    out += term;
  }
  return out;
}

SuperMonomial power_gen(const Signature& sig, std::size_t j, long k) {
  if (j >= sig.size()) throw InvalidInput("generator index out of range");
  if (sig.is_clifford(j) && (k > 1 || k < -1)) {
    throw Nilpotent("power " + std::to_string(k) + " of a generator on Clifford direction " +
                    std::to_string(j + 1) + " is zero");
  }
  SuperMonomial m(sig.size());
  if (k >= 0) {
    m.set(j, static_cast<int>(k), 0);
  } else {
    m.set(j, 0, static_cast<int>(-k));
  }
  return m;
}

std::string to_string(const SuperMonomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const std::string idx = std::to_string(i + 1);
    if (m.x_exp(i) > 0) {
      if (!out.empty()) out += "*";
      out += detail::power("x" + idx, m.x_exp(i));
    }
    if (m.d_exp(i) > 0) {
      if (!out.empty()) out += "*";
      out += detail::power("d" + idx, m.d_exp(i));
    }
  }
  return out;
}

std::string to_string(const SuperElement& a) {
  std::vector<std::pair<std::vector<long>, const SuperElement::Terms::value_type*>> keyed;
  for (const auto& term : a.terms()) keyed.emplace_back(term.first.degree(), &term);
  std::sort(keyed.begin(), keyed.end(), [](const auto& l, const auto& r) {
    if (l.first != r.first) return l.first < r.first;
    return l.second->first < r.second->first;
  });
  std::vector<std::pair<Rational, std::string>> terms;
  for (const auto& [deg, term] : keyed) terms.emplace_back(term->second, to_string(term->first));
  return detail::render_sum(terms);
}

}  // namespace tgw
