#include "tgw/tgwdatum.hpp"

#include <cctype>
#include <sstream>

#include "tgw/errors.hpp"

namespace tgw {

GammaMatrix::GammaMatrix(Signature sig, std::vector<std::vector<long>> rows) : sig_(std::move(sig)), cols_(0) {
  if (rows.size() != sig_.size()) {
    throw InvalidInput("gamma has " + std::to_string(rows.size()) + " rows but the signature has " +
                       std::to_string(sig_.size()) + " directions");
  }
  cols_ = rows.front().size();
  if (cols_ == 0) throw InvalidInput("gamma must have at least one column");
  entries_.reserve(rows.size() * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw InvalidInput("gamma rows have unequal lengths");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

std::vector<long> GammaMatrix::column(std::size_t col) const {
  std::vector<long> out(rows());
  for (std::size_t j = 0; j < rows(); ++j) out[j] = (*this)(j, col);
  return out;
}

std::vector<std::vector<long>> GammaMatrix::row_vectors() const {
  std::vector<std::vector<long>> out(rows(), std::vector<long>(cols_));
  for (std::size_t j = 0; j < rows(); ++j) {
    for (std::size_t i = 0; i < cols_; ++i) out[j][i] = (*this)(j, i);
  }
  return out;
}

std::vector<long> GammaMatrix::apply(std::span<const long> g) const {
  if (g.size() != cols_) throw InvalidInput("degree vector has wrong length");
  std::vector<long> out(rows(), 0);
  for (std::size_t j = 0; j < rows(); ++j) {
    for (std::size_t i = 0; i < cols_; ++i) out[j] += (*this)(j, i) * g[i];
  }
  return out;
}

std::string to_string(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::zero_column: return "zero_column";
    case Violation::Kind::clifford_entry: return "clifford_entry";
    case Violation::Kind::column_pair: return "column_pair";
  }
  return "unknown";
}

ValidationReport validate_gamma(const GammaMatrix& gamma) {
  ValidationReport report;
  const Signature& sig = gamma.signature();
  const std::size_t n = gamma.rows();
  const std::size_t m = gamma.cols();

  for (std::size_t i = 0; i < m; ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < n; ++j) zero = zero && gamma(j, i) == 0;
    if (zero) {
      report.violations.push_back({Violation::Kind::zero_column, 0, i, 0,
                                   "column " + std::to_string(i + 1) + " is zero (X_" + std::to_string(i + 1) +
                                       " would have degree zero)"});
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (!sig.is_clifford(j)) continue;
    for (std::size_t i = 0; i < m; ++i) {
      if (gamma(j, i) > 1 || gamma(j, i) < -1) {
        report.violations.push_back({Violation::Kind::clifford_entry, j, i, 0,
                                     "Clifford row " + std::to_string(j + 1) + " has entry " +
                                         std::to_string(gamma(j, i)) + " in column " + std::to_string(i + 1)});
      }
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = i + 1; k < m; ++k) {
      bool clifford_opposite = false;
      bool same_sign_row = false;
      for (std::size_t j = 0; j < n; ++j) {
        const long prod = gamma(j, i) * gamma(j, k);
        if (prod < 0 && sig.is_clifford(j)) clifford_opposite = true;
        if (prod > 0) same_sign_row = true;
      }
      if (!clifford_opposite && same_sign_row) {
        report.violations.push_back({Violation::Kind::column_pair, 0, i, k,
                                     "columns " + std::to_string(i + 1) + " and " +
                                         std::to_string(k + 1) +
                                         " share a same-sign row and no Clifford row separates them"});
      }
    }
  }
  return report;
}

void require_valid(const GammaMatrix& gamma) {
  const ValidationReport report = validate_gamma(gamma);
  if (report.valid()) return;
  std::string msg = "gamma fails validation:";
  for (const auto& v : report.violations) msg += " " + v.message + ";";
  throw InvalidGamma(msg);
}

namespace {

BaseRingElement t_unchecked(const GammaMatrix& gamma, std::size_t i) {
  const Signature& sig = gamma.signature();
  BaseRingElement t = BaseRingElement::constant(sig, Rational(1));
  for (std::size_t j = 0; j < gamma.rows(); ++j) {
    const long g = gamma(j, i);
    // d^g x^g = u tau^{-1}(u) ... tau^{-(g-1)}(u);  x^|g| d^|g| = tau(u) tau^2(u) ... tau^|g|(u)
    if (g > 0) {
      for (long k = 0; k < g; ++k) t = t * tau_power_of_u(sig, j, -k);
    } else {
      for (long k = 1; k <= -g; ++k) t = t * tau_power_of_u(sig, j, k);
    }
  }
  return t;
}

}  // namespace

BaseRingElement derive_t(const GammaMatrix& gamma, std::size_t i) {
  require_valid(gamma);
  if (i >= gamma.cols()) throw InvalidInput("column index out of range");
  return t_unchecked(gamma, i);
}

Automorphism derive_sigma(const GammaMatrix& gamma, std::size_t i) {
  require_valid(gamma);
  if (i >= gamma.cols()) throw InvalidInput("column index out of range");
  return Automorphism{gamma.column(i)};
}

namespace {

MuData mu_unchecked(const GammaMatrix& gamma) {
  const Signature& sig = gamma.signature();
  const std::size_t m = gamma.cols();
  MuData out;
  out.pparity.assign(m, 0);
  out.pprime.assign(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    long p = 0;
    long pp = 0;
    for (std::size_t k = 0; k < gamma.rows(); ++k) {
      const long g = gamma(k, i) % 2 == 0 ? 0 : 1;
      p += g * sig.parity(k);
      pp += g;
    }
    out.pparity[i] = static_cast<int>(p % 2);
    out.pprime[i] = static_cast<int>(pp % 2);
  }
  const int outer = sig.variant_sign();
  out.mu.assign(m, std::vector<int>(m, 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      int v = 1;
      if (out.pprime[i] && out.pprime[j]) v *= outer;
      if (out.pparity[i] && out.pparity[j]) v = -v;
      out.mu[i][j] = v;
    }
  }
  return out;
}

}  // namespace

MuData derive_mu(const GammaMatrix& gamma) {
  require_valid(gamma);
  return mu_unchecked(gamma);
}

int mu_by_swaps(const GammaMatrix& gamma, std::size_t i, std::size_t j) {
  const Signature& sig = gamma.signature();
  long negatives = 0;
  for (std::size_t k = 0; k < gamma.rows(); ++k) {
    for (std::size_t l = 0; l < gamma.rows(); ++l) {
      if (sig.lambda(k, l) == -1) negatives += gamma(k, i) * gamma(l, j);
    }
  }
  return negatives % 2 == 0 ? 1 : -1;
}

TgwDatum derive_datum(const GammaMatrix& gamma) {
  require_valid(gamma);
  TgwDatum datum{gamma.signature(), {}, {}, mu_unchecked(gamma)};
  for (std::size_t i = 0; i < gamma.cols(); ++i) {
    datum.t.push_back(t_unchecked(gamma, i));
    datum.sigma.push_back(Automorphism{gamma.column(i)});
  }
  return datum;
}

bool ConsistencyReport::all_pass() const {
  for (const auto& e : entries) {
    if (!e.pass) return false;
  }
  return true;
}

ConsistencyReport consistency_check(const TgwDatum& datum) {
  ConsistencyReport report;
  const std::size_t m = datum.rank();
  const auto& t = datum.t;
  const auto& s = datum.sigma;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      BaseRingElement lhs = tau_apply(s[i].compose(s[j]), t[i] * t[j]);
      BaseRingElement rhs = tau_apply(s[i], t[i]) * tau_apply(s[j], t[j]);
      rhs *= Rational(datum.mu.mu[i][j] * datum.mu.mu[j][i]);
      const bool pass = lhs == rhs;
      report.entries.push_back({ConsistencyEntry::Kind::pair, {i, j}, std::move(lhs), std::move(rhs), pass});
    }
  }
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      if (i == j) continue;
      for (std::size_t k = i + 1; k < m; ++k) {
        if (k == j) continue;
        BaseRingElement lhs = tau_apply(s[i].compose(s[k]), t[j]) * t[j];
        BaseRingElement rhs = tau_apply(s[i], t[j]) * tau_apply(s[k], t[j]);
        const bool pass = lhs == rhs;
        report.entries.push_back({ConsistencyEntry::Kind::triple, {i, j, k}, std::move(lhs), std::move(rhs), pass});
      }
    }
  }
  return report;
}

namespace {

SuperElement phi_unchecked(const GammaMatrix& gamma, Letter letter) {
  const Signature& sig = gamma.signature();
  SuperMonomial m(sig.size());
  for (std::size_t j = 0; j < gamma.rows(); ++j) {
    const long g = gamma(j, letter.index);
    if (g >= 0) {
      m.set(j, static_cast<int>(g), 0);
    } else {
      m.set(j, 0, static_cast<int>(-g));
    }
  }
  SuperElement x = SuperElement::monomial(sig, m);
  return letter.raising ? x : involution(x);
}

}  // namespace

SuperElement phi_generator(const GammaMatrix& gamma, Letter letter) {
  require_valid(gamma);
  if (letter.index >= gamma.cols()) throw InvalidInput("generator index out of range");
  return phi_unchecked(gamma, letter);
}

GradedElement eval_word(const GammaMatrix& gamma, std::span<const Letter> word) {
  require_valid(gamma);
  GradedElement out{std::vector<long>(gamma.cols(), 0), SuperElement::one(gamma.signature())};
  for (const Letter& l : word) {
    if (l.index >= gamma.cols()) throw InvalidInput("generator index out of range");
    out.degree[l.index] += l.raising ? 1 : -1;
    if (!out.image.is_zero()) out.image = out.image * phi_unchecked(gamma, l);
  }
  return out;
}

BaseRingElement gradation_pair(const GradedElement& a, const GradedElement& b) {
  if (a.degree.size() != b.degree.size()) throw InvalidInput("graded elements come from different matrices");
  return project_zero(a.image * b.image);
}

std::vector<Letter> parse_word(const std::string& text) {
  std::vector<Letter> word;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '*') {
      ++pos;
      continue;
    }
    if (c != 'X' && c != 'Y' && c != 'x' && c != 'y') {
      throw InvalidInput("word letters must be X<i> or Y<i>, got '" + std::string(1, c) + "'");
    }
    const bool raising = c == 'X' || c == 'x';
    std::size_t end = pos + 1;
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
    if (end == pos + 1) throw InvalidInput("missing index after '" + std::string(1, c) + "'");
    const long idx = std::stol(text.substr(pos + 1, end - pos - 1));
    if (idx < 1) throw InvalidInput("generator indices are one-based");
    word.push_back({static_cast<std::size_t>(idx - 1), raising});
    pos = end;
  }
  return word;
}

std::string to_string(std::span<const Letter> word) {
  std::ostringstream out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    out << (k ? " " : "") << (word[k].raising ? 'X' : 'Y') << word[k].index + 1;
  }
  return out.str();
}

}  // namespace tgw
