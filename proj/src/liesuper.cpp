#include "tgw/liesuper.hpp"

#include "tgw/errors.hpp"

namespace tgw {

std::string to_string(LieFamily f) {
  switch (f) {
    case LieFamily::gl: return "gl";
    case LieFamily::osp_even: return "osp_even";
    case LieFamily::osp_odd: return "osp_odd";
  }
  return "unknown";
}

std::string to_string(Realization r) { return r == Realization::weyl ? "weyl" : "clifford"; }

LieFamily parse_family(const std::string& s) {
  if (s == "gl") return LieFamily::gl;
  if (s == "osp_even" || s == "osp-even") return LieFamily::osp_even;
  if (s == "osp_odd" || s == "osp-odd") return LieFamily::osp_odd;
  throw InvalidInput("unknown Lie family '" + s + "' (expected gl, osp_even or osp_odd)");
}

Realization parse_realization(const std::string& s) {
  if (s == "weyl") return Realization::weyl;
  if (s == "clifford") return Realization::clifford;
  throw InvalidInput("unknown realization '" + s + "' (expected weyl or clifford)");
}

Realization default_realization(LieFamily f) {
  return f == LieFamily::osp_odd ? Realization::clifford : Realization::weyl;
}

std::string to_string(const LieGen& g) {
  const char* k = g.kind == LieGen::Kind::e ? "e" : g.kind == LieGen::Kind::f ? "f" : "h";
  return k + std::to_string(g.index + 1);
}

Calibration Calibration::unit(std::size_t raising, std::size_t cartan) {
  return Calibration{std::vector<Rational>(raising, Rational(1)), std::vector<Rational>(raising, Rational(1)),
                     std::vector<Rational>(cartan, Rational(0))};
}

int LiePreset::parity(const LieGen& g) const { return g.kind == LieGen::Kind::h ? 0 : e_parity.at(g.index); }

SuperElement LiePreset::image(const LieGen& g, const Calibration& cal) const {
  switch (g.kind) {
    case LieGen::Kind::e: return cal.e_scale.at(g.index) * e.at(g.index);
    case LieGen::Kind::f: return cal.f_scale.at(g.index) * f.at(g.index);
    case LieGen::Kind::h: return h.at(g.index) + SuperElement::scalar(signature(), cal.h_shift.at(g.index));
  }
  throw InvalidInput("unknown generator kind");
}

std::string LiePreset::name() const {
  const std::string pq = std::to_string(p) + "|" + std::to_string(q);
  switch (family) {
    case LieFamily::gl: return "gl(" + pq + ")";
    case LieFamily::osp_even: return "osp(" + std::to_string(2 * p) + "|" + std::to_string(2 * q) + ")";
    case LieFamily::osp_odd: return "osp(" + std::to_string(2 * p + 1) + "|" + std::to_string(2 * q) + ")";
  }
  return pq;
}

namespace {

std::vector<std::vector<long>> zeta_rows(LieFamily family, std::size_t n) {
  const std::size_t m = family == LieFamily::gl ? n - 1 : n;
  std::vector<std::vector<long>> rows(n, std::vector<long>(m, 0));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    rows[i][i] = 1;
    rows[i + 1][i] = -1;
  }
  if (family == LieFamily::osp_even) rows[n - 1][n - 1] = 2;
  if (family == LieFamily::osp_odd) rows[n - 1][n - 1] = 1;
  return rows;
}

LieGen E(std::size_t i) { return {LieGen::Kind::e, i}; }
LieGen F(std::size_t i) { return {LieGen::Kind::f, i}; }
LieGen H(std::size_t i) { return {LieGen::Kind::h, i}; }

std::string rel_id(const LieGen& a, const LieGen& b) { return "[" + to_string(a) + "," + to_string(b) + "]"; }

std::vector<LieRelation> relation_list(LieFamily family, std::size_t p, std::size_t n) {
  std::vector<LieRelation> rels;
  const std::size_t gl_e = n - 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) rels.push_back({rel_id(H(i), H(j)), H(i), H(j), {}});
  }
  // [h_i, e_j] = (delta_ij - delta_{i,j+1}) e_j and the mirror rule for f_j
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < gl_e; ++j) {
      const long c = (i == j ? 1 : 0) - (i == j + 1 ? 1 : 0);
      LieRelation re{rel_id(H(i), E(j)), H(i), E(j), {}};
      LieRelation rf{rel_id(H(i), F(j)), H(i), F(j), {}};
      if (c != 0) {
        re.rhs.push_back({Rational(c), E(j)});
        rf.rhs.push_back({Rational(-c), F(j)});
      }
      rels.push_back(std::move(re));
      rels.push_back(std::move(rf));
    }
  }
  // [e_i, f_j] = delta_ij (h_i - (-1)^{delta_ip} h_{i+1})
  for (std::size_t i = 0; i < gl_e; ++i) {
    for (std::size_t j = 0; j < gl_e; ++j) {
      LieRelation r{rel_id(E(i), F(j)), E(i), F(j), {}};
      if (i == j) {
        const long odd_root = (i + 1 == p) ? -1 : 1;
        r.rhs.push_back({Rational(1), H(i)});
        r.rhs.push_back({Rational(-odd_root), H(i + 1)});
      }
      rels.push_back(std::move(r));
    }
  }
  if (family == LieFamily::gl) return rels;

  // the extra generator e_n: x_n (odd family) or x_n^2 (even family, weight doubled)
  const std::size_t last = n - 1;
  const long weight = family == LieFamily::osp_even ? 2 : 1;
  for (std::size_t i = 0; i < n; ++i) {
    LieRelation re{rel_id(H(i), E(last)), H(i), E(last), {}};
    LieRelation rf{rel_id(H(i), F(last)), H(i), F(last), {}};
    if (i == last) {
      re.rhs.push_back({Rational(weight), E(last)});
      rf.rhs.push_back({Rational(-weight), F(last)});
    }
    rels.push_back(std::move(re));
    rels.push_back(std::move(rf));
  }
  rels.push_back({rel_id(E(last), F(last)), E(last), F(last), {{Rational(1), H(last)}}});
  for (std::size_t i = 0; i < last; ++i) {
    rels.push_back({rel_id(E(i), F(last)), E(i), F(last), {}});
    rels.push_back({rel_id(E(last), F(i)), E(last), F(i), {}});
  }
  return rels;
}

}  // namespace

LiePreset preset(LieFamily family, std::size_t p, std::size_t q, std::optional<Realization> realization) {
  const std::size_t n = p + q;
  if (n == 0) throw InvalidInput("p + q must be positive");
  const Realization real = realization.value_or(default_realization(family));
  std::vector<int> parity(n);
  for (std::size_t i = 0; i < n; ++i) {
    const bool first_block = i < p;
    parity[i] = real == Realization::weyl ? (first_block ? 1 : 0) : (first_block ? 0 : 1);
  }
  const Signature sig(real == Realization::weyl ? Variant::minus : Variant::plus, parity);
  if (family == LieFamily::gl && n < 2) {
    throw InvalidInput("gl(" + std::to_string(p) + "|" + std::to_string(q) + ") has no raising generators");
  }
  GammaMatrix zeta(sig, zeta_rows(family, n));
  const ValidationReport check = validate_gamma(zeta);
  if (!check.valid()) {
    throw InvalidInput("unsupported size for " + to_string(family) + " with p=" + std::to_string(p) +
                       ", q=" + std::to_string(q) + " in the " + to_string(real) +
                       " realization: " + check.violations.front().message);
  }

  LiePreset out{family, p, q, real, zeta, {}, {}, {}, {}, relation_list(family, p, n)};
  for (std::size_t i = 0; i + 1 < n; ++i) {
    out.e.push_back(SuperElement::x(sig, i) * SuperElement::d(sig, i + 1));
    out.e_parity.push_back(i + 1 == p ? 1 : 0);
  }
  if (family == LieFamily::osp_even) {
    out.e.push_back(SuperElement::x(sig, n - 1) * SuperElement::x(sig, n - 1));
    out.e_parity.push_back(0);
  } else if (family == LieFamily::osp_odd) {
    out.e.push_back(SuperElement::x(sig, n - 1));
    out.e_parity.push_back(q > 0 ? 1 : 0);
  }
  for (const auto& e : out.e) out.f.push_back(involution(e));
  const Rational half(1, 2);
  for (std::size_t i = 0; i < n; ++i) {
    Rational c = sig.parity(i) ? -half : half;
    if (real == Realization::clifford) c = -c;
    out.h.push_back(SuperElement::x(sig, i) * SuperElement::d(sig, i) + SuperElement::scalar(sig, c));
  }
  for (std::size_t i = 0; i < out.e.size(); ++i) {
    const int ambient = out.e[i].terms().begin()->first.parity(sig);
    if (ambient != out.e_parity[i]) {
      throw InvalidInput("Lie parity of e" + std::to_string(i + 1) + " is " + std::to_string(out.e_parity[i]) +
                         " but its image " + to_string(out.e[i]) + " has ambient parity " +
                         std::to_string(ambient) + " in " + out.name() + " (" + to_string(real) + ")");
    }
  }
  return out;
}

SuperElement super_bracket(const SuperElement& a, const SuperElement& b, int pa, int pb) {
  SuperElement ba = b * a;
  if (pa * pb % 2 == 1) return a * b + ba;
  return a * b - ba;
}

bool ResidualReport::all_pass() const {
  for (const auto& r : residuals) {
    if (!r.pass) return false;
  }
  return true;
}

ResidualReport check_relations(const LiePreset& preset, const Calibration& cal) {
  if (cal.e_scale.size() != preset.e.size() || cal.f_scale.size() != preset.f.size() ||
      cal.h_shift.size() != preset.h.size()) {
    throw InvalidInput("calibration sizes do not match " + preset.name());
  }
  ResidualReport report{cal, {}};
  for (const auto& rel : preset.relations) {
    SuperElement lhs = super_bracket(preset.image(rel.left, cal), preset.image(rel.right, cal),
                                     preset.parity(rel.left), preset.parity(rel.right));
    for (const auto& term : rel.rhs) lhs -= term.coef * preset.image(term.gen, cal);
    const bool pass = lhs.is_zero();
    report.residuals.push_back({rel.id, std::move(lhs), pass});
  }
  return report;
}

namespace {

SuperElement drop_constant(SuperElement a) {
  const Rational c = a.constant_term();
  if (c != 0) a -= SuperElement::scalar(a.signature(), c);
  return a;
}

// Solves A s = b over Q with free variables set to zero.
std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                                                  std::size_t unknowns) {
  const std::size_t rows = a.size();
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < unknowns && row < rows; ++col) {
    std::size_t sel = row;
    while (sel < rows && a[sel][col] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[row]);
    std::swap(b[sel], b[row]);
    const Rational inv = 1 / a[row][col];
    for (auto& v : a[row]) v *= inv;
    b[row] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || a[r][col] == 0) continue;
      const Rational factor = a[r][col];
      for (std::size_t c = 0; c < unknowns; ++c) a[r][c] -= factor * a[row][c];
      b[r] -= factor * b[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < rows; ++r) {
    if (b[r] != 0) return std::nullopt;
  }
  std::vector<Rational> s(unknowns, Rational(0));
  for (std::size_t r = 0; r < pivot_col.size(); ++r) s[pivot_col[r]] = b[r];
  return s;
}

}  // namespace

std::optional<Calibration> calibrate(const LiePreset& preset) {
  Calibration cal = Calibration::unit(preset.e.size(), preset.h.size());
  const std::size_t nh = preset.h.size();
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;

  for (const auto& rel : preset.relations) {
    if (rel.left.kind != LieGen::Kind::e || rel.right.kind != LieGen::Kind::f || rel.left.index != rel.right.index) {
      continue;
    }
    const std::size_t i = rel.left.index;
    const SuperElement bracket =
        super_bracket(preset.e[i], preset.f[i], preset.parity(rel.left), preset.parity(rel.right));
    SuperElement target(preset.signature());
    std::vector<Rational> row(nh, Rational(0));
    for (const auto& term : rel.rhs) {
      target += term.coef * preset.h.at(term.gen.index);
      row[term.gen.index] += term.coef;
    }
    const SuperElement bracket_nc = drop_constant(bracket);
    const SuperElement target_nc = drop_constant(target);
    Rational scale = 1;
    if (!target_nc.is_zero()) {
      if (bracket_nc.is_zero()) return std::nullopt;
      const auto& [mono, coef] = *target_nc.terms().begin();
      auto it = bracket_nc.terms().find(mono);
      if (it == bracket_nc.terms().end()) return std::nullopt;
      scale = coef / it->second;
      if (!(scale * bracket_nc == target_nc)) return std::nullopt;
    } else if (!bracket_nc.is_zero()) {
      return std::nullopt;
    }
    cal.f_scale[i] = scale / cal.e_scale[i];
    // scale * bracket_0 = target_0 + sum coef_k s_k
    a.push_back(std::move(row));
    b.push_back(scale * bracket.constant_term() - target.constant_term());
  }
  auto shifts = solve_linear(std::move(a), std::move(b), nh);
  if (!shifts) return std::nullopt;
  cal.h_shift = std::move(*shifts);
  return cal;
}

bool TriangleReport::e_match_all() const {
  for (const auto& entry : entries) {
    if (entry.gen.kind == LieGen::Kind::e && !entry.match) return false;
  }
  return true;
}

bool TriangleReport::h_offsets_constant() const {
  for (const auto& entry : entries) {
    if (entry.gen.kind == LieGen::Kind::h && !entry.offset) return false;
  }
  return true;
}

TriangleReport check_triangle(const LiePreset& preset, const Calibration& cal) {
  TriangleReport report;
  const Signature& sig = preset.signature();
  for (std::size_t i = 0; i < preset.e.size(); ++i) {
    SuperElement phi_x = phi_generator(preset.zeta, X(i));
    SuperElement scaled = preset.image(E(i), cal);
    const bool match = phi_x == scaled;
    report.entries.push_back({E(i), std::move(phi_x), std::move(scaled), match, std::nullopt});
  }
  for (std::size_t i = 0; i < preset.f.size(); ++i) {
    SuperElement phi_y = phi_generator(preset.zeta, Y(i));
    SuperElement scaled = preset.image(F(i), cal);
    const bool match = phi_y == scaled;
    report.entries.push_back({F(i), std::move(phi_y), std::move(scaled), match, std::nullopt});
  }
  for (std::size_t i = 0; i < preset.h.size(); ++i) {
    // psi(h_ii) = lambda_ii (u_i - 1), pushed into the superalgebra by iota
    BaseRingElement psi_h = BaseRingElement::u(sig, i) - BaseRingElement::constant(sig, Rational(1));
    psi_h *= Rational(sig.lambda(i, i));
    SuperElement via_phi = iota_embed(psi_h);
    SuperElement scaled = preset.image(H(i), cal);
    const SuperElement diff = scaled - via_phi;
    std::optional<Rational> offset;
    if (diff.is_scalar()) offset = diff.constant_term();
    const bool match = diff.is_zero();
    report.entries.push_back({H(i), std::move(via_phi), std::move(scaled), match, offset});
  }
  return report;
}

}  // namespace tgw
