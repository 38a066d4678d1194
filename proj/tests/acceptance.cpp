// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "tgw/io.hpp"
#include "tgw/liesuper.hpp"
#include "tgw/support.hpp"
#include "tgw/tgwdatum.hpp"

using namespace tgw;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

using PointSet = std::set<std::vector<long>>;

PointSet point_set(const std::vector<SupportPoint>& pts) {
  PointSet out;
  for (const auto& p : pts) out.insert(p.point);
  return out;
}

std::string show(const std::vector<long>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

GammaMatrix identity(Variant v, std::size_t p, std::size_t q) {
  const std::size_t n = p + q;
  std::vector<std::vector<long>> rows(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1;
  return GammaMatrix(Signature::from_pq(v, p, q), rows);
}

GammaMatrix ex_comp() {
  return GammaMatrix(Signature(Variant::minus, {0, 1, 1}), {{1, 3, 0}, {1, 0, -1}, {1, -1, 1}});
}

/// The three injectivity matrices: subdiagonal-1 band with m = n-1 (alpha),
/// m = n with last entry 1 (beta) or 2 (gamma).
std::vector<std::vector<long>> band(std::size_t n, int kind) {
  const std::size_t m = kind == 0 ? n - 1 : n;
  std::vector<std::vector<long>> rows(n, std::vector<long>(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    rows[i][i] = 1;
    if (i + 1 < n) rows[i + 1][i] = -1;
  }
  if (kind == 2) rows[n - 1][m - 1] = 2;
  return rows;
}

std::vector<LiePreset> all_presets(std::size_t max_n) {
  std::vector<LiePreset> out;
  for (LieFamily fam : {LieFamily::gl, LieFamily::osp_even, LieFamily::osp_odd}) {
    for (std::size_t n = 1; n <= max_n; ++n) {
      for (std::size_t p = 0; p <= n; ++p) {
        for (Realization r : {Realization::weyl, Realization::clifford}) {
          try {
            out.push_back(preset(fam, p, n - p, r));
          } catch (const InvalidInput&) {
          }
        }
      }
    }
  }
  return out;
}

/// Every matrix the suite treats as its corpus of validated data.
std::vector<GammaMatrix> corpus() {
  std::vector<GammaMatrix> out;
  for (const auto& entry : std::filesystem::directory_iterator(TGW_DATA_DIR)) {
    if (entry.path().extension() != ".json") continue;
    auto g = read_gamma_file(entry.path().string());
    if (validate_gamma(g).valid()) out.push_back(std::move(g));
  }
  for (Variant v : {Variant::plus, Variant::minus}) {
    for (std::size_t p = 0; p <= 3; ++p) {
      for (std::size_t q = 0; p + q <= 3; ++q) {
        if (p + q > 0) out.push_back(identity(v, p, q));
      }
    }
  }
  out.push_back(ex_comp());
  for (const auto& pr : all_presets(4)) out.push_back(pr.zeta);
  oracle::Rng rng(2024);
  for (int k = 0; k < 40; ++k) {
    const auto s = rng.signature(3);
    if (auto g = rng.valid_gamma(s, static_cast<std::size_t>(rng.uniform(1, 4)))) out.push_back(*g);
  }
  return out;
}

// 1
Outcome support_line_example() {
  Outcome o;
  const GammaMatrix g(Signature(Variant::minus, {1}), {{1, -1}});
  const auto got = point_set(enumerate_support(g, Box::cube(2, 5)));
  PointSet expect;
  for (long a = -5; a <= 5; ++a) {
    for (long b = -5; b <= 5; ++b) {
      if (std::abs(a - b) <= 1) expect.insert({a, b});
    }
  }
  if (got != expect) o.fail("support differs: " + std::to_string(got.size()) + " vs " + std::to_string(expect.size()));
  o.detail = o.pass ? std::to_string(got.size()) + " points" : o.detail;
  return o;
}

// 2
Outcome support_finite_example() {
  Outcome o;
  const GammaMatrix g(Signature(Variant::minus, {1, 1}), {{1, 0}, {1, -1}});
  const auto got = point_set(enumerate_support(g, Box::cube(2, 4)));
  const PointSet expect{{0, 0}, {0, 1}, {0, -1}, {1, 0}, {-1, 0}, {1, 1}, {-1, -1}, {1, 2}, {-1, -2}};
  if (got != expect) o.fail("support has " + std::to_string(got.size()) + " points");
  o.detail = o.pass ? "9 points" : o.detail;
  return o;
}

// 3
Outcome support_composition_example() {
  Outcome o;
  const auto g = ex_comp();
  const std::vector<long> in{1, 2, 1};
  const std::vector<long> out{2, 1, 0};
  const auto w = is_in_support(g, in);
  if (!w) o.fail("(1,2,1) reported outside the support");
  if (w && !verify_witness(g, in, *w)) o.fail("witness for (1,2,1) fails verification");
  if (!verify_witness(g, in, SupportWitness{{0, 1}, {1, 1}, {2, 1}, {1, 1}})) o.fail("composition c1 c2 c3 c2 rejected");
  if (is_in_support(g, out)) o.fail("(2,1,0) reported inside the support");
  if (!oracle_membership(g, in) || oracle_membership(g, out)) o.fail("brute force disagrees");
  if (o.pass) {
    std::ostringstream s;
    s << "witness";
    for (const auto& st : *w) s << " " << (st.sign > 0 ? "X" : "Y") << st.column + 1;
    o.detail = s.str();
  }
  return o;
}

// 4
Outcome no_clifford_rows() {
  Outcome o;
  oracle::Rng rng(404);
  int done = 0;
  while (done < 5) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
    const Signature s(Variant::minus, std::vector<int>(n, 0));
    auto g = rng.valid_gamma(s, static_cast<std::size_t>(rng.uniform(1, 3)));
    if (!g) continue;
    const Box box = Box::cube(g->cols(), 3);
    const auto pts = enumerate_support(*g, box);
    if (pts.size() != box.count()) o.fail("a point of the box is missing for a matrix with " + std::to_string(n) + " rows");
    ++done;
  }
  o.detail = o.pass ? "5 matrices, full boxes" : o.detail;
  return o;
}

// 5
Outcome oracle_equivalence() {
  Outcome o;
  oracle::Rng rng(505);
  int compared = 0;
  int members = 0;
  while (compared < 250) {
    const auto s = rng.signature(3);
    auto g = rng.valid_gamma(s, static_cast<std::size_t>(rng.uniform(1, 3)));
    if (!g) continue;
    std::vector<long> pt(g->cols());
    long len = 0;
    for (auto& v : pt) {
      v = rng.uniform(-3, 3);
      len += std::abs(v);
    }
    if (len > 6) continue;
    const auto w = is_in_support(*g, pt);
    if (w.has_value() != oracle_membership(*g, pt)) o.fail("disagreement at " + show(pt));
    if (w && !verify_witness(*g, pt, *w)) o.fail("unsound witness at " + show(pt));
    members += w.has_value();
    ++compared;
  }
  if (o.pass) o.detail = std::to_string(compared) + " instances, " + std::to_string(members) + " members, 0 disagreements";
  return o;
}

// 6
Outcome identity_datum() {
  Outcome o;
  const std::vector<std::pair<std::size_t, std::size_t>> sizes{{1, 0}, {0, 1}, {2, 1}, {1, 2}};
  for (Variant v : {Variant::minus, Variant::plus}) {
    for (auto [p, q] : sizes) {
      const auto g = identity(v, p, q);
      const auto d = derive_datum(g);
      const auto& s = g.signature();
      for (std::size_t i = 0; i < p + q; ++i) {
        if (!(d.t[i] == BaseRingElement::u(s, i))) o.fail("t differs");
        if (!(d.sigma[i] == tau(p + q, i))) o.fail("sigma differs");
        for (std::size_t j = 0; j < p + q; ++j) {
          if (i != j && d.mu.mu[i][j] != s.lambda(i, j)) o.fail("mu differs from lambda");
        }
      }
    }
  }
  o.detail = o.pass ? "8 signatures" : o.detail;
  return o;
}

// 7
Outcome consistency_equations() {
  Outcome o;
  std::vector<GammaMatrix> mats;
  for (Variant v : {Variant::plus, Variant::minus}) {
    for (std::size_t n = 1; n <= 4; ++n) {
      for (std::size_t p = 0; p <= n; ++p) mats.push_back(identity(v, p, n - p));
    }
  }
  for (const auto& pr : all_presets(4)) mats.push_back(pr.zeta);
  std::size_t equations = 0;
  for (const auto& g : mats) {
    const auto rep = consistency_check(derive_datum(g));
    equations += rep.entries.size();
    if (!rep.all_pass()) o.fail("an equation fails for a matrix with " + std::to_string(g.cols()) + " columns");
  }
  if (o.pass) o.detail = std::to_string(mats.size()) + " matrices, " + std::to_string(equations) + " equations";
  return o;
}

// 8
Outcome injectivity() {
  Outcome o;
  int ranked = 0;
  int boxed = 0;
  std::array<int, 3> boxed_by_kind{0, 0, 0};
  for (Variant v : {Variant::minus, Variant::plus}) {
    for (std::size_t n = 2; n <= 4; ++n) {
      for (std::size_t p = 0; p <= n; ++p) {
        for (int kind = 0; kind < 3; ++kind) {
          const GammaMatrix g(Signature::from_pq(v, p, n - p), band(n, kind));
          const auto rk = gamma_rank_kernel(g);
          ++ranked;
          if (rk.rank != g.cols() || !rk.kernel.empty()) o.fail("rank deficient band matrix");
          if (!validate_gamma(g).valid()) continue;
          const auto rep = injectivity_report(g, Box::cube(g.cols(), 3));
          if (!rep.gamma_injective_on_box) o.fail("gamma not injective on the support in the box");
          if (!rep.projected_kernel_trivial_on_box) o.fail("projected gamma vanishes on a nonzero support point");
          ++boxed;
          ++boxed_by_kind[kind];
        }
      }
    }
  }
  for (int kind = 0; kind < 3; ++kind) {
    if (boxed_by_kind[kind] == 0) o.fail("no admissible instance of band matrix " + std::to_string(kind));
  }
  if (o.pass) {
    o.detail = std::to_string(ranked) + " rank checks, " + std::to_string(boxed) + " box checks";
  }
  return o;
}

// 9
Outcome supersupport_containment() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& g : corpus()) {
    if (g.signature().variant() != Variant::minus) continue;
    const long radius = g.cols() <= 2 ? 4 : g.cols() == 3 ? 3 : 2;
    const auto rep = injectivity_report(g, Box::cube(g.cols(), radius));
    checked += rep.support.size();
    if (!rep.containment_holds()) o.fail("violation at " + show(rep.containment_violations.front()));
  }
  if (o.pass) o.detail = std::to_string(checked) + " support points, 0 violations";
  return o;
}

// 10
Outcome algebra_properties() {
  Outcome o;
  oracle::Rng rng(1010);
  for (int k = 0; k < 500; ++k) {
    const auto s = rng.signature(3);
    const auto a = rng.element(s, 3, 4);
    const auto b = rng.element(s, 3, 4);
    const auto c = rng.element(s, 3, 4);
    if (!((a * b) * c == a * (b * c))) o.fail("associativity");
  }
  for (int k = 0; k < 200; ++k) {
    const auto s = rng.signature(3);
    const auto a = rng.element(s, 3, 4);
    const auto b = rng.element(s, 3, 4);
    if (!(involution(a * b) == involution(b) * involution(a))) o.fail("involution is not an anti-automorphism");
    if (!(involution(involution(a)) == a)) o.fail("involution is not involutive");
  }
  for (int k = 0; k < 100; ++k) {
    const auto s = rng.signature(3);
    const auto a = rng.homogeneous(s, 3, 4);
    if ((involution(a) * a).is_zero()) o.fail("a* a = 0 for nonzero homogeneous a");
  }
  for (int k = 0; k < 200; ++k) {
    const auto s = rng.signature(3);
    const auto w = rng.word(s, rng.uniform(0, 8));
    if (!(normalize_word(s, w, true) == normalize_word(s, w, false))) o.fail("fold order changes the normal form");
  }
  for (int k = 0; k < 100; ++k) {
    const auto s = rng.signature(3);
    const auto f = rng.ring_element(s, 4);
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s.is_clifford(i) && !(tau_apply(tau(s.size(), i, 2), f) == f)) o.fail("tau^2 is not the identity");
    }
  }
  o.detail = o.pass ? "500 + 200 + 100 + 200 + 100 cases" : o.detail;
  return o;
}

bool allowed_offset(const Rational& r) {
  for (const Rational& c : {Rational(0), Rational(1, 2), Rational(-1, 2), Rational(1), Rational(-1)}) {
    if (r == c) return true;
  }
  return false;
}

// 11
Outcome lie_relations() {
  Outcome o;
  std::vector<CalibrationFixture> fixtures;
  try {
    fixtures = read_calibration_fixtures(TGW_FIXTURE_DIR "/lie_calibration.json");
  } catch (const Error& e) {
    o.fail(e.what());
    return o;
  }
  std::size_t relations = 0;
  const auto presets = all_presets(3);
  for (const auto& pr : presets) {
    const std::string name = pr.name() + "/" + to_string(pr.realization);
    const auto* fx = find_fixture(fixtures, pr);
    if (!fx) {
      o.fail("no fixture for " + name);
      continue;
    }
    const auto rep = check_relations(pr, fx->calibration);
    relations += rep.residuals.size();
    if (!rep.all_pass()) o.fail("nonzero residual for " + name);
    for (std::size_t i = 0; i < pr.h.size(); ++i) {
      for (std::size_t j = 0; j < pr.h.size(); ++j) {
        if (!super_bracket(pr.h[i], pr.h[j], 0, 0).is_zero()) o.fail("Cartan images do not commute in " + name);
      }
    }
    const auto tri = check_triangle(pr, fx->calibration);
    if (!tri.e_match_all()) o.fail("phi(X_i) differs from the calibrated e-image in " + name);
    std::vector<Rational> offsets;
    for (const auto& e : tri.entries) {
      if (e.gen.kind != LieGen::Kind::h) continue;
      if (!e.offset) {
        o.fail("non-constant h discrepancy in " + name);
        continue;
      }
      if (!allowed_offset(*e.offset)) o.fail("h offset " + e.offset->get_str() + " in " + name);
      offsets.push_back(*e.offset);
    }
    if (offsets != fx->h_offsets) o.fail("h offsets differ from the fixture for " + name);
  }
  if (o.pass) o.detail = std::to_string(presets.size()) + " presets, " + std::to_string(relations) + " relations";
  return o;
}

// 12
Outcome mu_commutation() {
  Outcome o;
  std::size_t pairs = 0;
  const auto mats = corpus();
  for (const auto& g : mats) {
    const auto mu = derive_mu(g);
    for (std::size_t i = 0; i < g.cols(); ++i) {
      const auto xi = phi_generator(g, X(i));
      for (std::size_t j = 0; j < g.cols(); ++j) {
        if (i == j) continue;
        const auto yj = phi_generator(g, Y(j));
        if (!(xi * yj == Rational(mu.mu[i][j]) * (yj * xi))) o.fail("mu-commutation fails");
        ++pairs;
      }
    }
  }
  if (o.pass) o.detail = std::to_string(mats.size()) + " matrices, " + std::to_string(pairs) + " ordered pairs";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"support of [1,-1] over one odd row is |g1-g2| <= 1", support_line_example},
      {"support of [[1,0],[1,-1]] over two odd rows is the 9-point set", support_finite_example},
      {"(1,2,1) in and (2,1,0) out of the support for the 3x3 example", support_composition_example},
      {"no Clifford rows: every box point is in the support", no_clifford_rows},
      {"pattern-avoidance decision matches brute force", oracle_equivalence},
      {"identity matrices recover (u_i, tau_i, lambda)", identity_datum},
      {"consistency equations hold for identities and presets", consistency_equations},
      {"band matrices: full rank, injective on support, trivial projected kernel", injectivity},
      {"Clifford coordinates of gamma(g) stay in {-1,0,1} on the support", supersupport_containment},
      {"associativity, involution, a*a != 0, confluence, tau^2 = id", algebra_properties},
      {"Lie relations vanish under frozen calibrations; triangle checks", lie_relations},
      {"phi(X_i) phi(Y_j) = mu_ij phi(Y_j) phi(X_i)", mu_commutation},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[k].second();
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    failures += !out.pass;
    std::cout << (out.pass ? "PASS" : "FAIL") << " [" << k + 1 << "] " << criteria[k].first << " -- " << out.detail
              << " (" << ms << " ms)\n";
  }
  std::cout << criteria.size() - failures << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
