#include <doctest.h>

#include "oracle.hpp"
#include "tgw/errors.hpp"
#include "tgw/liesuper.hpp"
#include "tgw/tgwdatum.hpp"

using namespace tgw;

namespace {

GammaMatrix identity(Variant v, std::size_t p, std::size_t q) {
  const std::size_t n = p + q;
  std::vector<std::vector<long>> rows(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) rows[i][i] = 1;
  return GammaMatrix(Signature::from_pq(v, p, q), rows);
}

GammaMatrix ex_comp() {
  return GammaMatrix(Signature(Variant::minus, {0, 1, 1}), {{1, 3, 0}, {1, 0, -1}, {1, -1, 1}});
}

BaseRingElement u(const Signature& s, std::size_t i) { return BaseRingElement::u(s, i); }
BaseRingElement c(const Signature& s, long v) { return BaseRingElement::constant(s, v); }

}  // namespace

TEST_CASE("validation") {
  CHECK(validate_gamma(identity(Variant::minus, 2, 1)).valid());
  CHECK(validate_gamma(identity(Variant::plus, 1, 2)).valid());
  CHECK(validate_gamma(ex_comp()).valid());

  const auto bad_entry = validate_gamma(GammaMatrix(Signature(Variant::minus, {1}), {{2}}));
  REQUIRE(bad_entry.violations.size() == 1);
  CHECK(bad_entry.violations[0].kind == Violation::Kind::clifford_entry);

  const auto bad_pair = validate_gamma(GammaMatrix(Signature(Variant::minus, {0}), {{1, 1}}));
  REQUIRE(bad_pair.violations.size() == 1);
  CHECK(bad_pair.violations[0].kind == Violation::Kind::column_pair);
  CHECK(bad_pair.violations[0].col == 0);
  CHECK(bad_pair.violations[0].col2 == 1);

  // a Clifford row with opposite signs separates a same-sign pair
  CHECK(validate_gamma(GammaMatrix(Signature(Variant::minus, {0, 1}), {{1, 1}, {1, -1}})).valid());

  const auto zero = validate_gamma(GammaMatrix(Signature(Variant::minus, {0}), {{1, 0}}));
  REQUIRE_FALSE(zero.valid());
  CHECK(zero.violations[0].kind == Violation::Kind::zero_column);
  CHECK_THROWS_AS(derive_datum(GammaMatrix(Signature(Variant::minus, {0}), {{1, 1}})), InvalidGamma);
}

TEST_CASE("t factors") {
  const Signature s(Variant::minus, {0});
  CHECK(derive_t(GammaMatrix(s, {{2}}), 0) == (u(s, 0) + c(s, 1)) * u(s, 0));
  CHECK(derive_t(GammaMatrix(s, {{-1}}), 0) == u(s, 0) - c(s, 1));
  CHECK(derive_t(GammaMatrix(s, {{-3}}), 0) == (u(s, 0) - c(s, 3)) * (u(s, 0) - c(s, 2)) * (u(s, 0) - c(s, 1)));
  CHECK(derive_t(GammaMatrix(Signature(Variant::minus, {0, 0}), {{1}, {0}}), 0) == u(Signature(Variant::minus, {0, 0}), 0));
  // on a Clifford row a lowering entry gives lambda(u - 1) = 1 - u
  const Signature cl(Variant::minus, {1});
  CHECK(derive_t(GammaMatrix(cl, {{-1}}), 0) == c(cl, 1) - u(cl, 0));
  const auto id = identity(Variant::plus, 1, 2);
  for (std::size_t i = 0; i < 3; ++i) CHECK(derive_t(id, i) == u(id.signature(), i));
}

TEST_CASE("identity matrices recover the superalgebra datum") {
  for (Variant v : {Variant::plus, Variant::minus}) {
    const auto g = identity(v, 2, 1);
    const auto d = derive_datum(g);
    const auto& s = g.signature();
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(d.t[i] == u(s, i));
      CHECK(d.sigma[i] == tau(3, i));
      for (std::size_t j = 0; j < 3; ++j) {
        if (i != j) CHECK(d.mu.mu[i][j] == s.lambda(i, j));
      }
    }
  }
}

TEST_CASE("gl matrix has trivial mu") {
  const auto pr = preset(LieFamily::gl, 2, 2);
  const auto mu = derive_mu(pr.zeta);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(mu.pprime[i] == 0);
    CHECK(mu.pparity[i] == (i == 1 ? 1 : 0));
    for (std::size_t j = 0; j < 3; ++j) CHECK(mu.mu[i][j] == 1);
  }
}

TEST_CASE("mu is symmetric and matches the swap count") {
  oracle::Rng rng(29);
  int checked = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const auto s = rng.signature(3);
    auto g = rng.valid_gamma(s, static_cast<std::size_t>(rng.uniform(1, 3)));
    if (!g) continue;
    const auto mu = derive_mu(*g);
    for (std::size_t i = 0; i < g->cols(); ++i) {
      for (std::size_t j = 0; j < g->cols(); ++j) {
        if (i == j) continue;
        CHECK(mu.mu[i][j] == mu.mu[j][i]);
        CHECK(mu.mu[i][j] == mu_by_swaps(*g, i, j));
        ++checked;
      }
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("consistency equations") {
  const auto report = consistency_check(derive_datum(identity(Variant::minus, 1, 1)));
  CHECK(report.all_pass());
  CHECK(report.entries.size() == 1);
  const auto single = consistency_check(derive_datum(GammaMatrix(Signature(Variant::minus, {0}), {{2}})));
  CHECK(single.entries.empty());
  CHECK(single.all_pass());
  CHECK(std::string(ConsistencyReport::label) == "DIAGNOSTIC");
}

TEST_CASE("phi on generators") {
  const auto id = identity(Variant::minus, 1, 1);
  const auto& s = id.signature();
  CHECK(phi_generator(id, X(0)) == SuperElement::x(s, 0));
  CHECK(phi_generator(id, Y(1)) == SuperElement::d(s, 1));
  const GammaMatrix col(Signature(Variant::minus, {0, 0}), {{1}, {-1}});
  CHECK(to_string(phi_generator(col, X(0))) == "x1*d2");
  const auto osp = preset(LieFamily::osp_even, 1, 1);
  CHECK(to_string(phi_generator(osp.zeta, X(1))) == "x2^2");
}

TEST_CASE("defining relations hold on phi-images") {
  const std::vector<GammaMatrix> corpus{identity(Variant::minus, 1, 2), identity(Variant::plus, 2, 1), ex_comp(),
                                        preset(LieFamily::gl, 1, 2).zeta, preset(LieFamily::osp_odd, 1, 1).zeta,
                                        preset(LieFamily::osp_even, 2, 1).zeta};
  oracle::Rng rng(31);
  for (const auto& g : corpus) {
    const auto d = derive_datum(g);
    const auto& s = g.signature();
    for (std::size_t i = 0; i < g.cols(); ++i) {
      const std::vector<Letter> yx{Y(i), X(i)};
      const std::vector<Letter> xy{X(i), Y(i)};
      CHECK(eval_word(g, yx).image == iota_embed(d.t[i]));
      CHECK(eval_word(g, xy).image == iota_embed(tau_apply(d.sigma[i], d.t[i])));
      CHECK(eval_word(g, xy).degree == std::vector<long>(g.cols(), 0));
      const auto r = rng.ring_element(s, 3);
      const auto xi = phi_generator(g, X(i));
      CHECK(xi * iota_embed(r) == iota_embed(tau_apply(d.sigma[i], r)) * xi);
      CHECK(iota_embed(d.t[i]) * iota_embed(r) == iota_embed(r) * iota_embed(d.t[i]));
      for (std::size_t j = 0; j < g.cols(); ++j) {
        if (i == j) continue;
        const std::vector<Letter> a{X(i), Y(j)};
        const std::vector<Letter> b{Y(j), X(i)};
        CHECK(eval_word(g, a).image == Rational(d.mu.mu[i][j]) * eval_word(g, b).image);
      }
    }
  }
}

TEST_CASE("gradation pairing") {
  const auto g = ex_comp();
  const auto d = derive_datum(g);
  const std::vector<Letter> y{Y(1)};
  const std::vector<Letter> x{X(1)};
  const std::vector<Letter> x0{X(0)};
  CHECK(gradation_pair(eval_word(g, y), eval_word(g, x)) == d.t[1]);
  CHECK(gradation_pair(eval_word(g, x0), eval_word(g, x)).is_zero());
  const std::vector<Letter> w{X(0), X(1), X(2), X(1)};
  const auto a = eval_word(g, w);
  REQUIRE_FALSE(a.image.is_zero());
  const GradedElement a_star{a.degree, involution(a.image)};
  CHECK_FALSE(gradation_pair(a_star, a).is_zero());
}

TEST_CASE("words") {
  const auto w = parse_word("X1 Y2,X10");
  REQUIRE(w.size() == 3);
  CHECK(w[0] == X(0));
  CHECK(w[1] == Y(1));
  CHECK(w[2] == X(9));
  CHECK(to_string(std::span<const Letter>(w)) == "X1 Y2 X10");
  CHECK_THROWS_AS(parse_word("Z1"), InvalidInput);
  CHECK_THROWS_AS(parse_word("X0"), InvalidInput);
  CHECK_THROWS_AS(parse_word("X"), InvalidInput);
}
