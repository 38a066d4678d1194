#pragma once

// Chevalley presentations of gl(p|q), osp(2p|2q), osp(2p+1|2q) and their
// realizations by differential operators in a Clifford/Weyl superalgebra.
//
// Realizations:
//   weyl     - target A^-_{q|p}: directions 1..p odd, p+1..n even,
//              pi(h_i) = x_i d_i + (-1)^{p(i)}/2
//   clifford - target A^+_{p|q}: directions 1..p even, p+1..n odd,
//              pi(h_i) = x_i d_i - (-1)^{p(i)}/2
// In both, pi(e_i) = x_i d_{i+1} (i < n), pi(e_n) = x_n^2 (osp even) or x_n (osp odd),
// and pi(f_i) = pi(e_i)*.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tgw/rational.hpp"
#include "tgw/superweyl.hpp"
#include "tgw/tgwdatum.hpp"

namespace tgw {

enum class LieFamily { gl, osp_even, osp_odd };
enum class Realization { weyl, clifford };

std::string to_string(LieFamily f);
std::string to_string(Realization r);
LieFamily parse_family(const std::string& s);
Realization parse_realization(const std::string& s);
Realization default_realization(LieFamily f);

struct LieGen {
  enum class Kind { e, f, h };
  Kind kind;
  std::size_t index;
  friend bool operator==(const LieGen&, const LieGen&) = default;
};

std::string to_string(const LieGen& g);

struct LieTerm {
  Rational coef;
  LieGen gen;
};

/// [left, right] = sum of rhs terms.
struct LieRelation {
  std::string id;
  LieGen left;
  LieGen right;
  std::vector<LieTerm> rhs;
};

/// e_i -> e_scale[i] pi(e_i), f_i -> f_scale[i] pi(f_i), h_i -> pi(h_i) + h_shift[i].
struct Calibration {
  std::vector<Rational> e_scale;
  std::vector<Rational> f_scale;
  std::vector<Rational> h_shift;

  static Calibration unit(std::size_t raising, std::size_t cartan);
  friend bool operator==(const Calibration&, const Calibration&) = default;
};

class LiePreset {
 public:
  LieFamily family;
  std::size_t p;
  std::size_t q;
  Realization realization;
  GammaMatrix zeta;
  std::vector<SuperElement> e;  // pi(e_i)
  std::vector<SuperElement> f;  // pi(f_i) = pi(e_i)*
  std::vector<SuperElement> h;  // pi(h_i)
  std::vector<int> e_parity;    // Lie parity of e_i and f_i; every h_i is even
  std::vector<LieRelation> relations;

  const Signature& signature() const { return zeta.signature(); }
  std::size_t n() const { return p + q; }
  int parity(const LieGen& g) const;
  SuperElement image(const LieGen& g, const Calibration& cal) const;
  std::string name() const;
};

/// Builds a preset; throws InvalidInput for unsupported sizes or when a Lie
/// parity disagrees with the ambient parity of its image.
LiePreset preset(LieFamily family, std::size_t p, std::size_t q, std::optional<Realization> realization = {});

/// ab - (-1)^{pa pb} ba, with pa, pb the Lie parities.
SuperElement super_bracket(const SuperElement& a, const SuperElement& b, int pa, int pb);

struct RelationResidual {
  std::string id;
  SuperElement residual;
  bool pass;
};

struct ResidualReport {
  Calibration calibration;
  std::vector<RelationResidual> residuals;
  bool all_pass() const;
};

ResidualReport check_relations(const LiePreset& preset, const Calibration& cal);

/// Exact solver for scalings and central shifts. e-scalings stay 1 so that the
/// calibrated e_i coincide with phi(X_i); f-scalings come from the non-constant
/// part of each [e_i, f_i] relation and h-shifts from the constant parts
/// (free shifts set to zero). Returns nullopt when no such constants exist.
std::optional<Calibration> calibrate(const LiePreset& preset);

struct TriangleEntry {
  LieGen gen;
  SuperElement phi_image;      // phi(X_i), phi(Y_i), or iota(lambda_ii (u_i - 1))
  SuperElement scaled_image;   // calibrated pi-image
  bool match;                  // exact equality (e and f only)
  std::optional<Rational> offset;  // h only: scaled_image - phi_image when it is a scalar
};

struct TriangleReport {
  std::vector<TriangleEntry> entries;
  bool e_match_all() const;
  bool h_offsets_constant() const;
};

TriangleReport check_triangle(const LiePreset& preset, const Calibration& cal);

}  // namespace tgw
