#pragma once

// Graded support of the TGW algebra attached to gamma.
//
// A degree g is in the support iff the signed columns sgn(g_i) gamma(e_i),
// each taken |g_i| times, can be ordered so that on every Clifford row the
// nonzero entries alternate in sign. The decision procedure searches such
// orderings; `oracle_membership` instead multiplies phi-images of every
// arrangement and is kept as an independent check.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tgw/tgwdatum.hpp"

namespace tgw {

struct SupportStep {
  std::size_t column;
  int sign;  // +1 for X_column, -1 for Y_column
  friend bool operator==(const SupportStep&, const SupportStep&) = default;
};

using SupportWitness = std::vector<SupportStep>;

/// Rows whose entries are constrained by the alternation rule: {r : lambda_rr = -1}.
std::vector<std::size_t> constrained_rows(const Signature& sig);

/// First witness in column-lexicographic branch order, or nullopt for a non-member.
std::optional<SupportWitness> is_in_support(const GammaMatrix& gamma, std::span<const long> g);

/// Checks multiplicities and the alternation rule directly on the sequence.
bool verify_witness(const GammaMatrix& gamma, std::span<const long> g, const SupportWitness& witness);

/// Necessary condition: every Clifford coordinate of gamma(g) lies in {-1, 0, 1}.
bool passes_supersupport_bound(const GammaMatrix& gamma, std::span<const long> g);

/// Closed integer box, one interval per coordinate.
struct Box {
  std::vector<std::pair<long, long>> ranges;

  static Box cube(std::size_t dim, long radius);
  std::size_t dim() const { return ranges.size(); }
  /// Number of lattice points; saturates at SIZE_MAX.
  std::size_t count() const;
  bool contains(std::span<const long> g) const;
};

/// Parses `a:b,c:d,...`; a bare `r` stands for `-r:r`.
Box parse_box(const std::string& text);

inline constexpr std::size_t default_box_cap = 1'000'000;
inline constexpr std::size_t default_oracle_cap = 8;

struct SupportPoint {
  std::vector<long> point;
  SupportWitness witness;
};

/// Support points inside `box` (lexicographically sorted), optionally restricted
/// to degrees with even coordinate sum. Throws ResourceLimit above `cap` candidates.
std::vector<SupportPoint> enumerate_support(const GammaMatrix& gamma, const Box& box, bool even_lattice_filter = false,
                                            std::size_t cap = default_box_cap, std::size_t workers = 0);

/// Brute force: true iff some arrangement of the letters has a nonzero phi-image.
/// Throws ResourceLimit when |g| exceeds `cap`.
bool oracle_membership(const GammaMatrix& gamma, std::span<const long> g, std::size_t cap = default_oracle_cap);

struct RankKernel {
  std::size_t rank = 0;
  std::vector<std::vector<long>> kernel;  // primitive integer vectors
};

/// Rank over Q and an integer basis of the kernel of gamma : Z^m -> Z^n.
RankKernel gamma_rank_kernel(const GammaMatrix& gamma);

/// Box-restricted versions of the two lattice criteria. "Kernel trivial" means
/// no nonzero support point maps to zero, which is what the equivalence with
/// injectivity of phi rests on. Pairwise distinctness is reported as well; it
/// is implied by full rank for gamma but typically fails after projection,
/// since g and -g often share a projected image.
struct InjectivityReport {
  RankKernel rank_kernel;
  bool global_certificate = false;  // rank == m: gamma is injective on all of Z^m
  Box box;
  std::vector<SupportPoint> support;
  bool gamma_injective_on_box = true;          // pairwise distinct gamma(g)
  bool gamma_kernel_trivial_on_box = true;
  bool projected_injective_on_box = true;      // pairwise distinct P(gamma(g))
  bool projected_kernel_trivial_on_box = true;
  std::size_t gamma_collision_count = 0;
  std::size_t projected_collision_count = 0;
  std::vector<std::pair<std::vector<long>, std::vector<long>>> gamma_collisions;      // first few only
  std::vector<std::pair<std::vector<long>, std::vector<long>>> projected_collisions;  // first few only
  std::vector<std::vector<long>> containment_violations;  // should stay empty
  bool containment_holds() const { return containment_violations.empty(); }
  /// gamma injective on the support in the box, P o gamma with trivial kernel there, containment.
  bool passes() const { return gamma_injective_on_box && projected_kernel_trivial_on_box && containment_holds(); }
};

inline constexpr std::size_t max_listed_collisions = 10;

/// Reduces the Clifford coordinates of gamma(g) modulo 2.
std::vector<long> project_to_super_lattice(const GammaMatrix& gamma, std::span<const long> g);

InjectivityReport injectivity_report(const GammaMatrix& gamma, const Box& box, std::size_t cap = default_box_cap);

}  // namespace tgw
