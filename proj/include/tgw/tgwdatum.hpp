#pragma once

// TGW data derived from an integer matrix gamma, and the monomial map phi
// sending X_i to x_1^{(gamma_1i)} ... x_n^{(gamma_ni)} and Y_i to its involution.
//
// The TGW algebra itself is only ever represented through phi-images tagged
// with their formal Z^m-degree; phi is injective on each graded component.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "tgw/basering.hpp"
#include "tgw/signature.hpp"
#include "tgw/superweyl.hpp"

namespace tgw {

/// n x m integer matrix; row j carries the parity of direction j.
class GammaMatrix {
 public:
  GammaMatrix(Signature sig, std::vector<std::vector<long>> rows);

  const Signature& signature() const { return sig_; }
  std::size_t rows() const { return sig_.size(); }
  std::size_t cols() const { return cols_; }
  long operator()(std::size_t row, std::size_t col) const { return entries_[row * cols_ + col]; }
  std::vector<long> column(std::size_t col) const;
  std::vector<std::vector<long>> row_vectors() const;

  /// gamma(g)_j = sum_i gamma_ji g_i.
  std::vector<long> apply(std::span<const long> g) const;

 private:
  Signature sig_;
  std::size_t cols_;
  std::vector<long> entries_;
};

struct Violation {
  enum class Kind { zero_column, clifford_entry, column_pair };
  Kind kind;
  std::size_t row = 0;    // clifford_entry
  std::size_t col = 0;    // zero_column, clifford_entry, first column of column_pair
  std::size_t col2 = 0;   // column_pair
  std::string message;
};

std::string to_string(Violation::Kind k);

struct ValidationReport {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
};

/// Checks that no column is zero, that Clifford rows have entries in {-1, 0, 1},
/// and that every column pair either meets a Clifford row with opposite signs
/// or has gamma_ki gamma_kj <= 0 in every row.
ValidationReport validate_gamma(const GammaMatrix& gamma);

/// Throws InvalidGamma listing the violations when gamma is not valid.
void require_valid(const GammaMatrix& gamma);

struct MuData {
  std::vector<std::vector<int>> mu;  // mu[i][j]; the diagonal is set to 1 and carries no meaning
  std::vector<int> pparity;          // p(i) = sum_k gamma_ki p(k) mod 2
  std::vector<int> pprime;           // p'(i) = sum_k gamma_ki mod 2
};

struct TgwDatum {
  Signature sig;
  std::vector<BaseRingElement> t;
  std::vector<Automorphism> sigma;
  MuData mu;

  std::size_t rank() const { return t.size(); }
};

BaseRingElement derive_t(const GammaMatrix& gamma, std::size_t i);
Automorphism derive_sigma(const GammaMatrix& gamma, std::size_t i);
MuData derive_mu(const GammaMatrix& gamma);
TgwDatum derive_datum(const GammaMatrix& gamma);

/// mu_ij recomputed as the product over k, l of lambda_kl^{gamma_ki gamma_lj};
/// used to cross-check the parity formula.
int mu_by_swaps(const GammaMatrix& gamma, std::size_t i, std::size_t j);

struct ConsistencyEntry {
  enum class Kind { pair, triple };
  Kind kind;
  std::vector<std::size_t> indices;  // (i, j) or (i, j, k)
  BaseRingElement lhs;
  BaseRingElement rhs;
  bool pass;
};

/// Evaluation of the two families of consistency equations. The result is a
/// diagnostic: for non-regular data these equations are not known to be
/// either necessary or sufficient.
struct ConsistencyReport {
  std::vector<ConsistencyEntry> entries;
  bool all_pass() const;
  static constexpr const char* label = "DIAGNOSTIC";
};

/// sigma_i sigma_j(t_i t_j) = mu_ij mu_ji sigma_i(t_i) sigma_j(t_j) for i != j, and
/// sigma_i sigma_k(t_j) t_j = sigma_i(t_j) sigma_k(t_j) for distinct i, j, k.
ConsistencyReport consistency_check(const TgwDatum& datum);

/// A letter of a word in the generators X_i (raising) and Y_i (lowering).
struct Letter {
  std::size_t index;
  bool raising;
  friend bool operator==(const Letter&, const Letter&) = default;
};

inline Letter X(std::size_t i) { return {i, true}; }
inline Letter Y(std::size_t i) { return {i, false}; }

SuperElement phi_generator(const GammaMatrix& gamma, Letter letter);

struct GradedElement {
  std::vector<long> degree;  // in Z^m
  SuperElement image;        // phi-image in the Clifford/Weyl superalgebra
};

/// Ordered product of phi-images of the letters with the summed formal degree.
/// A zero image with any degree means the word vanishes in the TGW algebra.
GradedElement eval_word(const GammaMatrix& gamma, std::span<const Letter> word);

/// Degree-zero part of a.image * b.image, as an element of R.
BaseRingElement gradation_pair(const GradedElement& a, const GradedElement& b);

/// Parses a word written as `X1 Y2 X1` or `X1,Y2` (one-based indices).
std::vector<Letter> parse_word(const std::string& text);
std::string to_string(std::span<const Letter> word);

}  // namespace tgw
