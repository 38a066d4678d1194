#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace tgw {

/// Which of the two Clifford/Weyl superalgebras is meant. `minus` is the
/// Weyl-like variant (odd directions anticommute), `plus` the Clifford-like one.
enum class Variant { plus, minus };

std::string to_string(Variant v);
Variant parse_variant(const std::string& s);

/// Sign variant plus the parity of each of the n generator pairs.
///
/// The swap sign between directions i and j is lambda(i, j) = -+(-1)^{p(i)p(j)},
/// the upper sign belonging to the `plus` variant. A direction is a Clifford
/// direction when lambda(i, i) = -1; its generators square to zero.
///
/// Indices are zero-based throughout the C++ API. Copies share storage.
class Signature {
 public:
  Signature(Variant variant, std::vector<int> parity);

  /// p even directions followed by q odd ones.
  static Signature from_pq(Variant variant, std::size_t p, std::size_t q);

  Variant variant() const { return data_->variant; }
  std::size_t size() const { return data_->parity.size(); }
  int parity(std::size_t i) const { return data_->parity[i]; }
  const std::vector<int>& parities() const { return data_->parity; }

  int lambda(std::size_t i, std::size_t j) const { return data_->lambda[i * size() + j]; }
  bool is_clifford(std::size_t i) const { return lambda(i, i) == -1; }

  /// -1 for `plus`, +1 for `minus`: the scalar in front of (-1)^{p(i)p(j)}.
  int variant_sign() const { return data_->variant == Variant::plus ? -1 : 1; }

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.data_ == b.data_ ||
           (a.data_->variant == b.data_->variant && a.data_->parity == b.data_->parity);
  }

 private:
  struct Data {
    Variant variant;
    std::vector<int> parity;
    std::vector<int> lambda;
  };
  std::shared_ptr<const Data> data_;
};

/// Throws InvalidInput when the two signatures differ.
void require_same(const Signature& a, const Signature& b, const char* what);

}  // namespace tgw
