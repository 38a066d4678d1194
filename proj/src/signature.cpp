#include "tgw/signature.hpp"

#include "tgw/errors.hpp"

namespace tgw {

std::string to_string(Variant v) { return v == Variant::plus ? "plus" : "minus"; }

Variant parse_variant(const std::string& s) {
  if (s == "plus" || s == "+") return Variant::plus;
  if (s == "minus" || s == "-") return Variant::minus;
  throw InvalidInput("unknown sign variant '" + s + "' (expected plus or minus)");
}

Signature::Signature(Variant variant, std::vector<int> parity) {
  if (parity.empty()) throw InvalidInput("signature needs at least one generator pair");
  for (int p : parity) {
    if (p != 0 && p != 1) throw InvalidInput("parity entries must be 0 or 1");
  }
  auto data = std::make_shared<Data>();
  data->variant = variant;
  data->parity = std::move(parity);
  const std::size_t n = data->parity.size();
  const int outer = variant == Variant::plus ? -1 : 1;
  data->lambda.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const int both_odd = data->parity[i] * data->parity[j];
      data->lambda[i * n + j] = outer * (both_odd ? -1 : 1);
    }
  }
  data_ = std::move(data);
}

Signature Signature::from_pq(Variant variant, std::size_t p, std::size_t q) {
  std::vector<int> parity(p, 0);
  parity.resize(p + q, 1);
  return Signature(variant, std::move(parity));
}

void require_same(const Signature& a, const Signature& b, const char* what) {
  if (!(a == b)) throw InvalidInput(std::string("signature mismatch in ") + what);
}

}  // namespace tgw
