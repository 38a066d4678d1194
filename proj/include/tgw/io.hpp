#pragma once

// File formats and JSON report encodings.
//
// Matrix file:
//   {"sign": "minus" | "plus", "parity": [0, 0, 1], "gamma": [[...row 1...], ...]}
// Rows are directions 1..n, columns generators 1..m. Rationals are encoded as
// strings ("-1/2") so that values round-trip exactly.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tgw/errors.hpp"
#include "tgw/liesuper.hpp"
#include "tgw/support.hpp"
#include "tgw/tgwdatum.hpp"

namespace tgw {

using Json = nlohmann::ordered_json;

/// Malformed input file; carries a 1-based line and column when known.
class ParseError : public InvalidInput {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

GammaMatrix parse_gamma_json(const std::string& text);
GammaMatrix read_gamma_file(const std::string& path);
Json gamma_to_json(const GammaMatrix& gamma);

Rational parse_rational(const std::string& s);

Json to_json(const ValidationReport& report);
Json to_json(const TgwDatum& datum);
Json to_json(const ConsistencyReport& report);
Json to_json(const GradedElement& element);
Json to_json(const SupportWitness& witness);
Json support_line(std::span<const long> point, const std::optional<SupportWitness>& witness);
Json to_json(const RankKernel& rk);
Json to_json(const InjectivityReport& report);
Json to_json(const Calibration& cal);
Json to_json(const ResidualReport& report);
Json to_json(const TriangleReport& report);

Calibration calibration_from_json(const Json& j);

/// One frozen calibration: which preset it belongs to plus the constants and
/// the expected h-offsets of the triangle check.
struct CalibrationFixture {
  LieFamily family;
  std::size_t p;
  std::size_t q;
  Realization realization;
  Calibration calibration;
  std::vector<Rational> h_offsets;
};

std::vector<CalibrationFixture> read_calibration_fixtures(const std::string& path);
void write_calibration_fixtures(const std::string& path, const std::vector<CalibrationFixture>& fixtures);
Json to_json(const CalibrationFixture& fixture);
const CalibrationFixture* find_fixture(const std::vector<CalibrationFixture>& fixtures, const LiePreset& preset);

}  // namespace tgw
