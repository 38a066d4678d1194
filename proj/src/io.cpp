#include "tgw/io.hpp"

#include <fstream>
#include <sstream>

namespace tgw {

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : InvalidInput(line ? what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")" : what),
      line_(line),
      column_(column) {}

namespace {

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

std::vector<long> to_long_vector(const Json& arr, const char* what) {
  if (!arr.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<long> out;
  for (const auto& v : arr) {
    if (!v.is_number_integer()) throw ParseError(std::string(what) + " entries must be integers");
    out.push_back(v.get<long>());
  }
  return out;
}

Json rational_array(const std::vector<Rational>& v) {
  Json arr = Json::array();
  for (const auto& q : v) arr.push_back(q.get_str());
  return arr;
}

std::vector<Rational> rational_vector(const Json& arr) {
  std::vector<Rational> out;
  for (const auto& v : arr) {
    if (v.is_string()) {
      out.push_back(parse_rational(v.get<std::string>()));
    } else if (v.is_number_integer()) {
      out.emplace_back(v.get<long>());
    } else {
      throw ParseError("calibration constants must be integers or fraction strings");
    }
  }
  return out;
}

}  // namespace

Rational parse_rational(const std::string& s) {
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0) throw ParseError("malformed rational '" + s + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

GammaMatrix parse_gamma_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("malformed JSON", line, col);
  }
  if (!j.is_object()) throw ParseError("matrix file must hold a JSON object");
  for (const char* key : {"sign", "parity", "gamma"}) {
    if (!j.contains(key)) throw ParseError(std::string("matrix file is missing \"") + key + "\"");
  }
  if (!j["sign"].is_string()) throw ParseError("\"sign\" must be \"minus\" or \"plus\"");
  Variant variant;
  try {
    variant = parse_variant(j["sign"].get<std::string>());
  } catch (const InvalidInput& e) {
    throw ParseError(e.what());
  }
  std::vector<int> parity;
  for (long p : to_long_vector(j["parity"], "\"parity\"")) {
    if (p != 0 && p != 1) throw ParseError("\"parity\" entries must be 0 or 1");
    parity.push_back(static_cast<int>(p));
  }
  if (!j["gamma"].is_array() || j["gamma"].empty()) throw ParseError("\"gamma\" must be a non-empty array of rows");
  std::vector<std::vector<long>> rows;
  for (const auto& row : j["gamma"]) rows.push_back(to_long_vector(row, "gamma row"));
  try {
    return GammaMatrix(Signature(variant, parity), rows);
  } catch (const InvalidInput& e) {
    throw ParseError(e.what());
  }
}

GammaMatrix read_gamma_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open matrix file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_gamma_json(buffer.str());
}

Json gamma_to_json(const GammaMatrix& gamma) {
  Json j;
  j["sign"] = to_string(gamma.signature().variant());
  j["parity"] = gamma.signature().parities();
  j["gamma"] = gamma.row_vectors();
  return j;
}

Json to_json(const ValidationReport& report) {
  Json j;
  j["valid"] = report.valid();
  Json list = Json::array();
  for (const auto& v : report.violations) {
    Json item;
    item["kind"] = to_string(v.kind);
    switch (v.kind) {
      case Violation::Kind::zero_column: item["column"] = v.col + 1; break;
      case Violation::Kind::clifford_entry:
        item["row"] = v.row + 1;
        item["column"] = v.col + 1;
        break;
      case Violation::Kind::column_pair: item["columns"] = {v.col + 1, v.col2 + 1}; break;
    }
    item["message"] = v.message;
    list.push_back(std::move(item));
  }
  j["violations"] = std::move(list);
  return j;
}

Json to_json(const TgwDatum& datum) {
  Json j;
  j["sign"] = to_string(datum.sig.variant());
  j["parity"] = datum.sig.parities();
  Json t = Json::array();
  for (const auto& ti : datum.t) t.push_back(to_string(ti));
  j["t"] = std::move(t);
  Json sigma = Json::array();
  for (const auto& s : datum.sigma) sigma.push_back(s.exponents);
  j["sigma"] = std::move(sigma);
  j["mu"] = datum.mu.mu;
  j["p"] = datum.mu.pparity;
  j["p_prime"] = datum.mu.pprime;
  return j;
}

Json to_json(const ConsistencyReport& report) {
  Json j;
  j["label"] = ConsistencyReport::label;
  j["all_pass"] = report.all_pass();
  Json list = Json::array();
  for (const auto& e : report.entries) {
    Json item;
    item["kind"] = e.kind == ConsistencyEntry::Kind::pair ? "pair" : "triple";
    Json idx = Json::array();
    for (auto i : e.indices) idx.push_back(i + 1);
    item["indices"] = std::move(idx);
    item["lhs"] = to_string(e.lhs);
    item["rhs"] = to_string(e.rhs);
    item["pass"] = e.pass;
    list.push_back(std::move(item));
  }
  j["entries"] = std::move(list);
  return j;
}

Json to_json(const GradedElement& element) {
  Json j;
  j["degree"] = element.degree;
  j["image"] = to_string(element.image);
  j["zero"] = element.image.is_zero();
  return j;
}

Json to_json(const SupportWitness& witness) {
  Json arr = Json::array();
  for (const auto& step : witness) arr.push_back({step.column + 1, step.sign});
  return arr;
}

Json support_line(std::span<const long> point, const std::optional<SupportWitness>& witness) {
  Json j;
  j["point"] = std::vector<long>(point.begin(), point.end());
  j["member"] = witness.has_value();
  j["witness"] = witness ? to_json(*witness) : Json(nullptr);
  return j;
}

Json to_json(const RankKernel& rk) {
  Json j;
  j["rank"] = rk.rank;
  j["kernel"] = rk.kernel;
  return j;
}

Json to_json(const InjectivityReport& report) {
  Json j;
  j["rank"] = report.rank_kernel.rank;
  j["kernel"] = report.rank_kernel.kernel;
  j["global_certificate"] = report.global_certificate;
  Json box = Json::array();
  for (const auto& [lo, hi] : report.box.ranges) box.push_back({lo, hi});
  j["box"] = std::move(box);
  j["scope"] = report.global_certificate ? "global" : "box";
  j["support_size"] = report.support.size();
  j["gamma_injective_on_box"] = report.gamma_injective_on_box;
  j["gamma_kernel_trivial_on_box"] = report.gamma_kernel_trivial_on_box;
  j["projected_injective_on_box"] = report.projected_injective_on_box;
  j["projected_kernel_trivial_on_box"] = report.projected_kernel_trivial_on_box;
  j["gamma_collision_count"] = report.gamma_collision_count;
  j["projected_collision_count"] = report.projected_collision_count;
  auto pairs = [](const auto& list) {
    Json arr = Json::array();
    for (const auto& [a, b] : list) arr.push_back({a, b});
    return arr;
  };
  j["gamma_collisions"] = pairs(report.gamma_collisions);
  j["projected_collisions"] = pairs(report.projected_collisions);
  j["containment_holds"] = report.containment_holds();
  j["containment_violations"] = report.containment_violations;
  j["pass"] = report.passes();
  return j;
}

Json to_json(const Calibration& cal) {
  Json j;
  j["e_scale"] = rational_array(cal.e_scale);
  j["f_scale"] = rational_array(cal.f_scale);
  j["h_shift"] = rational_array(cal.h_shift);
  return j;
}

Calibration calibration_from_json(const Json& j) {
  try {
    return Calibration{rational_vector(j.at("e_scale")), rational_vector(j.at("f_scale")),
                       rational_vector(j.at("h_shift"))};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed calibration: ") + e.what());
  }
}

Json to_json(const ResidualReport& report) {
  Json j;
  j["calibration"] = to_json(report.calibration);
  j["all_pass"] = report.all_pass();
  Json list = Json::array();
  for (const auto& r : report.residuals) {
    Json item;
    item["relation"] = r.id;
    item["residual"] = to_string(r.residual);
    item["pass"] = r.pass;
    list.push_back(std::move(item));
  }
  j["relations"] = std::move(list);
  return j;
}

Json to_json(const TriangleReport& report) {
  Json j;
  j["e_match_all"] = report.e_match_all();
  j["h_offsets_constant"] = report.h_offsets_constant();
  Json list = Json::array();
  for (const auto& e : report.entries) {
    Json item;
    item["generator"] = to_string(e.gen);
    item["phi"] = to_string(e.phi_image);
    item["pi"] = to_string(e.scaled_image);
    item["match"] = e.match;
    if (e.gen.kind == LieGen::Kind::h) item["offset"] = e.offset ? Json(e.offset->get_str()) : Json(nullptr);
    list.push_back(std::move(item));
  }
  j["entries"] = std::move(list);
  return j;
}

Json to_json(const CalibrationFixture& fixture) {
  Json j;
  j["family"] = to_string(fixture.family);
  j["p"] = fixture.p;
  j["q"] = fixture.q;
  j["realization"] = to_string(fixture.realization);
  Json cal = to_json(fixture.calibration);
  for (auto& [k, v] : cal.items()) j[k] = v;
  j["h_offsets"] = rational_array(fixture.h_offsets);
  return j;
}

std::vector<CalibrationFixture> read_calibration_fixtures(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open fixture file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("malformed fixture JSON", line, col);
  }
  std::vector<CalibrationFixture> out;
  try {
    for (const auto& item : j.at("fixtures")) {
      out.push_back({parse_family(item.at("family").get<std::string>()), item.at("p").get<std::size_t>(),
                     item.at("q").get<std::size_t>(), parse_realization(item.at("realization").get<std::string>()),
                     calibration_from_json(item), rational_vector(item.at("h_offsets"))});
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed fixture file: ") + e.what());
  }
  return out;
}

void write_calibration_fixtures(const std::string& path, const std::vector<CalibrationFixture>& fixtures) {
  Json j;
  Json list = Json::array();
  for (const auto& f : fixtures) list.push_back(to_json(f));
  j["fixtures"] = std::move(list);
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write fixture file '" + path + "'");
  out << j.dump(2) << "\n";
}

const CalibrationFixture* find_fixture(const std::vector<CalibrationFixture>& fixtures, const LiePreset& preset) {
  for (const auto& f : fixtures) {
    if (f.family == preset.family && f.p == preset.p && f.q == preset.q && f.realization == preset.realization) {
      return &f;
    }
  }
  return nullptr;
}

}  // namespace tgw
