// tgw: command-line front end for the TGW/superalgebra library.
//
// Exit codes: 0 pass/valid/member, 1 fail/invalid/non-member, 2 usage, parse
// or resource errors.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tgw/io.hpp"
#include "tgw/liesuper.hpp"
#include "tgw/support.hpp"
#include "tgw/tgwdatum.hpp"

using namespace tgw;

namespace {

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

enum class Format { json, text };

struct Options {
  Format format = Format::text;
  std::string matrix;
  std::string g;
  std::string word;
  std::string box = "3";
  bool even_lattice = false;
  bool oracle = false;
  std::size_t cap = 0;
  std::size_t workers = 0;
  std::string family;
  std::size_t p = 0;
  std::size_t q = 0;
  std::string realization;
  bool calibrate = false;
  std::string fixtures;
  std::size_t max_n = 3;
};

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<long> parse_vector(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      throw InvalidInput("malformed integer '" + item + "' in vector '" + text + "'");
    }
    if (used != item.size()) throw InvalidInput("malformed integer '" + item + "' in vector '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw InvalidInput("empty vector");
  return out;
}

std::string join(const std::vector<long>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string witness_text(const SupportWitness& w) {
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    s += (k ? " " : "") + std::string(w[k].sign > 0 ? "X" : "Y") + std::to_string(w[k].column + 1);
  }
  return s.empty() ? "(empty)" : s;
}

/// A bare radius expands to a cube of the right dimension.
Box box_for(const GammaMatrix& gamma, const std::string& text) {
  Box box = parse_box(text);
  const bool radius = text.find_first_of(":,") == std::string::npos;
  if (radius) return Box::cube(gamma.cols(), box.ranges.front().second);
  if (box.dim() != gamma.cols()) {
    throw InvalidInput("box has " + std::to_string(box.dim()) + " intervals but the matrix has " +
                       std::to_string(gamma.cols()) + " columns");
  }
  return box;
}

/// Loads the matrix and refuses invalid ones with the validation report on stderr.
GammaMatrix load_valid(const Options& o) {
  GammaMatrix gamma = read_gamma_file(o.matrix);
  const auto report = validate_gamma(gamma);
  if (!report.valid()) {
    std::ostringstream msg;
    msg << "matrix fails validation:";
    for (const auto& v : report.violations) msg << "\n  " << v.message;
    throw InvalidGamma(msg.str());
  }
  return gamma;
}

int cmd_validate(const Options& o) {
  const GammaMatrix gamma = read_gamma_file(o.matrix);
  const auto report = validate_gamma(gamma);
  if (o.format == Format::json) {
    emit(to_json(report));
  } else {
    std::cout << (report.valid() ? "valid" : "invalid") << "\n";
    for (const auto& v : report.violations) std::cout << "  " << to_string(v.kind) << ": " << v.message << "\n";
  }
  return report.valid() ? exit_pass : exit_fail;
}

int cmd_datum(const Options& o) {
  const TgwDatum datum = derive_datum(load_valid(o));
  if (o.format == Format::json) {
    emit(to_json(datum));
    return exit_pass;
  }
  const std::size_t m = datum.rank();
  for (std::size_t i = 0; i < m; ++i) {
    std::cout << "t" << i + 1 << " = " << to_string(datum.t[i]) << "\n";
  }
  for (std::size_t i = 0; i < m; ++i) {
    std::cout << "sigma" << i + 1 << " =";
    bool any = false;
    for (std::size_t j = 0; j < datum.sigma[i].exponents.size(); ++j) {
      const long e = datum.sigma[i].exponents[j];
      if (e == 0) continue;
      std::cout << " tau" << j + 1;
      if (e != 1) std::cout << "^" << e;
      any = true;
    }
    std::cout << (any ? "" : " id") << "\n";
  }
  std::cout << "p  =";
  for (int v : datum.mu.pparity) std::cout << " " << v;
  std::cout << "\np' =";
  for (int v : datum.mu.pprime) std::cout << " " << v;
  std::cout << "\nmu =\n";
  for (std::size_t i = 0; i < m; ++i) {
    std::cout << " ";
    for (std::size_t j = 0; j < m; ++j) std::cout << " " << (i == j ? " *" : datum.mu.mu[i][j] > 0 ? "+1" : "-1");
    std::cout << "\n";
  }
  return exit_pass;
}

int cmd_consistency(const Options& o) {
  const auto report = consistency_check(derive_datum(load_valid(o)));
  if (o.format == Format::json) {
    emit(to_json(report));
  } else {
    std::cout << ConsistencyReport::label << ": " << (report.all_pass() ? "all equations hold" : "some equations fail")
              << " (" << report.entries.size() << " checked)\n";
    for (const auto& e : report.entries) {
      std::cout << "  " << (e.pass ? "ok  " : "FAIL") << " " << (e.kind == ConsistencyEntry::Kind::pair ? "pair" : "triple");
      for (auto i : e.indices) std::cout << " " << i + 1;
      std::cout << ": " << to_string(e.lhs) << "  vs  " << to_string(e.rhs) << "\n";
    }
  }
  return report.all_pass() ? exit_pass : exit_fail;
}

int cmd_phi(const Options& o) {
  const GammaMatrix gamma = load_valid(o);
  Json j = Json::array();
  for (std::size_t i = 0; i < gamma.cols(); ++i) {
    const auto x = to_string(phi_generator(gamma, X(i)));
    const auto y = to_string(phi_generator(gamma, Y(i)));
    if (o.format == Format::json) {
      j.push_back({{"generator", i + 1}, {"X", x}, {"Y", y}});
    } else {
      std::cout << "phi(X" << i + 1 << ") = " << x << "\n";
      std::cout << "phi(Y" << i + 1 << ") = " << y << "\n";
    }
  }
  if (o.format == Format::json) emit(j);
  return exit_pass;
}

int cmd_eval(const Options& o) {
  const GammaMatrix gamma = load_valid(o);
  const auto word = parse_word(o.word);
  const auto result = eval_word(gamma, word);
  if (o.format == Format::json) {
    Json j;
    j["word"] = to_string(std::span<const Letter>(word));
    const Json body = to_json(result);
    for (const auto& [k, v] : body.items()) j[k] = v;
    emit(j);
  } else {
    std::cout << "degree " << join(result.degree) << "\n";
    std::cout << (result.image.is_zero() ? std::string("0") : to_string(result.image)) << "\n";
  }
  return exit_pass;
}

int cmd_support_member(const Options& o) {
  const GammaMatrix gamma = load_valid(o);
  const auto g = parse_vector(o.g);
  if (g.size() != gamma.cols()) {
    throw InvalidInput("g has " + std::to_string(g.size()) + " entries, the matrix has " +
                       std::to_string(gamma.cols()) + " columns");
  }
  const auto witness = is_in_support(gamma, g);
  std::optional<bool> oracle;
  if (o.oracle) oracle = oracle_membership(gamma, g, o.cap ? o.cap : default_oracle_cap);
  if (o.format == Format::json) {
    Json j = support_line(g, witness);
    if (oracle) j["oracle"] = *oracle;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << join(g) << (witness ? " member, witness " + witness_text(*witness) : std::string(" not a member"))
              << "\n";
    if (oracle) std::cout << "oracle: " << (*oracle ? "member" : "not a member") << "\n";
  }
  if (oracle && *oracle != witness.has_value()) return exit_fail;
  return witness ? exit_pass : exit_fail;
}

int cmd_support_enum(const Options& o) {
  const GammaMatrix gamma = load_valid(o);
  const Box full = box_for(gamma, o.box);
  const auto points = enumerate_support(gamma, full, o.even_lattice, o.cap ? o.cap : default_box_cap, o.workers);
  for (const auto& pt : points) {
    if (o.format == Format::json) {
      std::cout << support_line(pt.point, pt.witness).dump() << "\n";
    } else {
      std::cout << join(pt.point) << "  " << witness_text(pt.witness) << "\n";
    }
  }
  if (o.format == Format::text) std::cout << points.size() << " support points\n";
  return exit_pass;
}

int cmd_injectivity(const Options& o) {
  const GammaMatrix gamma = load_valid(o);
  const Box box = box_for(gamma, o.box);
  const auto report = injectivity_report(gamma, box, o.cap ? o.cap : default_box_cap);
  const bool pass = report.passes();
  if (o.format == Format::json) {
    emit(to_json(report));
  } else {
    std::cout << "rank " << report.rank_kernel.rank << " of " << gamma.cols() << " columns";
    std::cout << (report.global_certificate ? " (injective on all degrees)" : " (box-restricted result)") << "\n";
    for (const auto& k : report.rank_kernel.kernel) std::cout << "kernel " << join(k) << "\n";
    std::cout << "support points in box: " << report.support.size() << "\n";
    std::cout << "gamma injective on support in box: " << (report.gamma_injective_on_box ? "yes" : "no") << "\n";
    std::cout << "projected gamma vanishes only at 0 on support in box: "
              << (report.projected_kernel_trivial_on_box ? "yes" : "no") << "\n";
    std::cout << "projected gamma pairwise distinct on support in box: "
              << (report.projected_injective_on_box ? "yes"
                                                     : "no (" + std::to_string(report.projected_collision_count) +
                                                           " collisions)")
              << "\n";
    std::cout << "Clifford coordinates within {-1,0,1}: "
              << (report.containment_holds() ? "yes" : std::to_string(report.containment_violations.size()) +
                                                           " violations")
              << "\n";
  }
  return pass ? exit_pass : exit_fail;
}

std::optional<Realization> requested_realization(const Options& o) {
  if (o.realization.empty()) return std::nullopt;
  return parse_realization(o.realization);
}

int cmd_lie_check(const Options& o) {
  const LiePreset pr = preset(parse_family(o.family), o.p, o.q, requested_realization(o));
  Calibration cal = Calibration::unit(pr.e.size(), pr.h.size());
  std::string source = "unit";
  if (!o.fixtures.empty()) {
    const auto fixtures = read_calibration_fixtures(o.fixtures);
    const auto* fx = find_fixture(fixtures, pr);
    if (!fx) throw InvalidInput("no fixture for " + pr.name() + " (" + to_string(pr.realization) + ")");
    cal = fx->calibration;
    source = "fixture";
  } else if (o.calibrate) {
    auto solved = calibrate(pr);
    if (!solved) {
      std::cerr << "no calibration zeroes the residuals of " << pr.name() << "\n";
      return exit_fail;
    }
    cal = *solved;
    source = "solved";
  }
  const auto residuals = check_relations(pr, cal);
  const auto triangle = check_triangle(pr, cal);
  const bool pass = residuals.all_pass() && triangle.e_match_all() && triangle.h_offsets_constant();
  if (o.format == Format::json) {
    Json j;
    j["preset"] = pr.name();
    j["family"] = to_string(pr.family);
    j["p"] = pr.p;
    j["q"] = pr.q;
    j["realization"] = to_string(pr.realization);
    j["calibration_source"] = source;
    j["residuals"] = to_json(residuals);
    j["triangle"] = to_json(triangle);
    j["pass"] = pass;
    emit(j);
  } else {
    std::cout << pr.name() << " via " << to_string(pr.realization) << " realization, " << source << " calibration\n";
    const auto& c = residuals.calibration;
    for (std::size_t i = 0; i < c.e_scale.size(); ++i) {
      std::cout << "  c" << i + 1 << " = " << to_string(c.e_scale[i]) << "  c'" << i + 1 << " = "
                << to_string(c.f_scale[i]) << "\n";
    }
    for (std::size_t i = 0; i < c.h_shift.size(); ++i) {
      std::cout << "  s" << i + 1 << " = " << to_string(c.h_shift[i]) << "\n";
    }
    for (const auto& r : residuals.residuals) {
      std::cout << (r.pass ? "ok   " : "FAIL ") << r.id << "  residual "
                << (r.residual.is_zero() ? std::string("0") : to_string(r.residual)) << "\n";
    }
    for (const auto& e : triangle.entries) {
      if (e.gen.kind == LieGen::Kind::h) {
        std::cout << "triangle " << to_string(e.gen) << ": offset "
                  << (e.offset ? to_string(*e.offset) : std::string("not constant")) << "\n";
      } else {
        std::cout << "triangle " << to_string(e.gen) << ": " << (e.match ? "match" : "MISMATCH") << "  phi "
                  << to_string(e.phi_image) << "  pi " << to_string(e.scaled_image) << "\n";
      }
    }
  }
  return pass ? exit_pass : exit_fail;
}

/// All presets with n <= max_n that exist, each with its default and (where
/// admissible) alternative realization.
int cmd_lie_fixtures(const Options& o) {
  std::vector<CalibrationFixture> out;
  for (LieFamily fam : {LieFamily::gl, LieFamily::osp_even, LieFamily::osp_odd}) {
    for (std::size_t n = 1; n <= o.max_n; ++n) {
      for (std::size_t p = 0; p <= n; ++p) {
        for (Realization r : {Realization::weyl, Realization::clifford}) {
          std::optional<LiePreset> pr;
          try {
            pr = preset(fam, p, n - p, r);
          } catch (const InvalidInput&) {
            continue;
          }
          auto cal = calibrate(*pr);
          if (!cal) {
            std::cerr << "no calibration for " << pr->name() << " (" << to_string(r) << ")\n";
            return exit_fail;
          }
          std::vector<Rational> offsets;
          for (const auto& e : check_triangle(*pr, *cal).entries) {
            if (e.gen.kind == LieGen::Kind::h) offsets.push_back(e.offset.value_or(Rational(0)));
          }
          out.push_back({fam, p, n - p, r, *cal, offsets});
        }
      }
    }
  }
  Json j;
  Json list = Json::array();
  for (const auto& f : out) list.push_back(to_json(f));
  j["fixtures"] = std::move(list);
  emit(j);
  return exit_pass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clifford/Weyl superalgebra arithmetic, TGW data, graded supports and Lie realizations"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  auto with_matrix = [&](CLI::App* sub) {
    sub->add_option("matrix", o.matrix, "Matrix file (JSON)")->required()->check(CLI::ExistingFile);
  };

  auto* validate = app.add_subcommand("validate", "Check the hypotheses on a gamma matrix");
  with_matrix(validate);
  auto* datum = app.add_subcommand("datum", "Derive t, sigma, mu and the parities");
  with_matrix(datum);
  auto* consistency = app.add_subcommand("consistency", "Evaluate the consistency equations (diagnostic)");
  with_matrix(consistency);
  auto* phi = app.add_subcommand("phi", "Images of the generators X_i, Y_i");
  with_matrix(phi);
  auto* eval = app.add_subcommand("eval", "Image and degree of a word such as \"X1 Y2\"");
  with_matrix(eval);
  eval->add_option("word", o.word, "Word in X1..Xm, Y1..Ym")->required();

  auto* support = app.add_subcommand("support", "Graded support queries");
  support->require_subcommand(1);
  auto* member = support->add_subcommand("member", "Decide whether a degree lies in the support");
  with_matrix(member);
  member->add_option("-g", o.g, "Degree, comma separated")->required()->allow_extra_args(false);
  member->add_flag("--oracle", o.oracle, "Also run the brute-force check");
  member->add_option("--cap", o.cap, "Length cap for the brute-force check")->check(CLI::PositiveNumber);
  auto* enumerate = support->add_subcommand("enum", "List support points in a box");
  with_matrix(enumerate);
  enumerate->add_option("--box", o.box, "Box a:b,c:d,... or a radius r")->required();
  enumerate->add_flag("--even-lattice", o.even_lattice, "Keep only degrees with even coordinate sum");
  enumerate->add_option("--cap", o.cap, "Maximum number of candidate points")->check(CLI::PositiveNumber);
  enumerate->add_option("--workers", o.workers, "Worker threads (0 = hardware)");

  auto* injectivity = app.add_subcommand("injectivity", "Rank certificate and box-restricted injectivity");
  with_matrix(injectivity);
  injectivity->add_option("--box", o.box, "Box a:b,c:d,... or a radius r");
  injectivity->add_option("--cap", o.cap, "Maximum number of candidate points")->check(CLI::PositiveNumber);

  auto* lie = app.add_subcommand("lie", "Lie superalgebra realizations");
  lie->require_subcommand(1);
  auto* check = lie->add_subcommand("check", "Relation residuals and triangle comparison");
  check->add_option("family", o.family, "gl, osp_even or osp_odd")->required();
  check->add_option("p", o.p, "p")->required();
  check->add_option("q", o.q, "q")->required();
  check->add_option("--realization", o.realization, "weyl or clifford")->check(CLI::IsMember({"weyl", "clifford"}));
  auto* cal_flag = check->add_flag("--calibrate", o.calibrate, "Solve for scalings and shifts");
  check->add_option("--fixtures", o.fixtures, "Calibration fixture file")->excludes(cal_flag);
  auto* fixtures = lie->add_subcommand("fixtures", "Print solved calibrations for all small presets");
  fixtures->add_option("--max-n", o.max_n, "Largest p+q")->check(CLI::Range(1, 6));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_pass : exit_usage;
  }
  o.format = format == "json" ? Format::json : Format::text;

  try {
    if (*validate) return cmd_validate(o);
    if (*datum) return cmd_datum(o);
    if (*consistency) return cmd_consistency(o);
    if (*phi) return cmd_phi(o);
    if (*eval) return cmd_eval(o);
    if (*member) return cmd_support_member(o);
    if (*enumerate) return cmd_support_enum(o);
    if (*injectivity) return cmd_injectivity(o);
    if (*check) return cmd_lie_check(o);
    if (*fixtures) return cmd_lie_fixtures(o);
  } catch (const InvalidGamma& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_fail;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}
