#include "tgw/support.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "tgw/errors.hpp"

namespace tgw {

std::vector<std::size_t> constrained_rows(const Signature& sig) {
  std::vector<std::size_t> rows;
  for (std::size_t r = 0; r < sig.size(); ++r) {
    if (sig.is_clifford(r)) rows.push_back(r);
  }
  return rows;
}

bool passes_supersupport_bound(const GammaMatrix& gamma, std::span<const long> g) {
  const auto image = gamma.apply(g);
  for (std::size_t r : constrained_rows(gamma.signature())) {
    if (image[r] > 1 || image[r] < -1) return false;
  }
  return true;
}

namespace {

class WitnessSearch {
 public:
  WitnessSearch(const GammaMatrix& gamma, std::span<const long> g) : rows_(constrained_rows(gamma.signature())) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] == 0) continue;
      const int sign = g[i] > 0 ? 1 : -1;
      Part part{i, sign, {}};
      for (std::size_t r : rows_) part.row_values.push_back(static_cast<int>(sign * gamma(r, i)));
      parts_.push_back(std::move(part));
      remaining_.push_back(g[i] > 0 ? g[i] : -g[i]);
    }
    last_.assign(rows_.size(), 0);
  }

  std::optional<SupportWitness> run() {
    SupportWitness path;
    if (dfs(path)) return path;
    return std::nullopt;
  }

 private:
  struct Part {
    std::size_t column;
    int sign;
    std::vector<int> row_values;  // signed entries on the constrained rows
  };

  std::vector<long> state_key() const {
    std::vector<long> key(remaining_.begin(), remaining_.end());
    key.insert(key.end(), last_.begin(), last_.end());
    return key;
  }

  bool dfs(SupportWitness& path) {
    bool done = std::all_of(remaining_.begin(), remaining_.end(), [](long c) { return c == 0; });
    if (done) return true;
    auto key = state_key();
    if (dead_.contains(key)) return false;
    for (std::size_t k = 0; k < parts_.size(); ++k) {
      if (remaining_[k] == 0) continue;
      const Part& part = parts_[k];
      bool allowed = true;
      for (std::size_t r = 0; r < rows_.size() && allowed; ++r) {
        const int v = part.row_values[r];
        allowed = v == 0 || v != last_[r];
      }
      if (!allowed) continue;
      const std::vector<int> saved = last_;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (part.row_values[r] != 0) last_[r] = part.row_values[r];
      }
      --remaining_[k];
      path.push_back({part.column, part.sign});
      if (dfs(path)) return true;
      path.pop_back();
      ++remaining_[k];
      last_ = saved;
    }
    dead_.insert(std::move(key));
    return false;
  }

  std::vector<std::size_t> rows_;
  std::vector<Part> parts_;
  std::vector<long> remaining_;
  std::vector<int> last_;  // last nonzero signed entry per constrained row, 0 if none yet
  std::set<std::vector<long>> dead_;
};

std::optional<SupportWitness> search_unchecked(const GammaMatrix& gamma, std::span<const long> g) {
  if (!passes_supersupport_bound(gamma, g)) return std::nullopt;
  return WitnessSearch(gamma, g).run();
}

}  // namespace

std::optional<SupportWitness> is_in_support(const GammaMatrix& gamma, std::span<const long> g) {
  require_valid(gamma);
  if (g.size() != gamma.cols()) throw InvalidInput("degree vector has wrong length");
  return search_unchecked(gamma, g);
}

bool verify_witness(const GammaMatrix& gamma, std::span<const long> g, const SupportWitness& witness) {
  if (g.size() != gamma.cols()) return false;
  std::vector<long> counts(g.size(), 0);
  for (const auto& step : witness) {
    if (step.column >= g.size() || (step.sign != 1 && step.sign != -1)) return false;
    counts[step.column] += step.sign;
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (counts[i] != g[i]) return false;
  }
  // opposite-signed steps of one column would also cancel; forbid them
  for (const auto& step : witness) {
    if (step.sign * g[step.column] <= 0) return false;
  }
  // scan each constrained row for a repeated sign between nonzero entries
  for (std::size_t r : constrained_rows(gamma.signature())) {
    long previous = 0;
    for (const auto& step : witness) {
      const long v = step.sign * gamma(r, step.column);
      if (v == 0) continue;
      if (v == previous) return false;
      previous = v;
    }
  }
  return true;
}

Box Box::cube(std::size_t dim, long radius) { return Box{std::vector<std::pair<long, long>>(dim, {-radius, radius})}; }

std::size_t Box::count() const {
  std::size_t total = 1;
  for (const auto& [lo, hi] : ranges) {
    if (hi < lo) return 0;
    const auto width = static_cast<std::size_t>(hi - lo) + 1;
    if (total > std::numeric_limits<std::size_t>::max() / width) return std::numeric_limits<std::size_t>::max();
    total *= width;
  }
  return total;
}

bool Box::contains(std::span<const long> g) const {
  if (g.size() != ranges.size()) return false;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] < ranges[i].first || g[i] > ranges[i].second) return false;
  }
  return true;
}

Box parse_box(const std::string& text) {
  Box box;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      if (item.empty()) throw InvalidInput("");
      const auto colon = item.find(':', item.front() == '-' ? 1 : 0);
      std::size_t used = 0;
      if (colon == std::string::npos) {
        const long r = std::stol(item, &used);
        if (used != item.size() || r < 0) throw InvalidInput("");
        box.ranges.emplace_back(-r, r);
      } else {
        const std::string a = item.substr(0, colon);
        const std::string b = item.substr(colon + 1);
        const long lo = std::stol(a, &used);
        if (used != a.size()) throw InvalidInput("");
        const long hi = std::stol(b, &used);
        if (used != b.size()) throw InvalidInput("");
        if (hi < lo) throw InvalidInput("");
        box.ranges.emplace_back(lo, hi);
      }
    } catch (const std::exception&) {
      throw InvalidInput("malformed box interval '" + item + "' (expected a:b with a <= b)");
    }
  }
  if (box.ranges.empty()) throw InvalidInput("empty box specification");
  return box;
}

namespace {

std::vector<long> point_at(const Box& box, std::size_t index) {
  std::vector<long> g(box.dim());
  for (std::size_t k = box.dim(); k-- > 0;) {
    const auto width = static_cast<std::size_t>(box.ranges[k].second - box.ranges[k].first) + 1;
    g[k] = box.ranges[k].first + static_cast<long>(index % width);
    index /= width;
  }
  return g;
}

}  // namespace

std::vector<SupportPoint> enumerate_support(const GammaMatrix& gamma, const Box& box, bool even_lattice_filter,
                                            std::size_t cap, std::size_t workers) {
  require_valid(gamma);
  if (box.dim() != gamma.cols()) throw InvalidInput("box dimension does not match the number of columns");
  const std::size_t total = box.count();
  if (total > cap) {
    throw ResourceLimit("box has " + std::to_string(total) + " candidate points, above the cap of " +
                        std::to_string(cap));
  }
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<std::size_t>(workers, std::max<std::size_t>(1, total / 256));

  auto scan = [&](std::size_t begin, std::size_t end) {
    std::vector<SupportPoint> found;
    for (std::size_t idx = begin; idx < end; ++idx) {
      auto g = point_at(box, idx);
      if (even_lattice_filter && std::accumulate(g.begin(), g.end(), 0L) % 2 != 0) continue;
      if (auto w = search_unchecked(gamma, g)) found.push_back({std::move(g), std::move(*w)});
    }
    return found;
  };

  // row-major index order is lexicographic order, so concatenating chunks keeps the result sorted
  std::vector<SupportPoint> out;
  if (workers <= 1) {
    out = scan(0, total);
  } else {
    std::vector<std::future<std::vector<SupportPoint>>> parts;
    const std::size_t chunk = (total + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(total, begin + chunk);
      if (begin >= end) break;
      parts.push_back(std::async(std::launch::async, scan, begin, end));
    }
    for (auto& part : parts) {
      auto found = part.get();
      std::move(found.begin(), found.end(), std::back_inserter(out));
    }
  }
  return out;
}

bool oracle_membership(const GammaMatrix& gamma, std::span<const long> g, std::size_t cap) {
  require_valid(gamma);
  if (g.size() != gamma.cols()) throw InvalidInput("degree vector has wrong length");
  std::vector<Letter> letters;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (long k = 0; k < (g[i] > 0 ? g[i] : -g[i]); ++k) letters.push_back({i, g[i] > 0});
  }
  if (letters.size() > cap) {
    throw ResourceLimit("|g| = " + std::to_string(letters.size()) + " exceeds the brute-force cap of " +
                        std::to_string(cap));
  }
  // letters are already sorted by column; each column carries a single direction
  auto by_column = [](const Letter& a, const Letter& b) { return a.index < b.index; };
  do {
    if (!eval_word(gamma, letters).image.is_zero()) return true;
  } while (std::next_permutation(letters.begin(), letters.end(), by_column));
  return false;
}

RankKernel gamma_rank_kernel(const GammaMatrix& gamma) {
  const std::size_t n = gamma.rows();
  const std::size_t m = gamma.cols();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(m));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) a[j][i] = gamma(j, i);
  }
  // reduced row echelon form over Q
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m && row < n; ++col) {
    std::size_t sel = row;
    while (sel < n && a[sel][col] == 0) ++sel;
    if (sel == n) continue;
    std::swap(a[sel], a[row]);
    const Rational inv = 1 / a[row][col];
    for (auto& v : a[row]) v *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t c = 0; c < m; ++c) a[r][c] -= f * a[row][c];
    }
    pivots.push_back(col);
    ++row;
  }

  RankKernel out;
  out.rank = pivots.size();
  for (std::size_t free = 0; free < m; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<Rational> v(m, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    Integer lcm = 1;
    for (const auto& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Integer> iv(m);
    Integer g = 0;
    for (std::size_t c = 0; c < m; ++c) {
      iv[c] = v[c].get_num() * (lcm / v[c].get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), iv[c].get_mpz_t());
    }
    std::vector<long> kv(m);
    int first_sign = 0;
    for (std::size_t c = 0; c < m; ++c) {
      iv[c] /= g;
      if (first_sign == 0 && iv[c] != 0) first_sign = sgn(iv[c]);
    }
    for (std::size_t c = 0; c < m; ++c) {
      if (!iv[c].fits_slong_p()) throw ResourceLimit("kernel vector entry exceeds machine range");
      kv[c] = first_sign * iv[c].get_si();
    }
    out.kernel.push_back(std::move(kv));
  }
  return out;
}

std::vector<long> project_to_super_lattice(const GammaMatrix& gamma, std::span<const long> g) {
  auto image = gamma.apply(g);
  for (std::size_t r : constrained_rows(gamma.signature())) image[r] = ((image[r] % 2) + 2) % 2;
  return image;
}

InjectivityReport injectivity_report(const GammaMatrix& gamma, const Box& box, std::size_t cap) {
  require_valid(gamma);
  InjectivityReport report;
  report.rank_kernel = gamma_rank_kernel(gamma);
  report.global_certificate = report.rank_kernel.rank == gamma.cols();
  report.box = box;
  report.support = enumerate_support(gamma, box, false, cap);

  std::map<std::vector<long>, std::vector<long>> seen_gamma;
  std::map<std::vector<long>, std::vector<long>> seen_projected;
  const auto rows = constrained_rows(gamma.signature());
  for (const auto& sp : report.support) {
    const auto image = gamma.apply(sp.point);
    for (std::size_t r : rows) {
      if (image[r] > 1 || image[r] < -1) {
        report.containment_violations.push_back(sp.point);
        break;
      }
    }
    const bool nonzero = std::any_of(sp.point.begin(), sp.point.end(), [](long v) { return v != 0; });
    const auto projected = project_to_super_lattice(gamma, sp.point);
    auto is_zero = [](const std::vector<long>& v) { return std::all_of(v.begin(), v.end(), [](long x) { return x == 0; }); };
    if (nonzero && is_zero(image)) report.gamma_kernel_trivial_on_box = false;
    if (nonzero && is_zero(projected)) report.projected_kernel_trivial_on_box = false;

    auto [it, fresh] = seen_gamma.try_emplace(image, sp.point);
    if (!fresh) {
      report.gamma_injective_on_box = false;
      ++report.gamma_collision_count;
      if (report.gamma_collisions.size() < max_listed_collisions) report.gamma_collisions.emplace_back(it->second, sp.point);
    }
    auto [pit, pfresh] = seen_projected.try_emplace(projected, sp.point);
    if (!pfresh) {
      report.projected_injective_on_box = false;
      ++report.projected_collision_count;
      if (report.projected_collisions.size() < max_listed_collisions) {
        report.projected_collisions.emplace_back(pit->second, sp.point);
      }
    }
  }
  return report;
}

}  // namespace tgw
