#include "toricreg/report.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <ostream>
#include <sstream>
#include <thread>
#include <variant>

#include <json.hpp>

#include "toricreg/errors.hpp"

namespace toricreg {

using ojson = nlohmann::ordered_json;

const char* to_string(BoundId id) {
  switch (id) {
    case BoundId::EG_CONJ:
      return "EG_CONJ";
    case BoundId::THM_MAIN:
      return "THM_MAIN";
    case BoundId::PROP_KP_NU_D:
      return "PROP_KP_NU_D";
    case BoundId::PROP_KP_FLOOR:
      return "PROP_KP_FLOOR";
    case BoundId::HKN:
      return "HKN";
    case BoundId::NU_LE_DEG:
      return "NU_LE_DEG";
    case BoundId::NONHOLLOW_EG:
      return "NONHOLLOW_EG";
    case BoundId::HIBI:
      return "HIBI";
  }
  return "?";
}

const std::vector<BoundId>& all_bounds() {
  static const std::vector<BoundId> ids = {BoundId::EG_CONJ,       BoundId::THM_MAIN, BoundId::PROP_KP_NU_D,
                                           BoundId::PROP_KP_FLOOR, BoundId::HKN,      BoundId::NU_LE_DEG,
                                           BoundId::NONHOLLOW_EG,  BoundId::HIBI};
  return ids;
}

bool is_asserted(BoundId id) { return id != BoundId::EG_CONJ; }

std::string BoundCheck::verdict() const {
  if (!holds) return "NA";
  return *holds ? "holds" : "fails";
}

const BoundCheck& AnalysisReport::bound(BoundId id) const {
  for (const auto& b : bounds)
    if (b.id == id) return b;
  throw InvalidInput(std::string("report has no bound ") + to_string(id));
}

namespace {

BoundCheck make_check(BoundId id, bool applicable, std::optional<std::int64_t> lhs, std::optional<std::int64_t> rhs) {
  BoundCheck b;
  b.id = id;
  b.lhs = lhs;
  b.rhs = rhs;
  b.applicable = applicable && lhs && rhs;
  if (b.applicable) b.holds = *lhs <= *rhs;
  return b;
}

std::optional<std::int64_t> widen(std::optional<int> v) {
  if (!v) return std::nullopt;
  return *v;
}

}  // namespace

std::vector<BoundCheck> check_bounds(const AnalysisReport& r) {
  const std::int64_t d = r.dim;
  const std::int64_t half = d / 2;
  const std::int64_t n = r.lattice_points;
  const std::int64_t vol = r.volume;
  const bool va_simplex = r.very_ample && r.simplex;
  const auto k_p = widen(r.k_p);
  const auto reg = widen(r.reg);

  std::optional<std::int64_t> nu_d;
  if (r.nu_p && r.d_p) nu_d = static_cast<std::int64_t>(*r.nu_p) + *r.d_p - 1;

  std::vector<BoundCheck> out;
  out.push_back(make_check(BoundId::EG_CONJ, true, reg, r.deg_x - r.codim_x + 1));
  out.push_back(make_check(BoundId::THM_MAIN, va_simplex, reg, r.deg_x - r.codim_x + half));
  out.push_back(make_check(BoundId::PROP_KP_NU_D, va_simplex, k_p, nu_d));
  out.push_back(make_check(BoundId::PROP_KP_FLOOR, va_simplex, k_p, vol - n + d + half));
  out.push_back(make_check(BoundId::HKN, true, r.degree, vol - n + d + 1));
  out.push_back(make_check(BoundId::NU_LE_DEG, r.simplex && vol > 1, widen(r.nu_p), r.degree));
  out.push_back(make_check(BoundId::NONHOLLOW_EG, va_simplex && !r.hollow, k_p, vol - n + d + 1));

  // Hibi: 2 <= h*_1 <= h*_i for 1 <= i < d.
  std::optional<std::int64_t> hibi_rhs;
  const auto& h = r.h_star.coefficients;
  for (std::int64_t i = 1; i < d; ++i) {
    hibi_rhs = hibi_rhs ? std::min(*hibi_rhs, h[static_cast<std::size_t>(i)]) : h[static_cast<std::size_t>(i)];
  }
  auto hibi = make_check(BoundId::HIBI, !r.hollow && n >= d + 3, d >= 1 ? std::optional<std::int64_t>(h[1]) : std::nullopt,
                         hibi_rhs);
  if (hibi.applicable) hibi.holds = *hibi.lhs >= 2 && *hibi.lhs <= *hibi.rhs;
  out.push_back(hibi);
  return out;
}

AnalysisReport analyze(const LatticePolytope& p, AnalysisCaps caps) {
  AnalysisReport r;
  r.name = p.name();
  r.vertices = p.vertices();
  r.seed = p.seed();
  r.dim = static_cast<int>(p.dim());
  r.k_cap = caps.k_cap > 0 ? caps.k_cap : default_k_cap(p.dim());
  r.invariant_cap = caps.invariant_cap > 0 ? caps.invariant_cap : default_invariant_cap(p.dim());

  r.lattice_points = static_cast<std::int64_t>(lattice_points(p, 1).size());
  r.interior_points = static_cast<std::int64_t>(interior_lattice_points(p, 1).size());
  r.h_star = h_star(p);
  if (!h_star_identities_hold(p, r.h_star)) throw InvariantViolation("h* identities fail for " + p.name());
  if (!ehrhart_interpolation_consistent(p, 2 * r.dim + 2)) {
    throw InvariantViolation("Ehrhart counts are not polynomial for " + p.name());
  }
  r.degree = static_cast<int>(degree(p));
  r.volume = normalized_volume(p);
  r.hollow = r.interior_points == 0;
  r.fano = is_fano(p);
  r.simplex = is_simplex(p);

  auto prof = normality_profile(p, {r.k_cap, r.invariant_cap});
  r.d_p = prof.d_p;
  r.nu_p = prof.nu_p;
  r.k_p = prof.k_p;
  r.very_ample = prof.very_ample;
  r.per_k_normal = std::move(prof.per_k_normal);
  r.hilbert_witnesses = std::move(prof.hilbert_witnesses);
  if (r.d_p && r.nu_p && *r.d_p > *r.nu_p) throw InvariantViolation("d_P exceeds nu_P");

  if (r.k_p) r.reg = std::max(*r.k_p, r.degree) + 1;
  r.deg_x = r.volume;
  r.codim_x = r.lattice_points - (r.dim + 1);
  if (r.codim_x < 0) throw InvariantViolation("negative codimension");
  if (r.reg) r.eg_gap = *r.reg - (r.deg_x - r.codim_x + 1);
  r.bounds = check_bounds(r);
  return r;
}

namespace {

template <typename T>
ojson opt(const std::optional<T>& v) {
  return v ? ojson(*v) : ojson(nullptr);
}

ojson report_json(const AnalysisReport& r) {
  ojson j;
  j["name"] = r.name;
  j["vertices"] = r.vertices;
  j["seed"] = opt(r.seed);
  j["caps"] = {{"k_cap", r.k_cap}, {"invariant_cap", r.invariant_cap}};
  j["dim"] = r.dim;
  j["lattice_points"] = r.lattice_points;
  j["interior_points"] = r.interior_points;
  j["volume"] = r.volume;
  j["h_star"] = r.h_star.coefficients;
  j["degree"] = r.degree;
  j["hollow"] = r.hollow;
  j["fano"] = r.fano;
  j["simplex"] = r.simplex;
  j["very_ample"] = r.very_ample;
  j["d_P"] = opt(r.d_p);
  j["nu_P"] = opt(r.nu_p);
  j["k_P"] = opt(r.k_p);
  j["reg"] = opt(r.reg);
  j["deg_X"] = r.deg_x;
  j["codim_X"] = r.codim_x;
  j["eg_gap"] = opt(r.eg_gap);
  ojson normal = ojson::object();
  for (const auto& [k, v] : r.per_k_normal) normal[std::to_string(k)] = v;
  j["per_k_normal"] = normal;
  j["hilbert_witnesses"] = r.hilbert_witnesses;
  ojson bounds = ojson::array();
  for (const auto& b : r.bounds) {
    bounds.push_back({{"id", to_string(b.id)},
                      {"applicable", b.applicable},
                      {"verdict", b.verdict()},
                      {"lhs", opt(b.lhs)},
                      {"rhs", opt(b.rhs)}});
  }
  j["bounds"] = bounds;
  return j;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

template <typename T>
std::string csv_opt(const std::optional<T>& v) {
  return v ? std::to_string(*v) : std::string{};
}

std::string points_field(const std::vector<Point>& pts) {
  std::string s;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) s += ';';
    for (std::size_t j = 0; j < pts[i].size(); ++j) {
      if (j) s += ' ';
      s += std::to_string(pts[i][j]);
    }
  }
  return s;
}

}  // namespace

std::string to_json(const AnalysisReport& r) { return report_json(r).dump(); }

std::string bounds_to_json(const AnalysisReport& r) {
  ojson j;
  j["name"] = r.name;
  j["bounds"] = report_json(r)["bounds"];
  return j.dump();
}

std::string to_human(const AnalysisReport& r) {
  const auto j = report_json(r);
  std::ostringstream out;
  for (const auto& [key, value] : j.items()) {
    if (key == "bounds") continue;
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
  out << "bounds:\n";
  for (const auto& b : r.bounds) {
    out << "  " << to_string(b.id) << ": " << b.verdict() << " (applicable=" << (b.applicable ? "true" : "false")
        << ", lhs=" << (b.lhs ? std::to_string(*b.lhs) : "null") << ", rhs=" << (b.rhs ? std::to_string(*b.rhs) : "null")
        << ")\n";
  }
  return out.str();
}

std::string csv_header() {
  std::string h =
      "name,seed,dim,vertices,lattice_points,interior_points,volume,h_star,degree,hollow,fano,simplex,very_ample,"
      "d_P,nu_P,k_P,reg,deg_X,codim_X,eg_gap,k_cap,invariant_cap";
  for (auto id : all_bounds()) {
    const std::string s = to_string(id);
    h += "," + s + "," + s + "_lhs," + s + "_rhs";
  }
  return h;
}

std::string to_csv_row(const AnalysisReport& r) {
  auto b = [](bool v) { return std::string(v ? "true" : "false"); };
  std::string h;
  for (std::size_t i = 0; i < r.h_star.coefficients.size(); ++i) {
    if (i) h += ' ';
    h += std::to_string(r.h_star.coefficients[i]);
  }
  std::string row = csv_quote(r.name) + "," + csv_opt(r.seed) + "," + std::to_string(r.dim) + "," +
                    points_field(r.vertices) + "," + std::to_string(r.lattice_points) + "," +
                    std::to_string(r.interior_points) + "," + std::to_string(r.volume) + "," + h + "," +
                    std::to_string(r.degree) + "," + b(r.hollow) + "," + b(r.fano) + "," + b(r.simplex) + "," +
                    b(r.very_ample) + "," + csv_opt(r.d_p) + "," + csv_opt(r.nu_p) + "," + csv_opt(r.k_p) + "," +
                    csv_opt(r.reg) + "," + std::to_string(r.deg_x) + "," + std::to_string(r.codim_x) + "," +
                    csv_opt(r.eg_gap) + "," + std::to_string(r.k_cap) + "," + std::to_string(r.invariant_cap);
  for (auto id : all_bounds()) {
    const auto& c = r.bound(id);
    row += "," + c.verdict() + "," + csv_opt(c.lhs) + "," + csv_opt(c.rhs);
  }
  return row;
}

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  if (s == "human") return OutputFormat::human;
  throw InvalidInput("unknown output format '" + s + "' (json | csv | human)");
}

namespace {

using Outcome = std::variant<AnalysisReport, std::string>;

void tally(BatchSummary& s, const AnalysisReport& r) {
  ++s.analyzed;
  if (!r.k_p) ++s.undefined_k;
  for (const auto& b : r.bounds) {
    auto& t = s.tallies[b.id];
    if (!b.holds) {
      ++t.not_applicable;
      continue;
    }
    if (*b.holds) {
      ++t.holds;
      continue;
    }
    ++t.fails;
    BatchIssue issue{r.name, r.vertices, r.seed, to_string(b.id), b.lhs, b.rhs};
    (is_asserted(b.id) ? s.violations : s.observations).push_back(std::move(issue));
  }
}

}  // namespace

BatchSummary batch_run(const std::vector<LatticePolytope>& polytopes, AnalysisCaps caps, std::ostream& sink,
                       OutputFormat format, int workers) {
  BatchSummary summary;
  for (auto id : all_bounds()) summary.tallies[id] = {};
  if (format == OutputFormat::csv) sink << csv_header() << '\n';

  const std::size_t n = polytopes.size();
  std::vector<std::promise<Outcome>> promises(n);
  std::vector<std::future<Outcome>> futures;
  futures.reserve(n);
  for (auto& pr : promises) futures.push_back(pr.get_future());

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        promises[i].set_value(analyze(polytopes[i], caps));
      } catch (const std::exception& e) {
        promises[i].set_value(std::string(e.what()));
      }
    }
  };
  std::vector<std::jthread> pool;
  const int threads = std::max(1, std::min<int>(workers, static_cast<int>(std::max<std::size_t>(n, 1))));
  for (int t = 0; t < threads; ++t) pool.emplace_back(work);

  // Futures are consumed in input order, so rows stream deterministically.
  for (std::size_t i = 0; i < n; ++i) {
    const Outcome outcome = futures[i].get();
    if (const auto* err = std::get_if<std::string>(&outcome)) {
      const auto& p = polytopes[i];
      summary.errors.push_back({p.name(), p.vertices(), p.seed(), *err, std::nullopt, std::nullopt});
      continue;
    }
    const auto& r = std::get<AnalysisReport>(outcome);
    switch (format) {
      case OutputFormat::json:
        sink << to_json(r) << '\n';
        break;
      case OutputFormat::csv:
        sink << to_csv_row(r) << '\n';
        break;
      case OutputFormat::human:
        sink << to_human(r) << '\n';
        break;
    }
    sink.flush();
    if (!sink) {
      next = n;
      throw std::ios_base::failure("write failed after " + std::to_string(summary.analyzed) + " rows");
    }
    tally(summary, r);
  }
  return summary;
}

BatchSummary batch_run(const std::vector<FamilySpec>& specs, AnalysisCaps caps, std::ostream& sink,
                       OutputFormat format, int workers) {
  std::vector<LatticePolytope> all;
  for (const auto& s : specs) {
    auto members = generate(s);
    all.insert(all.end(), members.begin(), members.end());
  }
  return batch_run(all, caps, sink, format, workers);
}

std::string to_json(const BatchSummary& s) {
  auto issues = [](const std::vector<BatchIssue>& list, const char* what_key) {
    ojson a = ojson::array();
    for (const auto& i : list) {
      ojson o;
      o["name"] = i.name;
      o["vertices"] = i.vertices;
      o["seed"] = opt(i.seed);
      o[what_key] = i.what;
      if (i.lhs || i.rhs) {
        o["lhs"] = opt(i.lhs);
        o["rhs"] = opt(i.rhs);
      }
      a.push_back(std::move(o));
    }
    return a;
  };
  ojson j;
  j["analyzed"] = s.analyzed;
  j["undefined_k_P"] = s.undefined_k;
  ojson t;
  for (const auto& [id, tal] : s.tallies) {
    t[to_string(id)] = {{"holds", tal.holds}, {"fails", tal.fails}, {"NA", tal.not_applicable}};
  }
  j["bounds"] = t;
  j["violations"] = issues(s.violations, "bound");
  j["observations"] = issues(s.observations, "bound");
  j["errors"] = issues(s.errors, "error");
  return j.dump();
}

}  // namespace toricreg
