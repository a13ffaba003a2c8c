#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "toricreg/certificates.hpp"
#include "toricreg/errors.hpp"
#include "toricreg/families.hpp"
#include "toricreg/report.hpp"
#include "toricreg/semigroup.hpp"

namespace toricreg::cli {

namespace {

using ojson = nlohmann::ordered_json;

struct Options {
  std::string file;
  std::vector<std::string> families;
  std::string spec_file;
  std::string format = "json";
  std::string output;
  int k_cap = 0;
  int invariant_cap = 0;
  std::uint64_t budget = SearchBudget{}.max_nodes;
  int workers = 1;
  int k = 1;
  std::string x;
  std::string a;
  int vertex = -1;
  std::string rays;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Coord> parse_coords(const std::string& text, const char* what) {
  std::vector<Coord> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidInput(std::string("bad integer list for ") + what + ": " + text);
    }
  }
  if (out.empty()) throw InvalidInput(std::string("empty integer list for ") + what);
  return out;
}

std::vector<LatticePolytope> load_inputs(const Options& o, std::ostream& err) {
  std::vector<LatticePolytope> out;
  if (!o.file.empty()) {
    auto ps = polytopes_from_json(read_file(o.file));
    out.insert(out.end(), ps.begin(), ps.end());
  }
  for (const auto& f : o.families) {
    const auto spec = parse_family(f);
    if (spec.params.count("seed")) err << "seed: " << static_cast<std::uint64_t>(spec.params.at("seed")) << '\n';
    auto ps = generate(spec);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  if (out.empty()) throw InvalidInput("no input: give --file or --family");
  return out;
}

AnalysisCaps caps_of(const Options& o) {
  if (o.k_cap < 0 || o.invariant_cap < 0) throw InvalidInput("caps must be nonnegative");
  return {o.k_cap, o.invariant_cap};
}


void human_from_json(std::ostream& out, const std::string& text) {
  const auto j = ojson::parse(text);
  for (const auto& [key, value] : j.items()) {
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
}

int cmd_analyze(const Options& o, std::ostream& out, std::ostream& err, bool bounds_only) {
  const auto fmt = parse_format(o.format);
  const auto inputs = load_inputs(o, err);
  bool undefined = false;
  if (fmt == OutputFormat::csv) out << csv_header() << '\n';
  for (const auto& p : inputs) {
    const auto r = analyze(p, caps_of(o));
    undefined |= !r.k_p;
    switch (fmt) {
      case OutputFormat::json:
        out << (bounds_only ? bounds_to_json(r) : to_json(r)) << '\n';
        break;
      case OutputFormat::csv:
        out << to_csv_row(r) << '\n';
        break;
      case OutputFormat::human:
        if (bounds_only) {
          human_from_json(out, bounds_to_json(r));
        } else {
          out << to_human(r);
        }
        out << '\n';
        break;
    }
  }
  if (undefined) {
    err << "k_P not reached within the k cap; dependent fields are null\n";
    return kInconclusive;
  }
  return kSuccess;
}

int cmd_knormality(const Options& o, std::ostream& out, std::ostream& err) {
  const auto fmt = parse_format(o.format);
  if (fmt == OutputFormat::csv) throw InvalidInput("knormality supports json and human output");
  bool undefined = false;
  for (const auto& p : load_inputs(o, err)) {
    const auto prof = normality_profile(p, caps_of(o));
    undefined |= !prof.k_p;
    ojson j;
    j["name"] = p.name();
    j["d_P"] = prof.d_p ? ojson(*prof.d_p) : ojson(nullptr);
    j["nu_P"] = prof.nu_p ? ojson(*prof.nu_p) : ojson(nullptr);
    j["k_P"] = prof.k_p ? ojson(*prof.k_p) : ojson(nullptr);
    ojson per = ojson::object();
    for (const auto& [k, v] : prof.per_k_normal) per[std::to_string(k)] = v;
    j["per_k_normal"] = per;
    j["very_ample"] = prof.very_ample;
    j["hilbert_witnesses"] = prof.hilbert_witnesses;
    if (fmt == OutputFormat::json) {
      out << j.dump() << '\n';
    } else {
      human_from_json(out, j.dump());
      out << '\n';
    }
  }
  return undefined ? kInconclusive : kSuccess;
}

int cmd_hilbert(const Options& o, std::ostream& out, std::ostream& err) {
  const auto fmt = parse_format(o.format);
  if (fmt == OutputFormat::csv) throw InvalidInput("hilbert supports json and human output");
  std::vector<std::string> docs;
  if (!o.rays.empty()) {
    std::vector<Point> gens;
    std::stringstream ss(o.rays);
    std::string item;
    while (std::getline(ss, item, ';')) gens.push_back(parse_coords(item, "--rays"));
    const auto cone = Cone::from_generators(gens);
    ojson j;
    j["rays"] = cone.rays();
    j["simplicial"] = cone.is_simplicial();
    j["hilbert_basis"] = hilbert_basis(cone).points;
    docs.push_back(j.dump());
  } else {
    for (const auto& p : load_inputs(o, err)) {
      const auto pts = lattice_points(p, 1);
      ojson j;
      j["name"] = p.name();
      ojson cones = ojson::array();
      bool very_ample = true;
      for (std::size_t i = 0; i < p.vertices().size(); ++i) {
        if (o.vertex >= 0 && static_cast<std::size_t>(o.vertex) != i) continue;
        const auto cone = vertex_cone(p, i);
        const auto hb = hilbert_basis(cone);
        std::vector<Point> bad;
        for (const auto& h : hb.points)
          if (!pts.contains(add(p.vertices()[i], h))) bad.push_back(h);
        very_ample &= bad.empty();
        cones.push_back({{"vertex", p.vertices()[i]},
                         {"rays", cone.rays()},
                         {"hilbert_basis", hb.points},
                         {"witnesses", bad}});
      }
      if (o.vertex >= 0 && static_cast<std::size_t>(o.vertex) >= p.vertices().size()) {
        throw InvalidInput("--vertex out of range");
      }
      j["cones"] = cones;
      j[o.vertex >= 0 ? "very_ample_at_vertex" : "very_ample"] = very_ample;
      docs.push_back(j.dump());
    }
  }
  for (const auto& d : docs) {
    if (fmt == OutputFormat::json) {
      out << d << '\n';
    } else {
      human_from_json(out, d);
      out << '\n';
    }
  }
  return kSuccess;
}

int cmd_decompose(const Options& o, std::ostream& out, std::ostream& err) {
  const auto fmt = parse_format(o.format);
  if (fmt == OutputFormat::csv) throw InvalidInput("decompose supports json and human output");
  const auto inputs = load_inputs(o, err);
  if (inputs.size() != 1) throw InvalidInput("decompose takes exactly one polytope");
  const auto& p = inputs.front();
  if (!is_simplex(p)) throw InvalidInput("decompose needs a simplex");
  if (!is_very_ample(p).very_ample) throw InvalidInput("decompose needs a very ample simplex");
  if (o.x.empty()) throw InvalidInput("decompose needs --x");
  const Point x = parse_coords(o.x, "--x");
  const SearchBudget budget{o.budget};

  DecompositionResult result;
  if (!o.a.empty()) {
    std::vector<int> weights;
    for (Coord c : parse_coords(o.a, "--a")) weights.push_back(static_cast<int>(c));
    result = weighted_decompose(p, x, weights, o.k, budget);
  } else {
    if (o.vertex < 0) throw InvalidInput("decompose needs --a or --vertex");
    result = ogata_decompose(p, x, static_cast<std::size_t>(o.vertex), o.k, budget);
  }
  const auto doc = to_json(result);
  if (fmt == OutputFormat::json) {
    out << doc << '\n';
  } else {
    human_from_json(out, doc);
  }
  switch (result.status) {
    case SearchStatus::found:
      return kSuccess;
    case SearchStatus::inconclusive:
      err << "search budget of " << o.budget << " nodes exhausted\n";
      return kInconclusive;
    case SearchStatus::exhausted:
      err << "complete search found no decomposition for a very ample simplex\n";
      return kInternal;
  }
  return kInternal;
}

int cmd_generate(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.families.empty()) throw InvalidInput("generate needs --family");
  if (!o.file.empty()) throw InvalidInput("generate does not read --file");
  const auto fmt = parse_format(o.format);
  if (fmt == OutputFormat::csv) throw InvalidInput("generate supports json and human output");
  const auto ps = load_inputs(o, err);
  if (fmt == OutputFormat::human) {
    for (const auto& p : ps) {
      human_from_json(out, to_json(p));
      out << '\n';
    }
    return kSuccess;
  }
  if (ps.size() == 1) {
    out << to_json(ps.front()) << '\n';
    return kSuccess;
  }
  ojson arr = ojson::array();
  for (const auto& p : ps) arr.push_back(ojson::parse(to_json(p)));
  out << arr.dump() << '\n';
  return kSuccess;
}

int cmd_batch(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<FamilySpec> specs;
  if (!o.spec_file.empty()) specs = families_from_json(read_file(o.spec_file));
  for (const auto& f : o.families) specs.push_back(parse_family(f));
  for (const auto& s : specs) {
    if (s.params.count("seed")) err << "seed: " << static_cast<std::uint64_t>(s.params.at("seed")) << '\n';
  }
  std::vector<LatticePolytope> polys;
  if (!o.file.empty()) polys = polytopes_from_json(read_file(o.file));
  for (const auto& s : specs) {
    auto g = generate(s);
    polys.insert(polys.end(), g.begin(), g.end());
  }
  if (o.workers < 1) throw InvalidInput("--workers must be positive");
  const auto summary = batch_run(polys, caps_of(o), out, parse_format(o.format), o.workers);
  err << to_json(summary) << '\n';
  if (!summary.errors.empty() || !summary.violations.empty()) return kInternal;
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lattice polytope invariants: k-normality, Ehrhart h*, regularity bounds"};
  app.require_subcommand(1, 1);
  Options o;

  auto input_opts = [&o](CLI::App* sub) {
    sub->add_option("--file", o.file, "polytope JSON file (object or array)");
    sub->add_option("--family", o.families,
                    "inline family spec name:key=val,... (standard_simplex d | dilated_simplex d,c | "
                    "rabinowitz_T p,q | bruns_gubeladze s | pyramid_of base,l,... | "
                    "random_hnf_simplex d,max_det,seed,count; any family also takes c and l)");
    sub->add_option("--format", o.format, "json | csv | human")->capture_default_str();
    sub->add_option("--output", o.output, "write data to this file instead of stdout");
  };
  auto cap_opts = [&o](CLI::App* sub) {
    sub->add_option("--k-cap", o.k_cap, "largest dilation scanned for k_P (default max(2d,12))");
    sub->add_option("--invariant-cap", o.invariant_cap, "largest k examined for d_P and nu_P (default d+2)");
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "all invariants and bound checks");
  input_opts(analyze_cmd);
  cap_opts(analyze_cmd);
  auto* bounds_cmd = app.add_subcommand("bounds", "bound checks only");
  input_opts(bounds_cmd);
  cap_opts(bounds_cmd);
  auto* knorm_cmd = app.add_subcommand("knormality", "k_P, d_P, nu_P and very-ampleness");
  input_opts(knorm_cmd);
  cap_opts(knorm_cmd);
  auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert bases of vertex cones, or of --rays");
  input_opts(hilbert_cmd);
  hilbert_cmd->add_option("--vertex", o.vertex, "restrict to one vertex index");
  hilbert_cmd->add_option("--rays", o.rays, "cone generators, e.g. 1,0;1,2");
  auto* decompose_cmd = app.add_subcommand("decompose", "2k-1 term decomposition certificate");
  input_opts(decompose_cmd);
  decompose_cmd->add_option("--k", o.k, "dilation factor")->capture_default_str();
  decompose_cmd->add_option("--x", o.x, "point of kP, comma separated");
  decompose_cmd->add_option("--a", o.a, "vertex weights summing to k-1 (weighted form)");
  decompose_cmd->add_option("--vertex", o.vertex, "vertex index (plain form)");
  decompose_cmd->add_option("--budget", o.budget, "search node budget")->capture_default_str();
  auto* generate_cmd = app.add_subcommand("generate", "polytope JSON for a family");
  input_opts(generate_cmd);
  auto* batch_cmd = app.add_subcommand("batch", "analyze corpora; rows to output, summary to stderr");
  input_opts(batch_cmd);
  cap_opts(batch_cmd);
  batch_cmd->add_option("--spec", o.spec_file, "JSON list of family specs");
  batch_cmd->add_option("--workers", o.workers, "analysis threads")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  std::ofstream file_out;
  std::ostream* data = &out;
  if (!o.output.empty()) {
    file_out.open(o.output);
    if (!file_out) {
      err << "error: cannot open " << o.output << '\n';
      return kUsage;
    }
    data = &file_out;
  }

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(o, *data, err, false);
    if (bounds_cmd->parsed()) return cmd_analyze(o, *data, err, true);
    if (knorm_cmd->parsed()) return cmd_knormality(o, *data, err);
    if (hilbert_cmd->parsed()) return cmd_hilbert(o, *data, err);
    if (decompose_cmd->parsed()) return cmd_decompose(o, *data, err);
    if (generate_cmd->parsed()) return cmd_generate(o, *data, err);
    if (batch_cmd->parsed()) return cmd_batch(o, *data, err);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Inconclusive& e) {
    err << "inconclusive: " << e.what() << '\n';
    return kInconclusive;
  } catch (const InvariantViolation& e) {
    err << "internal invariant violated: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace toricreg::cli
