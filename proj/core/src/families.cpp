#include "toricreg/families.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>

#include <json.hpp>

#include "toricreg/errors.hpp"

namespace toricreg {

namespace {

const std::map<std::string, std::set<std::string>>& family_keys() {
  static const std::map<std::string, std::set<std::string>> keys = {
      {"standard_simplex", {"d", "c", "l"}},
      {"dilated_simplex", {"d", "c", "l"}},
      {"rabinowitz_T", {"p", "q", "c", "l"}},
      {"bruns_gubeladze", {"s", "c", "l"}},
      {"random_hnf_simplex", {"d", "max_det", "seed", "count", "c", "l"}},
      {"pyramid_of", {}},
  };
  return keys;
}

void validate(const FamilySpec& spec) {
  const auto& keys = family_keys();
  const auto it = keys.find(spec.family);
  if (it == keys.end()) throw InvalidInput("unknown family '" + spec.family + "'");
  if (spec.family == "pyramid_of") {
    if (!spec.base) throw InvalidInput("pyramid_of needs base=<family>");
    if (*spec.base == "pyramid_of") throw InvalidInput("pyramid_of cannot nest; use l instead");
    const auto base_it = keys.find(*spec.base);
    if (base_it == keys.end()) throw InvalidInput("unknown base family '" + *spec.base + "'");
    for (const auto& [k, v] : spec.params) {
      if (!base_it->second.count(k)) throw InvalidInput("unknown key '" + k + "' for pyramid_of:" + *spec.base);
    }
    if (!spec.params.count("l")) throw InvalidInput("pyramid_of needs l");
    return;
  }
  if (spec.base) throw InvalidInput("base= is only valid for pyramid_of");
  for (const auto& [k, v] : spec.params) {
    if (!it->second.count(k)) throw InvalidInput("unknown key '" + k + "' for family " + spec.family);
  }
}

std::int64_t parse_int(std::string_view text, const std::string& key) {
  std::size_t used = 0;
  std::string s(text);
  try {
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw InvalidInput("");
    return v;
  } catch (...) {
    // seeds may exceed the signed range
    try {
      const unsigned long long u = std::stoull(s, &used);
      if (used == s.size() && key == "seed") return static_cast<std::int64_t>(u);
    } catch (...) {
    }
  }
  throw InvalidInput("value for '" + key + "' is not an integer: " + s);
}

int require_int(const FamilySpec& spec, const std::string& key, std::int64_t lo, std::int64_t hi) {
  const auto it = spec.params.find(key);
  if (it == spec.params.end()) throw InvalidInput(spec.family + " needs " + key);
  if (it->second < lo || it->second > hi) {
    throw InvalidInput(spec.family + ": " + key + "=" + std::to_string(it->second) + " out of range [" +
                       std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return static_cast<int>(it->second);
}

// Uniform integer in [0, n) by rejection, identical on every platform.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

}  // namespace

std::int64_t FamilySpec::get(const std::string& key, std::int64_t fallback) const {
  const auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

FamilySpec parse_family(std::string_view text) {
  FamilySpec spec;
  const auto colon = text.find(':');
  spec.family = std::string(text.substr(0, colon));
  if (colon != std::string_view::npos) {
    std::string_view rest = text.substr(colon + 1);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const std::string_view item = rest.substr(0, comma);
      const auto eq = item.find('=');
      if (eq == std::string_view::npos || eq == 0) throw InvalidInput("expected key=value in family spec: " + std::string(item));
      const std::string key(item.substr(0, eq));
      const std::string_view value = item.substr(eq + 1);
      if (key == "base") {
        spec.base = std::string(value);
      } else {
        if (spec.params.count(key)) throw InvalidInput("duplicate key '" + key + "'");
        spec.params[key] = parse_int(value, key);
      }
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  validate(spec);
  return spec;
}

std::vector<FamilySpec> families_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed family JSON: ") + e.what());
  }
  auto one = [](const nlohmann::json& obj) {
    if (!obj.is_object() || !obj.contains("family") || !obj["family"].is_string()) {
      throw InvalidInput("family JSON needs a string 'family' field");
    }
    FamilySpec spec;
    spec.family = obj["family"].get<std::string>();
    for (const auto& [k, v] : obj.items()) {
      if (k == "family") continue;
      if (k == "base") {
        if (!v.is_string()) throw InvalidInput("base must be a family name");
        spec.base = v.get<std::string>();
      } else if (v.is_number_unsigned() && k == "seed") {
        spec.params[k] = static_cast<std::int64_t>(v.get<std::uint64_t>());
      } else if (v.is_number_integer()) {
        spec.params[k] = v.get<std::int64_t>();
      } else {
        throw InvalidInput("family parameter '" + k + "' must be an integer");
      }
    }
    validate(spec);
    return spec;
  };
  std::vector<FamilySpec> out;
  if (j.is_array()) {
    for (const auto& item : j) out.push_back(one(item));
  } else {
    out.push_back(one(j));
  }
  return out;
}

std::string to_string(const FamilySpec& spec) {
  std::string s = spec.family;
  char sep = ':';
  if (spec.base) {
    s += sep;
    s += "base=" + *spec.base;
    sep = ',';
  }
  for (const auto& [k, v] : spec.params) {
    s += sep;
    s += k + "=" + (k == "seed" ? std::to_string(static_cast<std::uint64_t>(v)) : std::to_string(v));
    sep = ',';
  }
  return s;
}

LatticePolytope standard_simplex(int d) {
  if (d < 1) throw InvalidInput("standard_simplex needs d >= 1");
  std::vector<Point> verts{Point(static_cast<std::size_t>(d), 0)};
  for (int i = 0; i < d; ++i) {
    Point e(static_cast<std::size_t>(d), 0);
    e[static_cast<std::size_t>(i)] = 1;
    verts.push_back(std::move(e));
  }
  return LatticePolytope::from_vertices(std::move(verts), "standard_simplex:d=" + std::to_string(d));
}

LatticePolytope rabinowitz_T(int p, int q) {
  if (q == 1) {
    if (p < 1) throw InvalidInput("T_{p,1} needs p >= 1");
    return LatticePolytope::from_vertices({{0, 0}, {p, 0}, {0, 1}},
                                          "rabinowitz_T:p=" + std::to_string(p) + ",q=1");
  }
  if (q == 2 && p == 2) return LatticePolytope::from_vertices({{0, 0}, {2, 0}, {0, 2}}, "rabinowitz_T:p=2,q=2");
  throw InvalidInput("rabinowitz_T supports (p,1) and (2,2) only");
}

LatticePolytope bruns_gubeladze(int s) {
  if (s < 4) throw InvalidInput("bruns_gubeladze needs s >= 4");
  return LatticePolytope::from_vertices(
      {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, s}, {1, 1, s + 1}},
      "bruns_gubeladze:s=" + std::to_string(s));
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over seed + golden-ratio stride
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

LatticePolytope random_hnf_simplex(int d, int max_det, std::uint64_t seed) {
  if (d < 2) throw InvalidInput("random_hnf_simplex needs d >= 2");
  if (max_det < 1) throw InvalidInput("random_hnf_simplex needs max_det >= 1");
  std::mt19937_64 rng(seed);
  auto det = static_cast<Coord>(1 + bounded(rng, static_cast<std::uint64_t>(max_det)));

  // Spread the prime factors of the determinant over the diagonal.
  std::vector<Coord> pivots(static_cast<std::size_t>(d), 1);
  for (Coord f = 2; det > 1; ++f) {
    while (det % f == 0) {
      pivots[bounded(rng, static_cast<std::uint64_t>(d))] *= f;
      det /= f;
    }
  }

  std::vector<Point> verts{Point(static_cast<std::size_t>(d), 0)};
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    Point row(pivots.size(), 0);
    row[i] = pivots[i];
    for (std::size_t j = 0; j < i; ++j) row[j] = static_cast<Coord>(bounded(rng, static_cast<std::uint64_t>(pivots[j])));
    verts.push_back(std::move(row));
  }
  const std::string name = "random_hnf_simplex:d=" + std::to_string(d) + ",max_det=" + std::to_string(max_det) +
                           ",seed=" + std::to_string(seed);
  return LatticePolytope::from_vertices(std::move(verts), name, seed);
}

namespace {

// Replayable label: the spec itself, or for corpus members the spec with the
// member's own seed in place of the corpus seed and count.
std::string member_name(const FamilySpec& spec, const LatticePolytope& p) {
  if (!p.seed()) return to_string(spec);
  FamilySpec member = spec;
  member.params.erase("count");
  member.params["seed"] = static_cast<std::int64_t>(*p.seed());
  return to_string(member);
}

}  // namespace

std::vector<LatticePolytope> generate(const FamilySpec& spec) {
  validate(spec);
  if (spec.family == "pyramid_of") {
    FamilySpec base{*spec.base, spec.params, std::nullopt};
    base.params.erase("l");
    const int l = require_int(spec, "l", 0, 32);
    std::vector<LatticePolytope> out;
    for (const auto& b : generate(base)) out.push_back(pyramid(b, l).renamed(member_name(spec, b), b.seed()));
    return out;
  }

  std::vector<LatticePolytope> base;
  if (spec.family == "standard_simplex") {
    base.push_back(standard_simplex(require_int(spec, "d", 1, 64)));
  } else if (spec.family == "dilated_simplex") {
    base.push_back(standard_simplex(require_int(spec, "d", 1, 64)));
    require_int(spec, "c", 1, 1 << 20);
  } else if (spec.family == "rabinowitz_T") {
    base.push_back(rabinowitz_T(require_int(spec, "p", 1, 1 << 20), static_cast<int>(spec.get("q", 1))));
  } else if (spec.family == "bruns_gubeladze") {
    base.push_back(bruns_gubeladze(require_int(spec, "s", 4, 1 << 20)));
  } else if (spec.family == "random_hnf_simplex") {
    const int d = require_int(spec, "d", 2, 16);
    const int max_det = require_int(spec, "max_det", 1, 1 << 20);
    const auto seed = static_cast<std::uint64_t>(spec.get("seed", 0));
    const auto count = spec.get("count", 1);
    if (count < 1) throw InvalidInput("count must be positive");
    std::set<std::vector<Point>> seen;
    for (std::int64_t i = 0; i < count; ++i) {
      const std::uint64_t s = count == 1 ? seed : derive_seed(seed, static_cast<std::uint64_t>(i));
      auto p = random_hnf_simplex(d, max_det, s);
      if (seen.insert(p.vertices()).second) base.push_back(std::move(p));
    }
  }

  const int c = static_cast<int>(spec.get("c", 1));
  const int l = static_cast<int>(spec.get("l", 0));
  if (c < 1) throw InvalidInput("c must be positive");
  if (l < 0) throw InvalidInput("l must be nonnegative");
  std::vector<LatticePolytope> out;
  for (const auto& p : base) out.push_back(pyramid(dilate(p, c), l).renamed(member_name(spec, p), p.seed()));
  return out;
}

}  // namespace toricreg
