#include "toricreg/polytope.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include <json.hpp>

#include "toricreg/errors.hpp"
#include "toricreg/geometry.hpp"
#include "toricreg/linalg.hpp"
#include "toricreg/memo.hpp"

namespace toricreg {

bool PointSet::contains(const Point& p) const { return std::binary_search(points.begin(), points.end(), p); }

LatticePolytope LatticePolytope::from_vertices(std::vector<Point> vertices, std::string name,
                                               std::optional<std::uint64_t> seed) {
  if (vertices.empty()) throw InvalidInput("polytope needs at least one vertex");
  const std::size_t d = vertices.front().size();
  if (d == 0) throw InvalidInput("polytope dimension must be positive");
  for (const auto& v : vertices) {
    if (v.size() != d) throw InvalidInput("vertices have inconsistent dimensions");
  }
  if (std::set<Point>(vertices.begin(), vertices.end()).size() != vertices.size()) {
    throw InvalidInput("duplicate vertex");
  }
  if (vertices.size() < d + 1) throw InvalidInput("fewer than d+1 vertices: not full-dimensional");

  std::vector<Point> lifted;
  lifted.reserve(vertices.size());
  for (const auto& v : vertices) {
    Point w = v;
    w.push_back(1);
    lifted.push_back(std::move(w));
  }
  std::vector<ConeFacet> facets;
  try {
    facets = cone_facets(lifted);
  } catch (const InvalidInput&) {
    throw InvalidInput("vertices are not full-dimensional");
  }
  if (extreme_generators(lifted, facets).size() != vertices.size()) {
    throw InvalidInput("vertex list is redundant: some point is not a vertex of the hull");
  }

  auto data = std::make_shared<Data>();
  data->dim = d;
  data->name = std::move(name);
  data->seed = seed;
  for (const auto& f : facets) {
    Point normal(f.normal.begin(), f.normal.end() - 1);
    // Facet normal (a, b) with a.v + b >= 0 becomes (-a).x <= b.
    data->hrep.facets.push_back({scale(normal, -1), f.normal.back()});
  }

  Coord g = 0;
  for (const auto& v : vertices)
    for (Coord c : v) g = std::gcd(g, c < 0 ? -c : c);
  data->key_scale = g == 0 ? 1 : g;
  for (const auto& v : vertices) {
    Point k(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) k[i] = v[i] / data->key_scale;
    data->key.push_back(std::move(k));
  }
  data->vertices = std::move(vertices);
  return LatticePolytope(std::move(data));
}

LatticePolytope LatticePolytope::renamed(std::string name, std::optional<std::uint64_t> seed) const {
  auto copy = std::make_shared<Data>(*data_);
  copy->name = std::move(name);
  copy->seed = seed;
  return LatticePolytope(std::move(copy));
}

HalfspaceRep facet_inequalities(const LatticePolytope& p) { return p.halfspaces(); }

namespace {

Coord floor_div(Coord a, Coord b) {
  Coord q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Coord ceil_div(Coord a, Coord b) { return -floor_div(-a, b); }

// Enumerates {x : normal . x <= k*offset - slack} inside the bounding box of kP.
// Each coordinate's range is narrowed by the box relaxation of the remaining
// coordinates, so the scan visits few points outside the polytope.
class BoxScanner {
 public:
  BoxScanner(const LatticePolytope& p, Coord k, Coord slack) : d_(p.dim()) {
    const auto& facets = p.halfspaces().facets;
    lo_.assign(d_, 0);
    hi_.assign(d_, 0);
    for (std::size_t j = 0; j < d_; ++j) {
      Coord mn = p.vertices().front()[j];
      Coord mx = mn;
      for (const auto& v : p.vertices()) {
        mn = std::min(mn, v[j]);
        mx = std::max(mx, v[j]);
      }
      lo_[j] = mn;
      hi_[j] = mx;
    }

    // Reject scans whose sums could leave the 64-bit range.
    Integer bound = 0;
    for (std::size_t j = 0; j < d_; ++j) bound = std::max(bound, Integer(std::max(-lo_[j], hi_[j])));
    bound *= k;
    for (const auto& f : facets) {
      Integer row = 0;
      for (Coord a : f.normal) row += Integer(a < 0 ? -a : a);
      const Integer off = Integer(f.offset < 0 ? -f.offset : f.offset) * k + slack;
      if (row * bound + off > Integer(1) << 61) throw OverflowError("lattice point scan exceeds coordinate range");
    }
    for (std::size_t j = 0; j < d_; ++j) {
      lo_[j] *= k;
      hi_[j] *= k;
    }

    for (const auto& f : facets) {
      normals_.push_back(f.normal);
      rhs_.push_back(k * f.offset - slack);
    }
    // suffix_min_[f][j] = min over the box of sum_{i >= j} a_fi x_i.
    suffix_min_.assign(normals_.size(), std::vector<Coord>(d_ + 1, 0));
    for (std::size_t f = 0; f < normals_.size(); ++f) {
      for (std::size_t j = d_; j-- > 0;) {
        const Coord a = normals_[f][j];
        suffix_min_[f][j] = suffix_min_[f][j + 1] + std::min(a * lo_[j], a * hi_[j]);
      }
    }
  }

  std::vector<Point> run() {
    std::vector<Point> out;
    Point x(d_, 0);
    std::vector<Coord> partial(normals_.size(), 0);
    recurse(0, x, partial, out);
    return out;
  }

 private:
  void recurse(std::size_t j, Point& x, std::vector<Coord>& partial, std::vector<Point>& out) const {
    Coord from = lo_[j];
    Coord to = hi_[j];
    for (std::size_t f = 0; f < normals_.size(); ++f) {
      const Coord a = normals_[f][j];
      const Coord room = rhs_[f] - partial[f] - suffix_min_[f][j + 1];
      if (a > 0) {
        to = std::min(to, floor_div(room, a));
      } else if (a < 0) {
        from = std::max(from, ceil_div(room, a));
      } else if (room < 0) {
        return;
      }
    }
    for (Coord v = from; v <= to; ++v) {
      x[j] = v;
      if (j + 1 == d_) {
        out.push_back(x);
        continue;
      }
      for (std::size_t f = 0; f < normals_.size(); ++f) partial[f] += normals_[f][j] * v;
      recurse(j + 1, x, partial, out);
      for (std::size_t f = 0; f < normals_.size(); ++f) partial[f] -= normals_[f][j] * v;
    }
  }

  std::size_t d_;
  Point lo_, hi_;
  std::vector<Point> normals_;
  std::vector<Coord> rhs_;
  std::vector<std::vector<Coord>> suffix_min_;
};

using PointCacheKey = std::tuple<std::vector<Point>, Coord, Coord>;

MemoCache<PointCacheKey, std::vector<Point>>& point_cache() {
  static MemoCache<PointCacheKey, std::vector<Point>> cache;
  return cache;
}

PointSet scan(const LatticePolytope& p, int k, Coord slack) {
  if (k < 1) throw InvalidInput("dilation factor must be positive");
  PointCacheKey key{p.primitive_key(), static_cast<Coord>(k) * p.key_scale(), slack};
  auto pts = point_cache().get_or_compute(key, [&] { return BoxScanner(p, k, slack).run(); });
  return PointSet{*pts, k};
}

}  // namespace

PointSet lattice_points(const LatticePolytope& p, int k) { return scan(p, k, 0); }

PointSet interior_lattice_points(const LatticePolytope& p, int k) { return scan(p, k, 1); }

bool is_hollow(const LatticePolytope& p) { return interior_lattice_points(p, 1).empty(); }

bool is_fano(const LatticePolytope& p) {
  const auto interior = interior_lattice_points(p, 1);
  if (interior.size() != 1) return false;
  if (std::any_of(interior.points.front().begin(), interior.points.front().end(), [](Coord c) { return c != 0; })) {
    return false;
  }
  for (const auto& v : p.vertices()) {
    Coord g = 0;
    for (Coord c : v) g = std::gcd(g, c < 0 ? -c : c);
    if (g != 1) return false;
  }
  return true;
}

bool is_simplex(const LatticePolytope& p) { return p.vertices().size() == p.dim() + 1; }

namespace {

IntMatrix edge_matrix(const LatticePolytope& p) {
  // Column c holds v_{c+1} - v_0.
  const auto& v = p.vertices();
  IntMatrix e(p.dim(), p.dim());
  for (std::size_t c = 0; c < p.dim(); ++c)
    for (std::size_t r = 0; r < p.dim(); ++r) e(r, c) = Integer(v[c + 1][r]) - v[0][r];
  return e;
}

}  // namespace

Integer normalized_volume_simplex(const LatticePolytope& p) {
  if (!is_simplex(p)) throw InvalidInput("normalized_volume_simplex called on a non-simplex");
  return abs(determinant(edge_matrix(p)));
}

std::vector<Rational> barycentric(const LatticePolytope& simplex, const Point& x, int level) {
  if (!is_simplex(simplex)) throw InvalidInput("barycentric coordinates need a simplex");
  if (x.size() != simplex.dim()) throw InvalidInput("point dimension mismatch");
  RationalVector rhs(simplex.dim());
  for (std::size_t r = 0; r < simplex.dim(); ++r) rhs[r] = Rational(Integer(x[r]) - Integer(simplex.vertices()[0][r]) * level);
  const auto sol = solve_rational(edge_matrix(simplex), rhs);
  if (!sol) throw InvariantViolation("simplex edge matrix is singular");
  std::vector<Rational> lambda(simplex.dim() + 1);
  Rational rest = level;
  for (std::size_t i = 0; i < sol->size(); ++i) {
    lambda[i + 1] = (*sol)[i];
    rest -= (*sol)[i];
  }
  lambda[0] = rest;
  return lambda;
}

LatticePolytope pyramid(const LatticePolytope& p, int l) {
  if (l < 0) throw InvalidInput("pyramid height must be nonnegative");
  LatticePolytope current = p;
  for (int step = 0; step < l; ++step) {
    std::vector<Point> verts;
    verts.emplace_back(current.dim() + 1, 0);
    for (const auto& v : current.vertices()) {
      Point w = v;
      w.push_back(1);
      verts.push_back(std::move(w));
    }
    current = LatticePolytope::from_vertices(std::move(verts), current.name());
  }
  if (l == 0) return p;
  return current.renamed("pyr" + std::to_string(l) + "(" + p.name() + ")", p.seed());
}

LatticePolytope dilate(const LatticePolytope& p, int c) {
  if (c < 1) throw InvalidInput("dilation factor must be positive");
  if (c == 1) return p;
  std::vector<Point> verts;
  for (const auto& v : p.vertices()) verts.push_back(scale(v, c));
  return LatticePolytope::from_vertices(std::move(verts), std::to_string(c) + "*" + p.name(), p.seed());
}

std::string to_json(const LatticePolytope& p) {
  nlohmann::ordered_json j;
  j["name"] = p.name();
  j["dim"] = p.dim();
  j["vertices"] = p.vertices();
  return j.dump();
}

namespace {

LatticePolytope parse_one(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidInput("polytope JSON must be an object");
  if (!j.contains("vertices") || !j["vertices"].is_array()) throw InvalidInput("polytope JSON lacks a vertices array");
  std::vector<Point> verts;
  for (const auto& row : j["vertices"]) {
    if (!row.is_array()) throw InvalidInput("each vertex must be an array of integers");
    Point v;
    for (const auto& c : row) {
      if (!c.is_number_integer()) throw InvalidInput("vertex coordinates must be integers");
      v.push_back(c.get<Coord>());
    }
    verts.push_back(std::move(v));
  }
  std::string name = j.value("name", std::string{});
  if (j.contains("dim")) {
    if (!j["dim"].is_number_integer()) throw InvalidInput("dim must be an integer");
    const auto dim = j["dim"].get<long long>();
    if (verts.empty() || static_cast<long long>(verts.front().size()) != dim) {
      throw InvalidInput("dim does not match vertex length");
    }
  }
  std::optional<std::uint64_t> seed;
  if (j.contains("seed") && j["seed"].is_number_unsigned()) seed = j["seed"].get<std::uint64_t>();
  return LatticePolytope::from_vertices(std::move(verts), std::move(name), seed);
}

}  // namespace

std::vector<LatticePolytope> polytopes_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed polytope JSON: ") + e.what());
  }
  std::vector<LatticePolytope> out;
  if (j.is_array()) {
    for (const auto& item : j) out.push_back(parse_one(item));
  } else {
    out.push_back(parse_one(j));
  }
  return out;
}

LatticePolytope polytope_from_json(std::string_view text) {
  auto all = polytopes_from_json(text);
  if (all.size() != 1) throw InvalidInput("expected exactly one polytope");
  return all.front();
}

}  // namespace toricreg
