#include "toricreg/semigroup.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <tuple>

#include "toricreg/errors.hpp"
#include "toricreg/linalg.hpp"
#include "toricreg/memo.hpp"

namespace toricreg {

PointSet sumset(const PointSet& a, const PointSet& b) {
  PointSet out;
  out.dilation = a.dilation + b.dilation;
  if (a.empty() || b.empty()) return out;
  if (a.points.front().size() != b.points.front().size()) throw InvalidInput("sumset of different dimensions");
  out.points.reserve(a.size() * b.size());
  for (const auto& x : a.points)
    for (const auto& y : b.points) out.points.push_back(add(x, y));
  std::sort(out.points.begin(), out.points.end());
  out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
  return out;
}

namespace {

using FoldKey = std::tuple<std::vector<Point>, int>;

MemoCache<FoldKey, PointSet>& fold_cache() {
  static MemoCache<FoldKey, PointSet> cache;
  return cache;
}

PointSet vertex_set(const LatticePolytope& p) {
  PointSet v{p.vertices(), 1};
  std::sort(v.points.begin(), v.points.end());
  return v;
}

}  // namespace

PointSet k_fold_points(const LatticePolytope& p, int k) {
  if (k < 1) throw InvalidInput("k_fold_points needs k >= 1");
  if (k == 1) return lattice_points(p, 1);
  return *fold_cache().get_or_compute(FoldKey{p.vertices(), k}, [&] {
    return sumset(k_fold_points(p, k - 1), lattice_points(p, 1));
  });
}

bool is_k_normal(const LatticePolytope& p, int k) {
  if (k < 1) throw InvalidInput("is_k_normal needs k >= 1");
  if (k == 1) return true;
  return k_fold_points(p, k) == lattice_points(p, k);
}

int default_k_cap(std::size_t dim) { return std::max(2 * static_cast<int>(dim), 12); }
int default_invariant_cap(std::size_t dim) { return static_cast<int>(dim) + 2; }

std::optional<int> d_invariant(const LatticePolytope& p, int cap) {
  const int d = static_cast<int>(p.dim());
  if (cap < d - 1) throw InvalidInput("d_invariant needs cap >= d-1");
  const int guaranteed = std::max(d - 1, 1);
  const int hi = std::max(guaranteed, cap);
  const auto base = lattice_points(p, 1);
  int last_fail = 0;
  for (int k = 1; k <= hi; ++k) {
    if (sumset(base, lattice_points(p, k)) != lattice_points(p, k + 1)) {
      if (k >= guaranteed) {
        throw InvariantViolation("(k+1)P∩M != P∩M + kP∩M at k=" + std::to_string(k) + " >= d-1");
      }
      last_fail = k;
    }
  }
  return last_fail + 1;
}

std::optional<int> nu_invariant(const LatticePolytope& p, int cap) {
  const int d = static_cast<int>(p.dim());
  if (cap < d - 1) throw InvalidInput("nu_invariant needs cap >= d-1");
  const bool simplex = is_simplex(p);
  // A simplex point of (k+1)P with k >= d has a barycentric coordinate >= 1,
  // so it is a vertex plus a point of kP: scanning to d settles nu_P.
  const int hi = simplex ? std::max(cap, d) : std::max(cap, 1);
  const auto verts = vertex_set(p);
  int last_fail = 0;
  for (int k = 1; k <= hi; ++k) {
    if (sumset(verts, lattice_points(p, k)) != lattice_points(p, k + 1)) last_fail = k;
  }
  const int t = last_fail + 1;
  if (simplex) {
    if (t > d) throw InvariantViolation("nu_P exceeds d for a simplex");
    return t;
  }
  if (t + 1 > hi) return std::nullopt;
  return t;
}

ThresholdScan scan_k_normality(const LatticePolytope& p, int cap, int d_p) {
  ThresholdScan scan;
  int last_fail = 0;
  for (int j = 1; j <= cap; ++j) {
    const bool normal = is_k_normal(p, j);
    scan.per_k_normal[j] = normal;
    if (!normal) {
      last_fail = j;
      continue;
    }
    if (j >= d_p) {
      scan.k_p = last_fail + 1;
      return scan;
    }
  }
  return scan;
}

std::optional<int> k_normality_threshold(const LatticePolytope& p, int cap) {
  const int d = static_cast<int>(p.dim());
  if (cap < d) throw InvalidInput("k_normality_threshold needs cap >= d");
  const auto d_p = d_invariant(p, std::max(d - 1, 1));
  return scan_k_normality(p, cap, d_p.value_or(1)).k_p;
}

bool is_normal(const LatticePolytope& p) {
  const auto k = k_normality_threshold(p, default_k_cap(p.dim()));
  return k && *k == 1;
}

Cone Cone::from_generators(const std::vector<Point>& generators) {
  if (generators.empty()) throw InvalidInput("cone needs generators");
  std::vector<Point> prim;
  for (const auto& g : generators) {
    if (std::all_of(g.begin(), g.end(), [](Coord c) { return c == 0; })) throw InvalidInput("zero cone generator");
    prim.push_back(primitive(g));
  }
  const auto facets = cone_facets(prim);
  if (!is_pointed(facets, prim.front().size())) throw InvalidInput("cone is not pointed");
  Cone c;
  for (std::size_t i : extreme_generators(prim, facets)) c.rays_.push_back(prim[i]);
  // Recompute facets so tight sets index into rays_.
  c.facets_ = cone_facets(c.rays_);
  return c;
}

Cone vertex_cone(const LatticePolytope& p, std::size_t vertex_index) {
  if (vertex_index >= p.vertices().size()) throw InvalidInput("vertex index out of range");
  const auto& v = p.vertices()[vertex_index];
  std::vector<Point> gens;
  for (std::size_t i = 0; i < p.vertices().size(); ++i) {
    if (i != vertex_index) gens.push_back(subtract(p.vertices()[i], v));
  }
  return Cone::from_generators(gens);
}

Cone vertex_cone(const LatticePolytope& p, const Point& v) {
  const auto& verts = p.vertices();
  const auto it = std::find(verts.begin(), verts.end(), v);
  if (it == verts.end()) throw InvalidInput("point is not a vertex of the polytope");
  return vertex_cone(p, static_cast<std::size_t>(it - verts.begin()));
}

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::vector<Point> parallelepiped_points(const std::vector<Point>& rays) {
  const std::size_t d = rays.size();
  const IntMatrix w = IntMatrix::from_points(rays);
  if (!w.is_square() || determinant(w) == 0) throw InvalidInput("simplicial cone rays are dependent");
  const IntMatrix wt = w.transpose();
  const IntMatrix h = hermite_normal_form(w).h;

  // The box 0 <= r_j < h_jj is a residue system of Z^d modulo the ray lattice;
  // folding each representative into [0,1)^d coordinates gives the parallelepiped.
  std::vector<Point> out;
  std::vector<Integer> r(d, 0);
  while (true) {
    RationalVector rhs(r.begin(), r.end());
    const auto lambda = solve_rational(wt, rhs);
    std::vector<Rational> frac(d);
    bool zero = true;
    for (std::size_t i = 0; i < d; ++i) {
      const Integer num = numerator((*lambda)[i]);
      const Integer den = denominator((*lambda)[i]);
      frac[i] = Rational(num - floor_div(num, den) * den, den);
      zero &= frac[i] == 0;
    }
    if (!zero) {
      Point x(d, 0);
      for (std::size_t c = 0; c < d; ++c) {
        Rational s = 0;
        for (std::size_t i = 0; i < d; ++i) s += frac[i] * Integer(rays[i][c]);
        if (denominator(s) != 1) throw InvariantViolation("parallelepiped point is not integral");
        x[c] = to_coord(numerator(s));
      }
      out.push_back(std::move(x));
    }
    std::size_t j = 0;
    while (j < d) {
      if (++r[j] < h(j, j)) break;
      r[j] = 0;
      ++j;
    }
    if (j == d) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Elements of `candidates` that are not a candidate plus a nonzero cone point.
PointSet irreducible(const std::vector<Point>& candidates, const Cone& cone) {
  PointSet out;
  for (const auto& h : candidates) {
    bool reducible = false;
    for (const auto& c : candidates) {
      if (c == h) continue;
      if (cone.contains(subtract(h, c))) {
        reducible = true;
        break;
      }
    }
    if (!reducible) out.points.push_back(h);
  }
  std::sort(out.points.begin(), out.points.end());
  out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
  return out;
}

std::vector<std::vector<std::size_t>> triangulate_face(const Cone& cone, const std::vector<std::size_t>& face,
                                                       std::size_t face_rank) {
  if (face.size() == face_rank) return {face};
  const std::size_t apex = face.front();
  std::set<std::vector<std::size_t>> subfacets;
  for (const auto& f : cone.facets()) {
    std::vector<std::size_t> meet;
    std::set_intersection(face.begin(), face.end(), f.tight.begin(), f.tight.end(), std::back_inserter(meet));
    if (meet.empty() || std::binary_search(meet.begin(), meet.end(), apex)) continue;
    std::vector<Point> rows;
    for (std::size_t i : meet) rows.push_back(cone.rays()[i]);
    if (rank(IntMatrix::from_points(rows)) == face_rank - 1) subfacets.insert(meet);
  }
  std::vector<std::vector<std::size_t>> out;
  for (const auto& sub : subfacets) {
    for (auto simplex : triangulate_face(cone, sub, face_rank - 1)) {
      simplex.insert(simplex.begin(), apex);
      std::sort(simplex.begin(), simplex.end());
      out.push_back(std::move(simplex));
    }
  }
  return out;
}

}  // namespace

std::vector<Point> fundamental_parallelepiped_points(const Cone& c) {
  if (!c.is_simplicial()) throw InvalidInput("cone is not simplicial");
  return parallelepiped_points(c.rays());
}

PointSet hilbert_basis_simplicial(const Cone& c) {
  if (!c.is_simplicial()) throw InvalidInput("cone is not simplicial");
  auto candidates = parallelepiped_points(c.rays());
  candidates.insert(candidates.end(), c.rays().begin(), c.rays().end());
  return irreducible(candidates, c);
}

std::vector<std::vector<std::size_t>> pulling_triangulation(const Cone& c) {
  std::vector<std::size_t> all(c.rays().size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return triangulate_face(c, all, c.dim());
}

PointSet hilbert_basis(const Cone& c) {
  if (c.is_simplicial()) return hilbert_basis_simplicial(c);
  std::vector<Point> candidates(c.rays());
  for (const auto& simplex : pulling_triangulation(c)) {
    std::vector<Point> rays;
    for (std::size_t i : simplex) rays.push_back(c.rays()[i]);
    const auto pts = parallelepiped_points(rays);
    candidates.insert(candidates.end(), pts.begin(), pts.end());
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  return irreducible(candidates, c);
}

VeryAmpleness is_very_ample(const LatticePolytope& p) {
  VeryAmpleness out;
  const auto pts = lattice_points(p, 1);
  for (std::size_t i = 0; i < p.vertices().size(); ++i) {
    const auto& v = p.vertices()[i];
    std::vector<Point> bad;
    for (const auto& h : hilbert_basis(vertex_cone(p, i)).points) {
      if (!pts.contains(add(v, h))) bad.push_back(h);
    }
    out.very_ample &= bad.empty();
    out.witnesses.push_back(std::move(bad));
  }
  return out;
}

NormalityProfile normality_profile(const LatticePolytope& p, NormalityCaps caps) {
  const int d = static_cast<int>(p.dim());
  const int k_cap = caps.k_cap > 0 ? caps.k_cap : default_k_cap(p.dim());
  const int inv_cap = caps.invariant_cap > 0 ? caps.invariant_cap : default_invariant_cap(p.dim());
  if (k_cap < d) throw InvalidInput("k cap must be at least the dimension");
  if (inv_cap < d - 1) throw InvalidInput("invariant cap must be at least d-1");

  NormalityProfile prof;
  prof.d_p = d_invariant(p, inv_cap);
  prof.nu_p = nu_invariant(p, inv_cap);
  auto scan = scan_k_normality(p, k_cap, prof.d_p.value_or(1));
  prof.k_p = scan.k_p;
  prof.per_k_normal = std::move(scan.per_k_normal);
  auto va = is_very_ample(p);
  prof.very_ample = va.very_ample;
  prof.hilbert_witnesses = std::move(va.witnesses);
  return prof;
}

}  // namespace toricreg
