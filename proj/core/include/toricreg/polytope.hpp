#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toricreg/integer.hpp"

namespace toricreg {

/// normal . x <= offset
struct Halfspace {
  Point normal;  // primitive
  Coord offset;
  friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

struct HalfspaceRep {
  std::vector<Halfspace> facets;
};

/// Lattice points in lexicographic order, together with the dilation factor
/// (or Minkowski multiplicity) they were computed for.
struct PointSet {
  std::vector<Point> points;
  int dilation = 1;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
  bool contains(const Point& p) const;
  friend bool operator==(const PointSet& a, const PointSet& b) { return a.points == b.points; }
};

/// Full-dimensional lattice polytope given by its vertices. Immutable; copies
/// share the derived H-representation.
class LatticePolytope {
 public:
  /// Validates and builds. Throws InvalidInput when the list is empty or
  /// ragged, has duplicates, is not full-dimensional, or contains a point
  /// that is not a vertex of the hull.
  static LatticePolytope from_vertices(std::vector<Point> vertices, std::string name = {},
                                       std::optional<std::uint64_t> seed = std::nullopt);

  std::size_t dim() const { return data_->dim; }
  const std::vector<Point>& vertices() const { return data_->vertices; }
  const std::string& name() const { return data_->name; }
  std::optional<std::uint64_t> seed() const { return data_->seed; }
  const HalfspaceRep& halfspaces() const { return data_->hrep; }

  /// Same geometry under a different label.
  LatticePolytope renamed(std::string name, std::optional<std::uint64_t> seed = std::nullopt) const;

  /// Cache key shared by all dilations: vertices divided by their common gcd.
  const std::vector<Point>& primitive_key() const { return data_->key; }
  Coord key_scale() const { return data_->key_scale; }

 private:
  struct Data {
    std::size_t dim = 0;
    std::vector<Point> vertices;
    std::string name;
    std::optional<std::uint64_t> seed;
    HalfspaceRep hrep;
    std::vector<Point> key;
    Coord key_scale = 1;
  };
  explicit LatticePolytope(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

HalfspaceRep facet_inequalities(const LatticePolytope& p);

/// Integer points of kP. Memoized per (polytope, k); dilations share entries.
PointSet lattice_points(const LatticePolytope& p, int k);

/// Integer points of the interior of kP.
PointSet interior_lattice_points(const LatticePolytope& p, int k);

bool is_hollow(const LatticePolytope& p);
bool is_fano(const LatticePolytope& p);
bool is_simplex(const LatticePolytope& p);

/// |det(v_1 - v_0, ..., v_d - v_0)|. Throws InvalidInput for a non-simplex.
Integer normalized_volume_simplex(const LatticePolytope& p);

/// l-fold standard pyramid conv(0, B x {1}), applied recursively.
LatticePolytope pyramid(const LatticePolytope& p, int l);

LatticePolytope dilate(const LatticePolytope& p, int c);

/// Coordinates lambda with x = sum lambda_i v_i and sum lambda_i = level,
/// i.e. barycentric coordinates of x in level * simplex.
std::vector<Rational> barycentric(const LatticePolytope& simplex, const Point& x, int level = 1);

/// {"name": ..., "dim": ..., "vertices": [[...], ...]}
std::string to_json(const LatticePolytope& p);
/// Accepts one polytope object or an array of them.
std::vector<LatticePolytope> polytopes_from_json(std::string_view text);
LatticePolytope polytope_from_json(std::string_view text);

}  // namespace toricreg
