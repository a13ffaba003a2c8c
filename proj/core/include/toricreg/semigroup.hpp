#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "toricreg/geometry.hpp"
#include "toricreg/polytope.hpp"

namespace toricreg {

/// {x + y : x in a, y in b}; the result carries dilation a.dilation + b.dilation.
PointSet sumset(const PointSet& a, const PointSet& b);

/// P∩M + ... + P∩M (k summands). Memoized per (polytope, k).
PointSet k_fold_points(const LatticePolytope& p, int k);

/// The k-fold sumset covers kP∩M.
bool is_k_normal(const LatticePolytope& p, int k);

/// Smallest t with (k+1)P∩M = P∩M + kP∩M for every examined k >= t.
/// Examines k in [1, max(d-1, cap, 1)]. A failure at k >= max(d-1, 1)
/// contradicts the classical stabilization theorem and throws
/// InvariantViolation. Requires cap >= d-1.
std::optional<int> d_invariant(const LatticePolytope& p, int cap);

/// Smallest t with (k+1)P∩M = V + kP∩M for every examined k in [t, cap].
/// Exact for simplices: the scan always reaches k = d, beyond which the
/// identity holds, and t <= d is asserted. For other polytopes the scan
/// result is returned only if at least two consecutive k up to cap hold;
/// otherwise nullopt. Requires cap >= d-1.
std::optional<int> nu_invariant(const LatticePolytope& p, int cap);

struct ThresholdScan {
  std::optional<int> k_p;
  std::map<int, bool> per_k_normal;
};

/// Scans j = 1, 2, ... up to cap and stops at the first j-normal j >= d_P;
/// from there on every dilation is normal. k_P = 1 + largest failing j.
ThresholdScan scan_k_normality(const LatticePolytope& p, int cap, int d_p);

/// Requires cap >= d. nullopt when no normal j >= d_P was reached by cap.
std::optional<int> k_normality_threshold(const LatticePolytope& p, int cap);

/// k_P == 1 with the default cap.
bool is_normal(const LatticePolytope& p);

int default_k_cap(std::size_t dim);
int default_invariant_cap(std::size_t dim);

/// Pointed full-dimensional rational cone, stored by its primitive extreme rays.
class Cone {
 public:
  /// Primitivizes, drops non-extreme and repeated directions. Throws
  /// InvalidInput for a zero generator, a lower-dimensional or a
  /// non-pointed cone.
  static Cone from_generators(const std::vector<Point>& generators);

  const std::vector<Point>& rays() const { return rays_; }
  const std::vector<ConeFacet>& facets() const { return facets_; }
  std::size_t dim() const { return rays_.empty() ? 0 : rays_.front().size(); }
  bool is_simplicial() const { return rays_.size() == dim(); }
  bool contains(const Point& x) const { return in_cone(facets_, x); }

 private:
  std::vector<Point> rays_;
  std::vector<ConeFacet> facets_;
};

/// cone(P - v) for the vertex with the given index.
Cone vertex_cone(const LatticePolytope& p, std::size_t vertex_index);
/// Same, looked up by coordinates. Throws InvalidInput if v is not a vertex.
Cone vertex_cone(const LatticePolytope& p, const Point& v);

/// Nonzero lattice points of the half-open parallelepiped of a simplicial cone.
std::vector<Point> fundamental_parallelepiped_points(const Cone& c);

/// Minimal generating set of cone∩Z^d for a simplicial cone.
/// Throws InvalidInput when the cone is not simplicial.
PointSet hilbert_basis_simplicial(const Cone& c);

/// Pulling triangulation from the first ray: index sets of simplicial subcones.
std::vector<std::vector<std::size_t>> pulling_triangulation(const Cone& c);

/// Minimal generating set of cone∩Z^d for any pointed cone.
PointSet hilbert_basis(const Cone& c);

struct VeryAmpleness {
  bool very_ample = true;
  /// witnesses[i]: Hilbert basis elements h of the cone at vertex i with v_i + h outside P.
  std::vector<std::vector<Point>> witnesses;
};

VeryAmpleness is_very_ample(const LatticePolytope& p);

struct NormalityCaps {
  int k_cap = 0;          ///< 0 = default_k_cap(d)
  int invariant_cap = 0;  ///< 0 = default_invariant_cap(d)
};

struct NormalityProfile {
  std::map<int, bool> per_k_normal;
  std::optional<int> k_p;
  std::optional<int> d_p;
  std::optional<int> nu_p;
  bool very_ample = false;
  std::vector<std::vector<Point>> hilbert_witnesses;
};

NormalityProfile normality_profile(const LatticePolytope& p, NormalityCaps caps = {});

}  // namespace toricreg
