#pragma once

#include <cstdint>
#include <vector>

#include "toricreg/polytope.hpp"

namespace toricreg {

/// Numerator (h*_0, ..., h*_d) of the Ehrhart series.
struct HStarVector {
  std::vector<std::int64_t> coefficients;

  std::size_t dim() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
  std::int64_t volume() const;  ///< sum of the coefficients
  std::size_t degree() const;   ///< index of the last nonzero coefficient
  friend bool operator==(const HStarVector&, const HStarVector&) = default;
};

/// [ehr(0) = 1, ehr(1), ..., ehr(upto)] by direct enumeration.
std::vector<std::int64_t> ehrhart_counts(const LatticePolytope& p, int upto);

/// Binomial transform of ehr(0..d). Throws InvariantViolation when a
/// coefficient comes out negative or h*_0 != 1.
HStarVector h_star(const LatticePolytope& p);

/// Degree of h*, cross-checked against the interior-point characterization.
std::size_t degree(const LatticePolytope& p);

/// max(0, d + 1 - m) where m is the smallest k in [1, d] with interior
/// lattice points in kP (m = d + 1 when there is none).
std::size_t degree_from_interior_points(const LatticePolytope& p);

/// Sum of h*; for simplices also asserted equal to the determinant volume.
std::int64_t normalized_volume(const LatticePolytope& p);

/// Extends ehr(0..d) as a degree-d polynomial by finite differences and
/// compares with enumerated counts for d < k <= upto.
bool ehrhart_interpolation_consistent(const LatticePolytope& p, int upto);

/// Checks h*_0 = 1, h*_1 = |P∩M| - d - 1, h*_d = |P°∩M| and sum = Vol.
bool h_star_identities_hold(const LatticePolytope& p, const HStarVector& h);

}  // namespace toricreg
