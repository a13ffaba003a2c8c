#include "toricreg/ehrhart.hpp"

#include <algorithm>
#include <string>

#include "toricreg/errors.hpp"

namespace toricreg {

std::int64_t HStarVector::volume() const {
  std::int64_t s = 0;
  for (auto c : coefficients) s += c;
  return s;
}

std::size_t HStarVector::degree() const {
  std::size_t deg = 0;
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    if (coefficients[i] != 0) deg = i;
  return deg;
}

std::vector<std::int64_t> ehrhart_counts(const LatticePolytope& p, int upto) {
  if (upto < 0) throw InvalidInput("ehrhart_counts needs upto >= 0");
  std::vector<std::int64_t> counts{1};
  for (int k = 1; k <= upto; ++k) counts.push_back(static_cast<std::int64_t>(lattice_points(p, k).size()));
  return counts;
}

namespace {

Integer binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  Integer r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

HStarVector h_star(const LatticePolytope& p) {
  const std::size_t d = p.dim();
  const auto ehr = ehrhart_counts(p, static_cast<int>(d));
  HStarVector h;
  for (std::size_t i = 0; i <= d; ++i) {
    Integer acc = 0;
    for (std::size_t j = 0; j <= i; ++j) {
      const Integer term = binomial(d + 1, j) * ehr[i - j];
      acc += (j % 2 == 0) ? term : Integer(-term);
    }
    if (acc < 0) throw InvariantViolation("negative h* coefficient " + acc.str() + " at index " + std::to_string(i));
    h.coefficients.push_back(static_cast<std::int64_t>(to_coord(acc)));
  }
  if (h.coefficients.front() != 1) throw InvariantViolation("h*_0 differs from 1");
  return h;
}

std::size_t degree_from_interior_points(const LatticePolytope& p) {
  const std::size_t d = p.dim();
  std::size_t first = d + 1;
  for (std::size_t k = 1; k <= d; ++k) {
    if (!interior_lattice_points(p, static_cast<int>(k)).empty()) {
      first = k;
      break;
    }
  }
  return d + 1 - first;
}

std::size_t degree(const LatticePolytope& p) {
  const std::size_t from_h = h_star(p).degree();
  const std::size_t from_interior = degree_from_interior_points(p);
  if (from_h != from_interior) {
    throw InvariantViolation("degree mismatch: h* gives " + std::to_string(from_h) + ", interior points give " +
                             std::to_string(from_interior));
  }
  return from_h;
}

std::int64_t normalized_volume(const LatticePolytope& p) {
  const std::int64_t vol = h_star(p).volume();
  if (is_simplex(p) && Integer(vol) != normalized_volume_simplex(p)) {
    throw InvariantViolation("h* volume disagrees with the determinant volume");
  }
  return vol;
}

bool ehrhart_interpolation_consistent(const LatticePolytope& p, int upto) {
  const auto d = static_cast<int>(p.dim());
  const auto counts = ehrhart_counts(p, std::max(upto, d));

  // Forward-difference table of the first d+1 values; the d-th difference of
  // a degree-d polynomial is constant, so extend by summing back up.
  std::vector<Integer> diffs;
  {
    std::vector<Integer> row(counts.begin(), counts.begin() + d + 1);
    for (int level = 0; level <= d; ++level) {
      diffs.push_back(row.back());
      std::vector<Integer> next;
      for (std::size_t i = 0; i + 1 < row.size(); ++i) next.push_back(row[i + 1] - row[i]);
      row = std::move(next);
    }
  }
  // diffs[level] is the last entry of the level-th difference row.
  for (int k = d + 1; k <= upto; ++k) {
    for (int level = d - 1; level >= 0; --level) diffs[level] += diffs[level + 1];
    if (diffs[0] != counts[k]) return false;
  }
  return true;
}

bool h_star_identities_hold(const LatticePolytope& p, const HStarVector& h) {
  const std::size_t d = p.dim();
  if (h.coefficients.size() != d + 1) return false;
  const auto n = static_cast<std::int64_t>(lattice_points(p, 1).size());
  const auto interior = static_cast<std::int64_t>(interior_lattice_points(p, 1).size());
  if (h.coefficients[0] != 1) return false;
  if (h.coefficients[1] != n - static_cast<std::int64_t>(d) - 1) return false;
  if (h.coefficients[d] != interior) return false;
  if (is_simplex(p) && Integer(h.volume()) != normalized_volume_simplex(p)) return false;
  return std::all_of(h.coefficients.begin(), h.coefficients.end(), [](std::int64_t c) { return c >= 0; });
}

}  // namespace toricreg
