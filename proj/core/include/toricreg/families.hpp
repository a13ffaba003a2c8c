#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toricreg/polytope.hpp"

namespace toricreg {

/// A named polytope family with integer parameters, e.g. the inline form
/// `bruns_gubeladze:s=4,l=1` or `pyramid_of:base=rabinowitz_T,p=2,q=2,l=2`.
///
/// Families and their keys:
///   standard_simplex    d
///   dilated_simplex     d, c
///   rabinowitz_T        p, q      (q=1: T_{p,1}; q=2 requires p=2: T_{2,2})
///   bruns_gubeladze     s         (s >= 4)
///   pyramid_of          base=<family>, l, plus the base family's keys
///   random_hnf_simplex  d, max_det, seed, count
/// Every family also accepts c (dilate) and l (l-fold pyramid), applied in
/// that order.
struct FamilySpec {
  std::string family;
  std::map<std::string, std::int64_t> params;
  std::optional<std::string> base;

  std::int64_t get(const std::string& key, std::int64_t fallback) const;
  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Parses `name:key=val,key=val`. Unknown families or keys are InvalidInput.
FamilySpec parse_family(std::string_view text);
/// Parses one JSON object {"family": ..., key: int, ...} or an array of them.
std::vector<FamilySpec> families_from_json(std::string_view text);
/// Canonical inline form (keys sorted; base first).
std::string to_string(const FamilySpec& spec);

LatticePolytope standard_simplex(int d);
/// q = 1 gives conv(0, (p,0), (0,1)); q = 2 (with p = 2) gives conv(0, (2,0), (0,2)).
LatticePolytope rabinowitz_T(int p, int q);
LatticePolytope bruns_gubeladze(int s);
/// conv(0, rows of a random lower-triangular Hermite normal form with
/// determinant in [1, max_det]). Deterministic in the seed.
LatticePolytope random_hnf_simplex(int d, int max_det, std::uint64_t seed);

/// Seed of the i-th member of a random corpus drawn with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

std::vector<LatticePolytope> generate(const FamilySpec& spec);

}  // namespace toricreg
