#pragma once

#include <cstddef>
#include <vector>

#include "toricreg/integer.hpp"

namespace toricreg {

/// A facet of a full-dimensional cone: normal . x >= 0 on the cone,
/// with the indices of the generators lying on the facet.
struct ConeFacet {
  Point normal;                    // primitive, inward
  std::vector<std::size_t> tight;  // sorted generator indices with normal . g == 0
};

/// Facets of cone(generators) by scanning every (n-1)-subset of generators
/// that spans a hyperplane with all generators weakly on one side.
/// Throws InvalidInput unless the generators span the whole space.
std::vector<ConeFacet> cone_facets(const std::vector<Point>& generators);

/// Generators whose tight facets cut out a line (extreme rays). Duplicated
/// directions report only the first occurrence.
std::vector<std::size_t> extreme_generators(const std::vector<Point>& generators,
                                            const std::vector<ConeFacet>& facets);

/// True when the facet normals span the space, i.e. the cone contains no line.
bool is_pointed(const std::vector<ConeFacet>& facets, std::size_t dim);

bool in_cone(const std::vector<ConeFacet>& facets, const Point& x);

}  // namespace toricreg
