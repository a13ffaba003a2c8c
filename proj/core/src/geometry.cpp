#include "toricreg/geometry.hpp"

#include <algorithm>
#include <set>

#include "toricreg/errors.hpp"
#include "toricreg/linalg.hpp"

namespace toricreg {

namespace {

// Visits every size-`k` subset of {0..n-1} in lexicographic order.
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<ConeFacet> cone_facets(const std::vector<Point>& generators) {
  if (generators.empty()) throw InvalidInput("cone without generators");
  const std::size_t n = generators.front().size();
  if (rank(IntMatrix::from_points(generators)) != n) {
    throw InvalidInput("cone generators do not span the ambient space");
  }

  std::set<Point> seen;
  std::vector<ConeFacet> facets;
  if (n == 1) {
    // Half-lines or the full line; facets are the sign conditions that hold.
    for (Coord s : {Coord{1}, Coord{-1}}) {
      if (std::all_of(generators.begin(), generators.end(), [&](const Point& g) { return s * g[0] >= 0; })) {
        facets.push_back({{s}, {}});
      }
    }
    return facets;
  }

  for_each_subset(generators.size(), n - 1, [&](const std::vector<std::size_t>& subset) {
    std::vector<Point> rows;
    rows.reserve(subset.size());
    for (std::size_t i : subset) rows.push_back(generators[i]);
    const auto raw = hyperplane_normal(IntMatrix::from_points(rows));
    if (std::all_of(raw.begin(), raw.end(), [](const Integer& c) { return c == 0; })) return;
    Point normal = to_point(primitive(raw));

    bool pos = false;
    bool neg = false;
    for (const auto& g : generators) {
      const Coord v = dot(normal, g);
      pos |= v > 0;
      neg |= v < 0;
    }
    if (pos && neg) return;
    if (neg) normal = scale(normal, -1);
    if (!seen.insert(normal).second) return;

    ConeFacet f{normal, {}};
    for (std::size_t i = 0; i < generators.size(); ++i) {
      if (dot(normal, generators[i]) == 0) f.tight.push_back(i);
    }
    facets.push_back(std::move(f));
  });
  std::sort(facets.begin(), facets.end(), [](const ConeFacet& a, const ConeFacet& b) { return a.normal < b.normal; });
  return facets;
}

std::vector<std::size_t> extreme_generators(const std::vector<Point>& generators,
                                            const std::vector<ConeFacet>& facets) {
  std::vector<std::size_t> out;
  std::set<Point> directions;
  const std::size_t n = generators.empty() ? 0 : generators.front().size();
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (std::all_of(generators[i].begin(), generators[i].end(), [](Coord c) { return c == 0; })) continue;
    std::vector<Point> tight_normals;
    for (const auto& f : facets) {
      if (std::binary_search(f.tight.begin(), f.tight.end(), i)) tight_normals.push_back(f.normal);
    }
    const std::size_t needed = n - 1;
    const bool extreme = needed == 0 || (!tight_normals.empty() &&
                                         rank(IntMatrix::from_points(tight_normals)) == needed);
    if (!extreme) continue;
    if (!directions.insert(primitive(generators[i])).second) continue;
    out.push_back(i);
  }
  return out;
}

bool is_pointed(const std::vector<ConeFacet>& facets, std::size_t dim) {
  if (facets.empty()) return dim == 0;
  std::vector<Point> normals;
  for (const auto& f : facets) normals.push_back(f.normal);
  return rank(IntMatrix::from_points(normals)) == dim;
}

bool in_cone(const std::vector<ConeFacet>& facets, const Point& x) {
  return std::all_of(facets.begin(), facets.end(), [&](const ConeFacet& f) { return dot(f.normal, x) >= 0; });
}

}  // namespace toricreg
