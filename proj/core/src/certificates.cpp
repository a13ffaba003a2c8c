#include "toricreg/certificates.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include <json.hpp>

#include "toricreg/errors.hpp"

namespace toricreg {

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found:
      return "found";
    case SearchStatus::exhausted:
      return "exhausted";
    case SearchStatus::inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

namespace {

using Bary = std::vector<Coord>;

// Barycentric coordinates scaled by the normalized volume, hence integral.
class BarycentricFrame {
 public:
  explicit BarycentricFrame(const LatticePolytope& simplex)
      : simplex_(simplex), scale_(to_coord(normalized_volume_simplex(simplex))) {}

  Bary operator()(const Point& x, int level = 1) const {
    const auto lambda = barycentric(simplex_, x, level);
    Bary out;
    out.reserve(lambda.size());
    for (const auto& l : lambda) {
      const Rational s = l * scale_;
      if (denominator(s) != 1) throw InvariantViolation("scaled barycentric coordinate is not integral");
      out.push_back(to_coord(numerator(s)));
    }
    return out;
  }

 private:
  LatticePolytope simplex_;
  Coord scale_;
};

class MultisetSearch {
 public:
  MultisetSearch(const LatticePolytope& p, std::uint64_t& nodes, std::uint64_t max_nodes)
      : points_(lattice_points(p, 1).points), nodes_(nodes), max_nodes_(max_nodes) {
    const BarycentricFrame frame(p);
    for (std::size_t i = 0; i < points_.size(); ++i) {
      bary_.push_back(frame(points_[i]));
      index_.emplace(bary_.back(), i);
    }
    target_frame_ = [frame](const Point& x, int level) { return frame(x, level); };
  }

  SearchStatus run(const Point& target, int parts, std::vector<Point>& out) {
    Bary residual = target_frame_(target, parts);
    if (std::any_of(residual.begin(), residual.end(), [](Coord c) { return c < 0; })) return SearchStatus::exhausted;
    chosen_.clear();
    const auto status = dfs(parts, 0, residual);
    if (status == SearchStatus::found) {
      out.clear();
      for (std::size_t i : chosen_) out.push_back(points_[i]);
    }
    return status;
  }

 private:
  SearchStatus dfs(int remaining, std::size_t start, Bary& residual) {
    if (++nodes_ > max_nodes_) return SearchStatus::inconclusive;
    if (remaining == 1) {
      const auto it = index_.find(residual);
      if (it == index_.end() || it->second < start) return SearchStatus::exhausted;
      chosen_.push_back(it->second);
      return SearchStatus::found;
    }
    for (std::size_t i = start; i < points_.size(); ++i) {
      const auto& b = bary_[i];
      bool fits = true;
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (b[j] > residual[j]) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      for (std::size_t j = 0; j < b.size(); ++j) residual[j] -= b[j];
      chosen_.push_back(i);
      const auto status = dfs(remaining - 1, i, residual);
      if (status != SearchStatus::exhausted) return status;
      chosen_.pop_back();
      for (std::size_t j = 0; j < b.size(); ++j) residual[j] += b[j];
    }
    return SearchStatus::exhausted;
  }

  std::vector<Point> points_;
  std::vector<Bary> bary_;
  std::map<Bary, std::size_t> index_;
  std::function<Bary(const Point&, int)> target_frame_;
  std::vector<std::size_t> chosen_;
  std::uint64_t& nodes_;
  std::uint64_t max_nodes_;
};

void require_simplex_point(const LatticePolytope& p, const Point& x, int k) {
  if (!is_simplex(p)) throw InvalidInput("decompositions are defined for simplices only");
  if (k < 1) throw InvalidInput("k must be positive");
  if (x.size() != p.dim()) throw InvalidInput("point dimension does not match the polytope");
  if (!lattice_points(p, k).contains(x)) throw InvalidInput("x is not a lattice point of kP");
}

DecompositionResult ogata_impl(const LatticePolytope& p, const Point& x, std::size_t i, int k, std::uint64_t& nodes,
                               std::uint64_t max_nodes) {
  DecompositionResult result;
  const Point target = add(x, scale(p.vertices()[i], k - 1));
  std::vector<Point> parts;
  MultisetSearch search(p, nodes, max_nodes);
  result.status = search.run(target, 2 * k - 1, parts);
  result.nodes = nodes;
  if (result.status == SearchStatus::found) {
    result.certificate = DecompositionCertificate{p, k, target, std::move(parts)};
  }
  return result;
}

DecompositionResult weighted_impl(const LatticePolytope& p, const Point& x, std::vector<int> a, int k,
                                  std::uint64_t& nodes, std::uint64_t max_nodes) {
  Point target = x;
  for (std::size_t j = 0; j < a.size(); ++j) target = add(target, scale(p.vertices()[j], a[j]));
  if (k == 1) {
    return {SearchStatus::found, DecompositionCertificate{p, 1, target, {x}}, nodes};
  }

  const auto i = static_cast<std::size_t>(std::find_if(a.begin(), a.end(), [](int c) { return c > 0; }) - a.begin());
  const Point& vi = p.vertices()[i];
  auto base = ogata_impl(p, x, i, k, nodes, max_nodes);
  if (base.status != SearchStatus::found) return base;
  const auto& w = base.certificate->parts;
  const auto cell = lattice_points(p, 1);

  // First pair whose sum, taken with v_i as origin, leaves P.
  std::optional<std::pair<std::size_t, std::size_t>> bad;
  for (std::size_t s = 0; s < w.size() && !bad; ++s)
    for (std::size_t t = s + 1; t < w.size() && !bad; ++t)
      if (!cell.contains(subtract(add(w[s], w[t]), vi))) bad = std::make_pair(s, t);

  std::vector<Point> parts;
  if (!bad) {
    for (int m = 0; m + 1 < k; ++m) parts.push_back(subtract(add(w[2 * m], w[2 * m + 1]), vi));
    parts.push_back(w.back());
    for (std::size_t j = 0; j < a.size(); ++j)
      for (int c = 0; c < a[j]; ++c) parts.push_back(p.vertices()[j]);
  } else {
    const auto [s, t] = *bad;
    const Point y = subtract(add(x, vi), add(w[s], w[t]));
    if (!lattice_points(p, k - 1).contains(y)) throw InvariantViolation("recursion point left (k-1)P");
    --a[i];
    auto inner = weighted_impl(p, y, a, k - 1, nodes, max_nodes);
    if (inner.status != SearchStatus::found) return inner;
    parts = {w[s], w[t]};
    const auto& rest = inner.certificate->parts;
    parts.insert(parts.end(), rest.begin(), rest.end());
  }
  std::sort(parts.begin(), parts.end());
  return {SearchStatus::found, DecompositionCertificate{p, k, target, std::move(parts)}, nodes};
}

}  // namespace

DecompositionResult ogata_decompose(const LatticePolytope& p, const Point& x, std::size_t vertex_index, int k,
                                    SearchBudget budget) {
  require_simplex_point(p, x, k);
  if (vertex_index >= p.vertices().size()) throw InvalidInput("vertex index out of range");
  std::uint64_t nodes = 0;
  return ogata_impl(p, x, vertex_index, k, nodes, budget.max_nodes);
}

DecompositionResult weighted_decompose(const LatticePolytope& p, const Point& x, const std::vector<int>& weights,
                                       int k, SearchBudget budget) {
  require_simplex_point(p, x, k);
  if (weights.size() != p.dim() + 1) throw InvalidInput("need one weight per vertex");
  if (std::any_of(weights.begin(), weights.end(), [](int c) { return c < 0; })) {
    throw InvalidInput("weights must be nonnegative");
  }
  if (std::accumulate(weights.begin(), weights.end(), 0) != k - 1) throw InvalidInput("weights must sum to k-1");
  std::uint64_t nodes = 0;
  auto result = weighted_impl(p, x, weights, k, nodes, budget.max_nodes);
  result.nodes = nodes;
  if (result.status == SearchStatus::found && !verify_certificate(*result.certificate)) {
    throw InvariantViolation("constructed certificate does not verify");
  }
  return result;
}

bool verify_certificate(const DecompositionCertificate& c) {
  if (c.k < 1 || c.parts.size() != static_cast<std::size_t>(2 * c.k - 1)) return false;
  const auto cell = lattice_points(c.polytope, 1);
  Point sum(c.polytope.dim(), 0);
  for (const auto& u : c.parts) {
    if (u.size() != c.polytope.dim() || !cell.contains(u)) return false;
    sum = add(sum, u);
  }
  return sum == c.target;
}

std::string to_json(const DecompositionResult& r) {
  nlohmann::ordered_json j;
  j["status"] = to_string(r.status);
  j["nodes"] = r.nodes;
  if (r.certificate) {
    const auto& c = *r.certificate;
    j["polytope"] = nlohmann::ordered_json::parse(to_json(c.polytope));
    j["k"] = c.k;
    j["target"] = c.target;
    j["parts"] = c.parts;
    j["verified"] = verify_certificate(c);
  }
  return j.dump();
}

}  // namespace toricreg
