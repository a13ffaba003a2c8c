#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toricreg/polytope.hpp"

namespace toricreg {

/// 2k-1 lattice points of P (a multiset) whose sum is `target`.
struct DecompositionCertificate {
  LatticePolytope polytope;
  int k = 1;
  Point target;
  std::vector<Point> parts;
};

enum class SearchStatus {
  found,
  exhausted,     ///< complete search found nothing: input not very ample, or a bug
  inconclusive,  ///< node budget ran out
};

const char* to_string(SearchStatus s);

struct DecompositionResult {
  SearchStatus status = SearchStatus::exhausted;
  std::optional<DecompositionCertificate> certificate;
  std::uint64_t nodes = 0;
};

struct SearchBudget {
  std::uint64_t max_nodes = 5'000'000;
};

/// Finds u_1..u_{2k-1} in P∩M with x + (k-1) v_i = sum u_j by depth-first
/// search over multisets of P∩M in lexicographic order. Partial sums are
/// pruned in barycentric coordinates: what is left must stay in
/// (remaining parts) * P. Throws InvalidInput unless p is a simplex,
/// i indexes a vertex and x lies in kP.
DecompositionResult ogata_decompose(const LatticePolytope& p, const Point& x, std::size_t vertex_index, int k,
                                    SearchBudget budget = {});

/// Realizes sum_i a_i v_i + x as a sum of 2k-1 points of P∩M, where
/// sum a_i = k-1, following the inductive construction: an Ogata
/// decomposition at a vertex with positive weight, then either pairing its
/// parts or recursing on k-1. The budget covers all nested searches.
DecompositionResult weighted_decompose(const LatticePolytope& p, const Point& x, const std::vector<int>& weights,
                                       int k, SearchBudget budget = {});

bool verify_certificate(const DecompositionCertificate& c);

std::string to_json(const DecompositionResult& r);

}  // namespace toricreg
