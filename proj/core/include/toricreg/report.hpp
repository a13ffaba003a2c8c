#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toricreg/ehrhart.hpp"
#include "toricreg/families.hpp"
#include "toricreg/polytope.hpp"
#include "toricreg/semigroup.hpp"

namespace toricreg {

enum class BoundId { EG_CONJ, THM_MAIN, PROP_KP_NU_D, PROP_KP_FLOOR, HKN, NU_LE_DEG, NONHOLLOW_EG, HIBI };

const char* to_string(BoundId id);
const std::vector<BoundId>& all_bounds();

/// Bounds whose failure contradicts a proved statement (EG_CONJ is only
/// an observation).
bool is_asserted(BoundId id);

/// lhs <= rhs under an applicability predicate. lhs/rhs are recorded whenever
/// their inputs are defined, even if the bound does not apply; `holds` only
/// when it applies.
struct BoundCheck {
  BoundId id{};
  bool applicable = false;
  std::optional<bool> holds;
  std::optional<std::int64_t> lhs;
  std::optional<std::int64_t> rhs;

  std::string verdict() const;  ///< "holds" | "fails" | "NA"
};

using AnalysisCaps = NormalityCaps;

struct AnalysisReport {
  std::string name;
  std::vector<Point> vertices;
  std::optional<std::uint64_t> seed;
  int k_cap = 0;
  int invariant_cap = 0;

  int dim = 0;
  std::int64_t lattice_points = 0;
  std::int64_t interior_points = 0;
  std::int64_t volume = 0;
  HStarVector h_star;
  int degree = 0;
  bool hollow = false;
  bool fano = false;
  bool simplex = false;
  bool very_ample = false;
  std::optional<int> d_p;
  std::optional<int> nu_p;
  std::optional<int> k_p;
  std::optional<int> reg;  ///< max(k_P, deg P) + 1
  std::int64_t deg_x = 0;    ///< = Vol(P)
  std::int64_t codim_x = 0;  ///< = |P∩M| - d - 1
  std::optional<std::int64_t> eg_gap;  ///< reg - (deg_X - codim_X + 1)
  std::map<int, bool> per_k_normal;
  std::vector<std::vector<Point>> hilbert_witnesses;
  std::vector<BoundCheck> bounds;

  const BoundCheck& bound(BoundId id) const;
};

/// Computes every invariant and evaluates the bounds. Internal identities
/// (h* relations, Ehrhart interpolation up to 2d+2, the two degree
/// characterizations) are asserted and throw InvariantViolation.
AnalysisReport analyze(const LatticePolytope& p, AnalysisCaps caps = {});

std::vector<BoundCheck> check_bounds(const AnalysisReport& r);

std::string to_json(const AnalysisReport& r);
std::string to_human(const AnalysisReport& r);
std::string csv_header();
std::string to_csv_row(const AnalysisReport& r);
std::string bounds_to_json(const AnalysisReport& r);

enum class OutputFormat { json, csv, human };
OutputFormat parse_format(const std::string& s);

struct BoundTally {
  std::int64_t holds = 0;
  std::int64_t fails = 0;
  std::int64_t not_applicable = 0;
};

struct BatchIssue {
  std::string name;
  std::vector<Point> vertices;
  std::optional<std::uint64_t> seed;
  std::string what;  ///< bound id or error message
  std::optional<std::int64_t> lhs;
  std::optional<std::int64_t> rhs;
};

struct BatchSummary {
  std::int64_t analyzed = 0;
  std::map<BoundId, BoundTally> tallies;
  std::vector<BatchIssue> violations;    ///< asserted bounds that failed
  std::vector<BatchIssue> observations;  ///< EG_CONJ failures
  std::vector<BatchIssue> errors;        ///< analyses that threw
  std::int64_t undefined_k = 0;          ///< k_P not reached by the cap
};

/// Generates every family, analyzes the members on `workers` threads and
/// streams one row per polytope to `sink` in input order.
/// Throws std::ios_base::failure when writing fails, after `analyzed`
/// rows were written.
BatchSummary batch_run(const std::vector<FamilySpec>& specs, AnalysisCaps caps, std::ostream& sink,
                       OutputFormat format, int workers = 1);
BatchSummary batch_run(const std::vector<LatticePolytope>& polytopes, AnalysisCaps caps, std::ostream& sink,
                       OutputFormat format, int workers = 1);

std::string to_json(const BatchSummary& s);

}  // namespace toricreg
