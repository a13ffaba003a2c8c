#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "toricreg/certificates.hpp"
#include "toricreg/errors.hpp"
#include "toricreg/families.hpp"
#include "toricreg/semigroup.hpp"

using namespace toricreg;

namespace {

Point target_of(const LatticePolytope& p, const Point& x, std::size_t i, int k) {
  return add(x, scale(p.vertices()[i], k - 1));
}

}  // namespace

TEST(Ogata, StandardTriangle) {
  const auto p = standard_simplex(2);
  const auto r = ogata_decompose(p, {1, 1}, 0, 2);
  ASSERT_EQ(r.status, SearchStatus::found);
  EXPECT_EQ(r.certificate->parts.size(), 3u);
  EXPECT_EQ(r.certificate->target, (Point{1, 1}));
  EXPECT_TRUE(verify_certificate(*r.certificate));
}

TEST(Ogata, DilatedTriangleAtSecondVertex) {
  const auto p = dilate(standard_simplex(2), 2);
  const auto r = ogata_decompose(p, {1, 2}, 1, 2);
  ASSERT_EQ(r.status, SearchStatus::found);
  EXPECT_EQ(r.certificate->target, target_of(p, {1, 2}, 1, 2));
  EXPECT_TRUE(verify_certificate(*r.certificate));
}

TEST(Ogata, RejectsBadInput) {
  const auto p = standard_simplex(2);
  EXPECT_THROW(ogata_decompose(p, {3, 0}, 0, 2), InvalidInput);
  EXPECT_THROW(ogata_decompose(p, {1, 0}, 3, 2), InvalidInput);
  EXPECT_THROW(ogata_decompose(p, {1, 0}, 0, 0), InvalidInput);
  EXPECT_THROW(ogata_decompose(bruns_gubeladze(4), {0, 0, 0}, 0, 1), InvalidInput);
}

TEST(Ogata, ExistenceMatchesExhaustiveSearch) {
  // k = 2: three parts; compare with all 3-multisets of P∩M
  gen::Engine rng(61);
  int checked = 0;
  for (int iter = 0; iter < 30; ++iter) {
    const auto p = gen::hnf_simplex(rng, 3, 10);
    const auto pool = lattice_points(p, 1).points;
    const auto xs = lattice_points(p, 2).points;
    for (int probe = 0; probe < 4; ++probe) {
      const Point x = xs[static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<Coord>(xs.size()) - 1))];
      const auto i = static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<Coord>(p.dim())));
      const auto r = ogata_decompose(p, x, i, 2);
      const auto all = oracle::all_multiset_sums(pool, 3, target_of(p, x, i, 2));
      ASSERT_NE(r.status, SearchStatus::inconclusive);
      ASSERT_EQ(r.status == SearchStatus::found, !all.empty()) << "iter " << iter;
      if (r.certificate) {
        auto parts = r.certificate->parts;
        std::sort(parts.begin(), parts.end());
        ASSERT_NE(std::find(all.begin(), all.end(), parts), all.end());
      }
      ++checked;
    }
  }
  EXPECT_EQ(checked, 120);
}

TEST(Ogata, TinyBudgetIsInconclusive) {
  const auto p = dilate(standard_simplex(3), 2);
  const auto r = ogata_decompose(p, {2, 2, 2}, 0, 3, SearchBudget{1});
  EXPECT_EQ(r.status, SearchStatus::inconclusive);
  EXPECT_FALSE(r.certificate.has_value());
}

TEST(Ogata, Deterministic) {
  const auto p = random_hnf_simplex(3, 12, 5);
  const auto x = lattice_points(p, 3).points.back();
  const auto a = ogata_decompose(p, x, 2, 3);
  const auto b = ogata_decompose(p, x, 2, 3);
  EXPECT_EQ(to_json(a), to_json(b));
}

TEST(Weighted, Examples) {
  const auto p = rabinowitz_T(3, 1);
  const auto r = weighted_decompose(p, {3, 1}, {1, 1, 1}, 4);
  ASSERT_EQ(r.status, SearchStatus::found);
  EXPECT_EQ(r.certificate->parts.size(), 7u);
  EXPECT_EQ(r.certificate->target, (Point{3 + 3, 1 + 1}));
  EXPECT_TRUE(verify_certificate(*r.certificate));
  // k = 1 is the trivial certificate {x}
  const auto one = weighted_decompose(p, {2, 0}, {0, 0, 0}, 1);
  ASSERT_EQ(one.status, SearchStatus::found);
  EXPECT_EQ(one.certificate->parts, (std::vector<Point>{{2, 0}}));
}

TEST(Weighted, RejectsBadWeights) {
  const auto p = standard_simplex(2);
  EXPECT_THROW(weighted_decompose(p, {1, 0}, {1, 0, 0}, 3), InvalidInput);
  EXPECT_THROW(weighted_decompose(p, {1, 0}, {2, -1, 0}, 2), InvalidInput);
  EXPECT_THROW(weighted_decompose(p, {1, 0}, {1, 0}, 2), InvalidInput);
}

TEST(Weighted, RandomVeryAmpleSimplices) {
  gen::Engine rng(62);
  int done = 0;
  while (done < 40) {
    const auto p = gen::hnf_simplex(rng, 3, 15);
    if (!is_very_ample(p).very_ample) continue;
    const int k = static_cast<int>(gen::uniform(rng, 1, 3));
    const auto xs = lattice_points(p, k).points;
    const Point x = xs[static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<Coord>(xs.size()) - 1))];
    std::vector<int> a(p.dim() + 1, 0);
    for (int j = 0; j < k - 1; ++j) ++a[static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<Coord>(p.dim())))];
    const auto r = weighted_decompose(p, x, a, k);
    ASSERT_EQ(r.status, SearchStatus::found) << p.name();
    ASSERT_EQ(r.certificate->parts.size(), static_cast<std::size_t>(2 * k - 1));
    Point expected = x;
    for (std::size_t i = 0; i < a.size(); ++i) expected = add(expected, scale(p.vertices()[i], a[i]));
    ASSERT_EQ(r.certificate->target, expected);
    ASSERT_TRUE(verify_certificate(*r.certificate));
    ++done;
  }
}

TEST(Verify, RejectsBrokenCertificates) {
  const auto p = standard_simplex(2);
  DecompositionCertificate c{p, 2, {1, 1}, {{0, 0}, {1, 0}, {0, 1}}};
  EXPECT_TRUE(verify_certificate(c));
  auto wrong_sum = c;
  wrong_sum.target = {1, 2};
  EXPECT_FALSE(verify_certificate(wrong_sum));
  auto outside = c;
  outside.parts = {{-1, 0}, {2, 0}, {0, 1}};
  EXPECT_FALSE(verify_certificate(outside));
  auto short_list = c;
  short_list.parts.pop_back();
  short_list.target = {1, 0};
  EXPECT_FALSE(verify_certificate(short_list));
}

TEST(Json, CarriesStatusAndParts) {
  const auto r = ogata_decompose(standard_simplex(2), {1, 1}, 0, 2);
  const auto j = to_json(r);
  EXPECT_NE(j.find("\"status\":\"found\""), std::string::npos);
  EXPECT_NE(j.find("\"verified\":true"), std::string::npos);
  EXPECT_NE(j.find("\"parts\""), std::string::npos);
}
