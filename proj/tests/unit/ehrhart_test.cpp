#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "toricreg/ehrhart.hpp"
#include "toricreg/errors.hpp"
#include "toricreg/families.hpp"

using namespace toricreg;

namespace {

std::vector<std::int64_t> brute_counts(const LatticePolytope& p, int upto) {
  std::vector<std::int64_t> out{1};
  for (int k = 1; k <= upto; ++k)
    out.push_back(static_cast<std::int64_t>(oracle::brute_lattice_points(p.vertices(), k).size()));
  return out;
}

}  // namespace

TEST(EhrhartCounts, SmallExamples) {
  EXPECT_EQ(ehrhart_counts(standard_simplex(2), 2), (std::vector<std::int64_t>{1, 3, 6}));
  EXPECT_EQ(ehrhart_counts(standard_simplex(2), 4), (std::vector<std::int64_t>{1, 3, 6, 10, 15}));
  EXPECT_EQ(ehrhart_counts(dilate(standard_simplex(2), 2), 2), (std::vector<std::int64_t>{1, 6, 15}));
  EXPECT_EQ(ehrhart_counts(rabinowitz_T(2, 2), 2), (std::vector<std::int64_t>{1, 6, 15}));
  EXPECT_EQ(ehrhart_counts(LatticePolytope::from_vertices({{0, 0}, {1, 0}, {0, 1}, {1, 1}}), 2),
            (std::vector<std::int64_t>{1, 4, 9}));
  EXPECT_THROW(ehrhart_counts(standard_simplex(2), -1), InvalidInput);
}

TEST(HStar, SmallExamples) {
  EXPECT_EQ(h_star(standard_simplex(3)).coefficients, (std::vector<std::int64_t>{1, 0, 0, 0}));
  EXPECT_EQ(h_star(rabinowitz_T(2, 1)).coefficients, (std::vector<std::int64_t>{1, 1, 0}));
  EXPECT_EQ(h_star(rabinowitz_T(2, 2)).coefficients, (std::vector<std::int64_t>{1, 3, 0}));
  EXPECT_EQ(h_star(dilate(standard_simplex(2), 3)).coefficients, (std::vector<std::int64_t>{1, 7, 1}));
}

TEST(HStar, SimplicesMatchBoxPoints) {
  gen::Engine rng(31);
  for (int iter = 0; iter < 40; ++iter) {
    const auto p = gen::box_simplex(rng, 2 + iter % 2, 2);
    ASSERT_EQ(h_star(p).coefficients, oracle::simplex_h_star_by_box(p.vertices())) << "iter " << iter;
  }
  for (int iter = 0; iter < 30; ++iter) {
    const auto p = random_hnf_simplex(2 + iter % 3, 12, 1000 + iter);
    ASSERT_EQ(h_star(p).coefficients, oracle::simplex_h_star_by_box(p.vertices())) << "iter " << iter;
  }
}

TEST(HStar, BrunsGubeladzeFromBruteCounts) {
  for (int s = 4; s <= 6; ++s) {
    const auto p = bruns_gubeladze(s);
    const auto expected = oracle::h_star_from_counts(brute_counts(p, 3));
    EXPECT_EQ(h_star(p).coefficients, expected);
  }
  // frozen from the brute-force counts above
  EXPECT_EQ(h_star(bruns_gubeladze(4)).coefficients, (std::vector<std::int64_t>{1, 4, 5, 0}));
}

TEST(Degree, DilatedSimplices) {
  // h*(2 Delta_d)_i = C(d+1, 2i): the degree is floor((d+1)/2)
  for (int d = 2; d <= 7; ++d) {
    const auto h = h_star(dilate(standard_simplex(d), 2)).coefficients;
    for (int i = 0; i <= d; ++i) {
      std::int64_t c = 1;
      for (int t = 1; t <= 2 * i; ++t) c = c * (d + 1 - 2 * i + t) / t;
      if (2 * i > d + 1) c = 0;
      ASSERT_EQ(h[static_cast<std::size_t>(i)], c) << "d=" << d << " i=" << i;
    }
    EXPECT_EQ(degree(dilate(standard_simplex(d), 2)), static_cast<std::size_t>((d + 1) / 2)) << "d=" << d;
  }
  EXPECT_EQ(degree(standard_simplex(3)), 0u);
  EXPECT_EQ(degree(dilate(standard_simplex(2), 3)), 2u);
  EXPECT_EQ(degree(bruns_gubeladze(5)), 2u);
}

TEST(Degree, BothCharacterizationsAgree) {
  gen::Engine rng(32);
  for (int iter = 0; iter < 60; ++iter) {
    const auto p = gen::hnf_simplex(rng, 4, 20);
    ASSERT_EQ(h_star(p).degree(), degree_from_interior_points(p));
  }
}

TEST(Volume, Examples) {
  EXPECT_EQ(normalized_volume(standard_simplex(4)), 1);
  EXPECT_EQ(normalized_volume(LatticePolytope::from_vertices({{0, 0}, {1, 0}, {0, 1}, {1, 1}})), 2);
  EXPECT_EQ(normalized_volume(bruns_gubeladze(4)), 10);
  EXPECT_EQ(normalized_volume(dilate(standard_simplex(3), 2)), 8);
}

TEST(Identities, HoldOnRandomSimplicesAndFamilies) {
  gen::Engine rng(33);
  for (int iter = 0; iter < 60; ++iter) {
    const auto p = gen::hnf_simplex(rng, 4, 25);
    ASSERT_TRUE(h_star_identities_hold(p, h_star(p))) << "iter " << iter;
    ASSERT_TRUE(ehrhart_interpolation_consistent(p, 2 * static_cast<int>(p.dim()) + 2));
  }
  for (int s = 4; s <= 8; ++s) {
    const auto p = bruns_gubeladze(s);
    EXPECT_TRUE(h_star_identities_hold(p, h_star(p)));
    EXPECT_TRUE(ehrhart_interpolation_consistent(p, 8));
  }
}

TEST(Identities, DetectCorruptedVectors) {
  const auto p = rabinowitz_T(3, 1);
  auto h = h_star(p);
  EXPECT_TRUE(h_star_identities_hold(p, h));
  h.coefficients[1] += 1;
  EXPECT_FALSE(h_star_identities_hold(p, h));
  h.coefficients.pop_back();
  EXPECT_FALSE(h_star_identities_hold(p, h));
}

TEST(Pyramid, HStarIsInvariant) {
  gen::Engine rng(34);
  for (int iter = 0; iter < 20; ++iter) {
    const auto p = gen::hnf_simplex(rng, 3, 15);
    auto base = h_star(p).coefficients;
    auto pyr = h_star(pyramid(p, 1)).coefficients;
    ASSERT_EQ(pyr.back(), 0);
    pyr.pop_back();
    ASSERT_EQ(pyr, base);
  }
}

TEST(HStarVector, Accessors) {
  const HStarVector h{{1, 4, 5, 0}};
  EXPECT_EQ(h.dim(), 3u);
  EXPECT_EQ(h.volume(), 10);
  EXPECT_EQ(h.degree(), 2u);
}
