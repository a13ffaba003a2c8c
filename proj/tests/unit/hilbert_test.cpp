#include <gtest/gtest.h>

#include <set>

#include "generators.hpp"
#include "oracles.hpp"
#include "toricreg/errors.hpp"
#include "toricreg/families.hpp"
#include "toricreg/semigroup.hpp"

using namespace toricreg;

TEST(VertexCone, Examples) {
  const auto c = vertex_cone(standard_simplex(2), Point{0, 0});
  EXPECT_EQ(std::set<Point>(c.rays().begin(), c.rays().end()), (std::set<Point>{{1, 0}, {0, 1}}));
  const auto t = vertex_cone(rabinowitz_T(2, 2), Point{2, 0});
  EXPECT_EQ(std::set<Point>(t.rays().begin(), t.rays().end()), (std::set<Point>{{-1, 0}, {-1, 1}}));
  EXPECT_THROW(vertex_cone(rabinowitz_T(2, 2), Point{1, 0}), InvalidInput);
}

TEST(VertexCone, BrunsGubeladzeRaysAreExtreme) {
  const auto p = bruns_gubeladze(4);
  for (std::size_t i = 0; i < p.vertices().size(); ++i) {
    const auto c = vertex_cone(p, i);
    ASSERT_GE(c.rays().size(), 3u);
    // no ray lies in the cone of the others
    for (std::size_t r = 0; r < c.rays().size(); ++r) {
      std::vector<Point> others;
      for (std::size_t s = 0; s < c.rays().size(); ++s)
        if (s != r) others.push_back(c.rays()[s]);
      if (rank(IntMatrix::from_points(others)) < 3) continue;
      EXPECT_FALSE(oracle::in_cone_caratheodory(others, c.rays()[r]));
    }
  }
}

TEST(Parallelepiped, IndexMany) {
  gen::Engine rng(51);
  for (int iter = 0; iter < 60; ++iter) {
    const std::size_t d = 2 + iter % 2;
    const auto rays = gen::simplicial_cone(rng, d, 5, 40);
    const auto c = Cone::from_generators(rays);
    const auto box = fundamental_parallelepiped_points(c);
    // nonzero points only
    ASSERT_EQ(Integer(box.size() + 1), abs(determinant(IntMatrix::from_points(rays)))) << "iter " << iter;
    for (const auto& x : box) ASSERT_TRUE(oracle::in_cone_caratheodory(rays, x));
  }
}

TEST(HilbertBasis, Examples) {
  EXPECT_EQ(hilbert_basis_simplicial(Cone::from_generators({{1, 0}, {0, 1}})).points,
            (std::vector<Point>{{0, 1}, {1, 0}}));
  EXPECT_EQ(hilbert_basis_simplicial(Cone::from_generators({{1, 0}, {1, 2}})).points,
            (std::vector<Point>{{1, 0}, {1, 1}, {1, 2}}));
  // oracle decides the index-4 case
  const std::vector<Point> rays{{1, 0}, {1, 4}};
  EXPECT_EQ(hilbert_basis_simplicial(Cone::from_generators(rays)).points, oracle::brute_hilbert_basis(rays));
  EXPECT_EQ(hilbert_basis_simplicial(Cone::from_generators(rays)).size(), 5u);
}

TEST(HilbertBasis, SimplicialMatchesBruteForce) {
  gen::Engine rng(52);
  for (int iter = 0; iter < 60; ++iter) {
    const std::size_t d = 2 + iter % 2;
    const auto rays = gen::simplicial_cone(rng, d, 4, 20);
    const auto c = Cone::from_generators(rays);
    const auto hb = hilbert_basis_simplicial(c).points;
    ASSERT_EQ(hb, oracle::brute_hilbert_basis(rays)) << "iter " << iter;
    ASSERT_EQ(hilbert_basis(c).points, hb);
  }
}

TEST(HilbertBasis, NonSimplicialVertexCones) {
  const auto p = bruns_gubeladze(4);
  for (std::size_t i = 0; i < p.vertices().size(); ++i) {
    const auto c = vertex_cone(p, i);
    ASSERT_EQ(hilbert_basis(c).points, oracle::brute_hilbert_basis(c.rays())) << "vertex " << i;
  }
  const auto sq = Cone::from_generators({{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}});
  EXPECT_EQ(hilbert_basis(sq).points, oracle::brute_hilbert_basis(sq.rays()));
}

TEST(HilbertBasis, RandomPolygonAndPolytopeCones) {
  gen::Engine rng(53);
  for (int iter = 0; iter < 25; ++iter) {
    // 4 or 5 random rays over a positive grading
    std::vector<Point> gens;
    const std::size_t n = 4 + iter % 2;
    for (std::size_t i = 0; i < n; ++i) gens.push_back({gen::uniform(rng, -3, 3), gen::uniform(rng, -3, 3), gen::uniform(rng, 1, 3)});
    if (rank(IntMatrix::from_points(gens)) < 3) continue;
    const auto c = Cone::from_generators(gens);
    ASSERT_EQ(hilbert_basis(c).points, oracle::brute_hilbert_basis(c.rays())) << "iter " << iter;
  }
}

TEST(HilbertBasis, TriangulationCoversCone) {
  const auto c = vertex_cone(bruns_gubeladze(6), std::size_t{0});
  const auto tri = pulling_triangulation(c);
  ASSERT_FALSE(tri.empty());
  const Point g = oracle::positive_functional(c.rays());
  for (const auto& x : oracle::cone_points_up_to(c.rays(), g, 6)) {
    bool covered = false;
    for (const auto& simplex : tri) {
      ASSERT_EQ(simplex.size(), 3u);
      std::vector<Point> rays;
      for (auto i : simplex) rays.push_back(c.rays()[i]);
      covered = covered || oracle::in_cone_caratheodory(rays, x);
    }
    ASSERT_TRUE(covered);
  }
}

TEST(HilbertBasis, RejectsLines) {
  EXPECT_THROW(hilbert_basis(Cone::from_generators({{1, 0}, {-1, 0}, {0, 1}})), InvalidInput);
}
