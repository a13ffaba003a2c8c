#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "toricreg/errors.hpp"
#include "toricreg/linalg.hpp"

using namespace toricreg;

namespace {

std::vector<std::vector<Integer>> rows_of(const IntMatrix& m) {
  std::vector<std::vector<Integer>> out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m.row(r));
  return out;
}

// lower-triangular: pivots positive, entries below a pivot in [0, pivot)
bool is_hermite(const IntMatrix& h) {
  for (std::size_t r = 0; r < h.rows(); ++r)
    for (std::size_t c = r + 1; c < h.cols(); ++c)
      if (h(r, c) != 0) return false;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    if (h(r, r) <= 0) return false;
    for (std::size_t c = 0; c < r; ++c)
      if (h(r, c) < 0 || h(r, c) >= h(c, c)) return false;
  }
  return true;
}

}  // namespace

TEST(Determinant, SmallExamples) {
  EXPECT_EQ(determinant(IntMatrix::from_rows({{2, 0}, {0, 3}})), 6);
  EXPECT_EQ(determinant(IntMatrix::from_rows({{0, 1}, {1, 0}})), -1);
  EXPECT_EQ(determinant(IntMatrix::from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})), 0);
  EXPECT_EQ(determinant(IntMatrix::from_rows({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}})), 4);
  EXPECT_EQ(determinant(IntMatrix(0, 0)), 1);
}

TEST(Determinant, AgreesWithCofactorExpansion) {
  gen::Engine rng(11);
  for (int iter = 0; iter < 400; ++iter) {
    const std::size_t n = 1 + iter % 4;
    const IntMatrix m = gen::small_matrix(rng, n, n, 9);
    ASSERT_EQ(determinant(m), oracle::cofactor_determinant(rows_of(m))) << "iter " << iter;
  }
}

TEST(Determinant, ExactBeyondMachineWords) {
  const Integer big = Integer(1) << 80;
  EXPECT_EQ(determinant(IntMatrix::from_rows({{big, 1}, {1, big}})), big * big - 1);
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(IntMatrix::from_rows({{1, 2, 3}, {2, 4, 6}})), 1u);
  EXPECT_EQ(rank(IntMatrix::from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})), 2u);
  EXPECT_EQ(rank(IntMatrix::identity(4)), 4u);
  EXPECT_EQ(rank(IntMatrix(3, 2)), 0u);
}

TEST(Rank, FullExactlyWhenDeterminantNonzero) {
  gen::Engine rng(12);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t n = 1 + iter % 4;
    const IntMatrix m = gen::small_matrix(rng, n, n, 2);
    EXPECT_EQ(rank(m) == n, determinant(m) != 0);
  }
}

TEST(Hermite, Example) {
  const auto hd = hermite_normal_form(IntMatrix::from_rows({{2, 0}, {1, 3}}));
  EXPECT_TRUE(is_hermite(hd.h));
  EXPECT_EQ(hd.u * IntMatrix::from_rows({{2, 0}, {1, 3}}), hd.h);
  EXPECT_EQ(determinant(hd.h), 6);
}

TEST(Hermite, UnimodularTransformAndShape) {
  gen::Engine rng(13);
  int checked = 0;
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t n = 1 + iter % 4;
    const IntMatrix m = gen::small_matrix(rng, n, n, 6);
    const Integer det = determinant(m);
    if (det == 0) continue;
    ++checked;
    const auto hd = hermite_normal_form(m);
    ASSERT_EQ(hd.u * m, hd.h);
    ASSERT_EQ(abs(determinant(hd.u)), 1);
    ASSERT_TRUE(is_hermite(hd.h)) << "iter " << iter;
    ASSERT_EQ(determinant(hd.h), abs(det));
    // the form is canonical under row operations
    const auto again = hermite_normal_form(hd.u * m);
    EXPECT_EQ(again.h, hd.h);
  }
  EXPECT_GT(checked, 200);
}

TEST(Solve, RoundTrip) {
  gen::Engine rng(14);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t n = 1 + iter % 4;
    const IntMatrix a = gen::small_matrix(rng, n, n, 7);
    RationalVector b;
    for (std::size_t i = 0; i < n; ++i) b.emplace_back(gen::uniform(rng, -20, 20), gen::uniform(rng, 1, 5));
    const auto x = solve_rational(a, b);
    if (determinant(a) == 0) continue;
    ASSERT_TRUE(x.has_value());
    for (std::size_t r = 0; r < n; ++r) {
      Rational s = 0;
      for (std::size_t c = 0; c < n; ++c) s += Rational(a(r, c)) * (*x)[c];
      ASSERT_EQ(s, b[r]);
    }
  }
}

TEST(Solve, InconsistentSystem) {
  const auto a = IntMatrix::from_rows({{1, 1}, {1, 1}});
  EXPECT_FALSE(solve_rational(a, {Rational(1), Rational(2)}).has_value());
}

TEST(Primitive, Examples) {
  EXPECT_EQ(primitive(Point{4, -6, 0}), (Point{2, -3, 0}));
  EXPECT_THROW(primitive(Point{0, 0}), InvalidInput);
  EXPECT_EQ(primitive(Point{-3}), (Point{-1}));
}

TEST(HyperplaneNormal, OrthogonalToRows) {
  gen::Engine rng(15);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t n = 2 + iter % 3;
    const IntMatrix rows = gen::small_matrix(rng, n - 1, n, 5);
    const auto normal = hyperplane_normal(rows);
    ASSERT_EQ(normal.size(), n);
    const bool zero = std::all_of(normal.begin(), normal.end(), [](const Integer& v) { return v == 0; });
    EXPECT_EQ(zero, rank(rows) < n - 1);
    for (std::size_t r = 0; r < n - 1; ++r) {
      Integer s = 0;
      for (std::size_t c = 0; c < n; ++c) s += rows(r, c) * normal[c];
      ASSERT_EQ(s, 0);
    }
  }
}

TEST(CheckedArithmetic, OverflowIsReported) {
  const Coord big = std::numeric_limits<Coord>::max() - 1;
  EXPECT_THROW(add(Point{big}, Point{5}), OverflowError);
  EXPECT_EQ(add(Point{big}, Point{1}), Point{std::numeric_limits<Coord>::max()});
  EXPECT_THROW(scale(Point{big}, 2), OverflowError);
  EXPECT_THROW(to_coord(Integer(1) << 70), OverflowError);
  EXPECT_EQ(to_coord(Integer(-42)), -42);
}
