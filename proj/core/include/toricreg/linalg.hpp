#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "toricreg/integer.hpp"

namespace toricreg {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows);
  static IntMatrix from_points(const std::vector<Point>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Integer> row(std::size_t r) const;
  IntMatrix transpose() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

using RationalVector = std::vector<Rational>;

/// Exact determinant by Bareiss fraction-free elimination.
/// Throws InvalidInput for a non-square matrix.
Integer determinant(const IntMatrix& m);

/// Rank over the rationals (fraction-free elimination).
std::size_t rank(const IntMatrix& m);

struct HermiteDecomposition {
  IntMatrix h;  ///< lower-triangular Hermite normal form
  IntMatrix u;  ///< unimodular, u * m == h
};

/// Row-style Hermite normal form. Pivot rows are stacked from the bottom
/// (last column first), so a nonsingular square input gives a lower-triangular
/// h with positive diagonal and every entry below a pivot reduced into
/// [0, pivot). Zero rows of a rank-deficient input end up on top.
HermiteDecomposition hermite_normal_form(const IntMatrix& m);

/// Unique solution of a * x = b, or nullopt when a is singular.
/// Throws InvalidInput on a non-square a or a size mismatch with b.
std::optional<RationalVector> solve_rational(const IntMatrix& a, const RationalVector& b);

/// v divided by the gcd of its entries. Throws InvalidInput on the zero vector.
std::vector<Integer> primitive(const std::vector<Integer>& v);
Point primitive(const Point& v);

/// Normal vector of the hyperplane spanned by n-1 vectors in dimension n,
/// as the vector of signed maximal minors. Zero when the rows are dependent.
std::vector<Integer> hyperplane_normal(const IntMatrix& rows);

}  // namespace toricreg
