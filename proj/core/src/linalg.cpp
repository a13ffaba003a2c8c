#include "toricreg/linalg.hpp"

#include <limits>
#include <string>
#include <utility>

#include "toricreg/errors.hpp"

namespace toricreg {

namespace mp = boost::multiprecision;

Coord to_coord(const Integer& value) {
  if (value > std::numeric_limits<Coord>::max() || value < std::numeric_limits<Coord>::min()) {
    throw OverflowError("integer " + value.str() + " does not fit a lattice coordinate");
  }
  return static_cast<Coord>(value);
}

Integer to_integer(Coord value) { return Integer(value); }

std::vector<Integer> to_integers(const Point& p) {
  std::vector<Integer> out;
  out.reserve(p.size());
  for (Coord c : p) out.emplace_back(c);
  return out;
}

Point to_point(const std::vector<Integer>& v) {
  Point out;
  out.reserve(v.size());
  for (const auto& c : v) out.push_back(to_coord(c));
  return out;
}

namespace {

Coord checked_add(Coord a, Coord b) {
  Coord r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("coordinate overflow in addition");
  return r;
}

Coord checked_mul(Coord a, Coord b) {
  Coord r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("coordinate overflow in multiplication");
  return r;
}

}  // namespace

Point add(const Point& a, const Point& b) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

Point subtract(const Point& a, const Point& b) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (__builtin_sub_overflow(a[i], b[i], &r[i])) throw OverflowError("coordinate overflow in subtraction");
  }
  return r;
}

Point scale(const Point& a, Coord c) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_mul(a[i], c);
  return r;
}

Coord dot(const Point& a, const Point& b) {
  Coord s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InvalidInput("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_points(const std::vector<Point>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InvalidInput("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<Integer> IntMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidInput("matrix product dimension mismatch");
  IntMatrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) p(i, j) += a(i, k) * b(k, j);
    }
  return p;
}

Integer determinant(const IntMatrix& m) {
  if (!m.is_square()) throw InvalidInput("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Bareiss step; the division is exact.
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& m) {
  IntMatrix a = m;
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(piv, j));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      for (std::size_t j = c + 1; j < a.cols(); ++j) a(i, j) = (a(i, j) * a(r, c) - a(i, c) * a(r, j)) / prev;
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;  // truncates toward zero
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void row_axpy(IntMatrix& m, std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < m.cols(); ++c) m(target, c) -= factor * m(source, c);
}

void row_swap(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void row_negate(IntMatrix& m, std::size_t r) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = -m(r, c);
}

}  // namespace

HermiteDecomposition hermite_normal_form(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  std::size_t top = m.rows();  // rows [0, top) are still unassigned

  for (std::size_t col = m.cols(); col-- > 0 && top > 0;) {
    // Euclid on column `col` across the unassigned rows.
    while (true) {
      std::size_t best = top;
      std::size_t nonzero = 0;
      for (std::size_t r = 0; r < top; ++r) {
        if (h(r, col) == 0) continue;
        ++nonzero;
        if (best == top || abs(h(r, col)) < abs(h(best, col))) best = r;
      }
      if (nonzero == 0) break;
      if (nonzero == 1) {
        const std::size_t pivot_row = top - 1;
        row_swap(h, best, pivot_row);
        row_swap(u, best, pivot_row);
        if (h(pivot_row, col) < 0) {
          row_negate(h, pivot_row);
          row_negate(u, pivot_row);
        }
        // Reduce the entries of this column in the pivot rows below.
        for (std::size_t r = pivot_row + 1; r < m.rows(); ++r) {
          const Integer q = floor_div(h(r, col), h(pivot_row, col));
          row_axpy(h, r, pivot_row, q);
          row_axpy(u, r, pivot_row, q);
        }
        --top;
        break;
      }
      for (std::size_t r = 0; r < top; ++r) {
        if (r == best || h(r, col) == 0) continue;
        const Integer q = floor_div(h(r, col), h(best, col));
        row_axpy(h, r, best, q);
        row_axpy(u, r, best, q);
      }
    }
  }
  return {std::move(h), std::move(u)};
}

std::optional<RationalVector> solve_rational(const IntMatrix& a, const RationalVector& b) {
  if (!a.is_square()) throw InvalidInput("solve_rational needs a square matrix");
  if (b.size() != a.rows()) throw InvalidInput("solve_rational: right-hand side size mismatch");
  const std::size_t n = a.rows();
  std::vector<RationalVector> aug(n, RationalVector(n + 1));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug[r][c] = Rational(a(r, c));
    aug[r][n] = b[r];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && aug[piv][c] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(aug[c], aug[piv]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || aug[r][c] == 0) continue;
      const Rational f = aug[r][c] / aug[c][c];
      for (std::size_t j = c; j <= n; ++j) aug[r][j] -= f * aug[c][j];
    }
  }
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n] / aug[i][i];
  return x;
}

std::vector<Integer> primitive(const std::vector<Integer>& v) {
  Integer g = 0;
  for (const auto& c : v) g = mp::gcd(g, abs(c));
  if (g == 0) throw InvalidInput("primitive of the zero vector");
  std::vector<Integer> out;
  out.reserve(v.size());
  for (const auto& c : v) out.push_back(c / g);
  return out;
}

Point primitive(const Point& v) { return to_point(primitive(to_integers(v))); }

std::vector<Integer> hyperplane_normal(const IntMatrix& rows) {
  const std::size_t n = rows.cols();
  if (rows.rows() + 1 != n) throw InvalidInput("hyperplane_normal needs n-1 rows in dimension n");
  std::vector<Integer> normal(n);
  for (std::size_t skip = 0; skip < n; ++skip) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 0; r + 1 < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == skip) continue;
        minor(r, cc++) = rows(r, c);
      }
    }
    const Integer d = determinant(minor);
    normal[skip] = (skip % 2 == 0) ? d : Integer(-d);
  }
  return normal;
}

}  // namespace toricreg
