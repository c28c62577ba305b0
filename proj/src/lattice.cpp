#include "toric/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

#include "toric/error.hpp"

namespace toric {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::MalformedFan: return "MalformedFan";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::RaysDontSpan: return "RaysDontSpan";
    case ErrorCode::NotCartier: return "NotCartier";
    case ErrorCode::NotComplete: return "NotComplete";
    case ErrorCode::NotSmooth: return "NotSmooth";
    case ErrorCode::TorsionClassGroup: return "TorsionClassGroup";
    case ErrorCode::UnboundedPolytope: return "UnboundedPolytope";
    case ErrorCode::NotPointed: return "NotPointed";
    case ErrorCode::OracleMismatch: return "OracleMismatch";
    case ErrorCode::InhomogeneousInput: return "InhomogeneousInput";
    case ErrorCode::NotSurjective: return "NotSurjective";
    case ErrorCode::DegenerateRay: return "DegenerateRay";
    case ErrorCode::NotAmpleLift: return "NotAmpleLift";
  }
  return "Unknown";
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::DimensionMismatch, "dot product of vectors with different lengths");
  }
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer gcd_of(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
  return abs(g);
}

Vector primitive(Vector v) {
  Integer g = gcd_of(v);
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
  return v;
}

bool is_zero(std::span<const Integer> v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  Integer r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

Integer ceil_div(const Integer& a, const Integer& b) { return -floor_div(-a, b); }

Integer floor(const Rational& q) {
  return floor_div(numerator(q), denominator(q));
}

Integer ceil(const Rational& q) { return ceil_div(numerator(q), denominator(q)); }

// --- IntegerMatrix -----------------------------------------------------------

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
    }
    for (long long x : r) data_.emplace_back(x);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  IntegerMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw Error(ErrorCode::DimensionMismatch, "row length does not match column count");
    }
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntegerMatrix IntegerMatrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  return from_rows(cols, rows).transpose();
}

Vector IntegerMatrix::row(std::size_t i) const {
  return Vector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

Vector IntegerMatrix::column(std::size_t j) const {
  Vector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<Vector> IntegerMatrix::row_vectors() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

std::vector<Vector> IntegerMatrix::column_vectors() const {
  std::vector<Vector> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntegerMatrix IntegerMatrix::select_rows(std::span<const std::size_t> idx) const {
  IntegerMatrix m(idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(idx[i], j);
  return m;
}

IntegerMatrix IntegerMatrix::select_columns(std::span<const std::size_t> idx) const {
  IntegerMatrix m(rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = (*this)(i, idx[j]);
  return m;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntegerMatrix::swap_columns(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntegerMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntegerMatrix::add_column_multiple(std::size_t dst, std::size_t src,
                                        const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

void IntegerMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntegerMatrix::negate_column(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

bool IntegerMatrix::is_zero() const { return toric::is_zero(data_); }

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix product with incompatible shapes");
  }
  IntegerMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

Vector operator*(const IntegerMatrix& a, std::span<const Integer> x) {
  if (a.cols() != x.size()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix-vector product with incompatible shapes");
  }
  Vector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

std::ostream& operator<<(std::ostream& os, const IntegerMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ", ";
    os << m.row(i);
  }
  return os << ']';
}

std::ostream& operator<<(std::ostream& os, const Vector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  return os << ')';
}

// Bareiss fraction-free elimination.
Integer determinant(const IntegerMatrix& a) {
  if (a.rows() != a.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  }
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntegerMatrix m = a;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::size_t rank(const IntegerMatrix& a) { return hermite_rows(a).rows(); }

// --- Smith normal form ---------------------------------------------------------

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < rank; ++i) d.push_back(D(i, i));
  return d;
}

namespace {

// Position of the nonzero entry of least absolute value in row t / column t
// of the trailing block, or nullopt if both are zero.
std::optional<std::pair<std::size_t, std::size_t>> smallest_in_cross(const IntegerMatrix& d,
                                                                     std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Integer best_abs;
  auto consider = [&](std::size_t i, std::size_t j) {
    const Integer& x = d(i, j);
    if (x == 0) return;
    Integer ax = abs(x);
    if (!best || ax < best_abs) {
      best = {i, j};
      best_abs = ax;
    }
  };
  for (std::size_t i = t; i < d.rows(); ++i) consider(i, t);
  for (std::size_t j = t + 1; j < d.cols(); ++j) consider(t, j);
  return best;
}

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  SmithForm s{IntegerMatrix::identity(m), a, IntegerMatrix::identity(n), 0};
  IntegerMatrix& d = s.D;

  std::size_t t = 0;
  while (t < std::min(m, n)) {
    // global pivot: smallest nonzero entry of the trailing block
    std::optional<std::pair<std::size_t, std::size_t>> pivot;
    Integer pivot_abs;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (d(i, j) != 0 && (!pivot || abs(d(i, j)) < pivot_abs)) {
          pivot = {i, j};
          pivot_abs = abs(d(i, j));
        }
    if (!pivot) break;

    while (true) {
      auto p = smallest_in_cross(d, t);
      if (p) {
        d.swap_rows(t, p->first);
        s.U.swap_rows(t, p->first);
        d.swap_columns(t, p->second);
        s.V.swap_columns(t, p->second);
      } else {
        // trailing cross is zero but pivot exists elsewhere; bring it in
        d.swap_rows(t, pivot->first);
        s.U.swap_rows(t, pivot->first);
        d.swap_columns(t, pivot->second);
        s.V.swap_columns(t, pivot->second);
      }
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        Integer q = d(i, t) / d(t, t);
        d.add_row_multiple(i, t, -q);
        s.U.add_row_multiple(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        Integer q = d(t, j) / d(t, t);
        d.add_column_multiple(j, t, -q);
        s.V.add_column_multiple(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // enforce divisibility of the remaining block by the pivot
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < m && !bad_row; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad_row = i;
            break;
          }
      if (!bad_row) break;
      d.add_row_multiple(t, *bad_row, 1);
      s.U.add_row_multiple(t, *bad_row, 1);
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      s.U.negate_row(t);
    }
    ++t;
  }
  s.rank = t;
  return s;
}

// --- Hermite form, kernels, solving --------------------------------------------

IntegerMatrix hermite_rows(const IntegerMatrix& a) {
  IntegerMatrix h = a;
  const std::size_t m = h.rows();
  const std::size_t n = h.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    while (true) {
      std::optional<std::size_t> best;
      for (std::size_t i = r; i < m; ++i)
        if (h(i, c) != 0 && (!best || abs(h(i, c)) < abs(h(*best, c)))) best = i;
      if (!best) break;
      h.swap_rows(r, *best);
      bool clean = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (h(i, c) == 0) continue;
        h.add_row_multiple(i, r, -(h(i, c) / h(r, c)));
        if (h(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) h.negate_row(r);
    for (std::size_t i = 0; i < r; ++i) h.add_row_multiple(i, r, -floor_div(h(i, c), h(r, c)));
    ++r;
  }
  std::vector<std::size_t> keep(r);
  for (std::size_t i = 0; i < r; ++i) keep[i] = i;
  return h.select_rows(keep);
}

IntegerMatrix kernel_basis(const IntegerMatrix& a) {
  const SmithForm s = smith_normal_form(a);
  std::vector<std::size_t> free_cols;
  for (std::size_t j = s.rank; j < a.cols(); ++j) free_cols.push_back(j);
  if (free_cols.empty()) return IntegerMatrix(a.cols(), 0);
  IntegerMatrix k = s.V.select_columns(free_cols);
  return hermite_rows(k.transpose()).transpose();
}

std::optional<Vector> solve_integral(const IntegerMatrix& a, std::span<const Integer> b) {
  if (b.size() != a.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "right-hand side length does not match rows");
  }
  const SmithForm s = smith_normal_form(a);
  const Vector ub = s.U * b;
  Vector y(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i < s.rank) {
      if (ub[i] % s.D(i, i) != 0) return std::nullopt;
      y[i] = ub[i] / s.D(i, i);
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return s.V * y;
}

std::optional<std::vector<Rational>> solve_rational(const IntegerMatrix& a,
                                                    std::span<const Integer> b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "solve_rational expects a square system");
  }
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(a(i, j));
    m[i][n] = Rational(b[i]);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[p], m[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j <= n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
  return x;
}

bool same_column_lattice(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.rows() != b.rows()) return false;
  return hermite_rows(a.transpose()) == hermite_rows(b.transpose());
}

AbelianGroupPresentation cokernel(const IntegerMatrix& a) {
  const std::size_t target = a.rows();
  const SmithForm s = smith_normal_form(a);
  AbelianGroupPresentation g;
  g.free_rank = target - s.rank;

  std::vector<std::size_t> free_rows;
  for (std::size_t i = s.rank; i < target; ++i) free_rows.push_back(i);
  IntegerMatrix free_part = hermite_rows(s.U.select_rows(free_rows));

  std::vector<Vector> rows = free_part.row_vectors();
  for (std::size_t i = 0; i < s.rank; ++i) {
    const Integer& d = s.D(i, i);
    if (d == 1) continue;
    g.invariant_factors.push_back(d);
    Vector r = s.U.row(i);
    for (auto& x : r) x = x - d * floor_div(x, d);
    rows.push_back(std::move(r));
  }
  g.projection = IntegerMatrix::from_rows(rows, target);
  return g;
}

LatticeMap::LatticeMap(IntegerMatrix m)
    : source_rank(m.cols()), target_rank(m.rows()), matrix(std::move(m)) {}

LatticeMap compose(const LatticeMap& outer, const LatticeMap& inner) {
  if (outer.source_rank != inner.target_rank) {
    throw Error(ErrorCode::DimensionMismatch, "lattice maps are not composable");
  }
  return LatticeMap(outer.matrix * inner.matrix);
}

}  // namespace toric
