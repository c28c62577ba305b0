#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace toric {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Vector = std::vector<Integer>;

Integer dot(std::span<const Integer> a, std::span<const Integer> b);
Integer gcd_of(std::span<const Integer> v);
// Divides by the content; the zero vector is returned unchanged.
Vector primitive(Vector v);
bool is_zero(std::span<const Integer> v);
Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);
Integer floor(const Rational& q);
Integer ceil(const Rational& q);

/// Dense matrix over Z with row-major storage.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);
  IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntegerMatrix identity(std::size_t n);
  // Rows of the result are the given vectors; `cols` is used when `rows` is empty.
  static IntegerMatrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static IntegerMatrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  std::vector<Vector> row_vectors() const;
  std::vector<Vector> column_vectors() const;

  IntegerMatrix transpose() const;
  IntegerMatrix select_rows(std::span<const std::size_t> idx) const;
  IntegerMatrix select_columns(std::span<const std::size_t> idx) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_columns(std::size_t a, std::size_t b);
  // row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void add_column_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t i);
  void negate_column(std::size_t j);

  bool is_zero() const;

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
Vector operator*(const IntegerMatrix& a, std::span<const Integer> x);
std::ostream& operator<<(std::ostream& os, const IntegerMatrix& m);

Integer determinant(const IntegerMatrix& a);
std::size_t rank(const IntegerMatrix& a);

struct SmithForm {
  IntegerMatrix U;  // rows x rows, unimodular
  IntegerMatrix D;  // rows x cols, diagonal
  IntegerMatrix V;  // cols x cols, unimodular
  std::size_t rank = 0;

  // Nonzero diagonal entries, in order.
  std::vector<Integer> diagonal() const;
};

/// U * A * V == D with D diagonal, nonnegative, and d_1 | d_2 | ... on the
/// nonzero part.
SmithForm smith_normal_form(const IntegerMatrix& a);

/// Row-style Hermite normal form of the row lattice of `a`, zero rows dropped.
/// Pivots are positive and entries above each pivot are reduced into [0, pivot).
IntegerMatrix hermite_rows(const IntegerMatrix& a);

/// Columns form a basis of the saturated lattice {x in Z^cols : A x = 0}.
/// The basis is canonical: its transpose is in Hermite form.
IntegerMatrix kernel_basis(const IntegerMatrix& a);

/// Some x in Z^cols with A x = b, or nullopt if none exists.
std::optional<Vector> solve_integral(const IntegerMatrix& a, std::span<const Integer> b);

/// Unique rational solution of a square nonsingular system.
std::optional<std::vector<Rational>> solve_rational(const IntegerMatrix& a,
                                                    std::span<const Integer> b);

/// True when the column lattices of `a` and `b` coincide.
bool same_column_lattice(const IntegerMatrix& a, const IntegerMatrix& b);

/// Cokernel Z^target / image(A), where target = rows(A).
struct AbelianGroupPresentation {
  std::size_t free_rank = 0;
  std::vector<Integer> invariant_factors;
  // (free_rank + #invariant_factors) x target. The first free_rank rows give
  // coordinates in Z^free_rank, the rest are read modulo the invariant factors.
  IntegerMatrix projection;

  bool torsion_free() const { return invariant_factors.empty(); }
};

AbelianGroupPresentation cokernel(const IntegerMatrix& a);

struct LatticeMap {
  std::size_t source_rank = 0;
  std::size_t target_rank = 0;
  IntegerMatrix matrix;  // target_rank x source_rank

  explicit LatticeMap(IntegerMatrix m);
  LatticeMap() = default;

  Vector operator()(std::span<const Integer> x) const { return matrix * x; }
};

LatticeMap compose(const LatticeMap& outer, const LatticeMap& inner);

std::ostream& operator<<(std::ostream& os, const Vector& v);

}  // namespace toric
