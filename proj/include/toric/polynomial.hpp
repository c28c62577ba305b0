#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

using Exponent = std::vector<std::uint32_t>;

/// Polynomial with exact rational coefficients in a fixed number of variables.
/// Zero coefficients are never stored.
class GradedPolynomial {
 public:
  using Terms = std::map<Exponent, Rational>;

  GradedPolynomial() = default;
  explicit GradedPolynomial(std::size_t num_vars) : num_vars_(num_vars) {}

  static GradedPolynomial monomial(Exponent e, Rational c = 1);
  static GradedPolynomial constant(std::size_t num_vars, Rational c);
  static GradedPolynomial variable(std::size_t num_vars, std::size_t i, Rational c = 1);

  std::size_t num_vars() const noexcept { return num_vars_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coefficient(const Exponent& e) const;
  Rational constant_term() const;

  void add_term(const Exponent& e, const Rational& c);

  GradedPolynomial partial(std::size_t var) const;
  GradedPolynomial times_variable(std::size_t var) const;

  GradedPolynomial& operator+=(const GradedPolynomial& o);
  GradedPolynomial& operator-=(const GradedPolynomial& o);
  GradedPolynomial& operator*=(const Rational& c);

  friend GradedPolynomial operator+(GradedPolynomial a, const GradedPolynomial& b) { return a += b; }
  friend GradedPolynomial operator-(GradedPolynomial a, const GradedPolynomial& b) { return a -= b; }
  friend GradedPolynomial operator*(GradedPolynomial a, const Rational& c) { return a *= c; }
  friend GradedPolynomial operator*(const Rational& c, GradedPolynomial a) { return a *= c; }
  friend GradedPolynomial operator*(const GradedPolynomial& a, const GradedPolynomial& b);
  friend bool operator==(const GradedPolynomial&, const GradedPolynomial&) = default;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void check_vars(const GradedPolynomial& o) const;

  std::size_t num_vars_ = 0;
  Terms terms_;
};

/// Incremental rank computation over Q: vectors are polynomials, pivots are
/// their leading monomials.
class LinearSpan {
 public:
  // Returns true if `p` was independent of the span so far.
  bool insert(GradedPolynomial p);
  std::size_t dim() const noexcept { return basis_.size(); }
  std::vector<GradedPolynomial> basis() const;

 private:
  std::map<Exponent, GradedPolynomial> basis_;
};

}  // namespace toric
