#pragma once

#include <cstddef>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

/// Output of the double description method for {x : <a, x> >= 0, a in A}.
struct ConeDescription {
  std::vector<Vector> rays;       // extreme rays modulo the lineality space
  std::vector<Vector> lineality;  // basis of the lineality space
};

ConeDescription double_description(std::size_t dim, const std::vector<Vector>& inequalities);

/// Closed polyhedral cone with both representations kept in canonical form:
/// primitive integer vectors, sorted lexicographically, lineality in Hermite form.
class RationalCone {
 public:
  static RationalCone from_generators(std::size_t dim, const std::vector<Vector>& generators);
  static RationalCone from_inequalities(std::size_t dim, const std::vector<Vector>& normals);

  std::size_t ambient_dim() const noexcept { return dim_; }

  // Extreme rays plus both signs of each lineality basis vector.
  std::vector<Vector> generators() const;
  // Facet normals plus both signs of each equation.
  std::vector<Vector> facet_normals() const;

  const std::vector<Vector>& rays() const noexcept { return rays_; }
  const std::vector<Vector>& lineality() const noexcept { return lineality_; }
  const std::vector<Vector>& facets() const noexcept { return facets_; }
  const std::vector<Vector>& equations() const noexcept { return equations_; }

  bool is_pointed() const noexcept { return lineality_.empty(); }
  bool is_full_dimensional() const noexcept { return equations_.empty(); }
  bool is_zero() const noexcept { return rays_.empty() && lineality_.empty(); }

  friend bool operator==(const RationalCone&, const RationalCone&) = default;

 private:
  friend RationalCone dual_cone(const RationalCone& c);

  std::size_t dim_ = 0;
  std::vector<Vector> rays_;
  std::vector<Vector> lineality_;
  std::vector<Vector> facets_;
  std::vector<Vector> equations_;
};

RationalCone dual_cone(const RationalCone& c);

enum class ConeMembership { Closure, RelativeInterior };

bool cone_contains(const RationalCone& c, std::span<const Integer> p, ConeMembership mode);

/// <normal, m> >= -offset
struct HalfSpace {
  Vector normal;
  Integer offset;
};

using RationalPoint = std::vector<Rational>;

class RationalPolytope {
 public:
  RationalPolytope(std::size_t dim, std::vector<HalfSpace> inequalities);

  std::size_t ambient_dim() const noexcept { return dim_; }
  const std::vector<HalfSpace>& inequalities() const noexcept { return inequalities_; }
  // Sorted lexicographically.
  const std::vector<RationalPoint>& vertices() const noexcept { return vertices_; }

  bool empty() const noexcept { return vertices_.empty(); }
  bool bounded() const noexcept { return bounded_; }
  bool contains(std::span<const Integer> m) const;

 private:
  std::size_t dim_;
  std::vector<HalfSpace> inequalities_;
  std::vector<RationalPoint> vertices_;
  bool bounded_ = true;
};

/// All integer points of a bounded polytope, sorted lexicographically.
std::vector<Vector> polytope_lattice_points(const RationalPolytope& p);

/// Minimal generating set of the semigroup c ∩ Z^d (c pointed), sorted.
std::vector<Vector> hilbert_basis(const RationalCone& c);

/// Integral form, nonnegative on the effective cone and >= 1 on its nonzero lattice points.
struct LinearFormKappa {
  Vector coefficients;

  Integer operator()(std::span<const Integer> lambda) const { return dot(coefficients, lambda); }
};

LinearFormKappa strictly_positive_form(const RationalCone& eff, std::size_t lattice_rank);

}  // namespace toric
