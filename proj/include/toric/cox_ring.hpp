#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "toric/fan.hpp"
#include "toric/lattice.hpp"
#include "toric/polyhedral.hpp"
#include "toric/polynomial.hpp"

namespace toric {

/// The Cox ring of a smooth complete toric variety, held implicitly as the
/// polynomial ring in one variable per ray graded by Q : Z^rays -> Cl = Z^r.
class CoxData {
 public:
  /// Rejects fans that are not smooth and complete (NotSmooth / NotComplete)
  /// and class groups with torsion (TorsionClassGroup).
  explicit CoxData(Fan fan);

  const Fan& fan() const noexcept { return fan_; }
  std::size_t cl_rank() const noexcept { return degree_map_.target_rank; }
  std::size_t num_vars() const noexcept { return fan_.num_rays(); }
  const LatticeMap& degree_map() const noexcept { return degree_map_; }
  const std::vector<std::string>& variable_names() const noexcept { return names_; }
  const RationalCone& effective_cone() const noexcept { return effective_cone_; }
  const LinearFormKappa& kappa() const noexcept { return kappa_; }

  // Variables whose degrees are the standard basis of Cl.
  const std::vector<std::size_t>& basis_variables() const noexcept { return basis_vars_; }
  const std::vector<std::size_t>& cone_variables() const noexcept { return cone_vars_; }

  Vector variable_degree(std::size_t rho) const { return degree_map_.matrix.column(rho); }
  Vector degree(const Exponent& e) const;
  Vector divisor_class(const TorusInvariantDivisor& d) const;
  // nullopt for the zero polynomial and for inhomogeneous input.
  std::optional<Vector> degree_of(const GradedPolynomial& p) const;

  std::string format(const GradedPolynomial& p) const { return p.to_string(names_); }
  std::string format(const Exponent& e) const;

 private:
  Fan fan_;
  LatticeMap degree_map_;
  std::vector<std::string> names_;
  std::vector<std::size_t> basis_vars_;
  std::vector<std::size_t> cone_vars_;
  RationalCone effective_cone_;
  LinearFormKappa kappa_;
};

/// #{e >= 0 : Q e = lambda}, by enumeration over the variables of the basis cone.
std::size_t fiber_count(const CoxData& cd, std::span<const Integer> lambda);

/// Lattice points of P_D = {m : <m, v_rho> >= -a_rho}.
RationalPolytope section_polytope(const Fan& f, const TorusInvariantDivisor& d);

/// Lattice-point count of P_D for an integral lift D of lambda.
std::size_t section_polytope_count(const CoxData& cd, std::span<const Integer> lambda);

/// dim S^lambda; both oracles are evaluated and must agree (OracleMismatch otherwise).
std::size_t graded_dimension(const CoxData& cd, std::span<const Integer> lambda);

/// Exponent vectors of the monomials of degree lambda, sorted lexicographically.
std::vector<Exponent> monomial_basis(const CoxData& cd, std::span<const Integer> lambda);

/// All monomials with kappa-weight at most max_weight, sorted lexicographically.
std::vector<Exponent> monomials_up_to_weight(const CoxData& cd, const LinearFormKappa& kappa,
                                             const Integer& max_weight);

RationalCone effective_cone(const CoxData& cd);

LinearFormKappa kappa(const CoxData& cd);

struct MonomialIdeal {
  std::vector<Exponent> generators;
};

/// Generated by prod_{rho not in sigma} x_rho over maximal cones sigma,
/// reduced to a minimal generating set, in cone order.
MonomialIdeal irrelevant_ideal(const CoxData& cd);

/// lambda_0 = Q(D), so that Gamma(O(D)) is S shifted by lambda_0.
Vector shift_module_degree(const CoxData& cd, const TorusInvariantDivisor& d);

/// Compares lattice-point counts of P_{D + D_mu} with dim S^{mu + lambda_0} for
/// every mu in the box |mu_i| <= radius. Returns the first failing mu, if any.
std::optional<Vector> verify_shift_identity(const CoxData& cd, const TorusInvariantDivisor& d,
                                            int radius);

/// Every integer vector in [-radius, radius]^dim, in lexicographic order.
std::vector<Vector> box_points(std::size_t dim, int radius);

}  // namespace toric
