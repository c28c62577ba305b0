#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toric/cox_ring.hpp"
#include "toric/polynomial.hpp"

namespace toric {

/// Gamma(R) as the graded free S-module with basis e_rho, one per ray; e_rho
/// sits in degree deg x_rho, matching the summand O(-D_rho) of the splitting.
class EulerModule {
 public:
  explicit EulerModule(CoxData cox);

  const CoxData& cox() const noexcept { return cox_; }
  std::size_t rank() const noexcept { return basis_degrees_.size(); }
  const std::vector<Vector>& basis_degrees() const noexcept { return basis_degrees_; }

 private:
  CoxData cox_;
  std::vector<Vector> basis_degrees_;
};

EulerModule build_euler_module(const CoxData& cd);

/// sum_rho p_rho e_rho. Homogeneous of degree lambda when every nonzero
/// p_rho has degree lambda - deg x_rho.
struct EulerModuleElement {
  std::vector<GradedPolynomial> components;
  std::optional<Vector> degree;

  bool is_zero() const;
};

EulerModuleElement zero_element(const EulerModule& em);
EulerModuleElement basis_element(const EulerModule& em, std::size_t rho);
EulerModuleElement operator+(const EulerModuleElement& a, const EulerModuleElement& b);
EulerModuleElement operator*(const GradedPolynomial& s, const EulerModuleElement& w);
bool operator==(const EulerModuleElement& a, const EulerModuleElement& b);

/// Degree recomputed from the components; nullopt if zero or inhomogeneous.
std::optional<Vector> element_degree(const EulerModule& em, const EulerModuleElement& w);

/// sum_rho dim S^{lambda - deg x_rho}
std::size_t graded_piece_dim(const EulerModule& em, std::span<const Integer> lambda);

/// ds = (ds/dx_rho)_rho. Throws InhomogeneousInput for inhomogeneous s.
EulerModuleElement derivation(const EulerModule& em, const GradedPolynomial& s);

/// kappa_hat(sum p_rho e_rho) = sum kappa(deg x_rho) x_rho p_rho.
GradedPolynomial kappa_hat(const EulerModule& em, const EulerModuleElement& w,
                           const LinearFormKappa& kappa);

struct EulerIdentityReport {
  std::size_t checked = 0;
  std::vector<std::string> counterexamples;

  bool ok() const { return counterexamples.empty(); }
};

/// Checks kappa_hat(ds) = kappa(deg s) s on every monomial of kappa-weight at
/// most max_weight and on `trials` random homogeneous polynomials.
EulerIdentityReport verify_euler_identity(const EulerModule& em, const LinearFormKappa& kappa,
                                          std::size_t trials, int max_weight = 6,
                                          std::uint64_t seed = 1);

/// kappa_hat of the module basis: kappa(deg x_rho) x_rho.
std::vector<GradedPolynomial> generation_transfer(const EulerModule& em,
                                                  const LinearFormKappa& kappa);

/// True iff `candidates` generate every graded piece of weight <= bound of the
/// polynomial ring with the given positive variable weights.
bool little_hilbert_check(std::span<const Integer> weights,
                          const std::vector<GradedPolynomial>& candidates, int bound);

/// Graded bookkeeping for 0 -> Gamma(Omega(l)) -> Gamma(R(l)) -> Lambda (x) S^l
/// at one degree. omega_dim is the kernel dimension of the right-hand map.
struct DecompositionRow {
  Vector lambda;
  std::size_t module_dim = 0;      // dim Gamma(R)_lambda
  std::size_t lattice_term_dim = 0;  // r * dim S^lambda
  std::size_t image_rank = 0;
  std::size_t omega_dim = 0;
};

struct DecompositionReport {
  std::vector<DecompositionRow> rows;
  bool rank_identity = false;  // rank Gamma(R) = n + r
  bool ok = false;
};

DecompositionRow decomposition_row(const EulerModule& em, std::span<const Integer> lambda);
DecompositionReport tinvariant_decomposition_check(const EulerModule& em, int radius = 2);

}  // namespace toric
