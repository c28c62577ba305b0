#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

/// Rays live in the cocharacter lattice N = Z^dim; cones are 0-based ray indices.
struct Fan {
  std::size_t dim = 0;
  std::vector<Vector> rays;
  std::vector<std::vector<std::size_t>> max_cones;

  std::size_t num_rays() const noexcept { return rays.size(); }
};

/// D = sum_rho a_rho D_rho
struct TorusInvariantDivisor {
  Vector coefficients;

  friend bool operator==(const TorusInvariantDivisor&, const TorusInvariantDivisor&) = default;
};

TorusInvariantDivisor operator+(const TorusInvariantDivisor& a, const TorusInvariantDivisor& b);

struct FanReport {
  bool simplicial = false;
  bool smooth = false;
  bool complete = false;
};

/// Throws MalformedFan naming the offending ray or cone index.
void check_well_formed(const Fan& f);

FanReport validate_fan(const Fan& f);

/// #rays x dim matrix with the rays as rows; as a map M -> Z^rays it is the
/// divisor map m |-> (<m, v_rho>)_rho.
IntegerMatrix divisor_map(const Fan& f);

struct ClassGroup {
  AbelianGroupPresentation group;
  // r x #rays; column rho is the class [D_rho].
  LatticeMap degree_map;
  // Maximal cone whose complementary divisors form the basis of Cl, when one exists.
  std::optional<std::size_t> basis_cone;
};

/// Cl(X) = coker(divisor_map). For smooth fans the basis is the classes of the
/// rays outside the first maximal cone whose complement is unimodular.
ClassGroup class_group(const Fan& f);

/// Local data m_sigma with <m_sigma, v_rho> = -a_rho for rho in sigma, so that
/// chi^{-m_sigma} is a local equation of D on U_sigma.
struct CartierData {
  std::vector<Vector> local_characters;  // one per maximal cone
};

CartierData cartier_data(const Fan& f, const TorusInvariantDivisor& d);

/// Exponents g_{sigma tau} = m_sigma - m_tau of the transition monomials.
class CechCocycle {
 public:
  CechCocycle(std::size_t cones, std::vector<Vector> table)
      : cones_(cones), table_(std::move(table)) {}

  std::size_t num_cones() const noexcept { return cones_; }
  const Vector& operator()(std::size_t sigma, std::size_t tau) const {
    return table_[sigma * cones_ + tau];
  }

 private:
  std::size_t cones_;
  std::vector<Vector> table_;
};

CechCocycle cech_transitions(const Fan& f, const TorusInvariantDivisor& d);

/// Strict convexity of the support function; requires a complete fan.
bool is_ample(const Fan& f, const TorusInvariantDivisor& d);

TorusInvariantDivisor anticanonical(const Fan& f);

/// Same rays in the same order and the same set of maximal cones.
bool same_fan(const Fan& a, const Fan& b);

}  // namespace toric
