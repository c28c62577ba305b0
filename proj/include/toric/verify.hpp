#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "toric/cox_ring.hpp"
#include "toric/euler_module.hpp"
#include "toric/fan.hpp"

namespace toric {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  int window = 4;             // |lambda_i| <= window for graded dimensions
  int max_weight = 6;         // kappa-weight bound for monomial checks
  int leibniz_pairs = 100;
  int random_divisors = 20;
  int ample_coefficient_max = 2;
  int decomposition_radius = 2;
  std::uint64_t seed = 20240601;
};

CheckResult check_exactness(const Fan& f);
CheckResult check_graded_dimensions(const CoxData& cd, int window);
CheckResult check_shift_identity(const CoxData& cd, int radius);
CheckResult check_euler_identity(const EulerModule& em, const LinearFormKappa& kappa,
                                 int max_weight, std::uint64_t seed);
CheckResult check_leibniz(const EulerModule& em, int pairs, std::uint64_t seed);
CheckResult check_kappa_hat_image(const EulerModule& em, const LinearFormKappa& kappa,
                                  int max_weight);
CheckResult check_generation_transfer(const EulerModule& em, const LinearFormKappa& kappa,
                                      int bound);
CheckResult check_little_hilbert_counterexample();
CheckResult check_kappa_choice_invariance(const EulerModule& em, int max_weight);
CheckResult check_decomposition(const EulerModule& em, int radius);
CheckResult check_splitting(const Fan& f);
CheckResult check_roundtrip(const Fan& f, int coefficient_max);
CheckResult check_cech(const Fan& f, int divisors, std::uint64_t seed);

/// Full invariant suite. Throws NotSmooth / NotComplete when the fan does not
/// meet the preconditions.
std::vector<CheckResult> verify_fan(const Fan& f, const VerifyOptions& opts = {});

/// A second valid kappa: 2 kappa + (first facet normal of Eff).
LinearFormKappa alternative_kappa(const CoxData& cd);

}  // namespace toric
