#pragma once

#include <cstddef>
#include <vector>

#include "toric/fan.hpp"
#include "toric/lattice.hpp"

namespace toric {

/// Grading matrix Q : Z^(n+r) -> Z^r together with an ample class w.
struct GradingInput {
  IntegerMatrix Q;
  Vector w;
};

/// Rows of a kernel basis of Q, made primitive. multiplicities[i] is the
/// content of row i before primitivization; a smooth fan needs all of them = 1.
struct GaleDual {
  IntegerMatrix rays;
  std::vector<Integer> multiplicities;

  bool all_primitive() const;
};

GaleDual gale_dual_rays(const GradingInput& gi);

/// Normal fan of {m : <m, v_i> >= -a_i} for an integral lift Q a = w.
Fan reconstruct_fan(const GradingInput& gi);

/// Same, with explicit ray coordinates (rows, a basis of ker Q) and lift.
Fan reconstruct_fan(const GradingInput& gi, const IntegerMatrix& ray_rows,
                    std::span<const Integer> lift);

/// fan -> (Q, Q(D)) -> fan, compared literally using the fan's own divisor
/// map as the kernel basis of Q.
bool roundtrip_check(const Fan& f, const TorusInvariantDivisor& ample);

struct SplittingCertificate {
  std::size_t rank = 0;
  std::vector<Vector> degree_multiset;  // sorted
  Vector degree_sum;
  Vector anticanonical_class;
  bool anticanonical_check = false;
  bool divisor_match = false;
};

SplittingCertificate splitting_certificate(const Fan& f);

}  // namespace toric
