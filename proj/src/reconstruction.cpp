#include "toric/reconstruction.hpp"

#include <algorithm>
#include <set>

#include "toric/cox_ring.hpp"
#include "toric/error.hpp"
#include "toric/euler_module.hpp"
#include "toric/polyhedral.hpp"

namespace toric {

bool GaleDual::all_primitive() const {
  return std::all_of(multiplicities.begin(), multiplicities.end(),
                     [](const Integer& a) { return a == 1; });
}

namespace {

void check_surjective(const IntegerMatrix& q) {
  const SmithForm s = smith_normal_form(q);
  const auto d = s.diagonal();
  if (s.rank != q.rows() || !std::all_of(d.begin(), d.end(), [](const Integer& x) { return x == 1; })) {
    throw Error(ErrorCode::NotSurjective, "grading matrix Q is not surjective onto Z^r");
  }
}

}  // namespace

GaleDual gale_dual_rays(const GradingInput& gi) {
  check_surjective(gi.Q);
  const IntegerMatrix k = kernel_basis(gi.Q);
  GaleDual g{IntegerMatrix(k.rows(), k.cols()), {}};
  for (std::size_t i = 0; i < k.rows(); ++i) {
    Vector row = k.row(i);
    if (is_zero(row)) {
      throw Error(ErrorCode::DegenerateRay,
                  "kernel row " + std::to_string(i) + " is zero; variable " + std::to_string(i) +
                      " cannot correspond to a ray");
    }
    g.multiplicities.push_back(gcd_of(row));
    row = primitive(std::move(row));
    for (std::size_t j = 0; j < row.size(); ++j) g.rays(i, j) = row[j];
  }
  return g;
}

Fan reconstruct_fan(const GradingInput& gi, const IntegerMatrix& ray_rows,
                    std::span<const Integer> lift) {
  const std::size_t nvars = gi.Q.cols();
  const std::size_t n = ray_rows.cols();
  if (ray_rows.rows() != nvars || lift.size() != nvars) {
    throw Error(ErrorCode::DimensionMismatch, "ray rows or lift do not match the columns of Q");
  }
  if (gi.Q * lift != gi.w) {
    throw Error(ErrorCode::NotAmpleLift, "lift does not map to the ample class");
  }

  std::vector<HalfSpace> hs;
  for (std::size_t i = 0; i < nvars; ++i) hs.push_back({ray_rows.row(i), lift[i]});
  const RationalPolytope p(n, std::move(hs));
  if (p.empty()) throw Error(ErrorCode::NotAmpleLift, "section polytope is empty");
  if (!p.bounded()) throw Error(ErrorCode::NotAmpleLift, "section polytope is unbounded");

  // full-dimensional iff vertex differences span R^n
  const auto& verts = p.vertices();
  {
    std::vector<std::vector<Rational>> diffs;
    Integer den = 1;
    for (const auto& v : verts)
      for (const auto& x : v) den = boost::multiprecision::lcm(den, denominator(x));
    std::vector<Vector> rows;
    for (std::size_t k = 1; k < verts.size(); ++k) {
      Vector d(n);
      for (std::size_t i = 0; i < n; ++i) {
        Rational x = (verts[k][i] - verts[0][i]) * den;
        d[i] = numerator(x);
      }
      rows.push_back(std::move(d));
    }
    if (rank(IntegerMatrix::from_rows(rows, n)) != n) {
      throw Error(ErrorCode::NotAmpleLift, "section polytope is not full-dimensional; class is not ample");
    }
  }

  Fan f;
  f.dim = n;
  f.rays = ray_rows.row_vectors();
  std::vector<bool> active_somewhere(nvars, false);
  for (std::size_t k = 0; k < verts.size(); ++k) {
    std::vector<std::size_t> cone;
    for (std::size_t i = 0; i < nvars; ++i) {
      Rational value = 0;
      for (std::size_t j = 0; j < n; ++j) value += verts[k][j] * Rational(ray_rows(i, j));
      if (value == Rational(-lift[i])) {
        cone.push_back(i);
        active_somewhere[i] = true;
      }
    }
    if (cone.size() != n) {
      throw Error(ErrorCode::NotSmooth,
                  "vertex " + std::to_string(k) + " is not simple; the normal fan is not simplicial");
    }
    f.max_cones.push_back(std::move(cone));
  }
  for (std::size_t i = 0; i < nvars; ++i) {
    if (!active_somewhere[i]) {
      throw Error(ErrorCode::NotAmpleLift,
                  "ray " + std::to_string(i) + " is inactive at every vertex; class is not ample");
    }
  }
  const FanReport report = validate_fan(f);
  if (!report.smooth || !report.complete) {
    throw Error(ErrorCode::NotSmooth, "normal fan is not smooth and complete");
  }
  return f;
}

Fan reconstruct_fan(const GradingInput& gi) {
  const GaleDual g = gale_dual_rays(gi);
  for (std::size_t i = 0; i < g.multiplicities.size(); ++i) {
    if (g.multiplicities[i] != 1) {
      throw Error(ErrorCode::NotSmooth, "kernel row " + std::to_string(i) + " has multiplicity " +
                                            g.multiplicities[i].str() +
                                            "; the grading is not that of a smooth toric variety");
    }
  }
  std::set<Vector> distinct;
  for (const auto& r : g.rays.row_vectors()) {
    if (!distinct.insert(r).second) {
      throw Error(ErrorCode::NotSmooth, "two variables give the same ray");
    }
  }
  const RationalCone eff = RationalCone::from_generators(gi.Q.rows(), gi.Q.column_vectors());
  if (gi.w.size() != gi.Q.rows() || !cone_contains(eff, gi.w, ConeMembership::RelativeInterior) ||
      !eff.is_full_dimensional()) {
    throw Error(ErrorCode::NotAmpleLift, "w is not in the interior of the cone spanned by Q");
  }
  const auto lift = solve_integral(gi.Q, gi.w);
  return reconstruct_fan(gi, g.rays, *lift);
}

bool roundtrip_check(const Fan& f, const TorusInvariantDivisor& ample) {
  const FanReport report = validate_fan(f);
  if (!report.smooth) throw Error(ErrorCode::NotSmooth, "round trip requires a smooth fan");
  if (!report.complete) throw Error(ErrorCode::NotComplete, "round trip requires a complete fan");
  if (!is_ample(f, ample)) throw Error(ErrorCode::NotAmpleLift, "divisor is not ample");

  const ClassGroup cg = class_group(f);
  if (!cg.group.torsion_free()) throw Error(ErrorCode::TorsionClassGroup, "class group has torsion");
  const GradingInput gi{cg.degree_map.matrix, cg.degree_map(ample.coefficients)};

  // The fan's divisor map must itself be a basis of ker Q for the literal comparison.
  const GaleDual g = gale_dual_rays(gi);
  if (!g.all_primitive()) return false;
  const IntegerMatrix div = divisor_map(f);
  if (!(gi.Q * div).is_zero() || !same_column_lattice(div, kernel_basis(gi.Q))) return false;

  const auto lift = solve_integral(gi.Q, gi.w);
  return same_fan(reconstruct_fan(gi, div, *lift), f);
}

SplittingCertificate splitting_certificate(const Fan& f) {
  const EulerModule em = build_euler_module(CoxData(f));
  const CoxData& cd = em.cox();
  SplittingCertificate cert;
  cert.rank = em.rank();
  cert.degree_multiset = em.basis_degrees();
  std::sort(cert.degree_multiset.begin(), cert.degree_multiset.end());
  cert.degree_sum = Vector(cd.cl_rank());
  for (const auto& d : em.basis_degrees())
    for (std::size_t i = 0; i < d.size(); ++i) cert.degree_sum[i] += d[i];
  cert.anticanonical_class = cd.divisor_class(anticanonical(f));
  cert.anticanonical_check = cert.degree_sum == cert.anticanonical_class;
  cert.divisor_match = true;
  for (std::size_t rho = 0; rho < em.rank(); ++rho) {
    Vector unit(f.num_rays());
    unit[rho] = 1;
    cert.divisor_match = cert.divisor_match &&
                         em.basis_degrees()[rho] == cd.divisor_class(TorusInvariantDivisor{unit});
  }
  cert.divisor_match = cert.divisor_match && cert.rank == f.num_rays();
  return cert;
}

}  // namespace toric
