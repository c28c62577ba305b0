#include "toric/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "toric/error.hpp"
#include "toric/reconstruction.hpp"

namespace toric {

namespace {

CheckResult pass(std::string name, std::string detail) {
  return {std::move(name), true, std::move(detail)};
}

CheckResult fail(std::string name, std::string detail) {
  return {std::move(name), false, std::move(detail)};
}

template <typename F>
CheckResult guarded(const std::string& name, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    return fail(name, std::string(to_string(e.code())) + ": " + e.what());
  }
}

std::string str(const Vector& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

GradedPolynomial random_homogeneous(const CoxData& cd, const std::vector<Exponent>& pool,
                                    std::mt19937_64& rng) {
  const Exponent& e = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
  const auto basis = monomial_basis(cd, cd.degree(e));
  std::uniform_int_distribution<int> coeff(-4, 4);
  GradedPolynomial s(cd.num_vars());
  for (const auto& m : basis) s.add_term(m, Rational(coeff(rng)));
  if (s.is_zero()) s.add_term(e, 1);
  return s;
}

}  // namespace

CheckResult check_exactness(const Fan& f) {
  const std::string name = "exactness";
  return guarded(name, [&] {
    const ClassGroup cg = class_group(f);
    const IntegerMatrix div = divisor_map(f);
    const IntegerMatrix& q = cg.degree_map.matrix;
    if (!(q * div).is_zero()) return fail(name, "Q o div != 0");
    if (!cg.group.torsion_free()) return fail(name, "class group has torsion");
    if (!same_column_lattice(kernel_basis(q), div)) return fail(name, "ker Q != im div");
    if (cg.group.free_rank != f.num_rays() - f.dim) return fail(name, "rank Cl != #rays - n");
    return pass(name, "Q o div = 0, ker Q = im div, rank Cl = " + std::to_string(cg.group.free_rank));
  });
}

CheckResult check_graded_dimensions(const CoxData& cd, int window) {
  const std::string name = "graded_dimensions";
  return guarded(name, [&] {
    std::size_t nonzero = 0;
    const auto points = box_points(cd.cl_rank(), window);
    for (const Vector& lambda : points) {
      const std::size_t d = graded_dimension(cd, lambda);
      if (d > 0) {
        ++nonzero;
        if (!cone_contains(cd.effective_cone(), lambda, ConeMembership::Closure)) {
          return fail(name, "S^" + str(lambda) + " != 0 outside the effective cone");
        }
      }
    }
    return pass(name, "fiber = polytope count on " + std::to_string(points.size()) +
                          " degrees (" + std::to_string(nonzero) + " nonzero)");
  });
}

CheckResult check_shift_identity(const CoxData& cd, int radius) {
  const std::string name = "shift_identity";
  return guarded(name, [&] {
    std::vector<TorusInvariantDivisor> divisors = {anticanonical(cd.fan())};
    Vector unit(cd.num_vars());
    unit[0] = 1;
    divisors.push_back({unit});
    for (const auto& d : divisors) {
      if (auto bad = verify_shift_identity(cd, d, radius)) {
        return fail(name, "dimension mismatch at mu = " + str(*bad));
      }
    }
    return pass(name, "Gamma(O(D))_mu = S^{mu + Q(D)} on |mu_i| <= " + std::to_string(radius));
  });
}

CheckResult check_euler_identity(const EulerModule& em, const LinearFormKappa& kappa,
                                 int max_weight, std::uint64_t seed) {
  const std::string name = "euler_identity";
  return guarded(name, [&] {
    const auto report = verify_euler_identity(em, kappa, 25, max_weight, seed);
    if (!report.ok()) return fail(name, "counterexample: " + report.counterexamples.front());
    return pass(name, "kappa_hat(ds) = kappa(deg s) s on " + std::to_string(report.checked) +
                          " polynomials");
  });
}

CheckResult check_leibniz(const EulerModule& em, int pairs, std::uint64_t seed) {
  const std::string name = "leibniz";
  return guarded(name, [&] {
    const CoxData& cd = em.cox();
    const auto pool = monomials_up_to_weight(cd, cd.kappa(), 3);
    std::mt19937_64 rng(seed);
    for (int k = 0; k < pairs; ++k) {
      const GradedPolynomial s = random_homogeneous(cd, pool, rng);
      const GradedPolynomial t = random_homogeneous(cd, pool, rng);
      const EulerModuleElement lhs = derivation(em, s * t);
      const EulerModuleElement rhs = s * derivation(em, t) + t * derivation(em, s);
      if (!(lhs == rhs)) {
        return fail(name, "d(st) != s dt + t ds for s = " + cd.format(s) + ", t = " + cd.format(t));
      }
    }
    return pass(name, std::to_string(pairs) + " random homogeneous pairs");
  });
}

CheckResult check_kappa_hat_image(const EulerModule& em, const LinearFormKappa& kappa,
                                  int max_weight) {
  const std::string name = "kappa_hat_surjectivity";
  return guarded(name, [&] {
    const CoxData& cd = em.cox();
    const auto monomials = monomials_up_to_weight(cd, kappa, max_weight);
    std::size_t images = 0;
    for (const auto& e : monomials) {
      const GradedPolynomial m = GradedPolynomial::monomial(e);
      const Integer weight = kappa(cd.degree(e));
      const GradedPolynomial image = kappa_hat(em, derivation(em, m), kappa);
      ++images;
      if (image.constant_term() != 0) return fail(name, "constant term in kappa_hat(d" + cd.format(e) + ")");
      if (weight == 0) continue;
      EulerModuleElement witness = derivation(em, m);
      for (auto& p : witness.components) p *= Rational(1, weight);
      if (kappa_hat(em, witness, kappa) != m) {
        return fail(name, "kappa_hat(dm / kappa(deg m)) != m for m = " + cd.format(e));
      }
      // kappa_hat(m e_rho) also lands in S^+
      for (std::size_t rho = 0; rho < em.rank(); ++rho) {
        const GradedPolynomial img = kappa_hat(em, m * basis_element(em, rho), kappa);
        ++images;
        if (img.constant_term() != 0) return fail(name, "constant term in kappa_hat(m e_rho)");
      }
    }
    return pass(name, std::to_string(monomials.size()) + " witnesses, " + std::to_string(images) +
                          " images in S^+");
  });
}

CheckResult check_generation_transfer(const EulerModule& em, const LinearFormKappa& kappa,
                                      int bound) {
  const std::string name = "generation_transfer";
  return guarded(name, [&] {
    const auto gens = generation_transfer(em, kappa);
    std::vector<Integer> weights;
    for (const auto& d : em.basis_degrees()) weights.push_back(kappa(d));
    if (gens.size() != em.cox().fan().dim + em.cox().cl_rank()) {
      return fail(name, "number of generators != n + r");
    }
    if (!little_hilbert_check(weights, gens, bound)) {
      return fail(name, "kappa_hat(e_rho) do not generate S up to weight " + std::to_string(bound));
    }
    return pass(name, std::to_string(gens.size()) + " generators span S up to kappa-weight " +
                          std::to_string(bound));
  });
}

CheckResult check_little_hilbert_counterexample() {
  const std::string name = "little_hilbert";
  return guarded(name, [&] {
    const std::vector<Integer> w = {1, 1};
    const auto x = GradedPolynomial::variable(2, 0);
    const auto y = GradedPolynomial::variable(2, 1);
    if (!little_hilbert_check(w, {x, y}, 5)) return fail(name, "{x, y} rejected");
    if (little_hilbert_check(w, {x * x, y}, 3)) return fail(name, "{x^2, y} accepted");
    return pass(name, "{x, y} generate; {x^2, y} rejected");
  });
}

LinearFormKappa alternative_kappa(const CoxData& cd) {
  LinearFormKappa k = cd.kappa();
  const auto& facets = cd.effective_cone().facets();
  for (std::size_t i = 0; i < k.coefficients.size(); ++i) {
    k.coefficients[i] *= 2;
    if (!facets.empty()) k.coefficients[i] += facets.front()[i];
  }
  return k;
}

CheckResult check_kappa_choice_invariance(const EulerModule& em, int max_weight) {
  const std::string name = "kappa_choice_invariance";
  return guarded(name, [&] {
    const LinearFormKappa other = alternative_kappa(em.cox());
    for (const auto& h : hilbert_basis(em.cox().effective_cone()))
      if (other(h) < 1) return fail(name, "alternative kappa is not strictly positive");
    auto a = check_kappa_hat_image(em, em.cox().kappa(), max_weight);
    auto b = check_kappa_hat_image(em, other, max_weight);
    auto c = check_generation_transfer(em, other, max_weight);
    if (!a.passed || !b.passed || !c.passed) {
      return fail(name, "conclusions differ between kappa choices");
    }
    return pass(name, "same conclusions for kappa and " + str(other.coefficients));
  });
}

CheckResult check_decomposition(const EulerModule& em, int radius) {
  const std::string name = "tinvariant_decomposition";
  return guarded(name, [&] {
    const auto report = tinvariant_decomposition_check(em, radius);
    if (!report.ok) return fail(name, "bookkeeping inconsistent");
    return pass(name, std::to_string(report.rows.size()) + " degrees; rank Gamma(R) = n + r");
  });
}

CheckResult check_splitting(const Fan& f) {
  const std::string name = "splitting_certificate";
  return guarded(name, [&] {
    const SplittingCertificate cert = splitting_certificate(f);
    const std::size_t r = f.num_rays() - f.dim;
    if (cert.rank != f.dim + r) return fail(name, "rank != n + r");
    if (!cert.anticanonical_check) return fail(name, "degree sum != -K");
    if (!cert.divisor_match) return fail(name, "degrees are not invariant prime divisor classes");
    return pass(name, "rank " + std::to_string(cert.rank) + ", sum " + str(cert.degree_sum) + " = -K");
  });
}

CheckResult check_roundtrip(const Fan& f, int coefficient_max) {
  const std::string name = "roundtrip";
  return guarded(name, [&] {
    const std::size_t k = f.num_rays();
    Vector a(k, Integer(0));
    std::size_t ample = 0;
    while (true) {
      const TorusInvariantDivisor d{a};
      if (is_ample(f, d)) {
        ++ample;
        if (!roundtrip_check(f, d)) return fail(name, "round trip differs for D = " + str(a));
      }
      std::size_t i = k;
      while (i > 0 && a[i - 1] == coefficient_max) a[--i] = 0;
      if (i == 0) break;
      ++a[i - 1];
    }
    if (ample == 0) return fail(name, "no ample divisor in the coefficient box");
    return pass(name, std::to_string(ample) + " ample divisors with coefficients in [0," +
                          std::to_string(coefficient_max) + "]");
  });
}

CheckResult check_cech(const Fan& f, int divisors, std::uint64_t seed) {
  const std::string name = "cech_cocycle";
  return guarded(name, [&] {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-3, 3);
    auto random_divisor = [&] {
      Vector a(f.num_rays());
      for (auto& x : a) x = coeff(rng);
      return TorusInvariantDivisor{a};
    };
    for (int t = 0; t < divisors; ++t) {
      const auto d1 = random_divisor();
      const auto d2 = random_divisor();
      const CechCocycle g1 = cech_transitions(f, d1);
      const CechCocycle g2 = cech_transitions(f, d2);
      const CechCocycle g12 = cech_transitions(f, d1 + d2);
      const std::size_t k = g1.num_cones();
      for (std::size_t s = 0; s < k; ++s)
        for (std::size_t u = 0; u < k; ++u) {
          for (std::size_t i = 0; i < f.dim; ++i) {
            if (g1(s, u)[i] != -g1(u, s)[i]) return fail(name, "antisymmetry fails");
            if (g12(s, u)[i] != g1(s, u)[i] + g2(s, u)[i]) return fail(name, "additivity fails");
          }
          for (std::size_t v = 0; v < k; ++v)
            for (std::size_t i = 0; i < f.dim; ++i)
              if (g1(s, u)[i] + g1(u, v)[i] != g1(s, v)[i]) return fail(name, "cocycle identity fails");
        }
    }
    return pass(name, std::to_string(divisors) + " random divisors, all cone triples");
  });
}

std::vector<CheckResult> verify_fan(const Fan& f, const VerifyOptions& opts) {
  const FanReport report = validate_fan(f);
  if (!report.simplicial || !report.smooth) {
    throw Error(ErrorCode::NotSmooth, "verification requires a smooth fan");
  }
  if (!report.complete) throw Error(ErrorCode::NotComplete, "verification requires a complete fan");

  const EulerModule em = build_euler_module(CoxData(f));
  const CoxData& cd = em.cox();
  std::vector<CheckResult> out;
  out.push_back(check_exactness(f));
  out.push_back(check_graded_dimensions(cd, opts.window));
  out.push_back(check_shift_identity(cd, 2));
  out.push_back(check_euler_identity(em, cd.kappa(), opts.max_weight, opts.seed));
  out.push_back(check_leibniz(em, opts.leibniz_pairs, opts.seed + 1));
  out.push_back(check_kappa_hat_image(em, cd.kappa(), opts.max_weight));
  out.push_back(check_generation_transfer(em, cd.kappa(), opts.max_weight));
  out.push_back(check_little_hilbert_counterexample());
  out.push_back(check_kappa_choice_invariance(em, opts.max_weight));
  out.push_back(check_decomposition(em, opts.decomposition_radius));
  out.push_back(check_roundtrip(f, opts.ample_coefficient_max));
  out.push_back(check_splitting(f));
  out.push_back(check_cech(f, opts.random_divisors, opts.seed + 2));
  return out;
}

}  // namespace toric
