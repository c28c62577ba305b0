#include "toric/euler_module.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "toric/error.hpp"

namespace toric {

namespace {

Vector minus(std::span<const Integer> a, std::span<const Integer> b) {
  Vector d(a.begin(), a.end());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] -= b[i];
  return d;
}

}  // namespace

EulerModule::EulerModule(CoxData cox) : cox_(std::move(cox)) {
  for (std::size_t rho = 0; rho < cox_.num_vars(); ++rho)
    basis_degrees_.push_back(cox_.variable_degree(rho));

  Vector total(cox_.cl_rank());
  for (const auto& d : basis_degrees_)
    for (std::size_t i = 0; i < total.size(); ++i) total[i] += d[i];
  if (rank() != cox_.fan().dim + cox_.cl_rank() ||
      total != cox_.divisor_class(anticanonical(cox_.fan()))) {
    throw Error(ErrorCode::OracleMismatch, "Euler module basis does not match the anticanonical class");
  }
}

EulerModule build_euler_module(const CoxData& cd) { return EulerModule(cd); }

bool EulerModuleElement::is_zero() const {
  return std::all_of(components.begin(), components.end(),
                     [](const GradedPolynomial& p) { return p.is_zero(); });
}

EulerModuleElement zero_element(const EulerModule& em) {
  return {std::vector<GradedPolynomial>(em.rank(), GradedPolynomial(em.cox().num_vars())),
          std::nullopt};
}

EulerModuleElement basis_element(const EulerModule& em, std::size_t rho) {
  EulerModuleElement w = zero_element(em);
  w.components.at(rho) = GradedPolynomial::constant(em.cox().num_vars(), 1);
  w.degree = em.basis_degrees()[rho];
  return w;
}

EulerModuleElement operator+(const EulerModuleElement& a, const EulerModuleElement& b) {
  if (a.components.size() != b.components.size()) {
    throw Error(ErrorCode::DimensionMismatch, "elements of different modules");
  }
  EulerModuleElement s = a;
  for (std::size_t i = 0; i < s.components.size(); ++i) s.components[i] += b.components[i];
  if (a.is_zero()) {
    s.degree = b.degree;
  } else if (!b.is_zero() && a.degree != b.degree) {
    s.degree = std::nullopt;
  }
  return s;
}

EulerModuleElement operator*(const GradedPolynomial& s, const EulerModuleElement& w) {
  EulerModuleElement out = w;
  for (auto& p : out.components) p = s * p;
  out.degree = std::nullopt;
  return out;
}

bool operator==(const EulerModuleElement& a, const EulerModuleElement& b) {
  return a.components == b.components;
}

std::optional<Vector> element_degree(const EulerModule& em, const EulerModuleElement& w) {
  if (w.components.size() != em.rank()) {
    throw Error(ErrorCode::DimensionMismatch, "element does not belong to this module");
  }
  std::optional<Vector> deg;
  for (std::size_t rho = 0; rho < w.components.size(); ++rho) {
    const auto& p = w.components[rho];
    if (p.is_zero()) continue;
    auto d = em.cox().degree_of(p);
    if (!d) return std::nullopt;
    for (std::size_t i = 0; i < d->size(); ++i) (*d)[i] += em.basis_degrees()[rho][i];
    if (!deg) {
      deg = std::move(d);
    } else if (*deg != *d) {
      return std::nullopt;
    }
  }
  return deg;
}

std::size_t graded_piece_dim(const EulerModule& em, std::span<const Integer> lambda) {
  std::size_t total = 0;
  for (const auto& d : em.basis_degrees()) total += graded_dimension(em.cox(), minus(lambda, d));
  return total;
}

EulerModuleElement derivation(const EulerModule& em, const GradedPolynomial& s) {
  EulerModuleElement w = zero_element(em);
  if (s.is_zero()) return w;
  auto deg = em.cox().degree_of(s);
  if (!deg) throw Error(ErrorCode::InhomogeneousInput, "derivation of an inhomogeneous polynomial");
  for (std::size_t rho = 0; rho < em.rank(); ++rho) w.components[rho] = s.partial(rho);
  w.degree = std::move(deg);
  return w;
}

GradedPolynomial kappa_hat(const EulerModule& em, const EulerModuleElement& w,
                           const LinearFormKappa& kappa) {
  GradedPolynomial out(em.cox().num_vars());
  if (w.is_zero()) return out;
  auto deg = element_degree(em, w);
  if (!deg || (w.degree && *w.degree != *deg)) {
    throw Error(ErrorCode::InhomogeneousInput, "kappa_hat of an inhomogeneous element");
  }
  for (std::size_t rho = 0; rho < em.rank(); ++rho) {
    const auto& p = w.components[rho];
    if (p.is_zero()) continue;
    out += p.times_variable(rho) * Rational(kappa(em.basis_degrees()[rho]));
  }
  return out;
}

EulerIdentityReport verify_euler_identity(const EulerModule& em, const LinearFormKappa& kappa,
                                          std::size_t trials, int max_weight,
                                          std::uint64_t seed) {
  const CoxData& cd = em.cox();
  EulerIdentityReport report;
  auto check = [&](const GradedPolynomial& s) {
    ++report.checked;
    const EulerModuleElement ds = derivation(em, s);
    const GradedPolynomial lhs = kappa_hat(em, ds, kappa);
    GradedPolynomial rhs = s;
    if (auto deg = cd.degree_of(s)) rhs *= Rational(kappa(*deg));
    if (lhs != rhs) report.counterexamples.push_back(cd.format(s));
  };

  const auto monomials = monomials_up_to_weight(cd, kappa, max_weight);
  for (const auto& e : monomials) check(GradedPolynomial::monomial(e));

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (std::size_t t = 0; t < trials && !monomials.empty(); ++t) {
    const Exponent& seed_monomial =
        monomials[std::uniform_int_distribution<std::size_t>(0, monomials.size() - 1)(rng)];
    const auto basis = monomial_basis(cd, cd.degree(seed_monomial));
    GradedPolynomial s(cd.num_vars());
    for (const auto& e : basis) s.add_term(e, Rational(coeff(rng), 1 + (coeff(rng) + 5) % 3));
    check(s);
  }
  return report;
}

std::vector<GradedPolynomial> generation_transfer(const EulerModule& em,
                                                  const LinearFormKappa& kappa) {
  std::vector<GradedPolynomial> out;
  for (std::size_t rho = 0; rho < em.rank(); ++rho) {
    GradedPolynomial g = kappa_hat(em, basis_element(em, rho), kappa);
    Exponent unit(em.cox().num_vars(), 0);
    unit[rho] = 1;
    if (g.coefficient(unit) == 0) {
      throw Error(ErrorCode::OracleMismatch, "kappa_hat(e_rho) lost the variable " +
                                                 em.cox().variable_names()[rho]);
    }
    out.push_back(std::move(g));
  }
  return out;
}

namespace {

Integer weighted_degree(std::span<const Integer> weights, const Exponent& e) {
  Integer w = 0;
  for (std::size_t i = 0; i < e.size(); ++i) w += weights[i] * e[i];
  return w;
}

std::size_t count_monomials(std::span<const Integer> weights, const Integer& target) {
  std::size_t n = 0;
  std::function<void(std::size_t, const Integer&)> go = [&](std::size_t k, const Integer& left) {
    if (k == weights.size()) {
      if (left == 0) ++n;
      return;
    }
    for (Integer used = 0; used <= left; used += weights[k]) go(k + 1, left - used);
  };
  go(0, target);
  return n;
}

}  // namespace

bool little_hilbert_check(std::span<const Integer> weights,
                          const std::vector<GradedPolynomial>& candidates, int bound) {
  const std::size_t nvars = weights.size();
  for (const auto& w : weights)
    if (w <= 0) throw Error(ErrorCode::InhomogeneousInput, "variable weights must be positive");

  std::vector<int> cand_weight;
  for (const auto& c : candidates) {
    if (c.num_vars() != nvars) {
      throw Error(ErrorCode::DimensionMismatch, "candidate lives in a different ring");
    }
    std::optional<Integer> w;
    for (const auto& [e, coeff] : c.terms()) {
      Integer we = weighted_degree(weights, e);
      if (w && *w != we) throw Error(ErrorCode::InhomogeneousInput, "candidate is not homogeneous");
      w = we;
    }
    if (!w || *w <= 0) {
      throw Error(ErrorCode::InhomogeneousInput, "candidates must have positive weight");
    }
    cand_weight.push_back(static_cast<int>(*w));
  }

  // pieces[k] spans the weight-k part of the subalgebra generated so far
  std::vector<std::vector<GradedPolynomial>> pieces(bound + 1);
  pieces[0].push_back(GradedPolynomial::constant(nvars, 1));
  for (int k = 1; k <= bound; ++k) {
    LinearSpan span;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (cand_weight[c] > k) continue;
      for (const auto& b : pieces[k - cand_weight[c]]) span.insert(candidates[c] * b);
    }
    if (span.dim() != count_monomials(weights, k)) return false;
    pieces[k] = span.basis();
  }
  return true;
}

DecompositionRow decomposition_row(const EulerModule& em, std::span<const Integer> lambda) {
  const CoxData& cd = em.cox();
  const std::size_t r = cd.cl_rank();
  DecompositionRow row;
  row.lambda.assign(lambda.begin(), lambda.end());
  row.module_dim = graded_piece_dim(em, lambda);
  row.lattice_term_dim = r * graded_dimension(cd, lambda);

  // (p_rho) |-> sum_rho deg(x_rho) (x) x_rho p_rho in Lambda (x) S^lambda; the
  // Lambda index is stored as an extra exponent coordinate.
  LinearSpan image;
  for (std::size_t rho = 0; rho < em.rank(); ++rho) {
    const Vector& q = em.basis_degrees()[rho];
    for (Exponent e : monomial_basis(cd, minus(lambda, q))) {
      ++e[rho];
      GradedPolynomial v(cd.num_vars() + 1);
      for (std::size_t i = 0; i < r; ++i) {
        if (q[i] == 0) continue;
        Exponent tagged = e;
        tagged.push_back(static_cast<std::uint32_t>(i));
        v.add_term(tagged, Rational(q[i]));
      }
      image.insert(std::move(v));
    }
  }
  row.image_rank = image.dim();
  row.omega_dim = row.module_dim - row.image_rank;
  return row;
}

DecompositionReport tinvariant_decomposition_check(const EulerModule& em, int radius) {
  const CoxData& cd = em.cox();
  DecompositionReport report;
  report.rank_identity = em.rank() == cd.fan().dim + cd.cl_rank();
  report.ok = report.rank_identity;
  for (const Vector& lambda : box_points(cd.cl_rank(), radius)) {
    DecompositionRow row = decomposition_row(em, lambda);
    bool good = row.image_rank <= row.lattice_term_dim && row.image_rank <= row.module_dim;
    // H^0(R) -> H^0(Lambda_X) is zero
    if (is_zero(lambda)) good = good && row.image_rank == 0;
    report.ok = report.ok && good;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace toric
