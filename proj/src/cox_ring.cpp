#include "toric/cox_ring.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "toric/error.hpp"

namespace toric {

namespace {

Fan checked(Fan f) {
  const FanReport r = validate_fan(f);
  if (!r.simplicial || !r.smooth) {
    throw Error(ErrorCode::NotSmooth, "Cox data requires a smooth fan");
  }
  if (!r.complete) throw Error(ErrorCode::NotComplete, "Cox data requires a complete fan");
  return f;
}

}  // namespace

CoxData::CoxData(Fan fan) : fan_(checked(std::move(fan))) {
  ClassGroup cg = class_group(fan_);
  if (!cg.group.torsion_free()) {
    throw Error(ErrorCode::TorsionClassGroup, "class group has torsion");
  }
  if (!cg.basis_cone) {
    throw Error(ErrorCode::NotSmooth, "no maximal cone gives a basis of the class group");
  }
  degree_map_ = cg.degree_map;
  for (std::size_t i = 0; i < fan_.num_rays(); ++i) names_.push_back("x" + std::to_string(i));
  const auto& cone = fan_.max_cones[*cg.basis_cone];
  for (std::size_t i = 0; i < fan_.num_rays(); ++i) {
    if (std::find(cone.begin(), cone.end(), i) == cone.end()) {
      basis_vars_.push_back(i);
    } else {
      cone_vars_.push_back(i);
    }
  }
  effective_cone_ = RationalCone::from_generators(cl_rank(), degree_map_.matrix.column_vectors());
  kappa_ = strictly_positive_form(effective_cone_, cl_rank());
  for (std::size_t rho = 0; rho < num_vars(); ++rho) {
    if (kappa_(variable_degree(rho)) < 1) {
      throw Error(ErrorCode::NotPointed, "kappa vanishes on the degree of " + names_[rho]);
    }
  }
}

Vector CoxData::degree(const Exponent& e) const {
  if (e.size() != num_vars()) {
    throw Error(ErrorCode::DimensionMismatch, "exponent length does not match the Cox ring");
  }
  Vector d(cl_rank());
  for (std::size_t rho = 0; rho < e.size(); ++rho) {
    if (e[rho] == 0) continue;
    for (std::size_t i = 0; i < d.size(); ++i) d[i] += degree_map_.matrix(i, rho) * e[rho];
  }
  return d;
}

Vector CoxData::divisor_class(const TorusInvariantDivisor& d) const {
  return degree_map_(d.coefficients);
}

std::optional<Vector> CoxData::degree_of(const GradedPolynomial& p) const {
  if (p.is_zero()) return std::nullopt;
  std::optional<Vector> deg;
  for (const auto& [e, c] : p.terms()) {
    Vector d = degree(e);
    if (!deg) {
      deg = std::move(d);
    } else if (*deg != d) {
      return std::nullopt;
    }
  }
  return deg;
}

std::string CoxData::format(const Exponent& e) const {
  return GradedPolynomial::monomial(e).to_string(names_);
}

namespace {

// Enumerates e >= 0 with Q e = lambda. Exponents of the basis-cone variables
// are chosen freely under the kappa budget; the remaining variables have unit
// degrees and are then determined.
void for_each_fiber_point(const CoxData& cd, std::span<const Integer> lambda,
                          const std::function<void(const Exponent&)>& visit) {
  if (lambda.size() != cd.cl_rank()) {
    throw Error(ErrorCode::DimensionMismatch, "degree has the wrong rank");
  }
  const LinearFormKappa& kappa = cd.kappa();
  const Integer budget = kappa(lambda);
  if (budget < 0) return;

  const auto& free_vars = cd.cone_variables();
  const auto& unit_vars = cd.basis_variables();
  std::vector<Integer> weight;
  std::vector<Vector> degs;
  for (auto rho : free_vars) {
    degs.push_back(cd.variable_degree(rho));
    weight.push_back(kappa(degs.back()));
  }

  Exponent e(cd.num_vars(), 0);
  Vector rest(lambda.begin(), lambda.end());
  std::function<void(std::size_t, const Integer&)> go = [&](std::size_t k, const Integer& left) {
    if (k == free_vars.size()) {
      for (std::size_t i = 0; i < rest.size(); ++i)
        if (rest[i] < 0) return;
      for (std::size_t i = 0; i < unit_vars.size(); ++i)
        e[unit_vars[i]] = static_cast<std::uint32_t>(rest[i]);
      visit(e);
      for (auto rho : unit_vars) e[rho] = 0;
      return;
    }
    const std::size_t rho = free_vars[k];
    Integer spent = 0;
    for (std::uint32_t x = 0; spent <= left; ++x, spent += weight[k]) {
      e[rho] = x;
      go(k + 1, left - spent);
      for (std::size_t i = 0; i < rest.size(); ++i) rest[i] -= degs[k][i];
    }
    // undo the subtractions made by the loop
    Integer times = spent / weight[k];
    for (std::size_t i = 0; i < rest.size(); ++i) rest[i] += degs[k][i] * times;
    e[rho] = 0;
  };
  go(0, budget);
}

}  // namespace

std::size_t fiber_count(const CoxData& cd, std::span<const Integer> lambda) {
  std::size_t n = 0;
  for_each_fiber_point(cd, lambda, [&](const Exponent&) { ++n; });
  return n;
}

RationalPolytope section_polytope(const Fan& f, const TorusInvariantDivisor& d) {
  if (d.coefficients.size() != f.num_rays()) {
    throw Error(ErrorCode::DimensionMismatch, "divisor length does not match the number of rays");
  }
  std::vector<HalfSpace> hs;
  for (std::size_t rho = 0; rho < f.num_rays(); ++rho) hs.push_back({f.rays[rho], d.coefficients[rho]});
  return RationalPolytope(f.dim, std::move(hs));
}

std::size_t section_polytope_count(const CoxData& cd, std::span<const Integer> lambda) {
  auto lift = solve_integral(cd.degree_map().matrix, lambda);
  if (!lift) throw Error(ErrorCode::NotSurjective, "degree has no integral lift");
  return polytope_lattice_points(section_polytope(cd.fan(), {*lift})).size();
}

std::size_t graded_dimension(const CoxData& cd, std::span<const Integer> lambda) {
  const std::size_t by_fiber = fiber_count(cd, lambda);
  const std::size_t by_polytope = section_polytope_count(cd, lambda);
  if (by_fiber != by_polytope) {
    std::ostringstream os;
    os << "graded dimension oracles disagree at " << Vector(lambda.begin(), lambda.end())
       << ": fiber " << by_fiber << " vs polytope " << by_polytope;
    throw Error(ErrorCode::OracleMismatch, os.str());
  }
  return by_fiber;
}

std::vector<Exponent> monomial_basis(const CoxData& cd, std::span<const Integer> lambda) {
  std::vector<Exponent> out;
  for_each_fiber_point(cd, lambda, [&](const Exponent& e) { out.push_back(e); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Exponent> monomials_up_to_weight(const CoxData& cd, const LinearFormKappa& kappa,
                                             const Integer& max_weight) {
  std::vector<Integer> weight;
  for (std::size_t rho = 0; rho < cd.num_vars(); ++rho) {
    weight.push_back(kappa(cd.variable_degree(rho)));
    if (weight.back() < 1) {
      throw Error(ErrorCode::NotPointed, "kappa is not positive on every variable");
    }
  }
  std::vector<Exponent> out;
  Exponent e(cd.num_vars(), 0);
  std::function<void(std::size_t, const Integer&)> go = [&](std::size_t k, const Integer& left) {
    if (k == e.size()) {
      out.push_back(e);
      return;
    }
    for (std::uint32_t x = 0; weight[k] * x <= left; ++x) {
      e[k] = x;
      go(k + 1, left - weight[k] * x);
    }
    e[k] = 0;
  };
  if (max_weight >= 0) go(0, max_weight);
  std::sort(out.begin(), out.end());
  return out;
}

RationalCone effective_cone(const CoxData& cd) { return cd.effective_cone(); }

LinearFormKappa kappa(const CoxData& cd) { return cd.kappa(); }

MonomialIdeal irrelevant_ideal(const CoxData& cd) {
  const Fan& f = cd.fan();
  std::vector<Exponent> gens;
  for (const auto& cone : f.max_cones) {
    Exponent e(f.num_rays(), 1);
    for (auto i : cone) e[i] = 0;
    gens.push_back(std::move(e));
  }
  auto divides = [](const Exponent& a, const Exponent& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] > b[i]) return false;
    return true;
  };
  MonomialIdeal ideal;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
      if (i == j || !divides(gens[j], gens[i])) continue;
      // among equal generators keep the first
      redundant = gens[j] != gens[i] || j < i;
    }
    if (!redundant) ideal.generators.push_back(gens[i]);
  }
  return ideal;
}

Vector shift_module_degree(const CoxData& cd, const TorusInvariantDivisor& d) {
  return cd.divisor_class(d);
}

std::vector<Vector> box_points(std::size_t dim, int radius) {
  std::vector<Vector> out;
  Vector p(dim, Integer(-radius));
  while (true) {
    out.push_back(p);
    std::size_t i = dim;
    while (true) {
      if (i == 0) return out;
      --i;
      if (p[i] < radius) {
        ++p[i];
        break;
      }
      p[i] = -radius;
    }
  }
}

std::optional<Vector> verify_shift_identity(const CoxData& cd, const TorusInvariantDivisor& d,
                                            int radius) {
  const Vector lambda0 = shift_module_degree(cd, d);
  for (const Vector& mu : box_points(cd.cl_rank(), radius)) {
    auto lift = solve_integral(cd.degree_map().matrix, mu);
    TorusInvariantDivisor twisted = d + TorusInvariantDivisor{*lift};
    const std::size_t sections =
        polytope_lattice_points(section_polytope(cd.fan(), twisted)).size();
    Vector shifted = mu;
    for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += lambda0[i];
    if (sections != graded_dimension(cd, shifted)) return mu;
  }
  return std::nullopt;
}

}  // namespace toric
