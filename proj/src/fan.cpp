#include "toric/fan.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <set>
#include <sstream>

#include "toric/error.hpp"
#include "toric/polyhedral.hpp"

namespace toric {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedFan, what); }

std::string cone_name(std::size_t i) { return "max cone " + std::to_string(i); }
std::string ray_name(std::size_t i) { return "ray " + std::to_string(i); }

std::vector<Vector> cone_rays(const Fan& f, const std::vector<std::size_t>& cone) {
  std::vector<Vector> out;
  out.reserve(cone.size());
  for (auto i : cone) out.push_back(f.rays[i]);
  return out;
}

IntegerMatrix cone_matrix(const Fan& f, const std::vector<std::size_t>& cone) {
  return IntegerMatrix::from_rows(cone_rays(f, cone), f.dim);
}

std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TorusInvariantDivisor operator+(const TorusInvariantDivisor& a, const TorusInvariantDivisor& b) {
  if (a.coefficients.size() != b.coefficients.size()) {
    throw Error(ErrorCode::DimensionMismatch, "divisors on different fans");
  }
  TorusInvariantDivisor s{a.coefficients};
  for (std::size_t i = 0; i < s.coefficients.size(); ++i) s.coefficients[i] += b.coefficients[i];
  return s;
}

void check_well_formed(const Fan& f) {
  if (f.dim == 0) malformed("fan dimension must be positive");
  if (f.rays.empty()) malformed("fan has no rays");
  std::set<Vector> seen;
  for (std::size_t i = 0; i < f.rays.size(); ++i) {
    const Vector& v = f.rays[i];
    if (v.size() != f.dim) malformed(ray_name(i) + " has length " + std::to_string(v.size()));
    if (is_zero(v)) malformed(ray_name(i) + " is zero");
    if (gcd_of(v) != 1) malformed(ray_name(i) + " is not primitive");
    if (!seen.insert(v).second) malformed(ray_name(i) + " duplicates an earlier ray");
  }
  if (f.max_cones.empty()) malformed("fan has no maximal cones");

  std::vector<bool> used(f.rays.size(), false);
  std::set<std::vector<std::size_t>> cone_sets;
  for (std::size_t c = 0; c < f.max_cones.size(); ++c) {
    const auto& cone = f.max_cones[c];
    if (cone.empty()) malformed(cone_name(c) + " is empty");
    std::set<std::size_t> idx;
    for (auto i : cone) {
      if (i >= f.rays.size()) malformed(cone_name(c) + " references missing " + ray_name(i));
      if (!idx.insert(i).second) malformed(cone_name(c) + " repeats " + ray_name(i));
      used[i] = true;
    }
    if (!cone_sets.insert(sorted(cone)).second) malformed(cone_name(c) + " is listed twice");
  }
  for (std::size_t i = 0; i < used.size(); ++i)
    if (!used[i]) malformed(ray_name(i) + " lies in no maximal cone");

  // Pairwise intersections must be the cone over the common rays, which is a
  // face of each simplicial cone. Containment means the smaller cone is not maximal.
  std::vector<RationalCone> cones;
  for (const auto& cone : f.max_cones)
    cones.push_back(RationalCone::from_generators(f.dim, cone_rays(f, cone)));
  for (std::size_t a = 0; a < f.max_cones.size(); ++a) {
    for (std::size_t b = a + 1; b < f.max_cones.size(); ++b) {
      const auto sa = sorted(f.max_cones[a]);
      const auto sb = sorted(f.max_cones[b]);
      std::vector<std::size_t> common;
      std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(),
                            std::back_inserter(common));
      if (common.size() == f.max_cones[a].size() || common.size() == f.max_cones[b].size()) {
        malformed(cone_name(a) + " and " + cone_name(b) + " are nested");
      }
      std::vector<Vector> normals = cones[a].facet_normals();
      auto nb = cones[b].facet_normals();
      normals.insert(normals.end(), nb.begin(), nb.end());
      RationalCone meet = RationalCone::from_inequalities(f.dim, normals);
      RationalCone expected = RationalCone::from_generators(f.dim, cone_rays(f, common));
      if (!(meet == expected)) {
        malformed(cone_name(a) + " and " + cone_name(b) + " overlap outside a common face");
      }
    }
  }
}

FanReport validate_fan(const Fan& f) {
  check_well_formed(f);
  FanReport r;
  r.simplicial = std::all_of(f.max_cones.begin(), f.max_cones.end(), [&](const auto& cone) {
    return rank(cone_matrix(f, cone)) == cone.size();
  });
  if (!r.simplicial) return r;

  r.smooth = std::all_of(f.max_cones.begin(), f.max_cones.end(), [&](const auto& cone) {
    auto d = smith_normal_form(cone_matrix(f, cone)).diagonal();
    return std::all_of(d.begin(), d.end(), [](const Integer& x) { return x == 1; });
  });

  bool full = std::all_of(f.max_cones.begin(), f.max_cones.end(),
                          [&](const auto& cone) { return cone.size() == f.dim; });
  if (full) {
    std::map<std::vector<std::size_t>, int> facet_count;
    for (const auto& cone : f.max_cones) {
      auto s = sorted(cone);
      for (std::size_t skip = 0; skip < s.size(); ++skip) {
        std::vector<std::size_t> facet;
        for (std::size_t k = 0; k < s.size(); ++k)
          if (k != skip) facet.push_back(s[k]);
        ++facet_count[facet];
      }
    }
    r.complete = std::all_of(facet_count.begin(), facet_count.end(),
                             [](const auto& kv) { return kv.second == 2; });
  }
  return r;
}

IntegerMatrix divisor_map(const Fan& f) { return IntegerMatrix::from_rows(f.rays, f.dim); }

ClassGroup class_group(const Fan& f) {
  const IntegerMatrix div = divisor_map(f);
  if (rank(div) != f.dim) {
    throw Error(ErrorCode::RaysDontSpan, "rays do not span N_R; the divisor map is not injective");
  }
  ClassGroup cg;
  cg.group = cokernel(div);
  const std::size_t r = cg.group.free_rank;

  std::vector<std::size_t> free_rows(r);
  for (std::size_t i = 0; i < r; ++i) free_rows[i] = i;
  IntegerMatrix q = cg.group.projection.select_rows(free_rows);

  if (cg.group.torsion_free()) {
    for (std::size_t c = 0; c < f.max_cones.size(); ++c) {
      const auto& cone = f.max_cones[c];
      if (cone.size() != f.dim) continue;
      std::vector<std::size_t> rest;
      for (std::size_t i = 0; i < f.rays.size(); ++i)
        if (std::find(cone.begin(), cone.end(), i) == cone.end()) rest.push_back(i);
      IntegerMatrix b = q.select_columns(rest);
      Integer det = determinant(b);
      if (det != 1 && det != -1) continue;
      // change basis of Cl so the complementary classes become the unit vectors
      std::vector<Vector> cols;
      for (std::size_t j = 0; j < q.cols(); ++j) {
        auto x = solve_integral(b, q.column(j));
        cols.push_back(*x);
      }
      q = IntegerMatrix::from_columns(cols, r);
      cg.group.projection = q;
      cg.basis_cone = c;
      break;
    }
  }
  cg.degree_map = LatticeMap(q);
  return cg;
}

CartierData cartier_data(const Fan& f, const TorusInvariantDivisor& d) {
  if (d.coefficients.size() != f.rays.size()) {
    throw Error(ErrorCode::DimensionMismatch, "divisor length does not match the number of rays");
  }
  CartierData cd;
  for (std::size_t c = 0; c < f.max_cones.size(); ++c) {
    const auto& cone = f.max_cones[c];
    Vector rhs;
    for (auto i : cone) rhs.push_back(-d.coefficients[i]);
    auto m = solve_integral(cone_matrix(f, cone), rhs);
    if (!m) {
      throw Error(ErrorCode::NotCartier,
                  "divisor is not Cartier on " + cone_name(c) + ": no integral m_sigma");
    }
    cd.local_characters.push_back(std::move(*m));
  }
  return cd;
}

CechCocycle cech_transitions(const Fan& f, const TorusInvariantDivisor& d) {
  const CartierData cd = cartier_data(f, d);
  const std::size_t k = cd.local_characters.size();
  std::vector<Vector> table;
  table.reserve(k * k);
  for (std::size_t s = 0; s < k; ++s) {
    for (std::size_t t = 0; t < k; ++t) {
      Vector g(f.dim);
      for (std::size_t i = 0; i < f.dim; ++i)
        g[i] = cd.local_characters[s][i] - cd.local_characters[t][i];
      table.push_back(std::move(g));
    }
  }
  return CechCocycle(k, std::move(table));
}

bool is_ample(const Fan& f, const TorusInvariantDivisor& d) {
  if (!validate_fan(f).complete) {
    throw Error(ErrorCode::NotComplete, "ampleness requires a complete fan");
  }
  const CartierData cd = cartier_data(f, d);
  for (std::size_t c = 0; c < f.max_cones.size(); ++c) {
    const auto& cone = f.max_cones[c];
    for (std::size_t rho = 0; rho < f.rays.size(); ++rho) {
      if (std::find(cone.begin(), cone.end(), rho) != cone.end()) continue;
      if (dot(cd.local_characters[c], f.rays[rho]) <= -d.coefficients[rho]) return false;
    }
  }
  return true;
}

TorusInvariantDivisor anticanonical(const Fan& f) {
  return {Vector(f.rays.size(), Integer(1))};
}

bool same_fan(const Fan& a, const Fan& b) {
  if (a.dim != b.dim || a.rays != b.rays) return false;
  std::set<std::vector<std::size_t>> ca, cb;
  for (const auto& c : a.max_cones) ca.insert(sorted(c));
  for (const auto& c : b.max_cones) cb.insert(sorted(c));
  return ca == cb;
}

}  // namespace toric
