#include "toric/polyhedral.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "toric/error.hpp"

namespace toric {

namespace {

Vector combine(const Integer& alpha, const Vector& x, const Integer& beta, const Vector& y) {
  Vector z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = alpha * x[i] - beta * y[i];
  return primitive(std::move(z));
}

Vector negated(Vector v) {
  for (auto& x : v) x = -x;
  return v;
}

std::vector<Vector> canonical_rays(std::vector<Vector> rays) {
  for (auto& r : rays) r = primitive(std::move(r));
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  return rays;
}

std::vector<Vector> canonical_subspace(const std::vector<Vector>& basis, std::size_t dim) {
  if (basis.empty()) return {};
  // Hermite form of a primitive-saturated basis: saturate first so the
  // representation depends only on the subspace.
  IntegerMatrix b = IntegerMatrix::from_rows(basis, dim);
  IntegerMatrix orth = kernel_basis(b);                  // dim x (dim - k)
  IntegerMatrix sat = kernel_basis(orth.transpose());    // dim x k, saturated
  return hermite_rows(sat.transpose()).row_vectors();
}

}  // namespace

ConeDescription double_description(std::size_t dim, const std::vector<Vector>& inequalities) {
  std::vector<Vector> lineality = IntegerMatrix::identity(dim).row_vectors();
  std::vector<Vector> rays;
  std::vector<Vector> processed;

  for (const Vector& a : inequalities) {
    if (a.size() != dim) {
      throw Error(ErrorCode::DimensionMismatch, "inequality has wrong dimension");
    }
    if (is_zero(a)) continue;

    auto pivot = std::find_if(lineality.begin(), lineality.end(),
                              [&](const Vector& l) { return dot(a, l) != 0; });
    if (pivot != lineality.end()) {
      Vector l0 = *pivot;
      lineality.erase(pivot);
      Integer al0 = dot(a, l0);
      if (al0 < 0) {
        l0 = negated(std::move(l0));
        al0 = -al0;
      }
      for (auto& l : lineality) {
        Integer al = dot(a, l);
        if (al != 0) l = combine(al0, l, al, l0);
      }
      for (auto& r : rays) {
        Integer ar = dot(a, r);
        if (ar != 0) r = combine(al0, r, ar, l0);
      }
      rays.push_back(primitive(std::move(l0)));
      processed.push_back(a);
      continue;
    }

    std::vector<Vector> pos, zero, neg;
    std::vector<Integer> pos_val, neg_val;
    for (auto& r : rays) {
      Integer v = dot(a, r);
      if (v > 0) {
        pos.push_back(std::move(r));
        pos_val.push_back(v);
      } else if (v < 0) {
        neg.push_back(std::move(r));
        neg_val.push_back(v);
      } else {
        zero.push_back(std::move(r));
      }
    }
    // adjacency in the quotient by the lineality space
    const std::size_t free_dim = dim - lineality.size();
    const std::size_t target_rank = free_dim >= 2 ? free_dim - 2 : 0;
    std::vector<Vector> next = pos;
    next.insert(next.end(), zero.begin(), zero.end());
    for (std::size_t i = 0; i < pos.size(); ++i) {
      for (std::size_t j = 0; j < neg.size(); ++j) {
        std::vector<Vector> tight;
        for (const auto& b : processed)
          if (dot(b, pos[i]) == 0 && dot(b, neg[j]) == 0) tight.push_back(b);
        if (tight.size() < target_rank) continue;
        if (toric::rank(IntegerMatrix::from_rows(tight, dim)) != target_rank) continue;
        // pos_val > 0 > neg_val, so this lands on the hyperplane a = 0
        next.push_back(combine(pos_val[i], neg[j], neg_val[j], pos[i]));
      }
    }
    rays = canonical_rays(std::move(next));
    processed.push_back(a);
  }
  return {canonical_rays(std::move(rays)), std::move(lineality)};
}

RationalCone RationalCone::from_generators(std::size_t dim, const std::vector<Vector>& generators) {
  ConeDescription dual = double_description(dim, generators);
  std::vector<Vector> normals = dual.rays;
  for (const auto& l : dual.lineality) {
    normals.push_back(l);
    normals.push_back(negated(l));
  }
  ConeDescription primal = double_description(dim, normals);

  RationalCone c;
  c.dim_ = dim;
  c.rays_ = canonical_rays(std::move(primal.rays));
  c.lineality_ = canonical_subspace(primal.lineality, dim);
  c.facets_ = canonical_rays(std::move(dual.rays));
  c.equations_ = canonical_subspace(dual.lineality, dim);
  return c;
}

RationalCone RationalCone::from_inequalities(std::size_t dim, const std::vector<Vector>& normals) {
  ConeDescription primal = double_description(dim, normals);
  std::vector<Vector> gens = primal.rays;
  for (const auto& l : primal.lineality) {
    gens.push_back(l);
    gens.push_back(negated(l));
  }
  return from_generators(dim, gens);
}

std::vector<Vector> RationalCone::generators() const {
  std::vector<Vector> g = rays_;
  for (const auto& l : lineality_) {
    g.push_back(l);
    g.push_back(negated(l));
  }
  std::sort(g.begin(), g.end());
  return g;
}

std::vector<Vector> RationalCone::facet_normals() const {
  std::vector<Vector> g = facets_;
  for (const auto& l : equations_) {
    g.push_back(l);
    g.push_back(negated(l));
  }
  std::sort(g.begin(), g.end());
  return g;
}

RationalCone dual_cone(const RationalCone& c) {
  RationalCone d;
  d.dim_ = c.dim_;
  d.rays_ = c.facets_;
  d.lineality_ = c.equations_;
  d.facets_ = c.rays_;
  d.equations_ = c.lineality_;
  return d;
}

bool cone_contains(const RationalCone& c, std::span<const Integer> p, ConeMembership mode) {
  if (p.size() != c.ambient_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "point dimension does not match cone");
  }
  for (const auto& e : c.equations())
    if (dot(e, p) != 0) return false;
  for (const auto& f : c.facets()) {
    Integer v = dot(f, p);
    if (v < 0) return false;
    if (mode == ConeMembership::RelativeInterior && v == 0) return false;
  }
  return true;
}

// --- polytopes -------------------------------------------------------------------

RationalPolytope::RationalPolytope(std::size_t dim, std::vector<HalfSpace> inequalities)
    : dim_(dim), inequalities_(std::move(inequalities)) {
  // Homogenize: (m, t) with <normal, m> + offset * t >= 0 and t >= 0.
  std::vector<Vector> hom;
  hom.reserve(inequalities_.size() + 1);
  for (const auto& h : inequalities_) {
    if (h.normal.size() != dim) {
      throw Error(ErrorCode::DimensionMismatch, "half-space normal has wrong dimension");
    }
    Vector row = h.normal;
    row.push_back(h.offset);
    hom.push_back(std::move(row));
  }
  Vector t(dim + 1);
  t[dim] = 1;
  hom.push_back(std::move(t));

  ConeDescription cone = double_description(dim + 1, hom);
  bool recession = !cone.lineality.empty();
  for (const auto& r : cone.rays) {
    const Integer& w = r[dim];
    if (w == 0) {
      recession = true;
      continue;
    }
    RationalPoint v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = Rational(r[i], w);
    vertices_.push_back(std::move(v));
  }
  std::sort(vertices_.begin(), vertices_.end());
  bounded_ = vertices_.empty() || !recession;
}

bool RationalPolytope::contains(std::span<const Integer> m) const {
  return std::all_of(inequalities_.begin(), inequalities_.end(),
                     [&](const HalfSpace& h) { return dot(h.normal, m) >= -h.offset; });
}

std::vector<Vector> polytope_lattice_points(const RationalPolytope& p) {
  if (!p.bounded()) {
    throw Error(ErrorCode::UnboundedPolytope, "polytope has a nonzero recession cone");
  }
  std::vector<Vector> out;
  if (p.empty()) return out;
  const std::size_t d = p.ambient_dim();
  if (d == 0) {
    out.emplace_back();
    return out;
  }
  Vector lo(d), hi(d);
  for (std::size_t i = 0; i < d; ++i) {
    Rational mn = p.vertices().front()[i];
    Rational mx = mn;
    for (const auto& v : p.vertices()) {
      mn = std::min(mn, v[i]);
      mx = std::max(mx, v[i]);
    }
    lo[i] = ceil(mn);
    hi[i] = floor(mx);
    if (lo[i] > hi[i]) return out;
  }
  Vector m = lo;
  while (true) {
    if (p.contains(m)) out.push_back(m);
    std::size_t i = d;
    while (i > 0) {
      --i;
      if (m[i] < hi[i]) {
        ++m[i];
        break;
      }
      m[i] = lo[i];
      if (i == 0) return out;
    }
  }
}

namespace {

Vector sum_of(const std::vector<Vector>& vs, std::size_t dim) {
  Vector s(dim);
  for (const auto& v : vs)
    for (std::size_t i = 0; i < dim; ++i) s[i] += v[i];
  return s;
}

}  // namespace

std::vector<Vector> hilbert_basis(const RationalCone& c) {
  if (!c.is_pointed()) {
    throw Error(ErrorCode::NotPointed, "Hilbert basis requested for a cone containing a line");
  }
  const std::size_t d = c.ambient_dim();
  if (c.is_zero()) return {};

  // Every Hilbert basis element is a generator or lies in the half-open
  // parallelepiped of a simplicial subcone, so its weight is below the total
  // weight of the extreme rays.
  const Vector weight = sum_of(c.facets(), d);
  Integer bound = 0;
  for (const auto& r : c.rays()) bound += dot(weight, r);

  std::vector<HalfSpace> hs;
  for (const auto& f : c.facets()) hs.push_back({f, 0});
  for (const auto& e : c.equations()) {
    hs.push_back({e, 0});
    hs.push_back({negated(e), 0});
  }
  hs.push_back({negated(weight), bound});
  std::vector<Vector> pts = polytope_lattice_points(RationalPolytope(d, std::move(hs)));

  std::vector<std::pair<Integer, Vector>> by_weight;
  for (auto& p : pts)
    if (!is_zero(p)) by_weight.emplace_back(dot(weight, p), std::move(p));
  std::sort(by_weight.begin(), by_weight.end());

  std::set<Vector> seen;
  for (const auto& [w, p] : by_weight) seen.insert(p);

  std::vector<Vector> basis;
  for (const auto& [w, p] : by_weight) {
    bool reducible = false;
    for (const auto& [wq, q] : by_weight) {
      if (wq >= w) break;
      Vector diff(d);
      for (std::size_t i = 0; i < d; ++i) diff[i] = p[i] - q[i];
      if (seen.count(diff)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.push_back(p);
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

LinearFormKappa strictly_positive_form(const RationalCone& eff, std::size_t lattice_rank) {
  if (eff.ambient_dim() != lattice_rank) {
    throw Error(ErrorCode::DimensionMismatch, "effective cone does not live in the lattice");
  }
  if (!eff.is_pointed()) {
    throw Error(ErrorCode::NotPointed, "effective cone contains a line; no positive form exists");
  }
  // kappa_0 = sum of the primitive extremal rays of the dual cone
  LinearFormKappa kappa{sum_of(eff.facets(), lattice_rank)};

  Integer scale = 1;
  for (const auto& h : hilbert_basis(eff)) {
    Integer v = kappa(h);
    if (v <= 0) {
      throw Error(ErrorCode::NotPointed, "dual-ray sum is not positive on the effective cone");
    }
    scale = std::max(scale, ceil_div(Integer(1), v));
  }
  for (auto& x : kappa.coefficients) x *= scale;
  return kappa;
}

}  // namespace toric
