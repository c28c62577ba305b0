#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "toric/error.hpp"
#include "toric/polyhedral.hpp"

using namespace toric;

namespace {

bool in_cone_by_inequalities(const std::vector<Vector>& normals, const Vector& p) {
  return std::all_of(normals.begin(), normals.end(), [&](const Vector& a) { return dot(a, p) >= 0; });
}

std::vector<Vector> box(int b) {
  std::vector<Vector> out;
  for (int x = -b; x <= b; ++x)
    for (int y = -b; y <= b; ++y) out.push_back({x, y});
  return out;
}

// Irreducible nonzero lattice points of a pointed 2d cone, by exhaustive search.
std::vector<Vector> brute_hilbert_basis(const std::vector<Vector>& normals, int b, int search) {
  std::vector<Vector> out;
  for (const auto& p : box(b)) {
    if (is_zero(p) || !in_cone_by_inequalities(normals, p)) continue;
    bool reducible = false;
    for (const auto& a : box(search)) {
      if (is_zero(a) || a == p || !in_cone_by_inequalities(normals, a)) continue;
      Vector rest{p[0] - a[0], p[1] - a[1]};
      if (in_cone_by_inequalities(normals, rest)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("double description of the positive orthant") {
  ConeDescription d = double_description(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  std::sort(d.rays.begin(), d.rays.end());
  CHECK(d.rays == std::vector<Vector>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
  CHECK(d.lineality.empty());
}

TEST_CASE("half-plane has a lineality line") {
  RationalCone c = RationalCone::from_inequalities(2, {{0, 1}});
  CHECK(!c.is_pointed());
  CHECK(c.lineality().size() == 1);
  CHECK(c.rays() == std::vector<Vector>{{0, 1}});
  CHECK(c.is_full_dimensional());
}

TEST_CASE("dual cone is an involution") {
  std::vector<std::vector<Vector>> gens = {
      {{1, 0}, {1, 3}},
      {{1, 0}, {0, 1}, {-1, -1}},
      {{1, 0, 0}, {0, 1, 0}, {1, 1, 1}, {0, 0, 1}},
      {{1, 1}},
  };
  for (const auto& g : gens) {
    const std::size_t dim = g[0].size();
    RationalCone c = RationalCone::from_generators(dim, g);
    RationalCone dd = dual_cone(dual_cone(c));
    CHECK(dd == c);
    for (const auto& v : g) CHECK(cone_contains(c, v, ConeMembership::Closure));
    // duality pairing is nonnegative
    for (const auto& u : dual_cone(c).generators())
      for (const auto& v : c.generators()) CHECK(dot(u, v) >= 0);
  }
  RationalCone whole = RationalCone::from_generators(2, {{1, 0}, {0, 1}, {-1, -1}});
  CHECK(whole.lineality().size() == 2);
  CHECK(dual_cone(whole).is_zero());
}

TEST_CASE("relative interior membership") {
  RationalCone c = RationalCone::from_generators(2, {{1, 0}, {1, 2}});
  CHECK(cone_contains(c, Vector{2, 1}, ConeMembership::RelativeInterior));
  CHECK(!cone_contains(c, Vector{1, 0}, ConeMembership::RelativeInterior));
  CHECK(cone_contains(c, Vector{1, 0}, ConeMembership::Closure));
  CHECK(!cone_contains(c, Vector{0, 1}, ConeMembership::Closure));
  RationalCone ray = RationalCone::from_generators(2, {{1, 1}});
  CHECK(cone_contains(ray, Vector{3, 3}, ConeMembership::RelativeInterior));
}

TEST_CASE("polytope vertices and lattice points") {
  // triangle 0 <= x, 0 <= y, x + y <= 3
  RationalPolytope p(2, {{{1, 0}, 0}, {{0, 1}, 0}, {{-1, -1}, 3}});
  REQUIRE(p.bounded());
  CHECK(p.vertices() == std::vector<RationalPoint>{{0, 0}, {0, 3}, {3, 0}});
  CHECK(polytope_lattice_points(p).size() == 10);

  std::mt19937 rng(17);
  std::uniform_int_distribution<int> d(-3, 3);
  std::uniform_int_distribution<int> o(0, 6);
  for (int t = 0; t < 40; ++t) {
    std::vector<HalfSpace> hs = {{{1, 0}, 4}, {{-1, 0}, 4}, {{0, 1}, 4}, {{0, -1}, 4}};
    for (int k = 0; k < 3; ++k) hs.push_back({{d(rng), d(rng)}, o(rng)});
    RationalPolytope q(2, hs);
    std::vector<Vector> scan;
    for (const auto& m : box(4)) {
      bool ok = std::all_of(hs.begin(), hs.end(),
                            [&](const HalfSpace& h) { return dot(h.normal, m) >= -h.offset; });
      if (ok) scan.push_back(m);
    }
    std::sort(scan.begin(), scan.end());
    CHECK(polytope_lattice_points(q) == scan);
    CHECK(q.empty() == (scan.empty() && q.vertices().empty()));
    for (const auto& m : scan) CHECK(q.contains(m));
  }

  RationalPolytope strip(2, {{{1, 0}, 0}, {{-1, 0}, 1}});
  CHECK(!strip.bounded());
  CHECK_THROWS_AS(polytope_lattice_points(strip), Error);

  RationalPolytope none(1, {{{1}, -2}, {{-1}, 1}});
  CHECK(none.empty());
  CHECK(polytope_lattice_points(none).empty());
}

TEST_CASE("hilbert basis against exhaustive search") {
  const std::vector<std::vector<Vector>> cones = {
      {{1, 0}, {1, 3}},
      {{1, 0}, {-1, 2}},
      {{2, -1}, {1, 2}},
      {{1, 0}, {0, 1}},
      {{3, 1}, {1, 3}},
  };
  for (const auto& g : cones) {
    RationalCone c = RationalCone::from_generators(2, g);
    CHECK(hilbert_basis(c) == brute_hilbert_basis(c.facets(), 4, 12));
  }
  RationalCone c = RationalCone::from_generators(2, {{1, 0}, {1, 3}});
  CHECK(hilbert_basis(c) == std::vector<Vector>{{1, 0}, {1, 1}, {1, 2}, {1, 3}});
}

TEST_CASE("strictly positive form") {
  RationalCone eff = RationalCone::from_generators(2, {{1, 0}, {-1, 1}});
  LinearFormKappa k = strictly_positive_form(eff, 2);
  for (const auto& h : hilbert_basis(eff)) CHECK(k(h) >= 1);
  for (const auto& p : box(5))
    if (!is_zero(p) && cone_contains(eff, p, ConeMembership::Closure)) CHECK(k(p) >= 1);

  RationalCone half = RationalCone::from_inequalities(2, {{0, 1}});
  CHECK_THROWS_AS(strictly_positive_form(half, 2), Error);
  CHECK_THROWS_AS(strictly_positive_form(eff, 3), Error);
}
