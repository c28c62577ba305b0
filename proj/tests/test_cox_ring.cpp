#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>

#include "toric/cox_ring.hpp"
#include "toric/error.hpp"
#include "toric/io.hpp"

using namespace toric;

namespace {

Fan load(const std::string& name) { return parse_fan(read_file(std::string(TORIC_DATA_DIR) + "/" + name + ".json")); }

const char* kSmooth[] = {"p1", "p2", "p1xp1", "hirzebruch_0", "hirzebruch_1",
                         "hirzebruch_2", "hirzebruch_3", "delpezzo6"};

// All exponent vectors with entries in [0, bound].
std::vector<Exponent> exponent_box(std::size_t vars, unsigned bound) {
  std::vector<Exponent> out{{}};
  for (std::size_t i = 0; i < vars; ++i) {
    std::vector<Exponent> next;
    for (const auto& e : out)
      for (unsigned a = 0; a <= bound; ++a) {
        Exponent f = e;
        f.push_back(a);
        next.push_back(f);
      }
    out = next;
  }
  return out;
}

Vector apply_q(const CoxData& cd, const Exponent& e) {
  Vector x(e.begin(), e.end());
  return cd.degree_map()(x);
}

}  // namespace

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(CoxData(load("singular_cone")), Error);
  CHECK_THROWS_AS(CoxData(load("incomplete_fan")), Error);
  try {
    CoxData cd(load("incomplete_fan"));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotComplete);
  }
}

TEST_CASE("variable degrees") {
  CoxData p2(load("p2"));
  CHECK(p2.variable_names() == std::vector<std::string>{"x0", "x1", "x2"});
  for (std::size_t i = 0; i < 3; ++i) CHECK(p2.variable_degree(i) == Vector{1});
  CoxData f1(load("hirzebruch_1"));
  CHECK(f1.variable_degree(0) == Vector{1, 0});
  CHECK(f1.variable_degree(1) == Vector{-1, 1});
  CHECK(f1.variable_degree(2) == Vector{1, 0});
  CHECK(f1.variable_degree(3) == Vector{0, 1});
  CHECK(f1.degree(Exponent{1, 1, 0, 0}) == Vector{0, 1});
  for (auto rho : f1.basis_variables()) {
    Vector d = f1.variable_degree(rho);
    CHECK(std::count(d.begin(), d.end(), Integer(1)) == 1);
    CHECK(std::count(d.begin(), d.end(), Integer(0)) == static_cast<long>(d.size()) - 1);
  }
  CHECK(f1.divisor_class(TorusInvariantDivisor{{1, 1, 1, 1}}) == Vector{1, 2});
  GradedPolynomial inhom = GradedPolynomial::variable(4, 0) + GradedPolynomial::variable(4, 3);
  CHECK(!f1.degree_of(inhom));
  CHECK(!f1.degree_of(GradedPolynomial(4)));
  CHECK(*f1.degree_of(GradedPolynomial::variable(4, 1)) == Vector{-1, 1});
}

TEST_CASE("graded dimensions against exhaustive enumeration") {
  for (const char* name : kSmooth) {
    CAPTURE(name);
    CoxData cd(load(name));
    const auto& k = cd.kappa();
    for (std::size_t rho = 0; rho < cd.num_vars(); ++rho) CHECK(k(cd.variable_degree(rho)) >= 1);
    const unsigned bound = 8;
    std::map<Vector, std::size_t> counts;
    for (const auto& e : exponent_box(cd.num_vars(), bound)) {
      Vector lambda = apply_q(cd, e);
      if (k(lambda) <= bound) ++counts[lambda];
    }
    for (const auto& lambda : box_points(cd.cl_rank(), 3)) {
      if (k(lambda) > bound) continue;
      CAPTURE(lambda);
      auto it = counts.find(lambda);
      std::size_t want = it == counts.end() ? 0 : it->second;
      CHECK(fiber_count(cd, lambda) == want);
      CHECK(section_polytope_count(cd, lambda) == want);
      CHECK(graded_dimension(cd, lambda) == want);
      auto basis = monomial_basis(cd, lambda);
      CHECK(basis.size() == want);
      CHECK(std::is_sorted(basis.begin(), basis.end()));
      for (const auto& e : basis) CHECK(apply_q(cd, e) == lambda);
    }
  }
}

TEST_CASE("projective plane hilbert function") {
  CoxData cd(load("p2"));
  for (int d = -2; d <= 6; ++d) {
    std::size_t want = d < 0 ? 0 : static_cast<std::size_t>((d + 1) * (d + 2) / 2);
    CHECK(graded_dimension(cd, Vector{d}) == want);
  }
  CoxData p1(load("p1"));
  for (int d = 0; d <= 5; ++d) CHECK(graded_dimension(p1, Vector{d}) == static_cast<std::size_t>(d + 1));
}

TEST_CASE("hirzebruch graded pieces") {
  // S^(a,b) of F_1 = sections of aF + bE_infinity; dim = sum_{j=0..b} max(0, a + j + 1)
  CoxData cd(load("hirzebruch_1"));
  for (int a = -3; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) {
      std::size_t want = 0;
      for (int j = 0; j <= b; ++j) want += std::max(0, a + j + 1);
      CHECK(graded_dimension(cd, Vector{a, b}) == want);
    }
}

TEST_CASE("effective cone and kappa") {
  for (const char* name : kSmooth) {
    CAPTURE(name);
    CoxData cd(load(name));
    const RationalCone& eff = cd.effective_cone();
    CHECK(eff.is_pointed());
    CHECK(eff.is_full_dimensional());
    for (std::size_t rho = 0; rho < cd.num_vars(); ++rho)
      CHECK(cone_contains(eff, cd.variable_degree(rho), ConeMembership::Closure));
    for (const auto& h : hilbert_basis(eff)) CHECK(cd.kappa()(h) >= 1);
    for (const auto& r : eff.rays()) CHECK(cd.kappa()(r) >= 0);
  }
  CoxData f1(load("hirzebruch_1"));
  CHECK(f1.effective_cone().rays() == std::vector<Vector>{{-1, 1}, {1, 0}});
}

TEST_CASE("monomials up to weight") {
  for (const char* name : {"p2", "hirzebruch_2", "delpezzo6"}) {
    CoxData cd(load(name));
    auto got = monomials_up_to_weight(cd, cd.kappa(), 4);
    std::vector<Exponent> want;
    for (const auto& e : exponent_box(cd.num_vars(), 4))
      if (cd.kappa()(cd.degree(e)) <= 4) want.push_back(e);
    std::sort(want.begin(), want.end());
    CHECK(got == want);
  }
}

TEST_CASE("irrelevant ideal") {
  CoxData p2(load("p2"));
  auto b = irrelevant_ideal(p2);
  CHECK(b.generators == std::vector<Exponent>{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
  CoxData f1(load("hirzebruch_1"));
  auto g = irrelevant_ideal(f1).generators;
  CHECK(g.size() == 4);
  // each generator vanishes exactly off one maximal cone
  for (std::size_t c = 0; c < f1.fan().max_cones.size(); ++c) {
    Exponent e(4, 1);
    for (auto rho : f1.fan().max_cones[c]) e[rho] = 0;
    CHECK(std::find(g.begin(), g.end(), e) != g.end());
  }
}

TEST_CASE("global sections of line bundles are shifted graded pieces") {
  for (const char* name : kSmooth) {
    CAPTURE(name);
    CoxData cd(load(name));
    TorusInvariantDivisor d{Vector(cd.num_vars())};
    d.coefficients[0] = 1;
    CHECK(shift_module_degree(cd, d) == cd.variable_degree(0));
    CHECK(!verify_shift_identity(cd, d, 2));
    CHECK(!verify_shift_identity(cd, anticanonical(cd.fan()), 2));
  }
  CHECK(box_points(2, 1).size() == 9);
  CHECK(box_points(1, 2) == std::vector<Vector>{{-2}, {-1}, {0}, {1}, {2}});
}
