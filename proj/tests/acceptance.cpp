// One line per acceptance criterion; exit status is nonzero if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "run_cli.hpp"
#include "toric/cox_ring.hpp"
#include "toric/error.hpp"
#include "toric/euler_module.hpp"
#include "toric/io.hpp"
#include "toric/reconstruction.hpp"
#include "toric/verify.hpp"

using namespace toric;

namespace {

const std::vector<std::string> kSmooth = {"p1",           "p2",           "p1xp1",
                                          "hirzebruch_0", "hirzebruch_1", "hirzebruch_2",
                                          "hirzebruch_3", "delpezzo6"};
const std::vector<std::string> kNonExamples = {"singular_cone", "incomplete_fan"};

std::string path(const std::string& name) { return std::string(TORIC_DATA_DIR) + "/" + name + ".json"; }
Fan load(const std::string& name) { return parse_fan(read_file(path(name))); }

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

std::vector<Vector> coefficient_box(std::size_t n, int lo, int hi) {
  std::vector<Vector> out{{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Vector> next;
    for (const auto& c : out)
      for (int a = lo; a <= hi; ++a) {
        Vector v = c;
        v.push_back(a);
        next.push_back(v);
      }
    out = next;
  }
  return out;
}

GradedPolynomial random_homogeneous(const CoxData& cd, std::mt19937_64& rng, int radius) {
  std::uniform_int_distribution<int> coord(-radius, radius);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (;;) {
    Vector lambda(cd.cl_rank());
    for (auto& x : lambda) x = coord(rng);
    auto basis = monomial_basis(cd, lambda);
    if (basis.empty()) continue;
    GradedPolynomial p(cd.num_vars());
    for (const auto& e : basis) p.add_term(e, Rational(coeff(rng)));
    if (!p.is_zero()) return p;
  }
}

Outcome exactness() {
  Outcome o;
  std::vector<std::string> all = kSmooth;
  all.insert(all.end(), kNonExamples.begin(), kNonExamples.end());
  for (const auto& name : all) {
    Fan f = load(name);
    ClassGroup cl = class_group(f);
    IntegerMatrix div = divisor_map(f);
    if (!(cl.degree_map.matrix * div).is_zero()) o.fail(name + ": Q div != 0");
    if (!same_column_lattice(kernel_basis(cl.degree_map.matrix), div) && cl.group.torsion_free())
      o.fail(name + ": ker Q != im div");
    // with torsion, exactness means ker Q / im div is the torsion of Cl
    if (!cl.group.torsion_free()) {
      Integer index = 1;
      for (const auto& d : smith_normal_form(div).diagonal()) index *= d;
      Integer torsion = 1;
      for (const auto& d : cl.group.invariant_factors) torsion *= d;
      if (index != torsion) o.fail(name + ": torsion order mismatch");
    }
    if (cl.group.free_rank != f.num_rays() - f.dim) o.fail(name + ": rank Cl");
  }
  o.detail = o.ok ? std::to_string(all.size()) + " fans" : o.detail;
  return o;
}

Outcome fiber_counts() {
  Outcome o;
  std::size_t degrees = 0;
  for (const auto& name : kSmooth) {
    CoxData cd(load(name));
    for (const auto& lambda : box_points(cd.cl_rank(), 4)) {
      ++degrees;
      if (fiber_count(cd, lambda) != section_polytope_count(cd, lambda)) {
        std::ostringstream os;
        os << name << " at " << lambda;
        o.fail(os.str());
      }
    }
  }
  CoxData p2(load("p2"));
  for (int d = 0; d <= 4; ++d)
    if (graded_dimension(p2, Vector{d}) != static_cast<std::size_t>((d + 1) * (d + 2) / 2))
      o.fail("P2 degree " + std::to_string(d));
  if (o.ok) o.detail = std::to_string(degrees) + " degrees, P2 d <= 4";
  return o;
}

Outcome euler_identity() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& name : kSmooth) {
    CoxData cd(load(name));
    EulerModule em = build_euler_module(cd);
    const auto& k = cd.kappa();
    for (const auto& e : monomials_up_to_weight(cd, k, 6)) {
      ++n;
      GradedPolynomial s = GradedPolynomial::monomial(e);
      if (kappa_hat(em, derivation(em, s), k) != s * Rational(k(cd.degree(e))))
        o.fail(name + ": " + cd.format(e));
    }
  }
  if (o.ok) o.detail = std::to_string(n) + " monomials";
  return o;
}

Outcome leibniz() {
  Outcome o;
  std::mt19937_64 rng(42);
  for (const auto& name : kSmooth) {
    CoxData cd(load(name));
    EulerModule em = build_euler_module(cd);
    for (int t = 0; t < 100; ++t) {
      GradedPolynomial f = random_homogeneous(cd, rng, 2);
      GradedPolynomial g = random_homogeneous(cd, rng, 2);
      if (!(derivation(em, f * g) == f * derivation(em, g) + g * derivation(em, f)))
        o.fail(name + ": " + cd.format(f) + " , " + cd.format(g));
    }
  }
  if (o.ok) o.detail = "100 pairs on each of " + std::to_string(kSmooth.size()) + " fans";
  return o;
}

Outcome kappa_hat_image() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& name : kSmooth) {
    CoxData cd(load(name));
    EulerModule em = build_euler_module(cd);
    const auto& k = cd.kappa();
    for (const auto& e : monomials_up_to_weight(cd, k, 6)) {
      GradedPolynomial m = GradedPolynomial::monomial(e);
      Integer w = k(cd.degree(e));
      if (w == 0) continue;  // only the constant monomial
      ++n;
      auto dm = derivation(em, m);
      GradedPolynomial image = kappa_hat(em, dm, k);
      if (image.constant_term() != 0) o.fail(name + ": nonzero constant term");
      EulerModuleElement scaled = GradedPolynomial::constant(cd.num_vars(), Rational(1, w)) * dm;
      if (kappa_hat(em, scaled, k) != m) o.fail(name + ": preimage of " + cd.format(e));
    }
  }
  if (o.ok) o.detail = std::to_string(n) + " monomials";
  return o;
}

Outcome generation() {
  Outcome o;
  for (const auto& name : kSmooth) {
    CoxData cd(load(name));
    EulerModule em = build_euler_module(cd);
    Vector weights;
    for (std::size_t rho = 0; rho < cd.num_vars(); ++rho)
      weights.push_back(cd.kappa()(cd.variable_degree(rho)));
    if (!little_hilbert_check(weights, generation_transfer(em, cd.kappa()), 6)) o.fail(name);
  }
  GradedPolynomial x2 = GradedPolynomial::monomial({2, 0});
  GradedPolynomial y = GradedPolynomial::monomial({0, 1});
  if (little_hilbert_check(Vector{1, 1}, {x2, y}, 6)) o.fail("{x^2, y} accepted");
  if (o.ok) o.detail = "weight <= 6 on every fan; {x^2, y} rejected";
  return o;
}

Outcome splitting() {
  Outcome o;
  for (const auto& name : kSmooth) {
    Fan f = load(name);
    SplittingCertificate s = splitting_certificate(f);
    if (s.rank != f.dim + class_group(f).group.free_rank) o.fail(name + ": rank");
    if (s.degree_sum != s.anticanonical_class || !s.anticanonical_check) o.fail(name + ": sum != -K");
  }
  SplittingCertificate p2 = splitting_certificate(load("p2"));
  if (p2.degree_multiset != std::vector<Vector>{{1}, {1}, {1}} || p2.degree_sum != Vector{3})
    o.fail("P2 certificate");
  if (o.ok) o.detail = "P2 degrees {1,1,1}, sum 3";
  return o;
}

ErrorCode reconstruct_error(const std::string& grading) {
  try {
    reconstruct_fan(parse_grading(read_file(path("gradings/" + grading))));
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::OracleMismatch;
}

Outcome roundtrip() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& name : kSmooth) {
    Fan f = load(name);
    for (const auto& c : coefficient_box(f.num_rays(), 0, 2)) {
      TorusInvariantDivisor d{c};
      if (!is_ample(f, d)) continue;
      ++n;
      if (!roundtrip_check(f, d)) {
        std::ostringstream os;
        os << name << " with D = " << c;
        o.fail(os.str());
      }
    }
  }
  ErrorCode bad = reconstruct_error("bad_q");
  if (bad != ErrorCode::NotSmooth && bad != ErrorCode::DegenerateRay) o.fail("Q=[[1,2]] accepted");
  if (reconstruct_error("nonample") != ErrorCode::NotAmpleLift) o.fail("non-ample w accepted");
  if (o.ok) o.detail = std::to_string(n) + " ample divisors; both rejections";
  return o;
}

Outcome cech() {
  Outcome o;
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (const auto& name : kSmooth) {
    Fan f = load(name);
    for (int t = 0; t < 20; ++t) {
      TorusInvariantDivisor d{Vector(f.num_rays())}, e{Vector(f.num_rays())};
      for (auto& a : d.coefficients) a = coeff(rng);
      for (auto& a : e.coefficients) a = coeff(rng);
      CechCocycle gd = cech_transitions(f, d), ge = cech_transitions(f, e),
                  gs = cech_transitions(f, d + e);
      const std::size_t k = gd.num_cones();
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
          Vector sum = gd(a, b);
          for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += ge(a, b)[i];
          if (sum != gs(a, b)) o.fail(name + ": additivity");
          for (std::size_t c = 0; c < k; ++c) {
            Vector comp = gd(a, b);
            for (std::size_t i = 0; i < comp.size(); ++i) comp[i] += gd(b, c)[i];
            if (comp != gd(a, c)) o.fail(name + ": cocycle");
          }
        }
    }
  }
  if (o.ok) o.detail = "20 divisors per fan, all triples";
  return o;
}

Outcome determinism() {
  Outcome o;
  for (const auto& name : kSmooth) {
    CliRun a = run_cli("verify --json " + data_path(name));
    CliRun b = run_cli("verify --json " + data_path(name));
    if (a.exit_code != 0) o.fail(name + ": verify exit " + std::to_string(a.exit_code));
    if (a.out.empty() || a.out != b.out) o.fail(name + ": outputs differ");
  }
  if (o.ok) o.detail = "byte-identical on " + std::to_string(kSmooth.size()) + " fans";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"exactness", exactness},
      {"fiber count = polytope count", fiber_counts},
      {"euler identity", euler_identity},
      {"leibniz rule", leibniz},
      {"kappa_hat image", kappa_hat_image},
      {"generation transfer", generation},
      {"splitting certificate", splitting},
      {"round trip", roundtrip},
      {"cech cocycle", cech},
      {"determinism", determinism},
  };
  const auto start = std::chrono::steady_clock::now();
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (!o.ok) ++failures;
    std::printf("%s %2zu %s: %s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d/%zu criteria passed in %.1fs\n", static_cast<int>(criteria.size()) - failures,
              criteria.size(), secs);
  return failures == 0 ? 0 : 1;
}
