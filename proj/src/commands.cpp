#include "toric/commands.hpp"

#include <sstream>

#include "toric/cox_ring.hpp"
#include "toric/error.hpp"
#include "toric/euler_module.hpp"
#include "toric/io.hpp"
#include "toric/reconstruction.hpp"

namespace toric {

namespace {

using ojson = nlohmann::ordered_json;

std::string str(const Vector& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

ojson vectors(const std::vector<Vector>& vs) {
  ojson a = ojson::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return kExitParse;
    case ErrorCode::MalformedFan: return kExitMalformed;
    default: return kExitFailure;
  }
}

template <typename Body>
CommandResult run(const std::string& name, const std::string& content, Body&& body) {
  CommandResult res;
  res.report.command = name;
  res.report.input_digest = sha256_hex(content);
  try {
    res.exit_code = body(res.report);
  } catch (const Error& e) {
    res.report.set_error(std::string(to_string(e.code())), e.what());
    res.exit_code = exit_code_for(e.code());
  }
  return res;
}

Vector parse_degree(const std::string& text) {
  Vector v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      long long x = std::stoll(item, &used);
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
      v.emplace_back(x);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "degree must be comma-separated integers, got \"" + text + "\"");
    }
  }
  if (v.empty()) throw Error(ErrorCode::ParseError, "empty degree");
  return v;
}

void add_fan_summary(Report& r, const Fan& f) {
  r.section("fan")
      .add("dim", f.dim)
      .add("rays", vectors(f.rays))
      .add("max_cones", f.max_cones);
}

}  // namespace

CommandResult cmd_validate(const std::string& content) {
  return run("validate", content, [&](Report& r) {
    const Fan f = parse_fan(content);
    const FanReport v = validate_fan(f);
    add_fan_summary(r, f);
    r.section("validation")
        .add("simplicial", v.simplicial)
        .add("smooth", v.smooth)
        .add("complete", v.complete);
    if (!(v.smooth && v.complete)) {
      r.set_error("NotSmoothComplete", "fan is not both smooth and complete");
      return kExitFailure;
    }
    return kExitOk;
  });
}

CommandResult cmd_cox(const std::string& content) {
  return run("cox", content, [&](Report& r) {
    const CoxData cd(parse_fan(content));
    const Fan& f = cd.fan();
    add_fan_summary(r, f);

    r.section("class group")
        .add("rank", cd.cl_rank())
        .add("torsion", ojson::array())
        .add("degree_matrix", to_json(cd.degree_map().matrix));

    auto& vars = r.section("variables");
    for (std::size_t rho = 0; rho < cd.num_vars(); ++rho)
      vars.add(cd.variable_names()[rho], to_json(cd.variable_degree(rho)));

    const RationalCone& eff = cd.effective_cone();
    r.section("effective cone")
        .add("rays", vectors(eff.rays()))
        .add("facet_normals", vectors(eff.facet_normals()))
        .add("pointed", eff.is_pointed());

    const LinearFormKappa& k = cd.kappa();
    ojson on_rays = ojson::array();
    for (const auto& g : eff.rays())
      on_rays.push_back("kappa" + str(g) + " = " + k(g).str() + " >= 0");
    ojson on_hilbert = ojson::array();
    for (const auto& h : hilbert_basis(eff))
      on_hilbert.push_back("kappa" + str(h) + " = " + k(h).str() + " >= 1");
    r.section("kappa")
        .add("coefficients", to_json(k.coefficients))
        .add("on_effective_rays", on_rays)
        .add("on_hilbert_basis", on_hilbert);

    ojson gens = ojson::array();
    for (const auto& e : irrelevant_ideal(cd).generators) gens.push_back(cd.format(e));
    r.section("irrelevant ideal").add("generators", gens);

    const TorusInvariantDivisor minus_k = anticanonical(f);
    r.section("anticanonical")
        .add("divisor", to_json(minus_k.coefficients))
        .add("class", to_json(cd.divisor_class(minus_k)))
        .add("ample", is_ample(f, minus_k));
    return kExitOk;
  });
}

CommandResult cmd_euler(const std::string& content, const std::optional<std::string>& degree) {
  return run("euler", content, [&](Report& r) {
    const EulerModule em = build_euler_module(CoxData(parse_fan(content)));
    const CoxData& cd = em.cox();
    const Vector lambda = degree ? parse_degree(*degree) : cd.divisor_class(anticanonical(cd.fan()));
    if (lambda.size() != cd.cl_rank()) {
      throw Error(ErrorCode::DimensionMismatch,
                  "degree must have " + std::to_string(cd.cl_rank()) + " entries");
    }
    r.section("euler module")
        .add("rank", em.rank())
        .add("basis_degrees", vectors(em.basis_degrees()));

    ojson summands = ojson::object();
    for (std::size_t rho = 0; rho < em.rank(); ++rho) {
      Vector shifted = lambda;
      for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] -= em.basis_degrees()[rho][i];
      summands["e" + std::to_string(rho)] = graded_dimension(cd, shifted);
    }
    r.section("graded piece")
        .add("degree", to_json(lambda))
        .add("dim", graded_piece_dim(em, lambda))
        .add("summand_dims", summands)
        .add("dim_S", graded_dimension(cd, lambda));

    // spot check on the whole degree-lambda piece plus their sum
    const LinearFormKappa& k = cd.kappa();
    std::size_t checked = 0;
    ojson failures = ojson::array();
    GradedPolynomial total(cd.num_vars());
    auto check = [&](const GradedPolynomial& s) {
      ++checked;
      GradedPolynomial rhs = s * Rational(k(lambda));
      if (kappa_hat(em, derivation(em, s), k) != rhs) failures.push_back(cd.format(s));
    };
    for (const auto& e : monomial_basis(cd, lambda)) {
      check(GradedPolynomial::monomial(e));
      total.add_term(e, Rational(static_cast<long long>(checked)));
    }
    if (!total.is_zero()) check(total);
    r.section("euler identity")
        .add("kappa", to_json(k.coefficients))
        .add("kappa_of_degree", to_json(Vector{k(lambda)}))
        .add("checked", checked)
        .add("failures", failures);
    if (!failures.empty()) {
      r.set_error("EulerIdentity", "kappa_hat(ds) != kappa(deg s) s");
      return kExitFailure;
    }
    return kExitOk;
  });
}

CommandResult cmd_reconstruct(const std::string& content) {
  return run("reconstruct", content, [&](Report& r) {
    const GradingInput gi = parse_grading(content);
    r.section("grading").add("Q", to_json(gi.Q)).add("w", to_json(gi.w));
    const GaleDual g = gale_dual_rays(gi);
    r.section("gale dual")
        .add("rays", to_json(g.rays))
        .add("multiplicities", to_json(g.multiplicities));
    const Fan f = reconstruct_fan(gi);
    r.section("fan").add("json", fan_to_json(f));
    return kExitOk;
  });
}

CommandResult cmd_verify(const std::string& content, const VerifyOptions& opts) {
  return run("verify", content, [&](Report& r) {
    const Fan f = parse_fan(content);
    add_fan_summary(r, f);
    const auto results = verify_fan(f, opts);
    auto& s = r.section("checks");
    bool all = true;
    for (const auto& c : results) {
      s.add(c.name, ojson{{"passed", c.passed}, {"detail", c.detail}});
      all = all && c.passed;
    }
    if (!all) {
      r.set_error("VerificationFailed", "at least one invariant failed");
      return kExitFailure;
    }
    return kExitOk;
  });
}

CommandResult run_command(const std::string& command, const std::string& content,
                          const std::optional<std::string>& degree) {
  if (command == "validate") return cmd_validate(content);
  if (command == "cox") return cmd_cox(content);
  if (command == "euler") return cmd_euler(content, degree);
  if (command == "reconstruct") return cmd_reconstruct(content);
  if (command == "verify") return cmd_verify(content);
  CommandResult res;
  res.report.command = command;
  res.report.set_error("ParseError", "unknown command " + command);
  res.exit_code = kExitParse;
  return res;
}

}  // namespace toric
