#include "contra/jobs.hpp"

#include "contra/sampling.hpp"
#include "contra/towers.hpp"

namespace contra {

namespace {

const json& require_input(const JobSpec& job, const std::string& role) {
  auto it = job.inputs.find(role);
  if (it == job.inputs.end()) throw SchemaError("/" + role, "missing required input");
  return it->second;
}

bool is_contra(const json& j) { return input_kind(j) == "contramodule"; }

json exactness_report(const CoalgebraMorphism& rho, std::size_t samples, std::uint64_t seed,
                      bool& consistent) {
  Rng rng(seed);
  const bool injective = is_injective(comodule_along(rho)).injective;
  const auto battery = probe_battery(rho.target, samples, rng);
  json failures = json::array();
  for (std::size_t s = 0; s < battery.size(); ++s) {
    const ExactnessVerdict v = exactness_probe(rho, battery[s]);
    if (!v.exact) {
      failures.push_back({{"sample", s},
                          {"positions", v.failures},
                          {"dims", {battery[s].a.dim, battery[s].b.dim, battery[s].q.dim}}});
    }
  }
  // Injectivity of C over D forces exactness; a failure then is a defect.
  consistent = !(injective && !failures.empty());
  return {{"total", battery.size()},
          {"failures", failures},
          {"injective_along", injective},
          {"consistent", consistent}};
}

JobResult verify(const JobSpec& job) {
  const json& in = require_input(job, "input");
  const ParseContext ctx{job.field};
  const std::string kind = input_kind(in);
  Verdict v;
  if (kind == "coalgebra") {
    v = check_coalgebra(*coalgebra_from_json(in, ctx, ""));
  } else if (kind == "comodule") {
    v = check_comodule(comodule_from_json(in, ctx, ""));
  } else if (kind == "contramodule") {
    v = check_contramodule(contramodule_from_json(in, ctx, ""));
  } else if (kind == "morphism") {
    v = check_morphism(morphism_from_json(in, ctx, ""));
  } else if (kind == "rational") {
    try {
      v = check_rational(catalog_rational(in.at("rational").get<std::string>()));
    } catch (const std::invalid_argument& e) {
      throw SchemaError("/rational", e.what());
    }
  } else {
    throw SchemaError("", "cannot tell which kind of object this is");
  }
  return {v.ok() ? 0 : 1, {{"kind", kind}, {"verdict", to_json(v)}}};
}

JobResult hom(const JobSpec& job) {
  const ParseContext ctx{job.field};
  const json& jm = require_input(job, "M");
  const json& jn = require_input(job, "N");
  Subspace h;
  if (is_contra(jm)) {
    const Contramodule a = contramodule_from_json(jm, ctx, "/M");
    const Contramodule b = contramodule_from_json(jn, ParseContext{a.field()}, "/N");
    h = hom_contra(a, b);
  } else {
    const Comodule a = comodule_from_json(jm, ctx, "/M");
    const Comodule b = comodule_from_json(jn, ParseContext{a.coalgebra->field}, "/N");
    if (a.side != b.side) throw SchemaError("/N/side", "hom needs comodules on the same side");
    h = hom_comodules(a, b);
  }
  return {0, {{"dim", h.dim()}, {"basis", to_json(h.basis())}}};
}

JobResult cotensor_job(const JobSpec& job) {
  const ParseContext ctx{job.field};
  const Comodule m = comodule_from_json(require_input(job, "M"), ctx, "/M");
  const Comodule n = comodule_from_json(require_input(job, "N"), ParseContext{m.coalgebra->field}, "/N");
  if (m.side != Side::right) throw SchemaError("/M/side", "expected a right comodule");
  if (n.side != Side::left) throw SchemaError("/N/side", "expected a left comodule");
  const Subspace s = cotensor(m, n);
  return {0, {{"dim", s.dim()}, {"basis", to_json(s.basis())}}};
}

JobResult pairing_job(const JobSpec& job, bool contra_tensor) {
  const ParseContext ctx{job.field};
  const Comodule m = comodule_from_json(require_input(job, "M"), ctx, "/M");
  const Contramodule b = contramodule_from_json(require_input(job, "B"), ParseContext{m.coalgebra->field}, "/B");
  if (contra_tensor && m.side != Side::right) throw SchemaError("/M/side", "expected a right comodule");
  if (!contra_tensor && m.side != Side::left) throw SchemaError("/M/side", "expected a left comodule");
  const Coequalizer q = contra_tensor ? contratensor(m, b) : cohom(m, b);
  return {0, {{"dim", q.dim}, {"quotient_map", to_json(q.quotient_map)}}};
}

JobResult induce_job(const JobSpec& job) {
  const ParseContext ctx{job.field};
  const CoalgebraMorphism rho = morphism_from_json(require_input(job, "rho"), ctx, "/rho");
  const Contramodule w = contramodule_from_json(require_input(job, "W"), ParseContext{rho.source->field}, "/W");
  InductionResult ind;
  try {
    ind = induce(rho, w);
  } catch (const std::invalid_argument& e) {
    throw SchemaError("/rho", e.what());
  }
  const Verdict v = check_contramodule(ind.induced);
  return {v.ok() ? 0 : 1,
          {{"dim_W", w.dim},
           {"dim_induced", ind.induced.dim},
           {"induced", to_json(ind.induced)},
           {"presentation", to_json(ind.presentation)},
           {"verdict", to_json(v)}}};
}

JobResult adjoint_job(const JobSpec& job) {
  const ParseContext ctx{job.field};
  const CoalgebraMorphism rho = morphism_from_json(require_input(job, "rho"), ctx, "/rho");
  const ParseContext same{rho.source->field};
  const Contramodule w = contramodule_from_json(require_input(job, "W"), same, "/W");
  const Contramodule v = contramodule_from_json(require_input(job, "V"), same, "/V");
  if (w.coalgebra->dim != rho.target->dim) throw SchemaError("/W/coalgebra", "W must live over the target of rho");
  if (v.coalgebra->dim != rho.source->dim) throw SchemaError("/V/coalgebra", "V must live over the source of rho");
  AdjunctionReport a;
  try {
    a = adjunction_check(rho, w, v);
  } catch (const std::invalid_argument& e) {
    throw SchemaError("/rho", e.what());
  }
  bool consistent = true;
  json ex = exactness_report(rho, job.samples, job.seed, consistent);
  json report = {{"adjunction", {{"lhs_dim", a.lhs_dim}, {"rhs_dim", a.rhs_dim}, {"round_trip", a.round_trip}}},
                 {"exactness", ex}};
  return {a.ok() && consistent ? 0 : 1, report};
}

JobResult exactness_job(const JobSpec& job) {
  const ParseContext ctx{job.field};
  const CoalgebraMorphism rho = morphism_from_json(require_input(job, "rho"), ctx, "/rho");
  const Verdict mv = check_morphism(rho);
  if (!mv.ok() || !rho.surjective) throw SchemaError("/rho", "expected a surjective coalgebra morphism");
  auto it = job.inputs.find("ses");
  if (it != job.inputs.end()) {
    const ContraSES s = ses_from_json(it->second, ParseContext{rho.source->field}, "/ses");
    if (s.b.coalgebra->dim != rho.target->dim) throw SchemaError("/ses/b", "SES must live over the target of rho");
    const ExactnessVerdict v = exactness_probe(rho, s);
    const bool injective = is_injective(comodule_along(rho)).injective;
    const bool consistent = !(injective && !v.exact);
    return {consistent ? 0 : 1,
            {{"exact", v.exact}, {"positions", v.failures}, {"injective_along", injective},
             {"consistent", consistent}}};
  }
  bool consistent = true;
  json ex = exactness_report(rho, job.samples, job.seed, consistent);
  return {consistent ? 0 : 1, {{"exactness", ex}}};
}

JobResult duality_job(const JobSpec& job) {
  const ParseContext ctx{job.field};
  const Comodule v = comodule_from_json(require_input(job, "V"), ctx, "/V");
  const Comodule w = comodule_from_json(require_input(job, "W"), ParseContext{v.coalgebra->field}, "/W");
  if (v.side != Side::left || w.side != Side::left) throw SchemaError("/V/side", "expected left comodules");
  require_same_coalgebra(v.coalgebra, w.coalgebra, "duality");
  const DualityReport d = duality_check(v, w);
  return {d.ok() ? 0 : 1,
          {{"cohom_dim", d.cohom_dim},
           {"hom_dim", d.hom_dim},
           {"pairing_rank", d.pairing_rank},
           {"well_defined", d.well_defined}}};
}

std::vector<std::string> battery_names(const json& j) {
  const json& list = j.is_object() && j.contains("modules") ? j["modules"] : j;
  const std::string ptr = j.is_object() ? "/battery/modules" : "/battery";
  if (!list.is_array()) throw SchemaError(ptr, "expected a list of module names");
  std::vector<std::string> out;
  for (std::size_t k = 0; k < list.size(); ++k) {
    if (!list[k].is_string()) throw SchemaError(ptr + "/" + std::to_string(k), "expected a name");
    out.push_back(list[k].get<std::string>());
  }
  return out;
}

JobResult tower_job(const JobSpec& job) {
  if (job.p != 2) throw SchemaError("/p", "only p = 2 is supported");
  if (job.field && job.field->characteristic() != 2) throw SchemaError("/field", "towers live over F2");
  const auto names = battery_names(require_input(job, "battery"));
  std::vector<RationalComodule> modules;
  for (std::size_t k = 0; k < names.size(); ++k) {
    try {
      modules.push_back(catalog_rational(names[k]));
    } catch (const std::invalid_argument& e) {
      throw SchemaError("/battery/" + std::to_string(k), e.what());
    }
  }
  RationalTower tower;
  try {
    tower = build_tower(job.lambda, job.mmax);
  } catch (const std::invalid_argument& e) {
    throw SchemaError("/lambda", e.what());
  }
  json reports = json::array();
  bool all = true;
  for (std::size_t k = 0; k < modules.size(); ++k) {
    const TowerReport r = cohom_tower(modules[k], tower, TowerOptions{true, false});
    json stages = json::array();
    bool heads = true;
    for (const TowerStage& s : r.stages) {
      stages.push_back({{"m", s.m}, {"dim_cohom", s.dim_cohom}, {"dim_P", s.dim_P}});
      if (s.head_ok) heads = heads && *s.head_ok;
    }
    json entry = {{"V", names[k]},
                  {"lambda", r.lambda},
                  {"p", r.p},
                  {"stages", stages},
                  {"weight_stage", r.weight_stage},
                  {"f_V", r.f_V},
                  {"match", r.match},
                  {"heads_ok", heads}};
    entry["stabilized_at"] = r.stabilized_at ? json(*r.stabilized_at) : json(nullptr);
    all = all && r.match && heads;
    reports.push_back(entry);
  }
  return {all ? 0 : 1,
          {{"lambda", job.lambda}, {"p", job.p}, {"mmax", job.mmax}, {"reports", reports}, {"match", all}}};
}

}  // namespace

std::string input_kind(const json& j) {
  if (j.is_string()) return "coalgebra";
  if (!j.is_object()) return "";
  if (j.contains("rational")) return j.contains("r") ? "comodule" : "rational";
  if (j.contains("theta") || j.contains("free") || j.contains("trivial") || j.contains("from_comodule")) {
    return "contramodule";
  }
  if (j.contains("coaction") || j.contains("cofree") || j.contains("regular")) return "comodule";
  if (j.contains("source") || (j.contains("catalog") && j["catalog"].is_string() &&
                               j["catalog"].get<std::string>().find("map") != std::string::npos)) {
    return "morphism";
  }
  if (j.contains("catalog")) {
    const std::string c = j["catalog"].get<std::string>();
    if (c.rfind("identity(", 0) == 0 || c.rfind("counit(", 0) == 0 || c.rfind("diagonal(", 0) == 0) {
      return "morphism";
    }
    return "coalgebra";
  }
  if (j.contains("delta")) return "coalgebra";
  return "";
}

JobResult run_job(const JobSpec& job) {
  JobResult result;
  try {
    if (job.command == "verify") result = verify(job);
    else if (job.command == "hom") result = hom(job);
    else if (job.command == "cotensor") result = cotensor_job(job);
    else if (job.command == "contratensor") result = pairing_job(job, true);
    else if (job.command == "cohom") result = pairing_job(job, false);
    else if (job.command == "induce") result = induce_job(job);
    else if (job.command == "adjoint-check") result = adjoint_job(job);
    else if (job.command == "exactness") result = exactness_job(job);
    else if (job.command == "duality") result = duality_job(job);
    else if (job.command == "tower") result = tower_job(job);
    else throw SchemaError("/command", "unknown command '" + job.command + "'");
  } catch (const SchemaError& e) {
    result.exit_code = 2;
    result.report = {{"error", {{"pointer", e.pointer()}, {"message", e.what()}}}};
  } catch (const std::invalid_argument& e) {
    // Dimension or coalgebra mismatches between otherwise valid inputs.
    result.exit_code = 2;
    result.report = {{"error", {{"pointer", ""}, {"message", e.what()}}}};
  }
  result.report["command"] = job.command;
  result.report["seed"] = job.seed;
  result.report["exit_code"] = result.exit_code;
  if (job.field) result.report["field"] = to_json(*job.field);
  return result;
}

}  // namespace contra
