// Batch entry point: contra <command> [inputs] [--seed N] [--field F] [--pretty] [--out PATH]

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "contra/jobs.hpp"

namespace {

using contra::json;

/// An input argument is a file path, inline JSON, or a bare catalog name.
json load_input(const std::string& role, const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    try {
      return json::parse(in);
    } catch (const json::parse_error& e) {
      throw contra::SchemaError("/" + role, std::string("malformed JSON in ") + arg + ": " + e.what());
    }
  }
  const json inline_json = json::parse(arg, nullptr, false);
  if (!inline_json.is_discarded()) return inline_json;
  if (arg.find_first_of("/\\") != std::string::npos || arg.ends_with(".json")) {
    throw contra::SchemaError("/" + role, "no such file: " + arg);
  }
  return arg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with coalgebras, comodules and contramodules"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = contra::kDefaultSeed;
  std::string field_text;
  std::string out_path;
  bool pretty = false;
  app.add_option("--seed", seed, "Seed for randomized probes");
  app.add_option("--field", field_text, "Q or Fp:<p>");
  app.add_flag("--pretty", pretty, "Indent the JSON report");
  app.add_option("--out", out_path, "Write the report here instead of stdout");

  std::map<std::string, std::string> args;
  contra::JobSpec job;

  auto positional = [&](CLI::App* sub, const std::string& role, const std::string& help) {
    sub->add_option(role, args[role], help)->required();
  };
  auto named = [&](CLI::App* sub, const std::string& role, bool required) {
    auto* opt = sub->add_option("--" + role, args[role], role + " input (file, inline JSON or catalog name)");
    if (required) opt->required();
  };

  auto* verify = app.add_subcommand("verify", "Check the axioms of a coalgebra, comodule, contramodule or morphism");
  positional(verify, "input", "object to verify");

  auto* hom = app.add_subcommand("hom", "Hom space between two comodules or two contramodules");
  positional(hom, "M", "source");
  positional(hom, "N", "target");

  auto* cot = app.add_subcommand("cotensor", "Cotensor product of a right and a left comodule");
  positional(cot, "M", "right comodule");
  positional(cot, "N", "left comodule");

  auto* ctt = app.add_subcommand("contratensor", "Contratensor product of a right comodule and a contramodule");
  positional(ctt, "M", "right comodule");
  positional(ctt, "B", "contramodule");

  auto* coh = app.add_subcommand("cohom", "Cohom from a left comodule to a contramodule");
  positional(coh, "M", "left comodule");
  positional(coh, "B", "contramodule");

  auto* ind = app.add_subcommand("induce", "Induce a contramodule along a coalgebra surjection");
  named(ind, "rho", true);
  named(ind, "W", true);

  auto* adj = app.add_subcommand("adjoint-check", "Check the induction/restriction adjunction");
  named(adj, "rho", true);
  named(adj, "W", true);
  named(adj, "V", true);
  adj->add_option("--samples", job.samples, "Random SES probes for the exactness part");

  auto* ex = app.add_subcommand("exactness", "Probe exactness of induction on short exact sequences");
  named(ex, "rho", true);
  named(ex, "ses", false);
  ex->add_option("--samples", job.samples, "Random SES probes");

  auto* dua = app.add_subcommand("duality", "Compare Cohom(V, W*) with Hom(W, V)");
  positional(dua, "V", "left comodule");
  positional(dua, "W", "left comodule");

  auto* tow = app.add_subcommand("tower", "Cohom towers against the projective system P_lambda");
  tow->add_option("--p", job.p, "Characteristic")->default_val(2);
  tow->add_option("--lambda", job.lambda, "Highest weight")->required();
  tow->add_option("--mmax", job.mmax, "Last stage")->default_val(3);
  named(tow, "battery", true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  job.command = app.get_subcommands().front()->get_name();
  job.seed = seed;
  contra::JobResult result;
  try {
    if (!field_text.empty()) {
      try {
        job.field = contra::Field::parse(field_text);
      } catch (const std::exception& e) {
        throw contra::SchemaError("/field", e.what());
      }
    }
    for (const auto& [role, value] : args) {
      if (!value.empty()) job.inputs[role] = load_input(role, value);
    }
    result = contra::run_job(job);
  } catch (const contra::SchemaError& e) {
    result.exit_code = 2;
    result.report = {{"command", job.command},
                     {"seed", job.seed},
                     {"exit_code", 2},
                     {"error", {{"pointer", e.pointer()}, {"message", e.what()}}}};
  }

  const std::string text = result.report.dump(pretty ? 2 : -1) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return 2;
    }
    out << text;
  }
  if (result.exit_code == 2) std::cerr << result.report["error"]["message"].get<std::string>() << "\n";
  return result.exit_code;
}
