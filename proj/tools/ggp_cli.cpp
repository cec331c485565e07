#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ggp/dsl.hpp"
#include "ggp/error.hpp"
#include "ggp/properties.hpp"
#include "ggp/recipe.hpp"
#include "ggp/report.hpp"
#include "ggp/theta.hpp"

namespace {

using ggp::report::json;

enum Exit { kOk = 0, kDiagnostics = 1, kHypothesis = 2, kVerification = 3 };

struct Options {
  std::string input;
  std::uint64_t seed = 42;
  bool identify_chi = false;
  bool pretty = false;
  std::string backend = "auto";
  bool assume_irreducible_lift = false;
};

// Thrown for usage problems that are not parse errors of the DSL.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Outcome {
  json body;
  int code = kOk;
};

ggp::dsl::Model load_model(const Options& opt) {
  if (opt.input.empty()) throw UsageError("--input FILE is required");
  std::ifstream in(opt.input, std::ios::binary);
  if (!in) throw UsageError("cannot read " + opt.input);
  std::stringstream buf;
  buf << in.rdbuf();
  return ggp::dsl::build_model(ggp::dsl::parse(buf.str()));
}

const ggp::LParameter& param_of(const ggp::dsl::Model& model, const std::string& name) {
  const auto it = model.params.find(name);
  if (it == model.params.end()) throw UsageError("no parameter named " + name + " in the input");
  return it->second;
}

ggp::GgpSetting setting_for(const ggp::dsl::Model& model, int n, bool identify_chi) {
  const auto& s = model.setting;
  if (!s.chi) throw UsageError("the document needs a setting block with chi");
  if (identify_chi) return ggp::identified_setting(n, *s.chi, model.base);
  if (!s.chi_v || !s.chi_w) throw UsageError("setting needs chi_v and chi_w, or pass --identify-chi");
  ggp::GgpSetting out{n, *s.chi, *s.chi_v, *s.chi_w, model.base};
  out.validate();
  return out;
}

std::pair<ggp::EpsilonOracle, std::string> oracle_for(const ggp::dsl::Model& model, const Options& opt) {
  std::string name = opt.backend;
  if (name == "auto") name = model.has_table ? "table" : "hashed";
  const auto kind = ggp::parse_backend(name);
  if (!kind) throw UsageError("unknown backend " + name);
  if (*kind == ggp::BackendKind::Table && !model.has_table) throw UsageError("table backend needs an epsilon block");
  return {ggp::make_oracle(*kind, opt.seed, model.table), name};
}

Outcome do_packet(const ggp::dsl::Model& model, const std::string& name) {
  return {ggp::report::packet_report(name, param_of(model, name))};
}

Outcome do_theta(const ggp::dsl::Model& model, const Options& opt, const std::string& direction,
                 const std::string& name) {
  const ggp::LParameter& phi = param_of(model, name);
  const ggp::GgpSetting setting = setting_for(model, phi.rank(), opt.identify_chi);
  if (direction == "up1") return {ggp::report::theta_up1_report(name, phi, setting.leg2())};
  if (direction == "up2") {
    auto [oracle, backend] = oracle_for(model, opt);
    json out = ggp::report::theta_up2_report(name, phi, setting.leg1(), oracle);
    out["backend"] = backend;
    return {out};
  }
  throw UsageError("theta direction must be up1 or up2, got " + direction);
}

Outcome do_ggp(const ggp::dsl::Model& model, const Options& opt, const std::string& phi1_name,
               const std::string& phi_name) {
  const ggp::LParameter& phi1 = param_of(model, phi1_name);
  const ggp::LParameter& phi = param_of(model, phi_name);
  const ggp::GgpSetting setting = setting_for(model, phi1.rank(), opt.identify_chi);
  auto [oracle, backend] = oracle_for(model, opt);
  ggp::GgpOptions options;
  options.certify_irreducible_lift = opt.assume_irreducible_lift;
  const ggp::MultiplicityReport result = ggp::main_multiplicity(phi1, phi, setting, oracle, options);
  return {ggp::report::ggp_report(phi1, phi, setting, result, backend)};
}

struct VerifyArgs {
  int seeds = 100;
  int max_rank = 3;
  std::string backend = "hashed";
  std::string parity = "both";
  std::string mutation = "none";
};

Outcome do_verify(const Options& opt, const VerifyArgs& args, const std::optional<ggp::dsl::Model>& model) {
  ggp::SuiteConfig config;
  config.seeds = args.seeds;
  config.max_rank = args.max_rank;
  config.base_seed = opt.seed;
  config.identify_chi = opt.identify_chi;
  if (args.seeds < 0) throw UsageError("--seeds must be non-negative");
  if (args.max_rank < 2) throw UsageError("--max-rank must be at least 2");

  if (args.parity == "both") {
    config.parities = {1, 0};
  } else if (args.parity == "odd") {
    config.parities = {1};
  } else if (args.parity == "even") {
    config.parities = {0};
  } else {
    throw UsageError("--parity must be odd, even or both");
  }

  if (args.backend == "all") {
    config.backends = {ggp::BackendKind::One, ggp::BackendKind::Hashed};
  } else if (const auto kind = ggp::parse_backend(args.backend)) {
    config.backends = {*kind};
  } else {
    throw UsageError("unknown backend " + args.backend);
  }
  if (config.backends.front() == ggp::BackendKind::Table) {
    if (!model || !model->has_table) throw UsageError("table backend needs --input with an epsilon block");
    config.table = model->table;
  }

  const auto mutation = ggp::parse_mutation(args.mutation);
  if (!mutation) throw UsageError("unknown mutation " + args.mutation);
  config.mutation = *mutation;

  const ggp::PropertyReport result = ggp::run_property_suite(config);
  return {ggp::report::verify_report(config, result), result.all_passed() ? kOk : kVerification};
}

Outcome do_run(const ggp::dsl::Model& model, const Options& opt) {
  json out = {{"schema", ggp::report::kSchema}, {"command", "run"}};
  json results = json::array();
  int code = kOk;
  for (const auto& task : model.tasks) {
    Outcome o;
    if (task.kind == "packet") {
      o = do_packet(model, task.args.at(0));
    } else if (task.kind == "theta") {
      o = do_theta(model, opt, task.args.at(0), task.args.at(1));
    } else if (task.kind == "ggp") {
      o = do_ggp(model, opt, task.args.at(0), task.args.at(1));
    } else {
      VerifyArgs args;
      if (task.options.count("seeds")) args.seeds = std::stoi(task.options.at("seeds"));
      if (task.options.count("max_rank")) args.max_rank = std::stoi(task.options.at("max_rank"));
      if (task.options.count("backend")) args.backend = task.options.at("backend");
      o = do_verify(opt, args, model);
    }
    o.body.erase("schema");
    results.push_back(o.body);
    code = std::max(code, o.code);
  }
  out["results"] = results;
  return {out, code};
}

json error_body(const std::string& kind, const std::string& message) {
  return {{"schema", ggp::report::kSchema}, {"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local Gan-Gross-Prasad multiplicities through theta correspondence"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  bool json_flag = false;
  app.add_option("--input", opt.input, "DSL document");
  app.add_option("--seed", opt.seed, "Seed of the hashed backend and of verify")->envname("GGP_SEED");
  app.add_flag("--identify-chi", opt.identify_chi, "Use chi_v = chi^(n+2), chi_w = chi^n");
  app.add_flag("--json", json_flag, "Compact JSON output (default)");
  app.add_flag("--pretty", opt.pretty, "Indented JSON output");

  std::string param_a;
  std::string param_b;
  std::string direction;

  auto* packet = app.add_subcommand("packet", "List the members of a packet with their sides");
  packet->add_option("param", param_a, "Parameter name")->required();

  auto* theta = app.add_subcommand("theta", "Lift a parameter and its characters");
  theta->add_option("direction", direction, "up1 or up2")->required()->check(CLI::IsMember({"up1", "up2"}));
  theta->add_option("param", param_a, "Parameter name")->required();
  theta->add_option("--backend", opt.backend, "auto, one, hashed or table");

  auto* ggp_cmd = app.add_subcommand("ggp", "Multiplicity and distinguished pair for (phi1, phi)");
  ggp_cmd->add_option("phi1", param_a, "Supercuspidal-packet parameter of U(W_n)")->required();
  ggp_cmd->add_option("phi", param_b, "Tempered parameter of U(V_{n+1})")->required();
  ggp_cmd->add_option("--backend", opt.backend, "auto, one, hashed or table");
  ggp_cmd->add_flag("--assume-irreducible-lift", opt.assume_irreducible_lift,
                    "Vouch that lifts back from theta(phi2) are irreducible when chi_w repeats");

  VerifyArgs vargs;
  auto* verify = app.add_subcommand("verify", "Run the property suite on random instances");
  verify->add_option("--seeds", vargs.seeds, "Instances per parity and backend");
  verify->add_option("--max-rank", vargs.max_rank, "Largest n + 1");
  verify->add_option("--backend", vargs.backend, "one, hashed, table or all");
  verify->add_option("--parity", vargs.parity, "odd, even or both");
  verify->add_option("--mutation", vargs.mutation, "Fault injected into the transport");

  auto* run = app.add_subcommand("run", "Execute the task directives of the input document");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    std::cout << error_body("UsageError", e.what()).dump() << "\n";
    return kDiagnostics;
  }

  Outcome outcome;
  try {
    if (packet->parsed()) {
      outcome = do_packet(load_model(opt), param_a);
    } else if (theta->parsed()) {
      outcome = do_theta(load_model(opt), opt, direction, param_a);
    } else if (ggp_cmd->parsed()) {
      outcome = do_ggp(load_model(opt), opt, param_a, param_b);
    } else if (verify->parsed()) {
      std::optional<ggp::dsl::Model> model;
      if (!opt.input.empty()) model = load_model(opt);
      outcome = do_verify(opt, vargs, model);
    } else if (run->parsed()) {
      outcome = do_run(load_model(opt), opt);
    }
  } catch (const ggp::dsl::SyntaxError& e) {
    json body = error_body("SyntaxError", e.what());
    body["error"]["line"] = e.pos().line;
    body["error"]["column"] = e.pos().column;
    body["error"]["expected"] = e.expected();
    outcome = {body, kDiagnostics};
  } catch (const ggp::dsl::SemanticError& e) {
    json body = error_body("SemanticError", e.what());
    body["error"]["line"] = e.pos().line;
    body["error"]["column"] = e.pos().column;
    if (e.cause()) body["error"]["cause"] = std::string(ggp::to_string(*e.cause()));
    outcome = {body, kDiagnostics};
  } catch (const ggp::Error& e) {
    json body = error_body(std::string(ggp::to_string(e.kind())), e.what());
    outcome = {body, e.is_hypothesis_violation() ? kHypothesis : kDiagnostics};
  } catch (const UsageError& e) {
    outcome = {error_body("UsageError", e.what()), kDiagnostics};
  }

  if (outcome.body.contains("error")) std::cerr << outcome.body["error"]["message"].get<std::string>() << "\n";
  std::cout << outcome.body.dump(opt.pretty ? 2 : -1) << "\n";
  return outcome.code;
}
