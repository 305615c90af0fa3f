#include <chrono>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "twoabs/commands.hpp"

using namespace twoabs;

int main(int argc, char** argv) {
  CLI::App app{"twoabs: 2-absorbing submodules of finite modules and their amalgamations"};
  app.require_subcommand(1);
  commands::CommandOptions common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", common.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--budget", common.budget, "iteration guardrail");
    sub->add_flag("--force", common.force, "ignore the guardrail");
    sub->add_option("--seed", common.seed, "seed for random families");
    sub->add_option("--threads", common.threads, "sweep threads (0: all cores)");
  };

  std::string file, name, property = "all", module_name = "M", S_text, ids, family;

  auto* check = app.add_subcommand("check", "classify a submodule or ideal");
  check->add_option("file", file, "instance file")->required();
  check->add_option("name", name, "submodule or ideal binding")->required();
  check->add_option("--property", property, "prime, 2-absorbing, primary or all");
  add_common(check);

  auto* amalg = app.add_subcommand("amalgamate", "build M |><| JN");
  amalg->add_option("file", file, "instance file")->required();
  add_common(amalg);

  auto* enumerate = app.add_subcommand("enumerate", "list submodules");
  enumerate->add_option("file", file, "instance file")->required();
  enumerate->add_option("--module", module_name, "module (or ring, for its regular module)");
  add_common(enumerate);

  auto* localize = app.add_subcommand("localize", "S^-1 R and S^-1 M");
  localize->add_option("file", file, "instance file")->required();
  localize->add_option("--S", S_text, "multset binding or literal set such as {1,2,4,8}")->required();
  add_common(localize);

  auto* verify_cmd = app.add_subcommand("verify", "check catalogued statements");
  verify_cmd->add_option("ids", ids, "statement ids, a prefix such as C3_9, or all")->required();
  auto* file_opt = verify_cmd->add_option("--file", file, "single instance file");
  verify_cmd->add_option("--family", family, "instance family, e.g. zmod:2..12,products:2..4")->excludes(file_opt);
  add_common(verify_cmd);

  auto* examples = app.add_subcommand("examples", "run the canned example suite");
  add_common(examples);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    const Budget budget = common.make_budget();
    Report report;
    if (*check) report = commands::run_check(file, name, property, budget);
    else if (*amalg) report = commands::run_amalgamate(file, budget);
    else if (*enumerate) report = commands::run_enumerate(file, module_name, budget);
    else if (*localize) report = commands::run_localize(file, S_text, budget);
    else if (*verify_cmd) report = commands::run_verify(ids, file, family, common);
    else report = commands::run_examples(budget);
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (common.format == "json" ? render_json(report) : render_text(report));
    return report.exit_code();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    if (!e.witness().empty()) std::cerr << "  witness " << witness_text(e.witness()) << '\n';
    if (e.kind() == ErrorKind::BudgetExceeded) std::cerr << "  raise --budget or pass --force\n";
    return 2;
  }
}
