#include <CLI11.hpp>
#include <iostream>

#include "skewgr/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"partial skew group rings of inverse semigroups, at desk scale"};
  app.require_subcommand(1);

  std::string path;
  skewgr::cli::Options opts;
  std::string ring_text;
  bool grading_report = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("fixture", path, "fixture file")->required();
    cmd->add_option("--depth", opts.depth, "word/path depth bound");
    cmd->add_option("--trials", opts.trials, "randomized trial count");
    cmd->add_option("--seed", opts.seed, "random seed");
    cmd->add_option("--ring", ring_text, "integers | mod:<n> | rationals");
  };

  auto* validate = app.add_subcommand("validate", "structural validation");
  add_common(validate);
  auto* tight = app.add_subcommand("tight", "filters, ultrafilters, tight filters, V-basis");
  add_common(tight);
  auto* algebra = app.add_subcommand("algebra", "graded dimensions, units, identity suite");
  add_common(algebra);
  algebra->add_flag("--grading-report", grading_report, "report orthogonality/semi-saturation");
  auto* ck = app.add_subcommand("ck", "generator relation suites");
  add_common(ck);
  auto* unitize = app.add_subcommand("unitize", "unitization comparison");
  add_common(unitize);
  auto* action = app.add_subcommand("action-check", "partial action axioms");
  add_common(action);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (!ring_text.empty()) opts.ring = ring_text;

  skewgr::cli::CommandResult result;
  if (validate->parsed()) result = skewgr::cli::cmd_validate(path, opts);
  if (tight->parsed()) result = skewgr::cli::cmd_tight(path, opts);
  if (algebra->parsed()) result = skewgr::cli::cmd_algebra(path, opts, grading_report);
  if (ck->parsed()) result = skewgr::cli::cmd_ck(path, opts);
  if (unitize->parsed()) result = skewgr::cli::cmd_unitize(path, opts);
  if (action->parsed()) result = skewgr::cli::cmd_action_check(path, opts);

  std::cout << result.text;
  return result.exit_code;
}
