#ifndef SKEWGR_CLI_HPP
#define SKEWGR_CLI_HPP

#include <optional>
#include <string>
#include <variant>

#include "skewgr/labelled.hpp"

namespace skewgr::cli {

struct ParseError {
  int line;
  std::string message;
};

struct Options {
  int depth = 3;
  int trials = 500;
  std::uint64_t seed = 0;
  std::optional<std::string> ring;  // overrides the fixture's ring
};

struct TableFixture {
  std::shared_ptr<const FiniteTableSemigroup> semigroup;
  std::shared_ptr<const Group> group;
  std::vector<GroupWord> grades;  // per element
};

struct AntichainFixture {
  int display_bound = 6;
};

// One self-describing fixture: a ring, options, and one object.
struct Fixture {
  Ring ring = Ring::integers();
  Options options;
  std::variant<std::monostate, Semilattice, TableFixture, DirectedGraph, LabelledSpace, AntichainFixture>
      object;
};

Fixture load_fixture(const std::string& path);  // throws ParseError

struct CommandResult {
  int exit_code = 0;  // 0 pass, 1 verification failure, 2 usage/parse error
  std::string text;
};

CommandResult cmd_validate(const std::string& path, const Options& opts);
CommandResult cmd_tight(const std::string& path, const Options& opts);
CommandResult cmd_algebra(const std::string& path, const Options& opts, bool grading_report = false);
CommandResult cmd_ck(const std::string& path, const Options& opts);
CommandResult cmd_unitize(const std::string& path, const Options& opts);
CommandResult cmd_action_check(const std::string& path, const Options& opts);

}  // namespace skewgr::cli

#endif
