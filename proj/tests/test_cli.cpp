#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "skewgr/cli.hpp"

using namespace skewgr;
using namespace skewgr::cli;

namespace {

std::string fixture(const std::string& name) { return std::string(SKEWGR_FIXTURES_DIR "/") + name; }

}  // namespace

TEST_CASE("fixture parsing") {
  auto fx = load_fixture(fixture("edge.txt"));
  CHECK(std::holds_alternative<DirectedGraph>(fx.object));
  CHECK(fx.ring.describe() == "integers");

  auto sl = load_fixture(fixture("diamond_semilattice.txt"));
  const auto* P = std::get_if<Semilattice>(&sl.object);
  REQUIRE(P);
  CHECK(P->size() == 4);

  auto tf = load_fixture(fixture("table_edge.txt"));
  const auto* T = std::get_if<TableFixture>(&tf.object);
  REQUIRE(T);
  CHECK(T->semigroup->size() == 5);
  CHECK(T->grades[3] == T->group->parse_word("e"));

  CHECK_THROWS_AS((void)load_fixture(fixture("missing.txt")), ParseError);
}

TEST_CASE("malformed fixtures report the line") {
  auto path = std::string(SKEWGR_FIXTURES_DIR "/_malformed_tmp.txt");
  {
    std::ofstream out(path);
    out << "# comment\nvertex v\nedge e v\n";
  }
  try {
    (void)load_fixture(path);
    FAIL("expected a parse error");
  } catch (const ParseError& pe) {
    CHECK(pe.line == 3);
  }
  std::remove(path.c_str());
}

TEST_CASE("cmd_validate") {
  CHECK(cmd_validate(fixture("edge.txt"), {}).exit_code == 0);
  CHECK(cmd_validate(fixture("one_edge_labelled.txt"), {}).exit_code == 0);
  CHECK(cmd_validate(fixture("table_edge.txt"), {}).exit_code == 0);

  auto bad = cmd_validate(fixture("wlr_violation.txt"), {});
  CHECK(bad.exit_code == 1);
  CHECK(bad.text.find("{u}") != std::string::npos);

  CHECK(cmd_validate(fixture("missing.txt"), {}).exit_code == 2);
}

TEST_CASE("cmd_tight") {
  auto res = cmd_tight(fixture("diamond_semilattice.txt"), {});
  CHECK(res.exit_code == 0);
  CHECK(res.text.find("filters 3, ultra 2, tight 2") != std::string::npos);

  auto chain = cmd_tight(fixture("chain_semilattice.txt"), {});
  CHECK(chain.text.find("tight 1") != std::string::npos);

  CHECK(cmd_tight(fixture("edge.txt"), {}).exit_code == 2);
}

TEST_CASE("cmd_algebra on the edge graph") {
  Options opts;
  opts.trials = 120;
  auto res = cmd_algebra(fixture("edge.txt"), opts, true);
  INFO(res.text);
  CHECK(res.exit_code == 0);
  CHECK(res.text.find("1: 2") != std::string::npos);
  CHECK(res.text.find("e^-1: 1") != std::string::npos);
  CHECK(res.text.find("unital: yes") != std::string::npos);
  CHECK(res.text.find("orthogonal: yes") != std::string::npos);
  CHECK(res.text.find("semi-saturated: yes") != std::string::npos);
}

TEST_CASE("cmd_algebra on the loop graph shows the Laurent pattern") {
  Options opts;
  opts.trials = 100;
  auto res = cmd_algebra(fixture("loop.txt"), opts);
  INFO(res.text);
  CHECK(res.exit_code == 0);
  for (const char* needle : {"1: 1", "e.e.e: 1", "e^-1.e^-1.e^-1: 1"})
    CHECK(res.text.find(needle) != std::string::npos);
}

TEST_CASE("cmd_algebra on the antichain is non-unital") {
  Options opts;
  opts.trials = 60;
  auto res = cmd_algebra(fixture("antichain.txt"), opts);
  INFO(res.text);
  CHECK(res.exit_code == 0);
  CHECK(res.text.find("unital: no") != std::string::npos);
}

TEST_CASE("cmd_algebra deterministic output") {
  Options opts;
  opts.trials = 50;
  auto a = cmd_algebra(fixture("two_cells.txt"), opts);
  auto b = cmd_algebra(fixture("two_cells.txt"), opts);
  CHECK(a.text == b.text);
  CHECK(a.exit_code == 0);
}

TEST_CASE("cmd_ck") {
  for (const char* f : {"one_edge_labelled.txt", "two_cells.txt", "small_family.txt"}) {
    auto res = cmd_ck(fixture(f), {});
    INFO(res.text);
    CHECK(res.exit_code == 0);
  }
  auto graph = cmd_ck(fixture("edge.txt"), {});
  INFO(graph.text);
  CHECK(graph.exit_code == 0);
  CHECK(graph.text.find("cross-validation") != std::string::npos);
  CHECK(cmd_ck(fixture("diamond_semilattice.txt"), {}).exit_code == 2);
}

TEST_CASE("cmd_unitize on the finite chain reports equality") {
  auto res = cmd_unitize(fixture("chain_semilattice.txt"), {});
  INFO(res.text);
  CHECK(res.exit_code == 0);
  CHECK(res.text.find("L_R(S) unital: yes") != std::string::npos);
  CHECK(res.text.find("verdict: equality") != std::string::npos);
}

TEST_CASE("cmd_unitize on the antichain reports a proper essential ideal") {
  auto res = cmd_unitize(fixture("antichain.txt"), {});
  INFO(res.text);
  CHECK(res.exit_code == 0);
  CHECK(res.text.find("L_R(S) unital: no") != std::string::npos);
  CHECK(res.text.find("L_R(S*) unital: yes") != std::string::npos);
  CHECK(res.text.find("verdict: proper essential ideal") != std::string::npos);
}

TEST_CASE("cmd_action_check") {
  for (const char* f : {"edge.txt", "loop.txt", "branch.txt", "table_edge.txt",
                        "one_edge_labelled.txt", "two_cells.txt", "antichain.txt"}) {
    Options opts;
    opts.depth = 2;
    auto res = cmd_action_check(fixture(f), opts);
    INFO(f, "\n", res.text);
    CHECK(res.exit_code == 0);
  }
}
