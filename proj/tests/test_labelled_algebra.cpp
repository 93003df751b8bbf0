#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "semigroup_fixtures.hpp"
#include "skewgr/labelled.hpp"

using namespace skewgr;
using namespace skewgr::testfix;

namespace {

// u --a--> w, power-set family.
LabelledSpace one_edge_space() {
  LabelledGraph g({"u", "w"}, {"a"}, {{"e", 0, 1, 0}});
  auto fam = LabelledFamily::powerset(g);
  return {g, fam};
}

// v1 --a--> v1 and v1 --a--> v2 (two edges, one label), power-set family.
LabelledSpace two_cells_space() {
  LabelledGraph g({"v1", "v2"}, {"a"}, {{"e1", 0, 0, 0}, {"e2", 0, 1, 0}});
  auto fam = LabelledFamily::powerset(g);
  return {g, fam};
}

// x --a--> y, y --a--> y with the closure family {0, {y}}.
LabelledSpace small_family_space() {
  LabelledGraph g({"x", "y"}, {"a"}, {{"e1", 0, 1, 0}, {"e2", 1, 1, 0}});
  auto fam = LabelledFamily::closure(g, {});
  return {g, fam};
}

// Two same-labelled edges from distinct sources into one target: with the
// power-set family weak left-resolving fails.
LabelledSpace wlr_violation_space() {
  LabelledGraph g({"u", "v", "x"}, {"a"}, {{"e1", 0, 2, 0}, {"e2", 1, 2, 0}});
  auto fam = LabelledFamily::powerset(g);
  return {g, fam};
}

Bitset vset(const LabelledGraph& g, std::vector<std::string> names) {
  Bitset b(g.vertex_count());
  for (const auto& n : names) b.set(g.vertex_index(n));
  return b;
}

// Truncated tight-filter oracle: the finite semilattice of idempotents with
// |alpha| <= bound, with the section-3 machinery as ground truth.
struct TruncatedOracle {
  std::shared_ptr<const LabelledSemigroup> S;
  std::vector<SgElem> elems;  // nonzero idempotents, index+1 in the semilattice
  TightSpace tight;

  TruncatedOracle(std::shared_ptr<const LabelledSemigroup> sg, int bound)
      : S(sg), elems(collect(*sg, bound)), tight(semilattice()) {}

  static std::vector<SgElem> collect(const LabelledSemigroup& sg, int bound) {
    std::vector<SgElem> out;
    for (const auto& x : sg.elements(bound))
      if (sg.is_idempotent(x)) out.push_back(x);
    return out;
  }

  Semilattice semilattice() const {
    const int n = static_cast<int>(elems.size()) + 1;
    std::vector<std::string> names = {"0"};
    for (const auto& x : elems) names.push_back(S->to_string(x));
    std::vector<std::vector<int>> meet(n, std::vector<int>(n, 0));
    auto index = [&](const SgElem& x) {
      if (is_zero(x)) return 0;
      auto it = std::lower_bound(elems.begin(), elems.end(), x);
      REQUIRE(it != elems.end());
      REQUIRE(*it == x);
      return static_cast<int>(it - elems.begin()) + 1;
    };
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j) meet[i][j] = index(S->multiply(elems[i - 1], elems[j - 1]));
    return Semilattice(std::move(names), std::move(meet), 0);
  }

  // Tight filters containing the given idempotent.
  Bitset filters_containing(const SgElem& x) const {
    auto it = std::lower_bound(elems.begin(), elems.end(), x);
    REQUIRE(it != elems.end());
    int idx = static_cast<int>(it - elems.begin()) + 1;
    return tight.basis_bits(idx);
  }
};

}  // namespace

TEST_CASE("relative range and delta") {
  auto sp = one_edge_space();
  const auto& g = sp.graph;
  CHECK(g.relative_range(vset(g, {"u"}), 0) == vset(g, {"w"}));
  CHECK(g.relative_range(vset(g, {"w"}), 0).empty());
  CHECK(g.delta_set(vset(g, {"u", "w"})) == std::vector<int>{0});
  CHECK(g.range_of({0}) == vset(g, {"w"}));
  CHECK(g.relative_range(vset(g, {"u"}), std::vector<int>{}) == vset(g, {"u"}));
}

TEST_CASE("validate labelled spaces") {
  CHECK(validate_labelled_space(one_edge_space()).all_pass());
  CHECK(validate_labelled_space(two_cells_space()).all_pass());
  CHECK(validate_labelled_space(small_family_space()).all_pass());

  auto bad = wlr_violation_space();
  auto rep = validate_labelled_space(bad);
  CHECK(!rep.all_pass());
  bool wlr_failed = false;
  for (const auto& c : rep.checks)
    if (c.name.find("left-resolving") != std::string::npos && !c.pass) {
      wlr_failed = true;
      CHECK(c.witness.find("{u}") != std::string::npos);
      CHECK(c.witness.find("{v}") != std::string::npos);
    }
  CHECK(wlr_failed);

  // a family missing r(a) fails the closure check
  LabelledGraph g({"u", "w"}, {"a"}, {{"e", 0, 1, 0}});
  LabelledFamily empty_family = LabelledFamily::closure(g, {});
  LabelledSpace handmade{g, empty_family};
  CHECK(validate_labelled_space(handmade).all_pass());  // closure includes r(a)
}

TEST_CASE("is_regular") {
  auto sp = one_edge_space();
  CHECK(is_regular(sp, vset(sp.graph, {"u"})));
  CHECK(!is_regular(sp, vset(sp.graph, {"w"})));
  CHECK(!is_regular(sp, Bitset(2)));
  CHECK(!is_regular(sp, vset(sp.graph, {"u", "w"})));  // sink subset {w}
}

TEST_CASE("sls_multiply, star, order") {
  auto S = std::make_shared<LabelledSemigroup>(one_edge_space());
  const auto& g = S->space().graph;
  auto u = vset(g, {"u"});
  auto w = vset(g, {"w"});

  auto x = S->triple({}, u, {});
  auto sa = S->triple({0}, w, {0});
  CHECK(S->multiply(x, sa) == sa);
  CHECK(S->multiply(sa, sa) == sa);
  CHECK(is_zero(S->multiply(S->triple({0}, w, {}), sa)));

  CHECK(S->star(S->triple({0}, w, {})) == S->triple({}, w, {0}));
  CHECK(S->order_leq(sa, x));
  CHECK(!S->order_leq(x, sa));
  CHECK(S->order_leq(x, x));

  CHECK(verify_inverse_semigroup(*S, 2).all_pass());
  CHECK(verify_inverse_semigroup(*std::make_shared<LabelledSemigroup>(two_cells_space()), 2)
            .all_pass());
}

TEST_CASE("idempotents are exactly the diagonal triples") {
  auto S = std::make_shared<LabelledSemigroup>(two_cells_space());
  for (const auto& x : S->elements(2)) {
    const auto& t = std::get<LabelledTriple>(x);
    CHECK(S->is_idempotent(x) == (t.alpha == t.beta));
  }
}

TEST_CASE("regular sets form an ideal of the family") {
  for (auto make : {one_edge_space, two_cells_space, small_family_space}) {
    auto sp = make();
    for (const auto& A : sp.family.sets())
      for (const auto& B : sp.family.sets()) {
        if (is_regular(sp, A) && is_regular(sp, B)) CHECK(is_regular(sp, A | B));
        if (is_regular(sp, A) && !(A & B).empty()) CHECK(is_regular(sp, A & B));
      }
  }
}

TEST_CASE("grading and closed forms") {
  auto S = std::make_shared<LabelledSemigroup>(one_edge_space());
  auto phi = S->standard_grading();
  auto G = phi.group;
  const auto& g = S->space().graph;
  auto w = vset(g, {"w"});

  CHECK(phi.map(S->triple({0}, w, {})) == G->generator(0));
  CHECK(phi.map(S->triple({0}, w, {0})).is_identity());
  CHECK(verify_pure_grading(*S, phi, 2).all_pass());

  auto a_hat = G->generator(0);
  CHECK(S->eg_contains(a_hat, S->triple({0}, w, {0})));
  CHECK(!S->eg_contains(a_hat, S->triple({}, vset(g, {"u"}), {})));
  CHECK(S->phi_closed_form(G->inv(a_hat), S->triple({0}, w, {0})) == S->triple({}, w, {}));

  // closed forms match the generic brute force
  std::set<GroupWord> words;
  for (const auto& s : S->elements(2)) words.insert(phi.map(s));
  for (const auto& gw : words) {
    auto brute = compute_Eg(*S, phi, gw, 2);
    auto closed = S->eg_enumerate(gw, 2);
    closed.push_back(S->zero());
    std::sort(closed.begin(), closed.end());
    CHECK(brute == closed);
    for (const auto& x : closed) {
      if (is_zero(x)) continue;
      CHECK(S->phi_closed_form(G->inv(gw), x) == phi_g(*S, phi, G->inv(gw), x, 2));
    }
  }
}

TEST_CASE("labelled GBA canonical forms") {
  auto sp = one_edge_space();
  auto B = LabelledGba::make(sp);
  const auto& g = sp.graph;
  auto u = vset(g, {"u"});
  auto w = vset(g, {"w"});

  // V_{(w,{u},w)} = V_{(a,{w},a)}: {u} regular, single subdivision, no leftover
  CHECK(B->cylinder({}, u) == B->cylinder({0}, w));
  CHECK(B->leftover_count(B->cylinder({}, u)) == 0);

  // V_{(w,{w},w)} is a single leftover atom
  auto vw = B->cylinder({}, w);
  CHECK(B->atom_count(vw) == 1);
  CHECK(B->leftover_count(vw) == 1);
  CHECK(!vw.is_bottom());

  // distinct leftovers at different label paths are disjoint
  CHECK(B->cylinder({}, w).meet(B->cylinder({0}, w)).is_bottom());

  // W(alpha, A) ^ W(alpha, B) = W(alpha, A ^ B) via leftover pieces
  auto leftover_of = [&](const Bitset& A) {
    auto full = B->cylinder({}, A);
    GbaElement sub = B->bottom();
    for (int a : g.delta_set(A)) sub = sub.join(B->cylinder({0}, g.relative_range(A, a)));
    return full.diff(sub);
  };
  auto uw = vset(g, {"u", "w"});
  CHECK(leftover_of(uw).meet(leftover_of(w)) == leftover_of(uw & w));
  CHECK(leftover_of(u).is_bottom());  // regular set: empty leftover

  CHECK(B->top() == B->cylinder({}, uw));
}

TEST_CASE("labelled GBA lattice laws on random samples") {
  for (auto sp : {one_edge_space(), two_cells_space(), small_family_space()}) {
    auto B = LabelledGba::make(sp);
    Rng rng(77);
    for (int i = 0; i < 120; ++i) {
      auto a = B->sample_below(B->top(), rng);
      auto b = B->sample_below(B->top(), rng);
      auto c = B->sample_below(B->top(), rng);
      CHECK(a.meet(b.join(c)) == a.meet(b).join(a.meet(c)));
      CHECK(a.diff(b).join(a.meet(b)) == a);
      CHECK(a.diff(b).meet(b).is_bottom());
    }
  }
}

TEST_CASE("family join/meet compatibility of cylinders") {
  auto sp = two_cells_space();
  auto B = LabelledGba::make(sp);
  const auto& g = sp.graph;
  for (const auto& A : sp.family.sets())
    for (const auto& C : sp.family.sets()) {
      CHECK(B->cylinder({}, A | C) == B->cylinder({}, A).join(B->cylinder({}, C)));
      CHECK(B->cylinder({}, A & C) == B->cylinder({}, A).meet(B->cylinder({}, C)));
    }
  (void)g;
}

TEST_CASE("truncated filter oracle confirms the canonical form") {
  for (auto make : {one_edge_space, two_cells_space, small_family_space}) {
    auto sp = make();
    auto S = std::make_shared<LabelledSemigroup>(sp);
    auto B = LabelledGba::make(sp);
    const int depth = 1;
    TruncatedOracle oracle(S, depth + 1);

    // W(alpha, A) nonempty iff A singular, against the truncated enumeration:
    // filters containing (alpha,A,alpha) but none of (alpha.a, r(A,a), ...).
    for (const auto& A : sp.family.sets()) {
      if (A.empty()) continue;
      SgElem idem = LabelledTriple{{}, {}, A};
      Bitset in_va = oracle.filters_containing(idem);
      Bitset deeper(oracle.tight.size());
      for (int a : sp.graph.delta_set(A)) {
        SgElem child = LabelledTriple{{a}, {a}, sp.graph.relative_range(A, a)};
        deeper = deeper | oracle.filters_containing(child);
      }
      Bitset leftover_points = in_va.minus(deeper);
      CHECK(leftover_points.empty() == is_regular(sp, A));
      CHECK(leftover_points.count() == B->leftover_count(B->cylinder({}, A)));

      // at the truncation level the oracle points match the atoms one-to-one
      CHECK(static_cast<int>(in_va.count()) ==
            B->atom_count(B->expand(B->cylinder({}, A), depth + 1)));
    }
  }
}

TEST_CASE("labelled actions verify and are orthogonal/semi-saturated") {
  for (auto make : {one_edge_space, two_cells_space, small_family_space}) {
    auto S = std::make_shared<LabelledSemigroup>(make());
    auto ctx = S->make_action(3);
    auto rep = verify_partial_action(*ctx.bundle, 2);
    INFO(rep.to_string());
    CHECK(rep.all_pass());
    CHECK(is_orthogonal(*ctx.bundle));
    CHECK(is_semi_saturated(*ctx.bundle, 3));
    auto sg_rep = semigroup_orthogonality_checks(*S, ctx.grading, 2);
    CHECK(sg_rep.orthogonal);
    CHECK(sg_rep.semi_saturated);
  }
}

TEST_CASE("Cuntz-Krieger relations") {
  for (auto make : {one_edge_space, two_cells_space, small_family_space}) {
    auto S = std::make_shared<const LabelledSemigroup>(make());
    auto ck = ck_map(std::const_pointer_cast<const LabelledSemigroup>(S), Ring::integers());
    INFO(ck.relations.to_string());
    CHECK(ck.relations.all_pass());
  }

  // the one-edge example in detail: (5) on {u} is p_u = s_a p_{w} s_a*
  auto S = std::make_shared<const LabelledSemigroup>(one_edge_space());
  auto ck = ck_map(S, Ring::integers());
  const auto& g = S->space().graph;
  auto pu = ck.projections.at(g.set_string(vset(g, {"u"})));
  auto pw = ck.projections.at(g.set_string(vset(g, {"w"})));
  auto sa = ck.letter_gens.at("a");
  auto sastar = ck.letter_stars.at("a");
  CHECK(skew_mul(skew_mul(sa, pw), sastar) == pu);
  CHECK(skew_mul(sastar, sa) == pw);
}

TEST_CASE("generator product formulas to depth 3") {
  for (auto make : {one_edge_space, two_cells_space, small_family_space}) {
    auto S = std::make_shared<const LabelledSemigroup>(make());
    auto rep = generator_products(S, Ring::integers(), 3);
    INFO(rep.to_string());
    CHECK(rep.all_pass());
  }
}

TEST_CASE("graph adapter cross-validation") {
  for (const auto& graph : {edge_graph(), loop_graph(), branch_graph()}) {
    auto rep = cross_validate_graph_adapter(graph, 3);
    INFO(rep.to_string());
    CHECK(rep.all_pass());
  }
}

TEST_CASE("labelled skew identity suite") {
  auto S = std::make_shared<LabelledSemigroup>(two_cells_space());
  auto ctx = S->make_action(2);
  auto rep = verify_skew_identities(Ring::integers(), ctx.bundle, 120, 13, 2);
  INFO(rep.to_string());
  CHECK(rep.all_pass());
}
