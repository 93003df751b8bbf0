#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "skewgr/semilattice.hpp"

using namespace skewgr;

// ---- independent oracles (brute force over subsets) ------------------------

namespace {

std::vector<Filter> oracle_enumerate_filters(const Semilattice& P) {
  std::vector<Filter> out;
  const int n = P.size();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    Filter f;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) f.push_back(i);
    if (is_filter(P, f)) out.push_back(f);
  }
  std::sort(out.begin(), out.end(), [](const Filter& a, const Filter& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

// Tightness by quantifying over every cover of every member.
bool oracle_is_tight_all_covers(const Semilattice& P, const Filter& F) {
  auto in = [&](int x) { return std::binary_search(F.begin(), F.end(), x); };
  for (int x : F) {
    std::vector<int> down;
    for (int y : P.below(x))
      if (y != P.zero()) down.push_back(y);
    const int m = static_cast<int>(down.size());
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      std::vector<int> C;
      for (int i = 0; i < m; ++i)
        if (mask & (1u << i)) C.push_back(down[i]);
      if (!is_finite_cover(P, x, C)) continue;
      bool touches = false;
      for (int c : C)
        if (in(c)) touches = true;
      if (!touches) return false;
    }
  }
  return true;
}

// Cover preservation by quantifying over every cover in P1.
bool oracle_preserves_covers(const SubSemilattice& sub) {
  const auto& P = sub.big();
  for (int x : sub.members()) {
    if (x == P.zero()) continue;
    std::vector<int> down;
    for (int c : sub.below_in_sub(x))
      if (c != P.zero()) down.push_back(c);
    const int m = static_cast<int>(down.size());
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      std::vector<int> C;
      for (int i = 0; i < m; ++i)
        if (mask & (1u << i)) C.push_back(down[i]);
      if (!is_cover_in_sub(sub, x, C)) continue;
      if (!is_finite_cover(P, x, C)) return false;
    }
  }
  return true;
}

// Random intersection-closed set family: a genuine meet semilattice.
Semilattice random_semilattice(Rng& rng, int max_elements) {
  for (;;) {
    int universe = 2 + static_cast<int>(rng.below(4));
    int picks = 1 + static_cast<int>(rng.below(4));
    std::set<Bitset> family;
    family.insert(Bitset(universe));
    for (int i = 0; i < picks; ++i) {
      Bitset b(universe);
      for (int j = 0; j < universe; ++j)
        if (rng.flip()) b.set(j);
      family.insert(b);
    }
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<Bitset> snap(family.begin(), family.end());
      for (const auto& a : snap)
        for (const auto& b : snap) grew |= family.insert(a & b).second;
    }
    if (static_cast<int>(family.size()) <= max_elements)
      return Semilattice::from_sets({family.begin(), family.end()});
  }
}

// 0 < a,b < t with a ^ b = 0.
Semilattice diamond() {
  // elements: 0,a,b,t
  std::vector<std::vector<int>> meet = {
      {0, 0, 0, 0},
      {0, 1, 0, 1},
      {0, 0, 2, 2},
      {0, 1, 2, 3},
  };
  return Semilattice({"0", "a", "b", "t"}, meet, 0);
}

Semilattice chain3() {
  // 0 < a < b
  std::vector<std::vector<int>> meet = {
      {0, 0, 0},
      {0, 1, 1},
      {0, 1, 2},
  };
  return Semilattice({"0", "a", "b"}, meet, 0);
}

Semilattice point() {
  std::vector<std::vector<int>> meet = {{0, 0}, {0, 1}};
  return Semilattice({"0", "x"}, meet, 0);
}

Semilattice powerset2() {
  return Semilattice::from_sets(
      {Bitset(2), Bitset::singleton(2, 0), Bitset::singleton(2, 1), Bitset::full(2)});
}

}  // namespace

TEST_CASE("enumerate_filters matches the subset oracle") {
  for (const auto& P : {diamond(), chain3(), point(), powerset2()})
    CHECK(enumerate_filters(P) == oracle_enumerate_filters(P));

  Rng rng(11);
  for (int i = 0; i < 40; ++i) {
    auto P = random_semilattice(rng, 8);
    CHECK(enumerate_filters(P) == oracle_enumerate_filters(P));
  }
}

TEST_CASE("enumerate_filters examples") {
  auto fs = enumerate_filters(chain3());
  REQUIRE(fs.size() == 2);
  CHECK(fs[0] == Filter{2});
  CHECK(fs[1] == Filter{1, 2});

  auto fd = enumerate_filters(diamond());
  REQUIRE(fd.size() == 3);
  CHECK(fd[0] == Filter{3});
  CHECK(fd[1] == Filter{1, 3});
  CHECK(fd[2] == Filter{2, 3});

  CHECK(enumerate_filters(point()) == std::vector<Filter>{{1}});

  CHECK_THROWS_AS((void)enumerate_filters(Semilattice::from_sets({Bitset(30)}), 0), std::domain_error);
}

TEST_CASE("is_ultrafilter") {
  auto P = diamond();
  CHECK(is_ultrafilter(P, {1, 3}));
  CHECK(!is_ultrafilter(P, {3}));
  CHECK(is_ultrafilter(point(), {1}));
}

TEST_CASE("is_finite_cover") {
  auto P = diamond();
  CHECK(is_finite_cover(P, 3, {1, 2}));
  CHECK(!is_finite_cover(P, 3, {1}));
  CHECK(is_finite_cover(P, 3, {3}));  // any element covers itself
  CHECK(!is_finite_cover(P, 1, {2}));  // C must lie inside x^-
}

TEST_CASE("is_tight_filter examples and oracle agreement") {
  auto P = diamond();
  CHECK(!is_tight_filter(P, {3}));
  CHECK(is_tight_filter(P, {1, 3}));
  CHECK(is_tight_filter(point(), {1}));

  Rng rng(13);
  for (int i = 0; i < 60; ++i) {
    auto Q = random_semilattice(rng, 8);
    for (const auto& f : enumerate_filters(Q)) {
      CHECK(is_tight_filter(Q, f) == oracle_is_tight_all_covers(Q, f));
      CHECK(is_tight_filter(Q, f) == is_ultrafilter(Q, f));
    }
  }
}

TEST_CASE("tight_space") {
  TightSpace td(diamond());
  CHECK(td.size() == 2);

  TightSpace tc(chain3());
  REQUIRE(tc.size() == 1);
  CHECK(tc.filters()[0] == Filter{1, 2});

  CHECK(TightSpace(point()).size() == 1);
}

TEST_CASE("basis sets and the compact-open algebra") {
  TightSpace T(diamond());
  auto vt = basis_set(T, 3, {});
  CHECK(vt.resolved.size() == 2);
  auto va = basis_set(T, 1, {});
  REQUIRE(va.resolved.size() == 1);
  CHECK(va.resolved[0] == Filter{1, 3});
  CHECK(basis_set(T, 3, {1, 2}).resolved.empty());

  // V_x ^ V_y = V_{x^y}
  const auto& P = T.semilattice();
  for (int x = 0; x < P.size(); ++x)
    for (int y = 0; y < P.size(); ++y) CHECK(T.v(x).meet(T.v(y)) == T.v(P.meet(x, y)));

  // {V_x} generates the whole power algebra
  std::vector<GbaElement> family;
  for (int x = 0; x < P.size(); ++x) family.push_back(T.v(x));
  CHECK(generated_subalgebra(T.tc(), family).size() == 4);
}

TEST_CASE("restrict_filter") {
  auto P2 = std::make_shared<Semilattice>(powerset2());
  // element order: {} {1} {2} {1,2} -> indices 0,1,2,3
  SubSemilattice sub(P2, {0, 1, 3});
  auto r = restrict_filter(sub, {2, 3});
  REQUIRE(r.has_value());
  CHECK(*r == Filter{3});

  auto r2 = restrict_filter(sub, {1, 3});
  REQUIRE(r2.has_value());
  CHECK(*r2 == Filter{1, 3});

  SubSemilattice disjointish(P2, {0, 1});
  CHECK(!restrict_filter(disjointish, {2}).has_value());

  // {0, {1,2}, {1,3}} in the 3-element power set is not meet-closed
  auto P3 = std::make_shared<Semilattice>(Semilattice::from_sets({
      Bitset(3),
      Bitset::singleton(3, 0),
      [] { Bitset b(3); b.set(0); b.set(1); return b; }(),
      [] { Bitset b(3); b.set(0); b.set(2); return b; }(),
      Bitset::full(3),
  }));
  std::vector<int> not_closed;
  for (int i = 0; i < P3->size(); ++i)
    if (P3->name(i) == "{}" || P3->name(i) == "{0,1}" || P3->name(i) == "{0,2}") not_closed.push_back(i);
  CHECK_THROWS_AS(SubSemilattice(P3, not_closed), std::domain_error);
}

TEST_CASE("preserves_finite_covers and the counterexample") {
  auto P2 = std::make_shared<Semilattice>(powerset2());
  SubSemilattice bad(P2, {0, 1, 3});
  CHECK(!preserves_finite_covers(bad));
  CHECK(!oracle_preserves_covers(bad));

  SubSemilattice down(P2, {0, 1, 2});
  CHECK(preserves_finite_covers(down));
  SubSemilattice all(P2, {0, 1, 2, 3});
  CHECK(preserves_finite_covers(all));

  // pair reformulation = all-covers oracle on random instances
  Rng rng(17);
  int checked = 0;
  while (checked < 40) {
    auto P = random_semilattice(rng, 7);
    auto Pp = std::make_shared<Semilattice>(P);
    // random meet-closed subset containing zero
    std::set<int> members = {P.zero()};
    for (int i = 0; i < P.size(); ++i)
      if (rng.flip()) members.insert(i);
    bool closed = true;
    for (int a : members)
      for (int b : members)
        if (!members.count(P.meet(a, b))) closed = false;
    if (!closed) continue;
    SubSemilattice sub(Pp, {members.begin(), members.end()});
    CHECK(preserves_finite_covers(sub) == oracle_preserves_covers(sub));
    ++checked;
  }
}

TEST_CASE("sufficient conditions record") {
  auto P2 = std::make_shared<Semilattice>(powerset2());
  SubSemilattice down(P2, {0, 1, 2});
  auto c1 = check_sufficient_conditions(down);
  CHECK(c1.downward_closed);
  CHECK(c1.lemma_cover_condition);
  CHECK(c1.lemma_tight_condition);

  SubSemilattice bad(P2, {0, 1, 3});
  auto c2 = check_sufficient_conditions(bad);
  CHECK(!c2.downward_closed);
  CHECK(!c2.lemma_cover_condition);

  SubSemilattice all(P2, {0, 1, 2, 3});
  auto c3 = check_sufficient_conditions(all);
  CHECK(c3.downward_closed);
  CHECK(c3.lemma_cover_condition);
  CHECK(c3.lemma_tight_condition);
}

TEST_CASE("tc_inclusion") {
  // downward closed {0,a} inside 0 < a < t with a incomparable leg b:
  // use diamond P = {0,a,b,t}, P1 = {0,a}
  auto P = std::make_shared<Semilattice>(diamond());
  SubSemilattice sub(P, {0, 1});
  auto inc = tc_inclusion(sub);
  CHECK(inc.injective);
  CHECK(inc.is_tight);
  // image of V^{P1}_a is V^{P2}_a
  CHECK(inc.map(inc.small_space->v(inc.small_space->semilattice().size() - 1)) == inc.big_space->v(1));

  // precondition violated -> domain error
  auto Pp = std::make_shared<Semilattice>(powerset2());
  SubSemilattice bad(Pp, {0, 1, 3});
  CHECK_THROWS_AS((void)tc_inclusion(bad), std::domain_error);
}

TEST_CASE("open-set identification for tight inclusions") {
  auto P = std::make_shared<Semilattice>(diamond());
  SubSemilattice sub(P, {0, 1});
  auto inc = tc_inclusion(sub);
  REQUIRE(inc.is_tight);

  GbaElement Y = inc.big_space->tc()->bottom();
  for (int x : sub.members())
    if (x != P->zero()) Y = Y.join(inc.big_space->v(x));

  auto family = inc.image_family();
  std::vector<GbaElement> expected;
  for (const auto& u : elements_below(Y)) expected.push_back(u);
  std::sort(expected.begin(), expected.end());
  CHECK(family == expected);
}

TEST_CASE("intersection of downward-closed images") {
  auto P = std::make_shared<Semilattice>(powerset2());
  auto big = std::make_shared<TightSpace>(*P);
  SubSemilattice p1(P, {0, 1});
  SubSemilattice p2(P, {0, 2});
  SubSemilattice p12(P, {0});

  auto f1 = tc_inclusion(p1, big).image_family();
  auto f2 = tc_inclusion(p2, big).image_family();
  auto f12 = tc_inclusion(p12, big).image_family();

  std::vector<GbaElement> inter;
  std::set_intersection(f1.begin(), f1.end(), f2.begin(), f2.end(), std::back_inserter(inter));
  CHECK(inter == f12);
}

TEST_CASE("nested cover preservation") {
  Rng rng(23);
  int tested = 0;
  while (tested < 25) {
    auto P2big = random_semilattice(rng, 7);
    auto P2 = std::make_shared<Semilattice>(P2big);
    auto pick_closed = [&](const std::vector<int>& inside) -> std::optional<std::vector<int>> {
      std::set<int> members = {P2big.zero()};
      for (int i : inside)
        if (rng.flip()) members.insert(i);
      for (int a : members)
        for (int b : members)
          if (!members.count(P2big.meet(a, b))) return std::nullopt;
      return std::vector<int>(members.begin(), members.end());
    };
    std::vector<int> everything;
    for (int i = 0; i < P2big.size(); ++i) everything.push_back(i);
    auto m2 = pick_closed(everything);
    if (!m2) continue;
    auto m1 = pick_closed(*m2);
    if (!m1) continue;
    SubSemilattice sub1(P2, *m1), sub2(P2, *m2);

    // hypotheses: P'_1 <= P2 preserves covers (and P'_1 <= P'_2 <= P2)
    if (!preserves_finite_covers(sub1)) continue;
    ++tested;

    // conclusion: P'_1 <= P'_2 preserves covers
    auto inner = SubSemilattice(std::make_shared<Semilattice>(sub2.as_semilattice()), [&] {
      std::vector<int> idx;
      for (int x : *m1) idx.push_back(sub2.to_sub_index(x));
      return idx;
    }());
    CHECK(preserves_finite_covers(inner));
  }
}

TEST_CASE("restricted tight filters stay tight when covers are preserved") {
  Rng rng(29);
  int tested = 0;
  while (tested < 30) {
    auto P = random_semilattice(rng, 7);
    auto Pp = std::make_shared<Semilattice>(P);
    std::set<int> members = {P.zero()};
    for (int i = 0; i < P.size(); ++i)
      if (rng.flip()) members.insert(i);
    bool closed = true;
    for (int a : members)
      for (int b : members)
        if (!members.count(P.meet(a, b))) closed = false;
    if (!closed) continue;
    SubSemilattice sub(Pp, {members.begin(), members.end()});
    if (!preserves_finite_covers(sub)) continue;
    ++tested;
    auto small = sub.as_semilattice();
    for (const auto& f : enumerate_filters(P)) {
      if (!is_tight_filter(P, f)) continue;
      auto r = restrict_filter(sub, f);
      if (!r) continue;
      Filter in_small;
      for (int x : *r) in_small.push_back(sub.to_sub_index(x));
      std::sort(in_small.begin(), in_small.end());
      CHECK(is_filter(small, in_small));
      CHECK(is_tight_filter(small, in_small));
    }
  }
}
