#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skewgr/gba.hpp"

using namespace skewgr;

namespace {

GbaElement rand_elem(const std::shared_ptr<const GbaSpace>& s, Rng& rng) {
  if (s->has_top()) return s->sample_below(s->top(), rng);
  // Unbounded space: sample below a fat finite element.
  auto fc = std::dynamic_pointer_cast<const FcGba>(s);
  return s->sample_below(fc->finite_set({0, 1, 2, 3, 4, 5, 6, 7}), rng);
}

void check_lattice_laws(const std::shared_ptr<const GbaSpace>& s, Rng& rng, int trials) {
  for (int i = 0; i < trials; ++i) {
    GbaElement a = rand_elem(s, rng), b = rand_elem(s, rng), c = rand_elem(s, rng);
    CHECK(a.meet(b) == b.meet(a));
    CHECK(a.join(b) == b.join(a));
    CHECK(a.meet(a) == a);
    CHECK(a.join(a) == a);
    CHECK(a.meet(b.meet(c)) == a.meet(b).meet(c));
    CHECK(a.join(b.join(c)) == a.join(b).join(c));
    CHECK(a.meet(b.join(c)) == a.meet(b).join(a.meet(c)));
    // absorption
    CHECK(a.meet(a.join(b)) == a);
    CHECK(a.join(a.meet(b)) == a);
    // relative complement laws
    CHECK(a.diff(b).join(a.meet(b)) == a);
    CHECK(a.diff(b).meet(a.meet(b)).is_bottom());
    // order
    CHECK(a.meet(b).leq(a));
  }
}

}  // namespace

TEST_CASE("power GBA lattice operations") {
  auto s = PowerGba::make({"1", "2", "3"});
  auto e12 = s->subset({0, 1});
  auto e23 = s->subset({1, 2});
  CHECK(lattice_ops(*s, LatticeOp::meet, e12, e23) == s->subset({1}));
  CHECK(lattice_ops(*s, LatticeOp::join, s->subset({0}), s->subset({1})) == e12);
  CHECK(lattice_ops(*s, LatticeOp::diff, e12, e23) == s->subset({0}));
  CHECK(e12.to_string() == "{1,2}");

  auto other = PowerGba::make({"1", "2", "3"});
  CHECK_THROWS_AS((void)e12.meet(other->subset({0})), std::domain_error);
}

TEST_CASE("lattice laws hold on all realizations") {
  Rng rng(7);
  check_lattice_laws(PowerGba::make({"a", "b", "c", "d"}), rng, 200);
  check_lattice_laws(FcGba::make(false), rng, 200);
  check_lattice_laws(FcGba::make(true), rng, 200);
}

TEST_CASE("finite/cofinite realization") {
  auto fin = FcGba::make(false);
  CHECK(!fin->has_top());
  CHECK_THROWS_AS((void)fin->top(), std::domain_error);
  CHECK_THROWS_AS((void)fin->cofinite_set({}), std::domain_error);

  auto fc = FcGba::make(true);
  CHECK(fc->has_top());
  auto a = fc->finite_set({1, 2});
  auto ca = fc->top().diff(a);
  CHECK(fc->is_cofinite(ca));
  CHECK(ca.join(a) == fc->top());
  CHECK(ca.meet(a).is_bottom());
  CHECK(ca.to_string() == "~{1,2}");
  CHECK(fc->finite_set({0, 5}).leq(fc->cofinite_set({1})));
}

TEST_CASE("is_ideal on explicit subsets") {
  auto s = PowerGba::make({"1", "2"});
  std::vector<GbaElement> universe = {s->subset({}), s->subset({0}), s->subset({1}), s->subset({0, 1})};

  CHECK(is_ideal({s->subset({}), s->subset({0})}, universe));
  CHECK(!is_ideal({s->subset({}), s->subset({0}), s->subset({1})}, universe));
  CHECK(is_ideal(universe, universe));
}

TEST_CASE("ideal_below membership") {
  auto s = PowerGba::make({"1", "2", "3"});
  auto h = ideal_below({s->subset({0, 1})});
  CHECK(h.contains(s->subset({0})));
  CHECK(!h.contains(s->subset({2})));
  auto two = ideal_below({s->subset({0}), s->subset({1})});
  CHECK(two.contains(s->subset({0, 1})));
}

TEST_CASE("is_cover") {
  auto s = PowerGba::make({"-2", "-1", "0", "1", "2"});
  auto f1 = s->subset({0, 4});  // {-2,2}
  auto f2 = s->subset({1, 3});  // {-1,1}
  auto f3 = s->subset({2});     // {0}
  CHECK(is_cover({f1, f2, f3}, s->subset({2, 3, 4})));
  CHECK(!is_cover({f1}, f3));
  CHECK(is_cover({s->bottom()}, s->bottom()));
}

TEST_CASE("generated subalgebra") {
  auto s = PowerGba::make({"-2", "-1", "0", "1", "2"});
  auto f1 = s->subset({0, 4});
  auto f2 = s->subset({1, 3});
  auto f3 = s->subset({2});
  auto closure = generated_subalgebra(s, {f1, f2, f3});
  CHECK(closure.size() == 8);  // unions of three disjoint blocks
  auto in = [&](const GbaElement& e) {
    return std::find(closure.begin(), closure.end(), e) != closure.end();
  };
  CHECK(!in(s->subset({3})));  // {1} is not reachable
  CHECK(in(s->bottom()));

  auto all = generated_subalgebra(s, s->atoms());
  CHECK(all.size() == 32);
  CHECK(generated_subalgebra(s, {}).size() == 1);

  CHECK_THROWS_AS((void)generated_subalgebra(FcGba::make(false), {}), std::domain_error);

  // ideal_below bounds always produce is_ideal-passing subsets on finite spaces
  auto h = ideal_below({f1.join(f2)});
  std::vector<GbaElement> members;
  for (const auto& e : all)
    if (h.contains(e)) members.push_back(e);
  CHECK(is_ideal(members, all));
}

TEST_CASE("is_gba_morphism") {
  auto small = PowerGba::make({"1"});
  auto big = PowerGba::make({"1", "2"});
  auto small_elems = std::vector<GbaElement>{small->bottom(), small->subset({0})};

  auto inclusion = [&](const GbaElement& x) {
    return small->bits(x).test(0) ? big->subset({0}) : big->bottom();
  };
  CHECK(is_gba_morphism(inclusion, small_elems, *big));

  auto const_top = [&](const GbaElement&) { return big->top(); };
  CHECK(!is_gba_morphism(const_top, small_elems, *big));

  // complement map on the two-atom power algebra: exhaustive pair check fails
  std::vector<GbaElement> big_elems = generated_subalgebra(big, big->atoms());
  auto complement = [&](const GbaElement& x) { return big->top().diff(x); };
  CHECK(!is_gba_morphism(complement, big_elems, *big));
}

TEST_CASE("elements_below enumerates the interval") {
  auto s = PowerGba::make({"1", "2", "3"});
  auto below = elements_below(s->subset({0, 2}));
  CHECK(below.size() == 4);
}
