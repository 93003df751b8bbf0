// Acceptance suite: one pass/fail line per criterion, exact arithmetic
// throughout, nonzero exit on any failure.

#include <chrono>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "skewgr/cli.hpp"

using namespace skewgr;

namespace {

struct Runner {
  int failures = 0;

  template <typename F>
  void criterion(int number, const std::string& label, F body) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
      ok = body();
    } catch (const std::exception& ex) {
      note = std::string(" [exception: ") + ex.what() + "]";
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    if (!ok) ++failures;
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << number << ": " << label << " (" << ms
              << " ms)" << note << "\n";
  }
};

std::string g_fixture_dir = "fixtures";

std::string fixture(const std::string& name) { return g_fixture_dir + "/" + name; }

const std::vector<std::string> kGraphFixtures = {"edge.txt", "loop.txt", "branch.txt"};
const std::vector<std::string> kLabelledFixtures = {"one_edge_labelled.txt", "two_cells.txt",
                                                    "small_family.txt"};

DirectedGraph graph_of(const std::string& name) {
  auto fx = cli::load_fixture(fixture(name));
  return std::get<DirectedGraph>(fx.object);
}

LabelledSpace labelled_of(const std::string& name) {
  auto fx = cli::load_fixture(fixture(name));
  return std::get<LabelledSpace>(fx.object);
}

// Brute-force tightness over all covers, independent of the C_max shortcut.
bool oracle_tight(const Semilattice& P, const Filter& F) {
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

// Z/2 swap action on four atoms, used as the finite bundle of criterion 3.
std::shared_ptr<const PartialActionBundle> swap_bundle() {
  auto G = Group::finite_table({"e", "g"}, {{0, 1}, {1, 0}});
  auto B = PowerGba::make({"p", "q", "r", "s"});
  auto swap01 = [B](const GbaElement& x) {
    Bitset b = B->bits(x);
    Bitset out = b;
    if (b.test(0) != b.test(1)) {
      if (b.test(0)) {
        out.reset(0);
        out.set(1);
      } else {
        out.reset(1);
        out.set(0);
      }
    }
    return B->element(out);
  };
  std::map<GroupWord, ActionEntry> entries;
  ActionEntry eg;
  eg.ideal = IdealHandle::below({B->subset({0, 1})});
  eg.iso.forward = swap01;
  eg.iso.backward = swap01;
  entries.emplace(G->element(1), eg);
  return std::make_shared<PartialActionBundle>(G, B, std::move(entries));
}

// 2x2 matrix algebra over the ring: the independent oracle of criterion 5.
struct Mat2 {
  RingValue a[2][2];

  static Mat2 zero(const Ring& R) {
    Mat2 m;
    for (auto& row : m.a)
      for (auto& v : row) v = R.zero();
    return m;
  }
  static Mat2 unit(const Ring& R, int i, int j) {
    Mat2 m = zero(R);
    m.a[i][j] = R.one();
    return m;
  }
  bool operator==(const Mat2& o) const {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        if (a[i][j] != o.a[i][j]) return false;
    return true;
  }
};

Mat2 mat_mul(const Ring& R, const Mat2& x, const Mat2& y) {
  Mat2 out = Mat2::zero(R);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) out.a[i][j] = R.add(out.a[i][j], R.mul(x.a[i][k], y.a[k][j]));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; i += 2)
    if (std::string(argv[i]) == "--fixtures") g_fixture_dir = argv[i + 1];

  Runner run;

  run.criterion(1, "the cover-preservation counterexample on the power set of {1,2}", [] {
    auto P2 = std::make_shared<Semilattice>(Semilattice::from_sets(
        {Bitset(2), Bitset::singleton(2, 0), Bitset::singleton(2, 1), Bitset::full(2)}));
    // element order: {} {1} {2} {1,2}
    int e1 = -1, e2 = -1, e12 = -1;
    for (int i = 0; i < P2->size(); ++i) {
      if (P2->name(i) == "{0}") e1 = i;
      if (P2->name(i) == "{1}") e2 = i;
      if (P2->name(i) == "{0,1}") e12 = i;
    }
    SubSemilattice sub(P2, {P2->zero(), e1, e12});
    if (preserves_finite_covers(sub)) return false;
    auto r = restrict_filter(sub, Filter{e2, e12});
    if (!r || *r != Filter{e12}) return false;
    // xi ^ P1 = {{1,2}} is not a tight filter of P1
    auto small = sub.as_semilattice();
    Filter in_small = {sub.to_sub_index(e12)};
    if (!is_filter(small, in_small)) return false;
    return !is_tight_filter(small, in_small);
  });

  run.criterion(2, "tight = ultra = all-covers brute force on 200 random semilattices", [] {
    Rng rng(2024);
    for (int i = 0; i < 200; ++i) {
      auto P = random_semilattice(rng, 8);
      for (const auto& f : enumerate_filters(P)) {
        bool tight = is_tight_filter(P, f);
        if (tight != oracle_tight(P, f)) return false;
        if (tight != is_ultrafilter(P, f)) return false;
      }
    }
    return true;
  });

  run.criterion(3, "computation rules (2)-(10) on 1000+ instances; (11) x delta_g != 0", [] {
    auto finite_rep = verify_skew_identities(Ring::integers(), swap_bundle(), 400, 101, 2);
    if (!finite_rep.all_pass()) return false;
    auto finite_rep_q = verify_skew_identities(Ring::rationals(), swap_bundle(), 200, 102, 2);
    if (!finite_rep_q.all_pass()) return false;

    auto S = std::make_shared<GraphSemigroup>(graph_of("edge.txt"));
    auto ctx = S->make_action(3);
    auto graph_rep = verify_skew_identities(Ring::integers(), ctx.bundle, 400, 103, 2);
    if (!graph_rep.all_pass()) return false;
    auto graph_rep_m = verify_skew_identities(Ring::mod(5), ctx.bundle, 200, 104, 2);
    if (!graph_rep_m.all_pass()) return false;

    // (11): x delta_g nonzero for every enumerated nonzero x in E_g
    LrAlgebra alg(Ring::integers(), ctx);
    const auto& G = *ctx.grading.group;
    for (const auto& g : ctx.bundle->words_up_to(2))
      for (const auto& x : ctx.eg_enumerate(g, 2))
        if (alg.xdelta(x, g).is_zero()) return false;
    (void)G;
    return true;
  });

  run.criterion(4, "local units are two-sided on 500+ elements; {U delta_e} meet/join closed", [] {
    auto S = std::make_shared<GraphSemigroup>(graph_of("branch.txt"));
    auto ctx = S->make_action(2);
    auto ring = Ring::integers();
    auto words = ctx.bundle->words_up_to(2);
    std::vector<GroupWord> graded;
    for (const auto& w : words) {
      auto b = ctx.bundle->ideal(w).bound();
      if (w.is_identity() || (b && !b->is_bottom())) graded.push_back(w);
    }
    Rng rng(404);
    const auto& B = *ctx.bundle->space();
    for (int i = 0; i < 500; ++i) {
      SkewElement x = skew_zero(ring, ctx.bundle);
      int terms = 1 + static_cast<int>(rng.below(3));
      for (int t = 0; t < terms; ++t) {
        const auto& g = graded[rng.below(graded.size())];
        auto bound = ctx.bundle->ideal(g).bound();
        if (!bound) bound = B.top();
        auto u = B.sample_below(B.refined(*bound, 2), rng);
        if (u.is_bottom()) continue;
        x = skew_add(x, skew_scale(ring.sample_nonzero(rng), delta(ring, ctx.bundle, u, g)));
      }
      auto u = local_unit_for(x);
      auto ud = delta(ring, ctx.bundle, u, GroupWord{});
      if (skew_mul(ud, x) != x || skew_mul(x, ud) != x) return false;
    }
    // idempotent family closure under meet and join
    for (int i = 0; i < 120; ++i) {
      auto U = B.sample_below(B.top(), rng);
      auto V = B.sample_below(B.top(), rng);
      auto ue = delta(ring, ctx.bundle, U, GroupWord{});
      auto ve = delta(ring, ctx.bundle, V, GroupWord{});
      if (skew_mul(ue, ue) != ue) return false;
      if (skew_mul(ue, ve) != delta(ring, ctx.bundle, U.meet(V), GroupWord{})) return false;
      if (skew_sub(skew_add(ue, ve), skew_mul(ue, ve)) !=
          delta(ring, ctx.bundle, U.join(V), GroupWord{}))
        return false;
    }
    return true;
  });

  run.criterion(5, "single edge: dims (e:2, e^:1, e^-1:1) and the 2x2 matrix-unit table", [] {
    auto ring = Ring::integers();
    auto S = std::make_shared<GraphSemigroup>(graph_of("edge.txt"));
    auto ctx = S->make_action(3);
    auto B = std::dynamic_pointer_cast<const BoundaryGba>(ctx.bundle->space());
    const auto& G = *ctx.grading.group;
    auto eh = G.generator(0);

    int dim_e = B->atom_count(B->expand(B->top(), 1));
    int dim_pos = B->atom_count(B->expand(ctx.bundle->ideal_bound(eh), 1));
    int dim_neg = B->atom_count(B->expand(ctx.bundle->ideal_bound(G.inv(eh)), 1));
    if (dim_e != 2 || dim_pos != 1 || dim_neg != 1 || dim_e + dim_pos + dim_neg != 4) return false;
    // no other graded word carries anything
    for (const auto& w : ctx.bundle->words_up_to(4)) {
      auto b = ctx.bundle->ideal(w).bound();
      if (w.is_identity() || !b) continue;
      if (!b->is_bottom() && w != eh && w != G.inv(eh)) return false;
    }

    auto lm = leavitt_map(S, ring);
    if (!lm.relations.all_pass()) return false;
    SkewElement gens[4] = {lm.vertex_units.at("v"), lm.vertex_units.at("w"), lm.edge_gens.at("e"),
                           lm.edge_stars.at("e")};
    Mat2 mats[4] = {Mat2::unit(ring, 0, 0), Mat2::unit(ring, 1, 1), Mat2::unit(ring, 0, 1),
                    Mat2::unit(ring, 1, 0)};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        auto prod = skew_mul(gens[i], gens[j]);
        auto expected = mat_mul(ring, mats[i], mats[j]);
        if (expected == Mat2::zero(ring)) {
          if (!prod.is_zero()) return false;
          continue;
        }
        int k = -1;
        for (int c = 0; c < 4; ++c)
          if (expected == mats[c]) k = c;
        if (k < 0 || prod != gens[k]) return false;
      }
    return true;
  });

  run.criterion(6, "loop: s_e* s_e = p_v = s_e s_e* and Laurent dims 1 in degrees -3..3", [] {
    auto S = std::make_shared<GraphSemigroup>(graph_of("loop.txt"));
    auto lm = leavitt_map(S, Ring::integers());
    if (!lm.relations.all_pass()) return false;
    auto p_v = lm.vertex_units.at("v");
    auto s_e = lm.edge_gens.at("e");
    auto s_star = lm.edge_stars.at("e");
    if (skew_mul(s_star, s_e) != p_v || skew_mul(s_e, s_star) != p_v) return false;

    auto ctx = S->make_action(3);
    auto B = std::dynamic_pointer_cast<const BoundaryGba>(ctx.bundle->space());
    for (int k = -3; k <= 3; ++k) {
      GroupWord w;
      for (int i = 0; i < (k > 0 ? k : -k); ++i) w.syms.push_back(k > 0 ? 1 : -1);
      auto bound = ctx.bundle->ideal(w).bound();
      if (!bound) bound = B->top();
      if (B->atom_count(B->expand(*bound, 3)) != 1) return false;
    }
    return true;
  });

  run.criterion(7, "labelled Cuntz-Krieger relations and generator products on all fixtures", [] {
    bool saw_singular = false;
    for (const auto& name : kLabelledFixtures) {
      auto sp = labelled_of(name);
      for (const auto& A : sp.family.sets())
        if (!A.empty() && !is_regular(sp, A)) saw_singular = true;
      auto S = std::make_shared<const LabelledSemigroup>(sp);
      auto ck = ck_map(S, Ring::integers());
      if (!ck.relations.all_pass()) return false;
      auto gp = generator_products(S, Ring::integers(), 3);
      if (!gp.all_pass()) return false;
    }
    return saw_singular;
  });

  run.criterion(8, "unitization: antichain proper essential; finite chain equality", [] {
    auto anti = cli::cmd_unitize(fixture("antichain.txt"), {});
    if (anti.exit_code != 0) return false;
    if (anti.text.find("L_R(S) unital: no") == std::string::npos) return false;
    if (anti.text.find("L_R(S*) unital: yes") == std::string::npos) return false;
    if (anti.text.find("verdict: proper essential ideal") == std::string::npos) return false;

    auto chain = cli::cmd_unitize(fixture("chain_semilattice.txt"), {});
    if (chain.exit_code != 0) return false;
    return chain.text.find("verdict: equality") != std::string::npos;
  });

  run.criterion(9, "S_G multiplication matches the labelled adapter on all graph fixtures", [] {
    for (const auto& name : kGraphFixtures) {
      auto rep = cross_validate_graph_adapter(graph_of(name), 3);
      if (!rep.all_pass()) return false;
    }
    return true;
  });

  run.criterion(10, "regrade to the integers is a graded bijection with multiplicativity", [] {
    for (const auto& name : kGraphFixtures) {
      auto S = std::make_shared<GraphSemigroup>(graph_of(name));
      auto ctx = S->make_action(3);
      GroupHom f;
      f.source = ctx.grading.group;
      f.target = Group::free_group({"z"});
      for (int i = 0; i < f.source->generator_count(); ++i)
        f.generator_images.push_back(f.target->generator(0));
      auto rep = regrade(Ring::integers(), ctx, f, 3, 200, 1010);
      if (!rep.all_pass() || rep.multiplicativity_pairs < 200) return false;
    }
    return true;
  });

  run.criterion(11, "orthogonality and semi-saturation on every graph and labelled fixture", [] {
    for (const auto& name : kGraphFixtures) {
      auto S = std::make_shared<GraphSemigroup>(graph_of(name));
      auto ctx = S->make_action(3);
      auto rep = semigroup_orthogonality_checks(*S, ctx.grading, 3);
      if (!rep.orthogonal || !rep.semi_saturated) return false;
      if (!is_orthogonal(*ctx.bundle) || !is_semi_saturated(*ctx.bundle, 3)) return false;
    }
    for (const auto& name : kLabelledFixtures) {
      auto S = std::make_shared<LabelledSemigroup>(labelled_of(name));
      auto ctx = S->make_action(3);
      auto rep = semigroup_orthogonality_checks(*S, ctx.grading, 2);
      if (!rep.orthogonal || !rep.semi_saturated) return false;
      if (!is_orthogonal(*ctx.bundle) || !is_semi_saturated(*ctx.bundle, 3)) return false;
    }
    return true;
  });

  std::cout << (run.failures == 0 ? "ALL CRITERIA PASS" : "FAILURES: " + std::to_string(run.failures))
            << "\n";
  return run.failures == 0 ? 0 : 1;
}
