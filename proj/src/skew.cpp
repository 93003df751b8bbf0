#include "skewgr/skew.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace skewgr {

LcFunction SkewElement::component(const GroupWord& g) const {
  auto it = coeffs_.find(g);
  if (it != coeffs_.end()) return it->second;
  return LcFunction(ring_, bundle_->space());
}

bool SkewElement::operator==(const SkewElement& o) const {
  return bundle_ == o.bundle_ && coeffs_ == o.coeffs_;
}

std::string SkewElement::to_string() const {
  if (coeffs_.empty()) return "0";
  const auto& G = *bundle_->group();
  std::ostringstream os;
  bool head = true;
  for (const auto& [g, f] : coeffs_) {
    for (const auto& t : f.terms()) {
      if (!head) os << " + ";
      head = false;
      os << ring_.to_string(t.value) << "·[" << t.support.to_string() << "]δ_" << G.to_string(g);
    }
  }
  return os.str();
}

SkewElement skew_zero(const Ring& ring, const std::shared_ptr<const PartialActionBundle>& bundle) {
  return SkewElement(ring, bundle);
}

SkewElement skew_from_parts(const Ring& ring, const std::shared_ptr<const PartialActionBundle>& bundle,
                            std::map<GroupWord, LcFunction> parts) {
  SkewElement x(ring, bundle);
  for (auto& [g, f] : parts) {
    if (f.is_zero()) continue;
    if (!bundle->ideal(g).contains(f.dom()))
      throw std::domain_error("coefficient not valued in its grading ideal");
    x.coeffs_.emplace(g, std::move(f));
  }
  return x;
}

SkewElement delta(const Ring& ring, const std::shared_ptr<const PartialActionBundle>& bundle,
                  const GbaElement& U, const GroupWord& g) {
  if (!bundle->ideal(g).contains(U)) throw std::domain_error("U delta_g requires U in I_g");
  if (U.is_bottom()) return skew_zero(ring, bundle);
  std::map<GroupWord, LcFunction> parts;
  parts.emplace(g, lc_indicator(ring, U));
  return skew_from_parts(ring, bundle, parts);
}

SkewElement skew_add(const SkewElement& x, const SkewElement& y) {
  if (x.bundle() != y.bundle()) throw std::domain_error("skew_add across bundles");
  std::map<GroupWord, LcFunction> parts = x.coefficients();
  for (const auto& [g, f] : y.coefficients()) {
    auto it = parts.find(g);
    if (it == parts.end())
      parts.emplace(g, f);
    else
      it->second = lc_add(it->second, f);
  }
  return skew_from_parts(x.ring(), x.bundle(), std::move(parts));
}

SkewElement skew_neg(const SkewElement& x) {
  std::map<GroupWord, LcFunction> parts;
  for (const auto& [g, f] : x.coefficients()) parts.emplace(g, lc_neg(f));
  return skew_from_parts(x.ring(), x.bundle(), std::move(parts));
}

SkewElement skew_sub(const SkewElement& x, const SkewElement& y) { return skew_add(x, skew_neg(y)); }

SkewElement skew_scale(const RingValue& r, const SkewElement& x) {
  std::map<GroupWord, LcFunction> parts;
  for (const auto& [g, f] : x.coefficients()) parts.emplace(g, lc_scale(r, f));
  return skew_from_parts(x.ring(), x.bundle(), std::move(parts));
}

SkewElement skew_mul(const SkewElement& x, const SkewElement& y) {
  if (x.bundle() != y.bundle()) throw std::domain_error("skew_mul across bundles");
  const auto& bundle = *x.bundle();
  const auto& G = *bundle.group();
  std::map<GroupWord, LcFunction> parts;
  for (const auto& [s, a] : x.coefficients())
    for (const auto& [t, b] : y.coefficients()) {
      auto s_inv = G.inv(s);
      LcFunction pulled = lc_map_support(a, [&](const GbaElement& u) { return bundle.apply(s_inv, u); });
      LcFunction inner = lc_mul(pulled, b);
      LcFunction pushed = lc_map_support(inner, [&](const GbaElement& u) { return bundle.apply(s, u); });
      if (pushed.is_zero()) continue;
      GroupWord st = G.mul(s, t);
      auto it = parts.find(st);
      if (it == parts.end())
        parts.emplace(st, pushed);
      else
        it->second = lc_add(it->second, pushed);
    }
  return skew_from_parts(x.ring(), x.bundle(), std::move(parts));
}

LcFunction graded_component(const SkewElement& x, const GroupWord& g) { return x.component(g); }

GbaElement local_unit_for(const SkewElement& x) {
  const auto& bundle = *x.bundle();
  const auto& G = *bundle.group();
  GbaElement u = bundle.space()->bottom();
  for (const auto& [g, f] : x.coefficients()) {
    GbaElement v = f.dom();
    u = u.join(v).join(bundle.apply(G.inv(g), v));
  }
  return u;
}

std::optional<GbaElement> find_unit(const PartialActionBundle& bundle) {
  if (!bundle.space()->has_top()) return std::nullopt;
  return bundle.space()->top();
}

SkewMorphism::SkewMorphism(ActionMorphism m, std::shared_ptr<const PartialActionBundle> source,
                           std::shared_ptr<const PartialActionBundle> target, int verify_bound)
    : morphism_(std::move(m)), source_(std::move(source)), target_(std::move(target)) {
  morphism_.source = source_.get();
  morphism_.target = target_.get();
  auto rep = verify_action_morphism(morphism_, verify_bound);
  if (!rep.all_pass())
    throw std::domain_error("refusing to induce a skew morphism from an unverified action morphism:\n" +
                            rep.to_string());
}

SkewElement SkewMorphism::apply(const SkewElement& x) const {
  std::map<GroupWord, LcFunction> parts;
  for (const auto& [g, f] : x.coefficients()) parts.emplace(g, lc_map_support(f, morphism_.f));
  return skew_from_parts(x.ring(), target_, std::move(parts));
}

GeneratorClosureReport generators_semi_saturated(const std::shared_ptr<const PartialActionBundle>& bundle,
                                                 const std::vector<GbaElement>& gba_generators,
                                                 int word_bound, int max_pieces) {
  const auto& G = *bundle->group();
  if (G.kind() != Group::Kind::free)
    throw std::domain_error("semi-saturated generators require a free-group action");
  if (!is_semi_saturated(*bundle, word_bound))
    throw std::domain_error("action is not semi-saturated within the bound");

  GeneratorClosureReport rep;
  rep.word_bound = word_bound;

  // Reachable single spanning elements (g, U delta_g), closed under products
  // and grading-e lattice ops; covers C_a are the ideal bounds.
  std::set<std::pair<GroupWord, GbaElement>> reach;
  auto add = [&](const GroupWord& g, const GbaElement& u) {
    if (u.is_bottom() || g.length() > word_bound) return false;
    return reach.insert({g, u}).second;
  };

  for (const auto& u : gba_generators) {
    add(G.identity(), u);
    rep.generators.push_back(u.to_string() + "δ_e");
  }
  for (int i = 0; i < G.generator_count(); ++i)
    for (bool invf : {false, true}) {
      GroupWord a = G.generator(i, invf);
      auto b = bundle->ideal(a).bound();
      if (b && !b->is_bottom()) {
        add(a, *b);
        rep.generators.push_back(b->to_string() + "δ_" + G.to_string(a));
      }
    }

  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::pair<GroupWord, GbaElement>> snap(reach.begin(), reach.end());
    for (const auto& [g, u] : snap)
      for (const auto& [h, v] : snap) {
        if (g.is_identity() && h.is_identity()) {
          grew |= add(g, u.meet(v));
          grew |= add(g, u.join(v));
          grew |= add(g, u.diff(v));
          continue;
        }
        // (u delta_g)(v delta_h) = phi_g(v ^ phi_{g^-1}(u)) delta_{gh}
        GbaElement w = bundle->apply(g, v.meet(bundle->apply(G.inv(g), u)));
        grew |= add(G.mul(g, h), w);
      }
  }

  rep.reached = static_cast<int>(reach.size());
  rep.closure_complete = true;
  int target = 0;
  for (const auto& g : bundle->words_up_to(word_bound)) {
    auto b = bundle->ideal(g).bound();
    if (!b && bundle->space()->has_top()) b = bundle->space()->top();
    if (!b) throw std::domain_error("closure check requires bounded ideals");
    for (const auto& u : elements_below(bundle->space()->refined(*b, word_bound), max_pieces)) {
      if (u.is_bottom()) continue;
      ++target;
      if (!reach.count({g, u})) rep.closure_complete = false;
    }
  }
  rep.target = target;
  return rep;
}

namespace {

struct SampleContext {
  const Ring& ring;
  const std::shared_ptr<const PartialActionBundle>& bundle;
  std::vector<GroupWord> words;  // nontrivial-ideal words within scope

  GbaElement sample_in_ideal(const GroupWord& g, Rng& rng) const {
    auto b = bundle->ideal(g).bound();
    if (!b && bundle->space()->has_top()) b = bundle->space()->top();
    if (!b) return bundle->space()->sample_element(rng);  // whole ideal of an unbounded space
    int level = static_cast<int>(rng.below(3)) + g.length();
    return bundle->space()->sample_below(bundle->space()->refined(*b, level), rng);
  }

  GroupWord sample_word(Rng& rng) const { return words[rng.below(words.size())]; }
};

}  // namespace

VerifyReport verify_skew_identities(const Ring& ring,
                                    const std::shared_ptr<const PartialActionBundle>& bundle, int trials,
                                    std::uint64_t seed, int word_bound) {
  VerifyReport rep;
  rep.scope_bound = word_bound;
  const auto& G = *bundle->group();
  Rng rng(seed);

  SampleContext ctx{ring, bundle, {}};
  for (const auto& w : bundle->words_up_to(word_bound)) {
    auto b = bundle->ideal(w).bound();
    if (w.is_identity() || (b && !b->is_bottom())) ctx.words.push_back(w);
  }

  std::vector<CheckResult> checks(9);
  const char* names[9] = {
      "(2) 1_U 1_V = 1_{U^V}",
      "(3) phi~_g(1_U) = 1_{phi_g(U)}",
      "(4) (U d_g)(V d_g') = phi_g(V ^ phi_{g^-1}(U)) d_{gg'}",
      "(5) (U d_e)(V d_g) = (U^V) d_g",
      "(6) (V d_g)(U d_e) = phi_g(U ^ phi_{g^-1}(V)) d_g",
      "(7) (U' d_e)(V d_g)(U d_e) = (U' ^ phi_g(U ^ phi_{g^-1}(V))) d_g",
      "(8) (U d_g)(V d_e)(phi_{g^-1}(U) d_{g^-1}) = phi_g(V ^ phi_{g^-1}(U)) d_e",
      "(9) (U d_g)(phi_{g^-1}(U) d_{g^-1}) = U d_e",
      "(10) inclusion-exclusion over a finite cover",
  };
  for (int i = 0; i < 9; ++i) checks[i] = {names[i], true, ""};

  auto fail = [&](int i, const std::string& w) {
    checks[i].pass = false;
    if (checks[i].witness.empty()) checks[i].witness = w;
  };

  auto d = [&](const GbaElement& u, const GroupWord& g) { return delta(ring, bundle, u, g); };
  auto e = G.identity();

  for (int trial = 0; trial < trials; ++trial) {
    GroupWord g = ctx.sample_word(rng);
    GroupWord gp = ctx.sample_word(rng);
    GbaElement U = ctx.sample_in_ideal(g, rng);
    GbaElement V = ctx.sample_in_ideal(gp, rng);
    GbaElement We = ctx.sample_in_ideal(e, rng);
    GbaElement Ue = ctx.sample_in_ideal(e, rng);
    auto ginv = G.inv(g);
    std::string wit = "g=" + G.to_string(g) + " g'=" + G.to_string(gp) + " U=" + U.to_string() +
                      " V=" + V.to_string();

    // (2)
    if (lc_mul(lc_indicator(ring, Ue), lc_indicator(ring, We)) != lc_indicator(ring, Ue.meet(We)))
      fail(0, wit);
    // (3)
    {
      GbaElement x = ctx.sample_in_ideal(ginv, rng);
      auto lhs = lc_map_support(lc_indicator(ring, x),
                                [&](const GbaElement& u) { return bundle->apply(g, u); });
      if (lhs != lc_indicator(ring, bundle->apply(g, x))) fail(1, wit);
    }
    // (4)
    if (skew_mul(d(U, g), d(V, gp)) !=
        d(bundle->apply(g, V.meet(bundle->apply(ginv, U))), G.mul(g, gp)))
      fail(2, wit);
    // (5)
    if (skew_mul(d(Ue, e), d(V, gp)) != d(Ue.meet(V), gp)) fail(3, wit);
    // (6)
    if (skew_mul(d(U, g), d(Ue, e)) != d(bundle->apply(g, Ue.meet(bundle->apply(ginv, U))), g)) fail(4, wit);
    // (7)
    if (skew_mul(skew_mul(d(We, e), d(U, g)), d(Ue, e)) !=
        d(We.meet(bundle->apply(g, Ue.meet(bundle->apply(ginv, U)))), g))
      fail(5, wit);
    // (8)
    if (skew_mul(skew_mul(d(U, g), d(Ue, e)), d(bundle->apply(ginv, U), ginv)) !=
        d(bundle->apply(g, Ue.meet(bundle->apply(ginv, U))), e))
      fail(6, wit);
    // (9)
    if (skew_mul(d(U, g), d(bundle->apply(ginv, U), ginv)) != d(U, e)) fail(7, wit);
    // (10): U = join of up to 3 sampled pieces of itself.
    {
      std::vector<GbaElement> parts;
      int n = 1 + static_cast<int>(rng.below(3));
      GbaElement join = bundle->space()->bottom();
      for (int i = 0; i < n; ++i) {
        GbaElement p = bundle->space()->sample_below(U, rng);
        parts.push_back(p);
        join = join.join(p);
      }
      SkewElement sum = skew_zero(ring, bundle);
      for (std::size_t mask = 1; mask < (1u << parts.size()); ++mask) {
        GbaElement m;
        bool first = true;
        int bits = 0;
        for (std::size_t i = 0; i < parts.size(); ++i)
          if (mask & (1u << i)) {
            ++bits;
            m = first ? parts[i] : m.meet(parts[i]);
            first = false;
          }
        SkewElement term = d(m, g);
        if (bits % 2 == 0) term = skew_neg(term);
        sum = skew_add(sum, term);
      }
      if (sum != d(join, g)) fail(8, "join of " + std::to_string(n) + " parts, " + wit);
    }
  }

  rep.checks = checks;
  return rep;
}

}  // namespace skewgr
