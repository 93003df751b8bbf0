#include "skewgr/partial_action.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace skewgr {

PartialActionBundle::PartialActionBundle(std::shared_ptr<const Group> group,
                                         std::shared_ptr<const GbaSpace> space,
                                         std::map<GroupWord, ActionEntry> entries)
    : group_(std::move(group)), space_(std::move(space)), entries_(std::move(entries)) {}

PartialActionBundle::PartialActionBundle(std::shared_ptr<const Group> group,
                                         std::shared_ptr<const GbaSpace> space, Provider provider,
                                         WordEnumerator words)
    : group_(std::move(group)), space_(std::move(space)), provider_(std::move(provider)),
      words_(std::move(words)) {}

ActionEntry PartialActionBundle::entry(const GroupWord& t) const {
  if (t.is_identity()) {
    ActionEntry e;
    e.ideal = IdealHandle::whole(space_);
    e.iso.forward = [](const GbaElement& x) { return x; };
    e.iso.backward = e.iso.forward;
    return e;
  }
  if (provider_) return provider_(t);
  auto it = entries_.find(t);
  if (it != entries_.end()) return it->second;
  ActionEntry e;
  e.ideal = IdealHandle::trivial(space_);
  auto bot = space_->bottom();
  e.iso.forward = [bot](const GbaElement&) { return bot; };
  e.iso.backward = e.iso.forward;
  return e;
}

IdealHandle PartialActionBundle::ideal(const GroupWord& t) const { return entry(t).ideal; }

GbaElement PartialActionBundle::ideal_bound(const GroupWord& t) const {
  auto h = ideal(t);
  if (h.bound()) return *h.bound();
  throw std::domain_error("whole-space ideal of an unbounded space has no join bound");
}

GbaElement PartialActionBundle::apply(const GroupWord& t, const GbaElement& x) const {
  auto e = entry(t);
  if (!entry(group_->inv(t)).ideal.contains(x))
    throw std::domain_error("element outside the domain ideal of phi_t");
  return e.iso.forward(x);
}

std::vector<GroupWord> PartialActionBundle::words_up_to(int bound) const {
  std::set<GroupWord> out;
  out.insert(group_->identity());
  if (words_) {
    for (const auto& w : words_(bound)) out.insert(w);
  } else if (group_->kind() == Group::Kind::finite) {
    for (const auto& w : group_->words_up_to(0)) out.insert(w);
  } else {
    for (const auto& [w, e] : entries_) {
      (void)e;
      if (w.length() <= bound) out.insert(w);
    }
  }
  return {out.begin(), out.end()};
}

bool VerifyReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string VerifyReport::to_string() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.pass ? "pass" : "FAIL") << "  " << c.name;
    if (!c.pass && !c.witness.empty()) os << "  [" << c.witness << "]";
    os << "\n";
  }
  return os.str();
}

namespace {

// Evaluates a checked equation; domain violations inside phi applications are
// verification failures, not errors.
template <typename F>
void check_eq(CheckResult& c, const std::string& wit, F&& equation) {
  bool ok = false;
  std::string note;
  try {
    ok = equation();
  } catch (const std::domain_error& ex) {
    note = std::string(" (") + ex.what() + ")";
  }
  if (!ok) {
    c.pass = false;
    if (c.witness.empty()) c.witness = wit + note;
  }
}

// Sample elements of an ideal: the bound, its pieces, and bottom.
std::vector<GbaElement> ideal_samples(const GbaSpace& space, const IdealHandle& ideal) {
  std::vector<GbaElement> out;
  out.push_back(space.bottom());
  if (!ideal.bound()) return out;
  GbaElement b = *ideal.bound();
  out.push_back(b);
  for (const auto& p : space.pieces(b)) out.push_back(p);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

VerifyReport verify_partial_action(const PartialActionBundle& bundle, int word_bound) {
  VerifyReport rep;
  rep.scope_bound = word_bound;
  const auto& G = *bundle.group();
  const auto& B = *bundle.space();
  auto words = bundle.words_up_to(word_bound);

  {
    CheckResult c{"axiom 1: I_e = B and phi_e = id", true, ""};
    auto ie = bundle.ideal(G.identity());
    if (!ie.is_whole() && !(B.has_top() && ie.bound() && *ie.bound() == B.top())) {
      c.pass = false;
      c.witness = "I_e is a proper ideal";
    } else {
      for (const auto& x : ideal_samples(B, ie))
        if (bundle.apply(G.identity(), x) != x) {
          c.pass = false;
          c.witness = "phi_e moves " + x.to_string();
          break;
        }
    }
    rep.checks.push_back(c);
  }

  {
    CheckResult c{"phi_t a GBA isomorphism with inverse phi_{t^-1}", true, ""};
    for (const auto& t : words) {
      if (t.is_identity()) continue;
      auto dom = bundle.ideal(G.inv(t));
      if (!dom.bound()) continue;
      auto samples = ideal_samples(B, dom);
      const std::string label = "phi_" + G.to_string(t);
      for (const auto& x : samples) {
        check_eq(c, label + " leaves I_t at " + x.to_string(),
                 [&] { return bundle.ideal(t).contains(bundle.apply(t, x)); });
        check_eq(c, label + ": phi_{t^-1} . phi_t != id at " + x.to_string(),
                 [&] { return bundle.apply(G.inv(t), bundle.apply(t, x)) == x; });
      }
      for (const auto& x : samples)
        for (const auto& y : samples)
          check_eq(c, label + " not a lattice morphism", [&] {
            return bundle.apply(t, x.meet(y)) == bundle.apply(t, x).meet(bundle.apply(t, y)) &&
                   bundle.apply(t, x.join(y)) == bundle.apply(t, x).join(bundle.apply(t, y)) &&
                   bundle.apply(t, x.diff(y)) == bundle.apply(t, x).diff(bundle.apply(t, y));
          });
      // Image of the domain bound must be the range bound.
      if (bundle.ideal(t).bound())
        check_eq(c, label + " not onto I_t",
                 [&] { return bundle.apply(t, *dom.bound()) == *bundle.ideal(t).bound(); });
    }
    rep.checks.push_back(c);
  }

  {
    CheckResult c{"axiom 2: phi_s(I_{s^-1} ^ I_t) = I_s ^ I_{st}", true, ""};
    for (const auto& s : words)
      for (const auto& t : words) {
        auto lhs_ideal = bundle.ideal(G.inv(s)).intersect(bundle.ideal(t));
        auto rhs_ideal = bundle.ideal(s).intersect(bundle.ideal(G.mul(s, t)));
        const std::string wit = "s=" + G.to_string(s) + " t=" + G.to_string(t);
        if (!lhs_ideal.bound() || !rhs_ideal.bound()) {
          // Both whole only when the space is unbounded; then s = t = e.
          check_eq(c, "whole/proper mismatch at " + wit,
                   [&] { return lhs_ideal.is_whole() == rhs_ideal.is_whole(); });
          continue;
        }
        check_eq(c, wit, [&] { return bundle.apply(s, *lhs_ideal.bound()) == *rhs_ideal.bound(); });
      }
    rep.checks.push_back(c);
  }

  {
    CheckResult c{"axiom 3: phi_s . phi_t = phi_{st} on I_{t^-1} ^ I_{(st)^-1}", true, ""};
    for (const auto& s : words)
      for (const auto& t : words) {
        auto dom = bundle.ideal(G.inv(t)).intersect(bundle.ideal(G.inv(G.mul(s, t))));
        if (!dom.bound()) continue;
        for (const auto& x : ideal_samples(B, dom))
          check_eq(c, "s=" + G.to_string(s) + " t=" + G.to_string(t) + " x=" + x.to_string(),
                   [&] { return bundle.apply(s, bundle.apply(t, x)) == bundle.apply(G.mul(s, t), x); });
      }
    rep.checks.push_back(c);
  }

  return rep;
}

bool is_orthogonal(const PartialActionBundle& bundle) {
  const auto& G = *bundle.group();
  if (G.kind() != Group::Kind::free) throw std::domain_error("orthogonality applies to free-group actions");
  for (int i = 0; i < G.generator_count(); ++i)
    for (int j = i + 1; j < G.generator_count(); ++j) {
      auto a = bundle.ideal(G.generator(i));
      auto b = bundle.ideal(G.generator(j));
      if (!a.bound() || !b.bound()) return false;
      if (!a.bound()->meet(*b.bound()).is_bottom()) return false;
    }
  return true;
}

bool is_semi_saturated(const PartialActionBundle& bundle, int word_bound) {
  const auto& G = *bundle.group();
  if (G.kind() != Group::Kind::free) throw std::domain_error("semi-saturation applies to free-group actions");
  auto words = bundle.words_up_to(word_bound);
  for (const auto& w : words) {
    if (w.length() < 2) continue;
    auto wb = bundle.ideal(w).bound();
    if (!wb) continue;
    // Every length-additive split w = s.t must satisfy I_w <= I_s.
    for (int cut = 1; cut < w.length(); ++cut) {
      GroupWord s{std::vector<int>(w.syms.begin(), w.syms.begin() + cut)};
      auto sb = bundle.ideal(s).bound();
      if (!sb) continue;
      if (!wb->leq(*sb)) return false;
    }
  }
  return true;
}

VerifyReport verify_action_morphism(const ActionMorphism& m, int word_bound) {
  VerifyReport rep;
  rep.scope_bound = word_bound;
  const auto& src = *m.source;
  const auto& dst = *m.target;
  const auto& G = *src.group();
  auto words = src.words_up_to(word_bound);

  {
    CheckResult c{"(1) f is a GBA morphism", true, ""};
    std::vector<GbaElement> samples;
    for (const auto& t : words) {
      auto b = src.ideal(t).bound();
      if (!b) continue;
      for (const auto& p : ideal_samples(*src.space(), src.ideal(t))) samples.push_back(p);
    }
    std::sort(samples.begin(), samples.end());
    samples.erase(std::unique(samples.begin(), samples.end()), samples.end());
    check_eq(c, "bottom not preserved",
             [&] { return m.f(src.space()->bottom()) == dst.space()->bottom(); });
    for (const auto& a : samples)
      for (const auto& b : samples)
        check_eq(c, "ops not preserved at " + a.to_string() + ", " + b.to_string(), [&] {
          return m.f(a.meet(b)) == m.f(a).meet(m.f(b)) && m.f(a.join(b)) == m.f(a).join(m.f(b)) &&
                 m.f(a.diff(b)) == m.f(a).diff(m.f(b));
        });
    rep.checks.push_back(c);
  }

  {
    CheckResult c{"(2) f(I_{1,t}) within I_{2,t}", true, ""};
    for (const auto& t : words) {
      auto b = src.ideal(t).bound();
      if (!b) continue;
      check_eq(c, "t=" + G.to_string(t), [&] { return dst.ideal(t).contains(m.f(*b)); });
    }
    rep.checks.push_back(c);
  }

  {
    CheckResult c{"(3) f . phi_{1,t} = phi_{2,t} . f", true, ""};
    for (const auto& t : words) {
      if (t.is_identity()) continue;
      auto dom = src.ideal(G.inv(t));
      if (!dom.bound()) continue;
      for (const auto& x : ideal_samples(*src.space(), dom))
        check_eq(c, "t=" + G.to_string(t) + " x=" + x.to_string(),
                 [&] { return m.f(src.apply(t, x)) == dst.apply(t, m.f(x)); });
    }
    rep.checks.push_back(c);
  }

  return rep;
}

}  // namespace skewgr
