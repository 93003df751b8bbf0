#ifndef SKEWGR_TESTS_BUNDLE_FIXTURES_HPP
#define SKEWGR_TESTS_BUNDLE_FIXTURES_HPP

#include <map>
#include <memory>

#include "skewgr/partial_action.hpp"

namespace skewgr::testfix {

// Z/2 acting on the power algebra over four atoms by swapping atoms 0 and 1
// inside the ideal below {0,1}.
inline std::shared_ptr<const PartialActionBundle> swap_bundle() {
  auto G = Group::finite_table({"e", "g"}, {{0, 1}, {1, 0}});
  auto B = PowerGba::make({"p", "q", "r", "s"});
  auto dom = B->subset({0, 1});
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
  eg.ideal = IdealHandle::below({dom});
  eg.iso.forward = swap01;
  eg.iso.backward = swap01;
  entries.emplace(G->element(1), eg);
  return std::make_shared<PartialActionBundle>(G, B, std::move(entries));
}

// Free group on one generator acting by the truncated shift i -> i+1 on four
// atoms: I_{a^k} is the ideal below atoms {k..3}, giving a semi-saturated
// orthogonal action with nilpotent-like ideals.
inline std::shared_ptr<const PartialActionBundle> shift_bundle() {
  auto G = Group::free_group({"a"});
  auto B = PowerGba::make({"0", "1", "2", "3"});
  const int n = 4;
  auto shift = [B, n](const GbaElement& x, int by) {
    Bitset b = B->bits(x);
    Bitset out(n);
    for (int i = 0; i < n; ++i)
      if (b.test(i) && i + by >= 0 && i + by < n) out.set(i + by);
    return B->element(out);
  };
  std::map<GroupWord, ActionEntry> entries;
  for (int k = 1; k < n; ++k) {
    ActionEntry ent;
    std::vector<int> range_atoms, dom_atoms;
    for (int i = k; i < n; ++i) range_atoms.push_back(i);
    for (int i = 0; i < n - k; ++i) dom_atoms.push_back(i);
    ent.ideal = IdealHandle::below({B->subset(range_atoms)});
    ent.iso.forward = [shift, k](const GbaElement& x) { return shift(x, k); };
    ent.iso.backward = [shift, k](const GbaElement& x) { return shift(x, -k); };
    GroupWord pos;
    for (int i = 0; i < k; ++i) pos.syms.push_back(1);
    entries.emplace(pos, ent);

    ActionEntry inv;
    inv.ideal = IdealHandle::below({B->subset(dom_atoms)});
    inv.iso.forward = [shift, k](const GbaElement& x) { return shift(x, -k); };
    inv.iso.backward = [shift, k](const GbaElement& x) { return shift(x, k); };
    GroupWord neg;
    for (int i = 0; i < k; ++i) neg.syms.push_back(-1);
    entries.emplace(neg, inv);
  }
  return std::make_shared<PartialActionBundle>(G, B, std::move(entries));
}

// Trivial action of the free group on two generators on a power algebra.
inline std::shared_ptr<const PartialActionBundle> trivial_bundle() {
  auto G = Group::free_group({"a", "b"});
  auto B = PowerGba::make({"x", "y"});
  return std::make_shared<PartialActionBundle>(G, B, std::map<GroupWord, ActionEntry>{});
}

}  // namespace skewgr::testfix

#endif
