#ifndef SKEWGR_PARTIAL_ACTION_HPP
#define SKEWGR_PARTIAL_ACTION_HPP

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "skewgr/gba.hpp"
#include "skewgr/group.hpp"

namespace skewgr {

// Mutually inverse element maps realizing phi_t : I_{t^-1} -> I_t.
struct PartialIso {
  std::function<GbaElement(const GbaElement&)> forward;
  std::function<GbaElement(const GbaElement&)> backward;
};

struct ActionEntry {
  IdealHandle ideal;
  PartialIso iso;
};

// Partial action of a group on a GBA: sparse family of ideals I_t (defaulting
// to the trivial ideal) and isomorphisms phi_t. Closed-form actions supply a
// provider; hand-built ones an explicit entry map.
class PartialActionBundle {
 public:
  using Provider = std::function<ActionEntry(const GroupWord&)>;
  using WordEnumerator = std::function<std::vector<GroupWord>(int)>;

  PartialActionBundle() = default;
  PartialActionBundle(std::shared_ptr<const Group> group, std::shared_ptr<const GbaSpace> space,
                      std::map<GroupWord, ActionEntry> entries);
  PartialActionBundle(std::shared_ptr<const Group> group, std::shared_ptr<const GbaSpace> space,
                      Provider provider, WordEnumerator words);

  const std::shared_ptr<const Group>& group() const { return group_; }
  const std::shared_ptr<const GbaSpace>& space() const { return space_; }

  IdealHandle ideal(const GroupWord& t) const;
  // Join bound of I_t; bottom for trivial ideals. Requires a top if I_e is
  // queried on an unbounded space.
  GbaElement ideal_bound(const GroupWord& t) const;
  GbaElement apply(const GroupWord& t, const GbaElement& x) const;

  // Words with (potentially) nontrivial ideals up to the length bound,
  // identity included; deterministic order.
  std::vector<GroupWord> words_up_to(int bound) const;

 private:
  ActionEntry entry(const GroupWord& t) const;

  std::shared_ptr<const Group> group_;
  std::shared_ptr<const GbaSpace> space_;
  std::map<GroupWord, ActionEntry> entries_;
  Provider provider_;
  WordEnumerator words_;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string witness;  // empty on pass
};

struct VerifyReport {
  int scope_bound = 0;
  std::vector<CheckResult> checks;

  bool all_pass() const;
  std::string to_string() const;
};

// Axioms (1) unit, (2) ideal compatibility, (3) composition, checked over all
// word pairs within the scope bound (exhaustive for finite groups).
VerifyReport verify_partial_action(const PartialActionBundle& bundle, int word_bound = 3);

// Generator ideals pairwise trivial (free group actions).
bool is_orthogonal(const PartialActionBundle& bundle);

// I_{st} <= I_s for length-additive products up to the bound.
bool is_semi_saturated(const PartialActionBundle& bundle, int word_bound = 3);

struct ActionMorphism {
  std::function<GbaElement(const GbaElement&)> f;
  const PartialActionBundle* source = nullptr;
  const PartialActionBundle* target = nullptr;
};

VerifyReport verify_action_morphism(const ActionMorphism& m, int word_bound = 3);

}  // namespace skewgr

#endif
