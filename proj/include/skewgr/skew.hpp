#ifndef SKEWGR_SKEW_HPP
#define SKEWGR_SKEW_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "skewgr/lc.hpp"
#include "skewgr/partial_action.hpp"

namespace skewgr {

// Element of Lc(R,B) x|_Phi G: a finite formal sum of coefficient functions
// f_t delta_t with f_t valued in I_t. Zero coefficients are never stored.
class SkewElement {
 public:
  SkewElement() = default;
  SkewElement(Ring ring, std::shared_ptr<const PartialActionBundle> bundle)
      : ring_(ring), bundle_(std::move(bundle)) {}

  const Ring& ring() const { return ring_; }
  const std::shared_ptr<const PartialActionBundle>& bundle() const { return bundle_; }
  const std::map<GroupWord, LcFunction>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  LcFunction component(const GroupWord& g) const;  // zero function when absent

  bool operator==(const SkewElement& o) const;
  bool operator!=(const SkewElement& o) const { return !(*this == o); }

  std::string to_string() const;

  friend SkewElement skew_from_parts(const Ring&, const std::shared_ptr<const PartialActionBundle>&,
                                     std::map<GroupWord, LcFunction> parts);

 private:
  Ring ring_ = Ring::integers();
  std::shared_ptr<const PartialActionBundle> bundle_;
  std::map<GroupWord, LcFunction> coeffs_;
};

SkewElement skew_zero(const Ring& ring, const std::shared_ptr<const PartialActionBundle>& bundle);

// U delta_g; rejects U outside I_g.
SkewElement delta(const Ring& ring, const std::shared_ptr<const PartialActionBundle>& bundle,
                  const GbaElement& U, const GroupWord& g);

SkewElement skew_from_parts(const Ring& ring, const std::shared_ptr<const PartialActionBundle>& bundle,
                            std::map<GroupWord, LcFunction> parts);

SkewElement skew_add(const SkewElement& x, const SkewElement& y);
SkewElement skew_neg(const SkewElement& x);
SkewElement skew_sub(const SkewElement& x, const SkewElement& y);
SkewElement skew_scale(const RingValue& r, const SkewElement& x);

// (a delta_s)(b delta_t) = phi~_s(phi~_{s^-1}(a) b) delta_{st}, extended
// bilinearly and renormalized.
SkewElement skew_mul(const SkewElement& x, const SkewElement& y);

LcFunction graded_component(const SkewElement& x, const GroupWord& g);

// U with (U delta_e) x = x = x (U delta_e): per homogeneous term V delta_g
// take V v phi_{g^-1}(V), joined over terms. Bottom for x = 0.
GbaElement local_unit_for(const SkewElement& x);

// Top of B when present (then top delta_e is the unit), nullopt otherwise.
std::optional<GbaElement> find_unit(const PartialActionBundle& bundle);

// G-graded ring morphism induced by a morphism of partial actions.
class SkewMorphism {
 public:
  SkewMorphism(ActionMorphism m, std::shared_ptr<const PartialActionBundle> source,
               std::shared_ptr<const PartialActionBundle> target, int verify_bound = 3);

  SkewElement apply(const SkewElement& x) const;

 private:
  ActionMorphism morphism_;
  std::shared_ptr<const PartialActionBundle> source_;
  std::shared_ptr<const PartialActionBundle> target_;
};

struct GeneratorClosureReport {
  std::vector<std::string> generators;
  bool closure_complete = false;
  int word_bound = 0;
  int reached = 0;
  int target = 0;
};

// Semi-saturated generating family {U delta_e} u {V delta_a} u {V delta_a^-1}
// with a closure check that single spanning elements up to the word bound are
// all reachable.
GeneratorClosureReport generators_semi_saturated(const std::shared_ptr<const PartialActionBundle>& bundle,
                                                 const std::vector<GbaElement>& gba_generators,
                                                 int word_bound, int max_pieces = 12);

// Randomized verification of the computation rules (2)-(10).
VerifyReport verify_skew_identities(const Ring& ring,
                                    const std::shared_ptr<const PartialActionBundle>& bundle, int trials,
                                    std::uint64_t seed, int word_bound = 3);

}  // namespace skewgr

#endif
