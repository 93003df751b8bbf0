#ifndef SKEWGR_LC_HPP
#define SKEWGR_LC_HPP

#include <string>
#include <vector>

#include "skewgr/gba.hpp"
#include "skewgr/ring.hpp"

namespace skewgr {

// A compactly supported B-valued coefficient function: finitely many pairs
// (value, support) with nonzero pairwise-distinct values, non-bottom pairwise
// disjoint supports, sorted by value encoding. This is literally the graph of
// f : R \ {0} -> B.
class LcFunction {
 public:
  struct Term {
    RingValue value;
    GbaElement support;
  };

  LcFunction() = default;
  LcFunction(Ring ring, std::shared_ptr<const GbaSpace> space)
      : ring_(ring), space_(std::move(space)) {}

  const Ring& ring() const { return ring_; }
  const std::shared_ptr<const GbaSpace>& space() const { return space_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  GbaElement dom() const;  // join of supports

  bool operator==(const LcFunction& o) const;
  bool operator!=(const LcFunction& o) const { return !(*this == o); }
  bool operator<(const LcFunction& o) const;

  std::string to_string() const;

  friend LcFunction lc_normalize(const Ring& ring, const std::shared_ptr<const GbaSpace>& space,
                                 const std::vector<Term>& raw);

 private:
  Ring ring_ = Ring::integers();
  std::shared_ptr<const GbaSpace> space_;
  std::vector<Term> terms_;
};

// Canonical disjoint-support form: overlapping supports are refined region by
// region, values summed per region, zero values and bottom regions dropped,
// equal values merged.
LcFunction lc_normalize(const Ring& ring, const std::shared_ptr<const GbaSpace>& space,
                        const std::vector<LcFunction::Term>& raw);

// Same, but rejects supports outside the given ideal.
LcFunction lc_normalize_in(const Ring& ring, const IdealHandle& ideal,
                           const std::vector<LcFunction::Term>& raw);

LcFunction lc_indicator(const Ring& ring, const GbaElement& support);  // 1_U

LcFunction lc_add(const LcFunction& f, const LcFunction& g);
LcFunction lc_mul(const LcFunction& f, const LcFunction& g);
LcFunction lc_scale(const RingValue& r, const LcFunction& f);
LcFunction lc_neg(const LcFunction& f);

// Composition with a GBA map on supports (the dual action on coefficients).
LcFunction lc_map_support(const LcFunction& f, const std::function<GbaElement(const GbaElement&)>& phi);

// Pointwise value at an atom (test oracle for finite realizations): the value
// of the unique term whose support lies above the atom, else 0.
RingValue lc_eval_at(const LcFunction& f, const GbaElement& atom);

}  // namespace skewgr

#endif
