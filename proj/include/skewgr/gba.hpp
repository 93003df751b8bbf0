#ifndef SKEWGR_GBA_HPP
#define SKEWGR_GBA_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "skewgr/util.hpp"

namespace skewgr {

class GbaSpace;

// Opaque realization-specific payload of a lattice element.
class GbaValue {
 public:
  virtual ~GbaValue() = default;
};

// An element of a generalized Boolean algebra together with its owning space.
// Values are immutable; every operation goes through the space so that mixed
// operands are rejected.
class GbaElement {
 public:
  GbaElement() = default;
  GbaElement(std::shared_ptr<const GbaSpace> space, std::shared_ptr<const GbaValue> value)
      : space_(std::move(space)), value_(std::move(value)) {}

  const std::shared_ptr<const GbaSpace>& space() const { return space_; }
  const GbaValue& value() const { return *value_; }
  bool valid() const { return space_ != nullptr; }

  GbaElement meet(const GbaElement& o) const;
  GbaElement join(const GbaElement& o) const;
  GbaElement diff(const GbaElement& o) const;
  bool leq(const GbaElement& o) const;
  bool is_bottom() const;

  bool operator==(const GbaElement& o) const;
  bool operator!=(const GbaElement& o) const { return !(*this == o); }
  bool operator<(const GbaElement& o) const;  // deterministic order within one space

  std::string to_string() const;

 private:
  std::shared_ptr<const GbaSpace> space_;
  std::shared_ptr<const GbaValue> value_;
};

// Capability bundle of a generalized Boolean algebra: meet, join, relative
// complement, bottom, equality and order, plus optional top and atom
// enumeration for the finite realizations.
class GbaSpace : public std::enable_shared_from_this<GbaSpace> {
 public:
  virtual ~GbaSpace() = default;

  virtual std::string describe() const = 0;

  GbaElement bottom() const;
  GbaElement meet(const GbaElement& a, const GbaElement& b) const;
  GbaElement join(const GbaElement& a, const GbaElement& b) const;
  GbaElement diff(const GbaElement& a, const GbaElement& b) const;
  bool equal(const GbaElement& a, const GbaElement& b) const;
  int compare(const GbaElement& a, const GbaElement& b) const;
  // x <= y iff x meet y = x.
  bool leq(const GbaElement& a, const GbaElement& b) const;

  virtual bool has_top() const = 0;
  virtual GbaElement top() const;

  // True when the space supports exhaustive atom enumeration.
  virtual bool finite() const = 0;
  virtual std::vector<GbaElement> atoms() const;

  // Canonical decomposition of an element into pairwise-disjoint minimal
  // pieces at its current resolution; join of the pieces is the element.
  virtual std::vector<GbaElement> pieces(const GbaElement& x) const = 0;

  // Re-express an element at a finer resolution. Meaningful for symbolic
  // realizations (depth expansion); identity elsewhere.
  virtual GbaElement refined(const GbaElement& x, int /*level*/) const { return x; }

  virtual GbaElement sample_below(const GbaElement& bound, Rng& rng) const;

  // Arbitrary element for randomized suites; spaces without a top override.
  virtual GbaElement sample_element(Rng& rng) const;

  virtual std::string to_string(const GbaElement& x) const = 0;

 protected:
  using ValP = std::shared_ptr<const GbaValue>;

  virtual ValP v_bottom() const = 0;
  virtual ValP v_meet(const GbaValue& a, const GbaValue& b) const = 0;
  virtual ValP v_join(const GbaValue& a, const GbaValue& b) const = 0;
  virtual ValP v_diff(const GbaValue& a, const GbaValue& b) const = 0;
  virtual int v_compare(const GbaValue& a, const GbaValue& b) const = 0;

  GbaElement wrap(ValP v) const { return GbaElement(shared_from_this(), std::move(v)); }
  void check_mine(const GbaElement& x) const;
};

// Ideal of a GBA, represented by an optional join bound: membership is
// x <= bound. A missing bound stands for the whole space (which may lack a
// top); the trivial ideal has bound = bottom.
class IdealHandle {
 public:
  IdealHandle() = default;

  static IdealHandle whole(std::shared_ptr<const GbaSpace> space);
  static IdealHandle below(const std::vector<GbaElement>& bounds);
  static IdealHandle trivial(std::shared_ptr<const GbaSpace> space);

  const std::shared_ptr<const GbaSpace>& space() const { return space_; }
  bool is_whole() const { return !bound_.has_value(); }
  bool is_trivial() const { return bound_ && bound_->is_bottom(); }
  const std::optional<GbaElement>& bound() const { return bound_; }

  bool contains(const GbaElement& x) const;

  // Intersection of ideals: meet of bounds, whole acting as neutral.
  IdealHandle intersect(const IdealHandle& o) const;

 private:
  std::shared_ptr<const GbaSpace> space_;
  std::optional<GbaElement> bound_;
};

enum class LatticeOp { meet, join, diff };

GbaElement lattice_ops(const GbaSpace& space, LatticeOp op, const GbaElement& a, const GbaElement& b);

// Exhaustive ideal test for an explicitly listed finite subset.
bool is_ideal(const std::vector<GbaElement>& subset, const std::vector<GbaElement>& universe);

IdealHandle ideal_below(const std::vector<GbaElement>& bounds);

// probe <= join of the family (single join; joins are monotone).
bool is_cover(const std::vector<GbaElement>& family, const GbaElement& probe);

// Least subset containing the family and closed under meet/join/diff, with
// bottom. Finite realizations only.
std::vector<GbaElement> generated_subalgebra(const std::shared_ptr<const GbaSpace>& space,
                                             const std::vector<GbaElement>& family);

bool is_gba_morphism(const std::function<GbaElement(const GbaElement&)>& f,
                     const std::vector<GbaElement>& source_elements, const GbaSpace& target);

// All elements below a bound in a finite-piece context: joins of subsets of
// pieces(bound). Throws if that would exceed max_pieces.
std::vector<GbaElement> elements_below(const GbaElement& bound, int max_pieces = 14);

// ---- finite power-set realization -----------------------------------------

class PowerGba : public GbaSpace {
 public:
  static std::shared_ptr<const PowerGba> make(std::vector<std::string> atom_names);

  int atom_count() const { return static_cast<int>(atom_names_.size()); }
  const std::vector<std::string>& atom_names() const { return atom_names_; }

  GbaElement element(const Bitset& bits) const;
  GbaElement subset(const std::vector<int>& atom_indices) const;
  GbaElement atom(int i) const;
  const Bitset& bits(const GbaElement& x) const;

  std::string describe() const override;
  bool has_top() const override { return true; }
  GbaElement top() const override;
  bool finite() const override { return true; }
  std::vector<GbaElement> atoms() const override;
  std::vector<GbaElement> pieces(const GbaElement& x) const override;
  GbaElement sample_below(const GbaElement& bound, Rng& rng) const override;
  std::string to_string(const GbaElement& x) const override;

 protected:
  ValP v_bottom() const override;
  ValP v_meet(const GbaValue& a, const GbaValue& b) const override;
  ValP v_join(const GbaValue& a, const GbaValue& b) const override;
  ValP v_diff(const GbaValue& a, const GbaValue& b) const override;
  int v_compare(const GbaValue& a, const GbaValue& b) const override;

 private:
  explicit PowerGba(std::vector<std::string> atom_names) : atom_names_(std::move(atom_names)) {}

  std::vector<std::string> atom_names_;
};

// ---- finite/cofinite realization over a countable atom domain -------------
//
// Payload is a finite set of indices plus a cofinite flag. With
// allow_cofinite = false this is the algebra of finite subsets of N (no top);
// with allow_cofinite = true it is the finite/cofinite algebra, whose top is
// the complement of the empty set.

class FcGba : public GbaSpace {
 public:
  static std::shared_ptr<const FcGba> make(bool allow_cofinite);

  bool allow_cofinite() const { return allow_cofinite_; }

  GbaElement finite_set(const std::vector<int>& members) const;
  GbaElement cofinite_set(const std::vector<int>& removed) const;
  bool is_cofinite(const GbaElement& x) const;
  std::vector<int> support(const GbaElement& x) const;  // members or removed list

  std::string describe() const override;
  bool has_top() const override { return allow_cofinite_; }
  GbaElement top() const override;
  bool finite() const override { return false; }
  std::vector<GbaElement> pieces(const GbaElement& x) const override;
  GbaElement sample_below(const GbaElement& bound, Rng& rng) const override;
  GbaElement sample_element(Rng& rng) const override;
  std::string to_string(const GbaElement& x) const override;

 protected:
  ValP v_bottom() const override;
  ValP v_meet(const GbaValue& a, const GbaValue& b) const override;
  ValP v_join(const GbaValue& a, const GbaValue& b) const override;
  ValP v_diff(const GbaValue& a, const GbaValue& b) const override;
  int v_compare(const GbaValue& a, const GbaValue& b) const override;

 private:
  explicit FcGba(bool allow_cofinite) : allow_cofinite_(allow_cofinite) {}

  bool allow_cofinite_;
};

}  // namespace skewgr

#endif
