#ifndef SKEWGR_INVERSE_SEMIGROUP_HPP
#define SKEWGR_INVERSE_SEMIGROUP_HPP

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "skewgr/semigroup_element.hpp"
#include "skewgr/semilattice.hpp"
#include "skewgr/skew.hpp"

namespace skewgr {

class InverseSemigroup;

// Pure grading: group handle plus the word map on nonzero elements.
struct Grading {
  std::shared_ptr<const Group> group;
  std::function<GroupWord(const SgElem&)> map;

  static Grading trivial_on(const std::shared_ptr<const Group>& g) {
    return {g, [](const SgElem&) { return GroupWord{}; }};
  }
};

// Inverse semigroup with zero. Enumeration of nonzero elements is exhaustive
// for finite kinds and depth-bounded otherwise; it is always sorted.
class InverseSemigroup : public std::enable_shared_from_this<InverseSemigroup> {
 public:
  virtual ~InverseSemigroup() = default;

  virtual std::string describe() const = 0;
  virtual SgElem multiply(const SgElem& a, const SgElem& b) const = 0;
  virtual SgElem star(const SgElem& a) const = 0;
  virtual std::vector<SgElem> elements(int depth) const = 0;
  virtual bool finite() const = 0;
  virtual std::string to_string(const SgElem& x) const = 0;

  SgElem zero() const { return sg_zero(); }
  bool is_idempotent(const SgElem& x) const { return !is_zero(x) && multiply(x, x) == x; }
  std::vector<SgElem> idempotents(int depth) const;
};

// ---- concrete kinds --------------------------------------------------------

class FiniteTableSemigroup : public InverseSemigroup {
 public:
  // table[i][j] = index of product, or -1 for zero. Zero is implicit.
  FiniteTableSemigroup(std::vector<std::string> names, std::vector<std::vector<int>> table);

  int size() const { return static_cast<int>(names_.size()); }
  SgElem element(int i) const { return TablePoint{i}; }
  int index_of(const std::string& name) const;
  bool inverses_unique() const { return inverses_unique_; }
  const std::string& inverse_ambiguity() const { return inverse_ambiguity_; }

  std::string describe() const override;
  SgElem multiply(const SgElem& a, const SgElem& b) const override;
  SgElem star(const SgElem& a) const override;
  std::vector<SgElem> elements(int depth) const override;
  bool finite() const override { return true; }
  std::string to_string(const SgElem& x) const override;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<int>> table_;
  std::vector<int> star_;
  bool inverses_unique_ = true;
  std::string inverse_ambiguity_;
};

// A finite meet semilattice viewed as a commutative idempotent inverse
// semigroup (nonzero elements of P; P's zero is the semigroup zero).
class SemilatticeSemigroup : public InverseSemigroup {
 public:
  explicit SemilatticeSemigroup(Semilattice P);

  const Semilattice& semilattice() const { return P_; }
  SgElem element(int semilattice_index) const;

  std::string describe() const override;
  SgElem multiply(const SgElem& a, const SgElem& b) const override;
  SgElem star(const SgElem& a) const override { return a; }
  std::vector<SgElem> elements(int depth) const override;
  bool finite() const override { return true; }
  std::string to_string(const SgElem& x) const override;

 private:
  Semilattice P_;
};

// The countable antichain {0} u {e_i : i in N}: e_i e_j = 0 for i != j.
// Conceptually infinite; enumeration shows indices below the display bound.
class AntichainSemigroup : public InverseSemigroup {
 public:
  explicit AntichainSemigroup(int display_bound = 6) : display_bound_(display_bound) {}

  std::string describe() const override;
  SgElem multiply(const SgElem& a, const SgElem& b) const override;
  SgElem star(const SgElem& a) const override { return a; }
  std::vector<SgElem> elements(int depth) const override;
  bool finite() const override { return false; }
  std::string to_string(const SgElem& x) const override;

 private:
  int display_bound_;
};

// S u {*} with * adjoined as an identity.
class UnitizedSemigroup : public InverseSemigroup {
 public:
  explicit UnitizedSemigroup(std::shared_ptr<const InverseSemigroup> inner)
      : inner_(std::move(inner)) {}

  const std::shared_ptr<const InverseSemigroup>& inner() const { return inner_; }

  std::string describe() const override;
  SgElem multiply(const SgElem& a, const SgElem& b) const override;
  SgElem star(const SgElem& a) const override;
  std::vector<SgElem> elements(int depth) const override;
  bool finite() const override { return inner_->finite(); }
  std::string to_string(const SgElem& x) const override;

 private:
  std::shared_ptr<const InverseSemigroup> inner_;
};

std::shared_ptr<const UnitizedSemigroup> unitize(std::shared_ptr<const InverseSemigroup> S);

// phi* : the grading extended by *(identity).
Grading unitized_grading(const Grading& phi);

// ---- structural checks -----------------------------------------------------

VerifyReport verify_inverse_semigroup(const InverseSemigroup& S, int depth = 3,
                                      int associativity_cap = 12000);

// x <= y iff x = (x x*) y.
bool natural_order(const InverseSemigroup& S, const SgElem& x, const SgElem& y);

VerifyReport verify_pure_grading(const InverseSemigroup& S, const Grading& phi, int depth = 3);

// E_g by brute force over the (depth-bounded) enumeration; includes 0.
std::vector<SgElem> compute_Eg(const InverseSemigroup& S, const Grading& phi, const GroupWord& g,
                               int depth = 3);

// phi_g(x) = s x s* for the first admissible s; domain error when none exists.
SgElem phi_g(const InverseSemigroup& S, const Grading& phi, const GroupWord& g, const SgElem& x,
             int depth = 3);

struct OrthogonalityReport {
  bool orthogonal = false;
  bool semi_saturated = false;
  int depth = 0;
};

OrthogonalityReport semigroup_orthogonality_checks(const InverseSemigroup& S, const Grading& phi,
                                                   int depth = 3);

// ---- the associated partial action and algebra -----------------------------

// The bundle plus the dictionaries tying semigroup idempotents to compact
// opens of the tight-filter space.
struct ActionContext {
  std::shared_ptr<const InverseSemigroup> semigroup;
  Grading grading;
  std::shared_ptr<const PartialActionBundle> bundle;
  std::function<GbaElement(const SgElem&)> v_of;                       // V_x for nonzero idempotent x
  std::function<bool(const SgElem&, const GroupWord&)> in_eg;          // x in E_g
  std::function<std::vector<SgElem>(const GroupWord&, int)> eg_enumerate;  // nonzero members
  // Finite construction extras (null for symbolic realizations):
  std::shared_ptr<const TightSpace> tight;
  std::function<int(const SgElem&)> sl_index;
};

// Generic construction through tight filters; requires a finite handle.
ActionContext finite_action_context(std::shared_ptr<const InverseSemigroup> S, Grading phi,
                                    int depth = 3);

// Dispatch: finite handles go through the tight-filter construction; the
// antichain kinds get the finite-set / finite-cofinite realizations.
ActionContext build_partial_action(std::shared_ptr<const InverseSemigroup> S, const Grading& phi,
                                   int depth = 3);

// L_R(S, phi): skew-ring operations over the induced bundle.
class LrAlgebra {
 public:
  LrAlgebra(Ring ring, ActionContext ctx) : ring_(ring), ctx_(std::move(ctx)) {}

  const Ring& ring() const { return ring_; }
  const ActionContext& context() const { return ctx_; }
  const std::shared_ptr<const PartialActionBundle>& bundle() const { return ctx_.bundle; }

  SkewElement zero() const { return skew_zero(ring_, ctx_.bundle); }
  // x delta_g = V_x delta_g; domain error when x is not in E_g.
  SkewElement xdelta(const SgElem& x, const GroupWord& g) const;
  SkewElement vdelta(const GbaElement& U, const GroupWord& g) const;

 private:
  Ring ring_;
  ActionContext ctx_;
};

// ---- grading change --------------------------------------------------------

struct GroupHom {
  std::shared_ptr<const Group> source;
  std::shared_ptr<const Group> target;
  std::vector<GroupWord> generator_images;  // free source: image per generator

  GroupWord apply(const GroupWord& w) const;
};

struct RegradeReport {
  bool sigma_pure = false;
  bool partition_ok = false;       // {J^phi_g}_{g in X_h} partitions J^sigma_h
  bool idempotents_ok = false;     // (E_h^sigma)^x = disjoint union of (E_g^phi)^x
  bool dims_match = false;         // graded spanning dimensions agree
  int multiplicativity_pairs = 0;  // sampled pairs checked
  bool multiplicativity_ok = false;
  int depth = 0;
  std::vector<std::pair<std::string, int>> sigma_dims;  // per target word

  bool all_pass() const {
    return sigma_pure && partition_ok && idempotents_ok && dims_match && multiplicativity_ok;
  }
};

// sigma = f . phi; builds both algebras and checks the desk-scale evidence
// that f_g delta_g -> f_g delta_{f(g)} is a graded iso on spanning sets.
RegradeReport regrade(const Ring& ring, const ActionContext& phi_ctx, const GroupHom& f, int depth = 3,
                      int pairs = 200, std::uint64_t seed = 0);

// The sigma-side bundle assembled from the phi-side components.
std::shared_ptr<const PartialActionBundle> regraded_bundle(const ActionContext& phi_ctx,
                                                           const GroupHom& f, int depth);

// ---- subsemigroups and unitization -----------------------------------------

struct InclusionReport {
  bool zero_ok = false;
  bool products_ok = false;  // all multiplications, zero products included
  bool star_ok = false;
  bool injective = false;
  bool covers_preserved = false;
  VerifyReport morphism;
  bool embedding_built = false;
  std::string witness;

  // Image data, available when the embedding was built.
  std::shared_ptr<const SkewMorphism> algebra_embedding;
  std::function<bool(const GbaElement&)> sub_contains;  // image of Tc(E1) in Tc(E2)
  std::shared_ptr<const LrAlgebra> sub_algebra;
  std::shared_ptr<const LrAlgebra> super_algebra;
  std::function<GbaElement(const GbaElement&)> gba_map;
  bool image_is_whole = false;  // image exhausts Tc(E2)

  bool subsemigroup_ok() const { return zero_ok && products_ok && star_ok && injective; }
};

// S1 embedded in S2 via emb, graded by phi2 restricted along emb. Finite
// instances only.
InclusionReport subsemigroup_inclusion(const Ring& ring, std::shared_ptr<const InverseSemigroup> S1,
                                       std::shared_ptr<const InverseSemigroup> S2,
                                       const std::function<SgElem(const SgElem&)>& emb,
                                       const Grading& phi2, int depth = 3);

struct EssentialIdealReport {
  bool is_ideal = false;
  bool essential = false;
  int tested_elements = 0;
  std::string witness;
};

// sub given by its membership predicate on Tc(E2) and a family of sub local
// units; super spanning elements are supplied by the caller (scope).
EssentialIdealReport is_essential_ideal(const LrAlgebra& super,
                                        const std::function<bool(const GbaElement&)>& sub_contains,
                                        const std::vector<GbaElement>& sub_units,
                                        const std::vector<std::pair<GroupWord, GbaElement>>& super_spanning);

}  // namespace skewgr

#endif
