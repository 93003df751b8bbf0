#ifndef SKEWGR_SEMILATTICE_HPP
#define SKEWGR_SEMILATTICE_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "skewgr/gba.hpp"

namespace skewgr {

// Finite meet semilattice with 0. Element 0 is the absorbing minimum; the
// order is x <= y iff x meet y = x.
class Semilattice {
 public:
  Semilattice(std::vector<std::string> names, std::vector<std::vector<int>> meet_table, int zero);

  // Meet = set intersection on an explicit intersection-closed family.
  static Semilattice from_sets(const std::vector<Bitset>& sets);

  int size() const { return static_cast<int>(names_.size()); }
  int zero() const { return zero_; }
  const std::string& name(int i) const { return names_[i]; }
  int meet(int a, int b) const { return meet_[a][b]; }
  bool leq(int a, int b) const { return meet_[a][b] == a; }

  std::vector<int> below(int x) const;  // x^-
  std::vector<int> above(int x) const;  // x^+

  std::string element_set_string(const std::vector<int>& xs) const;

 private:
  void validate() const;

  std::vector<std::string> names_;
  std::vector<std::vector<int>> meet_;
  int zero_;
};

// A filter as a canonical sorted index set.
using Filter = std::vector<int>;

inline constexpr int kDefaultSemilatticeBound = 20;

bool is_filter(const Semilattice& P, const Filter& F);

// All filters in deterministic order (by cardinality, then lexicographic).
std::vector<Filter> enumerate_filters(const Semilattice& P, int bound = kDefaultSemilatticeBound);

bool is_ultrafilter(const Semilattice& P, const Filter& F);

// C must lie inside x^-; true iff every nonzero y <= x meets some member.
bool is_finite_cover(const Semilattice& P, int x, const std::vector<int>& C);

// Maximal-candidate criterion: F is tight iff no x in F has the set
// x^- \ (F u {0}) as a cover of x.
bool is_tight_filter(const Semilattice& P, const Filter& F);

// Tight filters with index maps for basis computation. On finite semilattices
// tight filters and ultrafilters coincide; the constructor asserts this.
class TightSpace {
 public:
  explicit TightSpace(const Semilattice& P, int bound = kDefaultSemilatticeBound);

  const Semilattice& semilattice() const { return *P_; }
  const std::shared_ptr<const Semilattice>& semilattice_ptr() const { return P_; }
  const std::vector<Filter>& filters() const { return filters_; }
  int size() const { return static_cast<int>(filters_.size()); }

  // V_{(x : x_1..x_n)} as a set of tight-filter indices.
  Bitset basis_bits(int x, const std::vector<int>& excl = {}) const;

  // Compact-open GBA: the power algebra on the tight filters, with the
  // generation property of {V_x} asserted.
  std::shared_ptr<const PowerGba> tc() const { return tc_; }
  GbaElement v(int x, const std::vector<int>& excl = {}) const;

 private:
  std::shared_ptr<const Semilattice> P_;
  std::vector<Filter> filters_;
  std::shared_ptr<const PowerGba> tc_;
};

struct BasisSet {
  int include = -1;
  std::vector<int> exclude;
  std::vector<Filter> resolved;
};

BasisSet basis_set(const TightSpace& T, int x, const std::vector<int>& excl);

// A 0-preserving meet-subsemilattice P1 of P2, given by the index subset.
class SubSemilattice {
 public:
  SubSemilattice(std::shared_ptr<const Semilattice> P2, std::vector<int> members);

  const Semilattice& big() const { return *P2_; }
  const std::vector<int>& members() const { return members_; }
  bool contains(int x) const;

  // Downward set x^{P1,-} / upward set x^{P1,+} of any x in P2.
  std::vector<int> below_in_sub(int x) const;
  std::vector<int> above_in_sub(int x) const;

  // P1 viewed as a semilattice in its own right (index i -> members()[i]).
  Semilattice as_semilattice() const;
  int to_sub_index(int big_index) const;

 private:
  std::shared_ptr<const Semilattice> P2_;
  std::vector<int> members_;
};

// xi cap P1, in big-semilattice indices; nullopt when empty.
std::optional<Filter> restrict_filter(const SubSemilattice& sub, const Filter& xi);

bool is_cover_in_sub(const SubSemilattice& sub, int x, const std::vector<int>& C);

// Pair reformulation: fails iff some x in P1 and nonzero y <= x in P2 have
// {c in x^{P1,-} : c meet y = 0} covering x within P1.
bool preserves_finite_covers(const SubSemilattice& sub);

struct SufficientConditions {
  bool downward_closed = false;
  bool lemma_cover_condition = false;
  bool lemma_tight_condition = false;
};

SufficientConditions check_sufficient_conditions(const SubSemilattice& sub);

// The injective map Tc(P1) -> Tc(P2) induced by preimages of the restriction,
// with per-atom images and the ideal (tightness) verdict.
struct TcInclusion {
  std::shared_ptr<const TightSpace> small_space;
  std::shared_ptr<const TightSpace> big_space;
  std::vector<GbaElement> atom_image;  // image of each T(P1) point, as element of Tc(P2)
  bool injective = false;
  bool is_tight = false;

  GbaElement map(const GbaElement& u) const;
  std::vector<GbaElement> image_family() const;
};

TcInclusion tc_inclusion(const SubSemilattice& sub,
                         std::shared_ptr<const TightSpace> big_space = nullptr);

}  // namespace skewgr

#endif
