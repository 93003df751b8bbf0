#ifndef SKEWGR_LABELLED_HPP
#define SKEWGR_LABELLED_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "skewgr/graph.hpp"
#include "skewgr/inverse_semigroup.hpp"

namespace skewgr {

class LabelledGraph {
 public:
  struct Edge {
    std::string name;
    int src;
    int dst;
    int label;
  };

  LabelledGraph(std::vector<std::string> vertex_names, std::vector<std::string> alphabet,
                std::vector<Edge> edges);

  int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
  int alphabet_size() const { return static_cast<int>(alphabet_.size()); }
  const std::string& vertex_name(int v) const { return vertex_names_[v]; }
  const std::string& letter(int a) const { return alphabet_[a]; }
  const std::vector<Edge>& edges() const { return edges_; }
  int vertex_index(const std::string& name) const;
  int letter_index(const std::string& name) const;

  bool is_sink(int v) const;
  Bitset sinks() const;

  // r(A, a) and r(A, alpha) by letter-wise iteration; r(alpha) over all
  // vertices.
  Bitset relative_range(const Bitset& A, int letter) const;
  Bitset relative_range(const Bitset& A, const std::vector<int>& alpha) const;
  Bitset range_of(const std::vector<int>& alpha) const;
  bool realizable(const std::vector<int>& alpha) const { return !range_of(alpha).empty(); }

  std::vector<int> delta_set(const Bitset& A) const;  // letters with r(A,a) nonempty

  std::vector<std::vector<int>> label_paths_up_to(int bound) const;  // realizable, incl. empty
  std::string label_string(const std::vector<int>& alpha) const;     // "()" for the empty path
  std::string set_string(const Bitset& A) const;

 private:
  std::vector<std::string> vertex_names_;
  std::vector<std::string> alphabet_;
  std::vector<Edge> edges_;
};

// Accommodating family of vertex sets: contains every r(alpha), closed under
// union, intersection, relative complement, and r(., a).
class LabelledFamily {
 public:
  // Closure of the seeds (plus all r(alpha)) under the family operations.
  static LabelledFamily closure(const LabelledGraph& g, std::vector<Bitset> seeds);
  static LabelledFamily powerset(const LabelledGraph& g);

  const std::vector<Bitset>& sets() const { return sets_; }
  bool contains(const Bitset& A) const;
  int size() const { return static_cast<int>(sets_.size()); }

  // Minimal nonzero members below X.
  std::vector<Bitset> atoms_below(const Bitset& X) const;

 private:
  std::vector<Bitset> sets_;  // sorted
};

struct LabelledSpace {
  LabelledGraph graph;
  LabelledFamily family;
};

// Closure, weak left-resolving, and normality checks.
VerifyReport validate_labelled_space(const LabelledSpace& space);

// 0 < |Delta_A| < infinity and no nonempty family member inside A ^ sinks.
bool is_regular(const LabelledSpace& space, const Bitset& A);

// Compact opens of the tight-filter space in cylinder/leftover canonical
// form. Atoms at depth N: frontier cylinders C(alpha, p) with |alpha| = N and
// p an emitting atom of B_alpha, and leftover singletons W(alpha, q) for
// sink atoms q (Delta_q empty), |alpha| <= N.
class LabelledGba : public GbaSpace {
 public:
  static std::shared_ptr<const LabelledGba> make(LabelledSpace space);

  const LabelledSpace& space() const { return space_; }

  GbaElement cylinder(const std::vector<int>& alpha, const Bitset& A) const;  // V_{(alpha,A,alpha)}
  GbaElement expand(const GbaElement& x, int depth) const;
  int depth_of(const GbaElement& x) const;
  int atom_count(const GbaElement& x) const;
  int leftover_count(const GbaElement& x) const;
  GbaElement replace_prefix(const GbaElement& x, const std::vector<int>& from,
                            const std::vector<int>& to) const;

  std::string describe() const override;
  bool has_top() const override { return true; }
  GbaElement top() const override;
  bool finite() const override { return false; }
  std::vector<GbaElement> pieces(const GbaElement& x) const override;
  GbaElement refined(const GbaElement& x, int level) const override;
  GbaElement sample_below(const GbaElement& bound, Rng& rng) const override;
  std::string to_string(const GbaElement& x) const override;

 protected:
  ValP v_bottom() const override;
  ValP v_meet(const GbaValue& a, const GbaValue& b) const override;
  ValP v_join(const GbaValue& a, const GbaValue& b) const override;
  ValP v_diff(const GbaValue& a, const GbaValue& b) const override;
  int v_compare(const GbaValue& a, const GbaValue& b) const override;

 private:
  explicit LabelledGba(LabelledSpace space) : space_(std::move(space)) {}

  LabelledSpace space_;
};

// The inverse semigroup of triples (alpha, A, beta) with A nonempty in
// B_alpha ^ B_beta.
class LabelledSemigroup : public InverseSemigroup {
 public:
  explicit LabelledSemigroup(LabelledSpace space);

  const LabelledSpace& space() const { return space_; }

  SgElem triple(const std::vector<int>& alpha, const Bitset& A, const std::vector<int>& beta) const;

  std::string describe() const override;
  SgElem multiply(const SgElem& a, const SgElem& b) const override;
  SgElem star(const SgElem& a) const override;
  std::vector<SgElem> elements(int depth) const override;
  bool finite() const override { return false; }
  std::string to_string(const SgElem& x) const override;

  // (alpha, A, alpha) <= (beta, B, beta): alpha = beta alpha' and A within
  // r(B, alpha').
  bool order_leq(const SgElem& x, const SgElem& y) const;

  Grading standard_grading() const;

  struct WordShape {
    bool realizable = false;
    std::vector<int> p1, p2;
    Bitset common_range;  // r(p1) ^ r(p2), nonempty when realizable
  };
  WordShape parse_word(const GroupWord& g) const;

  bool eg_contains(const GroupWord& g, const SgElem& idempotent) const;
  std::vector<SgElem> eg_enumerate(const GroupWord& g, int depth) const;
  SgElem phi_closed_form(const GroupWord& g, const SgElem& idempotent) const;

  ActionContext make_action(int word_bound = 3) const;

 private:
  LabelledSpace space_;
  std::shared_ptr<const Group> free_group_;
};

struct CkMap {
  std::shared_ptr<const LabelledSemigroup> semigroup;
  std::shared_ptr<const LrAlgebra> algebra;
  std::map<std::string, SkewElement> projections;  // set name -> p_A
  std::map<std::string, SkewElement> letter_gens;  // a -> s_a
  std::map<std::string, SkewElement> letter_stars;
  VerifyReport relations;  // Cuntz-Krieger (1)-(5); (5) over the regular sets
};

CkMap ck_map(std::shared_ptr<const LabelledSemigroup> S, const Ring& ring, int word_bound = 3);

// The two inductive product rules for the generator images, over label paths
// up to the depth bound.
VerifyReport generator_products(std::shared_ptr<const LabelledSemigroup> S, const Ring& ring,
                                int depth = 3);

// Identity labelling adapter: alphabet = edges, powerset family.
LabelledSpace graph_to_labelled(const DirectedGraph& g);

// Compares S_G multiplication, star, and grading against the labelled triple
// semigroup under (p, q) -> (L(p), {r(p)}, L(q)) for all pairs up to depth.
VerifyReport cross_validate_graph_adapter(const DirectedGraph& g, int depth = 3);

}  // namespace skewgr

#endif
