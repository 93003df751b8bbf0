#ifndef SKEWGR_GRAPH_HPP
#define SKEWGR_GRAPH_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "skewgr/inverse_semigroup.hpp"

namespace skewgr {

class DirectedGraph {
 public:
  struct Edge {
    std::string name;
    int src;
    int dst;
  };

  DirectedGraph(std::vector<std::string> vertex_names, std::vector<Edge> edges);

  int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::string& vertex_name(int v) const { return vertex_names_[v]; }
  const Edge& edge(int e) const { return edges_[e]; }
  int vertex_index(const std::string& name) const;
  int edge_index(const std::string& name) const;

  const std::vector<int>& out_edges(int v) const { return out_edges_[v]; }
  bool is_sink(int v) const { return out_edges_[v].empty(); }
  bool acyclic() const;

  bool valid_path(const GraphPath& p) const;
  int range_of(const GraphPath& p) const;  // r(p)
  GraphPath vertex_path(int v) const { return GraphPath{v, {}}; }
  std::optional<GraphPath> path_from_edges(const std::vector<int>& edge_ids) const;

  // All paths (vertices included) of length <= bound.
  std::vector<GraphPath> paths_up_to(int bound) const;

  std::string path_string(const GraphPath& p) const;

 private:
  std::vector<std::string> vertex_names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> out_edges_;
};

// Compact opens of the boundary-path space in a canonical depth-expansion
// form. Atoms at depth N: terminal singletons T(p) for paths ending at a sink
// (|p| <= N) and frontier cylinders C(p) with |p| = N, r(p) not a sink.
// Equality compares after expansion to a common depth.
class BoundaryGba : public GbaSpace {
 public:
  static std::shared_ptr<const BoundaryGba> make(DirectedGraph graph);

  const DirectedGraph& graph() const { return graph_; }

  GbaElement cylinder(const GraphPath& p) const;  // V_{(p,p)}
  GbaElement expand(const GbaElement& x, int depth) const;
  int depth_of(const GbaElement& x) const;
  int atom_count(const GbaElement& x) const;
  // Prefix surgery: replaces the leading `from` by `to` on every atom.
  GbaElement replace_prefix(const GbaElement& x, const GraphPath& from, const GraphPath& to) const;

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
  explicit BoundaryGba(DirectedGraph graph) : graph_(std::move(graph)) {}

  DirectedGraph graph_;
};

// The graph inverse semigroup S_G of path pairs (p, q) with r(p) = r(q).
class GraphSemigroup : public InverseSemigroup {
 public:
  explicit GraphSemigroup(DirectedGraph graph);

  const DirectedGraph& graph() const { return graph_; }

  SgElem pair(const GraphPath& p, const GraphPath& q) const;

  std::string describe() const override;
  SgElem multiply(const SgElem& a, const SgElem& b) const override;
  SgElem star(const SgElem& a) const override;
  std::vector<SgElem> elements(int depth) const override;
  bool finite() const override { return graph_.acyclic(); }
  std::string to_string(const SgElem& x) const override;

  // The pure grading (p, q) -> p q^{-1} into the free group on the edges.
  Grading standard_grading() const;

  // Closed-form E_g / phi_g data for a reduced word: the cylinder generator
  // of the ideal, as path pairs (domain for g^{-1}, range for g).
  struct WordShape {
    bool realizable = false;
    GraphPath range_prefix;   // E_g = down-closure of (range_prefix, range_prefix)
    GraphPath domain_prefix;  // E_{g^-1} likewise
  };
  WordShape parse_word(const GroupWord& g) const;

  bool eg_contains(const GroupWord& g, const SgElem& idempotent) const;
  std::vector<SgElem> eg_enumerate(const GroupWord& g, int depth) const;
  SgElem phi_closed_form(const GroupWord& g, const SgElem& idempotent) const;

  // The symbolic partial action on the boundary GBA.
  ActionContext make_action(int word_bound = 3) const;

 private:
  DirectedGraph graph_;
  std::shared_ptr<const Group> free_group_;
};

GroupWord sg_grading_word(const Group& free_group, const PathPair& a);

struct LeavittMap {
  std::shared_ptr<const GraphSemigroup> semigroup;
  std::shared_ptr<const LrAlgebra> algebra;
  std::map<std::string, SkewElement> vertex_units;  // v -> (v,v) delta_e
  std::map<std::string, SkewElement> edge_gens;     // e -> (e,e) delta_e^
  std::map<std::string, SkewElement> edge_stars;    // e -> (r(e),r(e)) delta_{e^-1}
  VerifyReport relations;
};

// Generator images and the standard relation checks: vertex idempotents,
// s_e* s_f = delta_{ef} p_{r(e)}, compatibility with source/range units, and
// the range decomposition p_v = sum s_e s_e* at regular (non-sink) vertices.
LeavittMap leavitt_map(std::shared_ptr<const GraphSemigroup> S, const Ring& ring, int word_bound = 3);

}  // namespace skewgr

#endif
