#include "skewgr/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace skewgr {

// ---- DirectedGraph -----------------------------------------------------------

DirectedGraph::DirectedGraph(std::vector<std::string> vertex_names, std::vector<Edge> edges)
    : vertex_names_(std::move(vertex_names)), edges_(std::move(edges)) {
  out_edges_.resize(vertex_names_.size());
  std::set<std::string> seen(vertex_names_.begin(), vertex_names_.end());
  if (seen.size() != vertex_names_.size()) throw std::invalid_argument("duplicate vertex identifiers");
  std::set<std::string> eseen;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if (!eseen.insert(e.name).second) throw std::invalid_argument("duplicate edge identifier " + e.name);
    if (e.src < 0 || e.src >= vertex_count() || e.dst < 0 || e.dst >= vertex_count())
      throw std::invalid_argument("edge endpoint out of range");
    out_edges_[e.src].push_back(static_cast<int>(i));
  }
}

int DirectedGraph::vertex_index(const std::string& name) const {
  auto it = std::find(vertex_names_.begin(), vertex_names_.end(), name);
  if (it == vertex_names_.end()) throw std::invalid_argument("unknown vertex '" + name + "'");
  return static_cast<int>(it - vertex_names_.begin());
}

int DirectedGraph::edge_index(const std::string& name) const {
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].name == name) return static_cast<int>(i);
  throw std::invalid_argument("unknown edge '" + name + "'");
}

bool DirectedGraph::acyclic() const {
  std::vector<int> state(vertex_count(), 0);
  std::function<bool(int)> visit = [&](int v) {
    state[v] = 1;
    for (int e : out_edges_[v]) {
      int w = edges_[e].dst;
      if (state[w] == 1) return false;
      if (state[w] == 0 && !visit(w)) return false;
    }
    state[v] = 2;
    return true;
  };
  for (int v = 0; v < vertex_count(); ++v)
    if (state[v] == 0 && !visit(v)) return false;
  return true;
}

bool DirectedGraph::valid_path(const GraphPath& p) const {
  if (p.vertex < 0 || p.vertex >= vertex_count()) return false;
  int at = p.vertex;
  for (int e : p.edges) {
    if (e < 0 || e >= edge_count() || edges_[e].src != at) return false;
    at = edges_[e].dst;
  }
  return true;
}

int DirectedGraph::range_of(const GraphPath& p) const {
  return p.edges.empty() ? p.vertex : edges_[p.edges.back()].dst;
}

std::optional<GraphPath> DirectedGraph::path_from_edges(const std::vector<int>& edge_ids) const {
  if (edge_ids.empty()) return std::nullopt;
  GraphPath p{edges_[edge_ids.front()].src, edge_ids};
  if (!valid_path(p)) return std::nullopt;
  return p;
}

std::vector<GraphPath> DirectedGraph::paths_up_to(int bound) const {
  std::vector<GraphPath> out;
  std::vector<GraphPath> frontier;
  for (int v = 0; v < vertex_count(); ++v) frontier.push_back(vertex_path(v));
  out = frontier;
  for (int len = 0; len < bound; ++len) {
    std::vector<GraphPath> next;
    for (const auto& p : frontier)
      for (int e : out_edges_[range_of(p)]) {
        GraphPath q = p;
        q.edges.push_back(e);
        next.push_back(q);
      }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string DirectedGraph::path_string(const GraphPath& p) const {
  if (p.edges.empty()) return vertex_names_[p.vertex];
  return join_map(p.edges.begin(), p.edges.end(), ".", [&](int e) { return edges_[e].name; });
}

// ---- BoundaryGba ---------------------------------------------------------------

namespace {

struct BAtom {
  GraphPath path;
  bool terminal = false;
  auto operator<=>(const BAtom&) const = default;
};

struct BoundaryValue : GbaValue {
  int depth = 0;
  std::vector<BAtom> atoms;  // sorted, unique
};

const BoundaryValue& as_boundary(const GbaValue& v) { return static_cast<const BoundaryValue&>(v); }

}  // namespace

std::shared_ptr<const BoundaryGba> BoundaryGba::make(DirectedGraph graph) {
  return std::shared_ptr<const BoundaryGba>(new BoundaryGba(std::move(graph)));
}

GbaElement BoundaryGba::cylinder(const GraphPath& p) const {
  if (!graph_.valid_path(p)) throw std::invalid_argument("invalid path " + graph_.path_string(p));
  auto v = std::make_shared<BoundaryValue>();
  v->depth = p.length();
  v->atoms = {BAtom{p, graph_.is_sink(graph_.range_of(p))}};
  return wrap(v);
}

namespace {

void split_atom(const DirectedGraph& g, const BAtom& a, int target, std::vector<BAtom>& out) {
  if (a.terminal || a.path.length() >= target) {
    out.push_back(a);
    return;
  }
  for (int e : g.out_edges(g.range_of(a.path))) {
    BAtom child;
    child.path = a.path;
    child.path.edges.push_back(e);
    child.terminal = g.is_sink(g.edge(e).dst);
    split_atom(g, child, target, out);
  }
}

std::shared_ptr<BoundaryValue> expand_value(const DirectedGraph& g, const BoundaryValue& v, int depth) {
  auto out = std::make_shared<BoundaryValue>();
  out->depth = std::max(v.depth, depth);
  for (const auto& a : v.atoms) split_atom(g, a, out->depth, out->atoms);
  std::sort(out->atoms.begin(), out->atoms.end());
  return out;
}

}  // namespace

GbaElement BoundaryGba::expand(const GbaElement& x, int depth) const {
  check_mine(x);
  return wrap(expand_value(graph_, as_boundary(x.value()), depth));
}

int BoundaryGba::depth_of(const GbaElement& x) const {
  check_mine(x);
  return as_boundary(x.value()).depth;
}

int BoundaryGba::atom_count(const GbaElement& x) const {
  check_mine(x);
  return static_cast<int>(as_boundary(x.value()).atoms.size());
}

GbaElement BoundaryGba::replace_prefix(const GbaElement& x, const GraphPath& from,
                                       const GraphPath& to) const {
  check_mine(x);
  auto expanded = expand_value(graph_, as_boundary(x.value()), from.length());
  auto out = std::make_shared<BoundaryValue>();
  out->depth = expanded->depth - from.length() + to.length();
  for (const auto& a : expanded->atoms) {
    if (a.path.vertex != from.vertex ||
        !std::equal(from.edges.begin(), from.edges.end(), a.path.edges.begin(),
                    a.path.edges.begin() + std::min(a.path.edges.size(), from.edges.size())) ||
        a.path.length() < from.length())
      throw std::domain_error("atom outside the cylinder of the replaced prefix");
    BAtom b;
    b.path.vertex = to.vertex;
    b.path.edges = to.edges;
    b.path.edges.insert(b.path.edges.end(), a.path.edges.begin() + from.length(), a.path.edges.end());
    b.terminal = a.terminal;
    out->atoms.push_back(b);
  }
  std::sort(out->atoms.begin(), out->atoms.end());
  return wrap(out);
}

std::string BoundaryGba::describe() const { return "boundary-path compact opens"; }

GbaElement BoundaryGba::top() const {
  GbaElement t = bottom();
  for (int v = 0; v < graph_.vertex_count(); ++v) t = t.join(cylinder(graph_.vertex_path(v)));
  return t;
}

std::vector<GbaElement> BoundaryGba::pieces(const GbaElement& x) const {
  check_mine(x);
  const auto& v = as_boundary(x.value());
  std::vector<GbaElement> out;
  for (const auto& a : v.atoms) {
    auto p = std::make_shared<BoundaryValue>();
    p->depth = v.depth;
    p->atoms = {a};
    out.push_back(wrap(p));
  }
  return out;
}

GbaElement BoundaryGba::refined(const GbaElement& x, int level) const { return expand(x, level); }

GbaElement BoundaryGba::sample_below(const GbaElement& bound, Rng& rng) const {
  check_mine(bound);
  auto e = expand_value(graph_, as_boundary(bound.value()), as_boundary(bound.value()).depth +
                                                                static_cast<int>(rng.below(3)));
  auto out = std::make_shared<BoundaryValue>();
  out->depth = e->depth;
  for (const auto& a : e->atoms)
    if (rng.flip()) out->atoms.push_back(a);
  return wrap(out);
}

std::string BoundaryGba::to_string(const GbaElement& x) const {
  check_mine(x);
  const auto& v = as_boundary(x.value());
  return "{" + join_map(v.atoms.begin(), v.atoms.end(), ",", [&](const BAtom& a) {
           return (a.terminal ? "T(" : "C(") + graph_.path_string(a.path) + ")";
         }) + "}";
}

GbaSpace::ValP BoundaryGba::v_bottom() const { return std::make_shared<BoundaryValue>(); }

GbaSpace::ValP BoundaryGba::v_meet(const GbaValue& a, const GbaValue& b) const {
  const auto &x = as_boundary(a), &y = as_boundary(b);
  int d = std::max(x.depth, y.depth);
  auto ex = expand_value(graph_, x, d), ey = expand_value(graph_, y, d);
  auto out = std::make_shared<BoundaryValue>();
  out->depth = d;
  std::set_intersection(ex->atoms.begin(), ex->atoms.end(), ey->atoms.begin(), ey->atoms.end(),
                        std::back_inserter(out->atoms));
  return out;
}

GbaSpace::ValP BoundaryGba::v_join(const GbaValue& a, const GbaValue& b) const {
  const auto &x = as_boundary(a), &y = as_boundary(b);
  int d = std::max(x.depth, y.depth);
  auto ex = expand_value(graph_, x, d), ey = expand_value(graph_, y, d);
  auto out = std::make_shared<BoundaryValue>();
  out->depth = d;
  std::set_union(ex->atoms.begin(), ex->atoms.end(), ey->atoms.begin(), ey->atoms.end(),
                 std::back_inserter(out->atoms));
  return out;
}

GbaSpace::ValP BoundaryGba::v_diff(const GbaValue& a, const GbaValue& b) const {
  const auto &x = as_boundary(a), &y = as_boundary(b);
  int d = std::max(x.depth, y.depth);
  auto ex = expand_value(graph_, x, d), ey = expand_value(graph_, y, d);
  auto out = std::make_shared<BoundaryValue>();
  out->depth = d;
  std::set_difference(ex->atoms.begin(), ex->atoms.end(), ey->atoms.begin(), ey->atoms.end(),
                      std::back_inserter(out->atoms));
  return out;
}

int BoundaryGba::v_compare(const GbaValue& a, const GbaValue& b) const {
  const auto &x = as_boundary(a), &y = as_boundary(b);
  int d = std::max(x.depth, y.depth);
  auto ex = expand_value(graph_, x, d), ey = expand_value(graph_, y, d);
  if (ex->atoms == ey->atoms) return 0;
  return ex->atoms < ey->atoms ? -1 : 1;
}

// ---- GraphSemigroup ---------------------------------------------------------------

GraphSemigroup::GraphSemigroup(DirectedGraph graph) : graph_(std::move(graph)) {
  std::vector<std::string> gens;
  for (int e = 0; e < graph_.edge_count(); ++e) gens.push_back(graph_.edge(e).name);
  free_group_ = Group::free_group(std::move(gens));
}

SgElem GraphSemigroup::pair(const GraphPath& p, const GraphPath& q) const {
  if (!graph_.valid_path(p) || !graph_.valid_path(q) || graph_.range_of(p) != graph_.range_of(q))
    throw std::invalid_argument("not a composable path pair");
  return PathPair{p, q};
}

std::string GraphSemigroup::describe() const {
  return "graph inverse semigroup on " + std::to_string(graph_.vertex_count()) + " vertices, " +
         std::to_string(graph_.edge_count()) + " edges";
}

namespace {

// b = a . rest?
bool is_prefix(const GraphPath& a, const GraphPath& b) {
  return a.vertex == b.vertex && a.edges.size() <= b.edges.size() &&
         std::equal(a.edges.begin(), a.edges.end(), b.edges.begin());
}

GraphPath concat(const DirectedGraph& g, const GraphPath& a, const GraphPath& b_suffix_of,
                 std::size_t from) {
  GraphPath out = a;
  out.edges.insert(out.edges.end(), b_suffix_of.edges.begin() + from, b_suffix_of.edges.end());
  (void)g;
  return out;
}

}  // namespace

SgElem GraphSemigroup::multiply(const SgElem& a, const SgElem& b) const {
  if (is_zero(a) || is_zero(b)) return sg_zero();
  const auto& x = std::get<PathPair>(a);
  const auto& y = std::get<PathPair>(b);
  if (x.q == y.p) return PathPair{x.p, y.q};
  if (is_prefix(x.q, y.p))  // y.p = x.q . rest
    return PathPair{concat(graph_, x.p, y.p, x.q.edges.size()), y.q};
  if (is_prefix(y.p, x.q))  // x.q = y.p . rest
    return PathPair{x.p, concat(graph_, y.q, x.q, y.p.edges.size())};
  return sg_zero();
}

SgElem GraphSemigroup::star(const SgElem& a) const {
  if (is_zero(a)) return sg_zero();
  const auto& x = std::get<PathPair>(a);
  return PathPair{x.q, x.p};
}

std::vector<SgElem> GraphSemigroup::elements(int depth) const {
  std::vector<SgElem> out;
  auto paths = graph_.paths_up_to(depth);
  for (const auto& p : paths)
    for (const auto& q : paths)
      if (graph_.range_of(p) == graph_.range_of(q)) out.push_back(PathPair{p, q});
  std::sort(out.begin(), out.end());
  return out;
}

std::string GraphSemigroup::to_string(const SgElem& x) const {
  if (is_zero(x)) return "0";
  const auto& pp = std::get<PathPair>(x);
  return "(" + graph_.path_string(pp.p) + "," + graph_.path_string(pp.q) + ")";
}

GroupWord sg_grading_word(const Group&, const PathPair& a) {
  std::vector<int> raw;
  for (int e : a.p.edges) raw.push_back(e + 1);
  for (auto it = a.q.edges.rbegin(); it != a.q.edges.rend(); ++it) raw.push_back(-(*it + 1));
  return reduce_word(raw);
}

Grading GraphSemigroup::standard_grading() const {
  auto G = free_group_;
  return {G, [G](const SgElem& x) {
            if (is_zero(x)) throw std::domain_error("grading of zero");
            return sg_grading_word(*G, std::get<PathPair>(x));
          }};
}

GraphSemigroup::WordShape GraphSemigroup::parse_word(const GroupWord& g) const {
  WordShape out;
  std::vector<int> pos, neg;
  bool seen_negative = false;
  for (int s : g.syms) {
    if (s > 0) {
      if (seen_negative) return out;  // not of shape p1 p2^{-1}
      pos.push_back(s - 1);
    } else {
      seen_negative = true;
      neg.push_back(-s - 1);
    }
  }
  std::reverse(neg.begin(), neg.end());
  std::optional<GraphPath> p1, p2;
  if (pos.empty() && neg.empty()) {
    return out;  // identity handled separately
  }
  if (!pos.empty()) {
    p1 = graph_.path_from_edges(pos);
    if (!p1) return out;
  }
  if (!neg.empty()) {
    p2 = graph_.path_from_edges(neg);
    if (!p2) return out;
  }
  if (p1 && p2 && graph_.range_of(*p1) != graph_.range_of(*p2)) return out;
  if (!p1) p1 = graph_.vertex_path(graph_.range_of(*p2));
  if (!p2) p2 = graph_.vertex_path(graph_.range_of(*p1));
  out.realizable = true;
  out.range_prefix = *p1;
  out.domain_prefix = *p2;
  return out;
}

bool GraphSemigroup::eg_contains(const GroupWord& g, const SgElem& x) const {
  if (is_zero(x)) return true;
  if (!std::holds_alternative<PathPair>(x)) return false;
  const auto& pp = std::get<PathPair>(x);
  if (pp.p != pp.q) return false;
  if (g.is_identity()) return true;
  auto shape = parse_word(g);
  return shape.realizable && is_prefix(shape.range_prefix, pp.p);
}

std::vector<SgElem> GraphSemigroup::eg_enumerate(const GroupWord& g, int depth) const {
  std::vector<SgElem> out;
  for (const auto& p : graph_.paths_up_to(depth)) {
    SgElem x = PathPair{p, p};
    if (eg_contains(g, x)) out.push_back(x);
  }
  return out;
}

SgElem GraphSemigroup::phi_closed_form(const GroupWord& g, const SgElem& x) const {
  if (is_zero(x)) return sg_zero();
  auto shape = parse_word(g);
  if (g.is_identity()) return x;
  if (!shape.realizable) throw std::domain_error("word outside the graded shape");
  const auto& pp = std::get<PathPair>(x);
  if (!is_prefix(shape.domain_prefix, pp.p))
    throw std::domain_error("idempotent outside E_{g^-1}");
  GraphPath image = concat(graph_, shape.range_prefix, pp.p, shape.domain_prefix.edges.size());
  return PathPair{image, image};
}

ActionContext GraphSemigroup::make_action(int word_bound) const {
  ActionContext ctx;
  auto self = std::static_pointer_cast<const GraphSemigroup>(shared_from_this());
  ctx.semigroup = self;
  ctx.grading = standard_grading();
  auto space = BoundaryGba::make(graph_);
  auto G = free_group_;

  PartialActionBundle::Provider provider = [self, space, G](const GroupWord& g) {
    ActionEntry ent;
    auto shape = self->parse_word(g);
    if (!shape.realizable) {
      ent.ideal = IdealHandle::trivial(space);
      auto bot = space->bottom();
      ent.iso.forward = [bot](const GbaElement&) { return bot; };
      ent.iso.backward = ent.iso.forward;
      return ent;
    }
    ent.ideal = IdealHandle::below({space->cylinder(shape.range_prefix)});
    GraphPath from = shape.domain_prefix, to = shape.range_prefix;
    ent.iso.forward = [space, from, to](const GbaElement& x) {
      return space->replace_prefix(x, from, to);
    };
    ent.iso.backward = [space, from, to](const GbaElement& x) {
      return space->replace_prefix(x, to, from);
    };
    return ent;
  };

  PartialActionBundle::WordEnumerator words = [self, G](int bound) {
    std::set<GroupWord> out;
    auto paths = self->graph().paths_up_to(bound);
    for (const auto& p : paths)
      for (const auto& q : paths) {
        if (self->graph().range_of(p) != self->graph().range_of(q)) continue;
        auto w = sg_grading_word(*G, PathPair{p, q});
        if (w.length() <= bound) out.insert(w);
      }
    return std::vector<GroupWord>(out.begin(), out.end());
  };

  ctx.bundle = std::make_shared<PartialActionBundle>(G, space, std::move(provider), std::move(words));
  ctx.v_of = [space](const SgElem& x) {
    if (is_zero(x)) return space->bottom();
    return space->cylinder(std::get<PathPair>(x).p);
  };
  ctx.in_eg = [self](const SgElem& x, const GroupWord& g) { return self->eg_contains(g, x); };
  ctx.eg_enumerate = [self](const GroupWord& g, int depth) { return self->eg_enumerate(g, depth); };
  (void)word_bound;
  return ctx;
}

// ---- Leavitt generator map -----------------------------------------------------

LeavittMap leavitt_map(std::shared_ptr<const GraphSemigroup> S, const Ring& ring, int word_bound) {
  LeavittMap out;
  out.semigroup = S;
  auto ctx = S->make_action(word_bound);
  out.algebra = std::make_shared<LrAlgebra>(ring, ctx);
  const auto& g = S->graph();
  const auto& alg = *out.algebra;
  auto G = ctx.grading.group;

  for (int v = 0; v < g.vertex_count(); ++v) {
    SgElem idem = PathPair{g.vertex_path(v), g.vertex_path(v)};
    out.vertex_units.emplace(g.vertex_name(v), alg.xdelta(idem, G->identity()));
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    GraphPath pe{g.edge(e).src, {e}};
    SgElem ee = PathPair{pe, pe};
    SgElem rr = PathPair{g.vertex_path(g.edge(e).dst), g.vertex_path(g.edge(e).dst)};
    out.edge_gens.emplace(g.edge(e).name, alg.xdelta(ee, G->generator(e)));
    out.edge_stars.emplace(g.edge(e).name, alg.xdelta(rr, G->generator(e, true)));
  }

  VerifyReport& rep = out.relations;
  rep.scope_bound = word_bound;

  {
    CheckResult c{"vertex idempotents orthogonal and idempotent", true, ""};
    for (int v = 0; v < g.vertex_count(); ++v)
      for (int w = 0; w < g.vertex_count(); ++w) {
        auto pv = out.vertex_units.at(g.vertex_name(v));
        auto pw = out.vertex_units.at(g.vertex_name(w));
        auto prod = skew_mul(pv, pw);
        bool ok = (v == w) ? (prod == pv) : prod.is_zero();
        if (!ok) {
          c.pass = false;
          c.witness = g.vertex_name(v) + "," + g.vertex_name(w);
        }
      }
    rep.checks.push_back(c);
  }

  {
    CheckResult c{"s_e* s_f = delta_{ef} p_{r(e)}", true, ""};
    for (int e = 0; e < g.edge_count(); ++e)
      for (int f = 0; f < g.edge_count(); ++f) {
        auto prod = skew_mul(out.edge_stars.at(g.edge(e).name), out.edge_gens.at(g.edge(f).name));
        bool ok = (e == f) ? (prod == out.vertex_units.at(g.vertex_name(g.edge(e).dst)))
                           : prod.is_zero();
        if (!ok) {
          c.pass = false;
          c.witness = g.edge(e).name + "," + g.edge(f).name;
        }
      }
    rep.checks.push_back(c);
  }

  {
    CheckResult c{"p_{s(e)} s_e = s_e = s_e p_{r(e)}", true, ""};
    for (int e = 0; e < g.edge_count(); ++e) {
      const auto& se = out.edge_gens.at(g.edge(e).name);
      const auto& sstar = out.edge_stars.at(g.edge(e).name);
      if (skew_mul(out.vertex_units.at(g.vertex_name(g.edge(e).src)), se) != se ||
          skew_mul(se, out.vertex_units.at(g.vertex_name(g.edge(e).dst))) != se ||
          skew_mul(skew_mul(se, sstar), se) != se) {
        c.pass = false;
        c.witness = g.edge(e).name;
      }
    }
    rep.checks.push_back(c);
  }

  {
    CheckResult c{"p_v = sum of s_e s_e* over out-edges at regular vertices", true, ""};
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (g.is_sink(v)) continue;
      SkewElement sum = alg.zero();
      for (int e : g.out_edges(v)) {
        const auto& name = g.edge(e).name;
        sum = skew_add(sum, skew_mul(out.edge_gens.at(name), out.edge_stars.at(name)));
      }
      if (sum != out.vertex_units.at(g.vertex_name(v))) {
        c.pass = false;
        c.witness = g.vertex_name(v);
      }
    }
    rep.checks.push_back(c);
  }

  return out;
}

}  // namespace skewgr
