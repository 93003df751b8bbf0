#include "skewgr/labelled.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace skewgr {

// ---- LabelledGraph ------------------------------------------------------------

LabelledGraph::LabelledGraph(std::vector<std::string> vertex_names, std::vector<std::string> alphabet,
                             std::vector<Edge> edges)
    : vertex_names_(std::move(vertex_names)), alphabet_(std::move(alphabet)), edges_(std::move(edges)) {
  for (const auto& e : edges_) {
    if (e.src < 0 || e.src >= vertex_count() || e.dst < 0 || e.dst >= vertex_count() || e.label < 0 ||
        e.label >= alphabet_size())
      throw std::invalid_argument("labelled edge out of range");
  }
}

int LabelledGraph::vertex_index(const std::string& name) const {
  auto it = std::find(vertex_names_.begin(), vertex_names_.end(), name);
  if (it == vertex_names_.end()) throw std::invalid_argument("unknown vertex '" + name + "'");
  return static_cast<int>(it - vertex_names_.begin());
}

int LabelledGraph::letter_index(const std::string& name) const {
  auto it = std::find(alphabet_.begin(), alphabet_.end(), name);
  if (it == alphabet_.end()) throw std::invalid_argument("unknown label '" + name + "'");
  return static_cast<int>(it - alphabet_.begin());
}

bool LabelledGraph::is_sink(int v) const {
  for (const auto& e : edges_)
    if (e.src == v) return false;
  return true;
}

Bitset LabelledGraph::sinks() const {
  Bitset out(vertex_count());
  for (int v = 0; v < vertex_count(); ++v)
    if (is_sink(v)) out.set(v);
  return out;
}

Bitset LabelledGraph::relative_range(const Bitset& A, int letter) const {
  Bitset out(vertex_count());
  for (const auto& e : edges_)
    if (e.label == letter && A.test(e.src)) out.set(e.dst);
  return out;
}

Bitset LabelledGraph::relative_range(const Bitset& A, const std::vector<int>& alpha) const {
  Bitset out = A;
  for (int a : alpha) out = relative_range(out, a);
  return out;
}

Bitset LabelledGraph::range_of(const std::vector<int>& alpha) const {
  return relative_range(Bitset::full(vertex_count()), alpha);
}

std::vector<int> LabelledGraph::delta_set(const Bitset& A) const {
  std::vector<int> out;
  for (int a = 0; a < alphabet_size(); ++a)
    if (!relative_range(A, a).empty()) out.push_back(a);
  return out;
}

std::vector<std::vector<int>> LabelledGraph::label_paths_up_to(int bound) const {
  std::vector<std::vector<int>> out = {{}};
  std::vector<std::vector<int>> frontier = {{}};
  for (int len = 0; len < bound; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& alpha : frontier)
      for (int a = 0; a < alphabet_size(); ++a) {
        auto beta = alpha;
        beta.push_back(a);
        if (realizable(beta)) next.push_back(beta);
      }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string LabelledGraph::label_string(const std::vector<int>& alpha) const {
  if (alpha.empty()) return "()";
  return join_map(alpha.begin(), alpha.end(), ".", [&](int a) { return alphabet_[a]; });
}

std::string LabelledGraph::set_string(const Bitset& A) const {
  auto m = A.members();
  return "{" + join_map(m.begin(), m.end(), ",", [&](int v) { return vertex_names_[v]; }) + "}";
}

// ---- LabelledFamily -----------------------------------------------------------

LabelledFamily LabelledFamily::closure(const LabelledGraph& g, std::vector<Bitset> seeds) {
  std::set<Bitset> family(seeds.begin(), seeds.end());
  family.insert(Bitset(g.vertex_count()));
  for (int a = 0; a < g.alphabet_size(); ++a) {
    auto r = g.relative_range(Bitset::full(g.vertex_count()), a);
    if (!r.empty()) family.insert(r);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Bitset> snap(family.begin(), family.end());
    for (const auto& A : snap) {
      for (const auto& B : snap) {
        grew |= family.insert(A | B).second;
        grew |= family.insert(A & B).second;
        grew |= family.insert(A.minus(B)).second;
      }
      for (int a = 0; a < g.alphabet_size(); ++a) grew |= family.insert(g.relative_range(A, a)).second;
    }
  }
  LabelledFamily out;
  out.sets_.assign(family.begin(), family.end());
  return out;
}

LabelledFamily LabelledFamily::powerset(const LabelledGraph& g) {
  LabelledFamily out;
  const int n = g.vertex_count();
  if (n > 16) throw std::domain_error("powerset family too large");
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    Bitset b(n);
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) b.set(i);
    out.sets_.push_back(b);
  }
  std::sort(out.sets_.begin(), out.sets_.end());
  return out;
}

bool LabelledFamily::contains(const Bitset& A) const {
  return std::binary_search(sets_.begin(), sets_.end(), A);
}

std::vector<Bitset> LabelledFamily::atoms_below(const Bitset& X) const {
  std::vector<Bitset> below;
  for (const auto& A : sets_)
    if (!A.empty() && A.subset_of(X)) below.push_back(A);
  std::vector<Bitset> out;
  for (const auto& A : below) {
    bool minimal = true;
    for (const auto& B : below)
      if (B != A && B.subset_of(A)) minimal = false;
    if (minimal) out.push_back(A);
  }
  return out;
}

// ---- validation -----------------------------------------------------------------

VerifyReport validate_labelled_space(const LabelledSpace& space) {
  VerifyReport rep;
  const auto& g = space.graph;
  const auto& fam = space.family;

  {
    CheckResult c{"family contains every r(alpha)", true, ""};
    std::set<Bitset> ranges;
    std::vector<Bitset> frontier;
    for (int a = 0; a < g.alphabet_size(); ++a) {
      auto r = g.range_of({a});
      if (!r.empty() && ranges.insert(r).second) frontier.push_back(r);
    }
    while (!frontier.empty()) {
      std::vector<Bitset> next;
      for (const auto& X : frontier)
        for (int a = 0; a < g.alphabet_size(); ++a) {
          auto r = g.relative_range(X, a);
          if (!r.empty() && ranges.insert(r).second) next.push_back(r);
        }
      frontier = std::move(next);
    }
    for (const auto& r : ranges)
      if (!fam.contains(r)) {
        c.pass = false;
        c.witness = g.set_string(r);
      }
    rep.checks.push_back(c);
  }

  {
    CheckResult c{"family closed under union/intersection/complement and r(.,a)", true, ""};
    for (const auto& A : fam.sets()) {
      for (const auto& B : fam.sets()) {
        if (!fam.contains(A | B) || !fam.contains(A & B) || !fam.contains(A.minus(B))) {
          c.pass = false;
          c.witness = g.set_string(A) + "," + g.set_string(B);
        }
      }
      for (int a = 0; a < g.alphabet_size(); ++a)
        if (!fam.contains(g.relative_range(A, a))) {
          c.pass = false;
          c.witness = "r(" + g.set_string(A) + "," + g.letter(a) + ")";
        }
    }
    rep.checks.push_back(c);
  }

  {
    CheckResult c{"weakly left-resolving", true, ""};
    for (const auto& A : fam.sets())
      for (const auto& B : fam.sets())
        for (int a = 0; a < g.alphabet_size(); ++a)
          if (g.relative_range(A & B, a) != (g.relative_range(A, a) & g.relative_range(B, a))) {
            c.pass = false;
            if (c.witness.empty())
              c.witness = "(" + g.set_string(A) + "," + g.set_string(B) + "," + g.letter(a) + ")";
          }
    rep.checks.push_back(c);
  }

  return rep;
}

bool is_regular(const LabelledSpace& space, const Bitset& A) {
  if (A.empty()) return false;
  if (space.graph.delta_set(A).empty()) return false;
  Bitset trap = A & space.graph.sinks();
  for (const auto& B : space.family.sets())
    if (!B.empty() && B.subset_of(trap)) return false;
  return true;
}

// ---- LabelledGba ------------------------------------------------------------------

namespace {

struct LAtom {
  std::vector<int> alpha;
  Bitset part;
  bool leftover = false;
  auto operator<=>(const LAtom&) const = default;
};

struct LabelledValue : GbaValue {
  int depth = 0;
  std::vector<LAtom> atoms;  // sorted, unique
};

const LabelledValue& as_labelled(const GbaValue& v) { return static_cast<const LabelledValue&>(v); }

}  // namespace

std::shared_ptr<const LabelledGba> LabelledGba::make(LabelledSpace space) {
  return std::shared_ptr<const LabelledGba>(new LabelledGba(std::move(space)));
}

namespace {

void expand_set(const LabelledSpace& sp, const std::vector<int>& alpha, const Bitset& A, int target,
                std::vector<LAtom>& out) {
  for (const auto& q : sp.family.atoms_below(A)) {
    auto delta = sp.graph.delta_set(q);
    if (delta.empty()) {
      // A sink atom pins down a single terminating filter. Its sink witness
      // must be the atom itself; anything else breaks the family closure.
      out.push_back({alpha, q, true});
      continue;
    }
    if (!is_regular(sp, q))
      throw std::logic_error("emitting atom classified singular; family closure is broken");
    if (static_cast<int>(alpha.size()) >= target) {
      out.push_back({alpha, q, false});
      continue;
    }
    for (int a : delta) {
      auto beta = alpha;
      beta.push_back(a);
      expand_set(sp, beta, sp.graph.relative_range(q, a), target, out);
    }
  }
}

std::shared_ptr<LabelledValue> expand_value(const LabelledSpace& sp, const LabelledValue& v,
                                            int depth) {
  auto out = std::make_shared<LabelledValue>();
  out->depth = std::max(v.depth, depth);
  for (const auto& a : v.atoms) {
    if (a.leftover)
      out->atoms.push_back(a);
    else
      expand_set(sp, a.alpha, a.part, out->depth, out->atoms);
  }
  std::sort(out->atoms.begin(), out->atoms.end());
  return out;
}

// Fully compressed form: complete sibling blocks merged back into their
// parent cylinder, deepest level first. Blocks of distinct parents are
// disjoint (weak left-resolving), so the result is a unique normal form;
// comparing these keys gives a depth-independent total order.
std::vector<LAtom> compress_atoms(const LabelledSpace& sp, std::vector<LAtom> atoms) {
  std::set<LAtom> pool(atoms.begin(), atoms.end());
  bool merged = true;
  while (merged) {
    merged = false;
    std::set<std::pair<std::vector<int>, Bitset>> tried;
    std::vector<LAtom> snap(pool.begin(), pool.end());
    for (const auto& a : snap) {
      if (a.alpha.empty() || !pool.count(a)) continue;
      std::vector<int> parent_alpha(a.alpha.begin(), a.alpha.end() - 1);
      for (const auto& p : sp.family.atoms_below(sp.graph.range_of(parent_alpha))) {
        auto delta = sp.graph.delta_set(p);
        if (delta.empty()) continue;
        if (!tried.insert({parent_alpha, p}).second) continue;
        std::vector<LAtom> children;
        bool all = true;
        for (int l : delta) {
          auto beta = parent_alpha;
          beta.push_back(l);
          for (const auto& q : sp.family.atoms_below(sp.graph.relative_range(p, l))) {
            LAtom c{beta, q, sp.graph.delta_set(q).empty()};
            if (!pool.count(c)) {
              all = false;
              break;
            }
            children.push_back(c);
          }
          if (!all) break;
        }
        if (all && !children.empty()) {
          for (const auto& c : children) pool.erase(c);
          pool.insert(LAtom{parent_alpha, p, false});
          merged = true;
        }
      }
    }
  }
  return {pool.begin(), pool.end()};
}

}  // namespace

GbaElement LabelledGba::cylinder(const std::vector<int>& alpha, const Bitset& A) const {
  if (!A.empty() && !space_.family.contains(A))
    throw std::invalid_argument("set outside the accommodating family");
  if (!A.subset_of(space_.graph.relative_range(Bitset::full(space_.graph.vertex_count()), alpha)) &&
      !A.empty())
    throw std::invalid_argument("set outside B_alpha");
  auto v = std::make_shared<LabelledValue>();
  v->depth = static_cast<int>(alpha.size());
  if (!A.empty()) expand_set(space_, alpha, A, v->depth, v->atoms);
  std::sort(v->atoms.begin(), v->atoms.end());
  return wrap(v);
}

GbaElement LabelledGba::expand(const GbaElement& x, int depth) const {
  check_mine(x);
  return wrap(expand_value(space_, as_labelled(x.value()), depth));
}

int LabelledGba::depth_of(const GbaElement& x) const {
  check_mine(x);
  return as_labelled(x.value()).depth;
}

int LabelledGba::atom_count(const GbaElement& x) const {
  check_mine(x);
  return static_cast<int>(as_labelled(x.value()).atoms.size());
}

int LabelledGba::leftover_count(const GbaElement& x) const {
  check_mine(x);
  int n = 0;
  for (const auto& a : as_labelled(x.value()).atoms)
    if (a.leftover) ++n;
  return n;
}

GbaElement LabelledGba::replace_prefix(const GbaElement& x, const std::vector<int>& from,
                                       const std::vector<int>& to) const {
  check_mine(x);
  auto expanded = expand_value(space_, as_labelled(x.value()), static_cast<int>(from.size()));
  auto out = std::make_shared<LabelledValue>();
  out->depth = expanded->depth - static_cast<int>(from.size()) + static_cast<int>(to.size());
  for (const auto& a : expanded->atoms) {
    if (a.alpha.size() < from.size() ||
        !std::equal(from.begin(), from.end(), a.alpha.begin()))
      throw std::domain_error("atom outside the cylinder of the replaced prefix");
    LAtom b;
    b.alpha = to;
    b.alpha.insert(b.alpha.end(), a.alpha.begin() + from.size(), a.alpha.end());
    b.part = a.part;
    b.leftover = a.leftover;
    out->atoms.push_back(b);
  }
  std::sort(out->atoms.begin(), out->atoms.end());
  return wrap(out);
}

std::string LabelledGba::describe() const { return "labelled tight-filter compact opens"; }

GbaElement LabelledGba::top() const {
  // Every tight filter contains an omega-level idempotent or some
  // (a, r(a), a), so the join below is the whole space.
  const auto& g = space_.graph;
  Bitset m(g.vertex_count());
  for (const auto& A : space_.family.sets()) m = m | A;
  GbaElement t = cylinder({}, m);
  for (int a = 0; a < g.alphabet_size(); ++a) {
    auto r = g.range_of({a});
    if (!r.empty()) t = t.join(cylinder({a}, r));
  }
  return t;
}

std::vector<GbaElement> LabelledGba::pieces(const GbaElement& x) const {
  check_mine(x);
  const auto& v = as_labelled(x.value());
  std::vector<GbaElement> out;
  for (const auto& a : v.atoms) {
    auto p = std::make_shared<LabelledValue>();
    p->depth = v.depth;
    p->atoms = {a};
    out.push_back(wrap(p));
  }
  return out;
}

GbaElement LabelledGba::refined(const GbaElement& x, int level) const { return expand(x, level); }

GbaElement LabelledGba::sample_below(const GbaElement& bound, Rng& rng) const {
  check_mine(bound);
  auto e = expand_value(space_, as_labelled(bound.value()),
                        as_labelled(bound.value()).depth + static_cast<int>(rng.below(3)));
  auto out = std::make_shared<LabelledValue>();
  out->depth = e->depth;
  for (const auto& a : e->atoms)
    if (rng.flip()) out->atoms.push_back(a);
  return wrap(out);
}

std::string LabelledGba::to_string(const GbaElement& x) const {
  check_mine(x);
  const auto& v = as_labelled(x.value());
  return "{" + join_map(v.atoms.begin(), v.atoms.end(), ",", [&](const LAtom& a) {
           return std::string(a.leftover ? "W(" : "C(") + space_.graph.label_string(a.alpha) + "|" +
                  space_.graph.set_string(a.part) + ")";
         }) + "}";
}

GbaSpace::ValP LabelledGba::v_bottom() const { return std::make_shared<LabelledValue>(); }

GbaSpace::ValP LabelledGba::v_meet(const GbaValue& a, const GbaValue& b) const {
  const auto &x = as_labelled(a), &y = as_labelled(b);
  int d = std::max(x.depth, y.depth);
  auto ex = expand_value(space_, x, d), ey = expand_value(space_, y, d);
  auto out = std::make_shared<LabelledValue>();
  out->depth = d;
  std::set_intersection(ex->atoms.begin(), ex->atoms.end(), ey->atoms.begin(), ey->atoms.end(),
                        std::back_inserter(out->atoms));
  return out;
}

GbaSpace::ValP LabelledGba::v_join(const GbaValue& a, const GbaValue& b) const {
  const auto &x = as_labelled(a), &y = as_labelled(b);
  int d = std::max(x.depth, y.depth);
  auto ex = expand_value(space_, x, d), ey = expand_value(space_, y, d);
  auto out = std::make_shared<LabelledValue>();
  out->depth = d;
  std::set_union(ex->atoms.begin(), ex->atoms.end(), ey->atoms.begin(), ey->atoms.end(),
                 std::back_inserter(out->atoms));
  return out;
}

GbaSpace::ValP LabelledGba::v_diff(const GbaValue& a, const GbaValue& b) const {
  const auto &x = as_labelled(a), &y = as_labelled(b);
  int d = std::max(x.depth, y.depth);
  auto ex = expand_value(space_, x, d), ey = expand_value(space_, y, d);
  auto out = std::make_shared<LabelledValue>();
  out->depth = d;
  std::set_difference(ex->atoms.begin(), ex->atoms.end(), ey->atoms.begin(), ey->atoms.end(),
                      std::back_inserter(out->atoms));
  return out;
}

int LabelledGba::v_compare(const GbaValue& a, const GbaValue& b) const {
  auto cx = compress_atoms(space_, as_labelled(a).atoms);
  auto cy = compress_atoms(space_, as_labelled(b).atoms);
  if (cx == cy) return 0;
  return cx < cy ? -1 : 1;
}

// ---- LabelledSemigroup ---------------------------------------------------------------

LabelledSemigroup::LabelledSemigroup(LabelledSpace space) : space_(std::move(space)) {
  std::vector<std::string> gens;
  for (int a = 0; a < space_.graph.alphabet_size(); ++a) gens.push_back(space_.graph.letter(a));
  free_group_ = Group::free_group(std::move(gens));
}

SgElem LabelledSemigroup::triple(const std::vector<int>& alpha, const Bitset& A,
                                 const std::vector<int>& beta) const {
  if (A.empty()) throw std::invalid_argument("labelled triple requires a nonempty set");
  if (!space_.family.contains(A)) throw std::invalid_argument("set outside the accommodating family");
  if (!A.subset_of(space_.graph.range_of(alpha)) || !A.subset_of(space_.graph.range_of(beta)))
    throw std::invalid_argument("set outside B_alpha ^ B_beta");
  return LabelledTriple{alpha, beta, A};
}

std::string LabelledSemigroup::describe() const {
  return "labelled-space inverse semigroup over " + std::to_string(space_.graph.alphabet_size()) +
         " letters";
}

namespace {

bool vec_prefix(const std::vector<int>& a, const std::vector<int>& b) {
  return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
}

}  // namespace

SgElem LabelledSemigroup::multiply(const SgElem& a, const SgElem& b) const {
  if (is_zero(a) || is_zero(b)) return sg_zero();
  const auto& x = std::get<LabelledTriple>(a);
  const auto& y = std::get<LabelledTriple>(b);
  if (x.beta == y.alpha) {
    Bitset m = x.set & y.set;
    if (m.empty()) return sg_zero();
    return LabelledTriple{x.alpha, y.beta, m};
  }
  if (vec_prefix(x.beta, y.alpha)) {
    std::vector<int> gamma(y.alpha.begin() + x.beta.size(), y.alpha.end());
    Bitset m = space_.graph.relative_range(x.set, gamma) & y.set;
    if (m.empty()) return sg_zero();
    auto alpha = x.alpha;
    alpha.insert(alpha.end(), gamma.begin(), gamma.end());
    return LabelledTriple{alpha, y.beta, m};
  }
  if (vec_prefix(y.alpha, x.beta)) {
    std::vector<int> betap(x.beta.begin() + y.alpha.size(), x.beta.end());
    Bitset m = x.set & space_.graph.relative_range(y.set, betap);
    if (m.empty()) return sg_zero();
    auto delta = y.beta;
    delta.insert(delta.end(), betap.begin(), betap.end());
    return LabelledTriple{x.alpha, delta, m};
  }
  return sg_zero();
}

SgElem LabelledSemigroup::star(const SgElem& a) const {
  if (is_zero(a)) return sg_zero();
  const auto& x = std::get<LabelledTriple>(a);
  return LabelledTriple{x.beta, x.alpha, x.set};
}

std::vector<SgElem> LabelledSemigroup::elements(int depth) const {
  std::vector<SgElem> out;
  auto paths = space_.graph.label_paths_up_to(depth);
  for (const auto& alpha : paths)
    for (const auto& beta : paths) {
      Bitset cap = space_.graph.range_of(alpha) & space_.graph.range_of(beta);
      for (const auto& A : space_.family.sets())
        if (!A.empty() && A.subset_of(cap)) out.push_back(LabelledTriple{alpha, beta, A});
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::string LabelledSemigroup::to_string(const SgElem& x) const {
  if (is_zero(x)) return "0";
  const auto& t = std::get<LabelledTriple>(x);
  return "(" + space_.graph.label_string(t.alpha) + "," + space_.graph.set_string(t.set) + "," +
         space_.graph.label_string(t.beta) + ")";
}

bool LabelledSemigroup::order_leq(const SgElem& x, const SgElem& y) const {
  if (is_zero(x)) return true;
  if (is_zero(y)) return false;
  const auto& a = std::get<LabelledTriple>(x);
  const auto& b = std::get<LabelledTriple>(y);
  if (a.alpha != a.beta || b.alpha != b.beta) throw std::domain_error("order applies to idempotents");
  if (!vec_prefix(b.alpha, a.alpha)) return false;
  std::vector<int> rest(a.alpha.begin() + b.alpha.size(), a.alpha.end());
  return a.set.subset_of(space_.graph.relative_range(b.set, rest));
}

Grading LabelledSemigroup::standard_grading() const {
  auto G = free_group_;
  return {G, [G](const SgElem& x) {
            if (is_zero(x)) throw std::domain_error("grading of zero");
            const auto& t = std::get<LabelledTriple>(x);
            std::vector<int> raw;
            for (int a : t.alpha) raw.push_back(a + 1);
            for (auto it = t.beta.rbegin(); it != t.beta.rend(); ++it) raw.push_back(-(*it + 1));
            return reduce_word(raw);
          }};
}

LabelledSemigroup::WordShape LabelledSemigroup::parse_word(const GroupWord& g) const {
  WordShape out;
  bool seen_negative = false;
  for (int s : g.syms) {
    if (s > 0) {
      if (seen_negative) return out;
      out.p1.push_back(s - 1);
    } else {
      seen_negative = true;
      out.p2.push_back(-s - 1);
    }
  }
  std::reverse(out.p2.begin(), out.p2.end());
  if (g.is_identity()) return out;
  Bitset cap = space_.graph.range_of(out.p1) & space_.graph.range_of(out.p2);
  if (cap.empty()) return out;
  out.common_range = cap;
  out.realizable = true;
  return out;
}

bool LabelledSemigroup::eg_contains(const GroupWord& g, const SgElem& x) const {
  if (is_zero(x)) return true;
  if (!std::holds_alternative<LabelledTriple>(x)) return false;
  const auto& t = std::get<LabelledTriple>(x);
  if (t.alpha != t.beta) return false;
  if (g.is_identity()) return true;
  auto shape = parse_word(g);
  if (!shape.realizable || !vec_prefix(shape.p1, t.alpha)) return false;
  std::vector<int> p(t.alpha.begin() + shape.p1.size(), t.alpha.end());
  auto p2p = shape.p2;
  p2p.insert(p2p.end(), p.begin(), p.end());
  return t.set.subset_of(space_.graph.range_of(p2p));
}

std::vector<SgElem> LabelledSemigroup::eg_enumerate(const GroupWord& g, int depth) const {
  std::vector<SgElem> out;
  for (const auto& alpha : space_.graph.label_paths_up_to(depth))
    for (const auto& A : space_.family.sets()) {
      if (A.empty() || !A.subset_of(space_.graph.range_of(alpha))) continue;
      SgElem x = LabelledTriple{alpha, alpha, A};
      if (eg_contains(g, x)) out.push_back(x);
    }
  std::sort(out.begin(), out.end());
  return out;
}

SgElem LabelledSemigroup::phi_closed_form(const GroupWord& g, const SgElem& x) const {
  if (is_zero(x)) return sg_zero();
  if (g.is_identity()) return x;
  auto shape = parse_word(g);
  if (!shape.realizable) throw std::domain_error("word outside the graded shape");
  const auto& t = std::get<LabelledTriple>(x);
  // phi_g : E_{g^-1} -> E_g replaces the p2 prefix by p1.
  if (!vec_prefix(shape.p2, t.alpha)) throw std::domain_error("idempotent outside E_{g^-1}");
  std::vector<int> image = shape.p1;
  image.insert(image.end(), t.alpha.begin() + shape.p2.size(), t.alpha.end());
  return LabelledTriple{image, image, t.set};
}

ActionContext LabelledSemigroup::make_action(int word_bound) const {
  ActionContext ctx;
  auto self = std::static_pointer_cast<const LabelledSemigroup>(shared_from_this());
  ctx.semigroup = self;
  ctx.grading = standard_grading();
  auto space = LabelledGba::make(space_);
  auto G = free_group_;

  PartialActionBundle::Provider provider = [self, space](const GroupWord& g) {
    ActionEntry ent;
    auto shape = self->parse_word(g);
    if (!shape.realizable) {
      ent.ideal = IdealHandle::trivial(space);
      auto bot = space->bottom();
      ent.iso.forward = [bot](const GbaElement&) { return bot; };
      ent.iso.backward = ent.iso.forward;
      return ent;
    }
    ent.ideal = IdealHandle::below({space->cylinder(shape.p1, shape.common_range)});
    auto from = shape.p2, to = shape.p1;
    ent.iso.forward = [space, from, to](const GbaElement& x) {
      return space->replace_prefix(x, from, to);
    };
    ent.iso.backward = [space, from, to](const GbaElement& x) {
      return space->replace_prefix(x, to, from);
    };
    return ent;
  };

  PartialActionBundle::WordEnumerator words = [self](int bound) {
    std::set<GroupWord> out;
    auto paths = self->space().graph.label_paths_up_to(bound);
    for (const auto& p1 : paths)
      for (const auto& p2 : paths) {
        if (static_cast<int>(p1.size() + p2.size()) > bound) continue;
        std::vector<int> raw;
        for (int a : p1) raw.push_back(a + 1);
        for (auto it = p2.rbegin(); it != p2.rend(); ++it) raw.push_back(-(*it + 1));
        auto w = reduce_word(raw);
        if (self->parse_word(w).realizable) out.insert(w);
      }
    return std::vector<GroupWord>(out.begin(), out.end());
  };

  ctx.bundle = std::make_shared<PartialActionBundle>(G, space, std::move(provider), std::move(words));
  ctx.v_of = [space](const SgElem& x) {
    if (is_zero(x)) return space->bottom();
    const auto& t = std::get<LabelledTriple>(x);
    return space->cylinder(t.alpha, t.set);
  };
  ctx.in_eg = [self](const SgElem& x, const GroupWord& g) { return self->eg_contains(g, x); };
  ctx.eg_enumerate = [self](const GroupWord& g, int depth) { return self->eg_enumerate(g, depth); };
  (void)word_bound;
  return ctx;
}

// ---- Cuntz-Krieger map -----------------------------------------------------------

CkMap ck_map(std::shared_ptr<const LabelledSemigroup> S, const Ring& ring, int word_bound) {
  CkMap out;
  out.semigroup = S;
  auto ctx = S->make_action(word_bound);
  out.algebra = std::make_shared<LrAlgebra>(ring, ctx);
  const auto& sp = S->space();
  const auto& g = sp.graph;
  const auto& alg = *out.algebra;
  auto gba = std::dynamic_pointer_cast<const LabelledGba>(ctx.bundle->space());
  auto G = ctx.grading.group;

  auto p_of = [&](const Bitset& A) {
    if (A.empty()) return alg.zero();
    return alg.vdelta(gba->cylinder({}, A), G->identity());
  };

  for (const auto& A : sp.family.sets()) out.projections.emplace(g.set_string(A), p_of(A));
  for (int a = 0; a < g.alphabet_size(); ++a) {
    auto r = g.range_of({a});
    if (r.empty()) continue;
    out.letter_gens.emplace(g.letter(a),
                            alg.vdelta(gba->cylinder({a}, r), G->generator(a)));
    out.letter_stars.emplace(g.letter(a),
                             alg.vdelta(gba->cylinder({}, r), G->generator(a, true)));
  }

  VerifyReport& rep = out.relations;
  rep.scope_bound = word_bound;

  {
    CheckResult c{"(1) p_{A^B} = p_A p_B, p_{AvB} = p_A + p_B - p_{A^B}, p_{} = 0", true, ""};
    for (const auto& A : sp.family.sets())
      for (const auto& B : sp.family.sets()) {
        if (skew_mul(p_of(A), p_of(B)) != p_of(A & B) ||
            skew_sub(skew_add(p_of(A), p_of(B)), p_of(A & B)) != p_of(A | B)) {
          c.pass = false;
          c.witness = g.set_string(A) + "," + g.set_string(B);
        }
      }
    if (!p_of(Bitset(g.vertex_count())).is_zero()) c.pass = false;
    rep.checks.push_back(c);
  }

  {
    CheckResult c{"(2) p_A s_a = s_a p_{r(A,a)} and s_a* p_A = p_{r(A,a)} s_a*", true, ""};
    for (const auto& A : sp.family.sets())
      for (const auto& [name, sa] : out.letter_gens) {
        int a = g.letter_index(name);
        const auto& sastar = out.letter_stars.at(name);
        auto pr = p_of(g.relative_range(A, a));
        if (skew_mul(p_of(A), sa) != skew_mul(sa, pr) ||
            skew_mul(sastar, p_of(A)) != skew_mul(pr, sastar)) {
          c.pass = false;
          c.witness = g.set_string(A) + "," + name;
        }
      }
    rep.checks.push_back(c);
  }

  {
    CheckResult c{"(3) s_a* s_b = delta_{ab} p_{r(a)}", true, ""};
    for (const auto& [na, sastar] : out.letter_stars)
      for (const auto& [nb, sb] : out.letter_gens) {
        auto prod = skew_mul(sastar, sb);
        bool ok = (na == nb) ? (prod == p_of(g.range_of({g.letter_index(na)}))) : prod.is_zero();
        if (!ok) {
          c.pass = false;
          c.witness = na + "," + nb;
        }
      }
    rep.checks.push_back(c);
  }

  {
    CheckResult c{"(4) s_a s_a* s_a = s_a and s_a* s_a s_a* = s_a*", true, ""};
    for (const auto& [name, sa] : out.letter_gens) {
      const auto& sastar = out.letter_stars.at(name);
      if (skew_mul(skew_mul(sa, sastar), sa) != sa ||
          skew_mul(skew_mul(sastar, sa), sastar) != sastar) {
        c.pass = false;
        c.witness = name;
      }
    }
    rep.checks.push_back(c);
  }

  {
    CheckResult c{"(5) p_A = sum of s_a p_{r(A,a)} s_a* over Delta_A, A regular", true, ""};
    for (const auto& A : sp.family.sets()) {
      if (!is_regular(sp, A)) continue;
      SkewElement sum = alg.zero();
      for (int a : g.delta_set(A)) {
        const auto& name = g.letter(a);
        sum = skew_add(sum, skew_mul(skew_mul(out.letter_gens.at(name), p_of(g.relative_range(A, a))),
                                     out.letter_stars.at(name)));
      }
      if (sum != p_of(A)) {
        c.pass = false;
        c.witness = g.set_string(A);
      }
    }
    rep.checks.push_back(c);
  }

  return out;
}

VerifyReport generator_products(std::shared_ptr<const LabelledSemigroup> S, const Ring& ring,
                                int depth) {
  VerifyReport rep;
  rep.scope_bound = depth;
  auto ctx = S->make_action(depth);
  LrAlgebra alg(ring, ctx);
  auto gba = std::dynamic_pointer_cast<const LabelledGba>(ctx.bundle->space());
  const auto& g = S->space().graph;
  auto G = ctx.grading.group;

  auto word_of = [&](const std::vector<int>& alpha, bool invert) {
    std::vector<int> raw;
    if (!invert)
      for (int a : alpha) raw.push_back(a + 1);
    else
      for (auto it = alpha.rbegin(); it != alpha.rend(); ++it) raw.push_back(-(*it + 1));
    return reduce_word(raw);
  };
  auto s_down = [&](const std::vector<int>& alpha) {  // (w, r(alpha), w) delta_{alpha^-1}
    return alg.vdelta(gba->cylinder({}, g.range_of(alpha)), word_of(alpha, true));
  };
  auto s_up = [&](const std::vector<int>& alpha) {  // (alpha, r(alpha), alpha) delta_alpha
    return alg.vdelta(gba->cylinder(alpha, g.range_of(alpha)), word_of(alpha, false));
  };

  CheckResult c1{"star-generator products compose along concatenation", true, ""};
  CheckResult c2{"generator products compose along concatenation", true, ""};
  auto paths = g.label_paths_up_to(depth);
  for (const auto& alpha : paths) {
    if (alpha.empty()) continue;
    for (const auto& beta : paths) {
      if (beta.empty()) continue;
      auto ba = beta;
      ba.insert(ba.end(), alpha.begin(), alpha.end());
      auto lhs1 = skew_mul(s_down(alpha), s_down(beta));
      auto rhs1 = g.realizable(ba) ? alg.vdelta(gba->cylinder({}, g.range_of(ba)), word_of(ba, true))
                                   : alg.zero();
      if (lhs1 != rhs1) {
        c1.pass = false;
        c1.witness = g.label_string(alpha) + "," + g.label_string(beta);
      }

      auto ab = alpha;
      ab.insert(ab.end(), beta.begin(), beta.end());
      auto lhs2 = skew_mul(s_up(alpha), s_up(beta));
      auto rhs2 = g.realizable(ab)
                      ? alg.vdelta(gba->cylinder(ab, g.range_of(ab)), word_of(ab, false))
                      : alg.zero();
      if (lhs2 != rhs2) {
        c2.pass = false;
        c2.witness = g.label_string(alpha) + "," + g.label_string(beta);
      }
    }
  }
  rep.checks.push_back(c1);
  rep.checks.push_back(c2);
  return rep;
}

// ---- graph adapter ------------------------------------------------------------------

LabelledSpace graph_to_labelled(const DirectedGraph& g) {
  std::vector<std::string> vnames, alphabet;
  for (int v = 0; v < g.vertex_count(); ++v) vnames.push_back(g.vertex_name(v));
  std::vector<LabelledGraph::Edge> edges;
  for (int e = 0; e < g.edge_count(); ++e) {
    alphabet.push_back(g.edge(e).name);
    edges.push_back({g.edge(e).name, g.edge(e).src, g.edge(e).dst, e});
  }
  LabelledGraph lg(std::move(vnames), std::move(alphabet), std::move(edges));
  auto family = LabelledFamily::powerset(lg);
  return LabelledSpace{std::move(lg), std::move(family)};
}

VerifyReport cross_validate_graph_adapter(const DirectedGraph& g, int depth) {
  VerifyReport rep;
  rep.scope_bound = depth;
  auto gs = std::make_shared<GraphSemigroup>(g);
  auto ls = std::make_shared<LabelledSemigroup>(graph_to_labelled(g));
  const auto& lg = ls->space().graph;

  auto lift = [&](const SgElem& x) -> SgElem {
    if (is_zero(x)) return sg_zero();
    const auto& pp = std::get<PathPair>(x);
    Bitset r = Bitset::singleton(lg.vertex_count(), g.range_of(pp.p));
    return LabelledTriple{pp.p.edges, pp.q.edges, r};
  };

  auto elems = gs->elements(depth);

  {
    CheckResult c{"products agree under the identity-labelling adapter", true, ""};
    for (const auto& a : elems)
      for (const auto& b : elems)
        if (lift(gs->multiply(a, b)) != ls->multiply(lift(a), lift(b))) {
          c.pass = false;
          if (c.witness.empty()) c.witness = gs->to_string(a) + "," + gs->to_string(b);
        }
    rep.checks.push_back(c);
  }

  {
    CheckResult c{"star agrees under the adapter", true, ""};
    for (const auto& a : elems)
      if (lift(gs->star(a)) != ls->star(lift(a))) {
        c.pass = false;
        c.witness = gs->to_string(a);
      }
    rep.checks.push_back(c);
  }

  {
    CheckResult c{"gradings agree letter-wise", true, ""};
    auto phi_g = gs->standard_grading();
    auto phi_l = ls->standard_grading();
    for (const auto& a : elems)
      if (phi_g.map(a) != phi_l.map(lift(a))) {
        c.pass = false;
        c.witness = gs->to_string(a);
      }
    rep.checks.push_back(c);
  }

  return rep;
}

}  // namespace skewgr
