#include "skewgr/inverse_semigroup.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace skewgr {

std::vector<SgElem> InverseSemigroup::idempotents(int depth) const {
  std::vector<SgElem> out;
  for (const auto& x : elements(depth))
    if (is_idempotent(x)) out.push_back(x);
  return out;
}

// ---- FiniteTableSemigroup ----------------------------------------------------

FiniteTableSemigroup::FiniteTableSemigroup(std::vector<std::string> names,
                                           std::vector<std::vector<int>> table)
    : names_(std::move(names)), table_(std::move(table)) {
  const int n = size();
  if (static_cast<int>(table_.size()) != n) throw std::invalid_argument("bad semigroup table");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("bad semigroup table row");
    for (int v : row)
      if (v < -1 || v >= n) throw std::invalid_argument("semigroup table entry out of range");
  }
  star_.assign(n, -1);
  auto prod = [&](int a, int b) { return (a < 0 || b < 0) ? -1 : table_[a][b]; };
  for (int s = 0; s < n; ++s) {
    std::vector<int> candidates;
    for (int t = 0; t < n; ++t)
      if (prod(prod(s, t), s) == s && prod(prod(t, s), t) == t) candidates.push_back(t);
    if (candidates.size() != 1) {
      inverses_unique_ = false;
      if (inverse_ambiguity_.empty())
        inverse_ambiguity_ = names_[s] + " has " + std::to_string(candidates.size()) + " inverses";
    }
    star_[s] = candidates.empty() ? s : candidates.front();
  }
}

int FiniteTableSemigroup::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw std::invalid_argument("unknown semigroup element '" + name + "'");
  return static_cast<int>(it - names_.begin());
}

std::string FiniteTableSemigroup::describe() const {
  return "finite inverse semigroup on " + std::to_string(size()) + " nonzero elements";
}

SgElem FiniteTableSemigroup::multiply(const SgElem& a, const SgElem& b) const {
  if (is_zero(a) || is_zero(b)) return sg_zero();
  int r = table_[std::get<TablePoint>(a).index][std::get<TablePoint>(b).index];
  return r < 0 ? sg_zero() : SgElem(TablePoint{r});
}

SgElem FiniteTableSemigroup::star(const SgElem& a) const {
  if (is_zero(a)) return sg_zero();
  return TablePoint{star_[std::get<TablePoint>(a).index]};
}

std::vector<SgElem> FiniteTableSemigroup::elements(int) const {
  std::vector<SgElem> out;
  for (int i = 0; i < size(); ++i) out.push_back(TablePoint{i});
  return out;
}

std::string FiniteTableSemigroup::to_string(const SgElem& x) const {
  if (is_zero(x)) return "0";
  return names_[std::get<TablePoint>(x).index];
}

// ---- SemilatticeSemigroup ----------------------------------------------------

SemilatticeSemigroup::SemilatticeSemigroup(Semilattice P) : P_(std::move(P)) {}

SgElem SemilatticeSemigroup::element(int i) const {
  return i == P_.zero() ? sg_zero() : SgElem(TablePoint{i});
}

std::string SemilatticeSemigroup::describe() const {
  return "meet semilattice on " + std::to_string(P_.size()) + " elements as an inverse semigroup";
}

SgElem SemilatticeSemigroup::multiply(const SgElem& a, const SgElem& b) const {
  if (is_zero(a) || is_zero(b)) return sg_zero();
  return element(P_.meet(std::get<TablePoint>(a).index, std::get<TablePoint>(b).index));
}

std::vector<SgElem> SemilatticeSemigroup::elements(int) const {
  std::vector<SgElem> out;
  for (int i = 0; i < P_.size(); ++i)
    if (i != P_.zero()) out.push_back(TablePoint{i});
  return out;
}

std::string SemilatticeSemigroup::to_string(const SgElem& x) const {
  if (is_zero(x)) return "0";
  return P_.name(std::get<TablePoint>(x).index);
}

// ---- AntichainSemigroup -------------------------------------------------------

std::string AntichainSemigroup::describe() const {
  return "countable antichain semilattice {e_i} as an inverse semigroup";
}

SgElem AntichainSemigroup::multiply(const SgElem& a, const SgElem& b) const {
  if (is_zero(a) || is_zero(b)) return sg_zero();
  return a == b ? a : sg_zero();
}

std::vector<SgElem> AntichainSemigroup::elements(int depth) const {
  std::vector<SgElem> out;
  int n = std::max(display_bound_, depth);
  for (int i = 0; i < n; ++i) out.push_back(TablePoint{i});
  return out;
}

std::string AntichainSemigroup::to_string(const SgElem& x) const {
  if (is_zero(x)) return "0";
  return "e_" + std::to_string(std::get<TablePoint>(x).index);
}

// ---- UnitizedSemigroup --------------------------------------------------------

std::string UnitizedSemigroup::describe() const { return inner_->describe() + ", unitized"; }

SgElem UnitizedSemigroup::multiply(const SgElem& a, const SgElem& b) const {
  if (is_zero(a) || is_zero(b)) return sg_zero();
  if (std::holds_alternative<StarUnit>(a)) return b;
  if (std::holds_alternative<StarUnit>(b)) return a;
  return inner_->multiply(a, b);
}

SgElem UnitizedSemigroup::star(const SgElem& a) const {
  if (std::holds_alternative<StarUnit>(a)) return a;
  return inner_->star(a);
}

std::vector<SgElem> UnitizedSemigroup::elements(int depth) const {
  auto out = inner_->elements(depth);
  out.push_back(StarUnit{});
  std::sort(out.begin(), out.end());
  return out;
}

std::string UnitizedSemigroup::to_string(const SgElem& x) const {
  if (std::holds_alternative<StarUnit>(x)) return "*";
  return inner_->to_string(x);
}

std::shared_ptr<const UnitizedSemigroup> unitize(std::shared_ptr<const InverseSemigroup> S) {
  return std::make_shared<UnitizedSemigroup>(std::move(S));
}

Grading unitized_grading(const Grading& phi) {
  auto inner_map = phi.map;
  return {phi.group, [inner_map](const SgElem& x) {
            if (std::holds_alternative<StarUnit>(x)) return GroupWord{};
            return inner_map(x);
          }};
}

// ---- structural checks ---------------------------------------------------------

VerifyReport verify_inverse_semigroup(const InverseSemigroup& S, int depth, int associativity_cap) {
  VerifyReport rep;
  rep.scope_bound = depth;
  auto elems = S.elements(depth);
  std::vector<SgElem> all = elems;
  all.push_back(S.zero());

  {
    CheckResult c{"zero absorption", true, ""};
    for (const auto& x : all)
      if (!is_zero(S.multiply(S.zero(), x)) || !is_zero(S.multiply(x, S.zero()))) {
        c.pass = false;
        c.witness = S.to_string(x);
      }
    rep.checks.push_back(c);
  }

  {
    CheckResult c{"associativity", true, ""};
    const long long n = static_cast<long long>(all.size());
    long long stride = 1;
    while (n * n * n / (stride * stride * stride) > associativity_cap) ++stride;
    for (std::size_t i = 0; i < all.size(); i += stride)
      for (std::size_t j = 0; j < all.size(); j += stride)
        for (std::size_t k = 0; k < all.size(); k += stride) {
          const auto &a = all[i], &b = all[j], &cc = all[k];
          if (S.multiply(S.multiply(a, b), cc) != S.multiply(a, S.multiply(b, cc))) {
            c.pass = false;
            c.witness = S.to_string(a) + "," + S.to_string(b) + "," + S.to_string(cc);
          }
        }
    rep.checks.push_back(c);
  }

  {
    CheckResult c{"inverse axioms s s* s = s and s* s s* = s*", true, ""};
    for (const auto& s : elems) {
      auto st = S.star(s);
      if (S.multiply(S.multiply(s, st), s) != s || S.multiply(S.multiply(st, s), st) != st) {
        c.pass = false;
        c.witness = S.to_string(s);
      }
    }
    rep.checks.push_back(c);
  }

  {
    CheckResult c{"inverses unique within enumeration", true, ""};
    for (const auto& s : elems) {
      int count = 0;
      for (const auto& t : elems)
        if (S.multiply(S.multiply(s, t), s) == s && S.multiply(S.multiply(t, s), t) == t) ++count;
      if (count != 1) {
        c.pass = false;
        c.witness = S.to_string(s) + " has " + std::to_string(count) + " inverses";
      }
    }
    rep.checks.push_back(c);
  }

  {
    CheckResult c{"idempotents commute", true, ""};
    auto es = S.idempotents(depth);
    for (const auto& a : es)
      for (const auto& b : es)
        if (S.multiply(a, b) != S.multiply(b, a)) {
          c.pass = false;
          c.witness = S.to_string(a) + "," + S.to_string(b);
        }
    rep.checks.push_back(c);
  }

  return rep;
}

bool natural_order(const InverseSemigroup& S, const SgElem& x, const SgElem& y) {
  return S.multiply(S.multiply(x, S.star(x)), y) == x;
}

VerifyReport verify_pure_grading(const InverseSemigroup& S, const Grading& phi, int depth) {
  VerifyReport rep;
  rep.scope_bound = depth;
  auto elems = S.elements(depth);
  const auto& G = *phi.group;

  {
    CheckResult c{"phi(ab) = phi(a) phi(b) on nonzero products", true, ""};
    for (const auto& a : elems)
      for (const auto& b : elems) {
        auto ab = S.multiply(a, b);
        if (is_zero(ab)) continue;
        if (phi.map(ab) != G.mul(phi.map(a), phi.map(b))) {
          c.pass = false;
          c.witness = S.to_string(a) + "," + S.to_string(b);
        }
      }
    rep.checks.push_back(c);
  }

  {
    CheckResult c{"phi^{-1}(e) = E^x", true, ""};
    for (const auto& a : elems) {
      bool ident = phi.map(a).is_identity();
      if (ident != S.is_idempotent(a)) {
        c.pass = false;
        c.witness = S.to_string(a);
      }
    }
    rep.checks.push_back(c);
  }

  return rep;
}

std::vector<SgElem> compute_Eg(const InverseSemigroup& S, const Grading& phi, const GroupWord& g,
                               int depth) {
  auto elems = S.elements(depth);
  std::vector<SgElem> witnesses;  // ss* for s with phi(s) = g
  for (const auto& s : elems)
    if (phi.map(s) == g) witnesses.push_back(S.multiply(s, S.star(s)));
  std::vector<SgElem> out = {S.zero()};
  for (const auto& x : S.idempotents(depth))
    for (const auto& w : witnesses)
      if (natural_order(S, x, w)) {
        out.push_back(x);
        break;
      }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SgElem phi_g(const InverseSemigroup& S, const Grading& phi, const GroupWord& g, const SgElem& x,
             int depth) {
  if (is_zero(x)) return S.zero();
  for (const auto& s : S.elements(depth)) {
    if (phi.map(s) != g) continue;
    if (natural_order(S, x, S.multiply(S.star(s), s))) return S.multiply(S.multiply(s, x), S.star(s));
  }
  throw std::domain_error("no admissible s with phi(s) = g above x");
}

OrthogonalityReport semigroup_orthogonality_checks(const InverseSemigroup& S, const Grading& phi,
                                                   int depth) {
  OrthogonalityReport rep;
  rep.depth = depth;
  rep.orthogonal = true;
  rep.semi_saturated = true;
  const auto& G = *phi.group;
  if (G.kind() != Group::Kind::free) return rep;  // vacuous over non-free gradings

  auto eg_members = [&](const GroupWord& g) {
    auto v = compute_Eg(S, phi, g, depth);
    std::set<SgElem> out(v.begin(), v.end());
    out.erase(S.zero());
    return out;
  };

  for (int i = 0; i < G.generator_count(); ++i)
    for (int j = i + 1; j < G.generator_count(); ++j) {
      auto ea = eg_members(G.generator(i));
      auto eb = eg_members(G.generator(j));
      for (const auto& x : ea)
        if (eb.count(x)) rep.orthogonal = false;
    }

  // E_{st} inside E_s for every length-additive split of every graded word.
  std::set<GroupWord> words;
  for (const auto& s : S.elements(depth)) {
    auto w = phi.map(s);
    if (w.length() >= 2 && w.length() <= depth) words.insert(w);
  }
  for (const auto& w : words) {
    auto ew = eg_members(w);
    for (int cut = 1; cut < w.length(); ++cut) {
      GroupWord s{std::vector<int>(w.syms.begin(), w.syms.begin() + cut)};
      auto es = eg_members(s);
      for (const auto& x : ew)
        if (!es.count(x)) rep.semi_saturated = false;
    }
  }
  return rep;
}

// ---- finite action construction -------------------------------------------------

ActionContext finite_action_context(std::shared_ptr<const InverseSemigroup> S, Grading phi, int depth) {
  if (!S->finite()) throw std::domain_error("finite_action_context requires a finite handle");
  ActionContext ctx;
  ctx.semigroup = S;
  ctx.grading = phi;

  auto idems = S->idempotents(depth);
  std::sort(idems.begin(), idems.end());

  // P: index 0 = zero, then the nonzero idempotents in element order.
  std::vector<SgElem> p_elems = {S->zero()};
  p_elems.insert(p_elems.end(), idems.begin(), idems.end());
  auto index_map = std::make_shared<std::map<SgElem, int>>();
  for (std::size_t i = 0; i < p_elems.size(); ++i) (*index_map)[p_elems[i]] = static_cast<int>(i);

  const int n = static_cast<int>(p_elems.size());
  std::vector<std::string> names;
  std::vector<std::vector<int>> meet(n, std::vector<int>(n));
  for (const auto& x : p_elems) names.push_back(S->to_string(x));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) meet[i][j] = index_map->at(S->multiply(p_elems[i], p_elems[j]));
  auto tight = std::make_shared<TightSpace>(Semilattice(std::move(names), std::move(meet), 0));
  ctx.tight = tight;
  ctx.sl_index = [index_map](const SgElem& x) { return index_map->at(x); };

  // Graded words and their idempotent fibers.
  std::set<GroupWord> words;
  for (const auto& s : S->elements(depth)) words.insert(phi.map(s));
  auto members = std::make_shared<std::map<GroupWord, std::set<SgElem>>>();
  for (const auto& g : words) {
    auto eg = compute_Eg(*S, phi, g, depth);
    std::set<SgElem> m(eg.begin(), eg.end());
    m.erase(S->zero());
    (*members)[g] = std::move(m);
  }

  auto tc = tight->tc();
  auto v_of_fn = [tight, index_map, tc](const SgElem& x) {
    if (is_zero(x)) return tc->bottom();
    return tight->v(index_map->at(x));
  };
  ctx.v_of = v_of_fn;
  ctx.in_eg = [members](const SgElem& x, const GroupWord& g) {
    if (is_zero(x)) return true;
    auto it = members->find(g);
    return it != members->end() && it->second.count(x) > 0;
  };
  ctx.eg_enumerate = [members](const GroupWord& g, int) {
    auto it = members->find(g);
    if (it == members->end()) return std::vector<SgElem>{};
    return std::vector<SgElem>(it->second.begin(), it->second.end());
  };

  // Bundle entries: per nonidentity graded word, the ideal below the joined
  // V_x and the tight-filter point permutation induced by phi_g.
  auto group = phi.group;
  std::map<GroupWord, ActionEntry> entries;
  auto v_join = [&](const GroupWord& g) {
    GbaElement j = tc->bottom();
    for (const auto& x : members->at(g)) j = j.join(v_of_fn(x));
    return j;
  };
  for (const auto& g : words) {
    if (g.is_identity()) continue;
    GroupWord ginv = group->inv(g);
    if (!members->count(ginv))
      throw std::logic_error("graded word set not closed under inverses");
    GbaElement bound = v_join(g);
    GbaElement dom_bound = v_join(ginv);

    // xi -> the unique eta with eta ^ E_g = phi_g(xi ^ E_{g^-1}).
    auto atom_map = std::make_shared<std::map<int, int>>();
    const auto& filters = tight->filters();
    for (int i : tc->bits(dom_bound).members()) {
      std::set<int> image;
      for (int pe : filters[i]) {
        const SgElem& x = p_elems[pe];
        if (!members->at(ginv).count(x)) continue;
        image.insert(index_map->at(phi_g(*S, phi, g, x, depth)));
      }
      int found = -1;
      for (int j : tc->bits(bound).members()) {
        std::set<int> trace;
        for (int pe : filters[j])
          if (members->at(g).count(p_elems[pe])) trace.insert(pe);
        if (trace == image) {
          if (found >= 0) throw std::logic_error("ambiguous tight-filter image under phi_g");
          found = j;
        }
      }
      if (found < 0) throw std::logic_error("tight-filter image under phi_g not found");
      (*atom_map)[i] = found;
    }

    ActionEntry ent;
    ent.ideal = IdealHandle::below({bound});
    ent.iso.forward = [tc, atom_map](const GbaElement& x) {
      Bitset out(tc->atom_count());
      for (int i : tc->bits(x).members()) out.set(atom_map->at(i));
      return tc->element(out);
    };
    auto back_map = std::make_shared<std::map<int, int>>();
    for (const auto& [i, j] : *atom_map) (*back_map)[j] = i;
    ent.iso.backward = [tc, back_map](const GbaElement& x) {
      Bitset out(tc->atom_count());
      for (int i : tc->bits(x).members()) out.set(back_map->at(i));
      return tc->element(out);
    };
    entries.emplace(g, std::move(ent));
  }

  ctx.bundle = std::make_shared<PartialActionBundle>(group, tc, std::move(entries));
  return ctx;
}

namespace {

ActionContext antichain_context(std::shared_ptr<const InverseSemigroup> S, const Grading& phi,
                                bool unitized) {
  ActionContext ctx;
  ctx.semigroup = S;
  ctx.grading = phi;
  auto space = FcGba::make(unitized);
  ctx.bundle = std::make_shared<PartialActionBundle>(phi.group, space, std::map<GroupWord, ActionEntry>{});
  ctx.v_of = [space](const SgElem& x) {
    if (is_zero(x)) return space->bottom();
    if (std::holds_alternative<StarUnit>(x)) return space->top();
    return space->finite_set({std::get<TablePoint>(x).index});
  };
  ctx.in_eg = [](const SgElem&, const GroupWord& g) { return g.is_identity(); };
  ctx.eg_enumerate = [S](const GroupWord& g, int depth) {
    if (!g.is_identity()) return std::vector<SgElem>{};
    return S->elements(depth);
  };
  return ctx;
}

}  // namespace

ActionContext build_partial_action(std::shared_ptr<const InverseSemigroup> S, const Grading& phi,
                                   int depth) {
  if (std::dynamic_pointer_cast<const AntichainSemigroup>(S)) return antichain_context(S, phi, false);
  if (auto uni = std::dynamic_pointer_cast<const UnitizedSemigroup>(S)) {
    if (std::dynamic_pointer_cast<const AntichainSemigroup>(uni->inner()))
      return antichain_context(S, phi, true);
  }
  if (S->finite()) return finite_action_context(S, phi, depth);
  throw std::domain_error("unsupported handle kind for build_partial_action: " + S->describe());
}

SkewElement LrAlgebra::xdelta(const SgElem& x, const GroupWord& g) const {
  if (is_zero(x)) return zero();
  if (!ctx_.in_eg(x, g))
    throw std::domain_error(ctx_.semigroup->to_string(x) + " is not in E_" +
                            ctx_.grading.group->to_string(g));
  return delta(ring_, ctx_.bundle, ctx_.v_of(x), g);
}

SkewElement LrAlgebra::vdelta(const GbaElement& U, const GroupWord& g) const {
  return delta(ring_, ctx_.bundle, U, g);
}

// ---- grading change ---------------------------------------------------------------

GroupWord GroupHom::apply(const GroupWord& w) const {
  if (w.is_identity()) return {};
  if (source->kind() == Group::Kind::finite) return generator_images[w.syms[0] - 1];
  GroupWord out;
  for (int s : w.syms) {
    int i = (s > 0 ? s : -s) - 1;
    GroupWord piece = s > 0 ? generator_images[i] : target->inv(generator_images[i]);
    out = target->mul(out, piece);
  }
  return out;
}

std::shared_ptr<const PartialActionBundle> regraded_bundle(const ActionContext& phi_ctx,
                                                           const GroupHom& f, int depth) {
  auto base = phi_ctx.bundle;
  auto target = f.target;
  auto space = base->space();

  // Products of two depth-bounded homogeneous elements reach twice the depth,
  // so the provider looks that far for fiber components.
  auto component_words = [base, f, depth](const GroupWord& h) {
    std::vector<GroupWord> out;
    for (const auto& g : base->words_up_to(2 * depth)) {
      if (g.is_identity()) continue;
      auto b = base->ideal(g).bound();
      if (b && !b->is_bottom() && f.apply(g) == h) out.push_back(g);
    }
    return out;
  };

  PartialActionBundle::Provider provider = [base, space, component_words](const GroupWord& h) {
    ActionEntry ent;
    auto comps = component_words(h);
    if (comps.empty()) {
      ent.ideal = IdealHandle::trivial(space);
      auto bot = space->bottom();
      ent.iso.forward = [bot](const GbaElement&) { return bot; };
      ent.iso.backward = ent.iso.forward;
      return ent;
    }
    GbaElement bound = space->bottom();
    for (const auto& g : comps) bound = bound.join(*base->ideal(g).bound());
    ent.ideal = IdealHandle::below({bound});
    const auto G = base->group();
    ent.iso.forward = [base, space, comps, G](const GbaElement& x) {
      GbaElement out = space->bottom();
      for (const auto& g : comps)
        out = out.join(base->apply(g, x.meet(*base->ideal(G->inv(g)).bound())));
      return out;
    };
    ent.iso.backward = [base, space, comps, G](const GbaElement& x) {
      GbaElement out = space->bottom();
      for (const auto& g : comps)
        out = out.join(base->apply(G->inv(g), x.meet(*base->ideal(g).bound())));
      return out;
    };
    return ent;
  };

  PartialActionBundle::WordEnumerator words = [base, f, depth](int bound) {
    std::set<GroupWord> out;
    for (const auto& g : base->words_up_to(std::min(bound, depth))) {
      auto b = base->ideal(g).bound();
      if (g.is_identity() || (b && !b->is_bottom())) out.insert(f.apply(g));
    }
    return std::vector<GroupWord>(out.begin(), out.end());
  };

  return std::make_shared<PartialActionBundle>(target, space, std::move(provider), std::move(words));
}

RegradeReport regrade(const Ring& ring, const ActionContext& phi_ctx, const GroupHom& f, int depth,
                      int pairs, std::uint64_t seed) {
  RegradeReport rep;
  rep.depth = depth;
  const auto& S = *phi_ctx.semigroup;
  const auto& phi = phi_ctx.grading;
  Grading sigma{f.target, [&f, map = phi.map](const SgElem& x) { return f.apply(map(x)); }};

  rep.sigma_pure = verify_pure_grading(S, sigma, depth).all_pass();
  if (!rep.sigma_pure) return rep;

  auto base = phi_ctx.bundle;
  auto space = base->space();
  auto sigma_bundle = regraded_bundle(phi_ctx, f, depth);

  auto bound_of = [&](const PartialActionBundle& b, const GroupWord& w) -> std::optional<GbaElement> {
    auto h = b.ideal(w).bound();
    if (!h && space->has_top()) h = space->top();
    return h;
  };

  // The phi components must partition each sigma ideal.
  std::map<GroupWord, std::vector<GroupWord>> fibers;
  for (const auto& g : base->words_up_to(depth)) {
    auto b = base->ideal(g).bound();
    if (!g.is_identity() && (!b || b->is_bottom())) continue;
    fibers[f.apply(g)].push_back(g);
  }

  rep.partition_ok = true;
  rep.dims_match = true;
  for (const auto& [h, gs] : fibers) {
    int dim_sum = 0;
    GbaElement join = space->bottom();
    for (std::size_t i = 0; i < gs.size(); ++i) {
      auto bi = bound_of(*base, gs[i]);
      if (!bi) continue;
      dim_sum += static_cast<int>(space->pieces(space->refined(*bi, depth)).size());
      join = join.join(*bi);
      for (std::size_t j = i + 1; j < gs.size(); ++j) {
        auto bj = bound_of(*base, gs[j]);
        if (bj && !bi->meet(*bj).is_bottom()) rep.partition_ok = false;
      }
    }
    auto hb = bound_of(*sigma_bundle, h);
    if (!hb) continue;
    if (*hb != join) rep.partition_ok = false;
    int dim_sigma = static_cast<int>(space->pieces(space->refined(*hb, depth)).size());
    if (dim_sigma != dim_sum) rep.dims_match = false;
    rep.sigma_dims.push_back({f.target->to_string(h), dim_sigma});
  }

  // Idempotent-level decomposition of E^sigma_h.
  rep.idempotents_ok = true;
  for (const auto& [h, gs] : fibers) {
    auto eh = compute_Eg(S, sigma, h, depth);
    std::set<SgElem> eh_set(eh.begin(), eh.end());
    eh_set.erase(S.zero());
    std::set<SgElem> parts;
    std::size_t total = 0;
    for (const auto& g : gs) {
      for (const auto& x : compute_Eg(S, phi, g, depth)) {
        if (is_zero(x)) continue;
        parts.insert(x);
        ++total;
      }
    }
    if (parts != eh_set || total != parts.size()) rep.idempotents_ok = false;
  }

  // Sampled multiplicativity of f_g delta_g -> f_g delta_{f(g)}.
  Rng rng(seed);
  rep.multiplicativity_ok = true;
  std::vector<GroupWord> sample_words;
  for (const auto& [h, gs] : fibers) {
    (void)h;
    for (const auto& g : gs) sample_words.push_back(g);
  }
  auto theta = [&](const SkewElement& x) {
    std::map<GroupWord, LcFunction> parts;
    for (const auto& [g, coeff] : x.coefficients()) {
      auto h = f.apply(g);
      auto it = parts.find(h);
      if (it == parts.end())
        parts.emplace(h, coeff);
      else
        it->second = lc_add(it->second, coeff);
    }
    return skew_from_parts(ring, sigma_bundle, std::move(parts));
  };
  for (int i = 0; i < pairs && !sample_words.empty(); ++i) {
    const auto& g1 = sample_words[rng.below(sample_words.size())];
    const auto& g2 = sample_words[rng.below(sample_words.size())];
    auto bound1 = bound_of(*base, g1);
    auto bound2 = bound_of(*base, g2);
    if (!bound1 || !bound2) continue;
    auto U = space->sample_below(space->refined(*bound1, depth), rng);
    auto V = space->sample_below(space->refined(*bound2, depth), rng);
    auto x = delta(ring, base, U, g1);
    auto y = delta(ring, base, V, g2);
    ++rep.multiplicativity_pairs;
    if (theta(skew_mul(x, y)) != skew_mul(theta(x), theta(y))) rep.multiplicativity_ok = false;
  }

  std::sort(rep.sigma_dims.begin(), rep.sigma_dims.end());
  return rep;
}

// ---- subsemigroup inclusions ---------------------------------------------------

InclusionReport subsemigroup_inclusion(const Ring& ring, std::shared_ptr<const InverseSemigroup> S1,
                                       std::shared_ptr<const InverseSemigroup> S2,
                                       const std::function<SgElem(const SgElem&)>& emb,
                                       const Grading& phi2, int depth) {
  InclusionReport rep;
  if (!S1->finite() || !S2->finite())
    throw std::domain_error("subsemigroup_inclusion handles finite instances only");

  auto f = [&emb](const SgElem& x) { return is_zero(x) ? sg_zero() : emb(x); };
  auto elems1 = S1->elements(depth);
  std::vector<SgElem> all1 = elems1;
  all1.push_back(S1->zero());

  rep.zero_ok = is_zero(f(S1->zero()));
  rep.products_ok = true;
  rep.star_ok = true;
  for (const auto& a : all1) {
    if (S2->star(f(a)) != f(S1->star(a))) {
      rep.star_ok = false;
      rep.witness = "star at " + S1->to_string(a);
    }
    for (const auto& b : all1)
      if (f(S1->multiply(a, b)) != S2->multiply(f(a), f(b))) {
        rep.products_ok = false;
        rep.witness = "product at " + S1->to_string(a) + "," + S1->to_string(b);
      }
  }
  rep.injective = true;
  for (std::size_t i = 0; i < elems1.size(); ++i)
    for (std::size_t j = i + 1; j < elems1.size(); ++j)
      if (f(elems1[i]) == f(elems1[j])) rep.injective = false;
  if (!rep.subsemigroup_ok()) return rep;

  Grading phi1{phi2.group, [f, map = phi2.map](const SgElem& x) { return map(f(x)); }};
  auto ctx1 = finite_action_context(S1, phi1, depth);
  auto ctx2 = finite_action_context(S2, phi2, depth);

  // E1 inside E2 must preserve finite covers.
  std::vector<int> members = {ctx2.tight->semilattice().zero()};
  for (const auto& x : S1->idempotents(depth)) members.push_back(ctx2.sl_index(f(x)));
  SubSemilattice sub(ctx2.tight->semilattice_ptr(), members);
  rep.covers_preserved = preserves_finite_covers(sub);
  if (!rep.covers_preserved) {
    rep.witness = "E1 in E2 does not preserve finite covers";
    return rep;
  }

  // Atom images of T(E1) points inside Tc(E2): all big filters restricting to
  // the given small filter.
  auto tc1 = ctx1.tight->tc();
  auto tc2 = ctx2.tight->tc();
  std::map<SgElem, SgElem> back;  // emb(x) -> x on idempotents
  for (const auto& x : S1->idempotents(depth)) back[f(x)] = x;
  const auto& filters1 = ctx1.tight->filters();
  const auto& filters2 = ctx2.tight->filters();

  std::vector<GbaElement> atom_image(filters1.size(), tc2->bottom());
  for (std::size_t i = 0; i < filters1.size(); ++i) {
    Bitset img(tc2->atom_count());
    for (std::size_t j = 0; j < filters2.size(); ++j) {
      Filter r1;
      for (const auto& [e2, e1] : back) {
        int idx2 = ctx2.sl_index(e2);
        if (std::binary_search(filters2[j].begin(), filters2[j].end(), idx2))
          r1.push_back(ctx1.sl_index(e1));
      }
      std::sort(r1.begin(), r1.end());
      if (!r1.empty() && r1 == filters1[i]) img.set(static_cast<int>(j));
    }
    atom_image[i] = tc2->element(img);
    if (atom_image[i].is_bottom()) {
      rep.witness = "tight filter of E1 with empty preimage";
      return rep;
    }
  }

  auto gba_map = [tc1, tc2, atom_image](const GbaElement& x) {
    GbaElement out = tc2->bottom();
    for (int i : tc1->bits(x).members()) out = out.join(atom_image[i]);
    return out;
  };
  rep.gba_map = gba_map;

  ActionMorphism am;
  am.f = gba_map;
  am.source = ctx1.bundle.get();
  am.target = ctx2.bundle.get();
  rep.morphism = verify_action_morphism(am, depth);
  if (!rep.morphism.all_pass()) return rep;

  rep.algebra_embedding = std::make_shared<SkewMorphism>(am, ctx1.bundle, ctx2.bundle, depth);
  rep.embedding_built = true;
  rep.sub_algebra = std::make_shared<LrAlgebra>(ring, ctx1);
  rep.super_algebra = std::make_shared<LrAlgebra>(ring, ctx2);

  rep.sub_contains = [tc2, atom_image](const GbaElement& x) {
    Bitset bits = tc2->bits(x);
    Bitset covered(bits.size());
    for (const auto& blk : atom_image) {
      Bitset b = tc2->bits(blk);
      Bitset overlap = b & bits;
      if (!overlap.empty() && overlap != b) return false;
      covered = covered | overlap;
    }
    return covered == bits;
  };
  GbaElement whole = tc2->bottom();
  for (const auto& blk : atom_image) whole = whole.join(blk);
  rep.image_is_whole = (whole == tc2->top());
  return rep;
}

EssentialIdealReport is_essential_ideal(const LrAlgebra& super,
                                        const std::function<bool(const GbaElement&)>& sub_contains,
                                        const std::vector<GbaElement>& sub_units,
                                        const std::vector<std::pair<GroupWord, GbaElement>>& spanning) {
  EssentialIdealReport rep;
  rep.is_ideal = true;
  rep.essential = true;
  const auto& bundle = super.bundle();
  const auto& G = *bundle->group();

  auto contained = [&](const SkewElement& x) {
    for (const auto& [g, coeff] : x.coefficients()) {
      (void)g;
      for (const auto& t : coeff.terms())
        if (!sub_contains(t.support)) return false;
    }
    return true;
  };

  for (const auto& [h, V] : spanning) {
    if (V.is_bottom()) continue;
    ++rep.tested_elements;
    auto vd = super.vdelta(V, h);
    bool hit = false;
    for (const auto& U : sub_units) {
      if (U.is_bottom()) continue;
      auto ud = super.vdelta(U, G.identity());
      auto left = skew_mul(ud, vd);
      auto right = skew_mul(vd, ud);
      if (rep.is_ideal && (!contained(left) || !contained(right))) {
        rep.is_ideal = false;
        rep.witness = "product left the subalgebra at grading " + G.to_string(h);
      }
      if (!left.is_zero()) hit = true;
    }
    if (!hit) {
      rep.essential = false;
      if (rep.witness.empty()) rep.witness = "annihilated element at grading " + G.to_string(h);
    }
  }
  return rep;
}

}  // namespace skewgr
