#include "skewgr/semilattice.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace skewgr {

Semilattice::Semilattice(std::vector<std::string> names, std::vector<std::vector<int>> meet_table, int zero)
    : names_(std::move(names)), meet_(std::move(meet_table)), zero_(zero) {
  validate();
}

Semilattice Semilattice::from_sets(const std::vector<Bitset>& sets) {
  std::vector<Bitset> family = sets;
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  // Zero first, then by (count, bits) for a stable element order.
  std::stable_sort(family.begin(), family.end(), [](const Bitset& a, const Bitset& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a < b;
  });
  if (family.empty() || !family.front().empty())
    throw std::invalid_argument("set family must contain the empty set");
  const int n = static_cast<int>(family.size());
  std::vector<std::vector<int>> meet(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Bitset m = family[i] & family[j];
      auto it = std::find(family.begin(), family.end(), m);
      if (it == family.end()) throw std::invalid_argument("set family not closed under intersection");
      meet[i][j] = static_cast<int>(it - family.begin());
    }
  std::vector<std::string> names;
  for (const auto& s : family) {
    auto m = s.members();
    names.push_back("{" + join_map(m.begin(), m.end(), ",", [](int i) { return std::to_string(i); }) + "}");
  }
  return Semilattice(std::move(names), std::move(meet), 0);
}

void Semilattice::validate() const {
  const int n = size();
  if (n == 0) throw std::invalid_argument("empty semilattice");
  if (static_cast<int>(meet_.size()) != n) throw std::invalid_argument("meet table row count mismatch");
  for (const auto& row : meet_) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("meet table column count mismatch");
    for (int v : row)
      if (v < 0 || v >= n) throw std::invalid_argument("meet table entry out of range");
  }
  for (int a = 0; a < n; ++a) {
    if (meet_[a][a] != a) throw std::invalid_argument("meet not idempotent");
    if (meet_[a][zero_] != zero_ || meet_[zero_][a] != zero_)
      throw std::invalid_argument("zero not absorbing");
    for (int b = 0; b < n; ++b) {
      if (meet_[a][b] != meet_[b][a]) throw std::invalid_argument("meet not commutative");
      for (int c = 0; c < n; ++c)
        if (meet_[meet_[a][b]][c] != meet_[a][meet_[b][c]])
          throw std::invalid_argument("meet not associative");
    }
  }
}

std::vector<int> Semilattice::below(int x) const {
  std::vector<int> out;
  for (int y = 0; y < size(); ++y)
    if (leq(y, x)) out.push_back(y);
  return out;
}

std::vector<int> Semilattice::above(int x) const {
  std::vector<int> out;
  for (int y = 0; y < size(); ++y)
    if (leq(x, y)) out.push_back(y);
  return out;
}

std::string Semilattice::element_set_string(const std::vector<int>& xs) const {
  return "{" + join_map(xs.begin(), xs.end(), ",", [&](int i) { return names_[i]; }) + "}";
}

bool is_filter(const Semilattice& P, const Filter& F) {
  if (F.empty() || static_cast<int>(F.size()) == P.size()) return false;
  auto in = [&](int x) { return std::binary_search(F.begin(), F.end(), x); };
  if (in(P.zero())) return false;
  for (int x : F) {
    for (int y : P.above(x))
      if (!in(y)) return false;
    for (int y : F)
      if (!in(P.meet(x, y))) return false;
  }
  return true;
}

std::vector<Filter> enumerate_filters(const Semilattice& P, int bound) {
  if (P.size() > bound) throw std::domain_error("semilattice exceeds the enumeration bound");
  // Every filter of a finite meet semilattice is a principal up-set: the meet
  // of its members is a member and a minimum.
  std::vector<Filter> out;
  for (int x = 0; x < P.size(); ++x) {
    if (x == P.zero()) continue;
    Filter f = P.above(x);
    std::sort(f.begin(), f.end());
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), [](const Filter& a, const Filter& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_ultrafilter(const Semilattice& P, const Filter& F) {
  auto in = [&](int x) { return std::binary_search(F.begin(), F.end(), x); };
  for (int x = 0; x < P.size(); ++x) {
    if (in(x)) continue;
    bool separated = false;
    for (int y : F)
      if (P.meet(x, y) == P.zero()) {
        separated = true;
        break;
      }
    if (!separated) return false;
  }
  return true;
}

bool is_finite_cover(const Semilattice& P, int x, const std::vector<int>& C) {
  for (int c : C)
    if (!P.leq(c, x)) return false;
  for (int y : P.below(x)) {
    if (y == P.zero()) continue;
    bool met = false;
    for (int c : C)
      if (P.meet(c, y) != P.zero()) {
        met = true;
        break;
      }
    if (!met) return false;
  }
  return true;
}

bool is_tight_filter(const Semilattice& P, const Filter& F) {
  auto in = [&](int x) { return std::binary_search(F.begin(), F.end(), x); };
  for (int x : F) {
    // A cover of x avoiding F exists iff the maximal candidate is a cover.
    std::vector<int> cmax;
    for (int y : P.below(x))
      if (y != P.zero() && !in(y)) cmax.push_back(y);
    if (is_finite_cover(P, x, cmax)) return false;
  }
  return true;
}

TightSpace::TightSpace(const Semilattice& P, int bound) : P_(std::make_shared<Semilattice>(P)) {
  auto all = enumerate_filters(P, bound);
  std::vector<Filter> ultra;
  for (const auto& f : all) {
    if (is_tight_filter(P, f)) filters_.push_back(f);
    if (is_ultrafilter(P, f)) ultra.push_back(f);
  }
  if (filters_ != ultra)
    throw std::logic_error("internal consistency error: tight filters differ from ultrafilters on a finite semilattice");
  std::vector<std::string> names;
  for (const auto& f : filters_) names.push_back(P.element_set_string(f));
  tc_ = PowerGba::make(names);
  // {V_x} generates the whole algebra in the finite discrete case.
  auto family = std::vector<GbaElement>{};
  for (int x = 0; x < P.size(); ++x) family.push_back(v(x));
  if (generated_subalgebra(tc_, family).size() != (1u << filters_.size()))
    throw std::logic_error("internal consistency error: {V_x} fails to generate Tc(P)");
}

Bitset TightSpace::basis_bits(int x, const std::vector<int>& excl) const {
  Bitset out(size());
  for (int i = 0; i < size(); ++i) {
    const auto& f = filters_[i];
    auto in = [&](int e) { return std::binary_search(f.begin(), f.end(), e); };
    if (!in(x)) continue;
    bool excluded = false;
    for (int e : excl)
      if (in(e)) {
        excluded = true;
        break;
      }
    if (!excluded) out.set(i);
  }
  return out;
}

GbaElement TightSpace::v(int x, const std::vector<int>& excl) const {
  return tc_->element(basis_bits(x, excl));
}

BasisSet basis_set(const TightSpace& T, int x, const std::vector<int>& excl) {
  BasisSet b;
  b.include = x;
  b.exclude = excl;
  for (int i : T.basis_bits(x, excl).members()) b.resolved.push_back(T.filters()[i]);
  return b;
}

SubSemilattice::SubSemilattice(std::shared_ptr<const Semilattice> P2, std::vector<int> members)
    : P2_(std::move(P2)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!contains(P2_->zero())) throw std::domain_error("subsemilattice must contain 0");
  for (int a : members_)
    for (int b : members_)
      if (!contains(P2_->meet(a, b))) throw std::domain_error("subsemilattice not closed under meet");
}

bool SubSemilattice::contains(int x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

std::vector<int> SubSemilattice::below_in_sub(int x) const {
  std::vector<int> out;
  for (int y : members_)
    if (P2_->leq(y, x)) out.push_back(y);
  return out;
}

std::vector<int> SubSemilattice::above_in_sub(int x) const {
  std::vector<int> out;
  for (int y : members_)
    if (P2_->leq(x, y)) out.push_back(y);
  return out;
}

Semilattice SubSemilattice::as_semilattice() const {
  const int n = static_cast<int>(members_.size());
  std::vector<std::string> names;
  std::vector<std::vector<int>> meet(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) names.push_back(P2_->name(members_[i]));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) meet[i][j] = to_sub_index(P2_->meet(members_[i], members_[j]));
  return Semilattice(std::move(names), std::move(meet), to_sub_index(P2_->zero()));
}

int SubSemilattice::to_sub_index(int big_index) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), big_index);
  if (it == members_.end() || *it != big_index) throw std::domain_error("element not in subsemilattice");
  return static_cast<int>(it - members_.begin());
}

std::optional<Filter> restrict_filter(const SubSemilattice& sub, const Filter& xi) {
  Filter out;
  for (int x : xi)
    if (sub.contains(x)) out.push_back(x);
  if (out.empty()) return std::nullopt;
  return out;
}

bool is_cover_in_sub(const SubSemilattice& sub, int x, const std::vector<int>& C) {
  const auto& P = sub.big();
  for (int y : sub.below_in_sub(x)) {
    if (y == P.zero()) continue;
    bool met = false;
    for (int c : C)
      if (P.meet(c, y) != P.zero()) {
        met = true;
        break;
      }
    if (!met) return false;
  }
  return true;
}

bool preserves_finite_covers(const SubSemilattice& sub) {
  const auto& P = sub.big();
  for (int x : sub.members()) {
    if (x == P.zero()) continue;
    for (int y : P.below(x)) {
      if (y == P.zero()) continue;
      std::vector<int> avoiding;
      for (int c : sub.below_in_sub(x))
        if (c != P.zero() && P.meet(c, y) == P.zero()) avoiding.push_back(c);
      if (is_cover_in_sub(sub, x, avoiding)) return false;
    }
  }
  return true;
}

SufficientConditions check_sufficient_conditions(const SubSemilattice& sub) {
  const auto& P = sub.big();
  SufficientConditions out;

  out.downward_closed = true;
  for (int x : sub.members())
    for (int y : P.below(x))
      if (!sub.contains(y)) out.downward_closed = false;

  out.lemma_cover_condition = true;
  for (int x = 0; x < P.size(); ++x) {
    if (x == P.zero()) continue;
    if (sub.above_in_sub(x).empty()) continue;
    bool witness = false;
    for (int y : sub.members()) {
      if (y == P.zero()) continue;
      bool all_meet = true;
      for (int yp : sub.below_in_sub(y))
        if (yp != P.zero() && P.meet(yp, x) == P.zero()) {
          all_meet = false;
          break;
        }
      if (all_meet) {
        witness = true;
        break;
      }
    }
    if (!witness) out.lemma_cover_condition = false;
  }

  out.lemma_tight_condition = preserves_finite_covers(sub);
  if (out.lemma_tight_condition) {
    for (int x = 0; x < P.size(); ++x) {
      if (x == P.zero()) continue;
      auto ups = sub.above_in_sub(x);
      if (ups.empty()) continue;
      bool witness = false;
      for (int y : ups) {
        // Maximal candidate set: everything in y^{P1,-} orthogonal to x.
        std::vector<int> ys;
        for (int c : sub.below_in_sub(y))
          if (c != P.zero() && P.meet(c, x) == P.zero()) ys.push_back(c);
        std::vector<int> cover = ys;
        cover.push_back(x);
        if (is_finite_cover(P, y, cover)) {
          witness = true;
          break;
        }
      }
      if (!witness) {
        out.lemma_tight_condition = false;
        break;
      }
    }
  }
  return out;
}

GbaElement TcInclusion::map(const GbaElement& u) const {
  GbaElement out = big_space->tc()->bottom();
  const auto& bits = small_space->tc()->bits(u);
  for (int i : bits.members()) out = out.join(atom_image[i]);
  return out;
}

std::vector<GbaElement> TcInclusion::image_family() const {
  std::vector<GbaElement> out;
  const int n = small_space->size();
  for (std::size_t mask = 0; mask < (1ULL << n); ++mask) {
    GbaElement e = big_space->tc()->bottom();
    for (int i = 0; i < n; ++i)
      if (mask & (1ULL << i)) e = e.join(atom_image[i]);
    out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TcInclusion tc_inclusion(const SubSemilattice& sub, std::shared_ptr<const TightSpace> big_space) {
  if (!preserves_finite_covers(sub))
    throw std::domain_error("tc_inclusion requires the subsemilattice to preserve finite covers");
  TcInclusion inc;
  inc.big_space = big_space ? std::move(big_space) : std::make_shared<TightSpace>(sub.big());
  auto small = sub.as_semilattice();
  inc.small_space = std::make_shared<TightSpace>(small);

  // Image of a T(P1) point u: all big tight filters restricting to u.
  for (const auto& u : inc.small_space->filters()) {
    Bitset img(inc.big_space->size());
    for (int j = 0; j < inc.big_space->size(); ++j) {
      auto r = restrict_filter(sub, inc.big_space->filters()[j]);
      if (!r) continue;
      Filter in_sub_idx;
      for (int x : *r) in_sub_idx.push_back(sub.to_sub_index(x));
      std::sort(in_sub_idx.begin(), in_sub_idx.end());
      if (in_sub_idx == u) img.set(j);
    }
    inc.atom_image.push_back(inc.big_space->tc()->element(img));
  }

  inc.injective = true;
  for (const auto& e : inc.atom_image)
    if (e.is_bottom()) inc.injective = false;

  auto family = inc.image_family();
  std::vector<GbaElement> universe;
  for (std::size_t mask = 0; mask < (1ULL << inc.big_space->size()); ++mask) {
    Bitset b(inc.big_space->size());
    for (int i = 0; i < inc.big_space->size(); ++i)
      if (mask & (1ULL << i)) b.set(i);
    universe.push_back(inc.big_space->tc()->element(b));
  }
  inc.is_tight = is_ideal(family, universe);
  return inc;
}

}  // namespace skewgr
