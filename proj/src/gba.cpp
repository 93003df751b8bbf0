#include "skewgr/gba.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace skewgr {

// ---- GbaElement ------------------------------------------------------------

GbaElement GbaElement::meet(const GbaElement& o) const { return space_->meet(*this, o); }
GbaElement GbaElement::join(const GbaElement& o) const { return space_->join(*this, o); }
GbaElement GbaElement::diff(const GbaElement& o) const { return space_->diff(*this, o); }
bool GbaElement::leq(const GbaElement& o) const { return space_->leq(*this, o); }
bool GbaElement::is_bottom() const { return space_->equal(*this, space_->bottom()); }

bool GbaElement::operator==(const GbaElement& o) const {
  if (space_ != o.space_) return false;
  return space_->equal(*this, o);
}

bool GbaElement::operator<(const GbaElement& o) const {
  if (space_ != o.space_) return space_.get() < o.space_.get();
  return space_->compare(*this, o) < 0;
}

std::string GbaElement::to_string() const { return space_->to_string(*this); }

// ---- GbaSpace --------------------------------------------------------------

void GbaSpace::check_mine(const GbaElement& x) const {
  if (x.space().get() != this) throw std::domain_error("operands belong to different GBA spaces");
}

GbaElement GbaSpace::bottom() const { return wrap(v_bottom()); }

GbaElement GbaSpace::meet(const GbaElement& a, const GbaElement& b) const {
  check_mine(a);
  check_mine(b);
  return wrap(v_meet(a.value(), b.value()));
}

GbaElement GbaSpace::join(const GbaElement& a, const GbaElement& b) const {
  check_mine(a);
  check_mine(b);
  return wrap(v_join(a.value(), b.value()));
}

GbaElement GbaSpace::diff(const GbaElement& a, const GbaElement& b) const {
  check_mine(a);
  check_mine(b);
  return wrap(v_diff(a.value(), b.value()));
}

bool GbaSpace::equal(const GbaElement& a, const GbaElement& b) const { return compare(a, b) == 0; }

int GbaSpace::compare(const GbaElement& a, const GbaElement& b) const {
  check_mine(a);
  check_mine(b);
  return v_compare(a.value(), b.value());
}

bool GbaSpace::leq(const GbaElement& a, const GbaElement& b) const { return equal(meet(a, b), a); }

GbaElement GbaSpace::top() const { throw std::domain_error(describe() + " has no top element"); }

std::vector<GbaElement> GbaSpace::atoms() const {
  throw std::domain_error(describe() + " does not enumerate atoms");
}

GbaElement GbaSpace::sample_below(const GbaElement& bound, Rng& rng) const {
  auto ps = pieces(bound);
  GbaElement out = bottom();
  for (const auto& p : ps)
    if (rng.flip()) out = join(out, p);
  return out;
}

GbaElement GbaSpace::sample_element(Rng& rng) const {
  if (!has_top()) throw std::domain_error(describe() + " cannot sample without a top element");
  return sample_below(top(), rng);
}

// ---- IdealHandle -----------------------------------------------------------

IdealHandle IdealHandle::whole(std::shared_ptr<const GbaSpace> space) {
  IdealHandle h;
  h.space_ = space;
  if (space->has_top()) h.bound_ = space->top();
  return h;
}

IdealHandle IdealHandle::below(const std::vector<GbaElement>& bounds) {
  if (bounds.empty()) throw std::invalid_argument("ideal_below requires at least one bound");
  IdealHandle h;
  h.space_ = bounds.front().space();
  GbaElement j = bounds.front();
  for (std::size_t i = 1; i < bounds.size(); ++i) j = j.join(bounds[i]);
  h.bound_ = j;
  return h;
}

IdealHandle IdealHandle::trivial(std::shared_ptr<const GbaSpace> space) {
  IdealHandle h;
  h.space_ = space;
  h.bound_ = space->bottom();
  return h;
}

bool IdealHandle::contains(const GbaElement& x) const {
  if (!bound_) return true;
  return x.leq(*bound_);
}

IdealHandle IdealHandle::intersect(const IdealHandle& o) const {
  if (space_ != o.space_) throw std::domain_error("ideal intersection across spaces");
  if (!bound_) return o;
  if (!o.bound_) return *this;
  IdealHandle h;
  h.space_ = space_;
  h.bound_ = bound_->meet(*o.bound_);
  return h;
}

// ---- module operations -----------------------------------------------------

GbaElement lattice_ops(const GbaSpace& space, LatticeOp op, const GbaElement& a, const GbaElement& b) {
  switch (op) {
    case LatticeOp::meet:
      return space.meet(a, b);
    case LatticeOp::join:
      return space.join(a, b);
    case LatticeOp::diff:
      return space.diff(a, b);
  }
  throw std::invalid_argument("bad lattice op");
}

bool is_ideal(const std::vector<GbaElement>& subset, const std::vector<GbaElement>& universe) {
  auto in = [&](const GbaElement& x) {
    return std::find(subset.begin(), subset.end(), x) != subset.end();
  };
  for (const auto& a : subset)
    for (const auto& b : subset)
      if (!in(a.join(b))) return false;
  for (const auto& a : subset)
    for (const auto& b : universe)
      if (!in(a.meet(b))) return false;
  return true;
}

IdealHandle ideal_below(const std::vector<GbaElement>& bounds) { return IdealHandle::below(bounds); }

bool is_cover(const std::vector<GbaElement>& family, const GbaElement& probe) {
  if (family.empty()) return probe.is_bottom();
  GbaElement j = family.front();
  for (std::size_t i = 1; i < family.size(); ++i) j = j.join(family[i]);
  return probe.leq(j);
}

std::vector<GbaElement> generated_subalgebra(const std::shared_ptr<const GbaSpace>& space,
                                             const std::vector<GbaElement>& family) {
  if (!space->finite())
    throw std::domain_error("generated_subalgebra requires a finite realization");
  std::set<GbaElement> closure(family.begin(), family.end());
  closure.insert(space->bottom());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<GbaElement> snapshot(closure.begin(), closure.end());
    for (const auto& a : snapshot)
      for (const auto& b : snapshot)
        for (auto op : {LatticeOp::meet, LatticeOp::join, LatticeOp::diff})
          grew |= closure.insert(lattice_ops(*space, op, a, b)).second;
  }
  return {closure.begin(), closure.end()};
}

bool is_gba_morphism(const std::function<GbaElement(const GbaElement&)>& f,
                     const std::vector<GbaElement>& source_elements, const GbaSpace& target) {
  if (source_elements.empty()) return true;
  const auto& src = *source_elements.front().space();
  if (f(src.bottom()) != target.bottom()) return false;
  for (const auto& a : source_elements)
    for (const auto& b : source_elements) {
      if (f(a.meet(b)) != f(a).meet(f(b))) return false;
      if (f(a.join(b)) != f(a).join(f(b))) return false;
      if (f(a.diff(b)) != f(a).diff(f(b))) return false;
    }
  return true;
}

std::vector<GbaElement> elements_below(const GbaElement& bound, int max_pieces) {
  auto ps = bound.space()->pieces(bound);
  if (static_cast<int>(ps.size()) > max_pieces)
    throw std::domain_error("too many pieces to enumerate elements below bound");
  std::vector<GbaElement> out;
  const std::size_t n = ps.size();
  for (std::size_t mask = 0; mask < (1ULL << n); ++mask) {
    GbaElement e = bound.space()->bottom();
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1ULL << i)) e = e.join(ps[i]);
    out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---- PowerGba --------------------------------------------------------------

namespace {
struct BitsValue : GbaValue {
  explicit BitsValue(Bitset b) : bits(std::move(b)) {}
  Bitset bits;
};
const Bitset& as_bits(const GbaValue& v) { return static_cast<const BitsValue&>(v).bits; }
}  // namespace

std::shared_ptr<const PowerGba> PowerGba::make(std::vector<std::string> atom_names) {
  return std::shared_ptr<const PowerGba>(new PowerGba(std::move(atom_names)));
}

GbaElement PowerGba::element(const Bitset& bits) const {
  if (bits.size() != atom_count()) throw std::invalid_argument("bitset size mismatch");
  return wrap(std::make_shared<BitsValue>(bits));
}

GbaElement PowerGba::subset(const std::vector<int>& atom_indices) const {
  Bitset b(atom_count());
  for (int i : atom_indices) b.set(i);
  return element(b);
}

GbaElement PowerGba::atom(int i) const { return element(Bitset::singleton(atom_count(), i)); }

const Bitset& PowerGba::bits(const GbaElement& x) const {
  check_mine(x);
  return as_bits(x.value());
}

std::string PowerGba::describe() const {
  return "power GBA on " + std::to_string(atom_count()) + " atoms";
}

GbaElement PowerGba::top() const { return element(Bitset::full(atom_count())); }

std::vector<GbaElement> PowerGba::atoms() const {
  std::vector<GbaElement> out;
  for (int i = 0; i < atom_count(); ++i) out.push_back(atom(i));
  return out;
}

std::vector<GbaElement> PowerGba::pieces(const GbaElement& x) const {
  check_mine(x);
  std::vector<GbaElement> out;
  for (int i : as_bits(x.value()).members()) out.push_back(atom(i));
  return out;
}

GbaElement PowerGba::sample_below(const GbaElement& bound, Rng& rng) const {
  check_mine(bound);
  Bitset b(atom_count());
  for (int i : as_bits(bound.value()).members())
    if (rng.flip()) b.set(i);
  return element(b);
}

std::string PowerGba::to_string(const GbaElement& x) const {
  check_mine(x);
  auto m = as_bits(x.value()).members();
  return "{" + join_map(m.begin(), m.end(), ",", [&](int i) { return atom_names_[i]; }) + "}";
}

GbaSpace::ValP PowerGba::v_bottom() const { return std::make_shared<BitsValue>(Bitset(atom_count())); }

GbaSpace::ValP PowerGba::v_meet(const GbaValue& a, const GbaValue& b) const {
  return std::make_shared<BitsValue>(as_bits(a) & as_bits(b));
}

GbaSpace::ValP PowerGba::v_join(const GbaValue& a, const GbaValue& b) const {
  return std::make_shared<BitsValue>(as_bits(a) | as_bits(b));
}

GbaSpace::ValP PowerGba::v_diff(const GbaValue& a, const GbaValue& b) const {
  return std::make_shared<BitsValue>(as_bits(a).minus(as_bits(b)));
}

int PowerGba::v_compare(const GbaValue& a, const GbaValue& b) const {
  const Bitset &x = as_bits(a), &y = as_bits(b);
  if (x == y) return 0;
  return x < y ? -1 : 1;
}

// ---- FcGba -----------------------------------------------------------------

namespace {
struct FcValue : GbaValue {
  FcValue(std::vector<int> s, bool c) : support(std::move(s)), cofinite(c) {}
  std::vector<int> support;  // sorted, unique; members if !cofinite, removed if cofinite
  bool cofinite;
};

const FcValue& as_fc(const GbaValue& v) { return static_cast<const FcValue&>(v); }

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> set_inter(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> set_minus(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}
}  // namespace

std::shared_ptr<const FcGba> FcGba::make(bool allow_cofinite) {
  return std::shared_ptr<const FcGba>(new FcGba(allow_cofinite));
}

GbaElement FcGba::finite_set(const std::vector<int>& members) const {
  return wrap(std::make_shared<FcValue>(sorted_unique(members), false));
}

GbaElement FcGba::cofinite_set(const std::vector<int>& removed) const {
  if (!allow_cofinite_) throw std::domain_error("this realization holds finite sets only");
  return wrap(std::make_shared<FcValue>(sorted_unique(removed), true));
}

bool FcGba::is_cofinite(const GbaElement& x) const {
  check_mine(x);
  return as_fc(x.value()).cofinite;
}

std::vector<int> FcGba::support(const GbaElement& x) const {
  check_mine(x);
  return as_fc(x.value()).support;
}

std::string FcGba::describe() const {
  return allow_cofinite_ ? "finite/cofinite GBA over countable atoms" : "finite-set GBA over countable atoms";
}

GbaElement FcGba::top() const {
  if (!allow_cofinite_) return GbaSpace::top();
  return cofinite_set({});
}

std::vector<GbaElement> FcGba::pieces(const GbaElement& x) const {
  check_mine(x);
  const auto& v = as_fc(x.value());
  std::vector<GbaElement> out;
  if (!v.cofinite) {
    for (int i : v.support) out.push_back(finite_set({i}));
  } else {
    // Split off the first few fresh singletons; keep one cofinite remainder.
    std::vector<int> removed = v.support;
    int next = 0;
    for (int k = 0; k < 3; ++k) {
      while (std::binary_search(removed.begin(), removed.end(), next)) ++next;
      out.push_back(finite_set({next}));
      removed.push_back(next);
      removed = sorted_unique(removed);
    }
    out.push_back(wrap(std::make_shared<FcValue>(removed, true)));
  }
  return out;
}

GbaElement FcGba::sample_below(const GbaElement& bound, Rng& rng) const {
  check_mine(bound);
  const auto& v = as_fc(bound.value());
  if (!v.cofinite) {
    std::vector<int> keep;
    for (int i : v.support)
      if (rng.flip()) keep.push_back(i);
    return finite_set(keep);
  }
  if (rng.flip()) {
    // A finite subset of the cofinite bound.
    std::vector<int> keep;
    int next = 0;
    int n = static_cast<int>(rng.below(4));
    for (int k = 0; k < n; ++k) {
      while (std::binary_search(v.support.begin(), v.support.end(), next)) ++next;
      keep.push_back(next);
      ++next;
    }
    return finite_set(keep);
  }
  std::vector<int> removed = v.support;
  int extra = static_cast<int>(rng.below(3));
  for (int k = 0; k < extra; ++k) removed.push_back(static_cast<int>(rng.below(8)));
  return cofinite_set(removed);
}

GbaElement FcGba::sample_element(Rng& rng) const {
  std::vector<int> members;
  for (int i = 0; i < 8; ++i)
    if (rng.flip()) members.push_back(i);
  if (allow_cofinite_ && rng.flip()) return cofinite_set(members);
  return finite_set(members);
}

std::string FcGba::to_string(const GbaElement& x) const {
  check_mine(x);
  const auto& v = as_fc(x.value());
  std::string body =
      "{" + join_map(v.support.begin(), v.support.end(), ",", [](int i) { return std::to_string(i); }) + "}";
  return v.cofinite ? "~" + body : body;
}

GbaSpace::ValP FcGba::v_bottom() const { return std::make_shared<FcValue>(std::vector<int>{}, false); }

GbaSpace::ValP FcGba::v_meet(const GbaValue& a, const GbaValue& b) const {
  const auto &x = as_fc(a), &y = as_fc(b);
  if (!x.cofinite && !y.cofinite) return std::make_shared<FcValue>(set_inter(x.support, y.support), false);
  if (x.cofinite && y.cofinite) return std::make_shared<FcValue>(set_union(x.support, y.support), true);
  const auto& fin = x.cofinite ? y : x;
  const auto& cof = x.cofinite ? x : y;
  return std::make_shared<FcValue>(set_minus(fin.support, cof.support), false);
}

GbaSpace::ValP FcGba::v_join(const GbaValue& a, const GbaValue& b) const {
  const auto &x = as_fc(a), &y = as_fc(b);
  if (!x.cofinite && !y.cofinite) return std::make_shared<FcValue>(set_union(x.support, y.support), false);
  if (x.cofinite && y.cofinite) return std::make_shared<FcValue>(set_inter(x.support, y.support), true);
  const auto& fin = x.cofinite ? y : x;
  const auto& cof = x.cofinite ? x : y;
  return std::make_shared<FcValue>(set_minus(cof.support, fin.support), true);
}

GbaSpace::ValP FcGba::v_diff(const GbaValue& a, const GbaValue& b) const {
  const auto &x = as_fc(a), &y = as_fc(b);
  if (!y.cofinite) {
    if (!x.cofinite) return std::make_shared<FcValue>(set_minus(x.support, y.support), false);
    return std::make_shared<FcValue>(set_union(x.support, y.support), true);
  }
  // b cofinite: a \ b = a meet (complement of b) = a meet finite(y.support)
  if (!x.cofinite) return std::make_shared<FcValue>(set_inter(x.support, y.support), false);
  return std::make_shared<FcValue>(set_minus(y.support, x.support), false);
}

int FcGba::v_compare(const GbaValue& a, const GbaValue& b) const {
  const auto &x = as_fc(a), &y = as_fc(b);
  if (x.cofinite != y.cofinite) return x.cofinite ? 1 : -1;
  if (x.support == y.support) return 0;
  return x.support < y.support ? -1 : 1;
}

}  // namespace skewgr
