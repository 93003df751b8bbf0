#include "skewgr/lc.hpp"

#include <algorithm>
#include <stdexcept>

namespace skewgr {

GbaElement LcFunction::dom() const {
  GbaElement d = space_->bottom();
  for (const auto& t : terms_) d = d.join(t.support);
  return d;
}

bool LcFunction::operator==(const LcFunction& o) const {
  if (space_ != o.space_ || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].value != o.terms_[i].value || terms_[i].support != o.terms_[i].support) return false;
  return true;
}

bool LcFunction::operator<(const LcFunction& o) const {
  if (terms_.size() != o.terms_.size()) return terms_.size() < o.terms_.size();
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].value != o.terms_[i].value) return terms_[i].value < o.terms_[i].value;
    if (terms_[i].support != o.terms_[i].support) return terms_[i].support < o.terms_[i].support;
  }
  return false;
}

std::string LcFunction::to_string() const {
  if (terms_.empty()) return "0";
  return join_map(terms_.begin(), terms_.end(), " + ", [&](const Term& t) {
    return ring_.to_string(t.value) + "·[" + t.support.to_string() + "]";
  });
}

LcFunction lc_normalize(const Ring& ring, const std::shared_ptr<const GbaSpace>& space,
                        const std::vector<LcFunction::Term>& raw) {
  // Disjoint refinement: fold each raw term into a list of disjoint regions.
  std::vector<LcFunction::Term> regions;
  for (const auto& t : raw) {
    if (ring.is_zero(t.value) || t.support.is_bottom()) continue;
    GbaElement rest = t.support;
    std::vector<LcFunction::Term> next;
    for (const auto& reg : regions) {
      GbaElement overlap = reg.support.meet(rest);
      if (overlap.is_bottom()) {
        next.push_back(reg);
        continue;
      }
      GbaElement keep = reg.support.diff(rest);
      if (!keep.is_bottom()) next.push_back({reg.value, keep});
      RingValue sum = ring.add(reg.value, t.value);
      if (!ring.is_zero(sum)) next.push_back({sum, overlap});
      rest = rest.diff(reg.support);
    }
    if (!rest.is_bottom()) next.push_back({t.value, rest});
    regions = std::move(next);
  }
  // Merge equal values, sort by value encoding.
  std::sort(regions.begin(), regions.end(),
            [](const LcFunction::Term& a, const LcFunction::Term& b) { return a.value < b.value; });
  LcFunction out(ring, space);
  for (const auto& reg : regions) {
    if (!out.terms_.empty() && out.terms_.back().value == reg.value)
      out.terms_.back().support = out.terms_.back().support.join(reg.support);
    else
      out.terms_.push_back(reg);
  }
  return out;
}

LcFunction lc_normalize_in(const Ring& ring, const IdealHandle& ideal,
                           const std::vector<LcFunction::Term>& raw) {
  for (const auto& t : raw)
    if (!ideal.contains(t.support))
      throw std::domain_error("coefficient support outside the ideal");
  return lc_normalize(ring, ideal.space(), raw);
}

LcFunction lc_indicator(const Ring& ring, const GbaElement& support) {
  return lc_normalize(ring, support.space(), {{ring.one(), support}});
}

LcFunction lc_add(const LcFunction& f, const LcFunction& g) {
  if (f.space() != g.space()) throw std::domain_error("lc_add across spaces");
  std::vector<LcFunction::Term> raw = f.terms();
  raw.insert(raw.end(), g.terms().begin(), g.terms().end());
  return lc_normalize(f.ring(), f.space(), raw);
}

LcFunction lc_mul(const LcFunction& f, const LcFunction& g) {
  if (f.space() != g.space()) throw std::domain_error("lc_mul across spaces");
  std::vector<LcFunction::Term> raw;
  for (const auto& a : f.terms())
    for (const auto& b : g.terms()) raw.push_back({f.ring().mul(a.value, b.value), a.support.meet(b.support)});
  return lc_normalize(f.ring(), f.space(), raw);
}

LcFunction lc_scale(const RingValue& r, const LcFunction& f) {
  std::vector<LcFunction::Term> raw;
  for (const auto& t : f.terms()) raw.push_back({f.ring().mul(r, t.value), t.support});
  return lc_normalize(f.ring(), f.space(), raw);
}

LcFunction lc_neg(const LcFunction& f) { return lc_scale(f.ring().neg(f.ring().one()), f); }

LcFunction lc_map_support(const LcFunction& f, const std::function<GbaElement(const GbaElement&)>& phi) {
  std::vector<LcFunction::Term> raw;
  std::shared_ptr<const GbaSpace> space = f.space();
  for (const auto& t : f.terms()) {
    auto img = phi(t.support);
    space = img.space();
    raw.push_back({t.value, img});
  }
  return lc_normalize(f.ring(), space, raw);
}

RingValue lc_eval_at(const LcFunction& f, const GbaElement& atom) {
  for (const auto& t : f.terms())
    if (atom.leq(t.support)) return t.value;
  return f.ring().zero();
}

}  // namespace skewgr
