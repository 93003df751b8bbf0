#include "skewgr/group.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "skewgr/util.hpp"

namespace skewgr {

GroupWord reduce_word(const std::vector<int>& raw) {
  GroupWord out;
  for (int s : raw) {
    if (s == 0) throw std::invalid_argument("zero is not a generator symbol");
    if (!out.syms.empty() && out.syms.back() == -s)
      out.syms.pop_back();
    else
      out.syms.push_back(s);
  }
  return out;
}

std::shared_ptr<const Group> Group::free_group(std::vector<std::string> generators) {
  auto g = std::shared_ptr<Group>(new Group(Kind::free));
  g->generator_names_ = std::move(generators);
  return g;
}

std::shared_ptr<const Group> Group::finite_table(std::vector<std::string> names,
                                                 std::vector<std::vector<int>> table) {
  auto g = std::shared_ptr<Group>(new Group(Kind::finite));
  g->generator_names_ = std::move(names);
  g->table_ = std::move(table);
  g->validate_table();
  return g;
}

std::shared_ptr<const Group> Group::trivial() { return finite_table({"e"}, {{0}}); }

void Group::validate_table() const {
  const int n = static_cast<int>(generator_names_.size());
  if (static_cast<int>(table_.size()) != n) throw std::invalid_argument("bad group table");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("bad group table row");
    for (int v : row)
      if (v < 0 || v >= n) throw std::invalid_argument("group table entry out of range");
  }
  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n; ++a) ok &= (table_[e][a] == a && table_[a][e] == a);
    if (ok) identity = e;
  }
  if (identity < 0) throw std::invalid_argument("group table has no identity");
  auto* self = const_cast<Group*>(this);
  self->finite_identity_ = identity;
  self->finite_inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (table_[a][b] == identity && table_[b][a] == identity) self->finite_inverse_[a] = b;
    if (finite_inverse_[a] < 0) throw std::invalid_argument("group table element without inverse");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw std::invalid_argument("group table not associative");
}

int Group::order() const {
  if (kind_ != Kind::finite) throw std::domain_error("free groups are infinite");
  return static_cast<int>(generator_names_.size());
}

GroupWord Group::generator(int i, bool inverse) const {
  if (kind_ != Kind::free) throw std::domain_error("generator words exist on free groups only");
  if (i < 0 || i >= generator_count()) throw std::invalid_argument("unknown generator index");
  return {{inverse ? -(i + 1) : (i + 1)}};
}

GroupWord Group::element(int index) const {
  if (kind_ != Kind::finite) throw std::domain_error("element index applies to finite groups only");
  if (index == finite_identity_) return {};
  return {{index + 1}};
}

GroupWord Group::mul(const GroupWord& a, const GroupWord& b) const {
  if (kind_ == Kind::free) {
    std::vector<int> raw = a.syms;
    raw.insert(raw.end(), b.syms.begin(), b.syms.end());
    return reduce_word(raw);
  }
  int x = a.is_identity() ? finite_identity_ : a.syms[0] - 1;
  int y = b.is_identity() ? finite_identity_ : b.syms[0] - 1;
  return element(table_[x][y]);
}

GroupWord Group::inv(const GroupWord& a) const {
  if (kind_ == Kind::free) {
    GroupWord out;
    for (auto it = a.syms.rbegin(); it != a.syms.rend(); ++it) out.syms.push_back(-*it);
    return out;
  }
  if (a.is_identity()) return {};
  return element(finite_inverse_[a.syms[0] - 1]);
}

std::vector<GroupWord> Group::words_up_to(int length_bound) const {
  std::vector<GroupWord> out;
  if (kind_ == Kind::finite) {
    for (int i = 0; i < order(); ++i) out.push_back(element(i));
    std::sort(out.begin(), out.end());
    return out;
  }
  std::set<GroupWord> seen;
  std::vector<GroupWord> frontier = {identity()};
  seen.insert(identity());
  for (int len = 0; len < length_bound; ++len) {
    std::vector<GroupWord> next;
    for (const auto& w : frontier)
      for (int i = 0; i < generator_count(); ++i)
        for (bool invf : {false, true}) {
          GroupWord n = mul(w, generator(i, invf));
          if (n.length() == len + 1 && seen.insert(n).second) next.push_back(n);
        }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

GroupWord Group::parse_word(const std::string& text) const {
  const bool e_is_generator =
      std::find(generator_names_.begin(), generator_names_.end(), "e") != generator_names_.end();
  if (text.empty() || text == "1" || (text == "e" && !e_is_generator)) return identity();
  GroupWord acc = identity();
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t dot = text.find('.', pos);
    std::string tok = text.substr(pos, dot == std::string::npos ? std::string::npos : dot - pos);
    pos = dot == std::string::npos ? text.size() : dot + 1;
    bool invf = false;
    if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
      invf = true;
      tok = tok.substr(0, tok.size() - 3);
    }
    auto it = std::find(generator_names_.begin(), generator_names_.end(), tok);
    if (it == generator_names_.end()) throw std::invalid_argument("unknown generator symbol '" + tok + "'");
    int i = static_cast<int>(it - generator_names_.begin());
    GroupWord piece = kind_ == Kind::free ? generator(i, invf) : (invf ? inv(element(i)) : element(i));
    acc = mul(acc, piece);
  }
  return acc;
}

std::string Group::to_string(const GroupWord& w) const {
  if (w.is_identity()) {
    // "e" unless a generator claims that name
    bool e_is_generator =
        std::find(generator_names_.begin(), generator_names_.end(), "e") != generator_names_.end();
    return e_is_generator ? "1" : "e";
  }
  if (kind_ == Kind::finite) return generator_names_[w.syms[0] - 1];
  return join_map(w.syms.begin(), w.syms.end(), ".", [&](int s) {
    int i = (s > 0 ? s : -s) - 1;
    return s > 0 ? generator_names_[i] : generator_names_[i] + "^-1";
  });
}

}  // namespace skewgr
