#ifndef SKEWGR_GROUP_HPP
#define SKEWGR_GROUP_HPP

#include <memory>
#include <string>
#include <vector>

namespace skewgr {

// Group element handle. Free groups carry reduced words of signed generator
// indices (+(i+1) / -(i+1)); finite table groups carry one element index.
struct GroupWord {
  std::vector<int> syms;

  bool operator==(const GroupWord& o) const { return syms == o.syms; }
  bool operator!=(const GroupWord& o) const { return !(*this == o); }
  bool operator<(const GroupWord& o) const {
    if (syms.size() != o.syms.size()) return syms.size() < o.syms.size();
    return syms < o.syms;
  }
  int length() const { return static_cast<int>(syms.size()); }
  bool is_identity() const { return syms.empty(); }
};

class Group {
 public:
  enum class Kind { finite, free };

  static std::shared_ptr<const Group> free_group(std::vector<std::string> generators);
  static std::shared_ptr<const Group> finite_table(std::vector<std::string> names,
                                                   std::vector<std::vector<int>> table);
  static std::shared_ptr<const Group> trivial();

  Kind kind() const { return kind_; }
  int generator_count() const { return static_cast<int>(generator_names_.size()); }
  const std::vector<std::string>& generator_names() const { return generator_names_; }
  int order() const;  // finite kind only

  GroupWord identity() const { return {}; }
  GroupWord generator(int i, bool inverse = false) const;
  GroupWord element(int index) const;  // finite kind
  GroupWord mul(const GroupWord& a, const GroupWord& b) const;
  GroupWord inv(const GroupWord& a) const;

  // All elements (finite kind) or all reduced words up to a length bound.
  std::vector<GroupWord> words_up_to(int length_bound) const;

  GroupWord parse_word(const std::string& text) const;  // "a.b^-1", "e" = identity
  std::string to_string(const GroupWord& w) const;

 private:
  Group(Kind k) : kind_(k) {}
  void validate_table() const;

  Kind kind_;
  std::vector<std::string> generator_names_;  // free kind: alphabet; finite kind: element names
  std::vector<std::vector<int>> table_;       // finite kind
  int finite_identity_ = 0;
  std::vector<int> finite_inverse_;
};

// Free reduction of a raw signed-generator sequence.
GroupWord reduce_word(const std::vector<int>& raw);

}  // namespace skewgr

#endif
