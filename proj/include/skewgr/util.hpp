#ifndef SKEWGR_UTIL_HPP
#define SKEWGR_UTIL_HPP

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace skewgr {

// Deterministic splitmix64 generator. The standard <random> distributions are
// implementation-defined, so reports seeded through this stay byte-identical
// across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : state_(seed + 0x9e3779b97f4a7c15ULL) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  int range(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool flip() { return (next() & 1u) != 0; }

 private:
  std::uint64_t state_;
};

// Fixed-universe bitset used for finite power algebras and vertex sets.
class Bitset {
 public:
  Bitset() : size_(0) {}
  explicit Bitset(int size) : size_(size), words_((size + 63) / 64, 0) {}

  static Bitset singleton(int size, int i) {
    Bitset b(size);
    b.set(i);
    return b;
  }

  static Bitset full(int size) {
    Bitset b(size);
    for (int i = 0; i < size; ++i) b.set(i);
    return b;
  }

  int size() const { return size_; }

  void set(int i) { words_[i / 64] |= (1ULL << (i % 64)); }
  void reset(int i) { words_[i / 64] &= ~(1ULL << (i % 64)); }
  bool test(int i) const { return (words_[i / 64] >> (i % 64)) & 1u; }

  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  int count() const {
    int c = 0;
    for (int i = 0; i < size_; ++i)
      if (test(i)) ++c;
    return c;
  }

  Bitset operator&(const Bitset& o) const { return zip(o, [](std::uint64_t a, std::uint64_t b) { return a & b; }); }
  Bitset operator|(const Bitset& o) const { return zip(o, [](std::uint64_t a, std::uint64_t b) { return a | b; }); }
  Bitset minus(const Bitset& o) const { return zip(o, [](std::uint64_t a, std::uint64_t b) { return a & ~b; }); }

  bool subset_of(const Bitset& o) const { return (minus(o)).empty(); }

  auto operator<=>(const Bitset& o) const = default;
  bool operator==(const Bitset& o) const = default;

  std::vector<int> members() const {
    std::vector<int> out;
    for (int i = 0; i < size_; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }

 private:
  template <typename F>
  Bitset zip(const Bitset& o, F f) const {
    Bitset r(size_);
    for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] = f(words_[w], o.words_[w]);
    return r;
  }

  int size_;
  std::vector<std::uint64_t> words_;
};

template <typename It, typename F>
std::string join_map(It first, It last, const std::string& sep, F f) {
  std::ostringstream os;
  bool head = true;
  for (; first != last; ++first) {
    if (!head) os << sep;
    head = false;
    os << f(*first);
  }
  return os.str();
}

}  // namespace skewgr

#endif
