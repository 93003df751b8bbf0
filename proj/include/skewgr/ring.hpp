#ifndef SKEWGR_RING_HPP
#define SKEWGR_RING_HPP

#include <cstdint>
#include <string>

#include "skewgr/util.hpp"

namespace skewgr {

// One scalar of whichever coefficient ring is active. Integers keep den == 1,
// residues keep num in [0, n), rationals are normalized with den > 0.
struct RingValue {
  long long num = 0;
  long long den = 1;

  bool operator==(const RingValue& o) const { return num == o.num && den == o.den; }
  bool operator!=(const RingValue& o) const { return !(*this == o); }
  // Canonical encoding order, used only to make normal forms deterministic.
  bool operator<(const RingValue& o) const {
    if (num != o.num) return num < o.num;
    return den < o.den;
  }
};

class Ring {
 public:
  enum class Kind { integers, mod, rationals };

  static Ring integers() { return Ring(Kind::integers, 0); }
  static Ring mod(long long n);
  static Ring rationals() { return Ring(Kind::rationals, 0); }
  static Ring parse(const std::string& text);  // "integers" | "mod:n" | "rationals"

  Kind kind() const { return kind_; }
  long long modulus() const { return modulus_; }

  RingValue zero() const { return {0, 1}; }
  RingValue one() const { return from_int(1); }
  RingValue from_int(long long v) const;
  RingValue from_fraction(long long num, long long den) const;

  RingValue add(const RingValue& a, const RingValue& b) const;
  RingValue neg(const RingValue& a) const;
  RingValue sub(const RingValue& a, const RingValue& b) const { return add(a, neg(b)); }
  RingValue mul(const RingValue& a, const RingValue& b) const;

  bool is_zero(const RingValue& a) const { return a.num == 0; }

  // Small nonzero scalar for randomized suites.
  RingValue sample_nonzero(Rng& rng) const;

  std::string to_string(const RingValue& a) const;
  std::string describe() const;

  bool operator==(const Ring& o) const { return kind_ == o.kind_ && modulus_ == o.modulus_; }

 private:
  Ring(Kind k, long long m) : kind_(k), modulus_(m) {}

  Kind kind_;
  long long modulus_;
};

}  // namespace skewgr

#endif
