#include "skewgr/ring.hpp"

#include <numeric>
#include <stdexcept>

namespace skewgr {

namespace {

RingValue make_rational(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
  return {num, den};
}

long long mod_reduce(long long v, long long n) {
  long long r = v % n;
  return r < 0 ? r + n : r;
}

}  // namespace

Ring Ring::mod(long long n) {
  if (n < 2) throw std::invalid_argument("modulus must be at least 2");
  return Ring(Kind::mod, n);
}

Ring Ring::parse(const std::string& text) {
  if (text == "integers") return integers();
  if (text == "rationals") return rationals();
  if (text.rfind("mod:", 0) == 0) return mod(std::stoll(text.substr(4)));
  throw std::invalid_argument("unknown ring '" + text + "'");
}

RingValue Ring::from_int(long long v) const {
  if (kind_ == Kind::mod) return {mod_reduce(v, modulus_), 1};
  return {v, 1};
}

RingValue Ring::from_fraction(long long num, long long den) const {
  if (kind_ != Kind::rationals) {
    if (den != 1) throw std::invalid_argument("fractional value in a non-rational ring");
    return from_int(num);
  }
  return make_rational(num, den);
}

RingValue Ring::add(const RingValue& a, const RingValue& b) const {
  switch (kind_) {
    case Kind::integers:
      return {a.num + b.num, 1};
    case Kind::mod:
      return {mod_reduce(a.num + b.num, modulus_), 1};
    case Kind::rationals:
      return make_rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  return zero();
}

RingValue Ring::neg(const RingValue& a) const {
  if (kind_ == Kind::mod) return {mod_reduce(-a.num, modulus_), 1};
  return {-a.num, a.den};
}

RingValue Ring::mul(const RingValue& a, const RingValue& b) const {
  switch (kind_) {
    case Kind::integers:
      return {a.num * b.num, 1};
    case Kind::mod:
      return {mod_reduce(a.num * b.num, modulus_), 1};
    case Kind::rationals:
      return make_rational(a.num * b.num, a.den * b.den);
  }
  return zero();
}

RingValue Ring::sample_nonzero(Rng& rng) const {
  switch (kind_) {
    case Kind::integers: {
      long long v = rng.range(-4, 4);
      return from_int(v == 0 ? 1 : v);
    }
    case Kind::mod:
      return from_int(1 + static_cast<long long>(rng.below(static_cast<std::uint64_t>(modulus_ - 1))));
    case Kind::rationals: {
      long long num = rng.range(-3, 3);
      if (num == 0) num = 1;
      return make_rational(num, rng.range(1, 3));
    }
  }
  return one();
}

std::string Ring::to_string(const RingValue& a) const {
  if (a.den == 1) return std::to_string(a.num);
  return std::to_string(a.num) + "/" + std::to_string(a.den);
}

std::string Ring::describe() const {
  switch (kind_) {
    case Kind::integers:
      return "integers";
    case Kind::mod:
      return "mod:" + std::to_string(modulus_);
    case Kind::rationals:
      return "rationals";
  }
  return "?";
}

}  // namespace skewgr
