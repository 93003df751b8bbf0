#ifndef SKEWGR_SEMIGROUP_ELEMENT_HPP
#define SKEWGR_SEMIGROUP_ELEMENT_HPP

#include <variant>
#include <vector>

#include "skewgr/util.hpp"

namespace skewgr {

// Element of an inverse semigroup with zero: a tagged union over the handle
// kinds. Zero is the monostate alternative.

struct TablePoint {
  int index = 0;
  auto operator<=>(const TablePoint&) const = default;
};

// Finite path in a directed graph; a vertex is the empty path at that vertex.
struct GraphPath {
  int vertex = 0;  // start vertex
  std::vector<int> edges;
  auto operator<=>(const GraphPath&) const = default;

  int length() const { return static_cast<int>(edges.size()); }
};

struct PathPair {
  GraphPath p, q;  // r(p) = r(q)
  auto operator<=>(const PathPair&) const = default;
};

struct LabelledTriple {
  std::vector<int> alpha, beta;  // label paths
  Bitset set;                    // nonempty member of B_alpha ^ B_beta
  auto operator<=>(const LabelledTriple&) const = default;
};

struct StarUnit {
  auto operator<=>(const StarUnit&) const = default;
};

using SgElem = std::variant<std::monostate, TablePoint, PathPair, LabelledTriple, StarUnit>;

inline bool is_zero(const SgElem& x) { return std::holds_alternative<std::monostate>(x); }
inline SgElem sg_zero() { return SgElem{}; }

}  // namespace skewgr

#endif
