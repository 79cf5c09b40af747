#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "drshadow/base_space.hpp"
#include "drshadow/words.hpp"

namespace drshadow {

// Diagonal pairing π(a,b) = (a+b)(a+b+1)/2 + a and its inverse.
std::uint64_t cantor_pair(std::uint64_t a, std::uint64_t b);
std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t z);

// p_j = B_{e1} x ... x B_{ek}, with entries the 1-based basis indices e_i.
struct BasisTuple {
  std::vector<std::uint64_t> entries;
  std::uint64_t enum_index = 0;

  bool operator==(const BasisTuple&) const = default;
};

// The j-th tuple (j >= 1). With (a, r) = unpair(j-1), the tuple has length
// a+1 and is the r-th tuple of that length, where tuples are ordered by entry
// sum and, within a sum, by last entry, then the rest recursively.
BasisTuple enumerate_tuples(std::uint64_t j);

// max length of p_1, ..., p_l.
std::uint64_t tuple_depth(std::uint64_t l);

// Result of a bounded scan: an exact level, or indistinguishable up to bound.
struct W0Distance {
  std::optional<Level> level;
  std::uint64_t bound = 0;

  bool resolved() const { return level.has_value(); }
  // "2^-k", "0" or "indistinguishable@<bound>".
  std::string to_string() const;
};

// The enumeration-based ultrametric on W₀ over one base space. Tuples and
// basis sets up to table_size are precomputed; the object is immutable.
class W0Metric {
 public:
  explicit W0Metric(BaseSpace space, std::uint64_t table_size = 1024);

  const BaseSpace& space() const { return space_; }
  BasisTuple tuple(std::uint64_t j) const;
  ClopenSet basis(std::uint64_t i) const;

  // Membership of x in Z[p_j, ∅].
  bool alpha_bit(const W0Word& x, std::uint64_t j) const;
  // "0"/"1" string of the first m bits.
  std::string alpha_bits(const W0Word& x, std::uint64_t m) const;

  // Level i for the least i <= search_bound at which the α bits differ.
  W0Distance distance(const W0Word& x, const W0Word& y, std::uint64_t search_bound) const;

 private:
  bool member(const std::vector<Point>& head, bool long_enough_for_all, const BasisTuple& t) const;

  BaseSpace space_;
  std::vector<BasisTuple> tuples_;   // tuples_[j-1]
  std::vector<ClopenSet> basis_;     // basis_[i-1]
  std::vector<std::uint64_t> depth_; // depth_[l-1] = tuple_depth(l)
};

}  // namespace drshadow
