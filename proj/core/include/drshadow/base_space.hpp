#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "drshadow/clopen_set.hpp"
#include "drshadow/level.hpp"
#include "drshadow/point.hpp"

namespace drshadow {

// One of the three base spaces used by the bundled systems.
//
// kCantorMinus is Z(root) minus one excluded point of Z(root). Its one-point
// compactification is Z(root) itself, so Infinity is identified with the
// excluded point for distances.
class BaseSpace {
 public:
  enum class Kind { kNat, kCantorFull, kCantorMinus };

  static BaseSpace nat() { return BaseSpace(Kind::kNat, std::nullopt, ""); }
  static BaseSpace cantor() { return BaseSpace(Kind::kCantorFull, std::nullopt, ""); }
  static BaseSpace cantor_minus(CantorPoint excluded, std::string root = "");

  // `nat`, `cantor`, `cantor-minus:<point>` or `cantor-minus:<point>@<root>`.
  static BaseSpace parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_nat() const { return kind_ == Kind::kNat; }
  bool is_cantor() const { return kind_ != Kind::kNat; }
  const std::optional<CantorPoint>& excluded() const { return excluded_; }
  const std::string& root() const { return root_; }

  bool contains(const Point& p) const;
  // Membership in the one-point compactification (Infinity allowed), except
  // for the full Cantor space, which is already compact.
  bool contains_compactified(const Point& p) const;

  std::string to_string() const;

  bool operator==(const BaseSpace&) const = default;

 private:
  BaseSpace(Kind kind, std::optional<CantorPoint> excluded, std::string root)
      : kind_(kind), excluded_(std::move(excluded)), root_(std::move(root)) {}

  Kind kind_;
  std::optional<CantorPoint> excluded_;
  std::string root_;
};

// Exact distance level. On ℕ ∪ {∞}: d(m,n) = 2^-min(m,n), d(m,∞) = 2^-m.
// On Cantor spaces: 2^-N with N the first differing index.
Level point_distance(const BaseSpace& space, const Point& x, const Point& y);

bool clopen_member(const BaseSpace& space, const ClopenSet& s, const Point& x);
ClopenSet clopen_intersect(const BaseSpace& space, const ClopenSet& s, const ClopenSet& t);

// The i-th basis element (i >= 1).
//   nat:     {i-1}
//   cantor:  Z(root·v) for nonempty bit strings v in length-lex order, skipping
//            those whose cylinder contains the excluded point.
ClopenSet enumerate_basis(const BaseSpace& space, std::uint64_t i);

// The open ball B(x, 2^-n) as a clopen subset of the compactified space.
ClopenSet ball_atom(const BaseSpace& space, const Point& x, std::uint64_t n);

// Level of sup{d(a,b) : a,b in S}; infinite for singletons.
Level clopen_diameter(const BaseSpace& space, const ClopenSet& s);

// Level of dist(S, D \ S); nullopt when S is all of D.
std::optional<Level> separation_from_complement(const BaseSpace& space, const ClopenSet& s);

}  // namespace drshadow
