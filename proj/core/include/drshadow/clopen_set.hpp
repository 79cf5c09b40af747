#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "drshadow/point.hpp"

namespace drshadow {

// Clopen subset of ℕ ∪ {∞}: finitely many naturals, plus optionally a tail
// {t, t+1, …} ∪ {∞}. Without a tail the set is a compact open subset of ℕ.
class NatSet {
 public:
  NatSet() = default;
  explicit NatSet(std::vector<std::uint64_t> elements,
                  std::optional<std::uint64_t> tail_from = std::nullopt);

  const std::vector<std::uint64_t>& elements() const { return elements_; }
  const std::optional<std::uint64_t>& tail_from() const { return tail_from_; }

  bool empty() const { return elements_.empty() && !tail_from_; }
  bool contains(const Point& p) const;
  NatSet intersect(const NatSet& other) const;

  bool operator==(const NatSet&) const = default;

 private:
  std::vector<std::uint64_t> elements_;
  std::optional<std::uint64_t> tail_from_;
};

// Finite union of Cantor cylinders Z(w). Canonical form: no word is a prefix
// of another and no sibling pair w0, w1 is present (it is merged into w).
class CylinderUnion {
 public:
  CylinderUnion() = default;
  explicit CylinderUnion(std::vector<std::string> words);

  const std::vector<std::string>& words() const { return words_; }

  bool empty() const { return words_.empty(); }
  bool contains(const CantorPoint& p) const;
  CylinderUnion intersect(const CylinderUnion& other) const;

  bool operator==(const CylinderUnion&) const = default;

 private:
  std::vector<std::string> words_;
};

// A compact open set in one of the bundled base spaces.
class ClopenSet {
 public:
  ClopenSet() = default;
  ClopenSet(NatSet s) : rep_(std::move(s)) {}              // NOLINT
  ClopenSet(CylinderUnion s) : rep_(std::move(s)) {}       // NOLINT

  static ClopenSet empty_set() { return ClopenSet(CylinderUnion{}); }
  static ClopenSet cylinder(std::string word) { return ClopenSet(CylinderUnion({std::move(word)})); }
  static ClopenSet nats(std::vector<std::uint64_t> elements,
                        std::optional<std::uint64_t> tail_from = std::nullopt) {
    return ClopenSet(NatSet(std::move(elements), tail_from));
  }

  // `Z(01)+Z(1)`, `{2,5}`, `{2,5,9..}` (tail from 9, including ∞), `empty`.
  static ClopenSet parse(std::string_view text);

  bool is_empty() const;
  bool is_nat() const { return std::holds_alternative<NatSet>(rep_); }
  bool is_cylinders() const { return std::holds_alternative<CylinderUnion>(rep_); }
  const NatSet& as_nat() const { return std::get<NatSet>(rep_); }
  const CylinderUnion& as_cylinders() const { return std::get<CylinderUnion>(rep_); }

  // Raw membership; the point at infinity belongs only to Nat tails.
  bool contains(const Point& p) const;
  ClopenSet intersect(const ClopenSet& other) const;
  bool subset_of(const ClopenSet& other) const { return intersect(other) == *this; }

  std::string to_string() const;

  // Empty sets compare equal regardless of representation.
  bool operator==(const ClopenSet& other) const;

 private:
  std::variant<NatSet, CylinderUnion> rep_;
};

}  // namespace drshadow
