#include "drshadow/sampling.hpp"

namespace drshadow {

namespace {

std::string random_bits(Rng& rng, std::uint64_t n) {
  std::string out(n, '0');
  for (auto& c : out) c = (rng() & 1U) ? '1' : '0';
  return out;
}

}  // namespace

CantorPoint random_cantor(Rng& rng, const std::string& head, std::uint64_t max_prefix,
                          std::uint64_t max_cycle) {
  const auto prefix = random_bits(rng, uniform(rng, 0, max_prefix));
  const auto cycle = random_bits(rng, uniform(rng, 1, max_cycle));
  return CantorPoint(head + prefix, cycle);
}

Point random_point(const BaseSpace& space, Rng& rng) {
  if (space.is_nat()) return NatPoint{uniform(rng, 0, 20)};
  for (;;) {
    Point p = random_cantor(rng, space.root());
    if (space.contains(p)) return p;
  }
}

Point random_compactified_point(const BaseSpace& space, Rng& rng) {
  if (space.kind() != BaseSpace::Kind::kCantorFull && uniform(rng, 0, 15) == 0) return InfinityPoint{};
  return random_point(space, rng);
}

Point random_point_in(const BaseSpace& space, const ClopenSet& s, Rng& rng) {
  if (s.is_empty()) throw DynamicsError(ErrorCode::kInvalidArgument, "cannot sample from the empty set");
  if (s.is_nat()) {
    const auto& set = s.as_nat();
    const auto& elems = set.elements();
    const std::uint64_t choices = elems.size() + (set.tail_from() ? 1 : 0);
    const auto pick = uniform(rng, 0, choices - 1);
    if (pick < elems.size()) return NatPoint{elems[pick]};
    return NatPoint{*set.tail_from() + uniform(rng, 0, 12)};
  }
  const auto& words = s.as_cylinders().words();
  for (int attempt = 0; attempt < 4096; ++attempt) {
    Point p = random_cantor(rng, words[uniform(rng, 0, words.size() - 1)]);
    if (space.contains(p)) return p;
  }
  throw DynamicsError(ErrorCode::kInvalidArgument, s.to_string() + " does not meet " + space.to_string());
}

}  // namespace drshadow
