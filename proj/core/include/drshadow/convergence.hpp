#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "drshadow/base_space.hpp"
#include "drshadow/words.hpp"

namespace drshadow {

// n -> x^n for n >= 1, given by a closed form.
using WordSequence = std::function<W0Word(std::uint64_t)>;

// One certified clause: from index `from` on (within the horizon) the clause
// holds at the inspected precision.
struct ConvergenceWitness {
  std::string clause;
  std::uint64_t from = 0;
};

struct ConvergenceReport {
  bool certified = false;
  std::uint64_t depth = 0;
  std::uint64_t horizon = 0;
  std::vector<ConvergenceWitness> witnesses;
  // On failure: the offending index and the clause it breaks.
  std::optional<std::uint64_t> counterexample;
  std::string failed_clause;
};

// Checks the coordinatewise convergence criterion for x^n -> limit.
//
// Every clause "eventually P(n)" is certified when some N <= horizon/2 has
// P(n) for all n in [N, horizon]. Convergence of a coordinate sequence means
// the distance level to the target reaches `depth`; escape to ∞ is measured
// in the compactified base space. Whether infinitely many x^n are longer than
// the limit is read off the second half of the window. Coordinates up to
// `depth` are inspected for infinite limits.
ConvergenceReport check_convergence(const BaseSpace& space, const WordSequence& seq, const W0Word& limit,
                                    std::uint64_t depth, std::uint64_t horizon = 0);

}  // namespace drshadow
