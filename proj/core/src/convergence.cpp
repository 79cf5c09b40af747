#include "drshadow/convergence.hpp"

namespace drshadow {

namespace {

// P(n) for n = 1..H; nullopt marks terms outside the subsequence of interest.
using Truths = std::vector<std::optional<bool>>;

struct ClauseResult {
  std::optional<std::uint64_t> from;
  std::uint64_t last_failure = 0;
};

ClauseResult eventually(const Truths& p) {
  const std::uint64_t h = p.size();
  std::uint64_t n = h;
  while (n >= 1 && p[n - 1].value_or(true)) --n;
  // p holds on [n+1, h].
  if (n + 1 <= h / 2) return {n + 1, 0};
  return {std::nullopt, n};
}

bool escaped(const BaseSpace& space, const Point& p, std::uint64_t depth) {
  if (is_infinity(p)) return true;
  if (space.kind() == BaseSpace::Kind::kCantorFull) return false;  // ∞ is isolated
  return point_distance(space, p, InfinityPoint{}) >= Level::finite(depth);
}

}  // namespace

ConvergenceReport check_convergence(const BaseSpace& space, const WordSequence& seq, const W0Word& limit,
                                    std::uint64_t depth, std::uint64_t horizon) {
  if (depth == 0) throw DynamicsError(ErrorCode::kInvalidArgument, "depth must be positive");
  ConvergenceReport report;
  report.depth = depth;
  report.horizon = horizon == 0 ? 4 * depth + 16 : horizon;
  const auto h = report.horizon;

  const auto target_len = limit.length();
  const std::uint64_t inspect = target_len ? *target_len + 1 : depth;
  const auto target = limit.head(inspect);

  std::vector<std::vector<Point>> heads;
  heads.reserve(h);
  for (std::uint64_t n = 1; n <= h; ++n) {
    try {
      const auto term = seq(n);
      heads.push_back(term.head(inspect));
    } catch (const DynamicsError& e) {
      throw DynamicsError(ErrorCode::kMalformedSequence,
                          "term " + std::to_string(n) + " could not be produced (" + e.what() + ")");
    }
  }

  const auto run = [&](const std::string& name, const Truths& p) {
    const auto r = eventually(p);
    if (r.from) {
      report.witnesses.push_back({name, *r.from});
      return true;
    }
    report.counterexample = r.last_failure;
    report.failed_clause = name;
    return false;
  };

  const auto length_at_least = [&](std::uint64_t n, std::uint64_t k) { return heads[n - 1].size() >= k; };
  const auto close = [&](const Point& a, const Point& b) { return point_distance(space, a, b) >= Level::finite(depth); };

  if (target_len) {
    const auto k = *target_len;
    Truths p(h);
    for (std::uint64_t n = 1; n <= h; ++n) p[n - 1] = length_at_least(n, k);
    if (!run("length>=" + std::to_string(k), p)) return report;

    for (std::uint64_t i = 1; i <= k; ++i) {
      for (std::uint64_t n = 1; n <= h; ++n) {
        p[n - 1] = length_at_least(n, i) ? std::optional<bool>(close(heads[n - 1][i - 1], target[i - 1]))
                                         : std::nullopt;
      }
      if (!run("x" + std::to_string(i) + "->" + to_string(target[i - 1]), p)) return report;
    }

    bool infinitely_many_longer = false;
    for (std::uint64_t n = h / 2 + 1; n <= h; ++n) infinitely_many_longer |= length_at_least(n, k + 1);
    if (infinitely_many_longer) {
      for (std::uint64_t n = 1; n <= h; ++n) {
        p[n - 1] = length_at_least(n, k + 1) ? std::optional<bool>(escaped(space, heads[n - 1][k], depth))
                                             : std::nullopt;
      }
      if (!run("x" + std::to_string(k + 1) + "->inf", p)) return report;
    } else {
      report.witnesses.push_back({"finitely-many-longer", h / 2 + 1});
    }
  } else {
    Truths p(h);
    for (std::uint64_t n = 1; n <= h; ++n) p[n - 1] = length_at_least(n, depth);
    if (!run("length->inf", p)) return report;
    for (std::uint64_t i = 1; i <= depth; ++i) {
      for (std::uint64_t n = 1; n <= h; ++n) {
        p[n - 1] = length_at_least(n, i) ? std::optional<bool>(close(heads[n - 1][i - 1], target[i - 1]))
                                         : std::nullopt;
      }
      if (!run("x" + std::to_string(i) + "->" + to_string(target[i - 1]), p)) return report;
    }
  }
  report.certified = true;
  return report;
}

}  // namespace drshadow
