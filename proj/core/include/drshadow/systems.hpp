#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "drshadow/base_space.hpp"

namespace drshadow {

// One chart (W_r, g_r) of a branch atlas. The forward rule is f restricted to
// W_r; the inverse rule g_r maps f(W_r) back onto W_r.
struct Branch {
  std::uint64_t index = 0;
  std::string label;
  // Set descriptions when they are finite unions of basis sets.
  std::optional<ClopenSet> domain;
  std::optional<ClopenSet> image;
  std::function<bool(const Point&)> in_domain;
  std::function<bool(const Point&)> in_image;
  std::function<Point(const Point&)> forward;
  std::function<Point(const Point&)> inverse;
  // Claimed s_r with level(g(a), g(b)) >= level(a, b) + s_r.
  std::uint64_t contraction_gain = 0;
  // Set when the gain is exactly s_r for every pair.
  std::optional<std::uint64_t> exact_gain;
};

// A partially defined local homeomorphism f on D given by a branch atlas,
// with optional separation constants θ = 2^-theta_gain and R = 2^-r_level.
class DRSystem {
 public:
  using BranchFactory = std::function<Branch(std::uint64_t)>;
  using BranchLocator = std::function<std::optional<std::uint64_t>(const Point&)>;

  DRSystem(std::string name, BaseSpace space, BranchFactory branches, BranchLocator locate,
           std::optional<std::uint64_t> branch_count, std::optional<std::uint64_t> theta_gain,
           std::optional<std::uint64_t> r_level);

  const std::string& name() const { return name_; }
  const BaseSpace& space() const { return space_; }
  const std::optional<std::uint64_t>& theta_gain() const { return theta_gain_; }
  const std::optional<std::uint64_t>& r_level() const { return r_level_; }
  bool has_separation_constants() const { return theta_gain_ && r_level_; }
  // nullopt for a countably infinite atlas.
  const std::optional<std::uint64_t>& branch_count() const { return branch_count_; }

  Branch branch(std::uint64_t r) const;
  std::optional<std::uint64_t> branch_index_of(const Point& x) const;
  bool in_domain(const Point& x) const;

  // Copy whose branch r claims a different contraction gain (for negative
  // controls of the separation check).
  DRSystem with_claimed_gain(std::uint64_t r, std::uint64_t gain) const;

 private:
  std::string name_;
  BaseSpace space_;
  BranchFactory branches_;
  BranchLocator locate_;
  std::optional<std::uint64_t> branch_count_;
  std::optional<std::uint64_t> theta_gain_;
  std::optional<std::uint64_t> r_level_;
  std::map<std::uint64_t, std::uint64_t> claimed_gains_;
};

Point apply_system(const DRSystem& sys, const Point& x);

// f(x). A function object, so that unqualified calls never pick up std::apply
// through argument-dependent lookup on Point.
inline constexpr struct {
  Point operator()(const DRSystem& sys, const Point& x) const { return apply_system(sys, x); }
} apply{};
Branch branch_of(const DRSystem& sys, const Point& x);
// The preimage of y in W_r. On a Cantor space minus a point, Infinity is
// read as the missing point.
Point branch_inverse(const DRSystem& sys, const Branch& b, const Point& y);

// Least n >= 1 with σ^n(x) in Z(0), for x in Z(0).
std::uint64_t return_time(const CantorPoint& x);

// X = {0,1}^ℕ, D = X \ {1^∞}, W_n = Z(1^n 0), f = σ^(n+1) on W_n.
DRSystem variable_length_shift();
// A = Z(0), D = A \ {01^∞}, W_k = Z(0 1^k 0), f = σ^τ with τ the return time.
DRSystem first_return_map();
// D = ℕ, f(m) = m/2 for m even, f(m) = 1 for m odd.
DRSystem halving_map();
// D = ℕ, f = id.
DRSystem nat_identity();

// `vls`, `frm`, `halving` or `nat-identity`.
std::shared_ptr<const DRSystem> system_by_name(const std::string& name);

struct SeparationFailure {
  std::uint64_t branch = 0;
  std::string check;  // "inverse-law", "gain", "exact-gain", "interior-radius", "uniform-gain"
  std::string a;
  std::string b;
  std::string detail;
};

struct SeparationReport {
  std::string system;
  bool pass = true;
  std::uint64_t branches_checked = 0;
  std::uint64_t pairs_checked = 0;
  std::vector<SeparationFailure> failures;
};

// Samples pairs in the images of the first `branches` branches and checks
// the inverse laws, the claimed and uniform contraction gains, exact gains
// where claimed, and that the ball of radius R around each sample stays in
// the branch image.
SeparationReport verify_separation(const DRSystem& sys, std::uint64_t samples, std::mt19937_64& rng,
                                   std::uint64_t branches = 9);

}  // namespace drshadow
