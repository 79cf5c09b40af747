#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "drshadow/enumeration.hpp"
#include "drshadow/inverse_limit.hpp"
#include "drshadow/systems.hpp"

namespace drshadow {

// A finite δ-pseudo-orbit, δ = 2^-delta_level: level(f(x_i), x_{i+1}) >=
// delta_level + 1 for consecutive points, i.e. d < δ.
class PseudoOrbit {
 public:
  // Throws not-a-pseudo-orbit (or not-in-domain) when the points fail that.
  static PseudoOrbit make(const DRSystem& sys, std::vector<Point> points, std::uint64_t delta_level);

  const std::vector<Point>& points() const { return points_; }
  std::uint64_t delta_level() const { return delta_level_; }
  std::size_t size() const { return points_.size(); }

 private:
  PseudoOrbit(std::vector<Point> points, std::uint64_t delta_level)
      : points_(std::move(points)), delta_level_(delta_level) {}

  std::vector<Point> points_;
  std::uint64_t delta_level_;
};

// How make_pseudo_orbit replaces f(x_i) by x_{i+1} inside B(f(x_i), δ).
enum class Perturbation {
  kNone,          // exact orbit
  kFlipBit,       // flip one bit at a random index in [m+1, m+8]
  kResampleTail,  // keep the first m+1 bits, draw the rest at random
  kBoundaryFlip,  // flip exactly bit m+1: the largest jump still below δ
};

Perturbation parse_perturbation(const std::string& name);
std::string to_string(Perturbation p);

// Ball partition 𝒰 of radius 2^-radius_level.
struct PartitionSpec {
  std::uint64_t radius_level = 0;
};

// Deterministic in `seed`. Restarts from a fresh x_0 if the orbit leaves D.
PseudoOrbit make_pseudo_orbit(const DRSystem& sys, std::size_t length, std::uint64_t delta_level,
                              Perturbation policy, std::uint64_t seed);

// f(x_n) and x_{n+1} share an atom of 𝒰 for every n.
bool is_u_pseudo_orbit(const std::vector<Point>& seq, const PartitionSpec& spec, const DRSystem& sys);
// f^n(z) and x_n share an atom of 𝒰 for every n.
bool u_shadow_check(const Point& z, const std::vector<Point>& seq, const PartitionSpec& spec, const DRSystem& sys);

struct Shadow {
  Point start;
  std::vector<Point> orbit;   // z_0, ..., z_N with f(z_i) = z_{i+1}
  std::vector<Level> levels;  // level(z_i, x_i)
};

// z_N = x_N, z_i = g_{r_i}(z_{i+1}) with r_i the branch of x_i. Needs the
// separation constants and delta_level >= r_level.
Shadow shadow_point(const DRSystem& sys, const PseudoOrbit& po);

// max over the basis sets B in p_1..p_l of the level of dist(B, D \ B).
std::optional<std::uint64_t> rho_f_level(const BaseSpace& space, std::uint64_t l);

// Smallest delta_level accepted by lift_pseudo_orbit for this l.
std::uint64_t min_lift_delta_level(const DRSystem& sys, std::uint64_t l);

struct UpstairsPseudoOrbit {
  std::vector<ShiftPoint> points;
  std::uint64_t level_bound = 0;
  std::uint64_t depth = 0;
};

// Lifts a δ-pseudo-orbit to a 𝒱_l-pseudo-orbit of α_f. y_0 follows branch 0
// backwards; y_{i+1} starts at x_{i+1} and follows the branches of α_f(y_i)
// for depth-1 steps, then branch 0. `skip_at` drops the first of those
// branches when building y_{skip_at+1} (a deliberately broken recursion).
UpstairsPseudoOrbit lift_pseudo_orbit(const std::shared_ptr<const DRSystem>& sys, const PseudoOrbit& po,
                                      std::uint64_t l, std::uint64_t depth,
                                      std::optional<std::size_t> skip_at = std::nullopt);

struct LiftCheck {
  bool ok = true;
  std::size_t pairs_checked = 0;
  std::optional<std::size_t> failed_step;
  std::optional<std::uint64_t> failed_tuple;
  std::vector<W0Distance> distances;  // between α_f(y_i) and y_{i+1}
};

// For each i and j <= l: α_f(y_i) ∈ Z[p_j, ∅] iff y_{i+1} ∈ Z[p_j, ∅], and the
// scanned distance level exceeds l.
LiftCheck verify_lift(const W0Metric& metric, const UpstairsPseudoOrbit& upo, std::uint64_t scan_bound = 0);

struct DefiningLevel {
  std::uint64_t n = 0;
  Level diameter;          // max sampled atom diameter
  bool diameter_ok = true;    // <= 2^-n
  Level separation;        // min sampled distance between distinct atoms
  bool separation_ok = true;  // >= 2^-n
  bool refines = true;        // every level-(n+1) atom sits inside a level-n atom
};

// Ball partitions at levels 1..max_n, checked on sampled points.
std::vector<DefiningLevel> defining_sequence_report(const BaseSpace& space, std::uint64_t max_n,
                                                    std::uint64_t samples, std::mt19937_64& rng);

struct ProbeTrial {
  std::uint64_t trial = 0;
  std::size_t length = 0;
  bool shadowed = false;
  std::string witness;  // the shadow start point
};

struct ProbeReport {
  std::string system;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  Perturbation policy = Perturbation::kFlipBit;
  std::vector<ProbeTrial> trials;
  bool all_shadowed() const;
};

// Draws `trials` 𝒰_m-pseudo-orbits of length 3..12, shadows each with
// shadow_point and checks 𝒰_n-shadowing. Evidence for the shadowing
// property at these scales, not a proof.
ProbeReport partition_shadowing_probe(const DRSystem& sys, std::uint64_t n, std::uint64_t m, std::uint64_t trials,
                                      std::uint64_t seed, Perturbation policy = Perturbation::kFlipBit);

}  // namespace drshadow
