#pragma once

// Empirical spiral-graph discovery: multiples of d -> chains -> exact arms ->
// arm systems, plus the geometric claims made about systems.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "theodorus/error.hpp"
#include "theodorus/quadratic.hpp"
#include "theodorus/rotation.hpp"
#include "theodorus/spiral.hpp"

namespace theodorus {

struct DiscoveryParams {
  Index n_max = 20000;
  double angular_tol_rad = 0.35;
  std::size_t min_chain_len = 5;
  double gap_deg = 12.0;
  double pair_tol_deg = 8.0;
  double axis_tol_deg = 8.0;
  double drift_epsilon_rad = kDefaultDriftEpsilon;
  XRange rotation_range{};
  std::int64_t settle_winding = 2;
  // arms are kept when |vertex_value| <= centre_bound * d
  double centre_bound = 8.0;
};

struct Arm {
  HalfIntQuadratic poly;
  std::int64_t divisor = 0;
  std::vector<SpiralPoint> members;  // members[x].n == eval(poly, x)
  Rotation rotation = Rotation::Indeterminate;
};

struct ArmSystem {
  std::string label;
  Rotation rotation = Rotation::Indeterminate;
  std::vector<Arm> arms;
  double anchor_angle = 0.0;      // radians in [0, 2pi)
  double reference_radius = 0.0;  // radius at which anchors were taken
};

using Chain = std::vector<SpiralPoint>;

/// Second differential of a family together with the side of 2pi^2 it lies on.
struct Family {
  std::int64_t A = 0;
  Rotation side = Rotation::Indeterminate;
};

inline std::vector<SpiralPoint> multiples_points(const Spiral& spiral, std::int64_t d,
                                                 Index n_max) {
  if (d < 2) throw Error("divisor must be >= 2");
  if (n_max < static_cast<Index>(d)) throw Error("n_max must be >= divisor");
  std::vector<SpiralPoint> out;
  out.reserve(n_max / static_cast<Index>(d));
  for (Index n = static_cast<Index>(d); n <= n_max; n += static_cast<Index>(d)) {
    out.push_back(spiral.point(n));
  }
  return out;
}

/// Some arm with second differential A consists of multiples of d.
///
/// f(x) = f(0) + f'(0) x + A x(x-1)/2 in Newton form, so f vanishes mod d
/// everywhere iff f(0), the first difference and A all do.
inline bool admissible_second_differential(std::int64_t d, std::int64_t A) {
  return A > 0 && A % d == 0;
}

/// The admissible second differentials nearest 2pi^2 on each side: the arms
/// whose drift is smallest in magnitude and therefore read as spiral-graphs.
inline std::vector<Family> families(std::int64_t d) {
  if (d < 2) throw Error("divisor must be >= 2");
  const double boundary = 2.0 * std::numbers::pi * std::numbers::pi;
  std::vector<Family> out;
  const auto below = static_cast<std::int64_t>(std::floor(boundary));
  for (std::int64_t A = below; A >= 1; --A) {
    if (admissible_second_differential(d, A)) {
      out.push_back({A, Rotation::Positive});
      break;
    }
  }
  for (std::int64_t A = below + 1;; ++A) {
    if (admissible_second_differential(d, A)) {
      out.push_back({A, Rotation::Negative});
      break;
    }
  }
  return out;
}

/// Links points winding by winding in the co-rotating frame of a family with
/// second differential A. Along such an arm u(n) = sqrt(2n/A) advances by
/// exactly 1 per member asymptotically, so each point is linked to the point
/// whose u is nearest u(n) + 1, accepted if 2pi |du - 1| <= angular_tol.
/// A successor claimed twice keeps the nearer predecessor (smaller n on ties).
inline std::vector<Chain> link_chains(std::span<const SpiralPoint> points, double angular_tol,
                                      std::int64_t A) {
  if (angular_tol <= 0.0) throw Error("angular_tol must be positive");
  if (A <= 0) throw Error("family second differential must be positive");
  std::vector<SpiralPoint> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(),
            [](const SpiralPoint& a, const SpiralPoint& b) { return a.n < b.n; });
  const std::size_t count = pts.size();
  std::vector<double> u(count);
  for (std::size_t i = 0; i < count; ++i) {
    u[i] = std::sqrt(2.0 * static_cast<double>(pts[i].n) / static_cast<double>(A));
  }

  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> pred(count, none);
  std::vector<double> pred_err(count, 0.0);
  for (std::size_t i = 0; i < count; ++i) {
    const double target = u[i] + 1.0;
    const auto j = static_cast<std::size_t>(std::lower_bound(u.begin(), u.end(), target) -
                                            u.begin());
    std::size_t best = none;
    double best_err = 0.0;
    for (std::size_t c : {j - 1, j}) {
      if (c >= count || c <= i) continue;  // j - 1 may wrap; both wrap to >= count
      const double err = std::fabs(u[c] - target);
      if (best == none || err < best_err) {
        best = c;
        best_err = err;
      }
    }
    if (best == none) continue;
    const double err = best_err * kTwoPi;
    if (err > angular_tol) continue;
    if (pred[best] == none || err < pred_err[best]) {
      pred[best] = i;  // i ascends, so equal errors keep the smaller n
      pred_err[best] = err;
    }
  }
  std::vector<std::size_t> next(count, none);
  for (std::size_t m = 0; m < count; ++m) {
    if (pred[m] != none) next[pred[m]] = m;
  }
  std::vector<Chain> chains;
  for (std::size_t i = 0; i < count; ++i) {
    if (pred[i] != none) continue;
    Chain chain{pts[i]};
    for (std::size_t k = next[i]; k != none; k = next[k]) chain.push_back(pts[k]);
    chains.push_back(std::move(chain));
  }
  return chains;
}

/// Outermost maximal run of the chain with constant second differences.
/// Near-centre links are crowded and often jump between arms; the settled
/// outer part is what follows a single quadratic.
inline Chain settled_suffix(const Chain& chain) {
  if (chain.size() < 3) return chain;
  auto second = [&](std::size_t i) {
    return static_cast<std::int64_t>(chain[i + 2].n) - 2 * static_cast<std::int64_t>(chain[i + 1].n) +
           static_cast<std::int64_t>(chain[i].n);
  };
  std::size_t j = chain.size() - 3;
  const std::int64_t last = second(j);
  while (j > 0 && second(j - 1) == last) --j;
  return Chain(chain.begin() + static_cast<std::ptrdiff_t>(j), chain.end());
}

struct ChainStats {
  std::size_t considered = 0;
  std::size_t too_short = 0;
  std::size_t not_quadratic = 0;
  std::size_t not_divisible = 0;
};

namespace detail {

inline void fill_members(const Spiral& spiral, Arm& arm, Index n_max) {
  arm.members.clear();
  for (std::int64_t x = 0;; ++x) {
    const std::int64_t v = eval(arm.poly, x);
    if (v > static_cast<std::int64_t>(n_max)) break;
    arm.members.push_back(spiral.point(static_cast<Index>(v)));
  }
}

}  // namespace detail

/// Fits every chain of at least min_len points exactly, x = 0 at the chain's
/// first point, and extends surviving arms forward up to n_max.
inline std::vector<Arm> chains_to_arms(const Spiral& spiral, std::span<const Chain> chains,
                                       std::size_t min_len, std::int64_t d, Index n_max,
                                       ChainStats* stats = nullptr) {
  if (min_len < 4) throw Error("min_len must be >= 4");
  if (n_max > spiral.max_n()) throw RangeExhausted("n_max beyond spiral table");
  ChainStats local;
  ChainStats& st = stats ? *stats : local;
  std::vector<Arm> arms;
  for (const Chain& chain : chains) {
    ++st.considered;
    if (chain.size() < min_len) {
      ++st.too_short;
      continue;
    }
    std::vector<IntPoint> pts;
    pts.reserve(chain.size());
    for (std::size_t i = 0; i < chain.size(); ++i) {
      pts.push_back({static_cast<std::int64_t>(i), static_cast<std::int64_t>(chain[i].n)});
    }
    HalfIntQuadratic q;
    try {
      q = fit_quadratic(pts);
    } catch (const Error&) {
      ++st.not_quadratic;
      continue;
    }
    if (!divisible_by(q, d)) {
      ++st.not_divisible;
      continue;
    }
    Arm arm{q, d, {}, Rotation::Indeterminate};
    detail::fill_members(spiral, arm, n_max);
    arms.push_back(std::move(arm));
  }
  return arms;
}

/// Re-indexes the arm so that x = 0 is its innermost member: inner windings
/// are attached only where the polynomial predicts a smaller natural number.
inline Arm extend_inward(const Spiral& spiral, const Arm& arm, Index n_max) {
  std::int64_t x0 = 0;
  while (true) {
    const std::int64_t prev = eval(arm.poly, x0 - 1);
    if (prev < 1 || prev >= eval(arm.poly, x0)) break;
    --x0;
  }
  Arm out{shifted(arm.poly, x0), arm.divisor, {}, arm.rotation};
  detail::fill_members(spiral, out, n_max);
  return out;
}

/// Reduced angle of the arm curve where it crosses radius r, in the frame
/// that turns once per member. r is clamped to the arm's radial extent.
inline double arm_phase_at(const Arm& arm, double r) {
  const auto& ms = arm.members;
  if (ms.empty()) throw Error("arm without members");
  if (ms.size() == 1 || r <= ms.front().radius) return reduce_angle(ms.front().theta);
  if (r >= ms.back().radius) {
    const std::size_t x = ms.size() - 1;
    return reduce_angle(ms[x].theta - kTwoPi * static_cast<double>(x));
  }
  std::size_t x = 0;
  while (x + 2 < ms.size() && ms[x + 1].radius < r) ++x;
  const double r1 = ms[x].radius, r2 = ms[x + 1].radius;
  const double tau = (r - r1) / (r2 - r1);
  const double t = ms[x].theta + tau * (ms[x + 1].theta - ms[x].theta);
  return reduce_angle(t - kTwoPi * (static_cast<double>(x) + tau));
}

inline bool arm_covers(const Arm& arm, double r) {
  return !arm.members.empty() && arm.members.front().radius <= r &&
         r <= arm.members.back().radius;
}

/// Circular mean of angles in radians, reduced to [0, 2pi).
inline double circular_mean(std::span<const double> angles) {
  std::complex<double> s{0.0, 0.0};
  for (double a : angles) s += std::polar(1.0, a);
  return reduce_angle(std::arg(s));
}

/// Largest radius reached by every arm of the group.
inline double common_radius(std::span<const Arm> arms) {
  double r = 0.0;
  bool first = true;
  for (const Arm& a : arms) {
    if (a.members.empty()) continue;
    const double top = a.members.back().radius;
    r = first ? top : std::min(r, top);
    first = false;
  }
  return r;
}

/// Partitions arms by rotation, then clusters anchor angles circularly with
/// single linkage: neighbours closer than gap_deg share a system.
inline std::vector<ArmSystem> group_into_systems(std::span<const Arm> arms, double gap_deg) {
  if (gap_deg <= 0.0) throw Error("gap_deg must be positive");
  const double gap = to_radians(gap_deg);
  std::vector<ArmSystem> out;
  for (Rotation rot : {Rotation::Positive, Rotation::Negative, Rotation::Indeterminate}) {
    std::vector<Arm> group;
    for (const Arm& a : arms) {
      if (a.rotation == rot) group.push_back(a);
    }
    if (group.empty()) continue;
    const double r_ref = common_radius(group);
    std::vector<std::pair<double, std::size_t>> anchors;
    for (std::size_t i = 0; i < group.size(); ++i) {
      anchors.emplace_back(arm_phase_at(group[i], r_ref), i);
    }
    std::sort(anchors.begin(), anchors.end());
    const std::size_t k = anchors.size();
    std::vector<std::size_t> cuts;  // cluster boundary after index i
    for (std::size_t i = 0; i < k; ++i) {
      const double next = i + 1 < k ? anchors[i + 1].first : anchors[0].first + kTwoPi;
      if (next - anchors[i].first > gap) cuts.push_back(i);
    }
    std::vector<std::vector<std::size_t>> clusters;
    if (cuts.empty()) {
      clusters.emplace_back();
      for (std::size_t i = 0; i < k; ++i) clusters.back().push_back(i);
    } else {
      for (std::size_t c = 0; c < cuts.size(); ++c) {
        const std::size_t start = (cuts[c] + 1) % k;
        const std::size_t stop = cuts[(c + 1) % cuts.size()];
        std::vector<std::size_t> members;
        for (std::size_t i = start;; i = (i + 1) % k) {
          members.push_back(i);
          if (i == stop) break;
        }
        clusters.push_back(std::move(members));
      }
    }
    std::vector<ArmSystem> systems;
    for (const auto& cl : clusters) {
      ArmSystem s;
      s.rotation = rot;
      s.reference_radius = r_ref;
      std::vector<double> angles;
      std::vector<std::size_t> idx;
      for (std::size_t i : cl) {
        angles.push_back(anchors[i].first);
        idx.push_back(anchors[i].second);
      }
      std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return group[a].poly < group[b].poly;
      });
      for (std::size_t i : idx) s.arms.push_back(group[i]);
      s.anchor_angle = circular_mean(angles);
      systems.push_back(std::move(s));
    }
    std::sort(systems.begin(), systems.end(), [](const ArmSystem& a, const ArmSystem& b) {
      if (a.anchor_angle != b.anchor_angle) return a.anchor_angle < b.anchor_angle;
      return a.arms.front().poly < b.arms.front().poly;
    });
    for (std::size_t i = 0; i < systems.size(); ++i) {
      systems[i].label = std::string(label_of(rot)) + std::to_string(i + 1);
      out.push_back(std::move(systems[i]));
    }
  }
  return out;
}

inline std::vector<ArmSystem> systems_with(std::span<const ArmSystem> systems, Rotation rot) {
  std::vector<ArmSystem> out;
  for (const ArmSystem& s : systems) {
    if (s.rotation == rot) out.push_back(s);
  }
  return out;
}

struct Spacing {
  double mean_deg = 0.0;
  double min_gap_deg = 0.0;
  double max_gap_deg = 0.0;
};

/// Circular gaps between consecutive system anchors.
inline Spacing system_spacing(std::span<const ArmSystem> systems) {
  if (systems.size() < 2) throw TooFew("spacing needs at least 2 systems");
  std::vector<double> a;
  for (const ArmSystem& s : systems) a.push_back(to_degrees(s.anchor_angle));
  std::sort(a.begin(), a.end());
  Spacing sp;
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double g = i + 1 < a.size() ? a[i + 1] - a[i] : a[0] + 360.0 - a[i];
    sum += g;
    sp.min_gap_deg = i == 0 ? g : std::min(sp.min_gap_deg, g);
    sp.max_gap_deg = i == 0 ? g : std::max(sp.max_gap_deg, g);
  }
  sp.mean_deg = sum / static_cast<double>(a.size());
  return sp;
}

/// Spacing implied by the arithmetic of the family: A/d systems per turn.
inline double identity_spacing_deg(std::int64_t d, std::int64_t A) {
  return 360.0 * static_cast<double>(d) / static_cast<double>(A);
}

struct SymmetricPair {
  std::string first;
  std::string second;
  double deviation_deg = 0.0;  // distance from exact opposition
};

/// Greedy pairing of same-rotation systems lying opposite each other.
inline std::vector<SymmetricPair> point_symmetry_pairs(std::span<const ArmSystem> systems,
                                                       double tol_deg) {
  struct Candidate {
    double dev;
    std::size_t i, j;
  };
  std::vector<Candidate> cands;
  for (std::size_t i = 0; i < systems.size(); ++i) {
    for (std::size_t j = i + 1; j < systems.size(); ++j) {
      if (systems[i].rotation != systems[j].rotation) continue;
      const double dev = std::fabs(to_degrees(
          wrap_pi(systems[i].anchor_angle - systems[j].anchor_angle - std::numbers::pi)));
      if (dev <= tol_deg) cands.push_back({dev, i, j});
    }
  }
  std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
    if (a.dev != b.dev) return a.dev < b.dev;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  });
  std::vector<bool> used(systems.size(), false);
  std::vector<SymmetricPair> out;
  for (const Candidate& c : cands) {
    if (used[c.i] || used[c.j]) continue;
    used[c.i] = used[c.j] = true;
    out.push_back({systems[c.i].label, systems[c.j].label, c.dev});
  }
  return out;
}

struct AxisSymmetry {
  bool symmetric = false;
  double axis_angle = 0.0;  // radians in [0, pi)
  double max_residual_deg = 0.0;
  double radius = 0.0;
};

/// Mirror line through the centre that best maps the arm anchors of system
/// a onto those of system b at radius r (default: the largest radius both
/// systems reach). Arms are paired with the nearest reflected anchor; the
/// axis is refitted from the pairs until the pairing is stable. The residual
/// is the worst angular miss of a reflected anchor, taken both ways.
inline AxisSymmetry axis_symmetry(const ArmSystem& a, const ArmSystem& b, double tol_deg,
                                  std::optional<double> radius = std::nullopt) {
  if (a.arms.empty() || b.arms.empty()) throw Error("axis_symmetry needs non-empty systems");
  AxisSymmetry out;
  if (radius) {
    out.radius = *radius;
  } else {
    out.radius = std::min(common_radius(a.arms), common_radius(b.arms));
  }
  std::vector<double> pa, pb;
  for (const Arm& arm : a.arms) pa.push_back(arm_phase_at(arm, out.radius));
  for (const Arm& arm : b.arms) pb.push_back(arm_phase_at(arm, out.radius));

  // reflection about the line at alpha maps phi to 2 alpha - phi
  double two_alpha = reduce_angle(circular_mean(pa) + circular_mean(pb));
  auto nearest = [](double target, const std::vector<double>& set) {
    double best = set.front();
    for (double v : set) {
      if (std::fabs(wrap_pi(v - target)) < std::fabs(wrap_pi(best - target))) best = v;
    }
    return best;
  };
  std::vector<double> sums;
  for (int iter = 0; iter < 8; ++iter) {
    sums.clear();
    for (double x : pa) sums.push_back(x + nearest(two_alpha - x, pb));
    for (double y : pb) sums.push_back(y + nearest(two_alpha - y, pa));
    const double next = circular_mean(sums);
    if (std::fabs(wrap_pi(next - two_alpha)) < 1e-12) break;
    two_alpha = next;
  }
  out.axis_angle = std::fmod(two_alpha / 2.0, std::numbers::pi);
  for (double s : sums) {
    out.max_residual_deg = std::max(out.max_residual_deg, to_degrees(std::fabs(wrap_pi(s - two_alpha))));
  }
  out.symmetric = out.max_residual_deg <= tol_deg;
  return out;
}

/// Direction of the line through vertex(m) and vertex(n), in [0, pi).
inline double chord_direction(const Spiral& spiral, Index m, Index n) {
  const Point2 p = spiral.vertex(m), q = spiral.vertex(n);
  double a = std::atan2(q.y - p.y, q.x - p.x);
  a = std::fmod(a + 2.0 * std::numbers::pi, std::numbers::pi);
  return a;
}

/// Distance between two line directions (mod pi), in degrees.
inline double line_angle_difference_deg(double a, double b) {
  double d = std::fmod(std::fabs(a - b), std::numbers::pi);
  if (d > std::numbers::pi / 2.0) d = std::numbers::pi - d;
  return to_degrees(d);
}

struct SquareArms {
  std::vector<Arm> arms;                // (3x)^2, (3x+1)^2, (3x+2)^2
  std::int64_t reference_x = 0;         // first x with (3x)^2 on the reference winding
  std::vector<double> separations_deg;  // theirs and the next turn's (3x+3)^2
};

/// The arms (3x)^2, (3x+1)^2, (3x+2)^2 with members up to n_max.
inline std::vector<Arm> square_arms(const Spiral& spiral, Index n_max) {
  std::vector<Arm> out;
  const HalfIntQuadratic polys[3] = {{18, 0, 0}, {18, 12, 2}, {18, 24, 8}};
  for (const auto& q : polys) {
    Arm arm{q, 0, {}, Rotation::Indeterminate};
    for (std::int64_t x = q.C == 0 ? 1 : 0;; ++x) {
      const std::int64_t v = eval(q, x);
      if (v > static_cast<std::int64_t>(n_max)) break;
      arm.members.push_back(spiral.point(static_cast<Index>(v)));
    }
    out.push_back(std::move(arm));
  }
  return out;
}

/// The three square-number arms and their angular separations at the given
/// winding; the limit is 2 rad because theta(k^2) ~ 2k + K.
inline SquareArms square_number_arms(const Spiral& spiral, std::int64_t winding = 20) {
  SquareArms out;
  out.arms = square_arms(spiral, spiral.max_n());
  std::int64_t x = 1;
  while (spiral.winding_of(static_cast<Index>(9 * x * x)) < winding) ++x;
  out.reference_x = x;
  for (std::int64_t k = 0; k < 3; ++k) {
    const auto lo = static_cast<Index>((3 * x + k) * (3 * x + k));
    const auto hi = static_cast<Index>((3 * x + k + 1) * (3 * x + k + 1));
    out.separations_deg.push_back(to_degrees(spiral.angle(hi) - spiral.angle(lo)));
  }
  return out;
}

struct DiscoveryStats {
  std::size_t points = 0;
  std::size_t chains = 0;
  std::size_t fitted = 0;
  std::size_t outside_centre = 0;
  std::size_t transitional = 0;
};

struct Discovery {
  std::int64_t divisor = 0;
  DiscoveryParams params;
  std::vector<Family> families;
  std::vector<Arm> arms;  // every distinct arm within the centre bound
  std::vector<ArmSystem> systems;
  std::vector<HalfIntQuadratic> transitional;  // rotation disagrees with family side
  DiscoveryStats stats;
};

/// Spiral table size that discover(d, params) needs: rotation_of looks up to
/// x = rotation_range.hi + 1 on every kept arm.
inline Index required_spiral_size(std::int64_t d, const DiscoveryParams& p) {
  double need = static_cast<double>(p.n_max);
  const double bound = p.centre_bound * static_cast<double>(d);
  for (const Family& f : families(d)) {
    const double a = static_cast<double>(f.A);
    const double s = 1.0 + std::sqrt(2.0 * (1.0 + bound) / a);
    const double x = static_cast<double>(p.rotation_range.hi + 1) + s;
    need = std::max(need, a / 2.0 * x * x + bound);
  }
  return static_cast<Index>(std::ceil(need)) + 16;
}

inline Discovery discover(const Spiral& spiral, std::int64_t d, const DiscoveryParams& p = {}) {
  if (spiral.max_n() < required_spiral_size(d, p)) {
    throw RangeExhausted("spiral table too small for discovery of d = " + std::to_string(d));
  }
  Discovery out;
  out.divisor = d;
  out.params = p;
  out.families = families(d);

  std::vector<SpiralPoint> pts;
  for (const SpiralPoint& sp : multiples_points(spiral, d, p.n_max)) {
    if (sp.winding >= p.settle_winding) pts.push_back(sp);
  }
  out.stats.points = pts.size();

  std::map<HalfIntQuadratic, Arm> unique;
  std::map<HalfIntQuadratic, bool> is_transitional;
  for (const Family& fam : out.families) {
    std::vector<Chain> chains;
    for (const Chain& c : link_chains(pts, p.angular_tol_rad, fam.A)) {
      chains.push_back(settled_suffix(c));
    }
    out.stats.chains += chains.size();
    for (Arm& arm : chains_to_arms(spiral, chains, p.min_chain_len, d, p.n_max)) {
      if (arm.poly.A != fam.A) continue;
      ++out.stats.fitted;
      if (std::fabs(vertex_value(arm.poly)) > p.centre_bound * static_cast<double>(d)) {
        ++out.stats.outside_centre;
        continue;
      }
      Arm full = extend_inward(spiral, arm, p.n_max);
      if (unique.count(full.poly)) continue;
      full.rotation = rotation_of(spiral, full.poly, p.rotation_range, p.drift_epsilon_rad);
      is_transitional[full.poly] = full.rotation != fam.side;
      unique.emplace(full.poly, std::move(full));
    }
  }
  std::vector<Arm> settled;
  for (auto& [q, arm] : unique) {
    if (is_transitional[q]) {
      out.transitional.push_back(q);
    } else {
      settled.push_back(arm);
    }
    out.arms.push_back(arm);
  }
  out.stats.transitional = out.transitional.size();
  out.systems = group_into_systems(settled, p.gap_deg);
  return out;
}

/// Arm of d's discovery equal to q as a sequence up to index shift.
inline const Arm* find_arm(const Discovery& disc, const HalfIntQuadratic& q) {
  const HalfIntQuadratic key = innermost_indexed(q);
  for (const Arm& a : disc.arms) {
    if (a.poly == key) return &a;
  }
  return nullptr;
}

/// The arm drawn for a system: the one whose parabola bottoms out nearest
/// the centre.
inline const Arm& exemplary_arm(const ArmSystem& s) {
  if (s.arms.empty()) throw Error("empty arm system");
  const Arm* best = &s.arms.front();
  for (const Arm& a : s.arms) {
    if (std::fabs(vertex_value(a.poly)) < std::fabs(vertex_value(best->poly))) best = &a;
  }
  return *best;
}

}  // namespace theodorus
