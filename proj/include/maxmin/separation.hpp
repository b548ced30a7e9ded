#ifndef MAXMIN_SEPARATION_HPP
#define MAXMIN_SEPARATION_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "maxmin/convex.hpp"
#include "maxmin/errors.hpp"
#include "maxmin/grid.hpp"
#include "maxmin/oracle.hpp"
#include "maxmin/semispace.hpp"

namespace maxmin {

/// Box data sorted by descending upper bound.
///
/// `t` is t(B), the greatest count such that the upper bound at sorted position
/// t-1 dominates every lower bound at positions 0..t-1. `l` is the smallest
/// position below t attaining the largest of those lower bounds; `u` takes that
/// lower bound on the first t positions and the upper bound elsewhere.
struct BoxProfile {
  Box box;
  std::vector<std::size_t> upper_perm;
  std::size_t t = 0;
  std::size_t l = 0;
  Point u;

  const Scalar& upper_at(std::size_t pos) const { return box.upper()[upper_perm[pos]]; }
  const Scalar& lower_at(std::size_t pos) const { return box.lower()[upper_perm[pos]]; }
};

inline BoxProfile box_profile(const Box& b) {
  BoxProfile prof{b, descending_order(b.upper()), 0, 0, Point{}};
  const std::size_t n = b.dimension();
  Scalar prefix_max = Scalar::zero();
  for (std::size_t p = 0; p < n; ++p) {
    prefix_max = join(prefix_max, prof.lower_at(p));
    if (prefix_max <= prof.upper_at(p)) prof.t = p + 1;
  }
  for (std::size_t p = 0; p < prof.t; ++p) {
    if (prof.lower_at(prof.l) < prof.lower_at(p)) prof.l = p;
  }
  std::vector<Scalar> u(n);
  for (std::size_t p = 0; p < n; ++p) {
    u[prof.upper_perm[p]] = p < prof.t ? prof.lower_at(prof.l) : prof.upper_at(p);
  }
  prof.u = Point(std::move(u));
  return prof;
}

/// One stage (s_k, T_k, a_k) of the lower-bound partition. `start` is the
/// 0-based sorted position s_k, `members` the original coordinates in T_k, and
/// `level` the common level a_k = min { upper_i : i in T_k }.
struct PartitionStage {
  std::size_t start = 0;
  std::vector<std::size_t> members;
  Scalar level;
};

/// Partition of the coordinates driven by the boxes' lower bounds, sorted descending.
struct PartitionProfile {
  std::vector<std::size_t> lower_perm;
  std::vector<PartitionStage> stages;

  /// Index k of the stage with stages[k].start <= pos < stages[k-1].start.
  std::size_t stage_of(std::size_t pos) const {
    for (std::size_t k = 0; k < stages.size(); ++k) {
      if (stages[k].start <= pos) return k;
    }
    throw InternalError("lower partition does not cover position " + std::to_string(pos));
  }
};

inline PartitionProfile lower_partition(const Box& b) {
  const std::size_t n = b.dimension();
  PartitionProfile prof{descending_order(b.lower()), {}};
  auto lo = [&](std::size_t p) -> const Scalar& { return b.lower()[prof.lower_perm[p]]; };
  auto up = [&](std::size_t p) -> const Scalar& { return b.upper()[prof.lower_perm[p]]; };
  std::vector<char> remaining(n, 1);

  while (true) {
    std::size_t s = 0;
    for (;; ++s) {
      bool ok = true;
      for (std::size_t i = s; i < n && ok; ++i) {
        if (remaining[i] && up(i) < lo(s)) ok = false;
      }
      if (ok) break;
    }
    PartitionStage stage;
    stage.start = s;
    std::vector<std::size_t> positions;
    for (std::size_t i = s; i < n; ++i) {
      if (remaining[i] && (s == 0 || up(i) < lo(s - 1))) positions.push_back(i);
    }
    if (positions.empty()) throw InternalError("empty stage in lower partition");
    stage.level = Scalar::one();
    for (auto p : positions) {
      remaining[p] = 0;
      stage.members.push_back(prof.lower_perm[p]);
      stage.level = meet(stage.level, up(p));
    }
    std::sort(stage.members.begin(), stage.members.end());
    prof.stages.push_back(std::move(stage));
    if (s == 0) break;
  }
  return prof;
}

struct SeparatedBySemispace {
  SemispaceDescriptor separator;
};

struct SeparatedByHemispace {
  HemispaceDescriptor separator;
};

/// A hull point witnessing that no semispace separates.
struct NotSeparable {
  Point witness;
};

using Candidate = std::variant<SemispaceDescriptor, HemispaceDescriptor>;

/// One oracle call: the candidate tried and, on failure, the generator outside it.
struct TraceEntry {
  std::string stage;
  Candidate candidate;
  std::optional<Point> witness;
};

struct SeparationCertificate {
  std::variant<SeparatedBySemispace, SeparatedByHemispace, NotSeparable> outcome;
  std::size_t oracle_calls = 0;
  std::vector<TraceEntry> trace;

  bool separated() const { return !std::holds_alternative<NotSeparable>(outcome); }
  const SemispaceDescriptor* semispace() const {
    auto* s = std::get_if<SeparatedBySemispace>(&outcome);
    return s ? &s->separator : nullptr;
  }
  const HemispaceDescriptor* hemispace() const {
    auto* h = std::get_if<SeparatedByHemispace>(&outcome);
    return h ? &h->separator : nullptr;
  }
  const Point* witness() const {
    auto* w = std::get_if<NotSeparable>(&outcome);
    return w ? &w->witness : nullptr;
  }
};

struct SeparationOptions {
  bool hemispace_fallback = true;
};

/// Whether z ∈ hull(C) is an obstruction to semispace separation: the largest
/// upper bound is 1, z >= lower, z exceeds the upper bound at one of the first
/// t(B) positions of the upper-bound order, and z stays within the upper bound
/// at every later position.
///
/// Dropping the last clause gives the plain separability condition, whose
/// failure alone does not rule out a separator.
inline bool is_condition_violation(const Box& b, const GeneratedConvexSet& c, const Point& z) {
  const auto prof = box_profile(b);
  if (!prof.upper_at(0).is_one()) return false;
  if (!leq(b.lower(), z) || !hull_contains(c, z)) return false;
  for (std::size_t p = prof.t; p < b.dimension(); ++p) {
    if (prof.upper_at(p) < z[prof.upper_perm[p]]) return false;
  }
  for (std::size_t p = 0; p < prof.t; ++p) {
    if (prof.upper_at(p) < z[prof.upper_perm[p]]) return true;
  }
  return false;
}

namespace detail {

class BoxSeparator {
 public:
  BoxSeparator(const Box& b, const GeneratedConvexSet& c) : box_(b), set_(c) {}

  SeparationCertificate run(const SeparationOptions& opts) {
    const std::size_t n = box_.dimension();
    Point y;
    const bool below_one =
        std::none_of(box_.upper().begin(), box_.upper().end(), [](const Scalar& s) { return s.is_one(); });
    if (below_one) {
      auto w = try_candidate("S0(upper)", SemispaceDescriptor::s0(box_.upper()));
      if (!w) return finish();
      y = std::move(*w);
    } else {
      const auto prof = box_profile(box_);
      auto w = try_candidate("S_l(u)", SemispaceDescriptor::for_coordinate(prof.u, prof.upper_perm[prof.l]));
      if (!w) return finish();
      y = std::move(*w);
    }

    const auto part = lower_partition(box_);
    auto lo = [&](std::size_t p) -> const Scalar& { return box_.lower()[part.lower_perm[p]]; };
    auto up = [&](std::size_t p) -> const Scalar& { return box_.upper()[part.lower_perm[p]]; };
    auto deficient = [&](const Point& pt, std::size_t p) { return pt[part.lower_perm[p]] < lo(p); };
    auto greatest_deficient = [&](const Point& pt) -> std::optional<std::size_t> {
      for (std::size_t p = n; p-- > 0;) {
        if (deficient(pt, p)) return p;
      }
      return std::nullopt;
    };

    for (std::size_t iteration = 0;; ++iteration) {
      if (iteration > n) throw InternalError("box separation exceeded its iteration bound");
      const auto top = greatest_deficient(y);
      if (!top) return not_separable(std::move(y), opts);
      const std::size_t k = part.stage_of(*top);
      std::vector<char> in_prior(n, 0);
      for (std::size_t j = 0; j < k; ++j) {
        for (auto coord : part.stages[j].members) in_prior[coord] = 1;
      }

      Point z = y;
      for (std::size_t p = *top + 1; p-- > part.stages[k].start;) {
        if (!deficient(y, p)) continue;
        std::vector<Scalar> u(n);
        for (std::size_t q = 0; q < n; ++q) {
          const std::size_t coord = part.lower_perm[q];
          if (in_prior[coord]) {
            u[coord] = up(q);
          } else {
            u[coord] = q < p ? lo(q) : lo(p);
          }
        }
        auto w = try_candidate("S_i(u^i)", SemispaceDescriptor::for_coordinate(Point(std::move(u)), part.lower_perm[p]));
        if (!w) return finish();
        z = join(z, scale_meet(part.stages[k].level, *w));
      }
      const auto next = greatest_deficient(z);
      if (next && *next >= part.stages[k].start) {
        throw InternalError("box separation made no progress at position " + std::to_string(*top));
      }
      y = std::move(z);
    }
  }

 private:
  std::optional<Point> try_candidate(std::string stage, Candidate candidate) {
    const bool avoids = std::visit([&](const auto& s) { return s.avoids(box_); }, candidate);
    if (!avoids) throw InternalError("candidate separator at stage " + stage + " meets the box");
    ++cert_.oracle_calls;
    auto answer = std::visit(
        [&](const auto& s) {
          if constexpr (std::is_same_v<std::decay_t<decltype(s)>, SemispaceDescriptor>) {
            return set_in_semispace(set_, s);
          } else {
            return set_in_hemispace(set_, s);
          }
        },
        candidate);
    cert_.trace.push_back({std::move(stage), candidate, answer.witness});
    if (answer.contained()) {
      if (auto* s = std::get_if<SemispaceDescriptor>(&candidate)) {
        cert_.outcome = SeparatedBySemispace{*s};
      } else {
        cert_.outcome = SeparatedByHemispace{std::get<HemispaceDescriptor>(candidate)};
      }
    }
    return answer.witness;
  }

  SeparationCertificate not_separable(Point witness, const SeparationOptions& opts) {
    if (!is_condition_violation(box_, set_, witness)) {
      throw InternalError("separation stalled at " + witness.str() + ", which is not a condition violation");
    }
    cert_.outcome = NotSeparable{std::move(witness)};
    if (opts.hemispace_fallback) {
      std::vector<std::size_t> below;
      for (std::size_t i = 0; i < box_.dimension(); ++i) {
        if (!box_.upper()[i].is_one()) below.push_back(i);
      }
      // On failure the outcome keeps the condition witness, not the generator.
      try_candidate("S0^M(upper)", HemispaceDescriptor(box_.upper(), std::move(below)));
    }
    return finish();
  }

  SeparationCertificate finish() { return std::move(cert_); }

  const Box& box_;
  const GeneratedConvexSet& set_;
  SeparationCertificate cert_{NotSeparable{Point{}}, 0, {}};
};

}  // namespace detail

/// Separates a box from hull(C) by a semispace, trying at most n+1 candidates.
///
/// Stage 1 tries S_0 at the upper corner (all upper bounds < 1) or S_l(u)
/// otherwise. Each failure yields a hull point y, which the partition stages
/// push upward until a candidate S_i(u^i) validates or y lies above the lower
/// corner, in which case y violates the separability condition and no
/// semispace can work. With `hemispace_fallback`, S_0^M at the upper corner
/// with M = {i : upper_i < 1} is tried last.
///
/// Every returned separator has been checked to contain C and avoid B.
inline SeparationCertificate separate_box(const Box& b, const GeneratedConvexSet& c,
                                          const SeparationOptions& opts = {}) {
  detail::require_same_dimension(b.dimension(), c.dimension(), "separate_box");
  if (box_intersects_hull(b, c)) throw IntersectionError("box meets the convex set");
  return detail::BoxSeparator(b, c).run(opts);
}

/// Result of the separability condition check; a violation carries its hull point.
struct ConditionCheck {
  std::optional<Point> violation;
  bool holds() const { return !violation.has_value(); }
};

inline ConditionCheck check_sep_cond(const Box& b, const GeneratedConvexSet& c) {
  const auto cert = separate_box(b, c, SeparationOptions{false});
  if (const Point* w = cert.witness()) return {*w};
  return {};
}

/// Exhaustive search over all grid points x0 and their semispace families.
/// True iff none contains C and avoids B.
inline bool assert_nonseparable(const Box& b, const GeneratedConvexSet& c, const Grid& grid) {
  detail::require_same_dimension(b.dimension(), c.dimension(), "assert_nonseparable");
  if (box_intersects_hull(b, c)) throw IntersectionError("box meets the convex set");
  return !oracle::brute_separation_search(b, c, grid).has_value();
}

/// Re-checks a certificate against the instance with closed-form tests only.
inline bool certificate_is_valid(const SeparationCertificate& cert, const Box& b, const GeneratedConvexSet& c) {
  if (cert.oracle_calls != cert.trace.size()) return false;
  if (const auto* s = cert.semispace()) return s->avoids(b) && set_in_semispace(c, *s).contained();
  if (const auto* h = cert.hemispace()) return h->avoids(b) && set_in_hemispace(c, *h).contained();
  return !box_intersects_hull(b, c) && is_condition_violation(b, c, *cert.witness());
}

}  // namespace maxmin

#endif  // MAXMIN_SEPARATION_HPP
