#pragma once

#include <map>
#include <optional>

#include "wreath/decision.hpp"

namespace wreath {

/// Per-level verdicts: per_level[k-1] is true iff the level-k action is a
/// single d^k-cycle. An element passing for every level is an odometer at
/// the tested scale.
struct OdometerReport {
  std::vector<bool> per_level;
  bool all;
};

OdometerReport odometer_check(const RecursionSystem& sys, const GroupWord& u,
                              std::uint32_t max_level,
                              std::uint64_t work_budget = kDefaultWorkBudget);

/// Signed exponent sums per generator symbol; zero entries omitted.
/// Invariant under free reduction and conjugation.
struct ExponentVector {
  std::map<SymbolId, std::int64_t> counts;

  ExponentVector operator+(const ExponentVector& rhs) const;
  bool operator==(const ExponentVector&) const = default;
};

/// Counts signed exponents after exhaustively applying the substitution
/// map (symbol -> replacement word over the remaining symbols). Every
/// substituted symbol vanishes from the count. Throws on a cyclic chain.
ExponentVector exponent_vector(const RecursionSystem& sys, const GroupWord& u,
                               const std::map<SymbolId, GroupWord>& substitutions = {});

/// Product of the sections of u along the root-permutation cycle through
/// `start`: u_{c0}.u_{c1}...u_{c_{k-1}} with c0 = start, c_{i+1} =
/// sigma_u(c_i). When sigma_u cycles the whole alphabet this is the unique
/// lift of the corresponding loop.
GroupWord cycle_section_product(const RecursionSystem& sys, const GroupWord& u,
                                Letter start);

/// k-fold cycle_section_product from `start`. Before every iteration the
/// current root permutation must cycle `start` through the whole alphabet;
/// otherwise throws, naming the failing step (1-based).
GroupWord iterate_lift(const RecursionSystem& sys, const GroupWord& u, Letter start,
                       std::uint32_t iterations);

/// Per-curve outcome of the algebraic Levy-cycle test: the first fixed
/// letter of sigma_{curve_k} whose section equals curve_{k-1} up to the
/// given level, if any.
struct LevyCurveReport {
  bool satisfied;
  std::optional<Letter> fixed_letter;
};

/// Necessary condition only: level-n equality of words stands in for
/// isotopy of loops, so a passing verdict never certifies a Levy cycle,
/// while a failing one rules out this multicurve as represented by these
/// exact words.
struct LevyReport {
  std::vector<LevyCurveReport> per_curve;
  bool all;
};

LevyReport levy_necessary_condition(const RecursionSystem& sys,
                                    const std::vector<GroupWord>& curves,
                                    std::uint32_t level);

struct NotReachable {};

using SchreierResult = std::variant<GroupWord, NotReachable>;

/// Breadth-first search on the level-n Schreier graph under right
/// multiplication by the generators and their inverses. Returns a
/// shortest word carrying `from` to `to`; ties are broken by generator
/// list order with inverses after positives. Inverse edges that act
/// identically to a positive edge (involutions) are deduplicated.
SchreierResult schreier_path(const RecursionSystem& sys,
                             const std::vector<GroupWord>& generators,
                             const VertexWord& from, const VertexWord& to,
                             std::uint64_t work_budget = kDefaultWorkBudget);

} // namespace wreath
