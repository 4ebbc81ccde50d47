#pragma once

#include <variant>

#include "wreath/calculus.hpp"

namespace wreath {

/// Default cap on n * d^n work units for whole-level computations.
constexpr std::uint64_t kDefaultWorkBudget = 100'000'000;

/// The permutation induced on the d^n vertices of level n, in rank order:
/// images[rank(w)] = rank(act(u, w)) for every w of length n.
struct LevelPermutation {
  std::uint32_t level;
  std::uint32_t degree;
  std::vector<std::uint64_t> images;
};

LevelPermutation level_permutation(const RecursionSystem& sys, const GroupWord& u,
                                   std::uint32_t level,
                                   std::uint64_t work_budget = kDefaultWorkBudget);

/// Cycle lengths, sorted ascending (multiset form).
std::vector<std::uint64_t> cycle_structure(const LevelPermutation& p);

/// lcm of the cycle lengths; throws if it does not fit in 64 bits.
std::uint64_t order(const LevelPermutation& p);

/// True iff u fixes every vertex word of length <= level.
bool trivial_up_to_level(const RecursionSystem& sys, const GroupWord& u,
                         std::uint32_t level);

/// A finite section-closed set of trivial-root words containing the
/// queried word; such a set proves every member equal to the identity.
struct IdentityCertificate {
  std::vector<GroupWord> members;
};

/// A vertex whose subtree exposes a moved letter: act(u, vertex + letter)
/// differs from the input.
struct NonIdentityWitness {
  VertexWord vertex;
  Letter letter;
};

/// Budget ran out while every root permutation seen so far was trivial.
struct Inconclusive {};

struct ProveBudget {
  std::size_t max_members = 10'000;
  std::size_t max_word_length = 512;
};

using ProveResult = std::variant<IdentityCertificate, NonIdentityWitness, Inconclusive>;

/// Breadth-first closure of freely reduced sections. A certificate is an
/// exact proof of u = Id; a witness is an exact refutation; Inconclusive
/// only on budget exhaustion. Closure uses free reduction only, never
/// relator rewriting, so some true identities of relator-bearing systems
/// may come back Inconclusive.
ProveResult prove_identity(const RecursionSystem& sys, const GroupWord& u,
                           ProveBudget budget = {});

/// Re-expands every member: all roots trivial, every section (reduced)
/// empty or in the set, and subject present.
bool verify_certificate(const RecursionSystem& sys, const IdentityCertificate& cert,
                        const GroupWord& subject);

/// u = v up to level n, via triviality of u.v^-1.
bool equal_up_to_level(const RecursionSystem& sys, const GroupWord& u,
                       const GroupWord& v, std::uint32_t level);

/// Exact equality attempt via prove_identity(u.v^-1).
ProveResult prove_equal(const RecursionSystem& sys, const GroupWord& u,
                        const GroupWord& v, ProveBudget budget = {});

} // namespace wreath
