#include "wreath/decision.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace wreath {

namespace {

std::uint64_t level_work(std::uint32_t degree, std::uint32_t level) {
  return pow_checked(degree, level) * level;
}

// Depth-first walk filling ranks; one expansion per internal vertex.
void fill_level(const RecursionSystem& sys, const GroupWord& u, std::uint32_t level,
                std::uint64_t in_rank, std::uint64_t out_rank,
                std::vector<std::uint64_t>& images) {
  if (level == 0) {
    images[in_rank] = out_rank;
    return;
  }
  const std::uint32_t d = sys.degree();
  WreathDecomposition dec = expand(sys, u);
  for (std::uint32_t eps = 0; eps < d; ++eps)
    fill_level(sys, dec.sections[eps], level - 1, in_rank * d + eps,
               out_rank * d + dec.root(eps), images);
}

} // namespace

LevelPermutation level_permutation(const RecursionSystem& sys, const GroupWord& u,
                                   std::uint32_t level, std::uint64_t work_budget) {
  if (level < 1)
    throw Error("level must be at least 1");
  const std::uint64_t work = level_work(sys.degree(), level);
  if (work > work_budget)
    throw BudgetExceeded("level " + std::to_string(level) + " needs " +
                         std::to_string(work) + " work units, budget is " +
                         std::to_string(work_budget));
  std::vector<std::uint64_t> images(pow_checked(sys.degree(), level));
  fill_level(sys, u, level, 0, 0, images);
  return LevelPermutation{level, sys.degree(), std::move(images)};
}

std::vector<std::uint64_t> cycle_structure(const LevelPermutation& p) {
  std::vector<std::uint64_t> lengths;
  std::vector<bool> seen(p.images.size(), false);
  for (std::size_t i = 0; i < p.images.size(); ++i) {
    if (seen[i])
      continue;
    std::uint64_t len = 0;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = static_cast<std::size_t>(p.images[j]);
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::uint64_t order(const LevelPermutation& p) {
  std::uint64_t result = 1;
  for (std::uint64_t len : cycle_structure(p)) {
    const std::uint64_t g = std::gcd(result, len);
    const std::uint64_t q = result / g;
    if (len != 0 && q > std::numeric_limits<std::uint64_t>::max() / len)
      throw Error("permutation order does not fit in 64 bits");
    result = q * len;
  }
  return result;
}

bool trivial_up_to_level(const RecursionSystem& sys, const GroupWord& u,
                         std::uint32_t level) {
  // memo: word -> largest remaining depth already verified trivial
  std::unordered_map<GroupWord, std::uint32_t, GroupWordHash> verified;
  const std::uint32_t d = sys.degree();

  auto go = [&](auto&& self, const GroupWord& w, std::uint32_t remaining) -> bool {
    if (remaining == 0)
      return true;
    auto it = verified.find(w);
    if (it != verified.end() && it->second >= remaining)
      return true;
    WreathDecomposition dec = expand(sys, w);
    if (!dec.root.is_identity())
      return false;
    for (std::uint32_t eps = 0; eps < d; ++eps)
      if (!self(self, dec.sections[eps], remaining - 1))
        return false;
    auto [pos, inserted] = verified.emplace(w, remaining);
    if (!inserted && pos->second < remaining)
      pos->second = remaining;
    return true;
  };
  return go(go, u, level);
}

ProveResult prove_identity(const RecursionSystem& sys, const GroupWord& u,
                           ProveBudget budget) {
  const std::uint32_t d = sys.degree();

  // BFS over distinct freely reduced section words; each word remembers
  // the first vertex at which it appeared, so the first nontrivial root
  // popped yields a shortest witness (earliest letters on ties).
  std::unordered_set<GroupWord, GroupWordHash> seen;
  std::vector<GroupWord> discovered; // discovery order, for deterministic output
  std::deque<std::pair<GroupWord, VertexWord>> queue;
  seen.insert(u);
  discovered.push_back(u);
  queue.emplace_back(u, VertexWord{});

  while (!queue.empty()) {
    auto [w, vertex] = std::move(queue.front());
    queue.pop_front();

    WreathDecomposition dec = expand(sys, w);
    for (std::uint32_t eps = 0; eps < d; ++eps)
      if (dec.root(eps) != eps)
        return NonIdentityWitness{vertex, eps};

    for (std::uint32_t eps = 0; eps < d; ++eps) {
      GroupWord& s = dec.sections[eps];
      if (s.empty() || seen.count(s))
        continue;
      if (seen.size() >= budget.max_members || s.size() > budget.max_word_length)
        return Inconclusive{};
      VertexWord child = vertex;
      child.push_back(eps);
      seen.insert(s);
      discovered.push_back(s);
      queue.emplace_back(std::move(s), std::move(child));
    }
  }

  return IdentityCertificate{std::move(discovered)};
}

bool verify_certificate(const RecursionSystem& sys, const IdentityCertificate& cert,
                        const GroupWord& subject) {
  std::unordered_set<GroupWord, GroupWordHash> members(cert.members.begin(),
                                                       cert.members.end());
  if (!members.count(subject))
    return false;
  for (const GroupWord& w : cert.members) {
    WreathDecomposition dec = expand(sys, w);
    if (!dec.root.is_identity())
      return false;
    for (const GroupWord& s : dec.sections)
      if (!s.empty() && !members.count(s))
        return false;
  }
  return true;
}

bool equal_up_to_level(const RecursionSystem& sys, const GroupWord& u,
                       const GroupWord& v, std::uint32_t level) {
  GroupWord diff = u;
  diff.append_inverse(v);
  return trivial_up_to_level(sys, diff, level);
}

ProveResult prove_equal(const RecursionSystem& sys, const GroupWord& u,
                        const GroupWord& v, ProveBudget budget) {
  GroupWord diff = u;
  diff.append_inverse(v);
  return prove_identity(sys, diff, budget);
}

} // namespace wreath
