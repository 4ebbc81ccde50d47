#include "wreath/analysis.hpp"

#include <deque>
#include <limits>

namespace wreath {

OdometerReport odometer_check(const RecursionSystem& sys, const GroupWord& u,
                              std::uint32_t max_level, std::uint64_t work_budget) {
  OdometerReport report;
  report.all = true;
  for (std::uint32_t n = 1; n <= max_level; ++n) {
    LevelPermutation p = level_permutation(sys, u, n, work_budget);
    const std::vector<std::uint64_t> cycles = cycle_structure(p);
    const bool single = cycles.size() == 1 && cycles[0] == p.images.size();
    report.per_level.push_back(single);
    report.all = report.all && single;
  }
  return report;
}

ExponentVector ExponentVector::operator+(const ExponentVector& rhs) const {
  ExponentVector out = *this;
  for (const auto& [sym, count] : rhs.counts) {
    auto it = out.counts.find(sym);
    if (it == out.counts.end()) {
      out.counts.emplace(sym, count);
    } else {
      it->second += count;
      if (it->second == 0)
        out.counts.erase(it);
    }
  }
  return out;
}

namespace {

// Resolved exponent contribution of one symbol under the substitution map.
class SubstitutionResolver {
public:
  SubstitutionResolver(const RecursionSystem& sys,
                       const std::map<SymbolId, GroupWord>& substitutions)
      : sys_(sys), substitutions_(substitutions),
        state_(sys.generator_count(), State::kUnvisited),
        contributions_(sys.generator_count()) {}

  const std::map<SymbolId, std::int64_t>& contribution(SymbolId s) {
    if (s >= state_.size())
      throw Error("undefined symbol id " + std::to_string(s) + " in word");
    if (state_[s] == State::kInProgress)
      throw Error("cyclic substitution chain through '" + sys_.name(s) + "'");
    if (state_[s] == State::kDone)
      return contributions_[s];
    state_[s] = State::kInProgress;
    std::map<SymbolId, std::int64_t> result;
    auto it = substitutions_.find(s);
    if (it == substitutions_.end()) {
      result.emplace(s, 1);
    } else {
      for (const Factor& f : it->second.factors()) {
        const std::int64_t sign = f.inverted ? -1 : 1;
        for (const auto& [sym, count] : contribution(f.symbol)) {
          auto pos = result.find(sym);
          if (pos == result.end())
            pos = result.emplace(sym, 0).first;
          pos->second += sign * count;
          if (pos->second == 0)
            result.erase(pos);
        }
      }
    }
    contributions_[s] = std::move(result);
    state_[s] = State::kDone;
    return contributions_[s];
  }

private:
  enum class State { kUnvisited, kInProgress, kDone };

  const RecursionSystem& sys_;
  const std::map<SymbolId, GroupWord>& substitutions_;
  std::vector<State> state_;
  std::vector<std::map<SymbolId, std::int64_t>> contributions_;
};

} // namespace

ExponentVector exponent_vector(const RecursionSystem& sys, const GroupWord& u,
                               const std::map<SymbolId, GroupWord>& substitutions) {
  SubstitutionResolver resolver(sys, substitutions);
  ExponentVector out;
  for (const Factor& f : u.factors()) {
    const std::int64_t sign = f.inverted ? -1 : 1;
    for (const auto& [sym, count] : resolver.contribution(f.symbol)) {
      auto pos = out.counts.find(sym);
      if (pos == out.counts.end())
        pos = out.counts.emplace(sym, 0).first;
      pos->second += sign * count;
      if (pos->second == 0)
        out.counts.erase(pos);
    }
  }
  return out;
}

GroupWord cycle_section_product(const RecursionSystem& sys, const GroupWord& u,
                                Letter start) {
  if (start >= sys.degree())
    throw Error("letter " + std::to_string(start) + " out of range for degree " +
                std::to_string(sys.degree()));
  WreathDecomposition dec = expand(sys, u);
  GroupWord out;
  Letter c = start;
  do {
    out.append(dec.sections[c]);
    c = dec.root(c);
  } while (c != start);
  return out;
}

GroupWord iterate_lift(const RecursionSystem& sys, const GroupWord& u, Letter start,
                       std::uint32_t iterations) {
  if (start >= sys.degree())
    throw Error("letter " + std::to_string(start) + " out of range for degree " +
                std::to_string(sys.degree()));
  GroupWord cur = u;
  for (std::uint32_t step = 1; step <= iterations; ++step) {
    WreathDecomposition dec = expand(sys, cur);
    std::uint32_t cycle_len = 0;
    Letter c = start;
    do {
      c = dec.root(c);
      ++cycle_len;
    } while (c != start);
    if (cycle_len != sys.degree())
      throw Error("lift step " + std::to_string(step) +
                  ": root permutation cycles letter " + std::to_string(start) +
                  " with period " + std::to_string(cycle_len) + ", need " +
                  std::to_string(sys.degree()));
    GroupWord next;
    c = start;
    do {
      next.append(dec.sections[c]);
      c = dec.root(c);
    } while (c != start);
    cur = std::move(next);
  }
  return cur;
}

LevyReport levy_necessary_condition(const RecursionSystem& sys,
                                    const std::vector<GroupWord>& curves,
                                    std::uint32_t level) {
  if (curves.empty())
    throw Error("multicurve must contain at least one curve");
  const std::size_t m = curves.size();
  LevyReport report;
  report.all = true;
  for (std::size_t k = 0; k < m; ++k) {
    const GroupWord& prev = curves[(k + m - 1) % m];
    WreathDecomposition dec = expand(sys, curves[k]);
    LevyCurveReport cr{false, std::nullopt};
    for (Letter eps = 0; eps < sys.degree(); ++eps) {
      if (dec.root(eps) != eps)
        continue;
      if (equal_up_to_level(sys, dec.sections[eps], prev, level)) {
        cr = LevyCurveReport{true, eps};
        break;
      }
    }
    report.per_curve.push_back(cr);
    report.all = report.all && cr.satisfied;
  }
  return report;
}

SchreierResult schreier_path(const RecursionSystem& sys,
                             const std::vector<GroupWord>& generators,
                             const VertexWord& from, const VertexWord& to,
                             std::uint64_t work_budget) {
  if (generators.empty())
    throw Error("schreier search needs at least one generator");
  if (from.size() != to.size())
    throw Error("from/to vertex words must have the same length");
  from.validate(sys.degree());
  to.validate(sys.degree());
  const std::uint32_t n = static_cast<std::uint32_t>(from.size());
  if (n == 0)
    return from == to ? SchreierResult(GroupWord{}) : SchreierResult(NotReachable{});

  // Edge labels: all positive generators in list order, then the inverses
  // whose level-n action differs from every earlier label (involutions
  // collapse onto their positive edge).
  struct EdgeLabel {
    std::size_t gen;
    bool inverted;
  };
  std::vector<std::vector<std::uint64_t>> tables;
  std::vector<EdgeLabel> labels;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    tables.push_back(level_permutation(sys, generators[i], n, work_budget).images);
    labels.push_back(EdgeLabel{i, false});
  }
  for (std::size_t i = 0; i < generators.size(); ++i) {
    std::vector<std::uint64_t> t =
        level_permutation(sys, generators[i].inverse(), n, work_budget).images;
    bool duplicate = false;
    for (const auto& existing : tables)
      if (existing == t) {
        duplicate = true;
        break;
      }
    if (!duplicate) {
      tables.push_back(std::move(t));
      labels.push_back(EdgeLabel{i, true});
    }
  }

  const std::uint64_t total = pow_checked(sys.degree(), n);
  const std::uint64_t source = rank(from, n, sys.degree());
  const std::uint64_t target = rank(to, n, sys.degree());

  constexpr std::uint32_t kNoEdge = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint64_t> parent(total, 0);
  std::vector<std::uint32_t> via(total, kNoEdge);
  std::vector<bool> visited(total, false);

  std::deque<std::uint64_t> queue;
  visited[source] = true;
  queue.push_back(source);
  bool reached = source == target;
  while (!queue.empty() && !reached) {
    const std::uint64_t x = queue.front();
    queue.pop_front();
    for (std::uint32_t e = 0; e < tables.size(); ++e) {
      const std::uint64_t y = tables[e][x];
      if (visited[y])
        continue;
      visited[y] = true;
      parent[y] = x;
      via[y] = e;
      if (y == target) {
        reached = true;
        break;
      }
      queue.push_back(y);
    }
  }
  if (!reached)
    return NotReachable{};

  std::vector<std::uint32_t> edges;
  for (std::uint64_t x = target; via[x] != kNoEdge; x = parent[x])
    edges.push_back(via[x]);
  GroupWord path;
  for (auto it = edges.rbegin(); it != edges.rend(); ++it) {
    const EdgeLabel& l = labels[*it];
    if (l.inverted)
      path.append_inverse(generators[l.gen]);
    else
      path.append(generators[l.gen]);
  }
  return path;
}

} // namespace wreath
