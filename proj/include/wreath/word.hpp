#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace wreath {

using SymbolId = std::uint32_t;

/// One signed generator occurrence in a group word.
struct Factor {
  SymbolId symbol;
  bool inverted;

  Factor opposite() const { return Factor{symbol, !inverted}; }
  bool cancels(const Factor& other) const {
    return symbol == other.symbol && inverted != other.inverted;
  }
  bool operator==(const Factor&) const = default;
};

/// A freely reduced word over generator symbols. The empty word is the
/// identity element. All operations preserve free reduction.
class GroupWord {
public:
  GroupWord() = default;

  static GroupWord generator(SymbolId s, bool inverted = false) {
    GroupWord w;
    w.factors_.push_back(Factor{s, inverted});
    return w;
  }

  /// Builds from an arbitrary factor sequence, reducing x.x^-1 pairs.
  static GroupWord from_factors(const std::vector<Factor>& factors);

  bool empty() const { return factors_.empty(); }
  std::size_t size() const { return factors_.size(); }
  const std::vector<Factor>& factors() const { return factors_; }

  /// Reducing push: cancels against the current last factor.
  void append(Factor f);
  void append(const GroupWord& w);
  void append_inverse(const GroupWord& w);

  /// Concatenation with free reduction; *this is performed first.
  GroupWord operator*(const GroupWord& rhs) const;

  /// Formal inverse: reversed order, flipped signs.
  GroupWord inverse() const;

  GroupWord pow(std::int64_t exponent) const;

  /// conj = c^-1 would be wrong way around; this is c.(*this).c^-1.
  GroupWord conjugated_by(const GroupWord& c) const;

  bool operator==(const GroupWord&) const = default;

private:
  std::vector<Factor> factors_;
};

struct GroupWordHash {
  std::size_t operator()(const GroupWord& w) const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (const Factor& f : w.factors()) {
      std::size_t v = (static_cast<std::size_t>(f.symbol) << 1) | (f.inverted ? 1u : 0u);
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

} // namespace wreath
