#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wreath/errors.hpp"

namespace wreath {

using Letter = std::uint32_t;

constexpr std::uint32_t kMaxDegree = 1u << 16;

/// The alphabet {0,...,d-1} labelling the d subtrees below every vertex.
class Alphabet {
public:
  explicit Alphabet(std::uint32_t degree);

  std::uint32_t degree() const { return degree_; }

  bool operator==(const Alphabet&) const = default;

private:
  std::uint32_t degree_;
};

/// A vertex of the rooted tree: a finite word over {0,...,d-1}.
/// The first letter is the level-1 letter (nearest the root); the empty
/// word is the root.
class VertexWord {
public:
  VertexWord() = default;
  explicit VertexWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  static VertexWord from_digits(std::string_view digits, std::uint32_t degree);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }

  void push_back(Letter l) { letters_.push_back(l); }

  VertexWord operator+(const VertexWord& tail) const;

  /// Digit-string form; only valid for letters < 10.
  std::string to_digits() const;

  void validate(std::uint32_t degree) const;

  bool operator==(const VertexWord&) const = default;

private:
  std::vector<Letter> letters_;
};

/// d^n with an overflow check.
std::uint64_t pow_checked(std::uint32_t base, std::uint32_t exp);

/// Canonical index of a level-n vertex word: sum of w_i * d^(n-i), leftmost
/// letter most significant. Bijection E^n -> [0, d^n). Level-(n+1) ranks
/// refine level-n ranks by suffix extension: rank(eps w) = eps*d^n + rank(w).
std::uint64_t rank(const VertexWord& w, std::size_t level, std::uint32_t degree);

VertexWord unrank(std::uint64_t r, std::size_t level, std::uint32_t degree);

/// A permutation of the alphabet {0,...,d-1}.
class Permutation {
public:
  explicit Permutation(std::vector<Letter> images);

  static Permutation identity(std::uint32_t degree);

  /// Parses circular notation, e.g. "(0,2)" or "(0 1)(2 3)". Fixed points
  /// are omitted; the empty string is the identity.
  static Permutation from_cycles(std::string_view text, std::uint32_t degree);

  std::uint32_t degree() const { return static_cast<std::uint32_t>(images_.size()); }
  Letter operator()(Letter l) const { return images_[l]; }

  /// Composition applying *this first: (p.then(q))(x) = q(p(x)).
  Permutation then(const Permutation& next) const;

  Permutation inverse() const;

  bool is_identity() const;

  /// Canonical cycle form: each cycle starts at its smallest element,
  /// cycles ordered by smallest element, e.g. "(0 1)(2 3)"; "" if identity.
  std::string to_cycles() const;

  bool operator==(const Permutation&) const = default;

private:
  std::vector<Letter> images_;
};

} // namespace wreath
