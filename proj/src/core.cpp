#include "wreath/core.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace wreath {

Alphabet::Alphabet(std::uint32_t degree) : degree_(degree) {
  if (degree < 2)
    throw Error("alphabet degree must be at least 2, got " + std::to_string(degree));
  if (degree > kMaxDegree)
    throw Error("alphabet degree exceeds supported maximum " + std::to_string(kMaxDegree));
}

VertexWord VertexWord::from_digits(std::string_view digits, std::uint32_t degree) {
  std::vector<Letter> letters;
  letters.reserve(digits.size());
  for (char c : digits) {
    if (c < '0' || c > '9')
      throw Error(std::string("invalid letter character '") + c + "' in vertex word");
    Letter l = static_cast<Letter>(c - '0');
    if (l >= degree)
      throw Error("letter " + std::to_string(l) + " out of range for degree " +
                  std::to_string(degree));
    letters.push_back(l);
  }
  return VertexWord(std::move(letters));
}

VertexWord VertexWord::operator+(const VertexWord& tail) const {
  std::vector<Letter> letters = letters_;
  letters.insert(letters.end(), tail.letters_.begin(), tail.letters_.end());
  return VertexWord(std::move(letters));
}

std::string VertexWord::to_digits() const {
  std::string out;
  out.reserve(letters_.size());
  for (Letter l : letters_) {
    if (l > 9)
      throw Error("vertex word has letter " + std::to_string(l) +
                  "; digit form only supports letters 0-9");
    out.push_back(static_cast<char>('0' + l));
  }
  return out;
}

void VertexWord::validate(std::uint32_t degree) const {
  for (Letter l : letters_)
    if (l >= degree)
      throw Error("letter " + std::to_string(l) + " out of range for degree " +
                  std::to_string(degree));
}

std::uint64_t pow_checked(std::uint32_t base, std::uint32_t exp) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / base)
      throw Error("d^n does not fit in 64 bits (d=" + std::to_string(base) +
                  ", n=" + std::to_string(exp) + ")");
    r *= base;
  }
  return r;
}

std::uint64_t rank(const VertexWord& w, std::size_t level, std::uint32_t degree) {
  if (w.size() != level)
    throw Error("vertex word length " + std::to_string(w.size()) +
                " does not match level " + std::to_string(level));
  pow_checked(degree, static_cast<std::uint32_t>(level));
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] >= degree)
      throw Error("letter " + std::to_string(w[i]) + " out of range for degree " +
                  std::to_string(degree));
    r = r * degree + w[i];
  }
  return r;
}

VertexWord unrank(std::uint64_t r, std::size_t level, std::uint32_t degree) {
  const std::uint64_t total = pow_checked(degree, static_cast<std::uint32_t>(level));
  if (r >= total)
    throw Error("rank " + std::to_string(r) + " out of range for level " +
                std::to_string(level));
  std::vector<Letter> letters(level);
  for (std::size_t i = level; i-- > 0;) {
    letters[i] = static_cast<Letter>(r % degree);
    r /= degree;
  }
  return VertexWord(std::move(letters));
}

Permutation::Permutation(std::vector<Letter> images) : images_(std::move(images)) {
  const std::uint32_t d = degree();
  std::vector<bool> seen(d, false);
  for (Letter l : images_) {
    if (l >= d)
      throw Error("permutation image " + std::to_string(l) + " out of range");
    if (seen[l])
      throw Error("permutation repeats image " + std::to_string(l));
    seen[l] = true;
  }
}

Permutation Permutation::identity(std::uint32_t degree) {
  std::vector<Letter> images(degree);
  for (std::uint32_t i = 0; i < degree; ++i)
    images[i] = i;
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::string_view text, std::uint32_t degree) {
  std::vector<Letter> images(degree);
  for (std::uint32_t i = 0; i < degree; ++i)
    images[i] = i;
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw Error(std::string("expected '(' in cycle notation, got '") + text[i] + "'");
    ++i;
    std::vector<Letter> cycle;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ',') { // separators: commas or spaces
        ++i;
        skip_ws();
      }
      if (i >= text.size())
        throw Error("unterminated cycle in permutation");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw Error(std::string("expected letter in cycle, got '") + text[i] + "'");
      std::uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (v > kMaxDegree)
          throw Error("letter in cycle too large");
        ++i;
      }
      if (v >= degree)
        throw Error("letter " + std::to_string(v) + " out of range for degree " +
                    std::to_string(degree));
      Letter l = static_cast<Letter>(v);
      if (used[l])
        throw Error("letter " + std::to_string(l) + " repeated in cycles");
      used[l] = true;
      cycle.push_back(l);
    }
    if (cycle.empty())
      throw Error("empty cycle in permutation");
    for (std::size_t k = 0; k < cycle.size(); ++k)
      images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return Permutation(std::move(images));
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.degree() != degree())
    throw Error("cannot compose permutations of different degrees");
  std::vector<Letter> images(degree());
  for (std::uint32_t i = 0; i < degree(); ++i)
    images[i] = next(images_[i]);
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<Letter> images(degree());
  for (std::uint32_t i = 0; i < degree(); ++i)
    images[images_[i]] = i;
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::uint32_t i = 0; i < degree(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> seen(degree(), false);
  for (std::uint32_t i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i)
      continue;
    out.push_back('(');
    Letter j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first)
        out.push_back(' ');
      out += std::to_string(j);
      first = false;
      j = images_[j];
    }
    out.push_back(')');
  }
  return out;
}

} // namespace wreath
