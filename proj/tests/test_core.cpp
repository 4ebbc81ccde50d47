#include <doctest.h>

#include "wreath/core.hpp"
#include "test_support.hpp"

using namespace wreath;
using wreath::testing::Rng;

TEST_CASE("alphabet rejects degenerate degrees") {
  CHECK_THROWS_AS(Alphabet(0), Error);
  CHECK_THROWS_AS(Alphabet(1), Error);
  CHECK(Alphabet(2).degree() == 2);
}

TEST_CASE("rank of vertex words, leftmost letter most significant") {
  CHECK(rank(VertexWord::from_digits("", 2), 0, 2) == 0);
  CHECK(rank(VertexWord::from_digits("10", 2), 2, 2) == 2);
  CHECK(rank(VertexWord::from_digits("21", 3), 2, 3) == 7);
  CHECK_THROWS_AS(rank(VertexWord::from_digits("10", 2), 3, 2), Error);
}

TEST_CASE("rank is a bijection onto [0, d^n)") {
  for (std::uint32_t d : {2u, 3u, 5u}) {
    for (std::uint32_t n = 0; n <= 5; ++n) {
      const std::uint64_t total = pow_checked(d, n);
      std::vector<bool> hit(total, false);
      // enumerate words by unrank and confirm rank inverts it
      for (std::uint64_t r = 0; r < total; ++r) {
        const VertexWord w = unrank(r, n, d);
        CHECK(w.size() == n);
        const std::uint64_t back = rank(w, n, d);
        CHECK(back == r);
        hit[back] = true;
      }
      CHECK(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
    }
  }
}

TEST_CASE("suffix extension refines ranks") {
  const VertexWord w = VertexWord::from_digits("102", 3);
  VertexWord extended;
  extended.push_back(2);
  extended = extended + w;
  CHECK(rank(extended, 4, 3) == 2 * 27 + rank(w, 3, 3));
}

TEST_CASE("cycle notation parses the written forms") {
  const Permutation p = Permutation::from_cycles("(0,2)", 3);
  CHECK(p(0) == 2);
  CHECK(p(1) == 1);
  CHECK(p(2) == 0);

  CHECK(Permutation::from_cycles("(0 1)(2 3)", 4) ==
        Permutation({1, 0, 3, 2}));
  CHECK(Permutation::from_cycles("", 3) == Permutation::identity(3));
  CHECK(Permutation::from_cycles("  ", 3) == Permutation::identity(3));
  CHECK(Permutation::from_cycles("(0, 1, 2)", 3) ==
        Permutation::from_cycles("(0 1 2)", 3));
}

TEST_CASE("cycle notation rejects bad input") {
  CHECK_THROWS_WITH_AS(Permutation::from_cycles("(0 3)", 3),
                       doctest::Contains("out of range"), Error);
  CHECK_THROWS_WITH_AS(Permutation::from_cycles("(0 1)(1 2)", 3),
                       doctest::Contains("repeated"), Error);
  CHECK_THROWS_AS(Permutation::from_cycles("(0", 3), Error);
  CHECK_THROWS_AS(Permutation::from_cycles("0 1", 3), Error);
  CHECK_THROWS_AS(Permutation::from_cycles("()", 3), Error);
}

TEST_CASE("singleton cycles are redundant fixed points") {
  CHECK(Permutation::from_cycles("(1)", 3) == Permutation::identity(3));
  CHECK(Permutation::from_cycles("(0 2)(1)", 3) ==
        Permutation::from_cycles("(0 2)", 3));
  CHECK_THROWS_WITH_AS(Permutation::from_cycles("(1)(1)", 3),
                       doctest::Contains("repeated"), Error);
}

TEST_CASE("transposition composed with itself is the identity") {
  const Permutation t = Permutation::from_cycles("(0,1)", 2);
  CHECK(t.then(t).is_identity());
}

TEST_CASE("inverse of a 3-cycle") {
  const Permutation c = Permutation::from_cycles("(0,1,2)", 3);
  CHECK(c.inverse() == Permutation::from_cycles("(0,2,1)", 3));
}

TEST_CASE("canonical cycle form starts each cycle at its smallest element") {
  CHECK(Permutation::from_cycles("(2 3)(1 0)", 4).to_cycles() == "(0 1)(2 3)");
  CHECK(Permutation::from_cycles("(2 0 1)", 3).to_cycles() == "(0 1 2)");
  CHECK(Permutation::identity(4).to_cycles() == "");
}

TEST_CASE("permutations satisfy the group axioms on random samples") {
  Rng rng(0xC0FFEE);
  for (int i = 0; i < 200; ++i) {
    const std::uint32_t d = 2 + static_cast<std::uint32_t>(rng.below(6));
    const Permutation p = rng.permutation(d);
    const Permutation q = rng.permutation(d);
    const Permutation r = rng.permutation(d);
    CHECK(p.then(q).then(r) == p.then(q.then(r)));
    CHECK(p.then(p.inverse()).is_identity());
    CHECK(p.inverse().then(p).is_identity());
    CHECK(p.then(Permutation::identity(d)) == p);
    CHECK(Permutation::from_cycles(p.to_cycles(), d) == p);
  }
}

TEST_CASE("vertex word digit parsing validates letters") {
  CHECK_THROWS_AS(VertexWord::from_digits("012", 2), Error);
  CHECK_THROWS_AS(VertexWord::from_digits("0x1", 2), Error);
  CHECK(VertexWord::from_digits("", 2).empty());
  CHECK(VertexWord::from_digits("0120", 3).to_digits() == "0120");
}
