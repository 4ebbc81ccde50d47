#include <doctest.h>

#include "wreath/calculus.hpp"
#include "wreath/dsl.hpp"
#include "test_support.hpp"

using namespace wreath;
using wreath::testing::cat;
using wreath::testing::W;

TEST_CASE("parsing the Basilica presentation") {
  const RecursionSystem sys =
      parse_system("degree 2\ngen a = (0 1) [b, 1]\ngen b = [a, 1]");
  CHECK(sys == cat("basilica"));
}

TEST_CASE("recursive and forward references are legal") {
  const RecursionSystem sys = parse_system(
      "degree 2\ngen g = [g*a, g]\ngen a = (0 1) [b,1]\ngen b=[a,1]");
  CHECK(sys.degree() == 2);
  const WreathDecomposition dec = expand(sys, parse_word("g", sys));
  CHECK(dec.sections[0] == parse_word("g*a", sys));
}

TEST_CASE("section count mismatches are reported with their line") {
  try {
    parse_system("degree 3\ngen a = (1 2) [a, 1]");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(doctest::String(e.what()) ==
          doctest::Contains("expected 3 sections, got 2"));
  }
}

TEST_CASE("undefined symbols are reported with their position") {
  try {
    parse_system("degree 2\ngen a = (0 1) [zz, 1]");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(doctest::String(e.what()) == doctest::Contains("undefined symbol 'zz'"));
  }
}

TEST_CASE("bad cycles are reported") {
  CHECK_THROWS_AS(parse_system("degree 2\ngen a = (0 5) [1, 1]"), ParseError);
  CHECK_THROWS_AS(parse_system("degree 3\ngen a = (0 1)(1 2) [1, 1, 1]"), ParseError);
  CHECK_THROWS_AS(parse_system("degree 2\ngen a = (0 1 [1, 1]"), ParseError);
}

TEST_CASE("duplicate generators are rejected") {
  try {
    parse_system("degree 2\ngen a = [1, 1]\ngen a = (0 1) [1, 1]");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(doctest::String(e.what()) == doctest::Contains("duplicate generator"));
  }
}

TEST_CASE("the degree line must exist and come first") {
  CHECK_THROWS_WITH_AS(parse_system(""), doctest::Contains("degree line missing"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_system("# only a comment\n"),
                       doctest::Contains("degree line missing"), ParseError);
  CHECK_THROWS_WITH_AS(parse_system("gen a = [1, 1]\ndegree 2"),
                       doctest::Contains("degree line must come before"), ParseError);
  CHECK_THROWS_AS(parse_system("degree 1\n"), ParseError);
}

TEST_CASE("comments and blank lines are ignored") {
  const RecursionSystem sys = parse_system(
      "# binary odometer\n\ndegree 2\n  # indented comment\ngen g = (0 1) [1, g] # tail\n");
  CHECK(sys == cat("adding_machine_2"));
}

TEST_CASE("serializing the ternary adding machine") {
  CHECK(serialize_system(cat("adding_machine_3")) ==
        "degree 3\ngen g = (0 1 2) [1, 1, g]\n");
}

TEST_CASE("serialization is canonical and parse round-trips") {
  const char* text = "degree 2\n"
                     "gen a = (0 1) [b, 1]\n"
                     "gen b = [a, 1]\n";
  CHECK(serialize_system(parse_system(text)) == text);
}

TEST_CASE("relators serialize after the generators") {
  const RecursionSystem sys = parse_system(
      "degree 2\ngen a = (0 1) [1, 1]\nrel a*a\n");
  CHECK(serialize_system(sys) == "degree 2\ngen a = (0 1) [1, 1]\nrel a^2\n");
  CHECK(parse_system(serialize_system(sys)) == sys);
}

TEST_CASE("word grammar: separators, powers, identity") {
  const RecursionSystem& sys = cat("hanoi");
  CHECK(parse_word("b.c.a.b.a", sys) == parse_word("b*c*a*b*a", sys));
  CHECK(parse_word("1", sys).empty());
  CHECK(parse_word("a^-1", sys) == parse_word("a", sys).inverse());
  CHECK(parse_word("a^3", sys).size() == 3);
  CHECK(parse_word("a^0", sys).empty());
  CHECK(parse_word("a^2*a^-2", sys).empty());
  CHECK(parse_word(" b * c ", sys) == parse_word("b*c", sys));
  CHECK_THROWS_AS(parse_word("", sys), ParseError);
  CHECK_THROWS_AS(parse_word("a**b", sys), ParseError);
  CHECK_THROWS_AS(parse_word("a^", sys), ParseError);
  CHECK_THROWS_AS(parse_word("q", sys), ParseError);
  CHECK_THROWS_AS(parse_word("a b", sys), ParseError);
}

TEST_CASE("word formatting uses run-length exponents") {
  const RecursionSystem& sys = cat("basilica");
  CHECK(format_word(sys, GroupWord{}) == "1");
  CHECK(format_word(sys, W(sys, "a*a*b^-3")) == "a^2*b^-3");
  CHECK(format_word(sys, W(sys, "b^-1*a^-1*b^-1*a*b*a^-1*b*a")) ==
        "b^-1*a^-1*b^-1*a*b*a^-1*b*a");
  CHECK(parse_word(format_word(sys, W(sys, "a^2*b^-3*a")), sys) ==
        W(sys, "a^2*b^-3*a"));
}

TEST_CASE("documents keep their source") {
  const std::string text = "degree 2\ngen a = (0 1) [1, 1]\n";
  const SystemDocument doc = parse_document(text);
  CHECK(doc.source == text);
  CHECK(doc.system.degree() == 2);
}

TEST_CASE("reserved and malformed names") {
  CHECK_THROWS_AS(parse_system("degree 2\ngen 1 = [1, 1]\n"), ParseError);
  CHECK_THROWS_AS(parse_system("degree 2\ngen _x = [1, 1]\n"), ParseError);
}

TEST_CASE("mutated sources either parse or fail with a position") {
  wreath::testing::Rng rng(0xF22);
  const std::string base = serialize_system(cat("wittner"));
  const std::string alphabet = "abg12^*.,()[]# \t-_z";
  for (int i = 0; i < 400; ++i) {
    std::string text = base;
    const int edits = 1 + static_cast<int>(rng.below(3));
    for (int e = 0; e < edits; ++e) {
      const std::size_t pos = rng.below(text.size());
      switch (rng.below(3)) {
      case 0:
        text.erase(pos, 1);
        break;
      case 1:
        text.insert(pos, 1, alphabet[rng.below(alphabet.size())]);
        break;
      default:
        text[pos] = alphabet[rng.below(alphabet.size())];
      }
    }
    try {
      const RecursionSystem sys = parse_system(text);
      // accepted: must serialize to its own canonical fixed point
      CHECK(parse_system(serialize_system(sys)) == sys);
    } catch (const ParseError& err) {
      CHECK(err.line() >= 1);
      CHECK(err.column() >= 1);
    }
  }
}
