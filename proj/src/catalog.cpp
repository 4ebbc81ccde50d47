#include "wreath/catalog.hpp"

#include <map>

#include "wreath/dsl.hpp"

namespace wreath {

namespace {

struct RawEntry {
  const char* name;
  const char* notes;
  const char* source;
};

// Sources are kept in canonical .wrs form; `catalog <name>` dumps them
// after a parse/serialize round trip.
const RawEntry kRawEntries[] = {
    {"adding_machine_2",
     "binary odometer g = (0 1)[1, g]; acts as a 2^n-cycle on every level",
     "degree 2\n"
     "gen g = (0 1) [1, g]\n"},

    {"adding_machine_3",
     "ternary odometer; acts as a 3^n-cycle on every level",
     "degree 3\n"
     "gen g = (0 1 2) [1, 1, g]\n"},

    {"adding_machine_4",
     "quaternary odometer; acts as a 4^n-cycle on every level",
     "degree 4\n"
     "gen g = (0 1 2 3) [1, 1, 1, g]\n"},

    {"basilica",
     "iterated monodromy group of z^2 - 1 (the Basilica group)",
     "degree 2\n"
     "gen a = (0 1) [b, 1]\n"
     "gen b = [a, 1]\n"},

    {"chebyshev_2",
     "monodromy generators of the degree-2 Chebyshev polynomial; the group "
     "is infinite dihedral",
     "degree 2\n"
     "gen a = (0 1) [1, 1]\n"
     "gen b = [b, a]\n"},

    {"chebyshev_3",
     "monodromy generators of the degree-3 Chebyshev polynomial; the group "
     "is infinite dihedral",
     "degree 3\n"
     "gen a = (0 1) [1, 1, a]\n"
     "gen b = (1 2) [b, 1, 1]\n"},

    {"chebyshev_4",
     "monodromy generators of the degree-4 Chebyshev polynomial; the group "
     "is infinite dihedral",
     "degree 4\n"
     "gen a = (0 1)(2 3) [1, 1, 1, 1]\n"
     "gen b = (1 2) [b, 1, 1, a]\n"},

    {"chebyshev2_C2",
     "iterated monodromy group of 2z^2 - 1, one of the four quadratic maps "
     "with three post-critical points",
     "degree 2\n"
     "gen a = (0 1) [1, 1]\n"
     "gen b = [b, a]\n"},

    {"rational_R",
     "iterated monodromy group of ((z-1)/(z+1))^2 with the relabeling "
     "element g = [g*a, g]; ap, bp are the conjugated generators "
     "g*(a*b)*g^-1 and g*a*g^-1",
     "degree 2\n"
     "gen a = (0 1) [b, 1]\n"
     "gen b = [a, b^-1*a^-1]\n"
     "gen g = [g*a, g]\n"
     "gen ap = (0 1) [1, 1]\n"
     "gen bp = (0 1) [ap, bp^-1]\n"},

    {"rational_R_primed",
     "the nicer generating pair of the iterated monodromy group of "
     "((z-1)/(z+1))^2",
     "degree 2\n"
     "gen a = (0 1) [1, 1]\n"
     "gen b = (0 1) [a, b^-1]\n"},

    {"rational_F",
     "iterated monodromy group of 1 - 1/z^2, one of the four quadratic maps "
     "with three post-critical points",
     "degree 2\n"
     "gen a = (0 1) [1, a^-1*b^-1]\n"
     "gen b = [a, 1]\n"},

    {"hanoi",
     "Hanoi Towers group on three rods; a, b, c are single disk moves",
     "degree 3\n"
     "gen a = (1 2) [a, 1, 1]\n"
     "gen b = (0 1) [1, 1, b]\n"
     "gen c = (0 2) [1, c, 1]\n"},

    {"sierpinski_H",
     "iterated monodromy group of z^2 - 16/(27z), whose Julia set is a "
     "Sierpinski gasket; g = (1 2)[h, h, h] with h = [g, g, g] conjugates "
     "a, c, b onto the Hanoi generators ap, bp, cp",
     "degree 3\n"
     "gen a = (1 2) [a, 1, 1]\n"
     "gen b = (0 1) [1, 1, c]\n"
     "gen c = (0 2) [1, b, 1]\n"
     "gen g = (1 2) [h, h, h]\n"
     "gen h = [g, g, g]\n"
     "gen ap = (1 2) [ap, 1, 1]\n"
     "gen bp = (0 1) [1, 1, bp]\n"
     "gen cp = (0 2) [1, cp, 1]\n"},

    {"wittner",
     "iterated monodromy group of the quadratic rational map with critical "
     "orbits of periods 4 and 3 (Wittner's non-mating example); seven loop "
     "generators tied by one circular relation",
     "degree 2\n"
     "gen a0 = [a3, 1]\n"
     "gen a1 = (0 1) [b2*a0, b2^-1]\n"
     "gen a2 = [1, a1]\n"
     "gen a3 = [1, a2]\n"
     "gen b0 = [b2, 1]\n"
     "gen b1 = (0 1) [a3^-1, b0*a3]\n"
     "gen b2 = [1, b1]\n"
     "rel b2*a0*a2*b1*a1*b0*a3\n"},
};

const std::map<std::string, CatalogEntry>& registry() {
  static const std::map<std::string, CatalogEntry> entries = [] {
    std::map<std::string, CatalogEntry> out;
    for (const RawEntry& raw : kRawEntries) {
      RecursionSystem sys = parse_system(raw.source);
      out.emplace(raw.name, CatalogEntry{raw.name, sys.degree(), std::move(sys),
                                         raw.notes});
    }
    return out;
  }();
  return entries;
}

} // namespace

const CatalogEntry& catalog_get(std::string_view name) {
  const auto& entries = registry();
  auto it = entries.find(std::string(name));
  if (it == entries.end())
    throw Error("unknown catalog entry '" + std::string(name) + "'");
  return it->second;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& [name, entry] : registry())
    names.push_back(name);
  return names;
}

} // namespace wreath
