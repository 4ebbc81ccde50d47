#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "wreath/core.hpp"
#include "wreath/word.hpp"

namespace wreath {

/// One generator of a recursion system: a name bound to a root permutation
/// and d section words.
struct GeneratorDef {
  std::string name;
  Permutation root;
  std::vector<GroupWord> sections;
};

/// A named system of wreath recursions over a common alphabet. Section
/// words may reference any generator of the system, including the one
/// being defined and ones defined later. Immutable after construction.
class RecursionSystem {
public:
  RecursionSystem(Alphabet alphabet, std::vector<GeneratorDef> defs,
                  std::vector<GroupWord> relators = {});

  std::uint32_t degree() const { return alphabet_.degree(); }
  const Alphabet& alphabet() const { return alphabet_; }

  std::size_t generator_count() const { return defs_.size(); }
  const GeneratorDef& def(SymbolId s) const;
  const std::string& name(SymbolId s) const { return def(s).name; }
  const std::vector<GeneratorDef>& defs() const { return defs_; }

  std::optional<SymbolId> find(std::string_view name) const;
  SymbolId require(std::string_view name) const;

  const std::vector<GroupWord>& relators() const { return relators_; }

  /// Structural equality: same degree, same generators in the same order
  /// with identical recursions, same relators.
  bool operator==(const RecursionSystem& other) const;

private:
  void check_word(const GroupWord& w, const std::string& where) const;

  Alphabet alphabet_;
  std::vector<GeneratorDef> defs_;
  std::vector<GroupWord> relators_;
  std::unordered_map<std::string, SymbolId> index_;
};

/// Two-phase construction so recursive and forward references resolve:
/// declare every name first, then attach definitions.
class SystemBuilder {
public:
  explicit SystemBuilder(std::uint32_t degree) : alphabet_(degree) {}

  SymbolId declare(std::string name);
  std::optional<SymbolId> find(std::string_view name) const;

  void define(SymbolId s, Permutation root, std::vector<GroupWord> sections);
  void add_relator(GroupWord w);

  std::uint32_t degree() const { return alphabet_.degree(); }

  RecursionSystem build() &&;

private:
  Alphabet alphabet_;
  std::vector<std::string> names_;
  std::vector<std::optional<Permutation>> roots_;
  std::vector<std::vector<GroupWord>> sections_;
  std::vector<GroupWord> relators_;
  std::unordered_map<std::string, SymbolId> index_;
};

/// Name grammar for generator symbols: [A-Za-z][A-Za-z0-9_]*.
bool valid_symbol_name(std::string_view name);

/// The wreath recursion of an arbitrary element: root permutation plus d
/// freely reduced section words.
struct WreathDecomposition {
  Permutation root;
  std::vector<GroupWord> sections;
};

} // namespace wreath
