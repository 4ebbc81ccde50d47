#include "wreath/system.hpp"

#include <cctype>

namespace wreath {

bool valid_symbol_name(std::string_view name) {
  if (name.empty())
    return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0])))
    return false;
  for (char c : name.substr(1))
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
      return false;
  return true;
}

RecursionSystem::RecursionSystem(Alphabet alphabet, std::vector<GeneratorDef> defs,
                                 std::vector<GroupWord> relators)
    : alphabet_(alphabet), defs_(std::move(defs)), relators_(std::move(relators)) {
  const std::uint32_t d = alphabet_.degree();
  for (SymbolId s = 0; s < defs_.size(); ++s) {
    const GeneratorDef& g = defs_[s];
    if (!valid_symbol_name(g.name))
      throw Error("invalid generator name '" + g.name + "'");
    if (!index_.emplace(g.name, s).second)
      throw Error("duplicate generator '" + g.name + "'");
    if (g.root.degree() != d)
      throw Error("generator '" + g.name + "' has root permutation of degree " +
                  std::to_string(g.root.degree()) + ", expected " + std::to_string(d));
    if (g.sections.size() != d)
      throw Error("generator '" + g.name + "' has " + std::to_string(g.sections.size()) +
                  " sections, expected " + std::to_string(d));
  }
  for (const GeneratorDef& g : defs_)
    for (const GroupWord& s : g.sections)
      check_word(s, "section of '" + g.name + "'");
  for (const GroupWord& r : relators_)
    check_word(r, "relator");
}

void RecursionSystem::check_word(const GroupWord& w, const std::string& where) const {
  for (const Factor& f : w.factors())
    if (f.symbol >= defs_.size())
      throw Error("undefined symbol id " + std::to_string(f.symbol) + " in " + where);
}

const GeneratorDef& RecursionSystem::def(SymbolId s) const {
  if (s >= defs_.size())
    throw Error("symbol id " + std::to_string(s) + " out of range");
  return defs_[s];
}

std::optional<SymbolId> RecursionSystem::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

SymbolId RecursionSystem::require(std::string_view name) const {
  auto found = find(name);
  if (!found)
    throw Error("undefined symbol '" + std::string(name) + "'");
  return *found;
}

bool RecursionSystem::operator==(const RecursionSystem& other) const {
  if (alphabet_ != other.alphabet_ || defs_.size() != other.defs_.size() ||
      relators_ != other.relators_)
    return false;
  for (std::size_t i = 0; i < defs_.size(); ++i) {
    if (defs_[i].name != other.defs_[i].name || defs_[i].root != other.defs_[i].root ||
        defs_[i].sections != other.defs_[i].sections)
      return false;
  }
  return true;
}

SymbolId SystemBuilder::declare(std::string name) {
  if (!valid_symbol_name(name))
    throw Error("invalid generator name '" + name + "'");
  if (index_.count(name))
    throw Error("duplicate generator '" + name + "'");
  SymbolId s = static_cast<SymbolId>(names_.size());
  index_.emplace(name, s);
  names_.push_back(std::move(name));
  roots_.emplace_back();
  sections_.emplace_back();
  return s;
}

std::optional<SymbolId> SystemBuilder::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

void SystemBuilder::define(SymbolId s, Permutation root, std::vector<GroupWord> sections) {
  if (s >= names_.size())
    throw Error("define on undeclared symbol id");
  if (roots_[s].has_value())
    throw Error("generator '" + names_[s] + "' defined twice");
  roots_[s] = std::move(root);
  sections_[s] = std::move(sections);
}

void SystemBuilder::add_relator(GroupWord w) { relators_.push_back(std::move(w)); }

RecursionSystem SystemBuilder::build() && {
  std::vector<GeneratorDef> defs;
  defs.reserve(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!roots_[i].has_value())
      throw Error("generator '" + names_[i] + "' declared but never defined");
    defs.push_back(GeneratorDef{std::move(names_[i]), std::move(*roots_[i]),
                                std::move(sections_[i])});
  }
  return RecursionSystem(alphabet_, std::move(defs), std::move(relators_));
}

} // namespace wreath
