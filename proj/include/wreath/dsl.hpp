#pragma once

#include "wreath/system.hpp"

namespace wreath {

class ParseError : public Error {
public:
  ParseError(int line, int column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

// File format (.wrs), line oriented, '#' starts a comment:
//
//   degree <int>                     first non-comment line
//   gen <name> = [perm] [w, ..., w]  exactly d section words; perm in
//                                    cycle notation, omitted = identity
//   rel <word>                       informational relator
//
// word := "1" | factor ("*" factor)*        ("." accepted as synonym)
// factor := name ["^" signed-int]
// names match [A-Za-z][A-Za-z0-9_]*; "1" denotes the empty word.

RecursionSystem parse_system(std::string_view text);

/// Canonical form: degree line, generators in definition order, cycles
/// smallest-element first, sections '*'-joined with run-length exponents,
/// '1' for the empty word, relators last. parse(serialize(s)) == s.
std::string serialize_system(const RecursionSystem& sys);

/// Parsed source plus its system; diagnostics surface as ParseError.
struct SystemDocument {
  std::string source;
  RecursionSystem system;
};

SystemDocument parse_document(std::string text);

/// Word over the generators of an existing system, same grammar as in the
/// file format.
GroupWord parse_word(std::string_view text, const RecursionSystem& sys);

std::string format_word(const RecursionSystem& sys, const GroupWord& w);

} // namespace wreath
