#include "wreath/dsl.hpp"

#include <cctype>
#include <sstream>

namespace wreath {

namespace {

constexpr std::int64_t kMaxExponent = 1 << 20;

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  int line;
  int base_column; // column of text[0] in the original line, 1-based

  int column() const { return base_column + static_cast<int>(pos); }

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek())))
      ++pos;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(line, column(), message);
  }
};

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::string read_name(Cursor& c) {
  std::size_t start = c.pos;
  while (!c.done() && is_name_char(c.peek()))
    ++c.pos;
  return std::string(c.text.substr(start, c.pos - start));
}

std::int64_t read_int(Cursor& c) {
  bool negative = false;
  if (!c.done() && (c.peek() == '-' || c.peek() == '+')) {
    negative = c.peek() == '-';
    ++c.pos;
  }
  if (c.done() || !std::isdigit(static_cast<unsigned char>(c.peek())))
    c.fail("expected integer");
  std::int64_t v = 0;
  while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
    v = v * 10 + (c.peek() - '0');
    if (v > kMaxExponent)
      c.fail("integer out of range");
    ++c.pos;
  }
  return negative ? -v : v;
}

// Generic word parser against a name resolver; powers the file format and
// the CLI word arguments alike.
template <typename Resolve>
GroupWord parse_word_impl(Cursor& c, const Resolve& resolve) {
  GroupWord word;
  bool expect_factor = true;
  while (true) {
    c.skip_ws();
    if (c.done()) {
      if (expect_factor)
        c.fail("expected word factor");
      return word;
    }
    const char ch = c.peek();
    if (!expect_factor) {
      if (ch == '*' || ch == '.') {
        ++c.pos;
        expect_factor = true;
        continue;
      }
      return word; // caller checks what follows
    }
    if (ch == '1') {
      ++c.pos;
      if (!c.done() && c.peek() == '^') { // exponent on identity is inert
        ++c.pos;
        read_int(c);
      }
      expect_factor = false;
      continue;
    }
    if (!is_name_start(ch))
      c.fail(std::string("expected generator name, got '") + ch + "'");
    const int name_col = c.column();
    const std::string name = read_name(c);
    std::int64_t exponent = 1;
    if (!c.done() && c.peek() == '^') {
      ++c.pos;
      exponent = read_int(c);
    }
    const SymbolId sym = resolve(name, c.line, name_col);
    word.append(GroupWord::generator(sym).pow(exponent));
    expect_factor = false;
  }
}

struct PendingWord {
  std::string text;
  int line;
  int column;
};

struct PendingGen {
  std::string name;
  int line;
  int column;
  std::string cycles;
  int cycles_column;
  std::vector<PendingWord> sections;
};

// Splits the bracketed section list of a gen line into word texts.
std::vector<PendingWord> split_sections(Cursor& c) {
  c.skip_ws();
  if (c.done() || c.peek() != '[')
    c.fail("expected '[' starting the section list");
  ++c.pos;
  std::vector<PendingWord> out;
  std::size_t item_start = c.pos;
  while (true) {
    if (c.done())
      c.fail("unterminated section list");
    const char ch = c.peek();
    if (ch == ',' || ch == ']') {
      std::string item(c.text.substr(item_start, c.pos - item_start));
      out.push_back(PendingWord{std::move(item), c.line,
                                c.base_column + static_cast<int>(item_start)});
      ++c.pos;
      if (ch == ']') {
        c.skip_ws();
        if (!c.done())
          c.fail("unexpected trailing text after section list");
        return out;
      }
      item_start = c.pos;
    } else {
      ++c.pos;
    }
  }
}

GroupWord parse_pending_word(const PendingWord& pending, const RecursionSystem* sys,
                             const SystemBuilder* builder) {
  Cursor c{pending.text, 0, pending.line, pending.column};
  auto resolve = [&](const std::string& name, int line, int column) -> SymbolId {
    std::optional<SymbolId> found =
        sys ? sys->find(name) : builder->find(name);
    if (!found)
      throw ParseError(line, column, "undefined symbol '" + name + "'");
    return *found;
  };
  GroupWord w = parse_word_impl(c, resolve);
  c.skip_ws();
  if (!c.done())
    c.fail(std::string("unexpected character '") + c.peek() + "' in word");
  return w;
}

} // namespace

RecursionSystem parse_system(std::string_view text) {
  std::optional<std::uint32_t> degree;
  int degree_line = 0;
  std::vector<PendingGen> gens;
  std::vector<PendingWord> relators;

  int line_no = 0;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    const std::size_t nl = text.find('\n', line_start);
    std::string_view raw = text.substr(
        line_start, nl == std::string_view::npos ? text.size() - line_start
                                                 : nl - line_start);
    ++line_no;
    if (!raw.empty() && raw.back() == '\r')
      raw.remove_suffix(1);
    const std::size_t hash = raw.find('#');
    if (hash != std::string_view::npos)
      raw = raw.substr(0, hash);

    Cursor c{raw, 0, line_no, 1};
    c.skip_ws();
    if (!c.done()) {
      if (!is_name_start(c.peek()))
        c.fail(std::string("expected directive, got '") + c.peek() + "'");
      const int kw_col = c.column();
      const std::string keyword = read_name(c);
      if (keyword == "degree") {
        if (degree)
          throw ParseError(line_no, kw_col, "duplicate degree line");
        if (!gens.empty() || !relators.empty())
          throw ParseError(line_no, kw_col, "degree must come first");
        c.skip_ws();
        const std::int64_t d = read_int(c);
        if (d < 2 || d > static_cast<std::int64_t>(kMaxDegree))
          c.fail("degree must be between 2 and " + std::to_string(kMaxDegree));
        c.skip_ws();
        if (!c.done())
          c.fail("unexpected trailing text after degree");
        degree = static_cast<std::uint32_t>(d);
        degree_line = line_no;
      } else if (keyword == "gen") {
        if (!degree)
          throw ParseError(line_no, kw_col, "degree line must come before generators");
        PendingGen g;
        c.skip_ws();
        if (c.done() || !is_name_start(c.peek()))
          c.fail("expected generator name after 'gen'");
        g.line = line_no;
        g.column = c.column();
        g.name = read_name(c);
        c.skip_ws();
        if (c.done() || c.peek() != '=')
          c.fail("expected '=' after generator name");
        ++c.pos;
        c.skip_ws();
        g.cycles_column = c.column();
        std::size_t cyc_start = c.pos;
        while (!c.done() && c.peek() != '[')
          ++c.pos;
        g.cycles = std::string(c.text.substr(cyc_start, c.pos - cyc_start));
        g.sections = split_sections(c);
        gens.push_back(std::move(g));
      } else if (keyword == "rel") {
        if (!degree)
          throw ParseError(line_no, kw_col, "degree line must come before relators");
        c.skip_ws();
        relators.push_back(PendingWord{std::string(c.text.substr(c.pos)), line_no,
                                       c.column()});
      } else {
        throw ParseError(line_no, kw_col, "unknown directive '" + keyword + "'");
      }
    }
    if (nl == std::string_view::npos)
      break;
    line_start = nl + 1;
  }

  if (!degree)
    throw ParseError(line_no, 1, "degree line missing");
  (void)degree_line;

  SystemBuilder builder(*degree);
  for (const PendingGen& g : gens) {
    if (g.name == "1")
      throw ParseError(g.line, g.column, "'1' is reserved for the identity");
    if (!valid_symbol_name(g.name))
      throw ParseError(g.line, g.column, "invalid generator name '" + g.name + "'");
    if (builder.find(g.name))
      throw ParseError(g.line, g.column, "duplicate generator '" + g.name + "'");
    builder.declare(g.name);
  }

  for (const PendingGen& g : gens) {
    if (g.sections.size() != *degree)
      throw ParseError(g.line, g.column,
                       "expected " + std::to_string(*degree) + " sections, got " +
                           std::to_string(g.sections.size()));
    Permutation root = Permutation::identity(*degree);
    try {
      root = Permutation::from_cycles(g.cycles, *degree);
    } catch (const Error& e) {
      throw ParseError(g.line, g.cycles_column, e.what());
    }
    std::vector<GroupWord> sections;
    sections.reserve(*degree);
    for (const PendingWord& s : g.sections)
      sections.push_back(parse_pending_word(s, nullptr, &builder));
    builder.define(*builder.find(g.name), std::move(root), std::move(sections));
  }
  for (const PendingWord& r : relators)
    builder.add_relator(parse_pending_word(r, nullptr, &builder));

  return std::move(builder).build();
}

SystemDocument parse_document(std::string text) {
  RecursionSystem sys = parse_system(text);
  return SystemDocument{std::move(text), std::move(sys)};
}

GroupWord parse_word(std::string_view text, const RecursionSystem& sys) {
  PendingWord pending{std::string(text), 1, 1};
  return parse_pending_word(pending, &sys, nullptr);
}

std::string format_word(const RecursionSystem& sys, const GroupWord& w) {
  if (w.empty())
    return "1";
  std::string out;
  const auto& factors = w.factors();
  std::size_t i = 0;
  while (i < factors.size()) {
    std::size_t j = i;
    while (j < factors.size() && factors[j] == factors[i])
      ++j;
    const std::int64_t run = static_cast<std::int64_t>(j - i);
    const std::int64_t exponent = factors[i].inverted ? -run : run;
    if (!out.empty())
      out.push_back('*');
    out += sys.name(factors[i].symbol);
    if (exponent != 1)
      out += "^" + std::to_string(exponent);
    i = j;
  }
  return out;
}

std::string serialize_system(const RecursionSystem& sys) {
  std::ostringstream out;
  out << "degree " << sys.degree() << "\n";
  for (const GeneratorDef& g : sys.defs()) {
    out << "gen " << g.name << " = ";
    const std::string cycles = g.root.to_cycles();
    if (!cycles.empty())
      out << cycles << " ";
    out << "[";
    for (std::uint32_t eps = 0; eps < sys.degree(); ++eps) {
      if (eps)
        out << ", ";
      out << format_word(sys, g.sections[eps]);
    }
    out << "]\n";
  }
  for (const GroupWord& r : sys.relators())
    out << "rel " << format_word(sys, r) << "\n";
  return out.str();
}

} // namespace wreath
