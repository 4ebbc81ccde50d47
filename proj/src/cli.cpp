#include "wreath/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "wreath/analysis.hpp"
#include "wreath/catalog.hpp"
#include "wreath/dsl.hpp"

namespace wreath::cli {

namespace {

struct SystemSource {
  std::string file;
  std::string catalog;

  RecursionSystem load() const {
    if (!file.empty() && !catalog.empty())
      throw Error("give either a system file or --catalog, not both");
    if (!catalog.empty())
      return catalog_get(catalog).system;
    if (file.empty())
      throw Error("no system given; use --system FILE or --catalog NAME");
    std::ifstream in(file);
    if (!in)
      throw Error("cannot open system file '" + file + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_system(text.str());
  }
};

void add_system_options(CLI::App* sub, SystemSource& source) {
  sub->add_option("-s,--system", source.file, "system file (.wrs)");
  sub->add_option("-c,--catalog", source.catalog, "built-in system name");
}

std::uint64_t resolve_budget(std::optional<std::uint64_t> flag_value) {
  if (flag_value)
    return *flag_value;
  if (const char* env = std::getenv("WREATH_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0)
      throw Error("WREATH_BUDGET must be a positive integer");
    return v;
  }
  return kDefaultWorkBudget;
}

std::string quote_vertex(const VertexWord& v) { return "\"" + v.to_digits() + "\""; }

std::string decomposition_line(const RecursionSystem& sys,
                               const WreathDecomposition& dec) {
  std::string out;
  const std::string cycles = dec.root.to_cycles();
  if (!cycles.empty())
    out += cycles + " ";
  out += "[";
  for (std::size_t eps = 0; eps < dec.sections.size(); ++eps) {
    if (eps)
      out += ", ";
    out += format_word(sys, dec.sections[eps]);
  }
  out += "]";
  return out;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, comma - start));
    start = comma + 1;
  }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"computations with self-similar groups given by wreath recursions"};
  app.require_subcommand(0, 1);

  // Composition convention used everywhere: in u = g*h the factor g acts
  // first. Echoed here so scripted output is unambiguous.
  app.footer("Words: factors joined by '*' or '.', exponents with '^', '1' is the\n"
             "identity; in g*h the factor g acts first. Vertex words are digit\n"
             "strings, leftmost letter nearest the root.");

  SystemSource source;
  std::string word_text, second_text, vertex_text;
  std::string from_text, to_text, gens_text, curves_text, entry_name;
  std::vector<std::string> subst_texts;
  std::uint32_t level = 0;
  std::uint32_t iters = 1;
  std::uint32_t start_letter = 0;
  std::optional<std::uint64_t> budget_flag;
  ProveBudget prove_budget;
  bool want_cycles = false, want_order = false, want_prove = false;

  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", budget_flag,
                    "work-unit cap for whole-level computations "
                    "(default 1e8, or WREATH_BUDGET)");
  };

  CLI::App* parse_cmd = app.add_subcommand("parse", "validate a system and print it in canonical form");
  add_system_options(parse_cmd, source);

  CLI::App* act_cmd = app.add_subcommand("act", "image of a vertex word");
  add_system_options(act_cmd, source);
  act_cmd->add_option("-g,--word", word_text, "group word")->required();
  act_cmd->add_option("-w,--vertex", vertex_text, "vertex word (digits)")->required();

  CLI::App* expand_cmd = app.add_subcommand("expand", "wreath recursion of a word");
  add_system_options(expand_cmd, source);
  expand_cmd->add_option("-g,--word", word_text, "group word")->required();

  CLI::App* section_cmd = app.add_subcommand("section", "renormalization at a vertex");
  add_system_options(section_cmd, source);
  section_cmd->add_option("-g,--word", word_text, "group word")->required();
  section_cmd->add_option("-v,--vertex", vertex_text, "vertex word (digits)")->required();

  CLI::App* perm_cmd = app.add_subcommand("perm", "permutation induced on a level");
  add_system_options(perm_cmd, source);
  perm_cmd->add_option("-g,--word", word_text, "group word")->required();
  perm_cmd->add_option("-n,--level", level, "tree level")->required();
  CLI::Option* cyc_opt = perm_cmd->add_flag("--cycles", want_cycles, "print the cycle-length multiset");
  perm_cmd->add_flag("--order", want_order, "print the order")->excludes(cyc_opt);
  add_budget(perm_cmd);

  CLI::App* prove_cmd = app.add_subcommand("prove-id", "identity certificate or witness");
  add_system_options(prove_cmd, source);
  prove_cmd->add_option("-g,--word", word_text, "group word")->required();
  prove_cmd->add_option("--max-set", prove_budget.max_members, "closure size budget");
  prove_cmd->add_option("--max-len", prove_budget.max_word_length, "section length budget");

  CLI::App* equal_cmd = app.add_subcommand("equal", "compare two words");
  equal_cmd->set_help_flag("--help", "print help");
  add_system_options(equal_cmd, source);
  equal_cmd->add_option("-g,--lhs", word_text, "left word")->required();
  equal_cmd->add_option("-h,--rhs", second_text, "right word")->required();
  level = 8;
  CLI::Option* level_opt = equal_cmd->add_option("--level", level, "compare up to this level (default 8)");
  equal_cmd->add_flag("--prove", want_prove, "attempt an exact proof instead")->excludes(level_opt);
  equal_cmd->add_option("--max-set", prove_budget.max_members, "closure size budget");
  equal_cmd->add_option("--max-len", prove_budget.max_word_length, "section length budget");

  CLI::App* odo_cmd = app.add_subcommand("odometer", "single-cycle check per level");
  add_system_options(odo_cmd, source);
  odo_cmd->add_option("-g,--word", word_text, "group word")->required();
  odo_cmd->add_option("-n,--levels", level, "check levels 1..n")->required();
  add_budget(odo_cmd);

  CLI::App* lift_cmd = app.add_subcommand("lift", "iterated cycle-section lift");
  add_system_options(lift_cmd, source);
  lift_cmd->add_option("-g,--word", word_text, "group word")->required();
  lift_cmd->add_option("--iters", iters, "number of lifts (default 1)");
  lift_cmd->add_option("--start", start_letter, "starting letter (default 0)");

  CLI::App* exp_cmd = app.add_subcommand("exponents", "signed exponent sums");
  add_system_options(exp_cmd, source);
  exp_cmd->add_option("-g,--word", word_text, "group word")->required();
  exp_cmd->add_option("--subst", subst_texts, "substitution NAME=WORD, repeatable");

  CLI::App* sch_cmd = app.add_subcommand("schreier", "shortest word between two vertices");
  add_system_options(sch_cmd, source);
  sch_cmd->add_option("--gens", gens_text, "comma-separated generator words")->required();
  sch_cmd->add_option("--from", from_text, "source vertex word")->required();
  sch_cmd->add_option("--to", to_text, "target vertex word")->required();
  add_budget(sch_cmd);

  CLI::App* levy_cmd = app.add_subcommand("levy", "algebraic Levy-cycle necessary condition");
  add_system_options(levy_cmd, source);
  levy_cmd->add_option("--curves", curves_text, "comma-separated curve words")->required();
  levy_cmd->add_option("--level", level, "comparison level")->required();

  CLI::App* cat_cmd = app.add_subcommand("catalog", "list built-in systems or dump one");
  cat_cmd->add_option("name", entry_name, "entry to dump");

  std::vector<const char*> argv;
  argv.push_back("wreath");
  for (const std::string& a : args)
    argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    const CLI::App* focus = &app;
    while (!focus->get_subcommands().empty())
      focus = focus->get_subcommands().front();
    out << focus->help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.get_subcommands().empty()) {
      out << app.help();
      return 0;
    }
    CLI::App* sub = app.get_subcommands().front();

    if (sub == cat_cmd) {
      if (entry_name.empty()) {
        for (const std::string& name : catalog_names())
          out << name << "\n";
      } else {
        const CatalogEntry& entry = catalog_get(entry_name);
        out << "# " << entry.notes << "\n" << serialize_system(entry.system);
      }
      return 0;
    }

    RecursionSystem sys = source.load();

    if (sub == parse_cmd) {
      out << serialize_system(sys);
      return 0;
    }
    if (sub == act_cmd) {
      const GroupWord u = parse_word(word_text, sys);
      const VertexWord w = VertexWord::from_digits(vertex_text, sys.degree());
      out << act(sys, u, w).to_digits() << "\n";
      return 0;
    }
    if (sub == expand_cmd) {
      const GroupWord u = parse_word(word_text, sys);
      out << decomposition_line(sys, expand(sys, u)) << "\n";
      return 0;
    }
    if (sub == section_cmd) {
      const GroupWord u = parse_word(word_text, sys);
      const VertexWord v = VertexWord::from_digits(vertex_text, sys.degree());
      out << format_word(sys, section(sys, u, v)) << "\n";
      return 0;
    }
    if (sub == perm_cmd) {
      const GroupWord u = parse_word(word_text, sys);
      const LevelPermutation p =
          level_permutation(sys, u, level, resolve_budget(budget_flag));
      if (want_order) {
        out << order(p) << "\n";
      } else if (want_cycles) {
        out << "{";
        const auto cycles = cycle_structure(p);
        for (std::size_t i = 0; i < cycles.size(); ++i)
          out << (i ? "," : "") << cycles[i];
        out << "}\n";
      } else {
        for (std::size_t i = 0; i < p.images.size(); ++i)
          out << (i ? " " : "") << p.images[i];
        out << "\n";
      }
      return 0;
    }
    if (sub == prove_cmd) {
      const GroupWord u = parse_word(word_text, sys);
      const ProveResult result = prove_identity(sys, u, prove_budget);
      if (const auto* cert = std::get_if<IdentityCertificate>(&result))
        out << "certificate " << cert->members.size() << "\n";
      else if (const auto* wit = std::get_if<NonIdentityWitness>(&result))
        out << "witness " << quote_vertex(wit->vertex) << " " << wit->letter << "\n";
      else
        out << "inconclusive\n";
      return 0;
    }
    if (sub == equal_cmd) {
      const GroupWord u = parse_word(word_text, sys);
      const GroupWord v = parse_word(second_text, sys);
      if (want_prove) {
        const ProveResult result = prove_equal(sys, u, v, prove_budget);
        if (const auto* cert = std::get_if<IdentityCertificate>(&result))
          out << "proved equal (certificate " << cert->members.size() << ")\n";
        else if (const auto* wit = std::get_if<NonIdentityWitness>(&result))
          out << "not equal (witness " << quote_vertex(wit->vertex) << " "
              << wit->letter << ")\n";
        else
          out << "inconclusive\n";
      } else {
        out << (equal_up_to_level(sys, u, v, level) ? "equal up to level "
                                                    : "not equal within level ")
            << level << "\n";
      }
      return 0;
    }
    if (sub == odo_cmd) {
      const GroupWord u = parse_word(word_text, sys);
      const OdometerReport report =
          odometer_check(sys, u, level, resolve_budget(budget_flag));
      for (std::size_t i = 0; i < report.per_level.size(); ++i)
        out << "level " << (i + 1) << ": "
            << (report.per_level[i] ? "cyclic" : "not cyclic") << "\n";
      out << "overall: " << (report.all ? "odometer" : "not odometer")
          << " up to level " << level << "\n";
      return 0;
    }
    if (sub == lift_cmd) {
      const GroupWord u = parse_word(word_text, sys);
      out << format_word(sys, iterate_lift(sys, u, start_letter, iters)) << "\n";
      return 0;
    }
    if (sub == exp_cmd) {
      const GroupWord u = parse_word(word_text, sys);
      std::map<SymbolId, GroupWord> substitutions;
      for (const std::string& text : subst_texts) {
        const std::size_t eq = text.find('=');
        if (eq == std::string::npos)
          throw Error("substitution must look like NAME=WORD, got '" + text + "'");
        const SymbolId sym = sys.require(text.substr(0, eq));
        if (!substitutions.emplace(sym, parse_word(text.substr(eq + 1), sys)).second)
          throw Error("duplicate substitution for '" + text.substr(0, eq) + "'");
      }
      const ExponentVector ev = exponent_vector(sys, u, substitutions);
      for (const auto& [sym, count] : ev.counts)
        out << sys.name(sym) << " " << count << "\n";
      return 0;
    }
    if (sub == sch_cmd) {
      std::vector<GroupWord> gens;
      for (const std::string& text : split_list(gens_text))
        gens.push_back(parse_word(text, sys));
      const VertexWord from = VertexWord::from_digits(from_text, sys.degree());
      const VertexWord to = VertexWord::from_digits(to_text, sys.degree());
      const SchreierResult result =
          schreier_path(sys, gens, from, to, resolve_budget(budget_flag));
      if (const auto* path = std::get_if<GroupWord>(&result))
        out << format_word(sys, *path) << "\n";
      else
        out << "not reachable\n";
      return 0;
    }
    if (sub == levy_cmd) {
      std::vector<GroupWord> curves;
      for (const std::string& text : split_list(curves_text))
        curves.push_back(parse_word(text, sys));
      const LevyReport report = levy_necessary_condition(sys, curves, level);
      for (std::size_t k = 0; k < report.per_curve.size(); ++k) {
        const LevyCurveReport& cr = report.per_curve[k];
        if (cr.satisfied)
          out << "k=" << k << ": fixed letter " << *cr.fixed_letter
              << " matches previous curve\n";
        else
          out << "k=" << k << ": no fixed letter with matching section\n";
      }
      if (report.all)
        out << "verdict: necessary condition holds at level " << level
            << " (not sufficient)\n";
      else
        out << "verdict: no Levy cycle of this multicurve representable by "
               "these exact words\n";
      return 0;
    }
    err << "error: unhandled subcommand\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

} // namespace wreath::cli
