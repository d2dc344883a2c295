#include "hk/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hk/automaton.hpp"
#include "hk/cycle_basis.hpp"
#include "hk/digraph.hpp"
#include "hk/errors.hpp"
#include "hk/oracle.hpp"
#include "hk/rewrite.hpp"
#include "hk/word.hpp"

namespace hk::cli {

namespace {

struct Ctx {
  std::ostream& out;
  std::ostream& err;
  int exit_code = 0;

  std::string graph_file = {};
  int cycle_n = 0;
  bool example = false;

  std::string system = "T";
  std::string format = "text";
  std::string order_spec = {};
  std::string out_file = {};
  bool minimize = false;
  bool schema = false;
  int max_len = 0;
  int slack = 2;
  std::uint64_t budget = 1000000;
  std::uint64_t seed = 0;
  std::vector<std::string> words = {};
};

bool records(const Ctx& ctx) { return ctx.format == "records"; }

void kv(Ctx& ctx, const std::string& key, const std::string& value) {
  ctx.out << key << '\t' << value << '\n';
}

Digraph load_graph(const Ctx& ctx) {
  const int sources =
      (ctx.graph_file.empty() ? 0 : 1) + (ctx.cycle_n != 0 ? 1 : 0) +
      (ctx.example ? 1 : 0);
  if (sources != 1) {
    throw ParseError(
        "choose exactly one graph source: --graph FILE, --cycle N or "
        "--example-s4");
  }
  if (!ctx.graph_file.empty()) {
    std::ifstream in(ctx.graph_file);
    if (!in) throw ParseError("cannot read graph file " + ctx.graph_file);
    std::ostringstream text;
    text << in.rdbuf();
    return parse_digraph(text.str());
  }
  if (ctx.cycle_n != 0) return cycle_graph(ctx.cycle_n);
  return example_s4();
}

GenOrder load_order(const Ctx& ctx, int n) {
  if (ctx.order_spec.empty()) return GenOrder::identity(n);
  std::vector<int> perm;
  std::string token;
  std::istringstream in(ctx.order_spec);
  while (std::getline(in, token, ',')) {
    if (token.empty() || token.size() > 2 ||
        token.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("--order expects comma-separated generator indices, "
                       "e.g. 3,1,2");
    }
    perm.push_back(std::stoi(token));
  }
  if (static_cast<int>(perm.size()) != n) {
    throw ParseError("--order must list all generators 1.." +
                     std::to_string(n));
  }
  return GenOrder::from_permutation(perm);
}

RuleSystem load_system(const Ctx& ctx, const Digraph& g,
                       const GenOrder& ord) {
  if (ctx.system == "T") return build_T(g, ord);
  const int n = g.vertex_count();
  if (n < 3 || g != cycle_graph(n)) {
    throw ParseError("--system " + ctx.system +
                     " requires the oriented cycle (use --cycle N)");
  }
  if (!ctx.order_spec.empty()) {
    throw ParseError("cycle systems are tied to the natural generator "
                     "order; drop --order");
  }
  if (ctx.system == "S") return build_S(n);
  return build_Sprime(n);
}

Word load_word(const std::string& text, int n) {
  Word w = parse_word(text);
  for (Letter x : w) {
    if (x < 1 || x > n) {
      throw ParseError("letter " + std::to_string(x) + " in '" + text +
                       "' is outside the alphabet 1.." + std::to_string(n));
    }
  }
  return w;
}

void run_normalize(Ctx& ctx) {
  const Digraph g = load_graph(ctx);
  const GenOrder ord = load_order(ctx, g.vertex_count());
  const RuleSystem sys = load_system(ctx, g, ord);
  const Word input = load_word(ctx.words.at(0), g.vertex_count());
  const Word nf = normal_form(sys, input);
  if (records(ctx)) {
    kv(ctx, "input", to_string(input, g.vertex_count()));
    kv(ctx, "system", ctx.system);
    kv(ctx, "normal-form", to_string(nf, g.vertex_count()));
  } else {
    ctx.out << to_string(nf, g.vertex_count()) << '\n';
  }
}

void run_eq(Ctx& ctx) {
  const Digraph g = load_graph(ctx);
  const Word u = load_word(ctx.words.at(0), g.vertex_count());
  const Word v = load_word(ctx.words.at(1), g.vertex_count());
  const bool equal = equal_in_monoid(g, u, v);
  if (records(ctx)) {
    kv(ctx, "equal", equal ? "true" : "false");
  } else {
    ctx.out << (equal ? "equal" : "not-equal") << '\n';
  }
}

void run_basis(Ctx& ctx) {
  const Digraph g = load_graph(ctx);
  const int n = g.vertex_count();
  if (ctx.schema) {
    const GenOrder ord = load_order(ctx, n);
    ctx.out << schema_text(leading_term_language(g, ord));
    return;
  }
  if (n < 3 || g != cycle_graph(n)) {
    throw ParseError("the explicit rule list exists for oriented cycles "
                     "only; use --schema for general graphs");
  }
  const std::vector<Rule> rules = enumerate_sprime_rules(n);
  if (ctx.format == "json-like") {
    nlohmann::json list = nlohmann::json::array();
    for (const Rule& r : rules) {
      list.push_back({{"lhs", to_string(r.lhs, n)},
                      {"rhs", to_string(r.rhs, n)}});
    }
    ctx.out << list.dump(2) << '\n';
  } else if (ctx.format == "dot-rules") {
    ctx.out << "digraph rules {\n";
    for (const Rule& r : rules) {
      ctx.out << "  \"" << to_string(r.lhs, n) << "\" -> \""
              << to_string(r.rhs, n) << "\";\n";
    }
    ctx.out << "}\n";
  } else if (records(ctx)) {
    kv(ctx, "rules", std::to_string(rules.size()));
    for (std::size_t k = 0; k < rules.size(); ++k) {
      kv(ctx, "rule." + std::to_string(k),
         to_string(rules[k].lhs, n) + " -> " + to_string(rules[k].rhs, n));
    }
  } else {
    for (const Rule& r : rules) {
      ctx.out << to_string(r.lhs, n) << " -> " << to_string(r.rhs, n)
              << '\n';
    }
  }
}

void run_automaton(Ctx& ctx) {
  const Digraph g = load_graph(ctx);
  const GenOrder ord = load_order(ctx, g.vertex_count());
  NormalWordDfa dfa = build_normal_dfa(leading_term_language(g, ord));
  if (ctx.minimize) dfa = dfa.minimized();
  const std::string dot = dfa.to_dot();
  if (ctx.out_file.empty() || ctx.out_file == "-") {
    ctx.out << dot;
  } else {
    std::ofstream file(ctx.out_file);
    if (!file) throw ParseError("cannot write " + ctx.out_file);
    file << dot;
  }
}

void run_growth(Ctx& ctx) {
  const Digraph g = load_graph(ctx);
  const GenOrder ord = load_order(ctx, g.vertex_count());
  const GrowthReport report = growth_report(g, ord, ctx.max_len);
  if (records(ctx)) {
    for (std::size_t l = 0; l < report.counts.size(); ++l) {
      kv(ctx, "count." + std::to_string(l), report.counts[l].to_string());
    }
    switch (report.classification.kind) {
      case Classification::Kind::Finite:
        kv(ctx, "classification", "finite");
        break;
      case Classification::Kind::Polynomial:
        kv(ctx, "classification", "polynomial");
        kv(ctx, "gk", std::to_string(report.classification.gk));
        break;
      case Classification::Kind::Exponential:
        kv(ctx, "classification", "exponential");
        break;
    }
  } else {
    for (std::size_t l = 0; l < report.counts.size(); ++l) {
      ctx.out << l << '\t' << report.counts[l].to_string() << '\n';
    }
    ctx.out << "# classification: " << to_string(report.classification)
            << '\n';
  }
}

void run_classify(Ctx& ctx) {
  const Digraph g = load_graph(ctx);
  const GenOrder ord = load_order(ctx, g.vertex_count());
  const NormalWordDfa dfa = build_normal_dfa(leading_term_language(g, ord));
  const Classification cls = classify_growth(dfa);
  const bool two_cycles = has_two_connected_cycles(g);
  const bool consistent =
      (cls.kind == Classification::Kind::Exponential) == two_cycles;
  if (records(ctx)) {
    switch (cls.kind) {
      case Classification::Kind::Finite:
        kv(ctx, "classification", "finite");
        break;
      case Classification::Kind::Polynomial:
        kv(ctx, "classification", "polynomial");
        kv(ctx, "gk", std::to_string(cls.gk));
        break;
      case Classification::Kind::Exponential:
        kv(ctx, "classification", "exponential");
        break;
    }
    kv(ctx, "two-connected-cycles", two_cycles ? "true" : "false");
    kv(ctx, "criteria-consistent", consistent ? "true" : "false");
  } else {
    ctx.out << to_string(cls) << '\n';
    ctx.out << "two-connected-cycles: " << (two_cycles ? "true" : "false")
            << '\n';
    ctx.out << "criteria-consistent: " << (consistent ? "yes" : "no")
            << '\n';
  }
  if (!consistent) ctx.exit_code = 2;
}

void run_obstructions(Ctx& ctx) {
  const Digraph g = load_graph(ctx);
  const GenOrder ord = load_order(ctx, g.vertex_count());
  const std::vector<Word> words =
      minimal_forbidden_words(g, ord, ctx.max_len, ctx.budget);
  if (records(ctx)) {
    kv(ctx, "obstructions", std::to_string(words.size()));
    for (std::size_t k = 0; k < words.size(); ++k) {
      kv(ctx, "obstruction." + std::to_string(k),
         to_string(words[k], g.vertex_count()));
    }
  } else {
    for (const Word& w : words) {
      ctx.out << to_string(w, g.vertex_count()) << '\n';
    }
  }
}

void run_confluence(Ctx& ctx) {
  const Digraph g = load_graph(ctx);
  const GenOrder ord = load_order(ctx, g.vertex_count());
  const RuleSystem sys = load_system(ctx, g, ord);
  const ConfluenceReport report =
      check_local_confluence(sys, ctx.max_len, ctx.budget);
  if (records(ctx)) {
    kv(ctx, "ok", report.ok ? "true" : "false");
    kv(ctx, "words-checked", std::to_string(report.words_checked));
    for (std::size_t k = 0; k < report.counterexamples.size(); ++k) {
      const auto& ce = report.counterexamples[k];
      std::string line = to_string(ce.word, g.vertex_count()) + " ->";
      for (const Word& f : ce.normal_forms) {
        line += " " + to_string(f, g.vertex_count());
      }
      kv(ctx, "counterexample." + std::to_string(k), line);
    }
  } else if (report.ok) {
    ctx.out << "ok (checked " << report.words_checked << " words)\n";
  } else {
    for (const auto& ce : report.counterexamples) {
      ctx.out << "counterexample: " << to_string(ce.word, g.vertex_count())
              << " reduces to";
      for (const Word& f : ce.normal_forms) {
        ctx.out << ' ' << to_string(f, g.vertex_count());
      }
      ctx.out << '\n';
    }
    ctx.out << "FAILED (checked " << report.words_checked << " words, "
            << report.counterexamples.size() << " counterexamples shown)\n";
  }
  if (!report.ok) ctx.exit_code = 2;
}

void run_oracle_check(Ctx& ctx) {
  const Digraph g = load_graph(ctx);
  const CrosscheckReport report =
      crosscheck(g, ctx.max_len, ctx.slack, ctx.budget);
  if (records(ctx)) {
    kv(ctx, "ok", report.ok ? "true" : "false");
    kv(ctx, "classes", std::to_string(report.classes));
    for (std::size_t k = 0; k < report.violations.size(); ++k) {
      kv(ctx, "violation." + std::to_string(k), report.violations[k]);
    }
  } else if (report.ok) {
    ctx.out << "ok (" << report.classes << " classes)\n";
  } else {
    for (const std::string& v : report.violations) {
      ctx.out << "violation: " << v << '\n';
    }
    ctx.out << "FAILED (" << report.violations.size() << " violations "
            << "shown)\n";
  }
  if (!report.ok) ctx.exit_code = 2;
}

void run_enumerate(Ctx& ctx) {
  const Digraph g = load_graph(ctx);
  const GenOrder ord = load_order(ctx, g.vertex_count());
  const NormalWordDfa dfa = build_normal_dfa(leading_term_language(g, ord));
  const std::vector<Word> words =
      enumerate_normal_words(dfa, ctx.max_len, ctx.budget);
  if (records(ctx)) {
    kv(ctx, "words", std::to_string(words.size()));
    for (std::size_t k = 0; k < words.size(); ++k) {
      kv(ctx, "word." + std::to_string(k),
         to_string(words[k], g.vertex_count()));
    }
  } else {
    for (const Word& w : words) {
      ctx.out << to_string(w, g.vertex_count()) << '\n';
    }
  }
}

void add_graph_source(CLI::App* cmd, Ctx& ctx) {
  auto* graph = cmd->add_option("--graph", ctx.graph_file,
                                "graph file (see README for the format)");
  auto* cycle =
      cmd->add_option("--cycle", ctx.cycle_n, "oriented cycle with N vertices");
  auto* example = cmd->add_flag("--example-s4", ctx.example,
                                "built-in triangle a->b->c->a plus a->d");
  graph->excludes(cycle)->excludes(example);
  cycle->excludes(example);
}

void add_format(CLI::App* cmd, Ctx& ctx,
                std::vector<std::string> choices = {"text", "records"}) {
  cmd->add_option("--format", ctx.format, "output format")
      ->check(CLI::IsMember(choices));
}

void add_order(CLI::App* cmd, Ctx& ctx) {
  cmd->add_option("--order", ctx.order_spec,
                  "generator order as a comma-separated permutation, "
                  "smallest first (default 1,2,...,n)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Ctx ctx{out, err};
  CLI::App app{
      "normal forms, word problem and growth for Hecke-Kiselman monoids "
      "of finite simple oriented digraphs"};
  app.name("hk");
  app.require_subcommand(1);
  app.add_option("--seed", ctx.seed,
                 "seed for randomized exploration (reserved)");

  auto* normalize = app.add_subcommand(
      "normalize", "reduce a word to its normal form");
  add_graph_source(normalize, ctx);
  add_format(normalize, ctx);
  add_order(normalize, ctx);
  normalize->add_option("--system", ctx.system, "rule system")
      ->check(CLI::IsMember({"T", "S", "Sprime"}));
  normalize->add_option("word", ctx.words, "word to reduce")
      ->required()
      ->expected(1);
  normalize->callback([&] { run_normalize(ctx); });

  auto* eq = app.add_subcommand(
      "eq", "decide whether two words represent the same element");
  add_graph_source(eq, ctx);
  add_format(eq, ctx);
  eq->add_option("words", ctx.words, "the two words")
      ->required()
      ->expected(2);
  eq->callback([&] { run_eq(ctx); });

  auto* basis = app.add_subcommand(
      "basis", "export the finite cycle rule list, or the general pattern "
               "schema with --schema");
  add_graph_source(basis, ctx);
  add_format(basis, ctx, {"text", "records", "dot-rules", "json-like"});
  add_order(basis, ctx);
  basis->add_flag("--schema", ctx.schema,
                  "print the forbidden-factor pattern families");
  basis->callback([&] { run_basis(ctx); });

  auto* automaton = app.add_subcommand(
      "automaton", "export the normal-word automaton as DOT");
  add_graph_source(automaton, ctx);
  add_order(automaton, ctx);
  automaton->add_option("--out", ctx.out_file, "output file (default stdout)");
  automaton->add_flag("--minimize", ctx.minimize, "minimize before export");
  automaton->callback([&] { run_automaton(ctx); });

  auto* growth = app.add_subcommand(
      "growth", "count normal words per length and classify the growth");
  add_graph_source(growth, ctx);
  add_order(growth, ctx);
  growth->add_option("--max-len", ctx.max_len, "largest length to count")
      ->required()
      ->check(CLI::NonNegativeNumber);
  growth->add_option("--format", ctx.format, "output format")
      ->check(CLI::IsMember({"table", "text", "records"}));
  growth->callback([&] { run_growth(ctx); });

  auto* classify = app.add_subcommand(
      "classify", "growth class: finite, gk=<int> or exponential");
  add_graph_source(classify, ctx);
  add_format(classify, ctx);
  add_order(classify, ctx);
  classify->callback([&] { run_classify(ctx); });

  auto* obstructions = app.add_subcommand(
      "obstructions", "minimal forbidden words up to a length");
  add_graph_source(obstructions, ctx);
  add_format(obstructions, ctx);
  add_order(obstructions, ctx);
  obstructions->add_option("--max-len", ctx.max_len, "largest length")
      ->required()
      ->check(CLI::NonNegativeNumber);
  obstructions->add_option("--budget", ctx.budget, "search cap");
  obstructions->callback([&] { run_obstructions(ctx); });

  auto* confluence = app.add_subcommand(
      "confluence", "verify local confluence on all words up to a length");
  add_graph_source(confluence, ctx);
  add_format(confluence, ctx);
  add_order(confluence, ctx);
  confluence->add_option("--system", ctx.system, "rule system")
      ->check(CLI::IsMember({"T", "S", "Sprime"}));
  confluence->add_option("--max-len", ctx.max_len, "largest word length")
      ->required()
      ->check(CLI::PositiveNumber);
  confluence->add_option("--budget", ctx.budget, "word cap")
      ->default_val(std::uint64_t{80000000});
  confluence->callback([&] { run_confluence(ctx); });

  auto* oracle = app.add_subcommand(
      "oracle-check", "cross-validate normal forms against the congruence "
                      "closure of the defining relations");
  add_graph_source(oracle, ctx);
  add_format(oracle, ctx);
  oracle->add_option("--max-len", ctx.max_len, "verified length")
      ->required()
      ->check(CLI::NonNegativeNumber);
  oracle->add_option("--slack", ctx.slack,
                     "extra length for intermediate words");
  oracle->add_option("--budget", ctx.budget, "word cap")
      ->default_val(std::uint64_t{2000000});
  oracle->callback([&] { run_oracle_check(ctx); });

  auto* enumerate = app.add_subcommand(
      "enumerate", "list the normal words up to a length");
  add_graph_source(enumerate, ctx);
  add_format(enumerate, ctx);
  add_order(enumerate, ctx);
  enumerate->add_option("--max-len", ctx.max_len, "largest length")
      ->required()
      ->check(CLI::NonNegativeNumber);
  enumerate->add_option("--budget", ctx.budget, "listing cap");
  enumerate->callback([&] { run_enumerate(ctx); });

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("hk");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return ctx.exit_code;
}

}  // namespace hk::cli
