#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <variant>

#include "wordlogic/equations.hpp"
#include "wordlogic/formula.hpp"
#include "wordlogic/pseudofinite.hpp"
#include "wordlogic/recogniser.hpp"
#include "wordlogic/rewrite.hpp"
#include "wordlogic/text.hpp"

namespace wordlogic::cli {

namespace {

struct Options {
  std::string alphabet;
  std::string registry;
  std::string sentence;
  std::string word;
  std::string recogniser;
  std::string recogniser2;
  std::string oracle;
  std::string colouring;
  std::string from;
  std::string to;
  std::string chain;
  std::string output;
  std::string gword;
  std::size_t max_len = 6;
  std::size_t max_threshold = 3;
  std::size_t max_modulus = 3;
  std::size_t modulus_bound = 4;
  std::size_t threshold_bound = 3;
};

// A usage problem detected after argument parsing.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct Context {
  Options opt;
  std::ostream& out;
  std::ostream& err;

  Alphabet alphabet(const std::optional<Alphabet>& declared = std::nullopt) const {
    if (!opt.alphabet.empty()) return Alphabet(opt.alphabet);
    if (declared) return *declared;
    return Alphabet("ab");
  }

  RegistryFile registry() const {
    if (opt.registry.empty()) return {};
    return parse_registry(text::read_file(opt.registry));
  }

  Word word(const Alphabet& a, const std::string& w) const {
    a.check_word(w);
    return w;
  }

  void emit(const std::string& body) const {
    if (opt.output.empty()) {
      out << body;
      return;
    }
    std::ofstream file(opt.output, std::ios::binary);
    if (!file) throw UsageError("cannot write '" + opt.output + "'");
    file << body;
  }
};

const char* verdict(bool b) { return b ? "true" : "false"; }

int status(bool b) { return b ? ok : negative; }

Formula sentence(const Context& ctx, const RegistryFile& reg, const Alphabet& a) {
  try {
    return parse_sentence(ctx.opt.sentence, reg.registry, a);
  } catch (const ParseError& e) {
    ctx.err << "  " << ctx.opt.sentence << "\n  " << std::string(e.column(), ' ') << "^\n";
    throw;
  }
}

struct Oracle {
  MembershipOracle fn;
  std::optional<Alphabet> alphabet;
};

// Builtins: factor:<word>, parity:<letter>, all, empty. Anything else is a
// recogniser file.
Oracle load_oracle(const std::string& name) {
  if (name == "all") return {[](const Word&) { return true; }, std::nullopt};
  if (name == "empty") return {[](const Word&) { return false; }, std::nullopt};
  if (name.starts_with("factor:")) {
    std::string f = name.substr(7);
    return {[f](const Word& w) { return w.find(f) != Word::npos; }, std::nullopt};
  }
  if (name.starts_with("parity:")) {
    if (name.size() != 8) throw UsageError("parity oracle takes a single letter, e.g. parity:a");
    char c = name[7];
    return {[c](const Word& w) { return std::count(w.begin(), w.end(), c) % 2 == 0; }, std::nullopt};
  }
  Recogniser1 r = Recogniser1::parse(text::read_file(name));
  return {r.oracle(), r.alphabet()};
}

int cmd_parse(const Context& ctx) {
  RegistryFile reg = ctx.registry();
  Alphabet a = ctx.alphabet(reg.alphabet);
  ctx.out << sentence(ctx, reg, a).to_string() << "\n";
  return ok;
}

int cmd_eval(const Context& ctx) {
  RegistryFile reg = ctx.registry();
  Alphabet a = ctx.alphabet(reg.alphabet);
  Formula phi = sentence(ctx, reg, a);
  bool b = eval(phi, reg.registry, ctx.word(a, ctx.opt.word));
  ctx.out << verdict(b) << "\n";
  return status(b);
}

int cmd_compile(const Context& ctx) {
  RegistryFile reg = ctx.registry();
  Alphabet a = ctx.alphabet(reg.alphabet);
  ctx.emit(compile(sentence(ctx, reg, a), a, reg.registry).to_string());
  return ok;
}

int cmd_member(const Context& ctx) {
  Recogniser1 r = Recogniser1::parse(text::read_file(ctx.opt.recogniser));
  bool b = r.membership(ctx.word(r.alphabet(), ctx.opt.word));
  ctx.out << verdict(b) << "\n";
  return status(b);
}

int cmd_equiv(const Context& ctx) {
  Recogniser1 r1 = Recogniser1::parse(text::read_file(ctx.opt.recogniser));
  Recogniser1 r2 = Recogniser1::parse(text::read_file(ctx.opt.recogniser2));
  Equivalence e = equivalent(r1, r2);
  ctx.out << verdict(e.equivalent);
  if (e.separator) ctx.out << " separator=" << (e.separator->empty() ? "\"\"" : *e.separator);
  ctx.out << "\n";
  return status(e.equivalent);
}

int cmd_check_eq(const Context& ctx) {
  Oracle o = load_oracle(ctx.opt.oracle);
  Alphabet a = ctx.alphabet(o.alphabet);
  CheckReport r = check_all(o.fn, a, Colouring::parse(ctx.opt.colouring), ctx.opt.max_len);
  ctx.out << r.to_string() << "\n";
  return status(r.pass());
}

int cmd_search_col(const Context& ctx) {
  Oracle o = load_oracle(ctx.opt.oracle);
  Alphabet a = ctx.alphabet(o.alphabet);
  auto found = search_colouring(o.fn, a, candidate_colourings(ctx.opt.max_threshold, ctx.opt.max_modulus),
                                ctx.opt.max_len);
  if (!found) {
    ctx.out << "none\n";
    return negative;
  }
  ctx.out << found->colouring.to_string() << "\n";
  return ok;
}

int cmd_witness(const Context& ctx) {
  Alphabet a = ctx.alphabet();
  Colouring q = Colouring::parse(ctx.opt.colouring);
  try {
    RewriteChain c = witness_chain(a, q, ctx.word(a, ctx.opt.from), ctx.word(a, ctx.opt.to));
    if (!ctx.opt.output.empty()) {
      ctx.emit(c.to_string());
    } else {
      for (const RewriteStep& s : c.steps) ctx.out << s.to_string() << "\n";
    }
    return ok;
  } catch (const ProfileMismatch& e) {
    ctx.out << "profile mismatch at colour " << e.colour() << "\n";
    return negative;
  }
}

int cmd_verify(const Context& ctx) {
  RewriteChain c = RewriteChain::parse(text::read_file(ctx.opt.chain));
  MembershipOracle fn;
  if (!ctx.opt.oracle.empty()) fn = load_oracle(ctx.opt.oracle).fn;
  ChainCheck r = verify_chain(c, fn);
  if (r.ok) {
    ctx.out << "ok\n";
  } else {
    ctx.out << "fail step " << *r.failed_step << ": " << r.reason << "\n";
  }
  return status(r.ok);
}

int cmd_pf_check(const Context& ctx) {
  GeneralizedWord g = GeneralizedWord::parse(text::read_file(ctx.opt.gword));
  bool criterion = content_criterion(g);
  PseudofiniteCheck r = bounded_pseudofinite_check(g, ctx.opt.modulus_bound, ctx.opt.threshold_bound);
  ctx.out << "content-criterion " << verdict(criterion) << "\n";
  if (r.pass) {
    ctx.out << "bounded-check pass candidates=" << r.candidates << "\n";
  } else {
    ctx.out << "bounded-check fail colouring=" << r.counterexample->to_string() << " reason=" << r.obstruction->reason
            << "\n";
  }
  return status(r.pass);
}

int cmd_pf_witness(const Context& ctx) {
  GeneralizedWord g = GeneralizedWord::parse(text::read_file(ctx.opt.gword));
  Colouring q = Colouring::parse(ctx.opt.colouring);
  WitnessResult r = word_witness(g, q);
  if (auto* w = std::get_if<Word>(&r)) {
    ctx.out << (w->empty() ? "\"\"" : *w) << "\n";
    return ok;
  }
  ctx.out << "infeasible " << std::get<Infeasible>(r).reason << "\n";
  return negative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx{{}, out, err};
  Options& o = ctx.opt;

  CLI::App app{"Logic on words with uniform numerical predicates"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every verb");

  std::vector<std::pair<CLI::App*, std::function<int(const Context&)>>> verbs;
  auto verb = [&](const char* name, const char* help, std::function<int(const Context&)> fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    verbs.emplace_back(sub, std::move(fn));
    return sub;
  };
  auto alphabet = [&](CLI::App* s) { s->add_option("--alphabet", o.alphabet, "Letters, e.g. ab"); };
  auto logic = [&](CLI::App* s) {
    alphabet(s);
    s->add_option("--registry", o.registry, "Predicate registry file");
    s->add_option("--sentence", o.sentence, "Sentence, e.g. \"E x. a(x)\"")->required();
  };

  CLI::App* s = verb("parse", "Parse a sentence and print it back", cmd_parse);
  logic(s);

  s = verb("eval", "Evaluate a sentence on a word", cmd_eval);
  logic(s);
  s->add_option("--word", o.word, "Word")->required();

  s = verb("compile", "Compile a sentence into a recogniser file", cmd_compile);
  logic(s);
  s->add_option("--out", o.output, "Write the recogniser here instead of stdout");

  s = verb("member", "Decide membership of a word in a recogniser", cmd_member);
  s->add_option("--rec", o.recogniser, "Recogniser file")->required();
  s->add_option("--word", o.word, "Word")->required();

  s = verb("equiv", "Decide whether two recognisers accept the same words", cmd_equiv);
  s->add_option("first", o.recogniser, "Recogniser file")->required();
  s->add_option("second", o.recogniser2, "Recogniser file")->required();

  const char* oracle_help = "Recogniser file or builtin: factor:<word>, parity:<letter>, all, empty";
  s = verb("check-eq", "Check the equation families on bounded words", cmd_check_eq);
  alphabet(s);
  s->add_option("--oracle", o.oracle, oracle_help)->required();
  s->add_option("--col", o.colouring, "Colouring, e.g. col[up:/10, up:/01]")->required();
  s->add_option("--max-len", o.max_len, "Longest word checked")->capture_default_str();

  s = verb("search-col", "Find a threshold/residue colouring passing every equation", cmd_search_col);
  alphabet(s);
  s->add_option("--oracle", o.oracle, oracle_help)->required();
  s->add_option("--max-threshold", o.max_threshold, "Largest threshold tried")->capture_default_str();
  s->add_option("--max-modulus", o.max_modulus, "Largest modulus tried")->capture_default_str();
  s->add_option("--max-len", o.max_len, "Longest word checked")->capture_default_str();

  s = verb("witness", "Rewrite chain between two words with equal profiles", cmd_witness);
  alphabet(s);
  s->add_option("--col", o.colouring, "Colouring")->required();
  s->add_option("--from", o.from, "Source word")->required();
  s->add_option("--to", o.to, "Target word")->required();
  s->add_option("--out", o.output, "Write a chain file here instead of printing the steps");

  s = verb("verify", "Replay and check a chain file", cmd_verify);
  s->add_option("--chain", o.chain, "Chain file")->required();
  s->add_option("--oracle", o.oracle, oracle_help);

  s = verb("pf-check", "Content criterion and bounded witness check for a generalized word", cmd_pf_check);
  s->add_option("--gw", o.gword, "Generalized word file")->required();
  s->add_option("--modulus-bound", o.modulus_bound, "Largest modulus of candidate colourings")->capture_default_str();
  s->add_option("--threshold-bound", o.threshold_bound, "Largest threshold of candidate colourings")
      ->capture_default_str();

  s = verb("pf-witness", "Finite word with the profile of a generalized word", cmd_pf_witness);
  s->add_option("--gw", o.gword, "Generalized word file")->required();
  s->add_option("--col", o.colouring, "Colouring")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }

  try {
    for (const auto& [sub, fn] : verbs) {
      if (sub->parsed()) return fn(ctx);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  }
  return usage;
}

}  // namespace wordlogic::cli
