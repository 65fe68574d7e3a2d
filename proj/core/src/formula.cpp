#include "wordlogic/formula.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "wordlogic/text.hpp"

namespace wordlogic {

// ---------------------------------------------------------------- registry

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

ExternPredicate builtin_hook(const std::string& name, std::size_t arity) {
  std::string key = upper(name);
  if (arity != 1) return {};
  if (key == "PRIME") {
    return [](std::span<const std::size_t> p, std::size_t) { return is_prime(p[0]); };
  }
  if (key == "END" || key == "LAST") {
    return [](std::span<const std::size_t> p, std::size_t length) { return p[0] + 1 == length; };
  }
  return {};
}

}  // namespace

void Registry::check_new_name(const std::string& name) const {
  if (!is_identifier(name)) throw Error("'" + name + "' is not a valid predicate name");
  if (name == "E" || name == "A") throw Error("'" + name + "' is reserved for quantifiers");
  if (predicates_.count(name)) throw Error("predicate '" + name + "' is already defined");
}

void Registry::define(std::string name, SetExpr set) {
  check_new_name(name);
  if (set.arity() == 0) throw Error("predicate '" + name + "' must have arity >= 1");
  PredicateDef def{name, set.arity(), std::move(set), {}};
  predicates_.emplace(std::move(name), std::move(def));
}

void Registry::declare_extern(std::string name, std::size_t arity, ExternPredicate hook) {
  check_new_name(name);
  if (arity == 0) throw Error("predicate '" + name + "' must have arity >= 1");
  if (!hook) hook = builtin_hook(name, arity);
  PredicateDef def{name, arity, std::nullopt, std::move(hook)};
  predicates_.emplace(std::move(name), std::move(def));
}

void Registry::bind_extern(const std::string& name, ExternPredicate hook) {
  auto it = predicates_.find(name);
  if (it == predicates_.end()) throw Error("unknown predicate '" + name + "'");
  if (it->second.is_uniform()) throw Error("predicate '" + name + "' is uniform and cannot take a hook");
  it->second.hook = std::move(hook);
}

const PredicateDef* Registry::find(std::string_view name) const {
  auto it = predicates_.find(name);
  return it == predicates_.end() ? nullptr : &it->second;
}

const PredicateDef& Registry::at(std::string_view name) const {
  const PredicateDef* def = find(name);
  if (!def) throw Error("unknown predicate '" + std::string(name) + "'");
  return *def;
}

RegistryFile parse_registry(std::string_view text) {
  RegistryFile out;
  std::vector<std::string_view> all = text::lines(text);
  for (std::size_t i = 0; i < all.size(); ++i) {
    std::string_view line = all[i];
    if (text::is_blank_or_comment(line)) continue;
    std::size_t number = i + 1;
    std::vector<std::string_view> parts = text::words(line);
    try {
      if (parts[0] == "alphabet") {
        if (out.alphabet) throw ParseError("alphabet declared twice", number, 0);
        out.alphabet = Alphabet::parse_declaration(line);
        continue;
      }
      if (parts[0] != "pred" || parts.size() < 4) {
        throw ParseError("expected 'pred NAME ARITY SET' or 'alphabet LETTERS'", number, 0);
      }
      std::string name(parts[1]);
      std::size_t arity = text::parse_size(parts[2]);
      // The set may contain spaces, so take everything after the arity token.
      std::size_t start = static_cast<std::size_t>(parts[3].data() - line.data());
      std::string_view body = text::trim(line.substr(start));
      if (body == "extern") {
        out.registry.declare_extern(name, arity);
      } else {
        out.registry.define(name, SetExpr::parse(body, arity));
      }
    } catch (const ParseError& e) {
      if (e.line() != 0) throw;
      throw ParseError(e.what(), number, e.column());
    } catch (const Error& e) {
      throw ParseError(e.what(), number, 0);
    }
  }
  return out;
}

// ---------------------------------------------------------------- formulas

Formula Formula::letter(char a, std::string var) {
  Formula f(Kind::letter);
  f.symbol_ = a;
  f.vars_ = {std::move(var)};
  return f;
}

Formula Formula::predicate(std::string name, std::vector<std::string> vars) {
  Formula f(Kind::predicate);
  f.name_ = std::move(name);
  f.vars_ = std::move(vars);
  return f;
}

Formula Formula::negation(Formula inner) {
  Formula f(Kind::negation);
  f.children_.push_back(std::move(inner));
  return f;
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  Formula f(Kind::conjunction);
  f.children_.push_back(std::move(lhs));
  f.children_.push_back(std::move(rhs));
  return f;
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  Formula f(Kind::disjunction);
  f.children_.push_back(std::move(lhs));
  f.children_.push_back(std::move(rhs));
  return f;
}

Formula Formula::exists(std::vector<std::string> vars, Formula matrix) {
  if (vars.empty()) throw Error("a quantifier block binds at least one variable");
  Formula f(Kind::exists);
  f.vars_ = std::move(vars);
  f.children_.push_back(std::move(matrix));
  return f;
}

bool Formula::is_quantifier_free() const {
  if (kind_ == Kind::exists) return false;
  return std::all_of(children_.begin(), children_.end(), [](const Formula& c) { return c.is_quantifier_free(); });
}

std::set<std::string> Formula::free_variables() const {
  switch (kind_) {
    case Kind::letter:
    case Kind::predicate:
      return {vars_.begin(), vars_.end()};
    case Kind::exists: {
      std::set<std::string> inner = children_[0].free_variables();
      for (const auto& v : vars_) inner.erase(v);
      return inner;
    }
    default: {
      std::set<std::string> out;
      for (const auto& c : children_) {
        auto sub = c.free_variables();
        out.insert(sub.begin(), sub.end());
      }
      return out;
    }
  }
}

namespace {

int precedence(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::disjunction:
      return 1;
    case Formula::Kind::conjunction:
      return 2;
    case Formula::Kind::exists:
      return 0;
    default:
      return 3;
  }
}

std::string render(const Formula& f);

// Blocks always get parentheses below the top so the greedy matrix cannot
// swallow a sibling. Right operands of the same operator keep theirs so the
// tree shape survives a round trip.
std::string render_operand(const Formula& child, const Formula& parent, bool right) {
  std::string s = render(child);
  int pc = precedence(child.kind());
  int pp = precedence(parent.kind());
  bool wrap = child.kind() == Formula::Kind::exists || pc < pp || (right && pc == pp);
  return wrap ? "(" + s + ")" : s;
}

std::string render(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::letter:
      return std::string(1, f.symbol()) + "(" + f.vars()[0] + ")";
    case K::predicate: {
      std::string out = f.name() + "(";
      for (std::size_t i = 0; i < f.vars().size(); ++i) out += (i ? "," : "") + f.vars()[i];
      return out + ")";
    }
    case K::negation:
      return "!" + render_operand(f.children()[0], f, false);
    case K::conjunction:
      return render_operand(f.children()[0], f, false) + " & " + render_operand(f.children()[1], f, true);
    case K::disjunction:
      return render_operand(f.children()[0], f, false) + " | " + render_operand(f.children()[1], f, true);
    case K::exists: {
      std::string out = "E";
      for (const auto& v : f.vars()) out += " " + v;
      return out + ". " + render(f.children()[0]);
    }
  }
  return {};
}

}  // namespace

std::string Formula::to_string() const { return render(*this); }

// ---------------------------------------------------------------- parser

namespace {

struct Token {
  enum class Type { ident, lparen, rparen, comma, dot, amp, bar, bang, end };
  Type type;
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Token::Type::ident, std::string(s.substr(i, j - i)), i});
      i = j;
      continue;
    }
    Token::Type t;
    switch (c) {
      case '(': t = Token::Type::lparen; break;
      case ')': t = Token::Type::rparen; break;
      case ',': t = Token::Type::comma; break;
      case '.': t = Token::Type::dot; break;
      case '&': t = Token::Type::amp; break;
      case '|': t = Token::Type::bar; break;
      case '!': t = Token::Type::bang; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", 0, i);
    }
    out.push_back({t, std::string(1, c), i});
    ++i;
  }
  out.push_back({Token::Type::end, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const Registry& registry, const Alphabet& alphabet)
      : tokens_(tokenize(text)), registry_(registry), alphabet_(alphabet) {}

  Formula sentence() {
    Formula f = sentence_or();
    expect_end();
    return f;
  }

  Formula qf_only() {
    Formula f = qf_or();
    expect_end();
    return f;
  }

 private:
  using T = Token::Type;

  const Token& peek(std::size_t ahead = 0) const { return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)]; }
  bool at(T type) const { return peek().type == type; }
  const Token& take() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::string& message, const Token& where) const {
    throw ParseError(message, 0, where.column);
  }

  const Token& expect(T type, const char* what) {
    if (!at(type)) {
      fail(std::string("expected ") + what + (at(T::end) ? " but the input ended" : " before '" + peek().text + "'"),
           peek());
    }
    return take();
  }

  void expect_end() {
    if (!at(T::end)) fail("unexpected '" + peek().text + "'", peek());
  }

  bool at_quantifier(const char* q) const {
    return at(T::ident) && peek().text == q && peek(1).type == T::ident;
  }

  void reject_universal() const {
    if (at_quantifier("A")) {
      fail("universal quantifiers are not supported: only existential blocks 'E x1 ... xk.' are allowed", peek());
    }
  }

  // sentence level

  Formula sentence_or() {
    Formula f = sentence_and();
    while (at(T::bar)) {
      take();
      f = Formula::disjunction(std::move(f), sentence_and());
    }
    return f;
  }

  Formula sentence_and() {
    Formula f = sentence_not();
    while (at(T::amp)) {
      take();
      f = Formula::conjunction(std::move(f), sentence_not());
    }
    return f;
  }

  Formula sentence_not() {
    if (at(T::bang)) {
      take();
      return Formula::negation(sentence_not());
    }
    if (at(T::lparen)) {
      take();
      Formula f = sentence_or();
      expect(T::rparen, "')'");
      return f;
    }
    reject_universal();
    if (at_quantifier("E")) return block();
    if (at(T::ident) && peek(1).type == T::lparen) {
      fail("atom '" + peek().text + "(...)' is outside any quantifier block, so its variables are unbound", peek());
    }
    fail(at(T::end) ? "expected a quantifier block but the input ended"
                    : "expected a quantifier block 'E x. ...' before '" + peek().text + "'",
         peek());
  }

  Formula block() {
    take();  // E
    std::vector<std::string> vars;
    while (at(T::ident)) {
      const Token& v = take();
      if (std::find(vars.begin(), vars.end(), v.text) != vars.end()) {
        fail("variable '" + v.text + "' is bound twice in the same block", v);
      }
      vars.push_back(v.text);
    }
    expect(T::dot, "'.' after the quantified variables");
    bound_ = vars;
    Formula matrix = qf_or();
    bound_.reset();
    return Formula::exists(std::move(vars), std::move(matrix));
  }

  // quantifier-free level

  Formula qf_or() {
    Formula f = qf_and();
    while (at(T::bar)) {
      take();
      f = Formula::disjunction(std::move(f), qf_and());
    }
    return f;
  }

  Formula qf_and() {
    Formula f = qf_not();
    while (at(T::amp)) {
      take();
      f = Formula::conjunction(std::move(f), qf_not());
    }
    return f;
  }

  Formula qf_not() {
    if (at(T::bang)) {
      take();
      return Formula::negation(qf_not());
    }
    if (at(T::lparen)) {
      take();
      Formula f = qf_or();
      expect(T::rparen, "')'");
      return f;
    }
    reject_universal();
    if (at_quantifier("E")) {
      fail("quantifier blocks cannot be nested: a block's matrix must be quantifier-free", peek());
    }
    return atom();
  }

  std::string variable() {
    const Token& v = expect(T::ident, "a variable");
    if (bound_ && std::find(bound_->begin(), bound_->end(), v.text) == bound_->end()) {
      fail("variable '" + v.text + "' is not bound by the enclosing quantifier block", v);
    }
    return v.text;
  }

  Formula atom() {
    const Token& head = expect(T::ident, "an atom");
    if (!at(T::lparen)) fail("expected '(' after '" + head.text + "'", peek());
    take();
    if (head.text.size() == 1 && alphabet_.contains(head.text[0])) {
      std::string v = variable();
      if (at(T::comma)) fail("letter atoms take exactly one variable", peek());
      expect(T::rparen, "')'");
      return Formula::letter(head.text[0], std::move(v));
    }
    const PredicateDef* def = registry_.find(head.text);
    if (!def) {
      if (head.text.size() == 1) {
        fail("'" + head.text + "' is neither a letter of '" + alphabet_.letters() + "' nor a known predicate", head);
      }
      fail("unknown predicate '" + head.text + "'", head);
    }
    std::vector<std::string> vars{variable()};
    while (at(T::comma)) {
      take();
      vars.push_back(variable());
    }
    expect(T::rparen, "')'");
    if (vars.size() != def->arity) {
      fail("predicate '" + head.text + "' has arity " + std::to_string(def->arity) + " but is applied to " +
               std::to_string(vars.size()) + " variable(s)",
           head);
    }
    return Formula::predicate(head.text, std::move(vars));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const Registry& registry_;
  const Alphabet& alphabet_;
  std::optional<std::vector<std::string>> bound_;
};

}  // namespace

Formula parse_sentence(std::string_view text, const Registry& registry, const Alphabet& alphabet) {
  return Parser(text, registry, alphabet).sentence();
}

Formula parse_formula(std::string_view text, const Registry& registry, const Alphabet& alphabet) {
  return Parser(text, registry, alphabet).qf_only();
}

// ---------------------------------------------------------------- evaluation

namespace {

std::size_t lookup(const Assignment& a, const std::string& var, const Word& w) {
  auto it = a.find(var);
  if (it == a.end()) throw Error("variable '" + var + "' has no value");
  if (it->second >= w.size()) {
    throw Error("variable '" + var + "' is assigned position " + std::to_string(it->second) +
                " outside a word of length " + std::to_string(w.size()));
  }
  return it->second;
}

bool eval_rec(const Formula& f, const Registry& registry, const Word& w, Assignment& a) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::letter:
      return w[lookup(a, f.vars()[0], w)] == f.symbol();
    case K::predicate: {
      const PredicateDef& def = registry.at(f.name());
      std::vector<std::size_t> positions;
      positions.reserve(f.vars().size());
      for (const auto& v : f.vars()) positions.push_back(lookup(a, v, w));
      if (def.set) return def.set->contains(positions);
      if (!def.hook) throw Error("extern predicate '" + def.name + "' has no evaluation hook");
      return def.hook(positions, w.size());
    }
    case K::negation:
      return !eval_rec(f.children()[0], registry, w, a);
    case K::conjunction:
      return eval_rec(f.children()[0], registry, w, a) && eval_rec(f.children()[1], registry, w, a);
    case K::disjunction:
      return eval_rec(f.children()[0], registry, w, a) || eval_rec(f.children()[1], registry, w, a);
    case K::exists: {
      const auto& vars = f.vars();
      Assignment saved = a;
      bool found = !for_each_tuple(w.size(), vars.size(), [&](const Tuple& t) {
        for (std::size_t i = 0; i < vars.size(); ++i) a[vars[i]] = t[i];
        return !eval_rec(f.children()[0], registry, w, a);
      });
      a = std::move(saved);
      return found;
    }
  }
  return false;
}

}  // namespace

bool eval(const Formula& phi, const Registry& registry, const Word& w, const Assignment& assignment) {
  Assignment a = assignment;
  return eval_rec(phi, registry, w, a);
}

// ---------------------------------------------------------------- normal form

NormalForm::NormalForm(Alphabet alphabet, std::vector<std::string> vars, std::vector<SetExpr> sets)
    : alphabet_(std::move(alphabet)), vars_(std::move(vars)), sets_(std::move(sets)) {
  std::size_t expected = 1;
  for (std::size_t i = 0; i < vars_.size(); ++i) expected *= alphabet_.size();
  if (sets_.size() != expected) throw Error("normal form needs one set per letter tuple");
}

std::size_t NormalForm::code(std::string_view letters) const {
  if (letters.size() != vars_.size()) throw Error("letter tuple has the wrong arity");
  std::size_t c = 0;
  for (char l : letters) c = c * alphabet_.size() + alphabet_.require(l);
  return c;
}

const SetExpr& NormalForm::set_for(std::string_view letters) const { return sets_[code(letters)]; }

std::vector<std::pair<std::string, SetExpr>> NormalForm::entries() const {
  std::vector<std::pair<std::string, SetExpr>> out;
  std::string letters(arity(), ' ');
  for_each_tuple(alphabet_.size(), arity(), [&](const Tuple& t) {
    for (std::size_t i = 0; i < t.size(); ++i) letters[i] = alphabet_.letter(t[i]);
    out.emplace_back(letters, sets_[code(letters)]);
    return true;
  });
  return out;
}

bool NormalForm::holds(const Word& w, std::span<const std::size_t> positions) const {
  if (positions.size() != arity()) throw Error("position tuple has the wrong arity");
  std::string letters;
  for (std::size_t p : positions) {
    if (p >= w.size()) throw Error("position " + std::to_string(p) + " is outside the word");
    letters += w[p];
  }
  return set_for(letters).contains(positions);
}

std::string NormalForm::to_string() const {
  std::string out;
  for (const auto& [letters, set] : entries()) {
    if (set.is_none()) continue;
    if (!out.empty()) out += " | ";
    out += "(";
    for (std::size_t i = 0; i < letters.size(); ++i) {
      out += (i ? " & " : "") + std::string(1, letters[i]) + "(" + vars_[i] + ")";
    }
    out += " & " + set.to_string() + ")";
  }
  return out.empty() ? "false" : out;
}

namespace {

// Q^ā: letter atoms become constants under the fixed letter tuple.
SetExpr reduce(const Formula& f, std::span<const std::string> vars, std::string_view letters,
               const Registry& registry) {
  using K = Formula::Kind;
  std::size_t k = vars.size();
  auto index = [&](const std::string& v) {
    auto it = std::find(vars.begin(), vars.end(), v);
    if (it == vars.end()) throw Error("variable '" + v + "' is not in the variable list");
    return static_cast<std::size_t>(it - vars.begin());
  };
  switch (f.kind()) {
    case K::letter:
      return letters[index(f.vars()[0])] == f.symbol() ? SetExpr::all(k) : SetExpr::none(k);
    case K::predicate: {
      const PredicateDef& def = registry.at(f.name());
      if (!def.set) throw NonUniformPredicate(def.name);
      std::vector<std::size_t> idx;
      for (const auto& v : f.vars()) idx.push_back(index(v));
      return SetExpr::select(*def.set, std::move(idx), k);
    }
    case K::negation:
      return SetExpr::complement(reduce(f.children()[0], vars, letters, registry));
    case K::conjunction:
      return SetExpr::intersection(reduce(f.children()[0], vars, letters, registry),
                                   reduce(f.children()[1], vars, letters, registry));
    case K::disjunction:
      return SetExpr::union_of(reduce(f.children()[0], vars, letters, registry),
                               reduce(f.children()[1], vars, letters, registry));
    case K::exists:
      throw Error("normal form needs a quantifier-free formula");
  }
  return SetExpr::none(k);
}

}  // namespace

NormalForm normal_form(const Formula& qf, std::span<const std::string> vars, const Alphabet& alphabet,
                       const Registry& registry) {
  if (!qf.is_quantifier_free()) throw Error("normal form needs a quantifier-free formula");
  if (vars.empty()) throw Error("normal form needs at least one variable");
  std::vector<SetExpr> sets;
  std::string letters(vars.size(), ' ');
  for_each_tuple(alphabet.size(), vars.size(), [&](const Tuple& t) {
    for (std::size_t i = 0; i < t.size(); ++i) letters[i] = alphabet.letter(t[i]);
    sets.push_back(reduce(qf, vars, letters, registry));
    return true;
  });
  return NormalForm(alphabet, std::vector<std::string>(vars.begin(), vars.end()), std::move(sets));
}

// ---------------------------------------------------------------- generators

bool contains(const Generator& g, const Word& w) {
  std::size_t k = g.letters.size();
  return !for_each_tuple(w.size(), k, [&](const Tuple& t) {
    for (std::size_t i = 0; i < k; ++i) {
      if (w[t[i]] != g.letters[i]) return true;
    }
    return !g.set.contains(t);
  });
}

GeneratorExpr GeneratorExpr::constant(bool value) {
  GeneratorExpr e(Kind::constant);
  e.value_ = value;
  return e;
}

GeneratorExpr GeneratorExpr::generator(Generator g) {
  GeneratorExpr e(Kind::generator);
  e.atoms_.push_back(std::move(g));
  return e;
}

GeneratorExpr GeneratorExpr::negation(GeneratorExpr inner) {
  GeneratorExpr e(Kind::negation);
  e.children_.push_back(std::move(inner));
  return e;
}

GeneratorExpr GeneratorExpr::conjunction(GeneratorExpr lhs, GeneratorExpr rhs) {
  GeneratorExpr e(Kind::conjunction);
  e.children_.push_back(std::move(lhs));
  e.children_.push_back(std::move(rhs));
  return e;
}

GeneratorExpr GeneratorExpr::disjunction(GeneratorExpr lhs, GeneratorExpr rhs) {
  GeneratorExpr e(Kind::disjunction);
  e.children_.push_back(std::move(lhs));
  e.children_.push_back(std::move(rhs));
  return e;
}

bool GeneratorExpr::eval_with(const std::function<bool(const Generator&)>& truth) const {
  switch (kind_) {
    case Kind::constant:
      return value_;
    case Kind::generator:
      return truth(atoms_.front());
    case Kind::negation:
      return !children_[0].eval_with(truth);
    case Kind::conjunction:
      return children_[0].eval_with(truth) && children_[1].eval_with(truth);
    case Kind::disjunction:
      return children_[0].eval_with(truth) || children_[1].eval_with(truth);
  }
  return false;
}

bool GeneratorExpr::eval(const Word& w) const {
  return eval_with([&](const Generator& g) { return contains(g, w); });
}

std::vector<Generator> GeneratorExpr::generators() const {
  if (kind_ == Kind::generator) return atoms_;
  std::vector<Generator> out;
  for (const auto& c : children_) {
    auto sub = c.generators();
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

std::string GeneratorExpr::to_string() const {
  switch (kind_) {
    case Kind::constant:
      return value_ ? "true" : "false";
    case Kind::generator:
      return "gen(" + atoms_.front().letters + ", " + atoms_.front().set.to_string() + ")";
    case Kind::negation:
      return "!(" + children_[0].to_string() + ")";
    case Kind::conjunction:
      return "(" + children_[0].to_string() + " & " + children_[1].to_string() + ")";
    case Kind::disjunction:
      return "(" + children_[0].to_string() + " | " + children_[1].to_string() + ")";
  }
  return {};
}

GeneratorExpr sentence_to_generators(const Formula& sentence, const Alphabet& alphabet, const Registry& registry) {
  using K = Formula::Kind;
  switch (sentence.kind()) {
    case K::exists: {
      NormalForm nf = normal_form(sentence.children()[0], sentence.vars(), alphabet, registry);
      std::optional<GeneratorExpr> out;
      for (auto& [letters, set] : nf.entries()) {
        if (set.is_none()) continue;
        GeneratorExpr g = GeneratorExpr::generator({letters, std::move(set)});
        out = out ? GeneratorExpr::disjunction(std::move(*out), std::move(g)) : std::move(g);
      }
      return out ? std::move(*out) : GeneratorExpr::constant(false);
    }
    case K::negation:
      return GeneratorExpr::negation(sentence_to_generators(sentence.children()[0], alphabet, registry));
    case K::conjunction:
      return GeneratorExpr::conjunction(sentence_to_generators(sentence.children()[0], alphabet, registry),
                                        sentence_to_generators(sentence.children()[1], alphabet, registry));
    case K::disjunction:
      return GeneratorExpr::disjunction(sentence_to_generators(sentence.children()[0], alphabet, registry),
                                        sentence_to_generators(sentence.children()[1], alphabet, registry));
    default:
      throw Error("not a sentence: atoms must sit inside a quantifier block");
  }
}

}  // namespace wordlogic
