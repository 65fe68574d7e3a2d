#ifndef WORDLOGIC_FORMULA_HPP
#define WORDLOGIC_FORMULA_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wordlogic/error.hpp"
#include "wordlogic/set_expr.hpp"
#include "wordlogic/words.hpp"

namespace wordlogic {

/// Evaluation hook for predicates that are not uniform: receives the marked
/// positions and the word length.
using ExternPredicate = std::function<bool(std::span<const std::size_t> positions, std::size_t length)>;

struct PredicateDef {
  std::string name;
  std::size_t arity = 0;
  /// Present for uniform predicates: the set Q ⊆ ℕ^arity.
  std::optional<SetExpr> set;
  /// Evaluation-only hook for non-uniform predicates.
  ExternPredicate hook;

  bool is_uniform() const { return set.has_value(); }
};

/// Raised when a non-uniform predicate reaches normalisation or compilation.
class NonUniformPredicate : public Error {
 public:
  explicit NonUniformPredicate(const std::string& name)
      : Error("predicate '" + name + "' is not uniform; it can be evaluated but not normalised or compiled"),
        name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

/**
 * Named numerical predicates available to formulas.
 *
 * File format, one declaration per line (`#` starts a comment):
 *
 *     alphabet ab
 *     pred EV 1 up:/10
 *     pred DIAG 2 diag
 *     pred LT 2 lt
 *     pred S 2 succ
 *     pred P 2 prod(up:/10, up:/01)
 *     pred LE 2 or(lt, diag)
 *     pred PRIME 1 extern
 *
 * `extern` predicates named PRIME, END or LAST (any case) get a builtin hook;
 * others must be bound with bind_extern before evaluation.
 */
class Registry {
 public:
  void define(std::string name, SetExpr set);
  void declare_extern(std::string name, std::size_t arity, ExternPredicate hook = {});
  void bind_extern(const std::string& name, ExternPredicate hook);

  const PredicateDef* find(std::string_view name) const;
  const PredicateDef& at(std::string_view name) const;
  const std::map<std::string, PredicateDef, std::less<>>& predicates() const { return predicates_; }

 private:
  void check_new_name(const std::string& name) const;

  std::map<std::string, PredicateDef, std::less<>> predicates_;
};

/// Contents of a registry file; the alphabet line is optional.
struct RegistryFile {
  std::optional<Alphabet> alphabet;
  Registry registry;
};

RegistryFile parse_registry(std::string_view text);

/**
 * Formula tree. Sentences are Boolean combinations of existential blocks
 * `E x1 ... xk. qf` whose matrix is quantifier-free.
 */
class Formula {
 public:
  enum class Kind { letter, predicate, negation, conjunction, disjunction, exists };

  static Formula letter(char a, std::string var);
  static Formula predicate(std::string name, std::vector<std::string> vars);
  static Formula negation(Formula inner);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula exists(std::vector<std::string> vars, Formula matrix);

  Kind kind() const { return kind_; }
  /// Letter of a letter atom.
  char symbol() const { return symbol_; }
  /// Predicate name.
  const std::string& name() const { return name_; }
  /// Variables of an atom, or bound variables of a block.
  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<Formula>& children() const { return children_; }

  bool is_quantifier_free() const;
  std::set<std::string> free_variables() const;
  bool is_sentence() const { return free_variables().empty(); }

  /// Concrete syntax accepted by parse_sentence / parse_formula.
  std::string to_string() const;

  friend bool operator==(const Formula&, const Formula&) = default;

 private:
  Formula(Kind kind) : kind_(kind) {}

  Kind kind_;
  char symbol_ = 0;
  std::string name_;
  std::vector<std::string> vars_;
  std::vector<Formula> children_;
};

/**
 * Parses a sentence:
 *
 *     sentence := or ; or := and ('|' and)* ; and := not ('&' not)* ;
 *     not := '!' not | '(' sentence ')' | block ;
 *     block := 'E' var+ '.' qf ;
 *     atom := LETTER '(' var ')' | NAME '(' var (',' var)* ')'
 *
 * A block's matrix extends as far right as possible. Throws ParseError with a
 * column on syntax errors, unknown predicates, arity mismatches, unbound
 * variables, universal quantifiers and nested blocks.
 */
Formula parse_sentence(std::string_view text, const Registry& registry, const Alphabet& alphabet);

/// Parses a quantifier-free formula; its variables stay free.
Formula parse_formula(std::string_view text, const Registry& registry, const Alphabet& alphabet);

using Assignment = std::map<std::string, std::size_t, std::less<>>;

/// Truth of `phi` on `w` with free variables read from `assignment`.
bool eval(const Formula& phi, const Registry& registry, const Word& w, const Assignment& assignment = {});

/**
 * Quantifier-free normal form ⋁_ā (ā(x̄) ∧ Q^ā(x̄)) over the variable list x̄.
 * One set per letter tuple ā ∈ A^k, tuples ordered lexicographically.
 */
class NormalForm {
 public:
  NormalForm(Alphabet alphabet, std::vector<std::string> vars, std::vector<SetExpr> sets);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t arity() const { return vars_.size(); }

  /// Q^ā for the letter tuple `letters` (length k).
  const SetExpr& set_for(std::string_view letters) const;
  /// All letter tuples paired with their sets, lexicographic.
  std::vector<std::pair<std::string, SetExpr>> entries() const;

  /// w[ī] = ā and ī ∈ Q^ā for ā = w[ī].
  bool holds(const Word& w, std::span<const std::size_t> positions) const;

  std::string to_string() const;

 private:
  std::size_t code(std::string_view letters) const;

  Alphabet alphabet_;
  std::vector<std::string> vars_;
  std::vector<SetExpr> sets_;
};

/// Throws when `qf` is not quantifier-free, uses variables outside `vars`, or
/// uses a non-uniform predicate (NonUniformPredicate).
NormalForm normal_form(const Formula& qf, std::span<const std::string> vars, const Alphabet& alphabet,
                       const Registry& registry);

/// Generator L_{◇^ā_Q}: words with an occurrence of ā at a position tuple in Q.
struct Generator {
  std::string letters;
  SetExpr set;
};

bool contains(const Generator& g, const Word& w);

/// Boolean expression whose atoms are generators.
class GeneratorExpr {
 public:
  enum class Kind { constant, generator, negation, conjunction, disjunction };

  static GeneratorExpr constant(bool value);
  static GeneratorExpr generator(Generator g);
  static GeneratorExpr negation(GeneratorExpr inner);
  static GeneratorExpr conjunction(GeneratorExpr lhs, GeneratorExpr rhs);
  static GeneratorExpr disjunction(GeneratorExpr lhs, GeneratorExpr rhs);

  Kind kind() const { return kind_; }
  bool value() const { return value_; }
  const Generator& atom() const { return atoms_.front(); }
  const std::vector<GeneratorExpr>& children() const { return children_; }

  /// Evaluates every generator through ⟨w, Q⟩.
  bool eval(const Word& w) const;
  /// Evaluates with a caller-supplied truth value for each generator.
  bool eval_with(const std::function<bool(const Generator&)>& truth) const;
  /// Every generator occurring in the expression, left to right.
  std::vector<Generator> generators() const;

  std::string to_string() const;

 private:
  GeneratorExpr(Kind kind) : kind_(kind) {}

  Kind kind_;
  bool value_ = false;
  std::vector<Generator> atoms_;
  std::vector<GeneratorExpr> children_;
};

/// Rewrites a sentence as a Boolean combination of generators, one
/// disjunction ⋁_ā L_{◇^ā_{Q^ā}} per existential block.
GeneratorExpr sentence_to_generators(const Formula& sentence, const Alphabet& alphabet, const Registry& registry);

}  // namespace wordlogic

#endif  // WORDLOGIC_FORMULA_HPP
