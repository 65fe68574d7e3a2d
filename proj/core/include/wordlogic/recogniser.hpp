#ifndef WORDLOGIC_RECOGNISER_HPP
#define WORDLOGIC_RECOGNISER_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wordlogic/colouring.hpp"
#include "wordlogic/formula.hpp"
#include "wordlogic/words.hpp"

namespace wordlogic {

/// A total membership predicate on words over a fixed alphabet.
using MembershipOracle = std::function<bool(const Word&)>;

/**
 * Finite recogniser for a language of the form ⋃_{B̄ ∈ accepted} K_{Q,B̄}:
 * a word is a member iff its profile on the colouring is accepted.
 *
 * The accepted set is stored densely over all of P(A)^ℓ, indexed by profile
 * codes (cell i occupies bits [|A|·i, |A|·(i+1))), so |A|·ℓ is capped at 26.
 *
 * File format:
 *
 *     alphabet ab
 *     colouring col[up:/10, up:/01]
 *     accept {a}|{b}
 */
class Recogniser1 {
 public:
  static constexpr std::size_t max_code_bits = 26;

  /// Accepts exactly the listed profiles.
  Recogniser1(Alphabet alphabet, Colouring colouring, const std::vector<Profile>& accepted = {});

  static Recogniser1 everything(Alphabet alphabet, Colouring colouring);
  /// K_{Q,B̄}
  static Recogniser1 from_profile(Alphabet alphabet, Colouring colouring, const Profile& profile);
  /// L_{◇^a_Q}: words with an `a` at some position of q.
  static Recogniser1 from_generator(Alphabet alphabet, char a, const UPSet& q);
  /// Accepts the profiles whose code satisfies `pred`.
  static Recogniser1 from_predicate(Alphabet alphabet, Colouring colouring,
                                    const std::function<bool(const Profile&)>& pred);

  static Recogniser1 parse(std::string_view text);
  std::string to_string() const;

  const Alphabet& alphabet() const { return alphabet_; }
  const Colouring& colouring() const { return colouring_; }
  std::size_t profile_count() const { return accepted_.size(); }

  bool membership(const Word& w) const;
  bool accepts(const Profile& p) const;
  /// Accepted profiles in code order (including unachievable ones).
  std::vector<Profile> accepted() const;
  MembershipOracle oracle() const;

  std::uint32_t code(const Profile& p) const;
  Profile decode(std::uint32_t code) const;
  bool accepts_code(std::uint32_t code) const { return accepted_[code]; }

  Recogniser1 complement() const;

 private:
  Recogniser1(Alphabet alphabet, Colouring colouring, std::vector<bool> accepted);
  static std::size_t code_space(const Alphabet& alphabet, const Colouring& colouring);

  Alphabet alphabet_;
  Colouring colouring_;
  std::vector<bool> accepted_;
};

Recogniser1 union_of(const Recogniser1& lhs, const Recogniser1& rhs);
Recogniser1 intersection(const Recogniser1& lhs, const Recogniser1& rhs);
Recogniser1 complement(const Recogniser1& r);

/// Smallest length N of a word with the given profile, if any.
std::optional<std::size_t> minimal_length(const Colouring& colouring, const Profile& profile);
bool achievable(const Colouring& colouring, const Profile& profile);

/// A word of minimal length with the given profile: in each cell the letters
/// of B_i in alphabet order, then the first of them repeated.
std::optional<Word> realize(const Alphabet& alphabet, const Colouring& colouring, const Profile& profile);

/// Calls fn(profile, minimal length) once per achievable profile, ordered by
/// minimal length and then by profile code.
void for_each_achievable(const Alphabet& alphabet, const Colouring& colouring,
                         const std::function<void(const Profile&, std::size_t)>& fn);

struct Equivalence {
  bool equivalent = true;
  /// Shortest separating word found (minimal length, then profile code).
  std::optional<Word> separator;
};

Equivalence equivalent(const Recogniser1& lhs, const Recogniser1& rhs);

/// Recogniser for a sentence whose blocks bind one variable and whose
/// predicates are unary and uniform.
Recogniser1 compile(const Formula& sentence, const Alphabet& alphabet, const Registry& registry);

/// Queries the oracle on one representative per achievable profile of length
/// at most `len_bound`; profiles needing longer words are rejected. Exact when
/// the oracle is saturated by profiles on `colouring` and every accepted
/// profile is realizable within the bound.
Recogniser1 synthesize(const MembershipOracle& oracle, const Alphabet& alphabet, const Colouring& colouring,
                       std::size_t len_bound);

/// Repeatedly merges two colours while the accepted set is saturated under
/// the merge. Membership is preserved; the result need not be minimal.
Recogniser1 reduce(const Recogniser1& r);

}  // namespace wordlogic

#endif  // WORDLOGIC_RECOGNISER_HPP
