#ifndef WORDLOGIC_EQUATIONS_HPP
#define WORDLOGIC_EQUATIONS_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wordlogic/colouring.hpp"
#include "wordlogic/recogniser.hpp"
#include "wordlogic/words.hpp"

namespace wordlogic {

/// w with w[positions[m]] replaced by letters[m]. Positions must be pairwise
/// distinct and inside w.
Word substitute(const Word& w, std::span<const std::size_t> positions, std::string_view letters);

enum class Family { swap, dup, append };

std::string family_name(Family f);

/// One instance of an equation family. `b` is ignored for append.
struct Equation {
  Family family;
  char a;
  char b = 0;
};

/// A pair of words on which the oracle disagrees although the equation
/// relates them. `word` already carries the left-hand letters at `positions`
/// and `image` is its right-hand counterpart (the swapped word, the word with
/// the duplicated letter, or the word extended by one letter).
struct Violation {
  Equation equation;
  Word word;
  std::vector<std::size_t> positions;
  std::size_t colour = 0;
  Word image;
  bool word_member = false;
  bool image_member = false;
};

struct CheckReport {
  std::optional<Violation> violation;

  bool pass() const { return !violation.has_value(); }
  /// `PASS` or `FAIL fam=swap a=a b=b w=ab j=0,1`.
  std::string to_string() const;
};

/// Oracle answers cached for every word up to a fixed length.
class MembershipTable {
 public:
  MembershipTable(const MembershipOracle& oracle, const Alphabet& alphabet, std::size_t max_len);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t max_len() const { return max_len_; }
  /// Membership of the word of length n whose base-|A| value (first letter
  /// most significant) is `value`.
  bool at(std::size_t n, std::size_t value) const { return bits_[offset_[n] + value]; }
  bool operator()(const Word& w) const;

 private:
  Alphabet alphabet_;
  std::size_t max_len_;
  std::vector<std::size_t> offset_;
  std::vector<bool> bits_;
};

/**
 * Checks one equation on every word of length <= max_len.
 *
 *   swap(a,b):  distinct same-colour j1, j2:            w(j1,j2 -> a,b) ∈ L ⇔ w(j1,j2 -> b,a) ∈ L
 *   dup(a,b):   pairwise distinct same-colour j1,j2,j3: w(.. -> a,a,b) ∈ L ⇔ w(.. -> a,b,b) ∈ L
 *   append(a):  j < |w| with colour(j) = colour(|w|):   w(j -> a) ∈ L ⇔ w(j -> a)·a ∈ L
 *
 * Words are visited in shortlex order and positions lexicographically; the
 * first violation is reported. Instances with a = b hold trivially.
 */
CheckReport check_family(const MembershipOracle& oracle, const Alphabet& alphabet, const Colouring& q,
                         const Equation& eq, std::size_t max_len);
CheckReport check_family(const MembershipTable& table, const Colouring& q, const Equation& eq,
                         std::size_t max_len);

/// Every swap(a,b), then every dup(a,b), then every append(a), letters in
/// alphabet order.
CheckReport check_all(const MembershipOracle& oracle, const Alphabet& alphabet, const Colouring& q,
                      std::size_t max_len);
CheckReport check_all(const MembershipTable& table, const Colouring& q, std::size_t max_len);

/// Re-evaluates a violation through substitute and the oracle.
bool replays(const Violation& v, const MembershipOracle& oracle, const Colouring& q);

/// A user-defined equation u ↔ v on words with `arity` marked positions.
struct GeneralEquation {
  std::string name;
  std::size_t arity = 1;
  /// Which (w, positions) the equation ranges over.
  std::function<bool(const Word&, std::span<const std::size_t>)> domain;
  std::function<Word(const Word&, std::span<const std::size_t>)> u;
  std::function<Word(const Word&, std::span<const std::size_t>)> v;
};

struct GeneralViolation {
  Word word;
  std::vector<std::size_t> positions;
  Word u_image;
  Word v_image;
};

/// First (w, positions) in the domain, |w| <= max_len, where the oracle
/// separates u(w) from v(w).
std::optional<GeneralViolation> check_general(const MembershipOracle& oracle, const Alphabet& alphabet,
                                              const GeneralEquation& eq, std::size_t max_len);

/// Block-style threshold/residue colourings for threshold 0..T (outer loop)
/// and modulus 1..M (inner loop).
std::vector<Colouring> candidate_colourings(std::size_t max_threshold, std::size_t max_modulus);

struct SearchResult {
  Colouring colouring;
  CheckReport report;
};

/// First candidate on which check_all passes at max_len.
std::optional<SearchResult> search_colouring(const MembershipOracle& oracle, const Alphabet& alphabet,
                                             const std::vector<Colouring>& candidates, std::size_t max_len);

}  // namespace wordlogic

#endif  // WORDLOGIC_EQUATIONS_HPP
