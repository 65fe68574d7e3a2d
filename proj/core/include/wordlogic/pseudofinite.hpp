#ifndef WORDLOGIC_PSEUDOFINITE_HPP
#define WORDLOGIC_PSEUDOFINITE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wordlogic/colouring.hpp"
#include "wordlogic/upset.hpp"
#include "wordlogic/words.hpp"

namespace wordlogic {

/// {n : s contains n + p·⌈t/p⌉}: the purely periodic set that agrees with s
/// from some point on.
UPSet periodic_part(const UPSet& s);

/**
 * Closed subset of βℕ given as a finite union of clopens Ĥ (all ultrafilters
 * containing H) and remainder clopens *R (free ultrafilters containing R).
 *
 * Kept normalised as at most one Hat and at most one Star: hats merge, stars
 * merge, and Star(R) is replaced by Star(periodic_part(R \ H)) or dropped when
 * that is empty. Two expressions are equal iff they denote the same set.
 *
 * Text: `hat(up:/1) + star(up:/10)`, `0` for the empty set.
 */
class ClosedExpr {
 public:
  ClosedExpr() = default;
  static ClosedExpr hat(const UPSet& q);
  static ClosedExpr star(const UPSet& r);
  static ClosedExpr parse(std::string_view text);

  ClosedExpr operator+(const ClosedExpr& other) const;

  bool is_empty() const { return !hat_ && !star_; }
  const std::optional<UPSet>& hat_set() const { return hat_; }
  const std::optional<UPSet>& star_set() const { return star_; }

  /// The principal ultrafilters inside the set, as a subset of ℕ.
  UPSet content() const;
  /// Whether the set meets the clopen q̂.
  bool meets_clopen(const UPSet& q) const;

  std::string to_string() const;

  friend bool operator==(const ClosedExpr&, const ClosedExpr&) = default;

 private:
  void normalise();

  std::optional<UPSet> hat_;
  std::optional<UPSet> star_;
};

/// One closed set per letter. File format, one line per letter:
///
///     alphabet ab
///     a = hat(up:/1) + star(up:/10)
///     b = 0
///
/// Without an alphabet line the letters are taken in order of appearance.
/// Letters without a line get the empty set.
class GeneralizedWord {
 public:
  explicit GeneralizedWord(Alphabet alphabet);
  GeneralizedWord(Alphabet alphabet, std::vector<ClosedExpr> components);

  static GeneralizedWord parse(std::string_view text);
  std::string to_string() const;

  const Alphabet& alphabet() const { return alphabet_; }
  const ClosedExpr& component(char letter) const { return components_[alphabet_.require(letter)]; }
  const std::vector<ClosedExpr>& components() const { return components_; }
  void set(char letter, ClosedExpr e) { components_[alphabet_.require(letter)] = std::move(e); }

 private:
  Alphabet alphabet_;
  std::vector<ClosedExpr> components_;
};

/// Cell i holds the letters whose closed set meets the clopen of Q_i.
Profile gw_profile(const GeneralizedWord& g, const Colouring& q);

/// Contents pairwise disjoint and their union a downset of ℕ.
bool content_criterion(const GeneralizedWord& g);

/// Why no finite word has the required profile: `cell` needs letters that
/// only fit in a word of length >= `min_length`, while `conflicting_cell`
/// must stay empty and so forces length <= `max_length`. When `cell` has
/// fewer positions than letters to place, `conflicting_cell` is absent.
struct Infeasible {
  std::size_t cell = 0;
  std::optional<std::size_t> conflicting_cell;
  std::size_t min_length = 0;
  std::optional<std::size_t> max_length;
  std::string reason;
};

using WitnessResult = std::variant<Word, Infeasible>;

/// A shortest finite word with the same profile on q as g, or the obstruction.
WitnessResult word_witness(const GeneralizedWord& g, const Colouring& q);

/// Candidate colourings for the bounded check: threshold/residue colourings
/// (block style, then singleton-prefix style) for threshold 0..T and modulus
/// 1..M, each refined by (S, ℕ \ S) for every atom set S of g.
std::vector<Colouring> pseudofinite_candidates(const GeneralizedWord& g, std::size_t modulus_bound,
                                               std::size_t threshold_bound);

struct PseudofiniteCheck {
  bool pass = true;
  std::size_t candidates = 0;
  std::optional<Colouring> counterexample;
  std::optional<Infeasible> obstruction;
};

/// Runs word_witness over every candidate; stops at the first Infeasible.
PseudofiniteCheck bounded_pseudofinite_check(const GeneralizedWord& g, std::size_t modulus_bound,
                                             std::size_t threshold_bound);

}  // namespace wordlogic

#endif  // WORDLOGIC_PSEUDOFINITE_HPP
