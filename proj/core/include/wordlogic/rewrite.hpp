#ifndef WORDLOGIC_REWRITE_HPP
#define WORDLOGIC_REWRITE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wordlogic/colouring.hpp"
#include "wordlogic/error.hpp"
#include "wordlogic/recogniser.hpp"
#include "wordlogic/words.hpp"

namespace wordlogic {

/// One equation-justified edit of a word.
///
///   swap j1 j2 a b        a at j1, b at j2, same colour; exchanges them.
///   dup j1 j2 j3 a b fwd  (a,a,b) at (j1,j2,j3), same colour; j2 becomes b.
///   dup ... bwd           (a,b,b) at (j1,j2,j3); j2 becomes a.
///   append j a fwd        a at j, colour(j) = colour(|w|); appends a.
///   append j a bwd        w ends in a, j < |w|-1 holds a, colour(j) = colour(|w|-1);
///                         drops the last letter.
struct RewriteStep {
  enum class Kind { swap, dup, append };
  enum class Direction { forward, backward };

  Kind kind = Kind::swap;
  std::vector<std::size_t> positions;
  char a = 0;
  char b = 0;
  Direction direction = Direction::forward;

  static RewriteStep swap(std::size_t j1, std::size_t j2, char a, char b);
  static RewriteStep dup(std::size_t j1, std::size_t j2, std::size_t j3, char a, char b,
                         Direction d = Direction::forward);
  static RewriteStep append(std::size_t j, char a, Direction d = Direction::forward);

  /// The step undoing this one.
  RewriteStep inverse() const;

  std::string to_string() const;
  static RewriteStep parse(std::string_view line);

  friend bool operator==(const RewriteStep&, const RewriteStep&) = default;
};

/// A step whose precondition does not hold on the word it is applied to.
class StepError : public Error {
 public:
  using Error::Error;
};

/// The two words have different profiles; `colour` is the first cell where
/// their contents differ.
class ProfileMismatch : public Error {
 public:
  explicit ProfileMismatch(std::size_t colour)
      : Error("profiles differ on colour " + std::to_string(colour)), colour_(colour) {}
  std::size_t colour() const { return colour_; }

 private:
  std::size_t colour_;
};

Word apply_step(const Word& w, const RewriteStep& step, const Colouring& q);

/**
 * A sequence of steps from `source` to `target` under `colouring`.
 *
 * File format:
 *
 *     alphabet ab
 *     colouring col[up:/1]
 *     from ab
 *     to ba
 *     swap 0 1 a b
 *
 * `from` or `to` with nothing after it denotes the empty word. The alphabet
 * line is optional and defaults to `ab`.
 */
struct RewriteChain {
  Alphabet alphabet{"ab"};
  Colouring colouring;
  Word source;
  Word target;
  std::vector<RewriteStep> steps;

  std::string to_string() const;
  static RewriteChain parse(std::string_view text);
};

/**
 * Builds a chain between two words with equal profiles on q: extend the
 * shorter word letter by letter, fix letter multiplicities per colour with
 * dup steps, then sort each colour with swaps. When the source is the longer
 * word the chain is built in the other direction and inverted.
 * Throws ProfileMismatch when the profiles differ.
 */
RewriteChain witness_chain(const Alphabet& alphabet, const Colouring& q, const Word& w, const Word& w2);

struct ChainCheck {
  bool ok = true;
  /// Index of the first offending step; equal to the step count when only
  /// the endpoint is wrong.
  std::optional<std::size_t> failed_step;
  std::string reason;
};

/// Replays the chain, checking each step's precondition, that every word has
/// the source's profile, that the replay ends at the target and, when an
/// oracle is given, that membership never changes.
ChainCheck verify_chain(const RewriteChain& chain, const MembershipOracle& oracle = {});

}  // namespace wordlogic

#endif  // WORDLOGIC_REWRITE_HPP
