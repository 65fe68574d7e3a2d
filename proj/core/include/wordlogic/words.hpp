#ifndef WORDLOGIC_WORDS_HPP
#define WORDLOGIC_WORDS_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "wordlogic/colouring.hpp"
#include "wordlogic/set_expr.hpp"

namespace wordlogic {

/// Finite words are plain letter strings over a declared Alphabet.
using Word = std::string;

/// Ordered list of distinct single-character letters (at most 16).
class Alphabet {
 public:
  static constexpr std::size_t max_letters = 16;

  explicit Alphabet(std::string_view letters);
  /// Parses a declaration line `alphabet ab`.
  static Alphabet parse_declaration(std::string_view line);

  std::size_t size() const { return letters_.size(); }
  char letter(std::size_t i) const { return letters_[i]; }
  const std::string& letters() const { return letters_; }
  std::optional<std::size_t> index_of(char c) const;
  bool contains(char c) const { return index_of(c).has_value(); }
  /// Index of `c`; throws when `c` is not a letter.
  std::size_t require(char c) const;
  /// Throws when some letter of `w` is outside the alphabet.
  void check_word(std::string_view w) const;
  std::string declaration() const { return "alphabet " + letters_; }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::string letters_;
};

/// Subset of an alphabet, as a bitmask over letter indices.
class LetterSet {
 public:
  constexpr LetterSet() = default;
  explicit constexpr LetterSet(std::uint32_t bits) : bits_(bits) {}
  static LetterSet full(const Alphabet& alphabet) { return LetterSet((1u << alphabet.size()) - 1); }

  void insert(std::size_t index) { bits_ |= 1u << index; }
  bool contains(std::size_t index) const { return (bits_ >> index) & 1u; }
  bool empty() const { return bits_ == 0; }
  std::size_t size() const;
  std::uint32_t bits() const { return bits_; }
  /// Smallest letter index in the set; the set must be nonempty.
  std::size_t first() const;

  LetterSet operator|(LetterSet o) const { return LetterSet(bits_ | o.bits_); }
  LetterSet operator&(LetterSet o) const { return LetterSet(bits_ & o.bits_); }
  LetterSet& operator|=(LetterSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  bool subset_of(LetterSet o) const { return (bits_ & ~o.bits_) == 0; }

  /// `{a,b}`, `{}` for the empty set.
  std::string to_string(const Alphabet& alphabet) const;
  /// Accepts `{a,b}`, `{ab}` and `{}`.
  static LetterSet parse(std::string_view text, const Alphabet& alphabet);

  friend auto operator<=>(const LetterSet&, const LetterSet&) = default;

 private:
  std::uint32_t bits_ = 0;
};

/// One letter set per colour of a colouring of ℕ.
using Profile = std::vector<LetterSet>;

/// `{a}|{b}|{}`
std::string format_profile(const Profile& profile, const Alphabet& alphabet);
Profile parse_profile(std::string_view text, const Alphabet& alphabet);

/// Positions tuples of `w` carrying `letters` coordinatewise (arity = size of
/// `letters`), in lexicographic order.
std::vector<Tuple> content(const Alphabet& alphabet, const Word& w, std::string_view letters);

/// ⟨w, Q⟩ for Q ⊆ ℕ.
LetterSet content_on(const Alphabet& alphabet, const Word& w, const UPSet& q);

/// ⟨w, Q⟩ for Q ⊆ ℕ^k: the letter tuples (as strings of length k) occurring
/// at a tuple of positions inside Q.
std::set<std::string> content_on(const Word& w, const SetExpr& q);

/// ⟨w, q⟩ for a colouring of ℕ.
Profile profile(const Alphabet& alphabet, const Word& w, const Colouring& q);

/// ⟨w, q⟩ for a window colouring of ℕ^k. Throws when the window is shorter
/// than the word or a tuple has no colour.
std::vector<std::set<std::string>> profile(const Word& w, const WindowColouring& q);

/// Colour of every position 0..n-1 under `q`, for hot loops.
std::vector<std::size_t> colour_table(const Colouring& q, std::size_t n);

/// Profile computed from a precomputed colour table (which must cover |w|).
Profile profile(const Alphabet& alphabet, const Word& w, const std::vector<std::size_t>& colours,
                std::size_t colour_count);

/// Calls `fn(w)` on every word of length <= max_len in shortlex order
/// (length first, then lexicographic in alphabet order).
template <typename Fn>
void for_each_word(const Alphabet& alphabet, std::size_t max_len, Fn&& fn) {
  for (std::size_t n = 0; n <= max_len; ++n) {
    std::vector<std::size_t> digits(n, 0);
    Word w(n, alphabet.letter(0));
    while (true) {
      fn(static_cast<const Word&>(w));
      bool exhausted = true;
      for (std::size_t i = n; i-- > 0;) {
        if (++digits[i] < alphabet.size()) {
          w[i] = alphabet.letter(digits[i]);
          exhausted = false;
          break;
        }
        digits[i] = 0;
        w[i] = alphabet.letter(0);
      }
      if (exhausted) break;
    }
  }
}

}  // namespace wordlogic

#endif  // WORDLOGIC_WORDS_HPP
