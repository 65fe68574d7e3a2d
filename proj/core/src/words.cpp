#include "wordlogic/words.hpp"

#include <bit>

#include "wordlogic/error.hpp"
#include "wordlogic/text.hpp"

namespace wordlogic {

Alphabet::Alphabet(std::string_view letters) : letters_(letters) {
  if (letters_.empty()) throw Error("an alphabet needs at least one letter");
  if (letters_.size() > max_letters) throw Error("alphabets are limited to 16 letters");
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    char c = letters_[i];
    if (c == '{' || c == '}' || c == '|' || c == ',' || c == ' ' || c == '(' || c == ')') {
      throw Error(std::string("'") + c + "' cannot be used as a letter");
    }
    if (letters_.find(c) != i) throw Error(std::string("duplicate letter '") + c + "' in alphabet");
  }
}

Alphabet Alphabet::parse_declaration(std::string_view line) {
  std::vector<std::string_view> parts = text::words(line);
  if (parts.size() != 2 || parts[0] != "alphabet") {
    throw ParseError("expected 'alphabet <letters>'", 0, 0);
  }
  return Alphabet(parts[1]);
}

std::optional<std::size_t> Alphabet::index_of(char c) const {
  std::size_t i = letters_.find(c);
  if (i == std::string::npos) return std::nullopt;
  return i;
}

std::size_t Alphabet::require(char c) const {
  auto i = index_of(c);
  if (!i) throw Error(std::string("letter '") + c + "' is not in the alphabet '" + letters_ + "'");
  return *i;
}

void Alphabet::check_word(std::string_view w) const {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!contains(w[i])) {
      throw Error(std::string("letter '") + w[i] + "' at position " + std::to_string(i) +
                  " is not in the alphabet '" + letters_ + "'");
    }
  }
}

std::size_t LetterSet::size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

std::size_t LetterSet::first() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

std::string LetterSet::to_string(const Alphabet& alphabet) const {
  std::string out = "{";
  bool first_item = true;
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    if (!contains(i)) continue;
    if (!first_item) out += ",";
    out += alphabet.letter(i);
    first_item = false;
  }
  return out + "}";
}

LetterSet LetterSet::parse(std::string_view text, const Alphabet& alphabet) {
  text = text::trim(text);
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
    throw ParseError("letter set must be written {a,b}", 0, 0);
  }
  LetterSet out;
  for (char c : text.substr(1, text.size() - 2)) {
    if (c == ',' || c == ' ') continue;
    out.insert(alphabet.require(c));
  }
  return out;
}

std::string format_profile(const Profile& profile, const Alphabet& alphabet) {
  std::string out;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (i > 0) out += "|";
    out += profile[i].to_string(alphabet);
  }
  return out;
}

Profile parse_profile(std::string_view text, const Alphabet& alphabet) {
  Profile out;
  for (std::string_view part : text::split(text::trim(text), '|')) {
    out.push_back(LetterSet::parse(part, alphabet));
  }
  return out;
}

std::vector<Tuple> content(const Alphabet& alphabet, const Word& w, std::string_view letters) {
  if (letters.empty()) throw Error("content needs a letter tuple of arity >= 1");
  for (char c : letters) alphabet.require(c);
  std::vector<Tuple> out;
  for_each_tuple(w.size(), letters.size(), [&](const Tuple& t) {
    for (std::size_t m = 0; m < t.size(); ++m) {
      if (w[t[m]] != letters[m]) return true;
    }
    out.push_back(t);
    return true;
  });
  return out;
}

LetterSet content_on(const Alphabet& alphabet, const Word& w, const UPSet& q) {
  LetterSet out;
  for (std::size_t n = 0; n < w.size(); ++n) {
    if (q.contains(n)) out.insert(alphabet.require(w[n]));
  }
  return out;
}

std::set<std::string> content_on(const Word& w, const SetExpr& q) {
  std::set<std::string> out;
  std::string letters(q.arity(), ' ');
  for_each_tuple(w.size(), q.arity(), [&](const Tuple& t) {
    if (!q.contains(t)) return true;
    for (std::size_t m = 0; m < t.size(); ++m) letters[m] = w[t[m]];
    out.insert(letters);
    return true;
  });
  return out;
}

Profile profile(const Alphabet& alphabet, const Word& w, const Colouring& q) {
  Profile out(q.size());
  for (std::size_t n = 0; n < w.size(); ++n) out[q.colour_of(n)].insert(alphabet.require(w[n]));
  return out;
}

std::vector<std::set<std::string>> profile(const Word& w, const WindowColouring& q) {
  if (q.window() < w.size()) {
    throw Error("window of size " + std::to_string(q.window()) + " is too small for a word of length " +
                std::to_string(w.size()));
  }
  std::vector<std::set<std::string>> out(q.size());
  std::string letters(q.dimension(), ' ');
  for_each_tuple(w.size(), q.dimension(), [&](const Tuple& t) {
    auto colour = q.colour_of(t);
    if (!colour) throw Error("tuple without a colour in window colouring");
    for (std::size_t m = 0; m < t.size(); ++m) letters[m] = w[t[m]];
    out[*colour].insert(letters);
    return true;
  });
  return out;
}

std::vector<std::size_t> colour_table(const Colouring& q, std::size_t n) {
  std::vector<std::size_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = q.colour_of(i);
  return out;
}

Profile profile(const Alphabet& alphabet, const Word& w, const std::vector<std::size_t>& colours,
                std::size_t colour_count) {
  Profile out(colour_count);
  for (std::size_t n = 0; n < w.size(); ++n) out[colours[n]].insert(alphabet.require(w[n]));
  return out;
}

}  // namespace wordlogic
