#include "wordlogic/rewrite.hpp"

#include <algorithm>
#include <map>

#include "wordlogic/equations.hpp"
#include "wordlogic/text.hpp"

namespace wordlogic {

RewriteStep RewriteStep::swap(std::size_t j1, std::size_t j2, char a, char b) {
  return {Kind::swap, {j1, j2}, a, b, Direction::forward};
}

RewriteStep RewriteStep::dup(std::size_t j1, std::size_t j2, std::size_t j3, char a, char b, Direction d) {
  return {Kind::dup, {j1, j2, j3}, a, b, d};
}

RewriteStep RewriteStep::append(std::size_t j, char a, Direction d) { return {Kind::append, {j}, a, 0, d}; }

RewriteStep RewriteStep::inverse() const {
  RewriteStep out = *this;
  if (kind == Kind::swap) {
    std::swap(out.a, out.b);
  } else {
    out.direction = direction == Direction::forward ? Direction::backward : Direction::forward;
  }
  return out;
}

std::string RewriteStep::to_string() const {
  std::string out;
  switch (kind) {
    case Kind::swap:
      out = "swap";
      break;
    case Kind::dup:
      out = "dup";
      break;
    case Kind::append:
      out = "append";
      break;
  }
  for (std::size_t p : positions) out += " " + std::to_string(p);
  out += std::string(" ") + a;
  if (kind != Kind::append) out += std::string(" ") + b;
  if (kind != Kind::swap) out += direction == Direction::forward ? " fwd" : " bwd";
  return out;
}

RewriteStep RewriteStep::parse(std::string_view line) {
  std::vector<std::string_view> t = text::words(line);
  auto letter = [&](std::string_view s) {
    if (s.size() != 1) throw ParseError("expected a single letter, got '" + std::string(s) + "'", 0, 0);
    return s[0];
  };
  auto direction = [&](std::string_view s) {
    if (s == "fwd") return Direction::forward;
    if (s == "bwd") return Direction::backward;
    throw ParseError("expected 'fwd' or 'bwd', got '" + std::string(s) + "'", 0, 0);
  };
  if (!t.empty() && t[0] == "swap" && t.size() == 5) {
    return swap(text::parse_size(t[1]), text::parse_size(t[2]), letter(t[3]), letter(t[4]));
  }
  if (!t.empty() && t[0] == "dup" && t.size() == 7) {
    return dup(text::parse_size(t[1]), text::parse_size(t[2]), text::parse_size(t[3]), letter(t[4]), letter(t[5]),
               direction(t[6]));
  }
  if (!t.empty() && t[0] == "append" && t.size() == 4) {
    return append(text::parse_size(t[1]), letter(t[2]), direction(t[3]));
  }
  throw ParseError("expected 'swap j1 j2 a b', 'dup j1 j2 j3 a b fwd|bwd' or 'append j a fwd|bwd'", 0, 0);
}

namespace {

void require(bool ok, const RewriteStep& s, const std::string& why) {
  if (!ok) throw StepError("step '" + s.to_string() + "' does not apply: " + why);
}

void require_positions(const Word& w, const RewriteStep& s, const Colouring& q) {
  const auto& p = s.positions;
  for (std::size_t i = 0; i < p.size(); ++i) {
    require(p[i] < w.size(), s, "position " + std::to_string(p[i]) + " is outside the word");
    for (std::size_t j = 0; j < i; ++j) require(p[i] != p[j], s, "positions are not distinct");
    require(q.colour_of(p[i]) == q.colour_of(p[0]), s, "positions have different colours");
  }
}

}  // namespace

Word apply_step(const Word& w, const RewriteStep& s, const Colouring& q) {
  using K = RewriteStep::Kind;
  bool fwd = s.direction == RewriteStep::Direction::forward;
  switch (s.kind) {
    case K::swap: {
      require(s.positions.size() == 2, s, "swap takes two positions");
      require_positions(w, s, q);
      require(w[s.positions[0]] == s.a && w[s.positions[1]] == s.b, s, "letters do not match");
      return substitute(w, s.positions, std::string{s.b, s.a});
    }
    case K::dup: {
      require(s.positions.size() == 3, s, "dup takes three positions");
      require_positions(w, s, q);
      std::string before = fwd ? std::string{s.a, s.a, s.b} : std::string{s.a, s.b, s.b};
      std::string after = fwd ? std::string{s.a, s.b, s.b} : std::string{s.a, s.a, s.b};
      require(substitute(w, s.positions, before) == w, s, "letters do not match");
      return substitute(w, s.positions, after);
    }
    case K::append: {
      require(s.positions.size() == 1, s, "append takes one position");
      std::size_t j = s.positions[0];
      if (fwd) {
        require(j < w.size(), s, "position is outside the word");
        require(w[j] == s.a, s, "letter does not match");
        require(q.colour_of(j) == q.colour_of(w.size()), s, "colour of the position differs from colour of |w|");
        return w + s.a;
      }
      require(!w.empty() && w.back() == s.a, s, "word does not end in the letter");
      std::size_t last = w.size() - 1;
      require(j < last, s, "position must precede the last letter");
      require(w[j] == s.a, s, "letter does not match");
      require(q.colour_of(j) == q.colour_of(last), s, "colour of the position differs from colour of |w|-1");
      return w.substr(0, last);
    }
  }
  return w;
}

std::string RewriteChain::to_string() const {
  std::string out = alphabet.declaration() + "\ncolouring " + colouring.to_string() + "\n";
  out += source.empty() ? "from\n" : "from " + source + "\n";
  out += target.empty() ? "to\n" : "to " + target + "\n";
  for (const RewriteStep& s : steps) out += s.to_string() + "\n";
  return out;
}

RewriteChain RewriteChain::parse(std::string_view text) {
  RewriteChain out;
  bool have_colouring = false;
  std::optional<Word> from;
  std::optional<Word> to;
  std::vector<std::string_view> all = text::lines(text);
  for (std::size_t i = 0; i < all.size(); ++i) {
    std::string_view line = text::trim(all[i]);
    if (text::is_blank_or_comment(line)) continue;
    std::size_t number = i + 1;
    std::vector<std::string_view> t = text::words(line);
    try {
      if (t[0] == "alphabet") {
        out.alphabet = Alphabet::parse_declaration(line);
      } else if (t[0] == "colouring") {
        out.colouring = Colouring::parse(text::trim(line.substr(9)));
        have_colouring = true;
      } else if (t[0] == "from" || t[0] == "to") {
        if (t.size() > 2) throw Error("expected a single word");
        (t[0] == "from" ? from : to) = t.size() == 2 ? Word(t[1]) : Word();
      } else {
        out.steps.push_back(RewriteStep::parse(line));
      }
    } catch (const ParseError& e) {
      throw ParseError(e.what(), number, e.column());
    } catch (const Error& e) {
      throw ParseError(e.what(), number, 0);
    }
  }
  if (!have_colouring || !from || !to) {
    throw ParseError("chain file needs 'colouring', 'from' and 'to' lines", 0, 0);
  }
  out.alphabet.check_word(*from);
  out.alphabet.check_word(*to);
  out.source = *from;
  out.target = *to;
  return out;
}

namespace {

// Chain from a word to a word at least as long, both with the same profile.
std::vector<RewriteStep> grow_and_sort(const Alphabet& alphabet, const Colouring& q, const Word& w,
                                       const Word& w2) {
  std::vector<RewriteStep> steps;
  Word cur = w;

  // Extend: a letter at position n has a same-colour occurrence in w.
  for (std::size_t n = w.size(); n < w2.size(); ++n) {
    std::size_t c = q.colour_of(n);
    std::size_t j = 0;
    while (j < w.size() && !(w[j] == w2[n] && q.colour_of(j) == c)) ++j;
    if (j == w.size()) throw Error("internal: no witness position for append");
    steps.push_back(RewriteStep::append(j, w2[n]));
    cur = apply_step(cur, steps.back(), q);
  }

  std::map<std::size_t, std::vector<std::size_t>> cells;
  for (std::size_t p = 0; p < cur.size(); ++p) cells[q.colour_of(p)].push_back(p);

  for (const auto& [colour, positions] : cells) {
    // Match letter multiplicities, smallest letters first.
    while (true) {
      std::map<std::size_t, long> diff;
      for (std::size_t p : positions) {
        ++diff[alphabet.require(cur[p])];
        --diff[alphabet.require(w2[p])];
      }
      auto over = std::find_if(diff.begin(), diff.end(), [](const auto& e) { return e.second > 0; });
      if (over == diff.end()) break;
      auto under = std::find_if(diff.begin(), diff.end(), [](const auto& e) { return e.second < 0; });
      char a = alphabet.letter(over->first);
      char b = alphabet.letter(under->first);
      std::vector<std::size_t> as;
      std::size_t jb = cur.size();
      for (std::size_t p : positions) {
        if (cur[p] == a) as.push_back(p);
        if (cur[p] == b && jb == cur.size()) jb = p;
      }
      steps.push_back(RewriteStep::dup(as[0], as[1], jb, a, b));
      cur = apply_step(cur, steps.back(), q);
    }
    // Sort by transpositions.
    for (std::size_t i = 0; i < positions.size(); ++i) {
      std::size_t p = positions[i];
      if (cur[p] == w2[p]) continue;
      std::size_t k = i + 1;
      while (cur[positions[k]] != w2[p]) ++k;
      steps.push_back(RewriteStep::swap(p, positions[k], cur[p], cur[positions[k]]));
      cur = apply_step(cur, steps.back(), q);
    }
  }
  if (cur != w2) throw Error("internal: chain does not reach the target");
  return steps;
}

}  // namespace

RewriteChain witness_chain(const Alphabet& alphabet, const Colouring& q, const Word& w, const Word& w2) {
  alphabet.check_word(w);
  alphabet.check_word(w2);
  Profile p1 = profile(alphabet, w, q);
  Profile p2 = profile(alphabet, w2, q);
  for (std::size_t i = 0; i < p1.size(); ++i) {
    if (p1[i] != p2[i]) throw ProfileMismatch(i);
  }
  RewriteChain chain{alphabet, q, w, w2, {}};
  if (w.size() <= w2.size()) {
    chain.steps = grow_and_sort(alphabet, q, w, w2);
  } else {
    std::vector<RewriteStep> back = grow_and_sort(alphabet, q, w2, w);
    for (auto it = back.rbegin(); it != back.rend(); ++it) chain.steps.push_back(it->inverse());
  }
  return chain;
}

ChainCheck verify_chain(const RewriteChain& chain, const MembershipOracle& oracle) {
  const Colouring& q = chain.colouring;
  Word cur = chain.source;
  Profile expected = profile(chain.alphabet, cur, q);
  std::optional<bool> member;
  if (oracle) member = oracle(cur);
  for (std::size_t i = 0; i < chain.steps.size(); ++i) {
    try {
      cur = apply_step(cur, chain.steps[i], q);
    } catch (const StepError& e) {
      return {false, i, e.what()};
    }
    if (profile(chain.alphabet, cur, q) != expected) return {false, i, "profile changes after this step"};
    if (member && oracle(cur) != *member) return {false, i, "membership changes after this step"};
  }
  if (cur != chain.target) {
    return {false, chain.steps.size(), "replay ends at '" + cur + "' instead of '" + chain.target + "'"};
  }
  return {};
}

}  // namespace wordlogic
