#include "wordlogic/recogniser.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <utility>

#include "wordlogic/text.hpp"

namespace wordlogic {

namespace {

std::uint32_t letter_mask(const Alphabet& a) { return (1u << a.size()) - 1; }

// Coarse code from a refined code, merging refined cell j into cell map[j].
std::uint32_t project(std::uint32_t refined, const std::vector<std::size_t>& map, std::size_t width,
                      std::uint32_t mask) {
  std::uint32_t out = 0;
  for (std::size_t j = 0; j < map.size(); ++j) {
    out |= ((refined >> (width * j)) & mask) << (width * map[j]);
  }
  return out;
}

}  // namespace

std::size_t Recogniser1::code_space(const Alphabet& alphabet, const Colouring& colouring) {
  std::size_t bits = alphabet.size() * colouring.size();
  if (bits > max_code_bits) {
    throw Error("recogniser too large: " + std::to_string(colouring.size()) + " colours over " +
                std::to_string(alphabet.size()) + " letters exceeds " + std::to_string(max_code_bits) +
                " profile bits");
  }
  return std::size_t{1} << bits;
}

Recogniser1::Recogniser1(Alphabet alphabet, Colouring colouring, std::vector<bool> accepted)
    : alphabet_(std::move(alphabet)), colouring_(std::move(colouring)), accepted_(std::move(accepted)) {}

Recogniser1::Recogniser1(Alphabet alphabet, Colouring colouring, const std::vector<Profile>& accepted)
    : alphabet_(std::move(alphabet)), colouring_(std::move(colouring)) {
  accepted_.assign(code_space(alphabet_, colouring_), false);
  for (const Profile& p : accepted) accepted_[code(p)] = true;
}

Recogniser1 Recogniser1::everything(Alphabet alphabet, Colouring colouring) {
  std::size_t n = code_space(alphabet, colouring);
  return Recogniser1(std::move(alphabet), std::move(colouring), std::vector<bool>(n, true));
}

Recogniser1 Recogniser1::from_profile(Alphabet alphabet, Colouring colouring, const Profile& profile) {
  return Recogniser1(std::move(alphabet), std::move(colouring), std::vector<Profile>{profile});
}

Recogniser1 Recogniser1::from_predicate(Alphabet alphabet, Colouring colouring,
                                        const std::function<bool(const Profile&)>& pred) {
  Recogniser1 r(std::move(alphabet), std::move(colouring), std::vector<Profile>{});
  for (std::uint32_t c = 0; c < r.accepted_.size(); ++c) r.accepted_[c] = pred(r.decode(c));
  return r;
}

Recogniser1 Recogniser1::from_generator(Alphabet alphabet, char a, const UPSet& q) {
  std::size_t letter = alphabet.require(a);
  Colouring colouring = split_by(q);
  // After split_by, cell 0 is q unless q was empty (then the only cell is ℕ).
  bool cell0_in_q = !q.is_empty();
  return from_predicate(std::move(alphabet), std::move(colouring),
                        [&](const Profile& p) { return cell0_in_q && p[0].contains(letter); });
}

std::uint32_t Recogniser1::code(const Profile& p) const {
  if (p.size() != colouring_.size()) {
    throw Error("profile has " + std::to_string(p.size()) + " components but the colouring has " +
                std::to_string(colouring_.size()) + " cells");
  }
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!p[i].subset_of(LetterSet::full(alphabet_))) throw Error("profile uses letters outside the alphabet");
    out |= p[i].bits() << (alphabet_.size() * i);
  }
  return out;
}

Profile Recogniser1::decode(std::uint32_t code) const {
  Profile p(colouring_.size());
  std::uint32_t mask = letter_mask(alphabet_);
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = LetterSet((code >> (alphabet_.size() * i)) & mask);
  return p;
}

bool Recogniser1::membership(const Word& w) const { return accepted_[code(profile(alphabet_, w, colouring_))]; }

bool Recogniser1::accepts(const Profile& p) const { return accepted_[code(p)]; }

std::vector<Profile> Recogniser1::accepted() const {
  std::vector<Profile> out;
  for (std::uint32_t c = 0; c < accepted_.size(); ++c) {
    if (accepted_[c]) out.push_back(decode(c));
  }
  return out;
}

MembershipOracle Recogniser1::oracle() const {
  return [r = *this](const Word& w) { return r.membership(w); };
}

Recogniser1 Recogniser1::complement() const {
  std::vector<bool> flipped = accepted_;
  flipped.flip();
  return Recogniser1(alphabet_, colouring_, std::move(flipped));
}

std::string Recogniser1::to_string() const {
  std::string out = alphabet_.declaration() + "\ncolouring " + colouring_.to_string() + "\n";
  for (std::uint32_t c = 0; c < accepted_.size(); ++c) {
    if (accepted_[c]) out += "accept " + format_profile(decode(c), alphabet_) + "\n";
  }
  return out;
}

Recogniser1 Recogniser1::parse(std::string_view text) {
  std::optional<Alphabet> alphabet;
  std::optional<Colouring> colouring;
  std::vector<Profile> accepted;
  std::vector<std::string_view> all = text::lines(text);
  for (std::size_t i = 0; i < all.size(); ++i) {
    std::string_view line = text::trim(all[i]);
    if (text::is_blank_or_comment(line)) continue;
    std::size_t number = i + 1;
    std::size_t space = line.find(' ');
    std::string_view key = line.substr(0, space);
    std::string_view rest = space == std::string_view::npos ? std::string_view{} : text::trim(line.substr(space));
    try {
      if (key == "alphabet") {
        if (alphabet) throw Error("alphabet declared twice");
        alphabet = Alphabet::parse_declaration(line);
      } else if (key == "colouring") {
        if (!alphabet) throw Error("the alphabet line must come first");
        if (colouring) throw Error("colouring declared twice");
        colouring = Colouring::parse(rest);
      } else if (key == "accept") {
        if (!colouring) throw Error("'accept' before the colouring line");
        Profile p = parse_profile(rest, *alphabet);
        if (p.size() != colouring->size()) {
          throw Error("profile has " + std::to_string(p.size()) + " components, expected " +
                      std::to_string(colouring->size()));
        }
        accepted.push_back(std::move(p));
      } else {
        throw Error("unknown directive '" + std::string(key) + "'");
      }
    } catch (const ParseError& e) {
      throw ParseError(e.what(), number, e.column());
    } catch (const Error& e) {
      throw ParseError(e.what(), number, 0);
    }
  }
  if (!alphabet || !colouring) throw ParseError("recogniser file needs 'alphabet' and 'colouring' lines", 0, 0);
  return Recogniser1(std::move(*alphabet), std::move(*colouring), accepted);
}

namespace {

template <typename Op>
Recogniser1 combine(const Recogniser1& lhs, const Recogniser1& rhs, Op op) {
  if (!(lhs.alphabet() == rhs.alphabet())) throw Error("recognisers use different alphabets");
  Refinement ref = refine(lhs.colouring(), rhs.colouring());
  std::size_t width = lhs.alphabet().size();
  std::uint32_t mask = letter_mask(lhs.alphabet());
  return Recogniser1::from_predicate(lhs.alphabet(), ref.colouring, [&](const Profile& p) {
    std::uint32_t c = 0;
    for (std::size_t j = 0; j < p.size(); ++j) c |= p[j].bits() << (width * j);
    return op(lhs.accepts_code(project(c, ref.to_first, width, mask)),
              rhs.accepts_code(project(c, ref.to_second, width, mask)));
  });
}

}  // namespace

Recogniser1 union_of(const Recogniser1& lhs, const Recogniser1& rhs) {
  return combine(lhs, rhs, [](bool x, bool y) { return x || y; });
}

Recogniser1 intersection(const Recogniser1& lhs, const Recogniser1& rhs) {
  return combine(lhs, rhs, [](bool x, bool y) { return x && y; });
}

Recogniser1 complement(const Recogniser1& r) { return r.complement(); }

// ---------------------------------------------------------------- achievability

std::optional<std::size_t> minimal_length(const Colouring& colouring, const Profile& profile) {
  if (profile.size() != colouring.size()) throw Error("profile length does not match the colouring");
  std::size_t letters = 0;
  for (const LetterSet& b : profile) letters += b.size();
  std::size_t bound = colouring.threshold() + colouring.period() * (1 + letters);
  std::vector<std::size_t> counts(colouring.size(), 0);
  for (std::size_t n = 0;; ++n) {
    bool ok = true;
    for (std::size_t i = 0; i < counts.size() && ok; ++i) {
      ok = (profile[i].empty() == (counts[i] == 0)) && counts[i] >= profile[i].size();
    }
    if (ok) return n;
    if (n == bound) return std::nullopt;
    ++counts[colouring.colour_of(n)];
  }
}

bool achievable(const Colouring& colouring, const Profile& profile) {
  return minimal_length(colouring, profile).has_value();
}

std::optional<Word> realize(const Alphabet& alphabet, const Colouring& colouring, const Profile& profile) {
  auto n = minimal_length(colouring, profile);
  if (!n) return std::nullopt;
  Word w(*n, ' ');
  std::vector<std::size_t> used(colouring.size(), 0);
  for (std::size_t pos = 0; pos < *n; ++pos) {
    std::size_t c = colouring.colour_of(pos);
    const LetterSet& b = profile[c];
    std::size_t k = used[c]++;
    std::size_t letter = b.first();
    for (std::size_t i = 0, seen = 0; i < alphabet.size(); ++i) {
      if (!b.contains(i)) continue;
      if (seen++ == k) {
        letter = i;
        break;
      }
    }
    w[pos] = alphabet.letter(letter);
  }
  return w;
}

void for_each_achievable(const Alphabet& alphabet, const Colouring& colouring,
                         const std::function<void(const Profile&, std::size_t)>& fn) {
  std::size_t ell = colouring.size();
  std::size_t k = alphabet.size();
  if (k * ell > Recogniser1::max_code_bits) throw Error("too many profile bits to enumerate");
  // Letter sets grouped by size, so a cell with c positions ranges over sets
  // of size 1..min(c, |A|).
  std::vector<std::vector<std::uint32_t>> by_size(k + 1);
  for (std::uint32_t m = 0; m < (1u << k); ++m) by_size[static_cast<std::size_t>(std::popcount(m))].push_back(m);

  std::vector<bool> seen(std::size_t{1} << (k * ell), false);
  std::set<std::vector<std::size_t>> signatures;
  std::vector<std::size_t> counts(ell, 0);
  std::size_t bound = colouring.threshold() + colouring.period() * (k + 1);
  std::vector<std::uint32_t> options_flat;
  for (std::size_t n = 0; n <= bound; ++n) {
    if (n > 0) ++counts[colouring.colour_of(n - 1)];
    std::vector<std::size_t> capped(ell);
    for (std::size_t i = 0; i < ell; ++i) capped[i] = std::min(counts[i], k);
    if (!signatures.insert(capped).second) continue;

    std::vector<std::vector<std::uint32_t>> options(ell);
    for (std::size_t i = 0; i < ell; ++i) {
      if (capped[i] == 0) {
        options[i] = {0};
        continue;
      }
      for (std::size_t s = 1; s <= capped[i]; ++s) {
        options[i].insert(options[i].end(), by_size[s].begin(), by_size[s].end());
      }
      std::sort(options[i].begin(), options[i].end());
    }
    // Odometer over the options, last cell most significant so codes ascend.
    std::vector<std::size_t> idx(ell, 0);
    std::vector<std::pair<std::uint32_t, Profile>> batch;
    while (true) {
      std::uint32_t c = 0;
      for (std::size_t i = 0; i < ell; ++i) c |= options[i][idx[i]] << (k * i);
      if (!seen[c]) {
        seen[c] = true;
        Profile p(ell);
        for (std::size_t i = 0; i < ell; ++i) p[i] = LetterSet(options[i][idx[i]]);
        batch.emplace_back(c, std::move(p));
      }
      std::size_t i = 0;
      while (i < ell && ++idx[i] == options[i].size()) idx[i++] = 0;
      if (i == ell) break;
    }
    std::sort(batch.begin(), batch.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [c, p] : batch) fn(p, n);
  }
}

Equivalence equivalent(const Recogniser1& lhs, const Recogniser1& rhs) {
  if (!(lhs.alphabet() == rhs.alphabet())) throw Error("recognisers use different alphabets");
  Refinement ref = refine(lhs.colouring(), rhs.colouring());
  std::size_t width = lhs.alphabet().size();
  std::uint32_t mask = letter_mask(lhs.alphabet());
  Equivalence out;
  for_each_achievable(lhs.alphabet(), ref.colouring, [&](const Profile& p, std::size_t) {
    if (!out.equivalent) return;
    std::uint32_t c = 0;
    for (std::size_t j = 0; j < p.size(); ++j) c |= p[j].bits() << (width * j);
    bool x = lhs.accepts_code(project(c, ref.to_first, width, mask));
    bool y = rhs.accepts_code(project(c, ref.to_second, width, mask));
    if (x != y) {
      out.equivalent = false;
      out.separator = realize(lhs.alphabet(), ref.colouring, p);
    }
  });
  return out;
}

// ---------------------------------------------------------------- compile

Recogniser1 compile(const Formula& sentence, const Alphabet& alphabet, const Registry& registry) {
  if (!sentence.is_sentence()) throw Error("compile needs a sentence without free variables");
  GeneratorExpr expr = sentence_to_generators(sentence, alphabet, registry);
  std::vector<UPSet> sets;
  for (const Generator& g : expr.generators()) {
    if (g.letters.size() != 1) {
      throw Error("compile supports only quantifier blocks binding a single variable");
    }
    auto q = g.set.as_upset();
    if (!q) throw Error("compile needs unary predicates");
    if (std::find(sets.begin(), sets.end(), *q) == sets.end()) sets.push_back(*q);
  }
  Colouring colouring;
  for (const UPSet& q : sets) colouring = refine(colouring, split_by(q)).colouring;

  // Each refined cell lies inside or outside every generator set.
  std::map<UPSet, std::vector<std::size_t>> inside;
  for (const UPSet& q : sets) {
    for (std::size_t j = 0; j < colouring.size(); ++j) {
      if ((colouring.cell(j) - q).is_empty()) inside[q].push_back(j);
    }
  }
  return Recogniser1::from_predicate(alphabet, colouring, [&](const Profile& p) {
    return expr.eval_with([&](const Generator& g) {
      std::size_t letter = alphabet.require(g.letters[0]);
      const auto& cells = inside[*g.set.as_upset()];
      return std::any_of(cells.begin(), cells.end(), [&](std::size_t j) { return p[j].contains(letter); });
    });
  });
}

Recogniser1 synthesize(const MembershipOracle& oracle, const Alphabet& alphabet, const Colouring& colouring,
                       std::size_t len_bound) {
  std::vector<Profile> accepted;
  for_each_achievable(alphabet, colouring, [&](const Profile& p, std::size_t n) {
    if (n > len_bound) return;
    if (oracle(*realize(alphabet, colouring, p))) accepted.push_back(p);
  });
  return Recogniser1(alphabet, colouring, accepted);
}

Recogniser1 reduce(const Recogniser1& r) {
  Recogniser1 cur = r;
  std::size_t width = r.alphabet().size();
  std::uint32_t mask = letter_mask(r.alphabet());
  bool merged = true;
  while (merged && cur.colouring().size() > 1) {
    merged = false;
    std::size_t ell = cur.colouring().size();
    for (std::size_t i = 0; i < ell && !merged; ++i) {
      for (std::size_t j = i + 1; j < ell && !merged; ++j) {
        // Cell j folds into cell i; later cells shift down by one.
        std::vector<std::size_t> map(ell);
        for (std::size_t m = 0; m < ell; ++m) map[m] = m == j ? i : (m > j ? m - 1 : m);
        std::vector<std::int8_t> verdict(std::size_t{1} << (width * (ell - 1)), -1);
        bool saturated = true;
        for (std::uint32_t c = 0; c < cur.profile_count() && saturated; ++c) {
          std::int8_t& v = verdict[project(c, map, width, mask)];
          std::int8_t a = cur.accepts_code(c) ? 1 : 0;
          if (v == -1) v = a;
          saturated = v == a;
        }
        if (!saturated) continue;
        std::vector<UPSet> cells;
        for (std::size_t m = 0; m < ell; ++m) {
          if (m == j) continue;
          cells.push_back(m == i ? cur.colouring().cell(i) | cur.colouring().cell(j) : cur.colouring().cell(m));
        }
        Colouring coarse(std::move(cells));
        cur = Recogniser1::from_predicate(cur.alphabet(), coarse, [&](const Profile& p) {
          std::uint32_t c = 0;
          for (std::size_t m = 0; m < p.size(); ++m) c |= p[m].bits() << (width * m);
          return verdict[c] == 1;
        });
        merged = true;
      }
    }
  }
  return cur;
}

}  // namespace wordlogic
