#include "wordlogic/pseudofinite.hpp"

#include <algorithm>

#include "wordlogic/error.hpp"
#include "wordlogic/recogniser.hpp"
#include "wordlogic/text.hpp"

namespace wordlogic {

UPSet periodic_part(const UPSet& s) {
  std::size_t p = s.period();
  std::size_t shift = (s.threshold() + p - 1) / p * p;
  std::vector<bool> cycle(p);
  for (std::size_t i = 0; i < p; ++i) cycle[i] = s.contains(shift + i);
  return UPSet({}, cycle);
}

ClosedExpr ClosedExpr::hat(const UPSet& q) {
  ClosedExpr e;
  e.hat_ = q;
  e.normalise();
  return e;
}

ClosedExpr ClosedExpr::star(const UPSet& r) {
  ClosedExpr e;
  e.star_ = r;
  e.normalise();
  return e;
}

ClosedExpr ClosedExpr::operator+(const ClosedExpr& other) const {
  ClosedExpr e = *this;
  if (other.hat_) e.hat_ = e.hat_ ? *e.hat_ | *other.hat_ : *other.hat_;
  if (other.star_) e.star_ = e.star_ ? *e.star_ | *other.star_ : *other.star_;
  e.normalise();
  return e;
}

void ClosedExpr::normalise() {
  if (hat_ && hat_->is_empty()) hat_.reset();
  if (star_) {
    UPSet r = hat_ ? *star_ - *hat_ : *star_;
    r = periodic_part(r);
    if (r.is_empty()) {
      star_.reset();
    } else {
      star_ = r;
    }
  }
}

UPSet ClosedExpr::content() const { return hat_ ? *hat_ : UPSet::empty(); }

bool ClosedExpr::meets_clopen(const UPSet& q) const {
  if (hat_ && !(*hat_ & q).is_empty()) return true;
  return star_ && intersection_infinite(*star_, q);
}

std::string ClosedExpr::to_string() const {
  if (is_empty()) return "0";
  std::string out;
  if (hat_) out = "hat(" + hat_->to_string() + ")";
  if (star_) out += (out.empty() ? "" : " + ") + std::string("star(") + star_->to_string() + ")";
  return out;
}

ClosedExpr ClosedExpr::parse(std::string_view text) {
  ClosedExpr out;
  std::vector<std::string_view> terms = text::split_top_level(text::trim(text), '+');
  if (terms.empty()) throw ParseError("empty closed-set expression", 0, 0);
  for (std::string_view raw : terms) {
    std::string_view term = text::trim(raw);
    if (term == "0") continue;
    bool is_hat = term.starts_with("hat(");
    bool is_star = term.starts_with("star(");
    if ((!is_hat && !is_star) || term.back() != ')') {
      throw ParseError("expected hat(UPSET), star(UPSET) or 0, got '" + std::string(term) + "'", 0,
                       static_cast<std::size_t>(term.data() - text.data()));
    }
    std::size_t open = term.find('(');
    UPSet set = UPSet::parse(text::trim(term.substr(open + 1, term.size() - open - 2)));
    out = out + (is_hat ? hat(set) : star(set));
  }
  return out;
}

GeneralizedWord::GeneralizedWord(Alphabet alphabet)
    : alphabet_(std::move(alphabet)), components_(alphabet_.size()) {}

GeneralizedWord::GeneralizedWord(Alphabet alphabet, std::vector<ClosedExpr> components)
    : alphabet_(std::move(alphabet)), components_(std::move(components)) {
  if (components_.size() != alphabet_.size()) throw Error("one closed set per letter is required");
}

GeneralizedWord GeneralizedWord::parse(std::string_view text) {
  std::optional<Alphabet> alphabet;
  std::vector<std::pair<char, ClosedExpr>> entries;
  std::string order;
  std::vector<std::string_view> all = text::lines(text);
  for (std::size_t i = 0; i < all.size(); ++i) {
    std::string_view line = text::trim(all[i]);
    if (text::is_blank_or_comment(line)) continue;
    std::size_t number = i + 1;
    try {
      if (line.starts_with("alphabet ")) {
        if (alphabet || !entries.empty()) throw Error("the alphabet line must come first and only once");
        alphabet = Alphabet::parse_declaration(line);
        continue;
      }
      std::size_t eq = line.find('=');
      if (eq == std::string_view::npos) throw Error("expected 'LETTER = EXPR'");
      std::string_view lhs = text::trim(line.substr(0, eq));
      if (lhs.size() != 1) throw Error("left-hand side must be a single letter");
      char letter = lhs[0];
      if (alphabet) alphabet->require(letter);
      if (order.find(letter) != std::string::npos) throw Error(std::string("letter '") + letter + "' defined twice");
      order += letter;
      entries.emplace_back(letter, ClosedExpr::parse(line.substr(eq + 1)));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), number, e.column());
    } catch (const Error& e) {
      throw ParseError(e.what(), number, 0);
    }
  }
  if (!alphabet) {
    if (order.empty()) throw ParseError("generalized word file defines no letters", 0, 0);
    alphabet = Alphabet(order);
  }
  GeneralizedWord g(*alphabet);
  for (auto& [letter, e] : entries) g.set(letter, std::move(e));
  return g;
}

std::string GeneralizedWord::to_string() const {
  std::string out = alphabet_.declaration() + "\n";
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    out += std::string(1, alphabet_.letter(i)) + " = " + components_[i].to_string() + "\n";
  }
  return out;
}

Profile gw_profile(const GeneralizedWord& g, const Colouring& q) {
  Profile out(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t a = 0; a < g.alphabet().size(); ++a) {
      if (g.components()[a].meets_clopen(q.cell(i))) out[i].insert(a);
    }
  }
  return out;
}

bool content_criterion(const GeneralizedWord& g) {
  UPSet seen;
  for (const ClosedExpr& e : g.components()) {
    UPSet c = e.content();
    if (!(seen & c).is_empty()) return false;
    seen = seen | c;
  }
  return is_downset(seen);
}

WitnessResult word_witness(const GeneralizedWord& g, const Colouring& q) {
  Profile b = gw_profile(g, q);
  // Cells with letters give lower bounds on the length, empty cells upper ones.
  std::size_t lower = 0;
  std::size_t lower_cell = 0;
  std::optional<std::size_t> upper;
  std::size_t upper_cell = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    const UPSet& cell = q.cell(i);
    if (b[i].empty()) {
      if (auto m = cell.min(); m && (!upper || *m < *upper)) {
        upper = *m;
        upper_cell = i;
      }
      continue;
    }
    auto last = cell.nth(b[i].size() - 1);
    if (!last) {
      return Infeasible{i, std::nullopt, 0, std::nullopt,
                        "cell " + std::to_string(i) + " needs " + std::to_string(b[i].size()) +
                            " letters but has fewer positions"};
    }
    if (*last + 1 > lower) {
      lower = *last + 1;
      lower_cell = i;
    }
  }
  if (upper && lower > *upper) {
    return Infeasible{lower_cell, upper_cell, lower, upper,
                      "cell " + std::to_string(lower_cell) + " needs length >= " + std::to_string(lower) +
                          " but cell " + std::to_string(upper_cell) + " must stay empty, forcing length <= " +
                          std::to_string(*upper)};
  }
  auto w = realize(g.alphabet(), q, b);
  if (!w) throw Error("internal: feasible profile could not be realized");
  return *w;
}

std::vector<Colouring> pseudofinite_candidates(const GeneralizedWord& g, std::size_t modulus_bound,
                                               std::size_t threshold_bound) {
  std::vector<UPSet> atoms;
  for (const ClosedExpr& e : g.components()) {
    if (e.hat_set()) atoms.push_back(*e.hat_set());
    if (e.star_set()) atoms.push_back(*e.star_set());
  }
  std::vector<Colouring> out;
  for (std::size_t t = 0; t <= threshold_bound; ++t) {
    for (std::size_t m = 1; m <= modulus_bound; ++m) {
      for (bool singletons : {false, true}) {
        Colouring q = Colouring::threshold_residue(t, m, singletons);
        for (const UPSet& s : atoms) q = refine(q, split_by(s)).colouring;
        if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(std::move(q));
      }
    }
  }
  return out;
}

PseudofiniteCheck bounded_pseudofinite_check(const GeneralizedWord& g, std::size_t modulus_bound,
                                             std::size_t threshold_bound) {
  PseudofiniteCheck out;
  for (const Colouring& q : pseudofinite_candidates(g, modulus_bound, threshold_bound)) {
    ++out.candidates;
    WitnessResult r = word_witness(g, q);
    if (auto* bad = std::get_if<Infeasible>(&r)) {
      out.pass = false;
      out.counterexample = q;
      out.obstruction = *bad;
      return out;
    }
  }
  return out;
}

}  // namespace wordlogic
