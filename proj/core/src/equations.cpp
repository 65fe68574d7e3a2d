#include "wordlogic/equations.hpp"

#include <cstdint>

namespace wordlogic {

Word substitute(const Word& w, std::span<const std::size_t> positions, std::string_view letters) {
  if (positions.size() != letters.size()) throw Error("substitute needs as many letters as positions");
  Word out = w;
  for (std::size_t m = 0; m < positions.size(); ++m) {
    if (positions[m] >= w.size()) {
      throw Error("position " + std::to_string(positions[m]) + " is outside a word of length " +
                  std::to_string(w.size()));
    }
    for (std::size_t m2 = 0; m2 < m; ++m2) {
      if (positions[m2] == positions[m]) throw Error("position " + std::to_string(positions[m]) + " is repeated");
    }
    out[positions[m]] = letters[m];
  }
  return out;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::swap:
      return "swap";
    case Family::dup:
      return "dup";
    case Family::append:
      return "append";
  }
  return {};
}

std::string CheckReport::to_string() const {
  if (!violation) return "PASS";
  const Violation& v = *violation;
  std::string out = "FAIL fam=" + family_name(v.equation.family) + " a=" + v.equation.a;
  if (v.equation.family != Family::append) out += std::string(" b=") + v.equation.b;
  out += " w=" + v.word + " j=";
  for (std::size_t i = 0; i < v.positions.size(); ++i) out += (i ? "," : "") + std::to_string(v.positions[i]);
  return out;
}

MembershipTable::MembershipTable(const MembershipOracle& oracle, const Alphabet& alphabet, std::size_t max_len)
    : alphabet_(alphabet), max_len_(max_len) {
  std::size_t total = 0;
  std::size_t count = 1;
  for (std::size_t n = 0; n <= max_len; ++n) {
    offset_.push_back(total);
    total += count;
    count *= alphabet.size();
  }
  bits_.reserve(total);
  for_each_word(alphabet, max_len, [&](const Word& w) { bits_.push_back(oracle(w)); });
}

bool MembershipTable::operator()(const Word& w) const {
  if (w.size() > max_len_) throw Error("word longer than the membership table");
  std::size_t value = 0;
  for (char c : w) value = value * alphabet_.size() + alphabet_.require(c);
  return at(w.size(), value);
}

namespace {

struct Scan {
  const MembershipTable& table;
  const Colouring& q;
  const Equation& eq;
  std::size_t k;
  std::size_t ia = 0;
  std::size_t ib = 0;

  std::optional<Violation> run(std::size_t max_len) {
    const Alphabet& alphabet = table.alphabet();
    ia = alphabet.require(eq.a);
    if (eq.family != Family::append) {
      ib = alphabet.require(eq.b);
      if (ia == ib) return std::nullopt;
    }
    std::size_t need = eq.family == Family::append ? max_len + 1 : max_len;
    if (need > table.max_len()) throw Error("membership table is too short for this bound");

    std::vector<std::size_t> colours = colour_table(q, max_len + 1);
    for (std::size_t n = 0; n <= max_len; ++n) {
      std::vector<std::int64_t> weight(n);
      std::int64_t w = 1;
      for (std::size_t j = n; j-- > 0;) {
        weight[j] = w;
        w *= static_cast<std::int64_t>(k);
      }
      std::vector<std::size_t> digits(n, 0);
      for (std::int64_t value = 0; value < w; ++value) {
        if (auto v = at_word(n, value, digits, weight, colours)) return v;
        for (std::size_t j = n; j-- > 0;) {
          if (++digits[j] < k) break;
          digits[j] = 0;
        }
      }
    }
    return std::nullopt;
  }

  Word spell(const std::vector<std::size_t>& digits) const {
    Word out;
    for (std::size_t d : digits) out += table.alphabet().letter(d);
    return out;
  }

  std::optional<Violation> report(std::size_t n, std::int64_t value, const std::vector<std::size_t>& digits,
                                  std::vector<std::size_t> positions, std::size_t colour, std::size_t image_len,
                                  std::int64_t image_value) const {
    bool lhs = table.at(n, static_cast<std::size_t>(value));
    bool rhs = table.at(image_len, static_cast<std::size_t>(image_value));
    if (lhs == rhs) return std::nullopt;
    Violation v{eq, spell(digits), std::move(positions), colour, {}, lhs, rhs};
    switch (eq.family) {
      case Family::swap:
        v.image = substitute(v.word, v.positions, std::string{eq.b, eq.a});
        break;
      case Family::dup:
        v.image = substitute(v.word, v.positions, std::string{eq.a, eq.b, eq.b});
        break;
      case Family::append:
        v.image = v.word + eq.a;
        break;
    }
    return v;
  }

  std::optional<Violation> at_word(std::size_t n, std::int64_t value, const std::vector<std::size_t>& d,
                                   const std::vector<std::int64_t>& weight,
                                   const std::vector<std::size_t>& colours) const {
    std::int64_t shift = static_cast<std::int64_t>(ib) - static_cast<std::int64_t>(ia);
    for (std::size_t j1 = 0; j1 < n; ++j1) {
      if (d[j1] != ia) continue;
      std::size_t c = colours[j1];
      if (eq.family == Family::append) {
        if (c != colours[n]) continue;
        auto v = report(n, value, d, {j1}, c, n + 1, value * static_cast<std::int64_t>(k) + static_cast<std::int64_t>(ia));
        if (v) return v;
        continue;
      }
      for (std::size_t j2 = 0; j2 < n; ++j2) {
        if (j2 == j1 || colours[j2] != c) continue;
        if (eq.family == Family::swap) {
          if (d[j2] != ib) continue;
          std::int64_t image = value + shift * weight[j1] - shift * weight[j2];
          if (auto v = report(n, value, d, {j1, j2}, c, n, image)) return v;
          continue;
        }
        if (d[j2] != ia) continue;
        for (std::size_t j3 = 0; j3 < n; ++j3) {
          if (d[j3] != ib || colours[j3] != c) continue;
          std::int64_t image = value + shift * weight[j2];
          if (auto v = report(n, value, d, {j1, j2, j3}, c, n, image)) return v;
        }
      }
    }
    return std::nullopt;
  }
};

}  // namespace

CheckReport check_family(const MembershipTable& table, const Colouring& q, const Equation& eq, std::size_t max_len) {
  Scan scan{table, q, eq, table.alphabet().size()};
  return CheckReport{scan.run(max_len)};
}

CheckReport check_family(const MembershipOracle& oracle, const Alphabet& alphabet, const Colouring& q,
                         const Equation& eq, std::size_t max_len) {
  MembershipTable table(oracle, alphabet, max_len + 1);
  return check_family(table, q, eq, max_len);
}

CheckReport check_all(const MembershipTable& table, const Colouring& q, std::size_t max_len) {
  const std::string& letters = table.alphabet().letters();
  for (Family f : {Family::swap, Family::dup}) {
    for (char a : letters) {
      for (char b : letters) {
        if (a == b) continue;
        CheckReport r = check_family(table, q, Equation{f, a, b}, max_len);
        if (!r.pass()) return r;
      }
    }
  }
  for (char a : letters) {
    CheckReport r = check_family(table, q, Equation{Family::append, a}, max_len);
    if (!r.pass()) return r;
  }
  return {};
}

CheckReport check_all(const MembershipOracle& oracle, const Alphabet& alphabet, const Colouring& q,
                      std::size_t max_len) {
  MembershipTable table(oracle, alphabet, max_len + 1);
  return check_all(table, q, max_len);
}

bool replays(const Violation& v, const MembershipOracle& oracle, const Colouring& q) {
  const Equation& eq = v.equation;
  std::string lhs;
  Word image;
  switch (eq.family) {
    case Family::swap:
      lhs = {eq.a, eq.b};
      image = substitute(v.word, v.positions, std::string{eq.b, eq.a});
      break;
    case Family::dup:
      lhs = {eq.a, eq.a, eq.b};
      image = substitute(v.word, v.positions, std::string{eq.a, eq.b, eq.b});
      break;
    case Family::append:
      lhs = {eq.a};
      image = v.word + eq.a;
      break;
  }
  if (v.positions.size() != lhs.size()) return false;
  if (substitute(v.word, v.positions, lhs) != v.word) return false;
  std::size_t colour = q.colour_of(v.positions[0]);
  for (std::size_t p : v.positions) {
    if (q.colour_of(p) != colour) return false;
  }
  if (eq.family == Family::append && q.colour_of(v.word.size()) != colour) return false;
  return image == v.image && oracle(v.word) != oracle(image);
}

std::optional<GeneralViolation> check_general(const MembershipOracle& oracle, const Alphabet& alphabet,
                                              const GeneralEquation& eq, std::size_t max_len) {
  std::optional<GeneralViolation> out;
  for_each_word(alphabet, max_len, [&](const Word& w) {
    if (out) return;
    for_each_tuple(w.size(), eq.arity, [&](const Tuple& t) {
      if (eq.domain && !eq.domain(w, t)) return true;
      Word u = eq.u(w, t);
      Word v = eq.v(w, t);
      if (oracle(u) == oracle(v)) return true;
      out = GeneralViolation{w, t, std::move(u), std::move(v)};
      return false;
    });
  });
  return out;
}

std::vector<Colouring> candidate_colourings(std::size_t max_threshold, std::size_t max_modulus) {
  std::vector<Colouring> out;
  for (std::size_t t = 0; t <= max_threshold; ++t) {
    for (std::size_t m = 1; m <= max_modulus; ++m) out.push_back(Colouring::threshold_residue(t, m));
  }
  return out;
}

std::optional<SearchResult> search_colouring(const MembershipOracle& oracle, const Alphabet& alphabet,
                                             const std::vector<Colouring>& candidates, std::size_t max_len) {
  MembershipTable table(oracle, alphabet, max_len + 1);
  for (const Colouring& q : candidates) {
    CheckReport r = check_all(table, q, max_len);
    if (r.pass()) return SearchResult{q, r};
  }
  return std::nullopt;
}

}  // namespace wordlogic
