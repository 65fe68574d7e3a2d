#include "wordlogic/upset.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "wordlogic/error.hpp"

namespace wordlogic {

namespace {

template <typename Op>
UPSet combine(const UPSet& lhs, const UPSet& rhs, Op op) {
  std::size_t t = std::max(lhs.threshold(), rhs.threshold());
  std::size_t p = std::lcm(lhs.period(), rhs.period());
  std::vector<bool> prefix(t);
  std::vector<bool> cycle(p);
  for (std::size_t n = 0; n < t; ++n) prefix[n] = op(lhs.contains(n), rhs.contains(n));
  for (std::size_t n = 0; n < p; ++n) cycle[n] = op(lhs.contains(t + n), rhs.contains(t + n));
  return UPSet(std::move(prefix), std::move(cycle));
}

std::vector<bool> parse_bits(std::string_view text, std::size_t offset) {
  std::vector<bool> bits;
  bits.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '0') {
      bits.push_back(false);
    } else if (text[i] == '1') {
      bits.push_back(true);
    } else {
      throw ParseError("expected '0' or '1' in set literal", 0, offset + i);
    }
  }
  return bits;
}

}  // namespace

UPSet::UPSet() : cycle_{false} {}

UPSet::UPSet(std::vector<bool> prefix, std::vector<bool> cycle)
    : prefix_(std::move(prefix)), cycle_(std::move(cycle)) {
  if (cycle_.empty()) throw Error("ultimately periodic set needs a nonempty cycle");
  canonicalize();
}

void UPSet::canonicalize() {
  // Shortest period d dividing p with cycle[i] == cycle[i % d].
  std::size_t p = cycle_.size();
  for (std::size_t d = 1; d < p; ++d) {
    if (p % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < p && periodic; ++i) periodic = cycle_[i] == cycle_[i - d];
    if (periodic) {
      cycle_.resize(d);
      break;
    }
  }
  // Fold prefix bits that agree with the cycle rotated one step back.
  while (!prefix_.empty() && prefix_.back() == cycle_.back()) {
    prefix_.pop_back();
    std::rotate(cycle_.rbegin(), cycle_.rbegin() + 1, cycle_.rend());
  }
}

UPSet UPSet::all() { return UPSet({}, {true}); }

UPSet UPSet::residue(std::size_t residue, std::size_t modulus) {
  if (modulus == 0) throw Error("residue class needs a positive modulus");
  std::vector<bool> cycle(modulus, false);
  cycle[residue % modulus] = true;
  return UPSet({}, std::move(cycle));
}

UPSet UPSet::finite(std::span<const std::size_t> elements) {
  std::size_t t = elements.empty() ? 0 : *std::max_element(elements.begin(), elements.end()) + 1;
  std::vector<bool> prefix(t, false);
  for (std::size_t n : elements) prefix[n] = true;
  return UPSet(std::move(prefix), {false});
}

UPSet UPSet::singleton(std::size_t n) {
  std::size_t elements[] = {n};
  return finite(elements);
}

UPSet UPSet::initial_segment(std::size_t n) { return UPSet(std::vector<bool>(n, true), {false}); }

UPSet UPSet::at_least(std::size_t n) { return UPSet(std::vector<bool>(n, false), {true}); }

UPSet UPSet::parse(std::string_view literal) {
  constexpr std::string_view tag = "up:";
  if (literal.substr(0, tag.size()) != tag) throw ParseError("set literal must start with 'up:'", 0, 0);
  std::string_view body = literal.substr(tag.size());
  std::size_t slash = body.find('/');
  if (slash == std::string_view::npos) throw ParseError("set literal needs '/' before the cycle", 0, literal.size());
  std::string_view cycle = body.substr(slash + 1);
  if (cycle.empty()) throw ParseError("set literal has an empty cycle", 0, literal.size());
  return UPSet(parse_bits(body.substr(0, slash), tag.size()),
               parse_bits(cycle, tag.size() + slash + 1));
}

bool UPSet::contains(std::size_t n) const {
  std::size_t t = prefix_.size();
  return n < t ? prefix_[n] : cycle_[(n - t) % cycle_.size()];
}

bool UPSet::is_empty() const { return prefix_.empty() && cycle_.size() == 1 && !cycle_[0]; }

bool UPSet::is_full() const { return prefix_.empty() && cycle_.size() == 1 && cycle_[0]; }

bool UPSet::is_finite() const { return std::none_of(cycle_.begin(), cycle_.end(), [](bool b) { return b; }); }

std::size_t UPSet::count_below(std::size_t n) const {
  std::size_t t = prefix_.size();
  std::size_t head = std::min(n, t);
  std::size_t count = static_cast<std::size_t>(std::count(prefix_.begin(), prefix_.begin() + head, true));
  if (n <= t) return count;
  std::size_t rest = n - t;
  std::size_t p = cycle_.size();
  std::size_t ones = static_cast<std::size_t>(std::count(cycle_.begin(), cycle_.end(), true));
  count += (rest / p) * ones;
  count += static_cast<std::size_t>(std::count(cycle_.begin(), cycle_.begin() + rest % p, true));
  return count;
}

std::optional<std::size_t> UPSet::nth(std::size_t k) const {
  std::size_t t = prefix_.size();
  for (std::size_t n = 0; n < t; ++n) {
    if (!prefix_[n]) continue;
    if (k == 0) return n;
    --k;
  }
  std::vector<std::size_t> offsets;
  for (std::size_t i = 0; i < cycle_.size(); ++i) {
    if (cycle_[i]) offsets.push_back(i);
  }
  if (offsets.empty()) return std::nullopt;
  return t + (k / offsets.size()) * cycle_.size() + offsets[k % offsets.size()];
}

std::optional<std::size_t> UPSet::max() const {
  if (!is_finite()) return std::nullopt;
  for (std::size_t n = prefix_.size(); n-- > 0;) {
    if (prefix_[n]) return n;
  }
  return std::nullopt;
}

UPSet UPSet::operator|(const UPSet& other) const {
  return combine(*this, other, [](bool a, bool b) { return a || b; });
}

UPSet UPSet::operator&(const UPSet& other) const {
  return combine(*this, other, [](bool a, bool b) { return a && b; });
}

UPSet UPSet::operator-(const UPSet& other) const {
  return combine(*this, other, [](bool a, bool b) { return a && !b; });
}

UPSet UPSet::operator~() const {
  std::vector<bool> prefix = prefix_;
  std::vector<bool> cycle = cycle_;
  prefix.flip();
  cycle.flip();
  return UPSet(std::move(prefix), std::move(cycle));
}

std::string UPSet::to_string() const {
  std::string out = "up:";
  for (bool b : prefix_) out.push_back(b ? '1' : '0');
  out.push_back('/');
  for (bool b : cycle_) out.push_back(b ? '1' : '0');
  return out;
}

bool almost_included(const UPSet& lhs, const UPSet& rhs) { return (lhs - rhs).is_finite(); }

bool almost_equal(const UPSet& lhs, const UPSet& rhs) {
  return almost_included(lhs, rhs) && almost_included(rhs, lhs);
}

bool intersection_infinite(const UPSet& lhs, const UPSet& rhs) { return (lhs & rhs).is_infinite(); }

bool is_downset(const UPSet& s) {
  if (s.is_full()) return true;
  if (!s.is_finite()) return false;
  // Finite and canonical: the prefix must be all ones.
  return std::all_of(s.prefix().begin(), s.prefix().end(), [](bool b) { return b; });
}

std::size_t agreement_bound(std::span<const UPSet> sets) {
  std::size_t t = 0;
  std::size_t p = 1;
  for (const UPSet& s : sets) {
    t = std::max(t, s.threshold());
    p = std::lcm(p, s.period());
  }
  return t + 2 * p;
}

}  // namespace wordlogic
