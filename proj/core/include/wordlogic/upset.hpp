#ifndef WORDLOGIC_UPSET_HPP
#define WORDLOGIC_UPSET_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace wordlogic {

/**
 * An ultimately periodic subset of the naturals.
 *
 * The characteristic sequence is a finite prefix followed by a cycle that
 * repeats forever: n is a member iff (n < t ? prefix[n] : cycle[(n - t) % p]).
 * Values are always kept canonical (primitive cycle, shortest prefix), so two
 * UPSets compare equal exactly when they denote the same set.
 *
 * Textual form: `up:<prefix-bits>/<cycle-bits>`, e.g. `up:/10` for the evens.
 */
class UPSet {
 public:
  /// The empty set.
  UPSet();
  UPSet(std::vector<bool> prefix, std::vector<bool> cycle);

  static UPSet empty() { return UPSet(); }
  static UPSet all();
  /// {n : n mod modulus == residue}
  static UPSet residue(std::size_t residue, std::size_t modulus);
  static UPSet finite(std::span<const std::size_t> elements);
  static UPSet singleton(std::size_t n);
  /// {0, ..., n-1}
  static UPSet initial_segment(std::size_t n);
  /// {n, n+1, ...}
  static UPSet at_least(std::size_t n);
  static UPSet parse(std::string_view literal);

  bool contains(std::size_t n) const;

  std::size_t threshold() const { return prefix_.size(); }
  std::size_t period() const { return cycle_.size(); }
  const std::vector<bool>& prefix() const { return prefix_; }
  const std::vector<bool>& cycle() const { return cycle_; }

  bool is_empty() const;
  bool is_full() const;
  /// A canonical UPSet is finite iff its cycle is all zeros.
  bool is_finite() const;
  bool is_infinite() const { return !is_finite(); }

  /// |S ∩ {0, ..., n-1}|
  std::size_t count_below(std::size_t n) const;
  /// The k-th smallest element (0-based), if S has more than k elements.
  std::optional<std::size_t> nth(std::size_t k) const;
  std::optional<std::size_t> min() const { return nth(0); }
  /// Largest element of a finite, nonempty set.
  std::optional<std::size_t> max() const;

  UPSet operator|(const UPSet& other) const;
  UPSet operator&(const UPSet& other) const;
  UPSet operator-(const UPSet& other) const;
  UPSet operator~() const;

  std::string to_string() const;

  friend bool operator==(const UPSet&, const UPSet&) = default;
  friend bool operator<(const UPSet& lhs, const UPSet& rhs) {
    return std::tie(lhs.prefix_, lhs.cycle_) < std::tie(rhs.prefix_, rhs.cycle_);
  }

 private:
  void canonicalize();

  std::vector<bool> prefix_;
  std::vector<bool> cycle_;
};

/// lhs \ rhs is finite.
bool almost_included(const UPSet& lhs, const UPSet& rhs);
/// The symmetric difference is finite.
bool almost_equal(const UPSet& lhs, const UPSet& rhs);
bool intersection_infinite(const UPSet& lhs, const UPSet& rhs);
/// True for ∅, {0, ..., n-1} and ℕ.
bool is_downset(const UPSet& s);

/// Bound past which every UPSet in `sets` has entered its cycle twice over:
/// max threshold + 2 * lcm of periods. Membership agreement below this bound
/// implies set equality.
std::size_t agreement_bound(std::span<const UPSet> sets);

}  // namespace wordlogic

#endif  // WORDLOGIC_UPSET_HPP
