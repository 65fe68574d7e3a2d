#ifndef WORDLOGIC_SET_EXPR_HPP
#define WORDLOGIC_SET_EXPR_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wordlogic/upset.hpp"

namespace wordlogic {

using Tuple = std::vector<std::size_t>;

/**
 * A decidable subset of ℕ^k described symbolically.
 *
 * Leaves are unary UPSets, products of UPSets, the comparators Δ (diagonal),
 * < and successor on ℕ², and explicit finite tuple lists. Inner nodes are the
 * Boolean operations and `select`, which reads a k-tuple through a list of
 * coordinate indices (used to lift an l-ary predicate applied to some of the
 * variables x1..xk to a k-ary set).
 *
 * Text syntax: `up:/10`, `diag`, `lt`, `le`, `succ`, `prod(up:/10, up:/01)`,
 * `tuples((0,1),(2,3))`, `and(e, e, ...)`, `or(e, ...)`, `not(e)`,
 * `sel[1,0](e)`, `all`, `none`.
 */
class SetExpr {
 public:
  enum class Kind { none, all, upset, diagonal, less, successor, product, tuples, select, complement, intersection, union_ };

  static SetExpr none(std::size_t arity);
  static SetExpr all(std::size_t arity);
  static SetExpr upset(UPSet set);
  static SetExpr diagonal();
  static SetExpr less();
  static SetExpr less_equal();
  static SetExpr successor();
  static SetExpr product(std::vector<UPSet> factors);
  static SetExpr tuples(std::size_t arity, std::vector<Tuple> elements);
  /// {t ∈ ℕ^arity : (t[indices[0]], ..., t[indices[l-1]]) ∈ inner}
  static SetExpr select(SetExpr inner, std::vector<std::size_t> indices, std::size_t arity);
  static SetExpr complement(SetExpr inner);
  static SetExpr intersection(SetExpr lhs, SetExpr rhs);
  static SetExpr union_of(SetExpr lhs, SetExpr rhs);

  /// Parses the text syntax. `arity` is needed only for `all` and `none` and
  /// is checked against the parsed arity otherwise (0 = unchecked).
  static SetExpr parse(std::string_view text, std::size_t arity = 0);

  Kind kind() const { return kind_; }
  std::size_t arity() const { return arity_; }
  bool is_none() const { return kind_ == Kind::none; }
  bool is_all() const { return kind_ == Kind::all; }

  bool contains(std::span<const std::size_t> tuple) const;

  /// {n : (n, ..., n) ∈ S} as an ultimately periodic set. Always defined.
  UPSet diagonal_upset() const;

  /// For arity 1, the set itself as a UPSet.
  std::optional<UPSet> as_upset() const;

  std::string to_string() const;

  const std::vector<SetExpr>& children() const { return children_; }

 private:
  SetExpr(Kind kind, std::size_t arity) : kind_(kind), arity_(arity) {}

  Kind kind_;
  std::size_t arity_;
  std::vector<UPSet> sets_;
  std::vector<Tuple> tuples_;
  std::vector<std::size_t> indices_;
  std::vector<SetExpr> children_;
};

/// Named cell of a window colouring.
struct WindowCell {
  std::string name;
  SetExpr set;
};

/// Result of checking that the cells partition {0, ..., N-1}^k.
struct WindowCheck {
  bool ok = true;
  /// Offending tuple on failure.
  Tuple witness;
  std::string reason;
};

/**
 * A colouring of ℕ^k that is only ever evaluated on a finite window
 * {0, ..., N-1}^k. Tuples matched by none of the explicit cells fall in the
 * default cell when one is named.
 */
class WindowColouring {
 public:
  WindowColouring(std::size_t dimension, std::size_t window, std::vector<WindowCell> cells,
                  std::optional<std::string> default_cell = std::nullopt);

  /// (Δ^<, Δ, Δ^>) on ℕ², cells named lt, diag, gt.
  static WindowColouring comparisons(std::size_t window);

  std::size_t dimension() const { return dimension_; }
  std::size_t window() const { return window_; }
  /// Number of colours, counting the default cell.
  std::size_t size() const { return cells_.size() + (default_cell_ ? 1 : 0); }
  const std::vector<WindowCell>& cells() const { return cells_; }
  std::string cell_name(std::size_t colour) const;

  /// First explicit cell containing the tuple, else the default cell.
  std::optional<std::size_t> colour_of(std::span<const std::size_t> tuple) const;

 private:
  std::size_t dimension_;
  std::size_t window_;
  std::vector<WindowCell> cells_;
  std::optional<std::string> default_cell_;
};

WindowCheck validate_window(const WindowColouring& colouring);

/// Calls `fn` on every tuple of {0, ..., n-1}^k in lexicographic order; stops
/// early when `fn` returns false. Returns false iff stopped early.
template <typename Fn>
bool for_each_tuple(std::size_t n, std::size_t k, Fn&& fn) {
  Tuple t(k, 0);
  if (k == 0) return static_cast<bool>(fn(static_cast<const Tuple&>(t)));
  if (n == 0) return true;
  while (true) {
    if (!fn(static_cast<const Tuple&>(t))) return false;
    std::size_t i = k;
    while (true) {
      if (i == 0) return true;
      --i;
      if (++t[i] < n) break;
      t[i] = 0;
    }
  }
}

}  // namespace wordlogic

#endif  // WORDLOGIC_SET_EXPR_HPP
