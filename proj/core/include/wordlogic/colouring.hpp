#ifndef WORDLOGIC_COLOURING_HPP
#define WORDLOGIC_COLOURING_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "wordlogic/error.hpp"
#include "wordlogic/upset.hpp"

namespace wordlogic {

/// Raised when a list of cells is not a partition of ℕ.
class InvalidColouring : public Error {
 public:
  InvalidColouring(const std::string& message, std::size_t witness)
      : Error(message + " (witness " + std::to_string(witness) + ")"), witness_(witness) {}
  std::size_t witness() const { return witness_; }

 private:
  std::size_t witness_;
};

/// A finite colouring of ℕ: an ordered list of pairwise disjoint UPSets whose
/// union is ℕ. Cells may be empty; colour indices are positions in the list.
class Colouring {
 public:
  /// The one-cell colouring (ℕ).
  Colouring();
  explicit Colouring(std::vector<UPSet> cells);

  /// Parses `col[up:/10, up:/01]`.
  static Colouring parse(std::string_view literal);

  /// Cells [0, threshold) (when threshold > 0) followed by the classes
  /// {n >= threshold : n mod modulus == r} for r = 0, ..., modulus - 1.
  /// With `singleton_prefix`, each n < threshold gets its own cell instead.
  /// Empty cells are dropped.
  static Colouring threshold_residue(std::size_t threshold, std::size_t modulus,
                                     bool singleton_prefix = false);

  std::size_t size() const { return cells_.size(); }
  const UPSet& cell(std::size_t i) const { return cells_[i]; }
  const std::vector<UPSet>& cells() const { return cells_; }

  std::size_t colour_of(std::size_t n) const;
  /// Largest threshold among the cells.
  std::size_t threshold() const;
  /// Lcm of the cell periods.
  std::size_t period() const;

  std::string to_string() const;

  friend bool operator==(const Colouring&, const Colouring&) = default;

 private:
  std::vector<UPSet> cells_;
};

/// Common refinement: nonempty intersections Q_i ∩ Q'_j in lexicographic (i, j)
/// order, with the surjections back onto the cells of each input.
struct Refinement {
  Colouring colouring;
  std::vector<std::size_t> to_first;
  std::vector<std::size_t> to_second;
};

Refinement refine(const Colouring& first, const Colouring& second);

/// Two-cell colouring (q, ℕ \ q), or (ℕ) when q is ∅ or ℕ.
Colouring split_by(const UPSet& q);

}  // namespace wordlogic

#endif  // WORDLOGIC_COLOURING_HPP
