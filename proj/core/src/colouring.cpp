#include "wordlogic/colouring.hpp"

#include <algorithm>
#include <numeric>

#include "wordlogic/text.hpp"

namespace wordlogic {

Colouring::Colouring() : cells_{UPSet::all()} {}

Colouring::Colouring(std::vector<UPSet> cells) : cells_(std::move(cells)) {
  if (cells_.empty()) throw Error("a colouring needs at least one cell");
  UPSet covered;
  for (const UPSet& cell : cells_) {
    UPSet overlap = covered & cell;
    if (!overlap.is_empty()) throw InvalidColouring("colouring cells overlap", *overlap.min());
    covered = covered | cell;
  }
  if (!covered.is_full()) throw InvalidColouring("colouring cells do not cover ℕ", *(~covered).min());
}

Colouring Colouring::parse(std::string_view literal) {
  std::string_view text = text::trim(literal);
  constexpr std::string_view open = "col[";
  if (text.substr(0, open.size()) != open || text.empty() || text.back() != ']') {
    throw ParseError("colouring literal must look like col[up:.../..., ...]", 0, 0);
  }
  std::string_view body = text.substr(open.size(), text.size() - open.size() - 1);
  std::vector<UPSet> cells;
  std::size_t offset = open.size();
  for (std::string_view item : text::split(body, ',')) {
    std::string_view trimmed = text::trim(item);
    try {
      cells.push_back(UPSet::parse(trimmed));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), 0, offset + e.column());
    }
    offset += item.size() + 1;
  }
  return Colouring(std::move(cells));
}

Colouring Colouring::threshold_residue(std::size_t threshold, std::size_t modulus,
                                       bool singleton_prefix) {
  if (modulus == 0) throw Error("threshold/residue colouring needs a positive modulus");
  std::vector<UPSet> cells;
  if (singleton_prefix) {
    for (std::size_t n = 0; n < threshold; ++n) cells.push_back(UPSet::singleton(n));
  } else if (threshold > 0) {
    cells.push_back(UPSet::initial_segment(threshold));
  }
  UPSet tail = UPSet::at_least(threshold);
  for (std::size_t r = 0; r < modulus; ++r) {
    UPSet cell = tail & UPSet::residue(r, modulus);
    if (!cell.is_empty()) cells.push_back(std::move(cell));
  }
  return Colouring(std::move(cells));
}

std::size_t Colouring::colour_of(std::size_t n) const {
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i].contains(n)) return i;
  }
  throw Error("colouring does not cover position " + std::to_string(n));
}

std::size_t Colouring::threshold() const {
  std::size_t t = 0;
  for (const UPSet& cell : cells_) t = std::max(t, cell.threshold());
  return t;
}

std::size_t Colouring::period() const {
  std::size_t p = 1;
  for (const UPSet& cell : cells_) p = std::lcm(p, cell.period());
  return p;
}

std::string Colouring::to_string() const {
  std::string out = "col[";
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (i > 0) out += ", ";
    out += cells_[i].to_string();
  }
  out += "]";
  return out;
}

Refinement refine(const Colouring& first, const Colouring& second) {
  std::vector<UPSet> cells;
  Refinement out;
  for (std::size_t i = 0; i < first.size(); ++i) {
    for (std::size_t j = 0; j < second.size(); ++j) {
      UPSet cell = first.cell(i) & second.cell(j);
      if (cell.is_empty()) continue;
      cells.push_back(std::move(cell));
      out.to_first.push_back(i);
      out.to_second.push_back(j);
    }
  }
  out.colouring = Colouring(std::move(cells));
  return out;
}

Colouring split_by(const UPSet& q) {
  if (q.is_empty() || q.is_full()) return Colouring();
  return Colouring({q, ~q});
}

}  // namespace wordlogic
