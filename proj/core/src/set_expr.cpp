#include "wordlogic/set_expr.hpp"

#include <algorithm>

#include "wordlogic/error.hpp"
#include "wordlogic/text.hpp"

namespace wordlogic {

SetExpr SetExpr::none(std::size_t arity) { return SetExpr(Kind::none, arity); }

SetExpr SetExpr::all(std::size_t arity) { return SetExpr(Kind::all, arity); }

SetExpr SetExpr::upset(UPSet set) {
  if (set.is_empty()) return none(1);
  if (set.is_full()) return all(1);
  SetExpr e(Kind::upset, 1);
  e.sets_.push_back(std::move(set));
  return e;
}

SetExpr SetExpr::diagonal() { return SetExpr(Kind::diagonal, 2); }

SetExpr SetExpr::less() { return SetExpr(Kind::less, 2); }

SetExpr SetExpr::less_equal() { return union_of(less(), diagonal()); }

SetExpr SetExpr::successor() { return SetExpr(Kind::successor, 2); }

SetExpr SetExpr::product(std::vector<UPSet> factors) {
  if (factors.empty()) throw Error("a product needs at least one factor");
  std::size_t arity = factors.size();
  if (std::any_of(factors.begin(), factors.end(), [](const UPSet& s) { return s.is_empty(); })) {
    return none(arity);
  }
  if (arity == 1) return upset(std::move(factors.front()));
  SetExpr e(Kind::product, arity);
  e.sets_ = std::move(factors);
  return e;
}

SetExpr SetExpr::tuples(std::size_t arity, std::vector<Tuple> elements) {
  for (const Tuple& t : elements) {
    if (t.size() != arity) throw Error("tuple arity does not match the set arity");
  }
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty()) return none(arity);
  SetExpr e(Kind::tuples, arity);
  e.tuples_ = std::move(elements);
  return e;
}

SetExpr SetExpr::select(SetExpr inner, std::vector<std::size_t> indices, std::size_t arity) {
  if (indices.size() != inner.arity()) throw Error("select needs one index per coordinate of the inner set");
  for (std::size_t i : indices) {
    if (i >= arity) throw Error("select index out of range");
  }
  if (inner.is_none()) return none(arity);
  if (inner.is_all()) return all(arity);
  bool identity = indices.size() == arity;
  for (std::size_t i = 0; identity && i < indices.size(); ++i) identity = indices[i] == i;
  if (identity) return inner;
  SetExpr e(Kind::select, arity);
  e.indices_ = std::move(indices);
  e.children_.push_back(std::move(inner));
  return e;
}

SetExpr SetExpr::complement(SetExpr inner) {
  switch (inner.kind_) {
    case Kind::none:
      return all(inner.arity_);
    case Kind::all:
      return none(inner.arity_);
    case Kind::complement:
      return inner.children_.front();
    case Kind::upset:
      return upset(~inner.sets_.front());
    default:
      break;
  }
  SetExpr e(Kind::complement, inner.arity_);
  e.children_.push_back(std::move(inner));
  return e;
}

SetExpr SetExpr::intersection(SetExpr lhs, SetExpr rhs) {
  if (lhs.arity_ != rhs.arity_) throw Error("intersection of sets with different arities");
  if (lhs.is_none() || rhs.is_all()) return lhs;
  if (rhs.is_none() || lhs.is_all()) return rhs;
  if (lhs.kind_ == Kind::upset && rhs.kind_ == Kind::upset) {
    return upset(lhs.sets_.front() & rhs.sets_.front());
  }
  SetExpr e(Kind::intersection, lhs.arity_);
  e.children_.push_back(std::move(lhs));
  e.children_.push_back(std::move(rhs));
  return e;
}

SetExpr SetExpr::union_of(SetExpr lhs, SetExpr rhs) {
  if (lhs.arity_ != rhs.arity_) throw Error("union of sets with different arities");
  if (lhs.is_all() || rhs.is_none()) return lhs;
  if (rhs.is_all() || lhs.is_none()) return rhs;
  if (lhs.kind_ == Kind::upset && rhs.kind_ == Kind::upset) {
    return upset(lhs.sets_.front() | rhs.sets_.front());
  }
  SetExpr e(Kind::union_, lhs.arity_);
  e.children_.push_back(std::move(lhs));
  e.children_.push_back(std::move(rhs));
  return e;
}

bool SetExpr::contains(std::span<const std::size_t> t) const {
  switch (kind_) {
    case Kind::none:
      return false;
    case Kind::all:
      return true;
    case Kind::upset:
      return sets_.front().contains(t[0]);
    case Kind::diagonal:
      return t[0] == t[1];
    case Kind::less:
      return t[0] < t[1];
    case Kind::successor:
      return t[1] == t[0] + 1;
    case Kind::product:
      for (std::size_t i = 0; i < sets_.size(); ++i) {
        if (!sets_[i].contains(t[i])) return false;
      }
      return true;
    case Kind::tuples:
      return std::binary_search(tuples_.begin(), tuples_.end(), Tuple(t.begin(), t.end()));
    case Kind::select: {
      Tuple sub(indices_.size());
      for (std::size_t i = 0; i < indices_.size(); ++i) sub[i] = t[indices_[i]];
      return children_.front().contains(sub);
    }
    case Kind::complement:
      return !children_.front().contains(t);
    case Kind::intersection:
      return children_[0].contains(t) && children_[1].contains(t);
    case Kind::union_:
      return children_[0].contains(t) || children_[1].contains(t);
  }
  return false;
}

UPSet SetExpr::diagonal_upset() const {
  switch (kind_) {
    case Kind::none:
    case Kind::less:
    case Kind::successor:
      return UPSet::empty();
    case Kind::all:
    case Kind::diagonal:
      return UPSet::all();
    case Kind::upset:
      return sets_.front();
    case Kind::product: {
      UPSet out = UPSet::all();
      for (const UPSet& s : sets_) out = out & s;
      return out;
    }
    case Kind::tuples: {
      std::vector<std::size_t> elements;
      for (const Tuple& t : tuples_) {
        if (std::all_of(t.begin(), t.end(), [&](std::size_t x) { return x == t.front(); })) {
          elements.push_back(t.front());
        }
      }
      return UPSet::finite(elements);
    }
    case Kind::select:
      return children_.front().diagonal_upset();
    case Kind::complement:
      return ~children_.front().diagonal_upset();
    case Kind::intersection:
      return children_[0].diagonal_upset() & children_[1].diagonal_upset();
    case Kind::union_:
      return children_[0].diagonal_upset() | children_[1].diagonal_upset();
  }
  return UPSet::empty();
}

std::optional<UPSet> SetExpr::as_upset() const {
  if (arity_ != 1) return std::nullopt;
  return diagonal_upset();
}

std::string SetExpr::to_string() const {
  auto join = [](const std::vector<std::string>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i > 0) out += ", ";
      out += parts[i];
    }
    return out;
  };
  switch (kind_) {
    case Kind::none:
      return "none";
    case Kind::all:
      return "all";
    case Kind::upset:
      return sets_.front().to_string();
    case Kind::diagonal:
      return "diag";
    case Kind::less:
      return "lt";
    case Kind::successor:
      return "succ";
    case Kind::product: {
      std::vector<std::string> parts;
      for (const UPSet& s : sets_) parts.push_back(s.to_string());
      return "prod(" + join(parts) + ")";
    }
    case Kind::tuples: {
      std::vector<std::string> parts;
      for (const Tuple& t : tuples_) {
        std::string item = "(";
        for (std::size_t i = 0; i < t.size(); ++i) item += (i > 0 ? "," : "") + std::to_string(t[i]);
        parts.push_back(item + ")");
      }
      return "tuples(" + join(parts) + ")";
    }
    case Kind::select: {
      std::string out = "sel[";
      for (std::size_t i = 0; i < indices_.size(); ++i) out += (i > 0 ? "," : "") + std::to_string(indices_[i]);
      return out + "](" + children_.front().to_string() + ")";
    }
    case Kind::complement:
      return "not(" + children_.front().to_string() + ")";
    case Kind::intersection:
      return "and(" + children_[0].to_string() + ", " + children_[1].to_string() + ")";
    case Kind::union_:
      return "or(" + children_[0].to_string() + ", " + children_[1].to_string() + ")";
  }
  return "none";
}

namespace {

// Splits `name(args)` into its parts; returns false when text has no call shape.
bool split_call(std::string_view text, std::string_view& name, std::string_view& args) {
  std::size_t open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')') return false;
  name = text::trim(text.substr(0, open));
  args = text.substr(open + 1, text.size() - open - 2);
  return true;
}

Tuple parse_tuple(std::string_view text) {
  text = text::trim(text);
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
    throw ParseError("expected a parenthesised tuple, got '" + std::string(text) + "'", 0, 0);
  }
  Tuple t;
  for (std::string_view item : text::split(text.substr(1, text.size() - 2), ',')) {
    t.push_back(text::parse_size(text::trim(item)));
  }
  return t;
}

SetExpr parse_expr(std::string_view text, std::size_t arity) {
  text = text::trim(text);
  if (text.empty()) throw ParseError("empty set expression", 0, 0);
  if (text.substr(0, 3) == "up:") return SetExpr::upset(UPSet::parse(text));
  if (text == "diag") return SetExpr::diagonal();
  if (text == "lt") return SetExpr::less();
  if (text == "le") return SetExpr::less_equal();
  if (text == "succ") return SetExpr::successor();
  if (text == "all" || text == "none") {
    if (arity == 0) throw ParseError("'" + std::string(text) + "' needs a known arity", 0, 0);
    return text == "all" ? SetExpr::all(arity) : SetExpr::none(arity);
  }
  if (text.substr(0, 4) == "sel[") {
    std::size_t close = text.find(']');
    if (close == std::string_view::npos) throw ParseError("unterminated index list in sel[...]", 0, 0);
    std::vector<std::size_t> indices;
    for (std::string_view item : text::split(text.substr(4, close - 4), ',')) {
      indices.push_back(text::parse_size(text::trim(item)));
    }
    std::string_view rest = text::trim(text.substr(close + 1));
    if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')') {
      throw ParseError("sel[...] must be followed by a parenthesised set", 0, close + 1);
    }
    std::size_t out_arity = arity;
    if (out_arity == 0) {
      for (std::size_t i : indices) out_arity = std::max(out_arity, i + 1);
    }
    SetExpr inner = parse_expr(rest.substr(1, rest.size() - 2), indices.size());
    return SetExpr::select(std::move(inner), std::move(indices), out_arity);
  }
  std::string_view name;
  std::string_view args;
  if (!split_call(text, name, args)) {
    throw ParseError("unknown set expression '" + std::string(text) + "'", 0, 0);
  }
  std::vector<std::string_view> items = text::split_top_level(args, ',');
  if (name == "prod") {
    std::vector<UPSet> factors;
    for (std::string_view item : items) factors.push_back(UPSet::parse(text::trim(item)));
    return SetExpr::product(std::move(factors));
  }
  if (name == "tuples") {
    std::vector<Tuple> elements;
    for (std::string_view item : items) elements.push_back(parse_tuple(item));
    std::size_t k = elements.empty() ? arity : elements.front().size();
    if (k == 0) throw ParseError("tuples() needs a known arity", 0, 0);
    return SetExpr::tuples(k, std::move(elements));
  }
  if (name == "not") {
    if (items.size() != 1) throw ParseError("not(...) takes exactly one argument", 0, 0);
    return SetExpr::complement(parse_expr(items.front(), arity));
  }
  if (name == "and" || name == "or") {
    if (items.empty()) throw ParseError(std::string(name) + "(...) needs arguments", 0, 0);
    // Arity of the first argument that fixes one, for all/none siblings.
    std::size_t k = arity;
    if (k == 0) {
      for (std::string_view item : items) {
        std::string_view t = text::trim(item);
        if (t == "all" || t == "none") continue;
        k = parse_expr(item, 0).arity();
        break;
      }
    }
    SetExpr acc = parse_expr(items.front(), k);
    for (std::size_t i = 1; i < items.size(); ++i) {
      SetExpr next = parse_expr(items[i], k);
      acc = name == "and" ? SetExpr::intersection(std::move(acc), std::move(next))
                          : SetExpr::union_of(std::move(acc), std::move(next));
    }
    return acc;
  }
  throw ParseError("unknown set constructor '" + std::string(name) + "'", 0, 0);
}

}  // namespace

SetExpr SetExpr::parse(std::string_view text, std::size_t arity) {
  SetExpr e = parse_expr(text, arity);
  if (arity != 0 && e.arity() != arity) {
    throw ParseError("set expression has arity " + std::to_string(e.arity()) + ", expected " +
                         std::to_string(arity),
                     0, 0);
  }
  return e;
}

WindowColouring::WindowColouring(std::size_t dimension, std::size_t window, std::vector<WindowCell> cells,
                                 std::optional<std::string> default_cell)
    : dimension_(dimension), window_(window), cells_(std::move(cells)), default_cell_(std::move(default_cell)) {
  if (dimension_ == 0) throw Error("window colouring needs dimension >= 1");
  for (const WindowCell& c : cells_) {
    if (c.set.arity() != dimension_) throw Error("cell '" + c.name + "' has the wrong arity");
  }
}

WindowColouring WindowColouring::comparisons(std::size_t window) {
  return WindowColouring(2, window,
                         {{"lt", SetExpr::less()},
                          {"diag", SetExpr::diagonal()},
                          {"gt", SetExpr::select(SetExpr::less(), {1, 0}, 2)}});
}

std::string WindowColouring::cell_name(std::size_t colour) const {
  if (colour < cells_.size()) return cells_[colour].name;
  return default_cell_.value_or("");
}

std::optional<std::size_t> WindowColouring::colour_of(std::span<const std::size_t> tuple) const {
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i].set.contains(tuple)) return i;
  }
  if (default_cell_) return cells_.size();
  return std::nullopt;
}

WindowCheck validate_window(const WindowColouring& colouring) {
  WindowCheck out;
  for_each_tuple(colouring.window(), colouring.dimension(), [&](const Tuple& t) {
    std::size_t hits = 0;
    for (const WindowCell& c : colouring.cells()) hits += c.set.contains(t) ? 1 : 0;
    if (hits > 1) {
      out = {false, t, "cells overlap"};
      return false;
    }
    if (hits == 0 && !colouring.colour_of(t)) {
      out = {false, t, "tuple not covered by any cell"};
      return false;
    }
    return true;
  });
  return out;
}

}  // namespace wordlogic
