#pragma once

// Shared machinery for the closed-form class descriptions: evaluating a
// membership rule over a universe, comparing against brute force, and the
// tabular rows of a counting report.
//
// A rules object R provides
//   bool related(Relation, Mode, const E& x, const E& y) const
//     -- is y in the closed-form class of x?
//   bool singleton_branch(Relation, Mode, const E& x) const
//     -- does the rule fall through to {x} for this x?
// J is answered with the D rule, since D = J on finite semigroups.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vgreen/combinatorics.hpp"
#include "vgreen/green.hpp"
#include "vgreen/variant.hpp"

namespace vgreen {

enum class Mode { paper_literal, corrected };

inline std::string_view to_string(Mode m) {
  return m == Mode::paper_literal ? "paper-literal" : "corrected";
}

inline Method method_of(Mode m) {
  return m == Mode::paper_literal ? Method::paper_literal : Method::corrected;
}

template <class Rules, class E>
concept ClassRules = requires(const Rules& r, Relation rel, Mode m, const E& x) {
  { r.related(rel, m, x, x) } -> std::convertible_to<bool>;
  { r.singleton_branch(rel, m, x) } -> std::convertible_to<bool>;
};

// Closed-form class of x, filtered from `universe` (kept in its order).
template <Element E, ClassRules<E> Rules>
std::vector<E> closed_form_class(const Rules& rules, const std::vector<E>& universe,
                                 Relation relation, Mode mode, const E& x) {
  if (rules.singleton_branch(relation, mode, x)) return {x};
  std::vector<E> out;
  for (const auto& y : universe) {
    if (y == x || rules.related(relation, mode, x, y)) out.push_back(y);
  }
  return out;
}

// Closed-form class of every element, as sorted universe indices. In
// paper-literal mode the sets need not form a partition.
template <Element E, ClassRules<E> Rules>
std::vector<std::vector<index_t>> closed_form_sets(const Rules& rules,
                                                   const VariantSemigroup<E>& v,
                                                   Relation relation, Mode mode) {
  const auto n = static_cast<index_t>(v.size());
  std::vector<std::vector<index_t>> out(n);
  for (index_t x = 0; x < n; ++x) {
    const auto& ex = v.element(x);
    if (rules.singleton_branch(relation, mode, ex)) {
      out[x] = {x};
      continue;
    }
    for (index_t y = 0; y < n; ++y) {
      if (y == x || rules.related(relation, mode, ex, v.element(y))) out[x].push_back(y);
    }
  }
  return out;
}

struct ClassMismatch {
  index_t element = 0;
  std::vector<index_t> closed_form;
  std::vector<index_t> brute;
};

// Every x whose closed-form set differs from its brute-force class.
inline std::vector<ClassMismatch> compare_with_brute(
    const std::vector<std::vector<index_t>>& closed, const GreenClassification& brute) {
  std::vector<ClassMismatch> out;
  for (index_t x = 0; x < closed.size(); ++x) {
    const auto& b = brute.class_containing(x);
    if (closed[x] != b) out.push_back({x, closed[x], b});
  }
  return out;
}

// One line of a counting report: a quantity evaluated by the printed
// formula, by its corrected form, and by enumeration. Missing values are
// quantities a route does not define.
struct CountRow {
  std::string side;      // "R", "L", or "R/L"
  std::string quantity;  // e.g. "singleton_classes", "class_size[k=2]"
  std::optional<count_t> paper;
  std::optional<count_t> corrected;
  std::optional<count_t> enumerated;

  // ok        every available value agrees
  // erratum   printed value differs, corrected value matches enumeration
  // mismatch  corrected value differs from enumeration
  // unverified  no enumeration available; printed and corrected agree
  // erratum-unverified  no enumeration; printed and corrected differ
  std::string flag() const {
    if (enumerated) {
      if (corrected && *corrected != *enumerated) return "mismatch";
      if (paper && *paper != *enumerated) return "erratum";
      return "ok";
    }
    if (paper && corrected && *paper != *corrected) return "erratum-unverified";
    return "unverified";
  }
};

namespace detail {

// Per-rank view of a classification, for comparison with counting formulas.
struct RankProfile {
  count_t singleton_classes = 0;
  count_t multi_classes = 0;
  std::vector<count_t> multi_by_rank;   // number of multi-element classes
  std::vector<count_t> largest_by_rank; // largest class size, 0 if no class
  std::vector<bool> uniform_by_rank;    // all multi classes of that rank equal size
};

template <Element E>
RankProfile rank_profile(const VariantSemigroup<E>& v, const GreenClassification& g) {
  RankProfile p;
  const auto n = v.degree();
  p.multi_by_rank.assign(n + 1, 0);
  p.largest_by_rank.assign(n + 1, 0);
  p.uniform_by_rank.assign(n + 1, true);
  std::vector<count_t> multi_size(n + 1, 0);
  for (const auto& cls : g.classes()) {
    const auto k = v.element(cls.front()).rank();
    const auto size = static_cast<count_t>(cls.size());
    p.largest_by_rank[k] = std::max(p.largest_by_rank[k], size);
    if (size == 1) {
      ++p.singleton_classes;
      continue;
    }
    ++p.multi_classes;
    ++p.multi_by_rank[k];
    if (multi_size[k] != 0 && multi_size[k] != size) p.uniform_by_rank[k] = false;
    multi_size[k] = size;
  }
  return p;
}

}  // namespace detail

}  // namespace vgreen
