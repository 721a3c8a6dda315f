#pragma once

// Closed-form Green's classes and class counts for the variant (IS_n, *_a).
//
// With p = rank(a):
//   R_x = {y : dom y = dom x, ran y in dom a}   if ran x in dom a, else {x}
//   L_x = {y : ran y = ran x, dom y in ran a}   if dom x in ran a, else {x}
//   H_x = {y : dom y = dom x, ran y = ran x}    if both conditions, else {x}
//   D_x = R_x if only the R condition holds, L_x if only the L condition
//         holds, and when both hold
//           {y : dom y in ran a, ran y in dom a}                (printed)
//           {y : dom y in ran a, ran y in dom a, rank y = rank x} (corrected)
// The printed joint D case merges every rank; the connecting element of
// D = L o R has the domain of one end and the range of the other, so only
// equal ranks can be D-related.

#include <optional>
#include <vector>

#include "vgreen/closedform.hpp"
#include "vgreen/elements.hpp"
#include "vgreen/enumerate.hpp"

namespace vgreen {

struct DivisibilityVerdict {
  // Some u in IS_n satisfies y *_a u = x.
  bool solvable = false;
  // dom(x) in dom(y) and ran(y) in dom(a). Sufficient for solvability but
  // not necessary: points of y leaving dom(a) are harmless when they lie
  // outside dom(x).
  bool printed_conditions = false;
  // Defined on ran(a) only: u(a(y(i))) = x(i).
  std::optional<PartialPerm> witness;
};

inline DivisibilityVerdict right_divisible(const PartialPerm& x, const PartialPerm& y,
                                           const PartialPerm& a) {
  detail::check_same_degree(x.degree(), y.degree());
  detail::check_same_degree(y.degree(), a.degree());
  DivisibilityVerdict v;
  const auto ya = compose(y, a);
  v.printed_conditions =
      x.domain().subset_of(y.domain()) && y.range().subset_of(a.domain());
  v.solvable = x.domain().subset_of(ya.domain());
  if (v.solvable) {
    // u = a^{-1} y^{-1} x restricted to ran(a)
    v.witness = compose(compose(inverse(a), inverse(y)), x);
  }
  return v;
}

class IsClassRules {
 public:
  explicit IsClassRules(const PartialPerm& a)
      : a_(a), dom_a_(a.domain()), ran_a_(a.range()), p_(a.rank()) {}

  const PartialPerm& deformation() const { return a_; }
  std::size_t deformation_rank() const { return p_; }

  bool r_condition(const PartialPerm& x) const { return x.range().subset_of(dom_a_); }
  bool l_condition(const PartialPerm& x) const { return x.domain().subset_of(ran_a_); }

  bool singleton_branch(Relation rel, Mode, const PartialPerm& x) const {
    switch (rel) {
      case Relation::r: return !r_condition(x);
      case Relation::l: return !l_condition(x);
      case Relation::h: return !(r_condition(x) && l_condition(x));
      case Relation::d:
      case Relation::j: return !r_condition(x) && !l_condition(x);
    }
    return true;
  }

  bool related(Relation rel, Mode mode, const PartialPerm& x,
               const PartialPerm& y) const {
    if (x == y) return true;
    const bool rc = r_condition(x);
    const bool lc = l_condition(x);
    switch (rel) {
      case Relation::r:
        return rc && y.domain() == x.domain() && y.range().subset_of(dom_a_);
      case Relation::l:
        return lc && y.range() == x.range() && y.domain().subset_of(ran_a_);
      case Relation::h:
        return rc && lc && y.domain() == x.domain() && y.range() == x.range();
      case Relation::d:
      case Relation::j:
        if (rc && !lc) return related(Relation::r, mode, x, y);
        if (!rc && lc) return related(Relation::l, mode, x, y);
        if (rc && lc) {
          const bool inside = y.domain().subset_of(ran_a_) && y.range().subset_of(dom_a_);
          if (mode == Mode::paper_literal) return inside;
          return inside && y.rank() == x.rank();
        }
        return false;
    }
    return false;
  }

 private:
  PartialPerm a_;
  PointSet dom_a_;
  PointSet ran_a_;
  std::size_t p_;
};

namespace detail {

inline std::vector<PartialPerm> is_class(Relation rel, const PartialPerm& x,
                                         const PartialPerm& a, Mode mode) {
  detail::check_same_degree(x.degree(), a.degree());
  return closed_form_class(IsClassRules(a), enumerate<PartialPerm>(x.degree()), rel,
                           mode, x);
}

}  // namespace detail

inline std::vector<PartialPerm> r_class_is(const PartialPerm& x, const PartialPerm& a,
                                           Mode mode = Mode::corrected) {
  return detail::is_class(Relation::r, x, a, mode);
}

inline std::vector<PartialPerm> l_class_is(const PartialPerm& x, const PartialPerm& a,
                                           Mode mode = Mode::corrected) {
  return detail::is_class(Relation::l, x, a, mode);
}

inline std::vector<PartialPerm> h_class_is(const PartialPerm& x, const PartialPerm& a,
                                           Mode mode = Mode::corrected) {
  return detail::is_class(Relation::h, x, a, mode);
}

inline std::vector<PartialPerm> d_class_is(const PartialPerm& x, const PartialPerm& a,
                                           Mode mode = Mode::corrected) {
  return detail::is_class(Relation::d, x, a, mode);
}

// Printed and corrected class counts of (IS_n, *_a), with enumerated values
// when the brute-force engine can reach n.
//
// For p = rank(a) >= 2 the printed one-element count is the double sum
//   sum_k sum_{m=1}^{k} C(n-p, m) C(p, k-m) C(n, k) k!
// which counts the x with ran x not inside dom a. The empty map also has a
// one-element class (its R-class has size [p]_0 = 1), so the corrected
// count adds 1. For p <= 1 every class is a singleton.
struct ISCountReport {
  struct SizeRow {
    count_t k = 0;
    count_t class_size = 0;   // [p]_k
    count_t class_count = 0;  // C(n,k)
  };
  struct Enumerated {
    detail::RankProfile r;
    detail::RankProfile l;
  };

  std::size_t n = 0;
  std::size_t p = 0;
  count_t universe_size = 0;
  bool all_singleton = false;  // p <= 1
  count_t singleton_count_paper = 0;
  count_t singleton_count_corrected = 0;
  count_t multi_class_count = 0;
  std::vector<SizeRow> size_table;
  std::optional<Enumerated> enumerated;

  std::vector<CountRow> rows() const {
    std::vector<CountRow> out;
    const char* sides[] = {"R", "L"};
    for (int s = 0; s < 2; ++s) {
      const detail::RankProfile* e = nullptr;
      if (enumerated) e = s == 0 ? &enumerated->r : &enumerated->l;
      auto en = [&](auto f) -> std::optional<count_t> {
        if (!e) return std::nullopt;
        return f(*e);
      };
      out.push_back({sides[s], "singleton_classes", singleton_count_paper,
                     singleton_count_corrected,
                     en([](const auto& r) { return r.singleton_classes; })});
      out.push_back({sides[s], "multi_classes", multi_class_count, multi_class_count,
                     en([](const auto& r) { return r.multi_classes; })});
      for (const auto& row : size_table) {
        const auto k = static_cast<std::size_t>(row.k);
        out.push_back({sides[s], "classes_of_rank[k=" + std::to_string(k) + "]",
                       row.class_count, row.class_count,
                       en([&](const auto& r) { return r.multi_by_rank[k]; })});
        out.push_back({sides[s], "class_size[k=" + std::to_string(k) + "]",
                       row.class_size, row.class_size,
                       en([&](const auto& r) -> count_t {
                         return r.uniform_by_rank[k] ? r.largest_by_rank[k] : -1;
                       })});
      }
      count_t covered = 0;
      for (const auto& row : size_table) covered += row.class_size * row.class_count;
      out.push_back({sides[s], "total_elements", singleton_count_paper + covered,
                     singleton_count_corrected + covered,
                     en([&](const auto&) { return universe_size; })});
    }
    return out;
  }

  bool corrected_matches() const {
    for (const auto& row : rows()) {
      if (row.flag() == "mismatch") return false;
    }
    return true;
  }
};

inline count_t is_singleton_double_sum(count_t n, count_t p) {
  count_t total = 0;
  for (count_t k = 0; k <= n; ++k) {
    for (count_t m = 1; m <= k; ++m) {
      total += binomial(n - p, m) * binomial(p, k - m) * binomial(n, k) * factorial(k);
    }
  }
  return total;
}

// Formulas only; call with_enumeration to fill in the brute-force side.
inline ISCountReport count_is_classes_formula(const PartialPerm& a) {
  ISCountReport rep;
  rep.n = a.degree();
  rep.p = a.rank();
  const auto n = static_cast<count_t>(rep.n);
  const auto p = static_cast<count_t>(rep.p);
  rep.universe_size =
      static_cast<count_t>(family_traits<PartialPerm>::cardinality(rep.n));
  if (p <= 1) {
    rep.all_singleton = true;
    rep.singleton_count_paper = rep.universe_size;
    rep.singleton_count_corrected = rep.universe_size;
    return rep;
  }
  rep.singleton_count_paper = is_singleton_double_sum(n, p);
  rep.singleton_count_corrected = rep.singleton_count_paper + 1;
  for (count_t k = 1; k <= p; ++k) {
    rep.multi_class_count += binomial(n, k);
    rep.size_table.push_back({k, falling_factorial(p, k), binomial(n, k)});
  }
  return rep;
}

inline ISCountReport count_is_classes(const PartialPerm& a, EngineOptions options = {}) {
  auto rep = count_is_classes_formula(a);
  if (a.degree() <= brute_cap) {
    VariantSemigroup<PartialPerm> v(a, options);
    ISCountReport::Enumerated e;
    e.r = detail::rank_profile(v, green_classes_brute(v, Relation::r));
    e.l = detail::rank_profile(v, green_classes_brute(v, Relation::l));
    rep.enumerated = e;
  }
  return rep;
}

}  // namespace vgreen
