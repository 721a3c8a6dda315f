#pragma once

// Closed-form Green's classes and class counts for the variant (T_n, *_a),
// n > 1. Notation: rho_x is the kernel partition of x, p = rank(a).
//
//   R condition on x: a is injective on ran x (every block of rho_a meets
//     ran x at most once; this forces rank x <= p).
//   L condition on x: p > 1 and every block of rho_x meets ran a.
//
//   R_x = {y : rho_y = rho_x, R condition on y}          if R cond., else {x}
//   L_x = {y : ran y = ran x, every block of rho_y meets ran a}
//                                                          if L cond., else {x}
//   H_x = R_x meet L_x under both conditions, else {x}
//   D_x: R_x when the R condition holds and some block of rho_x misses
//        ran a (or p = 1); L_x in the second case below; when both block
//        conditions hold,
//          {y : blocks of rho_y meet ran a, a injective on ran y}  (printed)
//          ... and rank y = rank x                              (corrected)
//        otherwise {x}.
//   The second D case is printed as "every block M of rho_a meets ran x
//   more than once", which can never hold together with the other
//   hypotheses. Corrected mode reads it as "some block meets ran x at least
//   twice", i.e. the negation of the R condition.

#include <optional>
#include <stdexcept>
#include <vector>

#include "vgreen/closedform.hpp"
#include "vgreen/elements.hpp"
#include "vgreen/enumerate.hpp"

namespace vgreen {

class TClassRules {
 public:
  explicit TClassRules(const Transformation& a)
      : a_(a), ran_a_(a.range()), p_(a.rank()), n_(a.degree()) {
    if (n_ < 2) {
      throw std::domain_error("closed-form classes on T_n require n > 1");
    }
    fibers_ = kernel_partition(a).blocks();
    injective_on_.resize(std::size_t{1} << n_);
    for (std::uint32_t mask = 0; mask < injective_on_.size(); ++mask) {
      const PointSet s(mask);
      injective_on_[mask] = image_of(a_, s).size() == s.size();
    }
  }

  const Transformation& deformation() const { return a_; }
  std::size_t deformation_rank() const { return p_; }
  const std::vector<PointSet>& deformation_fibers() const { return fibers_; }

  bool a_injective_on(PointSet s) const { return injective_on_[s.mask()]; }

  // Every block of rho_y meets ran a, i.e. y maps ran a onto ran y.
  bool blocks_meet_ran_a(const Transformation& y) const {
    return image_of(y, ran_a_) == y.range();
  }

  bool r_condition(const Transformation& x) const {
    return x.rank() <= p_ && a_injective_on(x.range());
  }

  bool l_condition(const Transformation& x) const {
    return p_ > 1 && x.rank() <= p_ && blocks_meet_ran_a(x);
  }

  bool h_condition(const Transformation& x) const {
    return x.rank() <= p_ && a_injective_on(x.range()) && blocks_meet_ran_a(x);
  }

  // Printed second D case: every block of rho_a meets ran x more than once.
  bool every_fiber_meets_twice(const Transformation& x) const {
    const auto ran = x.range();
    for (auto m : fibers_) {
      if ((m & ran).size() <= 1) return false;
    }
    return true;
  }

  enum class DCase { r_class, l_class, joint, singleton };

  DCase d_case(Mode mode, const Transformation& x) const {
    const bool rank_ok = x.rank() <= p_;
    const bool inj = a_injective_on(x.range());
    const bool meets = blocks_meet_ran_a(x);
    if (rank_ok && inj && (!meets || p_ == 1)) return DCase::r_class;
    const bool second = mode == Mode::paper_literal ? every_fiber_meets_twice(x) : !inj;
    if (rank_ok && second && meets) return DCase::l_class;
    if (rank_ok && inj && meets) return DCase::joint;
    return DCase::singleton;
  }

  bool singleton_branch(Relation rel, Mode mode, const Transformation& x) const {
    switch (rel) {
      case Relation::r: return !r_condition(x);
      case Relation::l: return !l_condition(x);
      case Relation::h: return !h_condition(x);
      case Relation::d:
      case Relation::j: {
        const auto c = d_case(mode, x);
        if (c == DCase::r_class) return !r_condition(x);
        if (c == DCase::l_class) return !l_condition(x);
        return c == DCase::singleton;
      }
    }
    return true;
  }

  bool related(Relation rel, Mode mode, const Transformation& x,
               const Transformation& y) const {
    if (x == y) return true;
    switch (rel) {
      case Relation::r:
        return r_condition(x) && kernel_code(y) == kernel_code(x) &&
               a_injective_on(y.range());
      case Relation::l:
        return l_condition(x) && y.range() == x.range() && blocks_meet_ran_a(y);
      case Relation::h:
        return h_condition(x) && kernel_code(y) == kernel_code(x) &&
               y.range() == x.range() && a_injective_on(y.range()) &&
               blocks_meet_ran_a(y);
      case Relation::d:
      case Relation::j:
        switch (d_case(mode, x)) {
          case DCase::r_class: return related(Relation::r, mode, x, y);
          case DCase::l_class: return related(Relation::l, mode, x, y);
          case DCase::joint: {
            const bool inside = blocks_meet_ran_a(y) && a_injective_on(y.range());
            if (mode == Mode::paper_literal) return inside;
            return inside && y.rank() == x.rank();
          }
          case DCase::singleton: return false;
        }
    }
    return false;
  }

 private:
  Transformation a_;
  PointSet ran_a_;
  std::size_t p_;
  std::size_t n_;
  std::vector<PointSet> fibers_;
  std::vector<char> injective_on_;
};

namespace detail {

inline std::vector<Transformation> t_class(Relation rel, const Transformation& x,
                                           const Transformation& a, Mode mode) {
  detail::check_same_degree(x.degree(), a.degree());
  return closed_form_class(TClassRules(a), enumerate<Transformation>(x.degree()), rel,
                           mode, x);
}

}  // namespace detail

inline std::vector<Transformation> r_class_t(const Transformation& x,
                                             const Transformation& a,
                                             Mode mode = Mode::corrected) {
  return detail::t_class(Relation::r, x, a, mode);
}

inline std::vector<Transformation> l_class_t(const Transformation& x,
                                             const Transformation& a,
                                             Mode mode = Mode::corrected) {
  return detail::t_class(Relation::l, x, a, mode);
}

inline std::vector<Transformation> h_class_t(const Transformation& x,
                                             const Transformation& a,
                                             Mode mode = Mode::corrected) {
  return detail::t_class(Relation::h, x, a, mode);
}

inline std::vector<Transformation> d_class_t(const Transformation& x,
                                             const Transformation& a,
                                             Mode mode = Mode::corrected) {
  return detail::t_class(Relation::d, x, a, mode);
}

// Printed and corrected class counts of (T_n, *_a).
//
// L side, p > 1. Printed: C(n,m) multi-element classes for each 1 <= m <= p,
// each of size S(p,m) * sum_{j=1}^{m} S(n-p,j) C(m,j) j!. Corrected: a class
// is fixed by its range R (|R| = m); y belongs to it iff y maps ran a onto
// R (m! S(p,m) ways, fibers being labeled by their image) and sends the
// other n-p points anywhere in R (m^{n-p} ways). For m = 1 that size is 1,
// so multi-element classes only occur for 2 <= m <= p.
//
// R side, as printed: S(n,m) multi-element classes of size
// m! e_m(n(a_1), ..., n(a_p)) for 1 <= m <= p, where n(a_i) = |a^{-1}(a_i)|.
struct TCountReport {
  struct SideCounts {
    count_t singleton_paper = 0;
    count_t singleton_corrected = 0;
    count_t multi_paper = 0;
    count_t multi_corrected = 0;
    struct PerRank {
      count_t m = 0;
      count_t classes_paper = 0;
      count_t classes_corrected = 0;
      count_t size_paper = 0;
      count_t size_corrected = 0;
    };
    std::vector<PerRank> per_rank;
  };
  struct Enumerated {
    detail::RankProfile r;
    detail::RankProfile l;
  };

  std::size_t n = 0;
  std::size_t p = 0;
  count_t universe_size = 0;
  std::vector<count_t> fiber_sizes;  // n(a_i), by increasing a_i
  SideCounts l;
  SideCounts r;
  std::optional<Enumerated> enumerated;

  std::vector<CountRow> rows() const {
    std::vector<CountRow> out;
    auto side_rows = [&](const char* name, const SideCounts& c,
                         const detail::RankProfile* e) {
      auto en = [&](auto f) -> std::optional<count_t> {
        if (!e) return std::nullopt;
        return f(*e);
      };
      out.push_back({name, "singleton_classes", c.singleton_paper, c.singleton_corrected,
                     en([](const auto& r) { return r.singleton_classes; })});
      out.push_back({name, "multi_classes", c.multi_paper, c.multi_corrected,
                     en([](const auto& r) { return r.multi_classes; })});
      count_t covered_paper = 0;
      count_t covered_corrected = 0;
      for (const auto& row : c.per_rank) {
        const auto m = static_cast<std::size_t>(row.m);
        out.push_back({name, "classes_of_rank[m=" + std::to_string(m) + "]",
                       row.classes_paper, row.classes_corrected,
                       en([&](const auto& r) { return r.multi_by_rank[m]; })});
        out.push_back({name, "class_size[m=" + std::to_string(m) + "]", row.size_paper,
                       row.size_corrected, en([&](const auto& r) -> count_t {
                         return r.uniform_by_rank[m] ? r.largest_by_rank[m] : -1;
                       })});
        covered_paper += row.classes_paper * row.size_paper;
        covered_corrected += row.classes_corrected * row.size_corrected;
      }
      out.push_back({name, "total_elements", c.singleton_paper + covered_paper,
                     c.singleton_corrected + covered_corrected,
                     en([&](const auto&) { return universe_size; })});
    };
    side_rows("L", l, enumerated ? &enumerated->l : nullptr);
    side_rows("R", r, enumerated ? &enumerated->r : nullptr);
    return out;
  }

  bool corrected_matches() const {
    for (const auto& row : rows()) {
      if (row.flag() == "mismatch") return false;
    }
    return true;
  }
};

// Printed L-class size: S(p,m) sum_{j=1}^{m} S(n-p,j) C(m,j) j!.
inline count_t t_l_size_printed(count_t n, count_t p, count_t m) {
  count_t inner = 0;
  for (count_t j = 1; j <= m; ++j) {
    inner += stirling2(n - p, j) * binomial(m, j) * factorial(j);
  }
  return stirling2(p, m) * inner;
}

inline count_t t_l_size_corrected(count_t n, count_t p, count_t m) {
  return factorial(m) * stirling2(p, m) * ipow(m, n - p);
}

inline TCountReport count_t_classes_formula(const Transformation& a) {
  if (a.degree() < 2) {
    throw std::domain_error("class counts on T_n require n > 1");
  }
  TCountReport rep;
  rep.n = a.degree();
  rep.p = a.rank();
  const auto n = static_cast<count_t>(rep.n);
  const auto p = static_cast<count_t>(rep.p);
  rep.universe_size = ipow(n, n);
  for (auto v : a.range().points()) {
    rep.fiber_sizes.push_back(static_cast<count_t>(preimage(a, v).size()));
  }

  auto& l = rep.l;
  if (p == 1) {
    l.singleton_paper = l.singleton_corrected = rep.universe_size;
  } else {
    count_t covered_paper = 0;
    count_t covered_corrected = 0;
    for (count_t m = 1; m <= p; ++m) {
      TCountReport::SideCounts::PerRank row;
      row.m = m;
      row.classes_paper = binomial(n, m);
      row.classes_corrected = m >= 2 ? binomial(n, m) : 0;
      row.size_paper = t_l_size_printed(n, p, m);
      row.size_corrected = t_l_size_corrected(n, p, m);
      l.multi_paper += row.classes_paper;
      l.multi_corrected += row.classes_corrected;
      covered_paper += row.classes_paper * row.size_paper;
      covered_corrected += row.classes_corrected * row.size_corrected;
      l.per_rank.push_back(row);
    }
    l.singleton_paper = rep.universe_size - covered_paper;
    l.singleton_corrected = rep.universe_size - covered_corrected;
  }

  auto& r = rep.r;
  count_t covered = 0;
  for (count_t m = 1; m <= p; ++m) {
    TCountReport::SideCounts::PerRank row;
    row.m = m;
    row.classes_paper = row.classes_corrected = stirling2(n, m);
    row.size_paper = row.size_corrected =
        elementary_symmetric(rep.fiber_sizes, static_cast<std::size_t>(m)) * factorial(m);
    r.multi_paper += row.classes_paper;
    covered += row.classes_paper * row.size_paper;
    r.per_rank.push_back(row);
  }
  r.multi_corrected = r.multi_paper;
  r.singleton_paper = r.singleton_corrected = rep.universe_size - covered;
  return rep;
}

inline TCountReport count_t_classes(const Transformation& a, EngineOptions options = {}) {
  auto rep = count_t_classes_formula(a);
  if (a.degree() <= brute_cap) {
    VariantSemigroup<Transformation> v(a, options);
    TCountReport::Enumerated e;
    e.r = detail::rank_profile(v, green_classes_brute(v, Relation::r));
    e.l = detail::rank_profile(v, green_classes_brute(v, Relation::l));
    rep.enumerated = e;
  }
  return rep;
}

}  // namespace vgreen
