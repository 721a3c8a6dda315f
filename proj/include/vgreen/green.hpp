#pragma once

// Brute-force Green's relations on a finite variant semigroup.
//
// Ideals are taken in S^1: the adjoined identity is formal and contributes
// only the x term, so xS^1 = {x} u xS. Because x S S is contained in xS, the
// right ideal of x is exactly the set reachable from x in the right Cayley
// graph (edges v -> v *_a s), and R-classes are its strongly connected
// components. L and J are handled the same way with left edges and with
// both kinds of edges. H is the meet of R and L; D is the join, built with
// union-find over R- and L-class ids.

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vgreen/errors.hpp"
#include "vgreen/variant.hpp"

namespace vgreen {

enum class Relation { r, l, h, d, j };
enum class Method { brute, paper_literal, corrected };
enum class Side { right, left, two_sided };

inline std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::r: return "R";
    case Relation::l: return "L";
    case Relation::h: return "H";
    case Relation::d: return "D";
    case Relation::j: return "J";
  }
  return "?";
}

inline std::string_view to_string(Method m) {
  switch (m) {
    case Method::brute: return "brute";
    case Method::paper_literal: return "paper-literal";
    case Method::corrected: return "corrected";
  }
  return "?";
}

// A partition of the universe into classes of one relation. Classes are
// numbered in order of their least member, members are sorted, and the
// representative of a class is its least member.
class GreenClassification {
 public:
  GreenClassification() = default;

  // labels[x] is any class label; equal labels mean the same class.
  template <class Label>
  static GreenClassification from_labels(Relation relation, Method method,
                                         const std::vector<Label>& labels) {
    GreenClassification g;
    g.relation_ = relation;
    g.method_ = method;
    g.class_of_.resize(labels.size());
    std::map<Label, index_t> renumber;
    for (std::size_t x = 0; x < labels.size(); ++x) {
      auto [it, fresh] = renumber.try_emplace(
          labels[x], static_cast<index_t>(g.classes_.size()));
      if (fresh) g.classes_.emplace_back();
      g.class_of_[x] = it->second;
      g.classes_[it->second].push_back(static_cast<index_t>(x));
    }
    return g;
  }

  Relation relation() const { return relation_; }
  Method method() const { return method_; }

  std::size_t size() const { return classes_.size(); }
  std::size_t universe_size() const { return class_of_.size(); }

  index_t class_of(index_t x) const { return class_of_[x]; }
  const std::vector<index_t>& members(std::size_t c) const { return classes_[c]; }
  const std::vector<index_t>& class_containing(index_t x) const {
    return classes_[class_of_[x]];
  }
  index_t representative(std::size_t c) const { return classes_[c].front(); }
  const std::vector<std::vector<index_t>>& classes() const { return classes_; }

  bool same_partition(const GreenClassification& other) const {
    return class_of_ == other.class_of_;
  }

 private:
  Relation relation_ = Relation::r;
  Method method_ = Method::brute;
  std::vector<index_t> class_of_;
  std::vector<std::vector<index_t>> classes_;
};

namespace detail {

// Iterative Tarjan over an implicit graph on [0, n) where vertex v has
// `degree` successors succ(v, 0..degree-1). Returns a component label per
// vertex.
template <class Succ>
std::vector<index_t> scc_labels(std::size_t n, std::size_t degree, Succ succ) {
  constexpr index_t unvisited = ~index_t{0};
  std::vector<index_t> order(n, unvisited), low(n, 0), label(n, unvisited);
  std::vector<index_t> stack;
  std::vector<char> on_stack(n, 0);
  struct Frame {
    index_t v;
    std::size_t next;
  };
  std::vector<Frame> calls;
  index_t counter = 0;
  index_t components = 0;

  auto visit = [&](index_t v) {
    order[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = 1;
    calls.push_back({v, 0});
  };

  for (index_t root = 0; root < n; ++root) {
    if (order[root] != unvisited) continue;
    visit(root);
    while (!calls.empty()) {
      const index_t v = calls.back().v;
      if (calls.back().next < degree) {
        const index_t w = succ(v, calls.back().next++);
        if (order[w] == unvisited) {
          visit(w);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], order[w]);
        }
        continue;
      }
      calls.pop_back();
      if (low[v] == order[v]) {
        index_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          label[w] = components;
        } while (w != v);
        ++components;
      }
      if (!calls.empty()) {
        auto& parent = low[calls.back().v];
        parent = std::min(parent, low[v]);
      }
    }
  }
  return label;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), index_t{0});
  }

  index_t find(index_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(index_t a, index_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<index_t> parent_;
};

template <Element E>
void check_brute_budget(const VariantSemigroup<E>& v, std::uint64_t evaluations) {
  if (v.degree() > brute_cap) {
    throw CapacityError("brute-force Green's relations are capped at n <= " +
                            std::to_string(brute_cap),
                        v.size());
  }
  if (evaluations > v.options().product_budget) {
    throw CapacityError(std::to_string(evaluations) +
                            " product evaluations exceed the budget of " +
                            std::to_string(v.options().product_budget),
                        evaluations);
  }
}

inline std::vector<std::pair<index_t, index_t>> pair_labels(
    const GreenClassification& a, const GreenClassification& b) {
  std::vector<std::pair<index_t, index_t>> out(a.universe_size());
  for (index_t x = 0; x < out.size(); ++x) out[x] = {a.class_of(x), b.class_of(x)};
  return out;
}

inline std::vector<index_t> join_labels(const GreenClassification& a,
                                        const GreenClassification& b) {
  UnionFind uf(a.universe_size());
  for (index_t x = 0; x < a.universe_size(); ++x) {
    uf.unite(x, a.class_containing(x).front());
    uf.unite(x, b.class_containing(x).front());
  }
  std::vector<index_t> out(a.universe_size());
  for (index_t x = 0; x < out.size(); ++x) out[x] = uf.find(x);
  return out;
}

}  // namespace detail

// All five relations of one variant semigroup.
struct GreenStructure {
  GreenClassification r, l, h, d, j;

  const GreenClassification& get(Relation rel) const {
    switch (rel) {
      case Relation::r: return r;
      case Relation::l: return l;
      case Relation::h: return h;
      case Relation::d: return d;
      case Relation::j: return j;
    }
    return r;
  }
};

template <Element E>
GreenClassification right_classes_scc(const VariantSemigroup<E>& v) {
  const auto n = v.size();
  detail::check_brute_budget(v, std::uint64_t{n} * n);
  auto labels = detail::scc_labels(
      n, n, [&](index_t x, std::size_t s) { return v.product(x, static_cast<index_t>(s)); });
  return GreenClassification::from_labels(Relation::r, Method::brute, labels);
}

template <Element E>
GreenClassification left_classes_scc(const VariantSemigroup<E>& v) {
  const auto n = v.size();
  detail::check_brute_budget(v, std::uint64_t{n} * n);
  auto labels = detail::scc_labels(
      n, n, [&](index_t x, std::size_t s) { return v.product(static_cast<index_t>(s), x); });
  return GreenClassification::from_labels(Relation::l, Method::brute, labels);
}

template <Element E>
GreenClassification two_sided_classes_scc(const VariantSemigroup<E>& v) {
  const auto n = v.size();
  detail::check_brute_budget(v, 2 * std::uint64_t{n} * n);
  auto labels = detail::scc_labels(n, 2 * n, [&](index_t x, std::size_t s) {
    return s < n ? v.product(x, static_cast<index_t>(s))
                 : v.product(static_cast<index_t>(s - n), x);
  });
  return GreenClassification::from_labels(Relation::j, Method::brute, labels);
}

template <Element E>
GreenStructure green_structure_brute(const VariantSemigroup<E>& v) {
  GreenStructure g;
  g.r = right_classes_scc(v);
  g.l = left_classes_scc(v);
  g.h = GreenClassification::from_labels(Relation::h, Method::brute,
                                         detail::pair_labels(g.r, g.l));
  g.d = GreenClassification::from_labels(Relation::d, Method::brute,
                                         detail::join_labels(g.r, g.l));
  g.j = two_sided_classes_scc(v);
  return g;
}

template <Element E>
GreenClassification green_classes_brute(const VariantSemigroup<E>& v,
                                        Relation relation) {
  switch (relation) {
    case Relation::r: return right_classes_scc(v);
    case Relation::l: return left_classes_scc(v);
    case Relation::j: return two_sided_classes_scc(v);
    case Relation::h: {
      auto r = right_classes_scc(v);
      auto l = left_classes_scc(v);
      return GreenClassification::from_labels(Relation::h, Method::brute,
                                              detail::pair_labels(r, l));
    }
    case Relation::d: {
      auto r = right_classes_scc(v);
      auto l = left_classes_scc(v);
      return GreenClassification::from_labels(Relation::d, Method::brute,
                                              detail::join_labels(r, l));
    }
  }
  throw std::invalid_argument("unknown relation");
}

// Principal ideal of x in S^1, as sorted universe indices.
template <Element E>
std::vector<index_t> principal_ideal(const VariantSemigroup<E>& v, index_t x,
                                     Side side) {
  const auto n = static_cast<index_t>(v.size());
  std::vector<char> in(n, 0);
  in[x] = 1;
  if (side == Side::right || side == Side::two_sided) {
    for (index_t s = 0; s < n; ++s) in[v.product(x, s)] = 1;
  }
  if (side == Side::left || side == Side::two_sided) {
    for (index_t s = 0; s < n; ++s) in[v.product(s, x)] = 1;
  }
  if (side == Side::two_sided) {
    // S^1 x S^1 = (S^1 x) S^1
    std::vector<index_t> left;
    for (index_t y = 0; y < n; ++y) {
      if (in[y]) left.push_back(y);
    }
    for (auto y : left) {
      for (index_t s = 0; s < n; ++s) in[v.product(y, s)] = 1;
    }
  }
  std::vector<index_t> out;
  for (index_t y = 0; y < n; ++y) {
    if (in[y]) out.push_back(y);
  }
  return out;
}

// Same classification computed by materializing every principal ideal and
// grouping equal ones. Quadratic in memory; used to cross-check the SCC route.
template <Element E>
GreenClassification green_classes_by_ideals(const VariantSemigroup<E>& v,
                                            Relation relation) {
  const auto n = v.size();
  auto group = [&](Relation rel, Side side) {
    detail::check_brute_budget(
        v, side == Side::two_sided ? std::uint64_t{n} * n * n : std::uint64_t{n} * n);
    std::vector<std::vector<index_t>> ideals(n);
    for (index_t x = 0; x < n; ++x) ideals[x] = principal_ideal(v, x, side);
    return GreenClassification::from_labels(rel, Method::brute, ideals);
  };
  switch (relation) {
    case Relation::r: return group(Relation::r, Side::right);
    case Relation::l: return group(Relation::l, Side::left);
    case Relation::j: return group(Relation::j, Side::two_sided);
    case Relation::h:
      return GreenClassification::from_labels(
          Relation::h, Method::brute,
          detail::pair_labels(group(Relation::r, Side::right),
                              group(Relation::l, Side::left)));
    case Relation::d:
      return GreenClassification::from_labels(
          Relation::d, Method::brute,
          detail::join_labels(group(Relation::r, Side::right),
                              group(Relation::l, Side::left)));
  }
  throw std::invalid_argument("unknown relation");
}

// One D-class drawn as a grid: rows are its R-classes, columns its L-classes,
// each cell the H-class at their intersection.
struct EggBox {
  index_t d_class = 0;
  std::vector<index_t> rows;     // R-class ids, by representative
  std::vector<index_t> columns;  // L-class ids, by representative
  std::vector<std::vector<std::vector<index_t>>> cells;  // [row][column]
};

inline EggBox egg_box(const GreenStructure& g, index_t d_class) {
  EggBox box;
  box.d_class = d_class;
  const auto& members = g.d.members(d_class);
  for (auto x : members) {
    box.rows.push_back(g.r.class_of(x));
    box.columns.push_back(g.l.class_of(x));
  }
  auto unique_sorted = [](std::vector<index_t>& ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  };
  // Class ids already follow representative order.
  unique_sorted(box.rows);
  unique_sorted(box.columns);
  box.cells.assign(box.rows.size(),
                   std::vector<std::vector<index_t>>(box.columns.size()));
  for (auto x : members) {
    auto row = std::lower_bound(box.rows.begin(), box.rows.end(), g.r.class_of(x)) -
               box.rows.begin();
    auto col = std::lower_bound(box.columns.begin(), box.columns.end(),
                                g.l.class_of(x)) -
               box.columns.begin();
    box.cells[row][col].push_back(x);
  }
  return box;
}

struct PartitionComparison {
  bool equal = true;
  // Two elements grouped together by exactly one of the partitions.
  std::optional<std::pair<index_t, index_t>> witness;
};

inline PartitionComparison compare_partitions(const GreenClassification& a,
                                              const GreenClassification& b) {
  PartitionComparison out;
  for (index_t x = 0; x < a.universe_size(); ++x) {
    const auto& ca = a.class_containing(x);
    const auto& cb = b.class_containing(x);
    if (ca == cb) continue;
    out.equal = false;
    std::vector<index_t> diff;
    std::set_symmetric_difference(ca.begin(), ca.end(), cb.begin(), cb.end(),
                                  std::back_inserter(diff));
    out.witness = std::make_pair(x, diff.front());
    return out;
  }
  return out;
}

template <Element E>
PartitionComparison verify_d_equals_j(const VariantSemigroup<E>& v) {
  return compare_partitions(green_classes_brute(v, Relation::d),
                            green_classes_brute(v, Relation::j));
}

}  // namespace vgreen
