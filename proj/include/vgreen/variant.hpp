#pragma once

// Variant (sandwich) semigroups (S, *_a) with x *_a y = x a y, products
// taken left to right, over the full universe IS_n or T_n.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vgreen/elements.hpp"
#include "vgreen/enumerate.hpp"
#include "vgreen/errors.hpp"

namespace vgreen {

// (x *_a y)(i) = y(a(x(i))).
template <Element E>
E variant_product(const E& x, const E& a, const E& y) {
  detail::check_same_degree(x.degree(), a.degree());
  detail::check_same_degree(a.degree(), y.degree());
  return compose(compose(x, a), y);
}

struct EngineOptions {
  // The product table is materialized when |S| is at most this.
  std::size_t table_threshold = 4000;
  // Upper bound on product evaluations a single brute-force pass may spend.
  std::uint64_t product_budget = 50'000'000;
};

// Degree cap for brute-force Green's computations, both families.
inline constexpr std::size_t brute_cap = 5;

using index_t = std::uint32_t;

template <Element E>
class VariantSemigroup {
 public:
  using element_type = E;
  using traits = family_traits<E>;

  explicit VariantSemigroup(E a, EngineOptions options = {})
      : a_(a), options_(options), universe_(enumerate<E>(a.degree())) {
    const auto n = a.degree();
    std::uint64_t codes = 1;
    for (std::size_t i = 0; i < n; ++i) codes *= traits::code_base(n);
    code_to_index_.assign(codes, invalid_index);
    for (std::size_t i = 0; i < universe_.size(); ++i) {
      code_to_index_[traits::code(universe_[i])] = static_cast<index_t>(i);
    }
    right_by_a_.reserve(universe_.size());
    for (const auto& x : universe_) right_by_a_.push_back(compose(x, a_));

    if (universe_.size() <= options_.table_threshold &&
        universe_.size() <= 0xFFFFu) {
      const auto size = universe_.size();
      table_.resize(size * size);
      for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
          table_[i * size + j] = static_cast<std::uint16_t>(
              index_of(compose(right_by_a_[i], universe_[j])));
        }
      }
    }
  }

  Family family() const { return traits::family; }
  std::size_t degree() const { return a_.degree(); }
  const E& deformation() const { return a_; }
  std::size_t deformation_rank() const { return a_.rank(); }
  const EngineOptions& options() const { return options_; }

  std::size_t size() const { return universe_.size(); }
  const E& element(index_t i) const { return universe_[i]; }
  const std::vector<E>& elements() const { return universe_; }

  index_t index_of(const E& x) const {
    detail::check_same_degree(x.degree(), degree());
    return code_to_index_[traits::code(x)];
  }

  bool has_table() const { return !table_.empty(); }

  // Index of element(x) *_a element(y).
  index_t product(index_t x, index_t y) const {
    if (!table_.empty()) return table_[std::size_t{x} * universe_.size() + y];
    return index_of(compose(right_by_a_[x], universe_[y]));
  }

  E product(const E& x, const E& y) const {
    return universe_[product(index_of(x), index_of(y))];
  }

  // Exhaustive associativity check; returns the first failing triple.
  std::optional<std::array<index_t, 3>> find_associativity_failure() const {
    const auto size = static_cast<index_t>(universe_.size());
    for (index_t x = 0; x < size; ++x) {
      for (index_t y = 0; y < size; ++y) {
        const auto xy = product(x, y);
        for (index_t z = 0; z < size; ++z) {
          if (product(xy, z) != product(x, product(y, z))) {
            return std::array<index_t, 3>{x, y, z};
          }
        }
      }
    }
    return std::nullopt;
  }

 private:
  static constexpr index_t invalid_index = ~index_t{0};

  E a_;
  EngineOptions options_;
  std::vector<E> universe_;
  std::vector<index_t> code_to_index_;
  std::vector<E> right_by_a_;  // x a, per universe index
  std::vector<std::uint16_t> table_;
};

}  // namespace vgreen
