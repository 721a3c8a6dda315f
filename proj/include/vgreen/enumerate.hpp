#pragma once

// Family traits and exhaustive enumeration of IS_n and T_n.
//
// Canonical order is lexicographic on image sequences with "undefined"
// before every point. Each element has an integer code: the image sequence
// read as a base-b numeral, first position most significant, where b = n+1
// for IS_n (digit 0 = undefined) and b = n for T_n. Codes are monotone in the
// canonical order.

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "vgreen/elements.hpp"
#include "vgreen/errors.hpp"

namespace vgreen {

enum class Family { is, t };

inline std::string_view to_string(Family f) {
  return f == Family::is ? "is" : "t";
}

namespace detail {

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

inline std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r = saturating_mul(r, base);
  return r;
}

}  // namespace detail

template <>
struct family_traits<PartialPerm> {
  static constexpr Family family = Family::is;
  static constexpr std::string_view name = "IS";
  static constexpr std::size_t enumeration_cap = 6;

  // sum_k C(n,k)^2 k!
  static std::uint64_t cardinality(std::size_t n) {
    std::uint64_t total = 0;
    std::uint64_t binom = 1;  // C(n,k)
    std::uint64_t fact = 1;   // k!
    for (std::size_t k = 0; k <= n; ++k) {
      if (k > 0) {
        binom = binom * (n - k + 1) / k;
        fact = detail::saturating_mul(fact, k);
      }
      total += detail::saturating_mul(detail::saturating_mul(binom, binom), fact);
    }
    return total;
  }

  static std::size_t code_base(std::size_t n) { return n + 1; }

  static std::uint64_t code(const PartialPerm& x) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < x.degree(); ++i) c = c * (x.degree() + 1) + x.digit(i);
    return c;
  }

  // Returns false when the digit sequence is not injective.
  static bool try_from_digits(std::span<const std::uint8_t> digits,
                              PartialPerm& out) {
    PartialPerm x(digits.size());
    std::uint32_t seen = 0;
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (digits[i] == 0) continue;
      auto v = static_cast<std::uint8_t>(digits[i] - 1);
      if ((seen >> v) & 1u) return false;
      seen |= std::uint32_t{1} << v;
      x.images_[i] = v;
    }
    out = x;
    return true;
  }
};

template <>
struct family_traits<Transformation> {
  static constexpr Family family = Family::t;
  static constexpr std::string_view name = "T";
  static constexpr std::size_t enumeration_cap = 7;

  static std::uint64_t cardinality(std::size_t n) {
    return detail::saturating_pow(n, n);
  }

  static std::size_t code_base(std::size_t n) { return n; }

  static std::uint64_t code(const Transformation& x) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < x.degree(); ++i) c = c * x.degree() + x.digit(i);
    return c;
  }

  static bool try_from_digits(std::span<const std::uint8_t> digits,
                              Transformation& out) {
    Transformation x;
    x.n_ = static_cast<std::uint8_t>(digits.size());
    for (std::size_t i = 0; i < digits.size(); ++i) x.images_[i] = digits[i];
    out = x;
    return true;
  }
};

template <class E>
concept Element = requires { family_traits<E>::family; };

template <Element E>
void check_enumeration_cap(std::size_t n) {
  using traits = family_traits<E>;
  if (n == 0) throw std::invalid_argument("degree must be at least 1");
  if (n > traits::enumeration_cap) {
    auto card = traits::cardinality(n);
    throw CapacityError(std::string(traits::name) + "_" + std::to_string(n) +
                            " has " + std::to_string(card) +
                            " elements; enumeration is capped at n <= " +
                            std::to_string(traits::enumeration_cap),
                        card);
  }
}

// All elements of the family at degree n, in canonical order.
template <Element E>
std::vector<E> enumerate(std::size_t n) {
  using traits = family_traits<E>;
  check_enumeration_cap<E>(n);
  std::vector<E> out;
  out.reserve(traits::cardinality(n));
  const auto base = static_cast<std::uint8_t>(traits::code_base(n));
  std::vector<std::uint8_t> digits(n, 0);
  E x;
  while (true) {
    if (traits::try_from_digits(digits, x)) out.push_back(x);
    // odometer increment, last position least significant
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++digits[i] < base) break;
      digits[i] = 0;
      if (i == 0) return out;
    }
  }
}

}  // namespace vgreen
