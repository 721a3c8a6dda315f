#pragma once

// Elements of the symmetric inverse semigroup IS_n (injective partial maps)
// and of the full transformation semigroup T_n (total maps).
//
// Points are 0-based throughout the C++ API; only the text encoding in
// text.hpp is 1-based. Composition is left to right: compose(x, y) first
// applies x, then y, so compose(x, y)[i] == y[x[i]].

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "vgreen/errors.hpp"

namespace vgreen {

// Storage capacity of an element; enumeration and brute-force caps are lower.
inline constexpr std::size_t max_degree = 8;

inline constexpr std::uint8_t undefined_point = 0xFF;

template <class E>
struct family_traits;

// A subset of {0, ..., max_degree - 1} stored as a bitmask.
class PointSet {
 public:
  constexpr PointSet() = default;
  constexpr explicit PointSet(std::uint32_t mask) : mask_(mask) {}

  static constexpr PointSet full(std::size_t n) {
    return PointSet((std::uint32_t{1} << n) - 1);
  }

  constexpr bool contains(std::size_t p) const { return (mask_ >> p) & 1u; }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(mask_));
  }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool subset_of(PointSet other) const {
    return (mask_ & ~other.mask_) == 0;
  }
  constexpr bool intersects(PointSet other) const {
    return (mask_ & other.mask_) != 0;
  }
  constexpr std::uint32_t mask() const { return mask_; }

  constexpr void insert(std::size_t p) { mask_ |= std::uint32_t{1} << p; }

  constexpr PointSet operator&(PointSet o) const {
    return PointSet(mask_ & o.mask_);
  }
  constexpr PointSet operator|(PointSet o) const {
    return PointSet(mask_ | o.mask_);
  }
  constexpr PointSet operator-(PointSet o) const {
    return PointSet(mask_ & ~o.mask_);
  }

  std::vector<std::size_t> points() const {
    std::vector<std::size_t> out;
    for (std::uint32_t m = mask_; m != 0; m &= m - 1) {
      out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    }
    return out;
  }

  constexpr friend bool operator==(PointSet, PointSet) = default;

 private:
  std::uint32_t mask_ = 0;
};

// "{1,3}" with 1-based points.
inline std::string to_string(PointSet s) {
  std::string out = "{";
  bool first = true;
  for (auto p : s.points()) {
    if (!first) out += ',';
    out += std::to_string(p + 1);
    first = false;
  }
  return out + "}";
}

// A set of disjoint nonempty blocks covering a carrier set. Blocks are kept
// ordered by their least point, so two partitions of the same carrier
// compare equal iff they have the same blocks.
class Partition {
 public:
  Partition() = default;

  Partition(std::vector<PointSet> blocks, PointSet carrier)
      : blocks_(std::move(blocks)), carrier_(carrier) {
    PointSet seen;
    for (auto b : blocks_) {
      if (b.empty()) throw std::invalid_argument("partition: empty block");
      if (b.intersects(seen)) {
        throw std::invalid_argument("partition: overlapping blocks");
      }
      seen = seen | b;
    }
    if (seen != carrier_) {
      throw std::invalid_argument("partition: blocks do not cover carrier");
    }
    std::sort(blocks_.begin(), blocks_.end(), [](PointSet a, PointSet b) {
      return std::countr_zero(a.mask()) < std::countr_zero(b.mask());
    });
  }

  const std::vector<PointSet>& blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }
  PointSet carrier() const { return carrier_; }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<PointSet> blocks_;
  PointSet carrier_;
};

inline std::string to_string(const Partition& p) {
  std::string out = "{";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += to_string(p.blocks()[i]);
  }
  return out + "}";
}

namespace detail {

inline void check_degree(std::size_t n) {
  if (n == 0 || n > max_degree) {
    throw std::invalid_argument("degree must lie in 1.." +
                                std::to_string(max_degree) + ", got " +
                                std::to_string(n));
  }
}

inline void check_same_degree(std::size_t lhs, std::size_t rhs) {
  if (lhs != rhs) throw DimensionError(lhs, rhs);
}

}  // namespace detail

// Injective partial self-map of {0..n-1}; an element of IS_n.
class PartialPerm {
 public:
  PartialPerm() = default;

  // The empty map of degree n.
  explicit PartialPerm(std::size_t n) : n_(static_cast<std::uint8_t>(n)) {
    detail::check_degree(n);
    images_.fill(undefined_point);
  }

  // images[i] is the 0-based image of i, or undefined_point.
  static PartialPerm from_images(std::span<const std::uint8_t> images) {
    PartialPerm x(images.size());
    PointSet seen;
    for (std::size_t i = 0; i < images.size(); ++i) {
      auto v = images[i];
      if (v == undefined_point) continue;
      if (v >= images.size()) {
        throw InvalidElement("image " + std::to_string(v + 1) +
                             " out of range 1.." +
                             std::to_string(images.size()));
      }
      if (seen.contains(v)) {
        throw InjectivityError("point " + std::to_string(v + 1) +
                               " is the image of two points");
      }
      seen.insert(v);
      x.images_[i] = v;
    }
    return x;
  }

  static PartialPerm identity(std::size_t n) {
    PartialPerm x(n);
    for (std::size_t i = 0; i < n; ++i) x.images_[i] = static_cast<std::uint8_t>(i);
    return x;
  }

  std::size_t degree() const { return n_; }

  std::uint8_t operator[](std::size_t i) const { return images_[i]; }
  bool defined_at(std::size_t i) const { return images_[i] != undefined_point; }

  PointSet domain() const {
    PointSet s;
    for (std::size_t i = 0; i < n_; ++i) {
      if (defined_at(i)) s.insert(i);
    }
    return s;
  }

  PointSet range() const {
    PointSet s;
    for (std::size_t i = 0; i < n_; ++i) {
      if (defined_at(i)) s.insert(images_[i]);
    }
    return s;
  }

  std::size_t rank() const { return domain().size(); }

  // Digit of position i in the canonical order: undefined is 0, point v is v+1.
  std::uint8_t digit(std::size_t i) const {
    return static_cast<std::uint8_t>(images_[i] + 1);
  }

  friend bool operator==(const PartialPerm& x, const PartialPerm& y) {
    return x.n_ == y.n_ && x.images_ == y.images_;
  }

  // Canonical order: by degree, then lexicographic on digits.
  friend std::strong_ordering operator<=>(const PartialPerm& x,
                                          const PartialPerm& y) {
    if (auto c = x.n_ <=> y.n_; c != 0) return c;
    for (std::size_t i = 0; i < x.n_; ++i) {
      if (auto c = x.digit(i) <=> y.digit(i); c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

 private:
  template <class E>
  friend struct family_traits;
  friend PartialPerm compose(const PartialPerm&, const PartialPerm&);
  friend PartialPerm inverse(const PartialPerm&);

  std::array<std::uint8_t, max_degree> images_{};
  std::uint8_t n_ = 0;
};

// Total self-map of {0..n-1}; an element of T_n.
class Transformation {
 public:
  Transformation() = default;

  static Transformation from_images(std::span<const std::uint8_t> images) {
    detail::check_degree(images.size());
    Transformation x;
    x.n_ = static_cast<std::uint8_t>(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
      auto v = images[i];
      if (v == undefined_point) {
        throw TotalityError("transformation undefined at point " +
                            std::to_string(i + 1));
      }
      if (v >= images.size()) {
        throw InvalidElement("image " + std::to_string(v + 1) +
                             " out of range 1.." +
                             std::to_string(images.size()));
      }
      x.images_[i] = v;
    }
    return x;
  }

  static Transformation identity(std::size_t n) {
    detail::check_degree(n);
    Transformation x;
    x.n_ = static_cast<std::uint8_t>(n);
    for (std::size_t i = 0; i < n; ++i) x.images_[i] = static_cast<std::uint8_t>(i);
    return x;
  }

  static Transformation constant(std::size_t n, std::size_t value) {
    detail::check_degree(n);
    Transformation x;
    x.n_ = static_cast<std::uint8_t>(n);
    for (std::size_t i = 0; i < n; ++i) x.images_[i] = static_cast<std::uint8_t>(value);
    return x;
  }

  std::size_t degree() const { return n_; }

  std::uint8_t operator[](std::size_t i) const { return images_[i]; }
  bool defined_at(std::size_t) const { return true; }

  PointSet domain() const { return PointSet::full(n_); }

  PointSet range() const {
    PointSet s;
    for (std::size_t i = 0; i < n_; ++i) s.insert(images_[i]);
    return s;
  }

  std::size_t rank() const { return range().size(); }

  std::uint8_t digit(std::size_t i) const { return images_[i]; }

  friend bool operator==(const Transformation& x, const Transformation& y) {
    return x.n_ == y.n_ && x.images_ == y.images_;
  }

  friend std::strong_ordering operator<=>(const Transformation& x,
                                          const Transformation& y) {
    if (auto c = x.n_ <=> y.n_; c != 0) return c;
    for (std::size_t i = 0; i < x.n_; ++i) {
      if (auto c = x.images_[i] <=> y.images_[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

 private:
  template <class E>
  friend struct family_traits;
  friend Transformation compose(const Transformation&, const Transformation&);

  std::array<std::uint8_t, max_degree> images_{};
  std::uint8_t n_ = 0;
};

inline PartialPerm compose(const PartialPerm& x, const PartialPerm& y) {
  detail::check_same_degree(x.degree(), y.degree());
  PartialPerm out(x.degree());
  for (std::size_t i = 0; i < x.degree(); ++i) {
    auto v = x.images_[i];
    if (v != undefined_point) out.images_[i] = y.images_[v];
  }
  return out;
}

inline Transformation compose(const Transformation& x, const Transformation& y) {
  detail::check_same_degree(x.degree(), y.degree());
  Transformation out;
  out.n_ = x.n_;
  for (std::size_t i = 0; i < x.degree(); ++i) out.images_[i] = y.images_[x.images_[i]];
  return out;
}

inline PartialPerm inverse(const PartialPerm& x) {
  PartialPerm out(x.degree());
  for (std::size_t i = 0; i < x.degree(); ++i) {
    if (x.defined_at(i)) out.images_[x.images_[i]] = static_cast<std::uint8_t>(i);
  }
  return out;
}

// Fibers of x, one block per point of ran(x).
inline Partition kernel_partition(const Transformation& x) {
  std::array<PointSet, max_degree> fibers{};
  for (std::size_t i = 0; i < x.degree(); ++i) fibers[x[i]].insert(i);
  std::vector<PointSet> blocks;
  for (std::size_t v = 0; v < x.degree(); ++v) {
    if (!fibers[v].empty()) blocks.push_back(fibers[v]);
  }
  return Partition(std::move(blocks), x.domain());
}

// Full pre-image x^{-1}(i); empty iff i is not in ran(x).
inline PointSet preimage(const Transformation& x, std::size_t i) {
  PointSet s;
  for (std::size_t j = 0; j < x.degree(); ++j) {
    if (x[j] == i) s.insert(j);
  }
  return s;
}

// Image of a point set under x (undefined points contribute nothing).
template <class E>
PointSet image_of(const E& x, PointSet s) {
  PointSet out;
  for (std::uint32_t m = s.mask(); m != 0; m &= m - 1) {
    auto i = static_cast<std::size_t>(std::countr_zero(m));
    if (x.defined_at(i)) out.insert(x[i]);
  }
  return out;
}

// Canonical label sequence of the kernel: position i gets the index of its
// block in order of first appearance, three bits per position. Two
// transformations of equal degree have the same kernel iff the codes match.
inline std::uint32_t kernel_code(const Transformation& x) {
  std::array<std::uint8_t, max_degree> label;
  label.fill(undefined_point);
  std::uint32_t code = 0;
  std::uint8_t next = 0;
  for (std::size_t i = 0; i < x.degree(); ++i) {
    auto& l = label[x[i]];
    if (l == undefined_point) l = next++;
    code |= std::uint32_t{l} << (3 * i);
  }
  return code;
}

}  // namespace vgreen
