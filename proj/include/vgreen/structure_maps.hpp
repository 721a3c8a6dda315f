#pragma once

// Structural maps between variants of IS_n.
//
// Duality: inversion satisfies (x *_{a^-1} y)^-1 = y^-1 *_a x^-1, so it is an
// isomorphism from (IS_n, *_{a^-1}) onto the dual of (IS_n, *_a); in
// particular it carries R-classes of (IS_n, *_a) onto L-classes of
// (IS_n, *_{a^-1}).
//
// Isomorphism witnesses: for rank a = rank b pick permutations g, h with
// g b h = a (left to right). Then phi(x) = h x g satisfies
// phi(x *_a y) = h x (g b h) y g = phi(x) *_b phi(y).

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "vgreen/elements.hpp"
#include "vgreen/enumerate.hpp"
#include "vgreen/green.hpp"
#include "vgreen/variant.hpp"

namespace vgreen {

struct DualReport {
  bool product_identity_holds = true;
  bool class_correspondence_holds = true;
  // First (x, y) with (x *_{a^-1} y)^-1 != y^-1 *_a x^-1.
  std::optional<std::pair<PartialPerm, PartialPerm>> counterexample;
  // First x whose R-class under a does not invert onto its L-class under a^-1.
  std::optional<PartialPerm> class_counterexample;

  bool holds() const { return product_identity_holds && class_correspondence_holds; }
};

// Exhaustive over IS_n x IS_n; n is limited by the brute-force cap.
inline DualReport dual_check(const PartialPerm& a, std::size_t n_cap = brute_cap) {
  const auto n = a.degree();
  if (n > n_cap || n > brute_cap) {
    throw CapacityError("duality check is capped at n <= " +
                            std::to_string(std::min(n_cap, brute_cap)),
                        family_traits<PartialPerm>::cardinality(n));
  }
  DualReport rep;
  const auto a_inv = inverse(a);
  VariantSemigroup<PartialPerm> va(a);
  VariantSemigroup<PartialPerm> vb(a_inv);
  const auto size = static_cast<index_t>(va.size());

  std::vector<index_t> inv(size);
  for (index_t x = 0; x < size; ++x) inv[x] = va.index_of(inverse(va.element(x)));

  for (index_t x = 0; x < size && rep.product_identity_holds; ++x) {
    for (index_t y = 0; y < size; ++y) {
      if (inv[vb.product(x, y)] != va.product(inv[y], inv[x])) {
        rep.product_identity_holds = false;
        rep.counterexample = std::make_pair(va.element(x), va.element(y));
        break;
      }
    }
  }

  const auto r = green_classes_brute(va, Relation::r);
  const auto l = green_classes_brute(vb, Relation::l);
  for (index_t x = 0; x < size; ++x) {
    std::vector<index_t> image;
    for (auto y : r.class_containing(x)) image.push_back(inv[y]);
    std::sort(image.begin(), image.end());
    if (image != l.class_containing(inv[x])) {
      rep.class_correspondence_holds = false;
      rep.class_counterexample = va.element(x);
      break;
    }
  }
  return rep;
}

// phi(x) = h x g from (IS_n, *_a) to (IS_n, *_b).
struct IsoWitness {
  PartialPerm g;  // permutation with g(dom a) = dom b
  PartialPerm h;  // permutation with h(b(g(i))) = a(i) on dom a

  PartialPerm apply(const PartialPerm& x) const { return compose(compose(h, x), g); }
};

struct RankMismatch {
  std::size_t rank_a = 0;
  std::size_t rank_b = 0;
};

namespace detail {

// Completes a partial injection to a permutation, sending each unmapped
// point (ascending) to the smallest unused target.
inline PartialPerm extend_to_permutation(const PartialPerm& partial) {
  const auto n = partial.degree();
  std::array<std::uint8_t, max_degree> images{};
  auto free_targets = (PointSet::full(n) - partial.range()).points();
  std::size_t next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    images[i] = partial.defined_at(i) ? partial[i]
                                      : static_cast<std::uint8_t>(free_targets[next++]);
  }
  return PartialPerm::from_images(std::span<const std::uint8_t>(images.data(), n));
}

}  // namespace detail

// Either a witness, or the two ranks when they differ (then the variants are
// not isomorphic by the rank classification of variants of IS_n; that
// direction is cited, not checked).
inline std::variant<IsoWitness, RankMismatch> iso_witness(const PartialPerm& a,
                                                         const PartialPerm& b) {
  detail::check_same_degree(a.degree(), b.degree());
  if (a.rank() != b.rank()) return RankMismatch{a.rank(), b.rank()};
  const auto n = a.degree();
  const auto dom_a = a.domain().points();
  const auto dom_b = b.domain().points();

  std::array<std::uint8_t, max_degree> g_images;
  g_images.fill(undefined_point);
  for (std::size_t k = 0; k < dom_a.size(); ++k) {
    g_images[dom_a[k]] = static_cast<std::uint8_t>(dom_b[k]);
  }
  const auto g = detail::extend_to_permutation(
      PartialPerm::from_images(std::span<const std::uint8_t>(g_images.data(), n)));

  std::array<std::uint8_t, max_degree> h_images;
  h_images.fill(undefined_point);
  for (auto i : dom_a) h_images[b[g[i]]] = a[i];
  const auto h = detail::extend_to_permutation(
      PartialPerm::from_images(std::span<const std::uint8_t>(h_images.data(), n)));
  return IsoWitness{g, h};
}

struct IsoVerification {
  bool bijective = true;
  bool homomorphism = true;
  std::optional<std::pair<PartialPerm, PartialPerm>> counterexample;

  bool holds() const { return bijective && homomorphism; }
};

// Exhaustive check that phi is a bijection of IS_n with
// phi(x *_a y) = phi(x) *_b phi(y).
inline IsoVerification verify_isomorphism(const IsoWitness& w, const PartialPerm& a,
                                          const PartialPerm& b,
                                          std::size_t n_cap = brute_cap) {
  detail::check_same_degree(a.degree(), b.degree());
  if (a.degree() > n_cap || a.degree() > brute_cap) {
    throw CapacityError("isomorphism check is capped at n <= " +
                            std::to_string(std::min(n_cap, brute_cap)),
                        family_traits<PartialPerm>::cardinality(a.degree()));
  }
  IsoVerification out;
  VariantSemigroup<PartialPerm> va(a);
  VariantSemigroup<PartialPerm> vb(b);
  const auto size = static_cast<index_t>(va.size());
  std::vector<index_t> phi(size);
  std::vector<char> hit(size, 0);
  for (index_t x = 0; x < size; ++x) {
    phi[x] = vb.index_of(w.apply(va.element(x)));
    if (hit[phi[x]]) out.bijective = false;
    hit[phi[x]] = 1;
  }
  for (index_t x = 0; x < size; ++x) {
    for (index_t y = 0; y < size; ++y) {
      if (phi[va.product(x, y)] != vb.product(phi[x], phi[y])) {
        out.homomorphism = false;
        out.counterexample = std::make_pair(va.element(x), va.element(y));
        return out;
      }
    }
  }
  return out;
}

// Does phi send every class of each relation of (IS_n, *_a) onto a class of
// the same relation of (IS_n, *_b)?
inline bool preserves_green_classes(const IsoWitness& w, const PartialPerm& a,
                                    const PartialPerm& b) {
  VariantSemigroup<PartialPerm> va(a);
  VariantSemigroup<PartialPerm> vb(b);
  const auto ga = green_structure_brute(va);
  const auto gb = green_structure_brute(vb);
  for (auto rel : {Relation::r, Relation::l, Relation::h, Relation::d, Relation::j}) {
    const auto& ca = ga.get(rel);
    const auto& cb = gb.get(rel);
    for (const auto& cls : ca.classes()) {
      std::vector<index_t> image;
      for (auto x : cls) image.push_back(vb.index_of(w.apply(va.element(x))));
      std::sort(image.begin(), image.end());
      if (image != cb.class_containing(image.front())) return false;
    }
  }
  return true;
}

}  // namespace vgreen
