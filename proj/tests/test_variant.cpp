#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "vgreen/vgreen.hpp"

using namespace vgreen;

namespace {

PartialPerm pp(const char* s) { return parse_element<PartialPerm>(s); }
Transformation tr(const char* s) { return parse_element<Transformation>(s); }

template <class E>
std::vector<std::vector<std::string>> class_texts(const VariantSemigroup<E>& v,
                                                  const GreenClassification& g) {
  std::vector<std::vector<std::string>> out;
  for (const auto& c : g.classes()) {
    std::vector<std::string> texts;
    for (auto x : c) texts.push_back(format_element(v.element(x)));
    out.push_back(texts);
  }
  return out;
}

using Texts = std::vector<std::vector<std::string>>;

}  // namespace

TEST(VariantProduct, Examples) {
  const auto id = PartialPerm::identity(3);
  for (const auto& x : enumerate<PartialPerm>(3)) {
    for (const auto& y : enumerate<PartialPerm>(3)) {
      EXPECT_EQ(variant_product(x, id, y), compose(x, y));
      EXPECT_EQ(variant_product(x, PartialPerm(3), y), PartialPerm(3));
    }
  }
  EXPECT_EQ(format_element(variant_product(pp("2,-,1"), pp("1,2,-"), pp("3,1,2"))), "1,-,3");
}

TEST(VariantProduct, RankBound) {
  std::mt19937 rng(7);
  const auto all = enumerate<Transformation>(4);
  for (int i = 0; i < 2000; ++i) {
    const auto& x = all[rng() % all.size()];
    const auto& a = all[rng() % all.size()];
    const auto& y = all[rng() % all.size()];
    EXPECT_LE(variant_product(x, a, y).rank(), std::min({x.rank(), a.rank(), y.rank()}));
  }
}

TEST(Engine, TableAndOnDemandAgree) {
  for (const auto& a : enumerate<PartialPerm>(3)) {
    VariantSemigroup<PartialPerm> table(a);
    VariantSemigroup<PartialPerm> lazy(a, EngineOptions{0, 50'000'000});
    ASSERT_TRUE(table.has_table());
    ASSERT_FALSE(lazy.has_table());
    for (index_t x = 0; x < table.size(); ++x) {
      for (index_t y = 0; y < table.size(); ++y) {
        ASSERT_EQ(table.product(x, y), lazy.product(x, y));
        ASSERT_EQ(table.element(table.product(x, y)),
                  variant_product(table.element(x), a, table.element(y)));
      }
    }
    EXPECT_TRUE(green_structure_brute(table).d.same_partition(green_structure_brute(lazy).d));
  }
}

TEST(Engine, Associative) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& a : enumerate<PartialPerm>(n)) {
      EXPECT_FALSE(VariantSemigroup<PartialPerm>(a).find_associativity_failure());
    }
    for (const auto& a : enumerate<Transformation>(n)) {
      EXPECT_FALSE(VariantSemigroup<Transformation>(a).find_associativity_failure());
    }
  }
}

TEST(Engine, IndexOfRoundTrip) {
  VariantSemigroup<PartialPerm> v(pp("2,-,1,3"));
  for (index_t i = 0; i < v.size(); ++i) EXPECT_EQ(v.index_of(v.element(i)), i);
  EXPECT_THROW(v.index_of(pp("1,2")), DimensionError);
}

TEST(Ideals, Examples) {
  VariantSemigroup<Transformation> v(tr("1,1"));
  auto texts = [&](const std::vector<index_t>& ids) {
    std::vector<std::string> out;
    for (auto i : ids) out.push_back(format_element(v.element(i)));
    return out;
  };
  EXPECT_EQ(texts(principal_ideal(v, v.index_of(tr("1,2")), Side::right)),
            (std::vector<std::string>{"1,1", "1,2", "2,2"}));
  EXPECT_EQ(texts(principal_ideal(v, v.index_of(tr("1,1")), Side::left)),
            (std::vector<std::string>{"1,1"}));

  VariantSemigroup<PartialPerm> z(PartialPerm(3));
  const auto x = z.index_of(pp("2,-,1"));
  EXPECT_EQ(principal_ideal(z, x, Side::right),
            (std::vector<index_t>{z.index_of(PartialPerm(3)), x}));
}

TEST(Brute, ConstantDeformationOnT2) {
  VariantSemigroup<Transformation> v(tr("1,1"));
  const auto g = green_structure_brute(v);
  EXPECT_EQ(class_texts(v, g.r), (Texts{{"1,1", "2,2"}, {"1,2"}, {"2,1"}}));
  EXPECT_EQ(class_texts(v, g.l), (Texts{{"1,1"}, {"1,2"}, {"2,1"}, {"2,2"}}));
  EXPECT_EQ(class_texts(v, g.d), (Texts{{"1,1", "2,2"}, {"1,2"}, {"2,1"}}));
}

TEST(Brute, IdentityOnIS2GroupsByRank) {
  VariantSemigroup<PartialPerm> v(PartialPerm::identity(2));
  EXPECT_EQ(class_texts(v, green_classes_brute(v, Relation::d)),
            (Texts{{"-,-"}, {"-,1", "-,2", "1,-", "2,-"}, {"1,2", "2,1"}}));
}

template <class E>
void expect_matches_naive(const E& a, bool with_j) {
  VariantSemigroup<E> v(a);
  const auto g = green_structure_brute(v);
  std::vector<oracle::Images> universe;
  for (const auto& x : v.elements()) universe.push_back(oracle::images_of(x));
  const oracle::NaiveGreen ref(universe, oracle::images_of(a), with_j);
  for (index_t x = 0; x < v.size(); ++x) {
    for (index_t y = 0; y < v.size(); ++y) {
      ASSERT_EQ(g.r.class_of(x) == g.r.class_of(y), ref.r(x, y));
      ASSERT_EQ(g.l.class_of(x) == g.l.class_of(y), ref.l(x, y));
      ASSERT_EQ(g.h.class_of(x) == g.h.class_of(y), ref.h(x, y));
      ASSERT_EQ(g.d.class_of(x) == g.d.class_of(y), ref.d(x, y));
      if (with_j) {
        ASSERT_EQ(g.j.class_of(x) == g.j.class_of(y), ref.j(x, y));
      }
    }
  }
}

TEST(Brute, MatchesIdealDefinitions) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& a : enumerate<PartialPerm>(n)) expect_matches_naive(a, n <= 2);
    for (const auto& a : enumerate<Transformation>(n)) expect_matches_naive(a, n <= 2);
  }
  expect_matches_naive(pp("2,3,-"), true);
  expect_matches_naive(tr("1,1,2"), true);
}

TEST(Brute, SccAgreesWithIdealGrouping) {
  for (const auto& a : enumerate<PartialPerm>(3)) {
    VariantSemigroup<PartialPerm> v(a);
    const auto g = green_structure_brute(v);
    for (auto rel : {Relation::r, Relation::l, Relation::h, Relation::d, Relation::j}) {
      EXPECT_TRUE(compare_partitions(g.get(rel), green_classes_by_ideals(v, rel)).equal);
    }
  }
  for (const auto& a : enumerate<Transformation>(3)) {
    VariantSemigroup<Transformation> v(a);
    const auto g = green_structure_brute(v);
    for (auto rel : {Relation::r, Relation::l, Relation::j}) {
      EXPECT_TRUE(compare_partitions(g.get(rel), green_classes_by_ideals(v, rel)).equal);
    }
  }
}

template <class E>
void expect_structural_invariants(const E& a) {
  VariantSemigroup<E> v(a);
  const auto g = green_structure_brute(v);
  for (auto rel : {Relation::r, Relation::l, Relation::h, Relation::d, Relation::j}) {
    const auto& c = g.get(rel);
    std::size_t total = 0;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const auto& members = c.members(k);
      ASSERT_FALSE(members.empty());
      EXPECT_EQ(c.representative(k), members.front());
      EXPECT_TRUE(std::is_sorted(members.begin(), members.end()));
      total += members.size();
    }
    EXPECT_EQ(total, v.size());
  }
  for (index_t x = 0; x < v.size(); ++x) {
    for (index_t y = 0; y < v.size(); ++y) {
      const bool r = g.r.class_of(x) == g.r.class_of(y);
      const bool l = g.l.class_of(x) == g.l.class_of(y);
      const bool d = g.d.class_of(x) == g.d.class_of(y);
      EXPECT_EQ(g.h.class_of(x) == g.h.class_of(y), r && l);
      if (r || l) {
        EXPECT_TRUE(d);
      }
    }
  }
  EXPECT_TRUE(compare_partitions(g.d, g.j).equal);
}

TEST(Brute, StructuralInvariants) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& a : enumerate<PartialPerm>(n)) expect_structural_invariants(a);
    for (const auto& a : enumerate<Transformation>(n)) expect_structural_invariants(a);
  }
}

TEST(Brute, Deterministic) {
  VariantSemigroup<Transformation> v(tr("2,1,1,3"));
  const auto first = green_structure_brute(v);
  const auto second = green_structure_brute(v);
  EXPECT_EQ(first.d.classes(), second.d.classes());
  EXPECT_EQ(first.r.classes(), second.r.classes());
}

TEST(Brute, DEqualsJ) {
  for (const auto& a : enumerate<PartialPerm>(3)) {
    EXPECT_TRUE(verify_d_equals_j(VariantSemigroup<PartialPerm>(a)).equal);
  }
  for (const auto& a : enumerate<Transformation>(3)) {
    EXPECT_TRUE(verify_d_equals_j(VariantSemigroup<Transformation>(a)).equal);
  }
  EXPECT_TRUE(verify_d_equals_j(VariantSemigroup<Transformation>(tr("1"))).equal);
}

TEST(Brute, CapsAndBudget) {
  VariantSemigroup<PartialPerm> big(PartialPerm::identity(6));
  EXPECT_THROW(green_structure_brute(big), CapacityError);
  VariantSemigroup<PartialPerm> tight(PartialPerm::identity(3), EngineOptions{4000, 100});
  EXPECT_THROW(green_classes_brute(tight, Relation::r), CapacityError);
}

TEST(EggBox, Examples) {
  {
    VariantSemigroup<Transformation> v(tr("1,1"));
    const auto g = green_structure_brute(v);
    const auto box = egg_box(g, g.d.class_of(v.index_of(tr("1,1"))));
    EXPECT_EQ(box.rows.size(), 1u);
    EXPECT_EQ(box.columns.size(), 2u);
    for (const auto& cell : box.cells[0]) EXPECT_EQ(cell.size(), 1u);
    const auto single = egg_box(g, g.d.class_of(v.index_of(tr("1,2"))));
    EXPECT_EQ(single.cells.size(), 1u);
    EXPECT_EQ(single.cells[0].size(), 1u);
  }
  {
    VariantSemigroup<PartialPerm> v(pp("1,2,-"));
    const auto g = green_structure_brute(v);
    const auto box = egg_box(g, g.d.class_of(v.index_of(pp("1,-,-"))));
    EXPECT_EQ(box.rows.size(), 2u);
    EXPECT_EQ(box.columns.size(), 2u);
    std::vector<std::string> members;
    for (const auto& row : box.cells) {
      for (const auto& cell : row) {
        ASSERT_EQ(cell.size(), 1u);
        members.push_back(format_element(v.element(cell[0])));
      }
    }
    std::sort(members.begin(), members.end());
    EXPECT_EQ(members, (std::vector<std::string>{"-,1,-", "-,2,-", "1,-,-", "2,-,-"}));
  }
}

TEST(EggBox, CellsAreRowColumnIntersections) {
  VariantSemigroup<PartialPerm> v(pp("2,3,-,1"));
  const auto g = green_structure_brute(v);
  for (index_t d = 0; d < g.d.size(); ++d) {
    const auto box = egg_box(g, d);
    for (std::size_t r = 0; r < box.rows.size(); ++r) {
      for (std::size_t c = 0; c < box.columns.size(); ++c) {
        std::vector<index_t> expected;
        const auto& row = g.r.members(box.rows[r]);
        const auto& col = g.l.members(box.columns[c]);
        std::set_intersection(row.begin(), row.end(), col.begin(), col.end(),
                              std::back_inserter(expected));
        EXPECT_EQ(box.cells[r][c], expected);
      }
    }
  }
}
