#include <gtest/gtest.h>

#include "oracles.hpp"
#include "vgreen/vgreen.hpp"

using namespace vgreen;

namespace {

PartialPerm pp(const char* s) { return parse_element<PartialPerm>(s); }
Transformation tr(const char* s) { return parse_element<Transformation>(s); }

}  // namespace

TEST(Compose, IdentityIsNeutral) {
  for (const auto& x : enumerate<PartialPerm>(3)) {
    EXPECT_EQ(compose(PartialPerm::identity(3), x), x);
    EXPECT_EQ(compose(x, PartialPerm::identity(3)), x);
  }
  for (const auto& x : enumerate<Transformation>(3)) {
    EXPECT_EQ(compose(Transformation::identity(3), x), x);
    EXPECT_EQ(compose(x, Transformation::identity(3)), x);
  }
}

TEST(Compose, LeftToRight) {
  EXPECT_EQ(format_element(compose(tr("2,3,1"), tr("1,1,2"))), "1,2,1");
  EXPECT_EQ(format_element(compose(pp("2,-,1"), pp("3,1,2"))), "1,-,3");
}

TEST(Compose, AgreesWithPointwiseEvaluation) {
  const auto id = oracle::images_of(PartialPerm::identity(3));
  for (const auto& x : enumerate<PartialPerm>(3)) {
    for (const auto& y : enumerate<PartialPerm>(3)) {
      EXPECT_EQ(oracle::images_of(compose(x, y)),
                oracle::sandwich(oracle::images_of(x), id, oracle::images_of(y)));
    }
  }
}

TEST(Compose, RejectsDegreeMismatch) {
  EXPECT_THROW(compose(pp("1,2"), pp("1,2,3")), DimensionError);
  EXPECT_THROW(compose(tr("1,1"), tr("1,1,1")), DimensionError);
}

template <class E>
void expect_associative(std::size_t n) {
  const auto all = enumerate<E>(n);
  for (const auto& x : all) {
    for (const auto& y : all) {
      const auto xy = compose(x, y);
      for (const auto& z : all) {
        ASSERT_EQ(compose(xy, z), compose(x, compose(y, z)));
      }
    }
  }
}

TEST(Compose, AssociativeUpToDegreeThree) {
  for (std::size_t n = 1; n <= 3; ++n) {
    expect_associative<PartialPerm>(n);
    expect_associative<Transformation>(n);
  }
}

TEST(Inverse, Examples) {
  EXPECT_EQ(inverse(PartialPerm::identity(4)), PartialPerm::identity(4));
  EXPECT_EQ(inverse(PartialPerm(3)), PartialPerm(3));
  EXPECT_EQ(format_element(inverse(pp("2,-,1"))), "3,1,-");
}

TEST(Inverse, InvolutionAndRegularity) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& x : enumerate<PartialPerm>(n)) {
      EXPECT_EQ(inverse(inverse(x)), x);
      EXPECT_EQ(compose(compose(x, inverse(x)), x), x);
      EXPECT_EQ(inverse(x).domain(), x.range());
    }
  }
}

TEST(Accessors, DomainRangeRank) {
  EXPECT_EQ(PartialPerm(3).rank(), 0u);
  EXPECT_EQ(tr("1,1,2").range(), PointSet::full(2));
  EXPECT_EQ(tr("1,1,2").rank(), 2u);
  EXPECT_EQ(to_string(pp("2,-,1").domain()), "{1,3}");
  EXPECT_EQ(tr("1,1,2").domain(), PointSet::full(3));
}

TEST(Kernel, Examples) {
  EXPECT_EQ(kernel_partition(Transformation::identity(4)).size(), 4u);
  EXPECT_EQ(to_string(kernel_partition(tr("1,1,2"))), "{{1,2},{3}}");
  const auto constant = kernel_partition(Transformation::constant(4, 2));
  ASSERT_EQ(constant.size(), 1u);
  EXPECT_EQ(constant.blocks()[0], PointSet::full(4));
}

TEST(Kernel, BlockCountIsRank) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& x : enumerate<Transformation>(n)) {
      EXPECT_EQ(kernel_partition(x).size(), x.rank());
    }
  }
}

TEST(Preimage, Examples) {
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(preimage(Transformation::identity(3), i).points(), std::vector<std::size_t>{i});
  }
  EXPECT_EQ(to_string(preimage(tr("1,1,2"), 0)), "{1,2}");
  EXPECT_TRUE(preimage(tr("1,1,2"), 2).empty());
}

TEST(Partition, RejectsBadBlocks) {
  const auto full = PointSet::full(3);
  PointSet a, b;
  a.insert(0);
  a.insert(1);
  b.insert(1);
  b.insert(2);
  EXPECT_THROW(Partition({a, b}, full), std::invalid_argument);
  EXPECT_THROW(Partition({a}, full), std::invalid_argument);
  EXPECT_THROW(Partition({a, PointSet{}}, a), std::invalid_argument);
}

TEST(Enumerate, Cardinalities) {
  EXPECT_EQ(enumerate<Transformation>(2).size(), 4u);
  EXPECT_EQ(enumerate<PartialPerm>(3).size(), 34u);
  EXPECT_EQ(enumerate<PartialPerm>(4).size(), 209u);
  for (std::size_t n = 1; n <= 5; ++n) {
    std::uint64_t is = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      is += binomial(n, k) * binomial(n, k) * factorial(k);
    }
    EXPECT_EQ(enumerate<PartialPerm>(n).size(), is);
    EXPECT_EQ(enumerate<Transformation>(n).size(), static_cast<std::size_t>(ipow(n, n)));
  }
}

TEST(Enumerate, MatchesIndependentListingInOrder) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto is = enumerate<PartialPerm>(n);
    const auto is_ref = oracle::all_images(n, true);
    ASSERT_EQ(is.size(), is_ref.size());
    for (std::size_t i = 0; i < is.size(); ++i) EXPECT_EQ(oracle::images_of(is[i]), is_ref[i]);

    const auto t = enumerate<Transformation>(n);
    const auto t_ref = oracle::all_images(n, false);
    ASSERT_EQ(t.size(), t_ref.size());
    for (std::size_t i = 0; i < t.size(); ++i) EXPECT_EQ(oracle::images_of(t[i]), t_ref[i]);
  }
}

TEST(Enumerate, StrictlyIncreasing) {
  const auto all = enumerate<PartialPerm>(4);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  EXPECT_EQ(std::adjacent_find(all.begin(), all.end()), all.end());
  EXPECT_LT(pp("-,1"), pp("1,-"));
}

TEST(Enumerate, CapsThrowBeforeAllocating) {
  try {
    enumerate<PartialPerm>(7);
    FAIL() << "expected CapacityError";
  } catch (const CapacityError& e) {
    EXPECT_EQ(e.cardinality(), 130922u);
  }
  EXPECT_THROW(enumerate<Transformation>(8), CapacityError);
}

TEST(Text, ParseExamples) {
  const auto x = pp("2,-,1");
  EXPECT_EQ(x[0], 1);
  EXPECT_FALSE(x.defined_at(1));
  EXPECT_EQ(x[2], 0);
  EXPECT_EQ(format_element(tr("1,1,2")), "1,1,2");
  EXPECT_EQ(format_element(pp(" 2 , - ,1 ")), "2,-,1");
}

TEST(Text, ParseErrors) {
  EXPECT_THROW(pp("2,2,-"), InjectivityError);
  EXPECT_THROW(tr("1,-,2"), TotalityError);
  EXPECT_THROW(pp("1,4,-"), InvalidElement);
  EXPECT_THROW(pp("0,1"), InvalidElement);
  EXPECT_THROW(pp("1,,2"), ParseError);
  EXPECT_THROW(pp("x"), ParseError);
  EXPECT_THROW(pp(""), ParseError);
  EXPECT_THROW(pp("1,2,3,4,5,6,7,8,9"), ParseError);
}

TEST(Text, RoundTripEveryElement) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& x : enumerate<PartialPerm>(n)) {
      EXPECT_EQ(parse_element<PartialPerm>(format_element(x)), x);
    }
    for (const auto& x : enumerate<Transformation>(n)) {
      EXPECT_EQ(parse_element<Transformation>(format_element(x)), x);
    }
  }
}
