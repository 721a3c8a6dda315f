#include <gtest/gtest.h>

#include "oracles.hpp"
#include "vgreen/vgreen.hpp"

using namespace vgreen;

TEST(FallingFactorial, Examples) {
  EXPECT_EQ(falling_factorial(7, 0), 1);
  EXPECT_EQ(falling_factorial(2, 2), 2);
  EXPECT_EQ(falling_factorial(5, 3), 60);
  EXPECT_EQ(falling_factorial(2, 3), 0);
  for (count_t p = 0; p <= 10; ++p) {
    for (count_t k = 0; k <= 10; ++k) {
      EXPECT_EQ(falling_factorial(p, k), oracle::direct_falling(p, k));
    }
  }
}

TEST(Stirling2, Examples) {
  EXPECT_EQ(stirling2(0, 0), 1);
  EXPECT_EQ(stirling2(4, 2), 7);
  for (count_t n = 1; n <= 8; ++n) {
    EXPECT_EQ(stirling2(n, n), 1);
    EXPECT_EQ(stirling2(n, 1), 1);
    EXPECT_EQ(stirling2(n, 0), 0);
  }
}

TEST(Stirling2, MatchesSetPartitionCount) {
  for (int q = 0; q <= 8; ++q) {
    for (int k = 0; k <= 8; ++k) {
      EXPECT_EQ(stirling2(q, k), oracle::count_set_partitions(q, k)) << q << "," << k;
    }
  }
}

TEST(Stirling2, Recurrence) {
  for (count_t q = 1; q <= 10; ++q) {
    for (count_t k = 1; k <= q; ++k) {
      EXPECT_EQ(stirling2(q, k), k * stirling2(q - 1, k) + stirling2(q - 1, k - 1));
    }
  }
}

TEST(Stirling2, FallingFactorialExpansionOfPowers) {
  for (count_t q = 0; q <= 8; ++q) {
    for (count_t m = 0; m <= 8; ++m) {
      count_t sum = 0;
      for (count_t j = 0; j <= q; ++j) sum += stirling2(q, j) * falling_factorial(m, j);
      EXPECT_EQ(sum, ipow(m, q));
    }
  }
}

TEST(Binomial, Basics) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(0, 0), 1);
  for (count_t n = 1; n <= 12; ++n) {
    for (count_t k = 1; k < n; ++k) {
      EXPECT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
  }
}

TEST(ElementarySymmetric, SmallCases) {
  const std::vector<count_t> v{2, 1, 3};
  EXPECT_EQ(elementary_symmetric(v, 0), 1);
  EXPECT_EQ(elementary_symmetric(v, 1), 6);
  EXPECT_EQ(elementary_symmetric(v, 2), 2 + 6 + 3);
  EXPECT_EQ(elementary_symmetric(v, 3), 6);
  EXPECT_EQ(elementary_symmetric(v, 4), 0);
}
