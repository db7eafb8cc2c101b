#include <gtest/gtest.h>

#include "elliptica/degreetypes.hpp"
#include "oracle/oracles.hpp"

using namespace elliptica;

TEST(OracleEquivalence, EnumerationFdUpTo10) {
  for (int fd = 2; fd <= 10; fd += 2) {
    std::vector<DegreeType> want;
    for (auto& [a, b] : oracle::degree_types(fd)) want.push_back(make_degree_type(a, b));
    std::sort(want.begin(), want.end());
    EXPECT_EQ(enumerate_degree_types(fd), want) << "fd=" << fd;
  }
}

TEST(OracleEquivalence, RepresentableSmall) {
  std::vector<int> vals{2, 4, 6, 8, 10, 12};
  std::vector<int> cur;
  std::vector<std::vector<int>> sets;
  for (std::size_t k = 1; k <= 3; ++k) oracle::multisets(k, 2, 12, cur, sets);
  for (const auto& s : sets)
    for (int b = 2; b <= 24; b += 2) EXPECT_EQ(representable(b, s), oracle::representable(b, s)) << b;
}

TEST(OracleEquivalence, SacMatchesExhaustive) {
  for (int fd = 2; fd <= 10; fd += 2)
    for (const auto& dt : enumerate_degree_types(fd))
      EXPECT_TRUE(oracle::sac(dt.generators, dt.relations));
  EXPECT_FALSE(oracle::sac({2, 4}, {4, 10}));
  EXPECT_FALSE(oracle::sac({2, 2, 4, 4}, {4, 6, 8, 10}));
}
