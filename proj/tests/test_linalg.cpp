#include <gtest/gtest.h>

#include <random>

#include "elliptica/linalg.hpp"
#include "oracle/oracles.hpp"

using namespace elliptica;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int zero_pct) {
  Matrix m(r, Vector(c));
  for (auto& row : m)
    for (auto& x : row)
      if (static_cast<int>(rng() % 100) >= zero_pct)
        x = Rational(Integer(static_cast<long>(rng() % 11) - 5), Integer(static_cast<long>(rng() % 3) + 1));
  return m;
}

std::vector<std::vector<oracle::Q>> to_q(const Matrix& m) {
  std::vector<std::vector<oracle::Q>> out;
  for (const auto& row : m) {
    std::vector<oracle::Q> r;
    for (const auto& x : row) r.emplace_back(x.raw());
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

TEST(Echelon, InsertReportsIndependence) {
  Echelon e(3);
  EXPECT_TRUE(e.insert(Vector{1, 2, 3}));
  EXPECT_FALSE(e.insert(Vector{2, 4, 6}));
  EXPECT_TRUE(e.insert(Vector{0, 1, 0}));
  EXPECT_FALSE(e.insert(Vector{0, 0, 0}));
  EXPECT_EQ(e.rank(), 2u);
  EXPECT_FALSE(e.full());
}

TEST(ReducedBasis, ResidueIsCanonical) {
  ReducedBasis rb = row_reduce({{1, 0, -1}, {0, 1, 0}}, 3);
  EXPECT_EQ(rb.pivots(), (std::vector<int>{0, 1}));
  // x1 - x3 in the span: the residue of x1 is x3.
  EXPECT_EQ(rb.residue({1, 0, 0}), (Vector{0, 0, 1}));
  EXPECT_TRUE(rb.contains({2, 5, -2}));
}

TEST(LinearAlgebra, RankMatchesDenseOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
    Matrix m = random_matrix(rng, r, c, static_cast<int>(rng() % 80));
    if (trial % 5 == 0 && r > 1) m[r - 1] = m[0];
    std::size_t want = oracle::rank(to_q(m));
    EXPECT_EQ(row_reduce(m, c).rank(), want);
    std::vector<SparseRow> sparse;
    for (const auto& row : m) sparse.push_back(to_sparse(row));
    auto mod = modular_rank(sparse, c);
    if (mod) EXPECT_LE(*mod, want);
    Matrix ns = nullspace(m, c);
    EXPECT_EQ(ns.size(), c - want);
    for (const auto& v : ns)
      for (const auto& row : m) {
        Rational dot;
        for (std::size_t j = 0; j < c; ++j) dot += row[j] * v[j];
        EXPECT_TRUE(dot.is_zero());
      }
  }
}

TEST(ModularRank, CertifiesFullRank) {
  std::vector<SparseRow> rows{to_sparse(Vector{1, 1}), to_sparse(Vector{1, -1})};
  EXPECT_EQ(modular_rank(rows, 2), std::optional<std::size_t>(2));
}
