#include <gtest/gtest.h>

#include "elliptica/degreetypes.hpp"
#include "elliptica/derivations.hpp"
#include "elliptica/text.hpp"
#include "generators.hpp"
#include "oracle/oracles.hpp"

using namespace elliptica;

TEST(Property, RingAxioms) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    auto ctx = gen::context(rng);
    Polynomial a = gen::polynomial(rng, ctx), b = gen::polynomial(rng, ctx), c = gen::polynomial(rng, ctx);
    Polynomial zero(ctx), one = Polynomial::constant(ctx, 1);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + zero, a);
    EXPECT_EQ(a * one, a);
    EXPECT_TRUE((a + (-a)).is_zero());
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_TRUE((a * zero).is_zero());
  }
}

TEST(Property, DerivativeRules) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    auto ctx = gen::context(rng);
    Polynomial a = gen::polynomial(rng, ctx), b = gen::polynomial(rng, ctx);
    std::size_t i = rng() % ctx->size();
    EXPECT_EQ(partial_derivative(a * b, i), partial_derivative(a, i) * b + a * partial_derivative(b, i));
    EXPECT_EQ(substitute(a, i, Polynomial::variable(ctx, i)), a);
  }
}

TEST(Property, BasisCountMatchesGeneratingFunction) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    auto ctx = gen::context(rng, 4);
    for (int n = 0; n <= 40; n += 2) {
      auto basis = monomial_basis(*ctx, n);
      ASSERT_EQ(static_cast<std::int64_t>(basis.size()), oracle::basis_count(ctx->weights(), n));
      ASSERT_EQ(basis.size(), oracle::monomials(ctx->weights(), n).size());
      for (std::size_t j = 0; j < basis.size(); ++j) {
        EXPECT_EQ(weighted_degree(*ctx, basis[j]), n);
        if (j > 0) EXPECT_TRUE(canonical_less(*ctx, basis[j - 1], basis[j]));
      }
    }
  }
}

TEST(Property, ParseFormatRoundTrip) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    auto ctx = gen::context(rng);
    Polynomial p = gen::polynomial(rng, ctx, 6, 4);
    EXPECT_EQ(parse_polynomial(ctx, format_polynomial(p)), p) << format_polynomial(p);
  }
}

TEST(Property, PresentationRoundTrip) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    auto all = enumerate_degree_types(2 * static_cast<int>(1 + rng() % 5));
    const DegreeType& dt = all[rng() % all.size()];
    auto s = sample_presentation(dt, rng());
    EXPECT_EQ(parse_presentation(format_presentation(s.presentation)), s.presentation);
  }
}

TEST(Property, HilbertIncrementalMatchesIndependent) {
  std::mt19937_64 rng(19);
  for (int fd = 2; fd <= 12; fd += 2)
    for (const auto& dt : enumerate_degree_types(fd)) {
      auto s = sample_presentation(dt, rng());
      int bound = fd + s.presentation.ctx().max_weight();
      EXPECT_EQ(hilbert_function_incremental(s.presentation, bound).dims,
                hilbert_function(s.presentation, bound).dims)
          << format_degree_type(dt);
    }
}

TEST(Property, HilbertMatchesDenseOracle) {
  // Random homogeneous relations, elliptic or not.
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    auto ctx = gen::context(rng, 3);
    std::vector<Polynomial> rels;
    for (std::size_t j = 0; j < ctx->size(); ++j) {
      Polynomial u(ctx);
      while (u.is_zero()) u = gen::homogeneous(rng, ctx, 2 * static_cast<int>(2 + rng() % 4));
      rels.push_back(u);
    }
    Presentation p(ctx, rels);
    oracle::Algebra alg(p.relations());
    auto dims = hilbert_function(p, 16).dims;
    for (int n = 0; n <= 16; n += 2) EXPECT_EQ(dims[n], alg.dim(n)) << format_presentation(p) << n;
  }
}

TEST(Property, SampledAlgebrasAreCompleteIntersections) {
  std::mt19937_64 rng(29);
  for (int fd = 2; fd <= 10; fd += 2)
    for (const auto& dt : enumerate_degree_types(fd)) {
      auto s = sample_presentation(dt, rng());
      const Quotient& q = *s.quotient;
      auto dims = hilbert_function(q, fd).dims;
      EXPECT_EQ(dims, oracle::series(dt.generators, dt.relations, fd));
      EXPECT_TRUE(poincare_check(q));
      EXPECT_TRUE(jacobian_class(q).nonzero_in_top);
      oracle::Q total = 0;
      for (auto d : dims) total += d;
      EXPECT_EQ(total, oracle::total_dimension(dt.generators, dt.relations));
    }
}

TEST(Property, LeibnizOnRandomPairs) {
  std::mt19937_64 rng(31);
  auto s = sample_presentation(make_degree_type({2, 4, 6}, {6, 8, 12}), 1);
  auto ctx = s.presentation.context();
  for (int trial = 0; trial < 50; ++trial) {
    int d = 2 * static_cast<int>(rng() % 4) - 2;
    Derivation der{d, {}};
    for (std::size_t i = 0; i < ctx->size(); ++i)
      der.images.push_back(gen::homogeneous(rng, ctx, ctx->weight(i) + d));
    Polynomial f = gen::homogeneous(rng, ctx, 2 * static_cast<int>(1 + rng() % 4));
    Polynomial g = gen::homogeneous(rng, ctx, 2 * static_cast<int>(1 + rng() % 4));
    EXPECT_EQ(apply(s.presentation, der, f * g),
              apply(s.presentation, der, f) * g + f * apply(s.presentation, der, g));
  }
}
