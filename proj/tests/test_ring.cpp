#include <gtest/gtest.h>

#include "elliptica/error.hpp"
#include "helpers.hpp"

using namespace elliptica;
using namespace testing_helpers;

TEST(Rational, CanonicalForm) {
  Rational r(Integer(6), Integer(-4));
  EXPECT_EQ(r.to_string(), "-3/2");
  EXPECT_EQ(Rational::parse("-3/2"), r);
  EXPECT_EQ(Rational::parse("+4/2"), Rational(2));
  EXPECT_THROW(Rational(Integer(1), Integer(0)), Error);
  EXPECT_THROW(Rational::parse("1/"), Error);
  EXPECT_THROW(Rational(1) / Rational(0), Error);
}

TEST(GradedContext, Validation) {
  EXPECT_THROW(GradedContext::make({3}), Error);
  EXPECT_THROW(GradedContext::make({0}), Error);
  EXPECT_THROW(GradedContext::make({4, 2}), Error);
  EXPECT_THROW(GradedContext::make({"a", "a"}, {2, 2}), Error);
  auto c = GradedContext::make({2, 4});
  EXPECT_EQ(c->names(), (std::vector<std::string>{"x1", "x2"}));
  EXPECT_EQ(c->max_weight(), 4);
  EXPECT_EQ(c->index_of("x2"), std::optional<std::size_t>(1));
}

TEST(WeightedDegree, Examples) {
  EXPECT_EQ(weighted_degree(*ctx_of({2, 4}), Monomial({1, 1})), 6);
  EXPECT_EQ(weighted_degree(*ctx_of({2, 2}), Monomial({0, 0})), 0);
  EXPECT_EQ(weighted_degree(*ctx_of({2, 2, 6}), Monomial({0, 0, 2})), 12);
  try {
    weighted_degree(*ctx_of({2, 2}), Monomial({1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kStructural);
  }
}

TEST(Polynomial, AddExamples) {
  auto c = ctx_of({2, 2});
  EXPECT_EQ(add(P(c, "x1^2 - x2^2"), P(c, "x2^2")), P(c, "x1^2"));
  EXPECT_EQ(add(P(c, "x1 + 3"), Polynomial(c)), P(c, "x1 + 3"));
  EXPECT_EQ(add(P(c, "x1"), P(c, "x1")), P(c, "2*x1"));
}

TEST(Polynomial, MulExamples) {
  auto c = ctx_of({2, 2});
  EXPECT_EQ(mul(P(c, "x1"), P(c, "x2")), P(c, "x1*x2"));
  EXPECT_EQ(mul(P(c, "x1 + x2"), P(c, "x1 - x2")), P(c, "x1^2 - x2^2"));
  EXPECT_TRUE(mul(P(c, "x1 + x2"), Polynomial(c)).is_zero());
  EXPECT_EQ(pow(P(c, "x1 + x2"), 2), P(c, "x1^2 + 2*x1*x2 + x2^2"));
  EXPECT_EQ(pow(P(c, "x1"), 0), Polynomial::constant(c, 1));
}

TEST(Polynomial, ContextMismatch) {
  auto a = ctx_of({2, 2});
  auto b = ctx_of({2, 4});
  try {
    add(P(a, "x1"), P(b, "x1"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kContextMismatch);
  }
  // Equal by value counts as the same context.
  EXPECT_EQ(add(P(a, "x1"), P(ctx_of({2, 2}), "x2")), P(a, "x1 + x2"));
}

TEST(Homogeneity, Examples) {
  auto c22 = ctx_of({2, 2});
  auto c24 = ctx_of({2, 4});
  auto h = homogeneous_degree(P(c22, "x1^2 - x2^2"));
  EXPECT_TRUE(h.homogeneous());
  EXPECT_EQ(h.degree, 4);
  h = homogeneous_degree(P(c24, "x1^2 + x2"));
  EXPECT_TRUE(h.homogeneous());
  EXPECT_EQ(h.degree, 4);
  EXPECT_EQ(homogeneous_degree(P(c22, "x1 + x1^2")).kind, Homogeneity::Kind::kNotHomogeneous);
  EXPECT_TRUE(homogeneous_degree(Polynomial(c22)).zero());
}

TEST(MonomialBasis, Examples) {
  auto b = monomial_basis(*ctx_of({2, 4}), 4);
  ASSERT_EQ(b.size(), 2u);
  EXPECT_EQ(b[0], Monomial({2, 0}));
  EXPECT_EQ(b[1], Monomial({0, 1}));
  EXPECT_TRUE(monomial_basis(*ctx_of({2, 2}), 3).empty());
  EXPECT_TRUE(monomial_basis(*ctx_of({2, 2}), -2).empty());
  auto one = monomial_basis(*ctx_of({2, 2}), 0);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], Monomial({0, 0}));
  auto x5 = monomial_basis(*ctx_of({2}), 10);
  ASSERT_EQ(x5.size(), 1u);
  EXPECT_EQ(x5[0], Monomial({5}));
}

TEST(MonomialBasis, CanonicalOrderWithinDegree) {
  auto b = monomial_basis(*ctx_of({2, 2}), 4);
  ASSERT_EQ(b.size(), 3u);
  EXPECT_EQ(b[0], Monomial({2, 0}));
  EXPECT_EQ(b[1], Monomial({1, 1}));
  EXPECT_EQ(b[2], Monomial({0, 2}));
}

TEST(PartialDerivative, Examples) {
  auto c = ctx_of({2, 2});
  EXPECT_EQ(partial_derivative(P(c, "x1^2*x2"), 0), P(c, "2*x1*x2"));
  EXPECT_TRUE(partial_derivative(P(c, "x2^3"), 0).is_zero());
  EXPECT_EQ(partial_derivative(P(c, "x1^2 - x2^2"), 1), P(c, "-2*x2"));
  EXPECT_THROW(partial_derivative(P(c, "x1"), 2), Error);
}

TEST(Substitute, Examples) {
  auto c24 = ctx_of({2, 4});
  EXPECT_TRUE(substitute(P(c24, "x1^2 - x2"), 1, P(c24, "x1^2")).is_zero());
  auto c = ctx_of({2, 2});
  Polynomial p = P(c, "x1^3 - 2*x1*x2 + 5");
  EXPECT_EQ(substitute(p, 0, P(c, "x1")), p);
  EXPECT_EQ(substitute(P(c, "x1*x2"), 0, P(c, "x2")), P(c, "x2^2"));
}

TEST(Compose, SimultaneousSubstitution) {
  auto c = ctx_of({2, 2});
  std::vector<Polynomial> swap{P(c, "x2"), P(c, "x1")};
  EXPECT_EQ(compose(P(c, "x1^2 + 3*x1*x2^2"), swap), P(c, "x2^2 + 3*x1^2*x2"));
}

TEST(RemapVariables, DropsAndRenames) {
  auto from = ctx_of({2, 4});
  auto to = GradedContext::make({"y"}, {4});
  std::vector<int> idx{-1, 0};
  EXPECT_EQ(remap_variables(P(from, "x2^2"), to, idx), parse_polynomial(to, "y^2"));
  EXPECT_THROW(remap_variables(P(from, "x1*x2"), to, idx), Error);
}
