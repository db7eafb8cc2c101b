#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "elliptica/rational.hpp"

namespace elliptica {

// Ordered variables with positive even, non-decreasing weights. Fixes the
// ambient graded polynomial algebra Q[x_1, ..., x_k].
class GradedContext {
 public:
  GradedContext(std::vector<std::string> names, std::vector<int> weights);

  // Variables named x1..xk.
  static std::shared_ptr<const GradedContext> make(std::vector<int> weights);
  static std::shared_ptr<const GradedContext> make(std::vector<std::string> names,
                                                   std::vector<int> weights);

  std::size_t size() const { return weights_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& weights() const { return weights_; }
  int weight(std::size_t i) const { return weights_.at(i); }
  int max_weight() const { return weights_.empty() ? 0 : weights_.back(); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const GradedContext&, const GradedContext&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<int> weights_;
};

using ContextPtr = std::shared_ptr<const GradedContext>;

bool same_context(const ContextPtr& a, const ContextPtr& b);

struct Monomial {
  std::vector<int> exponents;

  Monomial() = default;
  explicit Monomial(std::vector<int> e) : exponents(std::move(e)) {}
  static Monomial one(std::size_t nvars) { return Monomial(std::vector<int>(nvars, 0)); }

  int total_degree() const;
  std::size_t size() const { return exponents.size(); }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Sum of exponents[i] * weights[i]; throws kStructural on length mismatch.
int weighted_degree(const GradedContext& ctx, const Monomial& m);

// Canonical term order: ascending weighted degree, then exponent vectors in
// descending lexicographic order (x1^2 before x1*x2 before x2^2).
bool canonical_less(const GradedContext& ctx, const Monomial& a, const Monomial& b);

struct Term {
  Monomial monomial;
  Rational coefficient;
};

// Sparse polynomial with exact rational coefficients. Terms are kept in
// canonical order with no zero coefficients.
class Polynomial {
 public:
  explicit Polynomial(ContextPtr ctx);

  static Polynomial constant(ContextPtr ctx, const Rational& c);
  static Polynomial variable(ContextPtr ctx, std::size_t i);
  static Polynomial monomial(ContextPtr ctx, Monomial m, const Rational& c = Rational(1));
  static Polynomial from_terms(ContextPtr ctx, std::vector<Term> terms);

  const ContextPtr& context() const { return ctx_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Monomial& m) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;

  // Equal contexts (by value) and equal term lists.
  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  ContextPtr ctx_;
  std::vector<Term> terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);
Polynomial pow(const Polynomial& p, int e);

// Result of a homogeneity query. The zero polynomial is homogeneous of every
// degree and is reported as its own outcome.
struct Homogeneity {
  enum class Kind { kZero, kHomogeneous, kNotHomogeneous };
  Kind kind = Kind::kZero;
  int degree = 0;

  bool homogeneous() const { return kind == Kind::kHomogeneous; }
  bool zero() const { return kind == Kind::kZero; }
};

Homogeneity homogeneous_degree(const Polynomial& p);

// All monomials of weighted degree exactly n, in canonical order.
std::vector<Monomial> monomial_basis(const GradedContext& ctx, int n);

Polynomial partial_derivative(const Polynomial& p, std::size_t i);

// Replaces x_i by q everywhere in p.
Polynomial substitute(const Polynomial& p, std::size_t i, const Polynomial& q);

// Simultaneous substitution x_i -> images[i]; images may live in another context.
Polynomial compose(const Polynomial& p, std::span<const Polynomial> images);

// Moves p into `target`, sending x_i to x_{new_index[i]}. Variables mapped to
// -1 must not occur in p (kStructural otherwise).
Polynomial remap_variables(const Polynomial& p, ContextPtr target,
                           std::span<const int> new_index);

}  // namespace elliptica
