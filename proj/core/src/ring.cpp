#include "elliptica/ring.hpp"

#include <algorithm>
#include <map>

#include "elliptica/error.hpp"

namespace elliptica {

GradedContext::GradedContext(std::vector<std::string> names, std::vector<int> weights)
    : names_(std::move(names)), weights_(std::move(weights)) {
  if (names_.size() != weights_.size())
    throw Error(ErrorKind::kInvalidContext, "variable names and weights differ in length");
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] < 2 || weights_[i] % 2 != 0)
      throw Error(ErrorKind::kInvalidContext,
                  "weight of " + names_[i] + " must be positive even, got " +
                      std::to_string(weights_[i]));
    if (i > 0 && weights_[i] < weights_[i - 1])
      throw Error(ErrorKind::kInvalidContext, "weights must be non-decreasing");
    for (std::size_t j = 0; j < i; ++j)
      if (names_[j] == names_[i])
        throw Error(ErrorKind::kInvalidContext, "duplicate variable name " + names_[i]);
  }
}

std::shared_ptr<const GradedContext> GradedContext::make(std::vector<int> weights) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < weights.size(); ++i) names.push_back("x" + std::to_string(i + 1));
  return std::make_shared<const GradedContext>(std::move(names), std::move(weights));
}

std::shared_ptr<const GradedContext> GradedContext::make(std::vector<std::string> names,
                                                         std::vector<int> weights) {
  return std::make_shared<const GradedContext>(std::move(names), std::move(weights));
}

std::optional<std::size_t> GradedContext::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

bool same_context(const ContextPtr& a, const ContextPtr& b) {
  return a == b || (a && b && *a == *b);
}

int Monomial::total_degree() const {
  int d = 0;
  for (int e : exponents) d += e;
  return d;
}

int weighted_degree(const GradedContext& ctx, const Monomial& m) {
  if (m.size() != ctx.size())
    throw Error(ErrorKind::kStructural, "monomial has " + std::to_string(m.size()) +
                                            " exponents, context has " +
                                            std::to_string(ctx.size()) + " variables");
  int d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += m.exponents[i] * ctx.weight(i);
  return d;
}

bool canonical_less(const GradedContext& ctx, const Monomial& a, const Monomial& b) {
  int da = weighted_degree(ctx, a), db = weighted_degree(ctx, b);
  if (da != db) return da < db;
  return a.exponents > b.exponents;
}

namespace {

void require_same(const Polynomial& a, const Polynomial& b) {
  if (!same_context(a.context(), b.context()))
    throw Error(ErrorKind::kContextMismatch, "polynomials belong to different contexts");
}

// Sorts canonically, merges equal monomials and drops zeros.
std::vector<Term> normalize(const GradedContext& ctx, std::vector<Term> terms) {
  for (const auto& t : terms)
    if (t.monomial.size() != ctx.size())
      throw Error(ErrorKind::kStructural, "term does not match context");
  std::vector<std::pair<int, std::size_t>> keys;
  keys.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i)
    keys.emplace_back(weighted_degree(ctx, terms[i].monomial), i);
  std::sort(keys.begin(), keys.end(), [&](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first < y.first;
    return terms[x.second].monomial.exponents > terms[y.second].monomial.exponents;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const auto& [deg, idx] : keys) {
    Term& t = terms[idx];
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coefficient += t.coefficient;
    } else {
      if (!out.empty() && out.back().coefficient.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coefficient.is_zero()) out.pop_back();
  return out;
}

}  // namespace

Polynomial::Polynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw Error(ErrorKind::kStructural, "null context");
}

Polynomial Polynomial::constant(ContextPtr ctx, const Rational& c) {
  std::size_t n = ctx->size();
  return monomial(std::move(ctx), Monomial::one(n), c);
}

Polynomial Polynomial::variable(ContextPtr ctx, std::size_t i) {
  if (i >= ctx->size()) throw Error(ErrorKind::kStructural, "variable index out of range");
  Monomial m = Monomial::one(ctx->size());
  m.exponents[i] = 1;
  return monomial(std::move(ctx), std::move(m));
}

Polynomial Polynomial::monomial(ContextPtr ctx, Monomial m, const Rational& c) {
  Polynomial p(std::move(ctx));
  if (m.size() != p.ctx_->size()) throw Error(ErrorKind::kStructural, "monomial does not match context");
  if (!c.is_zero()) p.terms_.push_back({std::move(m), c});
  return p;
}

Polynomial Polynomial::from_terms(ContextPtr ctx, std::vector<Term> terms) {
  Polynomial p(std::move(ctx));
  p.terms_ = normalize(*p.ctx_, std::move(terms));
  return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.monomial == m) return t.coefficient;
  return Rational(0);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same(*this, o);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  const GradedContext& ctx = *ctx_;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() ||
        (i < terms_.size() && canonical_less(ctx, terms_[i].monomial, o.terms_[j].monomial))) {
      merged.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() ||
               canonical_less(ctx, o.terms_[j].monomial, terms_[i].monomial)) {
      merged.push_back(o.terms_[j++]);
    } else {
      Rational c = terms_[i].coefficient + o.terms_[j].coefficient;
      if (!c.is_zero()) merged.push_back({std::move(terms_[i].monomial), std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coefficient *= c;
  }
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same(a, b);
  std::map<std::vector<int>, Rational> acc;
  std::size_t n = a.ctx_->size();
  std::vector<int> e(n);
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      for (std::size_t i = 0; i < n; ++i) e[i] = s.monomial.exponents[i] + t.monomial.exponents[i];
      acc[e] += s.coefficient * t.coefficient;
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [exps, c] : acc)
    if (!c.is_zero()) terms.push_back({Monomial(exps), std::move(c)});
  return Polynomial::from_terms(a.ctx_, std::move(terms));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_context(a.ctx_, b.ctx_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].monomial != b.terms_[i].monomial ||
        a.terms_[i].coefficient != b.terms_[i].coefficient)
      return false;
  return true;
}

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial pow(const Polynomial& p, int e) {
  if (e < 0) throw Error(ErrorKind::kStructural, "negative exponent");
  Polynomial result = Polynomial::constant(p.context(), Rational(1));
  Polynomial base = p;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Homogeneity homogeneous_degree(const Polynomial& p) {
  if (p.is_zero()) return {Homogeneity::Kind::kZero, 0};
  const GradedContext& ctx = *p.context();
  int d = weighted_degree(ctx, p.terms().front().monomial);
  // Canonical order sorts by degree, so first and last bound the range.
  if (weighted_degree(ctx, p.terms().back().monomial) != d)
    return {Homogeneity::Kind::kNotHomogeneous, 0};
  return {Homogeneity::Kind::kHomogeneous, d};
}

namespace {

void basis_rec(const GradedContext& ctx, std::size_t var, int remaining, std::vector<int>& e,
               std::vector<Monomial>& out) {
  if (var + 1 == ctx.size()) {
    if (remaining % ctx.weight(var) == 0) {
      e[var] = remaining / ctx.weight(var);
      out.emplace_back(e);
    }
    return;
  }
  for (int a = remaining / ctx.weight(var); a >= 0; --a) {
    e[var] = a;
    basis_rec(ctx, var + 1, remaining - a * ctx.weight(var), e, out);
  }
  e[var] = 0;
}

}  // namespace

std::vector<Monomial> monomial_basis(const GradedContext& ctx, int n) {
  std::vector<Monomial> out;
  if (n < 0 || n % 2 != 0) return out;
  if (ctx.size() == 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  std::vector<int> e(ctx.size(), 0);
  basis_rec(ctx, 0, n, e, out);
  return out;
}

Polynomial partial_derivative(const Polynomial& p, std::size_t i) {
  if (i >= p.context()->size())
    throw Error(ErrorKind::kStructural, "variable index out of range");
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    int a = t.monomial.exponents[i];
    if (a == 0) continue;
    Monomial m = t.monomial;
    m.exponents[i] = a - 1;
    terms.push_back({std::move(m), t.coefficient * Rational(a)});
  }
  return Polynomial::from_terms(p.context(), std::move(terms));
}

Polynomial substitute(const Polynomial& p, std::size_t i, const Polynomial& q) {
  const ContextPtr& ctx = p.context();
  if (i >= ctx->size()) throw Error(ErrorKind::kStructural, "variable index out of range");
  if (!same_context(ctx, q.context()))
    throw Error(ErrorKind::kContextMismatch, "substituted polynomial lives in another context");
  std::vector<Polynomial> images;
  images.reserve(ctx->size());
  for (std::size_t j = 0; j < ctx->size(); ++j)
    images.push_back(j == i ? q : Polynomial::variable(ctx, j));
  return compose(p, images);
}

Polynomial compose(const Polynomial& p, std::span<const Polynomial> images) {
  std::size_t n = p.context()->size();
  if (images.size() != n)
    throw Error(ErrorKind::kStructural, "compose needs one image per variable");
  if (n == 0) return p;
  ContextPtr target = images.front().context();
  for (const auto& q : images)
    if (!same_context(target, q.context()))
      throw Error(ErrorKind::kContextMismatch, "images live in different contexts");
  // Cache powers of each image; exponents are small.
  std::vector<std::vector<Polynomial>> powers(n);
  auto power = [&](std::size_t v, int e) -> const Polynomial& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, Rational(1)));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[v]);
    return cache[e];
  };
  std::vector<Term> acc;
  for (const auto& t : p.terms()) {
    Polynomial prod = Polynomial::constant(target, t.coefficient);
    for (std::size_t v = 0; v < n; ++v)
      if (t.monomial.exponents[v] > 0) prod = prod * power(v, t.monomial.exponents[v]);
    for (const auto& s : prod.terms()) acc.push_back(s);
  }
  return Polynomial::from_terms(target, std::move(acc));
}

Polynomial remap_variables(const Polynomial& p, ContextPtr target,
                           std::span<const int> new_index) {
  if (new_index.size() != p.context()->size())
    throw Error(ErrorKind::kStructural, "variable map has wrong length");
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    std::vector<int> e(target->size(), 0);
    for (std::size_t i = 0; i < new_index.size(); ++i) {
      int a = t.monomial.exponents[i];
      if (a == 0) continue;
      if (new_index[i] < 0)
        throw Error(ErrorKind::kStructural,
                    "polynomial involves dropped variable " + p.context()->names()[i]);
      e.at(static_cast<std::size_t>(new_index[i])) += a;
    }
    terms.push_back({Monomial(std::move(e)), t.coefficient});
  }
  return Polynomial::from_terms(std::move(target), std::move(terms));
}

}  // namespace elliptica
