#include "elliptica/quotient.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "elliptica/error.hpp"

namespace elliptica {

// ---------------------------------------------------------------------------
// Degree types

void DegreeType::validate() const {
  if (generators.size() != relations.size())
    throw Error(ErrorKind::kInvalidDegreeType,
                "degree type has " + std::to_string(generators.size()) + " generator and " +
                    std::to_string(relations.size()) + " relation degrees");
  for (const auto* seq : {&generators, &relations}) {
    for (std::size_t i = 0; i < seq->size(); ++i) {
      int d = (*seq)[i];
      if (d < 2 || d % 2 != 0)
        throw Error(ErrorKind::kInvalidDegreeType,
                    "degree " + std::to_string(d) + " is not a positive even integer");
      if (i > 0 && d < (*seq)[i - 1])
        throw Error(ErrorKind::kInvalidDegreeType, "degree sequence is not non-decreasing");
    }
  }
}

std::strong_ordering operator<=>(const DegreeType& a, const DegreeType& b) {
  if (auto c = a.generators.size() <=> b.generators.size(); c != 0) return c;
  if (auto c = a.generators <=> b.generators; c != 0) return c;
  return a.relations <=> b.relations;
}

DegreeType make_degree_type(std::vector<int> generators, std::vector<int> relations) {
  DegreeType dt{std::move(generators), std::move(relations)};
  dt.validate();
  return dt;
}

int formal_dimension(const DegreeType& dt) {
  int fd = 0;
  for (std::size_t i = 0; i < dt.size(); ++i) fd += dt.relations[i] - dt.generators[i];
  return fd;
}

std::vector<std::int64_t> expected_hilbert(const DegreeType& dt) {
  dt.validate();
  int fd = formal_dimension(dt);
  if (fd < 0) throw Error(ErrorKind::kInconsistentDegreeType, "negative formal dimension");
  int top = std::accumulate(dt.relations.begin(), dt.relations.end(), 0);

  auto product = [top](const std::vector<int>& degrees) {
    std::vector<std::int64_t> poly(static_cast<std::size_t>(top) + 1, 0);
    poly[0] = 1;
    for (int d : degrees)
      for (int n = top; n >= d; --n) poly[n] -= poly[n - d];
    return poly;
  };
  std::vector<std::int64_t> num = product(dt.relations);
  std::vector<std::int64_t> den = product(dt.generators);

  // Power-series quotient up to degree fd; den has constant term 1.
  std::vector<std::int64_t> q(static_cast<std::size_t>(fd) + 1, 0);
  for (int n = 0; n <= fd; ++n) {
    std::int64_t c = num[n];
    for (int m = 1; m <= n; ++m) c -= den[m] * q[n - m];
    q[n] = c;
  }
  // Exactness: num == den * q in every degree.
  for (int n = 0; n <= top; ++n) {
    std::int64_t c = 0;
    for (int m = std::max(0, n - fd); m <= n; ++m) c += den[m] * q[n - m];
    if (c != num[n])
      throw Error(ErrorKind::kInconsistentDegreeType,
                  "relation degrees do not divide out: remainder in degree " + std::to_string(n));
  }
  return q;
}

Rational expected_total_dimension(const DegreeType& dt) {
  Rational r(1);
  for (std::size_t i = 0; i < dt.size(); ++i)
    r *= Rational(Integer(dt.relations[i]), Integer(dt.generators[i]));
  return r;
}

// ---------------------------------------------------------------------------
// Presentations

Presentation::Presentation(ContextPtr ctx, std::vector<Polynomial> relations)
    : ctx_(std::move(ctx)), relations_(std::move(relations)) {
  if (relations_.size() != ctx_->size())
    throw Error(ErrorKind::kInvalidPresentation,
                std::to_string(relations_.size()) + " relations for " +
                    std::to_string(ctx_->size()) + " generators");
  std::vector<std::pair<int, std::size_t>> order;
  for (std::size_t j = 0; j < relations_.size(); ++j) {
    const Polynomial& u = relations_[j];
    std::string label = "relation " + std::to_string(j + 1);
    if (!same_context(u.context(), ctx_))
      throw Error(ErrorKind::kContextMismatch, label + " lives in another context");
    Homogeneity h = homogeneous_degree(u);
    if (h.zero()) throw Error(ErrorKind::kInvalidPresentation, label + " is zero");
    if (!h.homogeneous())
      throw Error(ErrorKind::kNotHomogeneous, label + " not homogeneous");
    if (h.degree <= 0 || h.degree % 2 != 0)
      throw Error(ErrorKind::kInvalidPresentation,
                  label + " has degree " + std::to_string(h.degree) +
                      ", expected positive even");
    order.emplace_back(h.degree, j);
  }
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Polynomial> sorted;
  sorted.reserve(relations_.size());
  for (const auto& [d, j] : order) {
    sorted.push_back(relations_[j]);
    degrees_.push_back(d);
  }
  relations_ = std::move(sorted);
}

DegreeType degree_type_of(const Presentation& p) {
  return DegreeType{p.ctx().weights(), p.relation_degrees()};
}

std::int64_t HilbertData::total() const {
  return std::accumulate(dims.begin(), dims.end(), std::int64_t{0});
}

// ---------------------------------------------------------------------------
// Ideal slices

namespace {

std::map<std::vector<int>, std::size_t> index_monomials(const std::vector<Monomial>& ms) {
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < ms.size(); ++i) index.emplace(ms[i].exponents, i);
  return index;
}

}  // namespace

IdealSlice::IdealSlice(const GradedContext&, int degree, ReducedBasis basis,
                       std::vector<Monomial> monomials)
    : degree_(degree),
      basis_(std::move(basis)),
      monomials_(std::move(monomials)),
      index_(index_monomials(monomials_)) {}

Vector IdealSlice::coordinates(const Polynomial& f) const {
  Vector v(monomials_.size());
  for (const auto& t : f.terms()) {
    auto it = index_.find(t.monomial.exponents);
    if (it == index_.end())
      throw Error(ErrorKind::kNotHomogeneous,
                  "polynomial has a term outside degree " + std::to_string(degree_));
    v[it->second] = t.coefficient;
  }
  return v;
}

Polynomial IdealSlice::polynomial(ContextPtr ctx, const Vector& coords) const {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (!coords[i].is_zero()) terms.push_back({monomials_[i], coords[i]});
  return Polynomial::from_terms(std::move(ctx), std::move(terms));
}

std::vector<SparseRow> ideal_generators(const Presentation& p, int n) {
  const GradedContext& ctx = p.ctx();
  std::vector<Monomial> basis = monomial_basis(ctx, n);
  auto index = index_monomials(basis);
  std::vector<SparseRow> rows;
  std::vector<int> e(ctx.size());
  for (std::size_t j = 0; j < p.size(); ++j) {
    int shift = n - p.relation_degrees()[j];
    if (shift < 0) continue;
    for (const Monomial& m : monomial_basis(ctx, shift)) {
      SparseRow row;
      row.reserve(p.relations()[j].size());
      for (const auto& t : p.relations()[j].terms()) {
        for (std::size_t i = 0; i < e.size(); ++i)
          e[i] = m.exponents[i] + t.monomial.exponents[i];
        row.emplace_back(static_cast<int>(index.at(e)), t.coefficient);
      }
      std::sort(row.begin(), row.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

IdealSlice ideal_slice(const Presentation& p, int n) {
  std::vector<Monomial> basis = monomial_basis(p.ctx(), n);
  Echelon e(basis.size());
  for (const auto& row : ideal_generators(p, n)) {
    if (e.full()) break;
    e.insert(row);
  }
  return IdealSlice(p.ctx(), n, ReducedBasis(e), std::move(basis));
}

// ---------------------------------------------------------------------------
// Quotient

Quotient::Quotient(Presentation p) : p_(std::move(p)), dt_(degree_type_of(p_)) {}

int Quotient::formal_dimension() const { return elliptica::formal_dimension(dt_); }

std::shared_ptr<const IdealSlice> Quotient::slice(int n) const {
  {
    std::lock_guard lock(mu_);
    if (auto it = slices_.find(n); it != slices_.end()) return it->second;
  }
  auto s = std::make_shared<const IdealSlice>(ideal_slice(p_, n));
  std::lock_guard lock(mu_);
  ranks_.emplace(n, s->rank());
  return slices_.emplace(n, std::move(s)).first->second;
}

std::size_t Quotient::slice_rank(int n) const {
  {
    std::lock_guard lock(mu_);
    if (auto it = ranks_.find(n); it != ranks_.end()) return it->second;
  }
  std::size_t ncols = monomial_basis(ctx(), n).size();
  std::size_t rank = 0;
  if (ncols > 0) {
    // The modular rank bounds the rational rank from below, so a full
    // modular rank is exact; anything less is recomputed over Q. The reduced
    // slice costs little more than the rank and is kept for later residues.
    auto mod = modular_rank(ideal_generators(p_, n), ncols);
    if (mod && *mod == ncols) {
      rank = ncols;
    } else {
      return slice(n)->rank();
    }
  }
  std::lock_guard lock(mu_);
  return ranks_.emplace(n, rank).first->second;
}

std::int64_t Quotient::dim(int n) const {
  if (n < 0 || n % 2 != 0) return 0;
  std::size_t basis = monomial_basis(ctx(), n).size();
  return static_cast<std::int64_t>(basis) - static_cast<std::int64_t>(slice_rank(n));
}

bool Quotient::elliptic() const {
  {
    std::lock_guard lock(mu_);
    if (elliptic_) return *elliptic_;
  }
  int fd = formal_dimension();
  int top = fd + ctx().max_weight();
  bool result = true;
  // Check from the top of the window down; a failure anywhere decides.
  for (int n = top; n > fd && n >= 0; --n) {
    if (n % 2 != 0) continue;
    if (dim(n) != 0) {
      result = false;
      break;
    }
  }
  if (fd < 0) result = false;
  std::lock_guard lock(mu_);
  elliptic_ = result;
  return result;
}

HilbertData hilbert_function(const Quotient& q, int bound) {
  HilbertData h;
  h.bound = bound;
  for (int n = 0; n <= bound; ++n) h.dims.push_back(q.dim(n));
  return h;
}

HilbertData hilbert_function(const Presentation& p, int bound) {
  Quotient q(p);
  return hilbert_function(q, bound);
}

HilbertData hilbert_function_incremental(const Presentation& p, int bound) {
  const GradedContext& ctx = p.ctx();
  HilbertData h;
  h.bound = bound;
  std::map<int, IdealSlice> slices;
  for (int n = 0; n <= bound; ++n) {
    if (n % 2 != 0) {
      h.dims.push_back(0);
      continue;
    }
    std::vector<Monomial> basis = monomial_basis(ctx, n);
    auto index = index_monomials(basis);
    Echelon e(basis.size());
    std::vector<int> exps(ctx.size());
    for (std::size_t i = 0; i < ctx.size(); ++i) {
      auto lower = slices.find(n - ctx.weight(i));
      if (lower == slices.end()) continue;
      const IdealSlice& s = lower->second;
      for (const Vector& row : s.basis().rows()) {
        SparseRow shifted;
        for (std::size_t c = 0; c < row.size(); ++c) {
          if (row[c].is_zero()) continue;
          exps = s.monomials()[c].exponents;
          ++exps[i];
          shifted.emplace_back(static_cast<int>(index.at(exps)), row[c]);
        }
        std::sort(shifted.begin(), shifted.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        e.insert(shifted);
      }
    }
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (p.relation_degrees()[j] != n) continue;
      SparseRow row;
      for (const auto& t : p.relations()[j].terms())
        row.emplace_back(static_cast<int>(index.at(t.monomial.exponents)), t.coefficient);
      std::sort(row.begin(), row.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      e.insert(row);
    }
    slices.erase(n - 2 * ctx.max_weight() - 2);
    IdealSlice done(ctx, n, ReducedBasis(e), std::move(basis));
    h.dims.push_back(static_cast<std::int64_t>(done.dimension() - done.rank()));
    slices.emplace(n, std::move(done));
  }
  return h;
}

EllipticityReport is_positively_elliptic(const Quotient& q) {
  EllipticityReport r;
  r.formal_dimension = q.formal_dimension();
  r.window_top = std::max(0, r.formal_dimension + q.ctx().max_weight());
  r.hilbert = hilbert_function(q, r.window_top);
  r.elliptic = q.elliptic();
  if (r.elliptic) {
    std::vector<std::int64_t> expected = expected_hilbert(q.degree_type());
    std::vector<std::int64_t> low(r.hilbert.dims.begin(),
                                  r.hilbert.dims.begin() + r.formal_dimension + 1);
    r.matches_expected = low == expected;
  }
  return r;
}

EllipticityReport is_positively_elliptic(const Presentation& p) {
  Quotient q(p);
  return is_positively_elliptic(q);
}

bool poincare_check(const Quotient& q) {
  if (!q.elliptic())
    throw Error(ErrorKind::kPrecondition, "poincare_check requires an elliptic presentation");
  int fd = q.formal_dimension();
  if (q.dim(fd) != 1) return false;
  for (int i = 0; i <= fd; ++i)
    if (q.dim(i) != q.dim(fd - i)) return false;
  return true;
}

JacobianClass jacobian_class(const Quotient& q) {
  const Presentation& p = q.presentation();
  const ContextPtr& ctx = p.context();
  std::size_t k = p.size();
  std::vector<std::vector<Polynomial>> jac(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      jac[i].push_back(partial_derivative(p.relations()[i], j));

  // Laplace expansion row by row, memoised over column subsets.
  std::map<unsigned, Polynomial> minors;
  minors.emplace(0u, Polynomial::constant(ctx, Rational(1)));
  for (std::size_t r = 0; r < k; ++r) {
    std::map<unsigned, Polynomial> next;
    for (const auto& [mask, minor] : minors) {
      if (minor.is_zero()) continue;
      for (std::size_t j = 0; j < k; ++j) {
        if (mask & (1u << j)) continue;
        if (jac[r][j].is_zero()) continue;
        int above = std::popcount(mask >> (j + 1));
        Polynomial term = jac[r][j] * minor;
        if (above % 2) term = -term;
        auto [it, inserted] = next.try_emplace(mask | (1u << j), term);
        if (!inserted) it->second += term;
      }
    }
    minors = std::move(next);
  }
  JacobianClass jc{Polynomial(ctx), false};
  if (auto it = minors.find(k == 0 ? 0u : (1u << k) - 1); it != minors.end())
    jc.determinant = it->second;
  if (!jc.determinant.is_zero()) {
    Homogeneity h = homogeneous_degree(jc.determinant);
    jc.nonzero_in_top = !is_zero(q.slice(h.degree)->residue(jc.determinant));
  }
  return jc;
}

Vector reduce_mod_ideal(const Quotient& q, const Polynomial& f) {
  Homogeneity h = homogeneous_degree(f);
  if (h.zero()) return {};
  if (!h.homogeneous())
    throw Error(ErrorKind::kNotHomogeneous, "reduce_mod_ideal needs a homogeneous polynomial");
  return q.slice(h.degree)->residue(f);
}

// ---------------------------------------------------------------------------
// Pure models

bool in_square_ideal(const Polynomial& f) {
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [](const Term& t) { return t.monomial.total_degree() >= 2; });
}

Presentation reduce_to_pure_model(const ContextPtr& ctx, std::vector<Polynomial> relations) {
  if (relations.size() != ctx->size())
    throw Error(ErrorKind::kDegeneratePresentation,
                std::to_string(relations.size()) + " relations for " +
                    std::to_string(ctx->size()) + " generators");
  for (std::size_t j = 0; j < relations.size(); ++j) {
    if (!same_context(relations[j].context(), ctx))
      throw Error(ErrorKind::kContextMismatch, "relation lives in another context");
    if (relations[j].is_zero())
      throw Error(ErrorKind::kDegeneratePresentation,
                  "relation " + std::to_string(j + 1) + " is zero");
    if (!homogeneous_degree(relations[j]).homogeneous())
      throw Error(ErrorKind::kNotHomogeneous,
                  "relation " + std::to_string(j + 1) + " not homogeneous");
  }

  ContextPtr cur = ctx;
  for (;;) {
    std::optional<std::pair<std::size_t, std::size_t>> pick;  // (relation, variable)
    for (std::size_t j = 0; j < relations.size() && !pick; ++j)
      for (const auto& t : relations[j].terms())
        if (t.monomial.total_degree() == 1) {
          auto it = std::find(t.monomial.exponents.begin(), t.monomial.exponents.end(), 1);
          pick.emplace(j, static_cast<std::size_t>(it - t.monomial.exponents.begin()));
          break;
        }
    if (!pick) break;
    auto [j, i] = *pick;

    // u_j = c x_i + rest, so x_i = -rest / c in the quotient.
    Polynomial xi = Polynomial::variable(cur, i);
    Rational c = relations[j].coefficient(Monomial(xi.terms().front().monomial));
    Polynomial image = (relations[j] - xi * c) * (Rational(-1) / c);

    std::vector<std::string> names;
    std::vector<int> weights;
    std::vector<int> new_index(cur->size(), -1);
    for (std::size_t v = 0; v < cur->size(); ++v) {
      if (v == i) continue;
      new_index[v] = static_cast<int>(names.size());
      names.push_back(cur->names()[v]);
      weights.push_back(cur->weight(v));
    }
    ContextPtr next = GradedContext::make(std::move(names), std::move(weights));

    std::vector<Polynomial> reduced;
    for (std::size_t l = 0; l < relations.size(); ++l) {
      if (l == j) continue;
      Polynomial u = substitute(relations[l], i, image);
      if (u.is_zero())
        throw Error(ErrorKind::kDegeneratePresentation,
                    "eliminating " + cur->names()[i] + " makes a relation vanish");
      reduced.push_back(remap_variables(u, next, new_index));
    }
    relations = std::move(reduced);
    cur = next;
  }
  // Dropping variables keeps weights sorted; the constructor sorts relations.
  return Presentation(cur, std::move(relations));
}

std::vector<std::string> pure_model_violations(const Presentation& p) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!in_square_ideal(p.relations()[i]))
      out.push_back("relation " + std::to_string(i + 1) + " has a linear term");
    if (p.relation_degrees()[i] < 2 * p.ctx().weight(i))
      out.push_back("|u_" + std::to_string(i + 1) + "| = " +
                    std::to_string(p.relation_degrees()[i]) + " < 2|x_" +
                    std::to_string(i + 1) + "| = " + std::to_string(2 * p.ctx().weight(i)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Adapted splittings

namespace {

bool only_in(const Monomial& m, const std::vector<bool>& in_subset) {
  for (std::size_t v = 0; v < m.size(); ++v)
    if (m.exponents[v] > 0 && !in_subset[v]) return false;
  return true;
}

std::optional<AdaptedSplitting> try_subset(const Presentation& p,
                                           const std::vector<std::size_t>& subset) {
  const ContextPtr& ctx = p.context();
  std::vector<bool> in_subset(ctx->size(), false);
  for (std::size_t v : subset) in_subset[v] = true;

  std::vector<Polynomial> found;
  std::size_t j = 0;
  while (j < p.size()) {
    int d = p.relation_degrees()[j];
    std::size_t end = j;
    while (end < p.size() && p.relation_degrees()[end] == d) ++end;
    // Combinations sum c_l u_l whose coefficients on monomials outside Q[S] vanish.
    std::vector<Monomial> outside;
    for (const Monomial& m : monomial_basis(*ctx, d))
      if (!only_in(m, in_subset)) outside.push_back(m);
    Matrix constraints;
    for (const Monomial& m : outside) {
      Vector row;
      for (std::size_t l = j; l < end; ++l) row.push_back(p.relations()[l].coefficient(m));
      constraints.push_back(std::move(row));
    }
    for (const Vector& c : nullspace(constraints, end - j)) {
      Polynomial combo(ctx);
      for (std::size_t l = j; l < end; ++l)
        if (!c[l - j].is_zero()) combo += p.relations()[l] * c[l - j];
      found.push_back(std::move(combo));
    }
    j = end;
  }
  if (found.size() != subset.size()) return std::nullopt;

  std::vector<std::string> names;
  std::vector<int> weights;
  std::vector<int> new_index(ctx->size(), -1);
  for (std::size_t v : subset) {
    new_index[v] = static_cast<int>(names.size());
    names.push_back(ctx->names()[v]);
    weights.push_back(ctx->weight(v));
  }
  ContextPtr sub_ctx = GradedContext::make(std::move(names), std::move(weights));
  std::vector<Polynomial> sub_relations;
  for (const auto& u : found) sub_relations.push_back(remap_variables(u, sub_ctx, new_index));
  Presentation sub(sub_ctx, std::move(sub_relations));
  Quotient sub_q(sub);
  if (!sub_q.elliptic()) return std::nullopt;
  return AdaptedSplitting{subset, std::move(found), std::move(sub)};
}

}  // namespace

std::optional<AdaptedSplitting> detect_adapted_splitting(const Quotient& q) {
  if (!q.elliptic())
    throw Error(ErrorKind::kPrecondition,
                "detect_adapted_splitting requires an elliptic presentation");
  std::size_t k = q.presentation().size();
  for (std::size_t size = 1; size < k; ++size) {
    // Subsets of the given size in lexicographic order of index sets.
    std::vector<bool> select(k, false);
    std::fill(select.begin(), select.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      std::vector<std::size_t> subset;
      for (std::size_t v = 0; v < k; ++v)
        if (select[v]) subset.push_back(v);
      if (auto s = try_subset(q.presentation(), subset)) return s;
    } while (std::prev_permutation(select.begin(), select.end()));
  }
  return std::nullopt;
}

}  // namespace elliptica
