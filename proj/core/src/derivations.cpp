#include "elliptica/derivations.hpp"

#include <random>

#include "elliptica/error.hpp"

namespace elliptica {

Polynomial apply(const Presentation& p, const Derivation& d, const Polynomial& f) {
  const ContextPtr& ctx = p.context();
  if (d.images.size() != ctx->size())
    throw Error(ErrorKind::kStructural, "derivation needs one image per generator");
  Polynomial out(ctx);
  for (std::size_t i = 0; i < ctx->size(); ++i) {
    const Polynomial& img = d.images[i];
    if (img.is_zero()) continue;
    Homogeneity h = homogeneous_degree(img);
    if (!h.homogeneous() || h.degree != ctx->weight(i) + d.degree)
      throw Error(ErrorKind::kStructural,
                  "image of " + ctx->names()[i] + " does not have degree " +
                      std::to_string(ctx->weight(i) + d.degree));
    Polynomial df = partial_derivative(f, i);
    if (!df.is_zero()) out += df * img;
  }
  return out;
}

namespace {

// Unknowns are the coefficients of each image over the monomial basis of its
// target degree, laid out generator by generator.
struct Layout {
  std::vector<std::vector<Monomial>> bases;
  std::vector<std::size_t> offsets;
  std::size_t total = 0;

  Layout(const GradedContext& ctx, int degree) {
    for (std::size_t i = 0; i < ctx.size(); ++i) {
      offsets.push_back(total);
      bases.push_back(monomial_basis(ctx, ctx.weight(i) + degree));
      total += bases.back().size();
    }
  }

  Derivation derivation(const ContextPtr& ctx, int degree, const Vector& c) const {
    Derivation d{degree, {}};
    for (std::size_t i = 0; i < bases.size(); ++i) {
      std::vector<Term> terms;
      for (std::size_t m = 0; m < bases[i].size(); ++m)
        if (!c[offsets[i] + m].is_zero()) terms.push_back({bases[i][m], c[offsets[i] + m]});
      d.images.push_back(Polynomial::from_terms(ctx, std::move(terms)));
    }
    return d;
  }
};

// Concatenated normal forms of the images, generator by generator. Positions
// of generator i occupy the same range as its unknowns.
Vector image_residues(const Quotient& q, const Layout& layout, int degree, const Vector& c) {
  Vector out(layout.total);
  for (std::size_t i = 0; i < layout.bases.size(); ++i) {
    std::size_t n = layout.bases[i].size();
    if (n == 0) continue;
    Vector v(c.begin() + static_cast<std::ptrdiff_t>(layout.offsets[i]),
             c.begin() + static_cast<std::ptrdiff_t>(layout.offsets[i] + n));
    v = q.slice(q.ctx().weight(i) + degree)->basis().residue(std::move(v));
    std::copy(v.begin(), v.end(), out.begin() + static_cast<std::ptrdiff_t>(layout.offsets[i]));
  }
  return out;
}

}  // namespace

DerivationSpace derivation_space(const Quotient& q, int degree) {
  DerivationSpace space;
  space.degree = degree;
  if (degree % 2 != 0) return space;
  if (!q.elliptic())
    throw Error(ErrorKind::kPrecondition, "derivation_space requires an elliptic presentation");

  const Presentation& p = q.presentation();
  const ContextPtr& ctx = p.context();
  Layout layout(*ctx, degree);
  if (layout.total == 0) return space;

  // Column u holds the normal forms of delta(u_j) for the unit derivation
  // that sends one generator to one monomial.
  std::vector<std::vector<Polynomial>> partials(p.size());
  for (std::size_t j = 0; j < p.size(); ++j)
    for (std::size_t i = 0; i < ctx->size(); ++i)
      partials[j].push_back(partial_derivative(p.relations()[j], i));

  Matrix columns(layout.total);
  for (std::size_t j = 0; j < p.size(); ++j) {
    int target = p.relation_degrees()[j] + degree;
    if (target < 0) continue;
    auto slice = q.slice(target);
    for (std::size_t i = 0; i < ctx->size(); ++i) {
      for (std::size_t m = 0; m < layout.bases[i].size(); ++m) {
        Vector& col = columns[layout.offsets[i] + m];
        const Polynomial& dp = partials[j][i];
        if (dp.is_zero()) {
          col.resize(col.size() + slice->dimension());
          continue;
        }
        Vector r = slice->residue(dp * Polynomial::monomial(ctx, layout.bases[i][m]));
        col.insert(col.end(), r.begin(), r.end());
      }
    }
  }
  std::size_t nrows = columns.front().size();
  Matrix constraints;
  for (std::size_t r = 0; r < nrows; ++r) {
    Vector row(layout.total);
    bool any = false;
    for (std::size_t u = 0; u < layout.total; ++u) {
      row[u] = columns[u][r];
      any = any || !row[u].is_zero();
    }
    if (any) constraints.push_back(std::move(row));
  }

  Matrix kernel = nullspace(constraints, layout.total);
  for (const Vector& c : kernel) space.lift_basis.push_back(layout.derivation(ctx, degree, c));

  for (std::size_t i = 0; i < ctx->size(); ++i)
    if (!layout.bases[i].empty()) space.trivial_dim += q.slice(ctx->weight(i) + degree)->rank();

  Matrix residues;
  for (const Vector& c : kernel) residues.push_back(image_residues(q, layout, degree, c));
  ReducedBasis induced = row_reduce(residues, layout.total);
  space.induced_dim = induced.rank();
  for (const Vector& r : induced.rows()) space.induced_basis.push_back(layout.derivation(ctx, degree, r));

  if (space.induced_dim + space.trivial_dim != space.lift_basis.size())
    throw Error(ErrorKind::kInternal, "trivial derivations are not contained in the lift space");
  return space;
}

DerivationSpace derivation_space(const Presentation& p, int degree) {
  Quotient q(p);
  return derivation_space(q, degree);
}

namespace {

bool constants_vanish(const Presentation& p, const Derivation& d) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p.ctx().weight(i) + d.degree == 0 && !d.images[i].is_zero()) return false;
  return true;
}

}  // namespace

HalperinReport halperin_check(const Quotient& q) {
  if (!q.elliptic())
    throw Error(ErrorKind::kPrecondition, "halperin_check requires an elliptic presentation");
  HalperinReport report;
  int w = q.ctx().max_weight();
  for (int d = -2; d >= -(w - 2); d -= 2) {
    DerivationSpace s = derivation_space(q, d);
    report.degrees.push_back({d, s.lift_basis.size(), s.trivial_dim, s.induced_dim});
    for (const auto& delta : s.lift_basis)
      report.land_in_zero_holds = report.land_in_zero_holds && constants_vanish(q.presentation(), delta);
    if (s.induced_dim > 0 && report.pass) {
      report.pass = false;
      report.witness = s.induced_basis.front();
    }
  }
  return report;
}

HalperinReport halperin_check(const Presentation& p) {
  Quotient q(p);
  return halperin_check(q);
}

namespace {

Polynomial random_homogeneous(const ContextPtr& ctx, int degree, std::mt19937_64& rng) {
  std::vector<Term> terms;
  for (const Monomial& m : monomial_basis(*ctx, degree)) {
    long c = static_cast<long>(rng() % 7) - 3;
    if (c != 0) terms.push_back({m, Rational(c)});
  }
  return Polynomial::from_terms(ctx, std::move(terms));
}

}  // namespace

SolverInvariants check_solver_invariants(const Quotient& q, const DerivationSpace& space,
                                         std::uint64_t seed) {
  SolverInvariants inv;
  const Presentation& p = q.presentation();
  const ContextPtr& ctx = p.context();
  std::mt19937_64 rng(seed);

  for (const Derivation& d : space.lift_basis) {
    for (const Polynomial& u : p.relations())
      if (!is_zero(reduce_mod_ideal(q, apply(p, d, u)))) inv.ideal_preserved = false;

    for (int trial = 0; trial < 2 && ctx->size() > 0; ++trial) {
      int df = ctx->weight(rng() % ctx->size()) + ctx->weight(rng() % ctx->size());
      int dg = ctx->weight(rng() % ctx->size());
      Polynomial f = random_homogeneous(ctx, df, rng);
      Polynomial g = random_homogeneous(ctx, dg, rng);
      if (apply(p, d, f * g) != apply(p, d, f) * g + f * apply(p, d, g)) inv.leibniz = false;
    }
  }

  if (space.degree >= 0) return inv;

  for (const Derivation& d : space.lift_basis)
    inv.land_in_zero = inv.land_in_zero && constants_vanish(p, d);
  for (const Derivation& d : space.induced_basis)
    inv.land_in_zero = inv.land_in_zero && constants_vanish(p, d);

  // For each generator i0: lifts whose other k-1 images lie in I must have
  // image of x_i0 in I as well.
  std::size_t k = p.size();
  std::size_t m = space.lift_basis.size();
  if (m == 0) return inv;
  std::vector<std::vector<Vector>> residues(m);  // [basis element][generator]
  for (std::size_t l = 0; l < m; ++l)
    for (std::size_t i = 0; i < k; ++i) {
      const Polynomial& img = space.lift_basis[l].images[i];
      int target = ctx->weight(i) + space.degree;
      if (target < 0) {
        residues[l].emplace_back();
        continue;
      }
      auto slice = q.slice(target);
      residues[l].push_back(slice->residue(img));
    }
  for (std::size_t i0 = 0; i0 < k; ++i0) {
    Matrix others;  // rows: coordinates; columns: basis elements
    for (std::size_t i = 0; i < k; ++i) {
      if (i == i0) continue;
      for (std::size_t r = 0; r < residues[0][i].size(); ++r) {
        Vector row(m);
        for (std::size_t l = 0; l < m; ++l) row[l] = residues[l][i][r];
        others.push_back(std::move(row));
      }
    }
    for (const Vector& a : nullspace(others, m)) {
      Vector combo(residues[0][i0].size());
      for (std::size_t l = 0; l < m; ++l)
        for (std::size_t r = 0; r < combo.size(); ++r) combo[r] += a[l] * residues[l][i0][r];
      if (!is_zero(combo)) inv.k_minus_one = false;
    }
  }
  return inv;
}

}  // namespace elliptica
