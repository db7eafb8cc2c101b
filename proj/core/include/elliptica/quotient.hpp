#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "elliptica/linalg.hpp"
#include "elliptica/ring.hpp"

namespace elliptica {

// Generator degrees A and relation degrees B of a presentation.
struct DegreeType {
  std::vector<int> generators;
  std::vector<int> relations;

  std::size_t size() const { return generators.size(); }

  // Throws kInvalidDegreeType unless lengths agree, entries are even and
  // >= 2, and both sequences are non-decreasing.
  void validate() const;

  friend bool operator==(const DegreeType&, const DegreeType&) = default;
  // Canonical order: number of generators, then A, then B lexicographically.
  friend std::strong_ordering operator<=>(const DegreeType& a, const DegreeType& b);
};

DegreeType make_degree_type(std::vector<int> generators, std::vector<int> relations);

int formal_dimension(const DegreeType& dt);

// Coefficients of prod (1 - t^B_i) / (1 - t^A_i) in degrees 0..fd. Throws
// kInconsistentDegreeType when the division leaves a remainder.
std::vector<std::int64_t> expected_hilbert(const DegreeType& dt);

// Product of B_i / A_i, the total dimension of a complete intersection with
// this degree type.
Rational expected_total_dimension(const DegreeType& dt);

// Q[x_1..x_k]/(u_1..u_k): k homogeneous relations of positive even degree.
// Relations are stably sorted by degree on construction.
class Presentation {
 public:
  Presentation(ContextPtr ctx, std::vector<Polynomial> relations);

  const ContextPtr& context() const { return ctx_; }
  const GradedContext& ctx() const { return *ctx_; }
  const std::vector<Polynomial>& relations() const { return relations_; }
  const std::vector<int>& relation_degrees() const { return degrees_; }
  std::size_t size() const { return relations_.size(); }

  friend bool operator==(const Presentation& a, const Presentation& b) {
    return *a.ctx_ == *b.ctx_ && a.relations_ == b.relations_;
  }

 private:
  ContextPtr ctx_;
  std::vector<Polynomial> relations_;
  std::vector<int> degrees_;
};

DegreeType degree_type_of(const Presentation& p);

struct HilbertData {
  int bound = 0;
  std::vector<std::int64_t> dims;  // dims[n] = dim H^n, 0 <= n <= bound

  std::int64_t total() const;
};

// Degree-n component I^n of the ideal, as a reduced echelon basis over the
// canonical monomial basis of A^n.
class IdealSlice {
 public:
  IdealSlice(const GradedContext& ctx, int degree, ReducedBasis basis,
             std::vector<Monomial> monomials);

  int degree() const { return degree_; }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  const ReducedBasis& basis() const { return basis_; }
  std::size_t rank() const { return basis_.rank(); }
  std::size_t dimension() const { return monomials_.size(); }

  // Coordinates of a polynomial homogeneous of this degree (or zero).
  Vector coordinates(const Polynomial& f) const;
  Polynomial polynomial(ContextPtr ctx, const Vector& coords) const;
  Vector residue(const Polynomial& f) const { return basis_.residue(coordinates(f)); }

 private:
  int degree_;
  ReducedBasis basis_;
  std::vector<Monomial> monomials_;
  std::map<std::vector<int>, std::size_t> index_;
};

// Spanning rows {m * u_j : deg m + |u_j| = n} in coordinates over
// monomial_basis(ctx, n).
std::vector<SparseRow> ideal_generators(const Presentation& p, int n);

// Row-reduced basis of I^n computed independently of other degrees.
IdealSlice ideal_slice(const Presentation& p, int n);

// A presentation together with memoised per-degree ideal data. Queries are
// safe to issue from several threads.
class Quotient {
 public:
  explicit Quotient(Presentation p);
  Quotient(const Quotient&) = delete;
  Quotient& operator=(const Quotient&) = delete;

  const Presentation& presentation() const { return p_; }
  const GradedContext& ctx() const { return p_.ctx(); }
  const DegreeType& degree_type() const { return dt_; }
  int formal_dimension() const;

  std::shared_ptr<const IdealSlice> slice(int n) const;
  std::size_t slice_rank(int n) const;
  std::int64_t dim(int n) const;

  // Window decision: H^n = 0 for every F < n <= F + max weight.
  bool elliptic() const;

 private:
  Presentation p_;
  DegreeType dt_;
  mutable std::mutex mu_;
  mutable std::map<int, std::shared_ptr<const IdealSlice>> slices_;
  mutable std::map<int, std::size_t> ranks_;
  mutable std::optional<bool> elliptic_;
};

HilbertData hilbert_function(const Quotient& q, int bound);
HilbertData hilbert_function(const Presentation& p, int bound);

// Same dimensions, built degree by degree from I^n = sum_i x_i I^{n-|x_i|}
// plus the relations of degree n.
HilbertData hilbert_function_incremental(const Presentation& p, int bound);

struct EllipticityReport {
  bool elliptic = false;
  int formal_dimension = 0;
  int window_top = 0;  // F + max generator weight
  HilbertData hilbert;  // through window_top
  // Set when elliptic: whether dims[0..F] equal expected_hilbert.
  std::optional<bool> matches_expected;
};

EllipticityReport is_positively_elliptic(const Quotient& q);
EllipticityReport is_positively_elliptic(const Presentation& p);

// Poincare duality of the Hilbert function; precondition: elliptic.
bool poincare_check(const Quotient& q);

struct JacobianClass {
  Polynomial determinant;
  bool nonzero_in_top = false;
};

JacobianClass jacobian_class(const Quotient& q);

// Normal form of a homogeneous f modulo I in its degree, over
// monomial_basis(deg f). The zero polynomial reduces to an empty vector.
Vector reduce_mod_ideal(const Quotient& q, const Polynomial& f);

// Eliminates generators that occur linearly in some relation until every
// relation lies in Q^{>=2}, then re-sorts generators and relations.
Presentation reduce_to_pure_model(const ContextPtr& ctx, std::vector<Polynomial> relations);

// True iff every term has total exponent >= 2.
bool in_square_ideal(const Polynomial& f);

// Violations of |u_i| >= 2|x_i| and u_i in Q^{>=2}, one message each.
std::vector<std::string> pure_model_violations(const Presentation& p);

struct AdaptedSplitting {
  std::vector<std::size_t> generators;  // indices of the sub-algebra generators
  std::vector<Polynomial> relations;    // in the ambient context
  Presentation sub;                     // the same relations over Q[S]
};

// Searches proper generator subsets S for |S| relations, recombined within
// equal degrees, that only involve S and present an elliptic algebra.
std::optional<AdaptedSplitting> detect_adapted_splitting(const Quotient& q);

}  // namespace elliptica
