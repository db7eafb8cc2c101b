#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "elliptica/rational.hpp"

namespace elliptica {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;
using SparseRow = std::vector<std::pair<int, Rational>>;  // strictly increasing columns

SparseRow to_sparse(const Vector& v);
bool is_zero(const Vector& v);

// Incremental row echelon form over Q. Rows are stored as primitive integer
// vectors (fraction-free elimination with content removal); the pivot of a
// row is its first nonzero column, and new rows are reduced against existing
// pivots in column order.
class Echelon {
 public:
  explicit Echelon(std::size_t ncols);

  // Returns true iff the row was independent of the rows inserted so far.
  bool insert(const SparseRow& row);
  bool insert(const Vector& row) { return insert(to_sparse(row)); }

  std::size_t ncols() const { return ncols_; }
  std::size_t rank() const { return rank_; }
  bool full() const { return rank_ == ncols_; }

 private:
  friend class ReducedBasis;
  using IntRow = std::vector<std::pair<int, Integer>>;

  std::size_t ncols_;
  std::size_t rank_ = 0;
  std::vector<std::optional<IntRow>> pivot_rows_;  // indexed by pivot column
};

// Reduced row echelon basis over Q (pivot entries 1, zero above and below).
// The residue of a vector is its unique normal form modulo the row space.
class ReducedBasis {
 public:
  explicit ReducedBasis(std::size_t ncols) : ncols_(ncols) {}
  explicit ReducedBasis(const Echelon& echelon);

  std::size_t ncols() const { return ncols_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<int>& pivots() const { return pivots_; }
  const Matrix& rows() const { return rows_; }

  Vector residue(Vector v) const;
  bool contains(const Vector& v) const { return is_zero(residue(v)); }

 private:
  std::size_t ncols_;
  std::vector<int> pivots_;
  Matrix rows_;
};

ReducedBasis row_reduce(const Matrix& rows, std::size_t ncols);

// Basis of {c : M c = 0}, one vector per free column in ascending order, with
// the free coordinate set to 1.
Matrix nullspace(const Matrix& m, std::size_t ncols);

// Rank modulo the prime 2^61 - 1. Never exceeds the rank over Q, so a result
// equal to ncols certifies full rank exactly. Returns nullopt if some
// denominator vanishes modulo the prime.
std::optional<std::size_t> modular_rank(const std::vector<SparseRow>& rows, std::size_t ncols);

}  // namespace elliptica
