#include "elliptica/linalg.hpp"

#include <algorithm>

#include "elliptica/error.hpp"

namespace elliptica {

SparseRow to_sparse(const Vector& v) {
  SparseRow r;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) r.emplace_back(static_cast<int>(i), v[i]);
  return r;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

namespace {

using IntRow = std::vector<std::pair<int, Integer>>;

IntRow primitive(const SparseRow& row) {
  Integer l = 1;
  for (const auto& [c, v] : row) {
    Integer d = v.denominator();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  IntRow out;
  out.reserve(row.size());
  for (const auto& [c, v] : row) {
    Integer x = v.numerator() * (l / v.denominator());
    out.emplace_back(c, std::move(x));
  }
  return out;
}

void remove_content(IntRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (sgn(row.front().second) < 0) g = -g;
  if (g != 1)
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// row <- a*row - b*pivot, where a = pivot leading entry, b = row leading entry.
IntRow eliminate(const IntRow& row, const IntRow& pivot) {
  Integer a = pivot.front().second;
  Integer b = row.front().second;
  Integer g = gcd(a, b);
  a /= g;
  b /= g;
  IntRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  Integer t;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.emplace_back(row[i].first, a * row[i].second);
      ++i;
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -b * pivot[j].second);
      ++j;
    } else {
      t = a * row[i].second - b * pivot[j].second;
      if (sgn(t) != 0) out.emplace_back(row[i].first, t);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Echelon::Echelon(std::size_t ncols) : ncols_(ncols), pivot_rows_(ncols) {}

bool Echelon::insert(const SparseRow& row) {
  if (!row.empty() && static_cast<std::size_t>(row.back().first) >= ncols_)
    throw Error(ErrorKind::kStructural, "row longer than echelon width");
  if (full()) return false;
  IntRow r = primitive(row);
  while (!r.empty()) {
    auto& pivot = pivot_rows_[static_cast<std::size_t>(r.front().first)];
    if (!pivot) {
      remove_content(r);
      pivot = std::move(r);
      ++rank_;
      return true;
    }
    r = eliminate(r, *pivot);
    remove_content(r);
  }
  return false;
}

ReducedBasis::ReducedBasis(const Echelon& echelon) : ncols_(echelon.ncols()) {
  // Back-substitute from the last pivot upward so every row is reduced
  // against all pivots to its right.
  std::vector<std::pair<int, Vector>> reduced;
  for (std::size_t c = ncols_; c-- > 0;) {
    const auto& src = echelon.pivot_rows_[c];
    if (!src) continue;
    Vector row(ncols_);
    Rational lead(src->front().second);
    for (const auto& [col, v] : *src) row[static_cast<std::size_t>(col)] = Rational(v) / lead;
    for (const auto& [pc, prow] : reduced) {
      const Rational f = row[static_cast<std::size_t>(pc)];
      if (f.is_zero()) continue;
      for (std::size_t k = static_cast<std::size_t>(pc); k < ncols_; ++k)
        if (!prow[k].is_zero()) row[k] -= f * prow[k];
    }
    reduced.emplace_back(static_cast<int>(c), std::move(row));
  }
  std::reverse(reduced.begin(), reduced.end());
  for (auto& [c, row] : reduced) {
    pivots_.push_back(c);
    rows_.push_back(std::move(row));
  }
}

Vector ReducedBasis::residue(Vector v) const {
  if (v.size() != ncols_) throw Error(ErrorKind::kStructural, "vector width mismatch");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    std::size_t pc = static_cast<std::size_t>(pivots_[r]);
    if (v[pc].is_zero()) continue;
    const Rational f = v[pc];
    for (std::size_t k = pc; k < ncols_; ++k)
      if (!rows_[r][k].is_zero()) v[k] -= f * rows_[r][k];
  }
  return v;
}

ReducedBasis row_reduce(const Matrix& rows, std::size_t ncols) {
  Echelon e(ncols);
  for (const auto& r : rows) {
    if (r.size() != ncols) throw Error(ErrorKind::kStructural, "matrix row width mismatch");
    e.insert(r);
  }
  return ReducedBasis(e);
}

Matrix nullspace(const Matrix& m, std::size_t ncols) {
  ReducedBasis rref = row_reduce(m, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (int p : rref.pivots()) is_pivot[static_cast<std::size_t>(p)] = true;
  Matrix basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(ncols);
    v[f] = Rational(1);
    for (std::size_t r = 0; r < rref.rank(); ++r)
      v[static_cast<std::size_t>(rref.pivots()[r])] = -rref.rows()[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

__extension__ using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  u128 p = static_cast<u128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(p & kPrime);
  std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
  std::uint64_t s = lo + hi;
  return s >= kPrime ? s - kPrime : s;
}

std::uint64_t addmod(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s >= kPrime ? s - kPrime : s;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce_integer(const Integer& z) {
  Integer m = z % Integer(static_cast<unsigned long>(kPrime));
  if (sgn(m) < 0) m += static_cast<unsigned long>(kPrime);
  return m.get_ui();
}

}  // namespace

std::optional<std::size_t> modular_rank(const std::vector<SparseRow>& rows, std::size_t ncols) {
  std::vector<std::vector<std::uint64_t>> pivots(ncols);
  std::size_t rank = 0;
  std::vector<std::uint64_t> v(ncols);
  for (const auto& row : rows) {
    if (rank == ncols) break;
    std::fill(v.begin(), v.end(), 0);
    for (const auto& [c, x] : row) {
      std::uint64_t den = reduce_integer(x.denominator());
      if (den == 0) return std::nullopt;
      v[static_cast<std::size_t>(c)] =
          mulmod(reduce_integer(x.numerator()), powmod(den, kPrime - 2));
    }
    for (std::size_t c = 0; c < ncols; ++c) {
      if (v[c] == 0) continue;
      if (pivots[c].empty()) {
        std::uint64_t inv = powmod(v[c], kPrime - 2);
        for (std::size_t k = c; k < ncols; ++k) v[k] = mulmod(v[k], inv);
        pivots[c] = v;
        ++rank;
        break;
      }
      std::uint64_t f = kPrime - v[c];
      const auto& p = pivots[c];
      for (std::size_t k = c; k < ncols; ++k)
        if (p[k]) v[k] = addmod(v[k], mulmod(f, p[k]));
    }
  }
  return rank;
}

}  // namespace elliptica
