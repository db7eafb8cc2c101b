#include "elliptica/degreetypes.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <optional>
#include <random>
#include <set>

#include "elliptica/error.hpp"

namespace elliptica {

// ---------------------------------------------------------------------------
// SAC

namespace {

// Coin problem: n = sum lambda_m s_m with lambda_m >= 0.
std::vector<bool> reachable(int bound, const std::vector<int>& s) {
  std::vector<bool> ok(static_cast<std::size_t>(std::max(bound, 0)) + 1, false);
  ok[0] = true;
  for (int n = 1; n <= bound; ++n)
    for (int x : s)
      if (x > 0 && x <= n && ok[n - x]) {
        ok[n] = true;
        break;
      }
  return ok;
}

}  // namespace

bool representable(int b, const std::vector<int>& s) {
  if (s.empty() || b < 2) return false;
  std::vector<bool> ok = reachable(b, s);
  // Peel two summands so the coefficient sum is at least two.
  for (int x : s)
    for (int y : s)
      if (x > 0 && y > 0 && b - x - y >= 0 && ok[b - x - y]) return true;
  return false;
}

SacReport sac_check(const DegreeType& dt) {
  dt.validate();
  SacReport report;
  std::size_t k = dt.size();
  std::set<std::vector<int>> seen;
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    std::vector<int> sub;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1u << i)) sub.push_back(dt.generators[i]);
    if (!seen.insert(sub).second) continue;
    int count = 0;
    for (int b : dt.relations)
      if (representable(b, sub)) ++count;
    if (count < static_cast<int>(sub.size()))
      report.failing_subsets.push_back({sub, count});
  }
  std::sort(report.failing_subsets.begin(), report.failing_subsets.end(),
            [](const auto& a, const auto& b) {
              if (a.subsequence.size() != b.subsequence.size())
                return a.subsequence.size() < b.subsequence.size();
              return a.subsequence < b.subsequence;
            });
  report.pass = report.failing_subsets.empty();
  return report;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

void relations_rec(const std::vector<int>& a, std::size_t i, int prev, int rem,
                   std::vector<int>& b, std::vector<DegreeType>& out) {
  if (i == a.size()) {
    if (rem == 0) {
      DegreeType dt{a, b};
      if (sac_check(dt).pass) out.push_back(std::move(dt));
    }
    return;
  }
  // Remaining gaps B_j - A_j >= A_j for j > i.
  int reserve = 0;
  for (std::size_t j = i + 1; j < a.size(); ++j) reserve += a[j];
  for (int bi = std::max(prev, 2 * a[i]); bi - a[i] <= rem - reserve; bi += 2) {
    b.push_back(bi);
    relations_rec(a, i + 1, bi, rem - (bi - a[i]), b, out);
    b.pop_back();
  }
}

void generators_rec(std::size_t k, int fd, int lo, int sum, std::vector<int>& a,
                    std::vector<DegreeType>& out) {
  if (a.size() == k) {
    std::vector<int> b;
    relations_rec(a, 0, 0, fd, b, out);
    return;
  }
  std::size_t left = k - a.size();
  for (int x = lo; sum + x * static_cast<int>(left) <= fd; x += 2) {
    a.push_back(x);
    generators_rec(k, fd, x, sum + x, a, out);
    a.pop_back();
  }
}

std::vector<DegreeType> enumerate_k(int fd, std::size_t k) {
  std::vector<DegreeType> out;
  std::vector<int> a;
  generators_rec(k, fd, 2, 0, a, out);
  return out;
}

}  // namespace

std::vector<DegreeType> enumerate_degree_types(int fd, unsigned jobs) {
  if (fd < 2 || fd > 30 || fd % 2 != 0)
    throw Error(ErrorKind::kOutOfRange, "formal dimension must be even and in [2, 30]");
  std::size_t kmax = static_cast<std::size_t>(fd / 2);
  std::vector<DegreeType> out;
  if (jobs <= 1) {
    for (std::size_t k = 1; k <= kmax; ++k) {
      auto part = enumerate_k(fd, k);
      out.insert(out.end(), part.begin(), part.end());
    }
  } else {
    std::vector<std::future<std::vector<DegreeType>>> parts;
    for (std::size_t k = 1; k <= kmax; ++k)
      parts.push_back(std::async(std::launch::async, enumerate_k, fd, k));
    for (auto& f : parts) {
      auto part = f.get();
      out.insert(out.end(), part.begin(), part.end());
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Filter pipeline

std::string_view to_string(FilterOutcome outcome) {
  switch (outcome) {
    case FilterOutcome::kExcludedSac: return "excluded-sac";
    case FilterOutcome::kExcludedFdExceeds: return "excluded-fd-exceeds";
    case FilterOutcome::kExcludedInequality: return "excluded-inequality";
    case FilterOutcome::kExceptionalCandidate: return "exceptional-candidate";
    case FilterOutcome::kOutOfSector: return "out-of-sector";
  }
  return "unknown";
}

std::string_view to_string(Sector sector) {
  switch (sector) {
    case Sector::kNone: return "none";
    case Sector::kAtMost8: return "<=8";
    case Sector::kTen: return "10";
    case Sector::kAtLeast12: return ">=12";
  }
  return "unknown";
}

Sector sector_of(const DegreeType& dt) {
  std::size_t k = dt.size();
  if (k < 2) return Sector::kNone;
  int s = dt.generators[k - 2] + dt.generators[k - 1];
  if (s <= 8) return Sector::kAtMost8;
  if (s == 10) return Sector::kTen;
  return Sector::kAtLeast12;
}

namespace {

// Lower bounds on each |u_i| with the lemma that supplies the binding one.
struct Bounds {
  std::vector<int> value;
  std::vector<std::string_view> source;

  void raise(std::size_t i, int v, std::string_view why) {
    if (v > value[i]) {
      value[i] = v;
      source[i] = why;
    }
  }
};

Bounds standard_bounds(const DegreeType& dt) {
  std::size_t k = dt.size();
  Bounds b{std::vector<int>(k, 0), std::vector<std::string_view>(k)};
  for (std::size_t i = 0; i < k; ++i) {
    b.raise(i, 2 * dt.generators[i], cite::kPureModel);
    if (i + 1 < k) b.raise(i, dt.generators[0] + dt.generators[i + 1], cite::kDegreeInequality);
  }
  return b;
}

int fd_lower_bound(const DegreeType& dt, const Bounds& b) {
  int s = 0;
  for (std::size_t i = 0; i < dt.size(); ++i) s += b.value[i] - dt.generators[i];
  return s;
}

FilterVerdict verdict(FilterOutcome o, Sector s, std::vector<std::string_view> cites,
                      std::string detail) {
  FilterVerdict v;
  v.outcome = o;
  v.sector = s;
  for (auto c : cites) {
    std::string str(c);
    if (std::find(v.citations.begin(), v.citations.end(), str) == v.citations.end())
      v.citations.push_back(std::move(str));
  }
  v.detail = std::move(detail);
  return v;
}

// First relation below its bound, if any.
std::optional<FilterVerdict> check_bounds(const DegreeType& dt, const Bounds& b, Sector sector,
                                          std::string_view estimate) {
  for (std::size_t i = 0; i < dt.size(); ++i)
    if (dt.relations[i] < b.value[i])
      return verdict(FilterOutcome::kExcludedInequality, sector, {estimate, b.source[i]},
                     "|u_" + std::to_string(i + 1) + "| = " + std::to_string(dt.relations[i]) +
                         " < " + std::to_string(b.value[i]));
  return std::nullopt;
}

std::optional<FilterVerdict> check_fd(const DegreeType& dt, int bound, Sector sector,
                                      std::vector<std::string_view> cites) {
  if (bound <= 20) return std::nullopt;
  cites.push_back(cite::kFdBound);
  return verdict(FilterOutcome::kExcludedFdExceeds, sector, std::move(cites),
                 "hypotheses force fd >= " + std::to_string(bound) + " (type has fd " +
                     std::to_string(formal_dimension(dt)) + ")");
}

int count_relations(const DegreeType& dt, auto pred) {
  return static_cast<int>(std::count_if(dt.relations.begin(), dt.relations.end(), pred));
}

FilterVerdict sector8(const DegreeType& dt) {
  const Sector s = Sector::kAtMost8;
  const auto& a = dt.generators;
  std::size_t k = dt.size();
  // A_{k-1} = A_k = 4 here; delta: H^4 -> H^2 has rank m >= 2, so there are
  // at least two degree-2 generators.
  int g2 = static_cast<int>(std::count(a.begin(), a.end(), 2));
  int g4 = static_cast<int>(std::count(a.begin(), a.end(), 4));
  if (g2 < 2)
    return verdict(FilterOutcome::kExcludedInequality, s, {cite::kKMinusOne, cite::kLandInZero},
                   "delta: H^4 -> H^2 needs rank >= 2 but only " + std::to_string(g2) +
                       " degree-2 generator(s)");
  int bound = 2 * static_cast<int>(k) + 2 * g4 + 6;
  if (auto v = check_fd(dt, bound, s,
                        {cite::kSector8, cite::kDegreeInequality, cite::kLargeRelations1}))
    return *v;

  Bounds b = standard_bounds(dt);
  b.raise(k - 1, 12, cite::kLargeRelations1);
  if (auto v = check_bounds(dt, b, s, cite::kSector8)) return *v;

  // r_12 + r_16 + ... >= max(1, m - r_4) with m >= 2.
  int large = count_relations(dt, [](int d) { return d >= 12 && d % 4 == 0; });
  int r4 = count_relations(dt, [](int d) { return d == 4; });
  int need = std::max(1, 2 - r4);
  if (large < need)
    return verdict(FilterOutcome::kExcludedInequality, s, {cite::kSector8, cite::kLargeRelations1},
                   "r_12 + r_16 + ... = " + std::to_string(large) + " < " + std::to_string(need));
  return verdict(FilterOutcome::kExceptionalCandidate, s,
                 {cite::kSector8, cite::kLargeRelations1, cite::kDegreeInequality,
                  cite::kPureModel, cite::kSac},
                 "not excluded by the degree bounds");
}

FilterVerdict sector10(const DegreeType& dt) {
  const Sector s = Sector::kTen;
  const auto& a = dt.generators;
  const auto& r = dt.relations;
  std::size_t k = dt.size();
  // A_{k-1} = 4, A_k = 6 and delta(x_{k-1}) is a nonzero degree-2 class.
  if (a[0] != 2)
    return verdict(FilterOutcome::kExcludedInequality, s, {cite::kKMinusOne, cite::kLandInZero},
                   "no degree-2 generator to receive delta(x_{k-1})");
  Bounds b = standard_bounds(dt);

  if (r[k - 1] > 12) {
    // SAC(6) gives |u_{k-1}| >= 12 or |u_k| >= 18, hence the top two relations
    // contribute at least 16 to fd.
    int bound = 16;
    std::vector<std::string_view> cites{cite::kSector10, cite::kSac, cite::kDegreeInequality};
    for (std::size_t i = 0; i + 2 < k; ++i) {
      int gap = b.value[i] - a[i];
      if (k == 3 && i == 0) {
        // delta(x_2) = lambda x_1 forces |u_1| >= |x_1| + |x_3|.
        gap = std::max(gap, a[2]);
        cites.push_back(cite::kDegreeInequality2);
      }
      bound += gap;
    }
    if (auto v = check_fd(dt, bound, s, cites)) return *v;
    if (auto v = check_bounds(dt, b, s, cite::kSector10)) return *v;
    return verdict(FilterOutcome::kExceptionalCandidate, s, cites, "not excluded by the degree bounds");
  }

  // |u_k| = 12 < 3|x_k|: delta^2(x_k) = 0, so delta(x_k) is a polynomial in
  // x_2..x_{k-2}.
  if (k == 3)
    return verdict(FilterOutcome::kExcludedInequality, s, {cite::kTopToBottom, cite::kKMinusOne},
                   "three generators: delta(x_3) = 0 after change of basis");
  if (k == 4)
    return verdict(FilterOutcome::kExcludedInequality, s,
                   {cite::kSector10, cite::kDegreeInequality, cite::kKMinusOne},
                   "four generators: a relation x_3^2 + r splits off x_1, and x_3^3 + r needs "
                   "|u_2| = 4 < |x_1| + |x_3|");

  b.raise(k - 2, 10, cite::kLargeRelations2);
  b.raise(k - 1, 12, cite::kPureModel);
  if (auto v = check_fd(dt, fd_lower_bound(dt, b), s,
                        {cite::kSector10, cite::kDegreeInequality, cite::kLargeRelations2}))
    return *v;
  if (auto v = check_bounds(dt, b, s, cite::kSector10)) return *v;

  // r_10 + r_12 + ... >= (k - g2 - g4) + max(1, m - r_4) with m >= 1.
  int high_gens = static_cast<int>(std::count_if(a.begin(), a.end(), [](int d) { return d > 4; }));
  int r4 = count_relations(dt, [](int d) { return d == 4; });
  int need = high_gens + std::max(1, 1 - r4);
  int large = count_relations(dt, [](int d) { return d >= 10; });
  if (large < need)
    return verdict(FilterOutcome::kExcludedInequality, s, {cite::kSector10, cite::kLargeRelations2},
                   "r_10 + r_12 + ... = " + std::to_string(large) + " < " + std::to_string(need));
  return verdict(FilterOutcome::kExceptionalCandidate, s,
                 {cite::kSector10, cite::kTopToBottom, cite::kLargeRelations2,
                  cite::kDegreeInequality, cite::kPureModel},
                 "not excluded by the degree bounds");
}

FilterVerdict sector12(const DegreeType& dt) {
  const Sector s = Sector::kAtLeast12;
  const auto& a = dt.generators;
  std::size_t k = dt.size();
  Bounds b = standard_bounds(dt);
  if (k == 3) {
    // delta(x_2), delta(x_3) nonzero and independent: strictly increasing degrees.
    if (a[0] == a[1] || a[1] == a[2])
      return verdict(FilterOutcome::kExcludedInequality, s, {cite::kKMinusOne, cite::kLandInZero},
                     "three generators need |x_1| < |x_2| < |x_3|");
    int bound = a[2] + std::max(a[0] + a[2] - a[1], a[1]) + a[2];
    if (auto v = check_fd(dt, bound, s,
                          {cite::kSector12, cite::kDegreeInequality2, cite::kDegreeInequality}))
      return *v;
  } else {
    if (auto v = check_fd(dt, fd_lower_bound(dt, b), s,
                          {cite::kSector12, cite::kDegreeInequality, cite::kPureModel}))
      return *v;
  }
  if (auto v = check_bounds(dt, b, s, cite::kSector12)) return *v;
  return verdict(FilterOutcome::kExceptionalCandidate, s,
                 {cite::kSector12, cite::kDegreeInequality, cite::kPureModel},
                 "not excluded by the degree bounds");
}

}  // namespace

FilterVerdict filter_pipeline(const DegreeType& dt) {
  dt.validate();
  if (!sac_check(dt).pass)
    throw Error(ErrorKind::kPrecondition, "filter_pipeline requires a SAC-valid degree type");
  if (formal_dimension(dt) > 20)
    throw Error(ErrorKind::kPrecondition, "filter_pipeline covers formal dimension <= 20");

  std::size_t k = dt.size();
  if (k == 1)
    return verdict(FilterOutcome::kOutOfSector, Sector::kNone, {cite::kLandInZero},
                   "single generator: a negative derivation lands in H^0");
  Sector sector = sector_of(dt);
  if (k == 2)
    return verdict(FilterOutcome::kExcludedInequality, sector,
                   {cite::kLandInZero, cite::kKMinusOne}, "at most two generators");
  if (dt.generators[k - 2] == 2)
    return verdict(FilterOutcome::kExcludedInequality, sector,
                   {cite::kLandInZero, cite::kKMinusOne},
                   "at most one generator of degree > 2");
  switch (sector) {
    case Sector::kAtMost8: return sector8(dt);
    case Sector::kTen: return sector10(dt);
    default: return sector12(dt);
  }
}

FilterVerdict classify(const DegreeType& dt) {
  dt.validate();
  SacReport sac = sac_check(dt);
  if (!sac.pass)
    return verdict(FilterOutcome::kExcludedSac, sector_of(dt), {cite::kSac},
                   "fails SAC on " + std::to_string(sac.failing_subsets.size()) + " subsequence(s)");
  if (formal_dimension(dt) > 20)
    return verdict(FilterOutcome::kExcludedFdExceeds, sector_of(dt), {cite::kFdBound},
                   "fd = " + std::to_string(formal_dimension(dt)) + " > 20");
  return filter_pipeline(dt);
}

// ---------------------------------------------------------------------------
// Sampling

SampledPresentation sample_presentation(const DegreeType& dt, std::uint64_t seed,
                                        int coeff_bound, int max_attempts) {
  dt.validate();
  if (coeff_bound < 1) throw Error(ErrorKind::kPrecondition, "coeff_bound must be >= 1");
  if (!sac_check(dt).pass)
    throw Error(ErrorKind::kPrecondition, "degree type fails SAC; no elliptic sample exists");

  ContextPtr ctx = GradedContext::make(dt.generators);
  std::vector<std::vector<Monomial>> support;
  for (int b : dt.relations) {
    std::vector<Monomial> ms;
    for (Monomial& m : monomial_basis(*ctx, b))
      if (m.total_degree() >= 2) ms.push_back(std::move(m));
    if (ms.empty())
      throw Error(ErrorKind::kNoEllipticSample,
                  "no decomposable monomials in degree " + std::to_string(b));
    support.push_back(std::move(ms));
  }

  std::mt19937_64 rng(seed);
  const std::uint64_t width = 2 * static_cast<std::uint64_t>(coeff_bound) + 1;
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    std::vector<Polynomial> rels;
    bool degenerate = false;
    for (const auto& ms : support) {
      std::vector<Term> terms;
      for (const Monomial& m : ms) {
        long c = static_cast<long>(rng() % width) - coeff_bound;
        if (c != 0) terms.push_back({m, Rational(c)});
      }
      if (terms.empty()) degenerate = true;
      rels.push_back(Polynomial::from_terms(ctx, std::move(terms)));
    }
    if (degenerate) continue;
    auto q = std::make_shared<const Quotient>(Presentation(ctx, std::move(rels)));
    if (q->elliptic()) return {q->presentation(), attempt, q};
  }
  throw Error(ErrorKind::kNoEllipticSample,
              "no elliptic sample found after " + std::to_string(max_attempts) + " attempts");
}

}  // namespace elliptica
