#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "elliptica/quotient.hpp"

namespace elliptica {

// B = sum lambda_m S_m with integers lambda_m >= 0 and sum lambda_m >= 2.
bool representable(int b, const std::vector<int>& s);

struct SacReport {
  struct Failure {
    std::vector<int> subsequence;  // generator degrees A_{i_1..i_l}
    int representable_count = 0;   // relation degrees reachable from them
  };
  bool pass = true;
  std::vector<Failure> failing_subsets;  // distinct by value, canonical order
};

// Strong algebraic condition: every subsequence of l generator degrees must
// individually represent at least l relation degrees.
SacReport sac_check(const DegreeType& dt);

// All SAC-valid degree types with B_i >= 2 A_i and formal dimension fd, in
// canonical order. Precondition: fd even, 2 <= fd <= 30.
std::vector<DegreeType> enumerate_degree_types(int fd, unsigned jobs = 1);

enum class FilterOutcome {
  kExcludedSac,
  kExcludedFdExceeds,
  kExcludedInequality,
  kExceptionalCandidate,
  kOutOfSector,
};

std::string_view to_string(FilterOutcome outcome);

// Sector: A_{k-1} + A_k classes handled by separate case analyses.
enum class Sector { kNone, kAtMost8, kTen, kAtLeast12 };

std::string_view to_string(Sector sector);
Sector sector_of(const DegreeType& dt);

namespace cite {
inline constexpr std::string_view kLandInZero = "Land in Zero Lemma";
inline constexpr std::string_view kKMinusOne = "k-1 Lemma";
inline constexpr std::string_view kPureModel = "Pure model bound |u_i| >= 2|x_i|";
inline constexpr std::string_view kDegreeInequality = "Degree Inequality (1)";
inline constexpr std::string_view kDegreeInequality2 = "Degree Inequality (2)";
inline constexpr std::string_view kLargeRelations1 = "Large Relations Lemma (1)";
inline constexpr std::string_view kLargeRelations2 = "Large Relations Lemma (2)";
inline constexpr std::string_view kTopToBottom = "Top-to-Bottom Lemma";
inline constexpr std::string_view kSac = "SAC";
inline constexpr std::string_view kSector8 = "sector<=8 estimate";
inline constexpr std::string_view kSector10 = "sector=10 estimate";
inline constexpr std::string_view kSector12 = "sector>=12 estimate";
inline constexpr std::string_view kFdBound = "fd <= 20";
}  // namespace cite

struct FilterVerdict {
  FilterOutcome outcome = FilterOutcome::kOutOfSector;
  Sector sector = Sector::kNone;
  std::vector<std::string> citations;
  std::string detail;  // the failing bound, human readable
};

// Degree-type bookkeeping of the case analysis under its standing hypotheses
// (H* does not split and has a nonzero negative-degree derivation). Types it
// cannot exclude are exceptional candidates. Precondition: SAC passes and
// fd <= 20.
FilterVerdict filter_pipeline(const DegreeType& dt);

// Total version of filter_pipeline: SAC failures and fd > 20 are reported as
// exclusions instead of precondition errors.
FilterVerdict classify(const DegreeType& dt);

struct SampledPresentation {
  Presentation presentation;
  int attempts = 0;
  // The quotient used for the ellipticity decision, with its slice cache.
  std::shared_ptr<const Quotient> quotient;
};

// Random elliptic presentation of degree type dt: every relation a random
// integer combination (coefficients in [-coeff_bound, coeff_bound]) of the
// Q^{>=2} monomials of its degree. Deterministic in (dt, seed, coeff_bound).
SampledPresentation sample_presentation(const DegreeType& dt, std::uint64_t seed,
                                        int coeff_bound = 5, int max_attempts = 200);

}  // namespace elliptica
