#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "elliptica/degreetypes.hpp"
#include "elliptica/derivations.hpp"

namespace elliptica {

// Exceptional candidates of the fd <= 20 case analysis, by sector.
struct ExceptionalLists {
  std::vector<DegreeType> sector8;
  std::vector<DegreeType> sector10;
  std::vector<DegreeType> sector12;
};

ExceptionalLists exceptional_lists(unsigned jobs = 1);

// The six types as fixed literals, same grouping.
ExceptionalLists expected_exceptional_lists();

struct LedgerEntry {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ExampleLedger {
  std::vector<LedgerEntry> entries;
  bool all_pass() const;
};

ExampleLedger worked_examples();

struct SweepFailure {
  std::uint64_t seed = 0;
  int degree = 0;
  std::vector<std::string> witness;  // images of x_1..x_k
};

struct TypeResult {
  DegreeType type;
  int samples = 0;  // presentations actually checked
  std::vector<SweepFailure> failures;
  std::vector<std::string> sampling_failures;
  // Solver invariant checks (one per derivation space) and how many failed.
  int invariant_checks = 0;
  std::vector<std::string> invariant_failures;

  bool all_pass() const { return failures.empty(); }
};

struct SweepOptions {
  unsigned jobs = 1;
  int coeff_bound = 5;
  bool check_invariants = false;
};

struct SweepReport {
  std::string header;
  int fd_max = 0;
  int samples_per_type = 0;
  std::uint64_t seed = 0;
  std::vector<TypeResult> results;  // canonical degree-type order

  bool all_pass() const;
  bool invariants_hold() const;
  int total_samples() const;
  int sampling_failure_count() const;
};

// Seed of sample `index` of `dt` in a sweep seeded with `seed`.
std::uint64_t sample_seed(std::uint64_t seed, const DegreeType& dt, int index);

// Every enumerated type with 2 <= fd <= fd_max.
SweepReport sweep_halperin(int fd_max, int samples_per_type, std::uint64_t seed,
                           const SweepOptions& options = {});

// Same over an explicit list; fd_max is reported as the largest fd present.
SweepReport sweep_types(const std::vector<DegreeType>& types, int samples_per_type,
                        std::uint64_t seed, const SweepOptions& options = {});

}  // namespace elliptica
