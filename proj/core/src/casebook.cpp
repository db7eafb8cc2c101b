#include "elliptica/casebook.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "elliptica/error.hpp"
#include "elliptica/text.hpp"

namespace elliptica {

ExceptionalLists exceptional_lists(unsigned jobs) {
  ExceptionalLists out;
  for (int fd = 2; fd <= 20; fd += 2) {
    for (const DegreeType& dt : enumerate_degree_types(fd, jobs)) {
      FilterVerdict v = filter_pipeline(dt);
      if (v.outcome != FilterOutcome::kExceptionalCandidate) continue;
      switch (v.sector) {
        case Sector::kAtMost8: out.sector8.push_back(dt); break;
        case Sector::kTen: out.sector10.push_back(dt); break;
        case Sector::kAtLeast12: out.sector12.push_back(dt); break;
        case Sector::kNone: throw Error(ErrorKind::kInternal, "candidate without a sector");
      }
    }
  }
  for (auto* v : {&out.sector8, &out.sector10, &out.sector12}) std::sort(v->begin(), v->end());
  return out;
}

ExceptionalLists expected_exceptional_lists() {
  ExceptionalLists out;
  out.sector8 = {make_degree_type({2, 2, 4, 4}, {4, 6, 8, 12}),
                 make_degree_type({2, 2, 4, 4}, {4, 8, 8, 12}),
                 make_degree_type({2, 2, 2, 4, 4}, {4, 4, 6, 8, 12})};
  out.sector10 = {make_degree_type({2, 2, 2, 4, 6}, {4, 4, 6, 10, 12})};
  out.sector12 = {make_degree_type({2, 4, 6, 6}, {6, 8, 12, 12}),
                  make_degree_type({2, 2, 6, 6}, {4, 8, 12, 12})};
  for (auto* v : {&out.sector8, &out.sector10, &out.sector12}) std::sort(v->begin(), v->end());
  return out;
}

// ---------------------------------------------------------------------------

bool ExampleLedger::all_pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.pass; });
}

namespace {

std::string join_dims(const std::vector<std::int64_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

bool congruent(const Quotient& q, const Derivation& d, const std::vector<Polynomial>& target) {
  for (std::size_t i = 0; i < target.size(); ++i) {
    Polynomial diff = d.images[i] - target[i];
    if (diff.is_zero()) continue;
    if (homogeneous_degree(diff).homogeneous() && !is_zero(reduce_mod_ideal(q, diff))) return false;
  }
  return true;
}

template <class F>
LedgerEntry run_entry(std::string name, F&& body) {
  LedgerEntry e{std::move(name), false, ""};
  try {
    auto [pass, detail] = body();
    e.pass = pass;
    e.detail = std::move(detail);
  } catch (const std::exception& ex) {
    e.detail = std::string("error: ") + ex.what();
  }
  return e;
}

}  // namespace

ExampleLedger worked_examples() {
  ExampleLedger ledger;
  auto ctx = GradedContext::make({2, 2});
  Polynomial x1 = Polynomial::variable(ctx, 0);
  Polynomial x2 = Polynomial::variable(ctx, 1);
  Presentation ex1(ctx, {x1 * x1 - x2 * x2, x1 * x2});
  Presentation ex1_bad(ctx, {x1 * x1, x1 * x2});

  auto ctx24 = GradedContext::make({2, 4});
  Polynomial y1 = Polynomial::variable(ctx24, 0);
  Polynomial y2 = Polynomial::variable(ctx24, 1);
  std::vector<Polynomial> ex2_rels{y1 * y1 - y2, pow(y2, 3)};

  ledger.entries.push_back(run_entry("elliptic: (x1^2 - x2^2, x1*x2)", [&] {
    auto r = is_positively_elliptic(ex1);
    return std::pair{r.elliptic && r.formal_dimension == 4,
                     "elliptic=" + std::string(r.elliptic ? "true" : "false") +
                         ", fd=" + std::to_string(r.formal_dimension)};
  }));
  ledger.entries.push_back(run_entry("not elliptic: (x1^2, x1*x2)", [&] {
    auto r = is_positively_elliptic(ex1_bad);
    return std::pair{!r.elliptic, "elliptic=" + std::string(r.elliptic ? "true" : "false")};
  }));
  ledger.entries.push_back(run_entry("SAC fails (2,4;4,10) on (4)", [&] {
    auto r = sac_check(make_degree_type({2, 4}, {4, 10}));
    bool ok = !r.pass && r.failing_subsets.size() == 1 &&
              r.failing_subsets[0].subsequence == std::vector<int>{4};
    return std::pair{ok, std::to_string(r.failing_subsets.size()) + " failing subsequence(s)"};
  }));
  ledger.entries.push_back(run_entry("SAC fails (2,2,4,4;4,6,8,10) on (4,4)", [&] {
    auto r = sac_check(make_degree_type({2, 2, 4, 4}, {4, 6, 8, 10}));
    bool hit = std::any_of(r.failing_subsets.begin(), r.failing_subsets.end(), [](const auto& f) {
      return f.subsequence == std::vector<int>{4, 4};
    });
    return std::pair{!r.pass && hit, std::to_string(r.failing_subsets.size()) + " failing subsequence(s)"};
  }));
  ledger.entries.push_back(run_entry("pure model: (x1^2 - x2, x2^3) -> (x^6)", [&] {
    Presentation before(ctx24, ex2_rels);
    Presentation after = reduce_to_pure_model(ctx24, ex2_rels);
    auto hb = is_positively_elliptic(before);
    auto ha = is_positively_elliptic(after);
    auto dims_a = hilbert_function(after, ha.formal_dimension).dims;
    auto dims_b = hilbert_function(before, hb.formal_dimension).dims;
    std::vector<std::int64_t> expect(11, 0);
    for (int i = 0; i <= 10; i += 2) expect[i] = 1;
    bool ok = after.size() == 1 && hb.formal_dimension == 10 && ha.formal_dimension == 10 &&
              dims_a == expect && dims_b == expect;
    return std::pair{ok, "generators " + std::to_string(after.size()) + ", hilbert " +
                             join_dims(dims_a)};
  }));
  ledger.entries.push_back(run_entry("degree 2 derivation on (x1^2 - x2^2, x1*x2)", [&] {
    Quotient q(ex1);
    auto space = derivation_space(q, 2);
    std::vector<Polynomial> target{x1 * x1, Polynomial(ctx)};
    bool found = std::any_of(space.induced_basis.begin(), space.induced_basis.end(),
                             [&](const Derivation& d) { return congruent(q, d, target); });
    return std::pair{space.induced_dim >= 1 && found,
                     "induced_dim=" + std::to_string(space.induced_dim) +
                         (found ? ", contains (x1^2, 0)" : ", (x1^2, 0) not a basis element")};
  }));
  auto halperin_entry = [&](std::string name, const Presentation& p) {
    ledger.entries.push_back(run_entry(std::move(name), [&] {
      auto r = halperin_check(p);
      return std::pair{r.pass, std::string(r.pass ? "PASS" : "FAIL")};
    }));
  };
  halperin_entry("halperin: (x1^2 - x2^2, x1*x2)", ex1);
  halperin_entry("halperin: (x1^2 - x2, x2^3)", Presentation(ctx24, ex2_rels));
  halperin_entry("halperin: pure model (x^6)", reduce_to_pure_model(ctx24, ex2_rels));
  return ledger;
}

// ---------------------------------------------------------------------------

bool SweepReport::all_pass() const {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.all_pass(); });
}

bool SweepReport::invariants_hold() const {
  return std::all_of(results.begin(), results.end(),
                     [](const auto& r) { return r.invariant_failures.empty(); });
}

int SweepReport::total_samples() const {
  int n = 0;
  for (const auto& r : results) n += r.samples;
  return n;
}

int SweepReport::sampling_failure_count() const {
  int n = 0;
  for (const auto& r : results) n += static_cast<int>(r.sampling_failures.size());
  return n;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

struct SampleOutcome {
  bool sampled = false;
  std::string sampling_error;
  std::optional<SweepFailure> failure;
  int invariant_checks = 0;
  std::vector<std::string> invariant_failures;
};

SampleOutcome run_sample(const DegreeType& dt, std::uint64_t s, const SweepOptions& opt) {
  SampleOutcome out;
  std::shared_ptr<const Quotient> q;
  try {
    q = sample_presentation(dt, s, opt.coeff_bound).quotient;
  } catch (const Error& e) {
    out.sampling_error = "seed " + std::to_string(s) + ": " + e.what();
    return out;
  }
  out.sampled = true;
  HalperinReport r = halperin_check(*q);
  if (!r.pass) {
    SweepFailure f;
    f.seed = s;
    f.degree = r.witness ? r.witness->degree : 0;
    if (r.witness)
      for (const Polynomial& img : r.witness->images) f.witness.push_back(format_polynomial(img));
    out.failure = std::move(f);
  }
  if (!r.land_in_zero_holds)
    out.invariant_failures.push_back("seed " + std::to_string(s) + ": land-in-zero report");
  if (opt.check_invariants) {
    for (const auto& entry : r.degrees) {
      DerivationSpace space = derivation_space(*q, entry.degree);
      SolverInvariants inv = check_solver_invariants(*q, space, s ^ static_cast<std::uint64_t>(-entry.degree));
      ++out.invariant_checks;
      if (!inv.all()) {
        std::string what;
        if (!inv.ideal_preserved) what += " ideal";
        if (!inv.leibniz) what += " leibniz";
        if (!inv.land_in_zero) what += " land-in-zero";
        if (!inv.k_minus_one) what += " k-1";
        out.invariant_failures.push_back("seed " + std::to_string(s) + ", degree " +
                                         std::to_string(entry.degree) + ":" + what);
      }
    }
  }
  return out;
}

}  // namespace

std::uint64_t sample_seed(std::uint64_t seed, const DegreeType& dt, int index) {
  return splitmix64(splitmix64(seed) ^ fnv1a(degree_type_literal(dt)) ^
                    splitmix64(static_cast<std::uint64_t>(index) + 1));
}

SweepReport sweep_types(const std::vector<DegreeType>& types_in, int samples_per_type,
                        std::uint64_t seed, const SweepOptions& options) {
  if (samples_per_type < 1) throw Error(ErrorKind::kPrecondition, "samples_per_type must be >= 1");
  std::vector<DegreeType> types = types_in;
  std::sort(types.begin(), types.end());
  types.erase(std::unique(types.begin(), types.end()), types.end());

  SweepReport report;
  report.header =
      "Randomized Halperin sweep. Each degree type is probed by seeded random elliptic "
      "presentations; passing samples are evidence for those presentations only and do not "
      "verify the statement for every algebra of the type.";
  report.samples_per_type = samples_per_type;
  report.seed = seed;
  for (const auto& dt : types) report.fd_max = std::max(report.fd_max, formal_dimension(dt));

  std::size_t n = types.size() * static_cast<std::size_t>(samples_per_type);
  std::vector<SampleOutcome> outcomes(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t; (t = next.fetch_add(1)) < n;) {
      const DegreeType& dt = types[t / samples_per_type];
      int idx = static_cast<int>(t % samples_per_type);
      outcomes[t] = run_sample(dt, sample_seed(seed, dt, idx), options);
    }
  };
  unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  for (std::size_t ti = 0; ti < types.size(); ++ti) {
    TypeResult r;
    r.type = types[ti];
    for (int i = 0; i < samples_per_type; ++i) {
      SampleOutcome& o = outcomes[ti * samples_per_type + i];
      if (o.sampled) ++r.samples;
      else r.sampling_failures.push_back(std::move(o.sampling_error));
      if (o.failure) r.failures.push_back(std::move(*o.failure));
      r.invariant_checks += o.invariant_checks;
      for (auto& f : o.invariant_failures) r.invariant_failures.push_back(std::move(f));
    }
    report.results.push_back(std::move(r));
  }
  return report;
}

SweepReport sweep_halperin(int fd_max, int samples_per_type, std::uint64_t seed,
                           const SweepOptions& options) {
  if (fd_max > 20 || fd_max < 2) throw Error(ErrorKind::kPrecondition, "fd_max must be in [2, 20]");
  std::vector<DegreeType> types;
  for (int fd = 2; fd <= fd_max; fd += 2) {
    auto part = enumerate_degree_types(fd, options.jobs);
    types.insert(types.end(), part.begin(), part.end());
  }
  SweepReport r = sweep_types(types, samples_per_type, seed, options);
  r.fd_max = fd_max;
  return r;
}

}  // namespace elliptica
