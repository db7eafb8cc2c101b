#include "elliptica/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "elliptica/casebook.hpp"
#include "elliptica/error.hpp"
#include "elliptica/serialize.hpp"
#include "elliptica/text.hpp"

namespace elliptica::cli {

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

unsigned default_jobs() {
  if (const char* env = std::getenv("ELLIPTICA_JOBS")) {
    try {
      int n = std::stoi(env);
      if (n >= 1) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

struct Options {
  bool json = false;
  std::string out_path;
  std::optional<std::uint64_t> seed;
  int samples = 25;
  int fd = 12;
  int degree = 0;
  std::optional<int> max_degree;
  int coeff_bound = 5;
  unsigned jobs = default_jobs();
  std::string target;
  bool invariants = false;
  bool exceptional = false;
  bool lists = false;
};

std::string type_text(const DegreeType& dt) { return format_degree_type(dt); }

std::string images_text(const Derivation& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.images.size(); ++i)
    s += (i ? ", " : "") + format_polynomial(d.images[i]);
  return s + ")";
}

struct Output {
  int code = kOk;
  std::string text;
};

Output emit_json(const json& j, int code) { return {code, j.dump(2) + "\n"}; }

std::string first_nonzero_in_window(const EllipticityReport& r) {
  for (int n = std::max(r.formal_dimension + 1, 0); n <= r.window_top; ++n)
    if (n < static_cast<int>(r.hilbert.dims.size()) && r.hilbert.dims[n] != 0)
      return std::to_string(n);
  return "?";
}

Output cmd_check(const Options& o) {
  Presentation p = parse_presentation_file(o.target);
  Quotient q(p);
  EllipticityReport r = is_positively_elliptic(q);
  int code = r.elliptic ? kOk : kNegative;
  if (o.json) {
    json j{{"elliptic", r.elliptic},
           {"fd", r.formal_dimension},
           {"A", q.degree_type().generators},
           {"B", q.degree_type().relations},
           {"window_top", r.window_top},
           {"hilbert", r.hilbert.dims}};
    if (r.matches_expected) j["matches_expected"] = *r.matches_expected;
    return emit_json(j, code);
  }
  if (r.elliptic) return {code, "positively elliptic, fd=" + std::to_string(r.formal_dimension) + "\n"};
  return {code, "not positively elliptic: H^" + first_nonzero_in_window(r) + " != 0 above fd=" +
                    std::to_string(r.formal_dimension) + "\n"};
}

Output cmd_hilbert(const Options& o) {
  Presentation p = parse_presentation_file(o.target);
  Quotient q(p);
  int bound;
  if (o.max_degree) {
    bound = *o.max_degree;
  } else {
    EllipticityReport r = is_positively_elliptic(q);
    bound = r.elliptic ? r.formal_dimension : r.window_top;
  }
  if (bound < 0) throw Error(ErrorKind::kOutOfRange, "degree bound must be >= 0");
  HilbertData h = hilbert_function(q, bound);
  if (o.json) return emit_json({{"bound", h.bound}, {"dims", h.dims}, {"total", h.total()}}, kOk);
  std::string s;
  for (int n = 0; n <= h.bound; n += 2) s += "H^" + std::to_string(n) + " = " + std::to_string(h.dims[n]) + "\n";
  s += "total = " + std::to_string(h.total()) + "\n";
  return {kOk, s};
}

Output cmd_fd(const Options& o) {
  int fd;
  if (std::filesystem::is_regular_file(o.target)) {
    fd = formal_dimension(degree_type_of(parse_presentation_file(o.target)));
  } else {
    fd = formal_dimension(parse_degree_type(o.target));
  }
  if (o.json) return emit_json({{"fd", fd}}, kOk);
  return {kOk, std::to_string(fd) + "\n"};
}

std::optional<Output> require_elliptic(const Quotient& q) {
  if (q.elliptic()) return std::nullopt;
  return Output{kNegative, "not positively elliptic\n"};
}

Output cmd_derivations(const Options& o) {
  Quotient q(parse_presentation_file(o.target));
  if (auto bad = require_elliptic(q)) return *bad;
  DerivationSpace s = derivation_space(q, o.degree);
  if (o.json) return emit_json(to_json(s), kOk);
  std::string out = "degree " + std::to_string(s.degree) + ": lift_dim=" +
                    std::to_string(s.lift_basis.size()) + " trivial_dim=" +
                    std::to_string(s.trivial_dim) + " induced_dim=" +
                    std::to_string(s.induced_dim) + "\n";
  for (const Derivation& d : s.induced_basis) out += "  " + images_text(d) + "\n";
  return {kOk, out};
}

Output cmd_halperin(const Options& o) {
  Quotient q(parse_presentation_file(o.target));
  if (auto bad = require_elliptic(q)) return *bad;
  HalperinReport r = halperin_check(q);
  int code = r.pass ? kOk : kNegative;
  if (o.json) return emit_json(to_json(r), code);
  std::string out;
  for (const auto& e : r.degrees)
    out += "degree " + std::to_string(e.degree) + ": lift_dim=" + std::to_string(e.lift_dim) +
           " trivial_dim=" + std::to_string(e.trivial_dim) +
           " induced_dim=" + std::to_string(e.induced_dim) + "\n";
  out += std::string("verdict: ") + (r.pass ? "PASS" : "FAIL") + "\n";
  if (r.witness) out += "witness: " + images_text(*r.witness) + "\n";
  return {code, out};
}

std::string seq_text(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

Output cmd_sac(const Options& o) {
  DegreeType dt = parse_degree_type(o.target);
  SacReport r = sac_check(dt);
  int code = r.pass ? kOk : kNegative;
  if (o.json) return emit_json(to_json(r), code);
  std::string out = type_text(dt) + ": SAC " + (r.pass ? "pass" : "fail") + "\n";
  for (const auto& f : r.failing_subsets)
    out += "failing subset " + seq_text(f.subsequence) + ": " +
           std::to_string(f.representable_count) + " representable relation degree(s)\n";
  return {code, out};
}

Output cmd_enumerate(const Options& o) {
  std::vector<DegreeType> types = enumerate_degree_types(o.fd, o.jobs);
  if (o.json) return emit_json(catalog(types), kOk);
  std::string out;
  for (const auto& dt : types)
    out += type_text(dt) + " " + std::string(to_string(classify(dt).outcome)) + "\n";
  out += std::to_string(types.size()) + " degree type(s) with fd=" + std::to_string(o.fd) + "\n";
  return {kOk, out};
}

Output cmd_filters(const Options& o) {
  DegreeType dt = parse_degree_type(o.target);
  FilterVerdict v = classify(dt);
  int code = v.outcome == FilterOutcome::kExcludedSac ? kNegative : kOk;
  if (o.json) {
    json j = catalog_entry(dt);
    j["sector"] = std::string(to_string(v.sector));
    j["detail"] = v.detail;
    return emit_json(j, code);
  }
  std::string out = type_text(dt) + ": " + std::string(to_string(v.outcome)) + "\n";
  out += "sector: " + std::string(to_string(v.sector)) + "\n";
  for (const auto& c : v.citations) out += "cites: " + c + "\n";
  out += "detail: " + v.detail + "\n";
  return {code, out};
}

Output cmd_sweep(const Options& o) {
  SweepOptions opt;
  opt.jobs = o.jobs;
  opt.coeff_bound = o.coeff_bound;
  opt.check_invariants = o.invariants;
  SweepReport r;
  if (o.exceptional) {
    ExceptionalLists l = expected_exceptional_lists();
    std::vector<DegreeType> types;
    for (const auto* v : {&l.sector8, &l.sector10, &l.sector12}) types.insert(types.end(), v->begin(), v->end());
    r = sweep_types(types, o.samples, *o.seed, opt);
  } else {
    r = sweep_halperin(o.fd, o.samples, *o.seed, opt);
  }
  bool ok = r.all_pass() && r.invariants_hold();
  int code = ok ? kOk : kNegative;
  if (o.json) return emit_json(to_json(r), code);
  std::string out = r.header + "\n";
  int failures = 0;
  for (const auto& t : r.results) {
    failures += static_cast<int>(t.failures.size());
    for (const auto& f : t.failures) {
      out += "FAIL " + type_text(t.type) + " seed " + std::to_string(f.seed) + " degree " +
             std::to_string(f.degree) + ":";
      for (const auto& w : f.witness) out += " " + w + ";";
      out += "\n";
    }
    for (const auto& s : t.sampling_failures) out += "sampling " + type_text(t.type) + " " + s + "\n";
    for (const auto& s : t.invariant_failures) out += "invariant " + type_text(t.type) + " " + s + "\n";
  }
  out += "types=" + std::to_string(r.results.size()) + " samples=" + std::to_string(r.total_samples()) +
         " failures=" + std::to_string(failures) +
         " sampling_failures=" + std::to_string(r.sampling_failure_count()) + "\n";
  out += std::string("verdict: ") + (ok ? "PASS" : "FAIL") + "\n";
  return {code, out};
}

Output cmd_examples(const Options& o) {
  ExampleLedger ledger = worked_examples();
  std::optional<ExceptionalLists> lists;
  bool ok = ledger.all_pass();
  if (o.lists) {
    lists = exceptional_lists(o.jobs);
    ExceptionalLists want = expected_exceptional_lists();
    ok = ok && lists->sector8 == want.sector8 && lists->sector10 == want.sector10 &&
         lists->sector12 == want.sector12;
  }
  int code = ok ? kOk : kNegative;
  if (o.json) {
    json j{{"ledger", to_json(ledger)}};
    if (lists) j["exceptional_lists"] = to_json(*lists);
    return emit_json(j, code);
  }
  std::string out;
  for (const auto& e : ledger.entries)
    out += std::string(e.pass ? "PASS " : "FAIL ") + e.name + " [" + e.detail + "]\n";
  if (lists) {
    auto show = [&](const char* name, const std::vector<DegreeType>& v) {
      out += std::string("sector ") + name + ":";
      for (const auto& dt : v) out += " " + type_text(dt);
      out += "\n";
    };
    show("<=8", lists->sector8);
    show("=10", lists->sector10);
    show(">=12", lists->sector12);
  }
  return {code, out};
}

}  // namespace

Result run(const std::vector<std::string>& args) {
  Options o;
  CLI::App app{"Exact computations on positively elliptic graded algebras", "elliptica"};
  app.require_subcommand(1, 1);

  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "Emit JSON"); };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", o.out_path, "Write output to a file"); };

  auto* check = app.add_subcommand("check", "Decide positive ellipticity of a presentation file");
  check->add_option("file", o.target)->required();
  add_json(check);
  add_out(check);

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of a presentation file");
  hilbert->add_option("file", o.target)->required();
  hilbert->add_option("--max-degree", o.max_degree, "Highest degree to compute");
  add_json(hilbert);
  add_out(hilbert);

  auto* fd = app.add_subcommand("fd", "Formal dimension of a degree type literal or presentation file");
  fd->add_option("target", o.target)->required();
  add_json(fd);
  add_out(fd);

  auto* der = app.add_subcommand("derivations", "Derivations of a given degree");
  der->add_option("file", o.target)->required();
  der->add_option("--degree", o.degree, "Derivation degree")->required();
  add_json(der);
  add_out(der);

  auto* hal = app.add_subcommand("halperin", "Check for negative-degree derivations");
  hal->add_option("file", o.target)->required();
  add_json(hal);
  add_out(hal);

  auto* sac = app.add_subcommand("sac", "Strong algebraic condition for a degree type");
  sac->add_option("type", o.target, "Degree type, e.g. 2,4:4,10")->required();
  add_json(sac);
  add_out(sac);

  auto* en = app.add_subcommand("enumerate", "Catalog of SAC-valid degree types of a formal dimension");
  en->add_option("--fd", o.fd, "Formal dimension")->required();
  en->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_json(en);
  add_out(en);

  auto* fil = app.add_subcommand("filters", "Classify a degree type through the exclusion filters");
  fil->add_option("type", o.target)->required();
  add_json(fil);
  add_out(fil);

  auto* sw = app.add_subcommand("sweep", "Randomized Halperin sweep over enumerated degree types");
  sw->add_option("--fd", o.fd, "Largest formal dimension (<= 20)");
  sw->add_option("--samples", o.samples, "Samples per degree type")->check(CLI::PositiveNumber);
  sw->add_option("--seed", o.seed, "Sweep seed")->required();
  sw->add_option("--coeff-bound", o.coeff_bound, "Coefficient range")->check(CLI::PositiveNumber);
  sw->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  sw->add_flag("--exceptional", o.exceptional, "Sweep the six exceptional types instead");
  sw->add_flag("--invariants", o.invariants, "Also run solver invariant checks");
  add_json(sw);
  add_out(sw);

  auto* ex = app.add_subcommand("examples", "Run the fixed example battery");
  ex->add_flag("--lists", o.lists, "Also recompute the exceptional lists");
  ex->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_json(ex);
  add_out(ex);

  Result res;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    int rc = app.exit(e, out, err);
    res.out = out.str();
    res.err = err.str();
    res.code = rc == 0 ? kOk : kUsage;
    return res;
  }

  Output result;
  try {
    if (check->parsed()) result = cmd_check(o);
    else if (hilbert->parsed()) result = cmd_hilbert(o);
    else if (fd->parsed()) result = cmd_fd(o);
    else if (der->parsed()) result = cmd_derivations(o);
    else if (hal->parsed()) result = cmd_halperin(o);
    else if (sac->parsed()) result = cmd_sac(o);
    else if (en->parsed()) result = cmd_enumerate(o);
    else if (fil->parsed()) result = cmd_filters(o);
    else if (sw->parsed()) result = cmd_sweep(o);
    else result = cmd_examples(o);
  } catch (const Error& e) {
    res.code = kUsage;
    res.err = "error: " + std::string(e.what()) + "\n";
    return res;
  } catch (const std::exception& e) {
    res.code = kUsage;
    res.err = "error: " + std::string(e.what()) + "\n";
    return res;
  }

  res.code = result.code;
  if (o.out_path.empty()) {
    res.out = std::move(result.text);
  } else {
    std::ofstream f(o.out_path);
    if (!f) {
      res.code = kUsage;
      res.err = "error: cannot write " + o.out_path + "\n";
      return res;
    }
    f << result.text;
  }
  return res;
}

}  // namespace elliptica::cli
