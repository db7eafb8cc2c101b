#include "elliptica/serialize.hpp"

#include "elliptica/text.hpp"

namespace elliptica {

json to_json(const Derivation& d) {
  json images = json::array();
  for (const Polynomial& p : d.images) images.push_back(format_polynomial(p));
  return images;
}

json to_json(const HalperinReport& r) {
  json out;
  json degrees = json::object();
  for (const auto& e : r.degrees)
    degrees[std::to_string(e.degree)] = {{"lift_dim", e.lift_dim},
                                         {"trivial_dim", e.trivial_dim},
                                         {"induced_dim", e.induced_dim}};
  out["degrees"] = std::move(degrees);
  out["verdict"] = r.pass ? "PASS" : "FAIL";
  if (!r.pass && r.witness) out["witness"] = to_json(*r.witness);
  return out;
}

json to_json(const DerivationSpace& s) {
  json basis = json::array();
  for (const Derivation& d : s.induced_basis) basis.push_back(to_json(d));
  return {{"degree", s.degree},
          {"lift_dim", s.lift_basis.size()},
          {"trivial_dim", s.trivial_dim},
          {"induced_dim", s.induced_dim},
          {"induced_basis", std::move(basis)}};
}

json to_json(const SacReport& r) {
  json failing = json::array();
  for (const auto& f : r.failing_subsets)
    failing.push_back({{"subsequence", f.subsequence}, {"representable", f.representable_count}});
  return {{"pass", r.pass}, {"failing_subsets", std::move(failing)}};
}

json catalog_entry(const DegreeType& dt) {
  FilterVerdict v = classify(dt);
  return {{"A", dt.generators},
          {"B", dt.relations},
          {"fd", formal_dimension(dt)},
          {"sac", sac_check(dt).pass},
          {"verdict", std::string(to_string(v.outcome))},
          {"citations", v.citations}};
}

json catalog(const std::vector<DegreeType>& types_in) {
  std::vector<DegreeType> types = types_in;
  std::sort(types.begin(), types.end());
  json out = json::array();
  for (const auto& dt : types) out.push_back(catalog_entry(dt));
  return out;
}

namespace {
json type_list(const std::vector<DegreeType>& v) {
  json out = json::array();
  for (const auto& dt : v) out.push_back({{"A", dt.generators}, {"B", dt.relations}});
  return out;
}
}  // namespace

json to_json(const ExceptionalLists& lists) {
  return {{"sector<=8", type_list(lists.sector8)},
          {"sector=10", type_list(lists.sector10)},
          {"sector>=12", type_list(lists.sector12)}};
}

json to_json(const ExampleLedger& ledger) {
  json entries = json::array();
  for (const auto& e : ledger.entries)
    entries.push_back({{"name", e.name}, {"pass", e.pass}, {"detail", e.detail}});
  return {{"all_pass", ledger.all_pass()}, {"entries", std::move(entries)}};
}

json to_json(const SweepReport& report) {
  json results = json::array();
  for (const auto& r : report.results) {
    json failures = json::array();
    for (const auto& f : r.failures)
      failures.push_back({{"seed", f.seed}, {"degree", f.degree}, {"witness", f.witness}});
    results.push_back({{"A", r.type.generators},
                       {"B", r.type.relations},
                       {"samples", r.samples},
                       {"all_pass", r.all_pass()},
                       {"failures", std::move(failures)},
                       {"sampling_failures", r.sampling_failures},
                       {"invariant_checks", r.invariant_checks},
                       {"invariant_failures", r.invariant_failures}});
  }
  return {{"header", report.header},
          {"fd_max", report.fd_max},
          {"samples_per_type", report.samples_per_type},
          {"seed", report.seed},
          {"all_pass", report.all_pass()},
          {"results", std::move(results)}};
}

}  // namespace elliptica
