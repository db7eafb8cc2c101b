#pragma once

#include <nlohmann/json.hpp>

#include "elliptica/casebook.hpp"

namespace elliptica {

using json = nlohmann::ordered_json;

json to_json(const Derivation& d);
json to_json(const HalperinReport& r);
json to_json(const DerivationSpace& s);
json to_json(const SacReport& r);

// Catalog entry {A, B, fd, sac, verdict, citations} via classify().
json catalog_entry(const DegreeType& dt);
json catalog(const std::vector<DegreeType>& types);

json to_json(const ExceptionalLists& lists);
json to_json(const ExampleLedger& ledger);
json to_json(const SweepReport& report);

}  // namespace elliptica
