#pragma once

#include <json.hpp>

#include <filesystem>

#include "sumsets/bounds.hpp"
#include "sumsets/ruzsa.hpp"
#include "sumsets/search.hpp"
#include "sumsets/sigma.hpp"
#include "sumsets/sorted_set.hpp"
#include "sumsets/sumset.hpp"

namespace sumsets {

// Insertion-ordered JSON keeps every emitted document byte-stable.
using Json = nlohmann::ordered_json;

// Set files: JSON array of "p/q" / "n" strings.
Json set_to_json(const SortedSet& set);
SortedSet set_from_json(const Json& json);
SortedSet read_set_file(const std::filesystem::path& path);

// Sigma: JSON array of 1-based integers.
Json sigma_to_json(const SigmaMap& sigma);
SigmaMap sigma_from_json(const Json& json);
SigmaMap read_sigma_file(const std::filesystem::path& path);

Json census_to_json(const BlockCensus& census);
Json pair_witness_to_json(const PairWitness& witness);
Json bound_report_to_json(const BoundReport& report);
Json artifacts_to_json(const RuzsaArtifacts& artifacts);
Json tightness_to_json(const TightnessReport& report);

Json record_to_json(const SearchRecord& record, bool include_timestamp = true);
SearchRecord record_from_json(const Json& json);

}  // namespace sumsets
