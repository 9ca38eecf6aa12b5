#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include "sumsets/search.hpp"

namespace sumsets {

// Append-only JSON-lines persistence for search records ("v":1 schema).

void record_store_append(const SearchRecord& record, const std::filesystem::path& path);

// A line that fails to parse throws RecordCorrupt with its line number.
// A missing file reads as an empty store.
std::vector<SearchRecord> record_store_read(const std::filesystem::path& path);

// Minimal best_size for n; complete records win ties, then earlier lines.
std::optional<SearchRecord> record_store_best(int n, const std::filesystem::path& path);

}  // namespace sumsets
