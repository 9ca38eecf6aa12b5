#include "sumsets/record_store.hpp"

#include <ctime>
#include <fstream>

#include "sumsets/errors.hpp"
#include "sumsets/json_io.hpp"

namespace sumsets {

namespace {

std::string utc_now() {
  const std::time_t now = std::time(nullptr);
  std::tm parts{};
  gmtime_r(&now, &parts);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &parts);
  return buffer;
}

}  // namespace

void record_store_append(const SearchRecord& record, const std::filesystem::path& path) {
  SearchRecord stamped = record;
  if (!stamped.timestamp) stamped.timestamp = utc_now();
  std::ofstream out(path, std::ios::app);
  if (!out) throw Error("cannot open record store " + path.string());
  out << record_to_json(stamped).dump() << "\n";
  if (!out) throw Error("failed writing record store " + path.string());
}

std::vector<SearchRecord> record_store_read(const std::filesystem::path& path) {
  std::vector<SearchRecord> records;
  std::ifstream in(path);
  if (!in) return records;  // no store yet is an empty store
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      records.push_back(record_from_json(Json::parse(line)));
    } catch (const std::exception& e) {
      throw RecordCorrupt(line_number, e.what());
    }
  }
  return records;
}

std::optional<SearchRecord> record_store_best(int n, const std::filesystem::path& path) {
  std::optional<SearchRecord> best;
  for (SearchRecord& record : record_store_read(path)) {
    if (record.n != n) continue;
    const bool better =
        !best || record.best_size < best->best_size ||
        (record.best_size == best->best_size && record.complete && !best->complete);
    if (better) best = std::move(record);
  }
  return best;
}

}  // namespace sumsets
