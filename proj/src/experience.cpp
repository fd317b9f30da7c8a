#include "mcdm/experience.hpp"

#include <chrono>
#include <fstream>

#include <nlohmann/json.hpp>

#include "mcdm/io/json_io.hpp"

namespace mcdm {

std::string fingerprint(const MethodRequirements& requirements) {
  // nlohmann objects keep keys sorted and unexpressed fields are omitted,
  // so equal documents dump to byte-equal strings.
  return requirements_to_json(requirements).dump();
}

ExperienceStore::ExperienceStore(std::filesystem::path path)
    : path_(std::move(path)) {}

std::vector<ExperienceRecord> ExperienceStore::records() const {
  std::vector<ExperienceRecord> records;
  std::ifstream in(path_);
  if (!in.is_open()) {
    if (std::filesystem::exists(path_))
      fail(Errc::StoreUnreadable,
           "cannot open experience store " + path_.string());
    return records;  // missing store reads as empty
  }
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("fingerprint") ||
        !j.contains("method") || !j.contains("timestamp"))
      fail(Errc::StoreUnreadable, path_.string() + ":" +
                                      std::to_string(line_no) +
                                      ": malformed experience record");
    records.push_back({j["fingerprint"].get<std::string>(),
                       j["method"].get<std::string>(),
                       j["timestamp"].get<std::int64_t>()});
  }
  return records;
}

std::optional<std::string> ExperienceStore::lookup(
    const MethodRequirements& requirements) const {
  const std::string key = fingerprint(requirements);
  std::optional<std::string> method;
  std::int64_t best = 0;
  for (const auto& record : records()) {
    if (record.fingerprint != key) continue;
    // Later timestamps win; append order breaks timestamp ties.
    if (!method || record.timestamp_ns >= best) {
      method = record.method_id;
      best = record.timestamp_ns;
    }
  }
  return method;
}

ExperienceRecord ExperienceStore::record(
    const MethodRequirements& requirements, const std::string& method_id,
    const Registry& registry) {
  if (!registry.find(method_id))
    fail(Errc::UnknownMethod,
         "cannot record unknown method '" + method_id + "'");

  ExperienceRecord record;
  record.fingerprint = fingerprint(requirements);
  record.method_id = method_id;
  record.timestamp_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                            std::chrono::system_clock::now().time_since_epoch())
                            .count();

  if (path_.has_parent_path())
    std::filesystem::create_directories(path_.parent_path());
  std::ofstream out(path_, std::ios::app);
  if (!out.is_open())
    fail(Errc::StoreUnwritable,
         "cannot append to experience store " + path_.string());
  json j;
  j["fingerprint"] = record.fingerprint;
  j["method"] = record.method_id;
  j["timestamp"] = record.timestamp_ns;
  out << j.dump() << '\n';
  if (!out)
    fail(Errc::StoreUnwritable, "write failed on " + path_.string());
  return record;
}

}  // namespace mcdm
