#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "mcdm/registry.hpp"

namespace mcdm {

// Canonical serialization of a requirement document. Equal documents
// produce byte-equal fingerprints regardless of input ordering.
std::string fingerprint(const MethodRequirements& requirements);

struct ExperienceRecord {
  std::string fingerprint;
  std::string method_id;
  std::int64_t timestamp_ns = 0;
};

// Append-only, file-backed store of requirement-fingerprint -> method
// decisions. One JSON document per line, UTF-8. Writes must be serialized
// by the caller (single writer); readers see a consistent snapshot.
class ExperienceStore {
 public:
  explicit ExperienceStore(std::filesystem::path path);

  const std::filesystem::path& path() const { return path_; }

  // All records in file order. A missing file reads as an empty base;
  // an unparsable one throws StoreUnreadable.
  std::vector<ExperienceRecord> records() const;

  // Most recent method recorded for exactly these requirements, if any.
  // Later timestamps win; equal timestamps fall back to file order.
  std::optional<std::string> lookup(const MethodRequirements& requirements) const;

  // Appends one record. The method must exist in the registry.
  ExperienceRecord record(const MethodRequirements& requirements,
                          const std::string& method_id,
                          const Registry& registry);

 private:
  std::filesystem::path path_;
};

}  // namespace mcdm
