#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hforge/checks.hpp"
#include "hforge/finite_group.hpp"

namespace hforge {

enum class RecordStatus { excluded_turyn, excluded_dillon, constructed, unresolved };

enum class Method {
  none,
  trivial_drisko,
  main_theorem,
  sig_product,
  quaternion,
  hds_c2,
  pta_product,
  pta_sig,
  mod_sig,
  original_final,
  dillon_product,
  transfer,
  fixture,
};

std::string_view to_string(RecordStatus s);
std::string_view to_string(Method m);
RecordStatus parse_status(std::string_view s);
Method parse_method(std::string_view s);

struct ConstructionRecord {
  std::string group_id;
  std::size_t order = 0;
  RecordStatus status = RecordStatus::unresolved;
  Method method = Method::none;
  int stage = 0;                          // pipeline stage that decided the record
  std::optional<ElementSet> set;          // -1 positions of the difference set
  std::optional<HadamardParams> params;
  bool verified = false;
  std::string detail;                     // subgroup, tuple or witness used
  std::string checksum;                   // FNV-1a over the other fields
};

/// Hex FNV-1a 64 of a byte string.
std::string fnv1a_hex(std::string_view bytes);
std::string record_checksum(const ConstructionRecord& r);

/// One JSON object per line; the checksum is computed when empty.
std::string record_to_line(ConstructionRecord r);
ConstructionRecord record_from_line(const std::string& line);

inline constexpr std::string_view kRecordsHeader = "# hforge-records v1";

/// Serialized single writer: header on creation, then one line per record.
class RecordWriter {
 public:
  RecordWriter(std::ostream& out, const std::string& config_hash);
  void append(const ConstructionRecord& r);

 private:
  std::ostream& out_;
};

void write_records(const std::string& path, const std::string& config_hash,
                   const std::vector<ConstructionRecord>& records);

struct LoadedRecords {
  std::string config_hash;
  std::vector<ConstructionRecord> records;
};

/// Parses and re-verifies: checksum, the status/set invariant, and for a
/// constructed record is_hadamard_ds on `groups[group_id]`. Throws
/// Error(verification) on any mismatch, Error(parse) on malformed lines.
LoadedRecords load_records(std::istream& in, const std::map<std::string, FiniteGroup>& groups);
LoadedRecords load_records(const std::string& path, const std::map<std::string, FiniteGroup>& groups);

}  // namespace hforge
