#include "hforge/records.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "hforge/error.hpp"
#include "hforge/ring.hpp"
#include "json.hpp"

namespace hforge {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::array<std::pair<RecordStatus, std::string_view>, 4> kStatuses{{
    {RecordStatus::excluded_turyn, "excluded-turyn"},
    {RecordStatus::excluded_dillon, "excluded-dillon"},
    {RecordStatus::constructed, "constructed"},
    {RecordStatus::unresolved, "unresolved"},
}};

constexpr std::array<std::pair<Method, std::string_view>, 13> kMethods{{
    {Method::none, "none"},
    {Method::trivial_drisko, "trivial-drisko"},
    {Method::main_theorem, "main-theorem"},
    {Method::sig_product, "sig-product"},
    {Method::quaternion, "quaternion"},
    {Method::hds_c2, "hds-c2"},
    {Method::pta_product, "pta-product"},
    {Method::pta_sig, "pta-sig"},
    {Method::mod_sig, "mod-sig"},
    {Method::original_final, "original-final"},
    {Method::dillon_product, "dillon-product"},
    {Method::transfer, "transfer"},
    {Method::fixture, "fixture"},
}};

std::string canonical(const ConstructionRecord& r) {
  std::ostringstream s;
  s << r.group_id << '|' << r.order << '|' << to_string(r.status) << '|' << to_string(r.method) << '|' << r.stage
    << '|';
  if (r.set) {
    for (std::size_t i = 0; i < r.set->size(); ++i) s << (i ? "," : "") << (*r.set)[i];
  } else {
    s << '-';
  }
  s << '|';
  if (r.params) s << r.params->v << ',' << r.params->k << ',' << r.params->lambda;
  s << '|' << (r.verified ? 1 : 0) << '|' << r.detail;
  return s.str();
}

[[noreturn]] void bad_record(const std::string& what) { fail(Errc::verification, "record rejected: " + what); }

}  // namespace

std::string_view to_string(RecordStatus s) {
  for (const auto& [k, v] : kStatuses) {
    if (k == s) return v;
  }
  return "unknown";
}

std::string_view to_string(Method m) {
  for (const auto& [k, v] : kMethods) {
    if (k == m) return v;
  }
  return "unknown";
}

RecordStatus parse_status(std::string_view s) {
  for (const auto& [k, v] : kStatuses) {
    if (v == s) return k;
  }
  fail(Errc::parse, "unknown record status '" + std::string(s) + "'");
}

Method parse_method(std::string_view s) {
  for (const auto& [k, v] : kMethods) {
    if (v == s) return k;
  }
  fail(Errc::parse, "unknown method '" + std::string(s) + "'");
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string record_checksum(const ConstructionRecord& r) { return fnv1a_hex(canonical(r)); }

std::string record_to_line(ConstructionRecord r) {
  if (r.checksum.empty()) r.checksum = record_checksum(r);
  Json j;
  j["group_id"] = r.group_id;
  j["order"] = r.order;
  j["status"] = std::string(to_string(r.status));
  j["method"] = std::string(to_string(r.method));
  j["stage"] = r.stage;
  if (r.set) j["set"] = *r.set;
  if (r.params) j["params"] = {r.params->v, r.params->k, r.params->lambda};
  j["verified"] = r.verified;
  if (!r.detail.empty()) j["detail"] = r.detail;
  j["checksum"] = r.checksum;
  return j.dump();
}

ConstructionRecord record_from_line(const std::string& line) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::parse, std::string("malformed record: ") + e.what());
  }
  ConstructionRecord r;
  try {
    r.group_id = j.at("group_id").get<std::string>();
    r.order = j.at("order").get<std::size_t>();
    r.status = parse_status(j.at("status").get<std::string>());
    r.method = parse_method(j.at("method").get<std::string>());
    r.stage = j.at("stage").get<int>();
    if (j.contains("set")) r.set = j.at("set").get<ElementSet>();
    if (j.contains("params")) {
      auto p = j.at("params").get<std::vector<long long>>();
      if (p.size() != 3) fail(Errc::parse, "params must be (v,k,lambda)");
      HadamardParams hp;
      hp.v = p[0];
      hp.k = p[1];
      hp.lambda = p[2];
      hp.n = p[1] - p[2];
      r.params = hp;
    }
    r.verified = j.at("verified").get<bool>();
    if (j.contains("detail")) r.detail = j.at("detail").get<std::string>();
    r.checksum = j.at("checksum").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::parse, std::string("malformed record: ") + e.what());
  }
  return r;
}

RecordWriter::RecordWriter(std::ostream& out, const std::string& config_hash) : out_(out) {
  out_ << kRecordsHeader << " config=" << config_hash << "\n";
}

void RecordWriter::append(const ConstructionRecord& r) { out_ << record_to_line(r) << "\n" << std::flush; }

void write_records(const std::string& path, const std::string& config_hash,
                   const std::vector<ConstructionRecord>& records) {
  std::ofstream out(path, std::ios::trunc);
  require(out.good(), Errc::invalid_argument, "cannot write records to " + path);
  RecordWriter w(out, config_hash);
  for (const auto& r : records) w.append(r);
}

LoadedRecords load_records(std::istream& in, const std::map<std::string, FiniteGroup>& groups) {
  LoadedRecords out;
  std::string line;
  if (!std::getline(in, line) || line.rfind(kRecordsHeader, 0) != 0) fail(Errc::parse, "missing records header");
  auto cfg = line.find("config=");
  if (cfg != std::string::npos) out.config_hash = line.substr(cfg + 7);
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    ConstructionRecord r = record_from_line(line);
    if (r.checksum != record_checksum(r)) bad_record(r.group_id + ": checksum mismatch");
    const bool excluded = r.status == RecordStatus::excluded_turyn || r.status == RecordStatus::excluded_dillon;
    if (excluded && r.set) bad_record(r.group_id + ": excluded record carries a set");
    if (r.status == RecordStatus::constructed) {
      if (!r.set) bad_record(r.group_id + ": constructed record without a set");
      auto it = groups.find(r.group_id);
      if (it == groups.end()) bad_record(r.group_id + ": group not in catalog");
      const FiniteGroup& g = it->second;
      if (g.order() != r.order) bad_record(r.group_id + ": order mismatch");
      for (Element x : *r.set) {
        if (x >= g.order()) bad_record(r.group_id + ": set entry out of range");
      }
      ElementSet s = make_set(*r.set);
      if (s.size() != r.set->size() || !is_hadamard_ds(g, s)) {
        bad_record(r.group_id + ": set is not a Hadamard difference set");
      }
      if (r.params && static_cast<long long>(s.size()) != r.params->k) bad_record(r.group_id + ": params mismatch");
    }
    out.records.push_back(std::move(r));
  }
  return out;
}

LoadedRecords load_records(const std::string& path, const std::map<std::string, FiniteGroup>& groups) {
  std::ifstream in(path);
  require(in.good(), Errc::parse, "cannot open records " + path);
  return load_records(in, groups);
}

}  // namespace hforge
