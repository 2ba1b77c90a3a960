#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hforge/assembly.hpp"
#include "hforge/catalog.hpp"
#include "hforge/fixture.hpp"
#include "hforge/pta.hpp"
#include "hforge/records.hpp"

namespace hforge {

enum class Stage {
  exclusion = 1,    // Turyn / Dillon
  main = 2,         // normal abelian subgroup with a valid invariant tuple
  corollaries = 3,  // index-2 and small-subgroup signature sets
  pta_product = 4,
  fixture = 5,
  transfer = 6,     // opt-in; searches coset re-assemblies of sets found earlier
};

std::string_view to_string(Stage s);
/// Comma list of names ("exclusion,main,...") or numbers ("1,2,3"). Throws
/// Error(parse) on unknown names.
std::vector<Stage> parse_stages(const std::string& text);
std::vector<Stage> default_stages();

struct ClassifyConfig {
  std::vector<Stage> stages = default_stages();
  std::size_t jobs = 1;
  std::vector<FinalFixture> fixtures;
  PtaSearchOptions pta{};                 // node budget for PTA searches
  TransferOptions transfer{1'000'000};    // per attempt
  std::uint64_t transfer_attempts = 2000; // per unresolved group
};

/// Stable digest of everything that influences the records.
std::string config_hash(const ClassifyConfig& c, std::size_t order);

struct Construction {
  Method method = Method::none;
  RingElement d;
  std::string detail;
};

/// Single-method entry points, shared by classify and the CLI.
std::optional<Construction> construct_main(const FiniteGroup& g);
std::optional<Construction> construct_hds_c2(const FiniteGroup& g);
std::optional<Construction> construct_pta_sig(const FiniteGroup& g, const PtaSearchOptions& opts = {});
std::optional<Construction> construct_quaternion(const FiniteGroup& g);
std::optional<Construction> construct_sig_product(const FiniteGroup& g);
std::optional<Construction> construct_pta_product(const FiniteGroup& g, const PtaSearchOptions& opts = {});
std::optional<Construction> construct_fixture(const FiniteGroup& g, const std::vector<FinalFixture>& fixtures);

/// Any difference set in g from the automatic stages 2-4.
std::optional<RingElement> find_difference_set(const FiniteGroup& g);

/// Runs the configured stages on one group.
ConstructionRecord classify_group(const CatalogGroup& c, const ClassifyConfig& config);

/// Every group in catalog order. Groups are processed by `jobs` threads
/// (HFORGE_JOBS overrides) and merged by index, so output is deterministic.
std::vector<ConstructionRecord> classify(const std::vector<CatalogGroup>& groups, const ClassifyConfig& config);

struct StageCounts {
  std::size_t total = 0;
  std::size_t excluded = 0;
  std::size_t constructed = 0;
  std::size_t unresolved = 0;
  std::size_t by_stage[7] = {};
};
StageCounts count_stages(const std::vector<ConstructionRecord>& records);

std::size_t effective_jobs(std::size_t requested);

}  // namespace hforge
