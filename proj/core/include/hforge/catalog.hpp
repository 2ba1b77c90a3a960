#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hforge/finite_group.hpp"

namespace hforge {

struct CatalogGroup {
  std::string id;    // taken verbatim from the catalog, e.g. "64,18"
  std::string name;  // optional display name
  FiniteGroup group;
};

/// Text catalog:
///   group <id> / order <n> / [name <text>] / [labels l_0 ... l_{n-1}] /
///   table / n rows of n indices / end
/// '#' starts a comment line. Throws Error(parse) with the line number, or
/// the group-axiom error for an invalid table; duplicate ids are rejected.
std::vector<CatalogGroup> parse_catalog(std::istream& in, const std::string& source = "<catalog>");
std::vector<CatalogGroup> import_catalog(const std::string& path);
void write_catalog(std::ostream& out, const std::vector<CatalogGroup>& groups);

/// The 14 groups of order 16 built from presentations.
std::vector<CatalogGroup> builtin_order16_catalog();

}  // namespace hforge
