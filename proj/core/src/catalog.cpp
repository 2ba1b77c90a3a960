#include "hforge/catalog.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "hforge/abelian.hpp"
#include "hforge/builders.hpp"
#include "hforge/error.hpp"
#include "hforge/group_map.hpp"

namespace hforge {

namespace {

struct LineReader {
  std::istream& in;
  std::string source;
  std::size_t line_no = 0;

  // next non-empty, non-comment line
  bool next(std::string& line) {
    while (std::getline(in, line)) {
      ++line_no;
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      line = line.substr(first);
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
      return true;
    }
    return false;
  }

  [[noreturn]] void error(const std::string& what) const {
    fail(Errc::parse, source + ":" + std::to_string(line_no) + ": " + what);
  }
};

std::pair<std::string, std::string> split_keyword(const std::string& line) {
  auto sp = line.find_first_of(" \t");
  if (sp == std::string::npos) return {line, ""};
  auto rest = line.find_first_not_of(" \t", sp);
  return {line.substr(0, sp), rest == std::string::npos ? "" : line.substr(rest)};
}

std::vector<Element> automorphism(const FiniteGroup& n, const std::vector<Element>& generator_images) {
  auto map = extend_generator_images(n, n, generator_images);
  require(map && map->is_bijective(), Errc::internal, "presentation automorphism is not bijective");
  return map->images;
}

// N x| C_2 where the generator of C_2 acts by the given generator images.
FiniteGroup split_extension_by_c2(const FiniteGroup& n, const std::vector<Element>& images) {
  std::vector<std::vector<Element>> action(2);
  action[0] = identity_map(n).images;
  action[1] = automorphism(n, images);
  return semidirect_product(n, cyclic(2, "t"), action);
}

}  // namespace

std::vector<CatalogGroup> parse_catalog(std::istream& in, const std::string& source) {
  LineReader r{in, source};
  std::vector<CatalogGroup> out;
  std::set<std::string> ids;
  std::string line;
  while (r.next(line)) {
    auto [kw, arg] = split_keyword(line);
    if (kw != "group" || arg.empty()) r.error("expected 'group <id>'");
    const std::string id = arg;
    if (!ids.insert(id).second) r.error("duplicate group id " + id);
    std::size_t order = 0;
    std::string name;
    std::vector<std::string> labels;
    bool have_table = false;
    std::vector<Element> table;
    while (true) {
      if (!r.next(line)) r.error("unexpected end of file in group " + id);
      auto [k, a] = split_keyword(line);
      if (k == "end") break;
      if (k == "order") {
        try {
          std::size_t pos = 0;
          order = std::stoul(a, &pos);
          if (pos != a.size() || order == 0) throw std::invalid_argument(a);
        } catch (const std::exception&) {
          r.error("bad order '" + a + "'");
        }
      } else if (k == "name") {
        name = a;
      } else if (k == "labels") {
        std::istringstream ls(a);
        std::string l;
        while (ls >> l) labels.push_back(l);
      } else if (k == "table") {
        if (order == 0) r.error("'table' before 'order'");
        table.reserve(order * order);
        for (std::size_t row = 0; row < order; ++row) {
          if (!r.next(line)) r.error("table of group " + id + " ends early");
          std::istringstream rs(line);
          std::size_t count = 0;
          long long v;
          while (rs >> v) {
            if (v < 0 || static_cast<std::size_t>(v) >= order) {
              r.error("entry " + std::to_string(v) + " out of range in row " + std::to_string(row));
            }
            table.push_back(static_cast<Element>(v));
            ++count;
          }
          if (!rs.eof()) r.error("non-numeric entry in row " + std::to_string(row));
          if (count != order) r.error("row " + std::to_string(row) + " has " + std::to_string(count) + " entries");
        }
        have_table = true;
      } else {
        r.error("unknown keyword '" + k + "'");
      }
    }
    if (!have_table) r.error("group " + id + " has no table");
    if (!labels.empty() && labels.size() != order) r.error("group " + id + " has the wrong number of labels");
    try {
      FiniteGroup g(order, std::move(table), std::move(labels));
      out.push_back({id, name, std::move(g)});
    } catch (const Error& e) {
      fail(e.code(), source + ": group " + id + ": " + e.what());
    }
  }
  return out;
}

std::vector<CatalogGroup> import_catalog(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), Errc::parse, "cannot open catalog " + path);
  return parse_catalog(in, path);
}

void write_catalog(std::ostream& out, const std::vector<CatalogGroup>& groups) {
  out << "# hforge group catalog v1\n";
  for (const auto& c : groups) {
    const std::size_t n = c.group.order();
    out << "group " << c.id << "\norder " << n << "\n";
    if (!c.name.empty()) out << "name " << c.name << "\n";
    out << "labels";
    for (Element g = 0; g < n; ++g) out << ' ' << c.group.label(g);
    out << "\ntable\n";
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) out << (b ? " " : "") << c.group.mul(a, b);
      out << "\n";
    }
    out << "end\n";
  }
}

std::vector<CatalogGroup> builtin_order16_catalog() {
  FiniteGroup c42 = abelian_group(AbelianGroup({4, 2}));  // generators x (order 4), y
  const Element x = *c42.generator("x");
  const Element y = *c42.generator("y");
  return {
      {"C16", "C16", cyclic(16)},
      {"C4xC4", "C4 x C4", abelian_group(AbelianGroup({4, 4}))},
      {"C8xC2", "C8 x C2", abelian_group(AbelianGroup({8, 2}))},
      {"C4xC2xC2", "C4 x C2 x C2", abelian_group(AbelianGroup({4, 2, 2}))},
      {"C2^4", "C2^4", elementary_abelian(4)},
      {"(C4xC2):C2", "(C4 x C2) x| C2, t: x -> xy", split_extension_by_c2(c42, {c42.mul(x, y), y})},
      {"C4:C4", "C4 x| C4", semidirect_cyclic(4, 4, 3)},
      {"M16", "modular", modular(16)},
      {"D16", "dihedral", dihedral(16)},
      {"SD16", "semidihedral", semidihedral(16)},
      {"Q16", "generalized quaternion", generalized_quaternion(16)},
      {"C2xD8", "C2 x D8", direct_product(dihedral(8), cyclic(2, "z"))},
      {"C2xQ8", "C2 x Q8", direct_product(quaternion8(), cyclic(2, "z"))},
      {"C4oD8", "central product C4 o D8, t: y -> x^2y", split_extension_by_c2(c42, {x, c42.mul(c42.mul(x, x), y)})},
  };
}

}  // namespace hforge
