#include "hforge/fixture.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <istream>

#include "hforge/error.hpp"
#include "hforge/expr.hpp"

namespace hforge {

namespace {

RingElement pair_sum(const FinalFixture& f, const RingElement& plus, const RingElement& minus) {
  const FiniteGroup& g = f.group;
  RingElement b = RingElement::basis(g, f.e.basis[1]);
  RingElement one = RingElement::one(g);
  return plus * (one + b) + minus * (one - b);
}

}  // namespace

RingElement FinalFixture::d0() const { return pair_sum(*this, blocks.at(0b00), blocks.at(0b10)); }
RingElement FinalFixture::d1() const { return pair_sum(*this, blocks.at(0b01), blocks.at(0b11)); }

FinalFixture parse_fixture(std::istream& in, const std::string& source) {
  std::string line, name, id, group_expr, basis_text;
  std::vector<std::pair<std::string, std::string>> blocks, supports;
  std::size_t line_no = 0;
  auto error = [&](const std::string& what) { fail(Errc::parse, source + ":" + std::to_string(line_no) + ": " + what); };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    line = line.substr(first);
    auto sp = line.find(' ');
    std::string kw = line.substr(0, sp);
    std::string rest = sp == std::string::npos ? "" : line.substr(line.find_first_not_of(' ', sp));
    if (kw == "name") name = rest;
    else if (kw == "id") id = rest;
    else if (kw == "group") group_expr = rest;
    else if (kw == "basis") basis_text = rest;
    else if (kw == "block") {
      auto s2 = rest.find(' ');
      if (s2 == std::string::npos) error("block needs an index and an expression");
      blocks.emplace_back(rest.substr(0, s2), rest.substr(s2 + 1));
    } else if (kw == "support0" || kw == "support1") {
      supports.emplace_back(kw, rest);
    } else {
      error("unknown keyword '" + kw + "'");
    }
  }
  if (group_expr.empty() || basis_text.empty()) fail(Errc::parse, source + ": fixture needs 'group' and 'basis'");
  FiniteGroup g = parse_group_expression(group_expr);
  std::vector<Element> basis;
  {
    std::size_t pos = 0;
    while (pos < basis_text.size()) {
      auto end = basis_text.find(' ', pos);
      if (end == std::string::npos) end = basis_text.size();
      if (end > pos) basis.push_back(parse_element(g, basis_text.substr(pos, end - pos)));
      pos = end + 1;
    }
  }
  if (basis.size() != 2) fail(Errc::parse, source + ": basis must list g and b");
  FinalFixture f{name, id, group_expr, g, make_elem_abelian_embedding(g, basis), {}, {}};
  std::vector<std::optional<RingElement>> by_mask(4);
  for (const auto& [u, expr] : blocks) {
    CharacterIndex idx = CharacterIndex::parse(u);
    if (idx.rank != 2) fail(Errc::parse, source + ": block index '" + u + "' is not rank 2");
    if (by_mask[idx.bits]) fail(Errc::parse, source + ": block " + u + " given twice");
    by_mask[idx.bits] = parse_ring_expression(g, expr);
  }
  for (std::size_t m = 0; m < 4; ++m) {
    if (!by_mask[m]) fail(Errc::parse, source + ": missing block " + CharacterIndex{static_cast<std::uint32_t>(m), 2}.to_string());
    f.blocks.push_back(*by_mask[m]);
  }
  std::sort(supports.begin(), supports.end());
  for (const auto& s : supports) f.stated_supports.push_back(parse_ring_expression(g, s.second));
  return f;
}

FinalFixture load_fixture(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), Errc::parse, "cannot open fixture " + path);
  return parse_fixture(in, path);
}

std::vector<FinalFixture> load_fixture_dir(const std::string& dir) {
  namespace fs = std::filesystem;
  std::vector<std::string> paths;
  if (!fs::is_directory(dir)) return {};
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") paths.push_back(entry.path().string());
  }
  std::sort(paths.begin(), paths.end());
  std::vector<FinalFixture> out;
  for (const auto& p : paths) out.push_back(load_fixture(p));
  return out;
}

WeakConditions weak_conditions(const FinalFixture& f) {
  const Coeff c = static_cast<Coeff>(f.group.order() / 16);
  auto chi = [&](std::uint32_t m) { return character_element(f.e, CharacterIndex{m, 2}); };
  auto term = [&](std::uint32_t m) { return f.blocks[m] * chi(m) * involution(f.blocks[m]); };
  WeakConditions w;
  w.principal_pair = term(0b00) == c * chi(0b00) && term(0b10) == c * chi(0b10);
  w.complementary_pair = term(0b01) + term(0b11) == c * (chi(0b01) + chi(0b11));
  return w;
}

RingElement fixture_difference_set(const FinalFixture& f) {
  return original_final_assemble(f.group, f.central(), f.d0(), f.d1());
}

}  // namespace hforge
