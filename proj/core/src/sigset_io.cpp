#include "hforge/sigset_io.hpp"

#include "hforge/abelian.hpp"
#include "hforge/error.hpp"
#include "hforge/expr.hpp"
#include "json.hpp"

namespace hforge {

using Json = nlohmann::ordered_json;

FiniteGroup group_from_spec(const std::string& spec) {
  const std::string prefix = "abelian:";
  if (spec.rfind(prefix, 0) != 0) return parse_group_expression(spec);
  std::vector<std::size_t> orders;
  std::size_t pos = prefix.size();
  while (pos <= spec.size()) {
    auto end = spec.find(',', pos);
    if (end == std::string::npos) end = spec.size();
    const std::string item = spec.substr(pos, end - pos);
    try {
      std::size_t used = 0;
      unsigned long v = std::stoul(item, &used);
      if (used != item.size() || v < 1) throw std::invalid_argument(item);
      orders.push_back(v);
    } catch (const std::exception&) {
      fail(Errc::parse, "bad order '" + item + "' in carrier spec " + spec);
    }
    pos = end + 1;
  }
  return abelian_group(AbelianGroup(orders));
}

std::string signature_set_to_json(const SignatureSet& s, const std::string& carrier_spec) {
  Json j;
  j["carrier"] = carrier_spec;
  j["order"] = s.carrier.order();
  j["basis"] = s.subgroup.basis;
  Json blocks = Json::array();
  for (std::uint32_t u = 0; u < s.blocks.size(); ++u) {
    blocks.push_back({{"index", CharacterIndex{u, s.rank()}.to_string()}, {"coeffs", s.blocks[u].coeffs()}});
  }
  j["blocks"] = std::move(blocks);
  return j.dump(1);
}

LoadedSignatureSet signature_set_from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::parse, std::string("malformed signature-set file: ") + e.what());
  }
  try {
    std::string spec = j.at("carrier").get<std::string>();
    FiniteGroup k = group_from_spec(spec);
    if (j.contains("order") && j.at("order").get<std::size_t>() != k.order()) {
      fail(Errc::parse, "carrier order does not match " + spec);
    }
    auto basis = j.at("basis").get<std::vector<Element>>();
    for (Element b : basis) require(b < k.order(), Errc::parse, "basis element out of range");
    ElemAbelianEmbedding e = make_elem_abelian_embedding(k, basis);
    std::vector<std::optional<RingElement>> blocks(std::size_t{1} << e.rank());
    for (const auto& b : j.at("blocks")) {
      CharacterIndex u = CharacterIndex::parse(b.at("index").get<std::string>());
      require(u.rank == e.rank(), Errc::parse, "block index has the wrong rank");
      require(!blocks[u.bits], Errc::parse, "block " + u.to_string() + " given twice");
      auto coeffs = b.at("coeffs").get<std::vector<Coeff>>();
      require(coeffs.size() == k.order(), Errc::parse, "block " + u.to_string() + " has the wrong length");
      blocks[u.bits] = RingElement(k, std::move(coeffs));
    }
    SignatureSet s{k, e, {}};
    for (std::size_t m = 0; m < blocks.size(); ++m) {
      require(blocks[m].has_value(), Errc::parse, "missing block " + CharacterIndex{static_cast<std::uint32_t>(m), e.rank()}.to_string());
      s.blocks.push_back(*blocks[m]);
    }
    verify_signature_set(s);
    return {spec, std::move(s)};
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::parse, std::string("malformed signature-set file: ") + e.what());
  }
}

}  // namespace hforge
