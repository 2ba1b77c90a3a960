// hforge: catalog classification, verification and construction front end.
//
// Exit status: 0 success, 1 domain failure (e.g. a set that does not
// verify), 2 usage or parse error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "hforge/classify.hpp"
#include "hforge/error.hpp"
#include "hforge/expr.hpp"
#include "hforge/signatures.hpp"
#include "hforge/sigset_io.hpp"
#include "json.hpp"

using namespace hforge;

namespace {

constexpr int kOk = 0;
constexpr int kDomainFailure = 1;
constexpr int kUsage = 2;

std::string data_dir() {
  if (const char* env = std::getenv("HFORGE_DATA_DIR")) return env;
  return HFORGE_DEFAULT_DATA_DIR;
}

std::vector<CatalogGroup> load_catalog(const std::string& path) {
  if (path == "builtin16") return builtin_order16_catalog();
  return import_catalog(path);
}

// Catalog id (from --catalog or the built-in order-16 list), fixture name, or
// builder expression, tried in that order.
FiniteGroup resolve_group(const std::string& spec, const std::string& catalog, const std::vector<FinalFixture>& fixtures) {
  if (!catalog.empty()) {
    for (auto& c : load_catalog(catalog)) {
      if (c.id == spec) return c.group;
    }
  }
  for (auto& c : builtin_order16_catalog()) {
    if (c.id == spec) return c.group;
  }
  for (const auto& f : fixtures) {
    if (f.name == spec || (!f.id.empty() && f.id == spec)) return f.group;
  }
  return group_from_spec(spec);
}

// One token per line: the -1 positions (labels, words or indices).
// Two tokens per line: "element coefficient" in +-1 form.
RingElement read_set_file(const FiniteGroup& g, const std::string& path) {
  std::ifstream in(path);
  require(in.good(), Errc::parse, "cannot open set file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  std::istringstream lines(text);
  std::string line;
  bool pairs = false;
  std::vector<std::string> tokens;
  while (std::getline(lines, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<std::string> t;
    std::string w;
    while (ls >> w) t.push_back(w);
    if (t.empty()) continue;
    if (t.size() > 2) fail(Errc::parse, path + ": expected one element or 'element coefficient' per line");
    pairs = pairs || t.size() == 2;
    tokens.push_back(t[0]);
  }
  if (pairs) return ring_element_from_text(g, text);
  std::vector<Element> subset;
  for (const auto& t : tokens) {
    if (auto e = g.find_label(t)) {
      subset.push_back(*e);
    } else if (std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      unsigned long v = std::stoul(t);
      require(v < g.order(), Errc::parse, "element index " + t + " out of range");
      subset.push_back(static_cast<Element>(v));
    } else {
      subset.push_back(parse_element(g, t));
    }
  }
  ElementSet s = make_set(subset);
  require(s.size() == subset.size(), Errc::parse, path + ": repeated element");
  return RingElement::from_subset(g, s);
}

std::vector<FinalFixture> default_fixtures(const std::string& dir) {
  return load_fixture_dir(dir.empty() ? data_dir() + "/fixtures" : dir);
}

void print_counts(const StageCounts& c) {
  std::cout << "groups " << c.total << "  excluded " << c.excluded << "  constructed " << c.constructed
            << "  unresolved " << c.unresolved << "\n";
  for (int s = 1; s <= 6; ++s) {
    if (c.by_stage[s] == 0) continue;
    std::cout << "  stage " << s << " (" << to_string(static_cast<Stage>(s)) << "): " << c.by_stage[s] << "\n";
  }
}

int cmd_classify(const std::string& catalog, std::size_t order, const std::string& out, const std::string& stages,
                 std::size_t jobs, const std::string& fixture_dir) {
  ClassifyConfig cfg;
  if (!stages.empty()) cfg.stages = parse_stages(stages);
  cfg.jobs = jobs;
  cfg.fixtures = default_fixtures(fixture_dir);
  std::vector<CatalogGroup> groups;
  for (auto& c : load_catalog(catalog)) {
    if (c.group.order() == order) groups.push_back(std::move(c));
  }
  require(!groups.empty(), Errc::invalid_argument, "no groups of order " + std::to_string(order) + " in " + catalog);
  auto records = classify(groups, cfg);
  write_records(out, config_hash(cfg, order), records);
  print_counts(count_stages(records));
  return kOk;
}

int cmd_check_records(const std::string& catalog, const std::string& path) {
  std::map<std::string, FiniteGroup> groups;
  for (auto& c : load_catalog(catalog)) groups.emplace(c.id, c.group);
  auto loaded = load_records(path, groups);
  print_counts(count_stages(loaded.records));
  std::cout << "all " << loaded.records.size() << " records verified\n";
  return kOk;
}

int cmd_verify_ds(const std::string& group, const std::string& set_path, const std::string& catalog) {
  FiniteGroup g = resolve_group(group, catalog, default_fixtures(""));
  RingElement d = read_set_file(g, set_path);
  DsVerdict v = verify_hadamard_ds(d);
  nlohmann::ordered_json j;
  j["valid"] = v.valid;
  if (v.params) {
    j["params"] = {v.params->v, v.params->k, v.params->lambda};
  } else {
    j["params"] = nullptr;
  }
  j["failure_reason"] = std::string(to_string(v.failure));
  std::cout << j.dump() << "\n";
  return v.valid ? kOk : kDomainFailure;
}

int cmd_sigset(const std::string& orders_text, int d, const std::string& emit) {
  std::vector<std::size_t> orders;
  std::stringstream ss(orders_text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      orders.push_back(std::stoul(item));
    } catch (const std::exception&) {
      fail(Errc::parse, "bad order '" + item + "'");
    }
  }
  std::vector<std::size_t> sorted = orders;
  std::sort(sorted.rbegin(), sorted.rend());
  if (!valid_abelian_tuple(d, sorted)) {
    std::cerr << "hforge: (" << orders_text << ") is not a valid order tuple for d=" << d << "\n";
    return kDomainFailure;
  }
  AbelianSignaturePolys p = abelian_signature_polys(d, orders);
  SignatureSet s = to_signature_set(p);
  verify_signature_set(s);
  std::cout << "signature set on ";
  for (std::size_t i = 0; i < orders.size(); ++i) std::cout << (i ? " x " : "") << "C" << orders[i];
  std::cout << ", r=" << s.rank() << ", E = <";
  for (std::size_t i = 0; i < s.rank(); ++i) std::cout << (i ? "," : "") << s.carrier.label(s.subgroup.basis[i]);
  std::cout << ">\n";
  for (const auto& u : all_characters(s.rank())) {
    std::cout << "A_" << u.to_string() << " = " << to_string(p.blocks[u.bits]) << "\n";
  }
  if (!emit.empty()) {
    std::string spec = "abelian:";
    for (std::size_t i = 0; i < orders.size(); ++i) spec += (i ? "," : "") + std::to_string(orders[i]);
    std::ofstream out(emit);
    require(out.good(), Errc::invalid_argument, "cannot write " + emit);
    out << signature_set_to_json(s, spec) << "\n";
  }
  return kOk;
}

int cmd_exclude(const std::string& catalog) {
  std::size_t n = 0;
  for (const auto& c : load_catalog(catalog)) {
    if (!hadamard_d(c.group.order())) continue;
    if (auto w = exclusion_witness(c.group)) {
      std::cout << c.id << " " << to_string(w->kind) << " |K|=" << w->kernel.size() << "\n";
      ++n;
    }
  }
  std::cerr << n << " excluded\n";
  return kOk;
}

int cmd_construct(const std::string& group, const std::string& method, const std::string& catalog,
                  const std::string& out) {
  auto fixtures = default_fixtures("");
  FiniteGroup g = resolve_group(group, catalog, fixtures);
  require(hadamard_d(g.order()).has_value(), Errc::invalid_argument, "group order is not 2^{2d+2}");
  std::optional<Construction> c;
  if (method == "main" || method == "main-theorem" || method == "trivial-drisko") c = construct_main(g);
  else if (method == "hds-c2") c = construct_hds_c2(g);
  else if (method == "pta-sig") c = construct_pta_sig(g);
  else if (method == "quaternion") c = construct_quaternion(g);
  else if (method == "sig-product") c = construct_sig_product(g);
  else if (method == "pta-product") c = construct_pta_product(g);
  else if (method == "fixture" || method == "original-final") c = construct_fixture(g, fixtures);
  else fail(Errc::parse, "unknown method '" + method + "'");
  if (!c) {
    std::cout << "no construction by " << method << "\n";
    return kDomainFailure;
  }
  DsVerdict v = verify_hadamard_ds(c->d);
  if (!v.valid) {
    std::cout << "construction failed verification\n";
    return kDomainFailure;
  }
  std::cout << "method " << to_string(c->method) << "  " << c->detail << "\n";
  std::cout << "params (" << v.params->v << "," << v.params->k << "," << v.params->lambda << ")\n";
  std::ostringstream set;
  for (Element x : minus_one_positions(c->d)) set << g.label(x) << "\n";
  if (out.empty()) {
    std::cout << set.str();
  } else {
    std::ofstream f(out);
    require(f.good(), Errc::invalid_argument, "cannot write " + out);
    f << "# " << group << " by " << to_string(c->method) << "\n" << set.str();
  }
  return kOk;
}

int cmd_gen16(const std::string& out) {
  if (out.empty()) {
    write_catalog(std::cout, builtin_order16_catalog());
  } else {
    std::ofstream f(out);
    require(f.good(), Errc::invalid_argument, "cannot write " + out);
    write_catalog(f, builtin_order16_catalog());
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hadamard difference sets in 2-groups"};
  app.require_subcommand(1);

  std::string catalog, out, stages, fixture_dir, group, set_path, orders, emit, method, records;
  std::size_t order = 0, jobs = 1;
  int d = 0;

  auto* classify = app.add_subcommand("classify", "run the construction pipeline on a catalog");
  classify->add_option("--catalog", catalog, "catalog file, or builtin16")->required();
  classify->add_option("--order", order, "group order to classify")->required();
  classify->add_option("--out", out, "record file")->required();
  classify->add_option("--stages", stages, "comma list: exclusion,main,corollaries,pta,fixture,transfer or 1-6");
  classify->add_option("--jobs", jobs, "worker threads (HFORGE_JOBS overrides)");
  classify->add_option("--fixtures", fixture_dir, "fixture directory");

  auto* check = app.add_subcommand("check-records", "reload and re-verify a record file");
  check->add_option("--catalog", catalog, "catalog file, or builtin16")->required();
  check->add_option("--records", records, "record file")->required();

  auto* verify = app.add_subcommand("verify-ds", "check a +-1 function or subset against DD^(-1) = |G|");
  verify->add_option("--group", group, "catalog id or builder expression")->required();
  verify->add_option("--set", set_path, "set file")->required();
  verify->add_option("--catalog", catalog, "catalog used to resolve ids");

  auto* sigset = app.add_subcommand("sigset", "abelian signature set for an order tuple");
  sigset->add_option("--orders", orders, "a1,a2,...")->required();
  sigset->add_option("--d", d, "d with |G| = 2^{2d+2}")->required();
  sigset->add_option("--emit", emit, "write the set as JSON");

  auto* exclude = app.add_subcommand("exclude", "list groups ruled out by Turyn or Dillon");
  exclude->add_option("--catalog", catalog, "catalog file, or builtin16")->required();

  auto* construct = app.add_subcommand("construct", "build one difference set by a named method");
  construct->add_option("--group", group, "catalog id, fixture name or builder expression")->required();
  construct->add_option("--method", method,
                        "main, hds-c2, pta-sig, quaternion, sig-product, pta-product, fixture")
      ->required();
  construct->add_option("--catalog", catalog, "catalog used to resolve ids");
  construct->add_option("--out", out, "write the -1 positions here");

  auto* cat = app.add_subcommand("catalog", "catalog utilities");
  cat->require_subcommand(1);
  auto* gen16 = cat->add_subcommand("gen16", "emit the built-in order-16 catalog");
  gen16->add_option("--out", out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*classify) return cmd_classify(catalog, order, out, stages, jobs, fixture_dir);
    if (*check) return cmd_check_records(catalog, records);
    if (*verify) return cmd_verify_ds(group, set_path, catalog);
    if (*sigset) return cmd_sigset(orders, d, emit);
    if (*exclude) return cmd_exclude(catalog);
    if (*construct) return cmd_construct(group, method, catalog, out);
    if (*gen16) return cmd_gen16(out);
  } catch (const Error& e) {
    std::cerr << "hforge: " << to_string(e.code()) << ": " << e.what() << "\n";
    switch (e.code()) {
      case Errc::parse:
      case Errc::invalid_argument:
      case Errc::group_axiom: return kUsage;
      default: return kDomainFailure;
    }
  } catch (const std::exception& e) {
    std::cerr << "hforge: " << e.what() << "\n";
    return kDomainFailure;
  }
  return kUsage;
}
