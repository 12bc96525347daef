#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cgt/catalog.hpp"
#include "cgt/verify.hpp"

using cgt::i64;
using nlohmann::json;

namespace {

std::string cache_dir_from_env() {
  const char* dir = std::getenv("CHAINGROUP_CACHE_DIR");
  return dir == nullptr ? std::string{} : std::string{dir};
}

// "2..12" or "2,3,5"
std::vector<i64> parse_moduli(const std::string& text) {
  std::vector<i64> out;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    const i64 lo = std::stoll(text.substr(0, dots));
    const i64 hi = std::stoll(text.substr(dots + 2));
    if (lo < 1 || hi < lo) cgt::fail(cgt::ErrorKind::Input, "bad moduli range: " + text);
    for (i64 m = lo; m <= hi; ++m) out.push_back(m);
    return out;
  }
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const i64 m = std::stoll(text.substr(pos, comma - pos));
    if (m < 1) cgt::fail(cgt::ErrorKind::Input, "moduli must be >= 1");
    out.push_back(m);
    pos = comma + 1;
  }
  if (out.empty()) cgt::fail(cgt::ErrorKind::Input, "empty moduli list");
  return out;
}

json group_summary(const cgt::GroupAnalysis& A) {
  return json{{"name", A.group.name},
              {"order", A.group.order()},
              {"degree", A.group.degree},
              {"num_classes", A.classes.count()},
              {"exponent", A.table.exponent},
              {"center_order", A.center.subgroup_order()}};
}

json c0_labels(const cgt::FusionRing& F) {
  json out = json::array();
  for (int i : cgt::compute_C0(F)) out.push_back(F.labels[static_cast<std::size_t>(i)]);
  return out;
}

void print_statements_text(const cgt::VerificationReport& report) {
  for (const auto& s : report.statements) {
    if (!s.applicable)
      std::cout << "  [ n/a] " << s.id << "\n";
    else
      std::cout << (s.pass ? "  [pass] " : "  [FAIL] ") << s.id << "  ("
                << static_cast<long>(s.seconds * 1e6) << "us)\n";
    if (s.applicable && !s.pass && !s.witness.is_null())
      std::cout << "         witness: " << s.witness.dump() << "\n";
  }
}

int run_analyze_group(const std::string& spec, const std::vector<i64>& moduli, i64 max_order,
                      bool json_output) {
  cgt::AnalysisOptions opt;
  opt.order_bound = max_order;
  opt.cache_dir = cache_dir_from_env();
  cgt::GroupAnalysis A = cgt::analyze_group(cgt::group_from_spec_string(spec, max_order), opt);
  cgt::VerificationReport verification = cgt::verify_group(A, moduli);

  if (json_output) {
    json report{{"input", A.group.spec},
                {"group", group_summary(A)},
                {"prime", A.table.p},
                {"zeta", A.table.zeta},
                {"labels", A.ring.labels},
                {"degrees", A.ring.degrees},
                {"chain", cgt::presentation_report_json(A.chain, &A.chain_classes, std::nullopt)},
                {"center", cgt::center_report_json(A.center, A.rG, A.ring, A.ab_dual)},
                {"c0", c0_labels(A.ring)},
                {"moduli", moduli},
                {"verification", verification.to_json()}};
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << "group " << A.group.name << "  order " << A.group.order() << "  classes "
              << A.classes.count() << "  p=" << A.table.p << "\n";
    std::cout << "chain group invariant factors: " << json(A.chain.invariant_factors).dump()
              << "  (" << A.chain_classes.class_count << " chain classes)\n";
    std::cout << "center invariants: " << json(A.center.invariant_factors).dump()
              << "  abelianization dual: " << json(A.ab_dual).dump() << "\n";
    std::cout << "verification:\n";
    print_statements_text(verification);
  }
  return verification.all_passed() ? 0 : 1;
}

int run_analyze_fusion(const std::string& path, const std::vector<i64>& moduli, bool json_output) {
  cgt::FusionRing F = cgt::fusion_from_file(path);
  cgt::ChainGroupPresentation chain = cgt::chain_group_snf(F);
  const cgt::ChainClassPartition* part_ptr = nullptr;
  cgt::ChainClassPartition part;
  if (F.commutative) {
    part = cgt::chain_equivalence_classes(F);
    part_ptr = &part;
  }
  cgt::VerificationReport verification =
      F.commutative ? cgt::verify_fusion_ring_statements(F, chain, part, moduli)
                    : cgt::VerificationReport{};
  if (!F.commutative) {
    verification.subject = "fusion-ring";
    cgt::StatementResult R{.id = "definition_equivalence"};
    R.applicable = false;
    R.witness = json{{"reason", "ring is not commutative; class group law undefined"}};
    verification.statements.push_back(std::move(R));
  }

  if (json_output) {
    json report{{"input", path},
                {"labels", F.labels},
                {"chain", cgt::presentation_report_json(chain, part_ptr, std::nullopt)},
                {"c0", c0_labels(F)},
                {"moduli", moduli},
                {"verification", verification.to_json()}};
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << "fusion ring from " << path << "  rank " << F.rank() << "\n";
    std::cout << "chain group invariant factors: " << json(chain.invariant_factors).dump()
              << "  free rank " << chain.free_rank << "\n";
    std::cout << "verification:\n";
    print_statements_text(verification);
  }
  return verification.all_passed() ? 0 : 1;
}

int run_verify_all(i64 max_order, const std::vector<i64>& moduli, bool json_output) {
  const auto& catalog = cgt::builtin_catalog();
  std::vector<const cgt::CatalogEntry*> selected;
  for (const auto& e : catalog)
    if (e.order <= max_order) selected.push_back(&e);

  struct EntryResult {
    std::string name;
    i64 order = 0;
    bool ok = false;
    std::string error;
    std::vector<i64> chain_factors;
    json verification;
  };
  std::vector<EntryResult> results(selected.size());
  std::map<std::string, std::vector<i64>> factors_by_name;

  const std::string cache_dir = cache_dir_from_env();
#pragma omp parallel for schedule(dynamic)
  for (std::size_t t = 0; t < selected.size(); ++t) {
    EntryResult& R = results[t];
    R.name = selected[t]->name;
    R.order = selected[t]->order;
    try {
      cgt::AnalysisOptions opt;
      opt.cache_dir = cache_dir;
      cgt::GroupAnalysis A = cgt::analyze_group(cgt::group_from_json(selected[t]->spec), opt);
      cgt::VerificationReport report = cgt::verify_group(A, moduli);
      R.ok = report.all_passed();
      R.chain_factors = A.chain.invariant_factors;
      R.verification = report.to_json();
    } catch (const std::exception& e) {
      R.ok = false;
      R.error = e.what();
    }
  }
  for (const auto& R : results) factors_by_name[R.name] = R.chain_factors;

  // Side-by-side dihedral(4l) vs dicyclic(2l), common order 8l.
  json dq = json::array();
  bool dq_all_match = true;
  for (const auto& pair : cgt::dq_pairs()) {
    if (pair.dihedral.order > max_order) continue;
    const auto di = factors_by_name.find(pair.dihedral.name);
    const auto qi = factors_by_name.find(pair.dicyclic.name);
    if (di == factors_by_name.end() || qi == factors_by_name.end()) continue;
    const bool match = di->second == qi->second;
    dq_all_match = dq_all_match && match;
    dq.push_back(json{{"l", pair.l},
                      {"order", pair.dihedral.order},
                      {"dihedral", json{{"name", pair.dihedral.name}, {"factors", di->second}}},
                      {"dicyclic", json{{"name", pair.dicyclic.name}, {"factors", qi->second}}},
                      {"match", match}});
  }

  int failures = 0;
  for (const auto& R : results)
    if (!R.ok) ++failures;
  if (!dq_all_match) ++failures;

  if (json_output) {
    json entries = json::array();
    for (const auto& R : results) {
      json e{{"group", R.name}, {"order", R.order}, {"all_passed", R.ok}};
      if (!R.error.empty()) e["error"] = R.error;
      if (!R.verification.is_null()) e["verification"] = R.verification;
      entries.push_back(std::move(e));
    }
    json report{{"max_order", max_order},
                {"entries", std::move(entries)},
                {"dq_pairs", std::move(dq)},
                {"failures", failures}};
    std::cout << report.dump(2) << "\n";
  } else {
    for (const auto& R : results) {
      std::cout << (R.ok ? "[pass] " : "[FAIL] ") << R.name << " (order " << R.order << ")"
                << "  C(G)=" << json(R.chain_factors).dump();
      if (!R.error.empty()) std::cout << "  error: " << R.error;
      std::cout << "\n";
    }
    for (const auto& e : dq)
      std::cout << "[d/q l=" << e.at("l") << "] " << e.at("dihedral").at("name").get<std::string>()
                << " vs " << e.at("dicyclic").at("name").get<std::string>() << ": "
                << (e.at("match").get<bool>() ? "factors match" : "FACTORS DIFFER") << "\n";
    std::cout << (failures == 0 ? "all entries passed" : "failures: " + std::to_string(failures))
              << "\n";
  }
  return failures == 0 ? 0 : 1;
}

int run_su2(i64 levels, bool json_output) {
  cgt::TruncationReport report = cgt::truncated_chain_group(cgt::su2_fusion_oracle(), levels);
  if (json_output) {
    json lv = json::array();
    for (const auto& L : report.levels) {
      json e = cgt::presentation_report_json(L.presentation, nullptr, std::nullopt);
      e["level"] = L.level;
      e["generators"] = L.presentation.generator_labels;
      lv.push_back(std::move(e));
    }
    json out{{"levels", std::move(lv)},
             {"stabilized", report.stabilized.has_value() ? json(*report.stabilized) : json(nullptr)}};
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& L : report.levels)
      std::cout << "level " << L.level << ": factors "
                << json(L.presentation.invariant_factors).dump() << " free rank "
                << L.presentation.free_rank << "\n";
    std::cout << "stabilized: "
              << (report.stabilized.has_value() ? (*report.stabilized ? "true" : "false") : "null")
              << "\n";
  }
  return 0;
}

int run_catalog_list() {
  for (const auto& e : cgt::builtin_catalog())
    std::cout << e.name << "  order " << e.order << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chain groups of finite groups and fusion rings"};
  app.require_subcommand(1);

  std::string group_spec, fusion_path, moduli_text = "2..12", format = "text";
  i64 max_order = cgt::kDefaultOrderBound, levels = 5;
  bool list_flag = false;

  auto* analyze = app.add_subcommand("analyze", "analyze one group or fusion-ring file");
  auto* g = analyze->add_option("--group", group_spec, "group spec (name:params or JSON)");
  auto* f = analyze->add_option("--fusion", fusion_path, "fusion ring JSON file");
  analyze->add_option("--moduli", moduli_text, "t-map moduli, e.g. 2..12 or 2,3,4");
  analyze->add_option("--max-order", max_order, "group order bound");
  analyze->add_option("--format", format, "text or json");
  g->excludes(f);

  auto* verify_all = app.add_subcommand("verify-all", "run the statement suite over the catalog");
  i64 va_max_order = 512;
  std::string va_moduli = "2..12", va_format = "text";
  verify_all->add_option("--max-order", va_max_order, "largest catalog order to include");
  verify_all->add_option("--moduli", va_moduli, "t-map moduli");
  verify_all->add_option("--format", va_format, "text or json");

  auto* su2 = app.add_subcommand("su2", "truncated chain groups of the SU(2) oracle");
  std::string su2_format = "text";
  su2->add_option("--levels", levels, "truncation levels")->required();
  su2->add_option("--format", su2_format, "text or json");

  auto* cat = app.add_subcommand("catalog", "list the built-in group catalog");
  cat->add_flag("--list", list_flag, "list catalog entries (default action)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) {
      if (group_spec.empty() == fusion_path.empty())
        cgt::fail(cgt::ErrorKind::Input, "analyze needs exactly one of --group / --fusion");
      const auto moduli = parse_moduli(moduli_text);
      const bool json_output = format == "json";
      return group_spec.empty() ? run_analyze_fusion(fusion_path, moduli, json_output)
                                : run_analyze_group(group_spec, moduli, max_order, json_output);
    }
    if (verify_all->parsed())
      return run_verify_all(va_max_order, parse_moduli(va_moduli), va_format == "json");
    if (su2->parsed()) return run_su2(levels, su2_format == "json");
    if (cat->parsed()) return run_catalog_list();
  } catch (const cgt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (!e.witness.empty()) std::cerr << "witness: " << e.witness << "\n";
    return (e.kind == cgt::ErrorKind::Input || e.kind == cgt::ErrorKind::Bound) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
