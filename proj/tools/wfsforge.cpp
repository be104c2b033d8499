#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "wfs/chaincat.hpp"
#include "wfs/ext.hpp"
#include "wfs/fixtures.hpp"
#include "wfs/modcat.hpp"
#include "wfs/modelstruct.hpp"

namespace {

using nlohmann::json;
using namespace wfs;

constexpr int kSchemaVersion = 1;

struct Config {
  std::string backend;
  std::string suite;
  std::string instance;  // builtin name or path
  int universe_bound = 0;  // 0 = from instance
  int headroom = 1;
  bool projective_shortcut = true;
  std::string format = "text";
  std::string out_path;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::map<std::string, const char*> kBuiltins = {
    {"finset3", R"({"backend":"finite-category","fixture":"finset","max_size":3})"},
    {"z4", R"({"backend":"modules","modulus":4,"max_factors":2,
               "candidates":[{"c":"projectives","f":"all"},
                             {"c":"all","f":"injectives"},
                             {"c":"all","f":"all"}]})"},
    {"z8", R"({"backend":"modules","modulus":8,"max_factors":1,
               "candidates":[{"c":"projectives","f":"all"},
                             {"c":"all","f":"injectives"},
                             {"c":"all","f":"all"}]})"},
    {"f2-chains", R"({"backend":"chains","modulus":2,"top_degree":2,"max_factors":1})"},
    {"z4-chains", R"({"backend":"chains","modulus":4,"top_degree":2,"max_factors":1})"},
};

json load_instance(const std::string& name) {
  auto it = kBuiltins.find(name);
  std::string text;
  if (it != kBuiltins.end()) {
    text = it->second;
  } else {
    std::ifstream in(name);
    if (!in) throw UsageError("instance not found: " + name);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError("instance " + name + ": " + e.what());
  }
}

std::string default_instance(const std::string& backend) {
  if (backend == "finite-category") return "finset3";
  if (backend == "modules") return "z4";
  if (backend == "chains") return "f2-chains";
  throw UsageError("unknown backend: " + backend);
}

[[noreturn]] void unsupported(const Config& cfg, const std::string& why = "") {
  std::string msg = "suite '" + cfg.suite + "' is not available for backend '" +
                    cfg.backend + "'";
  if (!why.empty()) msg += ": " + why;
  throw UsageError(msg);
}

ObjClass named_class(const ModCategory& cat, const json& j, const char* key) {
  std::string name = j.at(key).get<std::string>();
  return cat.object_class(name);
}

Report run_finite(const Config& cfg, const json& inst) {
  if (inst.contains("category")) {
    TableCategory cat = TableCategory::from_json(inst.at("category"));
    if (cfg.suite == "validate") return validate_category(cat);
    unsupported(cfg, "user-supplied finite categories support 'validate'");
  }
  int max_size = inst.value("max_size", 3);
  if (cfg.universe_bound > 0) max_size = cfg.universe_bound;
  FinSetData fs = build_finset(max_size);
  MorphismClass surj = fs.surjections();
  MorphismClass inj = fs.injections();
  CompatiblePair pair{{surj, inj}, {surj, inj}};

  if (cfg.suite == "validate") {
    Report r = validate_category(fs.cat);
    r.note("objects: " + std::to_string(fs.cat.num_objects()));
    r.note("morphisms: " + std::to_string(fs.cat.num_morphisms()));
    return r;
  }
  if (cfg.suite == "wfs") return check_wfs(fs.cat, {surj, inj});
  if (cfg.suite == "compat") return check_compatible(fs.cat, pair);
  if (cfg.suite == "theorem-c") return assemble_theorem_c(fs.cat, pair).report;
  if (cfg.suite == "frobenius") {
    // W = all maps, so the trivial cofibrations are the surjections
    return check_frobenius(fs.cat, surj, inj);
  }
  unsupported(cfg);
}

Report run_modules(const Config& cfg, const json& inst) {
  i64 modulus = inst.at("modulus").get<i64>();
  int bound = inst.value("max_factors", 2);
  if (cfg.universe_bound > 0) bound = cfg.universe_bound;
  ModCategory cat(modulus, bound);

  CotorsionCandidate p1{cat.object_class("all"), cat.object_class("injectives")};
  CotorsionCandidate p2{cat.object_class("projectives"), cat.object_class("all")};
  if (inst.contains("outer"))
    p1 = {named_class(cat, inst["outer"], "c"), named_class(cat, inst["outer"], "f")};
  if (inst.contains("inner"))
    p2 = {named_class(cat, inst["inner"], "c"), named_class(cat, inst["inner"], "f")};
  CompatiblePair pair{{cat.mon_class(p1.c_objs), cat.epi_class(p1.f_objs)},
                      {cat.mon_class(p2.c_objs), cat.epi_class(p2.f_objs)}};

  if (cfg.suite == "validate") {
    Report r = Report::pass("module universe coherence");
    for (int m = 0; m < cat.num_morphisms(); ++m) {
      if (cat.compose(m, cat.identity(cat.dom(m))) != m ||
          cat.compose(cat.identity(cat.cod(m)), m) != m)
        return Report::fail("identity law", {{"morphism", cat.morphism_name(m)}});
    }
    r.note("objects: " + std::to_string(cat.num_objects()));
    r.note("morphisms: " + std::to_string(cat.num_morphisms()));
    return r;
  }
  if (cfg.suite == "wfs") {
    Report r = Report::pass("induced weak factorization systems");
    r.absorb(check_wfs(cat, pair.outer, module_factor_fn(cat, p1)));
    r.absorb(check_wfs(cat, pair.inner, module_factor_fn(cat, p2)));
    return r;
  }
  if (cfg.suite == "compat") return check_compatible(cat, pair);
  if (cfg.suite == "theorem-a") {
    Report r = Report::pass("theorem-a candidates");
    for (const json& cj : inst.value("candidates", json::array())) {
      CotorsionCandidate cand{named_class(cat, cj, "c"), named_class(cat, cj, "f")};
      Report sub = theorem_a_harness(cat, cand);
      sub.note("candidate (" + cand.c_objs.name + ", " + cand.f_objs.name + ")");
      r.absorb(std::move(sub));
    }
    return r;
  }
  if (cfg.suite == "theorem-b") return theorem_b_harness(cat, p1, p2);
  if (cfg.suite == "theorem-c") {
    AssemblyResult res =
        assemble_theorem_c(cat, pair, module_factor_fn(cat, p1),
                           module_factor_fn(cat, p2), module_w_oracle(cat, p1, p2));
    if (res.model) {
      std::string wobj;
      for (int o = 0; o < cat.num_objects(); ++o) {
        ModMorphism from_zero(ModuleObj(modulus, {}), cat.object(o));
        if (res.model->w.contains(*cat.morphism_index(from_zero))) {
          if (!wobj.empty()) wobj += ", ";
          wobj += cat.object_name(o);
        }
      }
      res.report.note("W-objects: " + wobj);
    }
    return res.report;
  }
  if (cfg.suite == "gillespie-w") {
    auto [mono_desc, epi_desc] = gillespie_w_objects(cat, p1, p2);
    Report r = Report::pass("gillespie w-object descriptions");
    if (!(mono_desc == epi_desc)) {
      json mono_j = json::array(), epi_j = json::array();
      for (int o = 0; o < cat.num_objects(); ++o) {
        if (mono_desc.contains(o)) mono_j.push_back(cat.object_name(o));
        if (epi_desc.contains(o)) epi_j.push_back(cat.object_name(o));
      }
      return Report::fail("descriptions disagree",
                          {{"mono_description", mono_j}, {"epi_description", epi_j}});
    }
    std::string names;
    for (int o = 0; o < cat.num_objects(); ++o)
      if (mono_desc.contains(o)) {
        if (!names.empty()) names += ", ";
        names += cat.object_name(o);
      }
    r.note("both descriptions: " + names);
    r.absorb(check_thick(cat, mono_desc));
    return r;
  }
  if (cfg.suite == "frobenius")
    return check_frobenius(cat, pair.inner.left, pair.inner.right);
  unsupported(cfg);
}

Report run_chains(const Config& cfg, const json& inst) {
  if (inst.contains("components")) {
    // a single chain-complex instance: validate it and exercise the
    // cofibration / trivial fibration factorization of 0 -> Y
    ChainComplex y = ChainComplex::from_json(inst);
    if (cfg.suite != "validate")
      unsupported(cfg, "chain-complex instances support 'validate'");
    Report r = Report::pass("chain complex instance");
    r.note("complex " + y.name());
    ChainComplex zero{y.modulus, y.n,
                      std::vector<ModuleObj>(y.n + 1, ModuleObj(y.modulus, {})),
                      std::vector<ModMorphism>(
                          y.n, ModMorphism(ModuleObj(y.modulus, {}),
                                           ModuleObj(y.modulus, {})))};
    ChainFactorOutcome out = factor_cof_trivfib(
        zero_chain(zero, y), cfg.headroom, cfg.projective_shortcut);
    r.absorb(out.report);
    return r;
  }
  i64 modulus = inst.at("modulus").get<i64>();
  int n = inst.value("top_degree", 2);
  int bound = inst.value("max_factors", 1);
  if (cfg.universe_bound > 0) bound = cfg.universe_bound;
  ChainCategory cat(modulus, n, bound);

  if (cfg.suite == "validate") {
    Report r = Report::pass("chain universe coherence");
    for (int o = 0; o < cat.num_objects(); ++o)
      if (!cat.object(o).validate())
        return Report::fail("invalid complex", {{"object", cat.object_name(o)}});
    for (int m = 0; m < cat.num_morphisms(); ++m) {
      if (cat.compose(m, cat.identity(cat.dom(m))) != m ||
          cat.compose(cat.identity(cat.cod(m)), m) != m)
        return Report::fail("identity law", {{"morphism", cat.morphism_name(m)}});
    }
    r.note("complexes: " + std::to_string(cat.num_objects()));
    r.note("chain maps: " + std::to_string(cat.num_morphisms()));
    return r;
  }
  if (cfg.suite == "prop33") return prop33_suite(cat);
  if (cfg.suite == "frobenius") return chain_frobenius(cat);
  if (cfg.suite == "compat") {
    CompatiblePair pair{{cat.cofibrations(), cat.trivial_fibrations()},
                        {cat.trivial_cofibrations(), cat.fibrations()}};
    return check_compatible(cat, pair);
  }
  if (cfg.suite == "wfs")
    unsupported(cfg, "orthogonality is not decidable inside a truncated chain "
                     "universe; run 'prop33' instead");
  unsupported(cfg);
}

json run_to_envelope(const Config& cfg, Report* report_out = nullptr) {
  json inst = load_instance(cfg.instance);
  std::string backend = cfg.backend;
  if (backend.empty()) backend = inst.value("backend", "");
  if (backend.empty()) throw UsageError("no backend given and none in instance");
  if (inst.contains("backend") && !cfg.backend.empty() &&
      inst["backend"] != cfg.backend && !inst.contains("components"))
    throw UsageError("instance backend '" + inst["backend"].get<std::string>() +
                     "' does not match --backend " + cfg.backend);

  Report report;
  if (backend == "finite-category") report = run_finite(cfg, inst);
  else if (backend == "modules") report = run_modules(cfg, inst);
  else if (backend == "chains") report = run_chains(cfg, inst);
  else throw UsageError("unknown backend: " + backend);

  if (report_out) *report_out = report;
  return json{{"schema_version", kSchemaVersion},
              {"tool", "wfsforge"},
              {"backend", backend},
              {"suite", cfg.suite},
              {"instance", cfg.instance},
              {"universe_bound", cfg.universe_bound},
              {"headroom", cfg.headroom},
              {"projective_shortcut", cfg.projective_shortcut},
              {"verdict", verdict_name(report.verdict)},
              {"exit_code", exit_code_for(report.verdict)},
              {"report", report.to_json()}};
}

int replay(const std::string& report_path, const std::string& format,
           const std::string& out_path) {
  std::ifstream in(report_path);
  if (!in) throw UsageError("report not found: " + report_path);
  json stored;
  try {
    stored = json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("report parse: ") + e.what());
  }
  if (stored.value("schema_version", -1) != kSchemaVersion)
    throw UsageError("unsupported schema_version in " + report_path);
  Config cfg;
  cfg.backend = stored.at("backend").get<std::string>();
  cfg.suite = stored.at("suite").get<std::string>();
  cfg.instance = stored.at("instance").get<std::string>();
  cfg.universe_bound = stored.at("universe_bound").get<int>();
  cfg.headroom = stored.at("headroom").get<int>();
  cfg.projective_shortcut = stored.at("projective_shortcut").get<bool>();
  cfg.format = format;
  cfg.out_path = out_path;

  json fresh = run_to_envelope(cfg);
  bool identical = fresh.dump() == stored.dump();
  std::cout << "replay of " << report_path << ": verdict "
            << fresh["verdict"].get<std::string>() << ", report "
            << (identical ? "reproduced byte-identically" : "DIFFERS") << "\n";
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    out << fresh.dump(2) << "\n";
  }
  return identical ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification engine for compatible weak factorization systems"};
  app.require_subcommand(0, 1);

  Config cfg;
  app.add_option("--backend", cfg.backend,
                 "finite-category | modules | chains");
  app.add_option("--suite", cfg.suite,
                 "validate | wfs | compat | theorem-a | theorem-b | theorem-c | "
                 "gillespie-w | prop33 | frobenius");
  app.add_option("--instance", cfg.instance,
                 "instance file, or builtin: finset3, z4, z8, f2-chains, z4-chains");
  app.add_option("--universe-bound", cfg.universe_bound,
                 "override the instance's universe bound");
  app.add_option("--headroom", cfg.headroom,
                 "extra degrees for chain factorizations (default 1)");
  app.add_flag("!--no-projective-shortcut", cfg.projective_shortcut,
               "always build resolutions degreewise, even over semisimple rings");
  app.add_option("--format", cfg.format, "json | text")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", cfg.out_path, "also write the JSON report here");

  CLI::App* rp = app.add_subcommand("replay", "re-run a stored report and "
                                              "verify its witnesses reproduce");
  std::string report_path;
  rp->add_option("--report", report_path, "stored JSON report")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    if (rp->parsed()) return replay(report_path, cfg.format, cfg.out_path);
    if (cfg.suite.empty()) throw UsageError("--suite is required");
    if (cfg.instance.empty()) {
      if (cfg.backend.empty())
        throw UsageError("one of --backend or --instance is required");
      cfg.instance = default_instance(cfg.backend);
    }
    Report report;
    json envelope = run_to_envelope(cfg, &report);
    if (cfg.format == "json") {
      std::cout << envelope.dump(2) << "\n";
    } else {
      std::cout << "wfsforge " << envelope["backend"].get<std::string>() << "/"
                << cfg.suite << " on " << cfg.instance << "\n"
                << report.to_text() << "verdict: "
                << envelope["verdict"].get<std::string>() << "\n";
    }
    if (!cfg.out_path.empty()) {
      std::ofstream out(cfg.out_path);
      if (!out) throw UsageError("cannot write " + cfg.out_path);
      out << envelope.dump(2) << "\n";
    }
    return envelope["exit_code"].get<int>();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
