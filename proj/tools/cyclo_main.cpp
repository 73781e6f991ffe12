// Command-line front end for the cyclo shared library. All functionality is
// reached through the C API in cyclo.h; this file only parses flags and
// formats reports.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclo.h"

namespace {

using Json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnknown = 3;

struct Options {
  bool json = false;
  uint64_t seed = 0;  // reserved for randomized subcommands; 0 by default
  int64_t scheme_cap = 4;
  int64_t arrow_bound = 8;
  int64_t index_bound = -1;    // defaults to arrow bound
  int64_t witness_depth = -1;  // defaults to arrow bound
};

[[noreturn]] void die(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  std::exit(kExitUsage);
}

void check_status(cyclo_status status) {
  if (status != CYCLO_OK) die(cyclo_last_error());
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  cyclo_string_free(s);
  return out;
}

std::vector<cyclo_arrow> parse_loop_arg(int64_t n, const std::string& text) {
  std::vector<cyclo_arrow> arrows(256);
  size_t len = 0;
  check_status(cyclo_loop_parse(n, text.c_str(), arrows.data(), arrows.size(), &len));
  arrows.resize(len);
  return arrows;
}

std::string arrow_str(cyclo_arrow a) {
  return std::to_string(a.disp) + "@" + std::to_string(a.src);
}

Json arrow_json(cyclo_arrow a) { return Json{{"src", a.src}, {"disp", a.disp}}; }

void emit(const Options& opt, const Json& machine, const std::string& human) {
  if (opt.json)
    std::cout << machine.dump(2) << "\n";
  else
    std::cout << human;
}

cyclo_bounds bounds_of(const Options& opt) {
  return cyclo_bounds{opt.arrow_bound,
                      opt.index_bound >= 0 ? opt.index_bound : opt.arrow_bound,
                      opt.witness_depth >= 0 ? opt.witness_depth : opt.arrow_bound};
}

struct SubgroupHandle {
  cyclo_subgroup* h = nullptr;
  ~SubgroupHandle() { cyclo_subgroup_free(h); }
};

int run_check(const Options& opt, const std::string& theory, const std::string& corpus_file,
              const std::string& sequent_text, int64_t model, int64_t n_max,
              const std::string& heights, const std::string& scale) {
  std::vector<std::pair<std::string, cyclo_sequent*>> sequents;
  bool group_signature = false;
  cyclo_theory* th = nullptr;
  if (!sequent_text.empty()) {
    cyclo_sequent* s = nullptr;
    check_status(cyclo_sequent_parse(sequent_text.c_str(), &s));
    sequents.emplace_back("sequent", s);
    group_signature = sequent_text.find(":G") != std::string::npos;
  } else {
    if (!theory.empty())
      check_status(cyclo_theory_builtin(theory.c_str(), opt.scheme_cap, &th));
    else if (!corpus_file.empty())
      check_status(cyclo_theory_from_file(corpus_file.c_str(), &th));
    else
      die("check needs --theory, --corpus or --sequent");
    int is_group = 0;
    check_status(cyclo_theory_is_group(th, &is_group));
    group_signature = is_group != 0;
    for (size_t i = 0; i < cyclo_theory_size(th); ++i) {
      cyclo_sequent* s = nullptr;
      check_status(cyclo_theory_sequent(th, i, &s));
      sequents.emplace_back("", s);
    }
  }

  std::vector<std::pair<std::string, cyclo_structure*>> structures;
  if (group_signature) {
    cyclo_structure* st = nullptr;
    check_status(cyclo_structure_subgroup(heights.c_str(),
                                          scale.empty() ? nullptr : scale.c_str(), &st));
    structures.emplace_back(heights.empty() ? "Z" : "H(" + heights + ")", st);
  } else if (model > 0) {
    cyclo_structure* st = nullptr;
    check_status(cyclo_structure_groupoid(model, &st));
    structures.emplace_back("X_" + std::to_string(model), st);
  } else {
    const int64_t cap = n_max > 0 ? n_max : 3;
    for (int64_t n = 1; n <= cap; ++n) {
      cyclo_structure* st = nullptr;
      check_status(cyclo_structure_groupoid(n, &st));
      structures.emplace_back("X_" + std::to_string(n), st);
    }
  }

  Json report = Json::array();
  int worst = kExitOk;
  for (const auto& [model_name, st] : structures) {
    for (const auto& [unused, seq] : sequents) {
      char* verdict_json = nullptr;
      const cyclo_status status = cyclo_check_sequent(st, seq, bounds_of(opt), &verdict_json);
      check_status(status);
      Json v = Json::parse(take_string(verdict_json));
      v["model"] = model_name;
      const std::string verdict = v["verdict"].get<std::string>();
      if (verdict == "Fails")
        worst = std::max(worst, kExitCounterexample);
      else if (verdict == "UnknownAtBound")
        worst = std::max(worst, kExitUnknown);
      if (!opt.json) {
        std::printf("%-14s %-16s %s\n", model_name.c_str(), verdict.c_str(),
                    v["label"].get<std::string>().c_str());
        if (v.contains("counterexample"))
          std::printf("  counterexample: %s (reverified: %s)\n",
                      v["counterexample"].dump().c_str(),
                      v["reverified"].get<bool>() ? "yes" : "no");
      }
      report.push_back(std::move(v));
    }
  }
  if (opt.json) std::cout << report.dump(2) << "\n";
  for (auto& [name, st] : structures) cyclo_structure_free(st);
  for (auto& [name, s] : sequents) cyclo_sequent_free(s);
  cyclo_theory_free(th);
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite cyclic/epicyclic models, their geometric theories, and ordered "
               "subgroups of Q"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "machine-readable output");
  app.add_option("--seed", opt.seed, "seed for randomized subcommands (default 0)");
  app.add_option("--scheme-cap", opt.scheme_cap, "axiom-scheme instantiation cap")
      ->check(CLI::Range(int64_t{1}, int64_t{6}));
  app.add_option("--arrow-bound", opt.arrow_bound, "universal |disp| window");
  app.add_option("--index-bound", opt.index_bound, "bound for indexed disjunctions");
  app.add_option("--witness-depth", opt.witness_depth, "existential search window");

  int64_t n = 1, from_obj = 0, to_obj = 0, obj = 0, hom_from = 1, hom_to = 1, max_degree = 1;
  std::string arrow_text, loop_text, x_text, y_text, mode = "epicyclic", perm_text;
  bool lenient = false, count_only = false, inclusion = false;

  auto* model_cmd = app.add_subcommand("model", "construct models");
  auto* model_new = model_cmd->add_subcommand("new", "the model X_n");
  model_new->add_option("--n", n, "number of objects")->required();
  auto* model_perm = model_cmd->add_subcommand("from-perm", "models from a permutation");
  model_perm->add_option("--perm", perm_text, "image list, e.g. 1,2,0")->required();
  model_perm->add_flag("--lenient", lenient, "decompose non-transitive actions into orbits");

  auto* fact = app.add_subcommand("factorize", "canonical factorization of an arrow");
  fact->add_option("--n", n)->required();
  fact->add_option("--arrow", arrow_text, "arrow literal disp@src")->required();

  auto* pmin_cmd = app.add_subcommand("pmin", "minimal positive arrow between objects");
  pmin_cmd->add_option("--n", n)->required();
  pmin_cmd->add_option("--from", from_obj)->required();
  pmin_cmd->add_option("--to", to_obj)->required();

  auto* mingen = app.add_subcommand("mingen", "minimal generator of two loops");
  mingen->add_option("--n", n)->required();
  mingen->add_option("--x", x_text, "first loop (comma-separated arrows)")->required();
  mingen->add_option("--y", y_text, "second loop")->required();
  mingen->add_option("--mode", mode)->check(CLI::IsMember({"epicyclic", "cyclic"}));

  auto* insert = app.add_subcommand("insert", "split an elementary cycle at an object");
  insert->add_option("--n", n)->required();
  insert->add_option("--loop", loop_text)->required();
  insert->add_option("--object", obj)->required();

  auto* homs = app.add_subcommand("homs", "enumerate morphisms X_n -> X_m");
  homs->add_option("--from", hom_from)->required();
  homs->add_option("--to", hom_to)->required();
  homs->add_option("--max-degree", max_degree);
  homs->add_flag("--count", count_only, "print only the count");
  homs->add_flag("--check-inclusion", inclusion,
                 "compare degree-1 morphisms with brute-forced cyclic maps");

  std::string first_json, then_json, morphism_json;
  auto* compose_cmd = app.add_subcommand("compose", "compose two morphisms");
  compose_cmd->add_option("--first", first_json, "morphism JSON applied first")->required();
  compose_cmd->add_option("--then", then_json, "morphism JSON applied second")->required();

  auto* modfun = app.add_subcommand("modfun", "degree of a morphism");
  modfun->add_option("--morphism", morphism_json)->required();

  std::string theory, corpus_file, sequent_text, heights, scale;
  int64_t model_n = 0, n_max = 0;
  auto* check_cmd = app.add_subcommand("check", "check sequents on models");
  check_cmd->add_option("--theory", theory, "built-in theory name");
  check_cmd->add_option("--corpus", corpus_file, "corpus .geo file");
  check_cmd->add_option("--sequent", sequent_text, "one sequent in the DSL");
  check_cmd->add_option("--model", model_n, "check on X_n only");
  check_cmd->add_option("--n-max", n_max, "check on X_1..X_n");
  check_cmd->add_option("--heights", heights, "subgroup heights, e.g. 2:inf,3:1");
  check_cmd->add_option("--scale", scale, "subgroup scale p/q");

  std::string parse_text, parse_file;
  auto* parse_cmd = app.add_subcommand("parse", "parse a sequent and print it back");
  parse_cmd->add_option("--text", parse_text);
  parse_cmd->add_option("--file", parse_file);

  std::string q_x, q_y, q_value, diagram_text;
  auto* q = app.add_subcommand("q", "ordered subgroups of Q");
  auto* q_common = q->add_subcommand("common-gen", "common generator of two members");
  q_common->add_option("--heights", heights);
  q_common->add_option("--scale", scale);
  q_common->add_option("--x", q_x)->required();
  q_common->add_option("--y", q_y)->required();
  auto* q_colimit = q->add_subcommand("colimit", "cocone of a diagram in N*");
  q_colimit->add_option("--diagram", diagram_text, "chain:2,3 or diagram JSON")->required();
  auto* q_contains = q->add_subcommand("contains", "membership test");
  q_contains->add_option("--heights", heights);
  q_contains->add_option("--scale", scale);
  q_contains->add_option("--value", q_value)->required();
  auto* q_arch = q->add_subcommand("archimedean", "least N with x <= N*y");
  q_arch->add_option("--heights", heights);
  q_arch->add_option("--scale", scale);
  q_arch->add_option("--x", q_x)->required();
  q_arch->add_option("--y", q_y)->required();

  std::string format = "dot", export_morphism;
  std::vector<std::string> highlight_loops;
  auto* export_cmd = app.add_subcommand("export", "export a model or morphism");
  export_cmd->add_option("--model", model_n, "model X_n");
  export_cmd->add_option("--morphism", export_morphism, "morphism JSON");
  export_cmd->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));
  export_cmd->add_option("--loop", highlight_loops, "loop to highlight (repeatable)");

  // let the global flags appear after a subcommand
  const auto allow_fallthrough = [](CLI::App* cmd, auto&& self) -> void {
    for (CLI::App* sub : cmd->get_subcommands({})) {
      sub->fallthrough(true);
      self(sub, self);
    }
  };
  allow_fallthrough(&app, allow_fallthrough);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const auto subgroup = [&]() {
    auto h = std::make_unique<SubgroupHandle>();
    check_status(cyclo_subgroup_new(heights.c_str(), scale.empty() ? nullptr : scale.c_str(),
                                    &h->h));
    return h;
  };

  if (model_new->parsed()) {
    char* json = nullptr;
    check_status(cyclo_groupoid_json(n, &json));
    emit(opt, Json::parse(take_string(json)),
         "X_" + std::to_string(n) + ": objects 0.." + std::to_string(n - 1) + "\n");
    return kExitOk;
  }
  if (model_perm->parsed()) {
    std::vector<int64_t> image;
    for (size_t pos = 0; pos <= perm_text.size();) {
      const size_t comma = perm_text.find(',', pos);
      const std::string item =
          perm_text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      if (!item.empty()) {
        try {
          image.push_back(std::stoll(item));
        } catch (const std::exception&) {
          die("bad permutation entry '" + item + "'");
        }
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    char* json = nullptr;
    check_status(cyclo_from_permutation(image.data(), image.size(), lenient ? 0 : 1, &json));
    const Json j = Json::parse(take_string(json));
    std::string human;
    for (const auto& orbit : j["orbits"]) {
      human += "X_" + std::to_string(orbit["n"].get<int64_t>()) + " from walk [";
      for (size_t i = 0; i < orbit["walk"].size(); ++i)
        human += (i ? " " : "") + std::to_string(orbit["walk"][i].get<int64_t>());
      human += "]\n";
    }
    emit(opt, j, human);
    return kExitOk;
  }
  if (fact->parsed()) {
    cyclo_arrow f;
    check_status(cyclo_arrow_parse(n, arrow_text.c_str(), &f));
    int64_t c = 0, b = 0;
    check_status(cyclo_factorize(n, f, &c, &b));
    Json j{{"arrow", arrow_json(f)}, {"base_path", c}, {"winding", b}};
    std::string human = arrow_text + " = path of length " + std::to_string(c) + " + " +
                        std::to_string(b) + " full turns\n";
    if (f.disp >= 0) {
      cyclo_arrow alpha;
      int64_t w = 0;
      check_status(cyclo_factor_through_cycle(n, f, &alpha, &w));
      j["alpha"] = arrow_json(alpha);
      j["cycle_winding"] = w;
      human += "  = " + arrow_str(alpha) + " o C^" + std::to_string(w) + "\n";
    }
    emit(opt, j, human);
    return kExitOk;
  }
  if (pmin_cmd->parsed()) {
    cyclo_arrow out;
    check_status(cyclo_pmin(n, from_obj, to_obj, &out));
    emit(opt, arrow_json(out), arrow_str(out) + "\n");
    return kExitOk;
  }
  if (mingen->parsed()) {
    const auto x = parse_loop_arg(n, x_text);
    const auto y = parse_loop_arg(n, y_text);
    char* json = nullptr;
    check_status(cyclo_minimal_generator(n, x.data(), x.size(), y.data(), y.size(),
                                         mode == "cyclic" ? 1 : 0, &json));
    const Json j = Json::parse(take_string(json));
    std::string human = "z =";
    for (const auto& a : j["z"])
      human += " " + std::to_string(a["disp"].get<int64_t>()) + "@" +
               std::to_string(a["src"].get<int64_t>());
    human += "\nwitness: " + j["witness"].dump() + "\n";
    emit(opt, j, human);
    return kExitOk;
  }
  if (insert->parsed()) {
    const auto x = parse_loop_arg(n, loop_text);
    int64_t index = 0;
    cyclo_arrow alpha, beta;
    check_status(cyclo_insert_object(n, x.data(), x.size(), obj, &index, &alpha, &beta));
    emit(opt,
         Json{{"index", index}, {"alpha", arrow_json(alpha)}, {"beta", arrow_json(beta)}},
         "i=" + std::to_string(index) + " alpha=" + arrow_str(alpha) +
             " beta=" + arrow_str(beta) + "\n");
    return kExitOk;
  }
  if (homs->parsed()) {
    if (inclusion) {
      char* json = nullptr;
      check_status(cyclo_check_inclusion(hom_from, hom_to, &json));
      const Json j = Json::parse(take_string(json));
      emit(opt, j,
           std::string(j["pass"].get<bool>() ? "pass" : "FAIL") + ": degree-1 count " +
               std::to_string(j["degree_one"].get<int64_t>()) + ", cyclic functors " +
               std::to_string(j["cyclic_functors"].get<int64_t>()) + "\n");
      return j["pass"].get<bool>() ? kExitOk : kExitCounterexample;
    }
    cyclo_morphism_list* list = nullptr;
    check_status(cyclo_enumerate_homs(hom_from, hom_to, max_degree, &list));
    const size_t total = cyclo_morphism_list_size(list);
    if (count_only) {
      emit(opt, Json{{"count", total}}, std::to_string(total) + "\n");
      cyclo_morphism_list_free(list);
      return kExitOk;
    }
    Json arr = Json::array();
    std::string human;
    for (size_t i = 0; i < total; ++i) {
      char* json = nullptr;
      check_status(cyclo_morphism_to_json(cyclo_morphism_list_get(list, i), &json));
      const std::string text = take_string(json);
      arr.push_back(Json::parse(text));
      human += text + "\n";
    }
    cyclo_morphism_list_free(list);
    emit(opt, arr, human);
    return kExitOk;
  }
  if (compose_cmd->parsed()) {
    cyclo_morphism *h1 = nullptr, *h2 = nullptr, *h = nullptr;
    check_status(cyclo_morphism_from_json(first_json.c_str(), &h1));
    check_status(cyclo_morphism_from_json(then_json.c_str(), &h2));
    check_status(cyclo_morphism_compose(h2, h1, &h));
    char* json = nullptr;
    check_status(cyclo_morphism_to_json(h, &json));
    const std::string text = take_string(json);
    emit(opt, Json::parse(text), text + "\n");
    cyclo_morphism_free(h1);
    cyclo_morphism_free(h2);
    cyclo_morphism_free(h);
    return kExitOk;
  }
  if (modfun->parsed()) {
    cyclo_morphism* h = nullptr;
    check_status(cyclo_morphism_from_json(morphism_json.c_str(), &h));
    int64_t degree = 0;
    check_status(cyclo_morphism_mod(h, &degree));
    cyclo_morphism_free(h);
    emit(opt, Json{{"mod", degree}}, std::to_string(degree) + "\n");
    return kExitOk;
  }
  if (check_cmd->parsed())
    return run_check(opt, theory, corpus_file, sequent_text, model_n, n_max, heights, scale);
  if (parse_cmd->parsed()) {
    std::string text = parse_text;
    if (!parse_file.empty()) {
      std::ifstream in(parse_file);
      if (!in.good()) die("cannot read " + parse_file);
      std::ostringstream buf;
      buf << in.rdbuf();
      text = buf.str();
    }
    if (text.empty()) die("parse needs --text or --file");
    cyclo_sequent* s = nullptr;
    check_status(cyclo_sequent_parse(text.c_str(), &s));
    char* printed = nullptr;
    check_status(cyclo_sequent_print(s, &printed));
    cyclo_sequent_free(s);
    const std::string out = take_string(printed);
    emit(opt, Json{{"sequent", out}}, out + "\n");
    return kExitOk;
  }
  if (q_common->parsed()) {
    auto h = subgroup();
    char* z = nullptr;
    int64_t nn = 0, mm = 0;
    check_status(cyclo_common_generator(h->h, q_x.c_str(), q_y.c_str(), &z, &nn, &mm));
    const std::string zs = take_string(z);
    emit(opt, Json{{"z", zs}, {"n", nn}, {"m", mm}},
         "z=" + zs + " n=" + std::to_string(nn) + " m=" + std::to_string(mm) + "\n");
    return kExitOk;
  }
  if (q_colimit->parsed()) {
    cyclo_diagram* d = nullptr;
    check_status(cyclo_diagram_parse(diagram_text.c_str(), &d));
    char* json = nullptr;
    check_status(cyclo_colimit_cocone(d, &json));
    cyclo_diagram_free(d);
    const Json j = Json::parse(take_string(json));
    std::string human = "cocone:";
    for (const auto& v : j["cocone"]) human += " " + v.get<std::string>();
    emit(opt, j, human + "\n");
    return kExitOk;
  }
  if (q_contains->parsed()) {
    auto h = subgroup();
    int member = 0;
    check_status(cyclo_subgroup_contains(h->h, q_value.c_str(), &member));
    emit(opt, Json{{"value", q_value}, {"contains", member != 0}},
         std::string(member ? "true" : "false") + "\n");
    return kExitOk;
  }
  if (q_arch->parsed()) {
    auto h = subgroup();
    int64_t least = 0;
    check_status(cyclo_archimedean_witness(h->h, q_x.c_str(), q_y.c_str(), &least));
    emit(opt, Json{{"n", least}}, std::to_string(least) + "\n");
    return kExitOk;
  }
  if (export_cmd->parsed()) {
    if (!export_morphism.empty()) {
      cyclo_morphism* h = nullptr;
      check_status(cyclo_morphism_from_json(export_morphism.c_str(), &h));
      char* json = nullptr;
      check_status(cyclo_morphism_to_json(h, &json));
      cyclo_morphism_free(h);
      const std::string text = take_string(json);
      std::cout << text << "\n";
      return kExitOk;
    }
    if (model_n <= 0) die("export needs --model or --morphism");
    if (format == "json") {
      char* json = nullptr;
      check_status(cyclo_groupoid_json(model_n, &json));
      std::cout << take_string(json) << "\n";
      return kExitOk;
    }
    std::string joined;
    for (const std::string& l : highlight_loops) joined += (joined.empty() ? "" : ";") + l;
    char* dot = nullptr;
    check_status(
        cyclo_export_groupoid_dot(model_n, joined.empty() ? nullptr : joined.c_str(), &dot));
    std::cout << take_string(dot);
    return kExitOk;
  }
  die("no subcommand matched");
}
