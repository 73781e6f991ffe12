#include "cyclo.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>

#include "export.hpp"
#include "json_io.hpp"
#include "logic/checker.hpp"
#include "logic/corpus.hpp"
#include "logic/macros.hpp"
#include "logic/parser.hpp"

using namespace cyclo;

extern "C" {
struct cyclo_morphism {
  Morphism h;
};
struct cyclo_morphism_list {
  std::vector<cyclo_morphism> items;
};
struct cyclo_sequent {
  logic::Sequent s;
};
struct cyclo_theory {
  logic::Theory t;
};
struct cyclo_structure {
  std::unique_ptr<logic::Structure> st;
};
struct cyclo_subgroup {
  Subgroup h;
};
struct cyclo_diagram {
  Diagram d;

  explicit cyclo_diagram(Diagram dd) : d(std::move(dd)) {}
};
}  // extern "C"

namespace {

thread_local std::string g_last_error;

cyclo_status map_code(Errc code) {
  switch (code) {
    case Errc::invalid_argument: return CYCLO_ERR_INVALID_ARGUMENT;
    case Errc::non_composable: return CYCLO_ERR_NON_COMPOSABLE;
    case Errc::model_mismatch: return CYCLO_ERR_MODEL_MISMATCH;
    case Errc::not_a_bijection: return CYCLO_ERR_NOT_A_BIJECTION;
    case Errc::not_transitive: return CYCLO_ERR_NOT_TRANSITIVE;
    case Errc::index_out_of_range: return CYCLO_ERR_INDEX_OUT_OF_RANGE;
    case Errc::precondition_violated: return CYCLO_ERR_PRECONDITION;
    case Errc::no_witness: return CYCLO_ERR_NO_WITNESS;
    case Errc::base_mismatch: return CYCLO_ERR_BASE_MISMATCH;
    case Errc::sum_mismatch: return CYCLO_ERR_SUM_MISMATCH;
    case Errc::nonpositive_degree: return CYCLO_ERR_NONPOSITIVE_DEGREE;
    case Errc::overflow: return CYCLO_ERR_OVERFLOW;
    case Errc::parse_error: return CYCLO_ERR_PARSE;
    case Errc::unknown_name: return CYCLO_ERR_UNKNOWN_NAME;
    case Errc::sort_mismatch: return CYCLO_ERR_SORT_MISMATCH;
    case Errc::signature_mismatch: return CYCLO_ERR_SIGNATURE_MISMATCH;
    case Errc::not_a_member: return CYCLO_ERR_NOT_A_MEMBER;
    case Errc::not_positive: return CYCLO_ERR_NOT_POSITIVE;
    case Errc::image_escapes_target: return CYCLO_ERR_IMAGE_ESCAPES;
    case Errc::inconsistent_diagram: return CYCLO_ERR_INCONSISTENT_DIAGRAM;
    case Errc::no_joint_bound: return CYCLO_ERR_NO_JOINT_BOUND;
    case Errc::io_error: return CYCLO_ERR_IO;
  }
  return CYCLO_ERR_INTERNAL;
}

template <typename Fn>
cyclo_status guard(Fn&& fn) {
  try {
    fn();
    return CYCLO_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CYCLO_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Arrow to_arrow(int64_t n, cyclo_arrow f) { return make_arrow(Groupoid{n}, f.src, f.disp); }

cyclo_arrow from_arrow(const Arrow& f) { return cyclo_arrow{f.src, f.disp}; }

Loop to_loop(int64_t n, const cyclo_arrow* arrows, size_t len) {
  require(arrows != nullptr && len > 0, Errc::invalid_argument, "empty loop");
  Loop out;
  for (size_t i = 0; i < len; ++i) out.push_back(to_arrow(n, arrows[i]));
  return out;
}

Subgroup make_subgroup(const char* heights, const char* scale) {
  return Subgroup(scale ? Rat::parse(scale) : Rat(1),
                  Subgroup::parse_heights(heights ? heights : ""));
}

}  // namespace

extern "C" {

const char* cyclo_version(void) { return "0.1.0"; }

const char* cyclo_last_error(void) { return g_last_error.c_str(); }

void cyclo_string_free(char* s) { std::free(s); }

/* -- groupoids -------------------------------------------------------------- */

cyclo_status cyclo_arrow_parse(int64_t n, const char* text, cyclo_arrow* out) {
  return guard([&] { *out = from_arrow(parse_arrow(Groupoid{n}, text)); });
}

cyclo_status cyclo_loop_parse(int64_t n, const char* text, cyclo_arrow* out, size_t cap,
                              size_t* len) {
  return guard([&] {
    const Loop loop = parse_loop(make_groupoid(n), text);
    require(loop.size() <= cap, Errc::invalid_argument, "loop literal exceeds the buffer");
    for (size_t i = 0; i < loop.size(); ++i) out[i] = from_arrow(loop[i]);
    *len = loop.size();
  });
}

cyclo_status cyclo_compose(int64_t n, cyclo_arrow g, cyclo_arrow f, cyclo_arrow* out) {
  return guard([&] { *out = from_arrow(compose(to_arrow(n, g), to_arrow(n, f))); });
}

cyclo_status cyclo_inverse(int64_t n, cyclo_arrow f, cyclo_arrow* out) {
  return guard([&] { *out = from_arrow(inverse(to_arrow(n, f))); });
}

cyclo_status cyclo_classify(int64_t n, cyclo_arrow f, uint32_t* flags) {
  return guard([&] {
    const ArrowClass c = classify(to_arrow(n, f));
    uint32_t v = 0;
    if (c.is_identity) v |= CYCLO_ARROW_IDENTITY;
    if (c.is_positive) v |= CYCLO_ARROW_POSITIVE;
    if (c.is_endo) v |= CYCLO_ARROW_ENDO;
    if (c.is_nontrivial) v |= CYCLO_ARROW_NONTRIVIAL;
    if (c.is_cycle) v |= CYCLO_ARROW_CYCLE;
    *flags = v;
  });
}

cyclo_status cyclo_factorize(int64_t n, cyclo_arrow f, int64_t* base_path, int64_t* winding) {
  return guard([&] {
    const Factorization fac = factorize_arrow(to_arrow(n, f));
    *base_path = fac.base_path_length;
    *winding = fac.winding;
  });
}

cyclo_status cyclo_pmin(int64_t n, int64_t from_obj, int64_t to_obj, cyclo_arrow* out) {
  return guard([&] { *out = from_arrow(pmin(make_groupoid(n), from_obj, to_obj)); });
}

cyclo_status cyclo_factor_through_cycle(int64_t n, cyclo_arrow f, cyclo_arrow* alpha,
                                        int64_t* winding) {
  return guard([&] {
    const CycleFactor cf = factor_through_cycle(to_arrow(n, f));
    *alpha = from_arrow(cf.alpha);
    *winding = cf.winding;
  });
}

cyclo_status cyclo_from_permutation(const int64_t* image, size_t len, int require_transitive,
                                    char** json) {
  return guard([&] {
    require(image != nullptr && len > 0, Errc::invalid_argument, "empty permutation");
    const auto orbits =
        from_permutation(std::vector<int64_t>(image, image + len), require_transitive != 0);
    Json arr = Json::array();
    for (const OrbitModel& o : orbits)
      arr.push_back(Json{{"n", o.model.n}, {"walk", o.walk}});
    *json = dup_string(Json{{"orbits", arr}}.dump());
  });
}

/* -- loops ------------------------------------------------------------------- */

cyclo_status cyclo_loop_classify(int64_t n, const cyclo_arrow* arrows, size_t len,
                                 uint32_t* flags, int64_t* total_disp) {
  return guard([&] {
    const LoopClass c = classify_loop(to_loop(n, arrows, len));
    uint32_t v = 0;
    if (c.is_loop) v |= CYCLO_LOOP_IS_LOOP;
    if (c.is_positive) v |= CYCLO_LOOP_POSITIVE;
    if (c.is_phi) v |= CYCLO_LOOP_PHI;
    if (c.is_psi) v |= CYCLO_LOOP_PSI;
    *flags = v;
    *total_disp = c.total_disp;
  });
}

cyclo_status cyclo_loop_composite(int64_t n, const cyclo_arrow* arrows, size_t len, int64_t i,
                                  cyclo_arrow* out) {
  return guard([&] { *out = from_arrow(loop_composite(to_loop(n, arrows, len), i)); });
}

cyclo_status cyclo_decompose(int64_t n, const cyclo_arrow* z, size_t zlen,
                             const cyclo_arrow* x, size_t xlen, const cyclo_arrow* y,
                             size_t ylen, int cyclic_mode, char** witness_json) {
  return guard([&] {
    std::optional<Loop> second;
    if (y != nullptr && ylen > 0) second = to_loop(n, y, ylen);
    const GenWitness w =
        decompose_against(to_loop(n, z, zlen), to_loop(n, x, xlen), second,
                          cyclic_mode ? GenMode::cyclic : GenMode::epicyclic);
    *witness_json = dup_string(to_json(w).dump());
  });
}

cyclo_status cyclo_minimal_generator(int64_t n, const cyclo_arrow* x, size_t xlen,
                                     const cyclo_arrow* y, size_t ylen, int cyclic_mode,
                                     char** json) {
  return guard([&] {
    const MinimalGenerator mg =
        minimal_generator(to_loop(n, x, xlen), to_loop(n, y, ylen),
                          cyclic_mode ? GenMode::cyclic : GenMode::epicyclic);
    *json = dup_string(Json{{"z", to_json(mg.z)}, {"witness", to_json(mg.witness)}}.dump());
  });
}

cyclo_status cyclo_insert_object(int64_t n, const cyclo_arrow* x, size_t len, int64_t obj,
                                 int64_t* index, cyclo_arrow* alpha, cyclo_arrow* beta) {
  return guard([&] {
    const InsertSplit s = insert_object(to_loop(n, x, len), obj);
    *index = s.index;
    *alpha = from_arrow(s.alpha);
    *beta = from_arrow(s.beta);
  });
}

/* -- morphisms ----------------------------------------------------------------- */

cyclo_status cyclo_morphism_new(int64_t src_n, int64_t dst_m, int64_t degree, int64_t base,
                                const int64_t* blocks, size_t len, cyclo_morphism** out) {
  return guard([&] {
    require(blocks != nullptr || len == 0, Errc::invalid_argument, "null blocks");
    *out = new cyclo_morphism{
        Morphism(src_n, dst_m, degree, base, std::vector<int64_t>(blocks, blocks + len))};
  });
}

cyclo_status cyclo_morphism_from_json(const char* json, cyclo_morphism** out) {
  return guard([&] {
    const Json j = Json::parse(json, nullptr, false);
    require(!j.is_discarded(), Errc::parse_error, "malformed morphism JSON");
    *out = new cyclo_morphism{morphism_from_json(j)};
  });
}

void cyclo_morphism_free(cyclo_morphism* h) { delete h; }

cyclo_status cyclo_morphism_to_json(const cyclo_morphism* h, char** json) {
  return guard([&] { *json = dup_string(to_json(h->h).dump()); });
}

cyclo_status cyclo_morphism_apply(const cyclo_morphism* h, cyclo_arrow f, cyclo_arrow* out) {
  return guard([&] { *out = from_arrow(h->h.apply(to_arrow(h->h.src_n(), f))); });
}

cyclo_status cyclo_morphism_compose(const cyclo_morphism* h2, const cyclo_morphism* h1,
                                    cyclo_morphism** out) {
  return guard([&] { *out = new cyclo_morphism{compose(h2->h, h1->h)}; });
}

cyclo_status cyclo_morphism_mod(const cyclo_morphism* h, int64_t* degree) {
  return guard([&] { *degree = mod_of(h->h); });
}

cyclo_status cyclo_enumerate_homs(int64_t n, int64_t m, int64_t max_degree,
                                  cyclo_morphism_list** out) {
  return guard([&] {
    auto* list = new cyclo_morphism_list;
    for (Morphism& h : enumerate_homs(n, m, max_degree))
      list->items.push_back(cyclo_morphism{std::move(h)});
    *out = list;
  });
}

void cyclo_morphism_list_free(cyclo_morphism_list* list) { delete list; }

size_t cyclo_morphism_list_size(const cyclo_morphism_list* list) { return list->items.size(); }

const cyclo_morphism* cyclo_morphism_list_get(const cyclo_morphism_list* list, size_t i) {
  return i < list->items.size() ? &list->items[i] : nullptr;
}

cyclo_status cyclo_hom_count_lambda(int64_t n, int64_t m, int64_t* count) {
  return guard([&] { *count = hom_count_lambda(n, m); });
}

cyclo_status cyclo_check_inclusion(int64_t n, int64_t m, char** report_json) {
  return guard([&] {
    const InclusionReport rep = check_inclusion_full(n, m);
    *report_json = dup_string(Json{{"pass", rep.pass},
                                   {"degree_one", rep.degree_one_count},
                                   {"cyclic_functors", rep.cyclic_functor_count},
                                   {"mismatch", rep.mismatch}}
                                  .dump());
  });
}

/* -- geometric logic -------------------------------------------------------------- */

cyclo_status cyclo_sequent_parse(const char* text, cyclo_sequent** out) {
  return guard([&] { *out = new cyclo_sequent{logic::parse_sequent(text)}; });
}

void cyclo_sequent_free(cyclo_sequent* s) { delete s; }

cyclo_status cyclo_sequent_print(const cyclo_sequent* s, char** text) {
  return guard([&] { *text = dup_string(logic::print_sequent(s->s)); });
}

cyclo_status cyclo_expand_macro(const char* name, const int64_t* params, size_t nparams,
                                char** formula_text) {
  return guard([&] {
    const logic::NamedExpansion e = logic::expand_macro_named(
        name, std::vector<int64_t>(params, params + nparams));
    *formula_text = dup_string(logic::print_formula(*e.formula));
  });
}

cyclo_status cyclo_theory_builtin(const char* name, int64_t scheme_cap, cyclo_theory** out) {
  return guard([&] { *out = new cyclo_theory{logic::corpus(name, scheme_cap)}; });
}

cyclo_status cyclo_theory_from_file(const char* path, cyclo_theory** out) {
  return guard([&] {
    std::ifstream in(path);
    require(in.good(), Errc::io_error, std::string("cannot read ") + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    logic::Theory t;
    t.name = path;
    t.sequents = logic::parse_corpus(buf.str());
    t.kind = logic::TheoryKind::groupoid;
    for (const logic::Sequent& s : t.sequents)
      for (const auto& [v, sort] : s.context)
        if (sort == logic::Sort::group) t.kind = logic::TheoryKind::group;
    *out = new cyclo_theory{std::move(t)};
  });
}

void cyclo_theory_free(cyclo_theory* t) { delete t; }

size_t cyclo_theory_size(const cyclo_theory* t) { return t->t.sequents.size(); }

cyclo_status cyclo_theory_sequent(const cyclo_theory* t, size_t i, cyclo_sequent** out) {
  return guard([&] {
    require(i < t->t.sequents.size(), Errc::index_out_of_range, "sequent index out of range");
    *out = new cyclo_sequent{t->t.sequents[i]};
  });
}

cyclo_status cyclo_theory_names(char** comma_separated) {
  return guard([&] {
    std::string s;
    for (const std::string& n : logic::corpus_names()) s += (s.empty() ? "" : ",") + n;
    *comma_separated = dup_string(s);
  });
}

cyclo_status cyclo_theory_is_group(const cyclo_theory* t, int* is_group) {
  return guard([&] { *is_group = t->t.kind == logic::TheoryKind::group ? 1 : 0; });
}

cyclo_status cyclo_structure_groupoid(int64_t n, cyclo_structure** out) {
  return guard([&] {
    *out = new cyclo_structure{
        std::make_unique<logic::GroupoidStructure>(make_groupoid(n))};
  });
}

cyclo_status cyclo_structure_subgroup(const char* heights, const char* scale,
                                      cyclo_structure** out) {
  return guard([&] {
    *out = new cyclo_structure{
        std::make_unique<logic::SubgroupStructure>(make_subgroup(heights, scale))};
  });
}

void cyclo_structure_free(cyclo_structure* st) { delete st; }

cyclo_status cyclo_check_sequent(const cyclo_structure* st, const cyclo_sequent* s,
                                 cyclo_bounds bounds, char** verdict_json) {
  return guard([&] {
    const logic::Bounds b{bounds.arrow_disp, bounds.index_bound, bounds.witness_depth};
    const logic::Verdict v = logic::check(*st->st, s->s, b);
    Json j{{"label", v.label},
           {"sequent", v.sequent_text},
           {"verdict", logic::verdict_name(v.kind)},
           {"instances", v.instances}};
    if (v.kind == logic::VerdictKind::fails) {
      Json ce = Json::object();
      for (const auto& [var, val] : v.counterexample) ce[var] = logic::value_str(val);
      j["counterexample"] = ce;
      j["reverified"] = logic::reverify(*st->st, s->s, b, v.counterexample);
    }
    *verdict_json = dup_string(j.dump());
  });
}

/* -- subgroups of Q ------------------------------------------------------------ */

cyclo_status cyclo_subgroup_new(const char* heights, const char* scale, cyclo_subgroup** out) {
  return guard([&] { *out = new cyclo_subgroup{make_subgroup(heights, scale)}; });
}

void cyclo_subgroup_free(cyclo_subgroup* h) { delete h; }

cyclo_status cyclo_subgroup_contains(const cyclo_subgroup* h, const char* value, int* member) {
  return guard([&] { *member = h->h.contains(Rat::parse(value)) ? 1 : 0; });
}

cyclo_status cyclo_common_generator(const cyclo_subgroup* h, const char* x, const char* y,
                                    char** z, int64_t* n, int64_t* m) {
  return guard([&] {
    const CommonGenerator cg = common_generator(h->h, Rat::parse(x), Rat::parse(y));
    *z = dup_string(cg.z.str());
    *n = cg.n;
    *m = cg.m;
  });
}

cyclo_status cyclo_validate_hom(const cyclo_subgroup* src, const cyclo_subgroup* dst,
                                const char* ratio) {
  return guard([&] { validate_hom(src->h, dst->h, Rat::parse(ratio)); });
}

cyclo_status cyclo_archimedean_witness(const cyclo_subgroup* h, const char* x, const char* y,
                                       int64_t* least) {
  return guard([&] { *least = archimedean_witness(h->h, Rat::parse(x), Rat::parse(y)); });
}

cyclo_status cyclo_sample_elements(const cyclo_subgroup* h, int64_t bound, char** json_array) {
  return guard([&] {
    Json arr = Json::array();
    for (const Rat& q : h->h.sample_elements(bound)) arr.push_back(q.str());
    *json_array = dup_string(arr.dump());
  });
}

cyclo_status cyclo_diagram_parse(const char* text, cyclo_diagram** out) {
  return guard([&] {
    const std::string s = text ? text : "";
    if (!s.empty() && s[0] == '{') {
      const Json j = Json::parse(s, nullptr, false);
      require(!j.is_discarded(), Errc::parse_error, "malformed diagram JSON");
      *out = new cyclo_diagram(diagram_from_json(j));
    } else {
      *out = new cyclo_diagram(Diagram::parse(s));
    }
  });
}

void cyclo_diagram_free(cyclo_diagram* d) { delete d; }

cyclo_status cyclo_colimit_cocone(const cyclo_diagram* d, char** json) {
  return guard([&] {
    Json arr = Json::array();
    for (const Rat& q : colimit_cocone(d->d)) arr.push_back(q.str());
    *json = dup_string(Json{{"cocone", arr}}.dump());
  });
}

/* -- exports ----------------------------------------------------------------------- */

cyclo_status cyclo_groupoid_json(int64_t n, char** json) {
  return guard([&] { *json = dup_string(to_json(make_groupoid(n)).dump()); });
}

cyclo_status cyclo_export_groupoid_dot(int64_t n, const char* loops, char** dot) {
  return guard([&] {
    const Groupoid g = make_groupoid(n);
    std::vector<Loop> highlights;
    if (loops != nullptr) {
      const std::string all = loops;
      size_t pos = 0;
      while (pos <= all.size()) {
        const size_t semi = all.find(';', pos);
        const std::string item =
            all.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
        if (!item.empty()) highlights.push_back(parse_loop(g, item));
        if (semi == std::string::npos) break;
        pos = semi + 1;
      }
    }
    *dot = dup_string(export_dot(g, highlights));
  });
}

}  // extern "C"
