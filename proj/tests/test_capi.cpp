#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include <json.hpp>

#include "cyclo.h"

using Json = nlohmann::json;

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  cyclo_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("arrow arithmetic through the C surface") {
  cyclo_arrow f{0, 2}, g{2, 4}, out{};
  CHECK(cyclo_compose(3, g, f, &out) == CYCLO_OK);
  CHECK(out.src == 0);
  CHECK(out.disp == 6);

  CHECK(cyclo_compose(3, cyclo_arrow{0, 1}, f, &out) == CYCLO_ERR_NON_COMPOSABLE);
  CHECK(std::strlen(cyclo_last_error()) > 0);

  CHECK(cyclo_inverse(5, cyclo_arrow{1, 7}, &out) == CYCLO_OK);
  CHECK(out.src == 3);
  CHECK(out.disp == -7);

  uint32_t flags = 0;
  CHECK(cyclo_classify(4, cyclo_arrow{1, 4}, &flags) == CYCLO_OK);
  CHECK((flags & CYCLO_ARROW_CYCLE));
  CHECK((flags & CYCLO_ARROW_NONTRIVIAL));
  CHECK_FALSE((flags & CYCLO_ARROW_IDENTITY));

  int64_t c = 0, b = 0;
  CHECK(cyclo_factorize(5, cyclo_arrow{1, 7}, &c, &b) == CYCLO_OK);
  CHECK(c == 2);
  CHECK(b == 1);

  CHECK(cyclo_pmin(3, 0, 2, &out) == CYCLO_OK);
  CHECK(out.disp == 2);

  cyclo_arrow alpha{};
  int64_t w = 0;
  CHECK(cyclo_factor_through_cycle(3, cyclo_arrow{1, 7}, &alpha, &w) == CYCLO_OK);
  CHECK(alpha.disp == 1);
  CHECK(w == 2);
  CHECK(cyclo_factor_through_cycle(3, cyclo_arrow{1, -1}, &alpha, &w) ==
        CYCLO_ERR_NOT_POSITIVE);
}

TEST_CASE("permutations and loops") {
  const int64_t image[] = {1, 0, 2};
  char* json = nullptr;
  CHECK(cyclo_from_permutation(image, 3, 1, &json) == CYCLO_ERR_NOT_TRANSITIVE);
  REQUIRE(cyclo_from_permutation(image, 3, 0, &json) == CYCLO_OK);
  const Json orbits = Json::parse(take(json));
  CHECK(orbits["orbits"].size() == 2);
  CHECK(orbits["orbits"][0]["n"] == 2);

  cyclo_arrow loop[8];
  size_t len = 0;
  REQUIRE(cyclo_loop_parse(4, "2@0,2@2", loop, 8, &len) == CYCLO_OK);
  REQUIRE(len == 2);
  uint32_t flags = 0;
  int64_t total = 0;
  CHECK(cyclo_loop_classify(4, loop, len, &flags, &total) == CYCLO_OK);
  CHECK((flags & CYCLO_LOOP_PSI));
  CHECK(total == 4);

  cyclo_arrow comp{};
  CHECK(cyclo_loop_composite(4, loop, len, 2, &comp) == CYCLO_OK);
  CHECK(comp.src == 2);
  CHECK(comp.disp == 4);
}

TEST_CASE("generator decomposition and witness schema") {
  cyclo_arrow z[8], x[8], y[8];
  size_t zl = 0, xl = 0, yl = 0;
  REQUIRE(cyclo_loop_parse(5, "1@0,1@1,1@2,1@3,1@4", z, 8, &zl) == CYCLO_OK);
  REQUIRE(cyclo_loop_parse(5, "1@0,3@1,1@4", x, 8, &xl) == CYCLO_OK);
  REQUIRE(cyclo_loop_parse(5, "1@2,1@3,1@4,2@0", y, 8, &yl) == CYCLO_OK);
  char* json = nullptr;
  REQUIRE(cyclo_decompose(5, z, zl, x, xl, y, yl, 0, &json) == CYCLO_OK);
  const Json w = Json::parse(take(json));
  REQUIRE(w.contains("blocks"));
  CHECK(w["blocks"].size() == 3);
  CHECK(w["blocks"][1]["len"] == 3);
  CHECK(w["blocks"][0].contains("start"));
  CHECK(w["blocks"][0].contains("winding"));
  CHECK(w["rotation"] == 0);
  CHECK(w["second_blocks"].size() == 4);

  REQUIRE(cyclo_minimal_generator(4, x, 1, y, 1, 0, &json) == CYCLO_ERR_PRECONDITION);
}

TEST_CASE("minimal generator and insertion") {
  cyclo_arrow x[4], y[4];
  size_t xl = 0, yl = 0;
  REQUIRE(cyclo_loop_parse(4, "2@0,2@2", x, 4, &xl) == CYCLO_OK);
  REQUIRE(cyclo_loop_parse(4, "1@1,3@2", y, 4, &yl) == CYCLO_OK);
  char* json = nullptr;
  REQUIRE(cyclo_minimal_generator(4, x, xl, y, yl, 1, &json) == CYCLO_OK);
  const Json mg = Json::parse(take(json));
  CHECK(mg["z"].size() == 3);
  CHECK(mg["z"][0] == Json({{"src", 0}, {"disp", 1}}));

  int64_t index = 0;
  cyclo_arrow alpha{}, beta{};
  REQUIRE(cyclo_insert_object(4, x, xl, 1, &index, &alpha, &beta) == CYCLO_OK);
  CHECK(index == 1);
  CHECK(alpha.disp == 1);
  CHECK(beta.src == 1);
}

TEST_CASE("morphism handles") {
  const int64_t blocks[] = {2, 1};
  cyclo_morphism* h = nullptr;
  REQUIRE(cyclo_morphism_new(2, 1, 3, 0, blocks, 2, &h) == CYCLO_OK);
  int64_t degree = 0;
  CHECK(cyclo_morphism_mod(h, &degree) == CYCLO_OK);
  CHECK(degree == 3);
  cyclo_arrow out{};
  CHECK(cyclo_morphism_apply(h, cyclo_arrow{0, 2}, &out) == CYCLO_OK);
  CHECK(out.disp == 3);

  char* json = nullptr;
  REQUIRE(cyclo_morphism_to_json(h, &json) == CYCLO_OK);
  const std::string text = take(json);
  const Json j = Json::parse(text);
  CHECK(j["src"] == 2);
  CHECK(j["dst"] == 1);
  CHECK(j["degree"] == 3);
  CHECK(j["base"] == 0);
  CHECK(j["blocks"] == Json::array({2, 1}));

  cyclo_morphism* h2 = nullptr;
  REQUIRE(cyclo_morphism_from_json(text.c_str(), &h2) == CYCLO_OK);
  cyclo_morphism* prod = nullptr;
  const int64_t id1[] = {1};
  cyclo_morphism* idm = nullptr;
  REQUIRE(cyclo_morphism_new(1, 1, 1, 0, id1, 1, &idm) == CYCLO_OK);
  REQUIRE(cyclo_morphism_compose(idm, h2, &prod) == CYCLO_OK);
  CHECK(cyclo_morphism_mod(prod, &degree) == CYCLO_OK);
  CHECK(degree == 3);

  const int64_t bad[] = {1, 1};
  cyclo_morphism* broken = nullptr;
  CHECK(cyclo_morphism_new(2, 3, 1, 0, bad, 2, &broken) == CYCLO_ERR_SUM_MISMATCH);

  cyclo_morphism_free(h);
  cyclo_morphism_free(h2);
  cyclo_morphism_free(idm);
  cyclo_morphism_free(prod);
}

TEST_CASE("hom enumeration and inclusion report") {
  cyclo_morphism_list* list = nullptr;
  REQUIRE(cyclo_enumerate_homs(2, 2, 1, &list) == CYCLO_OK);
  CHECK(cyclo_morphism_list_size(list) == 6);
  CHECK(cyclo_morphism_list_get(list, 6) == nullptr);
  cyclo_morphism_list_free(list);

  int64_t count = 0;
  CHECK(cyclo_hom_count_lambda(2, 2, &count) == CYCLO_OK);
  CHECK(count == 6);
  CHECK(cyclo_hom_count_lambda(100, 100, &count) == CYCLO_ERR_OVERFLOW);

  char* json = nullptr;
  REQUIRE(cyclo_check_inclusion(2, 3, &json) == CYCLO_OK);
  const Json rep = Json::parse(take(json));
  CHECK(rep["pass"] == true);
  CHECK(rep["degree_one"] == rep["cyclic_functors"]);
}

TEST_CASE("logic surface") {
  cyclo_sequent* s = nullptr;
  REQUIRE(cyclo_sequent_parse("f:A | P(f) |- T(f)", &s) == CYCLO_OK);
  char* printed = nullptr;
  REQUIRE(cyclo_sequent_print(s, &printed) == CYCLO_OK);
  CHECK(take(printed) == "f:A | P(f) |- T(f)");

  cyclo_structure* st = nullptr;
  REQUIRE(cyclo_structure_groupoid(2, &st) == CYCLO_OK);
  char* verdict = nullptr;
  REQUIRE(cyclo_check_sequent(st, s, cyclo_bounds{4, 4, 4}, &verdict) == CYCLO_OK);
  const Json v = Json::parse(take(verdict));
  CHECK(v["verdict"] == "Fails");
  CHECK(v["reverified"] == true);
  CHECK(v["counterexample"].contains("f"));
  cyclo_sequent_free(s);
  cyclo_structure_free(st);

  CHECK(cyclo_sequent_parse("f:A |- P(", &s) == CYCLO_ERR_PARSE);

  cyclo_theory* th = nullptr;
  REQUIRE(cyclo_theory_builtin("GTbar", 4, &th) == CYCLO_OK);
  CHECK(cyclo_theory_size(th) == 11);
  int is_group = -1;
  CHECK(cyclo_theory_is_group(th, &is_group) == CYCLO_OK);
  CHECK(is_group == 0);
  cyclo_sequent* first = nullptr;
  REQUIRE(cyclo_theory_sequent(th, 0, &first) == CYCLO_OK);
  cyclo_sequent_free(first);
  cyclo_theory_free(th);
  CHECK(cyclo_theory_builtin("nope", 4, &th) == CYCLO_ERR_UNKNOWN_NAME);

  char* names = nullptr;
  REQUIRE(cyclo_theory_names(&names) == CYCLO_OK);
  CHECK(take(names).find("TE-alt") != std::string::npos);

  char* formula = nullptr;
  const int64_t params[] = {1};
  REQUIRE(cyclo_expand_macro("L", params, 1, &formula) == CYCLO_OK);
  CHECK(take(formula) == "cod(x1) = dom(x1)");
}

TEST_CASE("subgroup surface") {
  cyclo_subgroup* h = nullptr;
  REQUIRE(cyclo_subgroup_new("2:inf,3:1", nullptr, &h) == CYCLO_OK);
  int member = 0;
  CHECK(cyclo_subgroup_contains(h, "3/8", &member) == CYCLO_OK);
  CHECK(member == 1);
  CHECK(cyclo_subgroup_contains(h, "1/9", &member) == CYCLO_OK);
  CHECK(member == 0);

  char* z = nullptr;
  int64_t n = 0, m = 0;
  REQUIRE(cyclo_common_generator(h, "3/4", "5/6", &z, &n, &m) == CYCLO_OK);
  CHECK(take(z) == "1/12");
  CHECK(n == 9);
  CHECK(m == 10);

  cyclo_subgroup* zz = nullptr;
  REQUIRE(cyclo_subgroup_new("", nullptr, &zz) == CYCLO_OK);
  CHECK(cyclo_validate_hom(zz, zz, "3") == CYCLO_OK);
  CHECK(cyclo_validate_hom(zz, zz, "1/2") == CYCLO_ERR_IMAGE_ESCAPES);
  CHECK(cyclo_validate_hom(zz, zz, "0") == CYCLO_ERR_NOT_POSITIVE);

  int64_t least = 0;
  CHECK(cyclo_archimedean_witness(h, "7/2", "1/4", &least) == CYCLO_OK);
  CHECK(least == 14);

  char* sample = nullptr;
  REQUIRE(cyclo_sample_elements(zz, 2, &sample) == CYCLO_OK);
  CHECK(Json::parse(take(sample)).size() == 5);

  cyclo_subgroup_free(h);
  cyclo_subgroup_free(zz);

  cyclo_diagram* d = nullptr;
  REQUIRE(cyclo_diagram_parse("chain:2,3", &d) == CYCLO_OK);
  char* cocone = nullptr;
  REQUIRE(cyclo_colimit_cocone(d, &cocone) == CYCLO_OK);
  const Json j = Json::parse(take(cocone));
  CHECK(j["cocone"] == Json::array({"1", "1/2", "1/6"}));
  cyclo_diagram_free(d);

  REQUIRE(cyclo_diagram_parse(R"({"objects":3,"arrows":[{"from":0,"to":2,"label":2},)"
                              R"({"from":1,"to":2,"label":4}]})",
                              &d) == CYCLO_OK);
  REQUIRE(cyclo_colimit_cocone(d, &cocone) == CYCLO_OK);
  CHECK(Json::parse(take(cocone))["cocone"] == Json::array({"1", "2", "1/2"}));
  cyclo_diagram_free(d);
}

TEST_CASE("exports and checked structure mismatch") {
  char* json = nullptr;
  REQUIRE(cyclo_groupoid_json(3, &json) == CYCLO_OK);
  CHECK(Json::parse(take(json)) == Json{{"n", 3}});

  char* dot = nullptr;
  REQUIRE(cyclo_export_groupoid_dot(5, "1@0,3@1,1@4;1@2,1@3,1@4,2@0", &dot) == CYCLO_OK);
  const std::string d = take(dot);
  CHECK(d.find("digraph X5") != std::string::npos);
  CHECK(d.find("x0 -> x1") != std::string::npos);
  CHECK(d.find("color=red") != std::string::npos);
  CHECK(d.find("color=blue") != std::string::npos);
  // byte-stable: a second export matches exactly
  char* dot2 = nullptr;
  REQUIRE(cyclo_export_groupoid_dot(5, "1@0,3@1,1@4;1@2,1@3,1@4,2@0", &dot2) == CYCLO_OK);
  CHECK(take(dot2) == d);

  cyclo_structure* st = nullptr;
  REQUIRE(cyclo_structure_subgroup("", nullptr, &st) == CYCLO_OK);
  cyclo_sequent* s = nullptr;
  REQUIRE(cyclo_sequent_parse("f:A |- P(f)", &s) == CYCLO_OK);
  char* verdict = nullptr;
  CHECK(cyclo_check_sequent(st, s, cyclo_bounds{4, 4, 4}, &verdict) ==
        CYCLO_ERR_SIGNATURE_MISMATCH);
  cyclo_sequent_free(s);
  cyclo_structure_free(st);

  CHECK(cyclo_version() != nullptr);
}
