#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mcat/json_io.hpp"

#include <cstdio>
#include <string>

using namespace mcat;

namespace {

const FinSetInstance fs;
using FS = FinSetInstance;

VCategory<FS> z2_category() {
  VCategory<FS> c;
  c.quiver.objects = {"e"};
  c.quiver.homobj[{"e", "e"}] = FinSetObj{2};
  c.kappa[{"e", "e", "e"}] = fs_map({2, 2}, 2, {1, 2, 2, 1});
  c.ident["e"] = fs_map({}, 2, {1});
  return c;
}

ShortSpace line() {
  return trivial_space(poly_full(1, mat(1, 1, {1})));
}

}  // namespace

TEST_CASE("ordinal maps and multimaps round-trip") {
  const OrdMap f = ord_map(3, 2, {2, 1, 2});
  CHECK(ordmap_from_json(ordmap_to_json(f)) == f);
  CHECK(ordmap_to_json(f)["values"] == Json::array({2, 1, 2}));

  const MultiMap m = fs_map({2, 3}, 2, {1, 2, 1, 2, 1, 2});
  CHECK(multimap_from_json(multimap_to_json(m)) == m);

  CHECK_THROWS_AS(ordmap_from_json(Json{{"source", 1}, {"target", 1}}),
                  JsonError);
  CHECK_THROWS_AS(
      ordmap_from_json(Json{
          {"source", 2}, {"target", 1}, {"values", Json::array({1, 5})}}),
      JsonError);
  CHECK_THROWS_AS(
      multimap_from_json(Json{{"sources", Json::array({2})},
                              {"target", 2},
                              {"table", Json::array({1})}}),
      JsonError);
}

TEST_CASE("table instances round-trip through their presentation") {
  const auto v = make_torsor_v();
  const auto j = instance_to_json(v);
  CHECK(instance_to_json(instance_from_json(j)) == j);

  // behaviour round-trips too: same homs, same composites
  const auto back = instance_from_json(j);
  CHECK(back.enumerate_hom({1, 1}, 2) == v.enumerate_hom({1, 1}, 2));
  const auto swap2 = ord_map(2, 2, {2, 1});
  for (int m : v.enumerate_hom({1, 1}, 2))
    CHECK(back.compose(swap2, {back.identity(1), back.identity(1)}, m) ==
          v.compose(swap2, {v.identity(1), v.identity(1)}, m));

  // the corrupted variant keeps its corruption
  const auto wj = instance_to_json(make_corrupted_torsor_v());
  CHECK(instance_to_json(instance_from_json(wj)) == wj);
  CHECK_FALSE(wj == j);

  CHECK_THROWS_AS(instance_from_json(Json{{"kind", "category"}}), JsonError);
}

TEST_CASE("enriched structures round-trip") {
  const auto z2 = z2_category();
  CHECK(category_from_json(category_to_json(z2)) == z2);

  const auto idf = identity_functor(fs, z2);
  CHECK(functor_from_json(functor_to_json(idf)) == idf);

  const auto idt = identity_transformation(fs, idf);
  CHECK(transformation_from_json(transformation_to_json(idt)) == idt);

  SUBCASE("unknown kinds and missing keys are rejected") {
    CHECK_THROWS_AS(category_from_json(Json{{"kind", "functor"}}), JsonError);
    auto j = category_to_json(z2);
    j.erase("homs");
    CHECK_THROWS_AS(category_from_json(j), JsonError);
  }
  SUBCASE("negative hom sizes are rejected") {
    auto j = category_to_json(z2);
    j["homs"][0]["size"] = -1;
    CHECK_THROWS_AS(category_from_json(j), JsonError);
  }
}

TEST_CASE("prop morphisms round-trip and validate") {
  const Word<FS> w{FinSetObj{2}, FinSetObj{1}};
  const auto id = fv_identity(fs, w);
  CHECK(prop_morphism_from_json(prop_morphism_to_json(id)) == id);

  auto j = prop_morphism_to_json(id);
  j["index"]["values"] = Json::array({1, 1});  // breaks the component fibers
  CHECK_THROWS_AS(prop_morphism_from_json(j), JsonError);
}

TEST_CASE("rationals, matrices and short structures round-trip") {
  CHECK(rat_from_json(rat_to_json(Rat(-3) / 4)) == Rat(-3) / 4);
  CHECK(rat_from_json(Json(7)) == Rat(7));
  CHECK_THROWS_AS(rat_from_json(Json("x/y")), JsonError);

  const Mat m = mat(2, 2, {1, Rat(1) / 2, 0, -1});
  CHECK(mat_from_json(mat_to_json(m)) == m);

  const auto L = line();
  CHECK(space_from_json(space_to_json(L)) == L);

  const auto mult = short_map({L, L}, L, {Rat(1)});
  CHECK(short_map_from_json(short_map_to_json(mult)) == mult);

  SUBCASE("level lists must be consecutive") {
    auto j = space_to_json(L);
    j["levels"].push_back(j["levels"][0]);
    j["levels"][1]["l"] = 5;
    CHECK_THROWS_AS(space_from_json(j), JsonError);
  }
  SUBCASE("shape must match the listed spaces") {
    auto j = short_map_to_json(mult);
    j["shape"] = Json::array({2, 1, 1});
    CHECK_THROWS_AS(short_map_from_json(j), JsonError);
  }
}

TEST_CASE("files save and load") {
  const std::string path = "test_json_tmp.json";
  const auto z2 = z2_category();
  save_json_file(path, category_to_json(z2));
  CHECK(category_from_json(load_json_file(path)) == z2);
  std::remove(path.c_str());

  CHECK_THROWS_AS(load_json_file("does_not_exist.json"), JsonError);
}
