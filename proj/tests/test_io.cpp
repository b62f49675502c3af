#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>

#include "helpers.hpp"
#include "residua/residua.hpp"

using namespace residua;

TEST_CASE("algebra json round-trip") {
  auto L = five_elem_div_not_bl();
  auto j = algebra_to_json(L);
  auto back = algebra_from_json(j);
  CHECK(back.lat.leq == L.lat.leq);
  CHECK(back.odot == L.odot);
  CHECK(back.arrow == L.arrow);
  CHECK(back.lat.labels == L.lat.labels);
}

TEST_CASE("lattice file with a wrong arrow is rejected on load") {
  auto L = five_elem_div_not_bl();
  auto j = algebra_to_json(L);
  j["arrow"][1][2] = 4;
  CHECK_THROWS_AS(algebra_from_json(j), error);
}

TEST_CASE("lattice file without arrow derives it") {
  auto L = five_elem_div_not_bl();
  auto j = algebra_to_json(L);
  j.erase("arrow");
  auto back = algebra_from_json(j);
  CHECK(back.arrow == L.arrow);
}

TEST_CASE("malformed lattice files are BadInput") {
  json j;
  j["size"] = 3;
  j["leq"] = json::array({json::array({1, 1}), json::array({0, 1})});
  j["odot"] = json::array();
  try {
    algebra_from_json(j);
    FAIL("expected BadInput");
  } catch (const error& e) {
    CHECK(e.code() == errc::bad_input);
  }
}

TEST_CASE("ring spec json round-trip") {
  for (const RingSpec& spec :
       {RingSpec::Zn(8),
        RingSpec::Product({RingSpec::Zn(2), RingSpec::Zn(9)}),
        RingSpec::PolyQuot(3, {0, 0, 1}), z2xy_spec(), mat2_z2_spec()}) {
    auto back = ring_spec_from_json(ring_spec_to_json(spec));
    auto a = build_ring(spec);
    auto b = build_ring(back);
    CHECK(a.size == b.size);
    CHECK(a.add == b.add);
    CHECK(a.mul == b.mul);
    CHECK(a.zero == b.zero);
    CHECK(a.one == b.one);
    CHECK(ring_short_name(spec) == ring_short_name(back));
  }
}

TEST_CASE("expression json round-trip preserves the rendering") {
  auto e = AlgebraExpr::OrdProd(
      AlgebraExpr::Ring(RingSpec::Product({RingSpec::Zn(2), RingSpec::Zn(2)})),
      AlgebraExpr::OrdProd(AlgebraExpr::Ring(RingSpec::Zn(4)),
                           AlgebraExpr::Literal("five_div_not_bl.json")));
  auto back = expr_from_json(expr_to_json(e));
  CHECK(render_expr(back) == render_expr(e));
  CHECK(render_expr(e) ==
        "Id(Z2xZ2) . (Id(Z4) . five_div_not_bl.json)");
}

TEST_CASE("classification report json carries counts and representatives") {
  auto rep = enumerate_algebras(4, AlgebraFilter::divisible,
                                EnumMethod::generate);
  auto j = classification_to_json(rep);
  CHECK(j["count"] == 5);
  CHECK(j["class"] == "divisible");
  CHECK(j["representatives"].size() == 5);
  for (const auto& r : j["representatives"])
    CHECK(r["lattice"]["size"] == 4);
}

TEST_CASE("file save and load") {
  auto dir = std::filesystem::temp_directory_path() / "residua_io_test";
  std::filesystem::create_directories(dir);
  auto path = (dir / "alg.json").string();
  save_json_file(path, algebra_to_json(five_elem_div_not_bl()));
  auto back = algebra_from_json(load_json_file(path));
  CHECK(back.size() == 5);
  CHECK_THROWS_AS(load_json_file((dir / "missing.json").string()), error);
  std::filesystem::remove_all(dir);
}
