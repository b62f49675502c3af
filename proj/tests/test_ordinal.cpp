#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "residua/residua.hpp"

using namespace residua;
using testhelp::id_of_zn;

namespace {

ResiduatedLattice boolean4() {
  return build_ideal_lattice(
             build_ring(RingSpec::Product({RingSpec::Zn(2), RingSpec::Zn(2)})))
      .algebra;
}

AlgebraExpr ring_expr(int k) { return AlgebraExpr::Ring(RingSpec::Zn(k)); }

}  // namespace

TEST_CASE("Id(Z2xZ2) . Id(Z2) reproduces the five-element example") {
  auto P = ordinal_product(boolean4(), id_of_zn(2));
  CHECK(P.size() == 5);
  auto cert = are_isomorphic(P, five_elem_div_not_bl());
  REQUIRE(cert.has_value());
  CHECK(cert->verified);
  auto p = check_properties(P);
  CHECK(p.is_divisible);
  CHECK_FALSE(p.is_bl);
}

TEST_CASE("Id(Z2) . Id(Z2) is a three-chain not isomorphic to Id(Z4)") {
  auto G = ordinal_product(id_of_zn(2), id_of_zn(2));
  CHECK(G.size() == 3);
  auto p = check_properties(G);
  CHECK(p.is_bl);
  CHECK(p.is_chain);
  CHECK_FALSE(are_isomorphic(G, id_of_zn(4)).has_value());
}

TEST_CASE("Id(Z2) . Id(Z2xZ2) is BL, not MV, not a chain") {
  auto P = ordinal_product(id_of_zn(2), boolean4());
  CHECK(P.size() == 5);
  auto p = check_properties(P);
  CHECK(p.is_bl);
  CHECK_FALSE(p.is_mv);
  CHECK_FALSE(p.is_chain);
}

TEST_CASE("ordinal product rejects non-BL factors") {
  auto bad = five_elem_div_not_bl();
  CHECK_THROWS_AS(ordinal_product(bad, id_of_zn(2)), error);
  CHECK_THROWS_AS(ordinal_product(id_of_zn(2), bad), error);
}

TEST_CASE("size arithmetic and structure laws over catalog pairs") {
  std::vector<ResiduatedLattice> bls;
  for (int n = 2; n <= 5; ++n) {
    auto rep = enumerate_algebras(n, AlgebraFilter::bl, EnumMethod::generate);
    for (auto& c : rep.classes) bls.push_back(c.rep);
  }
  int pairs = 0;
  for (const auto& a : bls)
    for (const auto& b : bls) {
      if (a.size() + b.size() - 1 > 9) continue;
      ++pairs;
      auto ab = ordinal_product(a, b);
      auto pa = check_properties(a);
      auto pb = check_properties(b);
      auto pab = check_properties(ab);
      CHECK(ab.size() == a.size() + b.size() - 1);
      CHECK(pab.is_divisible);
      if (pa.is_chain) {
        CHECK(pab.is_bl);
        CHECK_FALSE(pab.is_mv);
      } else {
        CHECK_FALSE(pab.is_prelinear);
      }
      if (pa.is_chain && pb.is_chain) CHECK(pab.is_chain);
    }
  CHECK(pairs > 50);
}

TEST_CASE("associativity up to isomorphism where both sides are defined") {
  std::vector<ResiduatedLattice> small = {id_of_zn(2), id_of_zn(4),
                                          boolean4(),
                                          ordinal_product(id_of_zn(2),
                                                          id_of_zn(2))};
  for (const auto& a : small)
    for (const auto& b : small)
      for (const auto& c : small) {
        if (a.size() + b.size() + c.size() - 2 > 9) continue;
        auto ab = ordinal_product(a, b);
        auto bc = ordinal_product(b, c);
        bool left_ok = check_properties(ab).is_bl;
        bool right_ok = check_properties(bc).is_bl;
        if (!left_ok || !right_ok) continue;
        auto l = ordinal_product(ab, c);
        auto r = ordinal_product(a, bc);
        CHECK(are_isomorphic(l, r).has_value());
      }
}

TEST_CASE("the ordinal product is not commutative") {
  auto ab = ordinal_product(boolean4(), id_of_zn(2));
  auto ba = ordinal_product(id_of_zn(2), boolean4());
  CHECK(check_properties(ab).is_bl != check_properties(ba).is_bl);
  CHECK_FALSE(are_isomorphic(ab, ba).has_value());
}

TEST_CASE("evaluate_expr") {
  LiteralResolver none;

  SECTION("a ring expression gives the MV chain") {
    auto L = evaluate_expr(ring_expr(4), none);
    CHECK(L.size() == 3);
    CHECK(check_properties(L).is_mv);
    REQUIRE(L.provenance);
    CHECK(render_expr(*L.provenance) == "Id(Z4)");
  }

  SECTION("nested ordinal products evaluate and carry provenance") {
    auto e = AlgebraExpr::OrdProd(
        ring_expr(2), AlgebraExpr::OrdProd(ring_expr(2), ring_expr(2)));
    auto L = evaluate_expr(e, none);
    CHECK(L.size() == 4);
    auto p = check_properties(L);
    CHECK(p.is_bl);
    CHECK(p.is_chain);
    CHECK(render_expr(*L.provenance) == "Id(Z2) . (Id(Z2) . Id(Z2))");
  }

  SECTION("non-BL literal factors are refused with a path") {
    auto resolver = [](const std::string& name) -> ResiduatedLattice {
      if (name == "div5") return five_elem_div_not_bl();
      fail(errc::bad_input, "unknown literal " + name);
    };
    auto e = AlgebraExpr::OrdProd(AlgebraExpr::Literal("div5"), ring_expr(2));
    try {
      evaluate_expr(e, resolver);
      FAIL("expected NotBLAlgebra");
    } catch (const error& err) {
      CHECK(err.code() == errc::not_bl_algebra);
      CHECK(std::string(err.what()).find("'left'") != std::string::npos);
    }
  }
}

TEST_CASE("direct product matches the product-ring ideal lattice") {
  auto prod = direct_product(id_of_zn(2), id_of_zn(4));
  auto viaring = build_ideal_lattice(
                     build_ring(RingSpec::Product({RingSpec::Zn(2),
                                                   RingSpec::Zn(4)})))
                     .algebra;
  CHECK(prod.size() == 6);
  CHECK(are_isomorphic(prod, viaring).has_value());
  REQUIRE(prod.provenance);
  CHECK(render_expr(*prod.provenance) == "Id(Z2xZ4)");
}

TEST_CASE("trivial factors act as identities for the ordinal product") {
  auto one = validate_residuated(validate_lattice(1, {1}), {0});
  auto L = ordinal_product(id_of_zn(4), one);
  CHECK(L.size() == 3);
  CHECK(are_isomorphic(L, id_of_zn(4)).has_value());
}
