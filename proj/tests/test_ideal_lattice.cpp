#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "residua/residua.hpp"

using namespace residua;

namespace {

FiniteRing z2xz2() {
  return build_ring(RingSpec::Product({RingSpec::Zn(2), RingSpec::Zn(2)}));
}

}  // namespace

TEST_CASE("Id(Z2xZ2) is the four-element boolean MV-algebra") {
  auto IL = build_ideal_lattice(z2xz2());
  REQUIRE(IL.algebra.size() == 4);
  // order O < C,B < E with the arrow and product tables:
  //   ->: E E E E / B E B E / C C E E / O C B E
  //   (x): O O O O / O C O C / O O B B / O C B E
  std::vector<int> expected_arrow = {
      3, 3, 3, 3,  //
      2, 3, 2, 3,  //
      1, 1, 3, 3,  //
      0, 1, 2, 3,
  };
  std::vector<int> expected_odot = {
      0, 0, 0, 0,  //
      0, 1, 0, 1,  //
      0, 0, 2, 2,  //
      0, 1, 2, 3,
  };
  CHECK(IL.algebra.arrow == expected_arrow);
  CHECK(IL.algebra.odot == expected_odot);
  // the product coincides with meet here
  CHECK(IL.algebra.odot == IL.algebra.lat.meet_table);
  auto p = check_properties(IL.algebra);
  CHECK(p.is_mv);
  CHECK_FALSE(p.is_chain);
}

TEST_CASE("Id(Zn(16)) is a five-element chain; Id(Zn(2)) has two elements") {
  auto a = build_ideal_lattice(build_ring(RingSpec::Zn(16))).algebra;
  CHECK(a.size() == 5);
  CHECK(check_properties(a).is_chain);
  CHECK(check_properties(a).is_mv);
  auto b = build_ideal_lattice(build_ring(RingSpec::Zn(2))).algebra;
  CHECK(b.size() == 2);
}

TEST_CASE("the arrow table of Id(A) is the ideal quotient, entry by entry") {
  for (const RingSpec& spec :
       {RingSpec::Zn(12), RingSpec::Zn(16),
        RingSpec::Product({RingSpec::Zn(4), RingSpec::Zn(2)})}) {
    auto R = build_ring(spec);
    auto IL = build_ideal_lattice(R);
    const int m = static_cast<int>(IL.ideals.size());
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        Ideal q = ideal_quotient(R, IL.ideals[j], IL.ideals[i]);
        CHECK(IL.ideals[IL.algebra.implies(i, j)] == q);
      }
  }
}

TEST_CASE("noncommutative rings are rejected by build_ideal_lattice") {
  auto M = build_ring(mat2_z2_spec());
  CHECK_THROWS_AS(build_ideal_lattice(M), error);
  try {
    build_ideal_lattice(M);
  } catch (const error& e) {
    CHECK(e.code() == errc::non_commutative_ring);
  }
}

TEST_CASE("M2(Z2) left-ideal candidate is the diamond and fails residuation") {
  auto M = build_ring(mat2_z2_spec());
  auto cand = ideal_monoid_candidate(M, Sidedness::left);
  REQUIRE(cand.lattice.size == 5);
  // diamond shape: three incomparable proper ideals
  int incomparable = 0;
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j)
      if (!cand.lattice.le(i, j) && !cand.lattice.le(j, i)) ++incomparable;
  CHECK(incomparable == 3);

  try {
    validate_residuated(cand.lattice, cand.odot);
    FAIL("expected ResiduumMissing");
  } catch (const error& e) {
    CHECK(e.code() == errc::residuum_missing);
  }
}

TEST_CASE("multiplication ring verdicts") {
  SECTION("every Zn is a multiplication ring") {
    for (int k : {2, 4, 8, 12, 30, 32})
      CHECK(is_multiplication_ring(build_ring(RingSpec::Zn(k))).value);
  }
  SECTION("products of prime-power Zn are multiplication rings") {
    CHECK(is_multiplication_ring(
              build_ring(RingSpec::Product({RingSpec::Zn(4), RingSpec::Zn(2)})))
              .value);
  }
  SECTION("the eight-element local ring is not, with the expected witness") {
    auto R = build_ring(z2xy_spec());
    auto v = is_multiplication_ring(R);
    CHECK_FALSE(v.value);
    REQUIRE(v.witness.has_value());
    auto ideals = enumerate_ideals(R);
    CHECK(ideal_label(R, ideals[v.witness->first]) == "(x,y)");
    CHECK(ideal_label(R, ideals[v.witness->second]) == "(x)");
  }
}

TEST_CASE("multiplication verdict matches divisibility of Id(A)") {
  for (const RingSpec& spec :
       {RingSpec::Zn(8), RingSpec::Zn(12),
        RingSpec::Product({RingSpec::Zn(2), RingSpec::Zn(2)}),
        RingSpec::PolyQuot(2, {0, 0, 1}), z2xy_spec()}) {
    auto R = build_ring(spec);
    auto IL = build_ideal_lattice(R);
    CHECK(is_multiplication_ring(R).value ==
          check_properties(IL.algebra).is_divisible);
  }
}

TEST_CASE("c6/c7 distributivity suite") {
  CHECK(check_c6_c7(build_ring(RingSpec::Zn(12))).all_pass());
  CHECK(check_c6_c7(z2xz2()).all_pass());
  try {
    check_c6_c7(build_ring(z2xy_spec()));
    FAIL("expected PreconditionNotMultiplication");
  } catch (const error& e) {
    CHECK(e.code() == errc::precondition_not_multiplication);
  }
}

TEST_CASE("ring logic classification") {
  SECTION("Zn(p^a) gives an MV-chain") {
    for (int k : {4, 8, 9, 27, 32}) {
      auto rep = classify_ring_logic(build_ring(RingSpec::Zn(k)));
      CHECK(rep.mv);
      CHECK(rep.chain);
      CHECK(rep.multiplication);
    }
  }
  SECTION("Z2xZ2 is an MV-ring but not a chain") {
    auto rep = classify_ring_logic(z2xz2());
    CHECK(rep.mv);
    CHECK_FALSE(rep.chain);
    CHECK(rep.heyting);  // boolean
  }
  SECTION("the non-multiplication ring is not a BL-ring") {
    auto rep = classify_ring_logic(build_ring(z2xy_spec()));
    CHECK_FALSE(rep.divisible);
    CHECK_FALSE(rep.bl);
    CHECK_FALSE(rep.multiplication);
    CHECK_FALSE(rep.mtl);
  }
  SECTION("Zn(6) is a product of fields: boolean, MV, not local") {
    auto rep = classify_ring_logic(build_ring(RingSpec::Zn(6)));
    CHECK(rep.mv);
    CHECK(rep.heyting);
    CHECK(rep.ann_ann_identity);
  }
}

TEST_CASE("double annihilator identity matches the algebra double negation") {
  for (const RingSpec& spec :
       {RingSpec::Zn(8), RingSpec::Zn(12), z2xy_spec(),
        RingSpec::Product({RingSpec::Zn(2), RingSpec::Zn(2)})}) {
    auto R = build_ring(spec);
    auto IL = build_ideal_lattice(R);
    const auto& A = IL.algebra;
    for (size_t i = 0; i < IL.ideals.size(); ++i) {
      bool ring_level =
          annihilator(R, annihilator(R, IL.ideals[i])) == IL.ideals[i];
      bool algebra_level = A.star(A.star(static_cast<int>(i))) ==
                           static_cast<int>(i);
      CHECK(ring_level == algebra_level);
    }
  }
}

TEST_CASE("c1-c5 pass on ideal lattices of multiplication rings") {
  for (const RingSpec& spec :
       {RingSpec::Zn(8), RingSpec::Zn(12), RingSpec::Zn(30),
        RingSpec::Product({RingSpec::Zn(4), RingSpec::Zn(2)})}) {
    auto IL = build_ideal_lattice(build_ring(spec));
    CHECK(check_identities_c1_c5(IL.algebra).all_pass());
  }
}
