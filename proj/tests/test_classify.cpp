#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"
#include "residua/residua.hpp"

using namespace residua;
using testhelp::id_of_zn;

TEST_CASE("lattice skeleton counts for small sizes") {
  CHECK(enumerate_lattice_skeletons(1).size() == 1);
  CHECK(enumerate_lattice_skeletons(2).size() == 1);
  CHECK(enumerate_lattice_skeletons(3).size() == 1);
  CHECK(enumerate_lattice_skeletons(4).size() == 2);
  CHECK(enumerate_lattice_skeletons(5).size() == 5);
  CHECK(enumerate_lattice_skeletons(6).size() == 15);
  CHECK_THROWS_AS(enumerate_lattice_skeletons(9), error);
}

TEST_CASE("the five-element skeletons include the diamond and the pentagon") {
  auto sks = enumerate_lattice_skeletons(5);
  auto key_of = [](const FiniteLattice& L) { return detail::lattice_key(L); };
  int found = 0;
  for (const auto& L : sks) {
    if (key_of(L) == key_of(diamond_lattice())) ++found;
    if (key_of(L) == key_of(pentagon_lattice())) ++found;
  }
  CHECK(found == 2);
}

TEST_CASE("isomorphism testing") {
  SECTION("Id(Z4) and Id(Z9) are isomorphic three-element MV chains") {
    auto cert = are_isomorphic(id_of_zn(4), id_of_zn(9));
    REQUIRE(cert.has_value());
    CHECK(cert->verified);
  }
  SECTION("Id(Z4) and the Goedel three-chain are not isomorphic") {
    auto g3 = ordinal_product(id_of_zn(2), id_of_zn(2));
    CHECK_FALSE(are_isomorphic(id_of_zn(4), g3).has_value());
  }
  SECTION("identity certificate on equal input") {
    auto L = five_elem_div_not_bl();
    auto cert = are_isomorphic(L, L);
    REQUIRE(cert.has_value());
    std::vector<int> id(L.size());
    std::iota(id.begin(), id.end(), 0);
    CHECK(cert->mapping == id);
  }
}

TEST_CASE("are_isomorphic behaves as an equivalence relation") {
  std::vector<ResiduatedLattice> pool;
  for (int n : {3, 4, 5}) {
    auto rep = enumerate_algebras(n, AlgebraFilter::divisible,
                                  EnumMethod::generate);
    for (auto& c : rep.classes) pool.push_back(c.rep);
  }
  std::mt19937 rng(7);
  auto relabeled = [&](const ResiduatedLattice& L) {
    // random carrier permutation applied to all tables
    const int n = L.size();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::uint8_t> leq(n * n);
    std::vector<int> odot(n * n), arrow(n * n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        leq[perm[x] * n + perm[y]] = L.lat.le(x, y) ? 1 : 0;
        odot[perm[x] * n + perm[y]] = perm[L.times(x, y)];
        arrow[perm[x] * n + perm[y]] = perm[L.implies(x, y)];
      }
    return validate_residuated(validate_lattice(n, leq), odot, arrow);
  };

  for (size_t i = 0; i < pool.size(); ++i) {
    const auto& A = pool[i];
    auto B = relabeled(A);
    auto C = relabeled(A);
    // reflexive, symmetric and transitive through the certificates
    REQUIRE(are_isomorphic(A, A).has_value());
    auto ab = are_isomorphic(A, B);
    auto ba = are_isomorphic(B, A);
    auto bc = are_isomorphic(B, C);
    auto ac = are_isomorphic(A, C);
    REQUIRE(ab.has_value());
    REQUIRE(ba.has_value());
    REQUIRE(bc.has_value());
    REQUIRE(ac.has_value());
    // canonical keys are relabeling invariants
    CHECK(canonical_key(A) == canonical_key(B));
    CHECK(canonical_key(B) == canonical_key(C));
    // distinct catalog classes never collide
    for (size_t j = i + 1; j < pool.size(); ++j)
      if (pool[j].size() == A.size())
        CHECK_FALSE(canonical_key(pool[j]) == canonical_key(A));
  }
}

TEST_CASE("enumeration counts for small sizes, both methods") {
  // divisible: 1, 2, 5, 10 at sizes 2..5; BL: 1, 2, 5, 9
  const std::vector<int> div_expected = {1, 2, 5, 10};
  const std::vector<int> bl_expected = {1, 2, 5, 9};
  for (int n = 2; n <= 5; ++n) {
    auto both =
        enumerate_algebras(n, AlgebraFilter::divisible, EnumMethod::both);
    CHECK(both.count() == div_expected[n - 2]);
    auto bl = enumerate_algebras(n, AlgebraFilter::bl, EnumMethod::both);
    CHECK(bl.count() == bl_expected[n - 2]);
  }
}

TEST_CASE("no divisible non-BL algebras below five elements") {
  for (int n = 2; n <= 4; ++n) {
    auto rep = enumerate_algebras(n, AlgebraFilter::divisible_not_bl,
                                  EnumMethod::both);
    CHECK(rep.count() == 0);
  }
}

TEST_CASE("at five elements exactly one divisible non-BL class") {
  auto rep = enumerate_algebras(5, AlgebraFilter::divisible_not_bl,
                                EnumMethod::both);
  REQUIRE(rep.count() == 1);
  CHECK(are_isomorphic(rep.classes[0].rep, five_elem_div_not_bl())
            .has_value());
  REQUIRE(rep.classes[0].rep.provenance);
  CHECK(render_expr(*rep.classes[0].rep.provenance) == "Id(Z2xZ2) . Id(Z2)");
}

TEST_CASE("every enumerated algebra validates and matches its filter") {
  for (int n = 2; n <= 5; ++n)
    for (auto filter : {AlgebraFilter::all, AlgebraFilter::divisible,
                        AlgebraFilter::mv, AlgebraFilter::chain}) {
      if (filter != AlgebraFilter::all && filter != AlgebraFilter::chain) {
        auto rep = enumerate_algebras(n, filter, EnumMethod::generate);
        for (const auto& c : rep.classes)
          CHECK(filter_accepts(filter, check_properties(c.rep)));
      }
      auto rep = enumerate_algebras(n, filter, EnumMethod::brute);
      for (const auto& c : rep.classes) {
        auto revalidated = validate_residuated(c.rep.lat, c.rep.odot,
                                               c.rep.arrow);
        CHECK(revalidated.size() == n);
        CHECK(filter_accepts(filter, check_properties(c.rep)));
      }
    }
}

TEST_CASE("size guard on brute enumeration") {
  CHECK_THROWS_AS(
      enumerate_algebras(7, AlgebraFilter::divisible, EnumMethod::brute),
      error);
}

TEST_CASE("generate method refuses non-divisible filters") {
  CHECK_THROWS_AS(
      enumerate_algebras(4, AlgebraFilter::all, EnumMethod::generate), error);
}

TEST_CASE("threaded brute enumeration matches single-threaded output") {
  EnumerateOptions seq, par;
  par.threads = 2;
  auto a = enumerate_algebras(5, AlgebraFilter::divisible, EnumMethod::brute,
                              seq);
  auto b = enumerate_algebras(5, AlgebraFilter::divisible, EnumMethod::brute,
                              par);
  REQUIRE(a.count() == b.count());
  for (int i = 0; i < a.count(); ++i) {
    CHECK(a.classes[i].key == b.classes[i].key);
    CHECK(a.classes[i].rep.odot == b.classes[i].rep.odot);
  }
}

TEST_CASE("chain counts agree between divisible and BL classes") {
  for (int n = 2; n <= 5; ++n) {
    auto div_chains = enumerate_algebras(n, AlgebraFilter::divisible_chain,
                                         EnumMethod::both);
    auto bl_chains =
        enumerate_algebras(n, AlgebraFilter::bl_chain, EnumMethod::both);
    CHECK(div_chains.count() == bl_chains.count());
  }
}

TEST_CASE("table reports reproduce the counts and reference structures") {
  auto rep = table_reports(5);
  CHECK(rep.bl_counts == std::vector<int>{1, 2, 5, 9});
  CHECK(rep.div_counts == std::vector<int>{1, 2, 5, 10});
  CHECK(rep.bl_structure.size() == 17);
  CHECK(rep.div_not_bl_structure.size() == 1);
  CHECK(rep.div_not_bl_structure[0].expr == "Id(Z2xZ2) . Id(Z2)");
  for (const auto& row : rep.bl_structure) CHECK_FALSE(row.expr.empty());
}
