#pragma once

#include <optional>
#include <string>
#include <vector>

#include "residua/ideals.hpp"
#include "residua/properties.hpp"
#include "residua/residuated.hpp"

namespace residua {

/// The residuated lattice of ideals of a commutative ring: order is
/// inclusion, meet is intersection, join is ideal sum, the monoid is ideal
/// product and the arrow is the ideal quotient (J : I).
struct IdealLattice {
  FiniteRing ring;
  std::vector<Ideal> ideals;
  ResiduatedLattice algebra;
};

namespace detail {

struct IdealTables {
  FiniteLattice lattice;
  std::vector<int> odot;
  std::vector<Ideal> ideals;
};

/// Order, meet/join and the product table over the ideal list, for any
/// sidedness.  No residuation is assumed; callers validate.
inline IdealTables ideal_lattice_tables(const FiniteRing& R, Sidedness side) {
  IdealTables T;
  T.ideals = enumerate_ideals(R, side);
  const int m = static_cast<int>(T.ideals.size());
  auto index_of = [&](std::uint64_t mask) {
    for (int i = 0; i < m; ++i)
      if (T.ideals[i].mask == mask) return i;
    fail(errc::validation_failed, "ideal operation left the ideal lattice");
  };

  std::vector<std::uint8_t> leq(m * m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      leq[i * m + j] = T.ideals[i].subset_of(T.ideals[j]) ? 1 : 0;

  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) labels[i] = ideal_label(R, T.ideals[i], side);

  T.lattice = validate_lattice(m, leq, labels);
  T.odot.assign(m * m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      T.odot[i * m + j] =
          index_of(ideal_product(R, T.ideals[i], T.ideals[j], side).mask);
  return T;
}

}  // namespace detail

/// Lattice skeleton plus product table for the ideals of any ring, including
/// noncommutative ones in left/right mode.  The result is a candidate for
/// validate_residuated, not a validated algebra.
inline detail::IdealTables ideal_monoid_candidate(
    const FiniteRing& R, Sidedness side = Sidedness::twosided) {
  return detail::ideal_lattice_tables(R, side);
}

/// Builds and validates Id(A) for a commutative unitary ring.  Validation
/// failure here indicates an implementation bug, not bad input.
inline IdealLattice build_ideal_lattice(const FiniteRing& R) {
  expect(R.commutative, errc::non_commutative_ring,
         "ideal lattice of a noncommutative ring is not a residuated "
         "lattice candidate; use ideal_monoid_candidate");
  auto T = detail::ideal_lattice_tables(R, Sidedness::twosided);
  const int m = static_cast<int>(T.ideals.size());
  auto index_of = [&](std::uint64_t mask) {
    for (int i = 0; i < m; ++i)
      if (T.ideals[i].mask == mask) return i;
    fail(errc::validation_failed, "ideal operation left the ideal lattice");
  };
  std::vector<int> arrow(m * m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      arrow[i * m + j] =
          index_of(ideal_quotient(R, T.ideals[j], T.ideals[i]).mask);

  IdealLattice out;
  out.ring = R;
  out.ideals = T.ideals;
  out.algebra = validate_residuated(T.lattice, T.odot, arrow);
  return out;
}

struct MultiplicationVerdict {
  bool value = false;
  // First pair (I, J) with I(x)(J:I) != I/\J, as indices into the ideal list.
  std::optional<std::pair<int, int>> witness;
  std::string witness_text;
};

/// Decides whether a commutative ring is a multiplication ring.  Three
/// characterizations are evaluated and must agree: every J inside I factors
/// as I(x)K (table scan over Id(A)); I(x)(J:I) = I/\J for all pairs,
/// recomputed with direct ideal arithmetic; and divisibility of Id(A).
inline MultiplicationVerdict is_multiplication_ring(const FiniteRing& R) {
  expect(R.commutative, errc::non_commutative_ring,
         "multiplication-ring test requires a commutative ring");
  IdealLattice IL = build_ideal_lattice(R);
  const auto& ideals = IL.ideals;
  const auto& A = IL.algebra;
  const int m = static_cast<int>(ideals.size());

  bool factorizes = true;
  for (int i = 0; i < m && factorizes; ++i)
    for (int j = 0; j < m; ++j) {
      if (!A.lat.le(j, i)) continue;
      bool found = false;
      for (int k = 0; k < m && !found; ++k) found = A.times(i, k) == j;
      if (!found) {
        factorizes = false;
        break;
      }
    }

  MultiplicationVerdict v;
  bool quotient_law = true;
  for (int i = 0; i < m && quotient_law; ++i)
    for (int j = 0; j < m; ++j) {
      Ideal lhs = ideal_product(R, ideals[i],
                                ideal_quotient(R, ideals[j], ideals[i]));
      Ideal rhs = Ideal{ideals[i].mask & ideals[j].mask};
      if (!(lhs == rhs)) {
        quotient_law = false;
        v.witness = {i, j};
        v.witness_text = "I = " + ideal_label(R, ideals[i]) +
                         ", J = " + ideal_label(R, ideals[j]) +
                         ": I(x)(J:I) = " + ideal_label(R, lhs) +
                         " but I/\\J = " + ideal_label(R, rhs);
        break;
      }
    }

  bool divisible = check_properties(A).is_divisible;

  if (factorizes != quotient_law || quotient_law != divisible)
    fail(errc::criteria_disagree,
         std::string("multiplication-ring criteria disagree: factorization=") +
             (factorizes ? "true" : "false") +
             " quotient-law=" + (quotient_law ? "true" : "false") +
             " divisibility=" + (divisible ? "true" : "false"));

  v.value = quotient_law;
  if (v.value) v.witness.reset();
  return v;
}

struct DistributivityReport {
  bool c6 = true;  // I(x)(J/\K) = (I(x)J)/\(I(x)K)
  bool c7 = true;  // I/\(J+K) = (I/\J)+(I/\K)
  std::optional<std::vector<int>> c6_witness;
  std::optional<std::vector<int>> c7_witness;
  bool all_pass() const { return c6 && c7; }
};

/// Verifies the two ideal distributivity identities over all triples.  c7 is
/// the arithmetical-ring property (a distributive ideal lattice).  Product,
/// sum and intersection are precomputed as index tables so the triple scan
/// is lookups only.
inline DistributivityReport check_c6_c7(const FiniteRing& R) {
  auto mult = is_multiplication_ring(R);
  if (!mult.value)
    fail(errc::precondition_not_multiplication,
         "c6/c7 suite requires a multiplication ring; " + mult.witness_text,
         mult.witness ? std::vector<int>{mult.witness->first,
                                         mult.witness->second}
                      : std::vector<int>{});
  IdealLattice IL = build_ideal_lattice(R);
  const auto& A = IL.algebra;
  const int m = static_cast<int>(IL.ideals.size());
  auto prod = [&](int i, int j) { return A.times(i, j); };
  auto cap = [&](int i, int j) { return A.lat.meet(i, j); };
  auto plus = [&](int i, int j) { return A.lat.join(i, j); };

  DistributivityReport rep;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) {
        if (rep.c6 && prod(i, cap(j, k)) != cap(prod(i, j), prod(i, k))) {
          rep.c6 = false;
          rep.c6_witness = std::vector<int>{i, j, k};
        }
        if (rep.c7 && cap(i, plus(j, k)) != plus(cap(i, j), cap(i, k))) {
          rep.c7 = false;
          rep.c7_witness = std::vector<int>{i, j, k};
        }
      }
  return rep;
}

struct RingLogicReport {
  bool divisible = false;
  bool mtl = false;      // Id(A) prelinear
  bool bl = false;
  bool mv = false;
  bool heyting = false;
  bool chain = false;
  bool multiplication = false;
  bool ann_ann_identity = false;  // Ann(Ann(I)) = I for every ideal
};

/// Logic-algebra classification of Id(A), cross-checked against the ring
/// level: BL iff MTL and multiplication; MV iff additionally Ann(Ann(I)) = I
/// for every ideal.  The double annihilator is computed on ideals directly,
/// independently of the algebra's double negation.
inline RingLogicReport classify_ring_logic(const FiniteRing& R) {
  IdealLattice IL = build_ideal_lattice(R);
  PropertyReport props = check_properties(IL.algebra);
  MultiplicationVerdict mult = is_multiplication_ring(R);

  RingLogicReport rep;
  rep.divisible = props.is_divisible;
  rep.mtl = props.is_prelinear;
  rep.bl = props.is_bl;
  rep.mv = props.is_mv;
  rep.heyting = props.is_heyting;
  rep.chain = props.is_chain;
  rep.multiplication = mult.value;

  rep.ann_ann_identity = true;
  for (const Ideal& I : IL.ideals)
    if (!(annihilator(R, annihilator(R, I)) == I)) {
      rep.ann_ann_identity = false;
      break;
    }

  if (rep.bl != (rep.mtl && rep.multiplication))
    fail(errc::criteria_disagree,
         "BL-ring does not match MTL-ring + multiplication ring");
  if (rep.mv != (rep.mtl && rep.multiplication && rep.ann_ann_identity))
    fail(errc::criteria_disagree,
         "MV-ring does not match multiplication MTL-ring + double "
         "annihilator identity");
  return rep;
}

}  // namespace residua
