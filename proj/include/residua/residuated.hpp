#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "residua/core.hpp"
#include "residua/lattice.hpp"

namespace residua {

struct AlgebraExpr;  // construction descriptor, see expr.hpp

/// A finite commutative residuated lattice: a bounded lattice together with
/// a monoid table (identity = top) and its residuum table.  The arrow table
/// is always materialized; it equals max{z : x*z <= y} entry by entry.
struct ResiduatedLattice {
  FiniteLattice lat;
  std::vector<int> odot;
  std::vector<int> arrow;
  std::shared_ptr<const AlgebraExpr> provenance;

  int size() const { return lat.size; }
  int times(int x, int y) const { return odot[x * lat.size + y]; }
  int implies(int x, int y) const { return arrow[x * lat.size + y]; }
  /// x* = x -> bottom
  int star(int x) const { return implies(x, lat.bottom); }
};

namespace detail {

struct ResiduationCheck {
  bool ok = false;
  errc code = errc::validation_failed;
  std::vector<int> witness;
  std::string detail;
  std::vector<int> arrow;  // derived residuum table, filled when ok
};

/// Non-throwing core behind validate_residuated.  Checks, in order:
/// associativity, identity, monotonicity, existence of a two-sided residuum
/// for every pair, commutativity, and the adjunction itself.  The residuum
/// phase requires, for each (x,y), a greatest z with x*z <= y and that
/// {z : x*z <= y} and {z : z*x <= y} coincide; a commutative residuated
/// monoid satisfies both, and any non-commutative candidate fails here with
/// the offending pair as witness.
inline ResiduationCheck check_residuated_tables(
    const FiniteLattice& L, const std::vector<int>& odot,
    const std::vector<int>* given_arrow) {
  ResiduationCheck r;
  const int n = L.size;
  auto res = [&](errc c, std::vector<int> w, std::string d) {
    r.ok = false;
    r.code = c;
    r.witness = std::move(w);
    r.detail = std::move(d);
    return r;
  };

  if (static_cast<int>(odot.size()) != n * n)
    return res(errc::bad_input, {}, "monoid table must be size x size");
  for (int i = 0; i < n * n; ++i)
    if (odot[i] < 0 || odot[i] >= n)
      return res(errc::bad_input, {i / n, i % n}, "table entry out of range");
  if (given_arrow && static_cast<int>(given_arrow->size()) != n * n)
    return res(errc::bad_input, {}, "arrow table must be size x size");

  auto t = [&](int x, int y) { return odot[x * n + y]; };

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (t(t(x, y), z) != t(x, t(y, z)))
          return res(errc::monoid_violation, {x, y, z},
                     "associativity fails at (" + L.label(x) + "," +
                         L.label(y) + "," + L.label(z) + ")");

  for (int x = 0; x < n; ++x)
    if (t(L.top, x) != x)
      return res(errc::monoid_violation, {x},
                 "top is not an identity at " + L.label(x));

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!L.le(x, y)) continue;
      for (int z = 0; z < n; ++z) {
        if (!L.le(t(x, z), t(y, z)))
          return res(errc::monoid_violation, {x, y, z},
                     "monotonicity fails: " + L.label(x) +
                         " <= " + L.label(y) + " but not " +
                         L.label(t(x, z)) + " <= " + L.label(t(y, z)));
        if (!L.le(t(z, x), t(z, y)))
          return res(errc::monoid_violation, {z, x, y},
                     "monotonicity fails in the second argument at (" +
                         L.label(z) + "," + L.label(x) + "," + L.label(y) +
                         ")");
      }
    }

  r.arrow.assign(n * n, 0);
  std::vector<char> set(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) set[z] = L.le(t(x, z), y);
      int m = greatest_of(n, L.leq, set);
      if (m < 0)
        return res(errc::residuum_missing, {x, y},
                   "{z : " + L.label(x) + "*z <= " + L.label(y) +
                       "} has no greatest element");
      for (int z = 0; z < n; ++z)
        if (static_cast<bool>(set[z]) != L.le(t(z, x), y))
          return res(errc::residuum_missing, {x, y},
                     "left and right residua of (" + L.label(x) + "," +
                         L.label(y) + ") differ at z = " + L.label(z));
      r.arrow[x * n + y] = m;
    }

  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (t(x, y) != t(y, x))
        return res(errc::monoid_violation, {x, y},
                   "commutativity fails at (" + L.label(x) + "," +
                       L.label(y) + ")");

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (L.le(z, r.arrow[x * n + y]) != L.le(t(x, z), y))
          return res(errc::validation_failed, {x, y, z},
                     "adjunction does not hold for the derived arrow");

  if (given_arrow) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if ((*given_arrow)[x * n + y] != r.arrow[x * n + y])
          return res(errc::arrow_mismatch, {x, y},
                     "stored arrow at (" + L.label(x) + "," + L.label(y) +
                         ") is " + L.label((*given_arrow)[x * n + y]) +
                         ", derived " + L.label(r.arrow[x * n + y]));
  }

  r.ok = true;
  return r;
}

}  // namespace detail

/// Validates the monoid laws and residuation over a valid lattice.  When an
/// arrow table is supplied it must agree with the derived one; otherwise the
/// derived table is installed.  Throws on the first violated axiom.
inline ResiduatedLattice validate_residuated(
    FiniteLattice lat, std::vector<int> odot,
    std::optional<std::vector<int>> arrow = std::nullopt) {
  auto chk = detail::check_residuated_tables(lat, odot,
                                             arrow ? &*arrow : nullptr);
  if (!chk.ok) fail(chk.code, chk.detail, chk.witness);
  ResiduatedLattice L;
  L.lat = std::move(lat);
  L.odot = std::move(odot);
  L.arrow = std::move(chk.arrow);
  return L;
}

}  // namespace residua
