#pragma once

#include <optional>
#include <string>
#include <vector>

#include "residua/residuated.hpp"

namespace residua {

/// Property flags for a validated residuated lattice.  Every false flag
/// carries the first counterexample tuple in carrier-index order.
struct PropertyReport {
  bool is_residuated_lattice = true;
  bool is_divisible = false;
  bool is_prelinear = false;
  bool is_bl = false;
  bool is_mv = false;
  bool is_heyting = false;
  bool is_chain = false;
  std::optional<std::vector<int>> divisibility_witness;
  std::optional<std::vector<int>> prelinearity_witness;
  std::optional<std::vector<int>> mv_witness;
  std::optional<std::vector<int>> heyting_witness;
  std::optional<std::vector<int>> chain_witness;
};

/// Evaluates x*(x->y) = x/\y, (x->y)\/(y->x) = top, x** = x, x*x = x and
/// totality of the order over all tuples.
inline PropertyReport check_properties(const ResiduatedLattice& L) {
  PropertyReport r;
  const int n = L.size();

  r.is_divisible = true;
  for (int x = 0; x < n && r.is_divisible; ++x)
    for (int y = 0; y < n; ++y)
      if (L.times(x, L.implies(x, y)) != L.lat.meet(x, y)) {
        r.is_divisible = false;
        r.divisibility_witness = std::vector<int>{x, y};
        break;
      }

  r.is_prelinear = true;
  for (int x = 0; x < n && r.is_prelinear; ++x)
    for (int y = 0; y < n; ++y)
      if (L.lat.join(L.implies(x, y), L.implies(y, x)) != L.lat.top) {
        r.is_prelinear = false;
        r.prelinearity_witness = std::vector<int>{x, y};
        break;
      }

  r.is_bl = r.is_divisible && r.is_prelinear;

  r.is_mv = r.is_bl;
  if (!r.is_bl) {
    r.mv_witness = r.divisibility_witness ? r.divisibility_witness
                                          : r.prelinearity_witness;
  } else {
    for (int x = 0; x < n; ++x)
      if (L.star(L.star(x)) != x) {
        r.is_mv = false;
        r.mv_witness = std::vector<int>{x};
        break;
      }
  }

  r.is_heyting = true;
  for (int x = 0; x < n; ++x)
    if (L.times(x, x) != x) {
      r.is_heyting = false;
      r.heyting_witness = std::vector<int>{x};
      break;
    }

  r.is_chain = true;
  for (int x = 0; x < n && r.is_chain; ++x)
    for (int y = x + 1; y < n; ++y)
      if (!L.lat.le(x, y) && !L.lat.le(y, x)) {
        r.is_chain = false;
        r.chain_witness = std::vector<int>{x, y};
        break;
      }

  return r;
}

/// Evaluates three characterizations of divisibility that must agree on any
/// valid input: the identity x*(x->y) = x/\y, factorization (y <= x implies
/// y = z*x for some z), and z->(x*(x->y)) = z->(x/\y) for all z.  Returns
/// their shared truth value; disagreement signals an implementation bug and
/// raises EquivalenceBroken with all three verdicts.
inline bool check_divisibility_equivalences(const ResiduatedLattice& L) {
  const int n = L.size();

  bool ident = true;
  std::vector<int> ident_w;
  for (int x = 0; x < n && ident; ++x)
    for (int y = 0; y < n; ++y)
      if (L.times(x, L.implies(x, y)) != L.lat.meet(x, y)) {
        ident = false;
        ident_w = {x, y};
        break;
      }

  bool factor = true;
  std::vector<int> factor_w;
  for (int x = 0; x < n && factor; ++x)
    for (int y = 0; y < n; ++y) {
      if (!L.lat.le(y, x)) continue;
      bool found = false;
      for (int z = 0; z < n && !found; ++z) found = L.times(z, x) == y;
      if (!found) {
        factor = false;
        factor_w = {x, y};
        break;
      }
    }

  bool relative = true;
  std::vector<int> relative_w;
  for (int x = 0; x < n && relative; ++x)
    for (int y = 0; y < n && relative; ++y) {
      int lhs_arg = L.times(x, L.implies(x, y));
      int rhs_arg = L.lat.meet(x, y);
      for (int z = 0; z < n; ++z)
        if (L.implies(z, lhs_arg) != L.implies(z, rhs_arg)) {
          relative = false;
          relative_w = {x, y, z};
          break;
        }
    }

  if (ident != factor || ident != relative) {
    std::string msg = std::string("divisibility criteria disagree: identity=") +
                      (ident ? "true" : "false") +
                      " factorization=" + (factor ? "true" : "false") +
                      " relative=" + (relative ? "true" : "false");
    fail(errc::equivalence_broken, msg,
         !ident_w.empty() ? ident_w
                          : (!factor_w.empty() ? factor_w : relative_w));
  }
  return ident;
}

struct IdentityCheck {
  std::string name;
  bool pass = true;
  std::vector<int> witness;
};

struct IdentitySuiteReport {
  std::vector<IdentityCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Identity suite over a divisible residuated lattice, with u* = u -> bottom:
///   c1: ((x** -> x))* = bottom
///   c2: (x -> y)** = x** -> y**
///   c3: (x * y)** = x** * ((x** /\ y*))*
///   c4: (x /\ y)** = x** /\ y**
///   c5: y* <= x  implies  x -> (x*y)** = y**
/// c3's right-hand side is transcribed without algebraic simplification.
inline IdentitySuiteReport check_identities_c1_c5(const ResiduatedLattice& L) {
  PropertyReport props = check_properties(L);
  if (!props.is_divisible)
    fail(errc::precondition_not_divisible,
         "identity suite requires a divisible residuated lattice",
         props.divisibility_witness.value_or(std::vector<int>{}));

  const int n = L.size();
  auto nn = [&](int x) { return L.star(L.star(x)); };

  IdentitySuiteReport rep;
  rep.checks.resize(5);
  for (int i = 0; i < 5; ++i) rep.checks[i].name = "c" + std::to_string(i + 1);

  auto& c1 = rep.checks[0];
  for (int x = 0; x < n && c1.pass; ++x)
    if (L.star(L.implies(nn(x), x)) != L.lat.bottom) {
      c1.pass = false;
      c1.witness = {x};
    }

  auto& c2 = rep.checks[1];
  for (int x = 0; x < n && c2.pass; ++x)
    for (int y = 0; y < n; ++y)
      if (nn(L.implies(x, y)) != L.implies(nn(x), nn(y))) {
        c2.pass = false;
        c2.witness = {x, y};
        break;
      }

  auto& c3 = rep.checks[2];
  for (int x = 0; x < n && c3.pass; ++x)
    for (int y = 0; y < n; ++y) {
      int rhs = L.times(nn(x), L.star(L.lat.meet(nn(x), L.star(y))));
      if (nn(L.times(x, y)) != rhs) {
        c3.pass = false;
        c3.witness = {x, y};
        break;
      }
    }

  auto& c4 = rep.checks[3];
  for (int x = 0; x < n && c4.pass; ++x)
    for (int y = 0; y < n; ++y)
      if (nn(L.lat.meet(x, y)) != L.lat.meet(nn(x), nn(y))) {
        c4.pass = false;
        c4.witness = {x, y};
        break;
      }

  auto& c5 = rep.checks[4];
  for (int x = 0; x < n && c5.pass; ++x)
    for (int y = 0; y < n; ++y) {
      if (!L.lat.le(L.star(y), x)) continue;
      if (L.implies(x, nn(L.times(x, y))) != nn(y)) {
        c5.pass = false;
        c5.witness = {x, y};
        break;
      }
    }

  return rep;
}

}  // namespace residua
