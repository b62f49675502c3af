#pragma once

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "residua/expr.hpp"
#include "residua/ideal_lattice.hpp"
#include "residua/properties.hpp"
#include "residua/residuated.hpp"

namespace residua {

/// Ordinal product of two BL-algebras: the top of the first factor is
/// identified with the bottom of the second, every element of the first lies
/// below every element of the second, and the monoid acts factor-wise with
/// lower elements absorbing mixed products.  The result carrier keeps the
/// first factor's indices and appends the non-bottom part of the second, so
/// the construction is total on abstract algebras and deterministic.
inline ResiduatedLattice ordinal_product(const ResiduatedLattice& L1,
                                         const ResiduatedLattice& L2) {
  PropertyReport p1 = check_properties(L1);
  if (!p1.is_bl)
    fail(errc::not_bl_algebra, "left factor is not a BL-algebra");
  PropertyReport p2 = check_properties(L2);
  if (!p2.is_bl)
    fail(errc::not_bl_algebra, "right factor is not a BL-algebra");

  const int n1 = L1.size(), n2 = L2.size();
  const int n = n1 + n2 - 1;
  const int glue = L1.lat.top;  // also the image of L2's bottom

  // Index map for the second factor: bottom goes to the glue point, the rest
  // follow after the first factor's block in their original order.
  std::vector<int> up(n2);
  {
    int next = n1;
    for (int j = 0; j < n2; ++j)
      up[j] = (j == L2.lat.bottom) ? glue : next++;
  }
  std::vector<int> down(n, -1);
  for (int j = 0; j < n2; ++j) down[up[j]] = j;

  auto in_lower = [&](int x) { return x < n1; };
  auto in_upper = [&](int x) { return down[x] >= 0; };

  std::vector<std::uint8_t> leq(n * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      bool le;
      if (in_lower(x) && in_lower(y))
        le = L1.lat.le(x, y);
      else if (in_upper(x) && in_upper(y))
        le = L2.lat.le(down[x], down[y]);
      else
        le = in_lower(x);  // lower block below upper block
      leq[x * n + y] = le ? 1 : 0;
    }

  std::vector<int> odot(n * n, 0), arrow(n * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int t;
      if (in_lower(x) && in_lower(y))
        t = L1.times(x, y);
      else if (in_upper(x) && in_upper(y))
        t = up[L2.times(down[x], down[y])];
      else if (in_lower(x) && x != glue)
        t = x;  // strict lower element absorbs anything above it
      else
        t = y;
      odot[x * n + y] = t;

      int a;
      if (leq[x * n + y])
        a = up[L2.lat.top];
      else if (in_lower(x) && in_lower(y))
        a = L1.implies(x, y);
      else if (in_upper(x) && in_upper(y))
        a = up[L2.implies(down[x], down[y])];
      else
        a = y;  // x strictly above a lower y: the residuum collapses to y
      arrow[x * n + y] = a;
    }

  std::vector<std::string> labels;
  if (!L1.lat.labels.empty() && !L2.lat.labels.empty()) {
    labels.resize(n);
    for (int x = 0; x < n1; ++x) labels[x] = L1.lat.label(x);
    for (int j = 0; j < n2; ++j)
      if (j != L2.lat.bottom) labels[up[j]] = L2.lat.label(j);
  }

  ResiduatedLattice out =
      validate_residuated(validate_lattice(n, leq, std::move(labels)), odot,
                          arrow);
  if (L1.provenance && L2.provenance)
    out.provenance = std::make_shared<AlgebraExpr>(
        AlgebraExpr::OrdProd(*L1.provenance, *L2.provenance));
  return out;
}

/// Componentwise direct product.  Id(A) x Id(B) is Id(A x B), so provenance
/// composes into a product ring spec when both factors came from rings.
inline ResiduatedLattice direct_product(const ResiduatedLattice& L1,
                                        const ResiduatedLattice& L2) {
  const int n1 = L1.size(), n2 = L2.size();
  const int n = n1 * n2;
  auto id = [&](int i, int j) { return i * n2 + j; };

  std::vector<std::uint8_t> leq(n * n, 0);
  std::vector<int> odot(n * n, 0), arrow(n * n, 0);
  for (int i1 = 0; i1 < n1; ++i1)
    for (int j1 = 0; j1 < n2; ++j1)
      for (int i2 = 0; i2 < n1; ++i2)
        for (int j2 = 0; j2 < n2; ++j2) {
          int x = id(i1, j1), y = id(i2, j2);
          leq[x * n + y] = L1.lat.le(i1, i2) && L2.lat.le(j1, j2) ? 1 : 0;
          odot[x * n + y] = id(L1.times(i1, i2), L2.times(j1, j2));
          arrow[x * n + y] = id(L1.implies(i1, i2), L2.implies(j1, j2));
        }

  ResiduatedLattice out =
      validate_residuated(validate_lattice(n, leq), odot, arrow);
  if (L1.provenance && L2.provenance &&
      L1.provenance->kind == AlgebraExpr::Kind::ring &&
      L2.provenance->kind == AlgebraExpr::Kind::ring) {
    std::vector<RingSpec> fs;
    auto flatten = [&](const RingSpec& s) {
      if (s.kind == RingSpec::Kind::product)
        for (const auto& f : s.factors) fs.push_back(f);
      else
        fs.push_back(s);
    };
    flatten(L1.provenance->spec);
    flatten(L2.provenance->spec);
    out.provenance = std::make_shared<AlgebraExpr>(
        AlgebraExpr::Ring(RingSpec::Product(std::move(fs))));
  }
  return out;
}

using LiteralResolver =
    std::function<ResiduatedLattice(const std::string& name)>;

/// Evaluates an expression bottom-up.  Every ordinal-product child must be a
/// BL-algebra; failures carry the path of the offending subexpression.
inline ResiduatedLattice evaluate_expr(const AlgebraExpr& e,
                                       const LiteralResolver& resolve_literal,
                                       const std::string& path = "") {
  auto here = [&](const char* leg) {
    return path.empty() ? std::string(leg) : path + "." + leg;
  };
  switch (e.kind) {
    case AlgebraExpr::Kind::ring: {
      ResiduatedLattice L = build_ideal_lattice(build_ring(e.spec)).algebra;
      L.provenance = std::make_shared<AlgebraExpr>(e);
      return L;
    }
    case AlgebraExpr::Kind::literal: {
      if (!resolve_literal)
        fail(errc::bad_input,
             "no literal resolver supplied for " + e.literal_name);
      ResiduatedLattice L = resolve_literal(e.literal_name);
      L.provenance = std::make_shared<AlgebraExpr>(e);
      return L;
    }
    case AlgebraExpr::Kind::ordprod: {
      ResiduatedLattice l = evaluate_expr(*e.left, resolve_literal,
                                          here("left"));
      ResiduatedLattice r = evaluate_expr(*e.right, resolve_literal,
                                          here("right"));
      if (!check_properties(l).is_bl)
        fail(errc::not_bl_algebra,
             "subexpression at '" + here("left") + "' is not a BL-algebra");
      if (!check_properties(r).is_bl)
        fail(errc::not_bl_algebra,
             "subexpression at '" + here("right") + "' is not a BL-algebra");
      ResiduatedLattice out = ordinal_product(l, r);
      out.provenance = std::make_shared<AlgebraExpr>(e);
      return out;
    }
  }
  fail(errc::bad_input, "unknown expression kind");
}

}  // namespace residua
