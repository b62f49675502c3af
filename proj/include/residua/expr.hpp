#pragma once

#include <memory>
#include <string>
#include <utility>

#include "residua/ring.hpp"

namespace residua {

/// Names how an algebra was built: the ideal lattice of a ring, an ordinal
/// product of two algebras, or a literal loaded from a lattice file.
struct AlgebraExpr {
  enum class Kind { ring, ordprod, literal };

  Kind kind = Kind::ring;
  RingSpec spec;                             // ring
  std::shared_ptr<const AlgebraExpr> left;   // ordprod
  std::shared_ptr<const AlgebraExpr> right;  // ordprod
  std::string literal_name;                  // literal

  static AlgebraExpr Ring(RingSpec s) {
    AlgebraExpr e;
    e.kind = Kind::ring;
    e.spec = std::move(s);
    return e;
  }
  static AlgebraExpr OrdProd(AlgebraExpr l, AlgebraExpr r) {
    AlgebraExpr e;
    e.kind = Kind::ordprod;
    e.left = std::make_shared<AlgebraExpr>(std::move(l));
    e.right = std::make_shared<AlgebraExpr>(std::move(r));
    return e;
  }
  static AlgebraExpr Literal(std::string name) {
    AlgebraExpr e;
    e.kind = Kind::literal;
    e.literal_name = std::move(name);
    return e;
  }
};

/// Renders an expression with "." as the ordinal product token, e.g.
/// "Id(Z2) . Id(Z4)" or "(Id(Z4) . Id(Z2)) . Id(Z2)".
inline std::string render_expr(const AlgebraExpr& e) {
  switch (e.kind) {
    case AlgebraExpr::Kind::ring:
      return "Id(" + ring_short_name(e.spec) + ")";
    case AlgebraExpr::Kind::literal:
      return e.literal_name;
    case AlgebraExpr::Kind::ordprod: {
      auto wrap = [](const AlgebraExpr& c) {
        std::string s = render_expr(c);
        return c.kind == AlgebraExpr::Kind::ordprod ? "(" + s + ")" : s;
      };
      return wrap(*e.left) + " . " + wrap(*e.right);
    }
  }
  return "?";
}

}  // namespace residua
