#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "residua/enumerate.hpp"
#include "residua/ordinal.hpp"

namespace residua {

struct ReferenceEntry {
  int n = 0;
  AlgebraExpr expr;
  bool chain = false;
};

namespace detail {

inline AlgebraExpr idz(int k) { return AlgebraExpr::Ring(RingSpec::Zn(k)); }

inline AlgebraExpr idz2xz2() {
  return AlgebraExpr::Ring(
      RingSpec::Product({RingSpec::Zn(2), RingSpec::Zn(2)}));
}

}  // namespace detail

/// Curated generating expressions for every BL-algebra with 2..5 elements,
/// one per isomorphism class, with its chain flag.
inline const std::vector<ReferenceEntry>& bl_reference_expressions() {
  using detail::idz;
  using detail::idz2xz2;
  using E = AlgebraExpr;
  static const std::vector<ReferenceEntry> entries = {
      {2, idz(2), true},

      {3, idz(4), true},
      {3, E::OrdProd(idz(2), idz(2)), true},

      {4, idz(8), true},
      {4, idz2xz2(), false},
      {4, E::OrdProd(idz(2), idz(4)), true},
      {4, E::OrdProd(idz(4), idz(2)), true},
      {4, E::OrdProd(idz(2), E::OrdProd(idz(2), idz(2))), true},

      {5, idz(16), true},
      {5, E::OrdProd(idz(2), idz(8)), true},
      {5, E::OrdProd(idz(2), idz2xz2()), false},
      {5, E::OrdProd(idz(2), E::OrdProd(idz(2), idz(4))), true},
      {5, E::OrdProd(idz(2), E::OrdProd(idz(4), idz(2))), true},
      {5, E::OrdProd(idz(2), E::OrdProd(idz(2), E::OrdProd(idz(2), idz(2)))),
       true},
      {5, E::OrdProd(idz(8), idz(2)), true},
      {5, E::OrdProd(E::OrdProd(idz(4), idz(2)), idz(2)), true},
      {5, E::OrdProd(idz(4), idz(4)), true},
  };
  return entries;
}

/// Generating expressions for every divisible-but-not-BL class with up to
/// six elements (none exist below five).
inline const std::vector<ReferenceEntry>& divisible_not_bl_reference_expressions() {
  using detail::idz;
  using detail::idz2xz2;
  using E = AlgebraExpr;
  static const std::vector<ReferenceEntry> entries = {
      {5, E::OrdProd(idz2xz2(), idz(2)), false},

      {6, E::OrdProd(E::OrdProd(idz(2), idz2xz2()), idz(2)), false},
      {6, E::OrdProd(idz2xz2(), E::OrdProd(idz(2), idz(2))), false},
      {6, E::OrdProd(idz2xz2(), idz(4)), false},
  };
  return entries;
}

struct StructureRow {
  int n = 0;
  std::string expr;       // rendered reference expression, empty if unmatched
  std::string provenance; // rendered provenance of the representative, if any
  bool chain = false;
};

struct TableReports {
  int max_n = 6;
  std::vector<int> bl_counts;   // index 0 = n=2
  std::vector<int> div_counts;
  std::vector<StructureRow> bl_structure;       // sizes 2..min(max_n,5)
  std::vector<StructureRow> div_not_bl_structure;  // sizes 2..max_n
  std::string text;
};

/// Builds the count table plus the structure listings.  Every BL class of
/// size up to five must match exactly one reference expression, and vice
/// versa; a mismatch raises CatalogIncomplete.  Divisible-not-BL classes are
/// matched against the size <= 6 reference list, falling back to the class
/// provenance, or to "(no expression provenance)".
inline TableReports table_reports(int max_n = 6,
                                  EnumMethod method = EnumMethod::generate,
                                  EnumerateOptions opts = {}) {
  expect(max_n >= 2, errc::bad_input, "need max size >= 2");
  TableReports out;
  out.max_n = max_n;

  std::map<int, ClassificationReport> div_reports;
  for (int n = 2; n <= max_n; ++n) {
    div_reports.emplace(
        n, enumerate_algebras(n, AlgebraFilter::divisible, method, opts));
    const auto& classes = div_reports.at(n).classes;
    int bl = 0;
    for (const auto& c : classes) bl += c.props.is_bl ? 1 : 0;
    out.bl_counts.push_back(bl);
    out.div_counts.push_back(static_cast<int>(classes.size()));
  }

  LiteralResolver no_literals;
  std::map<std::vector<std::uint8_t>, const ReferenceEntry*> bl_ref_by_key;
  for (const auto& entry : bl_reference_expressions()) {
    if (entry.n > max_n) continue;
    auto alg = evaluate_expr(entry.expr, no_literals);
    auto key = canonical_key(alg);
    expect(bl_ref_by_key.emplace(std::move(key), &entry).second,
           errc::catalog_incomplete,
           "duplicate reference expression " + render_expr(entry.expr));
  }
  std::map<std::vector<std::uint8_t>, const ReferenceEntry*> div_ref_by_key;
  for (const auto& entry : divisible_not_bl_reference_expressions()) {
    if (entry.n > max_n) continue;
    auto alg = evaluate_expr(entry.expr, no_literals);
    div_ref_by_key.emplace(canonical_key(alg), &entry);
  }

  for (int n = 2; n <= max_n; ++n) {
    for (const auto& c : div_reports.at(n).classes) {
      if (c.props.is_bl && n <= 5) {
        auto it = bl_ref_by_key.find(c.key);
        if (it == bl_ref_by_key.end())
          fail(errc::catalog_incomplete,
               "BL class of size " + std::to_string(n) +
                   " has no reference expression");
        if (it->second->chain != c.props.is_chain)
          fail(errc::catalog_incomplete,
               "chain flag mismatch for " + render_expr(it->second->expr));
        StructureRow row;
        row.n = n;
        row.expr = render_expr(it->second->expr);
        row.chain = c.props.is_chain;
        if (c.rep.provenance) row.provenance = render_expr(*c.rep.provenance);
        out.bl_structure.push_back(row);
        bl_ref_by_key.erase(it);
      } else if (!c.props.is_bl) {
        StructureRow row;
        row.n = n;
        auto it = div_ref_by_key.find(c.key);
        if (it != div_ref_by_key.end())
          row.expr = render_expr(it->second->expr);
        else if (c.rep.provenance)
          row.expr = render_expr(*c.rep.provenance);
        else
          row.expr = "(no expression provenance)";
        row.chain = c.props.is_chain;
        if (c.rep.provenance) row.provenance = render_expr(*c.rep.provenance);
        out.div_not_bl_structure.push_back(row);
      }
    }
  }
  for (const auto& [k, entry] : bl_ref_by_key)
    fail(errc::catalog_incomplete,
         "reference expression " + render_expr(entry->expr) +
             " matched no enumerated class");

  std::ostringstream os;
  os << "Counts of algebra classes by size\n";
  os << "  size                          ";
  for (int n = 2; n <= max_n; ++n) os << "  n=" << n;
  os << "\n  BL-algebras                   ";
  for (int c : out.bl_counts) os << "  " << c << (c < 10 ? "  " : " ");
  os << "\n  divisible residuated lattices ";
  for (int c : out.div_counts) os << "  " << c << (c < 10 ? "  " : " ");
  os << "\n\nBL-algebra structure (sizes 2.." << std::min(max_n, 5) << ")\n";
  for (int n = 2; n <= std::min(max_n, 5); ++n) {
    int count = 0;
    for (const auto& r : out.bl_structure) count += r.n == n ? 1 : 0;
    os << "n=" << n << " (" << count << (count == 1 ? " class" : " classes")
       << ")\n";
    for (const auto& r : out.bl_structure)
      if (r.n == n)
        os << "  " << r.expr << (r.chain ? "  [chain]" : "") << "\n";
  }
  os << "\nDivisible, not BL (sizes 2.." << max_n << ")\n";
  for (int n = 2; n <= max_n; ++n) {
    int count = 0;
    for (const auto& r : out.div_not_bl_structure) count += r.n == n ? 1 : 0;
    os << "n=" << n << " (" << count << (count == 1 ? " class" : " classes")
       << ")\n";
    for (const auto& r : out.div_not_bl_structure)
      if (r.n == n)
        os << "  " << r.expr << (r.chain ? "  [chain]" : "") << "\n";
  }
  out.text = os.str();
  return out;
}

}  // namespace residua
