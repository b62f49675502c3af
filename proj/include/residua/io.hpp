#pragma once

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "residua/enumerate.hpp"
#include "residua/expr.hpp"
#include "residua/residuated.hpp"
#include "residua/ring.hpp"

namespace residua {

using json = nlohmann::json;

// ---- lattice files -------------------------------------------------------
// { "size": n, "labels": [...], "leq": [[0/1,...],...],
//   "odot": [[...],...], "arrow": [[...],...] }
// leq row i, column j = 1 means element i <= element j; arrow is optional
// and must then agree with the derived residuum.

inline json algebra_to_json(const ResiduatedLattice& L) {
  const int n = L.size();
  json j;
  j["size"] = n;
  if (!L.lat.labels.empty()) j["labels"] = L.lat.labels;
  auto matrix = [&](auto get) {
    json rows = json::array();
    for (int x = 0; x < n; ++x) {
      json row = json::array();
      for (int y = 0; y < n; ++y) row.push_back(get(x, y));
      rows.push_back(std::move(row));
    }
    return rows;
  };
  j["leq"] = matrix([&](int x, int y) { return L.lat.le(x, y) ? 1 : 0; });
  j["odot"] = matrix([&](int x, int y) { return L.times(x, y); });
  j["arrow"] = matrix([&](int x, int y) { return L.implies(x, y); });
  return j;
}

/// Writes a lattice-with-monoid candidate that has not (or cannot) be
/// residuated; the arrow field is simply absent.
inline json lattice_candidate_to_json(const FiniteLattice& lat,
                                      const std::vector<int>& odot) {
  const int n = lat.size;
  json j;
  j["size"] = n;
  if (!lat.labels.empty()) j["labels"] = lat.labels;
  json leq = json::array(), od = json::array();
  for (int x = 0; x < n; ++x) {
    json lrow = json::array(), orow = json::array();
    for (int y = 0; y < n; ++y) {
      lrow.push_back(lat.le(x, y) ? 1 : 0);
      orow.push_back(odot[x * n + y]);
    }
    leq.push_back(std::move(lrow));
    od.push_back(std::move(orow));
  }
  j["leq"] = std::move(leq);
  j["odot"] = std::move(od);
  return j;
}

namespace detail {

inline std::vector<int> flat_matrix(const json& j, int n, const char* name) {
  expect(j.is_array() && static_cast<int>(j.size()) == n, errc::bad_input,
         std::string(name) + " must be an n x n array");
  std::vector<int> out;
  out.reserve(n * n);
  for (const auto& row : j) {
    expect(row.is_array() && static_cast<int>(row.size()) == n,
           errc::bad_input, std::string(name) + " must be an n x n array");
    for (const auto& v : row) {
      expect(v.is_number_integer(), errc::bad_input,
             std::string(name) + " entries must be integers");
      out.push_back(v.get<int>());
    }
  }
  return out;
}

}  // namespace detail

/// Parses and fully validates a lattice file.
inline ResiduatedLattice algebra_from_json(const json& j) {
  expect(j.is_object() && j.contains("size") && j.contains("leq") &&
             j.contains("odot"),
         errc::bad_input, "lattice file needs size, leq and odot");
  int n = j.at("size").get<int>();
  expect(n >= 1, errc::bad_input, "size must be positive");
  auto leq_int = detail::flat_matrix(j.at("leq"), n, "leq");
  std::vector<std::uint8_t> leq(leq_int.size());
  for (size_t i = 0; i < leq_int.size(); ++i) leq[i] = leq_int[i] ? 1 : 0;
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  auto odot = detail::flat_matrix(j.at("odot"), n, "odot");
  std::optional<std::vector<int>> arrow;
  if (j.contains("arrow")) arrow = detail::flat_matrix(j.at("arrow"), n, "arrow");
  return validate_residuated(validate_lattice(n, leq, std::move(labels)),
                             std::move(odot), std::move(arrow));
}

// ---- ring spec files -----------------------------------------------------
// { "kind": "Zn", "k": 8 }
// { "kind": "product", "factors": [spec, ...] }
// { "kind": "polyquot", "p": 2, "f": [0,0,1] }          (little-endian f)
// { "kind": "table", "add": [[...]], "mul": [[...]], "zero": i, "one": j,
//   "names": [...]?, "name": "display"? }

inline json ring_spec_to_json(const RingSpec& s) {
  json j;
  switch (s.kind) {
    case RingSpec::Kind::zn:
      j["kind"] = "Zn";
      j["k"] = s.k;
      break;
    case RingSpec::Kind::product: {
      j["kind"] = "product";
      json fs = json::array();
      for (const auto& f : s.factors) fs.push_back(ring_spec_to_json(f));
      j["factors"] = std::move(fs);
      break;
    }
    case RingSpec::Kind::polyquot:
      j["kind"] = "polyquot";
      j["p"] = s.p;
      j["f"] = s.f;
      break;
    case RingSpec::Kind::table:
      j["kind"] = "table";
      j["add"] = s.add;
      j["mul"] = s.mul;
      j["zero"] = s.zero;
      j["one"] = s.one;
      if (!s.names.empty()) j["names"] = s.names;
      if (!s.display_name.empty()) j["name"] = s.display_name;
      break;
  }
  return j;
}

inline RingSpec ring_spec_from_json(const json& j) {
  expect(j.is_object() && j.contains("kind"), errc::bad_input,
         "ring spec needs a kind");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "Zn") return RingSpec::Zn(j.at("k").get<int>());
  if (kind == "product") {
    std::vector<RingSpec> fs;
    for (const auto& f : j.at("factors")) fs.push_back(ring_spec_from_json(f));
    return RingSpec::Product(std::move(fs));
  }
  if (kind == "polyquot")
    return RingSpec::PolyQuot(j.at("p").get<int>(),
                              j.at("f").get<std::vector<int>>());
  if (kind == "table") {
    auto spec = RingSpec::Table(
        j.at("add").get<std::vector<std::vector<int>>>(),
        j.at("mul").get<std::vector<std::vector<int>>>(),
        j.at("zero").get<int>(), j.at("one").get<int>());
    if (j.contains("names"))
      spec.names = j.at("names").get<std::vector<std::string>>();
    if (j.contains("name")) spec.display_name = j.at("name").get<std::string>();
    return spec;
  }
  fail(errc::bad_input, "unknown ring spec kind '" + kind + "'");
}

// ---- expression files ----------------------------------------------------
// { "kind": "ring", "spec": ... } | { "kind": "ordprod", "left": ...,
// "right": ... } | { "kind": "literal", "path": "..." }

inline json expr_to_json(const AlgebraExpr& e) {
  json j;
  switch (e.kind) {
    case AlgebraExpr::Kind::ring:
      j["kind"] = "ring";
      j["spec"] = ring_spec_to_json(e.spec);
      break;
    case AlgebraExpr::Kind::ordprod:
      j["kind"] = "ordprod";
      j["left"] = expr_to_json(*e.left);
      j["right"] = expr_to_json(*e.right);
      break;
    case AlgebraExpr::Kind::literal:
      j["kind"] = "literal";
      j["path"] = e.literal_name;
      break;
  }
  return j;
}

inline AlgebraExpr expr_from_json(const json& j) {
  expect(j.is_object() && j.contains("kind"), errc::bad_input,
         "expression needs a kind");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "ring") return AlgebraExpr::Ring(ring_spec_from_json(j.at("spec")));
  if (kind == "ordprod")
    return AlgebraExpr::OrdProd(expr_from_json(j.at("left")),
                                expr_from_json(j.at("right")));
  if (kind == "literal")
    return AlgebraExpr::Literal(j.at("path").get<std::string>());
  fail(errc::bad_input, "unknown expression kind '" + kind + "'");
}

// ---- classification reports ----------------------------------------------

inline json classification_to_json(const ClassificationReport& rep) {
  json j;
  j["n"] = rep.n;
  j["class"] = filter_name(rep.filter);
  j["count"] = rep.count();
  json reps = json::array();
  for (const auto& c : rep.classes) {
    json r;
    r["expr"] = c.rep.provenance ? json(render_expr(*c.rep.provenance))
                                 : json(nullptr);
    r["lattice"] = algebra_to_json(c.rep);
    reps.push_back(std::move(r));
  }
  j["representatives"] = std::move(reps);
  return j;
}

// ---- files -----------------------------------------------------------------

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  expect(static_cast<bool>(in), errc::bad_input,
         "cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(errc::bad_input, "cannot parse " + path + ": " + e.what());
  }
  return j;
}

inline void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  expect(static_cast<bool>(out), errc::bad_input,
         "cannot write file: " + path);
  out << j.dump(2) << "\n";
}

/// Resolves literal expression leaves as lattice file paths.
inline LiteralResolver file_literal_resolver() {
  return [](const std::string& path) {
    return algebra_from_json(load_json_file(path));
  };
}

}  // namespace residua
