// Command-line front end: property checks, ideal lattices, ordinal products,
// isomorphism tests and exhaustive classification of small residuated
// lattices.  Exit codes: 0 = success / property holds, 1 = property fails
// (witness printed), 2 = invalid input or usage.

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "residua/residua.hpp"

namespace {

using namespace residua;

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitBadInput = 2;

bool is_input_error(errc c) {
  switch (c) {
    case errc::bad_input:
    case errc::invalid_spec:
    case errc::ring_axiom_violation:
    case errc::size_guard_exceeded:
      return true;
    default:
      return false;
  }
}

std::string witness_names(const ResiduatedLattice& L,
                          const std::vector<int>& w) {
  std::string out = "(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += L.lat.label(w[i]);
  }
  return out + ")";
}

json validation_error_json(const error& e) {
  json j;
  j["valid"] = false;
  j["error"] = errc_name(e.code());
  j["detail"] = e.what();
  j["witness"] = e.witness();
  return j;
}

// ---- check -----------------------------------------------------------------

int run_check(const std::string& file, const std::string& property,
              const std::string& format) {
  ResiduatedLattice L;
  try {
    L = algebra_from_json(load_json_file(file));
  } catch (const error& e) {
    if (is_input_error(e.code())) throw;
    // A well-formed file that fails the algebra axioms: that is the result.
    if (format == "json")
      std::cout << validation_error_json(e).dump(2) << "\n";
    else
      std::cout << "not a residuated lattice: " << e.what() << "\n";
    return kExitFails;
  }

  PropertyReport p = check_properties(L);
  struct Row {
    const char* name;
    bool holds;
    const std::optional<std::vector<int>>* witness;
  };
  std::vector<Row> rows = {
      {"divisible", p.is_divisible, &p.divisibility_witness},
      {"prelinear", p.is_prelinear, &p.prelinearity_witness},
      {"bl", p.is_bl, nullptr},
      {"mv", p.is_mv, &p.mv_witness},
      {"heyting", p.is_heyting, &p.heyting_witness},
      {"chain", p.is_chain, &p.chain_witness},
  };

  auto witness_detail = [&](const char* name) -> std::string {
    if (std::string(name) == "prelinear" && p.prelinearity_witness) {
      int x = (*p.prelinearity_witness)[0], y = (*p.prelinearity_witness)[1];
      int v = L.lat.join(L.implies(x, y), L.implies(y, x));
      return "(" + L.lat.label(x) + "," + L.lat.label(y) + "): (" +
             L.lat.label(x) + "->" + L.lat.label(y) + ")v(" + L.lat.label(y) +
             "->" + L.lat.label(x) + ") = " + L.lat.label(v) + " != " +
             L.lat.label(L.lat.top);
    }
    if (std::string(name) == "divisible" && p.divisibility_witness) {
      int x = (*p.divisibility_witness)[0], y = (*p.divisibility_witness)[1];
      return "(" + L.lat.label(x) + "," + L.lat.label(y) + "): " +
             L.lat.label(x) + "*(" + L.lat.label(x) + "->" + L.lat.label(y) +
             ") = " + L.lat.label(L.times(x, L.implies(x, y))) + " != " +
             L.lat.label(L.lat.meet(x, y));
    }
    return "";
  };

  if (format == "json") {
    json j;
    j["valid"] = true;
    j["size"] = L.size();
    if (L.provenance) j["expr"] = render_expr(*L.provenance);
    json props;
    for (const auto& row : rows) {
      json pr;
      pr["holds"] = row.holds;
      if (!row.holds && row.witness && row.witness->has_value())
        pr["witness"] = **row.witness;
      props[row.name] = std::move(pr);
    }
    j["properties"] = std::move(props);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "valid residuated lattice, size " << L.size() << "\n";
    for (const auto& row : rows) {
      std::cout << "  " << row.name << ": " << (row.holds ? "yes" : "no");
      if (!row.holds) {
        auto d = witness_detail(row.name);
        if (!d.empty())
          std::cout << "  witness " << d;
        else if (row.witness && row.witness->has_value())
          std::cout << "  witness " << witness_names(L, **row.witness);
      }
      std::cout << "\n";
    }
  }

  if (property == "all" || property == "valid") return kExitHolds;
  bool holds = false;
  if (property == "div" || property == "divisible") holds = p.is_divisible;
  else if (property == "prel" || property == "prelinear") holds = p.is_prelinear;
  else if (property == "bl") holds = p.is_bl;
  else if (property == "mv") holds = p.is_mv;
  else if (property == "heyting") holds = p.is_heyting;
  else if (property == "chain") holds = p.is_chain;
  else fail(errc::bad_input, "unknown property '" + property + "'");
  return holds ? kExitHolds : kExitFails;
}

// ---- ring-ideals -----------------------------------------------------------

int run_ring_ideals(const std::string& file, const std::string& sidedness,
                    const std::string& emit, const std::string& format) {
  RingSpec spec = ring_spec_from_json(load_json_file(file));
  FiniteRing R = build_ring(spec);
  Sidedness side = Sidedness::twosided;
  if (sidedness == "left") side = Sidedness::left;
  else if (sidedness == "right") side = Sidedness::right;
  else if (sidedness != "two" && sidedness != "twosided")
    fail(errc::bad_input, "sidedness must be two, left or right");

  auto ideals = enumerate_ideals(R, side);
  std::optional<IdealStats> stats;
  if (R.commutative && side == Sidedness::twosided)
    stats = classify_ideals(R);

  if (format == "json") {
    json j;
    j["ring"] = ring_short_name(spec);
    j["size"] = R.size;
    j["commutative"] = R.commutative;
    j["sidedness"] = sidedness_name(side);
    json list = json::array();
    for (const auto& I : ideals) {
      json e;
      e["label"] = ideal_label(R, I, side);
      e["members"] = I.members();
      list.push_back(std::move(e));
    }
    j["ideals"] = std::move(list);
    if (stats) {
      j["stats"] = {{"n_ideals", stats->n_ideals},
                    {"n_maximal", stats->n_maximal},
                    {"n_prime", stats->n_prime},
                    {"is_local", stats->is_local},
                    {"is_principal_ring", stats->is_principal_ring}};
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << ring_short_name(spec) << ": " << ideals.size() << " "
              << sidedness_name(side) << " ideal(s)\n";
    for (const auto& I : ideals) {
      std::cout << "  " << ideal_label(R, I, side) << " = {";
      auto ms = I.members();
      for (size_t i = 0; i < ms.size(); ++i)
        std::cout << (i ? "," : "") << R.name(ms[i]);
      std::cout << "}\n";
    }
    if (stats)
      std::cout << "maximal: " << stats->n_maximal
                << ", prime: " << stats->n_prime
                << ", local: " << (stats->is_local ? "yes" : "no")
                << ", principal ring: "
                << (stats->is_principal_ring ? "yes" : "no") << "\n";
    else if (!R.commutative)
      std::cout << "noncommutative ring: maximal/prime statistics skipped\n";
  }

  if (!emit.empty()) {
    if (R.commutative && side == Sidedness::twosided) {
      save_json_file(emit, algebra_to_json(build_ideal_lattice(R).algebra));
    } else {
      auto cand = ideal_monoid_candidate(R, side);
      save_json_file(emit, lattice_candidate_to_json(cand.lattice, cand.odot));
    }
    std::cout << "wrote " << emit << "\n";
  }
  return kExitHolds;
}

// ---- is-multiplication -----------------------------------------------------

int run_is_multiplication(const std::string& file, const std::string& format) {
  FiniteRing R = build_ring(ring_spec_from_json(load_json_file(file)));
  auto v = is_multiplication_ring(R);
  if (format == "json") {
    json j;
    j["ring"] = ring_short_name(R.spec);
    j["multiplication_ring"] = v.value;
    if (!v.value) j["witness"] = v.witness_text;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << ring_short_name(R.spec) << ": "
              << (v.value ? "multiplication ring"
                          : "not a multiplication ring")
              << "\n";
    if (!v.value) std::cout << "  witness: " << v.witness_text << "\n";
  }
  return v.value ? kExitHolds : kExitFails;
}

// ---- identities ------------------------------------------------------------

int suite_to_output(const IdentitySuiteReport& rep, const ResiduatedLattice& L,
                    json* out_json) {
  bool all = rep.all_pass();
  if (out_json) {
    json checks;
    for (const auto& c : rep.checks) {
      json e;
      e["pass"] = c.pass;
      if (!c.pass) e["witness"] = c.witness;
      checks[c.name] = std::move(e);
    }
    (*out_json)["c1_c5"] = std::move(checks);
  } else {
    for (const auto& c : rep.checks) {
      std::cout << "  " << c.name << ": " << (c.pass ? "pass" : "fail");
      if (!c.pass) std::cout << "  witness " << witness_names(L, c.witness);
      std::cout << "\n";
    }
  }
  return all ? kExitHolds : kExitFails;
}

int run_identities(const std::string& file, const std::string& format) {
  json input = load_json_file(file);
  const bool is_ring = input.is_object() && input.contains("kind");
  json out;
  int rc = kExitHolds;

  try {
    if (is_ring) {
      FiniteRing R = build_ring(ring_spec_from_json(input));
      IdealLattice IL = build_ideal_lattice(R);
      out["ring"] = ring_short_name(R.spec);
      if (format != "json")
        std::cout << ring_short_name(R.spec) << " (" << IL.ideals.size()
                  << " ideals)\n";
      auto suite = check_identities_c1_c5(IL.algebra);
      int rc1 = suite_to_output(suite, IL.algebra,
                                format == "json" ? &out : nullptr);
      auto dist = check_c6_c7(R);
      if (format == "json") {
        out["c6"] = dist.c6;
        out["c7"] = dist.c7;
      } else {
        std::cout << "  c6: " << (dist.c6 ? "pass" : "fail") << "\n";
        std::cout << "  c7: " << (dist.c7 ? "pass" : "fail") << "\n";
      }
      rc = (rc1 == kExitHolds && dist.all_pass()) ? kExitHolds : kExitFails;
    } else {
      ResiduatedLattice L = algebra_from_json(input);
      if (format != "json")
        std::cout << "algebra of size " << L.size() << "\n";
      auto suite = check_identities_c1_c5(L);
      rc = suite_to_output(suite, L, format == "json" ? &out : nullptr);
    }
  } catch (const error& e) {
    if (e.code() == errc::precondition_not_divisible ||
        e.code() == errc::precondition_not_multiplication) {
      if (format == "json") {
        out["error"] = errc_name(e.code());
        out["detail"] = e.what();
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << e.what() << "\n";
      }
      return kExitFails;
    }
    throw;
  }
  if (format == "json") std::cout << out.dump(2) << "\n";
  return rc;
}

// ---- ordinal-product -------------------------------------------------------

int run_ordinal_product(const std::string& left, const std::string& right,
                        const std::string& expr_file, const std::string& out,
                        const std::string& format) {
  ResiduatedLattice result;
  if (!expr_file.empty()) {
    AlgebraExpr e = expr_from_json(load_json_file(expr_file));
    result = evaluate_expr(e, file_literal_resolver());
  } else {
    ResiduatedLattice l = algebra_from_json(load_json_file(left));
    ResiduatedLattice r = algebra_from_json(load_json_file(right));
    result = ordinal_product(l, r);
  }
  PropertyReport p = check_properties(result);
  if (format == "json") {
    json j;
    j["size"] = result.size();
    if (result.provenance) j["expr"] = render_expr(*result.provenance);
    j["bl"] = p.is_bl;
    j["divisible"] = p.is_divisible;
    j["mv"] = p.is_mv;
    j["chain"] = p.is_chain;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "size " << result.size();
    if (result.provenance)
      std::cout << "  " << render_expr(*result.provenance);
    std::cout << "\n  divisible: " << (p.is_divisible ? "yes" : "no")
              << ", bl: " << (p.is_bl ? "yes" : "no")
              << ", mv: " << (p.is_mv ? "yes" : "no")
              << ", chain: " << (p.is_chain ? "yes" : "no") << "\n";
  }
  if (!out.empty()) {
    save_json_file(out, algebra_to_json(result));
    std::cout << "wrote " << out << "\n";
  }
  return kExitHolds;
}

// ---- iso -------------------------------------------------------------------

int run_iso(const std::string& a, const std::string& b,
            const std::string& format) {
  ResiduatedLattice A = algebra_from_json(load_json_file(a));
  ResiduatedLattice B = algebra_from_json(load_json_file(b));
  auto cert = are_isomorphic(A, B);
  if (format == "json") {
    json j;
    j["isomorphic"] = cert.has_value();
    if (cert) j["mapping"] = cert->mapping;
    std::cout << j.dump(2) << "\n";
  } else if (cert) {
    std::cout << "isomorphic\n";
    for (int x = 0; x < A.size(); ++x)
      std::cout << "  " << A.lat.label(x) << " -> "
                << B.lat.label(cert->mapping[x]) << "\n";
  } else {
    std::cout << "not isomorphic\n";
  }
  return cert ? kExitHolds : kExitFails;
}

// ---- enumerate / skeletons / tables ----------------------------------------

int run_enumerate(int n, const std::string& filter_s, const std::string& method_s,
                  int threads, bool allow_large, const std::string& format) {
  auto filter = parse_filter(filter_s);
  expect(filter.has_value(), errc::bad_input,
         "unknown filter '" + filter_s + "'");
  EnumMethod method = EnumMethod::both;
  if (method_s == "brute") method = EnumMethod::brute;
  else if (method_s == "generate") method = EnumMethod::generate;
  else if (method_s != "both")
    fail(errc::bad_input, "method must be brute, generate or both");

  EnumerateOptions opts;
  opts.threads = threads;
  opts.allow_large = allow_large;
  auto rep = enumerate_algebras(n, *filter, method, opts);

  if (format == "json") {
    std::cout << classification_to_json(rep).dump(2) << "\n";
  } else {
    std::cout << "n=" << n << " filter=" << filter_name(*filter) << ": "
              << rep.count() << " class(es)\n";
    for (const auto& c : rep.classes) {
      std::cout << "  ";
      if (c.rep.provenance)
        std::cout << render_expr(*c.rep.provenance);
      else
        std::cout << "(no expression provenance)";
      std::cout << (c.props.is_chain ? "  [chain]" : "")
                << (c.props.is_bl ? "  [bl]"
                                  : (c.props.is_divisible ? "  [div]" : ""))
                << (c.props.is_mv ? "  [mv]" : "") << "\n";
    }
  }
  return kExitHolds;
}

int run_skeletons(int n, const std::string& format) {
  auto sks = enumerate_lattice_skeletons(n);
  if (format == "json") {
    json j;
    j["n"] = n;
    j["count"] = sks.size();
    json list = json::array();
    for (const auto& L : sks) {
      json rows = json::array();
      for (int x = 0; x < n; ++x) {
        json row = json::array();
        for (int y = 0; y < n; ++y) row.push_back(L.le(x, y) ? 1 : 0);
        rows.push_back(std::move(row));
      }
      list.push_back(std::move(rows));
    }
    j["lattices"] = std::move(list);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << n << " elements: " << sks.size()
              << " bounded lattice(s) up to isomorphism\n";
    for (size_t i = 0; i < sks.size(); ++i) {
      std::cout << "  #" << i << ":";
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (x != y && sks[i].le(x, y)) {
            // covers only, to keep the listing short
            bool cover = true;
            for (int z = 0; z < n && cover; ++z)
              if (z != x && z != y && sks[i].le(x, z) && sks[i].le(z, y))
                cover = false;
            if (cover) std::cout << " " << x << "<" << y;
          }
      std::cout << "\n";
    }
  }
  return kExitHolds;
}

int run_tables(int max_n, const std::string& method_s, int threads,
               const std::string& format) {
  EnumMethod method = EnumMethod::generate;
  if (method_s == "brute") method = EnumMethod::brute;
  else if (method_s == "both") method = EnumMethod::both;
  else if (method_s != "generate")
    fail(errc::bad_input, "method must be brute, generate or both");
  EnumerateOptions opts;
  opts.threads = threads;
  auto rep = table_reports(max_n, method, opts);
  if (format == "json") {
    json j;
    j["max_n"] = rep.max_n;
    j["bl_counts"] = rep.bl_counts;
    j["div_counts"] = rep.div_counts;
    json bl = json::array();
    for (const auto& r : rep.bl_structure)
      bl.push_back({{"n", r.n}, {"expr", r.expr}, {"chain", r.chain}});
    j["bl_structure"] = std::move(bl);
    json dv = json::array();
    for (const auto& r : rep.div_not_bl_structure)
      dv.push_back({{"n", r.n}, {"expr", r.expr}, {"chain", r.chain}});
    j["divisible_not_bl_structure"] = std::move(dv);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << rep.text;
  }
  return kExitHolds;
}

// ---- seed-corpus -----------------------------------------------------------

int run_seed_corpus(const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  auto put = [&](const std::string& name, const json& j) {
    save_json_file((fs::path(dir) / name).string(), j);
    std::cout << name << "\n";
  };

  put("five_div_not_bl.json", algebra_to_json(five_elem_div_not_bl()));

  auto D = diamond_lattice();
  put("diamond_meet.json", lattice_candidate_to_json(D, D.meet_table));

  put("m2z2.json", ring_spec_to_json(mat2_z2_spec()));
  auto M = build_ring(mat2_z2_spec());
  auto cand = ideal_monoid_candidate(M, Sidedness::left);
  put("m2z2_left.json", lattice_candidate_to_json(cand.lattice, cand.odot));

  put("id_z4.json",
      algebra_to_json(
          build_ideal_lattice(build_ring(RingSpec::Zn(4))).algebra));
  put("id_z9.json",
      algebra_to_json(
          build_ideal_lattice(build_ring(RingSpec::Zn(9))).algebra));

  put("expr_div5.json",
      expr_to_json(AlgebraExpr::OrdProd(
          AlgebraExpr::Ring(RingSpec::Product({RingSpec::Zn(2),
                                               RingSpec::Zn(2)})),
          AlgebraExpr::Ring(RingSpec::Zn(2)))));

  for (const auto& [name, spec] : corpus_ring_specs())
    put(name + ".json", ring_spec_to_json(spec));
  return kExitHolds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for finite residuated lattices and the ideal "
               "lattices of finite commutative rings"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* check = app.add_subcommand("check",
                                   "validate a lattice file and report its "
                                   "properties");
  std::string check_file, check_property = "all";
  check->add_option("file", check_file, "lattice JSON file")->required();
  check->add_option("--property", check_property,
                    "property gating the exit code: all, valid, div, prel, "
                    "bl, mv, heyting, chain");

  auto* ri = app.add_subcommand("ring-ideals",
                                "enumerate the ideals of a ring spec");
  std::string ri_file, ri_side = "two", ri_emit;
  ri->add_option("file", ri_file, "ring spec JSON file")->required();
  ri->add_option("--sidedness", ri_side, "two, left or right");
  ri->add_option("--emit-lattice", ri_emit,
                 "write the ideal lattice (or candidate) as a lattice file");

  auto* im = app.add_subcommand("is-multiplication",
                                "decide the multiplication-ring property");
  std::string im_file;
  im->add_option("file", im_file, "ring spec JSON file")->required();

  auto* ids = app.add_subcommand("identities",
                                 "run the identity suites (c1-c5 on the "
                                 "algebra, c6-c7 on a ring)");
  std::string ids_file;
  ids->add_option("file", ids_file, "ring spec or lattice JSON file")
      ->required();

  auto* op = app.add_subcommand("ordinal-product",
                                "ordinal product of two BL-algebras, or "
                                "evaluation of an expression file");
  std::string op_left, op_right, op_expr, op_out;
  op->add_option("left", op_left, "left factor lattice file");
  op->add_option("right", op_right, "right factor lattice file");
  op->add_option("--expr", op_expr, "expression JSON file");
  op->add_option("--out", op_out, "write the resulting lattice file here");

  auto* iso = app.add_subcommand("iso", "isomorphism test for two algebras");
  std::string iso_a, iso_b;
  iso->add_option("a", iso_a)->required();
  iso->add_option("b", iso_b)->required();

  auto* en = app.add_subcommand("enumerate",
                                "enumerate algebra classes of a given size");
  int en_n = 4, en_threads = 1;
  std::string en_filter = "divisible", en_method = "both";
  bool en_allow_large = false;
  en->add_option("--n", en_n, "carrier size")->required();
  en->add_option("--filter", en_filter,
                 "all, divisible, bl, mv, heyting, chain, bl-chain, "
                 "divisible-chain, divisible-not-bl");
  en->add_option("--method", en_method, "brute, generate or both");
  en->add_option("--threads", en_threads, "internal parallelism");
  en->add_flag("--allow-large", en_allow_large,
               "lift the size guard on brute enumeration");

  auto* sk = app.add_subcommand("skeletons",
                                "bounded lattices of a given size up to "
                                "isomorphism");
  int sk_n = 5;
  sk->add_option("--n", sk_n, "carrier size")->required();

  auto* tb = app.add_subcommand("tables",
                                "count table and structure listing for "
                                "small BL / divisible algebras");
  int tb_max = 6, tb_threads = 1;
  std::string tb_method = "generate";
  tb->add_option("--max", tb_max, "largest size to include");
  tb->add_option("--method", tb_method, "brute, generate or both");
  tb->add_option("--threads", tb_threads, "internal parallelism");

  auto* sc = app.add_subcommand("seed-corpus",
                                "write the standing corpus of ring specs and "
                                "lattice files into a directory");
  std::string sc_dir;
  sc->add_option("dir", sc_dir, "output directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) return run_check(check_file, check_property, format);
    if (*ri) return run_ring_ideals(ri_file, ri_side, ri_emit, format);
    if (*im) return run_is_multiplication(im_file, format);
    if (*ids) return run_identities(ids_file, format);
    if (*op) {
      if (op_expr.empty() && (op_left.empty() || op_right.empty()))
        fail(errc::bad_input,
             "ordinal-product needs two lattice files or --expr");
      return run_ordinal_product(op_left, op_right, op_expr, op_out, format);
    }
    if (*iso) return run_iso(iso_a, iso_b, format);
    if (*en)
      return run_enumerate(en_n, en_filter, en_method, en_threads,
                           en_allow_large, format);
    if (*sk) return run_skeletons(sk_n, format);
    if (*tb) return run_tables(tb_max, tb_method, tb_threads, format);
    if (*sc) return run_seed_corpus(sc_dir);
  } catch (const error& e) {
    std::cerr << e.what() << "\n";
    return is_input_error(e.code()) ? kExitBadInput : kExitFails;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
