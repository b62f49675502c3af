#pragma once

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "residua/iso.hpp"
#include "residua/ordinal.hpp"
#include "residua/properties.hpp"

namespace residua {

namespace detail {

/// Canonical key over the order relation alone, used to deduplicate lattice
/// skeletons.  Bottom is pinned to 0 and top to n-1.
inline std::vector<std::uint8_t> lattice_key(const FiniteLattice& L) {
  const int n = L.size;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint8_t> best, cur;
  std::vector<int> inv(n);
  do {
    if (perm[L.bottom] != 0 || perm[L.top] != n - 1) continue;
    for (int i = 0; i < n; ++i) inv[perm[i]] = i;
    cur.clear();
    cur.reserve(n * n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        cur.push_back(L.le(inv[x], inv[y]) ? 1 : 0);
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace detail

/// All bounded lattices on n elements up to isomorphism, in a deterministic
/// order.  Candidates are generated as order relations compatible with the
/// index order (element 0 bottom, n-1 top), which loses no isomorphism class
/// because every finite poset has a linear extension.
inline std::vector<FiniteLattice> enumerate_lattice_skeletons(int n) {
  expect(n >= 1, errc::bad_input, "size must be positive");
  expect(n <= 8, errc::size_guard_exceeded,
         "lattice skeleton enumeration is guarded at 8 elements");

  if (n == 1)
    return {validate_lattice(1, {1})};

  const int mid = n - 2;  // elements 1..n-2 are unconstrained
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i + 1 < n; ++i)
    for (int j = i + 1; j + 1 < n; ++j) pairs.push_back({i, j});

  std::map<std::vector<std::uint8_t>, FiniteLattice> classes;
  const std::uint64_t limit = 1ull << pairs.size();
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    std::vector<std::uint8_t> leq(n * n, 0);
    for (int i = 0; i < n; ++i) leq[i * n + i] = 1;
    for (int i = 0; i < n; ++i) {
      leq[0 * n + i] = 1;
      leq[i * n + (n - 1)] = 1;
    }
    for (size_t k = 0; k < pairs.size(); ++k)
      if ((bits >> k) & 1u) leq[pairs[k].first * n + pairs[k].second] = 1;

    // Transitivity among the middle elements; bottom/top edges are closed.
    bool transitive = true;
    for (int i = 1; i + 1 < n && transitive; ++i)
      for (int j = 1; j + 1 < n && transitive; ++j) {
        if (!leq[i * n + j] || i == j) continue;
        for (int k = 1; k + 1 < n; ++k)
          if (leq[j * n + k] && !leq[i * n + k]) {
            transitive = false;
            break;
          }
      }
    if (!transitive) continue;

    FiniteLattice L;
    try {
      L = validate_lattice(n, leq);
    } catch (const error&) {
      continue;  // not a lattice (some pair lacks a bound)
    }
    auto key = detail::lattice_key(L);
    classes.emplace(std::move(key), std::move(L));
  }
  (void)mid;
  std::vector<FiniteLattice> out;
  out.reserve(classes.size());
  for (auto& [k, v] : classes) out.push_back(std::move(v));
  return out;
}

enum class AlgebraFilter {
  all,          // every residuated lattice
  divisible,
  bl,
  mv,
  heyting,
  chain,
  bl_chain,
  divisible_chain,
  divisible_not_bl,
};

inline const char* filter_name(AlgebraFilter f) {
  switch (f) {
    case AlgebraFilter::all: return "all";
    case AlgebraFilter::divisible: return "divisible";
    case AlgebraFilter::bl: return "bl";
    case AlgebraFilter::mv: return "mv";
    case AlgebraFilter::heyting: return "heyting";
    case AlgebraFilter::chain: return "chain";
    case AlgebraFilter::bl_chain: return "bl-chain";
    case AlgebraFilter::divisible_chain: return "divisible-chain";
    case AlgebraFilter::divisible_not_bl: return "divisible-not-bl";
  }
  return "?";
}

inline std::optional<AlgebraFilter> parse_filter(const std::string& s) {
  for (AlgebraFilter f :
       {AlgebraFilter::all, AlgebraFilter::divisible, AlgebraFilter::bl,
        AlgebraFilter::mv, AlgebraFilter::heyting, AlgebraFilter::chain,
        AlgebraFilter::bl_chain, AlgebraFilter::divisible_chain,
        AlgebraFilter::divisible_not_bl})
    if (s == filter_name(f)) return f;
  return std::nullopt;
}

inline bool filter_accepts(AlgebraFilter f, const PropertyReport& p) {
  switch (f) {
    case AlgebraFilter::all: return true;
    case AlgebraFilter::divisible: return p.is_divisible;
    case AlgebraFilter::bl: return p.is_bl;
    case AlgebraFilter::mv: return p.is_mv;
    case AlgebraFilter::heyting: return p.is_heyting;
    case AlgebraFilter::chain: return p.is_chain;
    case AlgebraFilter::bl_chain: return p.is_bl && p.is_chain;
    case AlgebraFilter::divisible_chain: return p.is_divisible && p.is_chain;
    case AlgebraFilter::divisible_not_bl: return p.is_divisible && !p.is_bl;
  }
  return false;
}

enum class EnumMethod { brute, generate, both };

struct AlgebraClass {
  ResiduatedLattice rep;
  PropertyReport props;
  std::vector<std::uint8_t> key;
};

struct ClassificationReport {
  int n = 0;
  AlgebraFilter filter = AlgebraFilter::divisible;
  EnumMethod method = EnumMethod::brute;
  std::vector<AlgebraClass> classes;
  int count() const { return static_cast<int>(classes.size()); }
};

namespace detail {

/// Backtracking fill of a commutative, monotone monoid table over one
/// lattice skeleton.  Bottom rows are forced to bottom and top rows to the
/// identity; the remaining symmetric cells range over the down-set of the
/// pair's meet.  Associativity and residuation are checked on complete
/// tables, which is fast enough at these sizes.
inline void brute_force_skeleton(
    const FiniteLattice& L,
    std::map<std::vector<std::uint8_t>, AlgebraClass>& sink) {
  const int n = L.size;
  std::vector<std::pair<int, int>> cells;
  for (int x = 0; x < n; ++x) {
    if (x == L.bottom || x == L.top) continue;
    for (int y = x; y < n; ++y) {
      if (y == L.bottom || y == L.top) continue;
      cells.push_back({x, y});
    }
  }

  std::vector<int> t(n * n, -1);
  for (int x = 0; x < n; ++x) {
    t[L.bottom * n + x] = L.bottom;
    t[x * n + L.bottom] = L.bottom;
    t[L.top * n + x] = x;
    t[x * n + L.top] = x;
  }

  auto assign = [&](int x, int y, int v) {
    t[x * n + y] = v;
    t[y * n + x] = v;
  };

  // Monotonicity against every already-filled comparable cell.
  auto compatible = [&](int x, int y, int v) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int w = t[a * n + b];
        if (w < 0) continue;
        if (L.le(a, x) && L.le(b, y) && !L.le(w, v)) return false;
        if (L.le(x, a) && L.le(y, b) && !L.le(v, w)) return false;
      }
    return true;
  };

  auto emit = [&]() {
    auto chk = check_residuated_tables(L, t, nullptr);
    if (!chk.ok) return;
    ResiduatedLattice R;
    R.lat = L;
    R.odot = t;
    R.arrow = chk.arrow;
    AlgebraClass cls;
    cls.props = check_properties(R);
    cls.key = canonical_key(R);
    cls.rep = std::move(R);
    sink.emplace(cls.key, std::move(cls));
  };

  std::function<void(size_t)> go = [&](size_t idx) {
    if (idx == cells.size()) {
      emit();
      return;
    }
    auto [x, y] = cells[idx];
    int cap = L.meet(x, y);
    for (int v = 0; v < n; ++v) {
      if (!L.le(v, cap)) continue;
      if (!compatible(x, y, v)) continue;
      assign(x, y, v);
      go(idx + 1);
      assign(x, y, -1);
    }
  };
  go(0);
}

inline std::map<std::vector<std::uint8_t>, AlgebraClass> brute_catalog(
    int n, bool allow_large, int threads) {
  expect(n >= 2, errc::bad_input, "enumeration needs size >= 2");
  if (n > 6 && !allow_large)
    fail(errc::size_guard_exceeded,
         "brute enumeration beyond 6 elements requires the override");
  auto skeletons = enumerate_lattice_skeletons(n);
  std::map<std::vector<std::uint8_t>, AlgebraClass> sink;
  if (threads <= 1 || skeletons.size() <= 1) {
    for (const auto& L : skeletons) brute_force_skeleton(L, sink);
    return sink;
  }
  // Distinct skeletons yield distinct canonical keys, so per-skeleton maps
  // merge disjointly and the result does not depend on scheduling.
  std::vector<std::future<std::map<std::vector<std::uint8_t>, AlgebraClass>>>
      jobs;
  for (const auto& L : skeletons)
    jobs.push_back(std::async(std::launch::async, [&L]() {
      std::map<std::vector<std::uint8_t>, AlgebraClass> part;
      brute_force_skeleton(L, part);
      return part;
    }));
  for (auto& j : jobs)
    for (auto& [k, v] : j.get()) sink.emplace(k, std::move(v));
  return sink;
}

/// BL catalog built recursively: the Lukasiewicz chain of the right size,
/// direct products of smaller catalog members, and ordinal products with a
/// chain as the lower factor.  Deduplicated up to isomorphism.
class GenerateCatalog {
 public:
  const std::vector<AlgebraClass>& bl(int n) {
    auto it = bl_.find(n);
    if (it != bl_.end()) return it->second;
    std::map<std::vector<std::uint8_t>, AlgebraClass> found;
    if (n >= 2) {
      long long ring = 1;
      for (int i = 1; i < n; ++i) ring *= 2;
      add(found, build_ideal_lattice(
                     build_ring(RingSpec::Zn(static_cast<int>(ring))))
                     .algebra,
          AlgebraExpr::Ring(RingSpec::Zn(static_cast<int>(ring))));
      for (int a = 2; a * a <= n; ++a) {
        if (n % a) continue;
        int b = n / a;
        for (const auto& A : bl(a))
          for (const auto& B : bl(b)) add(found, direct_product(A.rep, B.rep));
      }
      for (int i = 2; i <= n - 1; ++i) {
        int j = n + 1 - i;
        if (j < 2) continue;
        for (const auto& C : bl(i)) {
          if (!C.props.is_chain) continue;
          for (const auto& B : bl(j))
            add(found, ordinal_product(C.rep, B.rep));
        }
      }
    }
    std::vector<AlgebraClass> out;
    for (auto& [k, v] : found) out.push_back(std::move(v));
    return bl_.emplace(n, std::move(out)).first->second;
  }

  /// Divisible catalog: the BL catalog plus ordinal products whose lower
  /// factor is a non-chain BL-algebra.
  std::vector<AlgebraClass> divisible(int n) {
    std::map<std::vector<std::uint8_t>, AlgebraClass> found;
    for (const auto& A : bl(n)) {
      AlgebraClass copy = A;
      found.emplace(copy.key, std::move(copy));
    }
    for (int i = 2; i <= n - 1; ++i) {
      int j = n + 1 - i;
      if (j < 2) continue;
      for (const auto& C : bl(i)) {
        if (C.props.is_chain) continue;
        for (const auto& B : bl(j))
          add(found, ordinal_product(C.rep, B.rep));
      }
    }
    std::vector<AlgebraClass> out;
    for (auto& [k, v] : found) out.push_back(std::move(v));
    return out;
  }

 private:
  static void add(std::map<std::vector<std::uint8_t>, AlgebraClass>& found,
                  ResiduatedLattice rep,
                  std::optional<AlgebraExpr> expr = std::nullopt) {
    if (expr) rep.provenance = std::make_shared<AlgebraExpr>(std::move(*expr));
    AlgebraClass cls;
    cls.props = check_properties(rep);
    cls.key = canonical_key(rep);
    cls.rep = std::move(rep);
    found.emplace(cls.key, std::move(cls));
  }

  std::map<int, std::vector<AlgebraClass>> bl_;
};

}  // namespace detail

struct EnumerateOptions {
  bool allow_large = false;  // lift the n <= 6 brute guard
  int threads = 1;
};

/// Enumerates residuated lattices of the given size up to isomorphism.
/// brute searches monoid tables over every lattice skeleton; generate builds
/// the divisible catalog from the ordinal-product recursion (and is only
/// available for divisibility-implying filters); both runs the two and
/// requires identical class keys, attaching generate's provenance to the
/// brute representatives.
inline ClassificationReport enumerate_algebras(
    int n, AlgebraFilter filter, EnumMethod method,
    EnumerateOptions opts = {}) {
  ClassificationReport rep;
  rep.n = n;
  rep.filter = filter;
  rep.method = method;

  const bool divisible_only =
      filter != AlgebraFilter::all && filter != AlgebraFilter::chain &&
      filter != AlgebraFilter::heyting;

  std::map<std::vector<std::uint8_t>, AlgebraClass> brute_all;
  std::vector<AlgebraClass> generated;

  if (method == EnumMethod::brute || method == EnumMethod::both)
    brute_all = detail::brute_catalog(n, opts.allow_large, opts.threads);

  if (method == EnumMethod::generate || method == EnumMethod::both) {
    expect(divisible_only, errc::bad_input,
           "the generate method only produces divisible algebras");
    detail::GenerateCatalog cat;
    generated = cat.divisible(n);
  }

  if (method == EnumMethod::both) {
    std::vector<std::vector<std::uint8_t>> brute_keys, gen_keys;
    for (const auto& [k, v] : brute_all)
      if (v.props.is_divisible) brute_keys.push_back(k);
    for (const auto& c : generated) gen_keys.push_back(c.key);
    std::sort(gen_keys.begin(), gen_keys.end());
    if (brute_keys != gen_keys)
      fail(errc::method_mismatch,
           "brute and generate enumerations disagree at n = " +
               std::to_string(n) + ": " + std::to_string(brute_keys.size()) +
               " vs " + std::to_string(gen_keys.size()) +
               " divisible classes");
    // Attach generated provenance to the brute representatives.
    for (const auto& g : generated) {
      auto it = brute_all.find(g.key);
      if (it != brute_all.end() && g.rep.provenance)
        it->second.rep.provenance = g.rep.provenance;
    }
  }

  if (method == EnumMethod::generate) {
    for (auto& c : generated)
      if (filter_accepts(filter, c.props)) rep.classes.push_back(std::move(c));
    std::sort(rep.classes.begin(), rep.classes.end(),
              [](const AlgebraClass& a, const AlgebraClass& b) {
                return a.key < b.key;
              });
  } else {
    for (auto& [k, v] : brute_all)
      if (filter_accepts(filter, v.props)) rep.classes.push_back(std::move(v));
  }
  return rep;
}

}  // namespace residua
