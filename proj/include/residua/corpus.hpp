#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "residua/ideal_lattice.hpp"
#include "residua/residuated.hpp"
#include "residua/ring.hpp"

namespace residua {

/// The five-element divisible residuated lattice that is not a BL-algebra:
/// carrier {0, a, b, c, 1} with 0 < a,b < c < 1 and a, b incomparable.
/// (a -> b) v (b -> a) = c, so prelinearity fails.
inline ResiduatedLattice five_elem_div_not_bl() {
  const int n = 5;
  // 0=0, 1=a, 2=b, 3=c, 4=1
  std::vector<std::uint8_t> leq = {
      1, 1, 1, 1, 1,  //
      0, 1, 0, 1, 1,  //
      0, 0, 1, 1, 1,  //
      0, 0, 0, 1, 1,  //
      0, 0, 0, 0, 1,
  };
  std::vector<int> odot = {
      0, 0, 0, 0, 0,  //
      0, 1, 0, 1, 1,  //
      0, 0, 2, 2, 2,  //
      0, 1, 2, 3, 3,  //
      0, 1, 2, 3, 4,
  };
  std::vector<int> arrow = {
      4, 4, 4, 4, 4,  //
      2, 4, 2, 4, 4,  //
      1, 1, 4, 4, 4,  //
      0, 1, 2, 4, 4,  //
      0, 1, 2, 3, 4,
  };
  return validate_residuated(
      validate_lattice(n, leq, {"0", "a", "b", "c", "1"}), odot, arrow);
}

/// The diamond lattice 0 < a,b,c < 1 with three incomparable atoms.
inline FiniteLattice diamond_lattice() {
  std::vector<std::uint8_t> leq = {
      1, 1, 1, 1, 1,  //
      0, 1, 0, 0, 1,  //
      0, 0, 1, 0, 1,  //
      0, 0, 0, 1, 1,  //
      0, 0, 0, 0, 1,
  };
  return validate_lattice(5, leq, {"0", "a", "b", "c", "1"});
}

/// The pentagon lattice 0 < a < b < 1, 0 < c < 1 with c incomparable to a, b.
inline FiniteLattice pentagon_lattice() {
  std::vector<std::uint8_t> leq = {
      1, 1, 1, 1, 1,  //
      0, 1, 1, 0, 1,  //
      0, 0, 1, 0, 1,  //
      0, 0, 0, 1, 1,  //
      0, 0, 0, 0, 1,
  };
  return validate_lattice(5, leq, {"0", "a", "b", "c", "1"});
}

/// Z2[x,y]/(x^2, xy, y^2): eight elements a + bx + cy, encoded as
/// a + 2b + 4c.  The smallest commutative ring here that is not a
/// multiplication ring.
inline RingSpec z2xy_spec() {
  const int n = 8;
  std::vector<std::vector<int>> add(n, std::vector<int>(n));
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      add[i][j] = i ^ j;
      int a = i & 1, b = (i >> 1) & 1, c = (i >> 2) & 1;
      int a2 = j & 1, b2 = (j >> 1) & 1, c2 = (j >> 2) & 1;
      mul[i][j] = (a & a2) | (((a & b2) ^ (a2 & b)) << 1) |
                  (((a & c2) ^ (a2 & c)) << 2);
    }
  return RingSpec::Table(
      add, mul, 0, 1,
      {"0", "1", "x", "x+1", "y", "y+1", "x+y", "x+y+1"},
      "Z2[x,y]/(x^2,xy,y^2)");
}

/// The 2x2 matrix ring over Z2, encoded as a + 2b + 4c + 8d for rows
/// [a b; c d].  Noncommutative; used through the left-ideal mode.
inline RingSpec mat2_z2_spec() {
  const int n = 16;
  std::vector<std::vector<int>> add(n, std::vector<int>(n));
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  auto a_ = [](int m) { return m & 1; };
  auto b_ = [](int m) { return (m >> 1) & 1; };
  auto c_ = [](int m) { return (m >> 2) & 1; };
  auto d_ = [](int m) { return (m >> 3) & 1; };
  for (int i = 0; i < n; ++i) {
    names[i] = "[" + std::to_string(a_(i)) + " " + std::to_string(b_(i)) +
               ";" + std::to_string(c_(i)) + " " + std::to_string(d_(i)) + "]";
    for (int j = 0; j < n; ++j) {
      add[i][j] = i ^ j;
      int a = (a_(i) & a_(j)) ^ (b_(i) & c_(j));
      int b = (a_(i) & b_(j)) ^ (b_(i) & d_(j));
      int c = (c_(i) & a_(j)) ^ (d_(i) & c_(j));
      int d = (c_(i) & b_(j)) ^ (d_(i) & d_(j));
      mul[i][j] = a | (b << 1) | (c << 2) | (d << 3);
    }
  }
  return RingSpec::Table(add, mul, 0, 9, names, "M2(Z2)");
}

struct NamedRingSpec {
  std::string name;
  RingSpec spec;
};

namespace detail {

inline std::vector<int> prime_powers_up_to(int bound) {
  std::vector<int> out;
  for (int p = 2; p <= bound; ++p) {
    if (!is_prime(p)) continue;
    long long q = p;
    while (q <= bound) {
      out.push_back(static_cast<int>(q));
      q *= p;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline void prime_power_multisets(int max_product, int min_factors,
                                  std::vector<std::vector<int>>& out) {
  auto pps = prime_powers_up_to(max_product);
  std::vector<int> cur;
  std::function<void(size_t, long long)> go = [&](size_t from, long long prod) {
    if (static_cast<int>(cur.size()) >= min_factors) out.push_back(cur);
    for (size_t i = from; i < pps.size(); ++i) {
      if (prod * pps[i] > max_product) break;
      cur.push_back(pps[i]);
      go(i, prod * pps[i]);
      cur.pop_back();
    }
  };
  go(0, 1);
}

inline NamedRingSpec product_spec(const std::vector<int>& ks) {
  std::vector<RingSpec> fs;
  std::string name = "prod";
  for (int k : ks) {
    fs.push_back(RingSpec::Zn(k));
    name += "_" + std::to_string(k);
  }
  return {name, RingSpec::Product(std::move(fs))};
}

}  // namespace detail

/// The standing test corpus: all Zn(k) for 2 <= k <= 32, all products of
/// prime-power Zn factors with at most 64 elements, a handful of polynomial
/// quotients, and the eight-element non-multiplication ring.  Every ring in
/// the list is commutative.
inline std::vector<NamedRingSpec> corpus_ring_specs() {
  std::vector<NamedRingSpec> out;
  for (int k = 2; k <= 32; ++k)
    out.push_back({"zn" + std::to_string(k), RingSpec::Zn(k)});

  std::vector<std::vector<int>> multisets;
  detail::prime_power_multisets(64, 2, multisets);
  for (const auto& ks : multisets) out.push_back(detail::product_spec(ks));

  out.push_back({"polyquot_z2_x2", RingSpec::PolyQuot(2, {0, 0, 1})});
  out.push_back({"polyquot_z2_x3", RingSpec::PolyQuot(2, {0, 0, 0, 1})});
  out.push_back({"polyquot_z3_x2", RingSpec::PolyQuot(3, {0, 0, 1})});
  out.push_back({"polyquot_gf4", RingSpec::PolyQuot(2, {1, 1, 1})});
  out.push_back({"polyquot_z2_x2_plus_x", RingSpec::PolyQuot(2, {0, 1, 1})});
  out.push_back({"z2xy", z2xy_spec()});
  return out;
}

/// Products of prime-power Zn factors whose ideal lattice stays within the
/// given class-size bound.  The ideal count of Zn(p^a) is a+1 and counts
/// multiply over factors.
inline std::vector<NamedRingSpec> mv_family_specs(int max_ring_size = 64,
                                                  int max_ideal_count = 16) {
  std::vector<std::vector<int>> multisets;
  detail::prime_power_multisets(max_ring_size, 1, multisets);
  std::vector<NamedRingSpec> out;
  for (const auto& ks : multisets) {
    long long ideals = 1;
    for (int k : ks) {
      int q = k, p = 2;
      while (q % p != 0) ++p;
      int alpha = 0;
      while (q % p == 0) {
        q /= p;
        ++alpha;
      }
      ideals *= alpha + 1;  // Zn(p^a) has a+1 ideals
    }
    if (ideals > max_ideal_count) continue;
    out.push_back(detail::product_spec(ks));
  }
  return out;
}

}  // namespace residua
