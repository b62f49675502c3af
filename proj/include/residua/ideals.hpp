#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "residua/ring.hpp"

namespace residua {

enum class Sidedness { twosided, left, right };

inline const char* sidedness_name(Sidedness s) {
  switch (s) {
    case Sidedness::twosided: return "two-sided";
    case Sidedness::left: return "left";
    case Sidedness::right: return "right";
  }
  return "?";
}

/// An ideal as a member bitmask over the ring carrier.  Ideal enumeration and
/// arithmetic are limited to rings with at most 64 elements.
struct Ideal {
  std::uint64_t mask = 0;

  bool contains(int a) const { return (mask >> a) & 1u; }
  int cardinality() const { return __builtin_popcountll(mask); }
  std::vector<int> members() const {
    std::vector<int> out;
    for (int a = 0; a < 64; ++a)
      if (contains(a)) out.push_back(a);
    return out;
  }
  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.mask == b.mask;
  }
  bool subset_of(const Ideal& other) const {
    return (mask & ~other.mask) == 0;
  }
};

namespace detail {

inline void require_small(const FiniteRing& R) {
  expect(R.size <= 64, errc::size_guard_exceeded,
         "ideal enumeration supports rings with at most 64 elements");
}

/// Smallest ideal of the requested sidedness containing the seed set.
inline std::uint64_t ideal_closure(const FiniteRing& R, std::uint64_t seed,
                                   Sidedness side) {
  const int n = R.size;
  std::uint64_t set = seed | (1ull << R.zero);
  std::vector<int> work = Ideal{set}.members();
  while (!work.empty()) {
    int x = work.back();
    work.pop_back();
    auto push = [&](int e) {
      if (!((set >> e) & 1u)) {
        set |= 1ull << e;
        work.push_back(e);
      }
    };
    for (int m = 0; m < n; ++m) {
      if ((set >> m) & 1u) push(R.plus(x, m));
      if (side != Sidedness::right) push(R.times(m, x));
      if (side != Sidedness::left) push(R.times(x, m));
    }
    // Additions with elements discovered after x are handled when those
    // elements are themselves popped, since addition is commutative.
  }
  return set;
}

inline bool is_ideal(const FiniteRing& R, const Ideal& I, Sidedness side) {
  return ideal_closure(R, I.mask, side) == I.mask;
}

/// Sort key: cardinality first, then the member list lexicographically.
inline bool ideal_before(const Ideal& a, const Ideal& b) {
  int ca = a.cardinality(), cb = b.cardinality();
  if (ca != cb) return ca < cb;
  auto ma = a.members(), mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(),
                                      mb.end());
}

inline void require_member_ideal(const FiniteRing& R, const Ideal& I,
                                 Sidedness side, const char* who) {
  if (!is_ideal(R, I, side))
    fail(errc::mixed_rings,
         std::string(who) + ": operand is not an ideal of this ring");
}

}  // namespace detail

/// All ideals of the requested sidedness, including {0} and the whole ring,
/// sorted by cardinality and then by member list.
inline std::vector<Ideal> enumerate_ideals(const FiniteRing& R,
                                           Sidedness side = Sidedness::twosided) {
  detail::require_small(R);
  const int n = R.size;
  std::vector<std::uint64_t> found;
  std::vector<std::uint64_t> queue;
  auto add = [&](std::uint64_t m) {
    if (std::find(found.begin(), found.end(), m) == found.end()) {
      found.push_back(m);
      queue.push_back(m);
    }
  };
  add(detail::ideal_closure(R, 0, side));
  while (!queue.empty()) {
    std::uint64_t base = queue.back();
    queue.pop_back();
    for (int g = 0; g < n; ++g) {
      if ((base >> g) & 1u) continue;
      add(detail::ideal_closure(R, base | (1ull << g), side));
    }
  }
  std::vector<Ideal> out;
  out.reserve(found.size());
  for (auto m : found) out.push_back(Ideal{m});
  std::sort(out.begin(), out.end(), detail::ideal_before);
  return out;
}

/// I + J = {i + j}.  Already an ideal; no closure step is needed.
inline Ideal ideal_sum(const FiniteRing& R, const Ideal& I, const Ideal& J,
                       Sidedness side = Sidedness::twosided) {
  detail::require_small(R);
  detail::require_member_ideal(R, I, side, "ideal_sum");
  detail::require_member_ideal(R, J, side, "ideal_sum");
  std::uint64_t out = 0;
  for (int a : I.members())
    for (int b : J.members()) out |= 1ull << R.plus(a, b);
  return Ideal{out};
}

/// I (x) J: the ideal generated by the pairwise products; sums of products
/// are supplied by the additive part of the closure.
inline Ideal ideal_product(const FiniteRing& R, const Ideal& I, const Ideal& J,
                           Sidedness side = Sidedness::twosided) {
  detail::require_small(R);
  detail::require_member_ideal(R, I, side, "ideal_product");
  detail::require_member_ideal(R, J, side, "ideal_product");
  std::uint64_t seed = 0;
  for (int a : I.members())
    for (int b : J.members()) seed |= 1ull << R.times(a, b);
  return Ideal{detail::ideal_closure(R, seed, side)};
}

/// (J : I) = {x : x * i in J for every i in I}.
inline Ideal ideal_quotient(const FiniteRing& R, const Ideal& J,
                            const Ideal& I) {
  detail::require_small(R);
  detail::require_member_ideal(R, I, Sidedness::twosided, "ideal_quotient");
  detail::require_member_ideal(R, J, Sidedness::twosided, "ideal_quotient");
  std::uint64_t out = 0;
  for (int x = 0; x < R.size; ++x) {
    bool in = true;
    for (int i : I.members())
      if (!J.contains(R.times(x, i))) {
        in = false;
        break;
      }
    if (in) out |= 1ull << x;
  }
  return Ideal{out};
}

/// Ann(I) = (0 : I).
inline Ideal annihilator(const FiniteRing& R, const Ideal& I) {
  return ideal_quotient(R, Ideal{1ull << R.zero}, I);
}

inline bool ideal_is_principal(const FiniteRing& R, const Ideal& I,
                               Sidedness side = Sidedness::twosided) {
  for (int g : I.members())
    if (detail::ideal_closure(R, 1ull << g, side) == I.mask) return true;
  return false;
}

/// Deterministic display label: "(0)" for the zero ideal, "A" for the whole
/// ring, otherwise a greedily chosen minimal generator list "(g1,g2,...)".
inline std::string ideal_label(const FiniteRing& R, const Ideal& I,
                               Sidedness side = Sidedness::twosided) {
  if (I.cardinality() == 1) return "(0)";
  if (I.cardinality() == R.size) return "A";
  std::uint64_t span = detail::ideal_closure(R, 0, side);
  std::vector<int> gens;
  while (span != I.mask) {
    int next = -1;
    for (int a : I.members())
      if (!((span >> a) & 1u)) {
        next = a;
        break;
      }
    gens.push_back(next);
    span = detail::ideal_closure(R, span | (1ull << next), side);
  }
  std::string out = "(";
  for (size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ",";
    out += R.name(gens[i]);
  }
  return out + ")";
}

struct IdealStats {
  int n_ideals = 0;
  int n_maximal = 0;
  int n_prime = 0;
  bool is_local = false;
  bool is_principal_ring = false;
  std::optional<int> non_principal_index;  // index into enumerate_ideals order
};

/// Maximal/prime/principality statistics for a commutative ring.
inline IdealStats classify_ideals(const FiniteRing& R) {
  expect(R.commutative, errc::non_commutative_ring,
         "ideal classification requires a commutative ring");
  auto ideals = enumerate_ideals(R);
  const std::uint64_t full = ideals.back().mask;

  IdealStats st;
  st.n_ideals = static_cast<int>(ideals.size());
  st.is_principal_ring = true;
  for (size_t i = 0; i < ideals.size(); ++i) {
    const Ideal& P = ideals[i];
    if (!ideal_is_principal(R, P)) {
      st.is_principal_ring = false;
      if (!st.non_principal_index) st.non_principal_index = static_cast<int>(i);
    }
    if (P.mask == full) continue;  // proper ideals only below
    bool maximal = true;
    for (const Ideal& Q : ideals)
      if (Q.mask != full && Q.mask != P.mask && P.subset_of(Q)) {
        maximal = false;
        break;
      }
    if (maximal) ++st.n_maximal;
    bool prime = true;
    for (int a = 0; a < R.size && prime; ++a)
      for (int b = 0; b < R.size; ++b)
        if (P.contains(R.times(a, b)) && !P.contains(a) && !P.contains(b)) {
          prime = false;
          break;
        }
    if (prime) ++st.n_prime;
  }
  st.is_local = st.n_maximal == 1;
  return st;
}

}  // namespace residua
