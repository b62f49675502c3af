#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "residua/residuated.hpp"

namespace residua {

/// A verified carrier bijection between two algebras.  The mapping preserves
/// the order, the monoid and the arrow (the arrow is implied by the first
/// two but is checked anyway).
struct IsoCertificate {
  std::vector<int> mapping;  // mapping[x in L1] = image in L2
  bool verified = false;
};

namespace detail {

/// Permutation-invariant per-element fingerprint used to prune the search
/// and to pre-partition canonicalization.
inline std::vector<std::uint64_t> element_fingerprints(
    const ResiduatedLattice& L) {
  const int n = L.size();
  std::vector<std::uint64_t> fp(n);
  for (int x = 0; x < n; ++x) {
    int down = 0, up = 0, idem = L.times(x, x) == x ? 1 : 0;
    for (int y = 0; y < n; ++y) {
      if (L.lat.le(y, x)) ++down;
      if (L.lat.le(x, y)) ++up;
    }
    int star_down = 0;
    int s = L.star(x);
    for (int y = 0; y < n; ++y)
      if (L.lat.le(y, s)) ++star_down;
    int sq_down = 0;
    int sq = L.times(x, x);
    for (int y = 0; y < n; ++y)
      if (L.lat.le(y, sq)) ++sq_down;
    fp[x] = (static_cast<std::uint64_t>(down) << 32) |
            (static_cast<std::uint64_t>(up) << 16) |
            (static_cast<std::uint64_t>(idem) << 15) |
            (static_cast<std::uint64_t>(star_down) << 8) |
            static_cast<std::uint64_t>(sq_down);
  }
  return fp;
}

inline bool mapping_consistent(const ResiduatedLattice& A,
                               const ResiduatedLattice& B,
                               const std::vector<int>& map, int just_set) {
  const int n = A.size();
  int x = just_set;
  for (int y = 0; y < n; ++y) {
    if (map[y] < 0) continue;
    if (A.lat.le(x, y) != B.lat.le(map[x], map[y])) return false;
    if (A.lat.le(y, x) != B.lat.le(map[y], map[x])) return false;
    int xy = A.times(x, y);
    if (map[xy] >= 0 && B.times(map[x], map[y]) != map[xy]) return false;
    int yx = A.times(y, x);
    if (map[yx] >= 0 && B.times(map[y], map[x]) != map[yx]) return false;
  }
  return true;
}

inline bool iso_search(const ResiduatedLattice& A, const ResiduatedLattice& B,
                       const std::vector<std::uint64_t>& fpA,
                       const std::vector<std::uint64_t>& fpB,
                       std::vector<int>& map, std::vector<char>& used,
                       int next) {
  const int n = A.size();
  if (next == n) return true;
  for (int img = 0; img < n; ++img) {
    if (used[img] || fpA[next] != fpB[img]) continue;
    map[next] = img;
    used[img] = 1;
    if (mapping_consistent(A, B, map, next) &&
        iso_search(A, B, fpA, fpB, map, used, next + 1))
      return true;
    map[next] = -1;
    used[img] = 0;
  }
  return false;
}

}  // namespace detail

/// Searches for an isomorphism, pruning candidates by element fingerprints
/// before the backtracking assignment.  The returned mapping is fully
/// re-verified against every table.
inline std::optional<IsoCertificate> are_isomorphic(
    const ResiduatedLattice& A, const ResiduatedLattice& B) {
  if (A.size() != B.size()) return std::nullopt;
  const int n = A.size();

  auto fpA = detail::element_fingerprints(A);
  auto fpB = detail::element_fingerprints(B);
  {
    auto sa = fpA, sb = fpB;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  if (!detail::iso_search(A, B, fpA, fpB, map, used, 0)) return std::nullopt;

  IsoCertificate cert;
  cert.mapping = map;
  cert.verified = true;
  for (int x = 0; x < n && cert.verified; ++x)
    for (int y = 0; y < n; ++y) {
      if (A.lat.le(x, y) != B.lat.le(map[x], map[y]) ||
          map[A.times(x, y)] != B.times(map[x], map[y]) ||
          map[A.implies(x, y)] != B.implies(map[x], map[y]) ||
          map[A.lat.meet(x, y)] != B.lat.meet(map[x], map[y]) ||
          map[A.lat.join(x, y)] != B.lat.join(map[x], map[y])) {
        cert.verified = false;
        break;
      }
    }
  if (!cert.verified || map[A.lat.bottom] != B.lat.bottom ||
      map[A.lat.top] != B.lat.top)
    fail(errc::validation_failed, "isomorphism search produced a bad map");
  return cert;
}

namespace detail {

/// Byte encoding of the order and monoid tables under a relabeling.
inline void encode_under(const ResiduatedLattice& L,
                         const std::vector<int>& perm,
                         std::vector<std::uint8_t>& out) {
  const int n = L.size();
  std::vector<int> inv(n);
  for (int i = 0; i < n; ++i) inv[perm[i]] = i;
  out.clear();
  out.reserve(2 * n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      out.push_back(L.lat.le(inv[x], inv[y]) ? 1 : 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      out.push_back(static_cast<std::uint8_t>(perm[L.times(inv[x], inv[y])]));
}

}  // namespace detail

/// Deterministic isomorphism-class key: the least table encoding over all
/// carrier relabelings.  Quadratic-factorial in the carrier size; guarded
/// for the small algebras this project enumerates.
inline std::vector<std::uint8_t> canonical_key(const ResiduatedLattice& L) {
  const int n = L.size();
  expect(n <= 9, errc::size_guard_exceeded,
         "canonical form is limited to 9 elements");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint8_t> best, cur;
  do {
    // Bottom and top are isomorphism invariants, so pinning their images to
    // fixed positions keeps the key well defined while cutting the search.
    if (perm[L.lat.bottom] != 0 || perm[L.lat.top] != n - 1) continue;
    detail::encode_under(L, perm, cur);
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace residua
