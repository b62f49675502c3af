#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "residua/residua.hpp"

namespace testhelp {

/// Reflexive-transitive closure of base pairs; returns the leq matrix.
inline std::vector<std::uint8_t> leq_closure(
    int n, const std::vector<std::pair<int, int>>& below) {
  std::vector<std::uint8_t> leq(n * n, 0);
  for (int i = 0; i < n; ++i) leq[i * n + i] = 1;
  for (auto [a, b] : below) leq[a * n + b] = 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (!leq[a * n + b]) continue;
        for (int c = 0; c < n; ++c)
          if (leq[b * n + c] && !leq[a * n + c]) {
            leq[a * n + c] = 1;
            changed = true;
          }
      }
  }
  return leq;
}

inline std::vector<std::uint8_t> chain_leq(int n) {
  std::vector<std::uint8_t> leq(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) leq[i * n + j] = 1;
  return leq;
}

/// Chain with the minimum as monoid (the Goedel chain).
inline residua::ResiduatedLattice godel_chain(int n) {
  auto lat = residua::validate_lattice(n, chain_leq(n));
  std::vector<int> odot(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) odot[i * n + j] = std::min(i, j);
  return residua::validate_residuated(lat, odot);
}

inline residua::ResiduatedLattice id_of_zn(int k) {
  return residua::build_ideal_lattice(
             residua::build_ring(residua::RingSpec::Zn(k)))
      .algebra;
}

}  // namespace testhelp
