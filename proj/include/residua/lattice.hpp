#pragma once

#include <string>
#include <vector>

#include "residua/core.hpp"

namespace residua {

/// A finite bounded lattice over the carrier 0..size-1.  The order relation
/// and the meet/join tables are stored explicitly; meet and join are always
/// the tables derived from the order during validation.  Labels are display
/// metadata only and never take part in equality or isomorphism.
struct FiniteLattice {
  int size = 0;
  std::vector<std::uint8_t> leq;  // row-major; leq[x*size+y] != 0  <=>  x <= y
  std::vector<int> meet_table;
  std::vector<int> join_table;
  int bottom = 0;
  int top = 0;
  std::vector<std::string> labels;

  bool le(int x, int y) const { return leq[x * size + y] != 0; }
  int meet(int x, int y) const { return meet_table[x * size + y]; }
  int join(int x, int y) const { return join_table[x * size + y]; }

  bool is_total_order() const {
    for (int x = 0; x < size; ++x)
      for (int y = x + 1; y < size; ++y)
        if (!le(x, y) && !le(y, x)) return false;
    return true;
  }

  std::string label(int x) const {
    if (x >= 0 && x < static_cast<int>(labels.size()) && !labels[x].empty())
      return labels[x];
    return std::to_string(x);
  }
};

namespace detail {

/// Computes the greatest element of `set` (given as char flags) under `leq`,
/// or -1 when the set is empty or has no greatest element.
inline int greatest_of(int n, const std::vector<std::uint8_t>& leq,
                       const std::vector<char>& set) {
  for (int m = 0; m < n; ++m) {
    if (!set[m]) continue;
    bool greatest = true;
    for (int z = 0; z < n && greatest; ++z)
      if (set[z] && !leq[z * n + m]) greatest = false;
    if (greatest) return m;
  }
  return -1;
}

inline int least_of(int n, const std::vector<std::uint8_t>& leq,
                    const std::vector<char>& set) {
  for (int m = 0; m < n; ++m) {
    if (!set[m]) continue;
    bool least = true;
    for (int z = 0; z < n && least; ++z)
      if (set[z] && !leq[m * n + z]) least = false;
    if (least) return m;
  }
  return -1;
}

}  // namespace detail

/// Validates a candidate order relation and returns the lattice with derived
/// meet/join tables and bottom/top.  The relation must be a partial order
/// under which every pair of elements has a greatest lower bound and a least
/// upper bound; finiteness then forces bottom and top to exist, but both are
/// checked explicitly so that failures carry a witness.
inline FiniteLattice validate_lattice(int n,
                                      const std::vector<std::uint8_t>& leq,
                                      std::vector<std::string> labels = {}) {
  expect(n >= 1, errc::bad_input, "lattice size must be at least 1");
  expect(static_cast<int>(leq.size()) == n * n, errc::bad_input,
         "leq relation must be size x size");
  if (!labels.empty())
    expect(static_cast<int>(labels.size()) == n, errc::bad_input,
           "labels must have one entry per element");

  auto le = [&](int x, int y) { return leq[x * n + y] != 0; };

  for (int x = 0; x < n; ++x)
    expect(le(x, x), errc::not_a_partial_order,
           "relation is not reflexive at " + std::to_string(x), {x});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && le(x, y) && le(y, x))
        fail(errc::not_a_partial_order,
             "antisymmetry fails: " + std::to_string(x) + " <= " +
                 std::to_string(y) + " and " + std::to_string(y) +
                 " <= " + std::to_string(x),
             {x, y});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!le(x, y)) continue;
      for (int z = 0; z < n; ++z)
        if (le(y, z) && !le(x, z))
          fail(errc::not_a_partial_order,
               "transitivity fails at (" + std::to_string(x) + "," +
                   std::to_string(y) + "," + std::to_string(z) + ")",
               {x, y, z});
    }

  int bottom = -1, top = -1;
  for (int b = 0; b < n && bottom < 0; ++b) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = le(b, x);
    if (ok) bottom = b;
  }
  expect(bottom >= 0, errc::not_bounded, "no least element");
  for (int t = 0; t < n && top < 0; ++t) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = le(x, t);
    if (ok) top = t;
  }
  expect(top >= 0, errc::not_bounded, "no greatest element");

  FiniteLattice L;
  L.size = n;
  L.leq = leq;
  L.bottom = bottom;
  L.top = top;
  L.labels = std::move(labels);
  L.meet_table.assign(n * n, 0);
  L.join_table.assign(n * n, 0);

  std::vector<char> set(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) set[z] = le(z, x) && le(z, y);
      int m = detail::greatest_of(n, leq, set);
      if (m < 0)
        fail(errc::meet_join_mismatch,
             "pair (" + std::to_string(x) + "," + std::to_string(y) +
                 ") has no greatest lower bound",
             {x, y});
      L.meet_table[x * n + y] = m;
      for (int z = 0; z < n; ++z) set[z] = le(x, z) && le(y, z);
      int j = detail::least_of(n, leq, set);
      if (j < 0)
        fail(errc::meet_join_mismatch,
             "pair (" + std::to_string(x) + "," + std::to_string(y) +
                 ") has no least upper bound",
             {x, y});
      L.join_table[x * n + y] = j;
    }
  return L;
}

}  // namespace residua
