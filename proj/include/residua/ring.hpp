#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "residua/core.hpp"

namespace residua {

/// Describes how to build a finite unitary ring.  Zn(k) is the ring of
/// integers mod k; Product takes componentwise operations; PolyQuot(p, f) is
/// Z_p[x]/(f) with f given as little-endian coefficients over the prime
/// field Z_p; Table supplies explicit operation tables.
struct RingSpec {
  enum class Kind { zn, product, polyquot, table };

  Kind kind = Kind::zn;
  int k = 0;                       // zn
  std::vector<RingSpec> factors;   // product
  int p = 0;                       // polyquot
  std::vector<int> f;              // polyquot, little-endian coefficients
  std::vector<std::vector<int>> add;  // table
  std::vector<std::vector<int>> mul;  // table
  int zero = 0;                    // table
  int one = 0;                     // table
  std::vector<std::string> names;  // table, optional element names
  std::string display_name;        // table, optional name for reports

  static RingSpec Zn(int k) {
    RingSpec s;
    s.kind = Kind::zn;
    s.k = k;
    return s;
  }
  static RingSpec Product(std::vector<RingSpec> fs) {
    RingSpec s;
    s.kind = Kind::product;
    s.factors = std::move(fs);
    return s;
  }
  static RingSpec PolyQuot(int p, std::vector<int> f) {
    RingSpec s;
    s.kind = Kind::polyquot;
    s.p = p;
    s.f = std::move(f);
    return s;
  }
  static RingSpec Table(std::vector<std::vector<int>> add,
                        std::vector<std::vector<int>> mul, int zero, int one,
                        std::vector<std::string> names = {},
                        std::string display_name = {}) {
    RingSpec s;
    s.kind = Kind::table;
    s.add = std::move(add);
    s.mul = std::move(mul);
    s.zero = zero;
    s.one = one;
    s.names = std::move(names);
    s.display_name = std::move(display_name);
    return s;
  }
};

/// A finite unitary ring as validated operation tables.  The commutative
/// flag records the exhaustively checked commutativity of multiplication.
struct FiniteRing {
  int size = 0;
  std::vector<int> add;  // row-major
  std::vector<int> mul;
  int zero = 0;
  int one = 0;
  bool commutative = false;
  std::vector<std::string> names;
  RingSpec spec;

  int plus(int a, int b) const { return add[a * size + b]; }
  int times(int a, int b) const { return mul[a * size + b]; }
  std::string name(int a) const {
    if (a >= 0 && a < static_cast<int>(names.size()) && !names[a].empty())
      return names[a];
    return std::to_string(a);
  }
};

namespace detail {

inline bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline std::string poly_name(const std::vector<int>& coeffs) {
  std::string out;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
    int c = coeffs[i];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c);
    } else {
      if (c != 1) out += std::to_string(c);
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

/// Validates the ring axioms and fills in the commutativity flag.
inline void validate_ring_tables(FiniteRing& R) {
  const int n = R.size;
  expect(n >= 1, errc::invalid_spec, "ring must be nonempty");
  expect(static_cast<int>(R.add.size()) == n * n &&
             static_cast<int>(R.mul.size()) == n * n,
         errc::invalid_spec, "operation tables must be size x size");
  expect(R.zero >= 0 && R.zero < n && R.one >= 0 && R.one < n,
         errc::invalid_spec, "zero/one out of range");
  for (int i = 0; i < n * n; ++i)
    expect((R.add[i] >= 0 && R.add[i] < n) && (R.mul[i] >= 0 && R.mul[i] < n),
           errc::ring_axiom_violation, "table entry out of range",
           {i / n, i % n});

  for (int a = 0; a < n; ++a) {
    if (R.plus(R.zero, a) != a || R.plus(a, R.zero) != a)
      fail(errc::ring_axiom_violation, "zero is not an additive identity",
           {a});
    if (R.times(R.one, a) != a || R.times(a, R.one) != a)
      fail(errc::ring_axiom_violation,
           "one is not a multiplicative identity", {a});
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (R.plus(a, b) != R.plus(b, a))
        fail(errc::ring_axiom_violation, "addition is not commutative",
             {a, b});
  for (int a = 0; a < n; ++a) {
    bool inv = false;
    for (int b = 0; b < n && !inv; ++b) inv = R.plus(a, b) == R.zero;
    if (!inv)
      fail(errc::ring_axiom_violation, "missing additive inverse", {a});
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (R.plus(R.plus(a, b), c) != R.plus(a, R.plus(b, c)))
          fail(errc::ring_axiom_violation, "addition is not associative",
               {a, b, c});
        if (R.times(R.times(a, b), c) != R.times(a, R.times(b, c)))
          fail(errc::ring_axiom_violation,
               "multiplication is not associative", {a, b, c});
        if (R.times(a, R.plus(b, c)) != R.plus(R.times(a, b), R.times(a, c)))
          fail(errc::ring_axiom_violation, "left distributivity fails",
               {a, b, c});
        if (R.times(R.plus(a, b), c) != R.plus(R.times(a, c), R.times(b, c)))
          fail(errc::ring_axiom_violation, "right distributivity fails",
               {a, b, c});
      }

  R.commutative = true;
  for (int a = 0; a < n && R.commutative; ++a)
    for (int b = a + 1; b < n; ++b)
      if (R.times(a, b) != R.times(b, a)) {
        R.commutative = false;
        break;
      }
}

}  // namespace detail

/// A compact name for a spec ("Z8", "Z2xZ4", "Z2[x]/(x^2)", ...).
inline std::string ring_short_name(const RingSpec& s) {
  switch (s.kind) {
    case RingSpec::Kind::zn:
      return "Z" + std::to_string(s.k);
    case RingSpec::Kind::product: {
      std::string out;
      for (size_t i = 0; i < s.factors.size(); ++i) {
        if (i) out += "x";
        out += ring_short_name(s.factors[i]);
      }
      return out;
    }
    case RingSpec::Kind::polyquot:
      return "Z" + std::to_string(s.p) + "[x]/(" + detail::poly_name(s.f) +
             ")";
    case RingSpec::Kind::table:
      return s.display_name.empty()
                 ? "table" + std::to_string(s.add.size())
                 : s.display_name;
  }
  return "?";
}

/// Builds and validates the ring described by the spec.
inline FiniteRing build_ring(const RingSpec& spec) {
  FiniteRing R;
  R.spec = spec;
  switch (spec.kind) {
    case RingSpec::Kind::zn: {
      expect(spec.k >= 2, errc::invalid_spec, "Zn requires k >= 2");
      const int k = spec.k;
      R.size = k;
      R.add.resize(k * k);
      R.mul.resize(k * k);
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
          R.add[a * k + b] = (a + b) % k;
          R.mul[a * k + b] = (a * b) % k;
        }
      R.zero = 0;
      R.one = 1 % k;
      R.names.resize(k);
      for (int a = 0; a < k; ++a) R.names[a] = std::to_string(a);
      break;
    }
    case RingSpec::Kind::product: {
      expect(!spec.factors.empty(), errc::invalid_spec,
             "product needs at least one factor");
      std::vector<FiniteRing> parts;
      long long total = 1;
      for (const auto& f : spec.factors) {
        parts.push_back(build_ring(f));
        total *= parts.back().size;
        expect(total <= (1 << 20), errc::invalid_spec,
               "product ring is too large");
      }
      const int n = static_cast<int>(total);
      const int m = static_cast<int>(parts.size());
      // Mixed-radix digits, leftmost factor most significant.
      std::vector<int> stride(m, 1);
      for (int i = m - 2; i >= 0; --i)
        stride[i] = stride[i + 1] * parts[i + 1].size;
      auto digits = [&](int idx) {
        std::vector<int> d(m);
        for (int i = 0; i < m; ++i) {
          d[i] = idx / stride[i];
          idx %= stride[i];
        }
        return d;
      };
      R.size = n;
      R.add.resize(n * n);
      R.mul.resize(n * n);
      for (int a = 0; a < n; ++a) {
        auto da = digits(a);
        for (int b = 0; b < n; ++b) {
          auto db = digits(b);
          int s = 0, p = 0;
          for (int i = 0; i < m; ++i) {
            s += parts[i].plus(da[i], db[i]) * stride[i];
            p += parts[i].times(da[i], db[i]) * stride[i];
          }
          R.add[a * n + b] = s;
          R.mul[a * n + b] = p;
        }
      }
      R.zero = 0;
      R.one = 0;
      for (int i = 0; i < m; ++i) R.one += parts[i].one * stride[i];
      R.names.resize(n);
      for (int a = 0; a < n; ++a) {
        auto d = digits(a);
        std::string nm = "(";
        for (int i = 0; i < m; ++i) {
          if (i) nm += ",";
          nm += parts[i].name(d[i]);
        }
        nm += ")";
        R.names[a] = nm;
      }
      break;
    }
    case RingSpec::Kind::polyquot: {
      expect(detail::is_prime(spec.p), errc::invalid_spec,
             "polyquot modulus must be prime");
      const int p = spec.p;
      std::vector<int> f = spec.f;
      for (auto& c : f) c = ((c % p) + p) % p;
      while (!f.empty() && f.back() == 0) f.pop_back();
      expect(f.size() >= 2, errc::invalid_spec,
             "polyquot divisor must have degree >= 1");
      // Normalize to a monic divisor; scaling by a unit keeps the ideal.
      int lead = f.back();
      if (lead != 1) {
        int inv = 1;
        for (int c = 1; c < p; ++c)
          if ((lead * c) % p == 1) inv = c;
        for (auto& c : f) c = (c * inv) % p;
      }
      const int deg = static_cast<int>(f.size()) - 1;
      long long total = 1;
      for (int i = 0; i < deg; ++i) {
        total *= p;
        expect(total <= (1 << 20), errc::invalid_spec,
               "quotient ring is too large");
      }
      const int n = static_cast<int>(total);
      auto coeffs = [&](int idx) {
        std::vector<int> c(deg);
        for (int i = 0; i < deg; ++i) {
          c[i] = idx % p;
          idx /= p;
        }
        return c;
      };
      auto index_of = [&](const std::vector<int>& c) {
        int idx = 0;
        for (int i = deg - 1; i >= 0; --i) idx = idx * p + c[i];
        return idx;
      };
      auto reduce = [&](std::vector<int> c) {
        for (auto& v : c) v = ((v % p) + p) % p;
        for (int i = static_cast<int>(c.size()) - 1; i >= deg; --i) {
          int q = c[i];
          if (q == 0) continue;
          for (int j = 0; j <= deg; ++j)
            c[i - deg + j] = ((c[i - deg + j] - q * f[j]) % p + p * p) % p;
        }
        c.resize(deg);
        return c;
      };
      R.size = n;
      R.add.resize(n * n);
      R.mul.resize(n * n);
      for (int a = 0; a < n; ++a) {
        auto ca = coeffs(a);
        for (int b = 0; b < n; ++b) {
          auto cb = coeffs(b);
          std::vector<int> s(deg);
          for (int i = 0; i < deg; ++i) s[i] = (ca[i] + cb[i]) % p;
          R.add[a * n + b] = index_of(s);
          std::vector<int> m(2 * deg - 1, 0);
          for (int i = 0; i < deg; ++i)
            for (int j = 0; j < deg; ++j) m[i + j] += ca[i] * cb[j];
          R.mul[a * n + b] = index_of(reduce(std::move(m)));
        }
      }
      R.zero = 0;
      R.one = 1;
      R.names.resize(n);
      for (int a = 0; a < n; ++a) R.names[a] = detail::poly_name(coeffs(a));
      break;
    }
    case RingSpec::Kind::table: {
      const int n = static_cast<int>(spec.add.size());
      expect(n >= 1, errc::invalid_spec, "empty table spec");
      R.size = n;
      R.add.resize(n * n);
      R.mul.resize(n * n);
      for (int a = 0; a < n; ++a) {
        expect(static_cast<int>(spec.add[a].size()) == n &&
                   a < static_cast<int>(spec.mul.size()) &&
                   static_cast<int>(spec.mul[a].size()) == n,
               errc::invalid_spec, "table spec rows must be square");
        for (int b = 0; b < n; ++b) {
          R.add[a * n + b] = spec.add[a][b];
          R.mul[a * n + b] = spec.mul[a][b];
        }
      }
      R.zero = spec.zero;
      R.one = spec.one;
      R.names = spec.names;
      if (R.names.empty()) {
        R.names.resize(n);
        for (int a = 0; a < n; ++a) R.names[a] = std::to_string(a);
      }
      break;
    }
  }
  detail::validate_ring_tables(R);
  return R;
}

}  // namespace residua
