#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "geomcfg/incidence.hpp"

namespace geomcfg {

struct BcrVerdict {
  bool pass = false;
  std::string reason;  // set when pass == false
};

struct DesignReport {
  bool is_design = false;
  std::optional<int> lambda;
  // For symmetric designs: do all block pairs also meet in lambda points?
  std::optional<bool> symmetric_dual_lambda_holds;
  std::optional<BcrVerdict> bcr_verdict;
};

inline bool check_design_equations(long long v, long long k, long long b, long long r,
                                   long long lambda) {
  if (v < 0 || k < 0 || b < 0 || r < 0 || lambda < 0) return false;
  return v * k == b * r && k * (r - 1) == lambda * (v - 1);
}

/// Reports whether all point pairs share the same nonzero number of blocks.
inline DesignReport design_lambda(const IncidenceStructure& s, int workers = 1) {
  TacticalReport tac = validate_tactical(s);
  DesignReport rep;
  if (s.v < 2) return rep;
  std::vector<int> first_per_row(static_cast<std::size_t>(s.v), -2);
  parallel_for(static_cast<std::size_t>(s.v), workers, [&](std::size_t xs) {
    int x = static_cast<int>(xs);
    int common = -2;
    for (int y = x + 1; y < s.v; ++y) {
      int c = s.inc.row_and_popcount(x, y);
      if (common == -2)
        common = c;
      else if (c != common) {
        common = -1;
        break;
      }
    }
    first_per_row[xs] = common;
  });
  int lambda = -2;
  for (int x = 0; x + 1 < s.v; ++x) {
    int c = first_per_row[static_cast<std::size_t>(x)];
    if (c < 0) return rep;  // inconsistent within the row
    if (lambda == -2)
      lambda = c;
    else if (c != lambda)
      return rep;
  }
  if (lambda <= 0) return rep;  // constant zero is not a design
  rep.is_design = true;
  rep.lambda = lambda;
  if (tac.params.v == tac.params.b) {
    BitMatrix t = s.inc.transposed();
    bool holds = true;
    for (int i = 0; i < s.b && holds; ++i)
      for (int j = i + 1; j < s.b; ++j)
        if (t.row_and_popcount(i, j) != lambda) {
          holds = false;
          break;
        }
    rep.symmetric_dual_lambda_holds = holds;
  }
  return rep;
}

namespace detail {

inline long long squarefree_part(long long n, long long& square_divisor) {
  // n = squarefree_part * square_divisor^2
  square_divisor = 1;
  long long sf = 1;
  long long m = std::llabs(n);
  for (long long d = 2; d * d <= m; ++d) {
    int e = 0;
    while (m % d == 0) {
      m /= d;
      ++e;
    }
    for (int i = 0; i + 1 < e; i += 2) square_divisor *= d;
    if (e % 2) sf *= d;
  }
  sf *= m;
  return n < 0 ? -sf : sf;
}

inline bool is_square_mod(long long t, long long m) {
  // solvability of x^2 = t (mod m); m small after reduction, scan is exact
  if (m < 0) m = -m;
  if (m == 1) return true;
  t %= m;
  if (t < 0) t += m;
  for (long long x = 0; x <= m / 2; ++x)
    if ((x * x) % m == t) return true;
  return false;
}

}  // namespace detail

/// Existence of a nontrivial integer zero of ax^2 + by^2 + cz^2.
///
/// Reduction to the squarefree pairwise-coprime case, then the classical
/// congruence conditions. Cross-checked against bounded exhaustive search in
/// the tests.
inline bool legendre_solvable(long long a, long long b, long long c) {
  require(a != 0 && b != 0 && c != 0, "InvalidParams", "coefficients must be nonzero");
  // strip square parts (absorbed into the variables)
  long long s;
  a = detail::squarefree_part(a, s);
  b = detail::squarefree_part(b, s);
  c = detail::squarefree_part(c, s);
  // divide out a common factor of all three
  long long g = std::gcd(std::gcd(std::llabs(a), std::llabs(b)), std::llabs(c));
  a /= g;
  b /= g;
  c /= g;
  // shared prime between two coefficients moves to the third: p | a,b gives
  // (a/p) x^2 + (b/p) y^2 + (cp) z'^2 after z = p z'; repeat until coprime
  for (bool changed = true; changed;) {
    changed = false;
    auto step = [&](long long& x, long long& y, long long& z) {
      long long p = std::gcd(std::llabs(x), std::llabs(y));
      if (p > 1) {
        x /= p;
        y /= p;
        z *= p;
        long long sq;
        z = detail::squarefree_part(z, sq);
        changed = true;
      }
    };
    step(a, b, c);
    step(a, c, b);
    step(b, c, a);
  }
  if ((a > 0 && b > 0 && c > 0) || (a < 0 && b < 0 && c < 0)) return false;
  return detail::is_square_mod(-b * c, a) && detail::is_square_mod(-a * c, b) &&
         detail::is_square_mod(-a * b, c);
}

/// Bruck-Chowla-Ryser necessary condition for symmetric (v,k,lambda) designs.
inline BcrVerdict bruck_chowla_ryser(long long v, long long k, long long lambda) {
  require(k * (k - 1) == lambda * (v - 1), "InvalidParams",
          "k(k-1) = lambda(v-1) must hold for symmetric design parameters");
  BcrVerdict verdict;
  long long n = k - lambda;
  if (v % 2 == 0) {
    long long r = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(n))));
    bool square = false;
    for (long long t = std::max(0LL, r - 2); t <= r + 2; ++t)
      if (t * t == n) square = true;
    verdict.pass = square;
    if (!square)
      verdict.reason = "v even and k-lambda = " + std::to_string(n) + " is not a perfect square";
    return verdict;
  }
  long long sign = ((v - 1) / 2) % 2 == 0 ? 1 : -1;
  verdict.pass = legendre_solvable(n, sign * lambda, -1);
  if (!verdict.pass)
    verdict.reason = "(k-lambda)x^2 " + std::string(sign > 0 ? "+" : "-") +
                     " lambda y^2 - z^2 does not represent zero";
  return verdict;
}

/// Square matrix with entries in {+1,-1}.
struct SignMatrix {
  int n = 0;
  std::vector<std::int8_t> entries;  // row-major, values +1/-1

  SignMatrix() = default;
  explicit SignMatrix(int n_) : n(n_), entries(static_cast<std::size_t>(n_) * n_, 1) {}

  int at(int i, int j) const { return entries[static_cast<std::size_t>(i) * n + j]; }
  void put(int i, int j, int v) {
    require(v == 1 || v == -1, "InvalidParams", "sign matrix entries are +1/-1");
    entries[static_cast<std::size_t>(i) * n + j] = static_cast<std::int8_t>(v);
  }
};

inline bool hadamard_check(const SignMatrix& m) {
  for (int i = 0; i < m.n; ++i)
    for (int j = i + 1; j < m.n; ++j) {
      long long dot = 0;
      for (int k = 0; k < m.n; ++k) dot += m.at(i, k) * m.at(j, k);
      if (dot != 0) return false;
    }
  // orthogonality forces the order outside the trivial cases
  require(m.n <= 2 || m.n % 4 == 0, "InvalidOrder",
          "orthogonal +-1 matrix of order not in {1,2} or 4t");
  return true;
}

inline SignMatrix sylvester(int k) {
  require(k >= 0 && k < 16, "InvalidOrder", "sylvester: need 0 <= k < 16");
  SignMatrix h(1);
  for (int step = 0; step < k; ++step) {
    SignMatrix next(2 * h.n);
    for (int i = 0; i < h.n; ++i)
      for (int j = 0; j < h.n; ++j) {
        int e = h.at(i, j);
        next.put(i, j, e);
        next.put(i, j + h.n, e);
        next.put(i + h.n, j, e);
        next.put(i + h.n, j + h.n, -e);
      }
    h = next;
  }
  return h;
}

/// Paley type I Hadamard matrix of order q+1 for a prime q = 3 (mod 4).
inline SignMatrix paley(int q) {
  require(q >= 3 && q % 4 == 3, "InvalidOrder", "paley: q must be 3 mod 4");
  for (int d = 2; d * d <= q; ++d)
    require(q % d != 0, "InvalidOrder", "paley: q must be prime");
  std::vector<int> chi(static_cast<std::size_t>(q), -1);
  chi[0] = 0;
  for (int x = 1; x < q; ++x) chi[static_cast<std::size_t>((x * x) % q)] = 1;
  SignMatrix h(q + 1);
  for (int j = 1; j <= q; ++j) h.put(0, j, 1);
  h.put(0, 0, 1);
  for (int i = 1; i <= q; ++i) h.put(i, 0, -1);
  for (int i = 1; i <= q; ++i)
    for (int j = 1; j <= q; ++j) {
      if (i == j) {
        h.put(i, j, 1);
      } else {
        h.put(i, j, chi[static_cast<std::size_t>(((j - i) % q + q) % q)]);
      }
    }
  return h;
}

struct HadamardDesign {
  IncidenceStructure structure;
  int t = 0;
  int lambda = 0;
  bool degenerate = false;  // t = 1 gives lambda = 0
};

/// Normalizes (columns first, then rows), deletes the first row and column,
/// and maps +1 to incident. Yields a symmetric (4t-1)_{2t-1} design of type
/// t-1.
inline HadamardDesign hadamard_to_design(SignMatrix m) {
  require(hadamard_check(m), "NotHadamard", "input rows are not orthogonal");
  require(m.n >= 4 && m.n % 4 == 0, "NotHadamard", "need order 4t with t >= 1");
  for (int j = 0; j < m.n; ++j)
    if (m.at(0, j) < 0)
      for (int i = 0; i < m.n; ++i) m.put(i, j, -m.at(i, j));
  for (int i = 1; i < m.n; ++i)
    if (m.at(i, 0) < 0)
      for (int j = 0; j < m.n; ++j) m.put(i, j, -m.at(i, j));
  HadamardDesign out;
  out.t = m.n / 4;
  out.lambda = out.t - 1;
  out.degenerate = out.t == 1;
  out.structure = IncidenceStructure(m.n - 1, m.n - 1);
  for (int i = 1; i < m.n; ++i)
    for (int j = 1; j < m.n; ++j)
      if (m.at(i, j) > 0) out.structure.inc.set(i - 1, j - 1, true);
  return out;
}

/// Border with an all-(+1) first row and column: the inverse direction of
/// hadamard_to_design, turning the sign matrix of a (4t-1)_{2t-1} design back
/// into an order-4t candidate.
inline SignMatrix bordered_all_ones(const SignMatrix& m) {
  SignMatrix out(m.n + 1);
  for (int j = 0; j <= m.n; ++j) out.put(0, j, 1);
  for (int i = 1; i <= m.n; ++i) {
    out.put(i, 0, 1);
    for (int j = 1; j <= m.n; ++j) out.put(i, j, m.at(i - 1, j - 1));
  }
  return out;
}

/// (-1,1)-incidence matrix of a symmetric structure, incident mapped to +1.
inline SignMatrix design_to_sign_matrix(const IncidenceStructure& s) {
  require(s.v == s.b, "NotSymmetric", "need v = b");
  SignMatrix m(s.v);
  for (int i = 0; i < s.v; ++i)
    for (int j = 0; j < s.b; ++j) m.put(i, j, s.inc.get(i, j) ? 1 : -1);
  return m;
}

}  // namespace geomcfg
