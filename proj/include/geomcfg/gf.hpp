#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

#include "geomcfg/canon.hpp"
#include "geomcfg/common.hpp"
#include "geomcfg/incidence.hpp"

namespace geomcfg {

/// Exact arithmetic for GF(p^k), elements encoded as integers 0..q-1 in the
/// polynomial basis (coefficient little-endian base p).
///
/// The modulus is the lexicographically smallest monic irreducible of degree
/// k over GF(p), coefficient lists compared low degree first, which makes the
/// element encoding portable without an external polynomial database.
class FieldTable {
public:
  FieldTable(int p, int k) : p_(p), k_(k) {
    require(p >= 2, "UnsupportedField", "characteristic must be at least 2");
    for (int d = 2; d * d <= p; ++d)
      require(p % d != 0, "UnsupportedField", "characteristic must be prime");
    require(k >= 1, "UnsupportedField", "extension degree must be positive");
    long long qq = 1;
    for (int i = 0; i < k; ++i) {
      qq *= p;
      require(qq <= (1 << 16), "UnsupportedField", "field size capped at 2^16");
    }
    q_ = static_cast<int>(qq);
    choose_modulus();
    build_log_tables();
  }

  int p() const { return p_; }
  int k() const { return k_; }
  int q() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }
  int generator() const { return generator_; }

  int add(int a, int b) const {
    int out = 0, mul = 1;
    for (int i = 0; i < k_; ++i) {
      int da = (a / mul) % p_ + (b / mul) % p_;
      if (da >= p_) da -= p_;
      out += da * mul;
      mul *= p_;
    }
    return out;
  }

  int neg(int a) const {
    int out = 0, mul = 1;
    for (int i = 0; i < k_; ++i) {
      int d = (a / mul) % p_;
      out += (d == 0 ? 0 : p_ - d) * mul;
      mul *= p_;
    }
    return out;
  }

  int sub(int a, int b) const { return add(a, neg(b)); }

  int mul(int a, int b) const {
    if (a == 0 || b == 0) return 0;
    int e = log_[static_cast<std::size_t>(a)] + log_[static_cast<std::size_t>(b)];
    if (e >= q_ - 1) e -= q_ - 1;
    return exp_[static_cast<std::size_t>(e)];
  }

  int inv(int a) const {
    require(a != 0, "InvalidParams", "zero has no inverse");
    int e = (q_ - 1 - log_[static_cast<std::size_t>(a)]) % (q_ - 1);
    return exp_[static_cast<std::size_t>(e)];
  }

  int pow(int a, long long e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    long long le = (log_[static_cast<std::size_t>(a)] * (e % (q_ - 1))) % (q_ - 1);
    if (le < 0) le += q_ - 1;
    return exp_[static_cast<std::size_t>(le)];
  }

  /// Frobenius x -> x^p, an automorphism fixing exactly the prime subfield.
  int frobenius(int a) const { return pow(a, p_); }

private:
  // polynomial helpers over GF(p); poly = coefficient vector, little-endian
  std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m) const {
    int dm = static_cast<int>(m.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= dm) {
      int da = static_cast<int>(a.size()) - 1;
      if (a.back() == 0) {
        a.pop_back();
        continue;
      }
      int lead = a.back();
      // leading coefficient of m is 1 (monic)
      for (int i = 0; i <= dm; ++i) {
        int idx = da - dm + i;
        a[static_cast<std::size_t>(idx)] =
            ((a[static_cast<std::size_t>(idx)] - lead * m[static_cast<std::size_t>(i)]) % p_ + p_) % p_;
      }
      while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
  }

  std::vector<int> poly_mulmod(const std::vector<int>& a, const std::vector<int>& b,
                               const std::vector<int>& m) const {
    std::vector<int> c(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j)
        c[i + j] = (c[i + j] + a[i] * b[j]) % p_;
    while (!c.empty() && c.back() == 0) c.pop_back();
    return poly_mod(std::move(c), m);
  }

  static std::vector<int> decode_poly(int code, int p) {
    std::vector<int> out;
    while (code > 0) {
      out.push_back(code % p);
      code /= p;
    }
    return out;
  }
  static int encode_poly(const std::vector<int>& poly, int p) {
    int code = 0, mul = 1;
    for (int c : poly) {
      code += c * mul;
      mul *= p;
    }
    return code;
  }

  bool is_irreducible(const std::vector<int>& m) const {
    int dm = static_cast<int>(m.size()) - 1;
    if (dm == 1) return true;
    // trial division by every monic polynomial of degree 1..dm/2
    for (int dd = 1; 2 * dd <= dm; ++dd) {
      int lo = 1;
      for (int i = 0; i < dd; ++i) lo *= p_;
      for (int code = 0; code < lo; ++code) {
        std::vector<int> div = decode_poly(code, p_);
        div.resize(static_cast<std::size_t>(dd) + 1, 0);
        div[static_cast<std::size_t>(dd)] = 1;
        if (poly_mod(m, div).empty()) return false;
      }
    }
    return true;
  }

  void choose_modulus() {
    if (k_ == 1) {
      modulus_ = {0, 1};  // x
      return;
    }
    // lexicographic sweep over (c_0, c_1, ..., c_{k-1}), c_0 most significant
    std::vector<int> c(static_cast<std::size_t>(k_), 0);
    for (;;) {
      std::vector<int> m = c;
      m.push_back(1);
      if (is_irreducible(m)) {
        modulus_ = m;
        return;
      }
      int i = k_ - 1;
      while (i >= 0 && c[static_cast<std::size_t>(i)] == p_ - 1) {
        c[static_cast<std::size_t>(i)] = 0;
        --i;
      }
      require(i >= 0, "UnsupportedField", "no irreducible modulus found");
      ++c[static_cast<std::size_t>(i)];
    }
  }

  void build_log_tables() {
    log_.assign(static_cast<std::size_t>(q_), -1);
    exp_.assign(static_cast<std::size_t>(q_ - 1), 0);
    // find a multiplicative generator by direct order check
    for (int g = 1; g < q_; ++g) {
      std::vector<int> gp = decode_poly(g, p_);
      std::vector<int> acc = {1};
      int order = 0;
      bool hit_all = true;
      std::vector<char> seen(static_cast<std::size_t>(q_), 0);
      do {
        acc = poly_mulmod(acc, gp, modulus_);
        ++order;
        int code = encode_poly(acc, p_);
        if (seen[static_cast<std::size_t>(code)]) {
          hit_all = false;
          break;
        }
        seen[static_cast<std::size_t>(code)] = 1;
      } while (encode_poly(acc, p_) != 1);
      if (hit_all && order == q_ - 1) {
        generator_ = g;
        std::vector<int> a = {1};
        for (int e = 0; e < q_ - 1; ++e) {
          int code = encode_poly(a, p_);
          exp_[static_cast<std::size_t>(e)] = code;
          log_[static_cast<std::size_t>(code)] = e;
          a = poly_mulmod(a, gp, modulus_);
        }
        return;
      }
    }
    fail("UnsupportedField", "no generator found");
  }

  int p_, k_, q_ = 0;
  int generator_ = 0;
  std::vector<int> modulus_;
  std::vector<int> log_, exp_;
};

/// Exact value of the Gaussian binomial m(r,n;q): the number of projective
/// r-subspaces of P^n over GF(q). m(-1,n;q) = 1 by convention.
inline BigInt gaussian_binomial(int r, int n, long long q) {
  require(q >= 2, "InvalidParams", "q must be at least 2");
  require(r >= -1 && r <= n, "InvalidParams", "need -1 <= r <= n");
  if (r == -1) return 1;
  BigInt num = 1, den = 1;
  for (int i = 0; i <= r; ++i) {
    BigInt qn = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(n + 1 - i));
    BigInt qd = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(i + 1));
    num *= qn - 1;
    den *= qd - 1;
  }
  return num / den;
}

/// Projective subspace of P^n in reduced row echelon form; the RREF basis is
/// the unique canonical representative.
struct Subspace {
  int n = 0;  // ambient projective dimension
  int d = 0;  // projective dimension
  std::vector<std::vector<int>> basis;  // (d+1) x (n+1), field element codes

  friend bool operator<(const Subspace& a, const Subspace& b) { return a.basis < b.basis; }
  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis == b.basis; }
};

inline std::vector<Subspace> enumerate_subspaces(int n, int d, const FieldTable& f) {
  require(n >= 0 && d >= 0 && d <= n, "InvalidDims", "need 0 <= d <= n");
  int rows = d + 1, cols = n + 1;
  BigInt expected = gaussian_binomial(d, n, f.q());
  require(expected <= 1000000, "InvalidDims", "subspace count capped at 10^6");
  std::vector<Subspace> out;
  out.reserve(static_cast<std::size_t>(expected));
  std::vector<int> pivots(static_cast<std::size_t>(rows));
  for (int i = 0; i < rows; ++i) pivots[static_cast<std::size_t>(i)] = i;
  for (;;) {
    // free positions: (i,j) with j > pivots[i], j not itself a pivot
    std::vector<std::pair<int, int>> free_pos;
    for (int i = 0; i < rows; ++i)
      for (int j = pivots[static_cast<std::size_t>(i)] + 1; j < cols; ++j)
        if (std::find(pivots.begin(), pivots.end(), j) == pivots.end())
          free_pos.emplace_back(i, j);
    std::vector<int> vals(free_pos.size(), 0);
    for (;;) {
      Subspace s;
      s.n = n;
      s.d = d;
      s.basis.assign(static_cast<std::size_t>(rows), std::vector<int>(static_cast<std::size_t>(cols), 0));
      for (int i = 0; i < rows; ++i)
        s.basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(pivots[static_cast<std::size_t>(i)])] = 1;
      for (std::size_t t = 0; t < free_pos.size(); ++t)
        s.basis[static_cast<std::size_t>(free_pos[t].first)][static_cast<std::size_t>(free_pos[t].second)] =
            vals[t];
      out.push_back(std::move(s));
      std::size_t t = 0;
      while (t < vals.size() && vals[t] == f.q() - 1) vals[t++] = 0;
      if (t == vals.size()) break;
      ++vals[t];
    }
    // next pivot combination
    int i = rows - 1;
    while (i >= 0 && pivots[static_cast<std::size_t>(i)] == cols - rows + i) --i;
    if (i < 0) break;
    ++pivots[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < rows; ++j)
      pivots[static_cast<std::size_t>(j)] = pivots[static_cast<std::size_t>(j - 1)] + 1;
  }
  std::sort(out.begin(), out.end());
  require(BigInt(out.size()) == expected, "InternalError", "subspace count mismatch");
  return out;
}

/// Reduces vec against an RREF basis; returns true iff vec lies in its span.
inline bool in_span(const std::vector<std::vector<int>>& rref, std::vector<int> vec,
                    const FieldTable& f) {
  for (const auto& row : rref) {
    int pivot = -1;
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0) {
        pivot = static_cast<int>(j);
        break;
      }
    if (pivot < 0) continue;
    int c = vec[static_cast<std::size_t>(pivot)];
    if (c != 0)
      for (std::size_t j = 0; j < vec.size(); ++j)
        vec[j] = f.sub(vec[j], f.mul(c, row[j]));
  }
  return std::all_of(vec.begin(), vec.end(), [](int x) { return x == 0; });
}

/// PG(n,r,s;q): points are the r-subspaces, blocks the s-subspaces, incidence
/// is containment.
inline IncidenceStructure pg_configuration(int n, int r, int s, const FieldTable& f) {
  require(0 <= r && r < s && s <= n - 1, "InvalidDims", "need 0 <= r < s <= n-1");
  std::vector<Subspace> pts = enumerate_subspaces(n, r, f);
  std::vector<Subspace> blks = enumerate_subspaces(n, s, f);
  require(BigInt(pts.size()) * BigInt(blks.size()) <= BigInt(1000000) * 64, "InvalidDims",
          "incidence table too large");
  IncidenceStructure out(static_cast<int>(pts.size()), static_cast<int>(blks.size()));
  for (int j = 0; j < out.b; ++j) {
    const auto& B = blks[static_cast<std::size_t>(j)].basis;
    for (int x = 0; x < out.v; ++x) {
      bool inside = true;
      for (const auto& row : pts[static_cast<std::size_t>(x)].basis)
        if (!in_span(B, row, f)) {
          inside = false;
          break;
        }
      if (inside) out.inc.set(x, j, true);
    }
  }
  return out;
}

/// PG(n,r,s;q) against PG(n,n-s-1,n-r-1;q): true iff the projective duality
/// pairing holds per the canonical-form engine.
inline bool check_pg_duality(int n, int r, int s, const FieldTable& f) {
  IncidenceStructure lhs = pg_configuration(n, r, s, f);
  IncidenceStructure rhs = pg_configuration(n, n - s - 1, n - r - 1, f);
  return is_isomorphic(lhs, dual(rhs));
}

/// Canonical representatives of P^m(F): first nonzero coordinate scaled to 1,
/// listed in lexicographic order of the coordinate codes.
inline std::vector<std::vector<int>> projective_points(int m, const FieldTable& f) {
  std::vector<std::vector<int>> out;
  std::vector<int> v(static_cast<std::size_t>(m) + 1, 0);
  for (;;) {
    int first = -1;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) {
        first = static_cast<int>(i);
        break;
      }
    if (first >= 0 && v[static_cast<std::size_t>(first)] == 1) out.push_back(v);
    std::size_t t = v.size();
    while (t > 0 && v[t - 1] == f.q() - 1) v[--t] = 0;
    if (t == 0) break;
    ++v[t - 1];
  }
  return out;
}

inline std::vector<int> normalize_projective(std::vector<int> v, const FieldTable& f) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) {
      int c = f.inv(v[i]);
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = f.mul(v[j], c);
      return v;
    }
  fail("InvalidParams", "zero vector is not projective");
}

/// Coordinate-wise p^k power, renormalized to the canonical representative.
inline std::vector<int> frobenius_power(const std::vector<int>& pt, int k, const FieldTable& f) {
  std::vector<int> out(pt.size());
  for (std::size_t i = 0; i < pt.size(); ++i) {
    int x = pt[i];
    for (int t = 0; t < k; ++t) x = f.frobenius(x);
    out[i] = x;
  }
  return normalize_projective(std::move(out), f);
}

/// Both points and blocks are P^2(F_{q^2}); (a,b) is incident iff
/// a0 b0^q + a1 b1^q + a2 b2^q = 0. The defining relation is symmetric in a
/// and b, so the identity index map read as a point/block exchange is a
/// switch.
inline IncidenceStructure mukai_incidence(int q_base, const FieldTable& f2) {
  require(f2.q() == q_base * q_base, "UnsupportedField",
          "field must be the quadratic extension GF(q^2)");
  std::vector<std::vector<int>> pts = projective_points(2, f2);
  int n = static_cast<int>(pts.size());
  IncidenceStructure out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int acc = 0;
      for (int c = 0; c < 3; ++c)
        acc = f2.add(acc, f2.mul(pts[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)],
                                 f2.pow(pts[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)],
                                        q_base)));
      if (acc == 0) out.inc.set(i, j, true);
    }
  return out;
}

}  // namespace geomcfg
