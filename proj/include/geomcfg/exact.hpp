#pragma once

#include <vector>

#include "geomcfg/common.hpp"

namespace geomcfg {

using IntVec = std::vector<BigInt>;
using IntMat = std::vector<IntVec>;

/// Rank by fraction-free (Bareiss) elimination. Exact; no floating point.
inline int bareiss_rank(IntMat m) {
  int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(m[0].size());
  int rank = 0;
  BigInt prev = 1;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(rank)]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int c = col + 1; c < cols; ++c) {
        BigInt num = m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)] *
                         m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -
                     m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] *
                         m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)];
        m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = num / prev;
      }
      m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] = 0;
    }
    prev = m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)];
    ++rank;
  }
  return rank;
}

inline BigInt determinant(IntMat m) {
  int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(col)]);
      sign = -sign;
    }
    for (int r = col + 1; r < n; ++r) {
      for (int c = col + 1; c < n; ++c) {
        BigInt num = m[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)] *
                         m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -
                     m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] *
                         m[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
        m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = num / prev;
      }
      m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] = 0;
    }
    prev = m[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
  }
  BigInt det = m[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
  return sign > 0 ? det : -det;
}

/// Divides by the gcd and makes the first nonzero entry positive.
inline void reduce_primitive(IntVec& v) {
  BigInt g = 0;
  for (const BigInt& x : v) g = boost::multiprecision::gcd(g, boost::multiprecision::abs(x));
  if (g > 1)
    for (BigInt& x : v) x /= g;
  for (const BigInt& x : v)
    if (x != 0) {
      if (x < 0)
        for (BigInt& y : v) y = -y;
      break;
    }
}

/// Coefficient vector of the hyperplane through r points in P^r, computed as
/// signed maximal minors; exact and gcd-reduced.
inline IntVec hyperplane_through(const IntMat& pts) {
  int r = static_cast<int>(pts.size());
  require(r >= 1, "InvalidDims", "need at least one spanning point");
  int cols = static_cast<int>(pts[0].size());
  require(cols == r + 1, "DimensionMismatch", "need r points with r+1 coordinates");
  IntVec coeff(static_cast<std::size_t>(cols));
  for (int skip = 0; skip < cols; ++skip) {
    IntMat minor(static_cast<std::size_t>(r), IntVec(static_cast<std::size_t>(r)));
    for (int i = 0; i < r; ++i) {
      int cc = 0;
      for (int j = 0; j < cols; ++j) {
        if (j == skip) continue;
        minor[static_cast<std::size_t>(i)][static_cast<std::size_t>(cc++)] =
            pts[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      }
    }
    BigInt d = determinant(minor);
    coeff[static_cast<std::size_t>(skip)] = (skip % 2 == 0) ? d : -d;
  }
  bool nonzero = false;
  for (const BigInt& x : coeff) nonzero |= (x != 0);
  require(nonzero, "DegeneratePlane", "spanning points do not span a hyperplane");
  reduce_primitive(coeff);
  return coeff;
}

inline BigInt dot(const IntVec& a, const IntVec& b) {
  require(a.size() == b.size(), "DimensionMismatch", "dot: length mismatch");
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace geomcfg
