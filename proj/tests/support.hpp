#pragma once

#include <random>

#include "monlat/monlat.hpp"
#include "monlat/sampling.hpp"

namespace testing_support {

using namespace monlat;
using Rng = std::mt19937_64;

inline long rnd(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline IntMatrix random_matrix(Rng& rng, std::size_t r, std::size_t c, long lo, long hi) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rnd(rng, lo, hi);
  return m;
}

/// Laplace expansion along the first row; independent of the library's Bareiss code.
inline long long cofactor_det(const std::vector<std::vector<long long>>& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  long long s = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j] == 0) continue;
    std::vector<std::vector<long long>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<long long> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(a[i][c]);
      minor.push_back(row);
    }
    s += (j % 2 ? -1 : 1) * a[0][j] * cofactor_det(minor);
  }
  return s;
}

/// Number of distinct prime divisors by trial division.
inline unsigned rho(unsigned k) {
  unsigned n = 0;
  for (unsigned p = 2; p <= k; ++p) {
    bool prime = true;
    for (unsigned q = 2; q * q <= p; ++q)
      if (p % q == 0) prime = false;
    if (prime && k % p == 0) ++n;
  }
  return n;
}

inline bool is_diagonal(const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && m(i, j) != 0) return false;
  return true;
}

inline const LatticePtr& u2() {
  static const LatticePtr l = [] {
    const auto u = hyperbolic_plane();
    return share(direct_sum({u, u}, "U+U"));
  }();
  return l;
}

inline const LatticePtr& u3() {
  static const LatticePtr l = [] {
    const auto u = hyperbolic_plane();
    return share(direct_sum({u, u, u}, "U+U+U"));
  }();
  return l;
}

inline IntVector unit(std::size_t n, std::size_t i) {
  IntVector v(n);
  v[i] = 1;
  return v;
}

inline MukaiVector mv(long r, std::initializer_list<std::pair<std::size_t, long>> xi, long a) {
  IntVector x = h2_zero();
  for (auto [i, c] : xi) x[i] = c;
  return MukaiVector(Int(r), x, Int(a));
}

}  // namespace testing_support
