#pragma once

// Hermite and Smith normal forms over Z, integer kernels.

#include "monlat/arith.hpp"

namespace monlat {

struct HermiteForm {
  IntMatrix h;  ///< column echelon form, h = m * u
  IntMatrix u;  ///< unimodular column transform
  std::size_t rank = 0;
};

struct SmithForm {
  IntMatrix d;  ///< diagonal, d = u * m * v, d_i | d_{i+1}, d_i >= 0
  IntMatrix u;  ///< unimodular row transform
  IntMatrix v;  ///< unimodular column transform
  std::vector<Int> diagonal() const {
    std::vector<Int> out;
    for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d(i, i));
    return out;
  }
};

namespace detail {

// Extended gcd: a*s + b*t = g, g >= 0. When a | b the trivial cofactors
// (s, t) = (sign a, 0) are used so the pivot column/row is kept in place.
inline void xgcd(const Int& a, const Int& b, Int& g, Int& s, Int& t) {
  if (a != 0 && mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
    g = abs(a);
    s = sgn(a);
    t = 0;
    return;
  }
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

// Replace columns (i, j) of m by (s*ci + t*cj, -b/g*ci + a/g*cj).
inline void combine_cols(IntMatrix& m, std::size_t i, std::size_t j, const Int& s, const Int& t, const Int& x,
                         const Int& y) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Int ci = m(r, i);
    Int cj = m(r, j);
    m(r, i) = s * ci + t * cj;
    m(r, j) = x * ci + y * cj;
  }
}

inline void combine_rows(IntMatrix& m, std::size_t i, std::size_t j, const Int& s, const Int& t, const Int& x,
                         const Int& y) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Int ri = m(i, c);
    Int rj = m(j, c);
    m(i, c) = s * ri + t * rj;
    m(j, c) = x * ri + y * rj;
  }
}

}  // namespace detail

/// Column-style Hermite normal form: h = m * u with u unimodular, h lower
/// echelon, positive pivots, entries left of each pivot reduced into [0, pivot).
inline HermiteForm hnf(const IntMatrix& m) {
  HermiteForm out{m, IntMatrix::identity(m.cols()), 0};
  IntMatrix& h = out.h;
  IntMatrix& u = out.u;
  std::size_t c = 0;
  for (std::size_t r = 0; r < h.rows() && c < h.cols(); ++r) {
    for (std::size_t j = c + 1; j < h.cols(); ++j) {
      if (h(r, j) == 0) continue;
      Int g, s, t;
      detail::xgcd(h(r, c), h(r, j), g, s, t);
      Int x = -h(r, j) / g;
      Int y = h(r, c) / g;
      detail::combine_cols(h, c, j, s, t, x, y);
      detail::combine_cols(u, c, j, s, t, x, y);
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      for (std::size_t i = 0; i < h.rows(); ++i) h(i, c) = -h(i, c);
      for (std::size_t i = 0; i < u.rows(); ++i) u(i, c) = -u(i, c);
    }
    for (std::size_t j = 0; j < c; ++j) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h(r, j).get_mpz_t(), h(r, c).get_mpz_t());
      if (q == 0) continue;
      for (std::size_t i = 0; i < h.rows(); ++i) h(i, j) -= q * h(i, c);
      for (std::size_t i = 0; i < u.rows(); ++i) u(i, j) -= q * u(i, c);
    }
    ++c;
  }
  out.rank = c;
  return out;
}

/// Smith normal form: u * m * v = d.
inline SmithForm snf(const IntMatrix& m) {
  SmithForm out{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  IntMatrix& d = out.d;
  const std::size_t n = std::min(d.rows(), d.cols());
  for (std::size_t k = 0; k < n; ++k) {
    // Bring a nonzero entry of smallest magnitude to (k, k).
    for (;;) {
      std::size_t pi = d.rows(), pj = d.cols();
      for (std::size_t i = k; i < d.rows(); ++i)
        for (std::size_t j = k; j < d.cols(); ++j)
          if (d(i, j) != 0 && (pi == d.rows() || abs(d(i, j)) < abs(d(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == d.rows()) return out;  // remaining block is zero
      d.swap_rows(k, pi);
      out.u.swap_rows(k, pi);
      d.swap_cols(k, pj);
      out.v.swap_cols(k, pj);

      bool clean = true;
      for (std::size_t i = k + 1; i < d.rows(); ++i) {
        if (d(i, k) == 0) continue;
        Int g, s, t;
        detail::xgcd(d(k, k), d(i, k), g, s, t);
        Int x = -d(i, k) / g;
        Int y = d(k, k) / g;
        detail::combine_rows(d, k, i, s, t, x, y);
        detail::combine_rows(out.u, k, i, s, t, x, y);
      }
      for (std::size_t j = k + 1; j < d.cols(); ++j) {
        if (d(k, j) == 0) continue;
        Int g, s, t;
        detail::xgcd(d(k, k), d(k, j), g, s, t);
        Int x = -d(k, j) / g;
        Int y = d(k, k) / g;
        detail::combine_cols(d, k, j, s, t, x, y);
        detail::combine_cols(out.v, k, j, s, t, x, y);
      }
      for (std::size_t i = k + 1; i < d.rows(); ++i)
        if (d(i, k) != 0) clean = false;
      if (!clean) continue;
      // Divisibility: fold any offending row into row k and repeat.
      std::size_t bad = d.rows();
      for (std::size_t i = k + 1; i < d.rows() && bad == d.rows(); ++i)
        for (std::size_t j = k + 1; j < d.cols(); ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(k, k).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == d.rows()) break;
      for (std::size_t j = 0; j < d.cols(); ++j) d(k, j) += d(bad, j);
      for (std::size_t j = 0; j < out.u.cols(); ++j) out.u(k, j) += out.u(bad, j);
    }
    if (d(k, k) < 0) {
      for (std::size_t j = 0; j < d.cols(); ++j) d(k, j) = -d(k, j);
      for (std::size_t j = 0; j < out.u.cols(); ++j) out.u(k, j) = -out.u(k, j);
    }
  }
  return out;
}

/// Basis (as columns) of the integer kernel {x in Z^n : m x = 0}. The kernel
/// of an integer matrix is always saturated in Z^n. Returned in column HNF.
inline IntMatrix integer_kernel(const IntMatrix& m) {
  HermiteForm hf = hnf(m);
  const std::size_t n = m.cols();
  IntMatrix k(n, n - hf.rank);
  for (std::size_t j = hf.rank; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) k(i, j - hf.rank) = hf.u(i, j);
  if (k.cols() == 0) return k;
  // Canonical basis of the same lattice.
  HermiteForm canon = hnf(k);
  IntMatrix out(n, canon.rank);
  for (std::size_t j = 0; j < canon.rank; ++j)
    for (std::size_t i = 0; i < n; ++i) out(i, j) = canon.h(i, j);
  return out;
}

/// Integer coordinates y with basis * y = x, if x lies in the Z-span of the
/// (linearly independent) columns of basis.
inline std::optional<IntVector> integer_coordinates(const IntMatrix& basis, const IntVector& x) {
  auto sol = solve(to_rational(basis), to_rational(x));
  if (!sol) return std::nullopt;
  return to_integer(*sol);
}

}  // namespace monlat
