#pragma once

// The rank-24 Mukai lattice in fixed coordinates, Mukai vectors, and the
// cohomological actions of the four Fourier-Mukai type equivalences.
//
// Lattice coordinates: (b0, b1, e1, f1, e2, f2, e3, f3, E8(-1), E8(-1)) with
// b0 = (1,0,0), b1 = (0,0,-1). A Mukai vector (r, xi, a) has coordinates
// (r, -a, xi).

#include <array>
#include <functional>

#include "monlat/isometry.hpp"

namespace monlat {

inline constexpr std::size_t kH2Rank = 22;
inline constexpr std::size_t kMukaiRank = 24;

/// Index of e_i / f_i (i = 1, 2, 3) inside the 22 H^2 coordinates.
inline constexpr std::size_t h2_e(int i) { return 2 * static_cast<std::size_t>(i - 1); }
inline constexpr std::size_t h2_f(int i) { return 2 * static_cast<std::size_t>(i - 1) + 1; }
/// First coordinate of the j-th E8(-1) summand (j = 0, 1).
inline constexpr std::size_t h2_e8(int j) { return 6 + 8 * static_cast<std::size_t>(j); }

inline const LatticePtr& mukai_lattice_ptr() {
  static const LatticePtr l = share(mukai_lattice());
  return l;
}

/// U^3 + E8(-1)^2, the lattice H^2(S, Z) of a K3 surface.
inline const LatticePtr& h2_lattice_ptr() {
  static const LatticePtr l = [] {
    const auto u = hyperbolic_plane();
    const auto e8 = e8_minus();
    return share(direct_sum({u, u, u, e8, e8}, "H2"));
  }();
  return l;
}

inline IntVector h2_zero() { return IntVector(kH2Rank); }
inline IntVector h2_basis(std::size_t i) {
  IntVector x(kH2Rank);
  x.at(i) = 1;
  return x;
}

inline Int h2_pair(const IntVector& x, const IntVector& y) { return h2_lattice_ptr()->pair(x, y); }

struct MukaiVector {
  Int r;
  IntVector xi = IntVector(kH2Rank);
  Int a;

  MukaiVector() = default;
  MukaiVector(Int r_, IntVector xi_, Int a_) : r(std::move(r_)), xi(std::move(xi_)), a(std::move(a_)) {
    if (xi.size() != kH2Rank) throw InputError("Mukai vector H^2 part must have 22 coordinates");
  }
  MukaiVector(long r_, long a_) : r(r_), a(a_) {}

  LatticeVector coords() const {
    LatticeVector x(kMukaiRank);
    x[0] = r;
    x[1] = -a;
    for (std::size_t i = 0; i < kH2Rank; ++i) x[2 + i] = xi[i];
    return x;
  }

  static MukaiVector from_coords(const LatticeVector& x) {
    if (x.size() != kMukaiRank) throw InputError("Mukai lattice vectors have 24 coordinates");
    return MukaiVector(x[0], IntVector(x.begin() + 2, x.end()), -x[1]);
  }

  friend bool operator==(const MukaiVector&, const MukaiVector&) = default;
  friend MukaiVector operator-(const MukaiVector& v) { return MukaiVector(-v.r, -v.xi, -v.a); }
  friend MukaiVector operator*(const Int& s, const MukaiVector& v) { return MukaiVector(s * v.r, s * v.xi, s * v.a); }

  std::string to_string() const {
    std::ostringstream os;
    os << '(' << r << ",[";
    for (std::size_t i = 0; i < kH2Rank; ++i) os << (i ? "," : "") << xi[i];
    os << "]," << a << ')';
    return os.str();
  }
};

inline Int mukai_pair(const MukaiVector& v, const MukaiVector& w) {
  return mukai_lattice_ptr()->pair(v.coords(), w.coords());
}
inline Int mukai_square(const MukaiVector& v) { return mukai_pair(v, v); }

struct MKTriple {
  Int m;
  MukaiVector w;
  Int k;
};

/// v = m w with w primitive and w^2 = 2k > 0.
inline MKTriple mk_decompose(const MukaiVector& v) {
  const LatticeVector x = v.coords();
  if (is_zero(x)) throw InputError("zero Mukai vector");
  const Int m = content(x);
  MukaiVector w = MukaiVector::from_coords([&] {
    LatticeVector y = x;
    for (auto& c : y) c /= m;
    return y;
  }());
  const Int w2 = mukai_square(w);
  if (w2 <= 0) throw InputError("v^2 must be positive (got w^2 = " + w2.get_str() + ")");
  return {m, std::move(w), w2 / 2};
}

/// Matrix of a linear map on Mukai vectors, columns = images of basis vectors.
inline IntMatrix mukai_matrix(const std::function<MukaiVector(const MukaiVector&)>& f) {
  IntMatrix m(kMukaiRank, kMukaiRank);
  for (std::size_t j = 0; j < kMukaiRank; ++j) {
    LatticeVector e(kMukaiRank);
    e[j] = 1;
    m.set_column(j, f(MukaiVector::from_coords(e)).coords());
  }
  return m;
}

inline MukaiVector apply(const Isometry& g, const MukaiVector& v) { return MukaiVector::from_coords(g(v.coords())); }

// --- FM_Delta, duality, FM_Delta^vee -----------------------------------------

/// (r, xi, a) -> (a, -xi, r).
inline MukaiVector fm_delta(const MukaiVector& v) { return MukaiVector(v.a, -v.xi, v.r); }
/// (r, xi, a) -> (a, xi, r).
inline MukaiVector fm_dual(const MukaiVector& v) { return MukaiVector(v.a, v.xi, v.r); }
/// Derived duality: (r, c, s) -> (r, -c, s).
inline MukaiVector duality(const MukaiVector& v) { return MukaiVector(v.r, -v.xi, v.a); }

inline Isometry fm_delta_isometry() {
  static const Isometry g = check_isometry(mukai_lattice_ptr(), mukai_matrix(fm_delta));
  return g;
}
inline Isometry fm_dual_isometry() {
  static const Isometry g = check_isometry(mukai_lattice_ptr(), mukai_matrix(fm_dual));
  return g;
}
inline Isometry duality_isometry() {
  static const Isometry g = check_isometry(mukai_lattice_ptr(), mukai_matrix(duality));
  return g;
}

// --- tensor by a line bundle -------------------------------------------------

/// v * ch(L) for c = c1(L): (r, xi, a) -> (r, xi + r c, a + (xi, c) + r c^2 / 2).
inline MukaiVector tensor(const MukaiVector& v, const IntVector& c) {
  if (c.size() != kH2Rank) throw InputError("line bundle class must have 22 coordinates");
  const Int half = h2_pair(c, c) / 2;
  return MukaiVector(v.r, v.xi + v.r * c, v.a + h2_pair(v.xi, c) + v.r * half);
}

inline Isometry tensor_isometry(const IntVector& c) {
  return check_isometry(mukai_lattice_ptr(), mukai_matrix([&](const MukaiVector& v) { return tensor(v, c); }));
}

// --- elliptic Poincare transform ---------------------------------------------

/// The action Theta on span{u0 = (1,0,0), l = e1 - f1, f = f1, u4 = (0,0,1)},
/// columns are the images of (u0, l, f, u4) in the same basis:
///   u0 -> l + f + u4,  l -> -u0 - f - u4,  f -> u4,  u4 -> -f.
/// FM_P acts as -id on {l, f}^perp in H^2.
inline const std::array<std::array<int, 4>, 4>& poincare_theta() {
  static const std::array<std::array<int, 4>, 4> theta = {{
      // rows: u0, l, f, u4 coefficient; columns: images of u0, l, f, u4
      {{0, -1, 0, 0}},
      {{1, 0, 0, 0}},
      {{1, -1, 0, -1}},
      {{1, -1, 1, 0}},
  }};
  return theta;
}

inline MukaiVector fm_poincare(const MukaiVector& v) {
  const auto& th = poincare_theta();
  // (r, x1 e1 + y1 f1 + rest, a) = r u0 + x1 l + (x1 + y1) f + a u4 + rest
  const Int x1 = v.xi[h2_e(1)];
  const Int y1 = v.xi[h2_f(1)];
  const std::array<Int, 4> in = {v.r, x1, x1 + y1, v.a};
  std::array<Int, 4> out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[i] += th[i][j] * in[j];
  IntVector xi = -v.xi;
  // back to (e1, f1): c_l l + c_f f = c_l e1 + (c_f - c_l) f1
  xi[h2_e(1)] = out[1];
  xi[h2_f(1)] = out[2] - out[1];
  return MukaiVector(out[0], std::move(xi), out[3]);
}

inline Isometry fm_poincare_isometry() {
  static const Isometry g = check_isometry(mukai_lattice_ptr(), mukai_matrix(fm_poincare));
  return g;
}

// --- polarisations -----------------------------------------------------------

/// h = alpha e + beta f on the elliptic surface is ample iff alpha > 0 and beta/alpha > 1.
inline bool ample_elliptic(const Int& alpha, const Int& beta) {
  if (alpha == 0 && beta == 0) throw InputError("zero class");
  return alpha > 0 && beta > alpha;
}

/// Positive frame (e1 + 2 f1, e2 + f2, e3 + f3, b0 + b1): a Kahler-type class,
/// real and imaginary parts of a symplectic form, and (1, 0, -1).
inline OrientationFrame mukai_frame() {
  IntMatrix f(kMukaiRank, 4);
  f(2 + h2_e(1), 0) = 1;
  f(2 + h2_f(1), 0) = 2;
  f(2 + h2_e(2), 1) = 1;
  f(2 + h2_f(2), 1) = 1;
  f(2 + h2_e(3), 2) = 1;
  f(2 + h2_f(3), 2) = 1;
  f(0, 3) = 1;
  f(1, 3) = 1;
  return OrientationFrame(*mukai_lattice_ptr(), std::move(f));
}

struct StandardVectors {
  MukaiVector v;               ///< (m, 0, -mk)
  MukaiVector w;               ///< (1, 0, -k)
  IntVector beta;              ///< e2 + (k-1) f2, beta^2 = 2k - 2, orthogonal to l and f
  MukaiVector u;               ///< (1, beta - f, k), u^2 = -2, u in v^perp
  IntVector ell;               ///< e1 - f1
  IntVector f;                 ///< f1
  IntVector e;                 ///< l + f = e1
  std::array<IntVector, 4> h;  ///< e + r f, e + (r-1) f, s e + p f, (s-1) e + p f
};

inline StandardVectors standard_vectors(const Int& m, const Int& k, const Int& r = 5, const Int& s = 2,
                                        const Int& p = 5) {
  if (m < 1 || k < 1) throw InputError("standard vectors need m, k >= 1");
  StandardVectors sv;
  sv.v = MukaiVector(m, h2_zero(), -m * k);
  sv.w = MukaiVector(1, h2_zero(), -k);
  sv.f = h2_basis(h2_f(1));
  sv.e = h2_basis(h2_e(1));
  sv.ell = sv.e - sv.f;
  sv.beta = h2_basis(h2_e(2));
  sv.beta[h2_f(2)] = k - 1;
  sv.u = MukaiVector(1, sv.beta - sv.f, k);
  auto comb = [&](const Int& a, const Int& b) { return a * sv.e + b * sv.f; };
  sv.h = {comb(1, r), comb(1, r - 1), comb(s, p), comb(s - 1, p)};
  return sv;
}

}  // namespace monlat
