#pragma once

// Certified lattice isometries and the constructions built on them:
// reflections, Eichler transvections, orientation characters, membership in
// W(L), restriction to v^perp and extension back to the ambient lattice.

#include "monlat/discriminant.hpp"
#include "monlat/lattice.hpp"

namespace monlat {

/// An integer matrix g (columns = images of basis vectors) with g^T G g = G.
class Isometry {
 public:
  const LatticePtr& lattice() const { return lattice_; }
  const IntMatrix& matrix() const { return matrix_; }
  std::size_t rank() const { return matrix_.rows(); }

  LatticeVector operator()(const LatticeVector& x) const {
    lattice_->check_vector(x);
    return matrix_ * x;
  }

  Int det() const { return determinant(matrix_); }
  bool is_identity() const { return matrix_ == IntMatrix::identity(rank()); }

  friend bool operator==(const Isometry& a, const Isometry& b) {
    return a.matrix_ == b.matrix_ && *a.lattice_ == *b.lattice_;
  }

  friend Isometry check_isometry(LatticePtr l, IntMatrix m);
  friend Isometry compose(const Isometry& g, const Isometry& h);
  friend Isometry inverse(const Isometry& g);

 private:
  Isometry(LatticePtr l, IntMatrix m) : lattice_(std::move(l)), matrix_(std::move(m)) {}
  LatticePtr lattice_;
  IntMatrix matrix_;
};

/// Certifies M^T G M = G and |det M| = 1.
inline Isometry check_isometry(LatticePtr l, IntMatrix m) {
  if (!l) throw InputError("null lattice");
  if (m.rows() != l->rank() || m.cols() != l->rank())
    throw InputError("matrix size does not match lattice rank " + std::to_string(l->rank()));
  if (m.transpose() * l->gram() * m != l->gram()) throw CertificateError("matrix does not preserve the Gram matrix");
  const Int d = determinant(m);
  if (d != 1 && d != -1) throw CertificateError("matrix is not unimodular (det " + d.get_str() + ")");
  return Isometry(std::move(l), std::move(m));
}

inline Isometry check_isometry(const IntegralLattice& l, IntMatrix m) { return check_isometry(share(l), std::move(m)); }

inline Isometry identity_isometry(LatticePtr l) {
  const std::size_t n = l->rank();
  return check_isometry(std::move(l), IntMatrix::identity(n));
}

/// g after h.
inline Isometry compose(const Isometry& g, const Isometry& h) {
  if (!(*g.lattice_ == *h.lattice_)) throw InputError("compose: isometries live on different lattices");
  return Isometry(g.lattice_, g.matrix_ * h.matrix_);
}

/// g^{-1} = G^{-1} g^T G, exact.
inline Isometry inverse(const Isometry& g) {
  const IntMatrix& gram = g.lattice_->gram();
  auto m = to_integer(g.lattice_->gram_inverse() * to_rational(g.matrix_.transpose() * gram));
  if (!m) throw CertificateError("inverse of a certified isometry is not integral");
  return Isometry(g.lattice_, std::move(*m));
}

inline Isometry power(const Isometry& g, long e) {
  Isometry base = e < 0 ? inverse(g) : g;
  Isometry out = identity_isometry(g.lattice());
  for (long i = 0; i < (e < 0 ? -e : e); ++i) out = compose(out, base);
  return out;
}

// --- constructors ----------------------------------------------------------

/// R_u(x) = x - (2 (x,u) / u^2) u.
inline Isometry reflection(LatticePtr l, const LatticeVector& u) {
  const Int uu = l->square(u);
  if (uu == 0) throw InputError("reflection in an isotropic vector");
  const IntVector row = l->pairing_row(u);
  const std::size_t n = l->rank();
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t j = 0; j < n; ++j) {
    Int num = 2 * row[j];
    if (!mpz_divisible_p(num.get_mpz_t(), uu.get_mpz_t()))
      throw InputError("reflection is not integral: u^2 does not divide 2(u,x)");
    Int c = num / uu;
    for (std::size_t i = 0; i < n; ++i) m(i, j) -= c * u[i];
  }
  return check_isometry(std::move(l), std::move(m));
}

/// Eichler transvection t(z,a)(x) = x - (a,x) z + (z,x) a - 1/2 (a,a)(z,x) z.
inline Isometry transvection(LatticePtr l, const LatticeVector& z, const LatticeVector& a) {
  if (!l->is_even()) throw InputError("transvections require an even lattice");
  if (l->square(z) != 0) throw InputError("transvection: z is not isotropic");
  if (l->pair(z, a) != 0) throw InputError("transvection: a is not orthogonal to z");
  const IntVector ra = l->pairing_row(a);
  const IntVector rz = l->pairing_row(z);
  const Int half = l->square(a) / 2;
  const std::size_t n = l->rank();
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, j) += -ra[j] * z[i] + rz[j] * a[i] - half * rz[j] * z[i];
  return check_isometry(std::move(l), std::move(m));
}

// --- orientation -------------------------------------------------------------

/// Ordered basis (as columns) of a maximal positive definite subspace.
class OrientationFrame {
 public:
  OrientationFrame(const IntegralLattice& l, IntMatrix columns) : columns_(std::move(columns)) {
    if (columns_.rows() != l.rank()) throw InputError("frame vectors have wrong length");
    const std::size_t p = l.signature().positive;
    if (columns_.cols() != p)
      throw InputError("frame must have " + std::to_string(p) + " vectors (positive inertia index)");
    const IntMatrix fgf = columns_.transpose() * l.gram() * columns_;
    for (const auto& d : diagonalize(fgf).diagonal)
      if (d <= 0) throw InputError("frame does not span a positive definite subspace");
  }
  const IntMatrix& columns() const { return columns_; }

 private:
  IntMatrix columns_;
};

/// Positive frame read off a rational congruence diagonalisation.
inline OrientationFrame default_frame(const IntegralLattice& l) {
  const CongruenceDiagonal cd = diagonalize(l.gram());
  std::vector<IntVector> cols;
  for (std::size_t j = 0; j < l.rank(); ++j) {
    if (cd.diagonal[j] <= 0) continue;
    Int den = 1;
    for (std::size_t i = 0; i < l.rank(); ++i) den = lcm(den, Int(cd.basis(i, j).get_den()));
    IntVector c(l.rank());
    for (std::size_t i = 0; i < l.rank(); ++i) c[i] = Rat(cd.basis(i, j) * den).get_num();
    cols.push_back(std::move(c));
  }
  return OrientationFrame(l, IntMatrix::from_columns(cols, l.rank()));
}

/// 0 if g preserves the orientation of the positive cone, 1 if it reverses it.
/// The projection of g(F) onto span(F) in frame coordinates is
/// X = (F^T G F)^{-1} F^T G g F; the positive-definite factor does not affect
/// the sign, so only det(F^T G g F) is evaluated.
inline int orientation_character(const Isometry& g, const OrientationFrame& frame) {
  const IntMatrix& f = frame.columns();
  if (f.rows() != g.rank()) throw InputError("frame and isometry live on different lattices");
  const Int d = determinant(f.transpose() * g.lattice()->gram() * g.matrix() * f);
  if (d == 0) throw CertificateError("degenerate orientation projection");
  return d > 0 ? 0 : 1;
}

inline DiscriminantAction induced_disc_action(const Isometry& g) {
  return induced_disc_action(*g.lattice(), g.matrix());
}

inline bool in_w(const Isometry& g, const DiscriminantGroup& a, const OrientationFrame& frame) {
  if (orientation_character(g, frame) != 0) return false;
  return induced_disc_action(*g.lattice(), a, g.matrix()).sign_class != SignClass::other;
}

/// Orientation preserving and acting as +-id on the discriminant group.
inline bool in_w(const Isometry& g, const OrientationFrame& frame) {
  return in_w(g, DiscriminantGroup(*g.lattice()), frame);
}

// --- v^perp --------------------------------------------------------------------

/// v^perp inside an ambient lattice: saturated basis plus the induced lattice.
struct PerpLattice {
  LatticeVector v;
  SublatticeBasis basis;
  LatticePtr lattice;
};

inline PerpLattice make_perp(const IntegralLattice& ambient, const LatticeVector& v, std::string name = {}) {
  PerpLattice p{v, perp_basis(ambient, v), nullptr};
  p.lattice = share(p.basis.lattice(name.empty() ? ambient.name() + "_perp" : std::move(name)));
  return p;
}

/// Coordinates in the perp basis of ambient vectors (columns); used to carry a
/// positive frame of the ambient lattice into v^perp.
inline IntMatrix to_perp_coordinates(const PerpLattice& p, const IntMatrix& ambient_columns) {
  IntMatrix out(p.basis.rank(), ambient_columns.cols());
  for (std::size_t j = 0; j < ambient_columns.cols(); ++j) {
    auto y = p.basis.coordinates(ambient_columns.column(j));
    if (!y) throw InputError("vector does not lie in v^perp");
    out.set_column(j, *y);
  }
  return out;
}

struct Restriction {
  Isometry isometry;  ///< on the perp lattice, in perp-basis coordinates
  int sign;           ///< g(v) = sign * v
};

/// g|_{v^perp} for an ambient isometry with g(v) = +-v.
inline Restriction restrict_to_perp(const Isometry& g, const PerpLattice& p) {
  const LatticeVector gv = g(p.v);
  int sign;
  if (gv == p.v) sign = 1;
  else if (gv == -p.v) sign = -1;
  else throw InputError("isometry does not preserve the line spanned by v");
  const IntMatrix image = g.matrix() * p.basis.columns;
  return {check_isometry(p.lattice, to_perp_coordinates(p, image)), sign};
}

struct Extension {
  Isometry isometry;  ///< on the ambient lattice
  int epsilon;        ///< isometry(v) = epsilon * v
};

/// Extends g in W(v^perp) to the ambient lattice as g (+) epsilon*id on Q v,
/// epsilon = the scalar by which g acts on the discriminant group. Throws
/// InputError if g acts on A_{v^perp} by something other than +-id.
inline Extension extend_from_perp(const IntegralLattice& ambient, const PerpLattice& p, const Isometry& g) {
  if (!(*g.lattice() == *p.lattice)) throw InputError("isometry is not defined on this v^perp");
  const SignClass sc = induced_disc_action(g).sign_class;
  if (sc == SignClass::other)
    throw InputError("extension impossible: isometry does not act as +-id on the discriminant group (not in W)");
  const int eps = sign_of(sc);
  const std::size_t n = ambient.rank();
  const std::size_t r = p.basis.rank();
  // Basis [perp columns | w] of a finite-index sublattice, w = v / content(v).
  const Int c = content(p.v);
  RatMatrix b(n, n), img(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < r; ++j) b(i, j) = p.basis.columns(i, j);
    b(i, r) = Int(p.v[i] / c);
  }
  const IntMatrix gcols = p.basis.columns * g.matrix();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < r; ++j) img(i, j) = gcols(i, j);
    img(i, r) = eps * b(i, r);
  }
  auto binv = inverse(b);
  if (!binv) throw CertificateError("v^perp and v do not span the ambient lattice rationally");
  auto m = to_integer(img * *binv);
  if (!m) throw CertificateError("extension is not integral");
  return {check_isometry(share(ambient), std::move(*m)), eps};
}

}  // namespace monlat
