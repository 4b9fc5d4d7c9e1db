#pragma once

// Discriminant group A_L = L*/L with its Q/2Z-valued quadratic form, and the
// action of isometries on it.

#include <cstdint>
#include <numeric>

#include "monlat/lattice.hpp"

namespace monlat {

/// Reduce a rational into [0, modulus).
inline Rat reduce_mod(const Rat& q, const Int& modulus) {
  Rat r = q;
  r.canonicalize();
  Int fl;
  // floor(q / modulus)
  mpz_fdiv_q(fl.get_mpz_t(), r.get_num_mpz_t(), Int(r.get_den() * modulus).get_mpz_t());
  r -= Rat(fl * modulus);
  r.canonicalize();
  return r;
}

class DiscriminantGroup {
 public:
  explicit DiscriminantGroup(const IntegralLattice& l) : gram_(l.gram()) {
    SmithForm s = snf(l.gram());
    const std::size_t n = l.rank();
    for (std::size_t j = 0; j < n; ++j) {
      const Int& d = s.d(j, j);
      if (d == 0) throw InputError("degenerate lattice has infinite discriminant group");
      if (d == 1) continue;
      factors_.push_back(d);
      RatVector lift(n);
      for (std::size_t i = 0; i < n; ++i) lift[i] = Rat(s.v(i, j), d);
      for (auto& x : lift) x.canonicalize();
      lifts_.push_back(std::move(lift));
      // coordinate j of x in L* is (U G x)_j mod d_j
      coord_rows_.push_back(s.u.row(j));
    }
    for (const auto& g : lifts_) q_values_.push_back(quadratic(g));
  }

  const std::vector<Int>& invariant_factors() const { return factors_; }
  const std::vector<RatVector>& generator_lifts() const { return lifts_; }
  /// q(generator) reduced into [0, 2).
  const std::vector<Rat>& q_values() const { return q_values_; }

  Int order() const {
    Int o = 1;
    for (const auto& d : factors_) o *= d;
    return o;
  }
  bool trivial() const { return factors_.empty(); }
  bool two_elementary() const {
    return std::all_of(factors_.begin(), factors_.end(), [](const Int& d) { return d == 2; });
  }

  /// x^T G x reduced mod 2 for x in L (x) Q.
  Rat quadratic(const RatVector& x) const { return reduce_mod(rational_pair(x, x), 2); }
  /// x^T G y reduced mod 1.
  Rat bilinear(const RatVector& x, const RatVector& y) const { return reduce_mod(rational_pair(x, y), 1); }

  /// Coordinates (c_j mod d_j) of a dual vector; throws if x is not in L*.
  IntVector coordinates(const RatVector& x) const {
    const std::size_t n = gram_.rows();
    if (x.size() != n) throw InputError("dual vector has wrong length");
    RatVector gx(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) gx[i] += gram_(i, j) * x[j];
    auto y = to_integer(gx);
    if (!y) throw InputError("vector is not in the dual lattice");
    IntVector c(factors_.size());
    for (std::size_t j = 0; j < factors_.size(); ++j) {
      Int s = 0;
      for (std::size_t k = 0; k < n; ++k) s += coord_rows_[j][k] * (*y)[k];
      mpz_fdiv_r(c[j].get_mpz_t(), s.get_mpz_t(), factors_[j].get_mpz_t());
    }
    return c;
  }

 private:
  Rat rational_pair(const RatVector& x, const RatVector& y) const {
    Rat s = 0;
    const std::size_t n = gram_.rows();
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) s += x[i] * gram_(i, j) * y[j];
    }
    return s;
  }

  IntMatrix gram_;
  std::vector<Int> factors_;
  std::vector<RatVector> lifts_;
  std::vector<Rat> q_values_;
  std::vector<IntVector> coord_rows_;
};

inline DiscriminantGroup discriminant_group(const IntegralLattice& l) { return DiscriminantGroup(l); }

enum class SignClass { plus_id, minus_id, other };

inline const char* to_string(SignClass s) {
  switch (s) {
    case SignClass::plus_id: return "plus_id";
    case SignClass::minus_id: return "minus_id";
    case SignClass::other: return "other";
  }
  return "other";
}

/// +1 / -1 for the two scalar classes, 0 for other.
inline int sign_of(SignClass s) { return s == SignClass::plus_id ? 1 : s == SignClass::minus_id ? -1 : 0; }

struct DiscriminantAction {
  IntMatrix matrix;  ///< column j = coordinates of the image of generator j
  SignClass sign_class = SignClass::other;
};

/// Action of the lattice automorphism `m` (columns = images of basis vectors)
/// on A_L. When A_L is 2-elementary, +id and -id coincide there; the class is
/// then reported as plus_id or minus_id according to det(m).
inline DiscriminantAction induced_disc_action(const IntegralLattice& l, const DiscriminantGroup& a,
                                              const IntMatrix& m) {
  const std::size_t n = l.rank();
  if (m.rows() != n || m.cols() != n) throw InputError("isometry matrix has wrong size");
  if (m.transpose() * l.gram() * m != l.gram()) throw CertificateError("matrix does not preserve the Gram matrix");
  const std::size_t r = a.invariant_factors().size();
  DiscriminantAction out{IntMatrix(r, r), SignClass::other};
  const RatMatrix mq = to_rational(m);
  bool plus = true, minus = true;
  for (std::size_t j = 0; j < r; ++j) {
    const IntVector c = a.coordinates(mq * a.generator_lifts()[j]);
    out.matrix.set_column(j, c);
    for (std::size_t i = 0; i < r; ++i) {
      const Int& d = a.invariant_factors()[i];
      Int want_plus = i == j ? 1 : 0;
      Int want_minus;
      mpz_fdiv_r(want_minus.get_mpz_t(), Int(-want_plus).get_mpz_t(), d.get_mpz_t());
      if (c[i] != want_plus) plus = false;
      if (c[i] != want_minus) minus = false;
    }
  }
  if (plus && minus) out.sign_class = determinant(m) > 0 ? SignClass::plus_id : SignClass::minus_id;
  else if (plus) out.sign_class = SignClass::plus_id;
  else if (minus) out.sign_class = SignClass::minus_id;
  return out;
}

inline DiscriminantAction induced_disc_action(const IntegralLattice& l, const IntMatrix& m) {
  return induced_disc_action(l, DiscriminantGroup(l), m);
}

/// |{u in (Z/2k)^* : u^2 = 1 mod 4k}|, the order of O(q) for the cyclic
/// discriminant form q(x) = -x^2/2k mod 2Z.
inline std::uint64_t oq_unit_count(std::uint64_t k) {
  if (k == 0) throw InputError("oq_unit_count requires k >= 1");
  const std::uint64_t n = 2 * k, m = 4 * k;
  std::uint64_t count = 0;
  for (std::uint64_t u = 1; u < n; ++u) {
    if (std::gcd(u, n) != 1) continue;
    if ((u * u) % m == 1 % m) ++count;
  }
  return count;
}

}  // namespace monlat
