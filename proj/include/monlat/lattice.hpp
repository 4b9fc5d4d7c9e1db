#pragma once

// Integral lattices: even symmetric Gram matrices, standard constructors,
// pairings, signatures and saturated orthogonal complements.

#include <memory>
#include <string>

#include "monlat/arith.hpp"
#include "monlat/normal_form.hpp"

namespace monlat {

using LatticeVector = IntVector;

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Congruence diagonalisation over Q: basis^T * gram * basis = diag(diagonal).
struct CongruenceDiagonal {
  RatMatrix basis;
  RatVector diagonal;
};

inline CongruenceDiagonal diagonalize(const IntMatrix& gram) {
  const std::size_t n = gram.rows();
  RatMatrix a = to_rational(gram);
  RatMatrix p = RatMatrix::identity(n);
  // Apply the congruence a <- E^T a E with E adding column j into column i.
  auto add_into = [&](std::size_t i, std::size_t j, const Rat& f) {
    for (std::size_t r = 0; r < n; ++r) a(r, i) += f * a(r, j);
    for (std::size_t c = 0; c < n; ++c) a(i, c) += f * a(j, c);
    for (std::size_t r = 0; r < n; ++r) p(r, i) += f * p(r, j);
  };
  auto swap = [&](std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    a.swap_cols(i, j);
    p.swap_cols(i, j);
  };
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t j = k + 1;
      while (j < n && a(j, j) == 0) ++j;
      if (j < n) {
        swap(k, j);
      } else {
        j = k + 1;
        while (j < n && a(k, j) == 0) ++j;
        if (j == n) continue;  // radical direction
        add_into(k, j, 1);     // a(k,k) becomes 2 a(k,j) != 0
      }
    }
    for (std::size_t j = k + 1; j < n; ++j) {
      if (a(k, j) == 0) continue;
      Rat f = -a(k, j) / a(k, k);
      add_into(j, k, f);
    }
  }
  RatVector diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = a(i, i);
  return {std::move(p), std::move(diag)};
}

class IntegralLattice {
 public:
  IntegralLattice(IntMatrix gram, std::string name = {}) : gram_(std::move(gram)), name_(std::move(name)) {
    if (!gram_.is_square()) throw InputError("Gram matrix must be square");
    if (gram_.transpose() != gram_) throw InputError("Gram matrix must be symmetric");
    det_ = determinant(gram_);
    if (det_ == 0) throw InputError("degenerate Gram matrix (determinant 0)");
    gram_inverse_ = *monlat::inverse(to_rational(gram_));
  }

  std::size_t rank() const { return gram_.rows(); }
  const IntMatrix& gram() const { return gram_; }
  const std::string& name() const { return name_; }
  const Int& det() const { return det_; }
  const RatMatrix& gram_inverse() const { return gram_inverse_; }

  bool is_even() const {
    for (std::size_t i = 0; i < rank(); ++i)
      if (!mpz_even_p(gram_(i, i).get_mpz_t())) return false;
    return true;
  }

  void check_vector(const LatticeVector& x) const {
    if (x.size() != rank())
      throw InputError("vector of length " + std::to_string(x.size()) + " for lattice of rank " +
                       std::to_string(rank()));
  }

  Int pair(const LatticeVector& x, const LatticeVector& y) const {
    check_vector(x);
    check_vector(y);
    Int s = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < rank(); ++j) s += x[i] * gram_(i, j) * y[j];
    }
    return s;
  }
  Int square(const LatticeVector& x) const { return pair(x, x); }

  /// The linear form x -> pair(v, x) as a row of integers.
  IntVector pairing_row(const LatticeVector& v) const {
    check_vector(v);
    return gram_ * v;
  }

  Signature signature() const {
    Signature s;
    for (const auto& d : diagonalize(gram_).diagonal) {
      if (d > 0) ++s.positive;
      else if (d < 0) ++s.negative;
    }
    return s;
  }

  friend bool operator==(const IntegralLattice& a, const IntegralLattice& b) { return a.gram_ == b.gram_; }

 private:
  IntMatrix gram_;
  std::string name_;
  Int det_;
  RatMatrix gram_inverse_;
};

using LatticePtr = std::shared_ptr<const IntegralLattice>;

inline LatticePtr share(IntegralLattice l) { return std::make_shared<const IntegralLattice>(std::move(l)); }

// --- standard lattices -----------------------------------------------------

inline IntegralLattice hyperbolic_plane() { return IntegralLattice(IntMatrix{{0, 1}, {1, 0}}, "U"); }

/// Negated E8 Cartan matrix, Bourbaki node order (node 2 attached to node 4).
inline IntegralLattice e8_minus() {
  IntMatrix g(8, 8);
  for (std::size_t i = 0; i < 8; ++i) g(i, i) = -2;
  const std::pair<int, int> edges[] = {{1, 3}, {3, 4}, {2, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}};
  for (auto [a, b] : edges) {
    g(a - 1, b - 1) = 1;
    g(b - 1, a - 1) = 1;
  }
  return IntegralLattice(std::move(g), "E8m");
}

inline IntegralLattice rank_one(const Int& n) {
  if (n == 0) throw InputError("rank-one lattice <0> is degenerate");
  IntMatrix g(1, 1);
  g(0, 0) = n;
  return IntegralLattice(std::move(g), "<" + n.get_str() + ">");
}

inline IntegralLattice direct_sum(const std::vector<IntegralLattice>& parts, std::string name = {}) {
  std::size_t n = 0;
  for (const auto& p : parts) n += p.rank();
  IntMatrix g(n, n);
  std::size_t off = 0;
  std::string auto_name;
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < p.rank(); ++i)
      for (std::size_t j = 0; j < p.rank(); ++j) g(off + i, off + j) = p.gram()(i, j);
    off += p.rank();
    auto_name += (auto_name.empty() ? "" : "+") + p.name();
  }
  return IntegralLattice(std::move(g), name.empty() ? auto_name : std::move(name));
}

inline IntegralLattice rescale(const IntegralLattice& l, const Int& t) {
  if (t == 0) throw InputError("rescaling by 0 gives a degenerate form");
  return IntegralLattice(t * l.gram(), l.name() + "(" + t.get_str() + ")");
}

/// U^3 + E8(-1)^2 + <-2k>, the lattice H^2 of the moduli spaces in question.
inline IntegralLattice lattice_lk(const Int& k) {
  if (k <= 0) throw InputError("Lk requires k >= 1");
  const auto u = hyperbolic_plane();
  const auto e8 = e8_minus();
  return direct_sum({u, u, u, e8, e8, rank_one(-2 * k)}, "Lk:" + k.get_str());
}

/// U^4 + E8(-1)^2 in the Mukai coordinate order (b0, b1, e1, f1, e2, f2, e3, f3, E8, E8).
inline IntegralLattice mukai_lattice() {
  const auto u = hyperbolic_plane();
  const auto e8 = e8_minus();
  return direct_sum({u, u, u, u, e8, e8}, "mukai");
}

// --- sublattices -----------------------------------------------------------

/// A saturated sublattice given by basis columns in ambient coordinates.
struct SublatticeBasis {
  IntMatrix columns;
  IntMatrix induced_gram;

  std::size_t rank() const { return columns.cols(); }
  bool degenerate() const { return determinant(induced_gram) == 0; }

  /// The induced lattice; throws for degenerate forms.
  IntegralLattice lattice(std::string name = {}) const {
    if (degenerate()) throw InputError("induced form on sublattice is degenerate (isotropic direction)");
    return IntegralLattice(induced_gram, std::move(name));
  }

  LatticeVector to_ambient(const LatticeVector& y) const { return columns * y; }

  /// Coordinates of an ambient vector in this basis, if it lies in the sublattice.
  std::optional<LatticeVector> coordinates(const LatticeVector& x) const { return integer_coordinates(columns, x); }
};

inline bool is_primitive(const LatticeVector& v) {
  if (is_zero(v)) throw InputError("primitivity of the zero vector is undefined");
  return content(v) == 1;
}

/// gcd of pair(v, x) over the lattice basis.
inline Int divisibility(const IntegralLattice& l, const LatticeVector& v) {
  if (is_zero(v)) throw InputError("divisibility of the zero vector is undefined");
  return content(l.pairing_row(v));
}

/// Saturated basis of v^perp = {x : pair(x, v) = 0}.
inline SublatticeBasis perp_basis(const IntegralLattice& l, const LatticeVector& v) {
  if (is_zero(v)) throw InputError("perp of the zero vector is the whole lattice");
  IntMatrix row(1, l.rank());
  const IntVector r = l.pairing_row(v);
  for (std::size_t j = 0; j < l.rank(); ++j) row(0, j) = r[j];
  SublatticeBasis out;
  out.columns = integer_kernel(row);
  out.induced_gram = out.columns.transpose() * l.gram() * out.columns;
  return out;
}

/// Lattice by canonical name: "U", "E8m", "mukai", "Lk:<k>".
inline IntegralLattice lattice_from_name(const std::string& name) {
  if (name == "U") return hyperbolic_plane();
  if (name == "E8m") return e8_minus();
  if (name == "mukai") return mukai_lattice();
  if (name.rfind("Lk:", 0) == 0) {
    Int k;
    if (k.set_str(name.substr(3), 10) != 0) throw InputError("bad Lk index in '" + name + "'");
    return lattice_lk(k);
  }
  throw InputError("unknown built-in lattice '" + name + "'");
}

}  // namespace monlat
