#pragma once

// Locally trivial monodromy of moduli spaces M_v, v = (m, 0, -mk), decided
// through the lattice group W(v^perp). H^2(M_v, Z) is represented as v^perp
// inside the Mukai lattice with the restricted pairing.

#include <cstdint>
#include <map>

#include "monlat/mukai.hpp"

namespace monlat {

class MonodromyContext {
 public:
  MonodromyContext(const Int& m, const Int& k)
      : m_(m), k_(k), v_(standard_vectors(m, k).v),
        perp_(make_perp(*mukai_lattice_ptr(), v_.coords(), "v_perp:" + m.get_str() + ":" + k.get_str())),
        disc_(*perp_.lattice), frame_(make_frame(perp_)) {
    if (disc_.order() != 2 * k) throw CertificateError("v^perp has discriminant of order != 2k");
    if (perp_.lattice->signature() != Signature{3, 20}) throw CertificateError("v^perp does not have signature (3,20)");
  }

  const Int& m() const { return m_; }
  const Int& k() const { return k_; }
  const MukaiVector& v() const { return v_; }
  const PerpLattice& perp() const { return perp_; }
  const LatticePtr& lattice() const { return perp_.lattice; }
  const DiscriminantGroup& disc() const { return disc_; }
  const OrientationFrame& frame() const { return frame_; }

  /// Perp coordinates of an element of v^perp given as a Mukai vector.
  LatticeVector coordinates(const MukaiVector& x) const {
    auto y = perp_.basis.coordinates(x.coords());
    if (!y) throw InputError("vector " + x.to_string() + " is not in v^perp");
    return *y;
  }
  MukaiVector ambient(const LatticeVector& y) const { return MukaiVector::from_coords(perp_.basis.to_ambient(y)); }

  /// Restriction of a Mukai-lattice isometry fixing +-v.
  Isometry restrict(const Isometry& g) const { return restrict_to_perp(g, perp_).isometry; }

 private:
  static OrientationFrame make_frame(const PerpLattice& p) {
    // The three H^2 vectors of the Mukai frame lie in v^perp.
    const IntMatrix full = mukai_frame().columns();
    IntMatrix h2(kMukaiRank, 3);
    for (std::size_t i = 0; i < kMukaiRank; ++i)
      for (std::size_t j = 0; j < 3; ++j) h2(i, j) = full(i, j);
    return OrientationFrame(*p.lattice, to_perp_coordinates(p, h2));
  }

  Int m_, k_;
  MukaiVector v_;
  PerpLattice perp_;
  DiscriminantGroup disc_;
  OrientationFrame frame_;
};

/// Locally trivial monodromy membership: g in W(v^perp).
inline bool mon_test(const MonodromyContext& ctx, const Isometry& g) {
  if (!(*g.lattice() == *ctx.lattice())) throw InputError("isometry is not defined on v^perp for this (m,k)");
  return in_w(g, ctx.disc(), ctx.frame());
}

/// Number of distinct prime factors.
inline unsigned distinct_primes(std::uint64_t k) {
  unsigned n = 0;
  for (std::uint64_t p = 2; p * p <= k; ++p) {
    if (k % p) continue;
    ++n;
    while (k % p == 0) k /= p;
  }
  return n + (k > 1 ? 1 : 0);
}

/// [O^+(v^perp) : W] = 2^(rho(k) - 1); 1 for k = 1.
inline std::uint64_t index_of_w(std::uint64_t k) {
  if (k == 0) throw InputError("index_of_w requires k >= 1");
  if (k == 1) return 1;
  return std::uint64_t{1} << (distinct_primes(k) - 1);
}

struct IndexReport {
  std::uint64_t k_max = 0;
  std::uint64_t checked = 0;
  std::map<std::uint64_t, std::pair<std::uint64_t, std::uint64_t>> mismatches;  ///< k -> (formula, count/2)
  bool ok() const { return mismatches.empty(); }
};

/// Compares index_of_w(k) with half the brute-force order of O(q) for 2 <= k <= k_max.
inline IndexReport verify_index(std::uint64_t k_max) {
  IndexReport rep;
  rep.k_max = k_max;
  for (std::uint64_t k = 2; k <= k_max; ++k) {
    const std::uint64_t formula = index_of_w(k);
    const std::uint64_t brute = oq_unit_count(k) / 2;
    ++rep.checked;
    if (formula != brute) rep.mismatches[k] = {formula, brute};
  }
  return rep;
}

inline MukaiVector h2_class(const IntVector& x) { return MukaiVector(Int(0), x, Int(0)); }

/// Isometry of H^2 extended by the identity on H^0 + H^4.
inline Isometry extend_h2(const Isometry& g) {
  if (!(*g.lattice() == *h2_lattice_ptr())) throw InputError("not an isometry of H^2");
  IntMatrix m = IntMatrix::identity(kMukaiRank);
  for (std::size_t i = 0; i < kH2Rank; ++i)
    for (std::size_t j = 0; j < kH2Rank; ++j) m(2 + i, 2 + j) = g.matrix()(i, j);
  return check_isometry(mukai_lattice_ptr(), std::move(m));
}

/// R_u for u = (1, beta - f, k), restricted to v^perp, followed by a finite
/// sample of O^+(H^2) (transvections and (-2)-reflections) extended by the
/// identity on H^0 + H^4 and restricted.
inline std::vector<Isometry> boh_generators(const MonodromyContext& ctx) {
  const auto sv = standard_vectors(ctx.m(), ctx.k());
  const LatticePtr& h2 = h2_lattice_ptr();
  std::vector<Isometry> out;
  out.push_back(ctx.restrict(reflection(mukai_lattice_ptr(), sv.u.coords())));
  auto b = h2_basis;
  std::vector<Isometry> h2_elems = {
      transvection(h2, b(h2_e(2)), b(h2_e(3))),
      transvection(h2, b(h2_f(2)), b(h2_e(3))),
      transvection(h2, b(h2_e(3)), b(h2_e(2)) - b(h2_f(2))),
      transvection(h2, b(h2_e(1)), sv.beta),
      reflection(h2, sv.ell),
      reflection(h2, b(h2_e(2)) - b(h2_f(2))),
  };
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 8; ++i) h2_elems.push_back(reflection(h2, b(h2_e8(j) + static_cast<std::size_t>(i))));
  for (const auto& g : h2_elems) out.push_back(ctx.restrict(extend_h2(g)));
  return out;
}

/// i^*: H^2(M_v) -> H^2(M_w), x -> m x, in the respective perp coordinates.
inline LatticeVector i_star(const MonodromyContext& v_ctx, const MonodromyContext& w_ctx, const LatticeVector& x) {
  if (v_ctx.k() != w_ctx.k() || w_ctx.m() != 1) throw InputError("i_star needs contexts (m,k) and (1,k)");
  const LatticeVector ambient = v_ctx.m() * v_ctx.perp().basis.to_ambient(x);
  auto y = w_ctx.perp().basis.coordinates(ambient);
  if (!y) throw CertificateError("i_star image is not in w^perp");
  return *y;
}

/// i^sharp(g) = i^* g (i^*)^{-1}; conjugation by a scalar multiple of the identity.
inline Isometry i_sharp(const MonodromyContext& v_ctx, const MonodromyContext& w_ctx, const Isometry& g) {
  if (!(*g.lattice() == *v_ctx.lattice())) throw InputError("isometry is not defined on v^perp");
  const std::size_t n = v_ctx.perp().basis.rank();
  IntMatrix img(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    LatticeVector e(n);
    e[j] = 1;
    // i^* g (i^*)^{-1} e_j = i^*(g(y)) / m where i^* y = m e_j
    auto y = v_ctx.perp().basis.coordinates(w_ctx.perp().basis.to_ambient(e));
    if (!y) throw CertificateError("w^perp basis vector not in v^perp");
    img.set_column(j, i_star(v_ctx, w_ctx, g(*y)));
    for (auto& c : img.column(j))
      if (!mpz_divisible_p(c.get_mpz_t(), v_ctx.m().get_mpz_t())) throw CertificateError("i_sharp not integral");
    for (std::size_t i = 0; i < n; ++i) img(i, j) /= v_ctx.m();
  }
  return check_isometry(w_ctx.lattice(), std::move(img));
}

}  // namespace monlat
