#pragma once

// Seeded random generators of lattice vectors and isometries, used by the
// randomized property checks.

#include <random>

#include "monlat/monodromy.hpp"

namespace monlat::sampling {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline IntVector random_vector(Rng& rng, std::size_t n, long lo = -2, long hi = 2) {
  IntVector v(n);
  for (auto& x : v) x = uniform(rng, lo, hi);
  return v;
}

/// A hyperbolic pair e, f (e^2 = f^2 = 0, (e,f) = 1) inside an even lattice.
struct HyperbolicPair {
  LatticeVector e, f;
};

inline HyperbolicPair unit_pair(std::size_t rank, std::size_t e_idx, std::size_t f_idx) {
  HyperbolicPair p{LatticeVector(rank), LatticeVector(rank)};
  p.e[e_idx] = 1;
  p.f[f_idx] = 1;
  return p;
}

/// Projection of x to {e, f}^perp.
inline LatticeVector project_off(const IntegralLattice& l, const HyperbolicPair& h, const LatticeVector& x) {
  return x - l.pair(x, h.f) * h.e - l.pair(x, h.e) * h.f;
}

/// Random primitive isotropic z = e - (y^2/2) f + y with y in {e,f}^perp.
inline LatticeVector random_isotropic(Rng& rng, const IntegralLattice& l, const HyperbolicPair& h, long span = 2) {
  const LatticeVector y = project_off(l, h, random_vector(rng, l.rank(), -span, span));
  const Int c = l.square(y) / 2;
  return h.e - c * h.f + y;
}

/// Random vector orthogonal to z: (z,s) x - (z,x) s.
inline LatticeVector random_orthogonal(Rng& rng, const IntegralLattice& l, const LatticeVector& z, long span = 2) {
  const LatticeVector x = random_vector(rng, l.rank(), -span, span);
  const LatticeVector s = random_vector(rng, l.rank(), -span, span);
  return l.pair(z, s) * x - l.pair(z, x) * s;
}

inline Isometry random_transvection(Rng& rng, const LatticePtr& l, const HyperbolicPair& h, long span = 2) {
  const LatticeVector z = random_isotropic(rng, *l, h, span);
  return transvection(l, z, random_orthogonal(rng, *l, z, span));
}

/// Product of `count` random transvections.
inline Isometry random_unipotent(Rng& rng, const LatticePtr& l, const HyperbolicPair& h, int count, long span = 1) {
  Isometry g = identity_isometry(l);
  for (int i = 0; i < count; ++i) g = compose(random_transvection(rng, l, h, span), g);
  return g;
}

/// Random element of W(v^perp) for the monodromy context, as a word of the
/// given length in (-2)-reflections, transvections and conjugates of R_t,
/// t = (1, 0, k) (which acts as -id on the discriminant group). The returned
/// sign is the expected discriminant scalar.
struct SampledW {
  Isometry g;
  int disc_sign;
};

inline HyperbolicPair perp_pair(const MonodromyContext& ctx, int i = 1) {
  return {ctx.coordinates(h2_class(h2_basis(h2_e(i)))), ctx.coordinates(h2_class(h2_basis(h2_f(i))))};
}

inline LatticeVector perp_t_vector(const MonodromyContext& ctx) {
  return ctx.coordinates(MukaiVector(Int(1), h2_zero(), ctx.k()));
}

/// A (-2)-vector of v^perp: a basic root moved by a random unipotent element.
inline LatticeVector random_root(Rng& rng, const MonodromyContext& ctx) {
  const auto sv = standard_vectors(ctx.m(), ctx.k());
  std::vector<LatticeVector> roots = {ctx.coordinates(h2_class(sv.ell)), ctx.coordinates(sv.u),
                                      ctx.coordinates(h2_class(h2_basis(h2_e(2)) - h2_basis(h2_f(2))))};
  for (int i = 0; i < 8; ++i) roots.push_back(ctx.coordinates(h2_class(h2_basis(h2_e8(0) + i))));
  const LatticeVector r = roots[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(roots.size()) - 1))];
  return random_unipotent(rng, ctx.lattice(), perp_pair(ctx, 2), 1)(r);
}

inline SampledW random_w_element(Rng& rng, const MonodromyContext& ctx, int length) {
  const LatticePtr& l = ctx.lattice();
  Isometry g = identity_isometry(l);
  int sign = 1;
  for (int i = 0; i < length; ++i) {
    switch (uniform(rng, 0, 2)) {
      case 0: g = compose(reflection(l, random_root(rng, ctx)), g); break;
      case 1: g = compose(random_transvection(rng, l, perp_pair(ctx, 1 + static_cast<int>(uniform(rng, 0, 2))), 1), g); break;
      default: {
        const Isometry h = random_unipotent(rng, l, perp_pair(ctx, 2), 1);
        g = compose(h, compose(reflection(l, perp_t_vector(ctx)), compose(inverse(h), g)));
        if (ctx.k() > 1) sign = -sign;
      }
    }
  }
  if (ctx.k() == 1) sign = sign_of(induced_disc_action(g).sign_class);
  return {g, sign};
}

/// Isometries of v^perp outside W: R_x for x = t + 2 e2 + 2 f2 acts on the
/// discriminant group Z/12 (k = 6) by 7, composed with a random W element.
inline Isometry random_non_w_element(Rng& rng, const MonodromyContext& ctx, int length) {
  if (ctx.k() != 6) throw InputError("non-W samples are constructed for k = 6");
  const LatticePtr& l = ctx.lattice();
  const auto p = perp_pair(ctx, 2);
  const LatticeVector x = perp_t_vector(ctx) + Int(2) * p.e + Int(2) * p.f;
  const Isometry rx = reflection(l, x);
  return compose(random_w_element(rng, ctx, length).g, rx);
}

/// Random element of O^+(Mukai)_v: the Mukai-lattice versions of
/// (-2)-reflections and transvections supported in v^perp.
inline Isometry random_stabilizer_element(Rng& rng, const MonodromyContext& ctx, int length) {
  const LatticePtr& amb = mukai_lattice_ptr();
  const auto& c = ctx.perp().basis;
  Isometry g = identity_isometry(amb);
  for (int i = 0; i < length; ++i) {
    if (uniform(rng, 0, 1) == 0) {
      g = compose(reflection(amb, c.to_ambient(random_root(rng, ctx))), g);
    } else {
      const auto h = perp_pair(ctx, 1 + static_cast<int>(uniform(rng, 0, 2)));
      const LatticeVector z = random_isotropic(rng, *ctx.lattice(), h, 1);
      const LatticeVector a = random_orthogonal(rng, *ctx.lattice(), z, 1);
      g = compose(transvection(amb, c.to_ambient(z), c.to_ambient(a)), g);
    }
  }
  return g;
}

}  // namespace monlat::sampling
