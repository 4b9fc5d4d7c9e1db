#pragma once

// The verification suite: ten exact checks of the lattice identities the
// library is built around, with seed-fixed random sampling and a JSON report.

#include <chrono>
#include <functional>

#include "monlat/json_io.hpp"
#include "monlat/sampling.hpp"

namespace monlat {

struct CheckResult {
  std::string id;
  std::string statement;
  bool pass = false;
  std::string detail;
  std::optional<Json> witness;
  double millis = 0;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
  }

  Json to_json(bool timing = true) const {
    Json arr = Json::array();
    for (const auto& c : checks) {
      Json j{{"id", c.id}, {"statement", c.statement}, {"status", c.pass ? "pass" : "fail"}, {"detail", c.detail}};
      if (c.witness) j["witness"] = *c.witness;
      if (timing) j["millis"] = c.millis;
      arr.push_back(std::move(j));
    }
    return Json{{"seed", seed}, {"checks", arr}, {"passed", ok()}};
  }
};

// --- independent derivation of Theta -----------------------------------------

namespace oracle {

struct ThetaDerivation {
  bool ok = false;
  std::string note;
  /// Rows = coefficients on (u0, l, f, u4), columns = images of (u0, l, f, u4).
  RatMatrix theta = RatMatrix(4, 4);
};

/// Solves for Theta on u0, f, u4 from the two vector families at k = 1, 2
///   Theta(u0 - k u4)       = l + (k+1) f + u4
///   Theta(u0 - f + k u4)   = l - (k-1) f
/// then determines Theta(l) from the isometry equations.
inline ThetaDerivation derive_theta() {
  ThetaDerivation out;
  std::array<MukaiVector, 4> b = {MukaiVector(1, 0), MukaiVector(0, 0), MukaiVector(0, 0), MukaiVector(0, 1)};
  b[1].xi[h2_e(1)] = 1;
  b[1].xi[h2_f(1)] = -1;
  b[2].xi[h2_f(1)] = 1;
  RatMatrix gram(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) gram(i, j) = mukai_pair(b[i], b[j]);

  // unknowns: 4 coefficients for each of Theta(u0), Theta(f), Theta(u4)
  const std::array<int, 3> known = {0, 2, 3};
  std::vector<std::pair<std::array<long, 4>, std::array<long, 4>>> eqs;
  for (long k : {1L, 2L}) {
    eqs.push_back({{1, 0, 0, -k}, {0, 1, k + 1, 1}});
    eqs.push_back({{1, 0, -1, k}, {0, 1, -(k - 1), 0}});
  }
  RatMatrix a(4 * eqs.size(), 12);
  RatVector rhs(4 * eqs.size());
  for (std::size_t e = 0; e < eqs.size(); ++e) {
    const auto& [src, dst] = eqs[e];
    if (src[1] != 0) throw std::logic_error("oracle equations must not involve Theta(l)");
    for (int row = 0; row < 4; ++row) {
      for (int u = 0; u < 3; ++u) a(4 * e + row, 4 * u + row) = src[known[u]];
      rhs[4 * e + row] = dst[row];
    }
  }
  if (rank(a) != 12) {
    out.note = "linear system does not determine Theta on u0, f, u4";
    return out;
  }
  auto sol = solve(a, rhs);
  if (!sol) {
    out.note = "the two families are inconsistent";
    return out;
  }
  for (int u = 0; u < 3; ++u)
    for (int row = 0; row < 4; ++row) out.theta(row, known[u]) = (*sol)[4 * u + row];

  // Theta(l) = x:  (x, Theta b_j) = (l, b_j) for j in {u0, f, u4}, x^2 = l^2
  RatMatrix lin(3, 4);
  RatVector lrhs(3);
  for (int u = 0; u < 3; ++u) {
    for (int c = 0; c < 4; ++c)
      for (int r = 0; r < 4; ++r) lin(u, c) += gram(c, r) * out.theta(r, known[u]);
    lrhs[u] = gram(1, known[u]);
  }
  auto x0 = solve(lin, lrhs);
  const auto ns = nullspace(lin);
  if (!x0 || ns.size() != 1) {
    out.note = "isometry equations for Theta(l) are not one-parameter";
    return out;
  }
  auto q = [&](const RatVector& x, const RatVector& y) {
    Rat s = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) s += x[i] * gram(i, j) * y[j];
    return s;
  };
  const RatVector& n = ns[0];
  const Rat qa = q(n, n), qb = 2 * q(*x0, n), qc = q(*x0, *x0) - gram(1, 1);
  std::vector<Rat> roots;
  if (qa == 0) {
    if (qb != 0) roots.push_back(-qc / qb);
  } else {
    const Rat disc = qb * qb - 4 * qa * qc;
    if (disc >= 0) {
      const Int num = disc.get_num(), den = disc.get_den();
      if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
        const Rat s(sqrt(num), sqrt(den));
        roots.push_back((-qb + s) / (2 * qa));
        if (s != 0) roots.push_back((-qb - s) / (2 * qa));
      }
    }
  }
  if (roots.size() != 1) {
    out.note = std::to_string(roots.size()) + " rational candidates for Theta(l)";
    return out;
  }
  for (int r = 0; r < 4; ++r) {
    out.theta(r, 1) = (*x0)[r] + roots[0] * n[r];
    out.theta(r, 1).canonicalize();
  }
  out.ok = true;
  out.note = "unique solution";
  return out;
}

}  // namespace oracle

// --- the ten checks ------------------------------------------------------------

namespace checks {

using sampling::Rng;

inline CheckResult index_formula(std::uint64_t) {
  CheckResult r{"index_formula", "2^(rho(k)-1) = |O(q)|/2 for 2 <= k <= 500", true, "", std::nullopt, 0};
  const IndexReport rep = verify_index(500);
  r.pass = rep.ok() && rep.checked == 499;
  r.detail = std::to_string(rep.checked) + " values of k";
  if (!rep.ok()) {
    const auto& [k, vals] = *rep.mismatches.begin();
    r.witness = Json{{"k", k}, {"formula", vals.first}, {"brute_force", vals.second}};
  }
  return r;
}

/// U + U' + <-2k> with basis (e, f, e', f', t).
inline LatticePtr eichler_lattice(long k) {
  const auto u = hyperbolic_plane();
  return share(direct_sum({u, u, rank_one(Int(-2 * k))}, "U+U+<-" + std::to_string(2 * k) + ">"));
}

inline CheckResult eichler_identity(std::uint64_t) {
  CheckResult r{"eichler_identity", "t(e',e-rf) o t(e',-e+(r-1)f) = t(e',f)^-1 for 2 <= r <= 50, k in {1,2,3}", true,
                "", std::nullopt, 0};
  int cases = 0;
  for (long k = 1; k <= 3; ++k) {
    const LatticePtr l = eichler_lattice(k);
    const auto e = make_vector({1, 0, 0, 0, 0}), f = make_vector({0, 1, 0, 0, 0});
    const auto ebar = make_vector({0, 0, 1, 0, 0});
    for (long rr = 2; rr <= 50; ++rr) {
      const Int rq(rr);
      const Isometry lhs = compose(transvection(l, ebar, e - rq * f), transvection(l, ebar, -e + Int(rq - 1) * f));
      const Isometry rhs = inverse(transvection(l, ebar, f));
      ++cases;
      if (!(lhs == rhs)) {
        r.pass = false;
        r.witness = Json{{"k", k}, {"r", rr}, {"lhs", matrix_to_json(lhs.matrix())}, {"rhs", matrix_to_json(rhs.matrix())}};
        return r;
      }
    }
  }
  r.detail = std::to_string(cases) + " cases";
  return r;
}

inline const LatticePtr& u3_lattice() {
  static const LatticePtr l = [] {
    const auto u = hyperbolic_plane();
    return share(direct_sum({u, u, u}, "U+U+U"));
  }();
  return l;
}

/// An isometry of U+U+U fixing e1: products of t(e1, b) and t(w, c) with w
/// isotropic in the third plane's span with the second, c orthogonal to e1 and w.
inline Isometry stabilizer_of_e1(Rng& rng, int count) {
  const LatticePtr& l = u3_lattice();
  LatticeVector e1(6);
  e1[0] = 1;
  Isometry g = identity_isometry(l);
  for (int i = 0; i < count; ++i) {
    if (sampling::uniform(rng, 0, 1) == 0) {
      g = compose(transvection(l, e1, sampling::random_orthogonal(rng, *l, e1, 2)), g);
      continue;
    }
    sampling::HyperbolicPair h = sampling::unit_pair(6, 2, 3);
    LatticeVector y(6);
    y[4] = sampling::uniform(rng, -2, 2);
    y[5] = sampling::uniform(rng, -2, 2);
    const LatticeVector w = h.e - Int(l->square(y) / 2) * h.f + y;
    LatticeVector x = sampling::random_vector(rng, 6), s = sampling::random_vector(rng, 6);
    x[1] = 0;
    s[1] = 0;
    const LatticeVector c = l->pair(w, s) * x - l->pair(w, x) * s;
    g = compose(transvection(l, w, c), g);
  }
  return g;
}

inline CheckResult transvection_laws(std::uint64_t seed) {
  CheckResult r{"transvection_laws",
                "t(z,a) o t(z,b) = t(z,a+b) and g o t(z,a) o g^-1 = t(z,g(a)) for g(z) = z, 1000 cases each on U+U+U",
                true, "", std::nullopt, 0};
  Rng rng(seed);
  const LatticePtr& l = u3_lattice();
  const auto pair = sampling::unit_pair(6, 0, 1);
  for (int i = 0; i < 1000; ++i) {
    const LatticeVector z = sampling::random_isotropic(rng, *l, pair);
    const LatticeVector a = sampling::random_orthogonal(rng, *l, z), b = sampling::random_orthogonal(rng, *l, z);
    if (!(compose(transvection(l, z, a), transvection(l, z, b)) == transvection(l, z, a + b))) {
      r.pass = false;
      r.witness = Json{{"law", "additivity"}, {"z", vector_to_json(z)}, {"a", vector_to_json(a)}, {"b", vector_to_json(b)}};
      return r;
    }
  }
  LatticeVector e1(6);
  e1[0] = 1;
  for (int i = 0; i < 1000; ++i) {
    const Isometry h = sampling::random_unipotent(rng, l, pair, 2);
    const LatticeVector z = h(e1);
    const Isometry g = compose(h, compose(stabilizer_of_e1(rng, 3), inverse(h)));
    const LatticeVector a = sampling::random_orthogonal(rng, *l, z);
    const bool fixes = g(z) == z;
    const bool law = compose(g, compose(transvection(l, z, a), inverse(g))) == transvection(l, z, g(a));
    if (!fixes || !law) {
      r.pass = false;
      r.witness = Json{{"law", "conjugation"}, {"z", vector_to_json(z)}, {"a", vector_to_json(a)},
                       {"g", matrix_to_json(g.matrix())}, {"g_fixes_z", fixes}};
      return r;
    }
  }
  r.detail = "2000 cases";
  return r;
}

inline CheckResult transvection_class(std::uint64_t seed) {
  CheckResult r{"transvection_class",
                "random transvections on Lk:k, k <= 10, have det 1, preserve orientation and act as +id on A_L", true, "",
                std::nullopt, 0};
  Rng rng(seed);
  std::vector<LatticePtr> lats;
  std::vector<DiscriminantGroup> discs;
  std::vector<OrientationFrame> frames;
  for (long k = 1; k <= 10; ++k) {
    lats.push_back(share(lattice_lk(k)));
    discs.emplace_back(*lats.back());
    frames.push_back(default_frame(*lats.back()));
  }
  for (int i = 0; i < 500; ++i) {
    const std::size_t idx = static_cast<std::size_t>(i % 10);
    const LatticePtr& l = lats[idx];
    const Isometry t = sampling::random_transvection(rng, l, sampling::unit_pair(l->rank(), 0, 1));
    const bool det_ok = t.det() == 1;
    const bool or_ok = orientation_character(t, frames[idx]) == 0;
    const SignClass sc = induced_disc_action(*l, discs[idx], t.matrix()).sign_class;
    if (!det_ok || !or_ok || sc != SignClass::plus_id) {
      r.pass = false;
      r.witness = Json{{"k", idx + 1}, {"matrix", matrix_to_json(t.matrix())}, {"det_ok", det_ok},
                       {"orientation_ok", or_ok}, {"sign_class", to_string(sc)}};
      return r;
    }
  }
  r.detail = "500 transvections";
  return r;
}

inline CheckResult fm_poincare_identities(std::uint64_t) {
  CheckResult r{"fm_poincare",
                "FM_P(m,0,-mk) = (0, m(l+(k+1)f), m) and FM_P(1,beta-f,k) = (0, l-(k-1)f-beta, 0) for 1 <= m,k <= 20; "
                "Theta re-derived from constraints",
                true, "", std::nullopt, 0};
  for (long m = 1; m <= 20; ++m) {
    for (long k = 1; k <= 20; ++k) {
      const auto sv = standard_vectors(m, k);
      const MukaiVector want1(0, Int(m) * (sv.ell + Int(k + 1) * sv.f), Int(m));
      const MukaiVector got1 = fm_poincare(sv.v);
      const MukaiVector want2(0, sv.ell - Int(k - 1) * sv.f - sv.beta, 0);
      const MukaiVector got2 = fm_poincare(sv.u);
      if (got1 != want1 || got2 != want2) {
        r.pass = false;
        r.witness = Json{{"m", m}, {"k", k}, {"image_v", mukai_to_json(got1)}, {"image_u", mukai_to_json(got2)}};
        return r;
      }
    }
  }
  const auto d = oracle::derive_theta();
  bool same = d.ok;
  const auto& th = poincare_theta();
  for (int i = 0; i < 4 && same; ++i)
    for (int j = 0; j < 4; ++j)
      if (d.theta(i, j) != th[i][j]) same = false;
  if (!same) {
    r.pass = false;
    Json m = Json::array();
    for (int i = 0; i < 4; ++i) {
      Json row = Json::array();
      for (int j = 0; j < 4; ++j) row.push_back(rat_to_json(d.theta(i, j)));
      m.push_back(row);
    }
    r.witness = Json{{"oracle", m}, {"note", d.note}};
    return r;
  }
  r.detail = "400 (m,k) pairs; oracle: " + d.note;
  return r;
}

inline CheckResult orientation_characters(std::uint64_t seed) {
  CheckResult r{"orientation_characters",
                "tensor, FM_Delta and FM_P preserve the orientation of the Mukai lattice; the duality reverses it", true, "",
                std::nullopt, 0};
  Rng rng(seed);
  const OrientationFrame frame = mukai_frame();
  std::vector<std::pair<std::string, Isometry>> preserving = {{"fm_delta", fm_delta_isometry()},
                                                              {"fm_p", fm_poincare_isometry()},
                                                              {"tensor(f1)", tensor_isometry(h2_basis(h2_f(1)))}};
  for (int i = 0; i < 5; ++i)
    preserving.push_back({"tensor(random)", tensor_isometry(sampling::random_vector(rng, kH2Rank, -3, 3))});
  for (const auto& [name, g] : preserving) {
    if (orientation_character(g, frame) != 0) {
      r.pass = false;
      r.witness = Json{{"action", name}, {"expected", "preserving"}};
      return r;
    }
  }
  if (orientation_character(duality_isometry(), frame) != 1) {
    r.pass = false;
    r.witness = Json{{"action", "duality"}, {"expected", "reversing"}};
    return r;
  }
  r.detail = std::to_string(preserving.size() + 1) + " actions";
  return r;
}

/// Contexts cached per (m, k).
class ContextCache {
 public:
  const MonodromyContext& get(long m, long k) {
    auto it = cache_.find({m, k});
    if (it == cache_.end()) it = cache_.emplace(std::make_pair(m, k), std::make_unique<MonodromyContext>(m, k)).first;
    return *it->second;
  }

 private:
  std::map<std::pair<long, long>, std::unique_ptr<MonodromyContext>> cache_;
};

inline CheckResult extension(std::uint64_t seed) {
  CheckResult r{"extension",
                "random g in W(v^perp) extend to the Mukai lattice with g~(v) = eps v and restrict back to g; "
                "elements outside W are refused",
                true, "", std::nullopt, 0};
  Rng rng(seed);
  ContextCache ctxs;
  const std::vector<std::pair<long, long>> mk = {{1, 1}, {2, 1}, {2, 3}, {1, 6}, {3, 2}, {2, 6}};
  int minus = 0;
  for (int i = 0; i < 100; ++i) {
    const auto [m, k] = mk[static_cast<std::size_t>(i) % mk.size()];
    const auto& ctx = ctxs.get(m, k);
    const auto s = sampling::random_w_element(rng, ctx, 1 + i % 4);
    auto fail = [&](const std::string& why) {
      r.pass = false;
      r.witness = Json{{"m", m}, {"k", k}, {"reason", why}, {"g", isometry_to_json(s.g)}};
    };
    try {
      const Extension ext = extend_from_perp(*mukai_lattice_ptr(), ctx.perp(), s.g);
      if (ext.epsilon != s.disc_sign) return fail("epsilon differs from the discriminant sign"), r;
      if (ext.isometry(ctx.perp().v) != Int(ext.epsilon) * ctx.perp().v) return fail("g~(v) != eps v"), r;
      if (!(ctx.restrict(ext.isometry) == s.g)) return fail("restriction of the extension differs from g"), r;
      if (ext.epsilon < 0) ++minus;
    } catch (const std::exception& e) {
      return fail(e.what()), r;
    }
  }
  for (int i = 0; i < 20; ++i) {
    const auto& ctx = ctxs.get(1 + i % 2, 6);
    const Isometry g = sampling::random_non_w_element(rng, ctx, i % 3);
    bool refused = false;
    try {
      extend_from_perp(*mukai_lattice_ptr(), ctx.perp(), g);
    } catch (const InputError&) {
      refused = true;
    }
    if (refused == mon_test(ctx, g)) {
      r.pass = false;
      r.witness = Json{{"m", 1 + i % 2}, {"k", 6}, {"reason", "element outside W was not refused"}, {"g", isometry_to_json(g)}};
      return r;
    }
  }
  r.detail = "100 extensions (" + std::to_string(minus) + " with eps = -1), 20 refusals";
  return r;
}

inline CheckResult similitude(std::uint64_t seed) {
  CheckResult r{"similitude",
                "q_w(i*x, i*y) = m^2 q_v(x, y) for m in {2,3,5}, k in {1,2,6}; mon_test invariant under i#", true, "",
                std::nullopt, 0};
  Rng rng(seed);
  ContextCache ctxs;
  int pairs = 0, verdicts = 0;
  for (long m : {2L, 3L, 5L}) {
    for (long k : {1L, 2L, 6L}) {
      const auto& v = ctxs.get(m, k);
      const auto& w = ctxs.get(1, k);
      const std::size_t n = v.perp().basis.rank();
      for (int i = 0; i < 200; ++i) {
        const LatticeVector x = sampling::random_vector(rng, n, -3, 3), y = sampling::random_vector(rng, n, -3, 3);
        ++pairs;
        if (w.lattice()->pair(i_star(v, w, x), i_star(v, w, y)) != Int(m * m) * v.lattice()->pair(x, y)) {
          r.pass = false;
          r.witness = Json{{"m", m}, {"k", k}, {"x", vector_to_json(x)}, {"y", vector_to_json(y)}};
          return r;
        }
      }
      std::vector<Isometry> samples;
      for (int i = 0; i < 4; ++i) samples.push_back(sampling::random_w_element(rng, v, 3).g);
      samples.push_back(check_isometry(v.lattice(), -IntMatrix::identity(n)));
      samples.push_back(reflection(v.lattice(), sampling::perp_t_vector(v)));
      if (k == 6)
        for (int i = 0; i < 3; ++i) samples.push_back(sampling::random_non_w_element(rng, v, 2));
      for (const auto& g : samples) {
        ++verdicts;
        if (mon_test(v, g) != mon_test(w, i_sharp(v, w, g))) {
          r.pass = false;
          r.witness = Json{{"m", m}, {"k", k}, {"g", isometry_to_json(g)}};
          return r;
        }
      }
    }
  }
  r.detail = std::to_string(pairs) + " pairs, " + std::to_string(verdicts) + " verdicts";
  return r;
}

/// A random word of Fourier-Mukai type steps (no deformations).
inline std::vector<Step> random_fm_steps(Rng& rng, int length) {
  std::vector<Step> out;
  for (int i = 0; i < length; ++i) {
    switch (sampling::uniform(rng, 0, 4)) {
      case 0: {
        IntVector c = h2_zero();
        for (int j = 0; j < 3; ++j) c[static_cast<std::size_t>(sampling::uniform(rng, 0, kH2Rank - 1))] += sampling::uniform(rng, -1, 1);
        out.push_back(Step::tensor(std::move(c)));
        break;
      }
      case 1: out.push_back(Step::fm_delta()); break;
      case 2: out.push_back(Step::fm_dual()); break;
      case 3: out.push_back(Step::fm_poincare(sampling::uniform(rng, 0, 1) == 1)); break;
      default: out.push_back(Step::chamber()); break;
    }
  }
  return out;
}

/// A loop at v of length <= 8: S, Deform(phi~(S) h phi~(S)^-1), S^-1 with h in
/// O^+(Mukai)_v, optionally followed by the duality loop [fm_dual, fm_delta].
inline MorphismWord random_loop(Rng& rng, const MonodromyContext& ctx) {
  const MukaiVector v = ctx.v();
  const int len = static_cast<int>(sampling::uniform(rng, 0, 3));
  const std::vector<Step> s = random_fm_steps(rng, len);
  const Isometry phi_s = eval_phi_tilde(MorphismWord{v, s});
  const Isometry h = sampling::random_stabilizer_element(rng, ctx, static_cast<int>(sampling::uniform(rng, 1, 3)));
  MorphismWord w{v, s};
  w.steps.push_back(Step::deform(compose(phi_s, compose(h, inverse(phi_s))).matrix()));
  const MorphismWord back = MorphismWord{v, s}.inverse_from(apply(phi_s, v));
  w.steps.insert(w.steps.end(), back.steps.begin(), back.steps.end());
  if (len <= 2 && sampling::uniform(rng, 0, 2) == 0) {
    w.steps.push_back(Step::fm_dual());
    w.steps.push_back(Step::fm_delta());
  }
  return w;
}

inline CheckResult image_in_w(std::uint64_t seed) {
  CheckResult r{"image_in_w", "300 random loops at v = (m,0,-mk), m,k <= 4, evaluate under phi into W(v^perp)", true,
                "", std::nullopt, 0};
  Rng rng(seed);
  ContextCache ctxs;
  int reversing = 0;
  for (int i = 0; i < 300; ++i) {
    const long m = sampling::uniform(rng, 1, 4), k = sampling::uniform(rng, 1, 4);
    const auto& ctx = ctxs.get(m, k);
    const MorphismWord w = random_loop(rng, ctx);
    try {
      const PhiResult p = eval_phi(w, ctx.v());
      if (p.target != ctx.v() || !p.automorphism || !mon_test(ctx, *p.automorphism)) {
        r.pass = false;
        r.witness = Json{{"m", m}, {"k", k}, {"word", word_to_json(w)}};
        return r;
      }
      if (p.sign < 0) ++reversing;
    } catch (const std::exception& e) {
      r.pass = false;
      r.witness = Json{{"m", m}, {"k", k}, {"word", word_to_json(w)}, {"error", e.what()}};
      return r;
    }
  }
  r.detail = "300 loops (" + std::to_string(reversing) + " with sign -1)";
  return r;
}

inline CheckResult vector_arithmetic(std::uint64_t) {
  CheckResult r{"vector_arithmetic", "v^2 = 2 m^2 k, u^2 = -2 and (u, v) = 0 for m, k <= 10", true, "", std::nullopt, 0};
  for (long m = 1; m <= 10; ++m) {
    for (long k = 1; k <= 10; ++k) {
      const auto sv = standard_vectors(m, k);
      if (mukai_square(sv.v) != 2 * m * m * k || mukai_square(sv.u) != -2 || mukai_pair(sv.u, sv.v) != 0) {
        r.pass = false;
        r.witness = Json{{"m", m}, {"k", k}};
        return r;
      }
    }
  }
  r.detail = "100 (m,k) pairs";
  return r;
}

}  // namespace checks

using CheckFn = std::function<CheckResult(std::uint64_t)>;

/// The suite in canonical order.
inline const std::vector<std::pair<std::string, CheckFn>>& verify_suite() {
  static const std::vector<std::pair<std::string, CheckFn>> suite = {
      {"index_formula", checks::index_formula},
      {"eichler_identity", checks::eichler_identity},
      {"transvection_laws", checks::transvection_laws},
      {"transvection_class", checks::transvection_class},
      {"fm_poincare", checks::fm_poincare_identities},
      {"orientation_characters", checks::orientation_characters},
      {"extension", checks::extension},
      {"similitude", checks::similitude},
      {"image_in_w", checks::image_in_w},
      {"vector_arithmetic", checks::vector_arithmetic},
  };
  return suite;
}

/// Runs the named checks ("all" for every check). Each check gets its own
/// seed derived from the suite seed and its position, so results do not
/// depend on which subset runs.
inline VerifyReport run_verify(const std::string& suite, std::uint64_t seed,
                               const std::function<void(const CheckResult&)>& on_result = {}) {
  VerifyReport rep;
  rep.seed = seed;
  bool found = false;
  std::uint64_t pos = 0;
  for (const auto& [id, fn] : verify_suite()) {
    ++pos;
    if (suite != "all" && suite != id) continue;
    found = true;
    const auto t0 = std::chrono::steady_clock::now();
    CheckResult res;
    try {
      res = fn(seed * 1000003u + pos);
    } catch (const std::exception& e) {
      res = CheckResult{id, "", false, std::string("exception: ") + e.what(), std::nullopt, 0};
    }
    res.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (on_result) on_result(res);
    rep.checks.push_back(std::move(res));
  }
  if (!found) throw InputError("unknown verify suite '" + suite + "'");
  return rep;
}

}  // namespace monlat
