#pragma once

// Words in the groupoid generated by deformations and the four Fourier-Mukai
// type equivalences, and their representations: phi_tilde on the Mukai
// lattice, phi = sign-twisted restriction to v^perp, and pt.

#include <optional>

#include "monlat/monodromy.hpp"

namespace monlat {

enum class StepKind { tensor, fm_delta, fm_dual, fm_poincare, deform, chamber };

inline const char* to_string(StepKind k) {
  switch (k) {
    case StepKind::tensor: return "tensor";
    case StepKind::fm_delta: return "fm_delta";
    case StepKind::fm_dual: return "fm_dual";
    case StepKind::fm_poincare: return "fm_p";
    case StepKind::deform: return "deform";
    case StepKind::chamber: return "chamber";
  }
  return "?";
}

inline StepKind step_kind_from_string(const std::string& s) {
  for (auto k : {StepKind::tensor, StepKind::fm_delta, StepKind::fm_dual, StepKind::fm_poincare, StepKind::deform,
                 StepKind::chamber})
    if (s == to_string(k)) return k;
  throw InputError("unknown word step '" + s + "'");
}

struct Step {
  StepKind kind = StepKind::chamber;
  IntVector c;       ///< tensor: class c1(L) in H^2
  IntMatrix matrix;  ///< deform: parallel transport p_alpha on the Mukai lattice
  /// Caller's assertion that sheaf-level hypotheses hold (genericity of H,
  /// n > n0, t >> 0). Recorded, never checked.
  bool asserted = true;
  bool inverted = false;

  static Step tensor(IntVector c, bool inverted = false) { return {StepKind::tensor, std::move(c), {}, true, inverted}; }
  static Step fm_delta(bool inverted = false) { return {StepKind::fm_delta, {}, {}, true, inverted}; }
  static Step fm_dual(bool inverted = false) { return {StepKind::fm_dual, {}, {}, true, inverted}; }
  static Step fm_poincare(bool inverted = false) { return {StepKind::fm_poincare, {}, {}, true, inverted}; }
  static Step deform(IntMatrix m, bool inverted = false) { return {StepKind::deform, {}, std::move(m), true, inverted}; }
  static Step chamber(bool inverted = false) { return {StepKind::chamber, {}, {}, true, inverted}; }

  Step formal_inverse() const {
    Step s = *this;
    s.inverted = !inverted;
    return s;
  }

  friend bool operator==(const Step& a, const Step& b) {
    return a.kind == b.kind && a.c == b.c && a.matrix == b.matrix && a.inverted == b.inverted;
  }
};

struct MorphismWord {
  MukaiVector source;
  std::vector<Step> steps;

  /// Reversed word of formal inverses.
  MorphismWord inverse_from(const MukaiVector& target) const {
    MorphismWord w{target, {}};
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) w.steps.push_back(it->formal_inverse());
    return w;
  }
};

/// The Mukai-lattice action of a single step (taking inversion into account).
inline Isometry step_isometry(const Step& s) {
  auto base = [&]() -> Isometry {
    switch (s.kind) {
      case StepKind::tensor: return tensor_isometry(s.c);
      case StepKind::fm_delta: return fm_delta_isometry();
      case StepKind::fm_dual: return fm_dual_isometry();
      case StepKind::fm_poincare: return fm_poincare_isometry();
      case StepKind::deform:
        try {
          return check_isometry(mukai_lattice_ptr(), s.matrix);
        } catch (const CertificateError& e) {
          throw InputError(std::string("deform payload: ") + e.what());
        }
      case StepKind::chamber: return identity_isometry(mukai_lattice_ptr());
    }
    throw InputError("bad step");
  }();
  return s.inverted ? inverse(base) : base;
}

/// Whether b undoes a at the level of words.
inline bool cancels(const Step& a, const Step& b) {
  if (a.kind != b.kind) return false;
  // FM_Delta and its dual act as involutions on the Mukai lattice.
  if (a.kind == StepKind::fm_delta || a.kind == StepKind::fm_dual) return true;
  return a.c == b.c && a.matrix == b.matrix && a.inverted != b.inverted;
}

struct ValidatedWord {
  std::vector<Step> reduced;
  std::vector<MukaiVector> chain;  ///< source, then the vector after each reduced step
  std::vector<Isometry> step_maps;
};

inline ValidatedWord validate_word(const MorphismWord& word) {
  const OrientationFrame frame = mukai_frame();
  MukaiVector cur = word.source;
  for (std::size_t i = 0; i < word.steps.size(); ++i) {
    const Step& s = word.steps[i];
    const Isometry g = step_isometry(s);
    if (s.kind == StepKind::deform) {
      if (orientation_character(g, frame) != 0)
        throw InputError("deform step " + std::to_string(i) + " is not orientation preserving");
      if (apply(g, cur) != cur)
        throw InputError("deform step " + std::to_string(i) + " does not fix the current Mukai vector");
    }
    cur = apply(g, cur);
  }
  ValidatedWord out;
  for (const Step& s : word.steps) {
    if (!out.reduced.empty() && cancels(out.reduced.back(), s)) out.reduced.pop_back();
    else out.reduced.push_back(s);
  }
  out.chain.push_back(word.source);
  for (const Step& s : out.reduced) {
    out.step_maps.push_back(step_isometry(s));
    out.chain.push_back(apply(out.step_maps.back(), out.chain.back()));
  }
  return out;
}

/// Ordered product of the step actions: the last step is applied last.
inline Isometry eval_phi_tilde(const MorphismWord& word) {
  const ValidatedWord vw = validate_word(word);
  Isometry g = identity_isometry(mukai_lattice_ptr());
  for (const auto& s : vw.step_maps) g = compose(s, g);
  return g;
}

/// phi(word) = (-1)^{or} phi_tilde(word)|_{source^perp}.
struct PhiResult {
  MukaiVector source;
  MukaiVector target;
  Isometry ambient;   ///< phi_tilde(word)
  int orientation;    ///< orientation character of phi_tilde(word) on the Mukai lattice
  int sign;           ///< (-1)^orientation
  IntMatrix matrix;   ///< source^perp coordinates -> target^perp coordinates
  /// Set when target = +-source: the automorphism of source^perp.
  std::optional<Isometry> automorphism;
  std::string functor = "phi";
};

inline PhiResult eval_phi(const MorphismWord& word, const std::optional<MukaiVector>& expected_target = std::nullopt) {
  const Isometry g = eval_phi_tilde(word);
  const MukaiVector target = apply(g, word.source);
  if (expected_target && target != *expected_target && target != -*expected_target)
    throw InputError("word ends at " + target.to_string() + ", expected +-" + expected_target->to_string());
  const int orientation = orientation_character(g, mukai_frame());
  const int sign = orientation ? -1 : 1;
  const PerpLattice src = make_perp(*mukai_lattice_ptr(), word.source.coords());
  const PerpLattice dst = make_perp(*mukai_lattice_ptr(), target.coords());
  const IntMatrix image = Int(sign) * (g.matrix() * src.basis.columns);
  PhiResult out{word.source, target, g, orientation, sign, to_perp_coordinates(dst, image), std::nullopt};
  if (target == word.source || target == -word.source) out.automorphism = check_isometry(src.lattice, out.matrix);
  return out;
}

/// pt(word): equal to phi(word) under the identification H^2(M_v) = v^perp.
inline PhiResult eval_pt(const MorphismWord& word, const std::optional<MukaiVector>& expected_target = std::nullopt) {
  PhiResult r = eval_phi(word, expected_target);
  r.functor = "pt";
  return r;
}

}  // namespace monlat
