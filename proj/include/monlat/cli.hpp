#pragma once

// Command-line front end. run_command parses argv, runs one subcommand and
// returns the exit code: 0 success, 1 verification failure, 2 input error.

#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "monlat/verify.hpp"
#include "monlat/word_search.hpp"

namespace monlat {

namespace cli_detail {

/// Failed verification (exit 1) carrying a JSON payload.
struct VerificationFailure : std::runtime_error {
  Json payload;
  VerificationFailure(const std::string& what, Json p) : std::runtime_error(what), payload(std::move(p)) {}
};

/// A file path or inline JSON text.
inline Json load_json(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return read_json_file(arg);
  return parse_json(arg, "argument");
}

/// A lattice argument: a built-in name, a JSON file, or inline JSON.
inline LatticePtr load_lattice(const std::string& arg) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(arg, ec) && !arg.empty() && arg.front() != '{' && arg.front() != '"')
    return resolve_lattice(arg);
  const Json j = load_json(arg);
  return decode([&] { return lattice_from_json(j); });
}

inline Isometry load_isometry(const std::string& arg) {
  const Json j = load_json(arg);
  return decode([&] { return isometry_from_json(j); });
}

inline MukaiVector load_mukai(const std::string& arg) {
  const Json j = load_json(arg);
  return decode([&] { return mukai_from_json(j); });
}

inline MorphismWord load_word(const std::string& arg) {
  const Json j = load_json(arg);
  return decode([&] { return word_from_json(j); });
}

inline IntVector load_vector(const std::string& arg) {
  const Json j = load_json(arg);
  return decode([&] { return vector_from_json(j); });
}

inline Json signature_json(const Signature& s) { return Json::array({s.positive, s.negative}); }

inline Json disc_json(const DiscriminantGroup& a) {
  Json factors = Json::array(), q = Json::array();
  for (const auto& d : a.invariant_factors()) factors.push_back(int_to_json(d));
  for (const auto& x : a.q_values()) q.push_back(rat_to_json(x));
  return Json{{"factors", factors}, {"q_values", q}, {"order", int_to_json(a.order())}};
}

inline const char* orientation_name(int c) { return c == 0 ? "preserving" : "reversing"; }

inline Json phi_json(const PhiResult& p) {
  Json j{{"functor", p.functor},
         {"source", mukai_to_json(p.source)},
         {"target", mukai_to_json(p.target)},
         {"orientation", orientation_name(p.orientation)},
         {"sign", p.sign},
         {"matrix", matrix_to_json(p.matrix)}};
  if (p.automorphism) j["in_w"] = in_w(*p.automorphism, default_frame(*p.automorphism->lattice()));
  return j;
}

}  // namespace cli_detail

/// Global options shared by every subcommand.
struct CliOptions {
  std::string json_path;
  std::uint64_t seed = 1;
  std::size_t max_len = 8;
};

inline int run_command(const std::vector<std::string>& args, std::ostream& out = std::cout,
                       std::ostream& err = std::cerr) {
  using namespace cli_detail;
  CLI::App app{"Exact lattice computations for Mukai lattices, isometries and monodromy groups", "monlat"};
  app.require_subcommand(1);
  app.fallthrough();
  CliOptions opt;
  app.add_option("--json", opt.json_path, "Also write the JSON result to this file");
  app.add_option("--seed", opt.seed, "Seed for randomized checks");
  app.add_option("--max-len", opt.max_len, "Word length bound for searches");

  std::function<Json()> action;
  bool plain = false;       // print a bare scalar instead of indented JSON
  bool verify_mode = false;  // exit 1 when the result has "passed": false

  std::string a1, a2, v_arg, c_arg, frame = "default", functor = "phi", target_arg, suite = "all";
  long m = 0, k = 0;
  std::uint64_t kk = 0;

  // --- lattice ---
  auto* lat = app.add_subcommand("lattice", "Lattice information");
  lat->require_subcommand(1);
  auto* lat_info = lat->add_subcommand("info", "Rank, determinant, signature, parity");
  lat_info->add_option("lattice", a1)->required();
  lat_info->callback([&] {
    action = [&] {
      const LatticePtr l = load_lattice(a1);
      return Json{{"name", l->name()},     {"rank", l->rank()},
                  {"det", int_to_json(l->det())}, {"signature", signature_json(l->signature())},
                  {"even", l->is_even()}, {"gram", matrix_to_json(l->gram())}};
    };
  });
  auto* lat_perp = lat->add_subcommand("perp", "Saturated basis of v^perp");
  lat_perp->add_option("lattice", a1)->required();
  lat_perp->add_option("--v", v_arg, "Vector as a JSON array")->required();
  lat_perp->callback([&] {
    action = [&] {
      const LatticePtr l = load_lattice(a1);
      const IntVector v = load_vector(v_arg);
      l->check_vector(v);
      const SublatticeBasis b = perp_basis(*l, v);
      Json j{{"columns", matrix_to_json(b.columns)}, {"induced_gram", matrix_to_json(b.induced_gram)},
             {"degenerate", b.degenerate()}, {"primitive", is_primitive(v)},
             {"divisibility", int_to_json(divisibility(*l, v))}};
      if (!b.degenerate()) j["signature"] = signature_json(b.lattice().signature());
      return j;
    };
  });

  // --- disc ---
  auto* disc = app.add_subcommand("disc", "Discriminant groups");
  disc->require_subcommand(1);
  auto* disc_group = disc->add_subcommand("group", "Invariant factors and q values");
  disc_group->add_option("lattice", a1)->required();
  disc_group->callback([&] { action = [&] { return disc_json(DiscriminantGroup(*load_lattice(a1))); }; });
  auto* disc_action = disc->add_subcommand("action", "Action of an isometry on A_L");
  disc_action->add_option("lattice", a1)->required();
  disc_action->add_option("isometry", a2)->required();
  disc_action->callback([&] {
    action = [&] {
      const LatticePtr l = load_lattice(a1);
      const Isometry g = load_isometry(a2);
      if (!(*g.lattice() == *l)) throw InputError("isometry is not defined on this lattice");
      const DiscriminantGroup a(*l);
      const DiscriminantAction act = induced_disc_action(*l, a, g.matrix());
      Json j = disc_json(a);
      j["matrix"] = matrix_to_json(act.matrix);
      j["sign_class"] = to_string(act.sign_class);
      return j;
    };
  });
  auto* disc_oq = disc->add_subcommand("oq", "Order of O(q) for the cyclic form on Z/2k");
  disc_oq->add_option("k", kk)->required();
  disc_oq->callback([&] {
    plain = true;
    action = [&] { return Json(oq_unit_count(kk)); };
  });

  // --- isom ---
  auto* isom = app.add_subcommand("isom", "Lattice isometries");
  isom->require_subcommand(1);
  auto* isom_check = isom->add_subcommand("check", "Certify an isometry");
  isom_check->add_option("isometry", a1)->required();
  isom_check->callback([&] {
    action = [&] {
      const Json j = load_json(a1);
      try {
        const Isometry g = decode([&] { return isometry_from_json(j); });
        return Json{{"valid", true}, {"det", int_to_json(g.det())}};
      } catch (const CertificateError& e) {
        throw VerificationFailure(e.what(), Json{{"valid", false}, {"reason", e.what()}});
      }
    };
  });
  auto* isom_compose = isom->add_subcommand("compose", "g o h");
  isom_compose->add_option("outer", a1, "Applied second")->required();
  isom_compose->add_option("inner", a2, "Applied first")->required();
  isom_compose->callback([&] { action = [&] { return isometry_to_json(compose(load_isometry(a1), load_isometry(a2))); }; });
  auto* isom_orient = isom->add_subcommand("orient", "Orientation character");
  isom_orient->add_option("isometry", a1)->required();
  isom_orient->add_option("--frame", frame, "Positive frame (default)")->check(CLI::IsMember({"default"}));
  isom_orient->callback([&] {
    action = [&] {
      const Isometry g = load_isometry(a1);
      const int c = orientation_character(g, default_frame(*g.lattice()));
      return Json{{"character", c}, {"orientation", orientation_name(c)}};
    };
  });
  auto* isom_inw = isom->add_subcommand("in-w", "Orientation preserving and +-id on A_L");
  isom_inw->add_option("isometry", a1)->required();
  isom_inw->add_option("--frame", frame, "Positive frame (default)")->check(CLI::IsMember({"default"}));
  isom_inw->callback([&] {
    action = [&] {
      const Isometry g = load_isometry(a1);
      const int c = orientation_character(g, default_frame(*g.lattice()));
      const SignClass sc = induced_disc_action(g).sign_class;
      return Json{{"in_w", c == 0 && sc != SignClass::other},
                  {"orientation", orientation_name(c)},
                  {"sign_class", to_string(sc)}};
    };
  });
  auto* isom_restrict = isom->add_subcommand("restrict", "Restriction to v^perp of an isometry fixing +-v");
  isom_restrict->add_option("isometry", a1)->required();
  isom_restrict->add_option("--v", v_arg, "Vector as a JSON array")->required();
  isom_restrict->callback([&] {
    action = [&] {
      const Isometry g = load_isometry(a1);
      const PerpLattice p = make_perp(*g.lattice(), load_vector(v_arg));
      const Restriction r = restrict_to_perp(g, p);
      return Json{{"sign", r.sign},
                  {"basis", matrix_to_json(p.basis.columns)},
                  {"isometry", isometry_to_json(r.isometry)}};
    };
  });
  auto* isom_extend = isom->add_subcommand("extend", "Extension of g in W(v^perp) to the ambient lattice");
  isom_extend->add_option("isometry", a1, "Isometry of v^perp in its saturated basis")->required();
  isom_extend->add_option("--v", v_arg, "Vector as a JSON array")->required();
  isom_extend->add_option("--ambient", a2, "Ambient lattice (default mukai)");
  isom_extend->callback([&] {
    action = [&] {
      const LatticePtr amb = load_lattice(a2.empty() ? "mukai" : a2);
      const PerpLattice p = make_perp(*amb, load_vector(v_arg));
      const Isometry g = load_isometry(a1);
      if (!(*g.lattice() == *p.lattice)) throw InputError("isometry is not defined on v^perp");
      const Isometry gp = check_isometry(p.lattice, g.matrix());
      if (induced_disc_action(gp).sign_class == SignClass::other)
        throw VerificationFailure("extension refused",
                                  Json{{"extended", false}, {"reason", "not +-id on the discriminant group"}});
      const Extension e = extend_from_perp(*amb, p, gp);
      return Json{{"extended", true}, {"epsilon", e.epsilon}, {"isometry", isometry_to_json(e.isometry)}};
    };
  });
  auto* isom_search = isom->add_subcommand("search", "Shortest word in generators equal to a target");
  isom_search->add_option("generators", a1, "JSON array of isometries")->required();
  isom_search->add_option("target", a2)->required();
  isom_search->callback([&] {
    action = [&] {
      const Json gj = load_json(a1);
      if (!gj.is_array() || gj.empty()) throw InputError("generators: expected a non-empty JSON array");
      std::vector<Isometry> gens;
      for (const auto& x : gj) gens.push_back(decode([&] { return isometry_from_json(x); }));
      const Isometry target = load_isometry(a2);
      const auto w = word_search(gens.front().lattice(), gens, target, opt.max_len);
      Json j{{"max_len", opt.max_len}};
      if (!w) {
        j["word"] = nullptr;
      } else {
        Json letters = Json::array();
        for (Letter x : *w) letters.push_back(Json{{"generator", x >= 0 ? x : -x - 1}, {"inverse", x < 0}});
        j["word"] = letters;
      }
      return j;
    };
  });

  // --- mukai ---
  auto* muk = app.add_subcommand("mukai", "Mukai vectors and Fourier-Mukai actions");
  muk->require_subcommand(1);
  auto add_vec_cmd = [&](const std::string& name, const std::string& help,
                         std::function<Json(const MukaiVector&)> f) {
    auto* c = muk->add_subcommand(name, help);
    c->add_option("vector", a1, "Mukai vector JSON {r, xi, a}")->required();
    c->callback([&, f] { action = [&, f] { return f(load_mukai(a1)); }; });
    return c;
  };
  add_vec_cmd("square", "v^2", [](const MukaiVector& v) { return Json{{"square", int_to_json(mukai_square(v))}}; });
  add_vec_cmd("decompose", "v = m w with w primitive, w^2 = 2k", [](const MukaiVector& v) {
    const MKTriple t = mk_decompose(v);
    return Json{{"m", int_to_json(t.m)}, {"w", mukai_to_json(t.w)}, {"k", int_to_json(t.k)}};
  });
  add_vec_cmd("fm-delta", "(r,xi,a) -> (a,-xi,r)", [](const MukaiVector& v) { return mukai_to_json(fm_delta(v)); });
  add_vec_cmd("fm-dual", "(r,xi,a) -> (a,xi,r)", [](const MukaiVector& v) { return mukai_to_json(fm_dual(v)); });
  add_vec_cmd("fm-p", "Elliptic Poincare transform", [](const MukaiVector& v) { return mukai_to_json(fm_poincare(v)); });
  auto* muk_tensor = add_vec_cmd("tensor", "v ch(L)", [&](const MukaiVector& v) {
    return mukai_to_json(tensor(v, load_vector(c_arg)));
  });
  muk_tensor->add_option("--c", c_arg, "c1(L) as a JSON array of 22 integers")->required();
  auto* muk_ample = muk->add_subcommand("ample", "Ampleness of alpha e + beta f");
  muk_ample->add_option("alpha", a1)->required();
  muk_ample->add_option("beta", a2)->required();
  muk_ample->callback([&] {
    action = [&] {
      return Json{{"ample", ample_elliptic(int_from_json(Json(a1), "alpha"), int_from_json(Json(a2), "beta"))}};
    };
  });

  // --- mon ---
  auto* mon = app.add_subcommand("mon", "Monodromy of M_v for v = (m,0,-mk)");
  mon->require_subcommand(1);
  auto* mon_test_cmd = mon->add_subcommand("test", "Membership in W(v^perp)");
  mon_test_cmd->add_option("--m", m)->required();
  mon_test_cmd->add_option("--k", k)->required();
  mon_test_cmd->add_option("isometry", a1)->required();
  mon_test_cmd->callback([&] {
    action = [&] {
      const MonodromyContext ctx(m, k);
      const Isometry g = load_isometry(a1);
      if (!(*g.lattice() == *ctx.lattice())) throw InputError("isometry is not defined on v^perp for this (m,k)");
      const Isometry gp = check_isometry(ctx.lattice(), g.matrix());
      return Json{{"in_w", mon_test(ctx, gp)},
                  {"orientation", orientation_name(orientation_character(gp, ctx.frame()))},
                  {"sign_class", to_string(induced_disc_action(gp).sign_class)}};
    };
  });
  auto* mon_index = mon->add_subcommand("index", "[O+(v^perp) : W]");
  mon_index->add_option("k", kk)->required();
  mon_index->callback([&] {
    plain = true;
    action = [&] { return Json(index_of_w(kk)); };
  });
  auto* mon_vi = mon->add_subcommand("verify-index", "Compare the index formula with brute force");
  mon_vi->add_option("--max", kk)->required();
  mon_vi->callback([&] {
    verify_mode = true;
    action = [&] {
      const IndexReport rep = verify_index(kk);
      Json mism = Json::array();
      for (const auto& [kv, vals] : rep.mismatches)
        mism.push_back(Json{{"k", kv}, {"formula", vals.first}, {"brute_force", vals.second}});
      return Json{{"k_max", rep.k_max}, {"checked", rep.checked}, {"mismatches", mism}, {"passed", rep.ok()}};
    };
  });
  auto* mon_gens = mon->add_subcommand("generators", "R_u and a sample of O+(H^2) on v^perp");
  mon_gens->add_option("--m", m)->required();
  mon_gens->add_option("--k", k)->required();
  mon_gens->callback([&] {
    action = [&] {
      const MonodromyContext ctx(m, k);
      Json arr = Json::array();
      for (const auto& g : boh_generators(ctx)) {
        Json j = isometry_to_json(g);
        j["in_w"] = mon_test(ctx, g);
        arr.push_back(std::move(j));
      }
      return Json{{"m", m}, {"k", k}, {"generators", arr}};
    };
  });

  // --- word ---
  auto* word = app.add_subcommand("word", "Morphism words");
  word->require_subcommand(1);
  auto* word_validate = word->add_subcommand("validate", "Vector chain of a word after cancellation");
  word_validate->add_option("word", a1)->required();
  word_validate->callback([&] {
    action = [&] {
      const ValidatedWord vw = validate_word(load_word(a1));
      Json chain = Json::array(), steps = Json::array();
      for (const auto& v : vw.chain) chain.push_back(mukai_to_json(v));
      for (const auto& s : vw.reduced) steps.push_back(step_to_json(s));
      return Json{{"chain", chain}, {"reduced", steps}};
    };
  });
  auto* word_eval = word->add_subcommand("eval", "Evaluate a word");
  word_eval->add_option("word", a1)->required();
  word_eval->add_option("--functor", functor)->check(CLI::IsMember({"phi_tilde", "phi", "pt"}));
  word_eval->add_option("--target", target_arg, "Expected endpoint (up to sign)");
  word_eval->callback([&] {
    action = [&] {
      const MorphismWord w = load_word(a1);
      if (functor == "phi_tilde") {
        const Isometry g = eval_phi_tilde(w);
        return Json{{"functor", functor},
                    {"target", mukai_to_json(apply(g, w.source))},
                    {"orientation", orientation_name(orientation_character(g, mukai_frame()))},
                    {"isometry", isometry_to_json(g)}};
      }
      std::optional<MukaiVector> expected;
      if (!target_arg.empty()) expected = load_mukai(target_arg);
      return phi_json(functor == "pt" ? eval_pt(w, expected) : eval_phi(w, expected));
    };
  });

  // --- verify ---
  auto* ver = app.add_subcommand("verify", "Run the exact verification suite");
  ver->add_option("--suite", suite, "all or a single check id");
  ver->callback([&] {
    verify_mode = true;
    action = [&] {
      const VerifyReport rep = run_verify(suite, opt.seed, [&](const CheckResult& c) {
        out << (c.pass ? "PASS " : "FAIL ") << c.id << "  " << c.detail << '\n';
      });
      return rep.to_json();
    };
  });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  Json result;
  int code = 0;
  try {
    result = action();
  } catch (const VerificationFailure& e) {
    result = e.payload;
    code = 1;
  } catch (const CertificateError& e) {
    err << "verification failed: " << e.what() << '\n';
    return 1;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return 2;
  } catch (const CLI::Error& e) {
    err << "input error: " << e.what() << '\n';
    return 2;
  }
  if (verify_mode && result.contains("passed") && !result["passed"].get<bool>()) code = 1;

  const std::string text = result.dump(2);
  if (ver->parsed()) {
    out << (code == 0 ? "all checks passed" : "verification FAILED") << '\n';
  } else if (plain && result.is_primitive()) {
    out << result.dump() << '\n';
  } else {
    out << text << '\n';
  }
  if (!opt.json_path.empty()) {
    std::ofstream f(opt.json_path);
    if (!f) {
      err << "input error: cannot write '" << opt.json_path << "'\n";
      return 2;
    }
    f << text << '\n';
  }
  return code;
}

inline int run_command(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_command(args, out, err);
}

}  // namespace monlat
