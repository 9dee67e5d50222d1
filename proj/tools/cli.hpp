#pragma once

// Command-line front end. Exit codes: 0 ok, 1 internal error, 2 invalid
// input, 3 theorem contradiction.

#include "raynaud/json_io.hpp"
#include "raynaud/raynaud.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace raynaud::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitContradiction = 3;

inline constexpr Integer kDefaultNmax = 100;

/// Bound on |n| from RAYNAUD_NMAX, default 100.
inline Integer n_cap() {
  const char* env = std::getenv("RAYNAUD_NMAX");
  if (!env || !*env) return kDefaultNmax;
  try {
    const Integer v = std::stoll(env);
    if (v < 0) throw std::invalid_argument("negative");
    return v;
  } catch (const std::logic_error&) {
    throw std::invalid_argument(std::string("RAYNAUD_NMAX is not a non-negative integer: ") + env);
  }
}

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ParamFlags {
  std::optional<Integer> p, g, dD, e, ell;
  bool tango = false;
  bool pretango = false;
  std::string params_json;

  void attach(CLI::App* cmd) {
    cmd->add_option("-p", p, "characteristic (prime)");
    cmd->add_option("-g", g, "genus of the base curve");
    cmd->add_option("--dD", dD, "deg D");
    cmd->add_option("-e", e, "root e of L = N^e");
    cmd->add_option("--ell", ell, "degree of the cyclic cover");
    auto* t = cmd->add_flag("--tango", tango, "p deg D = 2g-2");
    auto* pt = cmd->add_flag("--pretango", pretango, "p deg D < 2g-2 (default)");
    t->excludes(pt);
    cmd->add_option("--params", params_json,
                    "parameter tuple as a JSON object, or @file containing one");
  }

  bool given() const { return p || g || dD || e || ell || !params_json.empty(); }

  RawParams raw() const {
    if (!params_json.empty()) {
      if (p || g || dD || e || ell || tango || pretango)
        throw UsageError("--params cannot be combined with individual parameter flags");
      std::string text = params_json;
      if (text.front() == '@') {
        std::ifstream in(text.substr(1));
        if (!in) throw UsageError("cannot read " + text.substr(1));
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
      }
      try {
        return raw_params_from_json(json::parse(text));
      } catch (const json::exception& ex) {
        throw UsageError(std::string("malformed --params JSON: ") + ex.what());
      } catch (const std::invalid_argument& ex) {
        throw UsageError(ex.what());
      }
    }
    if (!(p && g && dD && e && ell)) throw UsageError("need -p, -g, --dD, -e and --ell (or --params)");
    return {*p, *g, *dD, *e, *ell, tango ? Structure::Tango : Structure::PreTango};
  }
};

/// Validated parameters, or a printed violation list and exit code 2.
struct Resolved {
  std::optional<SurfaceParams> params;
  std::vector<Violation> violations;
};

inline Resolved resolve(const ParamFlags& flags) {
  auto v = validate(flags.raw());
  return {v.params, std::move(v.violations)};
}

inline void print_violations(std::ostream& err, const std::vector<Violation>& vs) {
  for (const auto& v : vs) err << "error: " << v.message() << '\n';
}

inline void check_n_range(Integer nmin, Integer nmax) {
  const Integer cap = n_cap();
  if (nmin > nmax) throw UsageError("--nmin exceeds --nmax");
  if (nmin < -cap || nmax > cap)
    throw UsageError("|n| exceeds RAYNAUD_NMAX=" + std::to_string(cap));
}

inline void check_format(const std::string& f, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (f == a) return;
  throw UsageError("unsupported --format '" + f + "'");
}

inline std::string pretty_fraction(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return to_fraction_string(r);
}

inline int cmd_validate(const ParamFlags& flags, std::ostream& out, std::ostream& err) {
  const RawParams raw = flags.raw();
  const auto v = validate(raw);
  if (!v.ok()) {
    json j = {{"valid", false}, {"input", to_json(raw)}, {"violations", json::array()}};
    for (const auto& x : v.violations) j["violations"].push_back(to_json(x));
    out << j.dump(2) << '\n';
    print_violations(err, v.violations);
    return kExitInvalid;
  }
  const auto& s = *v.params;
  json j = {{"valid", true}, {"params", to_json(s)}, {"dN", s.dN()}, {"dNl", s.dNl()}};
  out << j.dump(2) << '\n';
  return kExitOk;
}

inline int cmd_invariants(const SurfaceParams& s, const std::string& format, std::ostream& out) {
  const auto kx = canonical_X(s);
  const auto [ce, cp] = cusp_exponents(s);
  if (format == "pretty") {
    out << "E~^2                   " << pretty_fraction(selfint_Etilde(s)) << '\n'
        << "K_X                    " << pretty_fraction(kx.cEt) << " E~ + phi^*(deg "
        << pretty_fraction(kx.d) << ")\n"
        << "K_X ample              " << std::boolalpha << is_ample_KX(s) << '\n'
        << "H^1(X, K_X^-1) = 0     " << kodaira_vanishing_KX(s) << '\n'
        << "fiber genus            " << fiber_genus(s) << '\n'
        << "cusp                   Z^" << ce << " = W^" << cp << '\n'
        << "smooth                 " << is_smooth(s) << '\n'
        << "normal                 " << is_normal(s) << '\n'
        << "Cohen-Macaulay         " << is_cohen_macaulay(s) << '\n';
    return kExitOk;
  }
  const auto rep = ample_KX_report(s);
  json li = json::array();
  for (Integer i = 0; i < s.ell(); ++i) li.push_back(to_json(li_class(s, i)));
  json j = {{"params", to_json(s)},
            {"selfint_Etilde", to_fraction_string(selfint_Etilde(s))},
            {"canonical_P", to_json(canonical_P(s))},
            {"canonical_X", to_json(kx)},
            {"K_X_squared", to_fraction_string(rep.square)},
            {"is_ample_KX", rep.ample},
            {"L_i", li},
            {"kodaira_vanishing_KX", kodaira_vanishing_KX(s)},
            {"fiber_genus", fiber_genus(s)},
            {"cusp_exponents", {ce, cp}},
            {"smooth", is_smooth(s)},
            {"normal", is_normal(s)},
            {"cohen_macaulay", is_cohen_macaulay(s)}};
  out << j.dump(2) << '\n';
  return kExitOk;
}

inline int cmd_table(const SurfaceParams& s, std::vector<int> degrees, Integer nmin, Integer nmax,
                     Polarization pol, Splitting split, const std::string& format, std::ostream& out) {
  check_n_range(nmin, nmax);
  for (int i : degrees)
    if (i < 0 || i > 2) throw UsageError("--i entries must be 0, 1 or 2");
  if (pol.a < 1 || pol.b < 1) throw UsageError("--a and --b must be >= 1");
  std::vector<SurfCert> cells;
  for (Integer n = nmin; n <= nmax; ++n) cells.push_back(surface_cohomology(s, n, pol, split));
  if (format == "csv") {
    write_table_csv(out, cells, degrees);
  } else if (format == "pretty") {
    out << std::left << std::setw(3) << "i" << std::setw(6) << "n" << std::setw(16) << "h^i"
        << "chi\n";
    for (int i : degrees)
      for (const auto& sc : cells)
        out << std::setw(3) << i << std::setw(6) << sc.n << std::setw(16) << sc.h[i].to_string()
            << sc.chi << '\n';
  } else {
    out << table_json(s, cells, degrees).dump(2) << '\n';
  }
  return kExitOk;
}

inline int cmd_families(const FamilyBounds& b, const std::string& format, std::ostream& out) {
  if (b.pmax < 1 || b.gmax < 1 || b.ddmax < 1) throw UsageError("bounds must be positive");
  const auto fams = enumerate_families(b);
  if (format == "csv") out << "p,g,dD,e,ell,structure\n";
  for (const auto& s : fams) {
    if (format == "csv")
      out << s.p() << ',' << s.g() << ',' << s.dD() << ',' << s.e() << ',' << s.ell() << ','
          << to_string(s.structure()) << '\n';
    else if (format == "pretty")
      out << "p=" << s.p() << " g=" << s.g() << " dD=" << s.dD() << " e=" << s.e()
          << " ell=" << s.ell() << ' ' << to_string(s.structure()) << '\n';
    else
      out << to_json(s).dump() << '\n';
  }
  return kExitOk;
}

inline int cmd_theorems(const std::vector<SurfaceParams>& sweep, Integer nmin,
                        const std::string& format, std::ostream& out, std::ostream& err) {
  std::size_t pass = 0, weaker = 0, contradicted = 0;
  json reports = json::array();
  for (const auto& s : sweep) {
    const auto rep = theorem_predicates(s, {nmin, 0});
    pass += rep.count(TheoremCheck::Status::Pass);
    weaker += rep.count(TheoremCheck::Status::EngineWeaker);
    contradicted += rep.count(TheoremCheck::Status::Contradicted);
    json bad = json::array();
    for (const auto& c : rep.checks)
      if (c.status != TheoremCheck::Status::Pass) {
        bad.push_back(to_json(c));
        if (c.status == TheoremCheck::Status::Contradicted)
          err << "contradiction: " << to_json(s).dump() << ' ' << to_json(c).dump() << '\n';
      }
    reports.push_back({{"params", to_json(s)},
                       {"checks", rep.checks.size()},
                       {"non_passing", bad}});
  }
  if (format == "pretty") {
    out << "tuples        " << sweep.size() << '\n'
        << "pass          " << pass << '\n'
        << "engine weaker " << weaker << '\n'
        << "contradicted  " << contradicted << '\n';
  } else {
    json j = {{"tuples", sweep.size()},   {"pass", pass},        {"engine_weaker", weaker},
              {"contradicted", contradicted}, {"reports", reports}};
    out << j.dump(2) << '\n';
  }
  return contradicted > 0 ? kExitContradiction : kExitOk;
}

inline int cmd_section_ring(const SurfaceParams& s, const std::vector<int>& js, Integer nmin,
                            Integer nmax, const std::string& format, std::ostream& out) {
  check_n_range(nmin, nmax);
  for (int j : js)
    if (j < 0 || j > 3) throw UsageError("--j entries must be in 0..3");
  const auto rep = local_cohomology_report(s, js, nmin, nmax);
  if (format == "csv") {
    out << "j,n,kind,lo,hi\n";
    for (const auto& [key, c] : rep.pieces) {
      out << key.first << ',' << key.second << ',' << to_string(c.kind()) << ',' << c.lo() << ',';
      if (c.hi()) out << *c.hi();
      out << '\n';
    }
  } else if (format == "pretty") {
    for (const auto& [key, c] : rep.pieces)
      out << "[H^" << key.first << "_m(R)]_" << key.second << " = " << c.to_string() << '\n';
  } else {
    json j = to_json(rep);
    j["params"] = to_json(s);
    out << j.dump(2) << '\n';
  }
  return kExitOk;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified cohomology of generalized Raynaud surfaces"};
  app.require_subcommand(1);
  app.name("raynaud");

  std::string format = "json";
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "json (default), csv or pretty");
  };

  ParamFlags pf;

  auto* validate_cmd = app.add_subcommand("validate", "check a parameter tuple");
  pf.attach(validate_cmd);

  auto* inv_cmd = app.add_subcommand("invariants", "intersection-theoretic invariants");
  pf.attach(inv_cmd);
  add_format(inv_cmd);

  std::vector<int> degrees{0, 1, 2};
  Integer nmin = -10, nmax = 10;
  Polarization pol;
  auto* table_cmd = app.add_subcommand("table", "h^i(X, Z_{a,b}^n) certificate table");
  pf.attach(table_cmd);
  add_format(table_cmd);
  table_cmd->add_option("--i", degrees, "cohomological degrees, e.g. 0,1,2")->delimiter(',');
  table_cmd->add_option("--nmin", nmin, "lowest n (default -10)");
  table_cmd->add_option("--nmax", nmax, "highest n (default 10)");
  table_cmd->add_option("--a", pol.a, "multiple of E~ (default 1)");
  table_cmd->add_option("--b", pol.b, "power of N_ell (default 1)");
  std::string splitting = "lemma";
  table_cmd->add_option("--splitting", splitting, "push-forward splitting: lemma (default) or eigen")
      ->check(CLI::IsMember({"lemma", "eigen"}));

  FamilyBounds bounds{7, 20, 20};
  auto add_bounds = [&](CLI::App* cmd) {
    cmd->add_option("--pmax", bounds.pmax, "largest p (default 7)");
    cmd->add_option("--gmax", bounds.gmax, "largest genus (default 20)");
    cmd->add_option("--ddmax", bounds.ddmax, "largest deg D (default 20)");
  };
  auto* fam_cmd = app.add_subcommand("families", "enumerate valid parameter tuples");
  add_bounds(fam_cmd);
  add_format(fam_cmd);

  Integer theorem_nmin = -40;
  auto* thm_cmd = app.add_subcommand("theorems", "cross-check vanishing theorems against the engine");
  pf.attach(thm_cmd);
  add_bounds(thm_cmd);
  add_format(thm_cmd);
  thm_cmd->add_option("--nmin", theorem_nmin, "lowest degree checked (default -40)");

  std::vector<int> js{0, 1, 2, 3};
  auto* sr_cmd = app.add_subcommand("section-ring", "graded local cohomology of the section ring");
  pf.attach(sr_cmd);
  add_format(sr_cmd);
  sr_cmd->add_option("--j", js, "local cohomology indices, e.g. 2,3")->delimiter(',');
  sr_cmd->add_option("--nmin", nmin, "lowest n (default -10)");
  sr_cmd->add_option("--nmax", nmax, "highest n (default 10)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(pf, out, err);
    if (fam_cmd->parsed()) {
      check_format(format, {"json", "csv", "pretty"});
      return cmd_families(bounds, format, out);
    }
    if (thm_cmd->parsed()) {
      check_format(format, {"json", "pretty"});
      if (-theorem_nmin > n_cap()) throw UsageError("|n| exceeds RAYNAUD_NMAX");
      std::vector<SurfaceParams> sweep;
      if (pf.given()) {
        auto r = resolve(pf);
        if (!r.params) {
          print_violations(err, r.violations);
          return kExitInvalid;
        }
        sweep.push_back(*r.params);
      } else {
        sweep = enumerate_families(bounds);
      }
      return cmd_theorems(sweep, theorem_nmin, format, out, err);
    }

    auto r = resolve(pf);
    if (!r.params) {
      print_violations(err, r.violations);
      return kExitInvalid;
    }
    const SurfaceParams& s = *r.params;
    if (inv_cmd->parsed()) {
      check_format(format, {"json", "pretty"});
      return cmd_invariants(s, format, out);
    }
    if (table_cmd->parsed()) {
      check_format(format, {"json", "csv", "pretty"});
      return cmd_table(s, degrees, nmin, nmax, pol,
                       splitting == "eigen" ? Splitting::Eigen : Splitting::Lemma, format, out);
    }
    if (sr_cmd->parsed()) {
      check_format(format, {"json", "csv", "pretty"});
      return cmd_section_ring(s, js, nmin, nmax, format, out);
    }
  } catch (const UsageError& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitInvalid;
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& ex) {
    err << "internal error: " << ex.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace raynaud::cli
