#pragma once

// JSON and CSV encodings. Rationals are always "num/den" strings; no floating
// point appears in any output.

#include "raynaud/cert.hpp"
#include "raynaud/numclass.hpp"
#include "raynaud/params.hpp"
#include "raynaud/sectionring.hpp"
#include "raynaud/surfcoh.hpp"
#include "raynaud/theorems.hpp"

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace raynaud {

using json = nlohmann::ordered_json;

inline json to_json(const RawParams& r) {
  return {{"p", r.p}, {"g", r.g}, {"dD", r.dD}, {"e", r.e}, {"ell", r.ell},
          {"structure", to_string(r.structure)}};
}

inline json to_json(const SurfaceParams& params) { return to_json(params.raw()); }

/// Accepts {"p":..,"g":..,"dD":..,"e":..,"ell":..,"structure":"tango"|"pretango"}.
inline RawParams raw_params_from_json(const json& j) {
  RawParams r;
  for (const char* key : {"p", "g", "dD", "e", "ell"}) {
    if (!j.contains(key) || !j.at(key).is_number_integer())
      throw std::invalid_argument(std::string("missing or non-integer field '") + key + "'");
  }
  r.p = j.at("p").get<Integer>();
  r.g = j.at("g").get<Integer>();
  r.dD = j.at("dD").get<Integer>();
  r.e = j.at("e").get<Integer>();
  r.ell = j.at("ell").get<Integer>();
  if (j.contains("structure")) {
    if (!j.at("structure").is_string()) throw std::invalid_argument("'structure' must be a string");
    auto s = parse_structure(j.at("structure").get<std::string>());
    if (!s) throw std::invalid_argument("'structure' must be \"tango\" or \"pretango\"");
    r.structure = *s;
  }
  return r;
}

inline json to_json(const Violation& v) {
  json j = {{"kind", v.kind == Violation::Kind::NotPrime ? "NotPrime" : "ConstraintViolated"}};
  if (v.kind == Violation::Kind::ConstraintViolated) j["constraint"] = v.constraint;
  j["detail"] = v.detail;
  j["message"] = v.message();
  return j;
}

inline json to_json(const ClassP& c) {
  return {{"cE", to_fraction_string(c.cE)}, {"cf", to_fraction_string(c.cf)}};
}

inline json to_json(const ClassX& c) {
  return {{"cEt", to_fraction_string(c.cEt)}, {"d", to_fraction_string(c.d)}};
}

inline ClassP class_p_from_json(const json& j) {
  return {parse_fraction(j.at("cE").get<std::string>()), parse_fraction(j.at("cf").get<std::string>())};
}

inline ClassX class_x_from_json(const json& j) {
  return {parse_fraction(j.at("cEt").get<std::string>()), parse_fraction(j.at("d").get<std::string>())};
}

/// {"kind", "lo", "hi"}; hi is null for a bare lower bound.
inline json to_json(const Cert& c) {
  json j = {{"kind", to_string(c.kind())}, {"lo", c.lo()}};
  j["hi"] = c.hi() ? json(*c.hi()) : json(nullptr);
  return j;
}

inline json to_json(const Cert& c, Integer chi) {
  json j = to_json(c);
  j["chi"] = chi;
  return j;
}

inline Cert cert_from_json(const json& j) {
  const auto lo = j.at("lo").get<Integer>();
  if (j.at("hi").is_null()) return Cert::lower_bound(lo);
  return Cert::bounds(lo, j.at("hi").get<Integer>());
}

inline json to_json(const TwistedSym& s) {
  return {{"dualized", s.dualized}, {"m", s.m}, {"t", s.t}};
}

inline json to_json(const TermRecord& rec, int i) {
  json j = {{"mtw", rec.term.mtw}, {"t", rec.term.t}, {"index", rec.term.index}};
  if (!rec.reduction) {
    j["sheaf"] = nullptr;
  } else {
    j["sheaf"] = to_json(rec.reduction->sheaf);
    j["via_r1"] = rec.reduction->via_r1;
  }
  j["h"] = to_json(rec.h[i]);
  j["chi"] = rec.chi;
  return j;
}

inline json table_row(const SurfCert& sc, int i) {
  json terms = json::array();
  for (const auto& rec : sc.terms) terms.push_back(to_json(rec, i));
  return {{"i", i}, {"n", sc.n}, {"h", to_json(sc.h[i])}, {"chi", sc.chi}, {"terms", terms}};
}

/// Schema: {params, a, b, [splitting,] rows: [{i, n, h:{kind,lo,hi}, chi, terms[]}]}, rows ordered by (i, n).
inline json table_json(const SurfaceParams& params, const std::vector<SurfCert>& cells,
                       const std::vector<int>& degrees) {
  json rows = json::array();
  for (int i : degrees)
    for (const auto& sc : cells) rows.push_back(table_row(sc, i));
  const Polarization pol = cells.empty() ? Polarization{} : cells.front().pol;
  json out = {{"params", to_json(params)}, {"a", pol.a}, {"b", pol.b}};
  if (!cells.empty() && cells.front().split != Splitting::Lemma)
    out["splitting"] = to_string(cells.front().split);
  out["rows"] = rows;
  return out;
}

inline void write_table_csv(std::ostream& os, const std::vector<SurfCert>& cells,
                            const std::vector<int>& degrees) {
  os << "i,n,kind,lo,hi,chi\n";
  for (int i : degrees)
    for (const auto& sc : cells) {
      const Cert& c = sc.h[i];
      os << i << ',' << sc.n << ',' << to_string(c.kind()) << ',' << c.lo() << ',';
      if (c.hi()) os << *c.hi();
      os << ',' << sc.chi << '\n';
    }
}

inline json to_json(const LocalCohReport& rep) {
  json pieces = json::object();
  for (const auto& [key, cert] : rep.pieces)
    pieces[std::to_string(key.first) + "," + std::to_string(key.second)] = to_json(cert);
  return {{"dimR", rep.dimR}, {"pieces", pieces}};
}

inline json to_json(const TheoremCheck& c) {
  json j = {{"theorem", c.theorem}, {"i", c.degree}, {"n", c.n}, {"claim", c.claim},
            {"engine", to_json(c.engine)}, {"status", to_string(c.status)}};
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

}  // namespace raynaud
