#pragma once

// Per-divisor analysis: discovery, claim checks against the paper table, and
// stable JSON / text serialization.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "theodorus/claims.hpp"
#include "theodorus/discovery.hpp"
#include "theodorus/error.hpp"
#include "theodorus/quadratic.hpp"
#include "theodorus/rotation.hpp"
#include "theodorus/spiral.hpp"

namespace theodorus {

enum class ClaimStatus { Matched, Mismatched, KnownDiscrepancy, NoPaperData };

inline const char* status_name(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Matched:
      return "matched";
    case ClaimStatus::Mismatched:
      return "mismatched";
    case ClaimStatus::KnownDiscrepancy:
      return "known-discrepancy";
    case ClaimStatus::NoPaperData:
      break;
  }
  return "no-paper-data";
}

inline ClaimStatus status_from_name(const std::string& s) {
  for (ClaimStatus c : {ClaimStatus::Matched, ClaimStatus::Mismatched,
                        ClaimStatus::KnownDiscrepancy, ClaimStatus::NoPaperData}) {
    if (s == status_name(c)) return c;
  }
  throw Error("unknown claim status '" + s + "'");
}

struct ClaimRow {
  std::string id;
  std::string figure;
  std::string expected;
  std::string measured;
  ClaimStatus status = ClaimStatus::NoPaperData;
  std::string note;

  friend bool operator==(const ClaimRow&, const ClaimRow&) = default;
};

struct SystemRecord {
  std::string label;
  Rotation rotation = Rotation::Indeterminate;
  double anchor_deg = 0.0;
  double reference_radius = 0.0;
  std::vector<HalfIntQuadratic> arms;
  HalfIntQuadratic exemplary;

  friend bool operator==(const SystemRecord&, const SystemRecord&) = default;
};

struct DirectionRecord {
  Rotation rotation = Rotation::Indeterminate;
  std::int64_t A = 0;
  std::size_t system_count = 0;
  std::optional<Spacing> spacing;
  double identity_spacing_deg = 0.0;
  std::vector<SymmetricPair> pairs;
};

struct AxisRecord {
  std::string first;
  std::string second;
  Index from = 0;
  Index to = 0;
  AxisSymmetry result;
  double chord_deg = 0.0;
  double axis_vs_chord_deg = 0.0;
};

struct PaperPolyRecord {
  std::string label;
  std::string text;
  std::string figure;
  HalfIntQuadratic poly;
  bool divisible = false;
  std::int64_t second_differential = 0;
  std::int64_t paper_second_differential = 0;
  Rotation rotation = Rotation::Indeterminate;
  double mean_drift = 0.0;
  bool discordant = false;
  std::optional<HalfIntQuadratic> discovered_as;  // innermost-indexed form
};

struct DivisorReport {
  std::int64_t divisor = 0;
  bool paper_data = false;
  std::string figure;
  DiscoveryParams params;
  std::vector<Family> families;
  DiscoveryStats stats;
  std::vector<SystemRecord> systems;
  std::vector<DirectionRecord> directions;
  std::optional<AxisRecord> axis;
  std::vector<HalfIntQuadratic> transitional;
  std::vector<PaperPolyRecord> polynomials;
  std::vector<ClaimRow> claims;

  std::size_t count(ClaimStatus s) const {
    return static_cast<std::size_t>(std::count_if(
        claims.begin(), claims.end(), [&](const ClaimRow& c) { return c.status == s; }));
  }
  bool all_matched() const { return count(ClaimStatus::Mismatched) == 0; }
};

namespace detail {

inline std::string fmt(double v, int decimals = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

inline std::string label_for(const std::vector<ArmSystem>& systems, const HalfIntQuadratic& q) {
  for (const auto& s : systems) {
    for (const auto& a : s.arms) {
      if (a.poly == q) return s.label;
    }
  }
  return "";
}

}  // namespace detail

/// Relative tolerance on spacing claims.
inline constexpr double kSpacingTolerance = 0.10;
/// Tolerance of the fitted mirror axis against the paper's chord.
inline constexpr double kAxisChordToleranceDeg = 10.0;

/// Runs discovery for d and checks every paper claim for d (if any).
inline DivisorReport analyze_divisor(const Spiral& spiral, std::int64_t d,
                                     const DiscoveryParams& params = {}) {
  const Discovery disc = discover(spiral, d, params);
  DivisorReport rep;
  rep.divisor = d;
  rep.params = params;
  rep.families = disc.families;
  rep.stats = disc.stats;
  rep.transitional = disc.transitional;

  for (const ArmSystem& s : disc.systems) {
    SystemRecord sr{s.label, s.rotation, to_degrees(s.anchor_angle), s.reference_radius, {},
                    exemplary_arm(s).poly};
    for (const Arm& a : s.arms) sr.arms.push_back(a.poly);
    rep.systems.push_back(std::move(sr));
  }

  for (const Family& fam : disc.families) {
    DirectionRecord dr;
    dr.rotation = fam.side;
    dr.A = fam.A;
    const auto group = systems_with(disc.systems, fam.side);
    dr.system_count = group.size();
    if (group.size() >= 2) dr.spacing = system_spacing(group);
    dr.identity_spacing_deg = identity_spacing_deg(d, fam.A);
    dr.pairs = point_symmetry_pairs(group, params.pair_tol_deg);
    rep.directions.push_back(std::move(dr));
  }

  const PaperDivisor* pd = paper_claims().find(d);
  if (!pd) {
    rep.claims.push_back({"paper.tables", "", "", "", ClaimStatus::NoPaperData,
                          "no paper data for this divisor; discovery only"});
    return rep;
  }
  rep.paper_data = true;
  rep.figure = pd->figure;
  auto add = [&](std::string id, std::string expected, std::string measured, bool ok,
                 bool flagged, std::string note = "") {
    ClaimStatus st = ok ? ClaimStatus::Matched
                        : (flagged ? ClaimStatus::KnownDiscrepancy : ClaimStatus::Mismatched);
    rep.claims.push_back({std::move(id), pd->figure, std::move(expected), std::move(measured), st,
                          std::move(note)});
  };

  for (const PaperPolynomial& pp : paper_claims().polynomials_for(d)) {
    PaperPolyRecord r;
    r.label = pp.label;
    r.text = pp.text;
    r.figure = pp.figure;
    r.poly = pp.poly;
    r.divisible = divisible_by(pp.poly, d);
    r.second_differential = second_differential(pp.poly);
    r.paper_second_differential = pp.second_differential;
    r.mean_drift = mean_drift(spiral, pp.poly, params.rotation_range);
    r.rotation = rotation_of(spiral, pp.poly, params.rotation_range, params.drift_epsilon_rad);
    r.discordant = is_discordant(pp);
    if (const Arm* a = find_arm(disc, pp.poly)) r.discovered_as = a->poly;

    const std::string id = "polynomial." + pp.label;
    add(id + ".divisible", "true", r.divisible ? "true" : "false", r.divisible, false);
    add(id + ".second_differential", std::to_string(pp.second_differential),
        std::to_string(r.second_differential), r.second_differential == pp.second_differential,
        false);
    add(id + ".rotation", pp.label.substr(0, 1), label_of(r.rotation),
        r.rotation == pp.rotation(), r.discordant,
        r.discordant ? "second differential lies on the other side of 2pi^2" : "");
    std::string where = "not found";
    if (r.discovered_as) {
      where = display(*r.discovered_as);
      const std::string sys = detail::label_for(disc.systems, *r.discovered_as);
      where += sys.empty() ? " (outside systems)" : " in " + sys;
    }
    add(id + ".discovered", "arm of " + pp.text, where, r.discovered_as.has_value(), false);
    rep.polynomials.push_back(std::move(r));
  }

  for (Rotation rot : {Rotation::Negative, Rotation::Positive}) {
    const std::string rl = label_of(rot);
    const bool flagged = is_discordant(*pd, rot);
    const std::string why = flagged ? "paper direction uses a second differential on the other "
                                      "side of 2pi^2"
                                    : "";
    const DirectionRecord* dr = nullptr;
    for (const auto& x : rep.directions) {
      if (x.rotation == rot) dr = &x;
    }
    const std::int64_t count = pd->systems.at(rot);
    const std::int64_t diff = pd->second_differential.at(rot);
    add("systems." + rl + ".identity", std::to_string(diff),
        std::to_string(count) + " x " + std::to_string(d) + " = " + std::to_string(count * d),
        count * d == diff, false, "count x divisor = 2. Differential in the paper table");
    const std::size_t measured = dr ? dr->system_count : 0;
    add("systems." + rl + ".count", std::to_string(count), std::to_string(measured),
        static_cast<std::int64_t>(measured) == count, flagged, why);

    if (auto it = pd->spacing_deg.find(rot); it != pd->spacing_deg.end()) {
      const bool have = dr && dr->spacing;
      const double m = have ? dr->spacing->mean_deg : 0.0;
      add("spacing." + rl, detail::fmt(it->second) + " deg +-10%",
          have ? detail::fmt(m) + " deg" : "fewer than 2 systems",
          have && std::fabs(m - it->second) <= kSpacingTolerance * it->second, flagged, why);
    }
    if (auto it = pd->pairs.find(rot); it != pd->pairs.end()) {
      const std::size_t got = dr ? dr->pairs.size() : 0;
      add("pairs." + rl, std::to_string(it->second.size()) + " point-symmetric pairs",
          std::to_string(got), got == it->second.size(), flagged, why);
    }
  }

  if (pd->axis) {
    const AxisClaim& ac = *pd->axis;
    const ArmSystem* a = nullptr;
    const ArmSystem* b = nullptr;
    for (const auto& s : disc.systems) {
      if (s.label == ac.first) a = &s;
      if (s.label == ac.second) b = &s;
    }
    AxisRecord ar;
    ar.first = ac.first;
    ar.second = ac.second;
    ar.from = ac.from;
    ar.to = ac.to;
    ar.chord_deg = to_degrees(chord_direction(spiral, ac.from, ac.to));
    bool ok = false;
    std::string measured = "systems not found";
    if (a && b) {
      ar.result = axis_symmetry(*a, *b, params.axis_tol_deg);
      ar.axis_vs_chord_deg =
          line_angle_difference_deg(ar.result.axis_angle, to_radians(ar.chord_deg));
      ok = ar.result.symmetric && ar.axis_vs_chord_deg <= kAxisChordToleranceDeg;
      measured = std::string(ar.result.symmetric ? "symmetric" : "not symmetric") +
                 " (max residual " + detail::fmt(ar.result.max_residual_deg) + " deg), axis " +
                 detail::fmt(to_degrees(ar.result.axis_angle)) + " deg";
    }
    add("axis." + ac.first + "-" + ac.second,
        "symmetric, axis within 10 deg of chord " + detail::fmt(ar.chord_deg) + " deg", measured,
        ok, false);
    rep.axis = ar;
  }
  return rep;
}

/// Paper-table verification; d must be one of the paper's divisors.
inline DivisorReport verify_paper_table(const Spiral& spiral, std::int64_t d,
                                        const DiscoveryParams& params = {}) {
  if (!paper_claims().find(d)) {
    throw UnknownDivisor("no paper data for divisor " + std::to_string(d));
  }
  return analyze_divisor(spiral, d, params);
}

inline std::vector<std::int64_t> paper_divisors() {
  std::vector<std::int64_t> out;
  for (const auto& pd : paper_claims().divisors) out.push_back(pd.divisor);
  return out;
}

// ---- JSON ---------------------------------------------------------------

using Json = nlohmann::json;

inline Json poly_json(const HalfIntQuadratic& q, std::int64_t d, const std::string& label) {
  return Json{{"A", q.A}, {"B", q.B}, {"C", q.C}, {"divisor", d}, {"label", label}};
}

inline HalfIntQuadratic poly_from_json(const Json& j) {
  return HalfIntQuadratic::make(j.at("A").get<std::int64_t>(), j.at("B").get<std::int64_t>(),
                                j.at("C").get<std::int64_t>());
}

inline Json params_json(const DiscoveryParams& p) {
  return Json{{"n_max", p.n_max},
              {"angular_tol_rad", p.angular_tol_rad},
              {"min_chain_len", p.min_chain_len},
              {"gap_deg", p.gap_deg},
              {"pair_tol_deg", p.pair_tol_deg},
              {"axis_tol_deg", p.axis_tol_deg},
              {"drift_epsilon_rad", p.drift_epsilon_rad},
              {"rotation_range", Json::array({p.rotation_range.lo, p.rotation_range.hi})},
              {"settle_winding", p.settle_winding},
              {"centre_bound", p.centre_bound}};
}

inline DiscoveryParams params_from_json(const Json& j) {
  DiscoveryParams p;
  p.n_max = j.at("n_max").get<Index>();
  p.angular_tol_rad = j.at("angular_tol_rad").get<double>();
  p.min_chain_len = j.at("min_chain_len").get<std::size_t>();
  p.gap_deg = j.at("gap_deg").get<double>();
  p.pair_tol_deg = j.at("pair_tol_deg").get<double>();
  p.axis_tol_deg = j.at("axis_tol_deg").get<double>();
  p.drift_epsilon_rad = j.at("drift_epsilon_rad").get<double>();
  p.rotation_range = {j.at("rotation_range").at(0).get<std::int64_t>(),
                      j.at("rotation_range").at(1).get<std::int64_t>()};
  p.settle_winding = j.at("settle_winding").get<std::int64_t>();
  p.centre_bound = j.at("centre_bound").get<double>();
  return p;
}

inline Json report_json(const DivisorReport& r) {
  const std::int64_t d = r.divisor;
  Json families = Json::array();
  for (const auto& f : r.families) families.push_back({{"A", f.A}, {"side", label_of(f.side)}});

  Json systems = Json::array();
  for (const auto& s : r.systems) {
    Json arms = Json::array();
    for (const auto& q : s.arms) arms.push_back(poly_json(q, d, s.label));
    systems.push_back({{"label", s.label},
                       {"rotation", label_of(s.rotation)},
                       {"anchor_deg", s.anchor_deg},
                       {"reference_radius", s.reference_radius},
                       {"arms", arms},
                       {"exemplary", poly_json(s.exemplary, d, s.label)},
                       {"exemplary_display", display(s.exemplary)}});
  }

  Json directions = Json::array();
  for (const auto& dr : r.directions) {
    Json pairs = Json::array();
    for (const auto& p : dr.pairs) pairs.push_back({{"first", p.first}, {"second", p.second},
                                                    {"deviation_deg", p.deviation_deg}});
    Json spacing = nullptr;
    if (dr.spacing) {
      spacing = {{"mean_deg", dr.spacing->mean_deg},
                 {"min_gap_deg", dr.spacing->min_gap_deg},
                 {"max_gap_deg", dr.spacing->max_gap_deg}};
    }
    directions.push_back({{"rotation", label_of(dr.rotation)},
                          {"A", dr.A},
                          {"system_count", dr.system_count},
                          {"spacing", spacing},
                          {"identity_spacing_deg", dr.identity_spacing_deg},
                          {"pairs", pairs}});
  }

  Json axis = nullptr;
  if (r.axis) {
    const auto& a = *r.axis;
    axis = {{"first", a.first},
            {"second", a.second},
            {"from", a.from},
            {"to", a.to},
            {"radius", a.result.radius},
            {"symmetric", a.result.symmetric},
            {"axis_deg", to_degrees(a.result.axis_angle)},
            {"max_residual_deg", a.result.max_residual_deg},
            {"chord_deg", a.chord_deg},
            {"axis_vs_chord_deg", a.axis_vs_chord_deg}};
  }

  Json transitional = Json::array();
  for (const auto& q : r.transitional) transitional.push_back(poly_json(q, d, "transitional"));

  Json polys = Json::array();
  for (const auto& p : r.polynomials) {
    polys.push_back({{"polynomial", poly_json(p.poly, d, p.label)},
                     {"text", p.text},
                     {"figure", p.figure},
                     {"divisible", p.divisible},
                     {"second_differential", p.second_differential},
                     {"paper_second_differential", p.paper_second_differential},
                     {"rotation", label_of(p.rotation)},
                     {"mean_drift_rad", p.mean_drift},
                     {"discordant", p.discordant},
                     {"discovered_as", p.discovered_as ? poly_json(*p.discovered_as, d, p.label)
                                                       : Json(nullptr)}});
  }

  Json claims = Json::array();
  for (const auto& c : r.claims) {
    claims.push_back({{"id", c.id},
                      {"figure", c.figure},
                      {"expected", c.expected},
                      {"measured", c.measured},
                      {"status", status_name(c.status)},
                      {"note", c.note}});
  }

  return Json{{"divisor", d},
              {"paper_data", r.paper_data},
              {"figure", r.figure},
              {"parameters", params_json(r.params)},
              {"families", families},
              {"stats", {{"points", r.stats.points},
                         {"chains", r.stats.chains},
                         {"fitted", r.stats.fitted},
                         {"outside_centre", r.stats.outside_centre},
                         {"transitional", r.stats.transitional}}},
              {"systems", systems},
              {"directions", directions},
              {"axis_symmetry", axis},
              {"transitional", transitional},
              {"polynomials", polys},
              {"claims", claims},
              {"summary", {{"matched", r.count(ClaimStatus::Matched)},
                           {"mismatched", r.count(ClaimStatus::Mismatched)},
                           {"known_discrepancy", r.count(ClaimStatus::KnownDiscrepancy)},
                           {"no_paper_data", r.count(ClaimStatus::NoPaperData)}}}};
}

inline DivisorReport report_from_json(const Json& j) {
  DivisorReport r;
  r.divisor = j.at("divisor").get<std::int64_t>();
  r.paper_data = j.at("paper_data").get<bool>();
  r.figure = j.at("figure").get<std::string>();
  r.params = params_from_json(j.at("parameters"));
  for (const auto& f : j.at("families")) {
    r.families.push_back({f.at("A").get<std::int64_t>(),
                          rotation_from_label(f.at("side").get<std::string>())});
  }
  const auto& st = j.at("stats");
  r.stats = {st.at("points").get<std::size_t>(), st.at("chains").get<std::size_t>(),
             st.at("fitted").get<std::size_t>(), st.at("outside_centre").get<std::size_t>(),
             st.at("transitional").get<std::size_t>()};
  for (const auto& s : j.at("systems")) {
    SystemRecord sr;
    sr.label = s.at("label").get<std::string>();
    sr.rotation = rotation_from_label(s.at("rotation").get<std::string>());
    sr.anchor_deg = s.at("anchor_deg").get<double>();
    sr.reference_radius = s.at("reference_radius").get<double>();
    for (const auto& a : s.at("arms")) sr.arms.push_back(poly_from_json(a));
    sr.exemplary = poly_from_json(s.at("exemplary"));
    r.systems.push_back(std::move(sr));
  }
  for (const auto& dj : j.at("directions")) {
    DirectionRecord dr;
    dr.rotation = rotation_from_label(dj.at("rotation").get<std::string>());
    dr.A = dj.at("A").get<std::int64_t>();
    dr.system_count = dj.at("system_count").get<std::size_t>();
    if (!dj.at("spacing").is_null()) {
      const auto& sp = dj.at("spacing");
      dr.spacing = Spacing{sp.at("mean_deg").get<double>(), sp.at("min_gap_deg").get<double>(),
                           sp.at("max_gap_deg").get<double>()};
    }
    dr.identity_spacing_deg = dj.at("identity_spacing_deg").get<double>();
    for (const auto& p : dj.at("pairs")) {
      dr.pairs.push_back({p.at("first").get<std::string>(), p.at("second").get<std::string>(),
                          p.at("deviation_deg").get<double>()});
    }
    r.directions.push_back(std::move(dr));
  }
  if (!j.at("axis_symmetry").is_null()) {
    const auto& a = j.at("axis_symmetry");
    AxisRecord ar;
    ar.first = a.at("first").get<std::string>();
    ar.second = a.at("second").get<std::string>();
    ar.from = a.at("from").get<Index>();
    ar.to = a.at("to").get<Index>();
    ar.result.radius = a.at("radius").get<double>();
    ar.result.symmetric = a.at("symmetric").get<bool>();
    ar.result.axis_angle = to_radians(a.at("axis_deg").get<double>());
    ar.result.max_residual_deg = a.at("max_residual_deg").get<double>();
    ar.chord_deg = a.at("chord_deg").get<double>();
    ar.axis_vs_chord_deg = a.at("axis_vs_chord_deg").get<double>();
    r.axis = ar;
  }
  for (const auto& q : j.at("transitional")) r.transitional.push_back(poly_from_json(q));
  for (const auto& p : j.at("polynomials")) {
    PaperPolyRecord pr;
    pr.poly = poly_from_json(p.at("polynomial"));
    pr.label = p.at("polynomial").at("label").get<std::string>();
    pr.text = p.at("text").get<std::string>();
    pr.figure = p.at("figure").get<std::string>();
    pr.divisible = p.at("divisible").get<bool>();
    pr.second_differential = p.at("second_differential").get<std::int64_t>();
    pr.paper_second_differential = p.at("paper_second_differential").get<std::int64_t>();
    pr.rotation = rotation_from_label(p.at("rotation").get<std::string>());
    pr.mean_drift = p.at("mean_drift_rad").get<double>();
    pr.discordant = p.at("discordant").get<bool>();
    if (!p.at("discovered_as").is_null()) pr.discovered_as = poly_from_json(p.at("discovered_as"));
    r.polynomials.push_back(std::move(pr));
  }
  for (const auto& c : j.at("claims")) {
    r.claims.push_back({c.at("id").get<std::string>(), c.at("figure").get<std::string>(),
                        c.at("expected").get<std::string>(), c.at("measured").get<std::string>(),
                        status_from_name(c.at("status").get<std::string>()),
                        c.at("note").get<std::string>()});
  }
  return r;
}

enum class ReportFormat { Json, Text };

namespace detail {

inline std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

}  // namespace detail

inline std::string report_text(const DivisorReport& r) {
  using detail::fmt;
  std::string out = "Divisor " + std::to_string(r.divisor);
  out += r.paper_data ? " (" + r.figure + ")\n" : " (no paper data)\n";
  out += "n_max " + std::to_string(r.params.n_max) + ", " + std::to_string(r.stats.points) +
         " multiples past winding " + std::to_string(r.params.settle_winding) + ", " +
         std::to_string(r.stats.chains) + " chains, " + std::to_string(r.stats.fitted) +
         " fitted arms, " + std::to_string(r.stats.outside_centre) + " off-centre, " +
         std::to_string(r.stats.transitional) + " transitional\n\n";

  std::vector<std::vector<std::string>> dirs{
      {"direction", "A", "systems", "spacing", "360d/A", "pairs"}};
  for (const auto& d : r.directions) {
    std::string pairs;
    for (const auto& p : d.pairs) pairs += (pairs.empty() ? "" : " ") + p.first + "/" + p.second;
    dirs.push_back({label_of(d.rotation), std::to_string(d.A), std::to_string(d.system_count),
                    d.spacing ? fmt(d.spacing->mean_deg) : "-", fmt(d.identity_spacing_deg),
                    pairs.empty() ? "-" : pairs});
  }
  out += detail::table(dirs) + "\n";

  std::vector<std::vector<std::string>> sys{{"system", "anchor_deg", "arms", "exemplary arm"}};
  for (const auto& s : r.systems) {
    sys.push_back({s.label, fmt(s.anchor_deg), std::to_string(s.arms.size()), display(s.exemplary)});
  }
  out += detail::table(sys) + "\n";

  if (!r.polynomials.empty()) {
    std::vector<std::vector<std::string>> pr{
        {"paper", "polynomial", "div", "2.diff", "drift", "rot", "discovered as"}};
    for (const auto& p : r.polynomials) {
      pr.push_back({p.label, p.text, p.divisible ? "yes" : "no",
                    std::to_string(p.second_differential), fmt(p.mean_drift, 4),
                    std::string(label_of(p.rotation)) + (p.discordant ? " *" : ""),
                    p.discovered_as ? display(*p.discovered_as) : "-"});
    }
    out += detail::table(pr) + "\n";
  }

  std::vector<std::vector<std::string>> cl{{"claim", "expected", "measured", "status"}};
  for (const auto& c : r.claims) cl.push_back({c.id, c.expected, c.measured, status_name(c.status)});
  out += detail::table(cl);

  std::vector<const ClaimRow*> known;
  for (const auto& c : r.claims) {
    if (c.status == ClaimStatus::KnownDiscrepancy) known.push_back(&c);
  }
  if (!known.empty()) {
    out += "\nknown discrepancies:\n";
    for (const auto* c : known) out += "  " + c->id + ": " + c->note + "\n";
  }
  out += "\nmatched " + std::to_string(r.count(ClaimStatus::Matched)) + ", mismatched " +
         std::to_string(r.count(ClaimStatus::Mismatched)) + ", known discrepancies " +
         std::to_string(r.count(ClaimStatus::KnownDiscrepancy)) + "\n";
  return out;
}

inline std::string export_report(const DivisorReport& r, ReportFormat f) {
  if (f == ReportFormat::Text) return report_text(r);
  return report_json(r).dump(2) + "\n";
}

}  // namespace theodorus
