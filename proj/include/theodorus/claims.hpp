#pragma once

// Typed view of the embedded paper-claims table (data/paper_claims.json).

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "theodorus/error.hpp"
#include "theodorus/quadratic.hpp"
#include "theodorus/rotation.hpp"
#include "theodorus/paper_claims_data.hpp"

namespace theodorus {

struct PaperPolynomial {
  std::int64_t divisor = 0;
  std::string label;  // P1, N2, ...
  std::string text;   // as printed
  HalfIntQuadratic poly;
  std::int64_t second_differential = 0;
  std::string figure;

  Rotation rotation() const { return rotation_from_label(label.substr(0, 1)); }
};

struct AxisClaim {
  std::string first;
  std::string second;
  Index from = 0;  // the axis runs from vertex(from) to vertex(to)
  Index to = 0;
};

struct PaperDivisor {
  std::int64_t divisor = 0;
  std::string figure;
  std::map<Rotation, std::int64_t> systems;
  std::map<Rotation, std::int64_t> second_differential;
  std::map<Rotation, double> spacing_deg;
  std::map<Rotation, std::vector<std::pair<std::string, std::string>>> pairs;
  std::vector<Rotation> no_pairs;
  std::optional<AxisClaim> axis;
};

struct PaperClaims {
  std::vector<PaperPolynomial> polynomials;
  std::vector<PaperDivisor> divisors;

  const PaperDivisor* find(std::int64_t d) const {
    for (const auto& pd : divisors) {
      if (pd.divisor == d) return &pd;
    }
    return nullptr;
  }

  std::vector<PaperPolynomial> polynomials_for(std::int64_t d) const {
    std::vector<PaperPolynomial> out;
    for (const auto& p : polynomials) {
      if (p.divisor == d) out.push_back(p);
    }
    return out;
  }
};

inline PaperClaims parse_claims(std::string_view text) {
  using nlohmann::json;
  PaperClaims out;
  try {
    const json doc = json::parse(text);
    for (const auto& p : doc.at("polynomials")) {
      PaperPolynomial pp;
      pp.divisor = p.at("divisor").get<std::int64_t>();
      pp.label = p.at("label").get<std::string>();
      pp.text = p.at("text").get<std::string>();
      pp.poly = HalfIntQuadratic::make(p.at("A").get<std::int64_t>(), p.at("B").get<std::int64_t>(),
                                       p.at("C").get<std::int64_t>());
      pp.second_differential = p.at("second_differential").get<std::int64_t>();
      pp.figure = p.at("figure").get<std::string>();
      out.polynomials.push_back(std::move(pp));
    }
    auto by_rotation = [](const json& obj, auto convert) {
      using V = decltype(convert(obj));
      std::map<Rotation, V> m;
      for (auto it = obj.begin(); it != obj.end(); ++it) {
        m[rotation_from_label(it.key())] = convert(it.value());
      }
      return m;
    };
    for (const auto& d : doc.at("divisors")) {
      PaperDivisor pd;
      pd.divisor = d.at("divisor").get<std::int64_t>();
      pd.figure = d.at("figure").get<std::string>();
      pd.systems = by_rotation(d.at("systems"), [](const json& v) { return v.get<std::int64_t>(); });
      pd.second_differential =
          by_rotation(d.at("second_differential"), [](const json& v) { return v.get<std::int64_t>(); });
      pd.spacing_deg = by_rotation(d.at("spacing_deg"), [](const json& v) { return v.get<double>(); });
      pd.pairs = by_rotation(d.at("point_symmetric_pairs"), [](const json& v) {
        std::vector<std::pair<std::string, std::string>> ps;
        for (const auto& pr : v) ps.emplace_back(pr.at(0).get<std::string>(), pr.at(1).get<std::string>());
        return ps;
      });
      for (const auto& r : d.at("no_pairs")) pd.no_pairs.push_back(rotation_from_label(r.get<std::string>()));
      if (d.contains("axis_symmetry")) {
        const auto& a = d.at("axis_symmetry");
        pd.axis = AxisClaim{a.at("systems").at(0).get<std::string>(),
                            a.at("systems").at(1).get<std::string>(), a.at("from").get<Index>(),
                            a.at("to").get<Index>()};
      }
      out.divisors.push_back(std::move(pd));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed claims table: ") + e.what());
  }
  return out;
}

/// The table shipped with the library, parsed once.
inline const PaperClaims& paper_claims() {
  static const PaperClaims claims = parse_claims(kPaperClaimsJson);
  return claims;
}

/// The paper's label disagrees with the side of 2pi^2 its second
/// differential lies on, so no drift-based classification can reproduce it.
inline bool is_discordant(const PaperPolynomial& p) {
  return asymptotic_rotation(p.poly.A) != p.rotation();
}

/// Same test for a whole direction of a divisor section.
inline bool is_discordant(const PaperDivisor& pd, Rotation r) {
  const auto it = pd.second_differential.find(r);
  return it != pd.second_differential.end() && asymptotic_rotation(it->second) != r;
}

}  // namespace theodorus
