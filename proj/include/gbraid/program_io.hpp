#pragma once

// JSON form of a MoveProgram:
//   {"n": 4, "initial": [["0","1"], ...],
//    "moves": [{"type":"line","strand":4,"to":["-1/2","0"]}, {"type":"twist","turns":1}],
//    "closed": true}
// Rationals are strings "p/q" or integer strings. "initial" defaults to the
// regular rational configuration.

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "gbraid/error.hpp"
#include "gbraid/geometry.hpp"

namespace gbraid {

namespace detail {

inline Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw Error(ErrorCode::ParseError, "rational must be a string \"p/q\" or an integer, got " + j.dump());
}

inline RationalPoint point_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2) throw Error(ErrorCode::ParseError, "point must be [x, y], got " + j.dump());
  return {rational_from_json(j[0]), rational_from_json(j[1])};
}

inline nlohmann::json point_to_json(const RationalPoint& p) { return nlohmann::json::array({to_string(p.x), to_string(p.y)}); }

}  // namespace detail

inline MoveProgram program_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    require_strand_count(n);
    std::optional<Configuration> initial;
    if (j.contains("initial")) {
      std::vector<RationalPoint> pts;
      for (const auto& p : j.at("initial")) pts.push_back(detail::point_from_json(p));
      initial.emplace(n, std::move(pts));
    } else {
      initial = regular_rational_configuration(n);
    }
    std::vector<Move> moves;
    for (const auto& m : j.value("moves", nlohmann::json::array())) {
      const auto type = m.at("type").get<std::string>();
      if (type == "line") {
        moves.push_back(LinearMove{m.at("strand").get<int>(), detail::point_from_json(m.at("to"))});
      } else if (type == "twist") {
        moves.push_back(FullTwistMove{m.at("turns").get<int>()});
      } else {
        throw Error(ErrorCode::ParseError, "unknown move type '" + type + "'");
      }
    }
    return {*initial, std::move(moves), j.value("closed", false)};
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("program JSON: ") + e.what());
  }
}

inline MoveProgram parse_program(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("program JSON: ") + e.what());
  }
  return program_from_json(j);
}

inline nlohmann::json program_to_json(const MoveProgram& p) {
  nlohmann::json initial = nlohmann::json::array();
  for (const auto& pt : p.initial.points) initial.push_back(detail::point_to_json(pt));
  nlohmann::json moves = nlohmann::json::array();
  for (const auto& m : p.moves) {
    if (const auto* lm = std::get_if<LinearMove>(&m)) {
      moves.push_back({{"type", "line"}, {"strand", lm->strand}, {"to", detail::point_to_json(lm->target)}});
    } else {
      moves.push_back({{"type", "twist"}, {"turns", std::get<FullTwistMove>(m).turns}});
    }
  }
  return {{"n", p.n()}, {"initial", initial}, {"moves", moves}, {"closed", p.closed}};
}

}  // namespace gbraid
