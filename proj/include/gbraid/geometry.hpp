#pragma once

// Exact rational plane geometry for pure braids given as piecewise-linear,
// one-strand-at-a-time motions. Collinearity conditions are linear in the
// time parameter of each move, so every event time is an exact rational.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gbraid/error.hpp"
#include "gbraid/group_core.hpp"
#include "gbraid/index_state.hpp"

namespace gbraid {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Accepts "p/q", "-p/q" or an integer string.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&] { return Error(ErrorCode::ParseError, "'" + std::string(text) + "' is not a rational p/q"); };
  auto parse_int = [&](std::string_view part, bool allow_sign) {
    std::size_t start = 0;
    if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) start = 1;
    if (start >= part.size()) throw fail();
    for (std::size_t i = start; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) throw fail();
    return BigInt(std::string(part[0] == '+' ? part.substr(1) : part));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, true));
  const BigInt den = parse_int(text.substr(slash + 1), false);
  if (den == 0) throw fail();
  return Rational(parse_int(text.substr(0, slash), true), den);
}

inline std::string to_string(const Rational& q) { return q.str(); }

struct RationalPoint {
  Rational x;
  Rational y;

  friend RationalPoint operator+(const RationalPoint& a, const RationalPoint& b) { return {a.x + b.x, a.y + b.y}; }
  friend RationalPoint operator-(const RationalPoint& a, const RationalPoint& b) { return {a.x - b.x, a.y - b.y}; }
  friend RationalPoint operator*(const Rational& s, const RationalPoint& p) { return {s * p.x, s * p.y}; }
  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

inline std::string to_string(const RationalPoint& p) { return "(" + to_string(p.x) + ", " + to_string(p.y) + ")"; }

inline Rational cross(const RationalPoint& u, const RationalPoint& v) { return u.x * v.y - u.y * v.x; }
inline Rational dot(const RationalPoint& u, const RationalPoint& v) { return u.x * v.x + u.y * v.y; }
inline RationalPoint rotate_quarter(const RationalPoint& v) { return {-v.y, v.x}; }

/// Sign of det(q - p, r - p): +1 counterclockwise, -1 clockwise, 0 collinear.
inline int orientation(const RationalPoint& p, const RationalPoint& q, const RationalPoint& r) {
  const Rational d = cross(q - p, r - p);
  return d > 0 ? 1 : (d < 0 ? -1 : 0);
}

struct Configuration {
  int n;
  std::vector<RationalPoint> points;  // points[s - 1] is strand s

  Configuration(int n_, std::vector<RationalPoint> pts) : n(n_), points(std::move(pts)) {
    require_strand_count(n);
    if (points.size() != static_cast<std::size_t>(n)) {
      throw Error(ErrorCode::InvalidProgram,
                  "configuration has " + std::to_string(points.size()) + " points for n=" + std::to_string(n));
    }
  }

  const RationalPoint& at(Strand s) const { return points.at(static_cast<std::size_t>(s - 1)); }
  RationalPoint& at(Strand s) { return points.at(static_cast<std::size_t>(s - 1)); }

  /// First collinear triple, if any.
  std::optional<GenTriple> degenerate_triple() const {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k)
          if (orientation(at(i), at(j), at(k)) == 0) return GenTriple(n, i, j, k);
    return std::nullopt;
  }

  bool is_generic() const { return !degenerate_triple().has_value(); }

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

/// Orientation signs of every sorted triple, as a triple-index state.
inline OrientationState orientation_state(const Configuration& c) {
  std::vector<std::int8_t> values(triple_count(c.n));
  for (int i = 1; i <= c.n; ++i)
    for (int j = i + 1; j <= c.n; ++j)
      for (int k = j + 1; k <= c.n; ++k) {
        const int o = orientation(c.at(i), c.at(j), c.at(k));
        if (o == 0) throw Error(ErrorCode::GenericityError, "configuration has collinear triple");
        values[triple_rank(i, j, k)] = static_cast<std::int8_t>(o);
      }
  return OrientationState(c.n, std::move(values));
}

/// Rational points on the unit circle in the cyclic order of the regular
/// n-gon exp(2 pi i j / n), j = 1..n. Points come from the tangent half-angle
/// parametrisation with t rounded to denominator `den`; `den` doubles until
/// every triple orients like initial_state(n).
inline Configuration regular_rational_configuration(int n) {
  require_strand_count(n);
  const auto target = initial_state(n);
  for (std::int64_t den = 8 * static_cast<std::int64_t>(n); den < (std::int64_t{1} << 40); den *= 2) {
    std::vector<RationalPoint> pts;
    for (int j = 1; j <= n; ++j) {
      if (j == n) {
        pts.push_back({Rational(1), Rational(0)});
      } else if (2 * j == n) {
        pts.push_back({Rational(-1), Rational(0)});
      } else {
        const double half = std::numbers::pi * j / n;
        const Rational t(BigInt(std::llround(std::tan(half) * static_cast<double>(den))), BigInt(den));
        const Rational tt = t * t;
        pts.push_back({(1 - tt) / (1 + tt), 2 * t / (1 + tt)});
      }
    }
    Configuration c(n, std::move(pts));
    if (c.is_generic() && orientation_state(c) == target) return c;
  }
  throw Error(ErrorCode::ConstructionFailure, "no rational regular configuration for n=" + std::to_string(n));
}

// ---------------------------------------------------------------------------
// Programs

struct LinearMove {
  Strand strand;
  RationalPoint target;
  friend bool operator==(const LinearMove&, const LinearMove&) = default;
};

/// Rigid rotation of all points about the origin by `turns` full turns.
struct FullTwistMove {
  int turns;
  friend bool operator==(const FullTwistMove&, const FullTwistMove&) = default;
};

using Move = std::variant<LinearMove, FullTwistMove>;

struct MoveProgram {
  Configuration initial;
  std::vector<Move> moves;
  bool closed = false;

  int n() const noexcept { return initial.n; }
  friend bool operator==(const MoveProgram&, const MoveProgram&) = default;
};

struct CollinearityEvent {
  std::size_t move_index = 0;
  Rational t;  // strictly inside (0, 1) within the move
  GenTriple triple;
  Strand central;
};

inline std::string to_string(const CollinearityEvent& e) {
  return "move " + std::to_string(e.move_index) + " t=" + to_string(e.t) + " " + to_string(e.triple) + " central " +
         std::to_string(e.central);
}

struct CompileOutput {
  GWord word;
  std::vector<CollinearityEvent> events;
  long twist_turns = 0;
  Configuration final_config;
};

namespace detail {

inline void require_strand(int n, Strand s) {
  if (s < 1 || s > n) {
    throw Error(ErrorCode::InvalidProgram, "strand " + std::to_string(s) + " outside 1.." + std::to_string(n));
  }
}

inline bool concyclic_about_origin(const Configuration& c) {
  const Rational r0 = dot(c.points.front(), c.points.front());
  return std::all_of(c.points.begin(), c.points.end(), [&](const RationalPoint& p) { return dot(p, p) == r0; });
}

// Strand of {a, b, m} lying between the other two on their common line.
inline Strand middle_of(Strand a, const RationalPoint& pa, Strand b, const RationalPoint& pb, Strand m,
                        const RationalPoint& pm) {
  const RationalPoint dir = pb - pa;
  const Rational la = 0;
  const Rational lb = dot(dir, dir);
  const Rational lm = dot(pm - pa, dir);
  if ((la < lm && lm < lb) || (lb < lm && lm < la)) return m;
  if ((lm < la && la < lb) || (lb < la && la < lm)) return a;
  return b;
}

}  // namespace detail

/// Collinearity events while strand `s` moves straight from its position in
/// `c` to `target`. Rejects non-generic motions instead of perturbing them.
inline std::vector<CollinearityEvent> segment_events(const Configuration& c, Strand s, const RationalPoint& target) {
  detail::require_strand(c.n, s);
  if (auto bad = c.degenerate_triple()) {
    throw Error(ErrorCode::GenericityError, "configuration has collinear triple " + to_string(*bad));
  }
  const RationalPoint p0 = c.at(s);
  const RationalPoint d = target - p0;
  const Rational dd = dot(d, d);

  for (Strand q = 1; q <= c.n; ++q) {
    if (q == s || dd == 0) continue;
    const RationalPoint rel = c.at(q) - p0;
    if (cross(d, rel) == 0) {
      const Rational t = dot(rel, d) / dd;
      if (t > 0 && t <= 1) {
        throw Error(ErrorCode::GenericityError, "strand " + std::to_string(s) + " hits strand " + std::to_string(q) +
                                                    " at t=" + to_string(t));
      }
    }
  }

  std::vector<CollinearityEvent> events;
  for (Strand a = 1; a <= c.n; ++a) {
    if (a == s) continue;
    for (Strand b = a + 1; b <= c.n; ++b) {
      if (b == s) continue;
      const RationalPoint line = c.at(b) - c.at(a);
      const Rational slope = cross(line, d);
      if (slope == 0) continue;
      const Rational t = -cross(line, p0 - c.at(a)) / slope;
      if (t <= 0 || t > 1) continue;
      const GenTriple triple(c.n, s, a, b);
      if (t == 1) {
        throw Error(ErrorCode::GenericityError, "move of strand " + std::to_string(s) + " ends collinear on " +
                                                    to_string(triple));
      }
      const RationalPoint at_t = p0 + t * d;
      events.push_back({0, t, triple, detail::middle_of(a, c.at(a), b, c.at(b), s, at_t)});
    }
  }
  std::sort(events.begin(), events.end(), [](const auto& x, const auto& y) { return x.t < y.t; });
  for (std::size_t e = 1; e < events.size(); ++e) {
    if (events[e].t == events[e - 1].t) {
      throw Error(ErrorCode::GenericityError, "simultaneous events " + to_string(events[e - 1].triple) + " and " +
                                                  to_string(events[e].triple) + " at t=" + to_string(events[e].t));
    }
  }
  return events;
}

/// The homomorphism from pure braids to G_n^3: one letter per collinearity
/// event, in time order. Twist moves emit nothing (concyclic points are never
/// collinear) and only accumulate turns.
inline CompileOutput compile(const MoveProgram& p) {
  Configuration config = p.initial;
  if (auto bad = config.degenerate_triple()) {
    throw Error(ErrorCode::GenericityError, "initial configuration has collinear triple " + to_string(*bad));
  }
  std::vector<CollinearityEvent> events;
  long turns = 0;
  for (std::size_t idx = 0; idx < p.moves.size(); ++idx) {
    if (const auto* lm = std::get_if<LinearMove>(&p.moves[idx])) {
      auto seg = segment_events(config, lm->strand, lm->target);
      for (auto& e : seg) {
        e.move_index = idx;
        events.push_back(std::move(e));
      }
      config.at(lm->strand) = lm->target;
    } else {
      const auto& tw = std::get<FullTwistMove>(p.moves[idx]);
      if (tw.turns == 0) throw Error(ErrorCode::InvalidProgram, "twist move with zero turns");
      if (!detail::concyclic_about_origin(config)) {
        throw Error(ErrorCode::InvalidProgram,
                    "twist move " + std::to_string(idx) + " needs all points on one circle about the origin");
      }
      turns += tw.turns;
    }
  }
  if (p.closed && !(config == p.initial)) {
    throw Error(ErrorCode::NotClosed, "final configuration differs from the initial one");
  }
  std::vector<GenTriple> letters;
  letters.reserve(events.size());
  for (const auto& e : events) letters.push_back(e.triple);
  return {GWord(p.n(), std::move(letters)), std::move(events), turns, std::move(config)};
}

/// Configurations before each move and after the last one.
inline std::vector<Configuration> configurations(const MoveProgram& p) {
  std::vector<Configuration> out{p.initial};
  for (const auto& m : p.moves) {
    Configuration next = out.back();
    if (const auto* lm = std::get_if<LinearMove>(&m)) {
      detail::require_strand(p.n(), lm->strand);
      next.at(lm->strand) = lm->target;
    }
    out.push_back(std::move(next));
  }
  return out;
}

/// Winding of z_i - z_j about the origin. Counts signed crossings of the
/// horizontal axis by the difference path (each one a half turn) with a
/// half-open rule at vertices, then adds the twist turns. Exact and integral
/// for closed programs; for open ones it is the half-turn count against the
/// horizontal axis.
inline Rational geometric_linking(const MoveProgram& p, Strand i, Strand j) {
  detail::require_strand(p.n(), i);
  detail::require_strand(p.n(), j);
  if (i == j) throw Error(ErrorCode::BadTriple, "linking needs two distinct strands");
  const RationalPoint origin{0, 0};
  Configuration config = p.initial;
  long half_turns = 0;
  long turns = 0;
  auto diff = [&](const Configuration& c) { return c.at(i) - c.at(j); };
  if (diff(config) == origin) throw Error(ErrorCode::DegeneratePath, "strands coincide");
  for (const auto& m : p.moves) {
    if (const auto* tw = std::get_if<FullTwistMove>(&m)) {
      turns += tw->turns;
      continue;
    }
    const auto& lm = std::get<LinearMove>(m);
    detail::require_strand(p.n(), lm.strand);
    const RationalPoint from = diff(config);
    config.at(lm.strand) = lm.target;
    const RationalPoint to = diff(config);
    if (lm.strand != i && lm.strand != j) continue;
    const int o = orientation(from, to, origin);
    if (o == 0 && dot(origin - from, origin - to) <= 0) {
      throw Error(ErrorCode::DegeneratePath,
                  "difference path of strands " + std::to_string(i) + "," + std::to_string(j) + " meets the origin");
    }
    const bool up = from.y <= 0 && to.y > 0;
    const bool down = to.y <= 0 && from.y > 0;
    if (up || down) half_turns += o;
  }
  return Rational(half_turns, 2) + turns;
}

// ---------------------------------------------------------------------------
// Program builders

inline MoveProgram full_twist_program(int n, int turns) {
  if (turns == 0) throw Error(ErrorCode::InvalidProgram, "full twist needs a nonzero number of turns");
  return {regular_rational_configuration(n), {FullTwistMove{turns}}, true};
}

/// Runs `p` backwards from its final configuration.
inline MoveProgram reverse_program(const MoveProgram& p) {
  const auto configs = configurations(p);
  std::vector<Move> moves;
  for (std::size_t idx = p.moves.size(); idx-- > 0;) {
    if (const auto* lm = std::get_if<LinearMove>(&p.moves[idx])) {
      moves.push_back(LinearMove{lm->strand, configs[idx].at(lm->strand)});
    } else {
      moves.push_back(FullTwistMove{-std::get<FullTwistMove>(p.moves[idx]).turns});
    }
  }
  return {configs.back(), std::move(moves), p.closed};
}

/// `a` followed by `b`; `b` must start where `a` ends.
inline MoveProgram concat_programs(const MoveProgram& a, const MoveProgram& b) {
  if (!(configurations(a).back() == b.initial)) {
    throw Error(ErrorCode::InvalidProgram, "second program does not start where the first ends");
  }
  MoveProgram out = a;
  out.moves.insert(out.moves.end(), b.moves.begin(), b.moves.end());
  out.closed = a.closed && b.closed;
  return out;
}

/// k-fold repetition of a closed program; negative k repeats its reverse.
inline MoveProgram program_power(const MoveProgram& p, int k) {
  if (!p.closed) throw Error(ErrorCode::NotClosed, "only closed programs have powers");
  const MoveProgram base = k < 0 ? reverse_program(p) : p;
  MoveProgram out{p.initial, {}, true};
  for (int r = 0; r < std::abs(k); ++r) out = concat_programs(out, base);
  return out;
}

/// Standard pure braid generator A_ij: strand i leaves its place on the
/// regular configuration, runs once counterclockwise around a small square
/// centred on strand j, and returns the same way. Attempt a uses square scale
/// 1/2^(a+2) and skew 1/(a+5) off the i-j line; the first attempt that passes
/// every genericity check and links only the pair {i,j} (once) is returned.
inline MoveProgram pure_braid_generator_program(int n, Strand i, Strand j) {
  require_strand_count(n);
  detail::require_strand(n, i);
  detail::require_strand(n, j);
  if (i == j) throw Error(ErrorCode::InvalidProgram, "generator A_ij needs i != j");
  const Configuration start = regular_rational_configuration(n);
  const RationalPoint zi = start.at(i);
  const RationalPoint zj = start.at(j);
  const RationalPoint v = zi - zj;
  for (int attempt = 0; attempt < 24; ++attempt) {
    const Rational scale(BigInt(1), BigInt(1) << (attempt + 2));
    const Rational skew(1, attempt + 5);
    RationalPoint corner = scale * (v + skew * rotate_quarter(v));
    std::vector<Move> moves;
    for (int q = 0; q < 4; ++q) {
      moves.push_back(LinearMove{i, zj + corner});
      corner = rotate_quarter(corner);
    }
    moves.push_back(LinearMove{i, zj + corner});
    moves.push_back(LinearMove{i, zi});
    MoveProgram prog{start, std::move(moves), true};
    try {
      compile(prog);
      bool ok = true;
      for (Strand a = 1; a <= n && ok; ++a)
        for (Strand b = a + 1; b <= n && ok; ++b) {
          const bool pair = (a == std::min(i, j) && b == std::max(i, j));
          ok = geometric_linking(prog, a, b) == (pair ? 1 : 0);
        }
      if (ok) return prog;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::GenericityError && e.code() != ErrorCode::DegeneratePath) throw;
    }
  }
  throw Error(ErrorCode::ConstructionFailure,
              "no generic A_" + std::to_string(i) + std::to_string(j) + " program within the retry budget");
}

/// Drops every letter containing strand n and reinterprets the rest in n-1
/// strands.
inline GWord forget_last_strand(const GWord& w) {
  const int m = w.n() - 1;
  std::vector<GenTriple> kept;
  for (const auto& g : w)
    if (!g.contains(w.n())) kept.emplace_back(m, g[0], g[1], g[2]);
  return GWord(m, std::move(kept));
}

/// Adds a stationary strand n+1 far from every point the program visits.
/// Candidate k sits at (2^(k+1) B, 0) for k = 0 and (2^(k+1) B, 1/(k+1))
/// afterwards, B bounding all coordinates; the first candidate whose augmented
/// program is generic and restricts back to the original word is used.
inline MoveProgram embed_at_infinity(const MoveProgram& p) {
  for (const auto& m : p.moves) {
    if (std::holds_alternative<FullTwistMove>(m)) {
      throw Error(ErrorCode::InvalidProgram, "cannot embed a program with twist moves");
    }
  }
  const GWord original = compile(p).word;
  Rational bound = 1;
  for (const auto& c : configurations(p))
    for (const auto& pt : c.points) bound = std::max({bound, Rational(abs(pt.x)), Rational(abs(pt.y))});
  const Rational base = Rational(boost::multiprecision::numerator(bound) / boost::multiprecision::denominator(bound)) + 1;

  for (int k = 0; k < 32; ++k) {
    const RationalPoint far{base * Rational(BigInt(1) << (k + 1)), k == 0 ? Rational(0) : Rational(1, k + 1)};
    auto pts = p.initial.points;
    pts.push_back(far);
    MoveProgram out{Configuration(p.n() + 1, std::move(pts)), p.moves, p.closed};
    try {
      if (forget_last_strand(compile(out).word) == original) return out;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::GenericityError) throw;
    }
  }
  throw Error(ErrorCode::GenericityError, "no far point in the candidate sequence keeps the program generic");
}

}  // namespace gbraid
