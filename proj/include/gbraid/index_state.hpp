#pragma once

// Triple indices (i,j,k) = ±1, the action of G_n^3 on them, and per-letter
// realisability ("good"/"bad" letters) with the bad-letter projection.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gbraid/error.hpp"
#include "gbraid/group_core.hpp"

namespace gbraid {

/// Sign of every sorted triple i<j<k. Lookups for other orderings pick up the
/// sign of the sorting permutation.
class OrientationState {
 public:
  OrientationState(int n, std::vector<std::int8_t> values) : n_(n), values_(std::move(values)) {
    require_strand_count(n);
    if (values_.size() != triple_count(n)) {
      throw Error(ErrorCode::DimensionMismatch, "state needs " + std::to_string(triple_count(n)) + " entries");
    }
    for (auto v : values_)
      if (v != 1 && v != -1) throw Error(ErrorCode::BadTriple, "state entries must be +1 or -1");
  }

  /// Bit r of `id` set means the triple of colex rank r is -1.
  static OrientationState from_id(int n, std::uint64_t id) {
    require_id_range(n);
    std::vector<std::int8_t> values(triple_count(n));
    for (std::size_t r = 0; r < values.size(); ++r) values[r] = ((id >> r) & 1U) ? -1 : 1;
    return OrientationState(n, std::move(values));
  }

  std::uint64_t id() const {
    require_id_range(n_);
    std::uint64_t out = 0;
    for (std::size_t r = 0; r < values_.size(); ++r)
      if (values_[r] < 0) out |= std::uint64_t{1} << r;
    return out;
  }

  int n() const noexcept { return n_; }
  int value(const GenTriple& g) const { return values_.at(g.rank()); }
  const std::vector<std::int8_t>& values() const noexcept { return values_; }

  void negate(const GenTriple& g) {
    if (g.n() != n_) {
      throw Error(ErrorCode::DimensionMismatch,
                  "letter for n=" + std::to_string(g.n()) + " applied to a state with n=" + std::to_string(n_));
    }
    values_[g.rank()] = static_cast<std::int8_t>(-values_[g.rank()]);
  }

  friend bool operator==(const OrientationState&, const OrientationState&) = default;

 private:
  static void require_id_range(int n) {
    if (triple_count(n) > 64) throw Error(ErrorCode::UnsupportedN, "state ids exist only for C(n,3) <= 64");
  }

  int n_;
  std::vector<std::int8_t> values_;
};

inline OrientationState initial_state(int n) {
  require_strand_count(n);
  auto mod = [n](int v) { return ((v % n) + n) % n; };
  std::vector<std::int8_t> values(triple_count(n));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) values[triple_rank(i, j, k)] = mod(j - i) < mod(k - i) ? 1 : -1;
  return OrientationState(n, std::move(values));
}

/// (i,j,k) for an arbitrary ordering: value of the sorted triple times the
/// sign of the permutation that sorts it.
inline int signed_index(const OrientationState& s, Strand i, Strand j, Strand k) {
  const int n = s.n();
  if (i == j || j == k || i == k || std::min({i, j, k}) < 1 || std::max({i, j, k}) > n) {
    throw Error(ErrorCode::BadTriple, "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) +
                                          ") is not a triple of distinct strands in 1.." + std::to_string(n));
  }
  int sign = 1;
  if (i > j) { std::swap(i, j); sign = -sign; }
  if (j > k) { std::swap(j, k); sign = -sign; }
  if (i > j) { std::swap(i, j); sign = -sign; }
  return sign * s.values()[triple_rank(i, j, k)];
}

inline OrientationState flip(OrientationState s, const GenTriple& g) {
  s.negate(g);
  return s;
}

inline OrientationState run_word(OrientationState s, const GWord& w) {
  if (w.n() != s.n()) {
    throw Error(ErrorCode::DimensionMismatch,
                "word with n=" + std::to_string(w.n()) + " run on a state with n=" + std::to_string(s.n()));
  }
  for (const auto& g : w) s.negate(g);
  return s;
}

struct LetterStatus {
  std::vector<Strand> centrals;  // ascending
  bool good() const noexcept { return !centrals.empty(); }
  friend bool operator==(const LetterStatus&, const LetterStatus&) = default;
};

/// Central c of letter {x,c,y} is admissible iff (x,c,p) = (x,y,p) = (c,y,p)
/// for every strand p outside the letter. The condition is symmetric under
/// exchanging x and y.
inline LetterStatus letter_status(const OrientationState& s, const GenTriple& g) {
  if (g.n() != s.n()) {
    throw Error(ErrorCode::DimensionMismatch,
                "letter for n=" + std::to_string(g.n()) + " classified at a state with n=" + std::to_string(s.n()));
  }
  LetterStatus out;
  for (Strand c : g.elems()) {
    const auto [x, y] = g.others(c);
    bool ok = true;
    for (Strand p = 1; p <= s.n() && ok; ++p) {
      if (g.contains(p)) continue;
      const int a = signed_index(s, x, c, p);
      ok = a == signed_index(s, x, y, p) && a == signed_index(s, c, y, p);
    }
    if (ok) out.centrals.push_back(c);
  }
  return out;
}

inline std::string to_string(const LetterStatus& st) {
  if (!st.good()) return "bad";
  std::string out = "good{";
  for (std::size_t t = 0; t < st.centrals.size(); ++t) {
    if (t) out += ',';
    out += std::to_string(st.centrals[t]);
  }
  return out + "}";
}

struct ClassifiedWord {
  GWord word;
  std::vector<LetterStatus> statuses;
  std::vector<OrientationState> prefix_states;  // state before each letter
  OrientationState final_state;

  bool realisable() const noexcept {
    return std::all_of(statuses.begin(), statuses.end(), [](const LetterStatus& st) { return st.good(); });
  }
};

/// Reads `w` left to right from the initial state. Bad letters act on the
/// state like good ones.
inline ClassifiedWord classify_word(const GWord& w) {
  auto state = initial_state(w.n());
  std::vector<LetterStatus> statuses;
  std::vector<OrientationState> prefixes;
  statuses.reserve(w.size());
  prefixes.reserve(w.size());
  for (const auto& g : w) {
    statuses.push_back(letter_status(state, g));
    prefixes.push_back(state);
    state.negate(g);
  }
  return {w, std::move(statuses), std::move(prefixes), std::move(state)};
}

inline bool is_realisable(const GWord& w) { return classify_word(w).realisable(); }

/// Deletes the bad letters of `w`.
inline GWord project_once(const GWord& w) {
  const auto cw = classify_word(w);
  std::vector<GenTriple> kept;
  kept.reserve(w.size());
  for (std::size_t t = 0; t < w.size(); ++t)
    if (cw.statuses[t].good()) kept.push_back(w[t]);
  return GWord(w.n(), std::move(kept));
}

struct StableProjection {
  GWord word;
  std::size_t passes;  // project_once calls, including the confirming one
};

inline StableProjection stable_projection(const GWord& w) {
  GWord current = w;
  for (std::size_t pass = 1; pass <= w.size() + 1; ++pass) {
    GWord next = project_once(current);
    if (next.size() == current.size()) return {std::move(current), pass};
    current = std::move(next);
  }
  // Unreachable: each non-final pass deletes at least one letter.
  throw std::logic_error("stable projection did not converge");
}

}  // namespace gbraid
