#pragma once

// Words in the free 3-braid group G_n^3: generators are involutions indexed by
// 3-subsets of {1..n}, subject to a_m^2 = 1, far commutativity, and the
// tetrahedron relation.

#include <algorithm>
#include <array>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gbraid/error.hpp"

namespace gbraid {

using Strand = int;

constexpr std::size_t triple_count(int n) noexcept {
  if (n < 3) return 0;
  const auto m = static_cast<std::size_t>(n);
  return m * (m - 1) * (m - 2) / 6;
}

/// Colexicographic rank of a sorted 1-based triple i<j<k. Independent of n,
/// so a state for n strands is a prefix of the state for n+1 strands.
constexpr std::size_t triple_rank(int i, int j, int k) noexcept {
  const auto a = static_cast<std::size_t>(i - 1);
  const auto b = static_cast<std::size_t>(j - 1);
  const auto c = static_cast<std::size_t>(k - 1);
  return a + b * (b - 1) / 2 + c * (c - 1) * (c - 2) / 6;
}

inline void require_strand_count(int n) {
  if (n < 4) throw Error(ErrorCode::InvalidN, "strand count must be >= 4, got " + std::to_string(n));
}

/// Generator a_m, m a 3-subset of {1..n}. Stored sorted; every ordering of the
/// same three indices constructs the same value.
class GenTriple {
 public:
  GenTriple(int n, Strand a, Strand b, Strand c) : n_(n), e_{a, b, c} {
    require_strand_count(n);
    std::sort(e_.begin(), e_.end());
    if (e_[0] < 1 || e_[2] > n || e_[0] == e_[1] || e_[1] == e_[2]) {
      throw Error(ErrorCode::BadTriple, "indices (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                            std::to_string(c) + ") are not a 3-subset of {1.." +
                                            std::to_string(n) + "}");
    }
  }

  int n() const noexcept { return n_; }
  const std::array<Strand, 3>& elems() const noexcept { return e_; }
  Strand operator[](std::size_t idx) const noexcept { return e_[idx]; }
  std::size_t rank() const noexcept { return triple_rank(e_[0], e_[1], e_[2]); }

  bool contains(Strand s) const noexcept { return e_[0] == s || e_[1] == s || e_[2] == s; }

  int shared_with(const GenTriple& other) const noexcept {
    int count = 0;
    for (Strand s : e_) count += other.contains(s) ? 1 : 0;
    return count;
  }

  /// The two elements other than `s` (which must be a member), ascending.
  std::array<Strand, 2> others(Strand s) const noexcept {
    std::array<Strand, 2> out{};
    std::size_t pos = 0;
    for (Strand e : e_) {
      if (e != s && pos < 2) out[pos++] = e;
    }
    return out;
  }

  friend bool operator==(const GenTriple&, const GenTriple&) = default;
  friend auto operator<=>(const GenTriple&, const GenTriple&) = default;

 private:
  int n_;
  std::array<Strand, 3> e_;
};

/// All generators of G_n^3 in lexicographic order of their sorted indices.
inline std::vector<GenTriple> all_triples(int n) {
  require_strand_count(n);
  std::vector<GenTriple> out;
  out.reserve(triple_count(n));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) out.emplace_back(n, i, j, k);
  return out;
}

class GWord {
 public:
  explicit GWord(int n) : n_(n) { require_strand_count(n); }

  GWord(int n, std::vector<GenTriple> letters) : n_(n), letters_(std::move(letters)) {
    require_strand_count(n);
    for (const auto& g : letters_) {
      if (g.n() != n_) {
        throw Error(ErrorCode::DimensionMismatch,
                    "letter has n=" + std::to_string(g.n()) + " in a word with n=" + std::to_string(n_));
      }
    }
  }

  int n() const noexcept { return n_; }
  const std::vector<GenTriple>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const GenTriple& operator[](std::size_t idx) const { return letters_[idx]; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  friend bool operator==(const GWord&, const GWord&) = default;

 private:
  int n_;
  std::vector<GenTriple> letters_;
};

// ---------------------------------------------------------------------------
// Text format

inline std::string to_string(const GenTriple& g) {
  if (g.n() <= 9) {
    return "a" + std::to_string(g[0]) + std::to_string(g[1]) + std::to_string(g[2]);
  }
  return "a(" + std::to_string(g[0]) + "," + std::to_string(g[1]) + "," + std::to_string(g[2]) + ")";
}

inline std::string to_string(const GWord& w) {
  std::string out;
  for (std::size_t t = 0; t < w.size(); ++t) {
    if (t) out += ' ';
    out += to_string(w[t]);
  }
  return out;
}

/// Index set of a single letter, any cardinality. `a123` reads one digit per
/// index; `a(1,12,3)` reads comma-separated integers.
using GenSubset = std::vector<Strand>;

inline GenSubset parse_letter(std::string_view token) {
  auto fail = [&](const std::string& why) {
    return Error(ErrorCode::ParseError, "bad letter '" + std::string(token) + "': " + why);
  };
  if (token.size() < 2 || token[0] != 'a') throw fail("expected 'a' followed by indices");
  GenSubset out;
  std::string_view body = token.substr(1);
  if (body.front() == '(') {
    if (body.back() != ')') throw fail("missing ')'");
    body = body.substr(1, body.size() - 2);
    std::size_t start = 0;
    while (start <= body.size()) {
      const std::size_t comma = std::min(body.find(',', start), body.size());
      const std::string_view part = body.substr(start, comma - start);
      if (part.empty() || part.size() > 6 ||
          !std::all_of(part.begin(), part.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
        throw fail("index '" + std::string(part) + "' is not a positive integer");
      }
      out.push_back(std::stoi(std::string(part)));
      start = comma + 1;
    }
  } else {
    for (char ch : body) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) throw fail("compact form takes single digits");
      out.push_back(ch - '0');
    }
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) throw fail("repeated index");
  return out;
}

inline std::vector<GenSubset> parse_subset_word(std::string_view text) {
  std::vector<GenSubset> out;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) out.push_back(parse_letter(token));
  return out;
}

/// Parses a whitespace-separated G_n^3 word. Letters of any other cardinality
/// parse at the data level (parse_subset_word) but are rejected here.
inline GWord parse_word(std::string_view text, int n) {
  require_strand_count(n);
  std::vector<GenTriple> letters;
  for (const auto& subset : parse_subset_word(text)) {
    if (subset.size() != 3) {
      throw Error(ErrorCode::ParseError, "letter with " + std::to_string(subset.size()) +
                                             " indices; only 3-subsets carry G_n^3 semantics");
    }
    if (subset.front() < 1 || subset.back() > n) {
      throw Error(ErrorCode::ParseError, "letter index out of range 1.." + std::to_string(n));
    }
    letters.emplace_back(n, subset[0], subset[1], subset[2]);
  }
  return GWord(n, std::move(letters));
}

// ---------------------------------------------------------------------------
// Relations

enum class MoveKind { SquareDelete, SquareInsert, FarCommute, TetraReverse };

struct RelationMove {
  MoveKind kind;
  std::size_t position;
  std::optional<GenTriple> inserted;  // SquareInsert only

  /// Number of letters of the source word the move rewrites.
  std::size_t span() const noexcept {
    switch (kind) {
      case MoveKind::SquareDelete: return 2;
      case MoveKind::SquareInsert: return 0;
      case MoveKind::FarCommute: return 2;
      case MoveKind::TetraReverse: return 4;
    }
    return 0;
  }

  friend bool operator==(const RelationMove&, const RelationMove&) = default;
};

inline std::string to_string(const RelationMove& m) {
  const std::string pos = std::to_string(m.position);
  switch (m.kind) {
    case MoveKind::SquareDelete: return "SquareDelete(" + pos + ")";
    case MoveKind::SquareInsert: return "SquareInsert(" + pos + "," + to_string(*m.inserted) + ")";
    case MoveKind::FarCommute: return "FarCommute(" + pos + ")";
    case MoveKind::TetraReverse: return "TetraReverse(" + pos + ")";
  }
  return "?";
}

namespace detail {

inline bool is_square_at(const std::vector<GenTriple>& l, std::size_t p) {
  return p + 1 < l.size() && l[p] == l[p + 1];
}

inline bool is_far_pair_at(const std::vector<GenTriple>& l, std::size_t p) {
  return p + 1 < l.size() && l[p].shared_with(l[p + 1]) <= 1;
}

// Four pairwise distinct 3-subsets whose union has 4 elements are exactly the
// four 3-subsets of that 4-set.
inline bool is_tetra_at(const std::vector<GenTriple>& l, std::size_t p) {
  if (p + 3 >= l.size()) return false;
  for (std::size_t a = p; a < p + 4; ++a)
    for (std::size_t b = a + 1; b < p + 4; ++b)
      if (l[a] == l[b]) return false;
  std::array<Strand, 12> all{};
  std::size_t pos = 0;
  for (std::size_t a = p; a < p + 4; ++a)
    for (Strand s : l[a].elems()) all[pos++] = s;
  std::sort(all.begin(), all.end());
  return std::unique(all.begin(), all.end()) - all.begin() == 4;
}

}  // namespace detail

/// Cancels adjacent equal pairs until none remain (stack reduction).
inline GWord free_reduce(const GWord& w) {
  std::vector<GenTriple> stack;
  stack.reserve(w.size());
  for (const auto& g : w) {
    if (!stack.empty() && stack.back() == g) {
      stack.pop_back();
    } else {
      stack.push_back(g);
    }
  }
  return GWord(w.n(), std::move(stack));
}

/// Every move applicable to `w`: deletions, far commutations and tetrahedron
/// reversals in position order, then (when `allow_insert`) every insertion of
/// a_m a_m that keeps the length within `max_len`.
inline std::vector<RelationMove> applicable_moves(const GWord& w, bool allow_insert, std::size_t max_len) {
  const auto& l = w.letters();
  std::vector<RelationMove> out;
  for (std::size_t p = 0; p < l.size(); ++p) {
    if (detail::is_square_at(l, p)) out.push_back({MoveKind::SquareDelete, p, std::nullopt});
    if (detail::is_far_pair_at(l, p)) out.push_back({MoveKind::FarCommute, p, std::nullopt});
    if (detail::is_tetra_at(l, p)) out.push_back({MoveKind::TetraReverse, p, std::nullopt});
  }
  if (allow_insert && l.size() + 2 <= max_len) {
    const auto gens = all_triples(w.n());
    for (std::size_t p = 0; p <= l.size(); ++p)
      for (const auto& g : gens) out.push_back({MoveKind::SquareInsert, p, g});
  }
  return out;
}

inline GWord apply_move(const GWord& w, const RelationMove& m) {
  auto l = w.letters();
  const std::size_t p = m.position;
  auto reject = [&] { return Error(ErrorCode::InvalidMove, to_string(m) + " does not match '" + to_string(w) + "'"); };
  switch (m.kind) {
    case MoveKind::SquareDelete:
      if (!detail::is_square_at(l, p)) throw reject();
      l.erase(l.begin() + static_cast<std::ptrdiff_t>(p), l.begin() + static_cast<std::ptrdiff_t>(p + 2));
      break;
    case MoveKind::SquareInsert:
      if (p > l.size() || !m.inserted || m.inserted->n() != w.n()) throw reject();
      l.insert(l.begin() + static_cast<std::ptrdiff_t>(p), 2, *m.inserted);
      break;
    case MoveKind::FarCommute:
      if (!detail::is_far_pair_at(l, p)) throw reject();
      std::swap(l[p], l[p + 1]);
      break;
    case MoveKind::TetraReverse:
      if (!detail::is_tetra_at(l, p)) throw reject();
      std::reverse(l.begin() + static_cast<std::ptrdiff_t>(p), l.begin() + static_cast<std::ptrdiff_t>(p + 4));
      break;
  }
  return GWord(w.n(), std::move(l));
}

/// LHS/RHS of one defining relation, written as two words.
struct RelationPattern {
  MoveKind kind;
  GWord lhs;
  GWord rhs;
};

/// Every instance of the defining relations for n strands: a_m a_m = 1, each
/// ordered far-commuting pair, and the tetrahedron word for each ordering of
/// each 4-subset.
inline std::vector<RelationPattern> relation_patterns(int n) {
  const auto gens = all_triples(n);
  std::vector<RelationPattern> out;
  for (const auto& g : gens) out.push_back({MoveKind::SquareDelete, GWord(n, {g, g}), GWord(n)});
  for (const auto& g : gens)
    for (const auto& h : gens)
      if (g.shared_with(h) <= 1) out.push_back({MoveKind::FarCommute, GWord(n, {g, h}), GWord(n, {h, g})});
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        for (int d = c + 1; d <= n; ++d) {
          std::array<Strand, 4> u{a, b, c, d};
          do {
            std::vector<GenTriple> lhs;
            for (std::size_t j = 0; j < 4; ++j) {
              std::array<Strand, 3> rest{};
              std::size_t pos = 0;
              for (std::size_t q = 0; q < 4; ++q)
                if (q != j) rest[pos++] = u[q];
              lhs.emplace_back(n, rest[0], rest[1], rest[2]);
            }
            std::vector<GenTriple> rhs(lhs.rbegin(), lhs.rend());
            out.push_back({MoveKind::TetraReverse, GWord(n, std::move(lhs)), GWord(n, std::move(rhs))});
          } while (std::next_permutation(u.begin(), u.end()));
        }
  return out;
}

// ---------------------------------------------------------------------------
// Invariants

/// Generator counts mod 2. Every defining relation preserves each count's
/// parity, so this is a homomorphism G_n^3 -> (Z/2)^C(n,3).
class ParityVector {
 public:
  explicit ParityVector(int n) : n_(n), bits_(triple_count(n), 0) {}

  int n() const noexcept { return n_; }
  std::uint8_t bit(const GenTriple& g) const { return bits_.at(g.rank()); }
  void toggle(const GenTriple& g) { bits_.at(g.rank()) ^= 1U; }
  bool is_zero() const noexcept {
    return std::all_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b == 0; });
  }

  std::vector<GenTriple> odd_generators() const {
    std::vector<GenTriple> out;
    for (const auto& g : all_triples(n_))
      if (bit(g)) out.push_back(g);
    return out;
  }

  friend bool operator==(const ParityVector&, const ParityVector&) = default;

 private:
  int n_;
  std::vector<std::uint8_t> bits_;
};

inline ParityVector generator_parity(const GWord& w) {
  ParityVector out(w.n());
  for (const auto& g : w) out.toggle(g);
  return out;
}

inline std::string to_string(const ParityVector& p) {
  std::string out = "{";
  bool first = true;
  for (const auto& g : p.odd_generators()) {
    if (!first) out += ' ';
    out += to_string(g);
    first = false;
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// Bounded equality search

struct EqualityVerdict {
  enum class Kind { Equal, Distinct, Unknown };
  Kind kind;
  std::vector<RelationMove> path;  // Equal: replays from the first word to the second
  std::string witness;             // Distinct: the invariant that separates them
  std::size_t explored = 0;
};

inline std::string_view to_string(EqualityVerdict::Kind k) {
  switch (k) {
    case EqualityVerdict::Kind::Equal: return "Equal";
    case EqualityVerdict::Kind::Distinct: return "Distinct";
    case EqualityVerdict::Kind::Unknown: return "Unknown";
  }
  return "?";
}

namespace detail {

inline std::u16string word_key(const GWord& w) {
  std::u16string key;
  key.reserve(w.size());
  for (const auto& g : w) key.push_back(static_cast<char16_t>(g.rank() + 1));
  return key;
}

}  // namespace detail

/// Breadth-first search from `w1` over all relation moves, inserting only up
/// to length `max_len` and expanding at most `node_budget` words. Never reports
/// Distinct without a parity witness.
inline EqualityVerdict bounded_equal(const GWord& w1, const GWord& w2, std::size_t node_budget, std::size_t max_len) {
  if (w1.n() != w2.n()) {
    throw Error(ErrorCode::DimensionMismatch,
                "words have n=" + std::to_string(w1.n()) + " and n=" + std::to_string(w2.n()));
  }
  const auto p1 = generator_parity(w1);
  const auto p2 = generator_parity(w2);
  if (!(p1 == p2)) {
    return {EqualityVerdict::Kind::Distinct, {}, "parity mismatch: " + to_string(p1) + " vs " + to_string(p2), 0};
  }

  struct Node {
    GWord word;
    std::size_t parent;
    std::optional<RelationMove> via;
  };
  std::vector<Node> nodes;
  std::unordered_map<std::u16string, std::size_t> seen;
  const auto target = detail::word_key(w2);

  auto path_to = [&](std::size_t idx) {
    std::vector<RelationMove> path;
    while (nodes[idx].via) {
      path.push_back(*nodes[idx].via);
      idx = nodes[idx].parent;
    }
    std::reverse(path.begin(), path.end());
    return path;
  };

  nodes.push_back({w1, 0, std::nullopt});
  seen.emplace(detail::word_key(w1), 0);
  if (detail::word_key(w1) == target) return {EqualityVerdict::Kind::Equal, {}, {}, 0};

  std::deque<std::size_t> frontier{0};
  std::size_t expanded = 0;
  while (!frontier.empty() && expanded < node_budget) {
    const std::size_t current = frontier.front();
    frontier.pop_front();
    ++expanded;
    const GWord word = nodes[current].word;
    for (const auto& move : applicable_moves(word, true, max_len)) {
      GWord next = apply_move(word, move);
      auto key = detail::word_key(next);
      if (seen.contains(key)) continue;
      nodes.push_back({std::move(next), current, move});
      const std::size_t idx = nodes.size() - 1;
      if (key == target) return {EqualityVerdict::Kind::Equal, path_to(idx), {}, expanded};
      seen.emplace(std::move(key), idx);
      frontier.push_back(idx);
    }
  }
  return {EqualityVerdict::Kind::Unknown, {}, {}, expanded};
}

}  // namespace gbraid
