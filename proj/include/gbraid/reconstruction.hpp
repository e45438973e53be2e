#pragma once

// Reconstruction of the cylindrical braid traced by the other strands around
// one axis strand, read off a realisable word.

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gbraid/error.hpp"
#include "gbraid/geometry.hpp"
#include "gbraid/group_core.hpp"
#include "gbraid/index_state.hpp"

namespace gbraid {

/// Swap of the angular positions of `inner` (the strand nearer the axis) and
/// `outer`.
struct CylLetter {
  Strand inner;
  Strand outer;
  int sign;
  friend bool operator==(const CylLetter&, const CylLetter&) = default;
};

struct CylWord {
  int n;
  Strand axis;
  std::vector<CylLetter> letters;
  std::vector<Strand> initial_order;  // angular order around the axis
  std::vector<Strand> final_order;
};

/// Angular order of the other strands seen from `axis` on the regular
/// configuration: axis+1, ..., n, 1, ..., axis-1.
inline std::vector<Strand> initial_cyclic_order(int n, Strand axis) {
  std::vector<Strand> out;
  for (int step = 1; step < n; ++step) out.push_back((axis - 1 + step) % n + 1);
  return out;
}

inline CylWord reconstruct_axis(const GWord& w, Strand axis) {
  const int n = w.n();
  if (axis < 1 || axis > n) {
    throw Error(ErrorCode::BadTriple, "axis " + std::to_string(axis) + " outside 1.." + std::to_string(n));
  }
  const auto cw = classify_word(w);
  CylWord out{n, axis, {}, initial_cyclic_order(n, axis), {}};
  auto order = out.initial_order;
  const auto m = static_cast<std::ptrdiff_t>(order.size());

  for (std::size_t t = 0; t < w.size(); ++t) {
    const auto& status = cw.statuses[t];
    if (!status.good()) {
      throw Error(ErrorCode::NotRealisable, "letter " + std::to_string(t + 1) + " (" + to_string(w[t]) + ") is bad");
    }
    if (!w[t].contains(axis)) continue;
    if (status.centrals.size() > 1) {
      throw Error(ErrorCode::AmbiguousCentral, "letter " + std::to_string(t + 1) + " admits " + to_string(status));
    }
    const Strand central = status.centrals.front();
    if (central == axis) continue;
    const auto pair = w[t].others(axis);
    const Strand outer = pair[0] == central ? pair[1] : pair[0];

    const auto pi = std::find(order.begin(), order.end(), central) - order.begin();
    const auto po = std::find(order.begin(), order.end(), outer) - order.begin();
    const auto gap = (pi - po + m) % m;
    if (gap != 1 && gap != m - 1) {
      throw Error(ErrorCode::AdjacencyViolation, "letter " + std::to_string(t + 1) + " swaps strands " +
                                                     std::to_string(central) + " and " + std::to_string(outer) +
                                                     " which are not angular neighbours");
    }
    std::swap(order[static_cast<std::size_t>(pi)], order[static_cast<std::size_t>(po)]);
    // Oriented so that a strand circling another counterclockwise contributes +1.
    out.letters.push_back({central, outer, signed_index(cw.prefix_states[t], axis, outer, central)});
  }
  out.final_order = std::move(order);
  return out;
}

inline std::string to_string(const CylLetter& l) {
  return "b(" + std::to_string(l.inner) + "," + std::to_string(l.outer) + "," + (l.sign > 0 ? "+" : "-") + ")";
}

inline std::string to_string(const CylWord& c) {
  std::string out;
  for (std::size_t t = 0; t < c.letters.size(); ++t) {
    if (t) out += ' ';
    out += to_string(c.letters[t]);
  }
  return out;
}

/// Permutation of angular slots plus the pairwise linking numbers (half the
/// signed swap count of each pair).
struct AnnularInvariants {
  Strand axis;
  std::vector<Strand> strands;        // non-axis strands, ascending
  std::vector<Strand> initial_order;
  std::vector<Strand> final_order;
  std::vector<std::vector<long>> swap_sum;  // indexed by positions in `strands`

  bool permutation_is_identity() const { return initial_order == final_order; }

  std::size_t slot(Strand s) const {
    return static_cast<std::size_t>(std::find(strands.begin(), strands.end(), s) - strands.begin());
  }

  Rational linking(Strand a, Strand b) const { return Rational(swap_sum.at(slot(a)).at(slot(b)), 2); }

  friend bool operator==(const AnnularInvariants&, const AnnularInvariants&) = default;
};

inline AnnularInvariants annular_invariants(const CylWord& c) {
  AnnularInvariants inv{c.axis, {}, c.initial_order, c.final_order, {}};
  inv.strands = c.initial_order;
  std::sort(inv.strands.begin(), inv.strands.end());
  inv.swap_sum.assign(inv.strands.size(), std::vector<long>(inv.strands.size(), 0));
  for (const auto& l : c.letters) {
    const auto a = inv.slot(l.inner);
    const auto b = inv.slot(l.outer);
    inv.swap_sum[a][b] += l.sign;
    inv.swap_sum[b][a] += l.sign;
  }
  return inv;
}

/// Cycle notation of the slot permutation: the strand that started in a slot
/// maps to the strand that ends there.
inline std::string permutation_cycles(const AnnularInvariants& inv) {
  std::map<Strand, Strand> next;
  for (std::size_t p = 0; p < inv.initial_order.size(); ++p) next[inv.initial_order[p]] = inv.final_order[p];
  std::string out;
  std::vector<Strand> done;
  for (Strand s : inv.strands) {
    if (std::find(done.begin(), done.end(), s) != done.end() || next[s] == s) continue;
    out += "(";
    Strand cur = s;
    do {
      if (out.back() != '(') out += ' ';
      out += std::to_string(cur);
      done.push_back(cur);
      cur = next[cur];
    } while (cur != s);
    out += ")";
  }
  return out.empty() ? "()" : out;
}

inline std::string to_string(const AnnularInvariants& inv) {
  std::ostringstream out;
  out << "axis " << inv.axis << "\n";
  out << "permutation " << permutation_cycles(inv) << "\n";
  out << "linking";
  for (Strand s : inv.strands) out << '\t' << s;
  out << '\n';
  for (Strand a : inv.strands) {
    out << a;
    for (Strand b : inv.strands) out << '\t' << (a == b ? std::string("0") : to_string(inv.linking(a, b)));
    out << '\n';
  }
  return out.str();
}

/// m such that `b` is `a` followed by m full twists (every pairwise linking
/// shifted by m), if the slot permutations agree.
inline std::optional<long> invariants_equal_mod_full_twist(const AnnularInvariants& a, const AnnularInvariants& b) {
  if (a.strands != b.strands || a.initial_order != b.initial_order || a.final_order != b.final_order) {
    return std::nullopt;
  }
  std::optional<long> doubled;
  for (std::size_t x = 0; x < a.strands.size(); ++x)
    for (std::size_t y = x + 1; y < a.strands.size(); ++y) {
      const long diff = b.swap_sum[x][y] - a.swap_sum[x][y];
      if (doubled && *doubled != diff) return std::nullopt;
      doubled = diff;
    }
  if (!doubled) return 0L;
  if (*doubled % 2 != 0) return std::nullopt;
  return *doubled / 2;
}

struct KernelVerdict {
  enum class Kind { NontrivialByParity, NontrivialByLinking, TrivialConsistent };
  Kind kind;
  Strand axis = 0;
  std::pair<Strand, Strand> pair{0, 0};
};

inline std::string to_string(const KernelVerdict& v) {
  switch (v.kind) {
    case KernelVerdict::Kind::NontrivialByParity: return "NontrivialByParity";
    case KernelVerdict::Kind::NontrivialByLinking:
      return "NontrivialByLinking(axis " + std::to_string(v.axis) + ", pair {" + std::to_string(v.pair.first) + "," +
             std::to_string(v.pair.second) + "})";
    case KernelVerdict::Kind::TrivialConsistent: return "TrivialConsistent";
  }
  return "?";
}

namespace detail {

// Pair that breaks the uniform shift: the first pair whose linking change
// differs from the most common change, else the first slot the permutation
// moves.
inline std::pair<Strand, Strand> offending_pair(const AnnularInvariants& ref, const AnnularInvariants& inv) {
  std::map<long, int> votes;
  for (std::size_t x = 0; x < inv.strands.size(); ++x)
    for (std::size_t y = x + 1; y < inv.strands.size(); ++y) ++votes[inv.swap_sum[x][y] - ref.swap_sum[x][y]];
  long common = 0;
  int best = -1;
  for (const auto& [diff, count] : votes) {
    if (count > best) {
      best = count;
      common = diff;
    }
  }
  for (std::size_t x = 0; x < inv.strands.size(); ++x)
    for (std::size_t y = x + 1; y < inv.strands.size(); ++y)
      if (inv.swap_sum[x][y] - ref.swap_sum[x][y] != common || common % 2 != 0) return {inv.strands[x], inv.strands[y]};
  for (std::size_t p = 0; p < inv.final_order.size(); ++p) {
    if (inv.final_order[p] != inv.initial_order[p]) {
      return std::minmax(inv.initial_order[p], inv.final_order[p]);
    }
  }
  return {0, 0};
}

}  // namespace detail

/// Looks for evidence that `w` is not the image of a full-twist power: odd
/// generator counts, or annular invariants around some axis that differ from
/// the empty word's by more than a full-twist shift. Axes are tried from n
/// down to 1. TrivialConsistent only means no evidence was found.
inline KernelVerdict kernel_witness(const GWord& w) {
  const auto cw = classify_word(w);
  if (!cw.realisable()) throw Error(ErrorCode::NotRealisable, "kernel witness needs a realisable word");
  if (!generator_parity(w).is_zero()) return {KernelVerdict::Kind::NontrivialByParity};
  const GWord empty(w.n());
  for (Strand axis = w.n(); axis >= 1; --axis) {
    const auto ref = annular_invariants(reconstruct_axis(empty, axis));
    const auto inv = annular_invariants(reconstruct_axis(w, axis));
    if (!invariants_equal_mod_full_twist(ref, inv)) {
      return {KernelVerdict::Kind::NontrivialByLinking, axis, detail::offending_pair(ref, inv)};
    }
  }
  return {KernelVerdict::Kind::TrivialConsistent};
}

}  // namespace gbraid
