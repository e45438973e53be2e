#pragma once

// Exhaustive (or seeded-sampled) checks of how letter statuses behave across
// the three defining relations.

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gbraid/group_core.hpp"
#include "gbraid/index_state.hpp"

namespace gbraid {

enum class Relation { Tetra, Square, Commute };

inline std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::Tetra: return "tetra";
    case Relation::Square: return "square";
    case Relation::Commute: return "commute";
  }
  return "?";
}

struct CensusRow {
  std::string state;     // state id, or "#k" for the k-th sampled state
  std::string instance;  // which relation instance was checked
  std::string statuses;  // per-letter statuses, LHS | RHS
  bool violation = false;
  std::string note;
};

struct CensusReport {
  Relation relation;
  int n;
  std::size_t states = 0;
  bool exhaustive = true;
  std::vector<CensusRow> rows;

  std::size_t violations() const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const CensusRow& r) { return r.violation; }));
  }
};

namespace detail {

inline std::vector<LetterStatus> run_statuses(OrientationState s, const GWord& w) {
  std::vector<LetterStatus> out;
  for (const auto& g : w) {
    out.push_back(letter_status(s, g));
    s.negate(g);
  }
  return out;
}

inline std::string describe(const GWord& w, const std::vector<LetterStatus>& st) {
  std::string out;
  for (std::size_t t = 0; t < w.size(); ++t) {
    if (t) out += ' ';
    out += to_string(w[t]) + "=" + to_string(st[t]);
  }
  return out;
}

inline std::size_t good_count(const std::vector<LetterStatus>& st) {
  return static_cast<std::size_t>(std::count_if(st.begin(), st.end(), [](const LetterStatus& s) { return s.good(); }));
}

// Middle element of letter g under the total order `order` (a permutation of
// the four indices involved).
inline Strand middle_under(const GenTriple& g, const std::array<Strand, 4>& order) {
  std::array<Strand, 3> e = g.elems();
  auto pos = [&](Strand s) { return std::find(order.begin(), order.end(), s) - order.begin(); };
  std::sort(e.begin(), e.end(), [&](Strand a, Strand b) { return pos(a) < pos(b); });
  return e[1];
}

inline bool fits_order(const GWord& w, const std::vector<LetterStatus>& st, const std::array<Strand, 4>& order) {
  for (std::size_t t = 0; t < w.size(); ++t) {
    const auto& c = st[t].centrals;
    if (std::find(c.begin(), c.end(), middle_under(w[t], order)) == c.end()) return false;
  }
  return true;
}

inline void tetra_rows(const OrientationState& s, const std::string& label, CensusReport& report) {
  const int n = s.n();
  std::array<Strand, 4> u{1, 2, 3, 4};
  do {
    std::vector<GenTriple> lhs_letters;
    for (std::size_t j = 0; j < 4; ++j) {
      std::array<Strand, 3> rest{};
      std::size_t pos = 0;
      for (std::size_t q = 0; q < 4; ++q)
        if (q != j) rest[pos++] = u[q];
      lhs_letters.emplace_back(n, rest[0], rest[1], rest[2]);
    }
    const GWord lhs(n, lhs_letters);
    const GWord rhs(n, std::vector<GenTriple>(lhs_letters.rbegin(), lhs_letters.rend()));
    const auto ls = run_statuses(s, lhs);
    const auto rs = run_statuses(s, rhs);
    const std::size_t lc = good_count(ls);
    const std::size_t rc = good_count(rs);

    CensusRow row;
    row.state = label;
    row.instance = "U=(" + std::to_string(u[0]) + "," + std::to_string(u[1]) + "," + std::to_string(u[2]) + "," +
                   std::to_string(u[3]) + ")";
    row.statuses = describe(lhs, ls) + " | " + describe(rhs, rs);
    std::vector<std::string> problems;
    if (lc != 0 && lc != 1 && lc != 4) problems.push_back("LHS good count " + std::to_string(lc));
    if (lc != rc) problems.push_back("good counts differ " + std::to_string(lc) + "/" + std::to_string(rc));
    if (lc == 1 && rc == 1) {
      auto survivor = [](const GWord& w, const std::vector<LetterStatus>& st) {
        for (std::size_t t = 0; t < w.size(); ++t)
          if (st[t].good()) return w[t];
        return w[0];
      };
      if (!(survivor(lhs, ls) == survivor(rhs, rs))) problems.push_back("single survivors differ");
    }
    if (lc == 4 && rc == 4) {
      std::array<Strand, 4> order{1, 2, 3, 4};
      bool found = false;
      do {
        found = fits_order(lhs, ls, order) && fits_order(rhs, rs, order);
      } while (!found && std::next_permutation(order.begin(), order.end()));
      if (!found) problems.push_back("no common total order for four good letters");
      else row.note = "order " + std::to_string(order[0]) + "<" + std::to_string(order[1]) + "<" +
                      std::to_string(order[2]) + "<" + std::to_string(order[3]);
    }
    if (!problems.empty()) {
      row.violation = true;
      row.note.clear();
      for (const auto& p : problems) row.note += (row.note.empty() ? "" : "; ") + p;
    }
    report.rows.push_back(std::move(row));
  } while (std::next_permutation(u.begin(), u.end()));
}

inline void square_rows(const OrientationState& s, const std::string& label, CensusReport& report) {
  for (const auto& g : all_triples(s.n())) {
    const GWord w(s.n(), {g, g});
    const auto st = run_statuses(s, w);
    CensusRow row{label, to_string(w), describe(w, st), !(st[0] == st[1]), {}};
    if (row.violation) row.note = "copies disagree";
    report.rows.push_back(std::move(row));
  }
}

inline void commute_rows(const OrientationState& s, const std::string& label, CensusReport& report) {
  const auto gens = all_triples(s.n());
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      if (gens[a].shared_with(gens[b]) > 1) continue;
      const GWord lhs(s.n(), {gens[a], gens[b]});
      const GWord rhs(s.n(), {gens[b], gens[a]});
      const auto ls = run_statuses(s, lhs);
      const auto rs = run_statuses(s, rhs);
      CensusRow row{label, to_string(lhs), describe(lhs, ls) + " | " + describe(rhs, rs), false, {}};
      if (!(ls[0] == rs[1]) || !(ls[1] == rs[0])) {
        row.violation = true;
        row.note = "status changed under commutation";
      }
      report.rows.push_back(std::move(row));
    }
}

}  // namespace detail

/// Tetra and square run over all 16 states of n = 4. Commute needs n >= 5; it
/// is exhaustive for n = 5 and samples `samples` uniform states (fixed seed)
/// beyond that.
inline CensusReport relation_census(int n, Relation relation, std::size_t samples = 512, std::uint64_t seed = 20240521) {
  require_strand_count(n);
  if ((relation == Relation::Tetra || relation == Relation::Square) && n != 4) {
    throw Error(ErrorCode::UnsupportedN, std::string(to_string(relation)) + " census is defined for n = 4 only");
  }
  if (relation == Relation::Commute && n < 5) {
    throw Error(ErrorCode::UnsupportedN, "commute census needs n >= 5 (no far-commuting pairs for n = 4)");
  }
  CensusReport report{relation, n, 0, true, {}};

  auto visit = [&](const OrientationState& s, const std::string& label) {
    ++report.states;
    switch (relation) {
      case Relation::Tetra: detail::tetra_rows(s, label, report); break;
      case Relation::Square: detail::square_rows(s, label, report); break;
      case Relation::Commute: detail::commute_rows(s, label, report); break;
    }
  };

  if (n <= 5) {
    const std::uint64_t total = std::uint64_t{1} << triple_count(n);
    for (std::uint64_t id = 0; id < total; ++id) visit(OrientationState::from_id(n, id), std::to_string(id));
  } else {
    report.exhaustive = false;
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(0.5);
    for (std::size_t k = 0; k < samples; ++k) {
      std::vector<std::int8_t> values(triple_count(n));
      for (auto& v : values) v = coin(rng) ? 1 : -1;
      visit(OrientationState(n, std::move(values)), "#" + std::to_string(k));
    }
  }
  return report;
}

inline std::string to_table(const CensusReport& report) {
  std::ostringstream out;
  out << "# census " << to_string(report.relation) << " n=" << report.n << " states=" << report.states
      << (report.exhaustive ? " (exhaustive)" : " (sampled)") << " cases=" << report.rows.size()
      << " violations=" << report.violations() << "\n";
  out << "state\tinstance\tstatuses\tviolation\tnote\n";
  for (const auto& r : report.rows) {
    out << r.state << '\t' << r.instance << '\t' << r.statuses << '\t' << (r.violation ? "VIOLATION" : "ok") << '\t'
        << r.note << '\n';
  }
  return out.str();
}

}  // namespace gbraid
