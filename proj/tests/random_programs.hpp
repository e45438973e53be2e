#pragma once

// Seeded generators for random words and random generic move programs.

#include <random>
#include <vector>

#include "gbraid/gbraid.hpp"

namespace testgen {

using gbraid::Rational;
using gbraid::RationalPoint;

inline gbraid::GWord random_word(std::mt19937_64& rng, int n, std::size_t max_len) {
  const auto gens = gbraid::all_triples(n);
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::vector<gbraid::GenTriple> letters;
  const std::size_t l = len(rng);
  for (std::size_t t = 0; t < l; ++t) letters.push_back(gens[pick(rng)]);
  return gbraid::GWord(n, std::move(letters));
}

inline RationalPoint random_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> den(1, 12);
  const int q = den(rng);
  std::uniform_int_distribution<int> num(-3 * q / 2, 3 * q / 2);
  const int qy = den(rng);
  std::uniform_int_distribution<int> numy(-3 * qy / 2, 3 * qy / 2);
  return {Rational(num(rng), q), Rational(numy(rng), qy)};
}

/// Random program on the regular configuration with `moves` straight moves.
/// When `closed`, every moved strand then returns home, and a full twist may
/// be prepended. Draws again until the program compiles.
inline gbraid::MoveProgram random_program(std::mt19937_64& rng, int n, int moves, bool closed, bool allow_twist) {
  const auto start = gbraid::regular_rational_configuration(n);
  std::uniform_int_distribution<int> strand(1, n);
  std::uniform_int_distribution<int> twist(-2, 2);
  for (;;) {
    gbraid::MoveProgram p{start, {}, closed};
    if (allow_twist) {
      const int t = twist(rng);
      if (t != 0 && t % 2 == 0) p.moves.push_back(gbraid::FullTwistMove{t / 2});
    }
    std::vector<int> moved;
    for (int m = 0; m < moves; ++m) {
      const int s = strand(rng);
      p.moves.push_back(gbraid::LinearMove{s, random_point(rng)});
      if (std::find(moved.begin(), moved.end(), s) == moved.end()) moved.push_back(s);
    }
    if (closed) {
      for (int s : moved) p.moves.push_back(gbraid::LinearMove{s, start.at(s)});
    }
    try {
      gbraid::compile(p);
      return p;
    } catch (const gbraid::Error&) {
    }
  }
}

}  // namespace testgen
