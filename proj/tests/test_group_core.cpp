#include <random>

#include <gtest/gtest.h>

#include "gbraid/group_core.hpp"
#include "random_programs.hpp"

using namespace gbraid;

namespace {

GWord w4(const char* text) { return parse_word(text, 4); }
GWord w5(const char* text) { return parse_word(text, 5); }

bool contains_move(const std::vector<RelationMove>& moves, MoveKind kind, std::size_t pos) {
  return std::any_of(moves.begin(), moves.end(), [&](const RelationMove& m) { return m.kind == kind && m.position == pos; });
}

}  // namespace

TEST(GenTriple, CanonicalisesAnyOrder) {
  EXPECT_EQ(GenTriple(5, 3, 1, 2), GenTriple(5, 1, 2, 3));
  EXPECT_EQ(GenTriple(5, 2, 3, 1), GenTriple(5, 1, 3, 2));
  EXPECT_EQ(GenTriple(5, 5, 1, 3).elems(), (std::array<Strand, 3>{1, 3, 5}));
}

TEST(GenTriple, RejectsBadIndices) {
  EXPECT_THROW(GenTriple(4, 1, 1, 2), Error);
  EXPECT_THROW(GenTriple(4, 0, 1, 2), Error);
  EXPECT_THROW(GenTriple(4, 1, 2, 5), Error);
  EXPECT_THROW(GenTriple(3, 1, 2, 3), Error);
}

TEST(GenTriple, ColexRankIsABijection) {
  for (int n : {4, 5, 7}) {
    std::vector<bool> hit(triple_count(n), false);
    for (const auto& g : all_triples(n)) {
      ASSERT_LT(g.rank(), hit.size());
      EXPECT_FALSE(hit[g.rank()]);
      hit[g.rank()] = true;
    }
  }
}

TEST(WordText, CompactAndGeneralForms) {
  EXPECT_EQ(to_string(w4("a321 a134")), "a123 a134");
  const auto w = parse_word("a(12,3,1) a(2,11,10)", 12);
  EXPECT_EQ(to_string(w), "a(1,3,12) a(2,10,11)");
  EXPECT_EQ(parse_word(to_string(w), 12), w);
  EXPECT_TRUE(parse_word("  \n ", 4).empty());
  EXPECT_EQ(to_string(GWord(4)), "");
}

TEST(WordText, ParseErrors) {
  EXPECT_THROW(parse_word("a12", 4), Error);        // wrong cardinality for G_n^3
  EXPECT_THROW(parse_word("a125", 4), Error);       // index out of range
  EXPECT_THROW(parse_word("b123", 4), Error);
  EXPECT_THROW(parse_word("a(1,2", 12), Error);
  EXPECT_THROW(parse_word("a113", 4), Error);
  try {
    parse_word("a12x", 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
  }
}

TEST(WordText, OtherCardinalitiesParseAtDataLevel) {
  const auto letters = parse_subset_word("a1234 a(2,9,4,1) a12");
  ASSERT_EQ(letters.size(), 3u);
  EXPECT_EQ(letters[0], (GenSubset{1, 2, 3, 4}));
  EXPECT_EQ(letters[1], (GenSubset{1, 2, 4, 9}));
  EXPECT_EQ(letters[2], (GenSubset{1, 2}));
}

TEST(FreeReduce, Examples) {
  EXPECT_TRUE(free_reduce(w4("a123 a123")).empty());
  EXPECT_TRUE(free_reduce(w4("a123 a124 a124 a123")).empty());
  EXPECT_EQ(free_reduce(w4("a123 a124 a123")), w4("a123 a124 a123"));
}

TEST(FreeReduce, IdempotentAndReduced) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto w = testgen::random_word(rng, 4, 16);
    const auto r = free_reduce(w);
    EXPECT_LE(r.size(), w.size());
    EXPECT_EQ(free_reduce(r), r);
    for (std::size_t t = 0; t + 1 < r.size(); ++t) EXPECT_NE(r[t], r[t + 1]);
  }
}

TEST(ApplicableMoves, Examples) {
  EXPECT_TRUE(contains_move(applicable_moves(w4("a123 a124 a134 a234"), false, 0), MoveKind::TetraReverse, 0));
  EXPECT_TRUE(contains_move(applicable_moves(w5("a123 a145"), false, 0), MoveKind::FarCommute, 0));
  EXPECT_FALSE(contains_move(applicable_moves(w5("a123 a124"), false, 0), MoveKind::FarCommute, 0));
}

TEST(ApplicableMoves, NoFarCommutationForFourStrands) {
  // Two distinct 3-subsets of a 4-set always share two elements.
  const auto gens = all_triples(4);
  for (const auto& g : gens)
    for (const auto& h : gens)
      if (!(g == h)) {
        EXPECT_EQ(g.shared_with(h), 2);
      }
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    for (const auto& m : applicable_moves(testgen::random_word(rng, 4, 12), false, 0)) {
      EXPECT_NE(m.kind, MoveKind::FarCommute);
    }
  }
}

TEST(ApplicableMoves, InsertionRespectsLengthCap) {
  const auto w = w4("a123");
  EXPECT_TRUE(applicable_moves(w, true, 2).empty());
  const auto moves = applicable_moves(w, true, 3);
  EXPECT_EQ(moves.size(), 2u * 4u);  // two positions x four generators
  for (const auto& m : moves) EXPECT_EQ(m.kind, MoveKind::SquareInsert);
}

TEST(ApplyMove, Examples) {
  EXPECT_EQ(apply_move(w4("a123 a124 a134 a234"), {MoveKind::TetraReverse, 0, std::nullopt}),
            w4("a234 a134 a124 a123"));
  EXPECT_EQ(apply_move(w5("a123 a145"), {MoveKind::FarCommute, 0, std::nullopt}), w5("a145 a123"));
  EXPECT_TRUE(apply_move(w4("a123 a123"), {MoveKind::SquareDelete, 0, std::nullopt}).empty());
  EXPECT_EQ(apply_move(w4("a123"), {MoveKind::SquareInsert, 1, GenTriple(4, 2, 3, 4)}), w4("a123 a234 a234"));
}

TEST(ApplyMove, RejectsMismatchedPatterns) {
  EXPECT_THROW(apply_move(w4("a123 a124"), {MoveKind::SquareDelete, 0, std::nullopt}), Error);
  EXPECT_THROW(apply_move(w5("a123 a124"), {MoveKind::FarCommute, 0, std::nullopt}), Error);
  EXPECT_THROW(apply_move(w4("a123 a124 a134 a134"), {MoveKind::TetraReverse, 0, std::nullopt}), Error);
  EXPECT_THROW(apply_move(w4("a123"), {MoveKind::SquareInsert, 3, GenTriple(4, 1, 2, 3)}), Error);
  try {
    apply_move(w4("a123"), {MoveKind::SquareDelete, 0, std::nullopt});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidMove);
  }
}

TEST(ApplyMove, InvolutionsAndInverses) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = trial % 2 == 0 ? 4 : 5;
    const auto w = testgen::random_word(rng, n, 12);
    for (const auto& m : applicable_moves(w, true, w.size() + 2)) {
      const auto moved = apply_move(w, m);
      if (m.kind == MoveKind::FarCommute || m.kind == MoveKind::TetraReverse) {
        EXPECT_EQ(apply_move(moved, m), w);
      } else if (m.kind == MoveKind::SquareInsert) {
        EXPECT_EQ(apply_move(moved, {MoveKind::SquareDelete, m.position, std::nullopt}), w);
      }
    }
  }
}

TEST(Parity, Examples) {
  const auto p = generator_parity(w4("a123 a124 a123"));
  EXPECT_EQ(p.odd_generators(), (std::vector<GenTriple>{GenTriple(4, 1, 2, 4)}));
  EXPECT_EQ(generator_parity(w4("a123 a124 a134 a234")), generator_parity(w4("a234 a134 a124 a123")));
  EXPECT_TRUE(generator_parity(GWord(4)).is_zero());
}

TEST(Parity, PreservedByEveryMove) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 4 + trial % 3;
    const auto w = testgen::random_word(rng, n, 10);
    const auto p = generator_parity(w);
    for (const auto& m : applicable_moves(w, true, w.size() + 2)) EXPECT_EQ(generator_parity(apply_move(w, m)), p);
  }
}

TEST(RelationPatterns, Counts) {
  // n=4: 4 squares, no far pairs, 24 tetrahedron orderings.
  EXPECT_EQ(relation_patterns(4).size(), 4u + 0u + 24u);
  // n=5: 10 squares, 10*3 ordered far pairs, 5 four-subsets x 24 orderings.
  EXPECT_EQ(relation_patterns(5).size(), 10u + 30u + 120u);
}

TEST(BoundedEqual, Examples) {
  const auto v = bounded_equal(w4("a123 a124 a134 a234"), w4("a234 a134 a124 a123"), 1000, 8);
  ASSERT_EQ(v.kind, EqualityVerdict::Kind::Equal);
  EXPECT_EQ(v.path.size(), 1u);
  EXPECT_EQ(bounded_equal(w4("a123"), w4("a124"), 1000, 8).kind, EqualityVerdict::Kind::Distinct);
  EXPECT_EQ(bounded_equal(w4("a123"), GWord(4), 1000, 8).kind, EqualityVerdict::Kind::Distinct);
  EXPECT_EQ(bounded_equal(w4("a123"), w4("a123"), 0, 0).kind, EqualityVerdict::Kind::Equal);
}

TEST(BoundedEqual, DimensionMismatch) {
  try {
    bounded_equal(GWord(4), GWord(5), 10, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
  }
}

TEST(BoundedEqual, UnknownWhenBudgetExhausted) {
  // Same parity, but no path within a tiny budget.
  const auto v = bounded_equal(w4("a123 a124 a123 a124"), GWord(4), 3, 4);
  EXPECT_EQ(v.kind, EqualityVerdict::Kind::Unknown);
}

TEST(BoundedEqual, PathsReplayAndVerdictsAreSound) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = testgen::random_word(rng, 4, 5);
    // Scramble `a` by a few moves so an equal partner exists.
    GWord b = a;
    for (int step = 0; step < 3; ++step) {
      const auto moves = applicable_moves(b, true, b.size() + 2);
      if (moves.empty()) break;
      b = apply_move(b, moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)]);
    }
    const auto v = bounded_equal(a, b, 4000, a.size() + 4);
    if (v.kind == EqualityVerdict::Kind::Equal) {
      GWord replay = a;
      for (const auto& m : v.path) replay = apply_move(replay, m);
      EXPECT_EQ(replay, b);
    }
    EXPECT_NE(v.kind, EqualityVerdict::Kind::Distinct);  // parities agree by construction
    EXPECT_EQ(bounded_equal(a, b, 4000, a.size() + 4).kind, v.kind);  // deterministic
  }
}
