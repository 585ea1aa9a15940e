#include <gtest/gtest.h>

#include <map>
#include <string>

#include "gp/error.hpp"
#include "gp/isofunctions.hpp"
#include "gp/reduction.hpp"
#include "test_support.hpp"

namespace gp {
namespace {

using test::Fixture;

std::string text(Fixture const& f, SyllableWord const& w) { return to_string(f.p, w); }

Errc move_error(Fixture const& f, std::string const& w, Move const& m) {
  try {
    (void)apply_move(f.oracles, f.word(w), m);
  } catch (Error const& e) {
    return e.code();
  }
  ADD_FAILURE() << "move unexpectedly applied";
  return Errc::Parse;
}

TEST(ApplyMove, Examples) {
  Fixture const f("F1");
  EXPECT_EQ(text(f, apply_move(f.oracles, f.word("[aa][b][b]"), Move::merge(1))),
            "[aa][bb]");
  EXPECT_EQ(text(f, apply_move(f.oracles, f.word("[a][b][a][b]"), Move::jump_merge(0, 2))),
            "[aa][b][b]");
  EXPECT_EQ(text(f, apply_move(f.oracles, f.word("[aa][bb]"), Move::erase(0))), "[bb]");
}

TEST(ApplyMove, JumpMergeKeepsSpanAfterMergedSyllable) {
  Fixture const f("F3");
  EXPECT_EQ(text(f, apply_move(f.oracles, f.word("[c][b][a][b][b][a][c]"),
                               Move::jump_merge(2, 5))),
            "[c][b][aa][b][b][c]");
}

TEST(ApplyMove, Inapplicable) {
  Fixture const f("F1");
  EXPECT_EQ(move_error(f, "[a][b]", Move::merge(0)), Errc::InapplicableMove);
  EXPECT_EQ(move_error(f, "[a][b]", Move::erase(0)), Errc::InapplicableMove);
  EXPECT_EQ(move_error(f, "[a][b]", Move::erase(2)), Errc::InapplicableMove);
  EXPECT_EQ(move_error(f, "[a][a]", Move::jump_merge(0, 1)), Errc::InapplicableMove);
  Fixture const f2("F2");
  // [b] is not in the star of vertex 1 without the edge.
  EXPECT_EQ(move_error(f2, "[a][b][a]", Move::jump_merge(0, 2)), Errc::InapplicableMove);
  Fixture const f3("F3");
  EXPECT_EQ(move_error(f3, "[a][c][a]", Move::jump_merge(0, 2)), Errc::InapplicableMove);
}

TEST(MoveWeight, Examples) {
  Fixture const f("F1");
  auto const sq = FunctionClass::polynomial(2);
  EXPECT_EQ(move_weight(f.oracles, f.word("[aa][b][b]"), Move::merge(1), sq), 0u);
  EXPECT_EQ(move_weight(f.oracles, f.word("[a][b][a][b]"), Move::jump_merge(0, 2), sq), 1u);
  EXPECT_EQ(move_weight(f.oracles, f.word("[aa][bb]"), Move::erase(0), sq), 4u);
  // ||Q|| * |v| with Q = [bb][b] and v = aaa.
  EXPECT_EQ(move_weight(f.oracles, f.word("[a][bb][b][aaa]"), Move::jump_merge(0, 3), sq),
            9u);
  EXPECT_THROW(
      (void)move_weight(f.oracles, f.word("[a][b]"), Move::erase(0), sq), Error);
}

TEST(EnumerateMoves, Examples) {
  Fixture const f("F1");
  EXPECT_EQ(enumerate_moves(f.oracles, f.word("[a][b][a]")),
            std::vector<Move>{Move::jump_merge(0, 2)});
  EXPECT_EQ(enumerate_moves(f.oracles, f.word("[aa]")), std::vector<Move>{Move::erase(0)});
  EXPECT_TRUE(enumerate_moves(f.oracles, {}).empty());
}

TEST(EnumerateMoves, OrderIsKindThenPosition) {
  Fixture const f("F1");
  auto const moves = enumerate_moves(f.oracles, f.word("[aa][a][b][bb]"));
  EXPECT_EQ(moves, (std::vector<Move>{Move::merge(0), Move::merge(2), Move::erase(0),
                                      Move::erase(3)}));
  auto const jumps = enumerate_moves(f.oracles, f.word("[a][b][a][b][a]"));
  EXPECT_EQ(jumps, (std::vector<Move>{Move::jump_merge(0, 2), Move::jump_merge(1, 3),
                                      Move::jump_merge(2, 4)}));
}

TEST(EnumerateMoves, EveryListedMoveApplies) {
  Fixture const f("F3");
  for (std::size_t n = 0; n <= 4; ++n) {
    for (auto const& t : test::all_syllable_texts("abc", n)) {
      auto const w = f.word(t);
      for (auto const& m : enumerate_moves(f.oracles, w)) {
        EXPECT_NO_THROW(check_applicable(f.oracles, w, m)) << t << " " << to_string(m);
      }
    }
  }
}

TEST(FindLeadingBlock, Examples) {
  Fixture const f("F1");
  auto const block = find_leading_block(f.oracles, f.word("[a][b][a][b]"));
  ASSERT_TRUE(block.has_value());
  EXPECT_EQ(block->vertex, 1);
  EXPECT_TRUE(block->prefix.empty());
  EXPECT_EQ(block->chain, (std::vector<std::size_t>{0, 2}));
  ASSERT_EQ(block->separators.size(), 1u);
  EXPECT_EQ(text(f, block->separators[0]), "[b]");
  EXPECT_EQ(text(f, block->suffix), "[b]");

  EXPECT_FALSE(find_leading_block(f.oracles, f.word("[a][b]")).has_value());

  auto const single = find_leading_block(f.oracles, f.word("[aa]"));
  ASSERT_TRUE(single.has_value());
  EXPECT_EQ(single->vertex, 1);
  EXPECT_EQ(single->length(), 1u);
  EXPECT_TRUE(single->separators.empty());
}

TEST(FindLeadingBlock, PrefixMayHoldOtherSyllables) {
  Fixture const f("F3");
  // Vertex 1 has no null chain here; vertex 2 chains [b] .. [b] across [c].
  auto const block = find_leading_block(f.oracles, f.word("[a][c][b][c][b]"));
  ASSERT_TRUE(block.has_value());
  EXPECT_EQ(block->vertex, 2);
  EXPECT_EQ(text(f, block->prefix), "[a][c]");
  EXPECT_EQ(block->chain, (std::vector<std::size_t>{2, 4}));
  EXPECT_TRUE(block->suffix.empty());
}

TEST(Reduce, F1Trace) {
  Fixture const f("F1");
  auto const s = reduce(f.oracles, f.word("[a][b][a][b]"));
  ASSERT_TRUE(s.has_value());
  ASSERT_EQ(s->steps.size(), 4u);
  EXPECT_EQ(s->steps[0].move, Move::jump_merge(0, 2));
  EXPECT_EQ(s->steps[0].weight, 1u);
  EXPECT_EQ(s->steps[1].move, Move::erase(0));
  EXPECT_EQ(s->steps[1].weight, 4u);
  EXPECT_EQ(s->steps[2].move, Move::merge(0));
  EXPECT_EQ(s->steps[2].weight, 0u);
  EXPECT_EQ(s->steps[3].move, Move::erase(0));
  EXPECT_EQ(s->steps[3].weight, 4u);
  EXPECT_TRUE(s->complete());
  EXPECT_EQ(weight_of_sequence(f.oracles, *s, f.p.f()), 9u);
  EXPECT_EQ(render_trace(f.p, *s),
            "[a][b][a][b] --JumpMerge(0,2) w=1--> [aa][b][b]\n"
            "[aa][b][b] --Delete(0) w=4--> [b][b]\n"
            "[b][b] --Merge(0) w=0--> [bb]\n"
            "[bb] --Delete(0) w=4--> []\n");
}

TEST(Reduce, F2AlternatingWordIsNotNull) {
  Fixture const f("F2");
  EXPECT_FALSE(reduce(f.oracles, f.word("[a][b][a][b]")).has_value());
}

TEST(Reduce, EmptyWord) {
  Fixture const f("F1");
  auto const s = reduce(f.oracles, {});
  ASSERT_TRUE(s.has_value());
  EXPECT_TRUE(s->steps.empty());
  EXPECT_EQ(weight_of_sequence(f.oracles, *s, f.p.f()), 0u);
}

TEST(WeightOfSequence, SingleDelete) {
  Fixture const f("F1");
  auto const s = reduce(f.oracles, f.word("[aa]"));
  ASSERT_TRUE(s.has_value());
  ASSERT_EQ(s->steps.size(), 1u);
  EXPECT_EQ(weight_of_sequence(f.oracles, *s, FunctionClass::polynomial(2)), 4u);
  EXPECT_EQ(weight_of_sequence(f.oracles, *s, FunctionClass::exponential()), 4u);
  EXPECT_EQ(weight_of_sequence(f.oracles, *s, FunctionClass::polynomial(3)), 8u);
}

TEST(IsIdentityInProduct, Examples) {
  Fixture const f1("F1");
  Fixture const f2("F2");
  EXPECT_TRUE(is_identity_in_product(f1.oracles, f1.letters("abab")));
  EXPECT_FALSE(is_identity_in_product(f2.oracles, f2.letters("abab")));
  EXPECT_TRUE(is_identity_in_product(f1.oracles, {}));
  EXPECT_TRUE(is_identity_in_product(f2.oracles, {}));
}

// Every move applicable to any word of norm <= 6 keeps beta(W) in the same
// group element, judged by an oracle that never looks at syllables.
template <typename Oracle>
void expect_image_preserved(Fixture const& f, std::string const& alphabet,
                            Oracle const& same) {
  for (std::size_t n = 0; n <= 6; ++n) {
    for (auto const& t : test::all_syllable_texts(alphabet, n)) {
      auto const w = f.word(t);
      std::string const before = f.p.render(beta(w));
      for (auto const& m : enumerate_moves(f.oracles, w)) {
        auto const after = f.p.render(beta(apply_move(f.oracles, w, m)));
        ASSERT_TRUE(same(before, after)) << t << " " << to_string(m);
        ASSERT_EQ(apply_move(f.oracles, w, m).size() + 1, w.size());
      }
    }
  }
}

TEST(Reduce, MovesPreserveTheImage) {
  Fixture const f1("F1");
  expect_image_preserved(f1, "ab", [](std::string const& x, std::string const& y) {
    return test::parity_vector(x) == test::parity_vector(y);
  });
  Fixture const f3("F3");
  auto const racg = test::f3_oracle();
  expect_image_preserved(f3, "abc", [&](std::string const& x, std::string const& y) {
    std::string r(y.rbegin(), y.rend());  // y^-1, as every letter is an involution
    return racg.is_identity(x + r);
  });
}

template <typename Oracle>
void expect_decision_matches(char const* name, std::string const& alphabet,
                             std::size_t max_len, Oracle const& is_identity) {
  Fixture const f(name);
  for (std::size_t n = 0; n <= max_len; ++n) {
    for (auto const& w : test::all_words(alphabet, n)) {
      ASSERT_EQ(is_identity_in_product(f.oracles, f.letters(w)), is_identity(w))
          << name << " " << w;
    }
  }
}

TEST(IsIdentityInProduct, F1AgreesWithKleinGroup) {
  expect_decision_matches("F1", "ab", 10, test::klein_is_identity);
}

TEST(IsIdentityInProduct, F2AgreesWithFreeProductNormalForm) {
  expect_decision_matches("F2", "ab", 10, test::free_product_z2_is_identity);
}

TEST(IsIdentityInProduct, F3AgreesWithReflectionRepresentation) {
  auto const racg = test::f3_oracle();
  expect_decision_matches("F3", "abc", 8,
                          [&](std::string const& w) { return racg.is_identity(w); });
}

TEST(Reduce, WeightBoundAndTermination) {
  for (auto const& [name, alphabet] : {std::pair{"F1", "ab"}, std::pair{"F3", "abc"}}) {
    Fixture const f(name);
    GTable const g(f.p.f(), 8);
    for (std::size_t n = 0; n <= 8; ++n) {
      for (auto const& t : test::all_syllable_texts(alphabet, n)) {
        auto const w = f.word(t);
        auto const s = reduce(f.oracles, w);
        if (!s) {
          continue;
        }
        ASSERT_TRUE(s->complete());
        EXPECT_LE(s->steps.size(), w.size() + n) << t;
        for (auto const& step : s->steps) {
          if (step.move.kind == MoveKind::Delete) {
            EXPECT_GT(step.word[step.move.p].length(), 0u);
          }
        }
        EXPECT_LE(weight_of_sequence(f.oracles, *s, f.p.f()), n * n + g(n)) << name << t;
      }
    }
  }
}

TEST(Reduce, StepsReplayThroughApplyMove) {
  Fixture const f("F3");
  for (std::size_t n = 0; n <= 6; ++n) {
    for (auto const& t : test::all_syllable_texts("abc", n)) {
      auto const s = reduce(f.oracles, f.word(t));
      if (!s) {
        continue;
      }
      SyllableWord cur = s->start;
      for (auto const& step : s->steps) {
        ASSERT_EQ(step.word, cur);
        ASSERT_EQ(step.weight, move_weight(f.oracles, cur, step.move, f.p.f()));
        cur = apply_move(f.oracles, cur, step.move);
      }
      EXPECT_EQ(cur, s->end);
    }
  }
}

// Whether any sequence of moves from w reaches the empty word.
bool some_sequence_reaches_empty(OracleSet const& oracles, SyllableWord const& w,
                                 std::map<SyllableWord, bool>& memo) {
  if (w.empty()) {
    return true;
  }
  if (auto it = memo.find(w); it != memo.end()) {
    return it->second;
  }
  bool found = false;
  for (auto const& m : enumerate_moves(oracles, w)) {
    if (some_sequence_reaches_empty(oracles, apply_move(oracles, w, m), memo)) {
      found = true;
      break;
    }
  }
  memo.emplace(w, found);
  return found;
}

TEST(Reduce, DecisionIsStrategyIndependent) {
  for (auto const* name : {"F1", "F2"}) {
    Fixture const f(name);
    std::map<SyllableWord, bool> memo;
    for (std::size_t n = 0; n <= 5; ++n) {
      for (auto const& t : test::all_syllable_texts("ab", n)) {
        auto const w = f.word(t);
        EXPECT_EQ(some_sequence_reaches_empty(f.oracles, w, memo),
                  reduce(f.oracles, w).has_value())
            << name << " " << t;
      }
    }
  }
}

}  // namespace
}  // namespace gp
