#include <gtest/gtest.h>

#include <algorithm>
#include <string>

#include "gp/error.hpp"
#include "gp/reduction.hpp"
#include "gp/thue.hpp"
#include "test_support.hpp"

namespace gp {
namespace {

using test::Fixture;

// Z/3 x Z/2 on letters x (with bar y) and b: schema 4 has nontrivial
// instances such as [xx] ~ [y] once syllables of length two are allowed.
constexpr char const* kZ3TimesZ2 =
    "vertices 1 2\n"
    "edge 1 2\n"
    "group 1 gens x y\n"
    "group 1 bar x y\n"
    "group 1 rel xxx\n"
    "group 1 iso poly 2\n"
    "group 1 backend table 3 0 1 2 1 2 0 2 0 1 map x=1 y=2\n"
    "group 2 gens b\n"
    "group 2 bar b b\n"
    "group 2 rel bb\n"
    "group 2 iso poly 2\n"
    "group 2 backend table 2 0 1 1 0 map b=1\n";

std::vector<std::string> texts(Fixture const& f, std::vector<SyllableWord> const& ws) {
  std::vector<std::string> out;
  for (auto const& w : ws) {
    out.push_back(to_string(f.p, w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool has_pair(Fixture const& f, std::vector<ThuePair> const& pairs, int schema,
              std::string const& lhs, std::string const& rhs) {
  return std::any_of(pairs.begin(), pairs.end(), [&](ThuePair const& pr) {
    return pr.schema == schema && to_string(f.p, pr.lhs) == lhs &&
           to_string(f.p, pr.rhs) == rhs;
  });
}

TEST(SchemaKind, ReducingAndEqual) {
  for (int s : {1, 2, 3}) {
    EXPECT_EQ(schema_kind(s), SchemaKind::Reducing);
  }
  for (int s : {4, 5}) {
    EXPECT_EQ(schema_kind(s), SchemaKind::Equal);
  }
  EXPECT_THROW((void)schema_kind(6), Error);
}

TEST(BoundedUniverse, ContentsAndOrder) {
  Fixture const f("F1");
  BoundedUniverse const u(f.oracles, 2, 2);
  // Norm 0: 1; norm 1: [a], [b]; norm 2: [aa], [bb] and four two-syllable words.
  EXPECT_EQ(u.words().size(), 9u);
  EXPECT_TRUE(u.words().front().empty());
  EXPECT_TRUE(u.contains(f.word("[b][a]")));
  EXPECT_FALSE(u.contains(f.word("[aaa]")));
  EXPECT_FALSE(u.contains(f.word("[a][a][a]")));
  for (std::size_t k = 1; k < u.words().size(); ++k) {
    EXPECT_LE(norm(u.words()[k - 1]), norm(u.words()[k]));
  }
  BoundedUniverse const tight(f.oracles, 4, 1);
  EXPECT_FALSE(tight.contains(f.word("[aa]")));
  EXPECT_TRUE(tight.contains(f.word("[a][b][a][b]")));
}

TEST(StepSuccessors, Examples) {
  Fixture const f("F1");
  BoundedUniverse const u(f.oracles, 4, 2);

  auto const aa = step_successors(u, f.word("[a][a]"));
  EXPECT_EQ(texts(f, aa.reducing), std::vector<std::string>{"[aa]"});
  EXPECT_TRUE(aa.equal.empty());

  auto const ab = step_successors(u, f.word("[a][b]"));
  EXPECT_TRUE(ab.reducing.empty());
  EXPECT_EQ(texts(f, ab.equal), std::vector<std::string>{"[b][a]"});

  auto const null = step_successors(u, f.word("[aa]"));
  EXPECT_EQ(texts(f, null.reducing), std::vector<std::string>{"[]"});
  EXPECT_TRUE(null.equal.empty());
}

TEST(StepSuccessors, SchemaFourAndTwo) {
  Fixture const f(cli::parse_input(kZ3TimesZ2));
  BoundedUniverse const u(f.oracles, 4, 2);
  auto const s = step_successors(u, f.word("[xx][b]"));
  // x^2 = y in Z/3, and xx is the only other word of length <= 2 for it.
  EXPECT_EQ(texts(f, s.equal), (std::vector<std::string>{"[b][xx]", "[y][b]"}));
  EXPECT_TRUE(s.reducing.empty());

  auto const jump = step_successors(u, f.word("[x][b][x]"));
  auto const red = texts(f, jump.reducing);
  EXPECT_NE(std::find(red.begin(), red.end(), "[xx][b]"), red.end());
}

TEST(InstantiatePairs, Examples) {
  Fixture const f1("F1");
  BoundedUniverse const u1(f1.oracles, 2, 2);
  auto const pairs = instantiate_pairs(u1);
  EXPECT_TRUE(has_pair(f1, pairs, 1, "[a][a]", "[aa]"));
  EXPECT_TRUE(has_pair(f1, pairs, 3, "[aa]", "[]"));
  EXPECT_TRUE(has_pair(f1, pairs, 5, "[a][b]", "[b][a]"));
  EXPECT_TRUE(std::none_of(pairs.begin(), pairs.end(),
                           [](ThuePair const& p) { return p.schema == 2; }));

  Fixture const f2("F2");
  BoundedUniverse const u2(f2.oracles, 2, 2);
  auto const p2 = instantiate_pairs(u2);
  EXPECT_TRUE(std::none_of(p2.begin(), p2.end(),
                           [](ThuePair const& p) { return p.schema == 5; }));

  BoundedUniverse const u3(f1.oracles, 3, 2);
  EXPECT_TRUE(has_pair(f1, instantiate_pairs(u3), 2, "[a][b][a]", "[aa][b]"));
}

TEST(InstantiatePairs, KindCorrectnessAndSymmetry) {
  for (auto const* name : {"F1", "F2", "F3"}) {
    Fixture const f(name);
    BoundedUniverse const u(f.oracles, 4, 2);
    for (auto const& pr : instantiate_pairs(u)) {
      if (schema_kind(pr.schema) == SchemaKind::Reducing) {
        EXPECT_GT(pr.lhs.size(), pr.rhs.size());
        EXPECT_TRUE(u.system().is_reducing_step(pr.lhs, pr.rhs));
      } else {
        EXPECT_EQ(pr.lhs.size(), pr.rhs.size());
        EXPECT_TRUE(u.system().is_equal_step(pr.lhs, pr.rhs));
        EXPECT_TRUE(u.system().is_equal_step(pr.rhs, pr.lhs));
      }
    }
  }
  Fixture const f(cli::parse_input(kZ3TimesZ2));
  BoundedUniverse const u(f.oracles, 3, 2);
  bool saw_schema_four = false;
  for (auto const& pr : instantiate_pairs(u)) {
    if (pr.schema == 4) {
      saw_schema_four = true;
      EXPECT_NE(pr.lhs, pr.rhs);
      EXPECT_TRUE(u.system().is_equal_step(pr.rhs, pr.lhs));
    }
  }
  EXPECT_TRUE(saw_schema_four);
}

TEST(EquivalenceClasses, Examples) {
  Fixture const f1("F1");
  BoundedUniverse const u1(f1.oracles, 4, 2);
  ConfluenceAnalysis const a1(u1);
  auto const cls = [&](Fixture const& f, BoundedUniverse const& u,
                       ConfluenceAnalysis const& a, std::string const& w) {
    return a.class_of(*u.index_of(f.word(w)));
  };
  for (auto const* w : {"[aa]", "[bb]", "[a][a]", "[aa][bb]", "[a][b][a][b]"}) {
    EXPECT_EQ(cls(f1, u1, a1, w), cls(f1, u1, a1, "")) << w;
  }
  EXPECT_EQ(cls(f1, u1, a1, "[b][a][b]"), cls(f1, u1, a1, "[a]"));
  EXPECT_NE(cls(f1, u1, a1, "[a][b]"), cls(f1, u1, a1, ""));

  Fixture const f2("F2");
  BoundedUniverse const u2(f2.oracles, 4, 2);
  ConfluenceAnalysis const a2(u2);
  EXPECT_NE(cls(f2, u2, a2, "[a][b][a][b]"), cls(f2, u2, a2, ""));

  auto const classes = equivalence_classes(u1);
  std::size_t total = 0;
  for (auto const& c : classes) {
    total += c.size();
  }
  EXPECT_EQ(total, u1.words().size());
  // Four group elements; the universe is large enough to connect each class.
  EXPECT_EQ(classes.size(), 4u);
}

TEST(EquivalenceClasses, MatchTheWordProblemWellInsideTheUniverse) {
  for (auto const* name : {"F1", "F2", "F3"}) {
    Fixture const f(name);
    BoundedUniverse const u(f.oracles, 6, 2);
    ConfluenceAnalysis const a(u);
    auto const empty = a.class_of(*u.index_of({}));
    for (std::size_t k = 0; k < u.words().size(); ++k) {
      auto const& w = u.words()[k];
      if (norm(w) > 3) {
        break;
      }
      EXPECT_EQ(a.class_of(k) == empty, reduce(f.oracles, w).has_value())
          << name << " " << to_string(f.p, w);
    }
  }
}

TEST(AlmostConfluentPair, Examples) {
  Fixture const f("F1");
  BoundedUniverse const u(f.oracles, 4, 2);
  EXPECT_TRUE(almost_confluent_pair(u, f.word("[a][b]"), f.word("[b][a]")));
  EXPECT_TRUE(almost_confluent_pair(u, f.word("[a][b][a][b]"), {}));
  EXPECT_TRUE(almost_confluent_pair(u, f.word("[a][b]"), f.word("[a][b]")));
  EXPECT_FALSE(almost_confluent_pair(u, f.word("[a]"), f.word("[b]")));
}

TEST(CheckAlmostConfluence, FixturesHaveNoCounterexamples) {
  for (auto const* name : {"F1", "F2", "F3"}) {
    Fixture const f(name);
    BoundedUniverse const u(f.oracles, 6, 2);
    auto const confluence = check_almost_confluence(u, 3);
    EXPECT_EQ(confluence.failures(), 0u) << name;
    EXPECT_GT(confluence.instances, 0u);
    auto const huet = check_huet_criterion(u, 3);
    EXPECT_EQ(huet.failures(), 0u) << name;
    EXPECT_GT(huet.instances, 0u);
  }
}

TEST(CheckAlmostConfluence, NontrivialSchemaFour) {
  Fixture const f(cli::parse_input(kZ3TimesZ2));
  BoundedUniverse const u(f.oracles, 6, 3);
  EXPECT_EQ(check_almost_confluence(u, 3).failures(), 0u);
}

// With a nontrivial schema 4 the syllable cap truncates resolutions: [x][xx]
// only reduces through [xxx]. Such pairs are reported, and each one resolves
// once longer syllables are allowed.
TEST(CheckAlmostConfluence, SyllableCapCounterexamplesAreTruncation) {
  Fixture const f(cli::parse_input(kZ3TimesZ2));
  BoundedUniverse const narrow(f.oracles, 6, 2);
  BoundedUniverse const wide(f.oracles, 6, 6);
  ConfluenceAnalysis const resolved(wide);
  auto const joins = [&](SyllableWord const& x, SyllableWord const& y) {
    return resolved.almost_confluent(*wide.index_of(x), *wide.index_of(y));
  };
  auto const confluence = check_almost_confluence(narrow, 3);
  EXPECT_GT(confluence.failures(), 0u);
  bool saw = false;
  for (auto const& [x, y] : confluence.counterexamples) {
    saw = saw || (x.empty() && to_string(f.p, y) == "[x][xx]");
    EXPECT_TRUE(joins(x, y))
        << to_string(f.p, x) << " " << to_string(f.p, y);
  }
  EXPECT_TRUE(saw);

  BoundedUniverse const mid(f.oracles, 6, 3);
  auto const huet = check_huet_criterion(mid, 3);
  EXPECT_GT(huet.failures(), 0u);
  for (auto const& [x, y] : huet.counterexamples) {
    EXPECT_TRUE(joins(x, y))
        << to_string(f.p, x) << " " << to_string(f.p, y);
  }
}

TEST(CheckAlmostConfluence, BudgetMustFitUniverse) {
  Fixture const f("F1");
  BoundedUniverse const u(f.oracles, 5, 2);
  try {
    (void)check_almost_confluence(u, 3);
    FAIL() << "expected IndexOutOfRange";
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), Errc::IndexOutOfRange);
  }
}

TEST(CheckHuetCriterion, SingleVertex) {
  Fixture const f(cli::parse_input(
      "vertices 1\n"
      "group 1 gens a\n"
      "group 1 bar a a\n"
      "group 1 rel aa\n"
      "group 1 iso poly 2\n"
      "group 1 backend table 2 0 1 1 0 map a=1\n"));
  BoundedUniverse const u(f.oracles, 4, 2);
  EXPECT_EQ(check_huet_criterion(u, 2).failures(), 0u);
  EXPECT_EQ(check_almost_confluence(u, 2).failures(), 0u);
}

TEST(CheckHuetCriterion, ReportHeaderMatchesCounts) {
  Fixture const f(cli::parse_input(kZ3TimesZ2));
  BoundedUniverse const u(f.oracles, 3, 1);
  auto const report = check_huet_criterion(u, 1);
  EXPECT_EQ(report.id, "huet");
  auto const text = render_report(f.p, report);
  EXPECT_EQ(text.rfind("case=huet instances=" + std::to_string(report.instances) +
                           " failures=" + std::to_string(report.failures()),
                       0),
            0u);
}

TEST(VerifyCriticalCases, SixCasesOnF1) {
  Fixture const f("F1");
  BoundedUniverse const u(f.oracles, 7, 2);
  auto const reports = verify_critical_cases(u);
  ASSERT_EQ(reports.size(), 6u);
  for (std::size_t k = 0; k < reports.size(); ++k) {
    EXPECT_EQ(reports[k].id, std::to_string(k + 1));
    EXPECT_GE(reports[k].instances, 1u) << reports[k].id;
    EXPECT_EQ(reports[k].failures(), 0u) << reports[k].id;
  }
}

TEST(VerifyCriticalCases, SchemaFourGroup) {
  Fixture const f(cli::parse_input(kZ3TimesZ2));
  BoundedUniverse const u(f.oracles, 6, 2);
  for (auto const& r : verify_critical_cases(u)) {
    EXPECT_GE(r.instances, 1u) << r.id;
    EXPECT_EQ(r.failures(), 0u) << r.id;
  }
}

TEST(VerifyCriticalCases, SmallUniverseIsAnError) {
  Fixture const f("F1");
  BoundedUniverse const u(f.oracles, 2, 2);
  try {
    (void)verify_critical_cases(u);
    FAIL() << "expected EmptyInstantiation";
  } catch (Error const& e) {
    EXPECT_EQ(e.code(), Errc::EmptyInstantiation);
  }
}

TEST(RenderReport, Format) {
  Fixture const f("F1");
  CheckReport r{"confluence", 12, {}};
  EXPECT_EQ(render_report(f.p, r), "case=confluence instances=12 failures=0\n");
  r.counterexamples.emplace_back(f.word("[a]"), f.word("[b][a]"));
  EXPECT_EQ(render_report(f.p, r),
            "case=confluence instances=12 failures=1\n"
            "counterexample [a] [b][a]\n");
}

TEST(Thue, HuetSubsumption) {
  for (auto const* name : {"F1", "F2", "F3"}) {
    Fixture const f(name);
    for (std::size_t L : {4u, 6u}) {
      BoundedUniverse const u(f.oracles, L, 2);
      if (check_huet_criterion(u, L / 2).failures() == 0) {
        EXPECT_EQ(check_almost_confluence(u, L / 2).failures(), 0u) << name << L;
      }
    }
  }
}

}  // namespace
}  // namespace gp
