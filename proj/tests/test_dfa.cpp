#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "rootsc/dfa.hpp"
#include "rootsc/errors.hpp"

using namespace rootsc;

namespace {

constexpr const char* kExample = R"(# two-letter example
states 5
alphabet a b
start 1
finals 1

trans a 2 1 4 5 3
trans b 2 3 4 1 2
)";

Dfa unary_chain(std::size_t states, std::size_t loop_to, std::vector<State> finals) {
  std::vector<State> col(states);
  for (std::size_t i = 0; i < states; ++i) col[i] = static_cast<State>(i + 1 < states ? i + 1 : loop_to);
  return Dfa({"a"}, {col}, 0, std::move(finals));
}

}  // namespace

TEST(DfaFormat, ParsesExample) {
  const auto d = parse_dfa(kExample);
  EXPECT_EQ(d.size(), 5u);
  EXPECT_EQ(d.alphabet(), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(d.start(), 0u);
  EXPECT_EQ(d.finals(), (std::vector<State>{0}));
  EXPECT_EQ(d.letter_transformation(0), (Transformation{2, 1, 4, 5, 3}));
  EXPECT_EQ(d.letter_transformation(1), (Transformation{2, 3, 4, 1, 2}));
}

TEST(DfaFormat, SerializeIsCanonical) {
  const auto d = parse_dfa(kExample);
  EXPECT_EQ(serialize(d),
            "states 5\nalphabet a b\nstart 1\nfinals 1\ntrans a 2 1 4 5 3\ntrans b 2 3 4 1 2\n");
  EXPECT_EQ(parse_dfa(serialize(d)), d);
}

TEST(DfaFormat, Errors) {
  auto error_of = [](const std::string& text) -> std::string {
    try {
      parse_dfa(text);
    } catch (const ParseError& e) {
      return e.what();
    }
    return "no error";
  };
  EXPECT_EQ(error_of("states 5\nalphabet a\nstart 1\nfinals 1\ntrans a 2 1 4 5 6\n"),
            "line 5: state 6 out of range");
  EXPECT_EQ(error_of("states 2\nalphabet a a\nstart 1\nfinals\ntrans a 1 2\n"),
            "line 2: duplicate letter 'a'");
  EXPECT_EQ(error_of("states 2\nalphabet a\nfinals\ntrans a 1 2\n"), "missing 'start' line");
  EXPECT_EQ(error_of("states 2\nalphabet a b\nstart 1\nfinals\ntrans a 1 2\n"),
            "missing 'trans' line for letter 'b'");
  EXPECT_EQ(error_of("states 2\nalphabet a\nstart 1\nfinals\ntrans a 1\n"),
            "line 5: expected 2 targets, got 1");
  EXPECT_EQ(error_of("states 2\nalphabet a\nstart 3\nfinals\ntrans a 1 2\n"),
            "line 3: state 3 out of range");
  EXPECT_EQ(error_of("states x\nalphabet a\nstart 1\nfinals\ntrans a 1\n"), "line 1: expected a non-negative integer, got 'x'");
  EXPECT_EQ(error_of("states 1\nalphabet a\nstart 1\nfinals\ntrans a 1\nbogus\n"),
            "line 6: unknown directive 'bogus'");
  EXPECT_EQ(error_of("states 1\nalphabet a\nstart 1\nfinals\ntrans a 1\ntrans a 1\n"),
            "line 6: duplicate 'trans' line for letter 'a'");
  EXPECT_EQ(error_of("states 1\nalphabet a\nstart 1\nfinals\ntrans c 1\n"), "line 5: unknown letter 'c'");
}

TEST(DfaFormat, RoundTripRandom) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto d = oracle::random_dfa(1 + i % 9, 1 + i % 3, rng);
    ASSERT_EQ(parse_dfa(serialize(d)), d);
  }
}

TEST(DfaRun, WordTransformationAndAcceptance) {
  const auto d = parse_dfa(kExample);
  EXPECT_EQ(word_transformation(d, {}), identity(5));
  EXPECT_EQ(word_transformation(d, d.word("ab")), (Transformation{3, 2, 1, 2, 4}));
  EXPECT_EQ(word_transformation(d, d.word("a")), (Transformation{2, 1, 4, 5, 3}));
  EXPECT_TRUE(accepts(d, d.word("aa")));
  EXPECT_TRUE(accepts(d, d.word("")));
  EXPECT_FALSE(accepts(d, d.word("b")));
  EXPECT_EQ(d.word("a b a"), (Word{0, 1, 0}));
  EXPECT_THROW(d.word("ac"), InvalidArgument);
}

TEST(DfaRun, MorphismProperty) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> len(0, 6);
  for (int i = 0; i < 200; ++i) {
    const auto d = oracle::random_dfa(1 + i % 7, 1 + i % 3, rng);
    std::uniform_int_distribution<std::size_t> letter(0, d.letter_count() - 1);
    Word u(len(rng)), v(len(rng));
    for (auto& x : u) x = letter(rng);
    for (auto& x : v) x = letter(rng);
    Word uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    ASSERT_EQ(word_transformation(d, uv), compose(word_transformation(d, u), word_transformation(d, v)));
    ASSERT_EQ(accepts(d, uv), d.is_final(word_transformation(d, uv)(d.start() + 1) - 1));
  }
}

TEST(DfaMinimize, SingleWordLanguage) {
  for (std::size_t n = 2; n <= 10; ++n) {
    // {a^(n-2)}: chain of n-1 states and a sink.
    const auto d = unary_chain(n, n - 1, {static_cast<State>(n - 2)});
    EXPECT_EQ(minimize(d).size(), n);
  }
}

TEST(DfaMinimize, TrivialCases) {
  const Dfa all({"a"}, {{1, 0}}, 0, {0, 1});
  EXPECT_EQ(minimize(all).size(), 1u);
  const Dfa none({"a", "b"}, {{1, 0}, {0, 0}}, 0, {});
  EXPECT_EQ(minimize(none).size(), 1u);
  const Dfa unreachable({"a"}, {{0, 0, 2}}, 0, {2});
  EXPECT_EQ(minimize(unreachable).size(), 1u);
}

TEST(DfaMinimize, MatchesBruteForceAndIsCanonical) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const auto d = oracle::random_dfa(1 + i % 8, 1 + i % 3, rng);
    const auto m = minimize(d);
    ASSERT_EQ(m.size(), oracle::brute_state_count(d));
    ASSERT_EQ(minimize(m), m);
    ASSERT_TRUE(oracle::product_equivalent(d, m));
    ASSERT_TRUE(equivalent(d, m));

    // Renaming states must not change the canonical minimal form.
    std::vector<State> perm(d.size());
    std::iota(perm.begin(), perm.end(), State{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::vector<State>> table(d.letter_count(), std::vector<State>(d.size()));
    for (std::size_t a = 0; a < d.letter_count(); ++a) {
      for (State q = 0; q < d.size(); ++q) table[a][perm[q]] = perm[d.next(q, a)];
    }
    std::vector<State> fin;
    for (State f : d.finals()) fin.push_back(perm[f]);
    const Dfa renamed(d.alphabet(), table, perm[d.start()], fin);
    ASSERT_EQ(minimize(renamed), m);
  }
}

TEST(DfaEquivalence, AgreesWithProductConstruction) {
  std::mt19937_64 rng(9);
  int equal = 0;
  for (int i = 0; i < 400; ++i) {
    const std::size_t k = 1 + i % 2;
    const auto a = oracle::random_dfa(1 + i % 4, k, rng);
    const auto b = oracle::random_dfa(1 + (i / 4) % 4, k, rng);
    const bool expected = oracle::product_equivalent(a, b);
    equal += expected;
    ASSERT_EQ(equivalent(a, b), expected);
  }
  EXPECT_GT(equal, 0);
}

TEST(DfaEquivalence, SmallCases) {
  const auto one_a = unary_chain(3, 2, {1});
  const auto two_a = unary_chain(4, 3, {2});
  EXPECT_FALSE(equivalent(one_a, two_a));
  const auto d = parse_dfa(kExample);
  EXPECT_TRUE(equivalent(d, minimize(d)));

  // Letter order may differ between the two automata.
  const Dfa swapped({"b", "a"}, {{1, 2, 3, 0, 1}, {1, 0, 3, 4, 2}}, 0, {0});
  EXPECT_TRUE(equivalent(d, swapped));
  EXPECT_THROW(equivalent(d, one_a), InvalidArgument);
}

TEST(DfaUnary, Structure) {
  // {a^2} with 4 states: q0 -> q1 -> q2 -> q3 -> q3.
  const auto s = unary_structure(unary_chain(4, 3, {2}));
  EXPECT_EQ(s.tail_length, 3u);
  EXPECT_EQ(s.loop_length, 1u);
  EXPECT_EQ(s.loop_entry, 3u);

  const auto cycle = unary_structure(unary_chain(5, 0, {}));
  EXPECT_EQ(cycle.tail_length, 0u);
  EXPECT_EQ(cycle.loop_length, 5u);

  const auto single = unary_structure(Dfa({"a"}, {{0}}, 0, {}));
  EXPECT_EQ(single.tail_length, 0u);
  EXPECT_EQ(single.loop_length, 1u);

  EXPECT_THROW(unary_structure(parse_dfa(kExample)), InvalidArgument);
}

TEST(DfaUnary, StructureCoversReachableStates) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    const auto d = oracle::random_dfa(1 + i % 12, 1, rng);
    const auto s = unary_structure(d);
    ASSERT_LE(s.tail_length + s.loop_length, d.size());
    ASSERT_EQ(s.tail_length + s.loop_length, reachable_states(d).size());
  }
}
