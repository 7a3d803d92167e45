#include <gtest/gtest.h>

#include <array>
#include <random>
#include <set>
#include <string>

#include "oligoforge/folding.hpp"
#include "oligoforge/report.hpp"
#include "oracles.hpp"

using namespace oligoforge;

namespace {

DnaSequence seq(const std::string& s) { return DnaSequence::parse(s); }

constexpr int X = 99;  // '*' cells

// Free-energy tables as printed for GCGCCCCGC and GAGGGTTTT; row i, column j (1-based).
constexpr std::array<std::array<int, 9>, 9> kTable1{{
    {0, -2, -2, -4, -4, -4, -4, -6, -6},
    {0, 0, -2, -2, -2, -2, -2, -4, -4},
    {X, 0, 0, -2, -2, -2, -2, -4, -4},
    {X, X, 0, 0, 0, 0, 0, -2, -2},
    {X, X, X, 0, 0, 0, 0, -2, -2},
    {X, X, X, X, 0, 0, 0, -2, -2},
    {X, X, X, X, X, 0, 0, -2, -2},
    {X, X, X, X, X, X, 0, 0, -2},
    {X, X, X, X, X, X, X, 0, 0},
}};

constexpr std::array<std::array<int, 9>, 9> kTable2{{
    {0, 0, 0, 0, 0, -1, -1, -1, -1},
    {0, 0, 0, 0, 0, -1, -1, -1, -1},
    {X, 0, 0, 0, 0, 0, 0, 0, 0},
    {X, X, 0, 0, 0, 0, 0, 0, 0},
    {X, X, X, 0, 0, 0, 0, 0, 0},
    {X, X, X, X, 0, 0, 0, 0, 0},
    {X, X, X, X, X, 0, 0, 0, 0},
    {X, X, X, X, X, X, 0, 0, 0},
    {X, X, X, X, X, X, X, 0, 0},
}};

void expect_table(const std::string& s, const std::array<std::array<int, 9>, 9>& expected) {
  const auto e = nussinov_table(seq(s));
  for (std::size_t i = 1; i <= 9; ++i) {
    for (std::size_t j = 1; j <= 9; ++j) {
      if (expected[i - 1][j - 1] == X) continue;
      EXPECT_EQ(e(i, j), expected[i - 1][j - 1]) << s << " at (" << i << "," << j << ")";
    }
  }
}

void expect_sound(const DnaSequence& q, const SecondaryStructure& st, Energy mfe, const EnergyParams& params = {}) {
  std::set<std::size_t> used;
  Energy sum = 0;
  for (const auto& p : st.pairs) {
    ASSERT_LT(p.i, p.j);
    EXPECT_TRUE(used.insert(p.i).second);
    EXPECT_TRUE(used.insert(p.j).second);
    EXPECT_EQ(q[p.i - 1], complement(q[p.j - 1]));
    EXPECT_LT(params.alpha(q[p.i - 1], q[p.j - 1]), 0);
    sum += params.alpha(q[p.i - 1], q[p.j - 1]);
  }
  EXPECT_EQ(sum, st.energy);
  EXPECT_EQ(st.energy, mfe);
}

}  // namespace

TEST(EnergyParams, Defaults) {
  const EnergyParams p;
  EXPECT_EQ(p.alpha(Base::A, Base::T), -1);
  EXPECT_EQ(p.alpha(Base::T, Base::A), -1);
  EXPECT_EQ(p.alpha(Base::G, Base::C), -2);
  EXPECT_EQ(p.alpha(Base::C, Base::G), -2);
  EXPECT_EQ(p.alpha(Base::A, Base::G), 0);
  EXPECT_EQ(p.alpha(Base::G, Base::T), 0);
  EXPECT_EQ(p.alpha(Base::A, Base::A), 0);
  EXPECT_THROW(EnergyParams(1, -2), DomainError);
}

TEST(Nussinov, ReproducesPrintedTables) {
  expect_table("GCGCCCCGC", kTable1);
  expect_table("GAGGGTTTT", kTable2);
  EXPECT_EQ(min_free_energy(seq("GCGCCCCGC")), -6);
  EXPECT_EQ(min_free_energy(seq("GAGGGTTTT")), -1);
}

TEST(Nussinov, TrivialCases) {
  const auto e = nussinov_table(seq("G"));
  EXPECT_EQ(e.size(), 1u);
  EXPECT_EQ(e(1, 1), 0);
  EXPECT_EQ(min_free_energy(seq("AAAA")), 0);
  EXPECT_EQ(min_free_energy(seq("GC")), -2);
}

TEST(Nussinov, TableInvariants) {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 300; ++k) {
    const auto q = seq(oracle::random_word(rng, 1 + k % 20));
    const auto e = nussinov_table(q);
    EXPECT_TRUE(table_is_consistent(e, q));
    EXPECT_LE(e.min_free_energy(), 0);
    const std::size_t n = q.size();
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = i + 1; j <= n; ++j) {
        EXPECT_LE(e(i, j), e(i + 1, j));
        EXPECT_LE(e(i, j), e(i, j - 1));
      }
    }
  }
}

TEST(Nussinov, ComplementFreeAlphabetGivesZero) {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const auto& w : oracle::all_words(n)) {
      if (w.find_first_of("CT") != std::string::npos) continue;  // words over {A, G}
      EXPECT_EQ(min_free_energy(seq(w)), 0) << w;
    }
  }
}

TEST(Nussinov, MatchesNonCrossingOracle) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& w : oracle::all_words(n)) EXPECT_EQ(min_free_energy(seq(w)), oracle::min_noncrossing_energy(w)) << w;
  }
  std::mt19937_64 rng(19);
  for (int k = 0; k < 200; ++k) {
    const std::string w = oracle::random_word(rng, 6 + k % 5);
    EXPECT_EQ(min_free_energy(seq(w)), oracle::min_noncrossing_energy(w)) << w;
  }
}

TEST(Nussinov, CustomEnergies) {
  const EnergyParams p(-3, -5);
  std::mt19937_64 rng(23);
  for (int k = 0; k < 100; ++k) {
    const std::string w = oracle::random_word(rng, 2 + k % 8);
    EXPECT_EQ(min_free_energy(seq(w), p), oracle::min_noncrossing_energy(w, -3, -5)) << w;
    const auto e = nussinov_table(seq(w), p);
    expect_sound(seq(w), traceback(e, seq(w), p), e.min_free_energy(), p);
  }
}

TEST(Traceback, KnownSequences) {
  const auto q2 = seq("GAGGGTTTT");
  const auto s2 = traceback(nussinov_table(q2), q2);
  ASSERT_EQ(s2.pairs.size(), 1u);
  EXPECT_EQ(q2[s2.pairs[0].i - 1], Base::A);
  EXPECT_EQ(q2[s2.pairs[0].j - 1], Base::T);
  EXPECT_EQ(s2.energy, -1);

  const auto q1 = seq("GCGCCCCGC");
  const auto s1 = traceback(nussinov_table(q1), q1);
  EXPECT_EQ(s1.pairs.size(), 3u);
  expect_sound(q1, s1, -6);
  for (const auto& p : s1.pairs) EXPECT_TRUE(is_gc(q1[p.i - 1]));

  const auto q0 = seq("AAAA");
  const auto s0 = traceback(nussinov_table(q0), q0);
  EXPECT_TRUE(s0.pairs.empty());
  EXPECT_EQ(s0.energy, 0);
}

TEST(Traceback, TieBreakIsDeterministic) {
  // E(1,4) = -4 is reached both by pairing (1,4) around (2,3) and by the split
  // (1,2)+(3,4); the pairing branch wins.
  const auto q = seq("GCGC");
  const auto s = traceback(nussinov_table(q), q);
  EXPECT_EQ(s.energy, -4);
  EXPECT_EQ(s.pairs, (std::vector<BasePair>{{1, 4}, {2, 3}}));
  EXPECT_EQ(s.dot_bracket(4), "(())");
}

TEST(Traceback, SoundExhaustiveSmall) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& w : oracle::all_words(n)) {
      const auto q = seq(w);
      const auto e = nussinov_table(q);
      expect_sound(q, traceback(e, q), e.min_free_energy());
    }
  }
}

TEST(Traceback, RejectsMismatchedTable) {
  const auto e = nussinov_table(seq("ACGT"));
  EXPECT_THROW(traceback(e, seq("ACG")), DomainError);
}

TEST(HasStructure, ThresholdVerdicts) {
  EXPECT_FALSE(has_structure(seq("GAGGGTTTT")));
  EXPECT_TRUE(has_structure(seq("GCGCCCCGC")));
  EXPECT_FALSE(has_structure(seq("AAAA")));
  EXPECT_TRUE(has_structure(seq("GAGGGTTTT"), {}, -1));
  EXPECT_THROW(has_structure(seq("AAAA"), {}, 1), DomainError);
}

TEST(LinearEnergy, NearestNeighbourModel) {
  const auto nn = LinearEnergyModel::nearest_neighbour();
  EXPECT_EQ(linear_energy(seq("GC"), nn), RationalEnergy(-2));
  EXPECT_EQ(linear_energy(seq("GC"), LinearEnergyModel::nearest_neighbour(RationalEnergy(3, 2))), RationalEnergy(-1, 2));
  EXPECT_THROW(linear_energy(seq("G"), nn), DomainError);
}

TEST(LinearEnergy, DefaultWeightedModel) {
  const LinearEnergyModel model;
  ASSERT_EQ(model.depth(), 4u);
  EXPECT_EQ(model.gammas()[3], RationalEnergy(1, 8));
  EXPECT_EQ(model.kappa(), RationalEnergy(0));
  EXPECT_EQ(linear_energy(seq("GGGAGAA"), model), RationalEnergy(0));
  // TGGCTCA: shift sums with default alpha are -2, -3, -2, -2 (shifts 1..4).
  EXPECT_EQ(linear_energy(seq("TGGCTCA"), model), RationalEnergy(-17, 4));
  EXPECT_THROW(linear_energy(seq("ACGT"), model), DomainError);
}

TEST(LinearEnergy, RejectsBadWeights) {
  EXPECT_THROW(LinearEnergyModel(0, {}), DomainError);
  EXPECT_THROW(LinearEnergyModel(0, {1, 2}), DomainError);
  EXPECT_THROW(LinearEnergyModel(0, {1, 0}), DomainError);
}

TEST(LinearEnergy, UnitEnergiesCountShiftMatches) {
  std::mt19937_64 rng(29);
  for (int k = 0; k < 1000; ++k) {
    const std::string w = oracle::random_word(rng, 2 + k % 30);
    const auto q = seq(w);
    for (std::size_t l = 1; l < w.size(); ++l) {
      EXPECT_EQ(shifted_pair_sum(q, l, EnergyParams::unit()), -static_cast<Energy>(oracle::mu(w, l)));
    }
  }
}

TEST(Report, TextTableLayout) {
  const auto q = seq("GAGGGTTTT");
  const std::string text = render_table_text(nussinov_table(q), q);
  const std::string expected =
      "    G   A   G   G   G   T   T   T   T\n"
      "G   0   0   0   0   0  -1  -1  -1  -1\n"
      "A   0   0   0   0   0  -1  -1  -1  -1\n"
      "G   *   0   0   0   0   0   0   0   0\n"
      "G   *   *   0   0   0   0   0   0   0\n"
      "G   *   *   *   0   0   0   0   0   0\n"
      "T   *   *   *   *   0   0   0   0   0\n"
      "T   *   *   *   *   *   0   0   0   0\n"
      "T   *   *   *   *   *   *   0   0   0\n"
      "T   *   *   *   *   *   *   *   0   0\n";
  EXPECT_EQ(text, expected);
  const std::string csv = render_table_csv(nussinov_table(q), q);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), ",G,A,G,G,G,T,T,T,T");
  EXPECT_NE(csv.find("\nG,*,0,0,0,0,0,0,0,0\n"), std::string::npos);
}
