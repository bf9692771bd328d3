#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qeuler/closed_forms.hpp"
#include "qeuler/errors.hpp"
#include "qeuler/matrix_ansatz.hpp"
#include "qeuler/tableaux.hpp"

using namespace qeuler;

namespace {

const Poly y = Poly::y();
const Poly q = Poly::q();

std::string random_word(std::mt19937_64& rng, int length) {
  std::string w;
  for (int i = 0; i < length; ++i) w.push_back(rng() % 2 == 0 ? 'D' : 'E');
  return w;
}

}  // namespace

TEST(NormalPower, Examples) {
  const auto one = normal_power(Relation::Standard, 1, y, Poly(1));
  EXPECT_EQ(one.at(0, 1), y);
  EXPECT_EQ(one.at(1, 0), Poly(1));
  EXPECT_EQ(one.entries().size(), 2U);
  EXPECT_EQ(normal_power(Relation::Standard, 2, y, Poly(1)).at(0, 0), y);

  const auto hat = normal_power(Relation::Hat, 2, Poly(-1), Poly(1));
  Poly total;
  for (const auto& [key, c] : hat.entries()) total += c;
  EXPECT_EQ(total, Poly(2) - q - Poly::q(-1));
}

TEST(NormalPower, BoundaryExamples) {
  EXPECT_EQ(ansatz_B(2), y);
  EXPECT_EQ(ansatz_B(3), y + y * y * q);
  EXPECT_EQ(ansatz_A(1), y);
  EXPECT_EQ(ansatz_A(2), y + y * y);
  EXPECT_EQ(ansatz_hat(1), Poly());
  EXPECT_EQ(ansatz_hat(2), Poly(2) - q - Poly::q(-1));
}

TEST(Ansatz, AgreesWithBruteForce) {
  for (int n = 0; n <= 7; ++n) {
    EXPECT_EQ(ansatz_A(n), oracle::A(n)) << n;
    EXPECT_EQ(ansatz_B(n), oracle::B(n)) << n;
  }
}

TEST(Ansatz, AgreesWithFormulas) {
  for (int n = 0; n <= 12; ++n) {
    EXPECT_EQ(ansatz_A(n), a_n_closed(n)) << n;
    EXPECT_EQ(ansatz_B(n), b_n_closed(n)) << n;
    EXPECT_EQ(ansatz_hat(n), weighted_involution_sum(n)) << n;
  }
  EXPECT_THROW(ansatz_A(15), BudgetExceeded);
}

TEST(Ansatz, WordsMatchTableauSums) {
  // <W| w |V> under the standard relation counts derangement tableaux of the
  // shape encoded by w, weighted by superfluous ones.
  for (int len = 0; len <= 6; ++len) {
    for (int mask = 0; mask < (1 << len); ++mask) {
      std::string w;
      for (int i = 0; i < len; ++i) w.push_back((mask >> i) & 1 ? 'E' : 'D');
      EXPECT_EQ(boundary_eval(Relation::Standard, normal_word(Relation::Standard, w)),
                word_tableau_sum(w))
          << w;
    }
  }
}

TEST(Ansatz, Confluence) {
  std::mt19937_64 rng(99);
  for (Relation r : {Relation::Standard, Relation::Primed, Relation::Hat}) {
    for (int t = 0; t < 40; ++t) {
      const std::string w = random_word(rng, static_cast<int>(rng() % 9));
      const auto left = rewrite_word(r, w, RewriteStrategy::Leftmost);
      EXPECT_EQ(rewrite_word(r, w, RewriteStrategy::Rightmost), left) << w;
      EXPECT_EQ(normal_word(r, w), left) << w;
      const std::size_t cut = w.empty() ? 0 : rng() % (w.size() + 1);
      EXPECT_EQ(normal_word(r, w.substr(0, cut)) * normal_word(r, w.substr(cut)), left) << w;
    }
  }
}

TEST(Ansatz, RelationMismatch) {
  const auto a = normal_word(Relation::Standard, "DE");
  const auto b = normal_word(Relation::Primed, "DE");
  EXPECT_THROW(a * b, RelationMismatch);
  EXPECT_THROW(boundary_eval(Relation::Hat, a), RelationMismatch);
}

TEST(Ansatz, SingleRewrite) {
  const auto de = normal_word(Relation::Standard, "DE");
  EXPECT_EQ(de.at(1, 1), q);
  EXPECT_EQ(de.at(0, 0), Poly(1));
  EXPECT_EQ(de.at(1, 0), q);
  EXPECT_EQ(de.at(0, 1), Poly(1));
  const auto hat = normal_word(Relation::Hat, "DE");
  EXPECT_EQ(hat.at(0, 0), Poly::q(-1) - Poly(1));
  EXPECT_EQ(relation_name(Relation::Primed), "D'E'=qE'D'+D'+E'");
}
