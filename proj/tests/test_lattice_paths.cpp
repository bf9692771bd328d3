#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qeuler/closed_forms.hpp"
#include "qeuler/errors.hpp"
#include "qeuler/lattice_paths.hpp"
#include "qeuler/permutation.hpp"

using namespace qeuler;

namespace {

const Poly y = Poly::y();
const Poly q = Poly::q();

// Total step weight for a height, written out from the family tables.
Poly sum_q(int lo, int hi) {
  Poly s;
  for (int k = lo; k <= hi; ++k) s += Poly::q(k);
  return s;
}

StepWeight w(int sign, int yp, int qp) { return StepWeight{sign, yp, qp}; }

}  // namespace

TEST(DyckSums, EulerExamples) {
  EXPECT_EQ(euler_dyck_sum(1, 1), Poly(1) + q);
  EXPECT_EQ(euler_dyck_sum(0, 0), Poly(1));
  EXPECT_EQ(euler_dyck_sum(0, 1), Poly(1));
  EXPECT_EQ(euler_dyck_sum(2, 0), Poly(2) + q.scaled(2) + q * q);
}

TEST(DyckSums, MatchWordEnumeration) {
  for (int n = 0; n <= 5; ++n) {
    const int len = 2 * n;
    EXPECT_EQ(euler_dyck_sum(n, 0),
              oracle::word_sum(len, [](int h) { return sum_q(0, h); },
                               [](int h) { return sum_q(0, h - 1); }, oracle::none));
    EXPECT_EQ(euler_dyck_sum(n, 1),
              oracle::word_sum(len, [](int h) { return sum_q(0, h); },
                               [](int h) { return sum_q(0, h); }, oracle::none));
    EXPECT_EQ(touchard_dyck_sum(n),
              oracle::word_sum(len, [](int) { return Poly(1); },
                               [](int h) { return sum_q(0, h - 1); }, oracle::none));
  }
}

TEST(Histories, Examples) {
  EXPECT_EQ(laguerre_sum(1), y);
  EXPECT_EQ(laguerre_sum(2), y + y * y);
  EXPECT_EQ(laguerre_sum(6).evaluate(1, 1), 720);
  EXPECT_EQ(derangement_motzkin_sum(1), Poly());
  EXPECT_EQ(derangement_motzkin_sum(2), y);
  EXPECT_EQ(derangement_motzkin_sum(3), y + y * y * q);
}

TEST(Histories, MatchBruteForce) {
  for (int n = 0; n <= 8; ++n) {
    EXPECT_EQ(laguerre_sum(n), gen_A(n)) << n;
    EXPECT_EQ(derangement_motzkin_sum(n), gen_B(n)) << n;
  }
}

TEST(Histories, LaguerreMatchesWordEnumeration) {
  for (int n = 0; n <= 7; ++n) {
    const Poly lag = oracle::word_sum(
        n, [](int h) { return y * sum_q(0, h); }, [](int h) { return sum_q(0, h - 1); },
        [](int h) { return y * sum_q(0, h) + sum_q(0, h - 1); });
    EXPECT_EQ(laguerre_sum(n), lag) << n;
  }
}

TEST(Histories, LargeLaguerreCount) {
  long fact = 1;
  for (int n = 1; n <= 8; ++n) {
    fact *= n;
    EXPECT_EQ(large_laguerre_sum(n).substitute_y(1, 0).evaluate(1, 1), fact) << n;
  }
}

TEST(Enumeration, MatchesTransfer) {
  const PathFamily families[] = {PathFamily::Laguerre,      PathFamily::LargeLaguerre,
                                 PathFamily::DerangementMotzkin, PathFamily::EulerSecant,
                                 PathFamily::EulerTangent,  PathFamily::Touchard,
                                 PathFamily::SecantSigned,  PathFamily::TangentSigned,
                                 PathFamily::SchroderSecant, PathFamily::SchroderTangent};
  for (PathFamily f : families) {
    for (int len = 0; len <= 7; ++len) {
      EXPECT_EQ(enumerated_sum(f, len, false), family_sum(f, len)) << family_name(f) << " " << len;
    }
  }
}

TEST(Enumeration, EveryPathIsValidAndDistinct) {
  std::vector<WeightedPath> seen;
  enumerate_paths(PathFamily::Laguerre, 4, false, [&](const WeightedPath& p) {
    EXPECT_EQ(p.final_height(), 0);
    EXPECT_NO_THROW(WeightedPath(p.family(), p.steps()));
    seen.push_back(p);
  });
  EXPECT_EQ(seen.size(), 24U);
  for (std::size_t i = 0; i < seen.size(); ++i) {
    for (std::size_t j = i + 1; j < seen.size(); ++j) EXPECT_FALSE(seen[i] == seen[j]);
  }
}

TEST(Validation, RejectsBadPaths) {
  using D = StepDirection;
  EXPECT_THROW(WeightedPath::from_moves(PathFamily::Laguerre, {D::Down}, {w(1, 0, 0)}),
               std::invalid_argument);
  // Down at height 1 may carry q^0 only.
  EXPECT_THROW(WeightedPath::from_moves(PathFamily::Laguerre, {D::Up, D::Down},
                                        {w(1, 1, 0), w(1, 0, 1)}),
               std::invalid_argument);
  EXPECT_THROW(WeightedPath::from_moves(PathFamily::EulerSecant, {D::Up}, {w(1, 0, 0)}),
               std::invalid_argument);
  EXPECT_NO_THROW(WeightedPath::from_moves(PathFamily::LeftFactor, {D::Up}, {w(1, 0, 0)}));
  const auto p = WeightedPath::from_moves(PathFamily::Laguerre, {D::Up, D::Down},
                                          {w(1, 1, 0), w(1, 0, 0)});
  EXPECT_EQ(p.dump(), "U[+1,1,0] D[+1,0,0]");
  EXPECT_EQ(p.weight(), y);
}

TEST(SignedPaths, Examples) {
  EXPECT_EQ(mk_path_sum(0), Poly(1));
  EXPECT_EQ(mk_path_sum(1), q * q - q.scaled(2));
  EXPECT_EQ(nk_path_sum(1), -q - q * q + pow(q, 3));
  EXPECT_EQ(schroder_signed_sum(1, SignedVariant::Secant), q * q - q.scaled(2));
  EXPECT_EQ(schroder_signed_sum(0, SignedVariant::Tangent), Poly(1));
  EXPECT_EQ(schroder_signed_sum(2, SignedVariant::Secant),
            (q * q).scaled(2) - pow(q, 5).scaled(2) + pow(q, 6));
}

TEST(SignedPaths, MatchClosedForms) {
  for (int k = 0; k <= 6; ++k) {
    EXPECT_EQ(mk_path_sum(k), m_k_closed(k)) << k;
    EXPECT_EQ(nk_path_sum(k), n_k_closed(k)) << k;
    EXPECT_EQ(schroder_signed_sum(k, SignedVariant::Secant), m_k_closed(k)) << k;
    EXPECT_EQ(schroder_signed_sum(k, SignedVariant::Tangent), n_k_closed(k)) << k;
  }
}

TEST(SignedPaths, EnumerationAgrees) {
  PathOptions enumerate;
  enumerate.method = PathMethod::Enumerate;
  for (int k = 0; k <= 5; ++k) {
    EXPECT_EQ(mk_path_sum(k, enumerate), mk_path_sum(k)) << k;
    EXPECT_EQ(nk_path_sum(k, enumerate), nk_path_sum(k)) << k;
  }
  EXPECT_THROW(mk_path_sum(9), BudgetExceeded);
}

TEST(SignedPaths, UnrestrictedSumMatchesWordEnumeration) {
  for (int n = 0; n <= 4; ++n) {
    const Poly secant = oracle::word_sum(
        2 * n, [](int h) { return Poly(1) - Poly::q(h + 1); },
        [](int h) { return Poly(1) - Poly::q(h); }, oracle::none);
    EXPECT_EQ(signed_dyck_sum(n, SignedVariant::Secant), secant) << n;
  }
}

TEST(LeftFactors, Counts) {
  EXPECT_EQ(left_factor_count(2, 0), 1);
  EXPECT_EQ(left_factor_count(4, 2), 3);
  EXPECT_EQ(left_factor_count(0, 0), 1);
  EXPECT_EQ(left_factor_count(4, 1), 0);
  EXPECT_THROW(left_factor_count(3, 1), std::invalid_argument);
  // Ballot numbers: binom(n, (n-h)/2) - binom(n, (n-h)/2 - 1).
  for (int n = 0; n <= 12; n += 2) {
    for (int h = 0; h <= n; h += 2) {
      EXPECT_EQ(left_factor_count(n, h),
                binom_safe(n, (n - h) / 2) - binom_safe(n, (n - h) / 2 - 1));
    }
  }
}

TEST(Penaud, Examples) {
  using D = StepDirection;
  const auto unit = WeightedPath::from_moves(PathFamily::SecantSigned, {D::Up, D::Down},
                                             {w(1, 0, 0), w(1, 0, 0)});
  const auto [h1, h2] = penaud_decompose(unit);
  EXPECT_EQ(h1.final_height(), 0);
  EXPECT_EQ(h1.step_count(), 2U);
  EXPECT_EQ(h2.step_count(), 0U);

  const auto signed_peak = WeightedPath::from_moves(PathFamily::SecantSigned, {D::Up, D::Down},
                                                    {w(1, 0, 0), w(-1, 0, 1)});
  const auto [g1, g2] = penaud_decompose(signed_peak);
  EXPECT_EQ(g1.final_height(), 2);
  EXPECT_EQ(g1.steps()[1].direction, D::Up);
  EXPECT_EQ(g2, signed_peak);

  const auto [e1, e2] = penaud_decompose(WeightedPath(PathFamily::SecantSigned));
  EXPECT_EQ(e1.step_count(), 0U);
  EXPECT_EQ(e2.step_count(), 0U);
}

TEST(Penaud, WeightsAndLengthsAreKept) {
  for (PathFamily f : {PathFamily::SecantSigned, PathFamily::TangentSigned}) {
    enumerate_paths(f, 8, false, [&](const WeightedPath& p) {
      const auto [h1, h2] = penaud_decompose(p);
      ASSERT_EQ(h1.step_count(), p.step_count());
      ASSERT_EQ(h2.weight(), p.weight());
      ASSERT_FALSE(h2.has_unit_peak());
      ASSERT_EQ(h1.final_height(), static_cast<int>(h2.step_count()));
    });
  }
}

TEST(ContinuedFractions, Examples) {
  const CFSpec tangent{CFSpec::Kind::J, [](int h) { return q_integer(h + 1) * q_integer(h + 2); }};
  const auto t = cf_series(tangent, 2);
  ASSERT_EQ(t.size(), 3U);
  EXPECT_EQ(t[0], Poly(1));
  EXPECT_EQ(t[1], Poly(1) + q);
  EXPECT_EQ(t[2], tangent_closed(2));

  const CFSpec catalan{CFSpec::Kind::J, [](int) { return Poly(1); }};
  const auto c = cf_series(catalan, 4);
  const long expected[] = {1, 1, 2, 5, 14};
  for (int i = 0; i <= 4; ++i) EXPECT_EQ(c[static_cast<std::size_t>(i)], Poly(expected[i]));

  const CFSpec m_sq{CFSpec::Kind::T, [](int h) {
                      const Poly f = Poly(1) - Poly::q(h + 1);
                      return f * f;
                    }};
  const auto ms = cf_series(m_sq, 1);
  EXPECT_EQ(ms[1], q * q - q.scaled(2));
}

TEST(ContinuedFractions, TFractionsGiveSignedSums) {
  const CFSpec m{CFSpec::Kind::T, [](int h) {
                   const Poly f = Poly(1) - Poly::q(h + 1);
                   return f * f;
                 }};
  const CFSpec n{CFSpec::Kind::T, [](int h) {
                   return (Poly(1) - Poly::q(h + 1)) * (Poly(1) - Poly::q(h + 2));
                 }};
  const auto ms = cf_series(m, 6);
  const auto ns = cf_series(n, 6);
  for (int k = 0; k <= 6; ++k) {
    EXPECT_EQ(ms[static_cast<std::size_t>(k)], m_k_closed(k)) << k;
    EXPECT_EQ(ns[static_cast<std::size_t>(k)], n_k_closed(k)) << k;
  }
}

TEST(ContinuedFractions, DeeperTruncationDoesNotChangeCoefficients) {
  const CFSpec secant{CFSpec::Kind::J, [](int h) { return q_integer(h + 1) * q_integer(h + 1); }};
  EXPECT_EQ(cf_series(secant, 6), cf_series(secant, 6, 12));
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(cf_series(secant, 6)[static_cast<std::size_t>(n)], secant_closed(n));
}
