#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>

#include "jok/orbits.hpp"
#include "jok/peirce.hpp"
#include "jok/rng.hpp"
#include "test_util.hpp"

using namespace jok;
using Eigen::VectorXd;

namespace {

// n_- of signature kappa inside N(c_1, 0), as a sub-frame combination with
// random magnitudes.
Element sub_frame_element(const Algebra& a, const Signature& kappa,
                          Rng& rng) {
  const auto frame = standard_frame(a).idempotents;
  Element n = zero_element(a);
  for (int i = 0; i < kappa.plus; ++i)
    n = add(n, scale(rng.uniform(0.5, 2.0), frame[1 + i]));
  for (int i = 0; i < kappa.minus; ++i)
    n = sub(n, scale(rng.uniform(0.5, 2.0), frame[1 + kappa.plus + i]));
  return n;
}

}  // namespace

TEST(Frame, Validity) {
  for (const auto& a : testutil::desk_algebras()) {
    const auto frame = standard_frame(a).idempotents;
    ASSERT_EQ(static_cast<int>(frame.size()), a->rank);
    Element sum = zero_element(a);
    for (size_t i = 0; i < frame.size(); ++i) {
      ASSERT_NEAR(trace(frame[i]), 1.0, 1e-10);
      ASSERT_LE(
          (jordan_mul(frame[i], frame[i]).coords - frame[i].coords).norm(),
          1e-10);
      for (size_t j = 0; j < frame.size(); ++j) {
        if (i != j)
          ASSERT_LE(jordan_mul(frame[i], frame[j]).coords.norm(), 1e-10);
      }
      sum = add(sum, frame[i]);
    }
    ASSERT_LE((sum.coords - a->unit).norm(), 1e-10)
        << family_name(a->family);
  }
}

TEST(OrbitRepresentative, Examples) {
  const auto sym3 = make_algebra(Family::SymR, 3);
  const Element xi = orbit_representative(sym3, {2, 1});
  VectorXd expect = VectorXd::Zero(sym3->dim);
  expect[0] = 1.0;
  expect[1] = 1.0;
  expect[2] = -1.0;
  EXPECT_LT((xi.coords - expect).norm(), 1e-14);

  EXPECT_LT(orbit_representative(sym3, {0, 0}).coords.norm(), 1e-14);

  const auto alb = make_algebra(Family::Albert, 3);
  const Element c = orbit_representative(alb, {1, 0});
  EXPECT_LE((jordan_mul(c, c).coords - c.coords).norm(), 1e-12);
  EXPECT_NEAR(trace(c), 1.0, 1e-12);

  EXPECT_THROW(orbit_representative(sym3, {3, 1}), precondition_error);
  EXPECT_THROW(orbit_representative(sym3, {-1, 1}), precondition_error);
}

TEST(ClassifyOrbit, RepresentativesRoundTrip) {
  for (const auto& a : testutil::desk_algebras()) {
    for (int plus = 0; plus <= a->rank; ++plus) {
      for (int minus = 0; minus + plus <= a->rank; ++minus) {
        const Signature p{plus, minus};
        ASSERT_EQ(classify_orbit(orbit_representative(a, p)), p)
            << family_name(a->family);
      }
    }
  }
}

TEST(StructureMap, Determinism) {
  const auto a = make_algebra(Family::HermC, 3);
  const auto g1 = random_structure_map(a, 42);
  const auto g2 = random_structure_map(a, 42);
  EXPECT_EQ((g1.matrix - g2.matrix).norm(), 0.0);
  const auto g3 = random_structure_map(a, 43);
  EXPECT_GT((g1.matrix - g3.matrix).norm(), 1e-6);
}

TEST(StructureMap, PreservesOrbit) {
  for (const auto& a : testutil::desk_algebras()) {
    const Signature probes[] = {{1, 0}, {1, 1}, {a->rank, 0}};
    for (const auto& p : probes) {
      if (p.size() > a->rank) continue;
      const Element xi = orbit_representative(a, p);
      for (int k = 0; k < 25; ++k) {
        const auto g = random_structure_map(a, 1000 + k);
        ASSERT_EQ(classify_orbit(g.apply(xi)), p)
            << family_name(a->family) << " seed " << 1000 + k;
      }
    }
  }
}

TEST(StructureMap, DeterminantCharacter) {
  // det(g x) = det(g e) det(x)
  for (const auto& a : testutil::desk_algebras()) {
    Rng rng(7);
    for (int k = 0; k < 10; ++k) {
      const auto g = random_structure_map(a, 555 + k);
      const double chi = determinant(g.apply(unit_element(a)));
      const Element x = testutil::random_element(a, rng);
      const double lhs = determinant(g.apply(x));
      const double rhs = chi * determinant(x);
      ASSERT_LE(std::abs(lhs - rhs), 1e-6 * (1.0 + std::abs(rhs)))
          << family_name(a->family);
    }
  }
}

TEST(GenericSum, SymR3MixedPair) {
  const auto a = make_algebra(Family::SymR, 3);
  const auto report = generic_sum_signature(a, {{1, 0}, {0, 1}}, 200, 1);
  EXPECT_EQ(report.predicted, (Signature{1, 1}));
  EXPECT_EQ(report.trials, 200);
  EXPECT_GE(report.matches, 198);
  EXPECT_EQ(report.matches + static_cast<int>(report.deviations.size()),
            report.trials);
}

TEST(GenericSum, AlbertPairOfPositives) {
  const auto a = make_algebra(Family::Albert, 3);
  const auto report = generic_sum_signature(a, {{1, 0}, {1, 0}}, 100, 2);
  EXPECT_EQ(report.predicted, (Signature{2, 0}));
  EXPECT_GE(report.matches, 99);
}

TEST(GenericSum, StableRangeViolationIsError) {
  const auto a = make_algebra(Family::SymR, 3);
  EXPECT_THROW(generic_sum_signature(a, {{2, 0}, {2, 0}}, 10, 0),
               precondition_error);
}

TEST(SupportSignature, Examples) {
  EXPECT_EQ(n_support_signature(3, TSign::Plus, {1, 0}), (Signature{2, 0}));
  EXPECT_EQ(n_support_signature(3, TSign::Minus, {0, 0}), (Signature{0, 1}));
  EXPECT_THROW(n_support_signature(3, TSign::Plus, {2, 1}),
               precondition_error);
}

TEST(SupportSignature, NumericCrossCheck) {
  for (const auto& a : testutil::desk_algebras()) {
    const int n = a->rank;
    const Element c = standard_frame(a).idempotents[0];
    const auto sys = peirce_system(c);
    Rng rng(101);
    for (int plus = 0; plus <= n - 1; ++plus) {
      for (int minus = 0; minus + plus <= n - 1; ++minus) {
        const Signature kappa{plus, minus};
        for (TSign t_sign : {TSign::Plus, TSign::Minus}) {
          const Signature expect = n_support_signature(n, t_sign, kappa);
          for (int k = 0; k < 10; ++k) {
            const double t = (t_sign == TSign::Plus ? 1.0 : -1.0) *
                             rng.uniform(0.5, 2.0);
            const Element nm = sub_frame_element(a, kappa, rng);
            const Element x =
                sys.E12.apply(testutil::random_element(a, rng));
            const Element elem = add(n_t_element(c, t, x), nm);
            ASSERT_EQ(classify_orbit(elem), expect)
                << family_name(a->family) << " t=" << t;
          }
        }
      }
    }
  }
}

TEST(ReduceSignature, Examples) {
  EXPECT_EQ(reduce_signature({1, 1}, TSign::Plus), (Signature{0, 1}));
  EXPECT_EQ(reduce_signature({1, 0}, TSign::Minus), std::nullopt);
  EXPECT_EQ(reduce_signature({2, 1}, TSign::Minus), (Signature{2, 0}));
}

TEST(ReduceSignature, RoundTrip) {
  for (int n = 2; n <= 6; ++n) {
    for (int plus = 0; plus <= n - 1; ++plus) {
      for (int minus = 0; minus + plus <= n - 1; ++minus) {
        const Signature kappa{plus, minus};
        for (TSign t : {TSign::Plus, TSign::Minus}) {
          const auto back = reduce_signature(n_support_signature(n, t, kappa), t);
          ASSERT_TRUE(back.has_value());
          ASSERT_EQ(*back, kappa);
        }
      }
    }
  }
}

TEST(LambdaComponents, PaperExamples) {
  // r = (1,1), v > 0: two components
  const auto both = lambda_components({1, 1}, TSign::Plus);
  ASSERT_EQ(both.size(), 2u);
  EXPECT_EQ(both[0].kappa_signature, (Signature{1, 0}));
  EXPECT_EQ(both[0].oscillator_tag, OscillatorTag::OmegaMinus);
  EXPECT_EQ(both[1].kappa_signature, (Signature{0, 1}));
  EXPECT_EQ(both[1].oscillator_tag, OscillatorTag::OmegaPlus);

  // r = (2,0), v < 0: everything absent
  EXPECT_TRUE(lambda_components({2, 0}, TSign::Minus).empty());

  // r = (2,0), v > 0: one surviving component
  const auto one = lambda_components({2, 0}, TSign::Plus);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].kappa_signature, (Signature{1, 0}));
  EXPECT_EQ(one[0].oscillator_tag, OscillatorTag::OmegaPlus);
}

TEST(LambdaComponents, CountsExhaustive) {
  for (int n = 2; n <= 6; ++n) {
    for (int plus = 0; plus <= n - 1; ++plus) {
      const int minus = n - 1 - plus;
      const Signature r{plus, minus};
      const auto neg = lambda_components(r, TSign::Minus);
      const auto pos = lambda_components(r, TSign::Plus);
      if (plus >= 1 && minus >= 1) {
        ASSERT_EQ(neg.size(), 1u);
        ASSERT_EQ(pos.size(), 2u);
      } else if (minus == 0) {
        ASSERT_EQ(neg.size(), 0u);
        ASSERT_EQ(pos.size(), 1u);
      } else {  // plus == 0
        ASSERT_EQ(neg.size(), 1u);
        ASSERT_EQ(pos.size(), 1u);
      }
    }
  }
}
