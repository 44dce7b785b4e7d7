#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace monoquartic;
using testsupport::uniform;

namespace {

using RQ = ReciprocalQuartic;

Monogenicity closed_status(const RQ& q) { return monogenic_closed_form(q).status; }

}  // namespace

TEST(Invariants, Examples) {
  const auto w = invariants({9, 19});
  EXPECT_EQ(w.W1, 3);
  EXPECT_EQ(w.W2, 39);
  EXPECT_EQ(w.W3, 13);
  EXPECT_EQ(w.W, 1521);
  EXPECT_EQ(w.disc, 19773);

  const auto z = invariants({0, 0});
  EXPECT_EQ(z.W, 32);
  EXPECT_EQ(z.disc, 256);

  const auto e = invariants({11, 31});
  EXPECT_EQ(e.W1, 11);
  EXPECT_EQ(e.W2, 55);
  EXPECT_EQ(e.W3, 5);
  EXPECT_EQ(e.disc, 15125);
}

TEST(Invariants, AgreeWithResultantDiscriminant) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 1000; ++i) {
    const RQ q{uniform(rng, -100000, 100000), uniform(rng, -100000, 100000)};
    ASSERT_EQ(invariants(q).disc, discriminant(q.expand())) << to_string(q);
  }
}

TEST(AsReciprocal, Recognition) {
  EXPECT_EQ(as_reciprocal(IntPoly{1, 9, 19, 9, 1}), (RQ{9, 19}));
  EXPECT_FALSE(as_reciprocal(IntPoly{1, 9, 19, 8, 1}));
  EXPECT_FALSE(as_reciprocal(IntPoly{2, 0, 0, 0, 1}));
  EXPECT_FALSE(as_reciprocal(IntPoly{1, 0, 1}));
  EXPECT_EQ(to_string(RQ{-9, 19}), "(-9,19)");
}

TEST(IrreducibleClosedForm, Examples) {
  const auto lin = irreducible_closed_form({1, 0});
  ASSERT_EQ(lin.kind, IrreducibilityVerdict::Kind::LinearFactor);
  EXPECT_EQ(lin.root, -1);

  const auto split = irreducible_closed_form({4, 2});
  ASSERT_EQ(split.kind, IrreducibilityVerdict::Kind::QuadraticSplit);
  EXPECT_EQ(split.first, (IntPoly{1, 0, 1}));
  EXPECT_EQ(split.second, (IntPoly{1, 4, 1}));

  EXPECT_TRUE(irreducible_closed_form({9, 19}).irreducible());
  EXPECT_TRUE(irreducible_closed_form({0, 0}).irreducible());
  EXPECT_FALSE(irreducible_closed_form({0, 2}).irreducible());   // (x^2 + 1)^2
  EXPECT_FALSE(irreducible_closed_form({0, -2}).irreducible());  // (x^2 - 1)^2
  EXPECT_FALSE(irreducible_closed_form({0, 1}).irreducible());   // (x^2 - x + 1)(x^2 + x + 1)
}

TEST(IrreducibleClosedForm, MatchesGenericTestOnGrid) {
  for (std::int64_t A = -60; A <= 60; ++A) {
    for (std::int64_t B = -60; B <= 60; ++B) {
      const RQ q{A, B};
      const auto closed = irreducible_closed_form(q);
      const auto generic = quartic_irreducible(q.expand());
      ASSERT_EQ(closed.irreducible(), generic.irreducible()) << to_string(q);
      if (closed.kind == IrreducibilityVerdict::Kind::QuadraticSplit) {
        ASSERT_EQ(closed.first * closed.second, q.expand()) << to_string(q);
      }
      if (closed.kind == IrreducibilityVerdict::Kind::LinearFactor) {
        ASSERT_EQ(q.expand().eval(closed.root), 0) << to_string(q);
      }
    }
  }
}

TEST(MonogenicClosedForm, Examples) {
  EXPECT_EQ(closed_status({6, 0}), Monogenicity::Monogenic);
  EXPECT_EQ(closed_status({2, 8}), Monogenicity::Monogenic);
  EXPECT_EQ(closed_status({1, 6}), Monogenicity::Monogenic);
  EXPECT_EQ(closed_status({1, 1}), Monogenicity::Monogenic);
  EXPECT_EQ(closed_status({2, 3}), Monogenicity::Reducible);

  const auto eight = monogenic_closed_form({8, 0});
  ASSERT_EQ(eight.status, Monogenicity::NotMonogenic);
  EXPECT_EQ(*eight.witness, 3);

  const auto three_one = monogenic_closed_form({3, 1});
  ASSERT_EQ(three_one.status, Monogenicity::NotMonogenic);
  EXPECT_EQ(*three_one.witness, 3);
}

TEST(MonogenicClosedForm, AZeroIsUnsupported) {
  EXPECT_THROW(monogenic_closed_form({0, 5}), UnsupportedError);
  EXPECT_THROW(monogenic_closed_form({0, 0}), UnsupportedError);
  // is_monogenic falls back to the oracle there
  EXPECT_TRUE(is_monogenic({0, 0}));  // x^4 + 1 generates Z[zeta_8]
}

TEST(MonogenicClosedForm, AgreesWithDedekindOracle) {
  for (std::int64_t A = -25; A <= 25; ++A) {
    if (A == 0) continue;
    for (std::int64_t B = -25; B <= 25; ++B) {
      const RQ q{A, B};
      const auto closed = monogenic_closed_form(q);
      const auto oracle = monogenic_oracle(q.expand());
      ASSERT_EQ(closed.status, oracle.status) << to_string(q);
      if (closed.status == Monogenicity::NotMonogenic) {
        // the closed-form witness must itself divide the index
        ASSERT_TRUE(dedekind_at(q.expand(), to_uint64(*closed.witness)).p_divides_index) << to_string(q);
      }
    }
  }
}

TEST(LemmaClass, Examples) {
  EXPECT_EQ(lemma_ap_class({1, 1}), GaloisClass::C4);
  EXPECT_EQ(lemma_ap_class({2, 0}), GaloisClass::D4);
  EXPECT_EQ(lemma_ap_class({0, -1}), GaloisClass::V4);
  EXPECT_THROW(lemma_ap_class({2, 3}), std::domain_error);
}

TEST(LemmaClass, AgreesWithResolventOnGrid) {
  for (std::int64_t A = -30; A <= 30; ++A) {
    for (std::int64_t B = -30; B <= 30; ++B) {
      const RQ q{A, B};
      if (!irreducible_closed_form(q).irreducible()) continue;
      const GaloisClass g = galois_group(q.expand());
      ASSERT_NE(g, GaloisClass::S4);
      ASSERT_NE(g, GaloisClass::A4);
      ASSERT_EQ(lemma_ap_class(q), g) << to_string(q);
    }
  }
}

TEST(Family, Examples) {
  EXPECT_EQ(family({2, 8}), Family::F1);
  EXPECT_EQ(family({3, 3}), Family::F4);
  EXPECT_EQ(family({9, 19}), Family::F5);
  EXPECT_EQ(family({2, 0}), Family::NotApplicable);
  EXPECT_EQ(family({3, 1}), Family::NotApplicable);
  EXPECT_EQ(family({0, 5}), Family::NotApplicable);
  EXPECT_STREQ(to_string(Family::NotApplicable), "NA");
}

TEST(Family, F5MembersAreC4) {
  for (const RQ q : {RQ{1, 1}, RQ{9, 19}, RQ{11, 31}, RQ{-1, 1}, RQ{-9, 19}, RQ{-11, 31}}) {
    EXPECT_EQ(family(q), Family::F5) << to_string(q);
    EXPECT_EQ(galois_group(q.expand()), GaloisClass::C4) << to_string(q);
  }
}

TEST(Mirror, Examples) {
  EXPECT_EQ(mirror({9, 19}), (RQ{-9, 19}));
  EXPECT_EQ(invariants(mirror({9, 19})).disc, 19773);
  EXPECT_EQ(mirror({0, 5}), (RQ{0, 5}));
  EXPECT_EQ(family(mirror({2, 8})), Family::F1);
}

TEST(Mirror, PreservesClassification) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 2000; ++i) {
    const RQ q{uniform(rng, -300, 300), uniform(rng, -300, 300)};
    const RQ m = mirror(q);
    const auto w = invariants(q), wm = invariants(m);
    ASSERT_EQ(w.W1, wm.W2);
    ASSERT_EQ(w.W2, wm.W1);
    ASSERT_EQ(w.disc, wm.disc);
    ASSERT_EQ(mirror(m), q);
    const bool irr = irreducible_closed_form(q).irreducible();
    ASSERT_EQ(irr, irreducible_closed_form(m).irreducible()) << to_string(q);
    if (!irr) continue;
    ASSERT_EQ(lemma_ap_class(q), lemma_ap_class(m));
    if (q.A != 0) {
      ASSERT_EQ(closed_status(q), closed_status(m)) << to_string(q);
      ASSERT_EQ(family(q), family(m)) << to_string(q);
    }
  }
}

TEST(Distinctness, Examples) {
  EXPECT_EQ(distinct_by_discriminant({1, 1}, {11, 31}), Distinctness::Distinct);
  EXPECT_EQ(distinct_by_discriminant({9, 19}, {-9, 19}), Distinctness::Inconclusive);
  EXPECT_EQ(distinct_by_discriminant({4, 0}, {6, 0}), Distinctness::Distinct);
  EXPECT_THROW(distinct_by_discriminant({8, 0}, {6, 0}), std::domain_error);
  EXPECT_THROW(distinct_by_discriminant({2, 3}, {6, 0}), std::domain_error);
}

TEST(FamilyWitness, Examples) {
  EXPECT_FALSE(family_witness(1, 3));
  EXPECT_EQ(family_witness(1, 4), (RQ{8, 4}));
  EXPECT_FALSE(family_witness(4, 1));
  EXPECT_EQ(family_witness(4, 2), (RQ{5, 1}));
  EXPECT_FALSE(family_witness(2, 2));
  EXPECT_FALSE(family_witness(2, 3));
  EXPECT_EQ(family_witness(3, 5), (RQ{11, 10}));

  const auto w = family_witness_check(2, 3);
  EXPECT_EQ(w.candidate, (RQ{6, 3}));
  EXPECT_EQ(w.certificate, -7 * 17 * 8);
}

TEST(FamilyWitness, FirstAdmissibleMembers) {
  const std::vector<std::pair<int, RQ>> first{{1, {8, 4}}, {2, {12, 3}}, {3, {11, 10}}, {4, {5, 1}}};
  for (const auto& [i, expected] : first) {
    std::optional<RQ> found;
    for (std::int64_t k = family_witness_min_k(i); !found; ++k) found = family_witness(i, k);
    EXPECT_EQ(*found, expected) << "family " << i;
  }
}

TEST(FamilyWitness, Errors) {
  EXPECT_THROW(family_witness(0, 5), std::domain_error);
  EXPECT_THROW(family_witness(5, 5), std::domain_error);
  EXPECT_THROW(family_witness(1, 2), std::domain_error);
  EXPECT_THROW(family_witness(3, 4), std::domain_error);
}

TEST(FamilyWitness, CertificateAgreesWithClassifier) {
  for (int i = 1; i <= 4; ++i) {
    for (std::int64_t k = family_witness_min_k(i); k <= 200; ++k) {
      const auto w = family_witness_check(i, k);
      ASSERT_FALSE(w.divergent()) << "family " << i << " k=" << k << " " << to_string(w.candidate);
    }
  }
}

TEST(FamilyWitness, CertificateIsSufficientNotNecessary) {
  // W1/2 = -15 and W2/2 = 21 are each squarefree, so (18, 4) is in F1, but their product is not
  const auto w = family_witness_check(1, 9);
  EXPECT_FALSE(w.certificate_squarefree);
  EXPECT_EQ(w.classified, Family::F1);
  EXPECT_FALSE(w.divergent());
}
