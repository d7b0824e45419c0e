#include <gtest/gtest.h>

#include <set>

#include "support/enumerate.hpp"

using namespace mseg;

namespace {
const Multisegment kA{{1, 1}, {2, 2}, {2, 2}, {3, 3}};
const Multisegment kB{{1, 2}, {2, 3}};

// Second route: exhaustive lift search and a KL engine recursing on the other descent.
std::int64_t oracle_mult(const Multisegment& b, const Multisegment& a) {
    static KLEngine engine(DescentChoice::LastLeft);
    if (!generate_poset(a).contains(b)) return 0;
    auto d = symmetrize(a);
    auto bs = lift(d, b);
    auto base = identity_base(d.symmetric);
    return evaluate_at_one(engine(phi_inverse(base, d.symmetric), phi_inverse(base, bs)));
}
}  // namespace

TEST(Mult, Examples) {
    EXPECT_EQ(mult(kB, kA), 2);
    EXPECT_EQ(mult(kA, kA), 1);
    EXPECT_EQ(mult(Multisegment{{1, 4}, {2, 3}}, Multisegment{{1, 3}, {2, 4}}), 1);
    EXPECT_EQ(mult(Multisegment{{1, 4}}, kA), 0);
    EXPECT_EQ(mult(kA, kB), 0);
}

TEST(MultMatrix, Examples) {
    auto two = mult_matrix(Multisegment{{1, 1}, {2, 2}});
    EXPECT_EQ(*two, (MultVector{{Multisegment{{1, 1}, {2, 2}}, 1}, {Multisegment{{1, 2}}, 1}}));
    auto five = mult_matrix(kA);
    ASSERT_EQ(five->size(), 5u);
    for (const auto& [b, m] : *five) {
        EXPECT_EQ(m, b == kB ? 2 : 1) << b.to_string();
        EXPECT_EQ(m, oracle_mult(b, kA));
    }
}

TEST(MultMatrix, SymmetricS3AllOne) {
    for (const auto& [b, m] : *mult_matrix(Multisegment{{1, 3}, {2, 4}, {3, 5}})) EXPECT_EQ(m, 1);
}

TEST(RelationType, Examples) {
    EXPECT_EQ(relation_type({1, 4}, {2, 3}), RelationType::Covers);
    EXPECT_EQ(relation_type({1, 2}, {3, 4}), RelationType::Juxtaposed);
    EXPECT_EQ(relation_type({1, 1}, {3, 3}), RelationType::Unrelated);
    EXPECT_EQ(relation_type({1, 3}, {2, 4}), RelationType::LinkedNotJuxtaposed);
    EXPECT_EQ(relation_type({2, 3}, {1, 4}), RelationType::LinkedNotJuxtaposed);
    EXPECT_EQ(relation_type({2, 2}, {2, 2}), RelationType::Covers);
}

TEST(SameRelationType, Examples) {
    auto m = same_relation_type(Multisegment{{1, 1}, {2, 2}}, Multisegment{{5, 5}, {6, 6}});
    ASSERT_TRUE(m.has_value());
    EXPECT_EQ(xi_transport(*m, Multisegment{{1, 2}}), (Multisegment{{5, 6}}));
    EXPECT_FALSE(same_relation_type(Multisegment{{1, 1}, {2, 2}}, Multisegment{{1, 1}, {3, 3}}).has_value());
    EXPECT_FALSE(same_relation_type(Multisegment{{1, 1}}, Multisegment{{1, 1}, {3, 3}}).has_value());
    Multisegment shifted = kA.shifted(-1);
    auto t = same_relation_type(kA, shifted);
    ASSERT_TRUE(t.has_value());
    auto p = generate_poset(kA), q = generate_poset(shifted);
    std::set<std::pair<Multisegment, Multisegment>> e1, e2;
    for (auto [u, v] : hasse_edges(p)) e1.emplace(xi_transport(*t, p.elements[u]), xi_transport(*t, p.elements[v]));
    for (auto [u, v] : hasse_edges(q)) e2.emplace(q.elements[u], q.elements[v]);
    EXPECT_EQ(e1, e2);
    EXPECT_THROW(xi_transport(*t, Multisegment{{1, 3}}), DomainError);
}

TEST(SameRelationType, Identity) {
    auto t = same_relation_type(kA, kA);
    ASSERT_TRUE(t.has_value());
    for (const auto& b : generate_poset(kA).elements) EXPECT_EQ(xi_transport(*t, b), b);
}

// mult > 0 iff b ≤ a, mult(a,a) = 1, pipeline route = oracle route, degree ≤ 5.
TEST(MultProperties, ExhaustiveAgainstOracle) {
    auto groups = testkit::by_weight(testkit::all_multisegments(1, 4, 5));
    for (const auto& [w, elems] : groups)
        for (const auto& a : elems) {
            auto mm = mult_matrix(a);
            for (const auto& b : elems) {
                auto m = mult(b, a);
                ASSERT_EQ(m > 0, leq_rank(b, a));
                if (m > 0) {
                    ASSERT_EQ(m, mm->at(b));
                    if (a.size() <= 5) ASSERT_EQ(m, oracle_mult(b, a)) << b.to_string() << " in " << a.to_string();
                }
            }
            ASSERT_EQ(mult(a, a), 1);
        }
}

TEST(MultProperties, RelationTypeInvariance) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        auto a = testkit::random_multisegment(rng, 0, 4, 5);
        auto a2 = testkit::relation_type_partner(rng, a);
        auto t = same_relation_type(a, a2);
        ASSERT_TRUE(t.has_value()) << a.to_string() << " vs " << a2.to_string();
        auto m1 = mult_matrix(a), m2 = mult_matrix(a2);
        ASSERT_EQ(m1->size(), m2->size());
        for (const auto& [b, m] : *m1) ASSERT_EQ(m, m2->at(xi_transport(*t, b)));
    }
}

TEST(MultProperties, SymmetricShortCircuit) {
    for (int n = 1; n <= 4; ++n)
        for (const auto& a : testkit::symmetric_family(n))
            for (const auto& b : generate_poset(a).elements) ASSERT_EQ(mult_symmetric(b, a), mult(b, a));
}
