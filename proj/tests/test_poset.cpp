#include <gtest/gtest.h>

#include <set>

#include "support/enumerate.hpp"

using namespace mseg;

namespace {
const Multisegment kA{{1, 1}, {2, 2}, {2, 2}, {3, 3}};
}

TEST(Poset, TwoPoints) {
    auto p = generate_poset(Multisegment{{1, 1}, {2, 2}});
    EXPECT_EQ(p.size(), 2u);
    EXPECT_EQ(p.op_edges.size(), 1u);
    EXPECT_TRUE(p.contains(Multisegment{{1, 2}}));
}

TEST(Poset, WorkedExample) {
    auto p = generate_poset(kA);
    std::set<Multisegment> got(p.elements.begin(), p.elements.end());
    std::set<Multisegment> want{kA,
                                {{1, 2}, {2, 2}, {3, 3}},
                                {{1, 1}, {2, 2}, {2, 3}},
                                {{1, 2}, {2, 3}},
                                {{1, 3}, {2, 2}}};
    EXPECT_EQ(got, want);
    // {[1,2],[2],[3]} -> {[1,3],[2]} is a single operation but not a cover.
    EXPECT_EQ(p.op_edges.size(), 7u);
    EXPECT_EQ(hasse_edges(p).size(), 5u);
}

TEST(Poset, SymmetricIdentity) {
    EXPECT_EQ(generate_poset(Multisegment{{1, 3}, {2, 4}, {3, 5}}).size(), 6u);
}

TEST(Poset, CapThrows) {
    Multisegment a{{1, 5}, {2, 6}, {3, 7}, {4, 8}, {5, 9}};
    EXPECT_THROW(generate_poset(a, 50), ResourceLimitError);
    EXPECT_EQ(generate_poset(a).size(), 120u);
}

TEST(LeqRank, Examples) {
    EXPECT_TRUE(leq_rank(Multisegment{{1, 3}, {2, 2}}, kA));
    EXPECT_FALSE(leq_rank(Multisegment{{1, 2}, {3, 4}}, Multisegment{{1, 2}, {2, 3}}));
    Multisegment lo{{0, 1}, {0, 1}}, hi{{0, 0}, {0, 0}, {1, 1}, {1, 1}};
    EXPECT_TRUE(leq_rank(lo, hi));
    EXPECT_FALSE(leq_rank(hi, lo));
    EXPECT_TRUE(leq_rank(kA, kA));
    EXPECT_TRUE(leq_rank(Multisegment{}, Multisegment{}));
}

TEST(MinimalElement, Examples) {
    EXPECT_EQ(minimal_element(kA), (Multisegment{{1, 3}, {2, 2}}));
    EXPECT_EQ(minimal_element(Multisegment{{1, 3}, {2, 4}}), (Multisegment{{1, 4}, {2, 3}}));
    EXPECT_EQ(minimal_element(Multisegment{{1, 4}, {2, 3}}), (Multisegment{{1, 4}, {2, 3}}));
}

TEST(HasseDot, Counts) {
    auto count = [](const std::string& s, const std::string& pat) {
        std::size_t n = 0;
        for (auto pos = s.find(pat); pos != std::string::npos; pos = s.find(pat, pos + 1)) ++n;
        return n;
    };
    auto d1 = hasse_dot(generate_poset(Multisegment{{1, 1}, {2, 2}}));
    EXPECT_EQ(count(d1, "[label="), 2u);
    EXPECT_EQ(count(d1, "->"), 1u);
    auto d2 = hasse_dot(generate_poset(kA));
    EXPECT_EQ(count(d2, "[label="), 5u);
    EXPECT_EQ(count(d2, "->"), 5u);
    auto d3 = hasse_dot(generate_poset(Multisegment{}));
    EXPECT_EQ(count(d3, "[label="), 1u);
    EXPECT_EQ(count(d3, "->"), 0u);
    EXPECT_NE(d3.find("{\\\"segments\\\":[]}"), std::string::npos);
}

// Rank criterion vs reachability, antisymmetry, unique minimum, endpoint containment.
TEST(PosetProperties, OracleEquivalenceDegree6) {
    auto groups = testkit::by_weight(testkit::all_multisegments(1, 4, 6));
    std::size_t pairs = 0;
    for (const auto& [w, elems] : groups) {
        std::map<Multisegment, std::set<Multisegment>> below;
        for (const auto& a : elems) {
            auto p = generate_poset(a);
            below[a] = {p.elements.begin(), p.elements.end()};
            // unique sink, equal to minimal_element
            std::size_t sinks = 0;
            for (const auto& b : p.elements)
                if (!b.has_linked_pair()) {
                    ++sinks;
                    EXPECT_EQ(b, minimal_element(a));
                }
            EXPECT_EQ(sinks, 1u);
        }
        for (const auto& a : elems)
            for (const auto& b : elems) {
                ++pairs;
                bool reach = below[a].count(b) != 0;
                ASSERT_EQ(leq_rank(b, a), reach) << b.to_string() << " vs " << a.to_string();
                if (reach && below[b].count(a)) ASSERT_EQ(a, b);
                if (reach) {
                    auto ae = a.ends(), be = b.ends(), ab = a.begins(), bb = b.begins();
                    ASSERT_TRUE(std::includes(ae.begin(), ae.end(), be.begin(), be.end()));
                    ASSERT_TRUE(std::includes(ab.begin(), ab.end(), bb.begin(), bb.end()));
                }
            }
    }
    EXPECT_GT(pairs, 1000u);
}

TEST(PosetProperties, HasseIsTransitiveReduction) {
    for (const auto& a : testkit::all_multisegments(1, 4, 5)) {
        auto p = generate_poset(a);
        auto h = hasse_edges(p);
        for (auto [u, v] : h) {
            // nothing strictly between u and v
            for (const auto& z : p.elements) {
                if (z == p.elements[u] || z == p.elements[v]) continue;
                ASSERT_FALSE(leq_rank(z, p.elements[u]) && leq_rank(p.elements[v], z));
            }
        }
    }
}
