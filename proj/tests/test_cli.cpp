#include <gtest/gtest.h>

#include <sstream>

#include "multiseg/cli.hpp"

using namespace mseg;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string sample(const std::string& name) { return std::string(MULTISEG_SAMPLES_DIR) + "/" + name; }

}  // namespace

TEST(Cli, Mult) {
    auto r = run({"mult", sample("b.json"), sample("a.json")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "2\n");
}

TEST(Cli, Kl) {
    auto r = run({"kl", "--x", "1324", "--w", "3412"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "[1,1]\n");
    EXPECT_EQ(run({"kl", "--x", "1324", "--w", "312"}).code, 3);
    EXPECT_EQ(run({"kl", "--x", "1324", "--w", "341"}).code, 2);
    EXPECT_EQ(run({"kl", "--x", "13x4", "--w", "3412"}).code, 2);
}

TEST(Cli, ErrorCodes) {
    EXPECT_EQ(run({"mult", sample("malformed.json"), sample("a.json")}).code, 2);
    EXPECT_EQ(run({"mult", sample("missing.json"), sample("a.json")}).code, 2);
    EXPECT_EQ(run({"no-such-command"}).code, 2);
    EXPECT_EQ(run({"lift", sample("a.json"), sample("symmetric.json")}).code, 3);
    EXPECT_EQ(run({"poset", sample("symmetric.json"), "--max-size", "10"}).code, 4);
}

TEST(Cli, Symmetrize) {
    auto r = run({"symmetrize", sample("a.json")});
    ASSERT_EQ(r.code, 0);
    auto j = json::parse(r.out);
    EXPECT_EQ(multisegment_from_json(j["symmetric"]), (Multisegment{{0, 3}, {1, 5}, {2, 4}, {3, 6}}));
    EXPECT_EQ(multisegment_from_json(j["c1"]), (Multisegment{{3, 4}}));
}

TEST(Cli, PosetAndDot) {
    auto r = run({"poset", sample("a.json")});
    ASSERT_EQ(r.code, 0);
    auto j = json::parse(r.out);
    EXPECT_EQ(j["size"], 5);
    EXPECT_EQ(j["covers"].size(), 5u);
    auto d = run({"poset", sample("a.json"), "--dot", "-"});
    EXPECT_EQ(d.out.rfind("digraph", 0), 0u);
}

TEST(Cli, TruncateAndDescent) {
    EXPECT_EQ(run({"truncate", sample("a.json"), "--end", "3"}).out, "{\"segments\":[[2,2],[2,2],[1,1]]}\n");
    EXPECT_EQ(run({"truncate", sample("b.json"), "--begin", "1"}).out, "{\"segments\":[[2,3],[2,2]]}\n");
    auto j = json::parse(run({"descent-set", sample("a.json"), "-k", "3"}).out);
    EXPECT_EQ(j["elements"].size(), 2u);
    EXPECT_EQ(run({"truncate", sample("a.json")}).code, 2);
}

TEST(Cli, LiftPhiRelation) {
    auto l = run({"lift", sample("a.json"), sample("b.json")});
    EXPECT_EQ(multisegment_from_json(json::parse(l.out)), (Multisegment{{0, 5}, {1, 6}, {2, 3}, {3, 4}}));
    auto p = run({"phi", sample("symmetric.json"), "--w", "1324"});
    EXPECT_EQ(multisegment_from_json(json::parse(p.out)), (Multisegment{{0, 3}, {1, 5}, {2, 4}, {3, 6}}));
    auto rt = json::parse(run({"relation-type", sample("a.json"), sample("shifted.json")}).out);
    EXPECT_TRUE(rt["same"].get<bool>());
}

TEST(Cli, MultMatrixAndRing) {
    auto m = json::parse(run({"mult-matrix", sample("a.json")}).out);
    EXPECT_EQ(m.size(), 5u);
    auto l = ring_element_from_json(json::parse(run({"ring", "to-l", sample("expr.json")}).out));
    EXPECT_EQ(l, RingElement::L(Multisegment{{1, 1}, {2, 2}}) + RingElement::L(Multisegment{{1, 2}}));
    auto d = ring_element_from_json(json::parse(run({"ring", "derive", "--end", "2", sample("expr.json")}).out));
    EXPECT_EQ(d, RingElement::pi(Multisegment{{1, 1}, {2, 2}}) + RingElement::pi(Multisegment{{1, 1}}));
}

TEST(Cli, Deterministic) {
    for (auto args : std::vector<std::vector<std::string>>{{"mult-matrix", sample("a.json")},
                                                           {"poset", sample("a.json"), "--dot", "-"},
                                                           {"--version"}}) {
        EXPECT_EQ(run(args).out, run(args).out);
    }
    EXPECT_EQ(run({"--version"}).out.rfind("multiseg ", 0), 0u);
}
