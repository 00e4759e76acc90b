#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "brauerkit/config_io.hpp"
#include "brauerkit/invariants.hpp"
#include "brauerkit/multiset.hpp"
#include "brauerkit/quiver.hpp"
#include "support.hpp"

using namespace brauerkit;
using testsupport::words_t;

namespace {

BrauerConfiguration mdpi_config() {
    return BrauerConfiguration::from_words({{"O", "E", "X", "B", "D", "K"},
                                            {"O", "L", "F", "W", "D"},
                                            {"P", "R", "G", "D", "E"},
                                            {"A", "I", "G", "O", "P"}});
}

}  // namespace

TEST_CASE("multiset union and intersection") {
    multiset_map<std::string> a{{"a", 2}, {"b", 1}}, b{{"a", 1}, {"c", 3}};
    CHECK(multiset_union(a, b) == multiset_map<std::string>{{"a", 2}, {"b", 1}, {"c", 3}});
    CHECK(multiset_intersection(multiset_map<std::string>{{"a", 2}}, b) == multiset_map<std::string>{{"a", 1}});
    CHECK(multiset_union(a, a) == a);
    CHECK(multiset_intersection(a, a) == a);
}

TEST_CASE("vertex and polygon validation") {
    CHECK_THROWS_AS(VertexId(""), error);
    CHECK_THROWS_AS(BrauerConfiguration::from_words({{"a"}}), error);
    CHECK_THROWS_AS(BrauerConfiguration::from_words({}), error);
    using word = BrauerConfiguration::word_type;
    word w{VertexId("a"), VertexId("b"), VertexId("c")};
    CHECK_THROWS_AS(BrauerConfiguration({w}, {std::vector<std::size_t>{1, 1, 2}}), error);
    CHECK_NOTHROW(BrauerConfiguration({w}, {std::vector<std::size_t>{3, 1, 2}}));
}

TEST_CASE("valency and successor sequences of the four-list split") {
    auto c = mdpi_config();
    CHECK(c.valency(VertexId("O")) == 3);
    CHECK(c.valency(VertexId("K")) == 1);
    CHECK_THROWS_AS(c.valency(VertexId("Z")), error);
    try {
        (void)c.valency(VertexId("Z"));
    } catch (const error& e) {
        CHECK(e.code() == errc::not_found);
    }
    auto s = successor_sequence(c, VertexId("D"));
    REQUIRE(s.entries.size() == 3);
    CHECK(s.entries[0].polygon == 0);
    CHECK(s.entries[1].polygon == 1);
    CHECK(s.entries[2].polygon == 2);
    CHECK(successor_sequence(c, VertexId("A")).entries.size() == 1);
}

TEST_CASE("quiver loops and arrows") {
    auto c = mdpi_config();
    auto q = build_quiver(c);
    CHECK(q.loop_count() == 9);
    std::set<std::string> loop_tags;
    for (const auto& a : q.arrows())
        if (a.is_loop()) loop_tags.insert(a.vertex.label());
    CHECK(loop_tags == std::set<std::string>{"A", "L", "R", "I", "X", "F", "B", "W", "K"});

    auto aab = BrauerConfiguration::from_words({{"a", "a", "b"}});
    CHECK(build_quiver(aab).loop_count() == 3);
}

TEST_CASE("dimensions of small configurations") {
    auto ab = BrauerConfiguration::from_words({{"a", "b"}});
    CHECK(dim_lambda(ab) == 4);
    CHECK(dim_center(ab) == 4);
    auto inv = invariants(ab);
    CHECK(inv.dim_lambda == 4);
    CHECK(inv.dim_center == 4);
    CHECK(inv.loops == 2);

    auto c = mdpi_config();
    CHECK(dim_lambda(c) == 35);
    CHECK(dim_center(c) == 14);

    auto v = check_prop_v3(c);
    CHECK(v.polygons == 4);
    CHECK(v.singletons == 9);
    CHECK(v.holds());
    CHECK(v.actual == 14);

    auto four = BrauerConfiguration::from_words({{"c16", "c16", "c16", "c16"}});
    CHECK(dim_lambda(four) == 14);
}

TEST_CASE("connectivity") {
    CHECK(is_connected(mdpi_config()));
    CHECK(is_connected(BrauerConfiguration::from_words({{"a", "b"}})));
    auto split = BrauerConfiguration::from_words({{"a", "b"}, {"c", "d"}, {"a", "e"}});
    CHECK_FALSE(is_connected(split));
    CHECK(polygon_components(split) == std::vector<std::vector<std::size_t>>{{0, 2}, {1}});
    try {
        (void)dim_center(split);
        FAIL("expected a precondition error");
    } catch (const error& e) {
        CHECK(e.code() == errc::precondition);
        CHECK(std::string(e.what()).find("{1,3}") != std::string::npos);
    }
    auto inv = invariants(split);
    CHECK_FALSE(inv.connected());
    CHECK(to_json(inv)["connected"] == false);
}

TEST_CASE("prop v3 rejects repeated vertices") {
    auto c = BrauerConfiguration::from_words({{"a", "a", "b"}});
    CHECK_THROWS_AS(check_prop_v3(c), error);
}

TEST_CASE("configuration text format") {
    auto c = parse_configuration("# four lists\nO E X B D K\nO L F W D\nP R G D E label: 5 4 3 2 1\n\nA I G O P\n");
    CHECK(c.polygon_count() == 4);
    CHECK(c.polygons()[2].label().has_value());
    CHECK(invariants(c) == invariants(mdpi_config()));
    CHECK(parse_configuration(format_configuration(c)) == c);
    CHECK_THROWS_AS(parse_configuration("a b\nc\n"), parse_error);
    CHECK_THROWS_AS(parse_configuration("a b label: 1 1\n"), error);
    CHECK_THROWS_AS(parse_configuration("# nothing\n"), error);
    try {
        (void)parse_configuration("a b\nc\n");
    } catch (const parse_error& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("valency profile format") {
    auto p = parse_valency_profile("polygons 1\nloops 2\nvalency 1 2\n");
    auto inv = invariants(p);
    CHECK(inv.dim_lambda == 4);
    CHECK(inv.dim_center == 4);
    CHECK_THROWS_AS(parse_valency_profile("polygons 1\n"), parse_error);
    CHECK_THROWS_AS(parse_valency_profile("polygons 1\nloops 0\nvalency 2 1\nvalency 2 3\n"), parse_error);
    CHECK_THROWS_AS(parse_valency_profile("polygons x\nloops 0\n"), parse_error);
}

TEST_CASE("json key order") {
    auto j = to_json(invariants(mdpi_config()));
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"dimLambda", "dimCenter", "loops", "polygons", "vertices",
                                           "valencyHistogram"});
    CHECK(j["valencyHistogram"]["1"] == 9);
}

TEST_CASE("random configurations agree with the oracles") {
    std::mt19937_64 rng(20261019);
    for (int trial = 0; trial < 500; ++trial) {
        auto words = testsupport::random_words(rng);
        auto c = BrauerConfiguration::from_words(words);
        auto inv = invariants(c);
        INFO("trial " << trial);
        CHECK(inv.dim_lambda == testsupport::oracle_dim_lambda(words));
        CHECK(inv.loops == testsupport::oracle_loops(words));
        CHECK(inv.connected() == testsupport::oracle_connected(words));
        if (inv.connected()) CHECK(*inv.dim_center == testsupport::oracle_dim_center(words));

        std::size_t total_len = 0, total_val = 0, arrows_expected = 0;
        for (const auto& w : words) total_len += w.size();
        for (const auto& v : c.vertices()) {
            total_val += c.valency(v);
            arrows_expected += c.valency(v);
        }
        CHECK(total_len == total_val);
        auto q = build_quiver(c);
        CHECK(q.arrows().size() == arrows_expected);
        CHECK(q.loop_count() <= q.arrows().size());

        if (inv.connected()) {
            CHECK(invariants(valency_profile(c)) == inv);
        }

        auto shuffled = words;
        for (auto& w : shuffled) std::shuffle(w.begin(), w.end(), rng);
        CHECK(invariants(BrauerConfiguration::from_words(shuffled)) == inv);
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(dim_lambda(BrauerConfiguration::from_words(shuffled)) == inv.dim_lambda);

        if (c.polygon_count() > 1) {
            auto smaller = c.without_polygon(0);
            for (const auto& v : smaller.vertices()) CHECK(smaller.valency(v) <= c.valency(v));
        }
    }
}

TEST_CASE("prop v3 holds on random set-like configurations") {
    std::mt19937_64 rng(7);
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
        auto words = testsupport::random_set_words(rng);
        auto c = BrauerConfiguration::from_words(words);
        if (!is_connected(c)) continue;
        auto v = check_prop_v3(c);
        CHECK(v.holds());
        CHECK(v.actual == testsupport::oracle_dim_center(words));
        ++checked;
    }
    CHECK(checked > 100);
}
