#include <doctest.h>

#include <tuple>

#include "unidist/signgraph.hpp"

using namespace unidist;
using namespace unidist::sign;

namespace {

std::vector<SignTuple> all_tuples(int len) {
    std::vector<SignTuple> out;
    for (uint32_t mask = 0; mask < (1u << len); ++mask) {
        SignTuple e;
        for (int i = 0; i < len; ++i) e.push_back((mask >> i) & 1u ? 1 : -1);
        out.push_back(std::move(e));
    }
    return out;
}

// Checks the constrained-pattern contract shared by the two constructors:
// a trailing run (hi, hi-1, ..., lo) with all earlier labels > bound.
void check_pattern_form(const Pattern& p, int hi, int lo, int bound) {
    REQUIRE(static_cast<int>(p.size()) >= hi - lo + 1);
    size_t run = static_cast<size_t>(hi - lo + 1);
    for (int v = hi; v >= lo; --v)
        CHECK(p[p.size() - run + static_cast<size_t>(hi - v)] == v);
    for (size_t i = 0; i + run < p.size(); ++i) CHECK(p[i] > bound);
}

} // namespace

TEST_CASE("parse and format") {
    CHECK(format_tuple(parse_tuple("+-+")) == "+-+");
    CHECK(parse_tuple("").empty());
    CHECK_THROWS_AS(parse_tuple("+x"), ValidationError);
}

TEST_CASE("edges") {
    CHECK(edges(parse_tuple("++")) ==
          std::vector<std::pair<int, SignTuple>>{{1, {}}});
    CHECK(edges(parse_tuple("+-+")).empty());
    auto e = edges(parse_tuple("++--"));
    REQUIRE(e.size() == 2);
    CHECK(e[0] == std::make_pair(1, parse_tuple("--")));
    CHECK(e[1] == std::make_pair(3, parse_tuple("++")));
}

TEST_CASE("decompose") {
    auto d = decompose(parse_tuple("+-++++-"));
    CHECK(d.leading_sign == 1);
    CHECK(d.blocks == std::vector<int>{3, 1, 1, 2});
    CHECK(compose(1, {3, 1, 1, 2}) == parse_tuple("+-++++-"));

    d = decompose(parse_tuple("--"));
    CHECK(d.leading_sign == -1);
    CHECK(d.blocks == std::vector<int>{1, 1});

    d = decompose(parse_tuple("+-"));
    CHECK(d.leading_sign == 1);
    CHECK(d.blocks == std::vector<int>{2});

    CHECK(decompose({}).is_empty());
}

TEST_CASE("compose round-trips over all short tuples") {
    for (int len = 0; len <= 10; ++len)
        for (const auto& e : all_tuples(len)) {
            auto d = decompose(e);
            if (d.is_empty()) CHECK(e.empty());
            else CHECK(compose(d.leading_sign, d.blocks) == e);
        }
}

TEST_CASE("tau closed formula") {
    CHECK(tau({}) == 0);
    for (int t = 1; t <= 9; ++t) {
        CHECK(tau(alternating(t)) == t);
        auto neg = alternating(t);
        for (auto& v : neg) v = static_cast<int8_t>(-v);
        CHECK(tau(neg) == -t);
    }
    // Alternating sum of block lengths from the first block.
    CHECK(tau(parse_tuple("+-++++-")) == 3 - 1 + 1 - 2);
    CHECK(tau(parse_tuple("+--")) == 1);
    CHECK(tau(parse_tuple("++-")) == -1);
}

TEST_CASE("bfs component oracle agrees with tau") {
    CHECK(bfs_component(parse_tuple("++")) == 0);
    CHECK(bfs_component(parse_tuple("+-+")) == 3);
    CHECK(bfs_component(parse_tuple("++--")) == 0);
    for (int len = 0; len <= 10; ++len)
        for (const auto& e : all_tuples(len)) CHECK(bfs_component(e) == tau(e));
    CHECK_THROWS_AS(bfs_component(all_tuples(4).front(), 3), CapExceeded);
}

TEST_CASE("edge stability and sink characterization") {
    for (int len = 0; len <= 10; ++len)
        for (const auto& e : all_tuples(len)) {
            auto es = edges(e);
            for (auto& [label, next] : es) {
                (void)label;
                CHECK(tau(next) == tau(e));
            }
            auto d = decompose(e);
            CHECK(es.empty() == (d.blocks.size() <= 1));
        }
}

TEST_CASE("walk and history") {
    auto [fin, hist] = walk(parse_tuple("++--"), {1, 1});
    CHECK(fin.empty());
    CHECK(hist == History{{1, 2}, {3, 4}});
    CHECK(history_valid(hist));

    std::tie(fin, hist) = walk(parse_tuple("++--"), {3, 1});
    CHECK(fin.empty());
    CHECK(hist == History{{3, 4}, {1, 2}});
    CHECK(history_valid(hist));

    CHECK_THROWS_AS(walk(parse_tuple("+-+"), {1}), ValidationError);
}

TEST_CASE("path_v0 examples") {
    CHECK(path_v0(parse_tuple("++")) == Pattern{1});
    CHECK(path_v0(parse_tuple("++--")) == Pattern{3, 1});
    CHECK_THROWS_AS(path_v0(parse_tuple("+-+")), ValidationError);
    CHECK_THROWS_AS(path_v0({}), ValidationError);
}

TEST_CASE("path_v1 examples") {
    CHECK(path_v1(parse_tuple("+--")) == Pattern{2});
    CHECK_THROWS_AS(path_v1(parse_tuple("+-+")), ValidationError);
    CHECK_THROWS_AS(path_v1(parse_tuple("+")), ValidationError);
}

TEST_CASE("path constructors satisfy the stated form") {
    for (int len = 1; len <= 10; ++len) {
        for (const auto& e : all_tuples(len)) {
            int tv = tau(e);
            if (tv != 0 && tv != 1) continue;
            if (tv == 1 && e == alternating(1)) continue;
            auto d = decompose(e);
            int t1 = d.blocks.front();

            Pattern p = tv == 0 ? path_v0(e) : path_v1(e);
            auto [fin, hist] = walk(e, p);
            CHECK(fin == alternating(tv));
            CHECK(history_valid(hist));
            int xlast = p.back();
            if (tv == 0) CHECK(xlast == 1);
            else CHECK((xlast == 1 || xlast == 2));
            if (tv == 1 && t1 == 1) CHECK(xlast == 1);
            check_pattern_form(p, t1, xlast, t1 + 1);

            bool variant_ok = d.blocks.size() > 2 && d.blocks[1] == 1;
            if (variant_ok) {
                Pattern q = tv == 0 ? path_v0(e, true) : path_v1(e, true);
                auto [fin2, hist2] = walk(e, q);
                CHECK(fin2 == alternating(tv));
                CHECK(history_valid(hist2));
                int xl = q.back();
                if (tv == 0) CHECK(xl == 1);
                check_pattern_form(q, t1 + 1, xl, t1 + 2);
            } else {
                CHECK_THROWS_AS(tv == 0 ? path_v0(e, true) : path_v1(e, true),
                                ValidationError);
            }
        }
    }
}

TEST_CASE("dot export lists the reachable subgraph") {
    std::string dot = dot_reachable(parse_tuple("++--"));
    CHECK(dot.find("\"++--\" -> \"--\" [label=\"1\"]") != std::string::npos);
    CHECK(dot.find("\"++--\" -> \"++\" [label=\"3\"]") != std::string::npos);
    CHECK(dot.find("\"\"") != std::string::npos);  // the empty tuple vertex
}
