#include <doctest.h>

#include <algorithm>
#include <random>

#include "unidist/weylinv.hpp"

using namespace unidist;
using namespace unidist::weyl;

namespace {

SignedPermutation make(int n, std::vector<int> tau_one_based, std::vector<int> c) {
    SignedPermutation w;
    w.n = n;
    for (int v : tau_one_based) w.tau.push_back(v - 1);
    for (int i : c) w.c |= 1u << (i - 1);
    return w;
}

uint32_t mask_of(std::initializer_list<int> members) {
    uint32_t m = 0;
    for (int i : members) m |= 1u << (i - 1);
    return m;
}

} // namespace

TEST_CASE("multiplication and inverses") {
    auto xi1 = make(2, {1, 2}, {1});
    CHECK(multiply(xi1, xi1) == SignedPermutation::identity(2));

    auto s1 = make(2, {2, 1}, {});
    auto prod = multiply(s1, xi1);
    CHECK(prod == make(2, {2, 1}, {1}));
    CHECK(multiply(prod, prod) == make(2, {1, 2}, {1, 2}));

    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 1 + static_cast<int>(rng() % 6);
        auto elems = all_elements(n);
        const auto& w = elems[rng() % elems.size()];
        CHECK(multiply(w, inverse(w)) == SignedPermutation::identity(n));
        CHECK(multiply(inverse(w), w) == SignedPermutation::identity(n));
    }
}

TEST_CASE("multiplication matches the basis action") {
    std::mt19937 rng(11);
    auto act = [](const SignedPermutation& w, int i, int s) {
        auto [j, sg] = act_basis(w, i);
        return std::make_pair(j, sg * s);
    };
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 4);
        auto elems = all_elements(n);
        const auto& a = elems[rng() % elems.size()];
        const auto& b = elems[rng() % elems.size()];
        auto ab = multiply(a, b);
        for (int i = 0; i < n; ++i) {
            auto [j, s] = act_basis(b, i);
            auto via_b_then_a = act(a, j, s);
            auto [jj, ss] = act_basis(ab, i);
            CHECK(via_b_then_a == std::make_pair(jj, ss));
        }
    }
}

TEST_CASE("involutions") {
    CHECK(is_involution(make(3, {1, 2, 3}, {2, 3})));
    CHECK_FALSE(is_involution(make(2, {2, 1}, {1})));
    // Exhaustive count of elements squaring to the identity in W_2.
    auto elems = all_elements(2);
    CHECK(elems.size() == 8);
    int count = 0;
    for (const auto& w : elems)
        if (multiply(w, w) == SignedPermutation::identity(2)) ++count;
    CHECK(count == 6);
    CHECK(all_involutions(2).size() == 6);
    // The direct enumeration matches the filter for all small ranks.
    for (int n = 0; n <= 5; ++n) {
        std::vector<SignedPermutation> filtered;
        for (const auto& w : all_elements(n))
            if (is_involution(w)) filtered.push_back(w);
        CHECK(all_involutions(n) == filtered);
    }
}

TEST_CASE("c-sets") {
    auto s = c_sets(make(2, {2, 1}, {}));
    CHECK(s.c_plus == 0);
    CHECK(s.c_minus == 0);
    CHECK(s.c_neq == mask_of({1, 2}));
    CHECK(s.c_less == mask_of({1}));

    s = c_sets(make(2, {1, 2}, {2}));
    CHECK(s.c_plus == mask_of({2}));
    CHECK(s.c_minus == mask_of({1}));
    CHECK(s.c_neq == 0);
}

TEST_CASE("minimal involutions") {
    auto m1 = minimal_involutions(1);
    REQUIRE(m1.size() == 2);
    CHECK(std::count(m1.begin(), m1.end(), make(1, {1}, {1})) == 1);
    CHECK(std::count(m1.begin(), m1.end(), make(1, {1}, {})) == 1);

    auto m2 = minimal_involutions(2);
    REQUIRE(m2.size() == 4);
    for (auto w : {make(2, {1, 2}, {1, 2}), make(2, {1, 2}, {2}), make(2, {1, 2}, {}),
                   make(2, {2, 1}, {})})
        CHECK(std::count(m2.begin(), m2.end(), w) == 1);

    for (int n = 1; n <= 5; ++n)
        for (const auto& w : minimal_involutions(n)) {
            CHECK(is_involution(w));
            CHECK(is_minimal(w));
        }
    // is_minimal holds exactly on the enumerated set.
    for (int n = 1; n <= 4; ++n) {
        auto minimal = minimal_involutions(n);
        for (const auto& w : all_involutions(n)) {
            bool in_set = std::count(minimal.begin(), minimal.end(), w) > 0;
            CHECK(is_minimal(w) == in_set);
        }
    }
    // The c_+ set of a minimal involution is the defining suffix.
    for (const auto& w : minimal_involutions(4)) {
        auto cs = c_sets(w);
        CHECK(cs.c_plus == w.c);
    }
}

TEST_CASE("involution graph edges") {
    auto w13 = make(3, {3, 2, 1}, {});
    auto edges13 = gw_edges(w13);
    bool has_alpha1 = false;
    for (auto& [label, next] : edges13)
        if (label == 1 && next == make(3, {1, 3, 2}, {})) has_alpha1 = true;
    CHECK(has_alpha1);

    auto w23 = make(3, {1, 3, 2}, {});
    for (auto& [label, next] : gw_edges(w23)) {
        (void)next;
        CHECK(label != 2);  // w alpha_2 = -alpha_2
    }

    // Symmetry: w ->alpha w' implies w' ->alpha w.
    for (const auto& w : all_involutions(3))
        for (auto& [label, next] : gw_edges(w)) {
            bool back = false;
            for (auto& [l2, w2] : gw_edges(next))
                if (l2 == label && w2 == w) back = true;
            CHECK(back);
        }
}

TEST_CASE("springer paths") {
    for (const auto& w : minimal_involutions(3)) {
        auto sp = springer_path(w);
        CHECK(sp.labels.empty());
        CHECK(sp.w_min == w);
        CHECK(sp.sigma == SignedPermutation::identity(3));
    }

    auto sp = springer_path(make(3, {3, 2, 1}, {}));
    CHECK(sp.labels == std::vector<int>{1});
    CHECK(sp.w_min == make(3, {1, 3, 2}, {}));

    for (int n = 1; n <= 4; ++n)
        for (const auto& w : all_involutions(n)) {
            auto p = springer_path(w);
            CHECK(is_minimal(p.w_min));
            CHECK(multiply(multiply(p.sigma, w), inverse(p.sigma)) == p.w_min);
        }
}

TEST_CASE("conjugation transports the c-sets") {
    // For every involution w and group element sigma in W_3.
    for (const auto& w : all_involutions(3)) {
        auto cw = c_sets(w);
        for (const auto& sigma : all_elements(3)) {
            auto wp = multiply(multiply(sigma, w), inverse(sigma));
            auto cwp = c_sets(wp);
            CHECK(apply_perm(sigma.tau, cw.c_plus) == cwp.c_plus);
            CHECK(apply_perm(sigma.tau, cw.c_minus) == cwp.c_minus);
            CHECK(apply_perm(sigma.tau, cw.c_neq) == cwp.c_neq);
        }
    }
}

TEST_CASE("graph paths transport c_less") {
    // All paths of length <= 3 out of every involution in W_3.
    for (const auto& w0 : all_involutions(3)) {
        struct Node {
            SignedPermutation w, sigma;
            int depth;
        };
        std::vector<Node> stack{{w0, SignedPermutation::identity(3), 0}};
        while (!stack.empty()) {
            Node cur = stack.back();
            stack.pop_back();
            auto lhs = apply_perm(cur.sigma.tau, c_sets(w0).c_less);
            CHECK(lhs == c_sets(cur.w).c_less);
            if (cur.depth == 3) continue;
            for (auto& [label, next] : gw_edges(cur.w))
                stack.push_back({next, multiply(simple_reflection(3, label), cur.sigma),
                                 cur.depth + 1});
        }
    }
}

TEST_CASE("cardinalities are constant along graph paths") {
    for (const auto& w : all_involutions(3)) {
        auto cw = c_sets(w);
        for (auto& [label, next] : gw_edges(w)) {
            (void)label;
            auto cn = c_sets(next);
            CHECK(std::popcount(cw.c_plus) == std::popcount(cn.c_plus));
            CHECK(std::popcount(cw.c_minus) == std::popcount(cn.c_minus));
            CHECK(std::popcount(cw.c_neq) == std::popcount(cn.c_neq));
        }
    }
}

TEST_CASE("dot export") {
    std::string dot = dot_involution_graph(2);
    CHECK(dot.find("graph weyl_involutions_n2") != std::string::npos);
    CHECK_THROWS_AS(dot_involution_graph(5), ValidationError);
}
