#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "unidist/common.hpp"

namespace unidist::weyl {

// Element tau * c of the signed permutation group W_n = S_n x| Xi_n, where
// Xi_n is the group of subsets of {1,...,n} under symmetric difference.
// tau is stored one-line on 0-based indices; c as a bitmask (bit i = i+1 in c).
struct SignedPermutation {
    int n = 0;
    std::vector<int> tau;   // tau[i] = image of i (0-based)
    uint32_t c = 0;

    static SignedPermutation identity(int n);

    bool operator==(const SignedPermutation& o) const { return n == o.n && tau == o.tau && c == o.c; }
    bool operator<(const SignedPermutation& o) const;

    std::string str() const;
};

// The four index sets attached to w = tau * c.
struct CSets {
    uint32_t c_plus = 0;   // i in c with tau(i) = i
    uint32_t c_minus = 0;  // i not in c with tau(i) = i
    uint32_t c_neq = 0;    // i with tau(i) != i
    uint32_t c_less = 0;   // i with i < tau(i)
};

SignedPermutation multiply(const SignedPermutation& a, const SignedPermutation& b);
SignedPermutation inverse(const SignedPermutation& w);
bool is_involution(const SignedPermutation& w);
CSets c_sets(const SignedPermutation& w);

// Action on the standard basis: w(e_i) = +- e_{tau(i)}, minus iff i in c.
// Returns (image index 0-based, sign).
std::pair<int, int> act_basis(const SignedPermutation& w, int i);

// Simple reflections for the type-C_n basis: s_{alpha_i} = (i,i+1) for i < n,
// s_{alpha_n} = the sign change at n. Labels are 1-based.
SignedPermutation simple_reflection(int n, int label);

std::vector<SignedPermutation> all_elements(int n);     // n <= 8
std::vector<SignedPermutation> all_involutions(int n);  // n <= 8

// Minimal involutions rho * c_{k,n}, 0 <= k <= n, rho a product of disjoint
// simple transpositions of S_k, c_{k,n} = {k+1,...,n}.
std::vector<SignedPermutation> minimal_involutions(int n);
bool is_minimal(const SignedPermutation& w);

// Labeled edges w ->alpha s_alpha w s_alpha of the involution graph, present
// whenever w(alpha) != +-alpha. Sorted by label.
std::vector<std::pair<int, SignedPermutation>> gw_edges(const SignedPermutation& w);

struct SpringerPath {
    SignedPermutation sigma;   // s_{alpha_k} ... s_{alpha_1}
    SignedPermutation w_min;
    std::vector<int> labels;   // alpha_1, ..., alpha_k
};

// BFS from w to a minimal involution; returns the lexicographically least
// shortest path under label order. sigma * w * sigma^{-1} = w_min.
SpringerPath springer_path(const SignedPermutation& w);

// DOT rendering of the full involution graph for W_n (n <= 4).
std::string dot_involution_graph(int n);

// Subset helpers on bitmasks over {1,...,n} (1-based members).
uint32_t apply_perm(const std::vector<int>& tau, uint32_t set);
std::vector<int> set_members(uint32_t set, int n);  // 1-based, ascending

} // namespace unidist::weyl
