#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "unidist/common.hpp"

namespace unidist::sign {

// Ordered tuple of signs, entries +1 / -1. The empty tuple is legal (it is f_0).
using SignTuple = std::vector<int8_t>;

// Edge labels of a walk, 1-based; label i at a step deletes the i-th and
// (i+1)-th entries of the current tuple (which must be equal).
using Pattern = std::vector<int>;

// Coordinate history of a walk: per step the pair of positions of the
// original tuple deleted at that step (1-based, x < y).
using History = std::vector<std::pair<int, int>>;

SignTuple parse_tuple(const std::string& s);   // over {+,-}
std::string format_tuple(const SignTuple& e);

// The alternating tuple f_t = (+1,-1,+1,...) of length t.
SignTuple alternating(int t);

// Block decomposition e = sign * f_{t_1,...,t_m}. Block boundaries are the
// positions i with e_i = e_{i+1}; blocks are the maximal alternating runs.
struct Decomposition {
    int leading_sign = 0;        // +1 / -1; 0 marks the empty tuple
    std::vector<int> blocks;     // (t_1,...,t_m), empty for the empty tuple

    bool is_empty() const { return leading_sign == 0; }
};

Decomposition decompose(const SignTuple& e);

// Rebuild sign * f_{t_1,...,t_m}.
SignTuple compose(int leading_sign, const std::vector<int>& blocks);

// All deletion edges out of e, sorted by label.
std::vector<std::pair<int, SignTuple>> edges(const SignTuple& e);

// Connected-component index: tau(+-f_{t_1,...,t_m}) = +-(t_1 - t_2 + t_3 - ...),
// tau(f_0) = 0. Every deletion edge preserves it.
int tau(const SignTuple& e);

// Exhaustive-search oracle for tau: explores every deletion sequence from e,
// checks that all reachable sinks agree and returns the signed sink index t
// (reaching -f_t yields -t). Throws CapExceeded above the length cap.
int bfs_component(const SignTuple& e, int cap = 16);

// Walk e along the pattern; returns the endpoint and coordinate history.
// Throws ValidationError naming the failing step on an invalid label.
std::pair<SignTuple, History> walk(const SignTuple& e, const Pattern& p);

// Checks the two history properties: no interleaving x_i < x_j < y_i < y_j,
// and every interior index of a pair was deleted earlier.
bool history_valid(const History& h);

// Constrained path to f_0 (requires tau(e) = 0, e nonempty). The pattern ends
// with the run (t_1, t_1-1, ..., 2, 1) and all earlier labels exceed t_1 + 1.
// With variant = true (requires e_{t_1+2} = e_{t_1+1}) the run is
// (t_1+1, t_1, ..., 1) and earlier labels exceed t_1 + 2.
Pattern path_v0(const SignTuple& e, bool variant = false);

// Constrained path to f_1 (requires tau(e) = 1, e != f_1). The pattern ends
// with (t_1, t_1-1, ..., x), x in {1,2}, and earlier labels exceed t_1 + 1;
// variant as in path_v0.
Pattern path_v1(const SignTuple& e, bool variant = false);

// DOT rendering of the full subgraph reachable from e.
std::string dot_reachable(const SignTuple& e);

} // namespace unidist::sign
