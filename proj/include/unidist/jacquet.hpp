#pragma once

#include <vector>

#include "unidist/common.hpp"
#include "unidist/segcalc.hpp"

namespace unidist::jac {

// Ordered composition of a block size, in cuspidal-support units.
using Composition = std::vector<int64_t>;

// End-first splitting of a segment: the first factor carries e(Delta).
std::vector<seg::Segment> split_L(const seg::Segment& s, const Composition& c);

// Beginning-first splitting: the last factor carries e(Delta).
std::vector<seg::Segment> split_Z(const seg::Segment& s, const Composition& c);

// Two-block splittings of a ladder. Cut points x_i in [a_i, b_i + 1], strictly
// decreasing across rows; the left factor takes the end pieces [x_i, b_i],
// the right factor the beginning pieces [a_i, x_i - 1]; empty pieces drop.
// Both factors are ladders. Keyed by left size.
std::vector<std::pair<seg::Multisegment, seg::Multisegment>>
split_ladder(const seg::LineTable& t, const seg::Multisegment& m, int64_t left_size);

// Iterated two-block splits, left to right, one factor per composition part.
std::vector<std::vector<seg::Multisegment>>
split_ladder_multi(const seg::LineTable& t, const seg::Multisegment& m, const Composition& c);

} // namespace unidist::jac
