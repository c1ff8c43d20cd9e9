#include "unidist/jacquet.hpp"

#include <algorithm>
#include <set>

namespace unidist::jac {

namespace {

int64_t comp_total(const Composition& c) {
    int64_t n = 0;
    for (int64_t p : c) {
        require(p > 0, "composition: parts must be positive");
        n += p;
    }
    return n;
}

} // namespace

std::vector<seg::Segment> split_L(const seg::Segment& s, const Composition& c) {
    require(comp_total(c) == s.length(), "split_L: composition must sum to the segment length");
    std::vector<seg::Segment> out;
    HalfInt hi = s.b;
    for (int64_t p : c) {
        HalfInt lo = hi - HalfInt::whole(p - 1);
        out.push_back(seg::Segment{s.line, lo, hi});
        hi = lo - HalfInt::whole(1);
    }
    return out;
}

std::vector<seg::Segment> split_Z(const seg::Segment& s, const Composition& c) {
    require(comp_total(c) == s.length(), "split_Z: composition must sum to the segment length");
    std::vector<seg::Segment> out;
    HalfInt lo = s.a;
    for (int64_t p : c) {
        HalfInt hi = lo + HalfInt::whole(p - 1);
        out.push_back(seg::Segment{s.line, lo, hi});
        lo = hi + HalfInt::whole(1);
    }
    return out;
}

namespace {

void ladder_cuts_rec(const std::vector<seg::Segment>& rows, size_t i, HalfInt prev_cut,
                     bool first, int64_t left_remaining,
                     std::vector<HalfInt>& cuts,
                     std::vector<std::vector<HalfInt>>& out) {
    if (left_remaining < 0) return;
    if (i == rows.size()) {
        if (left_remaining == 0) out.push_back(cuts);
        return;
    }
    // Remaining rows cannot absorb more than their total length.
    int64_t capacity = 0;
    for (size_t j = i; j < rows.size(); ++j) capacity += rows[j].length();
    if (left_remaining > capacity) return;
    HalfInt top = rows[i].b + HalfInt::whole(1);
    if (!first && prev_cut - HalfInt::whole(1) < top) top = prev_cut - HalfInt::whole(1);
    for (HalfInt x = top; x >= rows[i].a; x -= HalfInt::whole(1)) {
        int64_t taken = (rows[i].b - x).as_integer() + 1;
        cuts.push_back(x);
        ladder_cuts_rec(rows, i + 1, x, false, left_remaining - taken, cuts, out);
        cuts.pop_back();
    }
}

} // namespace

std::vector<std::pair<seg::Multisegment, seg::Multisegment>>
split_ladder(const seg::LineTable& t, const seg::Multisegment& m, int64_t left_size) {
    require(seg::is_ladder(t, m) || m.empty(), "split_ladder: input must be a ladder");
    require(left_size >= 0 && left_size <= m.total_length(),
            "split_ladder: left size out of range");
    std::vector<std::pair<seg::Multisegment, seg::Multisegment>> out;
    if (m.empty()) {
        if (left_size == 0) out.emplace_back(seg::Multisegment{}, seg::Multisegment{});
        return out;
    }
    auto rows = seg::std_sort(t, m);
    std::vector<std::vector<HalfInt>> cut_vectors;
    std::vector<HalfInt> cuts;
    ladder_cuts_rec(rows, 0, HalfInt(0), true, left_size, cuts, cut_vectors);
    std::set<std::pair<std::vector<seg::Segment>, std::vector<seg::Segment>>> seen;
    for (const auto& cv : cut_vectors) {
        seg::Multisegment left, right;
        for (size_t i = 0; i < rows.size(); ++i) {
            HalfInt x = cv[i];
            if (x <= rows[i].b) left.segs.push_back(seg::Segment{rows[i].line, x, rows[i].b});
            if (x > rows[i].a) right.segs.push_back(seg::Segment{rows[i].line, rows[i].a, x - HalfInt::whole(1)});
        }
        auto key = std::make_pair(left.sorted().segs, right.sorted().segs);
        if (seen.insert(key).second) out.emplace_back(std::move(left), std::move(right));
    }
    return out;
}

std::vector<std::vector<seg::Multisegment>>
split_ladder_multi(const seg::LineTable& t, const seg::Multisegment& m, const Composition& c) {
    require(comp_total(c) == m.total_length(),
            "split_ladder_multi: composition must sum to the ladder size");
    std::vector<std::pair<std::vector<seg::Multisegment>, seg::Multisegment>> frontier;
    frontier.emplace_back(std::vector<seg::Multisegment>{}, m);
    for (size_t k = 0; k + 1 < c.size(); ++k) {
        std::vector<std::pair<std::vector<seg::Multisegment>, seg::Multisegment>> next;
        for (auto& [prefix, remaining] : frontier) {
            for (auto& [left, right] : split_ladder(t, remaining, c[k])) {
                auto ext = prefix;
                ext.push_back(left);
                next.emplace_back(std::move(ext), right);
            }
        }
        frontier = std::move(next);
    }
    std::vector<std::vector<seg::Multisegment>> out;
    for (auto& [prefix, remaining] : frontier) {
        auto full = prefix;
        full.push_back(remaining);
        out.push_back(std::move(full));
    }
    return out;
}

} // namespace unidist::jac
