#include "unidist/segcalc.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace unidist::seg {

int LineTable::add_self_dual(const std::string& id, SdClass sd) {
    require(sd != SdClass::NonSelfDual, "LineTable: use add_pair for NonSelfDual lines");
    require(index_of(id) < 0, "LineTable: duplicate line id '" + id + "'");
    int idx = size();
    lines_.push_back({id, sd, idx});
    return idx;
}

std::pair<int, int> LineTable::add_pair(const std::string& id, const std::string& partner_id) {
    require(id != partner_id, "LineTable: a NonSelfDual line cannot partner itself");
    require(index_of(id) < 0, "LineTable: duplicate line id '" + id + "'");
    require(index_of(partner_id) < 0, "LineTable: duplicate line id '" + partner_id + "'");
    int i = size();
    lines_.push_back({id, SdClass::NonSelfDual, i + 1});
    lines_.push_back({partner_id, SdClass::NonSelfDual, i});
    return {i, i + 1};
}

const CuspLine& LineTable::line(int idx) const {
    if (idx < 0 || idx >= size()) throw ValidationError("LineTable: line index out of range");
    return lines_[static_cast<size_t>(idx)];
}

int LineTable::index_of(const std::string& id) const {
    for (int i = 0; i < size(); ++i)
        if (lines_[static_cast<size_t>(i)].id == id) return i;
    return -1;
}

int LineTable::parity(int idx) const {
    const CuspLine& l = line(idx);
    require(l.sd != SdClass::NonSelfDual, "parity: line '" + l.id + "' is not self-dual");
    return l.sd == SdClass::Even ? 1 : -1;
}

Segment make_segment(int line, HalfInt a, HalfInt b) {
    HalfInt d = b - a;
    require(d.is_integer() && d.as_integer() >= 0,
            "segment: requires b - a a nonnegative integer");
    return Segment{line, a, b};
}

int64_t Multisegment::total_length() const {
    int64_t n = 0;
    for (const auto& s : segs) n += s.length();
    return n;
}

Multisegment Multisegment::sorted() const {
    Multisegment m = *this;
    std::sort(m.segs.begin(), m.segs.end());
    return m;
}

Segment shift(const Segment& s, HalfInt x) { return Segment{s.line, s.a + x, s.b + x}; }

Multisegment shift(const Multisegment& m, HalfInt x) {
    Multisegment out = m;
    for (auto& s : out.segs) s = shift(s, x);
    return out;
}

Segment conj_dual(const LineTable& t, const Segment& s) {
    return Segment{t.dual_line(s.line), -s.b, -s.a};
}

Multisegment conj_dual(const LineTable& t, const Multisegment& m) {
    Multisegment out = m;
    for (auto& s : out.segs) s = conj_dual(t, s);
    return out;
}

bool linked(const Segment& s1, const Segment& s2) {
    if (s1.line != s2.line) return false;
    // Union is a segment iff the two overlap or abut.
    HalfInt lo = std::min(s1.a, s2.a), hi = std::max(s1.b, s2.b);
    bool union_is_segment = (std::min(s1.b, s2.b) + HalfInt::whole(1)) >= std::max(s1.a, s2.a);
    if (!union_is_segment) return false;
    Segment u{s1.line, lo, hi};
    return !(u == s1) && !(u == s2);
}

bool precedes(const Segment& s1, const Segment& s2) {
    return linked(s1, s2) && s2.a > s1.a;
}

HalfInt exponent(const Segment& s) { return HalfInt::midpoint(s.a, s.b); }

HalfInt exponent(const Multisegment& m) {
    int64_t acc2 = 0, n = 0;
    for (const auto& s : m.segs) {
        acc2 += exponent(s).twice * s.length();
        n += s.length();
    }
    if (n == 0) return HalfInt(0);
    require(acc2 % n == 0, "exponent: central exponent not in (1/2)Z");
    return HalfInt(acc2 / n);
}

std::vector<Segment> std_sort(const LineTable& t, const Multisegment& m) {
    std::vector<Segment> v = m.segs;
    std::sort(v.begin(), v.end(), [&](const Segment& x, const Segment& y) {
        const std::string& ix = t.line(x.line).id;
        const std::string& iy = t.line(y.line).id;
        if (ix != iy) return ix < iy;
        if (x.a != y.a) return x.a > y.a;
        return x.b > y.b;
    });
    return v;
}

bool is_ladder(const LineTable& t, const Multisegment& m) {
    if (m.segs.empty()) return false;
    auto v = std_sort(t, m);
    for (size_t i = 0; i + 1 < v.size(); ++i) {
        if (v[i].line != v[i + 1].line) return false;
        if (!(v[i].a > v[i + 1].a && v[i].b > v[i + 1].b)) return false;
    }
    return true;
}

bool is_speh(const LineTable& t, const Multisegment& m) {
    if (!is_ladder(t, m)) return false;
    auto v = std_sort(t, m);
    for (size_t i = 0; i + 1 < v.size(); ++i) {
        if (v[i].a - v[i + 1].a != HalfInt::whole(1)) return false;
        if (v[i].b - v[i + 1].b != HalfInt::whole(1)) return false;
    }
    return true;
}

namespace {

// One line's worth of the end-chain extraction: repeatedly pull a chain of
// segments with ends e, e-1, ..., each preceding the previous pick (strictly
// earlier beginning), preferring the shortest candidate; emit the dual
// segment spanning the chain's end values, truncate the chain members at
// their ends and repeat.
std::vector<Segment> mw_dual_line(std::vector<Segment> v) {
    std::vector<Segment> out;
    while (!v.empty()) {
        HalfInt e = v.front().b;
        for (const auto& s : v) e = std::max(e, s.b);
        HalfInt x = e;
        std::vector<size_t> chain;
        while (true) {
            size_t pick = v.size();
            for (size_t i = 0; i < v.size(); ++i) {
                if (std::find(chain.begin(), chain.end(), i) != chain.end()) continue;
                if (v[i].b != x) continue;
                if (!chain.empty() && !(v[i].a < v[chain.back()].a)) continue;
                if (pick == v.size() || v[i].a > v[pick].a) pick = i;
            }
            if (pick == v.size()) break;
            chain.push_back(pick);
            x -= HalfInt::whole(1);
        }
        out.push_back(Segment{v.front().line, x + HalfInt::whole(1), e});
        std::vector<Segment> next;
        for (size_t i = 0; i < v.size(); ++i) {
            bool in_chain = std::find(chain.begin(), chain.end(), i) != chain.end();
            Segment s = v[i];
            if (in_chain) {
                if (s.a == s.b) continue;  // truncates to empty
                s.b -= HalfInt::whole(1);
            }
            next.push_back(s);
        }
        v = std::move(next);
    }
    return out;
}

} // namespace

Multisegment mw_dual(const LineTable& t, const Multisegment& m) {
    (void)t;
    // Split by line, then by parity grid within the line; the ends-chain walk
    // never crosses grids since chain ends step by whole ones.
    std::map<std::pair<int, int>, std::vector<Segment>> groups;
    for (const auto& s : m.segs)
        groups[{s.line, static_cast<int>(((s.a.twice % 2) + 2) % 2)}].push_back(s);
    Multisegment out;
    for (auto& [key, v] : groups) {
        auto dual = mw_dual_line(std::move(v));
        out.segs.insert(out.segs.end(), dual.begin(), dual.end());
    }
    return out.sorted();
}

Multisegment mw_dual_ladder(const LineTable& t, const Multisegment& m) {
    require(is_ladder(t, m), "mw_dual_ladder: input must be a ladder");
    auto rows = std_sort(t, m);
    // Current ends stay strictly decreasing, so each sweep takes the maximal
    // prefix of consecutive ends; no searching or tie-breaking is needed.
    Multisegment out;
    while (!rows.empty()) {
        size_t r = 1;
        while (r < rows.size() &&
               rows[r].b == rows[r - 1].b - HalfInt::whole(1))
            ++r;
        out.segs.push_back(Segment{rows[0].line, rows[r - 1].b, rows[0].b});
        std::vector<Segment> next;
        for (size_t i = 0; i < rows.size(); ++i) {
            Segment s = rows[i];
            if (i < r) {
                if (s.a == s.b) continue;
                s.b -= HalfInt::whole(1);
            }
            next.push_back(s);
        }
        rows = std::move(next);
    }
    return out.sorted();
}

bool sp_dist_ladder(const LineTable& t, const Multisegment& m) {
    require(is_ladder(t, m), "sp_dist_ladder: input must be a ladder");
    auto v = std_sort(t, m);
    if (v.size() % 2 != 0) return false;
    for (size_t i = 0; i + 1 < v.size(); i += 2)
        if (!(shift(v[i + 1], HalfInt::whole(1)) == v[i])) return false;
    return true;
}

Tri glF_dist_sqint(const LineTable& t, const Segment& s, const SegcalcConfig& cfg) {
    if (exponent(s).twice != 0) return Tri::No;
    if (!t.self_dual(s.line)) return Tri::No;
    if (!(conj_dual(t, s) == s)) return Tri::No;
    if (s.length() == 1) return t.line(s.line).sd == SdClass::Even ? Tri::Yes : Tri::No;
    if (cfg.sqint_dist_rule == SqintDistRule::Conservative) return Tri::Unknown;
    int parity = (s.length() % 2 != 0 ? 1 : -1) * t.parity(s.line);
    return parity > 0 ? Tri::Yes : Tri::No;
}

namespace {

// Depth-first search over pairings; path_acc carries the Kleene AND of the
// fixed-point verdicts committed so far. Pair constraints are exact equality
// checks, so only fixed points can contribute Unknown.
Tri generic_involution_search(const LineTable& t, const std::vector<Segment>& v,
                              std::vector<int>& match, size_t i,
                              const SegcalcConfig& cfg, Tri path_acc,
                              std::optional<std::vector<int>>& witness) {
    if (i == v.size()) {
        if (path_acc == Tri::Yes && !witness) witness = match;
        return path_acc;
    }
    if (match[i] >= 0)
        return generic_involution_search(t, v, match, i + 1, cfg, path_acc, witness);
    Tri acc = Tri::No;
    Segment dual = conj_dual(t, v[i]);
    if (dual == v[i]) {
        Tri fixed = glF_dist_sqint(t, v[i], cfg);
        if (fixed != Tri::No) {
            match[i] = static_cast<int>(i);
            acc = tri_or(acc, generic_involution_search(t, v, match, i + 1, cfg,
                                                        tri_and(path_acc, fixed), witness));
            match[i] = -1;
            if (acc == Tri::Yes) return acc;
        }
    }
    for (size_t j = i + 1; j < v.size(); ++j) {
        if (match[j] >= 0 || !(v[j] == dual)) continue;
        match[i] = static_cast<int>(j);
        match[j] = static_cast<int>(i);
        acc = tri_or(acc, generic_involution_search(t, v, match, i + 1, cfg, path_acc, witness));
        match[i] = match[j] = -1;
        if (acc == Tri::Yes) return acc;
    }
    return acc;
}

} // namespace

Tri glF_dist_generic(const LineTable& t, const Multisegment& m, const SegcalcConfig& cfg) {
    return glF_dist_generic_witness(t, m, cfg).first;
}

std::pair<Tri, std::optional<std::vector<int>>>
glF_dist_generic_witness(const LineTable& t, const Multisegment& m, const SegcalcConfig& cfg) {
    for (size_t i = 0; i < m.segs.size(); ++i)
        for (size_t j = i + 1; j < m.segs.size(); ++j)
            require(!linked(m.segs[i], m.segs[j]),
                    "glF_dist_generic: segments must be pairwise not linked");
    std::vector<int> match(m.segs.size(), -1);
    std::optional<std::vector<int>> witness;
    Tri res = generic_involution_search(t, m.segs, match, 0, cfg, Tri::Yes, witness);
    if (res != Tri::Yes) witness.reset();
    return {res, witness};
}

bool in_reducibility_set(const LineTable& t, int line, HalfInt x) {
    switch (t.line(line).sd) {
        case SdClass::Even: return x == HalfInt::half(1) || x == HalfInt::half(-1);
        case SdClass::Odd: return x.twice == 0;
        default: return false;
    }
}

bool meets_reducibility_set(const LineTable& t, const Segment& s) {
    // Membership means a grid point of the segment, not interval containment.
    auto contains = [&](HalfInt x) {
        return s.a <= x && x <= s.b && (x - s.a).is_integer();
    };
    switch (t.line(s.line).sd) {
        case SdClass::Even: return contains(HalfInt::half(1)) || contains(HalfInt::half(-1));
        case SdClass::Odd: return contains(HalfInt(0));
        default: return false;
    }
}

bool conj_symplectic_sqint(const LineTable& t, const Segment& s) {
    require(conj_dual(t, s) == s && exponent(s).twice == 0,
            "conj_symplectic_sqint: requires a centered conjugate-self-dual segment");
    int parity = (s.length() % 2 != 0 ? 1 : -1) * t.parity(s.line);
    return parity < 0;
}

std::string segment_str(const LineTable& t, const Segment& s) {
    std::ostringstream os;
    os << "[" << s.a.str() << "," << s.b.str() << "]@" << t.line(s.line).id;
    return os.str();
}

std::string multisegment_str(const LineTable& t, const Multisegment& m) {
    std::ostringstream os;
    os << "{";
    auto v = std_sort(t, m);
    for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << segment_str(t, v[i]);
    os << "}";
    return os.str();
}

} // namespace unidist::seg
