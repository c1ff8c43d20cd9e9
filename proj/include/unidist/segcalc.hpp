#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unidist/common.hpp"
#include "unidist/halfint.hpp"
#include "unidist/tri.hpp"

namespace unidist::seg {

// Formal cuspidal line. Even/Odd lines are conjugate-self-dual with the
// respective reducibility point; NonSelfDual lines come in partner pairs.
enum class SdClass { Even, Odd, NonSelfDual };

struct CuspLine {
    std::string id;
    SdClass sd = SdClass::Even;
    int partner = -1;  // index of the conjugate-dual partner line; self for Even/Odd
};

class LineTable {
public:
    int add_self_dual(const std::string& id, SdClass sd);
    // Registers a NonSelfDual pair; returns the index of the first.
    std::pair<int, int> add_pair(const std::string& id, const std::string& partner_id);

    const CuspLine& line(int idx) const;
    int index_of(const std::string& id) const;  // -1 if absent
    int size() const { return static_cast<int>(lines_.size()); }

    bool self_dual(int idx) const { return line(idx).sd != SdClass::NonSelfDual; }
    int dual_line(int idx) const { return line(idx).partner; }
    // Parity eta: +1 for Even, -1 for Odd; throws on NonSelfDual.
    int parity(int idx) const;

private:
    std::vector<CuspLine> lines_;
};

// Zelevinsky segment [a,b] on a line, nonempty: b - a a nonnegative integer.
struct Segment {
    int line = 0;
    HalfInt a, b;

    HalfInt begin() const { return a; }
    HalfInt end() const { return b; }
    int64_t length() const { return (b - a).as_integer() + 1; }

    bool operator==(const Segment&) const = default;
    auto operator<=>(const Segment&) const = default;
};

Segment make_segment(int line, HalfInt a, HalfInt b);

// Multiset of segments; element order carries no meaning.
struct Multisegment {
    std::vector<Segment> segs;

    bool empty() const { return segs.empty(); }
    int64_t total_length() const;
    Multisegment sorted() const;  // canonical order, for multiset equality
    bool equals(const Multisegment& o) const { return sorted().segs == o.sorted().segs; }
};

Segment shift(const Segment& s, HalfInt x);
Multisegment shift(const Multisegment& m, HalfInt x);

// Conjugate dual: [a,b] on L goes to [-b,-a] on the dual line of L.
Segment conj_dual(const LineTable& t, const Segment& s);
Multisegment conj_dual(const LineTable& t, const Multisegment& m);

bool linked(const Segment& s1, const Segment& s2);
bool precedes(const Segment& s1, const Segment& s2);

HalfInt exponent(const Segment& s);
// Average exponent of L(m) (sum of point exponents over support size).
HalfInt exponent(const Multisegment& m);

// Standard-form ordering: line id lexicographic, then beginning descending,
// then end descending.
std::vector<Segment> std_sort(const LineTable& t, const Multisegment& m);

bool is_ladder(const LineTable& t, const Multisegment& m);
bool is_speh(const LineTable& t, const Multisegment& m);

// Zelevinsky-involution partner via the end-chain extraction algorithm;
// processes multi-line input line by line.
Multisegment mw_dual(const LineTable& t, const Multisegment& m);
// Specialized routine for ladders; must agree with mw_dual.
Multisegment mw_dual_ladder(const LineTable& t, const Multisegment& m);

// Sp-distinction of the ladder representation L(m): true iff |m| is even and
// in ladder order odd-indexed segments are the nu-shifts of their successors.
bool sp_dist_ladder(const LineTable& t, const Multisegment& m);

// Rule for GL(F)-distinction of L(s) when the segment is longer than a point:
// Parity applies (-1)^(len-1) * eta = +1; Conservative reports Unknown.
enum class SqintDistRule { Parity, Conservative };

struct SegcalcConfig {
    SqintDistRule sqint_dist_rule = SqintDistRule::Parity;
};

// GL(F)-distinction of the essentially square-integrable L(s).
Tri glF_dist_sqint(const LineTable& t, const Segment& s,
                   const SegcalcConfig& cfg = {});

// GL(F)-distinction of the generic L(m) (segments pairwise not linked),
// by searching involutions w with Delta_{w(i)} = conj_dual(Delta_i) whose
// fixed points are GL(F)-distinguished.
Tri glF_dist_generic(const LineTable& t, const Multisegment& m,
                     const SegcalcConfig& cfg = {});

// Same search, also reporting the witness involution (as match[i] = w(i),
// 0-based over m.segs) when the answer is Yes.
std::pair<Tri, std::optional<std::vector<int>>>
glF_dist_generic_witness(const LineTable& t, const Multisegment& m,
                         const SegcalcConfig& cfg = {});

// Membership of the point nu^x rho in the reducibility set S.
bool in_reducibility_set(const LineTable& t, int line, HalfInt x);
// Whether a segment meets the reducibility set of its line.
bool meets_reducibility_set(const LineTable& t, const Segment& s);

// For a centered conjugate-self-dual segment: whether the parameter of L(s)
// is conjugate symplectic, i.e. (-1)^(len-1) * eta = -1.
bool conj_symplectic_sqint(const LineTable& t, const Segment& s);

std::string segment_str(const LineTable& t, const Segment& s);
std::string multisegment_str(const LineTable& t, const Multisegment& m);

} // namespace unidist::seg
