#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "unidist/common.hpp"
#include "unidist/orbits.hpp"
#include "unidist/segcalc.hpp"
#include "unidist/signgraph.hpp"

namespace unidist::ver {

enum class Outcome { Distinguished, NotDistinguished, Inconclusive };

struct Verdict {
    Outcome outcome = Outcome::Inconclusive;
    std::string rule;  // decision rule applied, for replay
    std::map<std::string, std::string> certificate;
    std::vector<std::string> notes;
};

const char* outcome_str(Outcome o);

// One line's worth of discrete-series data: strictly decreasing nonnegative
// exponents and the sign tuple, with the integrality and parity constraints
// of the classification.
struct DatumEntry {
    int line = 0;
    std::vector<HalfInt> a;  // a_1 > ... > a_k >= 0
    sign::SignTuple eps;
};

struct AdmissibleDatum {
    std::vector<DatumEntry> entries;
};

// Throws ValidationError naming the violated clause.
void validate(const seg::LineTable& t, const AdmissibleDatum& d);

struct TemperedDatum {
    std::vector<seg::Segment> gl_pairs;  // centered segments delta(rho, a)
    AdmissibleDatum ds;
};

void validate(const seg::LineTable& t, const TemperedDatum& td);

// Jordan values 2 a_i + 1 on a line, descending.
std::vector<int64_t> jordan_of(const seg::LineTable& t, const AdmissibleDatum& d, int line);

// Discrete-series non-distinction test: per line computes the first index t
// with eps_t = eps_{t+1} (t = 1 when k = 1; skipped when eps alternates) and
// fires on t odd, on a Jordan gap a_{2i-1} > a_{2i} + 1 for some i <= t/2, or
// on eps_{t+2} = eps_{t+1}.
Verdict ds_vanishing(const seg::LineTable& t, const AdmissibleDatum& d);

struct BuiltLine {
    int line = 0;
    std::vector<seg::Segment> pair_segs;        // one per history pair, in order
    std::optional<seg::Segment> leftover;       // the odd-case tail segment
    sign::Pattern pattern;
};

// Realization I(a, eps, pattern) per line: segments [-a_x, a_y] for each
// history pair, plus [-a_z, -1/2] for the leftover index when tau(eps) = 1.
std::vector<BuiltLine> build_I_pi_lines(const seg::LineTable& t, const AdmissibleDatum& d,
                                        const std::vector<sign::Pattern>& patterns);
std::vector<seg::Segment> build_I_pi(const seg::LineTable& t, const AdmissibleDatum& d,
                                     const std::vector<sign::Pattern>& patterns);

struct ReplayReport {
    bool applicable = false;
    Verdict vanishing;
    std::vector<seg::Segment> blocks;
    orb::SearchOutcome search;
    bool none_certified = false;
};

// Mechanical replay of a NotDistinguished verdict: rebuilds the induced
// realization with the constrained path of the triggering line and checks
// that the orbit search certifies no relevant orbit.
ReplayReport cross_validate_ds(const seg::LineTable& t, const AdmissibleDatum& d,
                               int64_t cap = orb::kDefaultSupportCap,
                               const seg::SegcalcConfig& cfg = {});

// Tempered non-distinction: a GL-pair on a non-self-dual line, a parity
// mismatch against the line's Jordan values, or domination of them all.
Verdict tempered_vanishing(const seg::LineTable& t, const TemperedDatum& td);

struct LadderBcResult {
    Tri in_image = Tri::Unknown;
    std::vector<seg::Segment> fiber_gl;
    enum Base { None, Trivial, TauPlus, NontrivialCuspSupport } base = None;
    int base_line = -1;
    int64_t base_a = 0;  // Jordan size of the tau+ base when base == TauPlus
    Verdict verdict;
};

// Stable-base-change analysis of a conjugate-self-dual ladder L(m): transfer
// membership, the fiber's Langlands data, and the distinction verdict for the
// fiber member.
LadderBcResult ladder_bc(const seg::LineTable& t, const seg::Multisegment& m);

// Speh verdict: builds the Speh ladder on delta and delegates to ladder_bc.
Verdict speh_verdict(const seg::LineTable& t, const seg::Segment& delta, int64_t m);

// Standard module with irreducible generic GL-part: distinguished iff the
// half-twisted GL-part is GL(F)-distinguished.
Verdict standard_module_verdict(const seg::LineTable& t, const seg::Multisegment& m,
                                const seg::SegcalcConfig& cfg = {});

// Sufficient-condition combinator: GL(F)-half-distinguished times
// Sp-distinguished induces distinguished.
Verdict hered_sufficient(const seg::LineTable& t, const seg::Multisegment& part1,
                         const seg::Multisegment& part2, const seg::SegcalcConfig& cfg = {});

// Distinct-lines criterion: all lines pairwise distinct and non-dual; each
// segment half-twist GL(F)-distinguished.
Verdict distinct_lines_verdict(const seg::LineTable& t, const seg::Multisegment& m,
                               const seg::SegcalcConfig& cfg = {});

} // namespace unidist::ver
