#include "unidist/verdicts.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace unidist::ver {

const char* outcome_str(Outcome o) {
    switch (o) {
        case Outcome::Distinguished: return "Distinguished";
        case Outcome::NotDistinguished: return "NotDistinguished";
        default: return "Inconclusive";
    }
}

void validate(const seg::LineTable& t, const AdmissibleDatum& d) {
    std::set<int> seen;
    for (const auto& e : d.entries) {
        const auto& line = t.line(e.line);
        require(line.sd != seg::SdClass::NonSelfDual,
                "admissible datum: every line must be even or odd");
        require(seen.insert(e.line).second, "admissible datum: duplicate line '" + line.id + "'");
        size_t k = e.a.size();
        require(k >= 1, "admissible datum: k_rho must be at least 1");
        require(e.eps.size() == k, "admissible datum: eps length must equal k_rho");
        for (size_t i = 0; i < k; ++i) {
            require(e.a[i].twice >= 0, "admissible datum: a-values must be nonnegative");
            if (i + 1 < k)
                require(e.a[i] > e.a[i + 1], "admissible datum: a-values must strictly decrease");
            if (line.sd == seg::SdClass::Odd)
                require(e.a[i].is_integer(), "admissible datum: odd line requires integer a-values");
            else
                require(e.a[i].is_strict_half(),
                        "admissible datum: even line requires strict half-integer a-values");
        }
        if (line.sd == seg::SdClass::Odd)
            require(k % 2 == 0, "admissible datum: odd line requires even k_rho");
        int tv = sign::tau(e.eps);
        require(tv == 0 || tv == 1, "admissible datum: tau(eps) must be 0 or 1");
    }
}

void validate(const seg::LineTable& t, const TemperedDatum& td) {
    validate(t, td.ds);
    for (const auto& s : td.gl_pairs)
        require(seg::exponent(s).twice == 0, "tempered datum: gl segments must be centered");
}

std::vector<int64_t> jordan_of(const seg::LineTable& t, const AdmissibleDatum& d, int line) {
    validate(t, d);
    for (const auto& e : d.entries) {
        if (e.line != line) continue;
        std::vector<int64_t> out;
        for (const auto& a : e.a) out.push_back(a.twice + 1);
        return out;
    }
    throw ValidationError("jordan_of: line not present in the datum");
}

namespace {

// First index t with eps_t = eps_{t+1}; t = 1 when k = 1; nullopt when eps
// alternates throughout with k > 1.
std::optional<int> first_block_length(const sign::SignTuple& eps) {
    if (eps.size() == 1) return 1;
    for (size_t i = 0; i + 1 < eps.size(); ++i)
        if (eps[i] == eps[i + 1]) return static_cast<int>(i + 1);
    return std::nullopt;
}

// Constrained path of an admissible sign tuple to its sink; the one-element
// positive tuple is its own sink.
sign::Pattern default_pattern(const sign::SignTuple& eps, bool variant) {
    int tv = sign::tau(eps);
    if (tv == 1 && eps.size() == 1) return {};
    return tv == 0 ? sign::path_v0(eps, variant) : sign::path_v1(eps, variant);
}

} // namespace

Verdict ds_vanishing(const seg::LineTable& t, const AdmissibleDatum& d) {
    validate(t, d);
    for (const auto& e : d.entries) {
        auto tv = first_block_length(e.eps);
        if (!tv) continue;
        int tt = *tv;
        int k = static_cast<int>(e.a.size());
        Verdict v;
        v.outcome = Outcome::NotDistinguished;
        v.certificate["line"] = t.line(e.line).id;
        v.certificate["t"] = std::to_string(tt);
        if (tt % 2 == 1) {
            v.rule = "discrete-vanishing-odd-block";
            v.certificate["condition"] = "1";
            return v;
        }
        for (int i = 1; 2 * i <= tt; ++i) {
            if (e.a[static_cast<size_t>(2 * i - 2)] > e.a[static_cast<size_t>(2 * i - 1)] + HalfInt::whole(1)) {
                v.rule = "discrete-vanishing-jordan-gap";
                v.certificate["condition"] = "2";
                v.certificate["witness_i"] = std::to_string(i);
                return v;
            }
        }
        if (tt + 2 <= k && e.eps[static_cast<size_t>(tt + 1)] == e.eps[static_cast<size_t>(tt)]) {
            v.rule = "discrete-vanishing-equal-signs";
            v.certificate["condition"] = "3";
            return v;
        }
    }
    Verdict v;
    v.outcome = Outcome::Inconclusive;
    v.rule = "discrete-vanishing-none";
    v.notes.push_back("no line triggers the three vanishing conditions");
    return v;
}

std::vector<BuiltLine> build_I_pi_lines(const seg::LineTable& t, const AdmissibleDatum& d,
                                        const std::vector<sign::Pattern>& patterns) {
    validate(t, d);
    require(patterns.size() == d.entries.size(),
            "build_I_pi: one pattern per datum line required");
    std::vector<BuiltLine> out;
    for (size_t li = 0; li < d.entries.size(); ++li) {
        const auto& e = d.entries[li];
        int target = sign::tau(e.eps);
        auto [final_tuple, hist] = sign::walk(e.eps, patterns[li]);
        if (target == 0)
            require(final_tuple.empty(), "build_I_pi: pattern must reach the empty tuple");
        else
            require(final_tuple.size() == 1 && final_tuple.front() > 0,
                    "build_I_pi: pattern must reach the one-element positive tuple");
        BuiltLine bl;
        bl.line = e.line;
        bl.pattern = patterns[li];
        std::vector<bool> used(e.a.size(), false);
        for (auto [x, y] : hist) {
            used[static_cast<size_t>(x - 1)] = used[static_cast<size_t>(y - 1)] = true;
            bl.pair_segs.push_back(seg::make_segment(e.line, -e.a[static_cast<size_t>(x - 1)],
                                                     e.a[static_cast<size_t>(y - 1)]));
        }
        if (target == 1) {
            size_t z = 0;
            while (z < used.size() && used[z]) ++z;
            if (z == used.size()) throw InternalError("build_I_pi: no leftover index");
            bl.leftover = seg::make_segment(e.line, -e.a[z], HalfInt::half(-1));
        }
        out.push_back(std::move(bl));
    }
    return out;
}

std::vector<seg::Segment> build_I_pi(const seg::LineTable& t, const AdmissibleDatum& d,
                                     const std::vector<sign::Pattern>& patterns) {
    std::vector<seg::Segment> out;
    for (const auto& bl : build_I_pi_lines(t, d, patterns)) {
        out.insert(out.end(), bl.pair_segs.begin(), bl.pair_segs.end());
        if (bl.leftover) out.push_back(*bl.leftover);
    }
    return out;
}

ReplayReport cross_validate_ds(const seg::LineTable& t, const AdmissibleDatum& d, int64_t cap,
                               const seg::SegcalcConfig& cfg) {
    ReplayReport rep;
    rep.vanishing = ds_vanishing(t, d);
    if (rep.vanishing.outcome != Outcome::NotDistinguished) {
        rep.applicable = false;
        return rep;
    }
    rep.applicable = true;
    const std::string trigger_id = rep.vanishing.certificate.at("line");
    bool variant = rep.vanishing.certificate.at("condition") == "3";

    // Reorder the entries so the triggering line comes last, then pick the
    // constrained path there and arbitrary (default) paths elsewhere.
    AdmissibleDatum ordered;
    int trigger_pos = -1;
    for (const auto& e : d.entries)
        if (t.line(e.line).id != trigger_id) ordered.entries.push_back(e);
    for (const auto& e : d.entries)
        if (t.line(e.line).id == trigger_id) {
            trigger_pos = static_cast<int>(ordered.entries.size());
            ordered.entries.push_back(e);
        }
    std::vector<sign::Pattern> patterns;
    for (size_t i = 0; i < ordered.entries.size(); ++i) {
        const auto& e = ordered.entries[i];
        bool is_trigger = static_cast<int>(i) == trigger_pos;
        patterns.push_back(default_pattern(e.eps, is_trigger && variant));
    }
    auto lines = build_I_pi_lines(t, ordered, patterns);

    int t1 = std::stoi(rep.vanishing.certificate.at("t"));
    int special = t1 + (variant ? 1 : 0);
    for (size_t i = 0; i < lines.size(); ++i) {
        const auto& bl = lines[i];
        if (static_cast<int>(i) != trigger_pos) {
            rep.blocks.insert(rep.blocks.end(), bl.pair_segs.begin(), bl.pair_segs.end());
            if (bl.leftover) rep.blocks.push_back(*bl.leftover);
            continue;
        }
        if (!bl.leftover) {
            rep.blocks.insert(rep.blocks.end(), bl.pair_segs.begin(), bl.pair_segs.end());
        } else if (bl.pattern.empty() || bl.pattern.back() == 2) {
            // The leftover segment is itself the innermost special block.
            rep.blocks.insert(rep.blocks.end(), bl.pair_segs.begin(), bl.pair_segs.end());
            rep.blocks.push_back(*bl.leftover);
        } else {
            // Path ends at 1: the leftover commutes past the special blocks.
            if (bl.pair_segs.size() < static_cast<size_t>(special))
                throw InternalError("cross_validate_ds: special block count exceeds pairs");
            size_t cut = bl.pair_segs.size() - static_cast<size_t>(special);
            rep.blocks.insert(rep.blocks.end(), bl.pair_segs.begin(),
                              bl.pair_segs.begin() + static_cast<long>(cut));
            rep.blocks.push_back(*bl.leftover);
            rep.blocks.insert(rep.blocks.end(), bl.pair_segs.begin() + static_cast<long>(cut),
                              bl.pair_segs.end());
        }
    }
    std::vector<orb::BlockSpec> blocks;
    for (const auto& s : rep.blocks) blocks.push_back(orb::BlockSpec::L(s));
    rep.search = orb::exists_relevant(t, blocks, cap, cfg);
    rep.none_certified = rep.search.kind == orb::SearchOutcome::NoneCertified;
    return rep;
}

Verdict tempered_vanishing(const seg::LineTable& t, const TemperedDatum& td) {
    validate(t, td);
    // Group the GL entries by line pair {line, dual line} and entry parity,
    // keeping the maximal entry of each group.
    std::map<std::pair<int, int>, int64_t> groups;
    for (const auto& s : td.gl_pairs) {
        int rep_line = std::min(s.line, t.dual_line(s.line));
        int64_t a = s.length();
        auto key = std::make_pair(rep_line, static_cast<int>(a % 2));
        auto it = groups.find(key);
        if (it == groups.end()) groups[key] = a;
        else it->second = std::max(it->second, a);
    }
    for (const auto& [key, amax] : groups) {
        auto [line, par] = key;
        (void)par;
        Verdict v;
        v.outcome = Outcome::NotDistinguished;
        v.certificate["line"] = t.line(line).id;
        v.certificate["a"] = std::to_string(amax);
        if (!t.self_dual(line)) {
            v.rule = "tempered-nonselfdual";
            v.certificate["condition"] = "1";
            return v;
        }
        std::vector<int64_t> jord;
        for (const auto& e : td.ds.entries)
            if (e.line == line)
                for (const auto& a : e.a) jord.push_back(a.twice + 1);
        bool parity_mismatch = !jord.empty();
        for (int64_t b : jord)
            if ((b - amax) % 2 == 0) parity_mismatch = false;
        if (parity_mismatch) {
            v.rule = "tempered-parity-mismatch";
            v.certificate["condition"] = "2";
            return v;
        }
        bool dominated = true;
        for (int64_t b : jord)
            if (b > amax) dominated = false;
        if (dominated) {
            v.rule = "tempered-jordan-dominated";
            v.certificate["condition"] = "3";
            if (jord.empty()) v.certificate["vacuous"] = "true";
            return v;
        }
    }
    Verdict v;
    v.outcome = Outcome::Inconclusive;
    v.rule = "tempered-vanishing-none";
    return v;
}

LadderBcResult ladder_bc(const seg::LineTable& t, const seg::Multisegment& m) {
    require(seg::is_ladder(t, m), "ladder_bc: input must be a ladder");
    auto v = seg::std_sort(t, m);
    int tc = static_cast<int>(v.size());
    for (int i = 0; i < tc; ++i)
        require(v[static_cast<size_t>(tc - 1 - i)] == seg::conj_dual(t, v[static_cast<size_t>(i)]),
                "ladder_bc: input must be conjugate self-dual");
    LadderBcResult res;
    seg::Multisegment ms{v};
    if (tc % 2 == 0) {
        res.in_image = Tri::Yes;
    } else {
        const auto& mid = v[static_cast<size_t>((tc - 1) / 2)];
        res.in_image = tri_of(seg::conj_symplectic_sqint(t, mid));
    }
    if (res.in_image != Tri::Yes) {
        res.base = LadderBcResult::None;
        res.verdict.outcome = Outcome::Inconclusive;
        res.verdict.rule = "bc-not-in-image";
        res.verdict.notes.push_back("the ladder is not a stable transfer");
        return res;
    }
    for (int i = 0; i < tc / 2; ++i) res.fiber_gl.push_back(v[static_cast<size_t>(i)]);
    if (tc % 2 == 0) {
        res.base = LadderBcResult::Trivial;
        int s = tc / 2;
        if (!seg::sp_dist_ladder(t, ms)) {
            res.verdict.outcome = Outcome::NotDistinguished;
            res.verdict.rule = "bc-even-pairing";
            res.verdict.notes.push_back("transfer preserves distinction for even ladders");
            return res;
        }
        const auto& edge = v[static_cast<size_t>(s - 1)];
        bool meets = seg::meets_reducibility_set(t, edge);
        res.verdict.certificate["edge_segment"] = seg::segment_str(t, edge);
        if (s % 2 == 0) {
            if (!meets) {
                res.verdict.outcome = Outcome::Distinguished;
                res.verdict.rule = "bc-even-half-distinguished";
            } else {
                res.verdict.outcome = Outcome::Inconclusive;
                res.verdict.rule = "bc-even-reducible";
                res.verdict.notes.push_back(
                    "the half-fiber standard module is distinguished but reducible");
            }
        } else {
            if (!meets) {
                res.verdict.outcome = Outcome::NotDistinguished;
                res.verdict.rule = "bc-odd-half-count";
            } else {
                res.verdict.outcome = Outcome::Inconclusive;
                res.verdict.rule = "bc-odd-half-reducible";
            }
        }
        return res;
    }
    const auto& mid = v[static_cast<size_t>((tc - 1) / 2)];
    if (mid.length() % 2 != 0) {
        res.base = LadderBcResult::NontrivialCuspSupport;
        res.verdict.outcome = Outcome::NotDistinguished;
        res.verdict.rule = "bc-cuspidal-base";
        res.verdict.notes.push_back("the fiber has nontrivial partial cuspidal support");
        return res;
    }
    res.base = LadderBcResult::TauPlus;
    res.base_line = mid.line;
    res.base_a = mid.length();
    int k = (tc - 1) / 2;
    if (k == 0) {
        res.verdict.outcome = Outcome::NotDistinguished;
        res.verdict.rule = "bc-lone-half-segment";
        return res;
    }
    const auto& dk = v[static_cast<size_t>(k - 1)];
    res.verdict.certificate["b_k"] = dk.a.str();
    if (dk.a != HalfInt::half(3)) {
        res.verdict.outcome = Outcome::NotDistinguished;
        res.verdict.rule = "bc-edge-gap";
    } else {
        res.verdict.outcome = Outcome::Inconclusive;
        res.verdict.rule = "bc-edge-adjacent";
    }
    return res;
}

Verdict speh_verdict(const seg::LineTable& t, const seg::Segment& delta, int64_t m) {
    require(m >= 1, "speh: multiplicity must be positive");
    require(seg::conj_dual(t, delta) == delta,
            "speh: the segment must be centered conjugate self-dual");
    if (m % 2 != 0)
        require(seg::conj_symplectic_sqint(t, delta),
                "speh: odd multiplicity requires a conjugate-symplectic segment");
    seg::Multisegment ladder;
    for (int64_t i = 0; i < m; ++i)
        ladder.segs.push_back(seg::shift(delta, HalfInt(m - 1 - 2 * i)));
    LadderBcResult bc = ladder_bc(t, ladder);
    Verdict v = bc.verdict;
    v.certificate["multiplicity"] = std::to_string(m);
    if (m % 2 != 0) {
        v.rule = "speh-odd-multiplicity";
        if (v.outcome != Outcome::NotDistinguished)
            throw InternalError("speh: odd multiplicity must be not distinguished");
    } else if (v.outcome == Outcome::Distinguished) {
        v.rule = "speh-multiplicity-div4";
    } else if (v.outcome == Outcome::NotDistinguished) {
        v.rule = "speh-multiplicity-2-mod-4";
    }
    return v;
}

Verdict standard_module_verdict(const seg::LineTable& t, const seg::Multisegment& m,
                                const seg::SegcalcConfig& cfg) {
    for (const auto& s : m.segs)
        require(seg::exponent(s) > HalfInt(0),
                "standard module: all exponents must be positive");
    for (size_t i = 0; i < m.segs.size(); ++i)
        for (size_t j = i + 1; j < m.segs.size(); ++j)
            require(!seg::linked(m.segs[i], m.segs[j]),
                    "standard module: segments must be pairwise not linked");
    seg::Multisegment half = seg::shift(m, HalfInt::half(-1));
    auto [res, witness] = seg::glF_dist_generic_witness(t, half, cfg);
    Verdict v;
    v.rule = "standard-module-glf-half";
    switch (res) {
        case Tri::Yes: v.outcome = Outcome::Distinguished; break;
        case Tri::No: v.outcome = Outcome::NotDistinguished; break;
        default: v.outcome = Outcome::Inconclusive; break;
    }
    if (witness) {
        std::ostringstream os;
        for (size_t i = 0; i < witness->size(); ++i)
            os << (i ? " " : "") << (*witness)[i] + 1;
        v.certificate["witness_involution"] = os.str();
    }
    if (v.outcome == Outcome::Distinguished) {
        // A positive verdict forces every exponent to equal 1/2, making the
        // half-twisted GL-part tempered.
        for (const auto& s : m.segs)
            if (seg::exponent(s) != HalfInt::half(1))
                throw InternalError("standard module: distinguished with exponent != 1/2");
        v.notes.push_back("the half-twisted GL-part is tempered");
    }
    return v;
}

Verdict hered_sufficient(const seg::LineTable& t, const seg::Multisegment& part1,
                         const seg::Multisegment& part2, const seg::SegcalcConfig& cfg) {
    Tri left = orb::glf_half_dist(t, part1, cfg);
    require(left == Tri::Yes, "hered: part1 must be half-twist GL(F)-distinguished");
    Tri right;
    if (part2.empty()) right = Tri::Yes;
    else if (seg::is_ladder(t, part2)) right = tri_of(seg::sp_dist_ladder(t, part2));
    else right = Tri::Unknown;
    require(right == Tri::Yes, "hered: part2 must be Sp-distinguished");
    Verdict v;
    v.outcome = Outcome::Distinguished;
    v.rule = "induced-from-distinguished";
    return v;
}

Verdict distinct_lines_verdict(const seg::LineTable& t, const seg::Multisegment& m,
                               const seg::SegcalcConfig& cfg) {
    std::set<int> lines;
    for (const auto& s : m.segs) {
        require(lines.insert(s.line).second, "distinct lines: lines must be pairwise distinct");
        require(!lines.count(t.dual_line(s.line)) || t.dual_line(s.line) == s.line,
                "distinct lines: no line may be conjugate-dual to another");
    }
    Tri acc = Tri::Yes;
    for (const auto& s : m.segs)
        acc = tri_and(acc, seg::glF_dist_sqint(t, seg::shift(s, HalfInt::half(-1)), cfg));
    Verdict v;
    v.rule = "distinct-lines-glf-half";
    switch (acc) {
        case Tri::Yes: v.outcome = Outcome::Distinguished; break;
        case Tri::No: v.outcome = Outcome::NotDistinguished; break;
        default: v.outcome = Outcome::Inconclusive; break;
    }
    return v;
}

} // namespace unidist::ver
