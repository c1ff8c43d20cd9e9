#include "unidist/orbits.hpp"

#include <algorithm>
#include <map>

namespace unidist::orb {

void validate_blocks(const seg::LineTable& t, const std::vector<BlockSpec>& blocks) {
    for (const auto& b : blocks) {
        switch (b.kind) {
            case BlockKind::Ltype:
            case BlockKind::Ztype:
                require(b.payload.segs.size() == 1, "block: L and Z blocks carry one segment");
                break;
            case BlockKind::Ladder:
                require(seg::is_ladder(t, b.payload), "block: ladder payload must be a ladder");
                break;
        }
    }
}

std::vector<std::pair<int, int>> OrbitShape::flat_index() const {
    std::vector<std::pair<int, int>> out;
    for (size_t i = 0; i < splits.size(); ++i)
        for (size_t j = 0; j < splits[i].size(); ++j)
            out.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return out;
}

std::vector<bool> OrbitShape::membership() const {
    std::vector<bool> out;
    for (size_t i = 0; i < splits.size(); ++i)
        for (size_t j = 0; j < splits[i].size(); ++j)
            out.push_back(static_cast<int>(j) + 1 > s_cut[i]);
    return out;
}

std::vector<weyl::SignedPermutation> admissible_involutions(const std::vector<int64_t>& sizes) {
    int k = static_cast<int>(sizes.size());
    require(k <= 8, "admissible_involutions: at most 8 blocks");
    std::vector<weyl::SignedPermutation> out;
    for (auto& w : weyl::all_involutions(k)) {
        weyl::CSets cs = weyl::c_sets(w);
        bool ok = true;
        for (int i = 0; i < k; ++i)
            if ((cs.c_plus & (1u << i)) && sizes[static_cast<size_t>(i)] % 2 != 0) ok = false;
        if (ok) out.push_back(w);
    }
    return out;
}

static void require_admissible(const weyl::SignedPermutation& w, const std::vector<int64_t>& sizes) {
    require(weyl::is_involution(w), "stabilizer: w must be an involution");
    require(w.n == static_cast<int>(sizes.size()), "stabilizer: rank mismatch");
    weyl::CSets cs = weyl::c_sets(w);
    for (int i = 0; i < w.n; ++i)
        require(!(cs.c_plus & (1u << i)) || sizes[static_cast<size_t>(i)] % 2 == 0,
                "stabilizer: signed fixed blocks must have even size");
}

std::vector<StabFactor> stabilizer_descriptor(const weyl::SignedPermutation& w,
                                              const std::vector<int64_t>& sizes) {
    require_admissible(w, sizes);
    weyl::CSets cs = weyl::c_sets(w);
    std::vector<StabFactor> out;
    for (int i = 0; i < w.n; ++i) {
        uint32_t bit = 1u << i;
        int64_t n = sizes[static_cast<size_t>(i)];
        if (cs.c_minus & bit) out.push_back({StabFactor::GL_F, n, i + 1, i + 1});
        else if (cs.c_less & bit) out.push_back({StabFactor::GL_E, n, i + 1, w.tau[static_cast<size_t>(i)] + 1});
        else if (cs.c_plus & bit) out.push_back({StabFactor::Sp_E, n, i + 1, i + 1});
    }
    return out;
}

std::vector<ModulusEntry> modulus_exponents(const weyl::SignedPermutation& w,
                                            const std::vector<int64_t>& sizes) {
    require_admissible(w, sizes);
    weyl::CSets cs = weyl::c_sets(w);
    std::vector<ModulusEntry> out;
    for (int i = 0; i < w.n; ++i) {
        uint32_t bit = 1u << i;
        if (cs.c_minus & bit) out.push_back({i + 1, ModulusEntry::F, 1});
        else if (cs.c_less & bit) out.push_back({i + 1, ModulusEntry::E, 1});
        else out.push_back({i + 1, ModulusEntry::E, 0});
    }
    return out;
}

namespace {

// Compositions of n with at most max_parts parts, lexicographic.
void compositions_rec(int64_t n, int max_parts, jac::Composition& cur,
                      std::vector<jac::Composition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    if (max_parts == 0) return;
    for (int64_t first = 1; first <= n; ++first) {
        cur.push_back(first);
        compositions_rec(n - first, max_parts - 1, cur, out);
        cur.pop_back();
    }
}

struct ShapeEnumerator {
    const std::vector<int64_t>& sizes;
    int k;
    std::vector<std::vector<jac::Composition>> comp_choices;  // per block
    bool stopped = false;

    // Receives every completed shape together with the Kleene AND of the
    // consulted unit conditions; returning false stops the enumeration.
    std::function<bool(const OrbitShape&, Tri)> sink;
    // Optional per-decision condition: (index, partner, inside c) evaluated
    // once per committed fixed point or pair; No prunes the subtree.
    std::function<Tri(int, int, bool)> unit_condition;
    // Optional prune observer (for failure accounting).
    std::function<void(int, int, bool)> on_prune;
    // Optional hook between cut selection and involution search; may run
    // enumerate_taus() any number of times. Returning false stops everything.
    std::function<bool()> cut_ready;

    // Current assembly state.
    std::vector<jac::Composition> comp;
    std::vector<int> s_cut;

    explicit ShapeEnumerator(const std::vector<int64_t>& sz)
        : sizes(sz), k(static_cast<int>(sz.size())) {
        comp_choices.resize(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) {
            jac::Composition cur;
            int max_parts = static_cast<int>(std::min<int64_t>(sizes[static_cast<size_t>(i)], 2 * k));
            compositions_rec(sizes[static_cast<size_t>(i)], max_parts, cur,
                             comp_choices[static_cast<size_t>(i)]);
        }
    }

    void run() {
        int min_parts = k, max_parts = 0;
        for (int i = 0; i < k; ++i)
            max_parts += static_cast<int>(std::min<int64_t>(sizes[static_cast<size_t>(i)], 2 * k));
        if (k == 0) {
            OrbitShape trivial;
            if (cut_ready) {
                comp.clear();
                s_cut.clear();
                if (!cut_ready()) stopped = true;
            } else {
                sink(trivial, Tri::Yes);
            }
            return;
        }
        for (int total = min_parts; total <= max_parts && !stopped; ++total) {
            comp.clear();
            pick_comp(0, total);
        }
    }

    void pick_comp(int block, int remaining_parts) {
        if (stopped) return;
        if (block == k) {
            if (remaining_parts == 0) {
                s_cut.clear();
                pick_cut(0);
            }
            return;
        }
        // Parts still assignable by later blocks.
        int later_min = k - block - 1, later_max = 0;
        for (int i = block + 1; i < k; ++i)
            later_max += static_cast<int>(std::min<int64_t>(sizes[static_cast<size_t>(i)], 2 * k));
        for (const auto& ch : comp_choices[static_cast<size_t>(block)]) {
            int p = static_cast<int>(ch.size());
            int rest = remaining_parts - p;
            if (rest < later_min || rest > later_max) continue;
            comp.push_back(ch);
            pick_comp(block + 1, rest);
            comp.pop_back();
            if (stopped) return;
        }
    }

    void pick_cut(int block) {
        if (stopped) return;
        if (block == k) {
            if (cut_ready) {
                if (!cut_ready()) stopped = true;
            } else {
                enumerate_taus();
            }
            return;
        }
        int j = static_cast<int>(comp[static_cast<size_t>(block)].size());
        int lo = std::max(0, j - k), hi = std::min(j, k);
        for (int s = lo; s <= hi && !stopped; ++s) {
            s_cut.push_back(s);
            pick_cut(block + 1);
            s_cut.pop_back();
        }
    }

    // Involution backtracking over flat indices with membership preservation
    // and strict row monotonicity of image rows.
    std::vector<int> flat_row, flat_part;
    std::vector<bool> in_c;
    std::vector<int> tau;

    void enumerate_taus() {
        flat_row.clear();
        flat_part.clear();
        in_c.clear();
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < static_cast<int>(comp[static_cast<size_t>(i)].size()); ++j) {
                flat_row.push_back(i);
                flat_part.push_back(j);
                in_c.push_back(j + 1 > s_cut[static_cast<size_t>(i)]);
            }
        tau.assign(flat_row.size(), -1);
        assign(0, Tri::Yes);
    }

    bool row_monotone_ok(int u) const {
        // Compare the image row of u against every assigned index in the same
        // (row, membership) group.
        int n = static_cast<int>(tau.size());
        for (int v = 0; v < n; ++v) {
            if (v == u || tau[static_cast<size_t>(v)] < 0) continue;
            if (flat_row[static_cast<size_t>(v)] != flat_row[static_cast<size_t>(u)]) continue;
            if (in_c[static_cast<size_t>(v)] != in_c[static_cast<size_t>(u)]) continue;
            int ru = flat_row[static_cast<size_t>(tau[static_cast<size_t>(u)])];
            int rv = flat_row[static_cast<size_t>(tau[static_cast<size_t>(v)])];
            bool before = flat_part[static_cast<size_t>(v)] < flat_part[static_cast<size_t>(u)];
            bool increasing = !in_c[static_cast<size_t>(u)];
            int lo_row = before ? rv : ru, hi_row = before ? ru : rv;
            if (increasing ? !(lo_row < hi_row) : !(lo_row > hi_row)) return false;
        }
        return true;
    }

    Tri consult(int u, int v) {
        if (!unit_condition) return Tri::Yes;
        Tri c = unit_condition(u, v, in_c[static_cast<size_t>(u)]);
        if (c == Tri::No && on_prune) on_prune(u, v, in_c[static_cast<size_t>(u)]);
        return c;
    }

    void assign(int from, Tri acc) {
        if (stopped) return;
        int n = static_cast<int>(tau.size());
        int u = from;
        while (u < n && tau[static_cast<size_t>(u)] >= 0) ++u;
        if (u == n) {
            OrbitShape shape{comp, s_cut, tau};
            if (!sink(shape, acc)) stopped = true;
            return;
        }
        // Fixed point first: lexicographically least image.
        tau[static_cast<size_t>(u)] = u;
        if (row_monotone_ok(u)) {
            Tri c = consult(u, u);
            if (c != Tri::No) assign(u + 1, tri_and(acc, c));
        }
        tau[static_cast<size_t>(u)] = -1;
        if (stopped) return;
        for (int v = u + 1; v < n; ++v) {
            if (tau[static_cast<size_t>(v)] >= 0) continue;
            if (in_c[static_cast<size_t>(v)] != in_c[static_cast<size_t>(u)]) continue;
            tau[static_cast<size_t>(u)] = v;
            tau[static_cast<size_t>(v)] = u;
            if (row_monotone_ok(u) && row_monotone_ok(v)) {
                Tri c = consult(u, v);
                if (c != Tri::No) assign(u + 1, tri_and(acc, c));
            }
            tau[static_cast<size_t>(u)] = -1;
            tau[static_cast<size_t>(v)] = -1;
            if (stopped) return;
        }
    }
};

void enumerate_shapes_impl(const std::vector<int64_t>& sizes,
                           const std::function<bool(const OrbitShape&)>& sink,
                           int64_t cap) {
    int64_t total = 0;
    for (int64_t s : sizes) {
        require(s > 0, "orbit shapes: block sizes must be positive");
        total += s;
    }
    if (total > cap)
        throw CapExceeded("orbit shapes: total support " + std::to_string(total) +
                          " exceeds cap " + std::to_string(cap));
    ShapeEnumerator en(sizes);
    en.sink = [&](const OrbitShape& s, Tri) { return sink(s); };
    en.run();
}

} // namespace

void enumerate_orbit_shapes(const std::vector<int64_t>& sizes,
                            const std::function<void(const OrbitShape&)>& sink, int64_t cap) {
    enumerate_shapes_impl(sizes, [&](const OrbitShape& s) { sink(s); return true; }, cap);
}

std::vector<OrbitShape> enumerate_orbit_shapes(const std::vector<int64_t>& sizes, int64_t cap) {
    std::vector<OrbitShape> out;
    enumerate_shapes_impl(sizes, [&](const OrbitShape& s) { out.push_back(s); return true; }, cap);
    return out;
}

namespace {

seg::Multisegment z_factor_data(const seg::LineTable& t, const seg::Segment& piece) {
    return seg::mw_dual(t, seg::Multisegment{{piece}});
}

} // namespace

std::vector<FactorAssignment> factor_terms(const seg::LineTable& t,
                                           const std::vector<BlockSpec>& blocks,
                                           const OrbitShape& shape) {
    std::vector<std::vector<std::vector<seg::Multisegment>>> per_block;  // block -> term -> parts
    for (size_t i = 0; i < blocks.size(); ++i) {
        const auto& b = blocks[i];
        const auto& comp = shape.splits[i];
        std::vector<std::vector<seg::Multisegment>> terms;
        switch (b.kind) {
            case BlockKind::Ltype: {
                std::vector<seg::Multisegment> parts;
                for (const auto& piece : jac::split_L(b.payload.segs.front(), comp))
                    parts.push_back(seg::Multisegment{{piece}});
                terms.push_back(std::move(parts));
                break;
            }
            case BlockKind::Ztype: {
                std::vector<seg::Multisegment> parts;
                for (const auto& piece : jac::split_Z(b.payload.segs.front(), comp))
                    parts.push_back(z_factor_data(t, piece));
                terms.push_back(std::move(parts));
                break;
            }
            case BlockKind::Ladder:
                terms = jac::split_ladder_multi(t, b.payload, comp);
                break;
        }
        per_block.push_back(std::move(terms));
    }
    // Cartesian product of term choices, flattened.
    std::vector<FactorAssignment> out{{}};
    for (const auto& terms : per_block) {
        std::vector<FactorAssignment> next;
        for (const auto& prefix : out)
            for (const auto& term : terms) {
                FactorAssignment ext = prefix;
                ext.insert(ext.end(), term.begin(), term.end());
                next.push_back(std::move(ext));
            }
        out = std::move(next);
    }
    return out;
}

Tri glf_half_dist(const seg::LineTable& t, const seg::Multisegment& m,
                  const seg::SegcalcConfig& cfg) {
    if (m.segs.empty()) return Tri::Yes;
    if (m.segs.size() == 1)
        return seg::glF_dist_sqint(t, seg::shift(m.segs.front(), HalfInt::half(-1)), cfg);
    seg::Multisegment shifted = seg::shift(m, HalfInt::half(-1));
    bool generic = true;
    for (size_t i = 0; i < shifted.segs.size() && generic; ++i)
        for (size_t j = i + 1; j < shifted.segs.size() && generic; ++j)
            if (seg::linked(shifted.segs[i], shifted.segs[j])) generic = false;
    if (generic) return seg::glF_dist_generic(t, shifted, cfg);
    int64_t acc2 = 0;
    for (const auto& s : shifted.segs) acc2 += seg::exponent(s).twice * s.length();
    if (acc2 != 0) return Tri::No;
    if (!seg::conj_dual(t, shifted).equals(shifted)) return Tri::No;
    return Tri::Unknown;
}

bool sp_dist_factor(const seg::LineTable& t, const seg::Multisegment& m) {
    if (!seg::is_ladder(t, m)) throw InternalError("sp_dist_factor: factor data is not a ladder");
    return seg::sp_dist_ladder(t, m);
}

RelevanceResult check_relevant(const seg::LineTable& t, const std::vector<BlockSpec>& blocks,
                               const OrbitShape& shape, const FactorAssignment& factors,
                               const seg::SegcalcConfig& cfg, bool verbose) {
    (void)blocks;
    auto idx = shape.flat_index();
    auto in_c = shape.membership();
    require(factors.size() == idx.size(), "check_relevant: factor count mismatch");
    RelevanceResult res;
    res.verdict = Tri::Yes;
    for (size_t u = 0; u < idx.size(); ++u) {
        int v = shape.tau[u];
        ConditionEntry entry;
        entry.block = idx[u].first + 1;
        entry.part = idx[u].second + 1;
        if (v == static_cast<int>(u)) {
            if (in_c[u]) {
                entry.condition = "sp";
                entry.verdict = tri_of(sp_dist_factor(t, factors[u]));
            } else {
                entry.condition = "glf-half";
                entry.verdict = glf_half_dist(t, factors[u], cfg);
            }
            if (verbose) entry.witness = seg::multisegment_str(t, factors[u]);
        } else if (v > static_cast<int>(u)) {
            const auto& lhs = factors[static_cast<size_t>(v)];
            if (in_c[u]) {
                entry.condition = "pair-nu-inv";
                seg::Multisegment want = seg::shift(factors[u], HalfInt::whole(-1));
                entry.verdict = tri_of(lhs.equals(want));
                if (verbose)
                    entry.witness = seg::multisegment_str(t, lhs) + " vs nu^-1 " +
                                    seg::multisegment_str(t, factors[u]);
            } else {
                entry.condition = "pair-nu-dual";
                seg::Multisegment want = seg::shift(seg::conj_dual(t, factors[u]), HalfInt::whole(1));
                entry.verdict = tri_of(lhs.equals(want));
                if (verbose)
                    entry.witness = seg::multisegment_str(t, lhs) + " vs nu dual " +
                                    seg::multisegment_str(t, factors[u]);
            }
        } else {
            continue;  // pair handled at its smaller index
        }
        res.verdict = tri_and(res.verdict, entry.verdict);
        res.log.push_back(std::move(entry));
        if (res.verdict == Tri::No) break;
    }
    return res;
}

namespace {

// Per-term data for fast unit-condition evaluation: canonically sorted factor
// values, their two shifted comparands and lazy fixed-point verdicts.
struct TermData {
    FactorAssignment factors;
    std::vector<std::vector<seg::Segment>> sorted, nu_inv, nu_dual;
    std::vector<Tri> sp_memo, glf_memo;
    std::vector<bool> sp_done, glf_done;

    TermData(const seg::LineTable& t, FactorAssignment f) : factors(std::move(f)) {
        size_t n = factors.size();
        sorted.reserve(n);
        nu_inv.reserve(n);
        nu_dual.reserve(n);
        for (const auto& m : factors) {
            sorted.push_back(m.sorted().segs);
            nu_inv.push_back(seg::shift(m, HalfInt::whole(-1)).sorted().segs);
            nu_dual.push_back(
                seg::shift(seg::conj_dual(t, m), HalfInt::whole(1)).sorted().segs);
        }
        sp_memo.assign(n, Tri::Unknown);
        glf_memo.assign(n, Tri::Unknown);
        sp_done.assign(n, false);
        glf_done.assign(n, false);
    }
};

} // namespace

SearchOutcome exists_relevant(const seg::LineTable& t, const std::vector<BlockSpec>& blocks,
                              int64_t cap, const seg::SegcalcConfig& cfg) {
    validate_blocks(t, blocks);
    std::vector<int64_t> sizes;
    for (const auto& b : blocks) sizes.push_back(b.size());
    int64_t total = 0;
    for (int64_t s : sizes) total += s;
    if (total > cap)
        throw CapExceeded("orbit search: total support " + std::to_string(total) +
                          " exceeds cap " + std::to_string(cap));

    SearchOutcome out;
    constexpr size_t kLogCap = 64;
    ShapeEnumerator en(sizes);

    // Factor terms depend only on the splits; cache them across cut and
    // involution variation.
    std::vector<jac::Composition> cached_splits;
    std::vector<TermData> cached_terms;
    bool have_cache = false;
    TermData* term = nullptr;

    auto record_failure = [&](int u, int v, bool inc) {
        if (out.failure_log.size() >= kLogCap) return;
        ConditionEntry e;
        auto shapeless = OrbitShape{en.comp, en.s_cut, {}};
        auto idx = shapeless.flat_index();
        e.block = idx[static_cast<size_t>(u)].first + 1;
        e.part = idx[static_cast<size_t>(u)].second + 1;
        e.condition = u == v ? (inc ? "sp" : "glf-half") : (inc ? "pair-nu-inv" : "pair-nu-dual");
        e.verdict = Tri::No;
        out.failure_log.push_back(std::move(e));
    };

    en.unit_condition = [&](int u, int v, bool inc) -> Tri {
        auto uu = static_cast<size_t>(u);
        if (u == v) {
            if (inc) {
                if (!term->sp_done[uu]) {
                    term->sp_memo[uu] = tri_of(sp_dist_factor(t, term->factors[uu]));
                    term->sp_done[uu] = true;
                }
                return term->sp_memo[uu];
            }
            if (!term->glf_done[uu]) {
                term->glf_memo[uu] = glf_half_dist(t, term->factors[uu], cfg);
                term->glf_done[uu] = true;
            }
            return term->glf_memo[uu];
        }
        const auto& lhs = term->sorted[static_cast<size_t>(v)];
        return tri_of(inc ? lhs == term->nu_inv[uu] : lhs == term->nu_dual[uu]);
    };
    en.on_prune = [&](int u, int v, bool inc) {
        ++out.branches;
        record_failure(u, v, inc);
    };
    en.sink = [&](const OrbitShape& shape, Tri acc) {
        ++out.branches;
        if (acc == Tri::Yes) {
            out.kind = SearchOutcome::Found;
            RelevanceResult full = check_relevant(t, blocks, shape, term->factors, cfg, true);
            out.certificate = {shape, term->factors, full.log};
            return false;
        }
        ++out.unknown_branches;
        return true;
    };
    en.cut_ready = [&]() {
        if (!have_cache || en.comp != cached_splits) {
            cached_splits = en.comp;
            OrbitShape probe;
            probe.splits = en.comp;
            cached_terms.clear();
            for (auto& f : factor_terms(t, blocks, probe)) cached_terms.emplace_back(t, std::move(f));
            have_cache = true;
        }
        for (auto& td : cached_terms) {
            term = &td;
            en.enumerate_taus();
            if (en.stopped) return false;
        }
        return true;
    };
    en.run();
    if (out.kind != SearchOutcome::Found)
        out.kind = out.unknown_branches == 0 ? SearchOutcome::NoneCertified : SearchOutcome::Unknown;
    return out;
}

} // namespace unidist::orb
