#include <doctest.h>

#include "unidist/verdicts.hpp"

using namespace unidist;
using namespace unidist::ver;

namespace {

struct Fixture {
    seg::LineTable t;
    int even, odd, nsd_a, nsd_b;
    Fixture() {
        even = t.add_self_dual("rho", seg::SdClass::Even);
        odd = t.add_self_dual("sigma", seg::SdClass::Odd);
        auto [a, b] = t.add_pair("pi", "pibar");
        nsd_a = a;
        nsd_b = b;
    }
    seg::Segment sg(int line, int64_t a2, int64_t b2) const {
        return seg::make_segment(line, HalfInt(a2), HalfInt(b2));
    }
    DatumEntry entry(int line, std::vector<int64_t> a2, const std::string& eps) const {
        DatumEntry e;
        e.line = line;
        for (int64_t v : a2) e.a.push_back(HalfInt(v));
        e.eps = sign::parse_tuple(eps);
        return e;
    }
};

} // namespace

TEST_CASE("datum validation names the clause") {
    Fixture f;
    AdmissibleDatum d;
    d.entries.push_back(f.entry(f.nsd_a, {1}, "+"));
    CHECK_THROWS_WITH_AS(validate(f.t, d), doctest::Contains("even or odd"), ValidationError);

    d.entries = {f.entry(f.odd, {4, 2, 0}, "+++")};  // odd k on an odd line
    CHECK_THROWS_WITH_AS(validate(f.t, d), doctest::Contains("even k_rho"), ValidationError);

    d.entries = {f.entry(f.odd, {3, 1}, "+-")};  // strict halves on an odd line
    CHECK_THROWS_WITH_AS(validate(f.t, d), doctest::Contains("integer a-values"), ValidationError);

    d.entries = {f.entry(f.even, {4, 2}, "+-")};  // integers on an even line
    CHECK_THROWS_WITH_AS(validate(f.t, d), doctest::Contains("strict half-integer"),
                         ValidationError);

    d.entries = {f.entry(f.even, {1, 3}, "+-")};
    CHECK_THROWS_WITH_AS(validate(f.t, d), doctest::Contains("strictly decrease"),
                         ValidationError);

    d.entries = {f.entry(f.even, {3, 1}, "+")};
    CHECK_THROWS_WITH_AS(validate(f.t, d), doctest::Contains("eps length"), ValidationError);

    d.entries = {f.entry(f.even, {5, 3, 1}, "+-+")};  // tau = 3
    CHECK_THROWS_WITH_AS(validate(f.t, d), doctest::Contains("tau(eps)"), ValidationError);

    d.entries = {f.entry(f.even, {3, 1}, "++")};
    CHECK_NOTHROW(validate(f.t, d));
}

TEST_CASE("jordan values") {
    Fixture f;
    AdmissibleDatum d;
    d.entries = {f.entry(f.even, {3, 1}, "++")};
    CHECK(jordan_of(f.t, d, f.even) == std::vector<int64_t>{4, 2});
    AdmissibleDatum d2;
    d2.entries = {f.entry(f.odd, {4, 0}, "++")};
    CHECK(jordan_of(f.t, d2, f.odd) == std::vector<int64_t>{5, 1});
    CHECK_THROWS_AS(jordan_of(f.t, d2, f.even), ValidationError);
}

TEST_CASE("discrete-series vanishing conditions") {
    Fixture f;
    AdmissibleDatum d;
    // eps = (+,+): t = 1 odd.
    d.entries = {f.entry(f.even, {3, 1}, "++")};
    auto v = ds_vanishing(f.t, d);
    CHECK(v.outcome == Outcome::NotDistinguished);
    CHECK(v.certificate.at("condition") == "1");
    CHECK(v.certificate.at("t") == "1");

    // eps = +f_{3,2} = (+,-,+,+,-): t = 3 odd.
    d.entries = {f.entry(f.even, {9, 7, 5, 3, 1}, "+-++-")};
    v = ds_vanishing(f.t, d);
    CHECK(v.outcome == Outcome::NotDistinguished);
    CHECK(v.certificate.at("condition") == "1");
    CHECK(v.certificate.at("t") == "3");

    // t = 2 with a Jordan gap fires condition 2.
    d.entries = {f.entry(f.even, {9, 5, 3, 1}, "+--+")};
    v = ds_vanishing(f.t, d);
    CHECK(v.outcome == Outcome::NotDistinguished);
    CHECK(v.certificate.at("condition") == "2");

    // Without the gap the same shape is inconclusive.
    d.entries = {f.entry(f.even, {7, 5, 3, 1}, "+--+")};
    v = ds_vanishing(f.t, d);
    CHECK(v.outcome == Outcome::Inconclusive);

    // eps = +f_{2,1,1,2}: t = 2 and eps_{t+2} = eps_{t+1} fires condition 3.
    d.entries = {f.entry(f.even, {11, 9, 7, 5, 3, 1}, "")};
    d.entries[0].eps = sign::compose(1, {2, 1, 1, 2});
    v = ds_vanishing(f.t, d);
    CHECK(v.outcome == Outcome::NotDistinguished);
    CHECK(v.certificate.at("condition") == "3");
}

TEST_CASE("realization from a datum") {
    Fixture f;
    AdmissibleDatum d;
    d.entries = {f.entry(f.even, {3, 1}, "++")};
    auto blocks = build_I_pi(f.t, d, {{1}});
    REQUIRE(blocks.size() == 1);
    CHECK(blocks[0] == f.sg(f.even, -3, 1));  // [-3/2, 1/2]

    AdmissibleDatum d1;
    d1.entries = {f.entry(f.even, {1}, "+")};
    auto blocks1 = build_I_pi(f.t, d1, {{}});
    REQUIRE(blocks1.size() == 1);
    CHECK(blocks1[0] == f.sg(f.even, -1, -1));  // [-1/2, -1/2]

    // k = 4 with the constrained pattern: two nested segments.
    AdmissibleDatum d4;
    d4.entries = {f.entry(f.even, {7, 5, 3, 1}, "")};
    d4.entries[0].eps = sign::compose(1, {2, 2});
    auto pat = sign::path_v0(d4.entries[0].eps);
    auto blocks4 = build_I_pi(f.t, d4, {pat});
    REQUIRE(blocks4.size() == 2);
    // Pattern (2,1): pairs (2,3) then (1,4).
    CHECK(blocks4[0] == f.sg(f.even, -5, 3));
    CHECK(blocks4[1] == f.sg(f.even, -7, 1));

    CHECK_THROWS_AS(build_I_pi(f.t, d, {{2}}), ValidationError);
    CHECK_THROWS_AS(build_I_pi(f.t, d, {{}}), ValidationError);
}

TEST_CASE("replay of the vanishing argument") {
    Fixture f;
    AdmissibleDatum d;
    d.entries = {f.entry(f.even, {3, 1}, "++")};
    auto rep = cross_validate_ds(f.t, d);
    CHECK(rep.applicable);
    CHECK(rep.none_certified);

    // Condition 2 instance.
    AdmissibleDatum d2;
    d2.entries = {f.entry(f.even, {9, 5, 3, 1}, "+--+")};
    rep = cross_validate_ds(f.t, d2);
    CHECK(rep.applicable);
    CHECK(rep.none_certified);

    // Inconclusive data are not applicable.
    AdmissibleDatum dna;
    dna.entries = {f.entry(f.even, {7, 5, 3, 1}, "+--+")};
    rep = cross_validate_ds(f.t, dna);
    CHECK_FALSE(rep.applicable);
}

TEST_CASE("tempered vanishing") {
    Fixture f;
    TemperedDatum td;
    td.ds.entries = {f.entry(f.even, {3, 1}, "++")};

    // Non-self-dual line.
    td.gl_pairs = {f.sg(f.nsd_a, -1, 1)};
    auto v = tempered_vanishing(f.t, td);
    CHECK(v.outcome == Outcome::NotDistinguished);
    CHECK(v.certificate.at("condition") == "1");

    // Parity mismatch: gl entry a = 3 against even Jordan values 4, 2.
    td.gl_pairs = {f.sg(f.even, -2, 2)};
    v = tempered_vanishing(f.t, td);
    CHECK(v.outcome == Outcome::NotDistinguished);
    CHECK(v.certificate.at("condition") == "2");

    // Domination: gl entry a = 6 against Jordan values 4, 2.
    td.gl_pairs = {f.sg(f.even, -5, 5)};
    v = tempered_vanishing(f.t, td);
    CHECK(v.outcome == Outcome::NotDistinguished);
    CHECK(v.certificate.at("condition") == "3");
    CHECK_FALSE(v.certificate.count("vacuous"));

    // Same parity, not dominating: inconclusive.
    td.gl_pairs = {f.sg(f.even, -1, 1)};  // a = 2, Jordan has 4 > 2
    v = tempered_vanishing(f.t, td);
    CHECK(v.outcome == Outcome::Inconclusive);

    // Absent line: condition 3 fires vacuously and is marked.
    td.gl_pairs = {f.sg(f.odd, -1, 1)};
    v = tempered_vanishing(f.t, td);
    CHECK(v.outcome == Outcome::NotDistinguished);
    CHECK(v.certificate.at("condition") == "3");
    CHECK(v.certificate.at("vacuous") == "true");

    // The maximal same-parity entry is the one tested.
    td.gl_pairs = {f.sg(f.even, -5, 5), f.sg(f.even, -1, 1)};  // a = 6 and a = 2
    v = tempered_vanishing(f.t, td);
    CHECK(v.outcome == Outcome::NotDistinguished);
    CHECK(v.certificate.at("a") == "6");

    // Centered-segment validation.
    td.gl_pairs = {f.sg(f.even, 0, 2)};
    CHECK_THROWS_WITH_AS(validate(f.t, td), doctest::Contains("centered"), ValidationError);
}

TEST_CASE("ladder base change: even ladders") {
    Fixture f;
    // Odd-line Speh ladder ([2,3],[1,2],[-2,-1],[-3,-2]).
    seg::Multisegment modd{{f.sg(f.odd, 4, 6), f.sg(f.odd, 2, 4), f.sg(f.odd, -4, -2),
                            f.sg(f.odd, -6, -4)}};
    auto res = ladder_bc(f.t, modd);
    CHECK(res.in_image == Tri::Yes);
    CHECK(res.base == LadderBcResult::Trivial);
    CHECK(res.fiber_gl.size() == 2);
    CHECK(res.verdict.outcome == Outcome::Distinguished);

    // The even-line sibling hits the reducibility point: inconclusive.
    seg::Multisegment meven{{f.sg(f.even, 3, 5), f.sg(f.even, 1, 3), f.sg(f.even, -3, -1),
                             f.sg(f.even, -5, -3)}};
    res = ladder_bc(f.t, meven);
    CHECK(res.in_image == Tri::Yes);
    CHECK(res.verdict.outcome == Outcome::Inconclusive);
    CHECK(res.verdict.rule == "bc-even-reducible");

    // Broken pairing: not distinguished by transfer.
    seg::Multisegment gap{{f.sg(f.odd, 6, 8), f.sg(f.odd, 2, 4), f.sg(f.odd, -4, -2),
                           f.sg(f.odd, -8, -6)}};
    res = ladder_bc(f.t, gap);
    CHECK(res.verdict.outcome == Outcome::NotDistinguished);
    CHECK(res.verdict.rule == "bc-even-pairing");

    // s odd with an empty reducibility intersection: not distinguished.
    // ([0,1],[-1,0]) on the even line stays on the integer grid.
    seg::Multisegment pair_even{{f.sg(f.even, 0, 2), f.sg(f.even, -2, 0)}};
    res = ladder_bc(f.t, pair_even);
    CHECK(res.verdict.outcome == Outcome::NotDistinguished);
    CHECK(res.verdict.rule == "bc-odd-half-count");

    // The same shape on the odd line contains the reducibility point.
    seg::Multisegment pair_odd{{f.sg(f.odd, 0, 2), f.sg(f.odd, -2, 0)}};
    res = ladder_bc(f.t, pair_odd);
    CHECK(res.verdict.outcome == Outcome::Inconclusive);
    CHECK(res.verdict.rule == "bc-odd-half-reducible");
}

TEST_CASE("ladder base change: odd ladders") {
    Fixture f;
    // Odd middle length: the fiber leaves the trivial-support class.
    seg::Multisegment modd{{f.sg(f.even, 1, 5), f.sg(f.even, -2, 2), f.sg(f.even, -5, -1)}};
    auto res = ladder_bc(f.t, modd);
    CHECK(res.in_image == Tri::No);  // even line, odd middle length is orthogonal

    seg::Multisegment modd2{{f.sg(f.odd, 1, 5), f.sg(f.odd, -2, 2), f.sg(f.odd, -5, -1)}};
    res = ladder_bc(f.t, modd2);
    CHECK(res.in_image == Tri::Yes);
    CHECK(res.base == LadderBcResult::NontrivialCuspSupport);
    CHECK(res.verdict.outcome == Outcome::NotDistinguished);
    CHECK(res.verdict.rule == "bc-cuspidal-base");

    // Even middle length with a detached edge segment.
    seg::Multisegment detached{{f.sg(f.even, 9, 13), f.sg(f.even, -3, 3), f.sg(f.even, -13, -9)}};
    res = ladder_bc(f.t, detached);
    CHECK(res.in_image == Tri::Yes);
    CHECK(res.base == LadderBcResult::TauPlus);
    CHECK(res.base_a == 4);
    CHECK(res.verdict.outcome == Outcome::NotDistinguished);
    CHECK(res.verdict.rule == "bc-edge-gap");

    // Adjacent edge segment: the argument does not close the case.
    seg::Multisegment adjacent{{f.sg(f.even, 3, 7), f.sg(f.even, -3, 3), f.sg(f.even, -7, -3)}};
    res = ladder_bc(f.t, adjacent);
    CHECK(res.verdict.outcome == Outcome::Inconclusive);
    CHECK(res.verdict.rule == "bc-edge-adjacent");

    // Lone half-segment fiber.
    seg::Multisegment lone{{f.sg(f.even, -1, 1)}};
    res = ladder_bc(f.t, lone);
    CHECK(res.in_image == Tri::Yes);
    CHECK(res.verdict.outcome == Outcome::NotDistinguished);
    CHECK(res.verdict.rule == "bc-lone-half-segment");

    CHECK_THROWS_AS(ladder_bc(f.t, seg::Multisegment{{f.sg(f.even, 0, 2)}}), ValidationError);
}

TEST_CASE("speh verdicts") {
    Fixture f;
    // Odd line, cuspidal delta.
    seg::Segment dodd = f.sg(f.odd, 0, 0);
    CHECK(speh_verdict(f.t, dodd, 1).outcome == Outcome::NotDistinguished);
    CHECK(speh_verdict(f.t, dodd, 3).outcome == Outcome::NotDistinguished);
    CHECK(speh_verdict(f.t, dodd, 2).outcome == Outcome::NotDistinguished);
    auto v4 = speh_verdict(f.t, dodd, 4);
    CHECK(v4.outcome == Outcome::Distinguished);
    CHECK(v4.rule == "speh-multiplicity-div4");
    CHECK(speh_verdict(f.t, dodd, 6).outcome == Outcome::NotDistinguished);
    CHECK(speh_verdict(f.t, dodd, 8).outcome == Outcome::Distinguished);

    // Even line, length-two delta: the shifted ladder lives on the integer
    // grid, away from the reducibility points.
    seg::Segment deven = f.sg(f.even, -1, 1);
    CHECK(speh_verdict(f.t, deven, 3).outcome == Outcome::NotDistinguished);
    CHECK(speh_verdict(f.t, deven, 2).outcome == Outcome::NotDistinguished);
    CHECK(speh_verdict(f.t, deven, 4).outcome == Outcome::Distinguished);
    CHECK(speh_verdict(f.t, deven, 6).outcome == Outcome::NotDistinguished);

    // Length-three delta on the even line: the edge hits a reducibility
    // point, so the even-multiplicity cases stay open.
    seg::Segment dwide = f.sg(f.even, -2, 2);
    CHECK(speh_verdict(f.t, dwide, 2).outcome == Outcome::Inconclusive);
    CHECK(speh_verdict(f.t, dwide, 4).outcome == Outcome::Inconclusive);

    // Preconditions.
    CHECK_THROWS_AS(speh_verdict(f.t, f.sg(f.even, 0, 2), 2), ValidationError);
    CHECK_THROWS_AS(speh_verdict(f.t, f.sg(f.even, -2, 2), 3), ValidationError);
}

TEST_CASE("standard module verdicts") {
    Fixture f;
    // Single segment [0,1]: even fails the parity rule, odd passes.
    seg::Multisegment me{{f.sg(f.even, 0, 2)}};
    CHECK(standard_module_verdict(f.t, me).outcome == Outcome::NotDistinguished);
    seg::Multisegment mo{{f.sg(f.odd, 0, 2)}};
    auto v = standard_module_verdict(f.t, mo);
    CHECK(v.outcome == Outcome::Distinguished);
    CHECK(!v.notes.empty());

    // Exponent away from 1/2 with no partner.
    seg::Multisegment far{{f.sg(f.even, 2, 4)}};
    CHECK(standard_module_verdict(f.t, far).outcome == Outcome::NotDistinguished);

    // Partner pair across a non-self-dual line pair.
    seg::Multisegment pair{{f.sg(f.nsd_a, -1, 3), f.sg(f.nsd_b, -1, 3)}};
    v = standard_module_verdict(f.t, pair);
    CHECK(v.outcome == Outcome::Distinguished);
    CHECK(v.certificate.count("witness_involution"));

    // Preconditions: positivity and genericity.
    CHECK_THROWS_AS(standard_module_verdict(f.t, seg::Multisegment{{f.sg(f.even, -2, 2)}}),
                    ValidationError);
    CHECK_THROWS_AS(standard_module_verdict(
                        f.t, seg::Multisegment{{f.sg(f.even, 0, 2), f.sg(f.even, 2, 4)}}),
                    ValidationError);

    // Conservative mode propagates Unknown to Inconclusive.
    seg::SegcalcConfig cons{seg::SqintDistRule::Conservative};
    CHECK(standard_module_verdict(f.t, mo, cons).outcome == Outcome::Inconclusive);
}

TEST_CASE("sufficiency combinators") {
    Fixture f;
    // part1 empty, part2 an Sp-distinguished ladder.
    seg::Multisegment lad{{f.sg(f.even, 1, 3), f.sg(f.even, -1, 1)}};
    CHECK(hered_sufficient(f.t, {}, lad).outcome == Outcome::Distinguished);
    // part1 a half-shifted distinguished segment, part2 empty.
    seg::Multisegment part1{{f.sg(f.odd, 0, 2)}};
    CHECK(hered_sufficient(f.t, part1, {}).outcome == Outcome::Distinguished);
    // Failing predicate raises.
    seg::Multisegment bad{{f.sg(f.even, 0, 2)}};
    CHECK_THROWS_AS(hered_sufficient(f.t, bad, {}), ValidationError);
    CHECK_THROWS_AS(hered_sufficient(f.t, {}, seg::Multisegment{{f.sg(f.even, 0, 2)}}),
                    ValidationError);
}

TEST_CASE("distinct lines verdict") {
    Fixture f;
    seg::LineTable t2;
    int e1 = t2.add_self_dual("r1", seg::SdClass::Even);
    int e2 = t2.add_self_dual("r2", seg::SdClass::Even);
    int e3 = t2.add_self_dual("r3", seg::SdClass::Even);
    auto segl = [&](int line) { return seg::make_segment(line, HalfInt(0), HalfInt(2)); };
    // [0,1] per line: half-shift gives [-1/2,1/2], even parity fails.
    seg::Multisegment m{{segl(e1), segl(e2), segl(e3)}};
    CHECK(distinct_lines_verdict(t2, m).outcome == Outcome::NotDistinguished);

    int o1 = t2.add_self_dual("s1", seg::SdClass::Odd);
    int o2 = t2.add_self_dual("s2", seg::SdClass::Odd);
    int o3 = t2.add_self_dual("s3", seg::SdClass::Odd);
    seg::Multisegment mo{{segl(o1), segl(o2), segl(o3)}};
    CHECK(distinct_lines_verdict(t2, mo).outcome == Outcome::Distinguished);

    seg::Multisegment shared{{segl(o1), seg::make_segment(o1, HalfInt(4), HalfInt(6))}};
    CHECK_THROWS_AS(distinct_lines_verdict(t2, shared), ValidationError);
    seg::Multisegment dualpair{{f.sg(f.nsd_a, 0, 2), f.sg(f.nsd_b, 0, 2)}};
    CHECK_THROWS_AS(distinct_lines_verdict(f.t, dualpair), ValidationError);
}
