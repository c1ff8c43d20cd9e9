#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "unidist/orbits.hpp"
#include "unidist/segcalc.hpp"
#include "unidist/verdicts.hpp"
#include "unidist/weylinv.hpp"

namespace unidist::io {

using nlohmann::json;

// Line tables: [{"id": ..., "class": "even" | "odd" | {"nonsd": partner}}].
seg::LineTable parse_lines(const json& arr);
json lines_json(const seg::LineTable& t);

// Segments: {"line": id, "a2": int, "b2": int} (doubled endpoints).
seg::Segment parse_segment(const seg::LineTable& t, const json& j);
json segment_json(const seg::LineTable& t, const seg::Segment& s);

seg::Multisegment parse_multisegment(const seg::LineTable& t, const json& arr);
json multisegment_json(const seg::LineTable& t, const seg::Multisegment& m);

// Signed permutations: {"n": n, "tau": one-line 1-based array, "c": sorted 1-based array}.
weyl::SignedPermutation parse_signed_perm(const json& j);
json signed_perm_json(const weyl::SignedPermutation& w);

// Blocks: {"kind": "L" | "Z" | "ladder", "seg": ... | "segs": [...]}.
orb::BlockSpec parse_block(const seg::LineTable& t, const json& j);
json block_json(const seg::LineTable& t, const orb::BlockSpec& b);

ver::AdmissibleDatum parse_datum(const seg::LineTable& t, const json& j);
json datum_json(const seg::LineTable& t, const ver::AdmissibleDatum& d);

ver::TemperedDatum parse_tempered(const seg::LineTable& t, const json& j);

json verdict_json(const ver::Verdict& v);
json orbit_shape_json(const orb::OrbitShape& s);
json condition_json(const std::vector<orb::ConditionEntry>& log);
json search_outcome_json(const seg::LineTable& t, const orb::SearchOutcome& o);

} // namespace unidist::io
