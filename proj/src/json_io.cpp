#include "unidist/json_io.hpp"

#include <algorithm>

namespace unidist::io {

namespace {

const json& field(const json& j, const char* key, const char* context) {
    auto it = j.find(key);
    if (it == j.end())
        throw ValidationError(std::string(context) + ": missing field '" + key + "'");
    return *it;
}

} // namespace

seg::LineTable parse_lines(const json& arr) {
    require(arr.is_array(), "lines: expected an array");
    seg::LineTable t;
    // Two passes so that partner declarations may appear in any order.
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& j : arr) {
        std::string id = field(j, "id", "line").get<std::string>();
        const json& cls = field(j, "class", "line");
        if (cls.is_string()) {
            std::string c = cls.get<std::string>();
            if (c == "even") t.add_self_dual(id, seg::SdClass::Even);
            else if (c == "odd") t.add_self_dual(id, seg::SdClass::Odd);
            else throw ValidationError("line: class must be \"even\", \"odd\" or {\"nonsd\": id}");
        } else if (cls.is_object()) {
            std::string partner = field(cls, "nonsd", "line class").get<std::string>();
            bool seen = false;
            for (auto& [a, b] : pairs)
                if (a == partner && b == id) seen = true;
            if (!seen) {
                pairs.emplace_back(id, partner);
                t.add_pair(id, partner);
            }
        } else {
            throw ValidationError("line: class must be \"even\", \"odd\" or {\"nonsd\": id}");
        }
    }
    // Check declared partners agree with the table.
    for (const auto& j : arr) {
        const json& cls = field(j, "class", "line");
        if (!cls.is_object()) continue;
        std::string id = field(j, "id", "line").get<std::string>();
        std::string partner = field(cls, "nonsd", "line class").get<std::string>();
        int idx = t.index_of(id);
        require(idx >= 0 && t.line(t.dual_line(idx)).id == partner,
                "line: partner declarations must be mutual");
    }
    return t;
}

json lines_json(const seg::LineTable& t) {
    json arr = json::array();
    for (int i = 0; i < t.size(); ++i) {
        const auto& l = t.line(i);
        json j;
        j["id"] = l.id;
        switch (l.sd) {
            case seg::SdClass::Even: j["class"] = "even"; break;
            case seg::SdClass::Odd: j["class"] = "odd"; break;
            case seg::SdClass::NonSelfDual: j["class"] = json{{"nonsd", t.line(l.partner).id}}; break;
        }
        arr.push_back(j);
    }
    return arr;
}

seg::Segment parse_segment(const seg::LineTable& t, const json& j) {
    std::string id = field(j, "line", "segment").get<std::string>();
    int line = t.index_of(id);
    require(line >= 0, "segment: unknown line '" + id + "'");
    HalfInt a(field(j, "a2", "segment").get<int64_t>());
    HalfInt b(field(j, "b2", "segment").get<int64_t>());
    return seg::make_segment(line, a, b);
}

json segment_json(const seg::LineTable& t, const seg::Segment& s) {
    return json{{"line", t.line(s.line).id}, {"a2", s.a.twice}, {"b2", s.b.twice}};
}

seg::Multisegment parse_multisegment(const seg::LineTable& t, const json& arr) {
    require(arr.is_array(), "multisegment: expected an array of segments");
    seg::Multisegment m;
    for (const auto& j : arr) m.segs.push_back(parse_segment(t, j));
    return m;
}

json multisegment_json(const seg::LineTable& t, const seg::Multisegment& m) {
    json arr = json::array();
    for (const auto& s : seg::std_sort(t, m)) arr.push_back(segment_json(t, s));
    return arr;
}

weyl::SignedPermutation parse_signed_perm(const json& j) {
    weyl::SignedPermutation w;
    w.n = field(j, "n", "signed permutation").get<int>();
    require(w.n >= 0 && w.n <= 16, "signed permutation: n out of range");
    const json& tau = field(j, "tau", "signed permutation");
    require(tau.is_array() && static_cast<int>(tau.size()) == w.n,
            "signed permutation: tau must list n images");
    std::vector<bool> seen(static_cast<size_t>(w.n), false);
    for (const auto& v : tau) {
        int img = v.get<int>();
        require(img >= 1 && img <= w.n && !seen[static_cast<size_t>(img - 1)],
                "signed permutation: tau must be a bijection of 1..n");
        seen[static_cast<size_t>(img - 1)] = true;
        w.tau.push_back(img - 1);
    }
    for (const auto& v : field(j, "c", "signed permutation")) {
        int i = v.get<int>();
        require(i >= 1 && i <= w.n, "signed permutation: c members must lie in 1..n");
        w.c |= 1u << (i - 1);
    }
    return w;
}

json signed_perm_json(const weyl::SignedPermutation& w) {
    json tau = json::array(), c = json::array();
    for (int i = 0; i < w.n; ++i) tau.push_back(w.tau[static_cast<size_t>(i)] + 1);
    for (int i : weyl::set_members(w.c, w.n)) c.push_back(i);
    return json{{"n", w.n}, {"tau", tau}, {"c", c}};
}

orb::BlockSpec parse_block(const seg::LineTable& t, const json& j) {
    std::string kind = field(j, "kind", "block").get<std::string>();
    if (kind == "L") return orb::BlockSpec::L(parse_segment(t, field(j, "seg", "block")));
    if (kind == "Z") return orb::BlockSpec::Z(parse_segment(t, field(j, "seg", "block")));
    if (kind == "ladder") {
        auto m = parse_multisegment(t, field(j, "segs", "block"));
        require(seg::is_ladder(t, m), "block: ladder payload must be a ladder");
        return orb::BlockSpec::ladder(m);
    }
    throw ValidationError("block: kind must be \"L\", \"Z\" or \"ladder\"");
}

json block_json(const seg::LineTable& t, const orb::BlockSpec& b) {
    json j;
    switch (b.kind) {
        case orb::BlockKind::Ltype:
            j["kind"] = "L";
            j["seg"] = segment_json(t, b.payload.segs.front());
            break;
        case orb::BlockKind::Ztype:
            j["kind"] = "Z";
            j["seg"] = segment_json(t, b.payload.segs.front());
            break;
        case orb::BlockKind::Ladder:
            j["kind"] = "ladder";
            j["segs"] = multisegment_json(t, b.payload);
            break;
    }
    return j;
}

ver::AdmissibleDatum parse_datum(const seg::LineTable& t, const json& j) {
    ver::AdmissibleDatum d;
    for (const auto& ej : field(j, "entries", "datum")) {
        ver::DatumEntry e;
        std::string id = field(ej, "line", "datum entry").get<std::string>();
        e.line = t.index_of(id);
        require(e.line >= 0, "datum entry: unknown line '" + id + "'");
        for (const auto& v : field(ej, "a2", "datum entry"))
            e.a.push_back(HalfInt(v.get<int64_t>()));
        e.eps = sign::parse_tuple(field(ej, "eps", "datum entry").get<std::string>());
        d.entries.push_back(std::move(e));
    }
    ver::validate(t, d);
    return d;
}

json datum_json(const seg::LineTable& t, const ver::AdmissibleDatum& d) {
    json entries = json::array();
    for (const auto& e : d.entries) {
        json a2 = json::array();
        for (const auto& a : e.a) a2.push_back(a.twice);
        entries.push_back(json{{"line", t.line(e.line).id},
                               {"a2", a2},
                               {"eps", sign::format_tuple(e.eps)}});
    }
    return json{{"entries", entries}};
}

ver::TemperedDatum parse_tempered(const seg::LineTable& t, const json& j) {
    ver::TemperedDatum td;
    td.ds = parse_datum(t, j);
    for (const auto& sj : field(j, "gl_pairs", "tempered datum"))
        td.gl_pairs.push_back(parse_segment(t, sj));
    ver::validate(t, td);
    return td;
}

json verdict_json(const ver::Verdict& v) {
    json cert = json::object();
    for (const auto& [k, val] : v.certificate) cert[k] = val;
    json j{{"outcome", ver::outcome_str(v.outcome)}, {"theorem", v.rule}, {"certificate", cert}};
    if (!v.notes.empty()) j["notes"] = v.notes;
    return j;
}

json orbit_shape_json(const orb::OrbitShape& s) {
    json splits = json::array();
    for (const auto& comp : s.splits) {
        json c = json::array();
        for (int64_t p : comp) c.push_back(p);
        splits.push_back(c);
    }
    json tau = json::array();
    for (int v : s.tau) tau.push_back(v + 1);
    json c = json::array();
    auto idx = s.flat_index();
    auto in_c = s.membership();
    for (size_t u = 0; u < idx.size(); ++u)
        if (in_c[u]) c.push_back(json::array({idx[u].first + 1, idx[u].second + 1}));
    return json{{"splits", splits}, {"s", s.s_cut}, {"tau", tau}, {"c", c}};
}

json condition_json(const std::vector<orb::ConditionEntry>& log) {
    json arr = json::array();
    for (const auto& e : log)
        arr.push_back(json{{"index", json::array({e.block, e.part})},
                           {"condition", e.condition},
                           {"verdict", tri_str(e.verdict)},
                           {"witness", e.witness}});
    return arr;
}

json search_outcome_json(const seg::LineTable& t, const orb::SearchOutcome& o) {
    json j;
    j["branches"] = o.branches;
    switch (o.kind) {
        case orb::SearchOutcome::Found: {
            j["result"] = "found";
            json cert;
            cert["orbit"] = orbit_shape_json(o.certificate.orbit);
            json factors = json::array();
            for (const auto& f : o.certificate.factors)
                factors.push_back(multisegment_json(t, f));
            cert["factors"] = factors;
            cert["conditions"] = condition_json(o.certificate.conditions);
            j["certificate"] = cert;
            break;
        }
        case orb::SearchOutcome::NoneCertified:
            j["result"] = "none";
            j["log"] = condition_json(o.failure_log);
            break;
        default:
            j["result"] = "unknown";
            j["unknown_branches"] = o.unknown_branches;
            j["log"] = condition_json(o.failure_log);
            break;
    }
    return j;
}

} // namespace unidist::io
