#include "unidist/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "unidist/json_io.hpp"
#include "unidist/oracles.hpp"

namespace unidist::cli {

namespace {

using io::json;

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open input file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ValidationError("malformed JSON in '" + path + "': " + e.what());
    }
    return j;
}

int64_t orbit_cap() {
    if (const char* env = std::getenv("UNIDIST_MAX_SUPPORT")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw ValidationError("UNIDIST_MAX_SUPPORT must be a positive integer");
    }
    return orb::kDefaultSupportCap;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

struct Args {
    std::vector<std::string> positional;
    std::vector<std::pair<std::string, std::string>> flags;  // --name [value]

    bool has_flag(const std::string& name) const {
        for (auto& [k, v] : flags)
            if (k == name) return true;
        return false;
    }
    std::optional<std::string> flag(const std::string& name) const {
        for (auto& [k, v] : flags)
            if (k == name) return v;
        return std::nullopt;
    }
};

Args split_args(const std::vector<std::string>& raw, size_t from,
                const std::vector<std::string>& value_flags) {
    Args a;
    for (size_t i = from; i < raw.size(); ++i) {
        const std::string& s = raw[i];
        if (s.rfind("--", 0) == 0) {
            std::string name = s.substr(2);
            bool takes_value =
                std::find(value_flags.begin(), value_flags.end(), name) != value_flags.end();
            if (takes_value) {
                if (i + 1 >= raw.size())
                    throw ValidationError("flag --" + name + " requires a value");
                a.flags.emplace_back(name, raw[++i]);
            } else {
                a.flags.emplace_back(name, "");
            }
        } else {
            a.positional.push_back(s);
        }
    }
    return a;
}

seg::LineTable lines_of(const json& j) {
    auto it = j.find("lines");
    if (it == j.end()) throw ValidationError("input: missing field 'lines'");
    return io::parse_lines(*it);
}

int cmd_sign(const Args& a, std::ostream& out) {
    require(!a.positional.empty(), "usage: sign <component|path|dot> <tuple>");
    const std::string& sub = a.positional[0];
    require(a.positional.size() >= 2, "sign " + sub + ": missing sign tuple argument");
    sign::SignTuple e = sign::parse_tuple(a.positional[1]);
    if (sub == "component") {
        emit(out, json{{"tau", sign::tau(e)}});
        return 0;
    }
    if (sub == "path") {
        int target = sign::tau(e);
        if (auto tf = a.flag("target")) {
            if (*tf == "v0") target = 0;
            else if (*tf == "v1") target = 1;
            else throw ValidationError("sign path: --target must be v0 or v1");
            require(target == sign::tau(e), "sign path: tuple lies in a different component");
        }
        require(target == 0 || target == 1,
                "sign path: tuple must lie in component 0 or 1");
        bool variant = a.has_flag("variant");
        sign::Pattern p = target == 0 ? sign::path_v0(e, variant) : sign::path_v1(e, variant);
        auto [fin, hist] = sign::walk(e, p);
        json hj = json::array();
        for (auto [x, y] : hist) hj.push_back(json::array({x, y}));
        emit(out, json{{"pattern", p}, {"final", sign::format_tuple(fin)}, {"history", hj}});
        return 0;
    }
    if (sub == "dot") {
        out << sign::dot_reachable(e);
        return 0;
    }
    throw ValidationError("sign: unknown subcommand '" + sub + "'");
}

int cmd_weyl(const Args& a, std::ostream& out) {
    require(!a.positional.empty(), "usage: weyl <minimal|springer|dot> ...");
    const std::string& sub = a.positional[0];
    require(a.positional.size() >= 2, "weyl " + sub + ": missing argument");
    if (sub == "minimal") {
        int n = std::stoi(a.positional[1]);
        json arr = json::array();
        for (const auto& w : weyl::minimal_involutions(n)) arr.push_back(io::signed_perm_json(w));
        emit(out, arr);
        return 0;
    }
    if (sub == "springer") {
        auto w = io::parse_signed_perm(read_json_file(a.positional[1]));
        require(weyl::is_involution(w), "weyl springer: input must be an involution");
        auto sp = weyl::springer_path(w);
        emit(out, json{{"sigma", io::signed_perm_json(sp.sigma)},
                       {"w_min", io::signed_perm_json(sp.w_min)},
                       {"path", sp.labels}});
        return 0;
    }
    if (sub == "dot") {
        out << weyl::dot_involution_graph(std::stoi(a.positional[1]));
        return 0;
    }
    throw ValidationError("weyl: unknown subcommand '" + sub + "'");
}

int cmd_seg(const Args& a, std::ostream& out) {
    require(!a.positional.empty(), "usage: seg <mw|ladder-dist> <file.json>");
    const std::string& sub = a.positional[0];
    require(a.positional.size() >= 2, "seg " + sub + ": missing input file");
    json j = read_json_file(a.positional[1]);
    seg::LineTable t = lines_of(j);
    auto it = j.find("segs");
    require(it != j.end(), "input: missing field 'segs'");
    seg::Multisegment m = io::parse_multisegment(t, *it);
    if (sub == "mw") {
        emit(out, json{{"segs", io::multisegment_json(t, seg::mw_dual(t, m))}});
        return 0;
    }
    if (sub == "ladder-dist") {
        require(seg::is_ladder(t, m), "seg ladder-dist: input must be a ladder");
        emit(out, json{{"sp_distinguished", seg::sp_dist_ladder(t, m)}});
        return 0;
    }
    throw ValidationError("seg: unknown subcommand '" + sub + "'");
}

std::pair<seg::LineTable, std::vector<orb::BlockSpec>> read_blocks(const std::string& path) {
    json j = read_json_file(path);
    seg::LineTable t = lines_of(j);
    auto it = j.find("blocks");
    require(it != j.end(), "input: missing field 'blocks'");
    std::vector<orb::BlockSpec> blocks;
    for (const auto& bj : *it) blocks.push_back(io::parse_block(t, bj));
    orb::validate_blocks(t, blocks);
    return {std::move(t), std::move(blocks)};
}

int cmd_orbit(const Args& a, std::ostream& out) {
    require(!a.positional.empty(), "usage: orbit <enumerate|relevant> <blocks.json>");
    const std::string& sub = a.positional[0];
    require(a.positional.size() >= 2, "orbit " + sub + ": missing input file");
    auto [t, blocks] = read_blocks(a.positional[1]);
    std::vector<int64_t> sizes;
    for (const auto& b : blocks) sizes.push_back(b.size());
    if (sub == "enumerate") {
        json arr = json::array();
        int64_t count = 0;
        orb::enumerate_orbit_shapes(sizes, [&](const orb::OrbitShape& s) {
            ++count;
            arr.push_back(io::orbit_shape_json(s));
        }, orbit_cap());
        emit(out, json{{"count", count}, {"orbits", arr}});
        return 0;
    }
    if (sub == "relevant") {
        auto res = orb::exists_relevant(t, blocks, orbit_cap());
        emit(out, io::search_outcome_json(t, res));
        return 0;
    }
    throw ValidationError("orbit: unknown subcommand '" + sub + "'");
}

int cmd_verdict(const Args& a, std::ostream& out) {
    require(!a.positional.empty(),
            "usage: verdict <discrete|tempered|ladder-bc|speh|standard> <file.json>");
    const std::string& sub = a.positional[0];
    require(a.positional.size() >= 2, "verdict " + sub + ": missing input file");
    json j = read_json_file(a.positional[1]);
    seg::LineTable t = lines_of(j);
    if (sub == "discrete") {
        auto d = io::parse_datum(t, j);
        json res;
        res["verdict"] = io::verdict_json(ver::ds_vanishing(t, d));
        if (a.has_flag("replay")) {
            auto rep = ver::cross_validate_ds(t, d, orbit_cap());
            json rj;
            rj["applicable"] = rep.applicable;
            if (rep.applicable) {
                json blocks = json::array();
                for (const auto& s : rep.blocks) blocks.push_back(io::segment_json(t, s));
                rj["blocks"] = blocks;
                rj["search"] = io::search_outcome_json(t, rep.search);
                rj["none_certified"] = rep.none_certified;
            }
            res["replay"] = rj;
        }
        emit(out, res);
        return 0;
    }
    if (sub == "tempered") {
        auto td = io::parse_tempered(t, j);
        emit(out, io::verdict_json(ver::tempered_vanishing(t, td)));
        return 0;
    }
    if (sub == "ladder-bc") {
        auto it = j.find("segs");
        require(it != j.end(), "input: missing field 'segs'");
        auto m = io::parse_multisegment(t, *it);
        auto res = ver::ladder_bc(t, m);
        json fiber;
        json gl = json::array();
        for (const auto& s : res.fiber_gl) gl.push_back(io::segment_json(t, s));
        fiber["gl"] = gl;
        switch (res.base) {
            case ver::LadderBcResult::Trivial: fiber["base"] = "trivial"; break;
            case ver::LadderBcResult::TauPlus:
                fiber["base"] = "tau_plus";
                fiber["base_line"] = t.line(res.base_line).id;
                fiber["base_a"] = res.base_a;
                break;
            case ver::LadderBcResult::NontrivialCuspSupport:
                fiber["base"] = "nontrivial-cuspidal-support";
                break;
            default: fiber["base"] = "none"; break;
        }
        emit(out, json{{"in_image", tri_str(res.in_image)},
                       {"fiber", fiber},
                       {"verdict", io::verdict_json(res.verdict)}});
        return 0;
    }
    if (sub == "speh") {
        auto mf = a.flag("m");
        require(mf.has_value(), "verdict speh: flag --m <int> required");
        auto it = j.find("seg");
        require(it != j.end(), "input: missing field 'seg'");
        auto s = io::parse_segment(t, *it);
        emit(out, io::verdict_json(ver::speh_verdict(t, s, std::stoll(*mf))));
        return 0;
    }
    if (sub == "standard") {
        auto it = j.find("segs");
        require(it != j.end(), "input: missing field 'segs'");
        auto m = io::parse_multisegment(t, *it);
        emit(out, io::verdict_json(ver::standard_module_verdict(t, m)));
        return 0;
    }
    throw ValidationError("verdict: unknown subcommand '" + sub + "'");
}

int sweep_signgraph(int maxlen, std::ostream& out) {
    int64_t checked = 0, failures = 0;
    for (int len = 0; len <= maxlen; ++len) {
        for (uint32_t mask = 0; mask < (1u << len); ++mask) {
            sign::SignTuple e;
            for (int i = 0; i < len; ++i) e.push_back((mask >> i) & 1u ? 1 : -1);
            ++checked;
            if (sign::tau(e) != sign::bfs_component(e, maxlen)) ++failures;
            for (auto& [label, next] : sign::edges(e)) {
                (void)label;
                ++checked;
                if (sign::tau(next) != sign::tau(e)) ++failures;
            }
        }
    }
    emit(out, json{{"suite", "signgraph"}, {"checked", checked}, {"failures", failures}});
    return 0;
}

int sweep_weyl(int maxn, std::ostream& out) {
    int64_t checked = 0, failures = 0;
    for (int n = 1; n <= maxn; ++n) {
        for (const auto& w : weyl::all_involutions(n)) {
            ++checked;
            try {
                auto sp = weyl::springer_path(w);
                auto conj = weyl::multiply(weyl::multiply(sp.sigma, w), weyl::inverse(sp.sigma));
                if (!(conj == sp.w_min) || !weyl::is_minimal(sp.w_min)) ++failures;
            } catch (const std::exception&) {
                ++failures;
            }
        }
    }
    emit(out, json{{"suite", "weyl"}, {"checked", checked}, {"failures", failures}});
    return 0;
}

int sweep_orbits(int maxtotal, std::ostream& out) {
    int64_t checked = 0, failures = 0;
    std::vector<std::vector<int64_t>> size_lists{{}};
    for (int total = 1; total <= maxtotal; ++total) {
        std::vector<std::vector<int64_t>> stack{{}};
        while (!stack.empty()) {
            auto cur = stack.back();
            stack.pop_back();
            int64_t sum = 0;
            for (int64_t v : cur) sum += v;
            if (sum == total) {
                size_lists.push_back(cur);
                continue;
            }
            for (int64_t next = 1; next + sum <= total; ++next) {
                auto ext = cur;
                ext.push_back(next);
                stack.push_back(ext);
            }
        }
    }
    for (const auto& sizes : size_lists) {
        ++checked;
        auto fast = orb::enumerate_orbit_shapes(sizes);
        auto brute = oracle::brute_force_orbit_shapes(sizes);
        if (!oracle::same_shapes(fast, brute)) ++failures;
    }
    emit(out, json{{"suite", "orbits"}, {"checked", checked}, {"failures", failures}});
    return 0;
}

int cmd_oracle(const Args& a, std::ostream& out) {
    require(!a.positional.empty() && a.positional[0] == "sweep",
            "usage: oracle sweep --suite <signgraph|weyl|orbits> --max <n>");
    auto suite = a.flag("suite");
    auto maxv = a.flag("max");
    require(suite.has_value(), "oracle sweep: flag --suite required");
    require(maxv.has_value(), "oracle sweep: flag --max required");
    int maxn = std::stoi(*maxv);
    if (*suite == "signgraph") return sweep_signgraph(maxn, out);
    if (*suite == "weyl") return sweep_weyl(maxn, out);
    if (*suite == "orbits") return sweep_orbits(maxn, out);
    throw ValidationError("oracle sweep: unknown suite '" + *suite + "'");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        if (args.empty())
            throw ValidationError("usage: unidist <sign|weyl|seg|orbit|verdict|oracle> ...");
        const std::string& cmd = args[0];
        Args a = split_args(args, 1, {"target", "m", "suite", "max"});
        if (cmd == "sign") return cmd_sign(a, out);
        if (cmd == "weyl") return cmd_weyl(a, out);
        if (cmd == "seg") return cmd_seg(a, out);
        if (cmd == "orbit") return cmd_orbit(a, out);
        if (cmd == "verdict") return cmd_verdict(a, out);
        if (cmd == "oracle") return cmd_oracle(a, out);
        throw ValidationError("unknown command '" + cmd + "'");
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: invalid numeric argument: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace unidist::cli
