#include "unidist/signgraph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace unidist::sign {

SignTuple parse_tuple(const std::string& s) {
    SignTuple e;
    e.reserve(s.size());
    for (char c : s) {
        if (c == '+') e.push_back(1);
        else if (c == '-') e.push_back(-1);
        else throw ValidationError("sign tuple: expected a string over {+,-}, got '" + std::string(1, c) + "'");
    }
    return e;
}

std::string format_tuple(const SignTuple& e) {
    std::string s;
    s.reserve(e.size());
    for (int8_t v : e) s.push_back(v > 0 ? '+' : '-');
    return s;
}

SignTuple alternating(int t) {
    SignTuple e(static_cast<size_t>(t));
    for (int i = 0; i < t; ++i) e[static_cast<size_t>(i)] = (i % 2 == 0) ? 1 : -1;
    return e;
}

Decomposition decompose(const SignTuple& e) {
    Decomposition d;
    if (e.empty()) return d;
    d.leading_sign = e.front();
    int prev = 0;
    for (size_t i = 0; i + 1 < e.size(); ++i) {
        if (e[i] == e[i + 1]) {
            d.blocks.push_back(static_cast<int>(i + 1) - prev);
            prev = static_cast<int>(i + 1);
        }
    }
    d.blocks.push_back(static_cast<int>(e.size()) - prev);
    return d;
}

SignTuple compose(int leading_sign, const std::vector<int>& blocks) {
    SignTuple e;
    int sign = leading_sign;
    for (size_t j = 0; j < blocks.size(); ++j) {
        int t = blocks[j];
        if (t <= 0) throw ValidationError("compose: block lengths must be positive");
        for (int p = 0; p < t; ++p) e.push_back(static_cast<int8_t>(p % 2 == 0 ? sign : -sign));
        sign = (t % 2 == 0) ? -sign : sign;  // next block starts equal to this block's last entry
    }
    return e;
}

std::vector<std::pair<int, SignTuple>> edges(const SignTuple& e) {
    std::vector<std::pair<int, SignTuple>> out;
    for (size_t i = 0; i + 1 < e.size(); ++i) {
        if (e[i] != e[i + 1]) continue;
        SignTuple t;
        t.reserve(e.size() - 2);
        t.insert(t.end(), e.begin(), e.begin() + static_cast<long>(i));
        t.insert(t.end(), e.begin() + static_cast<long>(i) + 2, e.end());
        out.emplace_back(static_cast<int>(i + 1), std::move(t));
    }
    return out;
}

int tau(const SignTuple& e) {
    Decomposition d = decompose(e);
    if (d.is_empty()) return 0;
    int acc = 0;
    for (size_t i = 0; i < d.blocks.size(); ++i)
        acc += (i % 2 == 0 ? d.blocks[i] : -d.blocks[i]);
    return d.leading_sign * acc;
}

namespace {

int component_rec(const SignTuple& e, std::map<SignTuple, int>& memo) {
    auto it = memo.find(e);
    if (it != memo.end()) return it->second;
    auto es = edges(e);
    int value;
    if (es.empty()) {
        // Sink: e = +-f_t or the empty tuple.
        int t = static_cast<int>(e.size());
        value = (t == 0) ? 0 : (e.front() > 0 ? t : -t);
    } else {
        value = component_rec(es.front().second, memo);
        for (size_t k = 1; k < es.size(); ++k) {
            int other = component_rec(es[k].second, memo);
            if (other != value)
                throw InternalError("bfs_component: reachable sinks disagree");
        }
    }
    memo.emplace(e, value);
    return value;
}

} // namespace

int bfs_component(const SignTuple& e, int cap) {
    if (static_cast<int>(e.size()) > cap)
        throw CapExceeded("bfs_component: tuple length " + std::to_string(e.size()) +
                          " exceeds cap " + std::to_string(cap));
    std::map<SignTuple, int> memo;
    return component_rec(e, memo);
}

std::pair<SignTuple, History> walk(const SignTuple& e, const Pattern& p) {
    // z holds the surviving coordinates of the original tuple, in order.
    std::vector<int> z(e.size());
    for (size_t i = 0; i < e.size(); ++i) z[i] = static_cast<int>(i + 1);
    SignTuple cur = e;
    History h;
    h.reserve(p.size());
    for (size_t s = 0; s < p.size(); ++s) {
        int i = p[s];
        if (i < 1 || i + 1 > static_cast<int>(cur.size()) || cur[static_cast<size_t>(i - 1)] != cur[static_cast<size_t>(i)])
            throw ValidationError("walk: no edge labeled " + std::to_string(i) +
                                  " at step " + std::to_string(s + 1));
        h.emplace_back(z[static_cast<size_t>(i - 1)], z[static_cast<size_t>(i)]);
        cur.erase(cur.begin() + (i - 1), cur.begin() + (i + 1));
        z.erase(z.begin() + (i - 1), z.begin() + (i + 1));
    }
    return {cur, h};
}

bool history_valid(const History& h) {
    for (size_t i = 0; i < h.size(); ++i) {
        if (h[i].first >= h[i].second) return false;
        for (size_t j = 0; j < h.size(); ++j) {
            if (i == j) continue;
            if (h[i].first < h[j].first && h[j].first < h[i].second && h[i].second < h[j].second)
                return false;
        }
    }
    std::set<int> seen;
    for (size_t i = 0; i < h.size(); ++i) {
        auto [x, y] = h[i];
        if (i > 0) {
            for (int v = x + 1; v < y; ++v)
                if (!seen.count(v)) return false;
        } else {
            if (y != x + 1) return false;
        }
        if (!seen.insert(x).second) return false;
        if (!seen.insert(y).second) return false;
    }
    return true;
}

namespace {

SignTuple delete_at(const SignTuple& e, int label) {
    SignTuple t = e;
    if (label < 1 || label + 1 > static_cast<int>(t.size()) ||
        t[static_cast<size_t>(label - 1)] != t[static_cast<size_t>(label)])
        throw InternalError("delete_at: invalid edge label");
    t.erase(t.begin() + (label - 1), t.begin() + (label + 1));
    return t;
}

void check_tail_run(const Pattern& p, int hi, int lo);

// Shared recursion behind path_v0 / path_v1 (first forms). Produces a pattern
// ending with the run (t_1, t_1-1, ..., x) where x = 1 for target 0 and
// x in {1,2} for target 1, all earlier labels > t_1 + 1.
Pattern path_to_sink(const SignTuple& e, int target) {
    if (target == 0 && e.empty()) return {};
    if (target == 1 && e.size() == 1) return {};
    Decomposition d = decompose(e);
    int t1 = d.blocks.front();
    SignTuple e2 = delete_at(e, t1);
    if (t1 == 1) {
        Pattern p = path_to_sink(e2, target);
        for (int& v : p) v += 2;
        p.push_back(1);
        return p;
    }
    if (target == 1 && e2.size() == 1 && e2.front() > 0) {
        // Only e = (+,-,-) lands here; one step of label t_1 = 2 reaches f_1.
        return {t1};
    }
    Pattern p = path_to_sink(e2, target);
    int xlast = p.back();
    Pattern out;
    if (t1 - 1 >= xlast) {
        // p ends with the run (s_1, ..., xlast); keep everything above t_1 - 1
        // as "early" labels and replace the tail run by (t_1, ..., xlast).
        size_t run = static_cast<size_t>(t1 - 1 - xlast + 1);
        check_tail_run(p, t1 - 1, xlast);
        for (size_t k = 0; k + run < p.size(); ++k) out.push_back(p[k] + 2);
        for (int v = t1; v >= xlast; --v) out.push_back(v);
    } else {
        // t_1 = 2 with a tail ending at 2: the whole of p lifts.
        for (int v : p) out.push_back(v + 2);
        out.push_back(t1);
    }
    return out;
}

// Checks that p ends with the descending run (hi, hi-1, ..., lo).
void check_tail_run(const Pattern& p, int hi, int lo) {
    size_t run = static_cast<size_t>(hi - lo + 1);
    if (p.size() < run) throw InternalError("path construction: tail run too short");
    for (int v = lo; v <= hi; ++v)
        if (p[p.size() - static_cast<size_t>(v - lo + 1)] != v)
            throw InternalError("path construction: tail is not the expected run");
}

Pattern path_variant(const SignTuple& e, int target) {
    Decomposition d = decompose(e);
    require(d.blocks.size() > 2 && d.blocks[1] == 1,
            "path variant: requires e_{t_1+2} = e_{t_1+1}");
    int t1 = d.blocks.front();
    SignTuple e2 = delete_at(e, t1 + 1);
    Pattern p = path_to_sink(e2, target);
    Pattern out;
    if (p.empty()) {
        // e2 already is f_1; only e = (s,s,s) with t_1 = 1 lands here.
        if (target != 1) throw InternalError("path_variant: empty recursion for target 0");
        for (int v = t1 + 1; v >= 2; --v) out.push_back(v);
        return out;
    }
    int xlast = p.back();
    if (t1 >= xlast) {
        size_t run = static_cast<size_t>(t1 - xlast + 1);
        check_tail_run(p, t1, xlast);
        for (size_t k = 0; k + run < p.size(); ++k) out.push_back(p[k] + 2);
        for (int v = t1 + 1; v >= xlast; --v) out.push_back(v);
    } else {
        for (int v : p) out.push_back(v + 2);
        out.push_back(t1 + 1);
    }
    return out;
}

} // namespace

Pattern path_v0(const SignTuple& e, bool variant) {
    require(!e.empty(), "path_v0: e must be nonempty");
    require(tau(e) == 0, "path_v0: requires tau(e) = 0");
    return variant ? path_variant(e, 0) : path_to_sink(e, 0);
}

Pattern path_v1(const SignTuple& e, bool variant) {
    require(tau(e) == 1, "path_v1: requires tau(e) = 1");
    require(!(e.size() == 1 && e.front() > 0), "path_v1: e must differ from f_1");
    return variant ? path_variant(e, 1) : path_to_sink(e, 1);
}

std::string dot_reachable(const SignTuple& e) {
    std::ostringstream os;
    os << "digraph signgraph {\n";
    std::set<SignTuple> seen;
    std::vector<SignTuple> stack{e};
    seen.insert(e);
    std::vector<std::string> lines;
    while (!stack.empty()) {
        SignTuple cur = stack.back();
        stack.pop_back();
        for (auto& [label, next] : edges(cur)) {
            std::ostringstream ln;
            ln << "  \"" << format_tuple(cur) << "\" -> \"" << format_tuple(next)
               << "\" [label=\"" << label << "\"];\n";
            lines.push_back(ln.str());
            if (seen.insert(next).second) stack.push_back(next);
        }
    }
    std::sort(lines.begin(), lines.end());
    for (auto& ln : lines) os << ln;
    for (const auto& v : seen)
        os << "  \"" << format_tuple(v) << "\";\n";
    os << "}\n";
    return os.str();
}

} // namespace unidist::sign
