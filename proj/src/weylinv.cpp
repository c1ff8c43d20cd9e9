#include "unidist/weylinv.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace unidist::weyl {

SignedPermutation SignedPermutation::identity(int n) {
    SignedPermutation w;
    w.n = n;
    w.tau.resize(static_cast<size_t>(n));
    std::iota(w.tau.begin(), w.tau.end(), 0);
    return w;
}

bool SignedPermutation::operator<(const SignedPermutation& o) const {
    if (n != o.n) return n < o.n;
    if (tau != o.tau) return tau < o.tau;
    return c < o.c;
}

std::string SignedPermutation::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < n; ++i) os << (i ? " " : "") << tau[static_cast<size_t>(i)] + 1;
    os << "|";
    bool first = true;
    for (int i = 0; i < n; ++i)
        if (c & (1u << i)) { os << (first ? "" : ",") << i + 1; first = false; }
    os << "]";
    return os.str();
}

uint32_t apply_perm(const std::vector<int>& tau, uint32_t set) {
    uint32_t out = 0;
    for (size_t i = 0; i < tau.size(); ++i)
        if (set & (1u << i)) out |= 1u << tau[i];
    return out;
}

std::vector<int> set_members(uint32_t set, int n) {
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (set & (1u << i)) out.push_back(i + 1);
    return out;
}

SignedPermutation multiply(const SignedPermutation& a, const SignedPermutation& b) {
    require(a.n == b.n, "multiply: mismatched rank n");
    SignedPermutation w;
    w.n = a.n;
    w.tau.resize(static_cast<size_t>(a.n));
    for (int i = 0; i < a.n; ++i)
        w.tau[static_cast<size_t>(i)] = a.tau[static_cast<size_t>(b.tau[static_cast<size_t>(i)])];
    // (tau1,c1)(tau2,c2) = (tau1 tau2, tau2^{-1}(c1) ^ c2)
    std::vector<int> b_inv(static_cast<size_t>(a.n));
    for (int i = 0; i < a.n; ++i) b_inv[static_cast<size_t>(b.tau[static_cast<size_t>(i)])] = i;
    w.c = apply_perm(b_inv, a.c) ^ b.c;
    return w;
}

SignedPermutation inverse(const SignedPermutation& w) {
    SignedPermutation v;
    v.n = w.n;
    v.tau.resize(static_cast<size_t>(w.n));
    for (int i = 0; i < w.n; ++i) v.tau[static_cast<size_t>(w.tau[static_cast<size_t>(i)])] = i;
    v.c = apply_perm(w.tau, w.c);
    return v;
}

bool is_involution(const SignedPermutation& w) {
    for (int i = 0; i < w.n; ++i)
        if (w.tau[static_cast<size_t>(w.tau[static_cast<size_t>(i)])] != i) return false;
    return apply_perm(w.tau, w.c) == w.c;
}

CSets c_sets(const SignedPermutation& w) {
    CSets s;
    for (int i = 0; i < w.n; ++i) {
        uint32_t bit = 1u << i;
        int ti = w.tau[static_cast<size_t>(i)];
        if (ti == i) {
            if (w.c & bit) s.c_plus |= bit;
            else s.c_minus |= bit;
        } else {
            s.c_neq |= bit;
            if (ti > i) s.c_less |= bit;
        }
    }
    return s;
}

std::pair<int, int> act_basis(const SignedPermutation& w, int i) {
    int sign = (w.c & (1u << i)) ? -1 : 1;
    return {w.tau[static_cast<size_t>(i)], sign};
}

SignedPermutation simple_reflection(int n, int label) {
    require(label >= 1 && label <= n, "simple_reflection: label out of range");
    SignedPermutation w = SignedPermutation::identity(n);
    if (label < n) std::swap(w.tau[static_cast<size_t>(label - 1)], w.tau[static_cast<size_t>(label)]);
    else w.c = 1u << (n - 1);
    return w;
}

std::vector<SignedPermutation> all_elements(int n) {
    require(n >= 0 && n <= 6, "all_elements: n must be at most 6");
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<SignedPermutation> out;
    do {
        for (uint32_t c = 0; c < (1u << n); ++c) {
            SignedPermutation w;
            w.n = n;
            w.tau = perm;
            w.c = c;
            out.push_back(std::move(w));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Involutions of S_n by pairing the least unmatched index, then all c with
// tau(c) = c: free bits on fixed points, all-or-nothing on 2-cycles.
void involution_rec(int n, std::vector<int>& tau, std::vector<int>& open,
                    std::vector<SignedPermutation>& out) {
    int i = -1;
    for (int v = 0; v < n; ++v)
        if (tau[static_cast<size_t>(v)] < 0) { i = v; break; }
    if (i < 0) {
        std::vector<int> fixed, pairs;
        for (int v = 0; v < n; ++v) {
            if (tau[static_cast<size_t>(v)] == v) fixed.push_back(v);
            else if (tau[static_cast<size_t>(v)] > v) pairs.push_back(v);
        }
        size_t choices = fixed.size() + pairs.size();
        for (uint32_t mask = 0; mask < (1u << choices); ++mask) {
            SignedPermutation w;
            w.n = n;
            w.tau = tau;
            w.c = 0;
            for (size_t j = 0; j < fixed.size(); ++j)
                if (mask & (1u << j)) w.c |= 1u << fixed[j];
            for (size_t j = 0; j < pairs.size(); ++j)
                if (mask & (1u << (fixed.size() + j)))
                    w.c |= (1u << pairs[j]) | (1u << tau[static_cast<size_t>(pairs[j])]);
            out.push_back(std::move(w));
        }
        return;
    }
    tau[static_cast<size_t>(i)] = i;
    involution_rec(n, tau, open, out);
    tau[static_cast<size_t>(i)] = -1;
    for (int j = i + 1; j < n; ++j) {
        if (tau[static_cast<size_t>(j)] >= 0) continue;
        tau[static_cast<size_t>(i)] = j;
        tau[static_cast<size_t>(j)] = i;
        involution_rec(n, tau, open, out);
        tau[static_cast<size_t>(i)] = -1;
        tau[static_cast<size_t>(j)] = -1;
    }
}

} // namespace

std::vector<SignedPermutation> all_involutions(int n) {
    require(n >= 0 && n <= 8, "all_involutions: n must be at most 8");
    std::vector<int> tau(static_cast<size_t>(n), -1), open;
    std::vector<SignedPermutation> out;
    involution_rec(n, tau, open, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SignedPermutation> minimal_involutions(int n) {
    require(n >= 0 && n <= 8, "minimal_involutions: n must be at most 8");
    std::vector<SignedPermutation> out;
    for (int k = 0; k <= n; ++k) {
        uint32_t ckn = 0;
        for (int i = k; i < n; ++i) ckn |= 1u << i;
        // Products of disjoint simple transpositions s_i, i+1 <= k.
        std::vector<std::vector<int>> choices{{}};
        for (int i = 1; i < k; ++i) {
            size_t sz = choices.size();
            for (size_t j = 0; j < sz; ++j) {
                const auto& ch = choices[j];
                if (ch.empty() || ch.back() < i - 1) {
                    auto ext = ch;
                    ext.push_back(i);
                    choices.push_back(std::move(ext));
                }
            }
        }
        for (const auto& ch : choices) {
            SignedPermutation w = SignedPermutation::identity(n);
            w.c = ckn;
            for (int i : ch) std::swap(w.tau[static_cast<size_t>(i - 1)], w.tau[static_cast<size_t>(i)]);
            out.push_back(std::move(w));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_minimal(const SignedPermutation& w) {
    if (!is_involution(w)) return false;
    CSets s = c_sets(w);
    int k = w.n;
    while (k > 0 && (s.c_plus & (1u << (k - 1)))) --k;
    // c must be exactly {k+1,...,n} and fixed points below k+1 unsigned.
    uint32_t ckn = 0;
    for (int i = k; i < w.n; ++i) ckn |= 1u << i;
    if (w.c != ckn || s.c_plus != ckn) return false;
    // Non-fixed points must pair as adjacent transpositions below k.
    for (int i = 0; i < k; ++i) {
        int ti = w.tau[static_cast<size_t>(i)];
        if (ti != i && ti != i + 1 && ti != i - 1) return false;
    }
    return true;
}

std::vector<std::pair<int, SignedPermutation>> gw_edges(const SignedPermutation& w) {
    require(is_involution(w), "gw_edges: input must be an involution");
    std::vector<std::pair<int, SignedPermutation>> out;
    for (int label = 1; label <= w.n; ++label) {
        // Image of alpha_label under w, expressed in basis coordinates.
        bool fixed;
        if (label < w.n) {
            auto [i1, s1] = act_basis(w, label - 1);
            auto [i2, s2] = act_basis(w, label);
            // w(alpha) = s1 e_{i1} - s2 e_{i2}; equal to +-alpha iff the
            // coordinate pattern matches +-(e_{label-1} - e_{label}).
            fixed = (i1 == label - 1 && i2 == label && s1 == s2) ||
                    (i1 == label && i2 == label - 1 && s1 == s2);
        } else {
            auto [i1, s1] = act_basis(w, w.n - 1);
            (void)s1;
            fixed = (i1 == w.n - 1);
        }
        if (fixed) continue;
        SignedPermutation s = simple_reflection(w.n, label);
        out.emplace_back(label, multiply(multiply(s, w), s));
    }
    return out;
}

SpringerPath springer_path(const SignedPermutation& w) {
    require(is_involution(w), "springer_path: input must be an involution");
    require(w.n <= 8, "springer_path: n must be at most 8");
    // Full BFS over the reachable involutions, keeping per vertex the
    // lexicographically least label list among shortest paths. The reachable
    // set is one conjugacy class; it stays small for n <= 8.
    std::map<SignedPermutation, std::vector<int>> best;
    best[w] = {};
    std::queue<SignedPermutation> q;
    q.push(w);
    while (!q.empty()) {
        auto cur = q.front();
        q.pop();
        auto path = best.at(cur);
        for (auto& [label, next] : gw_edges(cur)) {
            auto cand = path;
            cand.push_back(label);
            auto it = best.find(next);
            if (it == best.end()) {
                best.emplace(next, std::move(cand));
                q.push(next);
            } else if (it->second.size() == cand.size() && cand < it->second) {
                it->second = std::move(cand);
            }
        }
    }
    const SignedPermutation* reached = nullptr;
    for (auto& [v, p] : best) {
        if (!is_minimal(v)) continue;
        if (!reached) { reached = &v; continue; }
        const auto& bp = best.at(*reached);
        if (p.size() < bp.size() || (p.size() == bp.size() && p < bp)) reached = &v;
    }
    if (!reached) throw InternalError("springer_path: no minimal involution reached");
    SpringerPath out;
    out.w_min = *reached;
    out.labels = best.at(*reached);
    out.sigma = SignedPermutation::identity(w.n);
    for (int label : out.labels)
        out.sigma = multiply(simple_reflection(w.n, label), out.sigma);
    return out;
}

std::string dot_involution_graph(int n) {
    require(n >= 1 && n <= 4, "dot_involution_graph: n must be at most 4");
    std::ostringstream os;
    os << "graph weyl_involutions_n" << n << " {\n";
    auto invs = all_involutions(n);
    for (const auto& w : invs) {
        os << "  \"" << w.str() << "\"";
        if (is_minimal(w)) os << " [shape=doublecircle]";
        os << ";\n";
    }
    for (const auto& w : invs)
        for (auto& [label, v] : gw_edges(w))
            if (w < v)
                os << "  \"" << w.str() << "\" -- \"" << v.str() << "\" [label=\"" << label << "\"];\n";
    os << "}\n";
    return os.str();
}

} // namespace unidist::weyl
