#include "unidist/oracles.hpp"

#include <algorithm>
#include <tuple>

namespace unidist::oracle {

namespace {

void all_compositions(int64_t n, jac::Composition& cur, std::vector<jac::Composition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int64_t first = 1; first <= n; ++first) {
        cur.push_back(first);
        all_compositions(n - first, cur, out);
        cur.pop_back();
    }
}

void all_involutions_of(int n, std::vector<int>& tau, std::vector<std::vector<int>>& out) {
    int i = -1;
    for (int v = 0; v < n; ++v)
        if (tau[static_cast<size_t>(v)] < 0) { i = v; break; }
    if (i < 0) {
        out.push_back(tau);
        return;
    }
    tau[static_cast<size_t>(i)] = i;
    all_involutions_of(n, tau, out);
    tau[static_cast<size_t>(i)] = -1;
    for (int j = i + 1; j < n; ++j) {
        if (tau[static_cast<size_t>(j)] >= 0) continue;
        tau[static_cast<size_t>(i)] = j;
        tau[static_cast<size_t>(j)] = i;
        all_involutions_of(n, tau, out);
        tau[static_cast<size_t>(i)] = -1;
        tau[static_cast<size_t>(j)] = -1;
    }
}

std::tuple<std::vector<jac::Composition>, std::vector<int>, std::vector<int>>
shape_key(const orb::OrbitShape& s) {
    return {s.splits, s.s_cut, s.tau};
}

} // namespace

std::vector<orb::OrbitShape> brute_force_orbit_shapes(const std::vector<int64_t>& sizes) {
    int k = static_cast<int>(sizes.size());
    std::vector<orb::OrbitShape> out;
    if (k == 0) {
        out.push_back(orb::OrbitShape{});
        return out;
    }
    std::vector<std::vector<jac::Composition>> per_block;
    for (int64_t n : sizes) {
        std::vector<jac::Composition> comps;
        jac::Composition cur;
        all_compositions(n, cur, comps);
        per_block.push_back(std::move(comps));
    }
    std::vector<size_t> choice(static_cast<size_t>(k), 0);
    while (true) {
        std::vector<jac::Composition> comp;
        for (int i = 0; i < k; ++i) comp.push_back(per_block[static_cast<size_t>(i)][choice[static_cast<size_t>(i)]]);
        std::vector<int> row, part;
        for (int i = 0; i < k; ++i)
            for (size_t j = 0; j < comp[static_cast<size_t>(i)].size(); ++j) {
                row.push_back(i);
                part.push_back(static_cast<int>(j));
            }
        int n = static_cast<int>(row.size());
        std::vector<std::vector<int>> taus;
        std::vector<int> tau0(static_cast<size_t>(n), -1);
        all_involutions_of(n, tau0, taus);
        for (uint32_t cmask = 0; cmask < (1u << n); ++cmask) {
            auto in_c = [&](int u) { return (cmask >> u) & 1u; };
            // Membership must be a per-row suffix.
            bool suffix_ok = true;
            for (int u = 0; u < n && suffix_ok; ++u)
                for (int v = 0; v < n && suffix_ok; ++v)
                    if (row[static_cast<size_t>(u)] == row[static_cast<size_t>(v)] &&
                        !in_c(u) && in_c(v) && part[static_cast<size_t>(u)] > part[static_cast<size_t>(v)])
                        suffix_ok = false;
            if (!suffix_ok) continue;
            for (const auto& tau : taus) {
                bool ok = true;
                // tau preserves the subset.
                for (int u = 0; u < n && ok; ++u)
                    if (in_c(u) != in_c(tau[static_cast<size_t>(u)])) ok = false;
                // Same-row pairs with equal membership land in distinct rows.
                for (int u = 0; u < n && ok; ++u)
                    for (int v = 0; v < n && ok; ++v) {
                        if (u == v) continue;
                        if (row[static_cast<size_t>(u)] != row[static_cast<size_t>(v)]) continue;
                        if (in_c(u) != in_c(v)) continue;
                        if (row[static_cast<size_t>(tau[static_cast<size_t>(u)])] ==
                            row[static_cast<size_t>(tau[static_cast<size_t>(v)])]) ok = false;
                    }
                // Reducedness: image order along rows, lexicographic on (row, part).
                auto prec = [&](int u, int v) {
                    if (row[static_cast<size_t>(u)] != row[static_cast<size_t>(v)])
                        return row[static_cast<size_t>(u)] < row[static_cast<size_t>(v)];
                    return part[static_cast<size_t>(u)] < part[static_cast<size_t>(v)];
                };
                for (int u = 0; u < n && ok; ++u)
                    for (int v = 0; v < n && ok; ++v) {
                        if (u == v || row[static_cast<size_t>(u)] != row[static_cast<size_t>(v)]) continue;
                        if (part[static_cast<size_t>(u)] >= part[static_cast<size_t>(v)]) continue;
                        if (in_c(u) && in_c(v) && !prec(tau[static_cast<size_t>(v)], tau[static_cast<size_t>(u)]))
                            ok = false;
                        if (!in_c(u) && !in_c(v) && !prec(tau[static_cast<size_t>(u)], tau[static_cast<size_t>(v)]))
                            ok = false;
                    }
                if (!ok) continue;
                orb::OrbitShape shape;
                shape.splits = comp;
                shape.s_cut.assign(static_cast<size_t>(k), 0);
                for (int i = 0; i < k; ++i) {
                    int s = static_cast<int>(comp[static_cast<size_t>(i)].size());
                    for (int u = 0; u < n; ++u)
                        if (row[static_cast<size_t>(u)] == i && in_c(u))
                            s = std::min(s, part[static_cast<size_t>(u)]);
                    shape.s_cut[static_cast<size_t>(i)] = s;
                }
                shape.tau = tau;
                out.push_back(std::move(shape));
            }
        }
        // Odometer over composition choices.
        int pos = k - 1;
        while (pos >= 0 && ++choice[static_cast<size_t>(pos)] == per_block[static_cast<size_t>(pos)].size()) {
            choice[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return canonical_shapes(std::move(out));
}

std::vector<orb::OrbitShape> canonical_shapes(std::vector<orb::OrbitShape> shapes) {
    std::sort(shapes.begin(), shapes.end(), [](const orb::OrbitShape& a, const orb::OrbitShape& b) {
        return shape_key(a) < shape_key(b);
    });
    return shapes;
}

bool same_shapes(std::vector<orb::OrbitShape> a, std::vector<orb::OrbitShape> b) {
    a = canonical_shapes(std::move(a));
    b = canonical_shapes(std::move(b));
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (shape_key(a[i]) != shape_key(b[i])) return false;
    return true;
}

} // namespace unidist::oracle
