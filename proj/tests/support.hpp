#pragma once
// Brute-force enumerations and random generators shared by the unit and acceptance tests.

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "kn/crystal.hpp"
#include "kn/sjdt.hpp"
#include "kn/tableau.hpp"

namespace kn::testing {

// 1 < ... < n < nbar < ... < 1bar
inline std::vector<Letter> alphabet(int n) {
    std::vector<Letter> a;
    for (int k = 1; k <= n; ++k) a.push_back(k);
    for (int k = n; k >= 1; --k) a.push_back(-k);
    return a;
}

// every mu contained in lambda (including empty and lambda)
inline std::vector<Partition> subpartitions(const Partition& lam) {
    std::vector<Partition> out;
    Partition cur;
    std::function<void(size_t, int)> rec = [&](size_t r, int cap) {
        if (r == lam.size()) {
            out.push_back(normalize(cur));
            return;
        }
        for (int k = 0; k <= std::min(cap, lam[r]); ++k) {
            cur.push_back(k);
            rec(r + 1, k);
            cur.pop_back();
        }
    };
    rec(0, lam.empty() ? 0 : lam[0]);
    return out;
}

// all semistandard fillings of lam/mu over C_n that are KN, by brute force over the alphabet
inline std::vector<Tableau> kn_fillings(const Partition& lam, const Partition& mu, int n) {
    std::vector<std::vector<Letter>> rows(lam.size());
    for (size_t r = 0; r < lam.size(); ++r) rows[r].assign(lam[r], 0);
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < (int)lam.size(); ++r)
        for (int c = r < (int)mu.size() ? mu[r] : 0; c < lam[r]; ++c) cells.push_back({r, c});
    auto in_mu = [&](int r, int c) { return r < (int)mu.size() && c < mu[r]; };
    auto alpha = alphabet(n);
    std::vector<Tableau> out;
    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == cells.size()) {
            Tableau t = make_tableau(n, rows, mu);
            if (is_kn(t)) out.push_back(t);
            return;
        }
        auto [r, c] = cells[k];
        for (Letter x : alpha) {
            if (c > 0 && !in_mu(r, c - 1) && lt(x, rows[r][c - 1])) continue;
            if (r > 0 && !in_mu(r - 1, c) && le(x, rows[r - 1][c])) continue;
            rows[r][c] = x;
            rec(k + 1);
        }
        rows[r][c] = 0;
    };
    rec(0);
    return out;
}

// skew KN tableaux of shape lam/mu, mu nonempty and proper, |lam| <= B, at most n+1 rows
inline std::vector<Tableau> skew_kn_universe(int n, int B) {
    std::vector<Tableau> all;
    for (auto& lam : partitions_upto(B, n + 1))
        for (auto& mu : subpartitions(lam)) {
            if (mu.empty() || size_of(mu) == size_of(lam)) continue;
            auto f = kn_fillings(lam, mu, n);
            all.insert(all.end(), f.begin(), f.end());
        }
    return all;
}

// inner corners of a skew tableau: cells of mu whose removal leaves a partition
inline std::vector<std::pair<int, int>> inner_corners(const Tableau& t) {
    std::vector<std::pair<int, int>> v;
    for (int r = 0; r < (int)t.inner.size(); ++r) {
        int c = t.inner[r] - 1;
        if (c < 0) continue;
        if (r + 1 < (int)t.inner.size() && t.inner[r + 1] > c) continue;
        v.push_back({r, c});
    }
    return v;
}

// cells outside the outer shape whose addition keeps a partition
inline std::vector<std::pair<int, int>> outer_cocorners(const Tableau& t) {
    Partition lam = t.outer();
    std::vector<std::pair<int, int>> v;
    for (int r = 0; r <= (int)lam.size(); ++r) {
        int c = r < (int)lam.size() ? lam[r] : 0;
        if (r == 0 || lam[r - 1] > c) v.push_back({r, c});
    }
    return v;
}

// random walk of crystal operators from t
inline Tableau random_walk(Tableau t, int steps, std::mt19937& rng) {
    int colors = rank_of(t);
    if (colors < 1) return t;
    std::uniform_int_distribution<int> color(1, colors), coin(0, 2);
    for (int s = 0; s < steps; ++s) {
        int i = color(rng);
        auto next = coin(rng) ? f_op(t, i) : e_op(t, i);
        if (next) t = *next;
    }
    return t;
}

inline Partition random_partition(int B, int maxparts, std::mt19937& rng) {
    auto all = partitions_upto(B, maxparts);
    std::uniform_int_distribution<size_t> d(0, all.size() - 1);
    return all[d(rng)];
}

// number of sources and sinks per component of a (branched) graph
struct Extremes {
    std::vector<int> sources, sinks;
};
inline Extremes extremes(const CrystalGraph& g) {
    std::vector<int> in(g.size(), 0), out(g.size(), 0);
    for (auto& a : g.arrows) {
        out[a.src]++;
        in[a.dst]++;
    }
    Extremes e;
    e.sources.assign(g.ncomponents, 0);
    e.sinks.assign(g.ncomponents, 0);
    for (int v = 0; v < g.size(); ++v) {
        if (!in[v]) e.sources[g.component[v]]++;
        if (!out[v]) e.sinks[g.component[v]]++;
    }
    return e;
}

// nonempty subsets of [n]
inline std::vector<std::vector<int>> color_subsets(int n) {
    std::vector<std::vector<int>> v;
    for (int m = 1; m < (1 << n); ++m) {
        std::vector<int> J;
        for (int i = 0; i < n; ++i)
            if (m >> i & 1) J.push_back(i + 1);
        v.push_back(J);
    }
    return v;
}

}  // namespace kn::testing
