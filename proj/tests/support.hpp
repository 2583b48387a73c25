#pragma once

// Independent oracles used by the tests. Everything here recomputes results
// by a route the library does not use: dense Bareiss elimination, union-find
// graph traversal, direct grid counting, exhaustive pair enumeration.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "celltrees/chain_complex.hpp"
#include "celltrees/comb.hpp"
#include "celltrees/ints.hpp"

namespace testsupport {

using celltrees::Int;
using celltrees::Rat;
using celltrees::SparseIntMatrix;

inline std::string fixture_path(const std::string& name) {
    return std::string(CELLTREES_FIXTURE_DIR) + "/" + name;
}

inline std::vector<std::vector<Int>> to_dense(const SparseIntMatrix& m) {
    std::vector<std::vector<Int>> dense(static_cast<std::size_t>(m.rows()),
                                        std::vector<Int>(static_cast<std::size_t>(m.cols()), 0));
    for (const auto& [rc, v] : m.entries())
        dense[static_cast<std::size_t>(rc.first)][static_cast<std::size_t>(rc.second)] = v;
    return dense;
}

// Exact determinant by fraction-free (Bareiss) elimination.
inline Int det_bareiss(std::vector<std::vector<Int>> a) {
    std::size_t n = a.size();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

inline Int det(const SparseIntMatrix& m) { return det_bareiss(to_dense(m)); }

// Dense rank over Q, by rational Gaussian elimination. A second opinion,
// structured nothing like the library's sparse echelon.
inline int rank_dense_rational(const SparseIntMatrix& m) {
    auto a = to_dense(m);
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    std::vector<std::vector<Rat>> q(rows, std::vector<Rat>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) q[i][j] = Rat(a[i][j]);
    int rank = 0;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows && q[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(q[pivot_row], q[sel]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == pivot_row || q[i][col] == 0) continue;
            Rat factor = q[i][col] / q[pivot_row][col];
            for (std::size_t j = col; j < cols; ++j) q[i][j] -= factor * q[pivot_row][j];
        }
        ++pivot_row;
        ++rank;
    }
    return rank;
}

// Grid count of l-cells of the pile [0,N_1] x ... x [0,N_n]:
// sum over |I| = l of prod_{i in I} N_i * prod_{i not in I} (N_i + 1).
inline long long pile_cell_count(const std::vector<int>& sizes, int l) {
    int n = static_cast<int>(sizes.size());
    long long total = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != l) continue;
        long long term = 1;
        for (int i = 0; i < n; ++i)
            term *= (mask >> i) & 1 ? sizes[static_cast<std::size_t>(i)]
                                    : sizes[static_cast<std::size_t>(i)] + 1;
        total += term;
    }
    return total;
}

// All edges of the n-cube graph as one-star words, label-sorted.
inline std::vector<std::string> cube_graph_edges(int n) {
    std::vector<std::string> edges;
    for (int star = 0; star < n; ++star) {
        for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
            std::string w;
            int bit = 0;
            for (int i = 0; i < n; ++i) {
                if (i == star) {
                    w += '*';
                } else {
                    w += (mask >> bit) & 1 ? '1' : '0';
                    ++bit;
                }
            }
            edges.push_back(w);
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

// Union-find spanning check: does this edge set connect all 2^n vertices?
inline bool edges_span_cube(int n, const std::vector<std::string>& edges) {
    int verts = 1 << n;
    std::vector<int> parent(static_cast<std::size_t>(verts));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    int components = verts;
    for (const auto& e : edges) {
        int star = static_cast<int>(e.find('*'));
        int u = 0, v = 0;
        for (int i = 0; i < n; ++i) {
            int bit = (i == star) ? 0 : (e[static_cast<std::size_t>(i)] == '1' ? 1 : 0);
            u |= bit << i;
            v |= (i == star ? 1 : bit) << i;
        }
        int ru = find(u), rv = find(v);
        if (ru != rv) {
            parent[static_cast<std::size_t>(ru)] = rv;
            --components;
        }
    }
    return components == 1;
}

// Exhaustive enumeration of all spanning trees of the n-cube graph: every
// (2^n - 1)-subset of edges that connects everything. Feasible for n = 3.
inline std::vector<std::set<std::string>> enumerate_cube_spanning_trees(int n) {
    auto edges = cube_graph_edges(n);
    int m = static_cast<int>(edges.size());
    int need = (1 << n) - 1;
    std::vector<std::set<std::string>> trees;
    std::vector<int> pick(static_cast<std::size_t>(need));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        std::vector<std::string> subset;
        for (int idx : pick) subset.push_back(edges[static_cast<std::size_t>(idx)]);
        if (edges_span_cube(n, subset)) trees.emplace_back(subset.begin(), subset.end());
        int i = need - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - need + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < need; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return trees;
}

// Brute-force k-dependence detection: every k-subset of axes, every choice
// of one ordered pair per axis, checked for a common difference.
inline bool has_k_dependence_brute(const celltrees::CombConfig& cfg) {
    int n = cfg.axes();
    std::vector<int> chosen;
    std::function<bool(int, int)> pick_axes = [&](int start, int depth) -> bool {
        if (depth == cfg.k) {
            // pick an ordered pair in each chosen axis sharing one difference
            std::function<bool(std::size_t, Rat, bool)> pick = [&](std::size_t idx, Rat d,
                                                                   bool have) -> bool {
                if (idx == chosen.size()) return have;
                const auto& set = cfg.sets[static_cast<std::size_t>(chosen[idx])];
                for (std::size_t a = 0; a < set.size(); ++a)
                    for (std::size_t b = 0; b < set.size(); ++b) {
                        if (a == b) continue;
                        Rat diff = set[a] - set[b];
                        if (have && diff != d) continue;
                        if (pick(idx + 1, diff, true)) return true;
                    }
                return false;
            };
            return pick(0, Rat(0), false);
        }
        for (int axis = start; axis < n; ++axis) {
            chosen.push_back(axis);
            if (pick_axes(axis + 1, depth + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    return pick_axes(0, 0);
}

}  // namespace testsupport
